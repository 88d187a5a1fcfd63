use crate::error::{Error, Result};

/// Finite field with elements `0..q`. Prime orders use residues; orders 4, 8
/// and 9 use polynomials over the prime subfield, encoded in base p
/// (coefficient of `x^k` is digit k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    order: usize,
    characteristic: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// Largest prime order accepted.
pub const MAX_PRIME_ORDER: usize = 97;

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Modulus coefficients `c_0..c_{k-1}` of the monic `x^k + ...`, base p.
fn modulus(q: usize) -> Option<(usize, usize, &'static [usize])> {
    match q {
        // x^2 + x + 1
        4 => Some((2, 2, &[1, 1])),
        // x^3 + x + 1
        8 => Some((2, 3, &[1, 1, 0])),
        // x^2 + 1
        9 => Some((3, 2, &[1, 0])),
        _ => None,
    }
}

fn digits(mut a: usize, p: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn poly_mul(a: usize, b: usize, p: usize, k: usize, low: &[usize]) -> usize {
    let (a, b) = (digits(a, p, k), digits(b, p, k));
    let mut prod = vec![0; 2 * k - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^k = -(low)
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &l) in low.iter().enumerate() {
            prod[deg - k + i] = (prod[deg - k + i] + (p - l) * c) % p;
        }
    }
    undigits(&prod[..k], p)
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, add, mul) = if is_prime(q) && q <= MAX_PRIME_ORDER {
            let add = (0..q * q).map(|i| ((i / q + i % q) % q) as u8).collect();
            let mul = (0..q * q).map(|i| ((i / q) * (i % q) % q) as u8).collect();
            (q, add, mul)
        } else if let Some((p, k, low)) = modulus(q) {
            let add = (0..q * q)
                .map(|i| {
                    let (a, b) = (digits(i / q, p, k), digits(i % q, p, k));
                    let sum: Vec<usize> = a.iter().zip(&b).map(|(x, y)| (x + y) % p).collect();
                    undigits(&sum, p) as u8
                })
                .collect();
            let mul = (0..q * q).map(|i| poly_mul(i / q, i % q, p, k, low) as u8).collect();
            (p, add, mul)
        } else {
            return Err(Error::Unsupported(format!(
                "field order {q}: supported orders are primes up to {MAX_PRIME_ORDER} and 4, 8, 9"
            )));
        };
        let field = FiniteField {
            order: q,
            characteristic: p,
            add,
            mul,
        };
        if q <= 9 {
            field.check_axioms()?;
        }
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.order).find(|&b| self.mul(a, b) == 1)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Exhaustive check of the field axioms over all element triples.
    pub fn check_axioms(&self) -> Result<()> {
        let q = self.order;
        let fail = |what: &str| Err(Error::Internal(format!("GF({q}) table violates {what}")));
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return fail("identity");
            }
            if a != 0 && self.inv(a).is_none() {
                return fail("multiplicative inverse");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return fail("associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        if (0..q).any(|a| self.neg(a) >= q) {
            return fail("additive inverse");
        }
        Ok(())
    }
}

pub fn finite_field(q: usize) -> Result<FiniteField> {
    FiniteField::new(q)
}
