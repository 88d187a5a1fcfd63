use super::field::FiniteField;
use crate::error::{Error, Result};
use crate::hypergraph::{GeneralHypergraph, PartiteHypergraph};

/// PG(2, q) with points and lines as homogeneous triples whose rightmost
/// non-zero coordinate is 1. Points and lines are numbered in the order
/// `(x, y, 1)`, `(x, 1, 0)`, `(1, 0, 0)` with `x` and `y` ascending.
#[derive(Debug, Clone)]
pub struct ProjectivePlaneModel {
    pub field: FiniteField,
    pub points: Vec<[usize; 3]>,
    pub lines: Vec<[usize; 3]>,
    /// Point indices on each line, ascending.
    pub line_points: Vec<Vec<usize>>,
}

fn normalized_triples(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for y in 0..q {
        for x in 0..q {
            out.push([x, y, 1]);
        }
    }
    for x in 0..q {
        out.push([x, 1, 0]);
    }
    out.push([1, 0, 0]);
    out
}

impl ProjectivePlaneModel {
    pub fn new(q: usize) -> Result<Self> {
        let field = FiniteField::new(q)?;
        let points = normalized_triples(q);
        let lines = points.clone();
        let mut model = ProjectivePlaneModel {
            field,
            points,
            lines,
            line_points: Vec::new(),
        };
        model.line_points = (0..model.lines.len())
            .map(|l| (0..model.points.len()).filter(|&p| model.incident(p, l)).collect())
            .collect();
        Ok(model)
    }

    pub fn order(&self) -> usize {
        self.field.order()
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        let (p, l, f) = (&self.points[point], &self.lines[line], &self.field);
        let dot = (0..3).fold(0, |acc, i| f.add(acc, f.mul(p[i], l[i])));
        dot == 0
    }

    /// Index of the point with coordinates proportional to `coords`.
    pub fn point_index(&self, coords: [usize; 3]) -> Result<usize> {
        let f = &self.field;
        let last = (0..3)
            .rev()
            .find(|&i| coords[i] != 0)
            .ok_or_else(|| Error::Domain("the zero vector is not a point".into()))?;
        let inv = f.inv(coords[last]).expect("non-zero");
        let norm = coords.map(|c| f.mul(c, inv));
        self.points
            .iter()
            .position(|p| *p == norm)
            .ok_or_else(|| Error::OutOfBounds(format!("coordinates {coords:?} outside GF({})", f.order())))
    }

    pub fn lines_through(&self, point: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&l| self.incident(point, l)).collect()
    }

    pub fn line_through(&self, a: usize, b: usize) -> usize {
        (0..self.lines.len())
            .find(|&l| self.incident(a, l) && self.incident(b, l))
            .expect("two points span a line")
    }

    pub fn to_hypergraph(&self) -> GeneralHypergraph {
        GeneralHypergraph::new(self.points.len(), self.line_points.clone()).expect("valid incidence")
    }

    /// Deletes `center` and the lines through it. The punctured lines
    /// `side_lines` (all lines through `center`, in side order) become the
    /// sides; the remaining lines accepted by `keep` become the edges.
    fn truncate(&self, center: usize, side_lines: &[usize], keep: impl Fn(usize) -> bool) -> PartiteHypergraph {
        let sides: Vec<Vec<usize>> = side_lines
            .iter()
            .map(|&l| self.line_points[l].iter().copied().filter(|&p| p != center).collect())
            .collect();
        let edges = (0..self.lines.len())
            .filter(|&l| !self.incident(center, l) && keep(l))
            .map(|l| {
                sides
                    .iter()
                    .map(|side| {
                        side.iter()
                            .position(|&p| self.incident(p, l))
                            .expect("a line meets every other line")
                    })
                    .collect()
            })
            .collect();
        PartiteHypergraph::new(vec![self.order(); side_lines.len()], edges).expect("valid truncation")
    }
}

pub fn projective_plane(q: usize) -> Result<GeneralHypergraph> {
    Ok(ProjectivePlaneModel::new(q)?.to_hypergraph())
}

/// PG(2, q) without the point `(0, 0, 1)` and its lines; `r = q + 1` sides
/// of size `q`, `q^2` edges.
pub fn truncated_projective_plane(q: usize) -> Result<PartiteHypergraph> {
    let model = ProjectivePlaneModel::new(q)?;
    let center = model.point_index([0, 0, 1])?;
    let sides = model.lines_through(center);
    Ok(model.truncate(center, &sides, |_| true))
}

/// Conic points `P_1..P_r` used by [`oval_secant_subplane`]: `(t^2, t, 1)`
/// for `t = 1..q-1`, then `(1, 0, 0)`, then the deleted point `P_r = (0, 0, 1)`.
pub fn oval_points(model: &ProjectivePlaneModel) -> Result<Vec<usize>> {
    let f = &model.field;
    let mut pts = (1..f.order())
        .map(|t| model.point_index([f.mul(t, t), t, 1]))
        .collect::<Result<Vec<_>>>()?;
    pts.push(model.point_index([1, 0, 0])?);
    pts.push(model.point_index([0, 0, 1])?);
    Ok(pts)
}

/// Truncation at the oval point `P_r` keeping only the tangents and secants
/// through `P_1..P_{r-1}`. Side `i < r-1` is the line `P_r P_{i+1}`; the
/// last side is the tangent at `P_r`. Odd `q` only.
pub fn oval_secant_subplane(q: usize) -> Result<PartiteHypergraph> {
    if q % 2 == 0 {
        return Err(Error::Unsupported(format!("oval construction needs odd q, got {q}")));
    }
    let model = ProjectivePlaneModel::new(q)?;
    let oval = oval_points(&model)?;
    let (center, rest) = oval.split_last().expect("q + 1 points");
    let mut sides: Vec<usize> = rest.iter().map(|&p| model.line_through(*center, p)).collect();
    let tangent = model
        .lines_through(*center)
        .into_iter()
        .find(|l| !sides.contains(l))
        .expect("one tangent at each oval point");
    sides.push(tangent);
    Ok(model.truncate(*center, &sides, |l| rest.iter().any(|&p| model.incident(p, l))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{is_intersecting, is_linear, Hypergraph};

    #[test]
    fn fano_counts() {
        let h = projective_plane(2).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (7, 7));
        assert_eq!(h.uniformity(), Some(3));
        assert!(is_linear(&h).unwrap());
    }

    #[test]
    fn point_lookup_scales() {
        let m = ProjectivePlaneModel::new(5).unwrap();
        assert_eq!(m.point_index([2, 4, 2]).unwrap(), m.point_index([1, 2, 1]).unwrap());
        assert!(m.point_index([0, 0, 0]).is_err());
    }

    #[test]
    fn tpp_shape() {
        let h = truncated_projective_plane(3).unwrap();
        assert_eq!(h.side_sizes(), &[3, 3, 3, 3]);
        assert_eq!(h.edge_count(), 9);
        assert!(is_intersecting(&h).unwrap());
    }

    #[test]
    fn oval_is_an_arc() {
        for q in [3, 5, 7] {
            let m = ProjectivePlaneModel::new(q).unwrap();
            let oval = oval_points(&m).unwrap();
            assert_eq!(oval.len(), q + 1);
            for l in 0..m.lines.len() {
                assert!(oval.iter().filter(|&&p| m.incident(p, l)).count() <= 2);
            }
        }
    }

    #[test]
    fn oval_edge_count_and_even_rejection() {
        assert_eq!(oval_secant_subplane(3).unwrap().edge_count(), 6);
        assert!(matches!(oval_secant_subplane(4), Err(Error::Unsupported(_))));
    }
}
