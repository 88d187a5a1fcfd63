//! Text formats for partite hypergraphs.
//!
//! Digit format: whitespace-separated tokens, one per edge, each made of
//! exactly `r` digits `1..=9`; the `i`-th digit is the 1-based vertex on side `i`.
//!
//! Table format: a header line `r s_1 ... s_r` followed by one line of `r`
//! 1-based vertex indices per edge. In both formats `#` starts a comment
//! and CRLF line endings are accepted.
//!
//! General table format, for non-partite input such as a projective plane:
//! a header `general n` followed by one line of 1-based vertices per edge.

use super::{GeneralHypergraph, PartiteHypergraph};
use crate::error::{Error, Result};

fn strip_comment(line: &str) -> &str {
    let line = line.strip_suffix('\r').unwrap_or(line);
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_digit_format(text: &str, r: usize) -> Result<PartiteHypergraph> {
    if r == 0 || r > 64 {
        return Err(Error::Domain(format!("unsupported side count {r}")));
    }
    let mut edges = Vec::new();
    let mut sizes = vec![0usize; r];
    let tokens = text.lines().flat_map(|l| strip_comment(l).split_whitespace());
    for (t, token) in tokens.enumerate() {
        let chars: Vec<char> = token.chars().collect();
        if chars.len() != r {
            return Err(Error::parse(
                format!("token {} `{token}`", t + 1),
                format!("expected {r} digits, found {}", chars.len()),
            ));
        }
        let mut edge = Vec::with_capacity(r);
        for (pos, ch) in chars.iter().enumerate() {
            let d = match ch.to_digit(10) {
                Some(d) if d >= 1 => d as usize,
                _ => {
                    return Err(Error::parse(
                        format!("token {} `{token}` position {}", t + 1, pos + 1),
                        format!("`{ch}` is not a digit 1-9"),
                    ))
                }
            };
            sizes[pos] = sizes[pos].max(d);
            edge.push(d - 1);
        }
        edges.push(edge);
    }
    if edges.is_empty() {
        return Err(Error::parse("input", "no edges"));
    }
    PartiteHypergraph::new(sizes, edges)
}

/// Inverse of [`parse_digit_format`] when every side has at most 9 vertices
/// and each side's largest vertex is used. Tokens are separated by single spaces.
pub fn serialize_digit_format(h: &PartiteHypergraph) -> Result<String> {
    if let Some(s) = h.side_sizes().iter().position(|&s| s > 9) {
        return Err(Error::Unsupported(format!(
            "side {} has {} vertices; digit format holds at most 9",
            s + 1,
            h.side_sizes()[s]
        )));
    }
    let tokens: Vec<String> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| char::from(b'1' + v as u8)).collect())
        .collect();
    Ok(tokens.join(" ") + "\n")
}

fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                Error::parse(format!("line {lineno}"), format!("`{tok}` is not a non-negative integer"))
            })
        })
        .collect()
}

pub fn parse_table_format(text: &str) -> Result<PartiteHypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing header `r s_1 ... s_r`"))?;
    let header = parse_numbers(header, header_line)?;
    let (&r, sizes) = header
        .split_first()
        .ok_or_else(|| Error::parse(format!("line {header_line}"), "empty header"))?;
    if r == 0 {
        return Err(Error::parse(format!("line {header_line}"), "side count must be positive"));
    }
    if sizes.len() != r {
        return Err(Error::parse(
            format!("line {header_line}"),
            format!("header declares {r} sides but lists {} sizes", sizes.len()),
        ));
    }
    if sizes.contains(&0) {
        return Err(Error::parse(format!("line {header_line}"), "side sizes must be positive"));
    }

    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let nums = parse_numbers(line, lineno)?;
        if nums.len() != r {
            return Err(Error::parse(
                format!("line {lineno}"),
                format!("expected {r} indices, found {}", nums.len()),
            ));
        }
        let mut edge = Vec::with_capacity(r);
        for (side, (&v, &size)) in nums.iter().zip(sizes).enumerate() {
            if v == 0 || v > size {
                return Err(Error::parse(
                    format!("line {lineno}"),
                    format!("index {v} on side {} outside 1..={size}", side + 1),
                ));
            }
            edge.push(v - 1);
        }
        edges.push(edge);
    }
    PartiteHypergraph::new(sizes.to_vec(), edges)
}

pub fn serialize_table(h: &PartiteHypergraph) -> String {
    let mut out = String::new();
    let header: Vec<String> = std::iter::once(h.r())
        .chain(h.side_sizes().iter().copied())
        .map(|n| n.to_string())
        .collect();
    out.push_str(&header.join(" "));
    out.push('\n');
    for e in h.edges() {
        let row: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub const GENERAL_HEADER: &str = "general";

pub fn parse_general_table(text: &str) -> Result<GeneralHypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing header `general n`"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some(GENERAL_HEADER) {
        return Err(Error::parse(format!("line {header_line}"), "header must start with `general`"));
    }
    let n = match (words.next().map(str::parse::<usize>), words.next()) {
        (Some(Ok(n)), None) => n,
        _ => return Err(Error::parse(format!("line {header_line}"), "expected `general n`")),
    };
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let nums = parse_numbers(line, lineno)?;
        if let Some(&v) = nums.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::parse(format!("line {lineno}"), format!("vertex {v} outside 1..={n}")));
        }
        edges.push(nums.into_iter().map(|v| v - 1).collect());
    }
    GeneralHypergraph::new(n, edges).map_err(|e| Error::parse("edges", e.to_string()))
}

pub fn serialize_general_table(h: &GeneralHypergraph) -> String {
    use super::Hypergraph;
    let mut out = format!("{GENERAL_HEADER} {}\n", h.vertex_count());
    for e in h.edges() {
        let row: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
