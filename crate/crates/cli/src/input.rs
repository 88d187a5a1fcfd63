//! Loading hypergraphs from files or named constructions.

use std::path::Path;

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use ryser_core::constructions::{
    construct_by_name, projective_plane, random_intersecting, random_line_subset, truncated_projective_plane,
};
use ryser_core::hypergraph::{
    parse_digit_format, parse_general_table, parse_table_format, serialize_digit_format, serialize_general_table,
    serialize_table, GENERAL_HEADER,
};
use ryser_core::{GeneralHypergraph, Hypergraph, PartiteHypergraph};

use crate::usage;

pub const CONSTRUCT_NAMES: &[&str] = &[
    "pg",
    "tpp",
    "oval",
    "onefact",
    "f7",
    "f6",
    "f6linear",
    "biased",
    "expside",
    "random-intersecting",
    "random-tpp",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `r s_1 .. s_r` header, one row of 1-based indices per edge
    Table,
    /// one token of r digits per edge
    Digit,
    /// `general n` header, one row of 1-based vertices per edge
    General,
}

/// Knobs of the random constructions.
#[derive(Debug, Clone, Args)]
pub struct GeneratorArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// edge count for random-intersecting and random-tpp
    #[arg(long)]
    pub m: Option<usize>,
    /// side count for random-intersecting
    #[arg(long)]
    pub r: Option<usize>,
    /// vertices per side for random-intersecting
    #[arg(long, default_value_t = 3)]
    pub side_cap: usize,
}

#[derive(Debug, Clone)]
pub enum Loaded {
    Partite(PartiteHypergraph),
    General(GeneralHypergraph),
}

impl Loaded {
    pub fn as_dyn(&self) -> &dyn Hypergraph {
        match self {
            Loaded::Partite(h) => h,
            Loaded::General(h) => h,
        }
    }

    pub fn partite(&self, what: &str) -> Result<&PartiteHypergraph> {
        match self {
            Loaded::Partite(h) => Ok(h),
            Loaded::General(_) => Err(usage(format!("{what} needs an r-partite hypergraph"))),
        }
    }

    pub fn serialize(&self, format: Format) -> Result<String> {
        Ok(match (self, format) {
            (Loaded::Partite(h), Format::Table) => serialize_table(h),
            (Loaded::Partite(h), Format::Digit) => serialize_digit_format(h)?,
            (Loaded::General(h), Format::General | Format::Table) => serialize_general_table(h),
            (Loaded::Partite(_), Format::General) | (Loaded::General(_), Format::Digit) => {
                return Err(usage(format!("format {format:?} does not fit this hypergraph")))
            }
        })
    }
}

/// Digit input takes `r` from the first token unless given.
pub fn parse_text(text: &str, format: Format, r: Option<usize>) -> Result<Loaded> {
    Ok(match format {
        Format::Table => Loaded::Partite(parse_table_format(text)?),
        Format::General => Loaded::General(parse_general_table(text)?),
        Format::Digit => {
            let r = match r {
                Some(r) => r,
                None => text
                    .lines()
                    .flat_map(|l| l.split('#').next().unwrap_or("").split_whitespace())
                    .next()
                    .map(|t| t.chars().count())
                    .ok_or_else(|| usage("digit input has no edges"))?,
            };
            Loaded::Partite(parse_digit_format(text, r)?)
        }
    })
}

/// `.dig` means digit format; otherwise the header decides between the
/// partite and general table formats.
pub fn detect_format(path: &Path, text: &str) -> Format {
    if path.extension().is_some_and(|e| e == "dig") {
        return Format::Digit;
    }
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().next() == Some(GENERAL_HEADER) => Format::General,
        _ => Format::Table,
    }
}

pub fn load_file(path: &Path, format: Option<Format>, r: Option<usize>) -> Result<Loaded> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = format.unwrap_or_else(|| detect_format(path, &text));
    parse_text(&text, format, r).with_context(|| format!("parsing {}", path.display()))
}

fn parse_param(name: &str, param: Option<&str>) -> Result<Option<usize>> {
    param
        .map(|p| p.parse::<usize>().map_err(|_| usage(format!("parameter `{p}` of `{name}` is not a non-negative integer"))))
        .transpose()
}

pub fn build(name: &str, param: Option<&str>, gen: &GeneratorArgs) -> Result<Loaded> {
    let param = parse_param(name, param)?;
    let need = |what: &str, v: Option<usize>| v.ok_or_else(|| usage(format!("`{name}` needs {what}")));
    Ok(match name {
        "pg" => Loaded::General(projective_plane(need("the field order q", param)?)?),
        "random-intersecting" => {
            if param.is_some() {
                return Err(usage("random-intersecting takes --r and --m instead of a parameter"));
            }
            let r = need("--r", gen.r)?;
            let m = need("--m", gen.m)?;
            Loaded::Partite(random_intersecting(r, m, gen.side_cap, gen.seed)?)
        }
        "random-tpp" => {
            let q = need("the field order q", param)?;
            let m = need("--m", gen.m)?;
            Loaded::Partite(random_line_subset(&truncated_projective_plane(q)?, m, gen.seed)?)
        }
        _ if CONSTRUCT_NAMES.contains(&name) => Loaded::Partite(construct_by_name(name, param)?),
        _ => {
            return Err(usage(format!(
                "unknown construction `{name}`; expected one of {}",
                CONSTRUCT_NAMES.join(", ")
            )))
        }
    })
}
