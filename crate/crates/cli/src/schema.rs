//! The `multiproj/1` problem document: variables, grading group, degrees,
//! and the optional regrading, ample class, and gen flag.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use multiproj_core::grading::{DegreeMap, DegreeVector, GradedPolyRing};
use multiproj_core::lattice::{FgAbelianGroup, GroupHom, IntegerMatrix};

use crate::error::CliError;

pub const SCHEMA: &str = "multiproj/1";

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupSpec {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DegreeSpec {
    pub free: Vec<String>,
    #[serde(default)]
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RegradingSpec {
    pub target: GroupSpec,
    /// Rows of the free-part matrix, target.free_rank x source.free_rank.
    pub matrix: Vec<Vec<String>>,
    /// Rows mapping source free generators into target torsion coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion_part: Option<Vec<Vec<String>>>,
    /// Rows mapping source torsion generators into target torsion
    /// coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion_matrix: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProblemSpec {
    pub schema: String,
    pub variables: Vec<String>,
    pub grading_group: GroupSpec,
    pub degrees: Vec<DegreeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regrading: Option<RegradingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ample_class: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_gen: Option<bool>,
}

pub fn parse_int(s: &str) -> Result<BigInt, CliError> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| CliError::input(format!("'{s}' is not an integer")))
}

pub fn parse_vec(v: &[String]) -> Result<Vec<BigInt>, CliError> {
    v.iter().map(|s| parse_int(s)).collect()
}

fn parse_matrix(rows: &[Vec<String>], nrows: usize, ncols: usize, what: &str) -> Result<IntegerMatrix, CliError> {
    if rows.len() != nrows {
        return Err(CliError::input(format!(
            "{what}: expected {nrows} rows, got {}",
            rows.len()
        )));
    }
    let mut parsed = Vec::with_capacity(nrows);
    for r in rows {
        if r.len() != ncols {
            return Err(CliError::input(format!(
                "{what}: expected {ncols} columns, got {}",
                r.len()
            )));
        }
        parsed.push(parse_vec(r)?);
    }
    if nrows == 0 {
        return Ok(IntegerMatrix::zero(0, ncols));
    }
    Ok(IntegerMatrix::from_rows(parsed))
}

impl GroupSpec {
    pub fn to_group(&self) -> Result<FgAbelianGroup, CliError> {
        let torsion = parse_vec(&self.torsion)?;
        let two = BigInt::from(2);
        if torsion.iter().any(|d| d < &two) {
            return Err(CliError::input("torsion invariant factors must be >= 2"));
        }
        for w in torsion.windows(2) {
            if !(&w[1] % &w[0]).eq(&BigInt::from(0)) {
                return Err(CliError::input(
                    "torsion invariant factors must form a divisibility chain",
                ));
            }
        }
        Ok(FgAbelianGroup::new(self.free_rank, torsion))
    }

    pub fn from_group(g: &FgAbelianGroup) -> GroupSpec {
        GroupSpec {
            free_rank: g.free_rank(),
            torsion: g.torsion().iter().map(|d| d.to_string()).collect(),
        }
    }
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<ProblemSpec, CliError> {
        let spec: ProblemSpec = serde_json::from_str(text)?;
        if spec.schema != SCHEMA {
            return Err(CliError::input(format!(
                "unsupported schema '{}', expected '{SCHEMA}'",
                spec.schema
            )));
        }
        Ok(spec)
    }

    pub fn to_ring(&self) -> Result<GradedPolyRing, CliError> {
        let group = self.grading_group.to_group()?;
        if self.degrees.len() != self.variables.len() {
            return Err(CliError::input(format!(
                "{} variables but {} degree vectors",
                self.variables.len(),
                self.degrees.len()
            )));
        }
        let mut degrees = Vec::with_capacity(self.degrees.len());
        for d in &self.degrees {
            let free = parse_vec(&d.free)?;
            let mut torsion = parse_vec(&d.torsion)?;
            if torsion.is_empty() && !group.torsion().is_empty() {
                torsion = vec![BigInt::from(0); group.torsion().len()];
            }
            degrees.push(
                DegreeVector::new(&group, free, torsion)
                    .map_err(|e| CliError::input(format!("bad degree vector: {e}")))?,
            );
        }
        let map = DegreeMap::new(&group, degrees).map_err(CliError::from)?;
        GradedPolyRing::new(self.variables.clone(), group, map).map_err(CliError::from)
    }

    /// Builds the regrading homomorphism out of the grading group.
    pub fn to_regrading(&self) -> Result<Option<GroupHom>, CliError> {
        let Some(spec) = &self.regrading else {
            return Ok(None);
        };
        let source = self.grading_group.to_group()?;
        let target = spec.target.to_group()?;
        let free = parse_matrix(
            &spec.matrix,
            target.free_rank(),
            source.free_rank(),
            "regrading matrix",
        )?;
        let torsion_part = match &spec.torsion_part {
            Some(rows) => parse_matrix(
                rows,
                target.torsion().len(),
                source.free_rank(),
                "regrading torsion_part",
            )?,
            None => IntegerMatrix::zero(target.torsion().len(), source.free_rank()),
        };
        let torsion_matrix = match &spec.torsion_matrix {
            Some(rows) => parse_matrix(
                rows,
                target.torsion().len(),
                source.torsion().len(),
                "regrading torsion_matrix",
            )?,
            None => IntegerMatrix::zero(target.torsion().len(), source.torsion().len()),
        };
        let hom = GroupHom::new(source, target, free, torsion_part, torsion_matrix)
            .map_err(|e| CliError::input(format!("bad regrading: {e}")))?;
        Ok(Some(hom))
    }

    pub fn to_ample_class(&self) -> Result<Option<Vec<BigInt>>, CliError> {
        match &self.ample_class {
            None => Ok(None),
            Some(v) => Ok(Some(parse_vec(v)?)),
        }
    }
}

/// Parses a `--monomial` argument: comma-separated nonnegative exponents.
pub fn parse_monomial(arg: &str, num_vars: usize) -> Result<Vec<BigInt>, CliError> {
    let parts: Vec<&str> = arg.split(',').collect();
    if parts.len() != num_vars {
        return Err(CliError::input(format!(
            "monomial has {} exponents but the ring has {num_vars} variables",
            parts.len()
        )));
    }
    parts.iter().map(|s| parse_int(s)).collect()
}
