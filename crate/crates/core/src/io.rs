//! JSON group definitions and analysis reports.
//!
//! A group definition looks like
//!
//! ```json
//! {"field": {"p": 3, "ext_degree": 2, "min_poly": [2, 1, 1]},
//!  "dim": 2,
//!  "generators": [[[[1, 0], [1, 0]], [[0, 0], [1, 0]]]]}
//! ```
//!
//! with every field element given as its coefficient vector in powers of
//! the root. Over a prime field a bare integer is accepted as well, and
//! `ext_degree` / `min_poly` may be omitted.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Fe, Field, FieldSpec};
use crate::group::MatrixGroup;
use crate::invariants::PolynomialityVerdict;
use crate::linalg::SquareMatrix;
use crate::singularity::{
    subspace_rows, CaseRecord, FixatorRecord, FullReport, KemperMalleReport, NonmodularReduction, Verdict,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDefinition {
    pub p: u32,
    #[serde(default = "one")]
    pub ext_degree: u32,
    #[serde(default)]
    pub min_poly: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryDefinition {
    Integer(i64),
    Coefficients(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDefinition {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldDefinition,
    pub dim: usize,
    /// Each generator as rows of entries.
    pub generators: Vec<Vec<Vec<EntryDefinition>>>,
}

impl FieldDefinition {
    pub fn to_field(&self) -> Result<Field> {
        match &self.min_poly {
            Some(min_poly) => Field::new(FieldSpec { p: self.p, ext_degree: self.ext_degree, min_poly: min_poly.clone() }),
            None if self.ext_degree == 1 => Field::prime(self.p),
            None => Err(Error::InvalidField(format!(
                "min_poly is required for an extension of degree {}",
                self.ext_degree
            ))),
        }
    }
}

impl GroupDefinition {
    pub fn from_group(group: &MatrixGroup, name: Option<&str>) -> Self {
        let spec = group.field().spec();
        GroupDefinition {
            name: name.map(str::to_string),
            field: FieldDefinition { p: spec.p, ext_degree: spec.ext_degree, min_poly: Some(spec.min_poly.clone()) },
            dim: group.dim(),
            generators: group
                .generators()
                .iter()
                .map(|g| {
                    g.to_coeff_rows()
                        .into_iter()
                        .map(|row| row.into_iter().map(EntryDefinition::Coefficients).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn generator_matrices(&self) -> Result<(Field, Vec<SquareMatrix>)> {
        let field = self.field.to_field()?;
        let entry = |e: &EntryDefinition| -> Result<Fe> {
            match e {
                EntryDefinition::Integer(n) if field.ext_degree() == 1 => Ok(field.from_int(*n)),
                EntryDefinition::Integer(n) => {
                    Err(Error::InvalidInput(format!("entry {n} must be a coefficient vector over an extension field")))
                }
                EntryDefinition::Coefficients(c) => field.from_coeffs(c),
            }
        };
        let mut gens = Vec::with_capacity(self.generators.len());
        for (k, g) in self.generators.iter().enumerate() {
            if g.len() != self.dim || g.iter().any(|row| row.len() != self.dim) {
                return Err(Error::DimensionMismatch(format!("generator {k} is not {0}x{0}", self.dim)));
            }
            let rows = g.iter().map(|row| row.iter().map(entry).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
            gens.push(SquareMatrix::from_rows(&field, rows)?);
        }
        Ok((field, gens))
    }

    pub fn to_group(&self) -> Result<MatrixGroup> {
        if self.dim == 0 {
            return Err(Error::InvalidInput("dim must be positive".into()));
        }
        let (field, gens) = self.generator_matrices()?;
        if gens.is_empty() {
            return Ok(MatrixGroup::trivial(&field, self.dim));
        }
        MatrixGroup::generate(&field, self.dim, gens)
    }
}

/// The report printed by `modsing analyze`.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub verdict: Verdict,
    pub group_order: usize,
    pub h_order: usize,
    pub gp_order: usize,
    pub origin: PolynomialityVerdict,
    pub fixators: Vec<FixatorRecord>,
    pub witness: Option<Vec<Vec<Vec<u32>>>>,
    pub reduction: NonmodularReduction,
    pub case: Option<CaseRecord>,
    pub kemper_malle: KemperMalleReport,
}

impl AnalysisDocument {
    pub fn new(name: Option<&str>, report: FullReport) -> Self {
        let s = report.singularity;
        AnalysisDocument {
            name: name.map(str::to_string),
            verdict: s.verdict,
            group_order: s.group_order,
            h_order: s.pseudoreflection_subgroup_order,
            gp_order: s.p_subgroup_order,
            witness: s.witness.as_ref().map(subspace_rows),
            origin: s.origin,
            fixators: s.fixators,
            reduction: report.reduction,
            case: report.case,
            kemper_malle: report.kemper_malle,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |b: Option<bool>| b.map_or("unknown".to_string(), |b| b.to_string());
        if let Some(name) = &self.name {
            let _ = writeln!(out, "group: {name}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "group_order: {}", self.group_order);
        let _ = writeln!(out, "h_order: {}", self.h_order);
        let _ = writeln!(out, "gp_order: {}", self.gp_order);
        let _ = writeln!(out, "origin: {}", verdict_line(&self.origin));
        let _ = writeln!(out, "fixators: {}", self.fixators.len());
        for f in &self.fixators {
            let _ = writeln!(
                out,
                "  {} order {}: {}",
                f.subspace,
                f.fixator_order,
                verdict_line(&f.polynomiality)
            );
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {w:?}");
        }
        let r = &self.reduction;
        let _ = writeln!(
            out,
            "reduction: |H| = {}, |G/H| = {}, p divides |G/H|: {}, V/H {}",
            r.h_order, r.quotient_order, r.p_divides_quotient, r.h_invariants.status
        );
        for w in &r.witnesses {
            let _ = writeln!(out, "  violation: {w}");
        }
        let km = &self.kemper_malle;
        let _ = writeln!(
            out,
            "kemper_malle: generated_by_pseudoreflections {}, all_fixators_polynomial {}, invariants_polynomial {}, consistent {}",
            km.generated_by_pseudoreflections,
            opt(km.all_fixators_polynomial),
            opt(km.invariants_polynomial),
            opt(km.consistent)
        );
        match &self.case {
            None => {}
            Some(c) => {
                let _ = writeln!(out, "case: {:?}", c.kind);
                if let Some(p) = &c.pipeline {
                    let _ = writeln!(
                        out,
                        "  pipeline: completed {}, |image| {}, |kernel| {}, |complement| {}, kernel degrees {:?}, blocks {:?}",
                        p.completed,
                        p.image_order,
                        p.kernel_order,
                        p.complement_order,
                        p.kernel_invariant_degrees,
                        p.block_dims()
                    );
                    if let Some(f) = &p.failure {
                        let _ = writeln!(out, "  failure: {f}");
                    }
                }
            }
        }
        out
    }
}

fn verdict_line(v: &PolynomialityVerdict) -> String {
    let mut s = format!("{} ({:?}), degrees {:?}", v.status, v.evidence, v.generator_degrees);
    if let Some(reason) = &v.cap_reason {
        let _ = write!(s, ", {reason}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_through_json() {
        for name in ["example-sec3", "sl2-9", "binary-icosahedral-f9", "ext-case3-sl2-3", "trivial-dim2-f3"] {
            let g = catalog::build(name).unwrap();
            let def = GroupDefinition::from_group(&g, Some(name));
            let back = GroupDefinition::parse(&def.to_json().unwrap()).unwrap();
            assert_eq!(back, def);
            assert_eq!(back.to_group().unwrap(), g, "{name}");
        }
    }

    #[test]
    fn prime_field_shorthand() {
        let def = GroupDefinition::parse(r#"{"field": {"p": 3}, "dim": 2, "generators": [[[2, 0], [0, 2]], [[1, 1], [0, 1]]]}"#)
            .unwrap();
        assert_eq!(def.to_group().unwrap().order(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            r#"{"field": {"p": 4}, "dim": 2, "generators": []}"#,
            r#"{"field": {"p": 3, "ext_degree": 2}, "dim": 2, "generators": []}"#,
            r#"{"field": {"p": 3}, "dim": 2, "generators": [[[1, 0]]]}"#,
            r#"{"field": {"p": 3}, "dim": 2, "generators": [[[0, 0], [0, 0]]]}"#,
            r#"{"field": {"p": 3, "ext_degree": 2, "min_poly": [2, 1, 1]}, "dim": 1, "generators": [[[2]]]}"#,
            r#"{"field": 3}"#,
        ];
        for json in bad {
            assert!(GroupDefinition::parse(json).and_then(|d| d.to_group()).is_err(), "{json}");
        }
    }
}
