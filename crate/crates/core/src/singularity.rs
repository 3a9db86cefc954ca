//! Smooth / isolated / nonisolated classification of `V/G`.
//!
//! The stabilizer of a nonzero point `v` is the fixator of the smallest
//! element of the fixed-space lattice containing `v`, and every lattice
//! element `U` contains points whose stabilizer is exactly `fix(U)`. So
//! `V/G` is smooth away from the origin iff every lattice fixator has a
//! polynomial invariant ring. Lattice elements are kernels of matrices over
//! the entry field, so no field extension is needed; and since the singular
//! locus is closed, every rational point of a singular lattice element is
//! itself singular.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Fe;
use crate::group::{first_generating_transvection_pair, split_extension, MatrixGroup};
use crate::invariants::{
    decide_polynomiality, induced_action, unipotent_kernel_invariants, KernelShape, PolynomialityOptions,
    PolynomialityStatus, PolynomialityVerdict,
};
use crate::linalg::{common_invariant_planes, SquareMatrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Smooth,
    Isolated,
    Nonisolated,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Smooth => "smooth",
            Verdict::Isolated => "isolated",
            Verdict::Nonisolated => "nonisolated",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Nonzero subspaces that are intersections of fixed spaces of nonidentity
/// elements, in canonical order.
pub fn fixed_space_lattice(group: &MatrixGroup) -> Vec<Subspace> {
    let fixed: BTreeSet<Subspace> = group
        .elements()
        .par_iter()
        .filter(|g| !g.is_identity())
        .map(|g| g.fixed_space())
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|s| !s.is_zero())
        .collect();
    let mut lattice = fixed.clone();
    let mut frontier: Vec<Subspace> = fixed.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &fixed {
                let c = a.intersect(b).expect("same ambient dimension");
                if !c.is_zero() && lattice.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    lattice.into_iter().collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FixatorRecord {
    #[serde(rename = "subspace_basis", serialize_with = "serialize_subspace")]
    pub subspace: Subspace,
    pub fixator_order: usize,
    pub polynomiality: PolynomialityVerdict,
}

pub(crate) fn subspace_rows(s: &Subspace) -> Vec<Vec<Vec<u32>>> {
    s.basis().iter().map(|v| v.iter().map(|&c| s.field().coeffs(c)).collect()).collect()
}

fn serialize_subspace<S: serde::Serializer>(s: &Subspace, ser: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&subspace_rows(s), ser)
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularityReport {
    pub verdict: Verdict,
    pub group_order: usize,
    pub pseudoreflection_subgroup_order: usize,
    pub p_subgroup_order: usize,
    pub origin: PolynomialityVerdict,
    pub fixators: Vec<FixatorRecord>,
    /// First lattice element whose fixator invariants are not polynomial.
    #[serde(serialize_with = "serialize_opt_subspace")]
    pub witness: Option<Subspace>,
}

fn serialize_opt_subspace<S: serde::Serializer>(s: &Option<Subspace>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&s.as_ref().map(subspace_rows), ser)
}

impl SingularityReport {
    pub fn origin_smooth(&self) -> bool {
        self.origin.is_polynomial()
    }

    pub fn all_fixators_polynomial(&self) -> Option<bool> {
        if self.fixators.iter().any(|f| f.polynomiality.status == PolynomialityStatus::Inconclusive) {
            return None;
        }
        Some(self.fixators.iter().all(|f| f.polynomiality.is_polynomial()))
    }
}

/// Polynomiality of each distinct fixator, computed once.
fn fixator_records(
    group: &MatrixGroup,
    lattice: Vec<Subspace>,
    opts: &PolynomialityOptions,
) -> Result<Vec<FixatorRecord>> {
    let fixators: Vec<MatrixGroup> =
        lattice.par_iter().map(|u| group.fixator(u)).collect::<Result<Vec<_>>>()?;
    let mut distinct: Vec<&MatrixGroup> = Vec::new();
    let mut slot: HashMap<&[SquareMatrix], usize> = HashMap::new();
    let mut which = Vec::with_capacity(fixators.len());
    for f in &fixators {
        let i = *slot.entry(f.elements()).or_insert_with(|| {
            distinct.push(f);
            distinct.len() - 1
        });
        which.push(i);
    }
    let verdicts: Vec<PolynomialityVerdict> =
        distinct.par_iter().map(|f| decide_polynomiality(f, opts)).collect::<Result<Vec<_>>>()?;
    Ok(lattice
        .into_iter()
        .zip(&fixators)
        .zip(which)
        .map(|((subspace, fix), i)| FixatorRecord { subspace, fixator_order: fix.order(), polynomiality: verdicts[i].clone() })
        .collect())
}

pub fn classify(group: &MatrixGroup, opts: &PolynomialityOptions) -> Result<SingularityReport> {
    let origin = decide_polynomiality(group, opts)?;
    let fixators = fixator_records(group, fixed_space_lattice(group), opts)?;
    let any_inconclusive = origin.status == PolynomialityStatus::Inconclusive
        || fixators.iter().any(|f| f.polynomiality.status == PolynomialityStatus::Inconclusive);
    let witness = fixators
        .iter()
        .find(|f| f.polynomiality.status == PolynomialityStatus::NotPolynomial)
        .map(|f| f.subspace.clone());
    let verdict = if any_inconclusive {
        Verdict::Inconclusive
    } else if origin.is_polynomial() {
        Verdict::Smooth
    } else if witness.is_none() {
        Verdict::Isolated
    } else {
        Verdict::Nonisolated
    };
    Ok(SingularityReport {
        verdict,
        group_order: group.order(),
        pseudoreflection_subgroup_order: group.pseudoreflection_subgroup().order(),
        p_subgroup_order: group.p_subgroup().order(),
        origin,
        fixators,
        witness,
    })
}

/// Whether "generated by pseudoreflections and every fixator of a nonzero
/// subspace has polynomial invariants" agrees with polynomiality of `S^G`.
#[derive(Clone, Debug, Serialize)]
pub struct KemperMalleReport {
    pub generated_by_pseudoreflections: bool,
    /// `None` when some fixator verdict is inconclusive.
    pub all_fixators_polynomial: Option<bool>,
    pub invariants_polynomial: Option<bool>,
    pub consistent: Option<bool>,
}

impl KemperMalleReport {
    pub fn from_report(group: &MatrixGroup, report: &SingularityReport) -> Self {
        let generated = report.pseudoreflection_subgroup_order == group.order();
        let all_fix = report.all_fixators_polynomial();
        let poly = match report.origin.status {
            PolynomialityStatus::Inconclusive => None,
            s => Some(s == PolynomialityStatus::Polynomial),
        };
        let consistent = match (all_fix, poly) {
            (Some(a), Some(p)) => Some((generated && a) == p),
            _ => None,
        };
        KemperMalleReport { generated_by_pseudoreflections: generated, all_fixators_polynomial: all_fix, invariants_polynomial: poly, consistent }
    }
}

pub fn check_kemper_malle_condition(group: &MatrixGroup, opts: &PolynomialityOptions) -> Result<KemperMalleReport> {
    Ok(KemperMalleReport::from_report(group, &classify(group, opts)?))
}

/// `V/G = (V/H)/(G/H)` with `H` the pseudoreflection subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct NonmodularReduction {
    pub h_order: usize,
    pub quotient_order: usize,
    pub p_divides_quotient: bool,
    pub h_invariants: PolynomialityVerdict,
    /// Violations of "isolated implies `V/H` smooth and `p` coprime to
    /// `|G/H|`"; empty unless the verdict is isolated.
    pub witnesses: Vec<String>,
}

impl NonmodularReduction {
    pub fn from_report(group: &MatrixGroup, report: &SingularityReport, opts: &PolynomialityOptions) -> Result<Self> {
        let h = group.pseudoreflection_subgroup();
        let quotient_order = group.order() / h.order();
        let p = group.field().characteristic() as usize;
        let p_divides_quotient = quotient_order.is_multiple_of(p);
        let h_invariants = decide_polynomiality(&h, opts)?;
        let mut witnesses = Vec::new();
        if report.verdict == Verdict::Isolated {
            if h_invariants.status != PolynomialityStatus::Polynomial {
                witnesses.push(format!("V/H is {} for |H| = {}", h_invariants.status, h.order()));
            }
            if p_divides_quotient {
                witnesses.push(format!("p = {p} divides |G/H| = {quotient_order}"));
            }
        }
        Ok(NonmodularReduction { h_order: h.order(), quotient_order, p_divides_quotient, h_invariants, witnesses })
    }
}

pub fn nonmodular_reduction(group: &MatrixGroup, opts: &PolynomialityOptions) -> Result<NonmodularReduction> {
    let report = classify(group, opts)?;
    NonmodularReduction::from_report(group, &report, opts)
}

/// Invariant-subspace structure of `G_p` in dimension 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MainGenCase {
    Irreducible,
    InvariantLine,
    InvariantPlaneTransvective,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub kind: MainGenCase,
    /// For `InvariantLine`: whether `G_p` acts on `V/U` through a group
    /// generated by two noncommuting transvections.
    pub transvective_quotient: Option<bool>,
    #[serde(serialize_with = "serialize_opt_subspace")]
    pub subspace: Option<Subspace>,
    pub pipeline: Option<PipelineRecord>,
}

/// Case of `G_p`, searched over subspaces rational over the entry field.
/// Priority: a line with transvective quotient, a plane with transvective
/// restriction, any line, no invariant subspace at all.
pub fn main_gen_case(group: &MatrixGroup) -> Result<CaseRecord> {
    if group.dim() != 3 {
        return Err(Error::Unsupported("case analysis needs dimension 3".into()));
    }
    let gp = group.p_subgroup();
    let record = |kind, tq, subspace| CaseRecord { kind, transvective_quotient: tq, subspace, pipeline: None };
    if gp.is_trivial() {
        return Ok(record(MainGenCase::Other, None, None));
    }
    let field = group.field();
    let lines: Vec<Subspace> =
        Subspace::enumerate(field, 3, 1)?.into_iter().filter(|l| gp.is_invariant_subspace(l)).collect();
    let planes: Vec<Subspace> =
        Subspace::enumerate(field, 3, 2)?.into_iter().filter(|p| gp.is_invariant_subspace(p)).collect();
    for u in &lines {
        let image = gp.quotient_kernel(u)?.image;
        if first_generating_transvection_pair(&image).is_some() {
            return Ok(record(MainGenCase::InvariantLine, Some(true), Some(u.clone())));
        }
    }
    for w in &planes {
        let image = gp.restriction_kernel(w)?.image;
        if first_generating_transvection_pair(&image).is_some() {
            return Ok(record(MainGenCase::InvariantPlaneTransvective, None, Some(w.clone())));
        }
    }
    if let Some(u) = lines.first() {
        return Ok(record(MainGenCase::InvariantLine, Some(false), Some(u.clone())));
    }
    if planes.is_empty() {
        return Ok(record(MainGenCase::Irreducible, None, None));
    }
    Ok(record(MainGenCase::Other, None, None))
}

/// Trace of the extension program for cases with a transvective plane or
/// a line with transvective quotient.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PipelineRecord {
    pub kernel_shape: Option<KernelShape>,
    pub image_order: usize,
    pub kernel_order: usize,
    pub generating_pair: Vec<String>,
    pub lifts: Vec<String>,
    pub complement_order: usize,
    /// The common fixed line (plane kernel) or common invariant plane
    /// (line kernel) of the lifts, in the first adapted basis.
    pub adapted_subspace: Option<String>,
    pub kernel_invariants: Vec<String>,
    pub kernel_invariant_degrees: Vec<u32>,
    pub induced_matrices: Vec<String>,
    pub induced_blocks: Vec<Vec<usize>>,
    pub induced_failures: Vec<String>,
    pub quotient_invariants: Option<PolynomialityStatus>,
    pub group_invariants: Option<PolynomialityStatus>,
    pub completed: bool,
    pub failure: Option<String>,
}

impl PipelineRecord {
    pub fn block_dims(&self) -> Vec<usize> {
        self.induced_blocks.iter().map(|b| b.len()).collect()
    }
}

/// Runs the extension program on `G_p` for the subspace found by
/// [`main_gen_case`], then decides polynomiality of `S^G`.
pub fn main_gen_pipeline(group: &MatrixGroup, case: &CaseRecord, opts: &PolynomialityOptions) -> Result<PipelineRecord> {
    let shape = match (case.kind, case.transvective_quotient) {
        (MainGenCase::InvariantPlaneTransvective, _) => KernelShape::Plane,
        (MainGenCase::InvariantLine, Some(true)) => KernelShape::Line,
        _ => return Err(Error::Unsupported(format!("no extension program for case {:?}", case.kind))),
    };
    if !group.is_generated_by_pseudoreflections() {
        return Err(Error::InvalidInput("group is not generated by pseudoreflections".into()));
    }
    let subspace = case.subspace.clone().ok_or_else(|| Error::InvalidInput("case record lacks its subspace".into()))?;
    let mut rec = PipelineRecord { kernel_shape: Some(shape), ..Default::default() };
    if let Err(reason) = run_pipeline(group, &subspace, shape, opts, &mut rec)? {
        rec.failure = Some(reason);
    } else {
        rec.completed = true;
    }
    Ok(rec)
}

fn run_pipeline(
    group: &MatrixGroup,
    subspace: &Subspace,
    shape: KernelShape,
    opts: &PolynomialityOptions,
    rec: &mut PipelineRecord,
) -> Result<std::result::Result<(), String>> {
    let field = group.field();
    let gp = group.p_subgroup();
    let e = |i: usize| -> Vec<Fe> { (0..3).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }).collect() };

    // first adapted basis: subspace basis, then standard completion
    let mut cols: Vec<Vec<Fe>> = subspace.basis().to_vec();
    cols.extend(subspace.complement_indices().into_iter().map(e));
    let b = SquareMatrix::from_columns(field, &cols)?;
    let b_inv = b.inverse()?;
    let gp1 = gp.conjugate(&b_inv)?;
    let reduced = match shape {
        KernelShape::Plane => gp1.restriction_kernel(&Subspace::coordinate(field, 3, &[0, 1]))?,
        KernelShape::Line => gp1.quotient_kernel(&Subspace::coordinate(field, 3, &[0]))?,
    };
    rec.image_order = reduced.image.order();
    rec.kernel_order = reduced.kernel.order();
    let Some((t, s)) = first_generating_transvection_pair(&reduced.image) else {
        return Ok(Err("image is not generated by two noncommuting transvections".into()));
    };
    rec.generating_pair = vec![t.to_string(), s.to_string()];
    let Some(lifts) = gp1.find_transvection_lifts(&reduced.action, &[t, s])? else {
        return Ok(Err("no transvection lifts for the generating pair".into()));
    };
    rec.lifts = lifts.iter().map(|l| l.lift.to_string()).collect();
    let (lt, ls) = (lifts[0].lift.clone(), lifts[1].lift.clone());
    let split = match split_extension(&gp1, &reduced.kernel, lifts) {
        Ok(s) => s,
        Err(err) => return Ok(Err(err.to_string())),
    };
    rec.complement_order = split.complement.order();

    // second adapted basis, making the complement block diagonal
    let cols2: Vec<Vec<Fe>> = match shape {
        KernelShape::Plane => {
            let line = lt.fixed_space().intersect(&ls.fixed_space())?;
            let w = Subspace::coordinate(field, 3, &[0, 1]);
            if line.dim() != 1 || w.contains(&line)? {
                return Ok(Err(format!("common fixed space {line} of the lifts is not a line outside W")));
            }
            rec.adapted_subspace = Some(line.to_string());
            vec![e(0), e(1), line.basis()[0].clone()]
        }
        KernelShape::Line => {
            let u = Subspace::coordinate(field, 3, &[0]);
            let plane = common_invariant_planes(&lt, &ls)?
                .into_iter()
                .find(|p| !p.contains(&u).unwrap_or(true));
            let Some(plane) = plane else {
                return Ok(Err("lifts have no common invariant plane avoiding U".into()));
            };
            rec.adapted_subspace = Some(plane.to_string());
            vec![e(0), plane.basis()[0].clone(), plane.basis()[1].clone()]
        }
    };
    let b2_inv = SquareMatrix::from_columns(field, &cols2)?.inverse()?;
    let kernel = split.kernel.conjugate(&b2_inv)?;
    let complement = split.complement.conjugate(&b2_inv)?;
    let kinv = match unipotent_kernel_invariants(&kernel, shape) {
        Ok(k) => k,
        Err(err) => return Ok(Err(err.to_string())),
    };
    rec.kernel_invariants = kinv.polys.iter().map(|p| p.to_string()).collect();
    rec.kernel_invariant_degrees = kinv.degrees.clone();
    let ind = induced_action(complement.generators(), &kinv)?;
    rec.induced_matrices = ind.matrices.iter().map(|m| m.to_string()).collect();
    rec.induced_blocks = ind.blocks.clone();
    rec.induced_failures = ind.failures.clone();
    if !ind.is_linear() {
        return Ok(Err("induced action is not linear in the kernel invariants".into()));
    }
    let quotient = MatrixGroup::generate(field, 3, ind.vector_action()?)?;
    rec.quotient_invariants = Some(decide_polynomiality(&quotient, opts)?.status);
    rec.group_invariants = Some(decide_polynomiality(group, opts)?.status);
    Ok(Ok(()))
}

/// Everything the command line reports for one group.
#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub singularity: SingularityReport,
    pub kemper_malle: KemperMalleReport,
    pub reduction: NonmodularReduction,
    pub case: Option<CaseRecord>,
}

/// Classification plus the derived checks. The case analysis runs for
/// 3-dimensional groups generated by pseudoreflections.
pub fn analyze(group: &MatrixGroup, opts: &PolynomialityOptions) -> Result<FullReport> {
    let singularity = classify(group, opts)?;
    let kemper_malle = KemperMalleReport::from_report(group, &singularity);
    let reduction = NonmodularReduction::from_report(group, &singularity, opts)?;
    let case = if group.dim() == 3 && kemper_malle.generated_by_pseudoreflections {
        let mut case = main_gen_case(group)?;
        if matches!(
            (case.kind, case.transvective_quotient),
            (MainGenCase::InvariantPlaneTransvective, _) | (MainGenCase::InvariantLine, Some(true))
        ) {
            case.pipeline = Some(main_gen_pipeline(group, &case, opts)?);
        }
        Some(case)
    } else {
        None
    };
    Ok(FullReport { singularity, kemper_malle, reduction, case })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;
    use crate::field::Field;

    fn opts() -> PolynomialityOptions {
        PolynomialityOptions::default()
    }

    #[test]
    fn lattice_small_cases() {
        let f = Field::prime(3).unwrap();
        assert!(fixed_space_lattice(&MatrixGroup::trivial(&f, 3)).is_empty());
        let lattice = fixed_space_lattice(&build("t-only").unwrap());
        assert_eq!(lattice, vec![Subspace::coordinate(&f, 2, &[0])]);
        let ext = build("ext-case3-sl2-3").unwrap();
        let lattice = fixed_space_lattice(&ext);
        let w = Subspace::coordinate(&f, 3, &[0, 1]);
        assert!(lattice.contains(&w));
        assert!(lattice.iter().any(|u| u.dim() == 1 && w.contains(u).unwrap()));
        assert!(lattice.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn sec3_is_isolated() {
        let g = build("example-sec3").unwrap();
        let r = classify(&g, &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Isolated);
        assert_eq!(r.origin.generator_degrees, vec![2, 4, 6]);
        assert_eq!(r.fixators.len(), 1);
        assert_eq!(r.fixators[0].fixator_order, 3);
        let red = NonmodularReduction::from_report(&g, &r, &opts()).unwrap();
        assert_eq!((red.h_order, red.quotient_order, red.p_divides_quotient), (3, 2, false));
        assert!(red.witnesses.is_empty());
        let km = KemperMalleReport::from_report(&g, &r);
        assert!(!km.generated_by_pseudoreflections);
        assert_eq!(km.consistent, Some(true));
    }

    #[test]
    fn smooth_small_cases() {
        for name in ["t-only", "diag-1-2-f3", "trivial-dim2-f3", "sl2-3"] {
            let r = classify(&build(name).unwrap(), &opts()).unwrap();
            assert_eq!(r.verdict, Verdict::Smooth, "{name}");
        }
    }

    #[test]
    fn nonisolated_after_adding_a_trivial_summand() {
        let r = classify(&build("sec3-plus-trivial").unwrap(), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Nonisolated);
        assert!(r.witness.is_some());
    }

    #[test]
    fn cyclic_nonmodular_isolated() {
        let g = build("cyclic5-f81").unwrap();
        let full = analyze(&g, &opts()).unwrap();
        assert_eq!(full.singularity.verdict, Verdict::Isolated);
        assert_eq!(full.reduction.h_order, 1);
        assert!(full.reduction.witnesses.is_empty());
    }

    #[test]
    fn plane_case_pipeline() {
        let g = build("ext-case3-sl2-3").unwrap();
        let case = main_gen_case(&g).unwrap();
        assert_eq!(case.kind, MainGenCase::InvariantPlaneTransvective);
        let rec = main_gen_pipeline(&g, &case, &opts()).unwrap();
        assert!(rec.completed, "{:?}", rec.failure);
        assert_eq!(rec.kernel_order * rec.complement_order, 216);
        assert_eq!(rec.kernel_invariant_degrees.iter().product::<u32>(), 9);
        assert_eq!(rec.block_dims(), vec![2, 1]);
        assert_eq!(rec.quotient_invariants, Some(PolynomialityStatus::Polynomial));
        assert_eq!(rec.group_invariants, Some(PolynomialityStatus::Polynomial));
    }

    #[test]
    fn line_case_pipeline() {
        let g = build("ext-case2-dual-sl2-3").unwrap();
        let case = main_gen_case(&g).unwrap();
        assert_eq!((case.kind, case.transvective_quotient), (MainGenCase::InvariantLine, Some(true)));
        let rec = main_gen_pipeline(&g, &case, &opts()).unwrap();
        assert!(rec.completed, "{:?}", rec.failure);
        assert_eq!(rec.kernel_invariant_degrees, vec![9, 1, 1]);
        assert_eq!(rec.block_dims(), vec![1, 2]);
        assert_eq!(rec.group_invariants, Some(PolynomialityStatus::Polynomial));
    }

    #[test]
    fn plain_line_case() {
        let case = main_gen_case(&build("t-plus-trivial").unwrap()).unwrap();
        assert_eq!((case.kind, case.transvective_quotient), (MainGenCase::InvariantLine, Some(false)));
        assert_eq!(main_gen_case(&build("trivial-dim3-f3").unwrap()).unwrap().kind, MainGenCase::Other);
    }
}
