//! Finite matrix groups stored as explicit, canonically sorted element sets.

mod extension;
mod identities;

pub use extension::{
    first_generating_transvection_pair, generating_transvection_pairs, quotient_action, restrict_to_subspace, split_extension, ExtensionSplit, Lift,
    ReducedAction, ReducedGroup,
};
pub use identities::{verify_ting_identities, IdentityCheck, TingCase};

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::{SquareMatrix, Subspace};

pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// Frontiers smaller than this are expanded on the calling thread.
const PARALLEL_FRONTIER_MIN: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOptions {
    pub cap: usize,
    pub parallel: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { cap: DEFAULT_ORDER_CAP, parallel: true }
    }
}

/// A finite subgroup of `GL(n, q)`.
///
/// `elements` is sorted by the canonical matrix order, so the element index
/// of a matrix does not depend on how the group was built.
#[derive(Clone)]
pub struct MatrixGroup {
    field: Field,
    dim: usize,
    generators: Vec<SquareMatrix>,
    elements: Arc<Vec<SquareMatrix>>,
    index: Arc<HashMap<SquareMatrix, usize>>,
}

impl std::fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MatrixGroup")
            .field("field", &self.field)
            .field("dim", &self.dim)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for MatrixGroup {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.field == other.field && self.elements == other.elements
    }
}

impl Eq for MatrixGroup {}

fn validate_generators(field: &Field, dim: usize, gens: &[SquareMatrix]) -> Result<()> {
    for g in gens {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch(format!("generator of size {} in dimension {dim}", g.dim())));
        }
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if g.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
    }
    Ok(())
}

fn close(field: &Field, dim: usize, gens: &[SquareMatrix], opts: &ClosureOptions) -> Result<Vec<SquareMatrix>> {
    let id = SquareMatrix::identity(field, dim);
    let mut seen: HashSet<SquareMatrix> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let products: Vec<SquareMatrix> = if opts.parallel && frontier.len() >= PARALLEL_FRONTIER_MIN {
            let seen_ref = &seen;
            frontier
                .par_iter()
                .flat_map_iter(|f| gens.iter().map(move |g| f.mul(g)))
                .filter(|p| !seen_ref.contains(p))
                .collect()
        } else {
            frontier.iter().flat_map(|f| gens.iter().map(move |g| f.mul(g))).filter(|p| !seen.contains(p)).collect()
        };
        let mut next = Vec::new();
        for p in products {
            if seen.insert(p.clone()) {
                if seen.len() > opts.cap {
                    return Err(Error::OrderExceedsCap { cap: opts.cap });
                }
                next.push(p);
            }
        }
        frontier = next;
    }
    let mut elements: Vec<SquareMatrix> = seen.into_iter().collect();
    elements.sort();
    Ok(elements)
}

impl MatrixGroup {
    /// Closure of `generators` with default options.
    pub fn generate(field: &Field, dim: usize, generators: Vec<SquareMatrix>) -> Result<Self> {
        MatrixGroup::generate_with(field, dim, generators, &ClosureOptions::default())
    }

    pub fn generate_with(
        field: &Field,
        dim: usize,
        generators: Vec<SquareMatrix>,
        opts: &ClosureOptions,
    ) -> Result<Self> {
        validate_generators(field, dim, &generators)?;
        let elements = close(field, dim, &generators, opts)?;
        Ok(MatrixGroup::assemble(field, dim, generators, elements))
    }

    pub fn trivial(field: &Field, dim: usize) -> Self {
        MatrixGroup::assemble(field, dim, Vec::new(), vec![SquareMatrix::identity(field, dim)])
    }

    fn assemble(field: &Field, dim: usize, generators: Vec<SquareMatrix>, elements: Vec<SquareMatrix>) -> Self {
        let index = elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        MatrixGroup { field: field.clone(), dim, generators, elements: Arc::new(elements), index: Arc::new(index) }
    }

    /// Group from an element set already known to be closed, e.g. a filter
    /// of a larger group by a subgroup-defining predicate. A small
    /// generating set is chosen greedily in element order.
    fn from_closed_set(field: &Field, dim: usize, mut elements: Vec<SquareMatrix>) -> Self {
        elements.sort();
        let generators = greedy_generators(field, dim, &elements);
        MatrixGroup::assemble(field, dim, generators, elements)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn generators(&self) -> &[SquareMatrix] {
        &self.generators
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[SquareMatrix] {
        &self.elements
    }

    pub fn contains(&self, g: &SquareMatrix) -> bool {
        self.index.contains_key(g)
    }

    pub fn element_index(&self, g: &SquareMatrix) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> SquareMatrix {
        SquareMatrix::identity(&self.field, self.dim)
    }

    /// Subgroup generated by `gens`, which must lie in the group.
    pub fn subgroup(&self, gens: Vec<SquareMatrix>) -> Result<MatrixGroup> {
        if let Some(g) = gens.iter().find(|g| !self.contains(g)) {
            return Err(Error::InvalidInput(format!("{g} is not an element of the group")));
        }
        MatrixGroup::generate(&self.field, self.dim, gens)
    }

    /// Subgroup generated by a set of elements, built by adding an element
    /// as a generator only when it is not already in the span so far.
    pub fn subgroup_generated_by_set(&self, set: &[SquareMatrix]) -> MatrixGroup {
        let mut sorted = set.to_vec();
        sorted.sort();
        sorted.dedup();
        let elements = if sorted.is_empty() {
            vec![self.identity()]
        } else {
            let gens = greedy_generators(&self.field, self.dim, &sorted);
            close(&self.field, self.dim, &gens, &ClosureOptions::default()).expect("subgroup of a closed group")
        };
        MatrixGroup::from_closed_set(&self.field, self.dim, elements)
    }

    fn filter_subgroup(&self, pred: impl Fn(&SquareMatrix) -> bool + Sync) -> MatrixGroup {
        let kept: Vec<SquareMatrix> = self.elements.par_iter().filter(|g| pred(g)).cloned().collect();
        MatrixGroup::from_closed_set(&self.field, self.dim, kept)
    }

    pub fn pseudoreflections(&self) -> Vec<SquareMatrix> {
        self.elements.par_iter().filter(|g| g.is_pseudoreflection()).cloned().collect()
    }

    pub fn transvections(&self) -> Vec<SquareMatrix> {
        self.elements.par_iter().filter(|g| g.is_transvection()).cloned().collect()
    }

    /// The subgroup generated by all pseudoreflections. The generating set
    /// is closed under conjugation, so the subgroup is normal.
    pub fn pseudoreflection_subgroup(&self) -> MatrixGroup {
        self.subgroup_generated_by_set(&self.pseudoreflections())
    }

    pub fn is_generated_by_pseudoreflections(&self) -> bool {
        self.pseudoreflection_subgroup().order() == self.order()
    }

    /// Nonidentity elements whose order is a power of the characteristic.
    pub fn p_elements(&self) -> Vec<SquareMatrix> {
        let p = self.field.characteristic() as u64;
        self.elements
            .par_iter()
            .filter(|g| {
                if g.is_identity() {
                    return false;
                }
                let mut t = g.element_order().expect("group elements have finite order");
                while t % p == 0 {
                    t /= p;
                }
                t == 1
            })
            .cloned()
            .collect()
    }

    /// The normal subgroup generated by elements of `p`-power order.
    pub fn p_subgroup(&self) -> MatrixGroup {
        self.subgroup_generated_by_set(&self.p_elements())
    }

    /// Pointwise stabilizer of `w`.
    pub fn fixator(&self, w: &Subspace) -> Result<MatrixGroup> {
        if w.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} for a group acting on F^{}",
                w.ambient_dim(),
                self.dim
            )));
        }
        Ok(self.filter_subgroup(|g| w.is_fixed_pointwise_by(g)))
    }

    pub fn stabilizer_of_vector(&self, v: &[Fe]) -> MatrixGroup {
        self.filter_subgroup(|g| g.apply(v) == v)
    }

    /// Setwise stabilizer of a subspace.
    pub fn subspace_stabilizer(&self, w: &Subspace) -> MatrixGroup {
        self.filter_subgroup(|g| w.is_invariant_under(g))
    }

    pub fn is_invariant_subspace(&self, w: &Subspace) -> bool {
        self.generators.iter().all(|g| w.is_invariant_under(g))
    }

    /// `b G b^{-1}`, with conjugated generators.
    pub fn conjugate(&self, b: &SquareMatrix) -> Result<MatrixGroup> {
        let b_inv = b.inverse()?;
        let gens = self.generators.iter().map(|g| g.conjugate_by(b, &b_inv)).collect();
        let mut elements: Vec<SquareMatrix> = self.elements.par_iter().map(|g| g.conjugate_by(b, &b_inv)).collect();
        elements.sort();
        Ok(MatrixGroup::assemble(&self.field, self.dim, gens, elements))
    }

    pub fn is_subgroup_of(&self, other: &MatrixGroup) -> bool {
        self.order() <= other.order() && self.generators.iter().all(|g| other.contains(g))
    }

    /// Normality tested on generators of both groups.
    pub fn is_normal_subgroup(&self, sub: &MatrixGroup) -> bool {
        if !sub.is_subgroup_of(self) {
            return false;
        }
        self.generators.iter().all(|g| {
            let g_inv = g.inverse().expect("group element");
            sub.generators.iter().all(|h| sub.contains(&h.conjugate_by(g, &g_inv)))
        })
    }

    /// Elements of `self` lying in `other`.
    pub fn intersection(&self, other: &MatrixGroup) -> MatrixGroup {
        self.filter_subgroup(|g| other.contains(g))
    }

    /// Whether `g` commutes with all generators.
    pub fn centralizes(&self, g: &SquareMatrix) -> bool {
        self.generators.iter().all(|h| h.commutes_with(g))
    }
}

/// Greedy generating set for the group generated by `set` (sorted).
fn greedy_generators(field: &Field, dim: usize, set: &[SquareMatrix]) -> Vec<SquareMatrix> {
    let mut gens: Vec<SquareMatrix> = Vec::new();
    let mut span: HashSet<SquareMatrix> = HashSet::new();
    span.insert(SquareMatrix::identity(field, dim));
    for g in set {
        if span.contains(g) {
            continue;
        }
        gens.push(g.clone());
        let opts = ClosureOptions { cap: DEFAULT_ORDER_CAP, parallel: true };
        span = close(field, dim, &gens, &opts).expect("finite subgroup").into_iter().collect();
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn t3() -> SquareMatrix {
        SquareMatrix::from_ints(&f3(), &[&[1, 1], &[0, 1]])
    }

    fn sec3() -> MatrixGroup {
        let f = f3();
        let s = SquareMatrix::from_ints(&f, &[&[2, 0], &[0, 2]]);
        MatrixGroup::generate(&f, 2, vec![s, t3()]).unwrap()
    }

    /// Naive closure oracle: repeatedly multiply every pair until stable.
    fn naive_order(gens: &[SquareMatrix]) -> usize {
        let mut set: Vec<SquareMatrix> = gens.to_vec();
        loop {
            let mut grown = set.clone();
            for a in &set {
                for b in &set {
                    let p = a.mul(b);
                    if !grown.contains(&p) {
                        grown.push(p);
                    }
                }
            }
            if grown.len() == set.len() {
                return set.len();
            }
            set = grown;
        }
    }

    #[test]
    fn small_orders() {
        let f = f3();
        assert_eq!(MatrixGroup::generate(&f, 2, vec![t3()]).unwrap().order(), 3);
        let g = sec3();
        assert_eq!(g.order(), 6);
        assert_eq!(naive_order(g.generators()), 6);
        let s = SquareMatrix::from_ints(&f, &[&[1, 0], &[1, 1]]);
        let sl = MatrixGroup::generate(&f, 2, vec![t3(), s.clone()]).unwrap();
        assert_eq!(sl.order(), 24);
        assert_eq!(naive_order(&[t3(), s]), 24);
    }

    #[test]
    fn trivial_group() {
        let f = f3();
        let g = MatrixGroup::generate(&f, 3, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g, MatrixGroup::trivial(&f, 3));
        assert!(g.pseudoreflection_subgroup().is_trivial());
    }

    #[test]
    fn cap_is_enforced() {
        let f = f3();
        let s = SquareMatrix::from_ints(&f, &[&[1, 0], &[1, 1]]);
        let err =
            MatrixGroup::generate_with(&f, 2, vec![t3(), s], &ClosureOptions { cap: 10, parallel: false }).unwrap_err();
        assert!(matches!(err, Error::OrderExceedsCap { cap: 10 }));
    }

    #[test]
    fn rejects_singular_and_mismatched_generators() {
        let f = f3();
        let sing = SquareMatrix::from_ints(&f, &[&[1, 1], &[1, 1]]);
        assert!(matches!(MatrixGroup::generate(&f, 2, vec![sing]), Err(Error::SingularMatrix)));
        assert!(MatrixGroup::generate(&f, 3, vec![t3()]).is_err());
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(MatrixGroup::generate(&f5, 2, vec![t3()]), Err(Error::FieldMismatch)));
    }

    #[test]
    fn distinguished_subgroups_of_sec3() {
        let g = sec3();
        let h = g.pseudoreflection_subgroup();
        assert_eq!(h.order(), 3);
        assert!(h.contains(&t3()));
        assert_eq!(g.p_subgroup(), h);
        assert!(g.is_normal_subgroup(&h));
        assert!(!g.is_generated_by_pseudoreflections());
    }

    #[test]
    fn no_pseudoreflections() {
        let f = f3();
        let g = MatrixGroup::generate(&f, 2, vec![SquareMatrix::from_ints(&f, &[&[2, 0], &[0, 2]])]).unwrap();
        assert!(g.pseudoreflection_subgroup().is_trivial());
        assert!(g.p_subgroup().is_trivial());
    }

    #[test]
    fn sl23_is_generated_by_transvections() {
        let f = f3();
        let s = SquareMatrix::from_ints(&f, &[&[1, 0], &[1, 1]]);
        let g = MatrixGroup::generate(&f, 2, vec![t3(), s]).unwrap();
        assert_eq!(g.pseudoreflection_subgroup().order(), 24);
        assert_eq!(g.transvections().len(), 8);
    }

    #[test]
    fn fixators() {
        let g = sec3();
        let f = f3();
        assert_eq!(g.fixator(&Subspace::zero(&f, 2)).unwrap(), g);
        assert!(g.fixator(&Subspace::full(&f, 2)).unwrap().is_trivial());
        let line = Subspace::coordinate(&f, 2, &[0]);
        assert_eq!(g.fixator(&line).unwrap().order(), 3);
        assert!(g.fixator(&Subspace::zero(&f, 3)).is_err());
    }

    #[test]
    fn closure_is_order_independent_and_schedule_independent() {
        let f = f3();
        let s = SquareMatrix::from_ints(&f, &[&[1, 0], &[1, 1]]);
        let a = MatrixGroup::generate_with(&f, 2, vec![t3(), s.clone()], &ClosureOptions::default()).unwrap();
        let b = MatrixGroup::generate_with(&f, 2, vec![s, t3()], &ClosureOptions { cap: 100, parallel: false })
            .unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn conjugation_preserves_order() {
        let g = sec3();
        let b = SquareMatrix::from_ints(&f3(), &[&[1, 2], &[1, 0]]);
        let c = g.conjugate(&b).unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(c.pseudoreflection_subgroup().order(), 3);
    }
}
