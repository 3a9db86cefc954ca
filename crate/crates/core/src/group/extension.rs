//! Actions on invariant subspaces and quotients, their kernels, transvection
//! lifts and splittings of `1 -> N -> G -> H -> 1`.

use crate::error::{Error, Result};
use crate::field::Fe;
use crate::linalg::{SquareMatrix, Subspace};

use super::{ClosureOptions, MatrixGroup};

/// Matrix of `g` restricted to the invariant subspace `w`, in the RREF basis
/// of `w`. Coordinates of a vector of `w` are its entries at the pivots.
pub fn restrict_to_subspace(g: &SquareMatrix, w: &Subspace) -> Result<SquareMatrix> {
    if w.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch("subspace and matrix disagree on ambient dimension".into()));
    }
    let cols = w
        .basis()
        .iter()
        .map(|b| w.coordinates(&g.apply(b)).ok_or_else(|| Error::NotInvariant(g.to_string())))
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_columns(g.field(), &cols)
}

/// Matrix of the action of `g` on `V/u`. The quotient basis is the images of
/// the standard basis vectors at the non-pivot positions of `u`.
pub fn quotient_action(g: &SquareMatrix, u: &Subspace) -> Result<SquareMatrix> {
    if u.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch("subspace and matrix disagree on ambient dimension".into()));
    }
    if !u.is_invariant_under(g) {
        return Err(Error::NotInvariant(g.to_string()));
    }
    let f = g.field();
    let pivots = u.pivots();
    let rest = u.complement_indices();
    let cols: Vec<Vec<Fe>> = rest
        .iter()
        .map(|&c| {
            let mut v = g.column(c);
            for (b, &p) in u.basis().iter().zip(&pivots) {
                let coef = v[p];
                crate::linalg::axpy(f, &mut v, f.neg(coef), b);
            }
            rest.iter().map(|&r| v[r]).collect()
        })
        .collect();
    SquareMatrix::from_columns(f, &cols)
}

/// How `G` is mapped onto a smaller general linear group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedAction {
    /// Action on an invariant subspace.
    Restriction(Subspace),
    /// Action on the quotient by an invariant subspace.
    Quotient(Subspace),
}

impl ReducedAction {
    pub fn subspace(&self) -> &Subspace {
        match self {
            ReducedAction::Restriction(w) | ReducedAction::Quotient(w) => w,
        }
    }

    pub fn reduced_dim(&self) -> usize {
        match self {
            ReducedAction::Restriction(w) => w.dim(),
            ReducedAction::Quotient(u) => u.ambient_dim() - u.dim(),
        }
    }

    pub fn image(&self, g: &SquareMatrix) -> Result<SquareMatrix> {
        match self {
            ReducedAction::Restriction(w) => restrict_to_subspace(g, w),
            ReducedAction::Quotient(u) => quotient_action(g, u),
        }
    }
}

/// The image `H` of `G` under a [`ReducedAction`] and its kernel `N`.
#[derive(Clone, Debug)]
pub struct ReducedGroup {
    pub action: ReducedAction,
    pub image: MatrixGroup,
    pub kernel: MatrixGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub target: SquareMatrix,
    pub lift: SquareMatrix,
}

/// `G = N ⋊ C` with `C` generated by transvection lifts.
#[derive(Clone, Debug)]
pub struct ExtensionSplit {
    pub kernel: MatrixGroup,
    pub complement: MatrixGroup,
    pub lifts: Vec<Lift>,
}

impl ExtensionSplit {
    /// The unique `(n, h)` with `g = n·h`, `n` in the kernel and `h` in the
    /// complement.
    pub fn factor(&self, g: &SquareMatrix) -> Option<(SquareMatrix, SquareMatrix)> {
        self.complement.elements().iter().find_map(|h| {
            let n = g.mul(&h.inverse().ok()?);
            self.kernel.contains(&n).then(|| (n, h.clone()))
        })
    }
}

impl MatrixGroup {
    pub fn reduce(&self, action: ReducedAction) -> Result<ReducedGroup> {
        let k = action.reduced_dim();
        if k == 0 || k == self.dim() || action.subspace().ambient_dim() != self.dim() {
            return Err(Error::InvalidInput(format!("reduction to dimension {k} of a {}-dimensional action", self.dim())));
        }
        let images = self.generators().iter().map(|g| action.image(g)).collect::<Result<Vec<_>>>()?;
        let image = MatrixGroup::generate(self.field(), k, images)?;
        let id = SquareMatrix::identity(self.field(), k);
        let kernel = self.filter_subgroup(|g| action.image(g).map(|m| m == id).unwrap_or(false));
        if kernel.order() * image.order() != self.order() {
            return Err(Error::NotInvariant(format!("{} under the group", action.subspace())));
        }
        Ok(ReducedGroup { action, image, kernel })
    }

    /// Image on the invariant subspace `w` and the kernel of restriction.
    pub fn restriction_kernel(&self, w: &Subspace) -> Result<ReducedGroup> {
        self.reduce(ReducedAction::Restriction(w.clone()))
    }

    /// Image on `V/u` and the kernel of that action.
    pub fn quotient_kernel(&self, u: &Subspace) -> Result<ReducedGroup> {
        self.reduce(ReducedAction::Quotient(u.clone()))
    }

    /// For each target, the first transvection of `G` (in canonical order)
    /// whose reduced action equals it. `None` when some target has no lift.
    pub fn find_transvection_lifts(
        &self,
        action: &ReducedAction,
        targets: &[SquareMatrix],
    ) -> Result<Option<Vec<Lift>>> {
        let candidates: Vec<(SquareMatrix, SquareMatrix)> = self
            .transvections()
            .into_iter()
            .map(|t| action.image(&t).map(|img| (t, img)))
            .collect::<Result<_>>()?;
        Ok(targets
            .iter()
            .map(|target| {
                candidates
                    .iter()
                    .find(|(_, img)| img == target)
                    .map(|(t, _)| Lift { target: target.clone(), lift: t.clone() })
            })
            .collect())
    }
}

/// Complement generated by the lifts, verified against `N`.
pub fn split_extension(g: &MatrixGroup, n: &MatrixGroup, lifts: Vec<Lift>) -> Result<ExtensionSplit> {
    if !g.is_normal_subgroup(n) {
        return Err(Error::NotAComplement("kernel is not a normal subgroup".into()));
    }
    let complement = g.subgroup(lifts.iter().map(|l| l.lift.clone()).collect())?;
    if let Some(w) = complement.elements().iter().find(|c| !c.is_identity() && n.contains(c)) {
        return Err(Error::NotAComplement(format!("{w} lies in both the kernel and the complement")));
    }
    if n.order() * complement.order() != g.order() {
        return Err(Error::NotAComplement(format!(
            "|N|·|C| = {}·{} differs from |G| = {}",
            n.order(),
            complement.order(),
            g.order()
        )));
    }
    Ok(ExtensionSplit { kernel: n.clone(), complement, lifts })
}

/// Unordered pairs of transvections of `h` that generate all of `h`, in
/// canonical order.
pub fn generating_transvection_pairs(h: &MatrixGroup) -> Vec<(SquareMatrix, SquareMatrix)> {
    transvection_pair_search(h, usize::MAX)
}

/// The first pair of noncommuting transvections generating `h`.
pub fn first_generating_transvection_pair(h: &MatrixGroup) -> Option<(SquareMatrix, SquareMatrix)> {
    transvection_pair_search(h, 1).pop()
}

fn transvection_pair_search(h: &MatrixGroup, limit: usize) -> Vec<(SquareMatrix, SquareMatrix)> {
    let trans = h.transvections();
    let opts = ClosureOptions { cap: h.order(), parallel: false };
    let mut out = Vec::new();
    for (i, t) in trans.iter().enumerate() {
        for s in &trans[i + 1..] {
            if out.len() >= limit {
                return out;
            }
            if t.commutes_with(s) {
                continue;
            }
            let sub = MatrixGroup::generate_with(h.field(), h.dim(), vec![t.clone(), s.clone()], &opts)
                .expect("subgroup of a finite group");
            if sub.order() == h.order() {
                out.push((t.clone(), s.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    /// N ⋊ SL(2,3) with N the translations in the third column.
    fn plane_extension() -> MatrixGroup {
        let f = f3();
        let gens = vec![
            SquareMatrix::from_ints(&f, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]),
            SquareMatrix::from_ints(&f, &[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]),
            SquareMatrix::from_ints(&f, &[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]),
        ];
        MatrixGroup::generate(&f, 3, gens).unwrap()
    }

    #[test]
    fn restriction_of_plane_extension() {
        let f = f3();
        let g = plane_extension();
        assert_eq!(g.order(), 216);
        let w = Subspace::coordinate(&f, 3, &[0, 1]);
        let red = g.restriction_kernel(&w).unwrap();
        assert_eq!(red.image.order(), 24);
        assert_eq!(red.kernel.order(), 9);
        assert_eq!(red.kernel, g.fixator(&w).unwrap());
        let t = SquareMatrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let s = SquareMatrix::from_ints(&f, &[&[1, 0], &[1, 1]]);
        let lifts = g.find_transvection_lifts(&red.action, &[t.clone(), s.clone()]).unwrap().unwrap();
        for l in &lifts {
            assert!(l.lift.is_transvection());
            assert_eq!(restrict_to_subspace(&l.lift, &w).unwrap(), l.target);
        }
        let split = split_extension(&g, &red.kernel, lifts).unwrap();
        assert_eq!(split.complement.order(), 24);
        for x in g.elements().iter().step_by(7) {
            let (n, h) = split.factor(x).unwrap();
            assert_eq!(n.mul(&h), *x);
        }
    }

    #[test]
    fn non_invariant_subspace_is_rejected() {
        let g = plane_extension();
        let line = Subspace::coordinate(&f3(), 3, &[2]);
        assert!(matches!(g.restriction_kernel(&line), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn trivial_action_on_subspace() {
        let f = f3();
        let g = MatrixGroup::generate(&f, 3, vec![SquareMatrix::from_ints(&f, &[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]])])
            .unwrap();
        let red = g.restriction_kernel(&Subspace::coordinate(&f, 3, &[0, 1])).unwrap();
        assert!(red.image.is_trivial());
        assert_eq!(red.kernel, g);
    }

    #[test]
    fn quotient_blocks_are_lower_right() {
        let f = f3();
        let g = SquareMatrix::from_ints(&f, &[&[1, 2, 1], &[0, 1, 1], &[0, 0, 1]]);
        let u = Subspace::coordinate(&f, 3, &[0]);
        let q = quotient_action(&g, &u).unwrap();
        assert_eq!(q, SquareMatrix::from_ints(&f, &[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn block_embedded_targets_lift_to_themselves() {
        let f = f3();
        let t = SquareMatrix::from_ints(&f, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let s = SquareMatrix::from_ints(&f, &[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]);
        let g = MatrixGroup::generate(&f, 3, vec![t.clone(), s.clone()]).unwrap();
        let w = Subspace::coordinate(&f, 3, &[0, 1]);
        let red = g.restriction_kernel(&w).unwrap();
        let targets: Vec<_> = [&t, &s].iter().map(|m| restrict_to_subspace(m, &w).unwrap()).collect();
        let lifts = g.find_transvection_lifts(&red.action, &targets).unwrap().unwrap();
        assert_eq!(lifts[0].lift, t);
        assert_eq!(lifts[1].lift, s);
        let split = split_extension(&g, &red.kernel, lifts).unwrap();
        assert_eq!(split.complement, g);
    }

    #[test]
    fn bad_complement_reports_witness() {
        let g = plane_extension();
        let w = Subspace::coordinate(&f3(), 3, &[0, 1]);
        let red = g.restriction_kernel(&w).unwrap();
        let n_elem = SquareMatrix::from_ints(&f3(), &[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        let bogus = vec![Lift { target: SquareMatrix::identity(&f3(), 2), lift: n_elem }];
        assert!(matches!(split_extension(&g, &red.kernel, bogus), Err(Error::NotAComplement(_))));
    }

    #[test]
    fn sl23_has_generating_transvection_pairs() {
        let f = f3();
        let t = SquareMatrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let s = SquareMatrix::from_ints(&f, &[&[1, 0], &[1, 1]]);
        let h = MatrixGroup::generate(&f, 2, vec![t, s]).unwrap();
        assert!(!generating_transvection_pairs(&h).is_empty());
    }
}
