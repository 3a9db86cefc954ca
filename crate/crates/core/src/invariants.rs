//! Graded invariant spaces, minimal generators and the polynomiality
//! decision for `S(V*)^G`, plus the invariants of the unipotent kernels
//! used by the extension pipeline.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::group::MatrixGroup;
use crate::linalg::{kernel, solve_combination, SquareMatrix};
use crate::poly::{act, jacobian_determinant, orbit_product, DegreeActions, GradedBasis, Multipoly};

/// Largest graded piece (number of monomials) the decision procedure will
/// build by default.
pub const DEFAULT_MAX_PIECE_DIM: usize = 320;

/// Invariants of one degree, as an RREF basis of coefficient vectors.
#[derive(Clone, Debug)]
pub struct InvariantPiece {
    pub degree: u32,
    pub basis: GradedBasis,
    pub vectors: Vec<Vec<Fe>>,
}

impl InvariantPiece {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn polynomials(&self, field: &Field) -> Vec<Multipoly> {
        self.vectors.iter().map(|v| Multipoly::from_vector(field, &self.basis, v)).collect()
    }
}

/// Walks up the grading, computing each invariant piece as the common
/// fixed space of the group generators.
#[derive(Clone, Debug)]
pub struct InvariantEngine {
    field: Field,
    nvars: usize,
    actions: Vec<DegreeActions>,
    pieces: Vec<InvariantPiece>,
}

impl InvariantEngine {
    pub fn new(group: &MatrixGroup) -> Result<Self> {
        InvariantEngine::from_generators(group.field(), group.dim(), group.generators())
    }

    pub fn from_generators(field: &Field, nvars: usize, generators: &[SquareMatrix]) -> Result<Self> {
        let actions = generators.iter().map(DegreeActions::new).collect::<Result<Vec<_>>>()?;
        let constants = InvariantPiece { degree: 0, basis: GradedBasis::new(nvars, 0), vectors: vec![vec![Fe::ONE]] };
        Ok(InvariantEngine { field: field.clone(), nvars, actions, pieces: vec![constants] })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Highest degree computed so far.
    pub fn computed_degree(&self) -> u32 {
        self.pieces.len() as u32 - 1
    }

    pub fn piece(&mut self, d: u32) -> &InvariantPiece {
        while self.computed_degree() < d {
            self.advance();
        }
        &self.pieces[d as usize]
    }

    fn advance(&mut self) {
        let d = self.computed_degree() + 1;
        let basis = GradedBasis::new(self.nvars, d);
        let m = basis.len();
        let mut rows: Vec<Vec<Fe>> = Vec::new();
        for acts in &mut self.actions {
            acts.advance(Some(&basis));
            let cols = acts.columns();
            for i in 0..m {
                let mut row: Vec<Fe> = cols.iter().map(|c| c[i]).collect();
                row[i] = self.field.sub(row[i], Fe::ONE);
                rows.push(row);
            }
        }
        let vectors = kernel(&self.field, &rows, m);
        self.pieces.push(InvariantPiece { degree: d, basis, vectors });
    }
}

/// Basis of the degree-`d` invariants.
pub fn invariant_space(group: &MatrixGroup, d: u32) -> Result<InvariantPiece> {
    let mut engine = InvariantEngine::new(group)?;
    Ok(engine.piece(d).clone())
}

/// Greedy search for homogeneous minimal generators, one degree at a time.
#[derive(Clone, Debug)]
pub struct GeneratorSearch {
    engine: InvariantEngine,
    generators: Vec<Multipoly>,
    degrees: Vec<u32>,
    processed: u32,
}

impl GeneratorSearch {
    pub fn new(group: &MatrixGroup) -> Result<Self> {
        Ok(GeneratorSearch { engine: InvariantEngine::new(group)?, generators: Vec::new(), degrees: Vec::new(), processed: 0 })
    }

    pub fn from_generators(field: &Field, nvars: usize, generators: &[SquareMatrix]) -> Result<Self> {
        Ok(GeneratorSearch {
            engine: InvariantEngine::from_generators(field, nvars, generators)?,
            generators: Vec::new(),
            degrees: Vec::new(),
            processed: 0,
        })
    }

    pub fn processed_degree(&self) -> u32 {
        self.processed
    }

    pub fn generators(&self) -> &[Multipoly] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn engine_mut(&mut self) -> &mut InvariantEngine {
        &mut self.engine
    }

    /// Processes the next degree and returns the generators found there.
    pub fn step(&mut self) -> Result<Vec<Multipoly>> {
        let d = self.processed + 1;
        let field = self.engine.field().clone();
        let piece = self.engine.piece(d).clone();
        let mut ech = crate::linalg::Echelon::new(&field, piece.basis.len());
        // decomposables: f · I_{d - deg f}
        for (f, &e) in self.generators.iter().zip(&self.degrees) {
            let lower = self.engine.piece(d - e).polynomials(&field);
            for h in lower {
                ech.insert(&f.mul(&h).to_vector(&piece.basis)?);
                if ech.rank() == piece.dim() {
                    break;
                }
            }
        }
        let mut found = Vec::new();
        for v in &piece.vectors {
            if ech.rank() == piece.dim() {
                break;
            }
            let mut w = v.clone();
            ech.reduce(&mut w);
            if w.iter().all(|c| c.is_zero()) {
                continue;
            }
            ech.insert(&w);
            let g = Multipoly::from_vector(&field, &piece.basis, &w).monic();
            found.push(g);
        }
        for g in &found {
            self.generators.push(g.clone());
            self.degrees.push(d);
        }
        self.processed = d;
        Ok(found)
    }
}

#[derive(Clone, Debug)]
pub struct MinimalGenerators {
    pub generators: Vec<Multipoly>,
    pub degrees: Vec<u32>,
    pub degree_reached: u32,
    /// The search reached the generation bound, so the list is complete.
    pub complete: bool,
}

pub fn minimal_generators(group: &MatrixGroup, degree_cap: u32) -> Result<MinimalGenerators> {
    if degree_cap == 0 {
        return Err(Error::InvalidInput("degree cap must be at least 1".into()));
    }
    let mut search = GeneratorSearch::new(group)?;
    while search.processed_degree() < degree_cap {
        search.step()?;
    }
    Ok(MinimalGenerators {
        generators: search.generators.clone(),
        degrees: search.degrees.clone(),
        degree_reached: degree_cap,
        complete: degree_cap >= generation_bound(group.dim(), group.order()),
    })
}

/// Degree by which `S(V*)^G` is generated: `n(|G| - 1)` for `n >= 2`
/// (at least 1), and `|G|` on a line, where the ring is `k[x^|G|]`.
pub fn generation_bound(n: usize, order: usize) -> u32 {
    let b = if n <= 1 { order } else { n * (order - 1) };
    b.max(1).min(u32::MAX as usize) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeCap {
    /// Up to the generation bound.
    Auto,
    Fixed(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Accept as soon as `n` generators with degree product `|G|` and a
    /// nonzero Jacobian appear.
    EarlyAccept,
    /// Never accept before the generation bound.
    RunToBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolynomialityOptions {
    pub cap: DegreeCap,
    pub strategy: Strategy,
    pub max_piece_dim: usize,
}

impl Default for PolynomialityOptions {
    fn default() -> Self {
        PolynomialityOptions { cap: DegreeCap::Auto, strategy: Strategy::EarlyAccept, max_piece_dim: DEFAULT_MAX_PIECE_DIM }
    }
}

impl PolynomialityOptions {
    pub fn with_cap(cap: DegreeCap) -> Self {
        PolynomialityOptions { cap, ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolynomialityStatus {
    Polynomial,
    NotPolynomial,
    Inconclusive,
}

impl fmt::Display for PolynomialityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolynomialityStatus::Polynomial => "polynomial",
            PolynomialityStatus::NotPolynomial => "not_polynomial",
            PolynomialityStatus::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    /// `n` invariants with degree product `|G|` and nonzero Jacobian.
    DegreeProductMatch,
    /// More than `n` minimal generators.
    GeneratorCountExceedsN,
    /// Exactly `n` minimal generators up to the generation bound.
    GenerationBoundReached,
    CapReached,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialityVerdict {
    pub status: PolynomialityStatus,
    #[serde(serialize_with = "serialize_polys")]
    pub generators: Vec<Multipoly>,
    pub generator_degrees: Vec<u32>,
    pub degree_bound_used: u32,
    pub generation_bound: u32,
    pub evidence: Evidence,
    /// Degree at which more than `n` generators had appeared.
    pub witness_degree: Option<u32>,
    /// Why the search stopped early, for inconclusive verdicts.
    pub cap_reason: Option<String>,
}

fn serialize_polys<S: serde::Serializer>(polys: &[Multipoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(polys.iter().map(|p| p.to_string()))
}

impl PolynomialityVerdict {
    pub fn is_polynomial(&self) -> bool {
        self.status == PolynomialityStatus::Polynomial
    }

    pub fn degree_product(&self) -> u128 {
        self.generator_degrees.iter().map(|&d| d as u128).product()
    }
}

pub fn decide_polynomiality(group: &MatrixGroup, opts: &PolynomialityOptions) -> Result<PolynomialityVerdict> {
    let n = group.dim();
    let order = group.order();
    let bound = generation_bound(n, order);
    let cap = match opts.cap {
        DegreeCap::Auto => bound,
        DegreeCap::Fixed(d) => d.min(bound),
    };
    let mut search = GeneratorSearch::new(group)?;
    let verdict = |search: &GeneratorSearch, status, evidence, witness, reason: Option<String>| PolynomialityVerdict {
        status,
        generators: search.generators().to_vec(),
        generator_degrees: search.degrees().to_vec(),
        degree_bound_used: search.processed_degree(),
        generation_bound: bound,
        evidence,
        witness_degree: witness,
        cap_reason: reason,
    };
    while search.processed_degree() < cap {
        let d = search.processed_degree() + 1;
        let piece_dim = GradedBasis::dimension(n, d);
        if piece_dim > opts.max_piece_dim {
            let reason = format!("degree {d} piece has {piece_dim} monomials, budget {}", opts.max_piece_dim);
            return Ok(verdict(&search, PolynomialityStatus::Inconclusive, Evidence::CapReached, None, Some(reason)));
        }
        search.step()?;
        let count = search.generators().len();
        if count > n {
            return Ok(verdict(
                &search,
                PolynomialityStatus::NotPolynomial,
                Evidence::GeneratorCountExceedsN,
                Some(d),
                None,
            ));
        }
        if opts.strategy == Strategy::EarlyAccept && count == n {
            let product: u128 = search.degrees().iter().map(|&e| e as u128).product();
            if product == order as u128 && !jacobian_determinant(search.generators())?.is_zero() {
                return Ok(verdict(&search, PolynomialityStatus::Polynomial, Evidence::DegreeProductMatch, None, None));
            }
        }
    }
    let count = search.generators().len();
    if cap == bound && count == n {
        return Ok(verdict(&search, PolynomialityStatus::Polynomial, Evidence::GenerationBoundReached, None, None));
    }
    let reason = if cap == bound {
        format!("{count} generators at the generation bound {bound}")
    } else {
        format!("degree cap {cap} below the generation bound {bound}")
    };
    Ok(verdict(&search, PolynomialityStatus::Inconclusive, Evidence::CapReached, None, Some(reason)))
}

/// Coefficients of `prod_i 1/(1 - t^{d_i})` up to `t^max`.
pub fn hilbert_series_of_polynomial_ring(degrees: &[u32], max: u32) -> Vec<u128> {
    let mut coeffs = vec![0u128; max as usize + 1];
    coeffs[0] = 1;
    for &d in degrees {
        let d = d as usize;
        for k in d..coeffs.len() {
            coeffs[k] += coeffs[k - d];
        }
    }
    coeffs
}

/// Which kind of unipotent kernel `N` is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelShape {
    /// Elements `[[1,0,a],[0,1,b],[0,0,1]]`: `N` fixes the plane `z = 0`.
    Plane,
    /// Elements `[[1,a,b],[0,1,0],[0,0,1]]`: `N` acts trivially on `V/<e1>`.
    Line,
}

#[derive(Clone, Debug)]
pub struct KernelInvariants {
    pub shape: KernelShape,
    /// `(f1, f2, f3)`.
    pub polys: Vec<Multipoly>,
    pub degrees: Vec<u32>,
}

fn has_shape(g: &SquareMatrix, shape: KernelShape) -> bool {
    let one = |i: usize, j: usize| if i == j { Fe::ONE } else { Fe::ZERO };
    let free: &[(usize, usize)] = match shape {
        KernelShape::Plane => &[(0, 2), (1, 2)],
        KernelShape::Line => &[(0, 1), (0, 2)],
    };
    g.dim() == 3 && (0..3).all(|i| (0..3).all(|j| free.contains(&(i, j)) || g.get(i, j) == one(i, j)))
}

/// Generators `f1, f2, f3` of the invariants of a unipotent kernel.
///
/// For the plane shape `f3 = z` and `f1, f2` are the remaining minimal
/// generators with pure powers of `z` removed; for the line shape
/// `f1 = prod_{g in N} g·x`, `f2 = y`, `f3 = z`.
pub fn unipotent_kernel_invariants(n: &MatrixGroup, shape: KernelShape) -> Result<KernelInvariants> {
    if let Some(g) = n.elements().iter().find(|g| !has_shape(g, shape)) {
        return Err(Error::UnexpectedShape(format!("{g} is not of {shape:?} kernel shape")));
    }
    let field = n.field();
    let var = |i| Multipoly::var(field, 3, i);
    let polys = match shape {
        KernelShape::Line => vec![orbit_product(n.elements(), &var(0))?, var(1), var(2)],
        KernelShape::Plane => {
            let verdict = decide_polynomiality(n, &PolynomialityOptions::default())?;
            if !verdict.is_polynomial() {
                return Err(Error::UnexpectedShape(format!(
                    "kernel invariants are {} ({:?})",
                    verdict.status, verdict.cap_reason
                )));
            }
            let z = var(2);
            let mut others: Vec<Multipoly> =
                verdict.generators.iter().filter(|g| **g != z).map(|g| g.without_pure_powers_of(2)).collect();
            if others.len() != 2 {
                return Err(Error::UnexpectedShape("z is not among the kernel's minimal generators".into()));
            }
            others.push(z);
            others
        }
    };
    for p in &polys {
        if !crate::poly::is_invariant_under(p, n.generators())? {
            return Err(Error::NotInvariantPolynomial(p.to_string()));
        }
    }
    let degrees = polys.iter().map(|p| p.degree().unwrap_or(0)).collect();
    Ok(KernelInvariants { shape, polys, degrees })
}

/// Action of the complement on `k[f1, f2, f3]`.
#[derive(Clone, Debug, Serialize)]
pub struct InducedAction {
    /// `C_h` per complement generator; column `i` holds the coefficients of
    /// `h·f_i` in the `f_j` of the same degree.
    #[serde(serialize_with = "serialize_matrices")]
    pub matrices: Vec<SquareMatrix>,
    /// Connected components of the joint nonzero pattern, as index sets.
    pub blocks: Vec<Vec<usize>>,
    /// Images `h·f_i` that are not linear in the `f_j`.
    pub failures: Vec<String>,
}

fn serialize_matrices<S: serde::Serializer>(ms: &[SquareMatrix], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ms.iter().map(|m| m.to_string()))
}

impl InducedAction {
    pub fn is_linear(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn is_decomposable(&self) -> bool {
        self.blocks.len() > 1
    }

    /// Matrices acting on vectors whose induced action on coordinate
    /// functions is `C_h`: `(C_h^T)^{-1}`.
    pub fn vector_action(&self) -> Result<Vec<SquareMatrix>> {
        self.matrices.iter().map(|c| c.transpose().inverse()).collect()
    }
}

pub fn induced_action(complement_generators: &[SquareMatrix], kernel: &KernelInvariants) -> Result<InducedAction> {
    let k = kernel.polys.len();
    let field = kernel.polys.first().map(|p| p.field().clone()).ok_or_else(|| Error::InvalidInput("no kernel invariants".into()))?;
    let mut matrices = Vec::new();
    let mut failures = Vec::new();
    for h in complement_generators {
        let mut c = SquareMatrix::zero(&field, k);
        for (i, f) in kernel.polys.iter().enumerate() {
            let image = act(h, f)?;
            let d = kernel.degrees[i];
            let basis = GradedBasis::new(3, d);
            let same: Vec<usize> = (0..k).filter(|&j| kernel.degrees[j] == d).collect();
            let vecs = same.iter().map(|&j| kernel.polys[j].to_vector(&basis)).collect::<Result<Vec<_>>>()?;
            match solve_combination(&field, &vecs, &image.to_vector(&basis)?) {
                Some(coeffs) => {
                    for (&j, &cj) in same.iter().zip(&coeffs) {
                        c.set(j, i, cj);
                    }
                }
                None => failures.push(format!("{h} maps f{} = {f} to {image}", i + 1)),
            }
        }
        matrices.push(c);
    }
    // union-find over indices linked by a nonzero off-diagonal entry
    let mut parent: Vec<usize> = (0..k).collect();
    fn root(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for c in &matrices {
        for i in 0..k {
            for j in 0..k {
                if i != j && !c.get(i, j).is_zero() {
                    let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let roots: Vec<usize> = (0..k).map(|i| root(&mut parent, i)).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        match blocks.iter_mut().find(|b| roots[b[0]] == roots[i]) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    Ok(InducedAction { matrices, blocks, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn t_group() -> MatrixGroup {
        let f = f3();
        MatrixGroup::generate(&f, 2, vec![SquareMatrix::from_ints(&f, &[&[1, 1], &[0, 1]])]).unwrap()
    }

    fn sec3() -> MatrixGroup {
        let f = f3();
        let s = SquareMatrix::from_ints(&f, &[&[2, 0], &[0, 2]]);
        let t = SquareMatrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        MatrixGroup::generate(&f, 2, vec![s, t]).unwrap()
    }

    /// Brute-force oracle: polynomials of degree d fixed by every element.
    fn brute_invariant_dim(g: &MatrixGroup, d: u32) -> usize {
        let f = g.field();
        let basis = GradedBasis::new(g.dim(), d);
        let mut rows = Vec::new();
        for h in g.elements() {
            let m = crate::poly::action_matrix_on_degree(h, d).unwrap();
            for r in m.minus_identity().rows() {
                rows.push(r);
            }
        }
        kernel(f, &rows, basis.len()).len()
    }

    #[test]
    fn invariants_of_the_transvection_group() {
        let h = t_group();
        let y = Multipoly::var(&f3(), 2, 1);
        let p1 = invariant_space(&h, 1).unwrap();
        assert_eq!(p1.polynomials(&f3()), vec![y]);
        assert_eq!(invariant_space(&h, 0).unwrap().dim(), 1);
        assert_eq!(invariant_space(&h, 3).unwrap().dim(), 2);
        let series = hilbert_series_of_polynomial_ring(&[1, 3], 8);
        for d in 0..=8 {
            assert_eq!(brute_invariant_dim(&h, d) as u128, series[d as usize]);
        }
    }

    #[test]
    fn minimal_generators_of_small_groups() {
        assert_eq!(minimal_generators(&t_group(), 6).unwrap().degrees, vec![1, 3]);
        let triv = MatrixGroup::trivial(&f3(), 2);
        assert_eq!(minimal_generators(&triv, 3).unwrap().degrees, vec![1, 1]);
        let g = minimal_generators(&sec3(), 12).unwrap();
        assert_eq!(g.degrees, vec![2, 4, 6]);
        assert!(g.complete);
        let rendered: Vec<String> = g.generators.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, ["y^2", "x^3*y + 2*x*y^3", "x^6 + x^4*y^2 + x^2*y^4"]);
    }

    #[test]
    fn polynomiality_of_small_groups() {
        let v = decide_polynomiality(&t_group(), &PolynomialityOptions::default()).unwrap();
        assert!(v.is_polynomial());
        assert_eq!(v.generator_degrees, vec![1, 3]);
        assert_eq!(v.evidence, Evidence::DegreeProductMatch);
        let v = decide_polynomiality(&sec3(), &PolynomialityOptions::default()).unwrap();
        assert_eq!(v.status, PolynomialityStatus::NotPolynomial);
        assert_eq!(v.witness_degree, Some(6));
        assert_eq!(v.generator_degrees, vec![2, 4, 6]);
    }

    #[test]
    fn sl23_polynomial_with_product_24() {
        let f = f3();
        let g = MatrixGroup::generate(
            &f,
            2,
            vec![SquareMatrix::from_ints(&f, &[&[1, 1], &[0, 1]]), SquareMatrix::from_ints(&f, &[&[1, 0], &[1, 1]])],
        )
        .unwrap();
        let v = decide_polynomiality(&g, &PolynomialityOptions::default()).unwrap();
        assert!(v.is_polynomial());
        assert_eq!(v.degree_product(), 24);
        assert_eq!(v.generator_degrees, vec![4, 6]);
        let run = PolynomialityOptions { strategy: Strategy::RunToBound, ..Default::default() };
        let w = decide_polynomiality(&g, &run).unwrap();
        assert_eq!(w.status, PolynomialityStatus::Polynomial);
        assert_eq!(w.evidence, Evidence::GenerationBoundReached);
        assert_eq!(w.degree_bound_used, 46);
    }

    #[test]
    fn small_cap_is_inconclusive() {
        let v = decide_polynomiality(&sec3(), &PolynomialityOptions::with_cap(DegreeCap::Fixed(4))).unwrap();
        assert_eq!(v.status, PolynomialityStatus::Inconclusive);
        assert_eq!(v.evidence, Evidence::CapReached);
        let tiny = PolynomialityOptions { max_piece_dim: 3, ..Default::default() };
        let v = decide_polynomiality(&sec3(), &tiny).unwrap();
        assert_eq!(v.status, PolynomialityStatus::Inconclusive);
    }

    #[test]
    fn one_dimensional_groups() {
        let f5 = Field::prime(5).unwrap();
        let g = MatrixGroup::generate(&f5, 1, vec![SquareMatrix::from_ints(&f5, &[&[2]])]).unwrap();
        let run = PolynomialityOptions { strategy: Strategy::RunToBound, ..Default::default() };
        let v = decide_polynomiality(&g, &run).unwrap();
        assert!(v.is_polynomial());
        assert_eq!(v.generator_degrees, vec![4]);
    }

    #[test]
    fn line_kernel_invariants() {
        let f = f3();
        let n = MatrixGroup::generate(&f, 3, vec![SquareMatrix::from_ints(&f, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]])])
            .unwrap();
        let k = unipotent_kernel_invariants(&n, KernelShape::Line).unwrap();
        assert_eq!(k.polys[0].to_string(), "x^3 + 2*x*y^2");
        assert_eq!(k.degrees, vec![3, 1, 1]);
        assert!(unipotent_kernel_invariants(&n, KernelShape::Plane).is_err());
    }

    #[test]
    fn plane_kernel_invariants() {
        let f = f3();
        let n = MatrixGroup::generate(
            &f,
            3,
            vec![
                SquareMatrix::from_ints(&f, &[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]),
                SquareMatrix::from_ints(&f, &[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]),
            ],
        )
        .unwrap();
        let k = unipotent_kernel_invariants(&n, KernelShape::Plane).unwrap();
        assert_eq!(k.degrees, vec![3, 3, 1]);
        let rendered: Vec<String> = k.polys.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, ["x^3 + 2*x*z^2", "y^3 + 2*y*z^2", "z"]);
        for g in n.elements() {
            for p in &k.polys {
                assert_eq!(act(g, p).unwrap(), *p);
            }
        }
        let triv = MatrixGroup::trivial(&f, 3);
        let k = unipotent_kernel_invariants(&triv, KernelShape::Plane).unwrap();
        assert_eq!(k.degrees, vec![1, 1, 1]);
    }

    #[test]
    fn induced_action_of_trivial_complement() {
        let f = f3();
        let triv = MatrixGroup::trivial(&f, 3);
        let k = unipotent_kernel_invariants(&triv, KernelShape::Line).unwrap();
        let ind = induced_action(&[SquareMatrix::identity(&f, 3)], &k).unwrap();
        assert!(ind.matrices[0].is_identity());
        assert!(ind.is_linear());
        assert_eq!(ind.block_dims(), vec![1, 1, 1]);
    }
}
