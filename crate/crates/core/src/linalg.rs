//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are plain `Vec<Fe>`. Square matrices act on column vectors;
//! [`Subspace`] keeps its basis in reduced row echelon form so that equality
//! of subspaces is structural equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

/// `dst += c * src`.
#[inline]
pub fn axpy(field: &Field, dst: &mut [Fe], c: Fe, src: &[Fe]) {
    if c.is_zero() {
        return;
    }
    let row = field.mul_row(c);
    for (d, &s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = field.add(*d, row[s.index()]);
        }
    }
}

pub fn scale(field: &Field, v: &mut [Fe], c: Fe) {
    let row = field.mul_row(c);
    for x in v.iter_mut() {
        *x = row[x.index()];
    }
}

/// Incrementally maintained reduced echelon basis.
///
/// Every stored row has a leading 1 at its pivot column and zeros in the
/// pivot columns of all other rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, ncols: usize) -> Self {
        Echelon { field: field.clone(), ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &mut [Fe]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                axpy(&self.field, v, self.field.neg(c), row);
            }
        }
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span. Returns the reduced, normalized new row when `v`
    /// was independent of the stored rows.
    pub fn insert(&mut self, v: &[Fe]) -> Option<Vec<Fe>> {
        debug_assert_eq!(v.len(), self.ncols);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let p = w.iter().position(|x| !x.is_zero())?;
        let inv = self.field.inv(w[p]).expect("nonzero pivot");
        scale(&self.field, &mut w, inv);
        for row in &mut self.rows {
            let c = row[p];
            if !c.is_zero() {
                axpy(&self.field, row, self.field.neg(c), &w);
            }
        }
        self.rows.push(w.clone());
        self.pivots.push(p);
        Some(w)
    }

    /// Rows sorted by pivot column: the canonical reduced row echelon form.
    pub fn into_rref(self) -> (Vec<Vec<Fe>>, Vec<usize>) {
        let mut pairs: Vec<(usize, Vec<Fe>)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        let pivots = pairs.iter().map(|(p, _)| *p).collect();
        (pairs.into_iter().map(|(_, r)| r).collect(), pivots)
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }
}

/// Reduced row echelon form of `rows` (zero rows dropped) and pivot columns.
pub fn rref(field: &Field, rows: &[Vec<Fe>], ncols: usize) -> (Vec<Vec<Fe>>, Vec<usize>) {
    let mut ech = Echelon::new(field, ncols);
    for r in rows {
        ech.insert(r);
        if ech.rank() == ncols {
            break;
        }
    }
    ech.into_rref()
}

pub fn rank(field: &Field, rows: &[Vec<Fe>], ncols: usize) -> usize {
    rref(field, rows, ncols).0.len()
}

/// Right kernel `{v : M v = 0}` of the matrix with the given rows, as a
/// canonical (RREF) basis.
pub fn kernel(field: &Field, rows: &[Vec<Fe>], ncols: usize) -> Vec<Vec<Fe>> {
    let (r, pivots) = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Fe::ZERO; ncols];
        v[free] = Fe::ONE;
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = field.neg(row[free]);
        }
        basis.push(v);
    }
    rref(field, &basis, ncols).0
}

/// Coefficients expressing `target` in terms of `vectors`, if possible.
pub fn solve_combination(field: &Field, vectors: &[Vec<Fe>], target: &[Fe]) -> Option<Vec<Fe>> {
    let n = target.len();
    let k = vectors.len();
    // Columns are the vectors; augmented column is the target.
    let rows: Vec<Vec<Fe>> = (0..n)
        .map(|i| {
            let mut r: Vec<Fe> = vectors.iter().map(|v| v[i]).collect();
            r.push(target[i]);
            r
        })
        .collect();
    let (r, pivots) = rref(field, &rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut sol = vec![Fe::ZERO; k];
    for (row, &p) in r.iter().zip(&pivots) {
        sol[p] = row[k];
    }
    Some(sol)
}

/// Kind of an invertible finite-order matrix, decided from `rank(g - I)` and
/// nilpotency of `g - I` only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementKind {
    Identity,
    Transvection,
    PseudoreflectionNontransvection,
    Other,
}

impl ElementKind {
    pub fn is_pseudoreflection(self) -> bool {
        matches!(self, ElementKind::Transvection | ElementKind::PseudoreflectionNontransvection)
    }
}

/// An `n x n` matrix over a finite field, row-major. Acts on column vectors.
#[derive(Clone)]
pub struct SquareMatrix {
    field: Field,
    dim: usize,
    entries: Box<[Fe]>,
}

impl PartialEq for SquareMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries && self.field == other.field
    }
}

impl Eq for SquareMatrix {}

impl Hash for SquareMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.entries.hash(state);
    }
}

impl PartialOrd for SquareMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: dimension, then entries in row-major index order.
impl Ord for SquareMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim.cmp(&other.dim).then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.dim {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(&self.field.render(self.get(i, j)))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl SquareMatrix {
    pub fn identity(field: &Field, dim: usize) -> Self {
        let mut entries = vec![Fe::ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Fe::ONE;
        }
        SquareMatrix { field: field.clone(), dim, entries: entries.into() }
    }

    pub fn zero(field: &Field, dim: usize) -> Self {
        SquareMatrix { field: field.clone(), dim, entries: vec![Fe::ZERO; dim * dim].into() }
    }

    pub fn from_entries(field: &Field, dim: usize, entries: Vec<Fe>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.index() >= field.order()) {
            return Err(Error::InvalidInput("entry outside the field".into()));
        }
        Ok(SquareMatrix { field: field.clone(), dim, entries: entries.into() })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Fe>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("matrix rows must all have length n".into()));
        }
        SquareMatrix::from_entries(field, dim, rows.into_iter().flatten().collect())
    }

    /// Matrix over the prime subfield from integer rows.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), dim, "non-square integer matrix");
                r.iter().map(|&v| field.from_int(v))
            })
            .collect::<Vec<_>>();
        SquareMatrix { field: field.clone(), dim, entries: entries.into() }
    }

    /// Diagonal matrix.
    pub fn diagonal(field: &Field, diag: &[Fe]) -> Self {
        let mut m = SquareMatrix::zero(field, diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Block diagonal `a ⊕ b`.
    pub fn direct_sum(a: &SquareMatrix, b: &SquareMatrix) -> Self {
        let n = a.dim + b.dim;
        let mut m = SquareMatrix::zero(&a.field, n);
        for i in 0..a.dim {
            for j in 0..a.dim {
                m.set(i, j, a.get(i, j));
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                m.set(a.dim + i, a.dim + j, b.get(i, j));
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, cols: &[Vec<Fe>]) -> Result<Self> {
        let n = cols.len();
        let mut m = SquareMatrix::zero(field, n);
        for (j, c) in cols.iter().enumerate() {
            if c.len() != n {
                return Err(Error::DimensionMismatch("column length".into()));
            }
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[Fe] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.dim).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Fe>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        debug_assert!(self.field == other.field, "matrix field mismatch");
        let n = self.dim;
        let f = &self.field;
        let mut out = vec![Fe::ZERO; n * n];
        for i in 0..n {
            let dst = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.entries[i * n + k];
                if !a.is_zero() {
                    axpy(f, dst, a, &other.entries[k * n..(k + 1) * n]);
                }
            }
        }
        SquareMatrix { field: self.field.clone(), dim: n, entries: out.into() }
    }

    pub fn try_mul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dim, other.dim)));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.mul(other))
    }

    pub fn apply(&self, v: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[Fe]) -> Vec<Fe> {
        let mut out = vec![Fe::ZERO; self.dim];
        for (i, &c) in v.iter().enumerate() {
            axpy(&self.field, &mut out, c, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &SquareMatrix) -> SquareMatrix {
        let f = &self.field;
        let entries = self.entries.iter().zip(other.entries.iter()).map(|(&a, &b)| f.add(a, b)).collect::<Vec<_>>();
        SquareMatrix { field: f.clone(), dim: self.dim, entries: entries.into() }
    }

    pub fn sub(&self, other: &SquareMatrix) -> SquareMatrix {
        let f = &self.field;
        let entries = self.entries.iter().zip(other.entries.iter()).map(|(&a, &b)| f.sub(a, b)).collect::<Vec<_>>();
        SquareMatrix { field: f.clone(), dim: self.dim, entries: entries.into() }
    }

    pub fn minus_identity(&self) -> SquareMatrix {
        self.sub(&SquareMatrix::identity(&self.field, self.dim))
    }

    pub fn transpose(&self) -> SquareMatrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &v)| v == if k / n == k % n { Fe::ONE } else { Fe::ZERO })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    pub fn det(&self) -> Fe {
        let f = &self.field;
        let n = self.dim;
        let mut a = self.rows();
        let mut det = Fe::ONE;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Fe::ZERO;
            };
            if piv != col {
                a.swap(piv, col);
                det = f.neg(det);
            }
            let p = a[col][col];
            det = f.mul(det, p);
            let pinv = f.inv(p).expect("nonzero pivot");
            for r in col + 1..n {
                let c = f.mul(a[r][col], pinv);
                if !c.is_zero() {
                    let src = a[col].clone();
                    axpy(f, &mut a[r], f.neg(c), &src);
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        rank(&self.field, &self.rows(), self.dim)
    }

    pub fn inverse(&self) -> Result<SquareMatrix> {
        let f = &self.field;
        let n = self.dim;
        let rows: Vec<Vec<Fe>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }));
                r
            })
            .collect();
        let (r, pivots) = rref(f, &rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        let entries = r.iter().flat_map(|row| row[n..].iter().copied()).collect::<Vec<_>>();
        Ok(SquareMatrix { field: f.clone(), dim: n, entries: entries.into() })
    }

    /// `self^e`; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> Result<SquareMatrix> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = SquareMatrix::identity(&self.field, self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// `b * self * b^{-1}`.
    pub fn conjugate_by(&self, b: &SquareMatrix, b_inv: &SquareMatrix) -> SquareMatrix {
        b.mul(self).mul(b_inv)
    }

    /// `ker(g - I)`.
    pub fn fixed_space(&self) -> Subspace {
        let k = kernel(&self.field, &self.minus_identity().rows(), self.dim);
        Subspace::from_rref(&self.field, self.dim, k)
    }

    /// Least `t >= 1` with `g^t = I`. Fails past `q^n`, which bounds the
    /// order of any element of `GL(n, q)`.
    pub fn element_order(&self) -> Result<u64> {
        let bound = (self.field.order() as u64).saturating_pow(self.dim as u32);
        let mut acc = self.clone();
        let mut t = 1u64;
        while !acc.is_identity() {
            if t >= bound {
                return Err(Error::OrderBoundExceeded(bound));
            }
            acc = acc.mul(self);
            t += 1;
        }
        Ok(t)
    }

    pub fn classify(&self) -> ElementKind {
        let d = self.minus_identity();
        match d.rank() {
            0 => ElementKind::Identity,
            1 if d.mul(&d).is_zero() => ElementKind::Transvection,
            1 => ElementKind::PseudoreflectionNontransvection,
            _ => ElementKind::Other,
        }
    }

    pub fn is_transvection(&self) -> bool {
        self.classify() == ElementKind::Transvection
    }

    pub fn is_pseudoreflection(&self) -> bool {
        self.classify().is_pseudoreflection()
    }

    pub fn commutes_with(&self, other: &SquareMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Entries as coefficient vectors, row by row.
    pub fn to_coeff_rows(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.field.coeffs(self.get(i, j))).collect())
            .collect()
    }
}

/// A subspace of `F^n` stored by its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Fe>>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vecs: Vec<String> = self
            .basis
            .iter()
            .map(|v| format!("({})", v.iter().map(|&x| self.field.render(x)).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "<{}>", vecs.join(", "))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: larger dimension first, then basis vectors.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dim()
            .cmp(&self.dim())
            .then_with(|| self.ambient.cmp(&other.ambient))
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

impl Subspace {
    fn from_rref(field: &Field, ambient: usize, basis: Vec<Vec<Fe>>) -> Self {
        Subspace { field: field.clone(), ambient, basis }
    }

    pub fn span(field: &Field, ambient: usize, vectors: &[Vec<Fe>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch("vector length differs from ambient dimension".into()));
        }
        Ok(Subspace::from_rref(field, ambient, rref(field, vectors, ambient).0))
    }

    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace::from_rref(field, ambient, Vec::new())
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        Subspace::from_rref(field, ambient, SquareMatrix::identity(field, ambient).rows())
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: &Field, ambient: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<Fe>> = indices
            .iter()
            .map(|&i| (0..ambient).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }).collect())
            .collect();
        Subspace::span(field, ambient, &vecs).expect("coordinate vectors have ambient length")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero basis row")).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[Fe]) -> bool {
        let mut ech = Echelon::new(&self.field, self.ambient);
        for b in &self.basis {
            ech.insert(b);
        }
        ech.contains(v)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    /// Linear functionals vanishing on the subspace, as an RREF basis.
    pub fn annihilator(&self) -> Vec<Vec<Fe>> {
        kernel(&self.field, &self.basis, self.ambient)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut ann = self.annihilator();
        ann.extend(other.annihilator());
        Ok(Subspace::from_rref(&self.field, self.ambient, kernel(&self.field, &ann, self.ambient)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(&self.field, self.ambient, &v)
    }

    /// `g(W) ⊆ W`.
    pub fn is_invariant_under(&self, g: &SquareMatrix) -> bool {
        self.basis.iter().all(|v| self.contains_vector(&g.apply(v)))
    }

    /// `g(w) = w` for all `w` in `W`.
    pub fn is_fixed_pointwise_by(&self, g: &SquareMatrix) -> bool {
        self.basis.iter().all(|v| g.apply(v) == *v)
    }

    /// Image under an invertible matrix.
    pub fn image(&self, g: &SquareMatrix) -> Subspace {
        let vecs: Vec<Vec<Fe>> = self.basis.iter().map(|v| g.apply(v)).collect();
        Subspace::span(&self.field, self.ambient, &vecs).expect("same ambient")
    }

    /// Coordinates of a member vector in the RREF basis: its pivot entries.
    pub fn coordinates(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots().into_iter().map(|p| v[p]).collect())
    }

    /// Standard basis vectors completing the RREF basis to a basis of `F^n`:
    /// the non-pivot coordinates.
    pub fn complement_indices(&self) -> Vec<usize> {
        let piv = self.pivots();
        (0..self.ambient).filter(|c| !piv.contains(c)).collect()
    }

    /// All `k`-dimensional subspaces of `F^n` in canonical order.
    ///
    /// Only dimensions 0, 1, `n - 1` and `n` are supported; these cover
    /// every subspace of a space of dimension at most 3.
    pub fn enumerate(field: &Field, ambient: usize, k: usize) -> Result<Vec<Subspace>> {
        let mut out = if k == 0 {
            vec![Subspace::zero(field, ambient)]
        } else if k == ambient {
            vec![Subspace::full(field, ambient)]
        } else if k == 1 {
            projective_points(field, ambient)
                .into_iter()
                .map(|v| Subspace::span(field, ambient, &[v]).expect("ambient length"))
                .collect()
        } else if k + 1 == ambient {
            projective_points(field, ambient)
                .into_iter()
                .map(|phi| Subspace::from_rref(field, ambient, kernel(field, &[phi], ambient)))
                .collect()
        } else {
            return Err(Error::Unsupported(format!("enumerating {k}-subspaces of F^{ambient}")));
        };
        out.sort();
        Ok(out)
    }
}

/// Nonzero vectors of `F^n` whose first nonzero coordinate is 1.
pub fn projective_points(field: &Field, n: usize) -> Vec<Vec<Fe>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let count = field.order().pow(free as u32);
        for mut idx in 0..count {
            let mut v = vec![Fe::ZERO; n];
            v[lead] = Fe::ONE;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = Fe((idx % field.order()) as u16);
                idx /= field.order();
            }
            out.push(v);
        }
    }
    out
}

/// All nonzero vectors of `F^n` in index order.
pub fn nonzero_vectors(field: &Field, n: usize) -> Vec<Vec<Fe>> {
    let q = field.order();
    (1..q.pow(n as u32))
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let c = Fe((idx % q) as u16);
                    idx /= q;
                    c
                })
                .collect()
        })
        .collect()
}

/// A 2-dimensional subspace invariant (not necessarily pointwise) under both
/// `g` and `h`, searched over all rational planes of `F^3`.
pub fn common_invariant_plane(g: &SquareMatrix, h: &SquareMatrix) -> Result<Option<Subspace>> {
    Ok(common_invariant_planes(g, h)?.into_iter().next())
}

/// All rational planes of `F^3` invariant under both matrices.
pub fn common_invariant_planes(g: &SquareMatrix, h: &SquareMatrix) -> Result<Vec<Subspace>> {
    if g.dim() != 3 || h.dim() != 3 {
        return Err(Error::DimensionMismatch("invariant plane search needs 3x3 matrices".into()));
    }
    let planes = Subspace::enumerate(g.field(), 3, 2)?;
    Ok(planes.into_iter().filter(|p| p.is_invariant_under(g) && p.is_invariant_under(h)).collect())
}
