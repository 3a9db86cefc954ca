//! Multivariate polynomials over a finite field and the linear action of
//! matrices on them.
//!
//! Conventions:
//! * variables are the coordinate functions `x_1..x_n`, rendered `x, y, z`
//!   for `n <= 3` and `x1, x2, ...` otherwise;
//! * a matrix `g` acts on functions by `(g·f)(v) = f(g^{-1} v)`, so
//!   `g·x_i = sum_j (g^{-1})_{ij} x_j`;
//! * monomials of one degree are listed in graded-lex order, descending:
//!   `x^d, x^{d-1}y, x^{d-1}z, ..., z^d`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::group::MatrixGroup;
use crate::linalg::SquareMatrix;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct Multipoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Exponent, Fe>,
}

impl fmt::Debug for Multipoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn variable_name(i: usize, nvars: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// Graded-lex descending: higher degree first, then lexicographically larger.
fn grlex_desc(a: &Exponent, b: &Exponent) -> std::cmp::Ordering {
    total_degree(b).cmp(&total_degree(a)).then_with(|| b.cmp(a))
}

impl fmt::Display for Multipoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        let v = variable_name(i, self.nvars);
                        if k == 1 {
                            v
                        } else {
                            format!("{v}^{k}")
                        }
                    })
                    .collect();
                let coef = self.field.render(c);
                match (mono.is_empty(), c == Fe::ONE, self.field.is_atomic(c)) {
                    (true, _, _) => coef,
                    (false, true, _) => mono.join("*"),
                    (false, false, true) => format!("{coef}*{}", mono.join("*")),
                    (false, false, false) => format!("({coef})*{}", mono.join("*")),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Multipoly {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        Multipoly { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &Field, nvars: usize, c: Fe) -> Self {
        Multipoly::monomial(field, vec![0; nvars], c)
    }

    pub fn one(field: &Field, nvars: usize) -> Self {
        Multipoly::constant(field, nvars, Fe::ONE)
    }

    pub fn var(field: &Field, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Multipoly::monomial(field, e, Fe::ONE)
    }

    pub fn monomial(field: &Field, exponent: Exponent, c: Fe) -> Self {
        let nvars = exponent.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Multipoly { field: field.clone(), nvars, terms }
    }

    /// The linear form `sum_j coeffs[j] x_j`.
    pub fn linear_form(field: &Field, coeffs: &[Fe]) -> Self {
        let n = coeffs.len();
        let mut p = Multipoly::zero(field, n);
        for (j, &c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[j] = 1;
                p.terms.insert(e, c);
            }
        }
        p
    }

    /// Polynomial from `(exponent, coefficient)` pairs; repeated exponents
    /// are summed.
    pub fn from_terms(field: &Field, nvars: usize, terms: impl IntoIterator<Item = (Exponent, Fe)>) -> Result<Self> {
        let mut p = Multipoly::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch(format!("exponent of length {} for {nvars} variables", e.len())));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: Fe) {
        if c.is_zero() {
            return;
        }
        let f = &self.field;
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Fe> {
        &self.terms
    }

    /// Terms in graded-lex descending order.
    pub fn sorted_terms(&self) -> Vec<(Exponent, Fe)> {
        let mut v: Vec<(Exponent, Fe)> = self.terms.iter().map(|(e, &c)| (e.clone(), c)).collect();
        v.sort_by(|a, b| grlex_desc(&a.0, &b.0));
        v
    }

    pub fn coefficient(&self, e: &[u32]) -> Fe {
        self.terms.get(e).copied().unwrap_or(Fe::ZERO)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| total_degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Coefficient of the leading term in graded-lex order.
    pub fn leading_coefficient(&self) -> Option<Fe> {
        self.sorted_terms().first().map(|(_, c)| *c)
    }

    fn check_compatible(&self, other: &Multipoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(format!("{} vs {} variables", self.nvars, other.nvars)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Multipoly) -> Multipoly {
        debug_assert!(self.check_compatible(other).is_ok());
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Multipoly) -> Multipoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multipoly {
        self.scale(self.field.neg(Fe::ONE))
    }

    pub fn scale(&self, c: Fe) -> Multipoly {
        let mut out = Multipoly::zero(&self.field, self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, &v) in &self.terms {
            out.terms.insert(e.clone(), self.field.mul(v, c));
        }
        out
    }

    pub fn mul(&self, other: &Multipoly) -> Multipoly {
        debug_assert!(self.check_compatible(other).is_ok());
        let f = &self.field;
        let mut out = Multipoly::zero(f, self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, f.mul(ca, cb));
            }
        }
        out
    }

    pub fn try_add(&self, other: &Multipoly) -> Result<Multipoly> {
        self.check_compatible(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Multipoly) -> Result<Multipoly> {
        self.check_compatible(other)?;
        Ok(self.mul(other))
    }

    pub fn pow(&self, mut e: u32) -> Multipoly {
        let mut base = self.clone();
        let mut acc = Multipoly::one(&self.field, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative in variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Multipoly {
        let f = &self.field;
        let mut out = Multipoly::zero(f, self.nvars);
        for (e, &c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let k = f.from_int(e[i] as i64);
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, f.mul(c, k));
        }
        out
    }

    pub fn evaluate(&self, point: &[Fe]) -> Fe {
        let f = &self.field;
        self.terms.iter().fold(Fe::ZERO, |acc, (e, &c)| {
            let m = e.iter().zip(point).fold(c, |m, (&k, &v)| f.mul(m, f.pow(v, k as u64)));
            f.add(acc, m)
        })
    }

    /// Terms of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Multipoly {
        let terms = self.terms.iter().filter(|(e, _)| total_degree(e) == d).map(|(e, &c)| (e.clone(), c)).collect();
        Multipoly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    /// Drops every term that is a pure power of variable `i`.
    pub fn without_pure_powers_of(&self, i: usize) -> Multipoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| !(e[i] > 0 && e.iter().enumerate().all(|(j, &k)| j == i || k == 0)))
            .map(|(e, &c)| (e.clone(), c))
            .collect();
        Multipoly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    /// Coefficient vector in a graded basis. Fails on terms of another degree.
    pub fn to_vector(&self, basis: &GradedBasis) -> Result<Vec<Fe>> {
        let mut v = vec![Fe::ZERO; basis.len()];
        for (e, &c) in &self.terms {
            let i = basis
                .index_of(e)
                .ok_or_else(|| Error::InvalidInput(format!("{self} is not homogeneous of degree {}", basis.degree())))?;
            v[i] = c;
        }
        Ok(v)
    }

    pub fn from_vector(field: &Field, basis: &GradedBasis, v: &[Fe]) -> Multipoly {
        let terms = basis.monomials().iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(e, &c)| (e.clone(), c));
        Multipoly { field: field.clone(), nvars: basis.nvars(), terms: terms.collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Multipoly {
        match self.leading_coefficient() {
            Some(c) => self.scale(self.field.inv(c).expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }
}

/// Monomials of a fixed degree in graded-lex descending order.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    nvars: usize,
    degree: u32,
    monomials: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
}

fn push_monomials(nvars: usize, remaining: u32, prefix: &mut Exponent, out: &mut Vec<Exponent>) {
    if prefix.len() + 1 == nvars {
        prefix.push(remaining);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for k in (0..=remaining).rev() {
        prefix.push(k);
        push_monomials(nvars, remaining - k, prefix, out);
        prefix.pop();
    }
}

impl GradedBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                monomials.push(Vec::new());
            }
        } else {
            push_monomials(nvars, degree, &mut Vec::with_capacity(nvars), &mut monomials);
        }
        let index = monomials.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        GradedBasis { nvars, degree, monomials, index }
    }

    /// `C(n + d - 1, d)` without building the basis.
    pub fn dimension(nvars: usize, degree: u32) -> usize {
        if nvars == 0 {
            return usize::from(degree == 0);
        }
        let (n, d) = (nvars as u128, degree as u128);
        let mut r: u128 = 1;
        for i in 1..n {
            r = r * (d + i) / i;
        }
        r.try_into().unwrap_or(usize::MAX)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// Linear forms `g·x_i`, as coefficient rows: row `i` of `g^{-1}`.
pub fn dual_linear_forms(g: &SquareMatrix) -> Result<Vec<Vec<Fe>>> {
    Ok(g.inverse()?.rows())
}

/// `g·f` under `(g·f)(v) = f(g^{-1} v)`.
pub fn act(g: &SquareMatrix, f: &Multipoly) -> Result<Multipoly> {
    if g.dim() != f.nvars() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix on {} variables", g.dim(), g.dim(), f.nvars())));
    }
    if g.field() != f.field() {
        return Err(Error::FieldMismatch);
    }
    let field = f.field();
    let forms: Vec<Multipoly> = dual_linear_forms(g)?.iter().map(|r| Multipoly::linear_form(field, r)).collect();
    let mut powers: HashMap<(usize, u32), Multipoly> = HashMap::new();
    let mut out = Multipoly::zero(field, f.nvars());
    for (e, &c) in f.terms() {
        let mut term = Multipoly::constant(field, f.nvars(), c);
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                let p = powers.entry((i, k)).or_insert_with(|| forms[i].pow(k));
                term = term.mul(p);
            }
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Dense matrices of the action on consecutive graded pieces.
///
/// Column `j` of the degree-`d` matrix is the image of monomial `j`. Images
/// in degree `d` are built from degree `d - 1` by multiplying with one
/// linear form, so walking up the degrees costs one pass per piece.
#[derive(Clone, Debug)]
pub struct DegreeActions {
    field: Field,
    forms: Vec<Vec<Fe>>,
    degree: u32,
    basis: GradedBasis,
    /// Images of the current basis monomials, one dense column each.
    columns: Vec<Vec<Fe>>,
}

impl DegreeActions {
    pub fn new(g: &SquareMatrix) -> Result<Self> {
        let n = g.dim();
        Ok(DegreeActions {
            field: g.field().clone(),
            forms: dual_linear_forms(g)?,
            degree: 0,
            basis: GradedBasis::new(n, 0),
            columns: vec![vec![Fe::ONE]],
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn columns(&self) -> &[Vec<Fe>] {
        &self.columns
    }

    /// Moves to degree `d + 1`, reusing `next_basis` when given.
    pub fn advance(&mut self, next_basis: Option<&GradedBasis>) {
        let n = self.forms.len();
        let next = next_basis.cloned().unwrap_or_else(|| GradedBasis::new(n, self.degree + 1));
        let f = &self.field;
        // position of (monomial k of current degree) * x_j in the next basis
        let shift: Vec<Vec<usize>> = self
            .basis
            .monomials()
            .iter()
            .map(|e| {
                (0..n)
                    .map(|j| {
                        let mut m = e.clone();
                        m[j] += 1;
                        next.index_of(&m).expect("degree-raised monomial")
                    })
                    .collect()
            })
            .collect();
        let columns = next
            .monomials()
            .iter()
            .map(|e| {
                let i = e.iter().position(|&k| k > 0).expect("positive degree");
                let mut prev = e.clone();
                prev[i] -= 1;
                let src = &self.columns[self.basis.index_of(&prev).expect("lower monomial")];
                let form = &self.forms[i];
                let mut col = vec![Fe::ZERO; next.len()];
                for (k, &c) in src.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, &l) in form.iter().enumerate() {
                        if !l.is_zero() {
                            let t = shift[k][j];
                            col[t] = f.add(col[t], f.mul(c, l));
                        }
                    }
                }
                col
            })
            .collect();
        self.degree += 1;
        self.basis = next;
        self.columns = columns;
    }

    /// The action matrix on the current degree, rows indexed by image
    /// monomials and columns by source monomials.
    pub fn matrix_rows(&self) -> Vec<Vec<Fe>> {
        let m = self.basis.len();
        (0..m).map(|i| self.columns.iter().map(|c| c[i]).collect()).collect()
    }
}

/// Matrix of `f -> g·f` on the degree-`d` piece.
pub fn action_matrix_on_degree(g: &SquareMatrix, d: u32) -> Result<SquareMatrix> {
    let mut acts = DegreeActions::new(g)?;
    for _ in 0..d {
        acts.advance(None);
    }
    SquareMatrix::from_rows(g.field(), acts.matrix_rows())
}

/// `prod_{g in elems} g·f`.
pub fn orbit_product<'a>(elems: impl IntoIterator<Item = &'a SquareMatrix>, f: &Multipoly) -> Result<Multipoly> {
    let mut acc = Multipoly::one(f.field(), f.nvars());
    for g in elems {
        acc = acc.mul(&act(g, f)?);
    }
    Ok(acc)
}

pub fn is_invariant_under(f: &Multipoly, gens: &[SquareMatrix]) -> Result<bool> {
    for g in gens {
        if act(g, f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Representatives of the right cosets `Hg` of `h` in `g`, smallest first.
pub fn right_coset_representatives(g: &MatrixGroup, h: &MatrixGroup) -> Vec<SquareMatrix> {
    let mut covered = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x.clone());
        for y in h.elements() {
            covered.insert(y.mul(x));
        }
    }
    reps
}

/// Relative norm `N_H^G(f) = prod_{Hx} x^{-1}·f` over right cosets `Hx`.
///
/// `f` must be `H`-invariant; the factor `x^{-1}·f` only depends on the
/// coset, so the product is `G`-invariant.
pub fn relative_norm(g: &MatrixGroup, h: &MatrixGroup, f: &Multipoly) -> Result<Multipoly> {
    if !h.is_subgroup_of(g) {
        return Err(Error::InvalidInput("H is not a subgroup of G".into()));
    }
    if !is_invariant_under(f, h.generators())? {
        return Err(Error::NotInvariantPolynomial(format!("{f} under H")));
    }
    let mut acc = Multipoly::one(f.field(), f.nvars());
    for x in right_coset_representatives(g, h) {
        acc = acc.mul(&act(&x.inverse()?, f)?);
    }
    Ok(acc)
}

/// Jacobian determinant of `n` polynomials in `n` variables.
pub fn jacobian_determinant(polys: &[Multipoly]) -> Result<Multipoly> {
    let n = polys.first().map(|p| p.nvars()).unwrap_or(0);
    if polys.len() != n || polys.iter().any(|p| p.nvars() != n) {
        return Err(Error::DimensionMismatch("Jacobian needs n polynomials in n variables".into()));
    }
    let jac: Vec<Vec<Multipoly>> = polys.iter().map(|p| (0..n).map(|i| p.partial_derivative(i)).collect()).collect();
    let field = polys[0].field().clone();
    Ok(det_poly(&field, n, &jac))
}

/// Laplace expansion; only used for `n <= 3`-sized Jacobians in practice.
fn det_poly(field: &Field, n: usize, m: &[Vec<Multipoly>]) -> Multipoly {
    match m.len() {
        0 => Multipoly::one(field, n),
        1 => m[0][0].clone(),
        k => {
            let mut acc = Multipoly::zero(field, n);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Multipoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&det_poly(field, n, &minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}
