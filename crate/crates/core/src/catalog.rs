//! Named groups and test fixtures.
//!
//! Two-dimensional groups use `t = [[1,1],[0,1]]` and `s = [[1,0],[l,1]]`.
//! The three-dimensional extensions embed a two-dimensional `H` as a block
//! and add a unipotent kernel `N` of translations.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::group::MatrixGroup;
use crate::linalg::SquareMatrix;

fn upper(f: &Field, c: Fe) -> SquareMatrix {
    SquareMatrix::from_rows(f, vec![vec![Fe::ONE, c], vec![Fe::ZERO, Fe::ONE]]).expect("2x2")
}

fn lower(f: &Field, c: Fe) -> SquareMatrix {
    SquareMatrix::from_rows(f, vec![vec![Fe::ONE, Fe::ZERO], vec![c, Fe::ONE]]).expect("2x2")
}

fn field_of_order(q: usize) -> Result<Field> {
    let (p, m) = match q {
        2 => (2, 1),
        3 => (3, 1),
        4 => (2, 2),
        5 => (5, 1),
        7 => (7, 1),
        8 => (2, 3),
        9 => (3, 2),
        _ => return Err(Error::Unsupported(format!("SL(2,{q}) is outside the catalog (q <= 9, q a prime power)"))),
    };
    Field::standard(p, m)
}

/// `SL(2, q)` for prime powers `q <= 9`.
///
/// For prime `q` the generators are `t` and `s` with `l = 1`. For `q = 9`,
/// `l` is the adjoined root, which lies in no smaller field and satisfies
/// `l^2 != -1`. For `q = 4, 8` two transvections never suffice, so the
/// generators are `t`, `s` with `l = 1` and `s` with `l` the adjoined root.
pub fn sl2(q: usize) -> Result<MatrixGroup> {
    let f = field_of_order(q)?;
    let t = upper(&f, Fe::ONE);
    let gens = match (f.characteristic(), f.ext_degree()) {
        (_, 1) => vec![t, lower(&f, Fe::ONE)],
        (2, _) => vec![t, lower(&f, Fe::ONE), lower(&f, f.root())],
        _ => {
            let l = f.root();
            debug_assert!(!f.in_proper_subfield(l));
            if f.mul(l, l) == f.neg(Fe::ONE) {
                return Err(Error::InvalidInput("l^2 = -1 would give the binary icosahedral group".into()));
            }
            vec![t, lower(&f, l)]
        }
    };
    MatrixGroup::generate(&f, 2, gens)
}

/// The binary icosahedral group in `SL(2, 9)`, generated by `t` and `s`
/// with `l^2 = -1`.
pub fn binary_icosahedral_char3() -> Result<MatrixGroup> {
    let f = Field::standard(3, 2)?;
    let minus_one = f.neg(Fe::ONE);
    let l = f
        .elements()
        .find(|&l| f.mul(l, l) == minus_one)
        .ok_or_else(|| Error::InvalidField("no square root of -1 in F_9".into()))?;
    MatrixGroup::generate(&f, 2, vec![upper(&f, Fe::ONE), lower(&f, l)])
}

/// Dihedral group `<[[0,1],[1,0]], diag(x, 1/x)>` over `F_{2^n}`.
pub fn imprimitive_char2(n: u32, x: Fe) -> Result<MatrixGroup> {
    let f = Field::standard(2, n)?;
    if x.index() >= f.order() || x == Fe::ZERO || x == Fe::ONE {
        return Err(Error::InvalidInput(format!("x = {} must be an element of F_{} other than 0, 1", x.index(), f.order())));
    }
    let swap = SquareMatrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
    let diag = SquareMatrix::diagonal(&f, &[x, f.try_inv(x)?]);
    MatrixGroup::generate(&f, 2, vec![swap, diag])
}

/// `<-I, t>` over `F_3`, of order 6.
pub fn example_sec3() -> Result<MatrixGroup> {
    let f = Field::prime(3)?;
    let s = SquareMatrix::from_ints(&f, &[&[2, 0], &[0, 2]]);
    let t = SquareMatrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
    MatrixGroup::generate(&f, 2, vec![s, t])
}

/// Which translations generate the kernel of an extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelParams {
    /// All of `F_q^2`.
    Full,
    Trivial,
    /// The given translation vectors.
    Custom(Vec<[Fe; 2]>),
}

fn translations(f: &Field, params: &KernelParams) -> Vec<[Fe; 2]> {
    match params {
        KernelParams::Full => {
            let mut out = Vec::new();
            let mut c = Fe::ONE;
            for _ in 0..f.ext_degree() {
                out.push([c, Fe::ZERO]);
                out.push([Fe::ZERO, c]);
                c = f.mul(c, f.root());
            }
            out
        }
        KernelParams::Trivial => Vec::new(),
        KernelParams::Custom(v) => v.clone(),
    }
}

fn embed(h: &SquareMatrix, offset: usize) -> SquareMatrix {
    let f = h.field();
    let mut m = SquareMatrix::identity(f, 3);
    for i in 0..2 {
        for j in 0..2 {
            m.set(i + offset, j + offset, h.get(i, j));
        }
    }
    m
}

fn check_two_dimensional(h: &MatrixGroup) -> Result<()> {
    if h.dim() != 2 {
        return Err(Error::DimensionMismatch(format!("H must be 2-dimensional, got {}", h.dim())));
    }
    Ok(())
}

/// `N ⋊ H`: `H` in the upper-left block, `N` the matrices
/// `[[1,0,a],[0,1,b],[0,0,1]]`. The plane `z = 0` is invariant.
pub fn extension_case3(h: &MatrixGroup, kernel: &KernelParams) -> Result<MatrixGroup> {
    check_two_dimensional(h)?;
    let f = h.field();
    let mut gens: Vec<SquareMatrix> = h.generators().iter().map(|g| embed(g, 0)).collect();
    for [a, b] in translations(f, kernel) {
        let mut n = SquareMatrix::identity(f, 3);
        n.set(0, 2, a);
        n.set(1, 2, b);
        gens.push(n);
    }
    MatrixGroup::generate(f, 3, gens)
}

/// `N ⋊ H`: `H` in the lower-right block, `N` the matrices
/// `[[1,a,b],[0,1,0],[0,0,1]]`. The line `<e1>` is invariant.
pub fn extension_case2_dual(h: &MatrixGroup, kernel: &KernelParams) -> Result<MatrixGroup> {
    check_two_dimensional(h)?;
    let f = h.field();
    let mut gens: Vec<SquareMatrix> = h.generators().iter().map(|g| embed(g, 1)).collect();
    for [a, b] in translations(f, kernel) {
        let mut n = SquareMatrix::identity(f, 3);
        n.set(0, 1, a);
        n.set(0, 2, b);
        gens.push(n);
    }
    MatrixGroup::generate(f, 3, gens)
}

/// `<diag(z, z^2)>` over `F_81` with `z` of order 5: a nonmodular cyclic
/// group without pseudoreflections.
pub fn cyclic5_f81() -> Result<MatrixGroup> {
    let f = Field::standard(3, 4)?;
    let z = f.pow(f.primitive_element(), 16);
    MatrixGroup::generate(&f, 2, vec![SquareMatrix::diagonal(&f, &[z, f.mul(z, z)])])
}

fn direct_sum_with_trivial(g: &MatrixGroup) -> Result<MatrixGroup> {
    let one = SquareMatrix::identity(g.field(), 1);
    let gens = g.generators().iter().map(|m| SquareMatrix::direct_sum(m, &one)).collect();
    MatrixGroup::generate(g.field(), g.dim() + 1, gens)
}

fn from_ints(p: u32, gens: &[&[&[i64]]]) -> Result<MatrixGroup> {
    let f = Field::prime(p)?;
    let dim = gens[0].len();
    MatrixGroup::generate(&f, dim, gens.iter().map(|g| SquareMatrix::from_ints(&f, g)).collect())
}

/// Groups of order prime to the characteristic, some generated by
/// pseudoreflections and some not.
pub const NONMODULAR: &[&str] = &[
    "nonmodular-f3-reflection",
    "nonmodular-f3-minus-identity",
    "nonmodular-f3-klein-reflections",
    "nonmodular-f3-swap",
    "nonmodular-f3-dihedral8",
    "nonmodular-f3-quaternion",
    "nonmodular-f3-cyclic4-sl",
    "nonmodular-f3-dim3-half-turn",
    "nonmodular-f5-reflection4",
    "nonmodular-f5-diag-2-3",
    "nonmodular-f5-diag-reflections16",
    "nonmodular-f5-mixed8",
    "nonmodular-f5-s3-permutations",
    "nonmodular-f5-cyclic3-permutation",
    "nonmodular-f7-reflection6",
    "nonmodular-f7-diag-2-4",
    "nonmodular-f4-reflection3",
    "nonmodular-f4-scalar3",
    "cyclic5-f81",
];

const FIXTURES: &[&str] = &[
    "example-sec3",
    "t-only",
    "t-plus-trivial",
    "sec3-plus-trivial",
    "trivial-dim2-f3",
    "trivial-dim3-f3",
    "diag-1-2-f3",
    "sl2-2",
    "sl2-3",
    "sl2-4",
    "sl2-5",
    "sl2-7",
    "sl2-8",
    "sl2-9",
    "binary-icosahedral-f9",
    "imprimitive-f4",
    "imprimitive-f8",
    "ext-case3-sl2-3",
    "ext-case2-dual-sl2-3",
    "ext-case3-sl2-3-trivial-kernel",
];

/// Every name accepted by [`build`], fixtures first.
pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().chain(NONMODULAR).copied().collect()
}

pub fn build(name: &str) -> Result<MatrixGroup> {
    let t: &[&[i64]] = &[&[1, 1], &[0, 1]];
    match name {
        "example-sec3" => example_sec3(),
        "t-only" => from_ints(3, &[t]),
        "t-plus-trivial" => direct_sum_with_trivial(&from_ints(3, &[t])?),
        "sec3-plus-trivial" => direct_sum_with_trivial(&example_sec3()?),
        "trivial-dim2-f3" => Ok(MatrixGroup::trivial(&Field::prime(3)?, 2)),
        "trivial-dim3-f3" => Ok(MatrixGroup::trivial(&Field::prime(3)?, 3)),
        "diag-1-2-f3" => from_ints(3, &[&[&[1, 0], &[0, 2]]]),
        "binary-icosahedral-f9" => binary_icosahedral_char3(),
        "imprimitive-f4" => imprimitive_char2(2, Field::standard(2, 2)?.root()),
        "imprimitive-f8" => imprimitive_char2(3, Field::standard(2, 3)?.root()),
        "ext-case3-sl2-3" => extension_case3(&sl2(3)?, &KernelParams::Full),
        "ext-case2-dual-sl2-3" => extension_case2_dual(&sl2(3)?, &KernelParams::Full),
        "ext-case3-sl2-3-trivial-kernel" => extension_case3(&sl2(3)?, &KernelParams::Trivial),
        "nonmodular-f3-reflection" => from_ints(3, &[&[&[2, 0], &[0, 1]]]),
        "nonmodular-f3-minus-identity" => from_ints(3, &[&[&[2, 0], &[0, 2]]]),
        "nonmodular-f3-klein-reflections" => from_ints(3, &[&[&[2, 0], &[0, 1]], &[&[1, 0], &[0, 2]]]),
        "nonmodular-f3-swap" => from_ints(3, &[&[&[0, 1], &[1, 0]]]),
        "nonmodular-f3-dihedral8" => from_ints(3, &[&[&[0, 1], &[1, 0]], &[&[2, 0], &[0, 1]]]),
        "nonmodular-f3-quaternion" => from_ints(3, &[&[&[0, 2], &[1, 0]], &[&[1, 1], &[1, 2]]]),
        "nonmodular-f3-cyclic4-sl" => from_ints(3, &[&[&[0, 2], &[1, 0]]]),
        "nonmodular-f3-dim3-half-turn" => from_ints(3, &[&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 1]]]),
        "nonmodular-f5-reflection4" => from_ints(5, &[&[&[2, 0], &[0, 1]]]),
        "nonmodular-f5-diag-2-3" => from_ints(5, &[&[&[2, 0], &[0, 3]]]),
        "nonmodular-f5-diag-reflections16" => from_ints(5, &[&[&[2, 0], &[0, 1]], &[&[1, 0], &[0, 2]]]),
        "nonmodular-f5-mixed8" => from_ints(5, &[&[&[4, 0], &[0, 1]], &[&[2, 0], &[0, 2]]]),
        "nonmodular-f5-s3-permutations" => {
            from_ints(5, &[&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]], &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]])
        }
        "nonmodular-f5-cyclic3-permutation" => from_ints(5, &[&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]]),
        "nonmodular-f7-reflection6" => from_ints(7, &[&[&[3, 0], &[0, 1]]]),
        "nonmodular-f7-diag-2-4" => from_ints(7, &[&[&[2, 0], &[0, 4]]]),
        "nonmodular-f4-reflection3" => {
            let f = Field::standard(2, 2)?;
            MatrixGroup::generate(&f, 2, vec![SquareMatrix::diagonal(&f, &[f.root(), Fe::ONE])])
        }
        "nonmodular-f4-scalar3" => {
            let f = Field::standard(2, 2)?;
            MatrixGroup::generate(&f, 2, vec![SquareMatrix::diagonal(&f, &[f.root(), f.root()])])
        }
        "cyclic5-f81" => cyclic5_f81(),
        _ => match name.strip_prefix("sl2-").and_then(|q| q.parse::<usize>().ok()) {
            Some(q) => sl2(q),
            None => Err(Error::InvalidInput(format!("unknown catalog group {name:?}"))),
        },
    }
}
