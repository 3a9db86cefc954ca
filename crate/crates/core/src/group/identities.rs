//! Replay of the matrix identities behind the existence of transvection
//! lifts for the three families of two-dimensional transvection groups.
//!
//! Each family fixes non-transvection lifts `t~`, `s~` of the generators
//! `t`, `s` of `H` to `GL(3)` depending on a parameter `mu`, and the
//! identities show that products of them land in the kernel `N`, from which
//! an honest transvection lift is assembled.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::SquareMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TingCase {
    /// `H = SL(2, q)`, `q` odd.
    SpecialLinear,
    /// `H` the binary icosahedral group inside `SL(2, 9)`.
    BinaryIcosahedral,
    /// `H` imprimitive in characteristic 2.
    Imprimitive,
}

impl fmt::Display for TingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TingCase::SpecialLinear => "case 1 (SL(2,q), q odd)",
            TingCase::BinaryIcosahedral => "case 2 (binary icosahedral, F_9)",
            TingCase::Imprimitive => "case 3 (imprimitive, char 2)",
        })
    }
}

/// A published form of an identity that differs from the one that holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedVariant {
    pub statement: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub case: TingCase,
    pub parameters: String,
    pub name: String,
    pub holds: bool,
    /// The computed left-hand side.
    pub computed: String,
    pub printed_variant: Option<PrintedVariant>,
}

struct Recorder<'a> {
    case: TingCase,
    parameters: String,
    out: &'a mut Vec<IdentityCheck>,
}

impl Recorder<'_> {
    fn equal(&mut self, name: &str, computed: &SquareMatrix, expected: &SquareMatrix) {
        self.push(name, computed == expected, computed, None);
    }

    fn push(&mut self, name: &str, holds: bool, computed: &SquareMatrix, printed: Option<PrintedVariant>) {
        self.out.push(IdentityCheck {
            case: self.case,
            parameters: self.parameters.clone(),
            name: name.to_string(),
            holds,
            computed: computed.to_string(),
            printed_variant: printed,
        });
    }

    /// `m` is a transvection whose upper-left 2x2 block is `target`.
    fn transvection_lift(&mut self, name: &str, m: &SquareMatrix, target: &SquareMatrix) {
        let block_ok = (0..2).all(|i| (0..2).all(|j| m.get(i, j) == target.get(i, j)));
        self.push(name, m.is_transvection() && block_ok, m, None);
    }
}

fn m3(f: &Field, rows: [[Fe; 3]; 3]) -> SquareMatrix {
    SquareMatrix::from_rows(f, rows.iter().map(|r| r.to_vec()).collect()).expect("3x3 rows")
}

fn m2(f: &Field, rows: [[Fe; 2]; 2]) -> SquareMatrix {
    SquareMatrix::from_rows(f, rows.iter().map(|r| r.to_vec()).collect()).expect("2x2 rows")
}

fn inv(m: &SquareMatrix) -> SquareMatrix {
    m.inverse().expect("identity replay matrices are invertible")
}

fn pow(m: &SquareMatrix, e: i64) -> SquareMatrix {
    m.pow(e).expect("identity replay matrices are invertible")
}

/// Replays every displayed identity of `case` for all admissible parameter
/// values over `field`.
pub fn verify_ting_identities(case: TingCase, field: &Field) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    match case {
        TingCase::SpecialLinear => {
            if field.characteristic() == 2 {
                return Err(Error::Unsupported("case 1 needs odd characteristic".into()));
            }
            for mu in field.nonzero_elements() {
                let mut rec = Recorder { case, parameters: format!("mu={}", field.render(mu)), out: &mut out };
                special_linear(field, mu, &mut rec);
            }
        }
        TingCase::BinaryIcosahedral => {
            if field.characteristic() != 3 || field.ext_degree() != 2 || field.spec().min_poly != [2, 1, 1] {
                return Err(Error::Unsupported("case 2 needs F_9 = F_3[a]/(a^2+a+2)".into()));
            }
            for mu in field.nonzero_elements() {
                let mut rec = Recorder { case, parameters: format!("mu={}", field.render(mu)), out: &mut out };
                binary_icosahedral(field, mu, &mut rec);
            }
        }
        TingCase::Imprimitive => {
            if field.characteristic() != 2 || field.order() < 4 {
                return Err(Error::Unsupported("case 3 needs a field of characteristic 2 with more than 2 elements".into()));
            }
            let admissible: Vec<Fe> = field.elements().filter(|&e| e != Fe::ZERO && e != Fe::ONE).collect();
            for &x in &admissible {
                for &mu in &admissible {
                    let parameters = format!("x={}, mu={}", field.render(x), field.render(mu));
                    let mut rec = Recorder { case, parameters, out: &mut out };
                    imprimitive(field, x, mu, &mut rec);
                }
            }
        }
    }
    Ok(out)
}

fn special_linear(f: &Field, mu: Fe, rec: &mut Recorder<'_>) {
    let i = |n: i64| f.from_int(n);
    let (z, o) = (Fe::ZERO, Fe::ONE);
    let tt = m3(f, [[o, o, z], [z, o, o], [z, z, o]]);
    let st = m3(f, [[o, z, mu], [o, o, z], [z, z, o]]);
    let (tt_inv, st_inv) = (inv(&tt), inv(&st));

    rec.equal("t~^-1 s~ t~", &tt_inv.mul(&st).mul(&tt), &m3(f, [[z, i(-1), mu], [o, i(2), z], [z, z, o]]));
    rec.equal("s~^-1 t~ s~", &st_inv.mul(&tt).mul(&st), &m3(f, [[i(2), o, z], [i(-1), z, o], [z, z, o]]));
    let u = tt_inv.mul(&st).mul(&tt).mul(&st_inv).mul(&tt).mul(&st);
    rec.equal("u = t~^-1 s~ t~ s~^-1 t~ s~", &u, &m3(f, [[o, z, f.sub(mu, o)], [z, o, i(2)], [z, z, o]]));
    rec.equal("u^-1 s~", &inv(&u).mul(&st), &m3(f, [[o, z, o], [o, o, i(-2)], [z, z, o]]));
    let u1 = m3(f, [[o, z, z], [z, o, i(-1)], [z, z, o]]);
    rec.transvection_lift("u1 t~ is a transvection restricting to t", &u1.mul(&tt), &m2(f, [[o, o], [z, o]]));
}

fn binary_icosahedral(f: &Field, mu: Fe, rec: &mut Recorder<'_>) {
    let i = |n: i64| f.from_int(n);
    let a = f.root();
    let lin = |c1: i64, c0: i64| f.add(f.mul(i(c1), a), i(c0));
    let (z, o, two) = (Fe::ZERO, Fe::ONE, i(2));
    let lam = lin(1, 2);
    let tt = m3(f, [[o, o, z], [z, o, o], [z, z, o]]);
    let st = m3(f, [[o, z, mu], [lam, o, z], [z, z, o]]);

    let ts5 = pow(&tt.mul(&st), 5);
    let st5 = pow(&st.mul(&tt), 5);
    rec.equal("(t~ s~)^5", &ts5, &m3(f, [[two, z, lin(2, 1)], [z, two, f.add(mu, two)], [z, z, o]]));
    let e13 = f.add(lin(2, 1), f.mul(two, mu));
    rec.equal("(s~ t~)^5", &st5, &m3(f, [[two, z, e13], [z, two, mu], [z, z, o]]));
    let u = ts5.mul(&st5);
    rec.equal("u = (t~ s~)^5 (s~ t~)^5", &u, &m3(f, [[o, z, mu], [z, o, two], [z, z, o]]));

    // The displayed matrix for u~ equals u^-1 s~; the product u s~ as
    // printed alongside it does not.
    let ut_displayed = m3(f, [[o, z, z], [lam, o, o], [z, z, o]]);
    let ut = inv(&u).mul(&st);
    rec.push(
        "u~ = u^-1 s~",
        ut == ut_displayed,
        &ut,
        Some(PrintedVariant { statement: "u~ = u s~".into(), holds: u.mul(&st) == ut_displayed }),
    );

    let tu5 = pow(&tt.mul(&ut), 5);
    let ut5 = pow(&ut.mul(&tt), 5);
    let tu5_printed = m3(f, [[two, z, lin(2, 1)], [z, two, two], [z, z, o]]);
    rec.push(
        "(t~ u~)^5",
        tu5 == m3(f, [[two, z, lin(1, 2)], [z, two, two], [z, z, o]]),
        &tu5,
        Some(PrintedVariant { statement: "(t~ u~)^5 with (1,3) entry 2a+1".into(), holds: tu5 == tu5_printed }),
    );
    rec.equal("(u~ t~)^5", &ut5, &m3(f, [[two, z, lin(1, 2)], [z, two, z], [z, z, o]]));
    let u1 = tu5.mul(&ut5);
    rec.equal("u1 = (t~ u~)^5 (u~ t~)^5", &u1, &m3(f, [[o, z, z], [z, o, two], [z, z, o]]));
    let lift = inv(&inv(&u1).mul(&u)).mul(&st);
    rec.transvection_lift("(u1^-1 u)^-1 s~ is a transvection restricting to s", &lift, &m2(f, [[o, z], [lam, o]]));
}

fn imprimitive(f: &Field, x: Fe, mu: Fe, rec: &mut Recorder<'_>) {
    let (z, o) = (Fe::ZERO, Fe::ONE);
    let mu_inv = f.inv(mu).expect("mu is nonzero");
    let x_inv = f.inv(x).expect("x is nonzero");
    let tt = m3(f, [[z, o, mu], [o, z, mu_inv], [z, z, o]]);
    let st = SquareMatrix::diagonal(f, &[x, x_inv, o]);

    let c = f.add(mu, mu_inv);
    rec.equal("t~^2", &tt.mul(&tt), &m3(f, [[o, z, c], [z, o, c], [z, z, o]]));
    let sq = st.mul(&tt);
    let e13 = f.add(mu_inv, f.mul(x, mu));
    let e23 = f.add(mu, f.mul(x_inv, mu_inv));
    rec.equal("(s~ t~)^2", &sq.mul(&sq), &m3(f, [[o, z, e13], [z, o, e23], [z, z, o]]));
    let u = m3(f, [[o, z, mu], [z, o, mu_inv], [z, z, o]]);
    rec.transvection_lift("u t~ is a transvection restricting to t", &u.mul(&tt), &m2(f, [[z, o], [o, z]]));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case1_at_mu_2_over_f3() {
        let f = Field::prime(3).unwrap();
        let checks = verify_ting_identities(TingCase::SpecialLinear, &f).unwrap();
        let u = checks.iter().find(|c| c.parameters == "mu=2" && c.name.starts_with("u =")).unwrap();
        assert!(u.holds);
        assert_eq!(u.computed, "[[1, 0, 1], [0, 1, 2], [0, 0, 1]]");
        assert!(checks.iter().all(|c| c.holds), "{checks:#?}");
    }

    #[test]
    fn case2_u1_at_mu_1() {
        let f = Field::standard(3, 2).unwrap();
        let checks = verify_ting_identities(TingCase::BinaryIcosahedral, &f).unwrap();
        let u1 = checks.iter().find(|c| c.parameters == "mu=1" && c.name.starts_with("u1 =")).unwrap();
        assert_eq!(u1.computed, "[[1, 0, 0], [0, 1, 2], [0, 0, 1]]");
        assert!(checks.iter().all(|c| c.holds), "{checks:#?}");
        // both printed variants fail for every mu
        let printed: Vec<_> = checks.iter().filter_map(|c| c.printed_variant.as_ref()).collect();
        assert_eq!(printed.len(), 16);
        assert!(printed.iter().all(|p| !p.holds));
    }

    #[test]
    fn case3_over_f4() {
        let f = Field::standard(2, 2).unwrap();
        let checks = verify_ting_identities(TingCase::Imprimitive, &f).unwrap();
        assert_eq!(checks.len(), 4 * 3);
        assert!(checks.iter().all(|c| c.holds));
        // t~^2 at mu = a: mu + mu^-1 = a + (a+1) = 1
        let sq = checks.iter().find(|c| c.name == "t~^2" && c.parameters.ends_with("mu=a")).unwrap();
        assert_eq!(sq.computed, "[[1, 0, 1], [0, 1, 1], [0, 0, 1]]");
    }

    #[test]
    fn wrong_fields_are_rejected() {
        let f2 = Field::prime(2).unwrap();
        assert!(verify_ting_identities(TingCase::SpecialLinear, &f2).is_err());
        assert!(verify_ting_identities(TingCase::Imprimitive, &f2).is_err());
        assert!(verify_ting_identities(TingCase::BinaryIcosahedral, &Field::prime(3).unwrap()).is_err());
    }
}
