//! Reproducible checks of the worked examples: the transvection-lift
//! identities, the order-6 example in characteristic 3, the splitting of the
//! two extension families and the induced action on kernel invariants.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{first_generating_transvection_pair, split_extension, verify_ting_identities, TingCase};
use crate::invariants::{decide_polynomiality, PolynomialityOptions, PolynomialityStatus};
use crate::linalg::{SquareMatrix, Subspace};
use crate::poly::{act, is_invariant_under, Multipoly};
use crate::singularity::{classify, main_gen_case, main_gen_pipeline, MainGenCase, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReplayCase {
    All,
    Ting1,
    Ting2,
    Ting3,
    Sec3,
    Splitting,
    Induced,
}

impl FromStr for ReplayCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => ReplayCase::All,
            "ting1" => ReplayCase::Ting1,
            "ting2" => ReplayCase::Ting2,
            "ting3" => ReplayCase::Ting3,
            "sec3" => ReplayCase::Sec3,
            "splitting" => ReplayCase::Splitting,
            "induced" => ReplayCase::Induced,
            _ => return Err(Error::InvalidInput(format!("unknown case {s:?}"))),
        })
    }
}

impl fmt::Display for ReplayCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).map_err(|_| fmt::Error)?;
        f.write_str(s.as_str().unwrap_or_default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayCheck {
    pub case: ReplayCase,
    pub context: String,
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

struct Log {
    case: ReplayCase,
    context: String,
    out: Vec<ReplayCheck>,
}

impl Log {
    fn check(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.out.push(ReplayCheck {
            case: self.case,
            context: self.context.clone(),
            name: name.to_string(),
            holds,
            detail: detail.into(),
        });
    }
}

pub fn replay(case: ReplayCase) -> Result<Vec<ReplayCheck>> {
    let cases = match case {
        ReplayCase::All => vec![
            ReplayCase::Ting1,
            ReplayCase::Ting2,
            ReplayCase::Ting3,
            ReplayCase::Sec3,
            ReplayCase::Splitting,
            ReplayCase::Induced,
        ],
        c => vec![c],
    };
    let mut out = Vec::new();
    for c in cases {
        match c {
            ReplayCase::Ting1 => {
                for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
                    out.extend(ting(c, TingCase::SpecialLinear, &Field::standard(p, m)?)?);
                }
            }
            ReplayCase::Ting2 => out.extend(ting(c, TingCase::BinaryIcosahedral, &Field::standard(3, 2)?)?),
            ReplayCase::Ting3 => {
                for m in [2, 3] {
                    out.extend(ting(c, TingCase::Imprimitive, &Field::standard(2, m)?)?);
                }
            }
            ReplayCase::Sec3 => out.extend(sec3()?),
            ReplayCase::Splitting => {
                for name in ["ext-case3-sl2-3", "ext-case2-dual-sl2-3"] {
                    out.extend(splitting(name)?);
                }
            }
            ReplayCase::Induced => {
                for name in ["ext-case3-sl2-3", "ext-case2-dual-sl2-3"] {
                    out.extend(induced(name)?);
                }
            }
            ReplayCase::All => unreachable!(),
        }
    }
    Ok(out)
}

fn ting(case: ReplayCase, which: TingCase, field: &Field) -> Result<Vec<ReplayCheck>> {
    Ok(verify_ting_identities(which, field)?
        .into_iter()
        .map(|c| {
            let mut detail = c.computed;
            if let Some(p) = c.printed_variant {
                detail.push_str(&format!("; printed form \"{}\" holds: {}", p.statement, p.holds));
            }
            ReplayCheck {
                case,
                context: format!("F_{}, {}", field.order(), c.parameters),
                name: c.name,
                holds: c.holds,
                detail,
            }
        })
        .collect())
}

fn sec3() -> Result<Vec<ReplayCheck>> {
    let g = catalog::example_sec3()?;
    let f = g.field().clone();
    let mut log = Log { case: ReplayCase::Sec3, context: "F_3, G = <-I, t>".into(), out: Vec::new() };
    let opts = PolynomialityOptions::default();
    let x = Multipoly::var(&f, 2, 0);
    let y = Multipoly::var(&f, 2, 1);
    let lin = |a: i64, b: i64| Multipoly::linear_form(&f, &[f.from_int(a), f.from_int(b)]);
    let f1 = x.mul(&lin(1, 1)).mul(&lin(1, 2));
    let f2 = y.clone();

    log.check("|G| = 6", g.order() == 6, g.order().to_string());
    let h = g.pseudoreflection_subgroup();
    let t = SquareMatrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
    log.check("H = <t> has order 3", h.order() == 3 && h.contains(&t), h.order().to_string());
    let inv = is_invariant_under(&f1, h.generators())? && is_invariant_under(&f2, h.generators())?;
    log.check("x(x+y)(x+2y) and y are H-invariant", inv, format!("f1 = {f1}"));
    let hv = decide_polynomiality(&h, &opts)?;
    log.check(
        "S^H is polynomial in degrees 1, 3",
        hv.is_polynomial() && hv.generator_degrees == [1, 3],
        format!("{:?}", hv.generator_degrees),
    );
    let s = SquareMatrix::from_ints(&f, &[&[2, 0], &[0, 2]]);
    let minus = act(&s, &f1)? == f1.neg() && act(&s, &f2)? == f2.neg();
    log.check("-I acts by f1 -> -f1, f2 -> -f2", minus, "");
    let gv = decide_polynomiality(&g, &opts)?;
    log.check(
        "S^G is not polynomial, minimal generators in degrees 2, 4, 6",
        gv.status == PolynomialityStatus::NotPolynomial && gv.generator_degrees == [2, 4, 6],
        format!("{:?}", gv.generator_degrees),
    );
    let report = classify(&g, &opts)?;
    log.check("V/G has an isolated singularity", report.verdict == Verdict::Isolated, report.verdict.to_string());
    Ok(log.out)
}

fn splitting(name: &str) -> Result<Vec<ReplayCheck>> {
    let g = catalog::build(name)?;
    let f = g.field().clone();
    let mut log = Log { case: ReplayCase::Splitting, context: name.to_string(), out: Vec::new() };
    let reduced = match main_gen_case(&g)?.kind {
        MainGenCase::InvariantPlaneTransvective => g.restriction_kernel(&Subspace::coordinate(&f, 3, &[0, 1]))?,
        _ => g.quotient_kernel(&Subspace::coordinate(&f, 3, &[0]))?,
    };
    log.check(
        "|kernel| * |image| = |G|",
        reduced.kernel.order() * reduced.image.order() == g.order(),
        format!("{} * {}", reduced.kernel.order(), reduced.image.order()),
    );
    let Some((t, s)) = first_generating_transvection_pair(&reduced.image) else {
        log.check("image generated by two noncommuting transvections", false, "");
        return Ok(log.out);
    };
    log.check("image generated by two noncommuting transvections", !t.commutes_with(&s), format!("{t}, {s}"));
    let lifts = g.find_transvection_lifts(&reduced.action, &[t, s])?;
    log.check("both generators have transvection lifts", lifts.is_some(), "");
    let Some(lifts) = lifts else { return Ok(log.out) };
    match split_extension(&g, &reduced.kernel, lifts) {
        Ok(split) => {
            log.check(
                "lifts generate a complement to the kernel",
                true,
                format!("|N| = {}, |C| = {}", split.kernel.order(), split.complement.order()),
            );
            let unique = g.elements().iter().all(|x| {
                split.factor(x).is_some_and(|(n, c)| n.mul(&c) == *x)
            });
            log.check("every element factors as kernel times complement", unique, "");
        }
        Err(e) => log.check("lifts generate a complement to the kernel", false, e.to_string()),
    }
    Ok(log.out)
}

fn induced(name: &str) -> Result<Vec<ReplayCheck>> {
    let g = catalog::build(name)?;
    let opts = PolynomialityOptions::default();
    let mut log = Log { case: ReplayCase::Induced, context: name.to_string(), out: Vec::new() };
    let case = main_gen_case(&g)?;
    let rec = main_gen_pipeline(&g, &case, &opts)?;
    log.check("extension program completes", rec.completed, rec.failure.clone().unwrap_or_default());
    let degree_product: u32 = rec.kernel_invariant_degrees.iter().product();
    log.check(
        "kernel invariant degrees multiply to |N|",
        degree_product as usize == rec.kernel_order,
        format!("{:?}", rec.kernel_invariant_degrees),
    );
    log.check("induced action is linear", rec.induced_failures.is_empty(), rec.induced_failures.join("; "));
    let expected = if case.kind == MainGenCase::InvariantPlaneTransvective { vec![2, 1] } else { vec![1, 2] };
    log.check("induced action is block diagonal", rec.block_dims() == expected, format!("{:?}", rec.block_dims()));
    log.check(
        "quotient by the complement is smooth",
        rec.quotient_invariants == Some(PolynomialityStatus::Polynomial),
        format!("{:?}", rec.quotient_invariants),
    );
    log.check(
        "V/G is smooth",
        rec.group_invariants == Some(PolynomialityStatus::Polynomial),
        format!("{:?}", rec.group_invariants),
    );
    Ok(log.out)
}
