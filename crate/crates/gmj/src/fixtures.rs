//! Reference transition tables for two colours at degrees 1 and 2.
//!
//! Entries are canonical strings in `a = q^(1/4)`, `b = t^(1/4)`, `u1`,
//! `u2` (Macdonald) or `beta`, `up1`, `up2` (Jack). Only the strictly upper
//! triangle is listed, row by row; the diagonal is 1 and the rest is 0.
//! Transcription rules: `q -> a^4`, `t -> b^4`, `(t/q)^(1/2) -> b^2*a^(-2)`,
//! `(t/q)^(-1/2) -> a^2*b^(-2)`.

use gmj_core::eigen::EigenKind;
use gmj_core::field::{real_from_rbig, real_to_f64, FieldError, FieldMode, NumericPoint, RationalFunction, VarSet};
use dashu_int::IBig;
use dashu_ratio::RBig;

pub struct Fixture {
    pub name: &'static str,
    pub kind: EigenKind,
    pub n: usize,
    pub degree: u32,
    pub upper: &'static [&'static str],
    /// Listed entries known to be misprinted; `upper` keeps the printed form.
    pub errata: &'static [Erratum],
}

pub struct Erratum {
    pub row: usize,
    pub col: usize,
    pub corrected: &'static str,
    pub reason: &'static str,
}

const M2_QT_ERRATA: &[Erratum] = &[Erratum {
    row: 2,
    col: 4,
    corrected: "b^2*a^(-2)*(a^4-b^4)*((1+a^4+(a^4-1)*b^4)*u1-2*b^4*u2)*u2/(b^4*(a^4*u1-u2)*(-u1+b^4*u2))",
    reason: "printed entry scales with degree -1 under u_i -> s*u_i, but X0 is linear in the u_i so every \
             eigenfunction coefficient has degree 0; the corrected entry restores the factor u2 shared by its row",
}];

const M1_QT: &[&str] = &["b^2*a^(-2)*(b^4-a^4)*u2/(b^4*(u1-u2))"];

const M2_QT: &[&str] = &[
    // row (),(2)
    "(1+a^4)*(b^4-1)/(a^4*b^4-1)",
    "a^2*b^(-2)*(1+a^4)*(a^4-b^4)*(b^4-1)*u2/((1-a^4*b^4)*(u1-a^4*u2))",
    "(a^4-b^4)*((1-a^8)*b^4*u1-a^4*(b^8-a^4*(1+a^4)*b^4+a^4)*u2)*u2/(a^4*b^4*(a^4*b^4-1)*(u1-u2)*(u1-a^4*u2))",
    "(1+a^4)*(a^4-b^4)*(b^4-1)*((a^4-1)*b^4*u1+a^4*(a^4-b^4)*u2)*u2/(a^4*b^4*(a^4*b^4-1)*(u1-u2)*(u1-a^4*u2))",
    // row (),(1,1)
    "b^2*a^(-2)*(b^4-a^4)*u2/(b^4*(b^4*u1-u2))",
    "(a^4-b^4)*u2/(a^4*(b^4*u1-u2))",
    "(a^4-b^4)*(a^4*u2-b^4*((b^4-1)*u1+u2))*u2/(a^4*b^4*(u1-u2)*(b^4*u1-u2))",
    // row (1),(1)
    "b^2*a^(-2)*(b^4-a^4)*u2/(b^4*(a^4*u1-u2))",
    "b^2*a^(-2)*(a^4-b^4)*((1+a^4+(a^4-1)*b^4)*u1-2*b^4*u2)/(b^4*(a^4*u1-u2)*(-u1+b^4*u2))",
    // row (2),()
    "(1+a^4)*(b^4-1)/(a^4*b^4-1)",
];

const M1_BETA: &[&str] = &["(1-beta)/(-up1+up2)"];

const M2_BETA: &[&str] = &[
    "2*beta/(1+beta)",
    "2*beta*(1-beta)/((1+beta)*(1-up1+up2))",
    "(1-beta)*(2+beta-beta^2-2*up1+2*up2)/((1+beta)*(up1-up2)*(-1+up1-up2))",
    "2*beta*(2-3*beta+beta^2)/((1+beta)*(up1-up2)*(-1+up1-up2))",
    "(1-beta)/(-beta-up1+up2)",
    "(1-beta)/(beta+up1-up2)",
    "(-1+3*beta-2*beta^2)/((up1-up2)*(-beta-up1+up2))",
    "(1-beta)/(-1-up1+up2)",
    "2*(1-beta)*(-1+beta-up1+up2)/((-1-up1+up2)*(beta-up1+up2))",
    "2*beta/(1+beta)",
];

pub const FIXTURES: [Fixture; 4] = [
    Fixture { name: "M1_qt", kind: EigenKind::MacdonaldP, n: 2, degree: 1, upper: M1_QT, errata: &[] },
    Fixture { name: "M2_qt", kind: EigenKind::MacdonaldP, n: 2, degree: 2, upper: M2_QT, errata: M2_QT_ERRATA },
    Fixture { name: "M1_beta", kind: EigenKind::JackJ, n: 2, degree: 1, upper: M1_BETA, errata: &[] },
    Fixture { name: "M2_beta", kind: EigenKind::JackJ, n: 2, degree: 2, upper: M2_BETA, errata: &[] },
];

impl Fixture {
    pub fn vars(&self) -> VarSet {
        self.kind.vars(self.n)
    }

    pub fn dim(&self) -> usize {
        // dim (dim - 1) / 2 listed entries
        (1..).find(|d| d * (d - 1) / 2 == self.upper.len()).expect("triangular count")
    }

    /// The full matrix as strings.
    pub fn strings(&self) -> Vec<Vec<String>> {
        let dim = self.dim();
        let mut upper = self.upper.iter();
        (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| match j.cmp(&i) {
                        std::cmp::Ordering::Less => "0".to_owned(),
                        std::cmp::Ordering::Equal => "1".to_owned(),
                        std::cmp::Ordering::Greater => upper.next().expect("listed entry").to_string(),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn matrix(&self) -> Result<Vec<Vec<RationalFunction>>, FieldError> {
        let vars = self.vars();
        self.strings()
            .iter()
            .map(|r| r.iter().map(|s| vars.parse(s)).collect())
            .collect()
    }
}

/// The degree `k` with `f(s u) = s^k f(u)`, probed numerically at a fixed
/// generic point with `s = 2`. Macdonald mode only; `None` if `f` is not
/// homogeneous in the `u_i` or vanishes there.
pub fn u_scaling_degree(f: &RationalFunction, vars: &VarSet) -> Result<Option<i32>, FieldError> {
    assert_eq!(vars.mode(), FieldMode::Macdonald, "u-scaling is a Macdonald-mode notion");
    let point = |s: i64| {
        let mut values = vec![rat(3, 2), rat(5, 3)];
        values.extend((0..vars.colors()).map(|i| rat(s * (7 + 4 * i as i64), 5 + 2 * i as i64)));
        NumericPoint::new(*vars, values)
    };
    let base = real_to_f64(&point(1).eval(f)?);
    let scaled = real_to_f64(&point(2).eval(f)?);
    if base == 0.0 {
        return Ok(None);
    }
    let k = (scaled / base).abs().log2();
    let rounded = k.round();
    Ok(((k - rounded).abs() < 1e-9 && scaled / base > 0.0).then_some(rounded as i32))
}

fn rat(n: i64, d: i64) -> gmj_core::field::Real {
    real_from_rbig(&RBig::from_parts(IBig::from(n), d.unsigned_abs().into()))
}
