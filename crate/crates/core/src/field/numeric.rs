//! High-precision floating-point evaluation of rational functions.

use alloc::string::String;
use alloc::vec::Vec;

use dashu_float::FBig;
use dashu_int::IBig;
use dashu_ratio::RBig;

use super::poly::{Poly, MAX_VARS};
use super::rational::RationalFunction;
use super::vars::{FieldMode, VarSet};
use super::FieldError;

/// Working precision in bits (about 77 significant decimal digits).
pub const PRECISION_BITS: usize = 256;

/// Significant decimal digits carried by `PRECISION_BITS`.
pub const PRECISION_DIGITS: usize = 77;

/// Denominators with magnitude below this are treated as poles.
pub const POLE_TOLERANCE_EXP10: i32 = -30;

pub type Real = FBig;

pub fn real_from_ibig(n: &IBig) -> Real {
    FBig::from(n.clone()).with_precision(PRECISION_BITS).value()
}

pub fn real_from_rbig(r: &RBig) -> Real {
    let n = real_from_ibig(r.numerator());
    let d = real_from_ibig(&IBig::from(r.denominator().clone()));
    n / d
}

pub fn real_from_i64(n: i64) -> Real {
    real_from_ibig(&IBig::from(n))
}

pub fn real_abs(x: &Real) -> Real {
    if x < &real_from_i64(0) {
        -x.clone()
    } else {
        x.clone()
    }
}

pub fn real_to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

fn pole_tolerance() -> Real {
    real_from_i64(1) / real_from_i64(10).powi(IBig::from(-POLE_TOLERANCE_EXP10))
}

/// A numeric assignment of every variable of a `VarSet`.
#[derive(Clone, Debug)]
pub struct NumericPoint {
    vars: VarSet,
    values: Vec<Real>,
}

impl NumericPoint {
    /// Direct assignment, one value per variable of `vars` in index order.
    pub fn new(vars: VarSet, values: Vec<Real>) -> Self {
        assert_eq!(values.len(), vars.len(), "one value per variable");
        NumericPoint { vars, values }
    }

    /// The specialization `q = e^hbar`, `t = q^beta`, `u_i = q^{u'_i}`,
    /// i.e. `a = e^{hbar/4}`, `b = e^{beta hbar/4}`.
    pub fn macdonald_specialization(hbar: &RBig, beta: &RBig, uprimes: &[RBig]) -> Self {
        let vars = VarSet::macdonald(uprimes.len());
        let h = real_from_rbig(hbar);
        let quarter = real_from_rbig(&RBig::from_parts(IBig::ONE, 4u8.into()));
        let mut values = Vec::with_capacity(vars.len());
        values.push((&h * &quarter).exp());
        values.push((&h * &quarter * real_from_rbig(beta)).exp());
        for up in uprimes {
            values.push((&h * real_from_rbig(up)).exp());
        }
        NumericPoint { vars, values }
    }

    /// The Jack-side point `beta`, `u'_i`.
    pub fn jack_point(beta: &RBig, uprimes: &[RBig]) -> Self {
        let vars = VarSet::jack(uprimes.len());
        let mut values = Vec::with_capacity(vars.len());
        values.push(real_from_rbig(beta));
        values.extend(uprimes.iter().map(real_from_rbig));
        NumericPoint { vars, values }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn value(&self, index: usize) -> &Real {
        &self.values[index]
    }

    /// `q = a^4` at a Macdonald point.
    pub fn q(&self) -> Real {
        debug_assert_eq!(self.vars.mode(), FieldMode::Macdonald);
        self.values[0].powi(IBig::from(4))
    }

    /// `t = b^4` at a Macdonald point.
    pub fn t(&self) -> Real {
        debug_assert_eq!(self.vars.mode(), FieldMode::Macdonald);
        self.values[1].powi(IBig::from(4))
    }

    pub fn eval_poly(&self, p: &Poly) -> Real {
        let mut powers: [Vec<Real>; MAX_VARS] = Default::default();
        for (v, slot) in powers.iter_mut().enumerate() {
            let d = p.degree_in(v) as usize;
            if d == 0 {
                continue;
            }
            assert!(v < self.values.len(), "polynomial uses an unassigned variable");
            slot.push(real_from_i64(1));
            for k in 1..=d {
                let next = &slot[k - 1] * &self.values[v];
                slot.push(next);
            }
        }
        let mut acc = real_from_i64(0);
        for (m, c) in p.terms() {
            let mut term = real_from_ibig(c);
            for (v, pw) in powers.iter().enumerate() {
                let e = m.exp(v) as usize;
                if e > 0 {
                    term *= &pw[e];
                }
            }
            acc += term;
        }
        acc
    }

    /// Evaluates `f`, rejecting points where the denominator is within
    /// `1e-30` of zero.
    pub fn eval(&self, f: &RationalFunction) -> Result<Real, FieldError> {
        let den = self.eval_poly(f.denominator());
        if real_abs(&den) < pole_tolerance() {
            return Err(FieldError::Pole {
                factor: self.vars.format_poly(f.denominator()),
            });
        }
        Ok(self.eval_poly(f.numerator()) / den)
    }
}

/// Shorthand for `point.eval(f)`.
pub fn rf_evaluate(f: &RationalFunction, point: &NumericPoint) -> Result<Real, FieldError> {
    point.eval(f)
}

/// Precision metadata attached to numeric reports.
pub fn precision_note() -> String {
    alloc::format!("{} bits (~{} significant digits)", PRECISION_BITS, PRECISION_DIGITS)
}
