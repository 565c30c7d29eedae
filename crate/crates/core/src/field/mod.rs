//! Exact arithmetic in `Q(a, b, u1..uN)` and `Q(beta, up1..upN)`, plus
//! high-precision numeric evaluation for limit experiments.
//!
//! `a` and `b` stand for `q^(1/4)` and `t^(1/4)`, so every power of `q`,
//! `t` and `t/q` appearing in the vertex operators is a Laurent monomial
//! in honest polynomial variables.

mod gcd;
mod numeric;
mod poly;
mod rational;
mod vars;

use alloc::string::String;
use core::fmt;

pub use gcd::gcd;
pub use numeric::{
    precision_note, real_abs, real_from_i64, real_from_rbig, real_to_f64, rf_evaluate,
    NumericPoint, Real, POLE_TOLERANCE_EXP10, PRECISION_BITS, PRECISION_DIGITS,
};
pub use poly::{Monomial, Poly, MAX_VARS};
pub use rational::RationalFunction;
pub use vars::{FieldMode, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    DivisionByZero,
    /// A denominator vanished (numerically) at an evaluation point.
    Pole { factor: String },
    Parse { position: usize, message: String },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::Pole { factor } => write!(f, "pole: denominator {factor} vanishes at the evaluation point"),
            FieldError::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
        }
    }
}

impl core::error::Error for FieldError {}

/// Field operation selector for [`rf_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rf_arith(
    lhs: &RationalFunction,
    rhs: &RationalFunction,
    op: ArithOp,
) -> Result<RationalFunction, FieldError> {
    Ok(match op {
        ArithOp::Add => lhs + rhs,
        ArithOp::Sub => lhs - rhs,
        ArithOp::Mul => lhs * rhs,
        ArithOp::Div => lhs.checked_div(rhs)?,
    })
}

/// Equality by cross-multiplication.
pub fn rf_equal(lhs: &RationalFunction, rhs: &RationalFunction) -> bool {
    lhs.equals(rhs)
}
