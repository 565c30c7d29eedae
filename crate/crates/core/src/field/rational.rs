//! Elements of the fraction field of `Poly`.

use core::ops::{Add, Mul, Neg, Sub};

use dashu_base::Gcd;
use dashu_int::IBig;
use dashu_ratio::RBig;

use super::gcd::gcd;
use super::poly::{Monomial, Poly};
use super::FieldError;

/// A quotient of integer polynomials.
///
/// The denominator is never zero and has a positive leading coefficient,
/// and the integer contents of numerator and denominator are coprime.
/// Common polynomial factors are cancelled whenever the gcd heuristic
/// finds them; equality never relies on that and is decided by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(Poly::constant(IBig::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_parts_normalized(Poly::constant(IBig::from(n)), Poly::constant(IBig::from(d)))
    }

    pub fn from_rbig(r: &RBig) -> Self {
        let (n, d) = (r.numerator().clone(), IBig::from(r.denominator().clone()));
        Self::from_parts_normalized(Poly::constant(n), Poly::constant(d))
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(index: usize) -> Self {
        Self::from_poly(Poly::var(index))
    }

    /// `x^e` for an integer (possibly negative) exponent.
    pub fn var_pow(index: usize, e: i32) -> Self {
        let m = Monomial::var(index, e.unsigned_abs() as u16);
        let p = Poly::term(m, IBig::ONE);
        if e >= 0 {
            Self::from_poly(p)
        } else {
            RationalFunction {
                num: Poly::one(),
                den: p,
            }
        }
    }

    /// Builds `num/den`, cancelling common factors.
    pub fn new(num: Poly, den: Poly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// Builds `num/den` with sign and content normalization only; used
    /// when reading back a form that was already reduced.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::from_parts_normalized(num, den))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Returns `Some(c)` when the value is a rational constant.
    pub fn as_constant(&self) -> Option<RBig> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(RBig::from_parts(n, d.try_into().ok()?))
    }

    /// Denominator is a single term.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    fn from_parts_normalized(mut num: Poly, mut den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.normalize_sign() {
            num = -num;
        }
        let g = IBig::from(num.content().gcd(&den.content()));
        if !g.is_one() {
            num = num.div_scalar(&g);
            den = den.div_scalar(&g);
        }
        RationalFunction { num, den }
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RationalFunction { num, den };
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Self::from_parts_normalized(num, den);
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        Self::from_parts_normalized(n, d)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.num.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::from_parts_normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale_rbig(&self, c: &RBig) -> Self {
        if c.numerator().is_zero() {
            return Self::zero();
        }
        let n = self.num.scale(c.numerator());
        let d = self.den.scale(&IBig::from(c.denominator().clone()));
        Self::from_parts_normalized(n, d)
    }

    /// Cross-multiplication equality test.
    pub fn equals(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }

    /// Rewrites the variables through `map`, which sends each variable
    /// index to a new index.
    pub fn rename_vars(&self, map: &[usize]) -> Self {
        let rename = |p: &Poly| {
            Poly::from_terms(
                p.terms()
                    .iter()
                    .map(|(m, c)| {
                        let mut out = Monomial::ONE;
                        for (from, &to) in map.iter().enumerate() {
                            out.0[to] += m.0[from];
                        }
                        (out, c.clone())
                    })
                    .collect(),
            )
        };
        Self::from_parts_normalized(rename(&self.num), rename(&self.den))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for RationalFunction {}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let d = &self.den * &rhs.den;
            return RationalFunction::reduced_with_hint(n, d, None);
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g).expect("gcd divides");
        let n = &(&self.num * &d2) + &(&rhs.num * &d1);
        let d = &self.den * &d2;
        RationalFunction::reduced_with_hint(n, d, Some(&g))
    }
}

impl RationalFunction {
    /// After `n/d = a/b + c/e` with reduced summands, any common factor of
    /// `n` and `d` divides `gcd(b, e)`; `hint` is that gcd when known.
    fn reduced_with_hint(n: Poly, d: Poly, hint: Option<&Poly>) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        match hint {
            None => {
                // only integer and monomial content can be shared
                let g = gcd_light(&n, &d);
                match g {
                    Some(g) => Self::from_parts_normalized(
                        n.div_exact(&g).expect("content divides"),
                        d.div_exact(&g).expect("content divides"),
                    ),
                    None => Self::from_parts_normalized(n, d),
                }
            }
            Some(h) => {
                let g = gcd(&n, h);
                if g.is_one() {
                    Self::from_parts_normalized(n, d)
                } else {
                    Self::from_parts_normalized(
                        n.div_exact(&g).expect("gcd divides"),
                        d.div_exact(&g).expect("gcd divides"),
                    )
                }
            }
        }
    }
}

fn gcd_light(n: &Poly, d: &Poly) -> Option<Poly> {
    let m = n.monomial_content().gcd(&d.monomial_content());
    let c = IBig::from(n.content().gcd(&d.content()));
    if m.is_one() && c.is_one() {
        None
    } else {
        Some(Poly::term(m, c))
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RationalFunction::from_parts_normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
