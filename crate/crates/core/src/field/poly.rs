//! Sparse multivariate polynomials with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use dashu_base::{Gcd, Signed, UnsignedAbs};
use dashu_int::{IBig, UBig};

/// Maximum number of variables a polynomial may mention.
pub const MAX_VARS: usize = 8;

/// An exponent vector.
///
/// Monomials are ordered by total degree first; ties are broken by
/// comparing exponents from the highest variable index downwards.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn var(index: usize, exp: u16) -> Self {
        let mut e = [0; MAX_VARS];
        e[index] = exp;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, var: usize) -> u16 {
        self.0[var]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; MAX_VARS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.0[k]
                .checked_add(other.0[k])
                .expect("monomial exponent overflow");
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = [0; MAX_VARS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = other.0[k] - self.0[k];
        }
        Monomial(e)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = [0; MAX_VARS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.0[k].min(other.0[k]);
        }
        Monomial(e)
    }

    fn without(&self, var: usize) -> Monomial {
        let mut m = *self;
        m.0[var] = 0;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over the integers, stored as terms sorted by strictly
/// decreasing monomial with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, IBig)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(IBig::ONE)
    }

    pub fn constant(c: IBig) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: alloc::vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn var(index: usize) -> Self {
        Self::term(Monomial::var(index, 1), IBig::ONE)
    }

    pub fn term(m: Monomial, c: IBig) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: alloc::vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(mut terms: Vec<(Monomial, IBig)>) -> Self {
        terms.sort_unstable_by_key(|t| core::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, IBig)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some((lm, lc)) = out.last_mut() {
                if *lm == m {
                    *lc += c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, IBig)] {
        &self.terms
    }

    /// Number of terms; emptiness is [`Poly::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<IBig> {
        match self.terms.as_slice() {
            [] => Some(IBig::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, IBig)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> IBig {
        self.terms.first().map(|t| t.1.clone()).unwrap_or(IBig::ZERO)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) > 0)
    }

    /// Bit mask of the variables that occur.
    pub fn var_mask(&self) -> u32 {
        let mut mask = 0;
        for (m, _) in &self.terms {
            for v in 0..MAX_VARS {
                if m.exp(v) > 0 {
                    mask |= 1 << v;
                }
            }
        }
        mask
    }

    /// Positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> UBig {
        let mut g = UBig::ZERO;
        for (_, c) in &self.terms {
            g = (&g).gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |acc, (m, _)| acc.gcd(m))
    }

    pub fn max_norm(&self) -> UBig {
        self.terms
            .iter()
            .map(|(_, c)| c.unsigned_abs())
            .max()
            .unwrap_or(UBig::ZERO)
    }

    pub fn scale(&self, c: &IBig) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &IBig) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x / c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Divides every term by `m`, which must divide all of them.
    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (m.quotient_of(t), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes the integer `value` for `var`.
    pub fn eval_var(&self, var: usize, value: &IBig) -> Poly {
        let maxd = self.degree_in(var) as usize;
        let mut powers = Vec::with_capacity(maxd + 1);
        powers.push(IBig::ONE);
        for k in 1..=maxd {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.without(var), c * &powers[m.exp(var) as usize]))
                .collect(),
        )
    }

    /// Coefficients with respect to `var`, indexed by exponent.
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let maxd = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, IBig)>> = alloc::vec![Vec::new(); maxd + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(var) as usize].push((m.without(var), c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder (over the integers).
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if divisor.is_monomial() {
            let (dm, dc) = &divisor.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) || !(c % dc).is_zero() {
                    return None;
                }
                out.push((dm.quotient_of(m), c / dc));
            }
            return Some(Poly { terms: out });
        }
        if self.terms.len() < divisor.terms.len() {
            return None;
        }
        let (dm, dc) = &divisor.terms[0];
        // cheap necessary conditions before the full division
        let (lm, _) = &self.terms[0];
        if !dm.divides(lm) {
            return None;
        }
        let (sm, _) = self.terms.last().unwrap();
        let (tm, _) = divisor.terms.last().unwrap();
        if !tm.divides(sm) {
            return None;
        }
        let mut rem: BTreeMap<Monomial, IBig> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, IBig)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !dm.divides(&m) || !(&c % dc).is_zero() {
                return None;
            }
            let qm = dm.quotient_of(&m);
            let qc = &c / dc;
            for (tm, tc) in divisor.terms.iter().skip(1) {
                let key = tm.mul(&qm);
                let delta = tc * &qc;
                match rem.entry(key) {
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    pub fn map_coeffs(&self, f: impl Fn(&IBig) -> IBig) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))).collect())
    }

    /// Makes the leading coefficient positive, returning whether the sign flipped.
    pub fn normalize_sign(&mut self) -> bool {
        if self.leading_coeff().is_negative() {
            for (_, c) in self.terms.iter_mut() {
                *c = -core::mem::take(c);
            }
            true
        } else {
            false
        }
    }
}

fn merge(a: &[(Monomial, IBig)], b: &[(Monomial, IBig)], negate_b: bool) -> Vec<(Monomial, IBig)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly {
            terms: merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly {
            terms: merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return Poly {
                terms: rhs.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
            };
        }
        if rhs.is_monomial() {
            return rhs * self;
        }
        let mut acc: BTreeMap<Monomial, IBig> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += prod;
                    }
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for (_, c) in self.terms.iter_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
