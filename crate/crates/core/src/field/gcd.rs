//! Multivariate polynomial gcd over the integers.
//!
//! The non-trivial case uses the heuristic gcd: evaluate one variable at a
//! large integer, recurse, lift the result back by a symmetric ξ-adic
//! expansion and confirm it by trial division. The heuristic may give up;
//! callers then get a common divisor that is correct but not greatest,
//! which only costs expression size, never correctness.

use alloc::vec::Vec;

use dashu_base::{Gcd, Signed, UnsignedAbs};
use dashu_int::{IBig, UBig};

use super::poly::{Monomial, Poly};

const HEU_ATTEMPTS: usize = 6;

/// A common divisor of `f` and `g`, normalized to a positive leading
/// coefficient. For at least one of the inputs non-zero this is the gcd
/// whenever the heuristic succeeds.
pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return normalized(g.clone());
    }
    if g.is_zero() {
        return normalized(f.clone());
    }
    let int_gcd = IBig::from(f.content().gcd(&g.content()));
    let mono = f.monomial_content().gcd(&g.monomial_content());
    if f.is_monomial() || g.is_monomial() {
        return Poly::term(mono, int_gcd);
    }
    let fp = primitive(f);
    let gp = primitive(g);
    let core = gcd_primitive(&fp, &gp);
    core.mul_monomial(&mono).scale(&int_gcd)
}

fn normalized(mut p: Poly) -> Poly {
    p.normalize_sign();
    p
}

/// Strips integer content and monomial content; the result has a positive
/// leading coefficient.
fn primitive(p: &Poly) -> Poly {
    let c = IBig::from(p.content());
    let m = p.monomial_content();
    let mut out = p.div_scalar(&c).div_monomial(&m);
    out.normalize_sign();
    out
}

/// gcd of two primitive polynomials without monomial content.
fn gcd_primitive(f: &Poly, g: &Poly) -> Poly {
    if f == g {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one();
    }
    let fm = f.var_mask();
    let gm = g.var_mask();
    // A variable occurring in only one argument cannot occur in the gcd, so
    // fold the coefficients of that argument with respect to it.
    let only_f = fm & !gm;
    let only_g = gm & !fm;
    if only_f != 0 {
        return gcd_with_coefficients(f, g, only_f.trailing_zeros() as usize);
    }
    if only_g != 0 {
        return gcd_with_coefficients(g, f, only_g.trailing_zeros() as usize);
    }
    if let Some(h) = trial_divisor(f, g) {
        return h;
    }
    match heu_gcd(f, g, fm) {
        Some(h) => h,
        None => Poly::one(),
    }
}

fn trial_divisor(f: &Poly, g: &Poly) -> Option<Poly> {
    if f.len() <= g.len() && g.div_exact(f).is_some() {
        return Some(f.clone());
    }
    if g.len() <= f.len() && f.div_exact(g).is_some() {
        return Some(g.clone());
    }
    None
}

fn gcd_with_coefficients(f: &Poly, g: &Poly, var: usize) -> Poly {
    let mut acc = g.clone();
    let mut coeffs: Vec<Poly> = f
        .coefficients_in(var)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(|c| c.len());
    for c in coeffs {
        acc = gcd(&acc, &c);
        if acc.is_constant() {
            return Poly::one();
        }
    }
    primitive(&acc)
}

fn heu_gcd(f: &Poly, g: &Poly, mask: u32) -> Option<Poly> {
    if mask == 0 {
        let a = f.constant_value()?;
        let b = g.constant_value()?;
        return Some(Poly::constant(IBig::from(a.gcd(&b))));
    }
    let var = (31 - mask.leading_zeros()) as usize;

    let fc = IBig::from(f.content());
    let gc = IBig::from(g.content());
    let f = f.div_scalar(&fc);
    let g = g.div_scalar(&gc);
    let cont = IBig::from(fc.gcd(&gc));

    let f_norm = f.max_norm();
    let g_norm = g.max_norm();
    let b = UBig::from(2u8) * core::cmp::min(&f_norm, &g_norm) + UBig::from(29u8);
    let lead_f = f.leading_coeff();
    let lead_g = g.leading_coeff();
    let alt = core::cmp::min(
        &f_norm / lead_f.unsigned_abs(),
        &g_norm / lead_g.unsigned_abs(),
    ) * UBig::from(2u8)
        + UBig::from(2u8);
    let capped = core::cmp::min(b.clone(), UBig::from(99u8) * isqrt(&b));
    let mut xi = IBig::from(core::cmp::max(capped, alt));

    for _ in 0..HEU_ATTEMPTS {
        let fe = f.eval_var(var, &xi);
        let ge = g.eval_var(var, &xi);
        if !fe.is_zero() && !ge.is_zero() {
            if let Some(h) = heu_gcd(&fe, &ge, fe.var_mask() | ge.var_mask()) {
                let mut cand = lift(&h, &xi, var);
                if !cand.is_zero() {
                    cand = primitive_keep_monomial(&cand);
                    if f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                        return Some(cand.scale(&cont));
                    }
                }
            }
        }
        let root = isqrt(&isqrt(&xi.clone().unsigned_abs()));
        xi = &xi * IBig::from(73794) * IBig::from(root) / IBig::from(27011);
    }
    None
}

fn primitive_keep_monomial(p: &Poly) -> Poly {
    let c = IBig::from(p.content());
    let mut out = p.div_scalar(&c);
    out.normalize_sign();
    out
}

/// Rebuilds a polynomial in `var` from its image at `var = xi`, reading
/// the integer coefficients as symmetric base-`xi` digits.
fn lift(h: &Poly, xi: &IBig, var: usize) -> Poly {
    let mut terms: Vec<(Monomial, IBig)> = Vec::new();
    let mut cur = h.clone();
    let mut power: u16 = 0;
    let half = xi / IBig::from(2);
    while !cur.is_zero() {
        let digit = cur.map_coeffs(|c| symmetric_mod(c, xi, &half));
        for (m, c) in digit.terms() {
            let mut mm = *m;
            mm.0[var] = power;
            terms.push((mm, c.clone()));
        }
        cur = (&cur - &digit).div_scalar(xi);
        power = match power.checked_add(1) {
            Some(p) => p,
            None => return Poly::zero(),
        };
    }
    Poly::from_terms(terms)
}

fn symmetric_mod(c: &IBig, m: &IBig, half: &IBig) -> IBig {
    let mut r = c % m;
    if r.is_negative() {
        r += m;
    }
    if &r > half {
        r -= m;
    }
    r
}

fn isqrt(n: &UBig) -> UBig {
    use dashu_base::SquareRoot;
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> Poly {
        Poly::var(i)
    }
    fn c(n: i64) -> Poly {
        Poly::constant(IBig::from(n))
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        // (a^4 b^4 - 1)(u1 - a^4 u2) shares (a^4 b^4 - 1) with (a^4 b^4 - 1)(b^4 - 1)
        let a4 = v(0).pow(4);
        let b4 = v(1).pow(4);
        let common = &(&a4 * &b4) - &c(1);
        let f = &common * &(&v(2) - &(&a4 * &v(3)));
        let g = &common * &(&b4 - &c(1));
        assert_eq!(gcd(&f, &g), common);
    }

    #[test]
    fn gcd_handles_integer_and_monomial_content() {
        let f = (&v(0) + &c(1)).scale(&IBig::from(6)).mul_monomial(&Monomial::var(1, 2));
        let g = (&v(0) + &c(1)).scale(&IBig::from(4)).mul_monomial(&Monomial::var(1, 3));
        let expected = (&v(0) + &c(1)).scale(&IBig::from(2)).mul_monomial(&Monomial::var(1, 2));
        assert_eq!(gcd(&f, &g), expected);
    }

    #[test]
    fn coprime_inputs_give_one() {
        let f = &v(0) + &v(1);
        let g = &v(0) - &v(1);
        assert!(gcd(&f, &g).is_one());
    }

    #[test]
    fn multivariate_shared_factor_in_all_variables() {
        let p = &(&v(0) * &v(2)) + &(&v(1) * &v(3)) + c(3);
        let f = &p * &(&v(0) + &v(3));
        let g = &p.pow(2) * &(&v(1) - &v(2));
        assert_eq!(gcd(&f, &g), p);
    }
}
