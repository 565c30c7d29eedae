//! Variable naming for the two coefficient fields, plus printing and
//! parsing of rational functions.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use dashu_base::Signed;
use dashu_int::IBig;

use super::poly::{Monomial, Poly, MAX_VARS};
use super::rational::RationalFunction;
use super::FieldError;

/// Which coefficient field a computation lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldMode {
    /// `Q(a, b, u1..uN)` with `a = q^(1/4)`, `b = t^(1/4)`.
    Macdonald,
    /// `Q(beta, up1..upN)` where `upi` stands for `u'_i`.
    Jack,
}

impl FieldMode {
    pub fn name(self) -> &'static str {
        match self {
            FieldMode::Macdonald => "macdonald",
            FieldMode::Jack => "jack",
        }
    }
}

/// The variables of one field for a fixed colour count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VarSet {
    mode: FieldMode,
    n: usize,
}

pub const MAX_COLORS_MACDONALD: usize = MAX_VARS - 2;
pub const MAX_COLORS_JACK: usize = MAX_VARS - 1;

impl VarSet {
    pub fn new(mode: FieldMode, n: usize) -> Self {
        let cap = match mode {
            FieldMode::Macdonald => MAX_COLORS_MACDONALD,
            FieldMode::Jack => MAX_COLORS_JACK,
        };
        assert!(n >= 1 && n <= cap, "colour count {n} outside 1..={cap}");
        VarSet { mode, n }
    }

    pub fn macdonald(n: usize) -> Self {
        Self::new(FieldMode::Macdonald, n)
    }

    pub fn jack(n: usize) -> Self {
        Self::new(FieldMode::Jack, n)
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn colors(&self) -> usize {
        self.n
    }

    /// Number of variables; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match self.mode {
            FieldMode::Macdonald => 2 + self.n,
            FieldMode::Jack => 1 + self.n,
        }
    }

    pub fn name(&self, index: usize) -> String {
        match (self.mode, index) {
            (FieldMode::Macdonald, 0) => "a".to_string(),
            (FieldMode::Macdonald, 1) => "b".to_string(),
            (FieldMode::Macdonald, k) => format!("u{}", k - 1),
            (FieldMode::Jack, 0) => "beta".to_string(),
            (FieldMode::Jack, k) => format!("up{}", k),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        (0..self.len()).find(|&k| self.name(k) == name)
    }

    /// Index of the colour parameter `u_i` (Macdonald) or `u'_i` (Jack), 1-based.
    pub fn u_index(&self, color: usize) -> usize {
        assert!(color >= 1 && color <= self.n);
        match self.mode {
            FieldMode::Macdonald => 1 + color,
            FieldMode::Jack => color,
        }
    }

    pub fn u(&self, color: usize) -> RationalFunction {
        RationalFunction::var(self.u_index(color))
    }

    /// `q = a^4`. Macdonald mode only.
    pub fn q(&self) -> RationalFunction {
        debug_assert_eq!(self.mode, FieldMode::Macdonald);
        RationalFunction::var_pow(0, 4)
    }

    /// `t = b^4`. Macdonald mode only.
    pub fn t(&self) -> RationalFunction {
        debug_assert_eq!(self.mode, FieldMode::Macdonald);
        RationalFunction::var_pow(1, 4)
    }

    /// `q^k` for an integer `k`.
    pub fn q_pow(&self, k: i32) -> RationalFunction {
        RationalFunction::var_pow(0, 4 * k)
    }

    /// `t^k` for an integer `k`.
    pub fn t_pow(&self, k: i32) -> RationalFunction {
        RationalFunction::var_pow(1, 4 * k)
    }

    /// `(t/q)^(k/4) = b^k a^(-k)`.
    pub fn t_over_q_quarter(&self, k: i32) -> RationalFunction {
        &RationalFunction::var_pow(1, k) * &RationalFunction::var_pow(0, -k)
    }

    /// `beta`. Jack mode only.
    pub fn beta(&self) -> RationalFunction {
        debug_assert_eq!(self.mode, FieldMode::Jack);
        RationalFunction::var(0)
    }

    /// Canonical string: integer exponents only, terms in ascending
    /// monomial order, `(num)/(den)` when the denominator is not 1.
    pub fn format(&self, f: &RationalFunction) -> String {
        let num = self.format_poly(f.numerator());
        if f.denominator().is_one() {
            num
        } else {
            format!("({})/({})", num, self.format_poly(f.denominator()))
        }
    }

    pub fn format_poly(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in p.terms().iter().rev() {
            let names: Vec<(String, i32)> = (0..MAX_VARS)
                .filter(|&v| m.exp(v) > 0)
                .map(|v| (self.name(v), m.exp(v) as i32))
                .collect();
            push_term(&mut out, c, &names);
        }
        out
    }

    /// Human-readable form. In Macdonald mode powers of `a`, `b` are shown
    /// through `q`, `t` and `(t/q)^(k/4)` where exponents allow it.
    pub fn pretty(&self, f: &RationalFunction) -> String {
        if self.mode == FieldMode::Jack {
            return self.format(f);
        }
        let nm = f.numerator().monomial_content();
        let dm = f.denominator().monomial_content();
        let num = f.numerator().div_monomial(&Monomial(ab_only(&nm)));
        let den = f.denominator().div_monomial(&Monomial(ab_only(&dm)));
        let ea = nm.exp(0) as i32 - dm.exp(0) as i32;
        let eb = nm.exp(1) as i32 - dm.exp(1) as i32;
        let mut factors: Vec<String> = Vec::new();
        factors.extend(pretty_ab(ea, eb));
        let num_s = self.pretty_poly(&num);
        let den_s = self.pretty_poly(&den);
        let mut s = String::new();
        let num_is_one = num.is_one();
        if !factors.is_empty() {
            s.push_str(&factors.join("*"));
            if !num_is_one {
                s.push('*');
                s.push_str(&wrap(&num_s, num.len() > 1));
            }
        } else {
            s.push_str(&num_s);
        }
        if !den.is_one() {
            if factors.is_empty() {
                s = format!("({})/({})", s, den_s);
            } else {
                s = format!("{}/({})", s, den_s);
            }
        }
        s
    }

    fn pretty_poly(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let all_quartic = p
            .terms()
            .iter()
            .all(|(m, _)| m.exp(0) % 4 == 0 && m.exp(1) % 4 == 0);
        if !all_quartic {
            return self.format_poly(p);
        }
        let mut out = String::new();
        for (m, c) in p.terms().iter().rev() {
            let mut names: Vec<(String, i32)> = Vec::new();
            if m.exp(0) > 0 {
                names.push(("q".to_string(), m.exp(0) as i32 / 4));
            }
            if m.exp(1) > 0 {
                names.push(("t".to_string(), m.exp(1) as i32 / 4));
            }
            for v in 2..MAX_VARS {
                if m.exp(v) > 0 {
                    names.push((self.name(v), m.exp(v) as i32));
                }
            }
            push_term(&mut out, c, &names);
        }
        out
    }

    /// Parses an expression over this field's variable names with `+ - * /`,
    /// integer powers `^k` / `^(-k)`, integers and parentheses.
    pub fn parse(&self, s: &str) -> Result<RationalFunction, FieldError> {
        if let Some(fast) = self.parse_canonical(s) {
            return fast;
        }
        let mut p = Parser {
            vars: self,
            src: s.as_bytes(),
            pos: 0,
        };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(v)
    }

    /// Reads the exact shape `format` emits without re-running cancellation.
    fn parse_canonical(&self, s: &str) -> Option<Result<RationalFunction, FieldError>> {
        let (n, d) = if let Some(inner) = s.strip_prefix('(') {
            let (n, rest) = inner.split_once(")/(")?;
            let d = rest.strip_suffix(')')?;
            (n, d)
        } else {
            (s, "1")
        };
        if n.contains(['(', ')', '/']) || d.contains(['(', ')', '/']) {
            return None;
        }
        let pn = self.parse_poly(n)?;
        let pd = self.parse_poly(d)?;
        Some(RationalFunction::from_parts(pn, pd))
    }

    fn parse_poly(&self, s: &str) -> Option<Poly> {
        let mut p = Parser {
            vars: self,
            src: s.as_bytes(),
            pos: 0,
        };
        let v = p.expr().ok()?;
        p.skip_ws();
        if p.pos != p.src.len() || !v.denominator().is_one() {
            return None;
        }
        Some(v.numerator().clone())
    }
}

fn ab_only(m: &Monomial) -> [u16; MAX_VARS] {
    let mut e = [0; MAX_VARS];
    e[0] = m.exp(0);
    e[1] = m.exp(1);
    e
}

/// Renders `a^ea b^eb` through `(t/q)^(r/4) q^x t^y` when `ea + eb` is a
/// multiple of 4.
fn pretty_ab(ea: i32, eb: i32) -> Vec<String> {
    let mut out = Vec::new();
    if ea == 0 && eb == 0 {
        return out;
    }
    if (ea + eb).rem_euclid(4) != 0 {
        if ea != 0 {
            out.push(power_str("a", ea));
        }
        if eb != 0 {
            out.push(power_str("b", eb));
        }
        return out;
    }
    let r = eb.rem_euclid(4);
    let qx = (ea + r) / 4;
    let ty = (eb - r) / 4;
    match r {
        0 => {}
        2 => out.push("(t/q)^(1/2)".to_string()),
        1 => out.push("(t/q)^(1/4)".to_string()),
        _ => out.push("(t/q)^(3/4)".to_string()),
    }
    if qx != 0 {
        out.push(power_str("q", qx));
    }
    if ty != 0 {
        out.push(power_str("t", ty));
    }
    out
}

fn power_str(name: &str, e: i32) -> String {
    match e {
        1 => name.to_string(),
        e if e < 0 => format!("{}^({})", name, e),
        e => format!("{}^{}", name, e),
    }
}

fn wrap(s: &str, yes: bool) -> String {
    if yes {
        format!("({})", s)
    } else {
        s.to_string()
    }
}

fn push_term(out: &mut String, c: &IBig, names: &[(String, i32)]) {
    let neg = c.is_negative();
    let abs = if neg { -c } else { c.clone() };
    if neg {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let body: Vec<String> = names.iter().map(|(n, e)| power_str(n, *e)).collect();
    if body.is_empty() {
        out.push_str(&abs.to_string());
    } else {
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(&body.join("*"));
    }
}

struct Parser<'a> {
    vars: &'a VarSet,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> FieldError {
        FieldError::Parse {
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction, FieldError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, FieldError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    let at = self.pos;
                    acc = acc.checked_div(&rhs).map_err(|_| FieldError::Parse {
                        position: at,
                        message: "division by zero".to_string(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, FieldError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, FieldError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            let at = self.pos;
            return base.pow(e).map_err(|_| FieldError::Parse {
                position: at,
                message: "negative power of zero".to_string(),
            });
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32, FieldError> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer exponent"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<RationalFunction, FieldError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: IBig = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(RationalFunction::from_poly(Poly::constant(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.index_of(name) {
                    Some(k) => Ok(RationalFunction::var(k)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable '{name}'")))
                    }
                }
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_output_matches_expected_layout() {
        let v = VarSet::jack(2);
        let f = v.parse("(1-beta)/(-up1+up2)").unwrap();
        assert_eq!(v.format(&f), "(1-beta)/(-up1+up2)");
        let g = v.parse("(1-beta)/(up1-up2)").unwrap();
        assert_eq!(v.format(&g), "(-1+beta)/(-up1+up2)");
    }

    #[test]
    fn negative_exponents_parse() {
        let v = VarSet::macdonald(2);
        let f = v.parse("b^2*a^(-2)").unwrap();
        assert_eq!(v.format(&f), "(b^2)/(a^2)");
        assert_eq!(v.pretty(&f), "(t/q)^(1/2)");
    }

    #[test]
    fn round_trip_of_canonical_strings() {
        let v = VarSet::macdonald(2);
        let f = v
            .parse("b^2*a^(-2)*(b^4-a^4)*u2/(b^4*(u1-u2))")
            .unwrap();
        let s = v.format(&f);
        let g = v.parse(&s).unwrap();
        assert_eq!(v.format(&g), s);
        assert!(f.equals(&g));
    }

    #[test]
    fn pretty_uses_q_and_t() {
        let v = VarSet::macdonald(2);
        let f = v.parse("(a^4+1)*(b^4-1)/(a^4*b^4-1)").unwrap();
        let s = v.pretty(&f);
        assert!(s.contains('q') && s.contains('t') && !s.contains('a'), "{s}");
    }

    #[test]
    fn parse_errors_are_reported() {
        let v = VarSet::jack(1);
        assert!(matches!(v.parse("x+1"), Err(FieldError::Parse { .. })));
        assert!(matches!(v.parse("(1+beta"), Err(FieldError::Parse { .. })));
        assert!(matches!(v.parse("1/(beta-beta)"), Err(FieldError::Parse { .. })));
    }
}
