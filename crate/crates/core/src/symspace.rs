//! The N-coloured ring of symmetric functions on one graded component:
//! power-sum and monomial bases, conversion between them, and the two
//! scalar products.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::field::{RationalFunction, VarSet};
use crate::partitions::{enumerate_ordered, partitions_of, MultiPartition, OrderKind, Partition};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BasisKind {
    PowerSum,
    Monomial,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::PowerSum => "powersum",
            BasisKind::Monomial => "monomial",
        }
    }
}

/// Which scalar product.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum InnerKind {
    /// `<p_λ, p_μ>_{q,t} = δ Π z_{λ(i)} Π_k (1-q^{λ_k})/(1-t^{λ_k})`
    Qt,
    /// `<p_λ, p_μ>_β = δ Π z_{λ(i)} β^{-ℓ(λ(i))}`
    Beta,
}

impl InnerKind {
    pub fn name(self) -> &'static str {
        match self {
            InnerKind::Qt => "qt",
            InnerKind::Beta => "beta",
        }
    }

    pub fn vars(self, n: usize) -> VarSet {
        match self {
            InnerKind::Qt => VarSet::macdonald(n),
            InnerKind::Beta => VarSet::jack(n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymError {
    DegreeMismatch { expected: u32, found: u32 },
    ColorMismatch { expected: usize, found: usize },
    BasisMismatch,
}

impl fmt::Display for SymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymError::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            SymError::ColorMismatch { expected, found } => {
                write!(f, "colour count mismatch: expected {expected}, found {found}")
            }
            SymError::BasisMismatch => write!(f, "elements are in different bases"),
        }
    }
}

impl core::error::Error for SymError {}

/// A homogeneous element `Σ c_λ b_λ` in one basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricElement {
    basis: BasisKind,
    n: usize,
    degree: u32,
    coeffs: BTreeMap<MultiPartition, RationalFunction>,
}

impl SymmetricElement {
    pub fn zero(basis: BasisKind, n: usize, degree: u32) -> Self {
        SymmetricElement {
            basis,
            n,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: BasisKind, label: MultiPartition) -> Self {
        let mut e = Self::zero(basis, label.colors(), label.weight());
        e.coeffs.insert(label, RationalFunction::one());
        e
    }

    /// Collects `terms`, summing repeated labels and dropping zeros.
    pub fn from_terms(
        basis: BasisKind,
        n: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (MultiPartition, RationalFunction)>,
    ) -> Result<Self, SymError> {
        let mut e = Self::zero(basis, n, degree);
        for (label, c) in terms {
            e.add_term(label, c)?;
        }
        Ok(e)
    }

    pub fn add_term(&mut self, label: MultiPartition, c: RationalFunction) -> Result<(), SymError> {
        if label.colors() != self.n {
            return Err(SymError::ColorMismatch {
                expected: self.n,
                found: label.colors(),
            });
        }
        if label.weight() != self.degree {
            return Err(SymError::DegreeMismatch {
                expected: self.degree,
                found: label.weight(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.coeffs.get_mut(&label) {
            Some(slot) => {
                let s = &*slot + &c;
                if s.is_zero() {
                    self.coeffs.remove(&label);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.coeffs.insert(label, c);
            }
        }
        Ok(())
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn colors(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, label: &MultiPartition) -> RationalFunction {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored terms; emptiness is [`SymmetricElement::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero(self.basis, self.n, self.degree);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.coeffs {
            out.coeffs.insert(k.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone())?;
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SymError> {
        if self.n != other.n {
            return Err(SymError::ColorMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.degree != other.degree {
            return Err(SymError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        if self.basis != other.basis {
            return Err(SymError::BasisMismatch);
        }
        Ok(())
    }

    /// Exact structural equality up to `rf_equal` on coefficients.
    pub fn equals(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.n == other.n
            && self.degree == other.degree
            && self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .all(|(k, v)| other.coeffs.get(k).is_some_and(|w| v.equals(w)))
    }
}

/// Single-colour transition tables for one degree.
#[derive(Clone, Debug)]
struct ClassicalTables {
    labels: Vec<Partition>,
    /// `p_λ = Σ_μ p_to_m[λ][μ] m_μ`
    p_to_m: Vec<Vec<RBig>>,
    /// `m_λ = Σ_μ m_to_p[λ][μ] p_μ`
    m_to_p: Vec<Vec<RBig>>,
}

impl ClassicalTables {
    fn new(k: u32) -> Self {
        let labels = partitions_of(k);
        let p_to_m: Vec<Vec<RBig>> = labels
            .iter()
            .map(|lam| {
                labels
                    .iter()
                    .map(|mu| RBig::from(power_sum_in_monomial(lam, mu)))
                    .collect()
            })
            .collect();
        let m_to_p = invert(&p_to_m);
        ClassicalTables {
            labels,
            p_to_m,
            m_to_p,
        }
    }

    fn index(&self, p: &Partition) -> usize {
        self.labels
            .iter()
            .position(|x| x == p)
            .expect("partition of the tabulated degree")
    }
}

/// Coefficient of `m_μ` in `p_λ`: the number of ways to distribute the
/// parts of `λ` into the rows of `μ` with row sums `μ_j`.
fn power_sum_in_monomial(lam: &Partition, mu: &Partition) -> u64 {
    fn rec(parts: &[u32], rows: &mut [u32]) -> u64 {
        match parts.split_first() {
            None => rows.iter().all(|&r| r == 0) as u64,
            Some((&p, rest)) => {
                let mut total = 0;
                for j in 0..rows.len() {
                    if rows[j] >= p {
                        rows[j] -= p;
                        total += rec(rest, rows);
                        rows[j] += p;
                    }
                }
                total
            }
        }
    }
    if lam.weight() != mu.weight() {
        return 0;
    }
    let mut rows: Vec<u32> = mu.parts().to_vec();
    rec(lam.parts(), &mut rows)
}

/// Gauss-Jordan inverse of an invertible rational matrix.
fn invert(m: &[Vec<RBig>]) -> Vec<Vec<RBig>> {
    let n = m.len();
    let mut a: Vec<Vec<RBig>> = m.to_vec();
    let mut inv: Vec<Vec<RBig>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { RBig::ONE } else { RBig::ZERO }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != RBig::ZERO)
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && a[r][col] != RBig::ZERO {
                let f = a[r][col].clone();
                for j in 0..n {
                    let x = &a[col][j] * &f;
                    a[r][j] -= x;
                    let y = &inv[col][j] * &f;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

/// One graded component `Λ^{⊗N}_d`: its labels in both canonical orders
/// and the basis-change tables (tensor products of the single-colour ones).
#[derive(Clone, Debug)]
pub struct SymSpace {
    n: usize,
    degree: u32,
    labels_l: Vec<MultiPartition>,
    labels_r: Vec<MultiPartition>,
    tables: Vec<ClassicalTables>,
}

impl SymSpace {
    pub fn new(n: usize, degree: u32) -> Self {
        SymSpace {
            n,
            degree,
            labels_l: enumerate_ordered(n, degree, OrderKind::L),
            labels_r: enumerate_ordered(n, degree, OrderKind::R),
            tables: (0..=degree).map(ClassicalTables::new).collect(),
        }
    }

    pub fn colors(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.labels_l.len()
    }

    /// Labels sorted descending in the total order for `kind`.
    pub fn labels(&self, kind: OrderKind) -> &[MultiPartition] {
        match kind {
            OrderKind::L => &self.labels_l,
            OrderKind::R => &self.labels_r,
        }
    }

    fn color_coeff(&self, from: &Partition, to: &Partition, target: BasisKind) -> RBig {
        if from.weight() != to.weight() {
            return RBig::ZERO;
        }
        let t = &self.tables[from.weight() as usize];
        let (i, j) = (t.index(from), t.index(to));
        match target {
            BasisKind::Monomial => t.p_to_m[i][j].clone(),
            BasisKind::PowerSum => t.m_to_p[i][j].clone(),
        }
    }

    /// Coefficient of the `target`-basis element `to` in the expansion of
    /// the other basis's element `from`.
    pub fn transition_coeff(&self, from: &MultiPartition, to: &MultiPartition, target: BasisKind) -> RBig {
        let mut acc = RBig::ONE;
        for (a, b) in from.components().iter().zip(to.components()) {
            let c = self.color_coeff(a, b, target);
            if c == RBig::ZERO {
                return c;
            }
            acc *= c;
        }
        acc
    }

    /// Dense transition matrix in the order `kind`: row `λ` lists the
    /// `target`-basis coefficients of the other basis's element `λ`.
    pub fn transition_matrix(&self, target: BasisKind, kind: OrderKind) -> Vec<Vec<RBig>> {
        let labels = self.labels(kind);
        labels
            .iter()
            .map(|a| labels.iter().map(|b| self.transition_coeff(a, b, target)).collect())
            .collect()
    }

    fn check(&self, e: &SymmetricElement) -> Result<(), SymError> {
        if e.n != self.n {
            return Err(SymError::ColorMismatch {
                expected: self.n,
                found: e.n,
            });
        }
        if e.degree != self.degree {
            return Err(SymError::DegreeMismatch {
                expected: self.degree,
                found: e.degree,
            });
        }
        Ok(())
    }

    pub fn convert(&self, e: &SymmetricElement, target: BasisKind) -> Result<SymmetricElement, SymError> {
        self.check(e)?;
        if e.basis == target {
            return Ok(e.clone());
        }
        let mut out = SymmetricElement::zero(target, self.n, self.degree);
        for (from, c) in &e.coeffs {
            let weights = from.color_weights();
            for to in &self.labels_l {
                if to.color_weights() != weights {
                    continue;
                }
                let k = self.transition_coeff(from, to, target);
                if k != RBig::ZERO {
                    out.add_term(to.clone(), c.scale_rbig(&k))?;
                }
            }
        }
        Ok(out)
    }

    /// Diagonal Gram entry `<p_λ, p_λ>` for `kind`.
    pub fn gram_entry(&self, kind: InnerKind, label: &MultiPartition) -> RationalFunction {
        let vars = kind.vars(self.n);
        let mut z: u64 = 1;
        let mut acc = RationalFunction::one();
        for p in label.components() {
            z *= p.z();
            match kind {
                InnerKind::Qt => {
                    for &k in p.parts() {
                        let num = &RationalFunction::one() - &vars.q_pow(k as i32);
                        let den = &RationalFunction::one() - &vars.t_pow(k as i32);
                        acc = &acc * &num.checked_div(&den).expect("1 - t^k is non-zero");
                    }
                }
                InnerKind::Beta => {
                    let l = p.len() as i32;
                    acc = &acc * &vars.beta().pow(-l).expect("beta is non-zero");
                }
            }
        }
        acc.scale_rbig(&RBig::from(IBig::from(z)))
    }

    /// The Gram matrix of `kind` in the power-sum basis, as its diagonal
    /// in the order `order`.
    pub fn gram(&self, kind: InnerKind, order: OrderKind) -> GramMatrix {
        GramMatrix {
            kind,
            degree: self.degree,
            entries: self
                .labels(order)
                .iter()
                .map(|l| (l.clone(), self.gram_entry(kind, l)))
                .collect(),
        }
    }

    pub fn scalar_product(
        &self,
        f: &SymmetricElement,
        g: &SymmetricElement,
        kind: InnerKind,
    ) -> Result<RationalFunction, SymError> {
        if f.degree != g.degree {
            return Err(SymError::DegreeMismatch {
                expected: f.degree,
                found: g.degree,
            });
        }
        let fp = self.convert(f, BasisKind::PowerSum)?;
        let gp = self.convert(g, BasisKind::PowerSum)?;
        let mut acc = RationalFunction::zero();
        for (label, a) in &fp.coeffs {
            if let Some(b) = gp.coeffs.get(label) {
                acc = &acc + &(&(a * b) * &self.gram_entry(kind, label));
            }
        }
        Ok(acc)
    }
}

/// Diagonal Gram matrix in the power-sum basis.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub kind: InnerKind,
    pub degree: u32,
    pub entries: Vec<(MultiPartition, RationalFunction)>,
}

impl GramMatrix {
    pub fn entry(&self, label: &MultiPartition) -> Option<&RationalFunction> {
        self.entries.iter().find(|(l, _)| l == label).map(|(_, v)| v)
    }
}

/// The Gram matrix for `(kind, n, d)` in canonical `L` order.
pub fn gram(kind: InnerKind, n: usize, d: u32) -> GramMatrix {
    SymSpace::new(n, d).gram(kind, OrderKind::L)
}
