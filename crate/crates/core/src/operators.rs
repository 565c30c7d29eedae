//! Exact matrices of the zero mode `X0`, its adjoint, the differential
//! operator `H_beta` and the heads `H0`, `H1`, `H2` of the `hbar`
//! expansion, on one graded component.
//!
//! Matrices use the row convention: `rows[λ][μ]` is the coefficient of the
//! basis element `μ` in the image of the basis element `λ`. In that
//! convention `X0` and `H_beta` are upper triangular in the monomial basis
//! listed in descending `L` order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::field::{FieldError, FieldMode, NumericPoint, RationalFunction, Real, VarSet};
use crate::partitions::{enumerate_ordered, MultiPartition, OrderKind, Partition};
use crate::symspace::{BasisKind, InnerKind, SymError, SymSpace, SymmetricElement};

#[derive(Clone, Debug, PartialEq)]
pub enum OperatorError {
    NotPowerSum,
    SingularGram { label: MultiPartition },
    Sym(SymError),
    Field(FieldError),
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::NotPowerSum => write!(f, "operator input must be in the power-sum basis"),
            OperatorError::SingularGram { label } => write!(f, "Gram entry at [{label}] vanishes"),
            OperatorError::Sym(e) => write!(f, "{e}"),
            OperatorError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for OperatorError {}

impl From<SymError> for OperatorError {
    fn from(e: SymError) -> Self {
        OperatorError::Sym(e)
    }
}

impl From<FieldError> for OperatorError {
    fn from(e: FieldError) -> Self {
        OperatorError::Field(e)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum VertexKind {
    Eta,
    Xi,
    PhiPlus,
    PhiMinus,
}

/// One vertex operator of colour `color` (1-based) evaluated at
/// `(t/q)^{shift/4} z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VertexOpSpec {
    pub kind: VertexKind,
    pub color: usize,
    pub shift: i32,
}

fn one_minus(x: RationalFunction) -> RationalFunction {
    &RationalFunction::one() - &x
}

impl VertexOpSpec {
    pub fn new(kind: VertexKind, color: usize, shift: i32) -> Self {
        VertexOpSpec { kind, color, shift }
    }

    /// Coefficient of `z^n p_n` in the creation exponent.
    pub fn creation(&self, vars: &VarSet, n: u32) -> Option<RationalFunction> {
        let k = n as i32;
        let inv_n = RationalFunction::from_ratio(1, n as i64);
        let base = match self.kind {
            VertexKind::Eta => &one_minus(vars.t_pow(-k)) * &inv_n,
            VertexKind::Xi => -(&(&one_minus(vars.t_pow(-k)) * &inv_n) * &vars.t_over_q_quarter(2 * k)),
            VertexKind::PhiPlus => return None,
            VertexKind::PhiMinus => {
                let tq = &vars.t_pow(k) * &vars.q_pow(-k);
                &(&(&one_minus(vars.t_pow(-k)) * &one_minus(tq)) * &inv_n) * &vars.t_over_q_quarter(-k)
            }
        };
        Some(&base * &vars.t_over_q_quarter(self.shift * k))
    }

    /// Coefficient of `z^{-n} ∂/∂p_n` in the annihilation exponent.
    pub fn annihilation(&self, vars: &VarSet, n: u32) -> Option<RationalFunction> {
        let k = n as i32;
        let base = match self.kind {
            VertexKind::Eta => -one_minus(vars.q_pow(k)),
            VertexKind::Xi => &one_minus(vars.q_pow(k)) * &vars.t_over_q_quarter(2 * k),
            VertexKind::PhiPlus => {
                let tq = &vars.t_pow(k) * &vars.q_pow(-k);
                -(&(&one_minus(vars.q_pow(k)) * &one_minus(tq)) * &vars.t_over_q_quarter(-k))
            }
            VertexKind::PhiMinus => return None,
        };
        Some(&base * &vars.t_over_q_quarter(-self.shift * k))
    }
}

/// The specs of `Λ̃_i`: `φ_-^{(k)}((t/q)^{(2k-1)/4} z)` for `k < i`, then
/// `η^{(i)}((t/q)^{(i-1)/2} z)`.
pub fn lambda_tilde(i: usize) -> Vec<VertexOpSpec> {
    let mut specs: Vec<VertexOpSpec> = (1..i)
        .map(|k| VertexOpSpec::new(VertexKind::PhiMinus, k, 2 * k as i32 - 1))
        .collect();
    specs.push(VertexOpSpec::new(VertexKind::Eta, i, 2 * (i as i32 - 1)));
    specs
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k as u64).fold(1, |acc, j| acc * (n as u64 - j) / (j + 1))
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// Per-colour multiplicity tables, index = part size.
fn multiplicities(label: &MultiPartition, d: u32) -> Vec<Vec<u32>> {
    label
        .components()
        .iter()
        .map(|p| {
            let mut m = vec![0; d as usize + 1];
            for &x in p.parts() {
                m[x as usize] += 1;
            }
            m
        })
        .collect()
}

fn from_multiplicities(mults: &[Vec<u32>]) -> MultiPartition {
    MultiPartition::new(
        mults
            .iter()
            .map(|m| {
                let mut parts = Vec::new();
                for (size, &k) in m.iter().enumerate().rev() {
                    parts.extend(core::iter::repeat_n(size as u32, k as usize));
                }
                Partition::new(parts)
            })
            .collect(),
    )
}

fn merge(a: &MultiPartition, b: &MultiPartition) -> MultiPartition {
    MultiPartition::new(
        a.components()
            .iter()
            .zip(b.components())
            .map(|(x, y)| {
                let mut parts = x.parts().to_vec();
                parts.extend_from_slice(y.parts());
                Partition::new(parts)
            })
            .collect(),
    )
}

/// A normal-ordered product of vertex operators, prepared for a fixed
/// number of colours and maximal degree.
struct NormalOrdered {
    n: usize,
    d: u32,
    /// `alpha[c][k]`: total annihilation coefficient of colour `c+1`, mode `k`
    alpha: Vec<Vec<RationalFunction>>,
    /// for each grade `m`, the `z^m` part of the creation exponential
    creation: Vec<Vec<(MultiPartition, RationalFunction)>>,
}

impl NormalOrdered {
    fn new(vars: &VarSet, specs: &[VertexOpSpec], n: usize, d: u32) -> Self {
        let mut alpha = vec![vec![RationalFunction::zero(); d as usize + 1]; n];
        let mut beta = vec![vec![RationalFunction::zero(); d as usize + 1]; n];
        for s in specs {
            assert!(s.color >= 1 && s.color <= n, "colour out of range");
            for k in 1..=d {
                if let Some(c) = s.annihilation(vars, k) {
                    let slot = &mut alpha[s.color - 1][k as usize];
                    *slot = &*slot + &c;
                }
                if let Some(c) = s.creation(vars, k) {
                    let slot = &mut beta[s.color - 1][k as usize];
                    *slot = &*slot + &c;
                }
            }
        }
        let creation = (0..=d)
            .map(|m| {
                enumerate_ordered(n, m, OrderKind::L)
                    .into_iter()
                    .filter_map(|nu| {
                        let mut c = RationalFunction::one();
                        for (col, m) in multiplicities(&nu, d).iter().enumerate() {
                            for (k, &mk) in m.iter().enumerate().skip(1) {
                                if mk > 0 {
                                    let b = beta[col][k].pow(mk as i32).expect("non-negative power");
                                    c = (&c * &b).scale_rbig(&RBig::from_parts(IBig::ONE, factorial(mk).into()));
                                }
                            }
                        }
                        (!c.is_zero()).then_some((nu, c))
                    })
                    .collect()
            })
            .collect();
        NormalOrdered { n, d, alpha, creation }
    }

    /// Constant term of the product applied to `p_label`.
    fn apply(&self, label: &MultiPartition) -> Vec<(MultiPartition, RationalFunction)> {
        let mults = multiplicities(label, self.d);
        let factors: Vec<(usize, usize, u32)> = mults
            .iter()
            .enumerate()
            .flat_map(|(c, m)| {
                m.iter()
                    .enumerate()
                    .filter(|&(_, &k)| k > 0)
                    .map(move |(size, &k)| (c, size, k))
            })
            .collect();
        // exp(A) p_λ: each p_n^k becomes (p_n + α_n z^{-n})^k
        let mut partial: Vec<(Vec<Vec<u32>>, RationalFunction, u32)> =
            vec![(vec![vec![0; self.d as usize + 1]; self.n], RationalFunction::one(), 0)];
        for &(c, size, k) in &factors {
            let a = &self.alpha[c][size];
            let mut next = Vec::new();
            for (m, coeff, grade) in &partial {
                let mut apow = RationalFunction::one();
                for j in 0..=k {
                    if j > 0 {
                        if a.is_zero() {
                            break;
                        }
                        apow = &apow * a;
                    }
                    let mut m2 = m.clone();
                    m2[c][size] += k - j;
                    let c2 = (coeff * &apow).scale_rbig(&RBig::from(binomial(k, j)));
                    next.push((m2, c2, grade + j * size as u32));
                }
            }
            partial = next;
        }
        let mut out: BTreeMap<MultiPartition, RationalFunction> = BTreeMap::new();
        for (m, coeff, grade) in partial {
            let rest = from_multiplicities(&m);
            for (nu, c) in &self.creation[grade as usize] {
                let key = merge(&rest, nu);
                let v = &coeff * c;
                let slot = out.entry(key).or_default();
                *slot = &*slot + &v;
            }
        }
        out.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}

/// Constant term in `z` of the normal-ordered product of `specs` applied
/// to `e`.
pub fn apply_vertex_product(
    vars: &VarSet,
    specs: &[VertexOpSpec],
    e: &SymmetricElement,
) -> Result<SymmetricElement, OperatorError> {
    if e.basis() != BasisKind::PowerSum {
        return Err(OperatorError::NotPowerSum);
    }
    let op = NormalOrdered::new(vars, specs, e.colors(), e.degree());
    let mut out = SymmetricElement::zero(BasisKind::PowerSum, e.colors(), e.degree());
    for (label, c) in e.terms() {
        for (mu, v) in op.apply(label) {
            out.add_term(mu, c * &v)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OperatorKind {
    X0,
    X0Adjoint,
    Hbeta,
    HbetaAdjoint,
    H0,
    H1,
    H2,
}

impl OperatorKind {
    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::X0 => "X0",
            OperatorKind::X0Adjoint => "X0_adjoint",
            OperatorKind::Hbeta => "Hbeta",
            OperatorKind::HbetaAdjoint => "Hbeta_adjoint",
            OperatorKind::H0 => "H0",
            OperatorKind::H1 => "H1",
            OperatorKind::H2 => "H2",
        }
    }

    pub fn mode(self) -> FieldMode {
        match self {
            OperatorKind::X0 | OperatorKind::X0Adjoint => FieldMode::Macdonald,
            _ => FieldMode::Jack,
        }
    }
}

/// A dense operator matrix on one graded component.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    pub operator: OperatorKind,
    pub vars: VarSet,
    pub n: usize,
    pub degree: u32,
    pub basis: BasisKind,
    pub order: OrderKind,
    pub labels: Vec<MultiPartition>,
    pub rows: Vec<Vec<RationalFunction>>,
}

type Matrix = Vec<Vec<RationalFunction>>;

fn mat_mul_sparse_left(a: &[Vec<RBig>], m: &Matrix) -> Matrix {
    let n = m.len();
    let mut out = vec![vec![RationalFunction::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == RBig::ZERO {
                continue;
            }
            for j in 0..n {
                if !m[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &m[k][j].scale_rbig(&a[i][k]);
                }
            }
        }
    }
    out
}

fn mat_mul_sparse_right(m: &Matrix, a: &[Vec<RBig>]) -> Matrix {
    let n = m.len();
    let mut out = vec![vec![RationalFunction::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if m[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if a[k][j] != RBig::ZERO {
                    out[i][j] = &out[i][j] + &m[i][k].scale_rbig(&a[k][j]);
                }
            }
        }
    }
    out
}

impl OperatorMatrix {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &RationalFunction {
        &self.rows[row][col]
    }

    pub fn diagonal(&self) -> Vec<RationalFunction> {
        (0..self.dim()).map(|i| self.rows[i][i].clone()).collect()
    }

    pub fn index_of(&self, label: &MultiPartition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The same operator with labels listed in descending `order`.
    pub fn reorder(&self, space: &SymSpace, order: OrderKind) -> Self {
        let labels = space.labels(order).to_vec();
        let perm: Vec<usize> = labels
            .iter()
            .map(|l| self.index_of(l).expect("same component"))
            .collect();
        let rows = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.rows[i][j].clone()).collect())
            .collect();
        OperatorMatrix {
            order,
            labels,
            rows,
            ..self.clone()
        }
    }

    /// The same operator in the other basis.
    pub fn to_basis(&self, space: &SymSpace, target: BasisKind) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let other = match target {
            BasisKind::Monomial => BasisKind::PowerSum,
            BasisKind::PowerSum => BasisKind::Monomial,
        };
        // rows of `into` expand target-basis elements in the current basis
        let into = space.transition_matrix(self.basis, self.order);
        let back = space.transition_matrix(target, self.order);
        debug_assert_eq!(other, self.basis);
        let rows = mat_mul_sparse_right(&mat_mul_sparse_left(&into, &self.rows), &back);
        OperatorMatrix {
            basis: target,
            rows,
            ..self.clone()
        }
    }

    /// `true` when every entry below the diagonal vanishes.
    pub fn is_upper_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r[..i].iter().all(RationalFunction::is_zero))
    }

    /// Off-diagonal nonzero entries `(row, col)`.
    pub fn off_diagonal_support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                if i != j && !v.is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Image of `Σ v_λ b_λ` as a coefficient vector.
    pub fn apply_row_vector(&self, v: &[RationalFunction]) -> Vec<RationalFunction> {
        let n = self.dim();
        let mut out = vec![RationalFunction::zero(); n];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..n {
                if !self.rows[i][j].is_zero() {
                    out[j] = &out[j] + &(vi * &self.rows[i][j]);
                }
            }
        }
        out
    }

    /// Canonical strings of every entry.
    pub fn formatted_rows(&self) -> Vec<Vec<alloc::string::String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| self.vars.format(v)).collect())
            .collect()
    }
}

fn power_sum_matrix(
    space: &SymSpace,
    operator: OperatorKind,
    vars: VarSet,
    mut image: impl FnMut(&MultiPartition) -> Vec<(MultiPartition, RationalFunction)>,
) -> OperatorMatrix {
    let labels = space.labels(OrderKind::L).to_vec();
    let index: BTreeMap<&MultiPartition, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let dim = labels.len();
    let mut rows = vec![vec![RationalFunction::zero(); dim]; dim];
    for (i, l) in labels.iter().enumerate() {
        for (mu, c) in image(l) {
            let j = index[&mu];
            rows[i][j] = &rows[i][j] + &c;
        }
    }
    OperatorMatrix {
        operator,
        vars,
        n: space.colors(),
        degree: space.degree(),
        basis: BasisKind::PowerSum,
        order: OrderKind::L,
        labels,
        rows,
    }
}

/// `X0 = Σ_i u_i CT[Λ̃_i]` in the power-sum basis, `L` order.
pub fn build_x0_power_sum(space: &SymSpace) -> OperatorMatrix {
    let n = space.colors();
    let vars = VarSet::macdonald(n);
    let products: Vec<NormalOrdered> = (1..=n)
        .map(|i| NormalOrdered::new(&vars, &lambda_tilde(i), n, space.degree()))
        .collect();
    power_sum_matrix(space, OperatorKind::X0, vars, |label| {
        let mut out = Vec::new();
        for (i, op) in products.iter().enumerate() {
            let u = vars.u(i + 1);
            out.extend(op.apply(label).into_iter().map(|(mu, c)| (mu, &c * &u)));
        }
        out
    })
}

/// `X0` on the degree-`d` component in `basis`, `L` order.
pub fn build_x0(space: &SymSpace, basis: BasisKind) -> OperatorMatrix {
    build_x0_power_sum(space).to_basis(space, basis)
}

/// `ε_λ = 1 + (t-1) Σ_k (q^{λ_k} - 1) t^{-k}`.
pub fn epsilon(vars: &VarSet, lambda: &Partition) -> RationalFunction {
    let mut sum = RationalFunction::zero();
    for (k, &part) in lambda.parts().iter().enumerate() {
        let term = &(&vars.q_pow(part as i32) - &RationalFunction::one()) * &vars.t_pow(-(k as i32 + 1));
        sum = &sum + &term;
    }
    &RationalFunction::one() + &(&(&vars.t() - &RationalFunction::one()) * &sum)
}

/// `Σ_i u_i ε_{λ(i)}`.
pub fn eigenvalue_macdonald(label: &MultiPartition) -> RationalFunction {
    let vars = VarSet::macdonald(label.colors());
    let mut acc = RationalFunction::zero();
    for (i, p) in label.components().iter().enumerate() {
        acc = &acc + &(&vars.u(i + 1) * &epsilon(&vars, p));
    }
    acc
}

/// The adjoint `G Mᵀ G⁻¹` (row convention) with respect to `kind`.
pub fn build_adjoint(space: &SymSpace, m: &OperatorMatrix, kind: InnerKind) -> Result<OperatorMatrix, OperatorError> {
    if m.basis != BasisKind::PowerSum {
        return Err(OperatorError::NotPowerSum);
    }
    let g: Vec<RationalFunction> = m.labels.iter().map(|l| space.gram_entry(kind, l)).collect();
    for (l, v) in m.labels.iter().zip(&g) {
        if v.is_zero() {
            return Err(OperatorError::SingularGram { label: l.clone() });
        }
    }
    let dim = m.dim();
    let mut rows = vec![vec![RationalFunction::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let v = &m.rows[j][i];
            if !v.is_zero() {
                rows[i][j] = (v * &g[i]).checked_div(&g[j])?;
            }
        }
    }
    let operator = match m.operator {
        OperatorKind::X0 => OperatorKind::X0Adjoint,
        OperatorKind::Hbeta => OperatorKind::HbetaAdjoint,
        OperatorKind::X0Adjoint => OperatorKind::X0,
        OperatorKind::HbetaAdjoint => OperatorKind::Hbeta,
        other => other,
    };
    Ok(OperatorMatrix {
        operator,
        rows,
        ..m.clone()
    })
}

fn hbeta_image(vars: &VarSet, label: &MultiPartition, d: u32) -> Vec<(MultiPartition, RationalFunction)> {
    let n = label.colors();
    let beta = vars.beta();
    let one_minus_beta = &RationalFunction::one() - &beta;
    let half = RBig::from_parts(IBig::ONE, 2u8.into());
    let mults = multiplicities(label, d);
    let mut out = Vec::new();
    let d = d as usize;
    for i in 0..n {
        let m = &mults[i];
        for s in 1..=d {
            let k = m[s];
            if k == 0 {
                continue;
            }
            // β/2 Σ_{a+b=s} s p_a p_b ∂_s
            for a in 1..s {
                let mut m2 = mults.clone();
                m2[i][s] -= 1;
                m2[i][a] += 1;
                m2[i][s - a] += 1;
                let c = beta.scale_rbig(&(RBig::from((s as u64) * k as u64) * &half));
                out.push((from_multiplicities(&m2), c));
            }
            // Σ_s (u'_i + (1-β)s/2) s p_s ∂_s
            let diag = &vars.u(i + 1) + &one_minus_beta.scale_rbig(&(RBig::from(s as u64) * &half));
            out.push((label.clone(), diag.scale_rbig(&RBig::from((s as u64) * k as u64))));
            // (1-β) Σ_s s² p^{(c)}_s ∂^{(i)}_s for colours c < i
            for c in 0..i {
                let mut m2 = mults.clone();
                m2[i][s] -= 1;
                m2[c][s] += 1;
                let coeff = one_minus_beta.scale_rbig(&RBig::from((s * s) as u64 * k as u64));
                out.push((from_multiplicities(&m2), coeff));
            }
        }
        // ½ Σ_{a,b} a b p_{a+b} ∂_a ∂_b
        for a in 1..=d {
            for b in 1..=d {
                if a + b > d {
                    continue;
                }
                let pairs = if a == b {
                    m[a] as u64 * (m[a] as u64).saturating_sub(1)
                } else {
                    m[a] as u64 * m[b] as u64
                };
                if pairs == 0 {
                    continue;
                }
                let mut m2 = mults.clone();
                m2[i][a] -= 1;
                m2[i][b] -= 1;
                m2[i][a + b] += 1;
                let c = RationalFunction::from_rbig(&(RBig::from((a * b) as u64 * pairs) * &half));
                out.push((from_multiplicities(&m2), c));
            }
        }
    }
    out
}

/// `H_beta` in the power-sum basis, `L` order.
pub fn build_hbeta_power_sum(space: &SymSpace) -> OperatorMatrix {
    let vars = VarSet::jack(space.colors());
    let d = space.degree();
    power_sum_matrix(space, OperatorKind::Hbeta, vars, |label| hbeta_image(&vars, label, d))
}

/// `H_beta` on the degree-`d` component in `basis`, `L` order.
pub fn build_hbeta(space: &SymSpace, basis: BasisKind) -> OperatorMatrix {
    build_hbeta_power_sum(space).to_basis(space, basis)
}

fn scalar_matrix(space: &SymSpace, operator: OperatorKind, c: &RationalFunction) -> OperatorMatrix {
    let dim = space.dim();
    let rows = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { c.clone() } else { RationalFunction::zero() })
                .collect()
        })
        .collect();
    OperatorMatrix {
        operator,
        vars: VarSet::jack(space.colors()),
        n: space.colors(),
        degree: space.degree(),
        basis: BasisKind::Monomial,
        order: OrderKind::L,
        labels: space.labels(OrderKind::L).to_vec(),
        rows,
    }
}

/// `H0 = N`, `H1 = Σ u'_i`, `H2 = β d + ½ Σ u'_i²`, all scalar.
pub fn build_h012(space: &SymSpace) -> [OperatorMatrix; 3] {
    let n = space.colors();
    let vars = VarSet::jack(n);
    let h0 = RationalFunction::from_int(n as i64);
    let mut h1 = RationalFunction::zero();
    let mut sq = RationalFunction::zero();
    for i in 1..=n {
        let u = vars.u(i);
        h1 = &h1 + &u;
        sq = &sq + &(&u * &u);
    }
    let h2 = &vars.beta().scale_rbig(&RBig::from(space.degree())) + &sq.scale_rbig(&RBig::from_parts(IBig::ONE, 2u8.into()));
    [
        scalar_matrix(space, OperatorKind::H0, &h0),
        scalar_matrix(space, OperatorKind::H1, &h1),
        scalar_matrix(space, OperatorKind::H2, &h2),
    ]
}

/// Largest entrywise deviation, at one `hbar`, between
/// `(X0 - H0 - hbar H1 - hbar² H2) / ((t-1)(q-1)²)` specialized at
/// `q = e^hbar`, `t = q^beta`, `u_i = q^{u'_i}` and
/// `H_beta + Σ u'_i³ / (6 beta)`.
pub fn operator_limit_deviation(
    x0: &OperatorMatrix,
    hbeta: &OperatorMatrix,
    beta: &RBig,
    uprimes: &[RBig],
    hbar: &RBig,
) -> Result<Real, FieldError> {
    let mac = NumericPoint::macdonald_specialization(hbar, beta, uprimes);
    let jack = NumericPoint::jack_point(beta, uprimes);
    let space_degree = RBig::from(x0.degree);
    let n = RBig::from(uprimes.len() as u64);
    let sum = |f: &dyn Fn(&RBig) -> RBig| uprimes.iter().fold(RBig::ZERO, |acc, u| acc + f(u));
    let h1 = sum(&|u| u.clone());
    let sq = sum(&|u| u * u);
    let cube = sum(&|u| u * u * u);
    let h2 = beta * &space_degree + sq / RBig::from(2u8);
    let head = n + hbar * &h1 + hbar * hbar * &h2;
    let shift = cube / (RBig::from(6u8) * beta);
    let real = crate::field::real_from_rbig;
    let one = crate::field::real_from_i64(1);
    let scale = (mac.t() - &one) * (mac.q() - &one) * (mac.q() - &one);
    let mut worst = crate::field::real_from_i64(0);
    for i in 0..x0.dim() {
        for j in 0..x0.dim() {
            let mut lhs = mac.eval(&x0.rows[i][j])?;
            let mut rhs = jack.eval(&hbeta.rows[i][j])?;
            if i == j {
                lhs -= real(&head);
                rhs += real(&shift);
            }
            let dev = crate::field::real_abs(&(lhs / &scale - rhs));
            if dev > worst {
                worst = dev;
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: &[&[u32]]) -> MultiPartition {
        MultiPartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn eta_on_p1_gives_epsilon() {
        let vars = VarSet::macdonald(1);
        let e = SymmetricElement::basis_element(BasisKind::PowerSum, mp(&[&[1]]));
        let out = apply_vertex_product(&vars, &[VertexOpSpec::new(VertexKind::Eta, 1, 0)], &e).unwrap();
        let want = vars.parse("1+(b^4-1)*(a^4-1)/b^4").unwrap();
        assert!(out.coeff(&mp(&[&[1]])).equals(&want));
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn vacuum_is_fixed() {
        let vars = VarSet::macdonald(2);
        let e = SymmetricElement::basis_element(BasisKind::PowerSum, MultiPartition::empty(2));
        let out = apply_vertex_product(&vars, &lambda_tilde(2), &e).unwrap();
        assert!(out.coeff(&MultiPartition::empty(2)).is_one());
    }

    #[test]
    fn x0_degree_zero() {
        let space = SymSpace::new(2, 0);
        let m = build_x0(&space, BasisKind::Monomial);
        assert!(m.rows[0][0].equals(&VarSet::macdonald(2).parse("u1+u2").unwrap()));
    }

    #[test]
    fn x0_diagonal_matches_eigenvalues() {
        let space = SymSpace::new(2, 2);
        let m = build_x0(&space, BasisKind::Monomial);
        assert!(m.is_upper_triangular());
        for (i, l) in m.labels.iter().enumerate() {
            assert!(m.rows[i][i].equals(&eigenvalue_macdonald(l)), "{l}");
        }
    }

    #[test]
    fn hbeta_small_cases() {
        let v = VarSet::jack(1);
        let m = build_hbeta(&SymSpace::new(1, 1), BasisKind::Monomial);
        assert!(m.rows[0][0].equals(&v.parse("up1+(1-beta)/2").unwrap()));
        let z = build_hbeta(&SymSpace::new(1, 0), BasisKind::Monomial);
        assert!(z.rows[0][0].is_zero());
        let v2 = VarSet::jack(2);
        let m2 = build_hbeta(&SymSpace::new(2, 1), BasisKind::Monomial);
        assert!(m2.is_upper_triangular());
        assert!(m2.rows[0][1].equals(&v2.parse("1-beta").unwrap()));
    }

    #[test]
    fn h2_closed_form() {
        let [_, _, h2] = build_h012(&SymSpace::new(2, 3));
        let want = VarSet::jack(2).parse("3*beta+(up1^2+up2^2)/2").unwrap();
        assert!(h2.diagonal().iter().all(|x| x.equals(&want)));
    }
}
