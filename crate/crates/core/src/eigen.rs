//! Generalized Macdonald and Jack functions and their duals, by triangular
//! back-substitution on the operator matrices.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::field::{real_abs, real_from_i64, FieldError, NumericPoint, RationalFunction, Real, VarSet};
use crate::operators::{build_adjoint, build_hbeta_power_sum, build_x0_power_sum, OperatorError, OperatorMatrix};
use crate::partitions::{compare, MultiPartition, OrderKind, OrderResult};
use crate::symspace::{BasisKind, InnerKind, SymSpace, SymmetricElement};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EigenKind {
    /// `X0`, order `L`.
    MacdonaldP,
    /// `X0*`, order `R`.
    MacdonaldPstar,
    /// `H_beta`, order `L`.
    JackJ,
    /// `H_beta*`, order `R`.
    JackJstar,
}

impl EigenKind {
    pub const ALL: [EigenKind; 4] = [
        EigenKind::MacdonaldP,
        EigenKind::MacdonaldPstar,
        EigenKind::JackJ,
        EigenKind::JackJstar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EigenKind::MacdonaldP => "macdonald",
            EigenKind::MacdonaldPstar => "macdonald-dual",
            EigenKind::JackJ => "jack",
            EigenKind::JackJstar => "jack-dual",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn order(self) -> OrderKind {
        match self {
            EigenKind::MacdonaldP | EigenKind::JackJ => OrderKind::L,
            EigenKind::MacdonaldPstar | EigenKind::JackJstar => OrderKind::R,
        }
    }

    pub fn inner(self) -> InnerKind {
        match self {
            EigenKind::MacdonaldP | EigenKind::MacdonaldPstar => InnerKind::Qt,
            EigenKind::JackJ | EigenKind::JackJstar => InnerKind::Beta,
        }
    }

    pub fn is_dual(self) -> bool {
        self.order() == OrderKind::R
    }

    pub fn dual(self) -> Self {
        match self {
            EigenKind::MacdonaldP => EigenKind::MacdonaldPstar,
            EigenKind::MacdonaldPstar => EigenKind::MacdonaldP,
            EigenKind::JackJ => EigenKind::JackJstar,
            EigenKind::JackJstar => EigenKind::JackJ,
        }
    }

    pub fn vars(self, n: usize) -> VarSet {
        self.inner().vars(n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum EigenError {
    /// Two diagonal entries coincide where the solve needs them distinct.
    Degenerate { lambda: MultiPartition, mu: MultiPartition },
    /// A coefficient appeared outside the partial-order support.
    Support { lambda: MultiPartition, mu: MultiPartition },
    NotTriangular,
    UnknownLabel(MultiPartition),
    PersistentPole { retries: u32, factor: String },
    Operator(OperatorError),
    Field(FieldError),
}

impl fmt::Display for EigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenError::Degenerate { lambda, mu } => {
                write!(f, "eigenvalue collision between [{lambda}] and [{mu}]")
            }
            EigenError::Support { lambda, mu } => {
                write!(f, "coefficient of [{mu}] in the eigenfunction of [{lambda}] lies outside the order support")
            }
            EigenError::NotTriangular => write!(f, "operator matrix is not triangular in the chosen order"),
            EigenError::UnknownLabel(l) => write!(f, "[{l}] is not a label of this component"),
            EigenError::PersistentPole { retries, factor } => {
                write!(f, "pole at {factor} persisted after {retries} retries")
            }
            EigenError::Operator(e) => write!(f, "{e}"),
            EigenError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EigenError {}

impl From<OperatorError> for EigenError {
    fn from(e: OperatorError) -> Self {
        EigenError::Operator(e)
    }
}

impl From<FieldError> for EigenError {
    fn from(e: FieldError) -> Self {
        EigenError::Field(e)
    }
}

/// The operator for `kind` in the monomial basis, in the kind's order.
pub fn operator_matrix(kind: EigenKind, space: &SymSpace) -> Result<OperatorMatrix, EigenError> {
    let ps = match kind {
        EigenKind::MacdonaldP | EigenKind::MacdonaldPstar => build_x0_power_sum(space),
        EigenKind::JackJ | EigenKind::JackJstar => build_hbeta_power_sum(space),
    };
    let ps = if kind.is_dual() {
        build_adjoint(space, &ps, kind.inner())?
    } else {
        ps
    };
    Ok(ps.to_basis(space, BasisKind::Monomial).reorder(space, kind.order()))
}

/// Solves `v M = e v` with `v[index] = 1` and `v[j] = 0` for `j < index`.
pub fn solve_eigenvector(m: &OperatorMatrix, index: usize) -> Result<Vec<RationalFunction>, EigenError> {
    if !m.is_upper_triangular() {
        return Err(EigenError::NotTriangular);
    }
    let dim = m.dim();
    let e = &m.rows[index][index];
    let mut v = vec![RationalFunction::zero(); dim];
    v[index] = RationalFunction::one();
    for j in index + 1..dim {
        let mut acc = RationalFunction::zero();
        for k in index..j {
            if !v[k].is_zero() && !m.rows[k][j].is_zero() {
                acc = &acc + &(&v[k] * &m.rows[k][j]);
            }
        }
        if acc.is_zero() {
            continue;
        }
        let gap = e - &m.rows[j][j];
        if gap.is_zero() {
            return Err(EigenError::Degenerate {
                lambda: m.labels[index].clone(),
                mu: m.labels[j].clone(),
            });
        }
        v[j] = acc.checked_div(&gap)?;
    }
    for (j, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !matches!(
            compare(&m.labels[index], &m.labels[j], m.order),
            OrderResult::Greater | OrderResult::Equal
        ) {
            return Err(EigenError::Support {
                lambda: m.labels[index].clone(),
                mu: m.labels[j].clone(),
            });
        }
    }
    Ok(v)
}

/// The eigenfunction of `kind` labelled by `lambda`, in the monomial basis.
pub fn eigenfunction(kind: EigenKind, lambda: &MultiPartition) -> Result<SymmetricElement, EigenError> {
    let space = SymSpace::new(lambda.colors(), lambda.weight());
    let m = operator_matrix(kind, &space)?;
    eigenfunction_in(&m, lambda)
}

/// As [`eigenfunction`], reusing an operator matrix from [`operator_matrix`].
pub fn eigenfunction_in(m: &OperatorMatrix, lambda: &MultiPartition) -> Result<SymmetricElement, EigenError> {
    let index = m.index_of(lambda).ok_or_else(|| EigenError::UnknownLabel(lambda.clone()))?;
    let v = solve_eigenvector(m, index)?;
    let terms = m.labels.iter().cloned().zip(v);
    Ok(SymmetricElement::from_terms(BasisKind::Monomial, m.n, m.degree, terms).expect("labels of the component"))
}

/// Eigenfunctions of one component: row `λ` holds the monomial
/// coefficients of the eigenfunction labelled `λ`, in the kind's order.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionTable {
    pub kind: EigenKind,
    pub vars: VarSet,
    pub n: usize,
    pub degree: u32,
    pub order: OrderKind,
    pub labels: Vec<MultiPartition>,
    pub rows: Vec<Vec<RationalFunction>>,
    /// Diagonal of the operator matrix, i.e. the eigenvalues.
    pub eigenvalues: Vec<RationalFunction>,
}

impl TransitionTable {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &MultiPartition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element(&self, index: usize) -> SymmetricElement {
        let terms = self.labels.iter().cloned().zip(self.rows[index].iter().cloned());
        SymmetricElement::from_terms(BasisKind::Monomial, self.n, self.degree, terms).expect("labels of the component")
    }

    /// The same table with rows and columns listed in descending `order`.
    pub fn reorder(&self, space: &SymSpace, order: OrderKind) -> Self {
        let labels = space.labels(order).to_vec();
        let perm: Vec<usize> = labels.iter().map(|l| self.index_of(l).expect("same component")).collect();
        TransitionTable {
            order,
            rows: perm
                .iter()
                .map(|&i| perm.iter().map(|&j| self.rows[i][j].clone()).collect())
                .collect(),
            eigenvalues: perm.iter().map(|&i| self.eigenvalues[i].clone()).collect(),
            labels,
            ..self.clone()
        }
    }

    pub fn formatted_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| self.vars.format(v)).collect())
            .collect()
    }
}

pub fn transition_table(kind: EigenKind, n: usize, d: u32) -> Result<TransitionTable, EigenError> {
    let space = SymSpace::new(n, d);
    let m = operator_matrix(kind, &space)?;
    transition_table_from(kind, &m)
}

pub fn transition_table_from(kind: EigenKind, m: &OperatorMatrix) -> Result<TransitionTable, EigenError> {
    let rows = (0..m.dim())
        .map(|i| solve_eigenvector(m, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TransitionTable {
        kind,
        vars: m.vars,
        n: m.n,
        degree: m.degree,
        order: m.order,
        labels: m.labels.clone(),
        rows,
        eigenvalues: m.diagonal(),
    })
}

/// Outcome of [`jack_limit_check`].
#[derive(Clone, Debug)]
pub struct LimitReport {
    /// `(hbar, max |P - J|)` per requested `hbar`.
    pub deviations: Vec<(RBig, Real)>,
    /// The `u'` actually used after any pole-avoiding jitter.
    pub uprimes: Vec<RBig>,
    pub retries: u32,
}

pub const MAX_POLE_RETRIES: u32 = 10;

/// Largest entrywise deviation between the Macdonald table specialized at
/// `q = e^hbar, t = q^beta, u_i = q^{u'_i}` and the Jack table at
/// `(beta, u')`. Both tables must be in the same order.
pub fn limit_deviation(
    mac: &TransitionTable,
    jack: &TransitionTable,
    beta: &RBig,
    uprimes: &[RBig],
    hbar: &RBig,
) -> Result<Real, FieldError> {
    let mp = NumericPoint::macdonald_specialization(hbar, beta, uprimes);
    let jp = NumericPoint::jack_point(beta, uprimes);
    let mut worst = real_from_i64(0);
    for (rm, rj) in mac.rows.iter().zip(&jack.rows) {
        for (a, b) in rm.iter().zip(rj) {
            let dev = real_abs(&(mp.eval(a)? - jp.eval(b)?));
            if dev > worst {
                worst = dev;
            }
        }
    }
    Ok(worst)
}

/// Runs `attempt` at `u'`, and on a pole error retries at `u'` shifted by
/// seeded increments `jitter(k)` (k = 1, 2, ...).
pub fn with_pole_retry<T>(
    uprimes: &[RBig],
    mut jitter: impl FnMut(u32) -> Vec<RBig>,
    mut attempt: impl FnMut(&[RBig]) -> Result<T, FieldError>,
) -> Result<(T, Vec<RBig>, u32), EigenError> {
    let mut current = uprimes.to_vec();
    let mut retries = 0;
    loop {
        match attempt(&current) {
            Ok(v) => return Ok((v, current, retries)),
            Err(FieldError::Pole { factor }) => {
                if retries == MAX_POLE_RETRIES {
                    return Err(EigenError::PersistentPole { retries, factor });
                }
                retries += 1;
                let delta = jitter(retries);
                current = uprimes.iter().zip(&delta).map(|(u, d)| u + d).collect();
            }
            Err(e) => return Err(e.into()),
        }
    }
}

/// Deviation between the specialized Macdonald table and the Jack table
/// for each `hbar`. `jitter` supplies the pole-avoiding perturbations.
pub fn jack_limit_check(
    n: usize,
    d: u32,
    beta: &RBig,
    uprimes: &[RBig],
    hbars: &[RBig],
    jitter: impl FnMut(u32) -> Vec<RBig>,
) -> Result<LimitReport, EigenError> {
    assert_eq!(uprimes.len(), n, "one u' per colour");
    let mac = transition_table(EigenKind::MacdonaldP, n, d)?;
    let jack = transition_table(EigenKind::JackJ, n, d)?;
    let (deviations, used, retries) = with_pole_retry(uprimes, jitter, |u| {
        hbars
            .iter()
            .map(|h| Ok((h.clone(), limit_deviation(&mac, &jack, beta, u, h)?)))
            .collect::<Result<Vec<_>, FieldError>>()
    })?;
    Ok(LimitReport {
        deviations,
        uprimes: used,
        retries,
    })
}

/// `1/10^k` as an exact rational.
pub fn inverse_power_of_ten(k: u32) -> RBig {
    RBig::from_parts(IBig::ONE, dashu_int::UBig::from(10u8).pow(k as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn mp(parts: &[&[u32]]) -> MultiPartition {
        MultiPartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn first_level_fixtures() {
        let j = eigenfunction(EigenKind::JackJ, &mp(&[&[], &[1]])).unwrap();
        let v = VarSet::jack(2);
        assert!(j.coeff(&mp(&[&[1], &[]])).equals(&v.parse("(1-beta)/(-up1+up2)").unwrap()));
        let p = eigenfunction(EigenKind::MacdonaldP, &mp(&[&[], &[1]])).unwrap();
        let w = VarSet::macdonald(2);
        let want = w.parse("b^2*a^(-2)*(b^4-a^4)*u2/(b^4*(u1-u2))").unwrap();
        assert!(p.coeff(&mp(&[&[1], &[]])).equals(&want));
    }

    #[test]
    fn one_dimensional_component() {
        let p = eigenfunction(EigenKind::MacdonaldP, &mp(&[&[1]])).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.coeff(&mp(&[&[1]])).is_one());
    }

    #[test]
    fn degree_zero_table_is_identity() {
        for kind in EigenKind::ALL {
            let t = transition_table(kind, 2, 0).unwrap();
            assert_eq!(t.dim(), 1);
            assert!(t.rows[0][0].is_one());
        }
    }

    #[test]
    fn degenerate_diagonal_is_reported() {
        let space = SymSpace::new(2, 1);
        let mut m = operator_matrix(EigenKind::JackJ, &space).unwrap();
        let e = m.rows[0][0].clone();
        m.rows[1][1] = e;
        assert!(matches!(solve_eigenvector(&m, 0), Err(EigenError::Degenerate { .. })));
    }
}
