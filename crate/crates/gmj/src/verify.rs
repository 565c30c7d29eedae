//! Verification suites producing pass/fail reports.

use std::time::Instant;

use dashu_ratio::RBig;
use gmj_core::eigen::{
    jack_limit_check, operator_matrix, transition_table_from, with_pole_retry, EigenError, EigenKind,
    TransitionTable,
};
use gmj_core::field::{precision_note, real_to_f64, RationalFunction, Real};
use gmj_core::operators::{
    build_adjoint, build_hbeta, build_hbeta_power_sum, build_x0, build_x0_power_sum, eigenvalue_macdonald,
    operator_limit_deviation, OperatorMatrix,
};
use gmj_core::partitions::{compare, enumerate_multipartitions, OrderKind, OrderResult};
use gmj_core::symspace::{BasisKind, InnerKind, SymSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn error(name: impl Into<String>, e: impl std::fmt::Display) -> Self {
        Check::new(name, false, format!("error: {e}"))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: Value,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub worst_deviation: Option<f64>,
}

impl Report {
    fn new(suite: &str, params: Value) -> Self {
        Report {
            suite: suite.to_owned(),
            params,
            checks: Vec::new(),
            elapsed_ms: 0,
            worst_deviation: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }
}

fn triangular_check(name: String, m: &OperatorMatrix) -> Check {
    for i in 0..m.dim() {
        for j in 0..i {
            if !m.rows[i][j].is_zero() {
                return Check::new(name, false, format!("nonzero entry below the diagonal at [{}],[{}]", m.labels[i], m.labels[j]));
            }
        }
    }
    let support = m.off_diagonal_support();
    for &(i, j) in &support {
        if compare(&m.labels[i], &m.labels[j], m.order) != OrderResult::Greater {
            return Check::new(name, false, format!("entry at the incomparable pair [{}],[{}]", m.labels[i], m.labels[j]));
        }
    }
    let dim = m.dim();
    Check::new(
        name,
        true,
        format!("{dim}x{dim} upper triangular, {} off-diagonal entries at comparable pairs", support.len()),
    )
}

/// `X0` and `H_beta` (order `L`) and their adjoints (order `R`) are
/// triangular in the monomial basis with support on comparable pairs.
pub fn verify_triangularity(n: usize, d_max: u32) -> Report {
    let start = Instant::now();
    let mut r = Report::new("triangularity", json!({ "N": n, "max_degree": d_max }));
    for d in 0..=d_max {
        let space = SymSpace::new(n, d);
        let x0 = build_x0_power_sum(&space);
        let hb = build_hbeta_power_sum(&space);
        let mut cases = vec![(x0.clone(), OrderKind::L), (hb.clone(), OrderKind::L)];
        for (m, inner) in [(&x0, InnerKind::Qt), (&hb, InnerKind::Beta)] {
            match build_adjoint(&space, m, inner) {
                Ok(a) => cases.push((a, OrderKind::R)),
                Err(e) => r.checks.push(Check::error(format!("{}_adjoint d={d}", m.operator.name()), e)),
            }
        }
        for (m, order) in cases {
            let mono = m.to_basis(&space, BasisKind::Monomial).reorder(&space, order);
            r.checks.push(triangular_check(format!("{} ({}) d={d}", m.operator.name(), order.name()), &mono));
        }
    }
    r.timed(start)
}

fn tables(kind: EigenKind, space: &SymSpace) -> Result<(OperatorMatrix, TransitionTable), EigenError> {
    let m = operator_matrix(kind, space)?;
    let t = transition_table_from(kind, &m)?;
    Ok((m, t))
}

/// `<P*_λ, P_μ> = 0` (or `<J*_λ, J_μ>_β = 0`) exactly for `λ ≠ μ`.
pub fn verify_orthogonality(n: usize, d_max: u32, inner: InnerKind) -> Report {
    let start = Instant::now();
    let mut r = Report::new("orthogonality", json!({ "N": n, "max_degree": d_max, "inner": inner.name() }));
    let kind = match inner {
        InnerKind::Qt => EigenKind::MacdonaldP,
        InnerKind::Beta => EigenKind::JackJ,
    };
    for d in 0..=d_max {
        let name = format!("{} d={d}", inner.name());
        let space = SymSpace::new(n, d);
        let built = transition_table_from_kind(kind, &space).and_then(|p| {
            let s = transition_table_from_kind(kind.dual(), &space)?.reorder(&space, OrderKind::L);
            Ok((p, s))
        });
        let (p, s) = match built {
            Ok(v) => v,
            Err(e) => {
                r.checks.push(Check::error(name, e));
                continue;
            }
        };
        let mut off = 0;
        let mut failures = Vec::new();
        let mut zero_norm = Vec::new();
        for i in 0..p.dim() {
            for j in 0..p.dim() {
                let v = match space.scalar_product(&s.element(i), &p.element(j), inner) {
                    Ok(v) => v,
                    Err(e) => {
                        failures.push(format!("error {e}"));
                        continue;
                    }
                };
                if i == j {
                    if v.is_zero() {
                        zero_norm.push(p.labels[i].to_string());
                    }
                } else {
                    off += 1;
                    if !v.is_zero() {
                        failures.push(format!("[{}],[{}]", s.labels[i], p.labels[j]));
                    }
                }
            }
        }
        let ok = failures.is_empty() && zero_norm.is_empty();
        let detail = if ok {
            format!("{off} off-diagonal pairs, all zero; {} nonzero norms", p.dim())
        } else if !failures.is_empty() {
            format!("nonzero off-diagonal pairings: {}", failures.join(" "))
        } else {
            format!("vanishing norms at {}", zero_norm.join(" "))
        };
        r.checks.push(Check::new(name, ok, detail));
    }
    r.timed(start)
}

fn transition_table_from_kind(kind: EigenKind, space: &SymSpace) -> Result<TransitionTable, EigenError> {
    tables(kind, space).map(|(_, t)| t)
}

/// `v M = e v` for every eigenfunction of every kind, and the `X0`
/// diagonal against `Σ u_i ε_{λ(i)}`.
pub fn verify_eigen(n: usize, d_max: u32) -> Report {
    let start = Instant::now();
    let mut r = Report::new("eigen", json!({ "N": n, "max_degree": d_max }));
    for d in 0..=d_max {
        let space = SymSpace::new(n, d);
        for kind in EigenKind::ALL {
            let name = format!("{} d={d}", kind.name());
            let (m, t) = match tables(kind, &space) {
                Ok(v) => v,
                Err(e) => {
                    r.checks.push(Check::error(name, e));
                    continue;
                }
            };
            let bad: Vec<String> = (0..t.dim())
                .filter(|&i| {
                    let image = m.apply_row_vector(&t.rows[i]);
                    !image.iter().zip(&t.rows[i]).all(|(a, b)| a.equals(&(b * &t.eigenvalues[i])))
                })
                .map(|i| t.labels[i].to_string())
                .collect();
            let detail = if bad.is_empty() {
                format!("{} eigen-relations hold exactly", t.dim())
            } else {
                format!("eigen-relation fails at {}", bad.join(" "))
            };
            r.checks.push(Check::new(name, bad.is_empty(), detail));
        }
        let x0 = build_x0(&space, BasisKind::Monomial);
        let bad: Vec<String> = x0
            .labels
            .iter()
            .enumerate()
            .filter(|&(i, l)| !x0.rows[i][i].equals(&eigenvalue_macdonald(l)))
            .map(|(_, l)| l.to_string())
            .collect();
        let detail = if bad.is_empty() {
            format!("{} diagonal entries equal the eigenvalue formula", x0.dim())
        } else {
            format!("diagonal differs from the formula at {}", bad.join(" "))
        };
        r.checks.push(Check::new(format!("X0 diagonal d={d}"), bad.is_empty(), detail));
    }
    r.timed(start)
}

/// `e_λ ≠ e_μ` for all distinct labels of each degree.
pub fn verify_nondegeneracy(n: usize, d_max: u32) -> Report {
    let start = Instant::now();
    let mut r = Report::new("nondegeneracy", json!({ "N": n, "max_degree": d_max }));
    for d in 0..=d_max {
        let labels = enumerate_multipartitions(n, d);
        let e: Vec<RationalFunction> = labels.iter().map(eigenvalue_macdonald).collect();
        let mut pairs = 0;
        let mut equal = Vec::new();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                pairs += 1;
                if e[i].equals(&e[j]) {
                    equal.push(format!("[{}]=[{}]", labels[i], labels[j]));
                }
            }
        }
        let detail = if equal.is_empty() {
            format!("{} eigenvalues, {pairs} pairs, all distinct", e.len())
        } else {
            format!("coinciding eigenvalues: {}", equal.join(" "))
        };
        r.checks.push(Check::new(format!("d={d}"), equal.is_empty(), detail));
    }
    r.timed(start)
}

#[derive(Debug, Clone)]
pub struct LimitParams {
    pub beta: RBig,
    pub uprimes: Vec<RBig>,
    pub hbars: Vec<RBig>,
    pub seed: u64,
}

/// Seeded perturbations of `u'` used when an evaluation hits a pole: the
/// `k`-th retry shifts each `u'_i` by a random multiple of `k/97`.
pub fn jitter(seed: u64, n: usize) -> impl FnMut(u32) -> Vec<RBig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    move |k| {
        (0..n)
            .map(|_| RBig::from(rng.random_range(-5i64..=5)) * RBig::from(k) / RBig::from(97u8))
            .collect()
    }
}

/// Deviations shrink in proportion to `hbar`: each successive ratio of
/// deviations is within a factor 2 of the ratio of the `hbar` values.
pub fn decays_linearly(devs: &[f64], hbars: &[f64]) -> bool {
    if devs.iter().all(|&d| d == 0.0) {
        return true;
    }
    devs.windows(2).zip(hbars.windows(2)).all(|(d, h)| {
        let expected = h[0] / h[1];
        d[1] > 0.0 && {
            let r = (d[0] / d[1]) / expected;
            (0.5..=2.0).contains(&r)
        }
    })
}

fn rbig_to_f64(r: &RBig) -> f64 {
    real_to_f64(&gmj_core::field::real_from_rbig(r))
}

fn show(devs: &[f64]) -> String {
    devs.iter().map(|d| format!("{d:.3e}")).collect::<Vec<_>>().join(", ")
}

/// Macdonald tables specialized at `q = e^hbar, t = q^beta, u_i = q^{u'_i}`
/// approach the Jack tables, and the rescaled `X0` approaches
/// `H_beta + Σu'³/(6β)`, both at rate `O(hbar)`.
pub fn verify_limit(n: usize, d_max: u32, p: &LimitParams) -> Report {
    let start = Instant::now();
    let mut r = Report::new(
        "limit",
        json!({
            "N": n,
            "max_degree": d_max,
            "beta": p.beta.to_string(),
            "uprimes": p.uprimes.iter().map(|u| u.to_string()).collect::<Vec<_>>(),
            "hbars": p.hbars.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
            "seed": p.seed,
            "precision": precision_note(),
        }),
    );
    let hb: Vec<f64> = p.hbars.iter().map(rbig_to_f64).collect();
    let mut worst = 0f64;
    for d in 0..=d_max {
        let name = format!("tables d={d}");
        match jack_limit_check(n, d, &p.beta, &p.uprimes, &p.hbars, jitter(p.seed, n)) {
            Ok(rep) => {
                let devs: Vec<f64> = rep.deviations.iter().map(|(_, x)| real_to_f64(x)).collect();
                worst = devs.iter().fold(worst, |a, &b| a.max(b));
                let mut detail = format!("max deviation per hbar: {}", show(&devs));
                if rep.retries > 0 {
                    detail += &format!(" (u' jittered {} times)", rep.retries);
                }
                r.checks.push(Check::new(name, decays_linearly(&devs, &hb), detail));
            }
            Err(e) => r.checks.push(Check::error(name, e)),
        }
        let name = format!("operator d={d}");
        let space = SymSpace::new(n, d);
        let x0 = build_x0(&space, BasisKind::Monomial);
        let hbeta = build_hbeta(&space, BasisKind::Monomial);
        let run = with_pole_retry(&p.uprimes, jitter(p.seed, n), |u| {
            p.hbars
                .iter()
                .map(|h| operator_limit_deviation(&x0, &hbeta, &p.beta, u, h))
                .collect::<Result<Vec<Real>, _>>()
        });
        match run {
            Ok((devs, _, retries)) => {
                let devs: Vec<f64> = devs.iter().map(real_to_f64).collect();
                worst = devs.iter().fold(worst, |a, &b| a.max(b));
                let mut detail = format!("max deviation per hbar: {}", show(&devs));
                if retries > 0 {
                    detail += &format!(" (u' jittered {retries} times)");
                }
                r.checks.push(Check::new(name, decays_linearly(&devs, &hb), detail));
            }
            Err(e) => r.checks.push(Check::error(name, e)),
        }
    }
    r.worst_deviation = Some(worst);
    r.timed(start)
}
