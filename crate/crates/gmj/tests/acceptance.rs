//! Acceptance criteria 1-8, one PASS/FAIL line each.
//!
//! A criterion may be marked as a documented failure only through an
//! explicit, checked condition (see criterion 1); any other failure, or a
//! documented failure whose evidence no longer holds, fails the run.

#![allow(clippy::needless_range_loop)]

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::Instant;

use dashu_int::IBig;
use dashu_ratio::RBig;
use gmj::fixtures::{Fixture, FIXTURES};
use gmj::verify::{self, LimitParams, Report};
use gmj_core::eigen::{eigenfunction, transition_table, EigenKind};
use gmj_core::field::{rf_equal, Monomial, Poly, RationalFunction, MAX_VARS};
use gmj_core::operators::{build_adjoint, build_hbeta_power_sum, build_x0_power_sum};
use gmj_core::partitions::{
    compare, enumerate_multipartitions, partitions_of, total_order, MultiPartition, OrderKind, OrderResult,
};
use gmj_core::symspace::{BasisKind, InnerKind, SymSpace, SymmetricElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Verdict {
    Pass(String),
    Fail(String),
    /// Fails as stated, for a reason that is itself verified here.
    DocumentedFail(String),
}

fn from_reports(reports: &[Report]) -> Verdict {
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.checks.iter().filter(|c| !c.passed()).map(move |c| format!("{}: {} ({})", r.suite, c.name, c.detail)))
        .collect();
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    if failed.is_empty() {
        Verdict::Pass(format!("{checks} checks"))
    } else {
        Verdict::Fail(failed.join("; "))
    }
}

fn fail_list(what: &str, total: usize, bad: Vec<String>) -> Verdict {
    if bad.is_empty() {
        Verdict::Pass(format!("{total} {what}"))
    } else {
        Verdict::Fail(format!("{} of {total} {what} fail: {}", bad.len(), bad.join(" ")))
    }
}

fn fixtures(mode_filter: impl Fn(&Fixture) -> bool) -> Verdict {
    let mut compared = 0;
    let mut mismatches = Vec::new();
    let mut unexplained = Vec::new();
    for f in FIXTURES.iter().filter(|f| mode_filter(f)) {
        let vars = f.vars();
        let want = match f.matrix() {
            Ok(m) => m,
            Err(e) => return Verdict::Fail(format!("{}: {e}", f.name)),
        };
        let got = match transition_table(f.kind, f.n, f.degree) {
            Ok(t) => t,
            Err(e) => return Verdict::Fail(format!("{}: {e}", f.name)),
        };
        if got.dim() != f.dim() {
            return Verdict::Fail(format!("{}: dimension {} vs {}", f.name, got.dim(), f.dim()));
        }
        for i in 0..f.dim() {
            for j in i + 1..f.dim() {
                compared += 1;
                if got.rows[i][j].equals(&want[i][j]) {
                    continue;
                }
                mismatches.push(format!("{}[{i}][{j}]", f.name));
                let explained = f.errata.iter().find(|e| (e.row, e.col) == (i, j)).is_some_and(|e| {
                    vars.parse(e.corrected).is_ok_and(|c| got.rows[i][j].equals(&c))
                });
                if !explained {
                    unexplained.push(format!("{}[{i}][{j}]", f.name));
                }
            }
            for j in 0..=i {
                if !got.rows[i][j].equals(&want[i][j]) {
                    unexplained.push(format!("{}[{i}][{j}]", f.name));
                }
            }
        }
    }
    if mismatches.is_empty() && unexplained.is_empty() {
        Verdict::Pass(format!("{compared} listed entries equal"))
    } else if unexplained.is_empty() {
        Verdict::DocumentedFail(format!(
            "{} of {compared} listed entries differ: {}; each is a documented misprint (not u-scale invariant) \
             and the engine equals its corrected form",
            mismatches.len(),
            mismatches.join(" ")
        ))
    } else {
        Verdict::Fail(format!("{} of {compared} listed entries differ: {}", unexplained.len(), unexplained.join(" ")))
    }
}

fn criterion_1() -> Verdict {
    fixtures(|f| f.kind == EigenKind::MacdonaldP)
}

fn criterion_2() -> Verdict {
    match fixtures(|f| f.kind == EigenKind::JackJ) {
        Verdict::DocumentedFail(s) => Verdict::Fail(s),
        v => v,
    }
}

fn criterion_3() -> Verdict {
    from_reports(&[verify::verify_eigen(1, 3), verify::verify_eigen(2, 3), verify::verify_eigen(3, 2)])
}

fn criterion_4() -> Verdict {
    from_reports(&[
        verify::verify_orthogonality(2, 3, InnerKind::Qt),
        verify::verify_orthogonality(2, 3, InnerKind::Beta),
    ])
}

fn criterion_5() -> Verdict {
    from_reports(&[verify::verify_nondegeneracy(2, 4), verify::verify_nondegeneracy(3, 2)])
}

fn criterion_6() -> Verdict {
    let rat = |n: i64, d: u64| RBig::from_parts(IBig::from(n), d.into());
    let params = LimitParams {
        beta: rat(2, 1),
        uprimes: vec![rat(0, 1), rat(1, 2)],
        hbars: vec![rat(1, 100), rat(1, 1000), rat(1, 10000)],
        seed: 0,
    };
    let report = verify::verify_limit(2, 2, &params);
    match from_reports(std::slice::from_ref(&report)) {
        Verdict::Pass(s) => Verdict::Pass(format!(
            "{s}; worst deviation {:.3e}; {}",
            report.worst_deviation.unwrap_or(0.0),
            report.checks.iter().map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join("; ")
        )),
        v => v,
    }
}

/// Classical Macdonald polynomials by Gram-Schmidt of the monomial basis,
/// bottom of the dominance order first (the order is total for |λ| ≤ 5).
fn gram_schmidt(d: u32) -> Vec<(MultiPartition, SymmetricElement)> {
    let space = SymSpace::new(1, d);
    let mut done: Vec<(MultiPartition, SymmetricElement, RationalFunction)> = Vec::new();
    for p in partitions_of(d).into_iter().rev() {
        let l = MultiPartition::new(vec![p]);
        let m = SymmetricElement::basis_element(BasisKind::Monomial, l.clone());
        let mut v = m.clone();
        for (_, q, norm) in &done {
            let c = space.scalar_product(&m, q, InnerKind::Qt).unwrap().checked_div(norm).unwrap();
            v = v.add(&q.scale(&-c)).unwrap();
        }
        let norm = space.scalar_product(&v, &v, InnerKind::Qt).unwrap();
        done.push((l, v, norm));
    }
    done.into_iter().map(|(l, v, _)| (l, v)).collect()
}

fn criterion_7() -> Verdict {
    let mut total = 0;
    let mut bad = Vec::new();
    for d in 0..=4 {
        for (l, want) in gram_schmidt(d) {
            total += 1;
            match eigenfunction(EigenKind::MacdonaldP, &l) {
                Ok(got) if got.equals(&want) => {}
                Ok(_) => bad.push(format!("[{l}]")),
                Err(e) => bad.push(format!("[{l}]: {e}")),
            }
        }
    }
    fail_list("partitions", total, bad)
}

fn round_trip() -> (usize, Vec<String>) {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=2 {
        for d in 0..=4 {
            let space = SymSpace::new(n, d);
            for basis in [BasisKind::PowerSum, BasisKind::Monomial] {
                let other = match basis {
                    BasisKind::PowerSum => BasisKind::Monomial,
                    BasisKind::Monomial => BasisKind::PowerSum,
                };
                for l in space.labels(OrderKind::L) {
                    total += 1;
                    let e = SymmetricElement::basis_element(basis, l.clone());
                    let back = space.convert(&space.convert(&e, other).unwrap(), basis).unwrap();
                    if !back.equals(&e) {
                        bad.push(format!("round trip N={n} [{l}]"));
                    }
                }
            }
        }
    }
    (total, bad)
}

fn order_axioms() -> (usize, Vec<String>) {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for d in 0..=4 {
            let all = enumerate_multipartitions(n, d);
            for kind in [OrderKind::L, OrderKind::R] {
                for x in &all {
                    for y in &all {
                        total += 1;
                        let (p, q) = (compare(x, y, kind), compare(y, x, kind));
                        let mirrored = matches!(
                            (p, q),
                            (OrderResult::Greater, OrderResult::Less)
                                | (OrderResult::Less, OrderResult::Greater)
                                | (OrderResult::Equal, OrderResult::Equal)
                                | (OrderResult::Incomparable, OrderResult::Incomparable)
                        );
                        let equal_iff_same = (p == OrderResult::Equal) == (x == y);
                        let total_ok = total_order(x, y, kind) == total_order(y, x, kind).reverse()
                            && (total_order(x, y, kind) == Ordering::Equal) == (x == y);
                        let refines = p != OrderResult::Greater || total_order(x, y, kind) == Ordering::Greater;
                        if !(mirrored && equal_iff_same && total_ok && refines) {
                            bad.push(format!("{} [{x}] [{y}]", kind.name()));
                        }
                        if n <= 2 || d <= 3 {
                            for z in &all {
                                let partial = p == OrderResult::Greater
                                    && compare(y, z, kind) == OrderResult::Greater
                                    && compare(x, z, kind) != OrderResult::Greater;
                                let strict = total_order(x, y, kind) == Ordering::Greater
                                    && total_order(y, z, kind) == Ordering::Greater
                                    && total_order(x, z, kind) != Ordering::Greater;
                                if partial || strict {
                                    bad.push(format!("transitivity {} [{x}] [{y}] [{z}]", kind.name()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    (total, bad)
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let terms = (0..rng.random_range(1..5))
        .map(|_| {
            let mut e = [0u16; MAX_VARS];
            for x in e.iter_mut().take(4) {
                *x = rng.random_range(0..3);
            }
            (Monomial(e), IBig::from(rng.random_range(-4i64..=4)))
        })
        .collect();
    Poly::from_terms(terms)
}

fn random_rf(rng: &mut ChaCha8Rng) -> RationalFunction {
    loop {
        let (n, d) = (random_poly(rng), random_poly(rng));
        if !d.is_zero() {
            return RationalFunction::new(n, d).expect("nonzero denominator");
        }
    }
}

fn field_axioms() -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut bad = Vec::new();
    let cases = 1000;
    for case in 0..cases {
        let (x, y, z) = (random_rf(&mut rng), random_rf(&mut rng), random_rf(&mut rng));
        let ok = rf_equal(&(&x + &y), &(&y + &x))
            && rf_equal(&(&x * &y), &(&y * &x))
            && rf_equal(&(&(&x + &y) + &z), &(&x + &(&y + &z)))
            && rf_equal(&(&(&x * &y) * &z), &(&x * &(&y * &z)))
            && rf_equal(&(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z)))
            && (&x + &-x.clone()).is_zero()
            && (x.is_zero() || x.inv().is_ok_and(|i| (&x * &i).is_one()));
        if !ok {
            bad.push(format!("field case {case}"));
        }
    }
    (cases, bad)
}

/// `<A* f, g> = <f, A g>` on the power-sum basis, where the Gram matrix is
/// diagonal.
fn adjoint_identity() -> (usize, Vec<String>) {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=2 {
        for d in 0..=3 {
            let space = SymSpace::new(n, d);
            for m in [build_x0_power_sum(&space), build_hbeta_power_sum(&space)] {
                for kind in [InnerKind::Qt, InnerKind::Beta] {
                    let a = match build_adjoint(&space, &m, kind) {
                        Ok(a) => a,
                        Err(e) => {
                            bad.push(format!("adjoint {} N={n} d={d}: {e}", m.operator.name()));
                            continue;
                        }
                    };
                    let g: Vec<RationalFunction> = m.labels.iter().map(|l| space.gram_entry(kind, l)).collect();
                    for i in 0..m.dim() {
                        for j in 0..m.dim() {
                            total += 1;
                            if !(&a.rows[i][j] * &g[j]).equals(&(&m.rows[j][i] * &g[i])) {
                                bad.push(format!("adjoint {} {} N={n} d={d} ({i},{j})", m.operator.name(), kind.name()));
                            }
                        }
                    }
                }
            }
        }
    }
    (total, bad)
}

/// Operator triangularity plus eigenfunction support on comparable labels.
fn triangularity_support() -> (usize, Vec<String>) {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=2 {
        let r = verify::verify_triangularity(n, 4);
        total += r.checks.len();
        bad.extend(r.checks.iter().filter(|c| !c.passed()).map(|c| format!("{} N={n}: {}", c.name, c.detail)));
    }
    for (n, d_max) in [(1, 3), (2, 3), (3, 2)] {
        for d in 0..=d_max {
            for kind in EigenKind::ALL {
                let t = match transition_table(kind, n, d) {
                    Ok(t) => t,
                    Err(e) => {
                        bad.push(format!("{} N={n} d={d}: {e}", kind.name()));
                        continue;
                    }
                };
                for (i, row) in t.rows.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        total += 1;
                        let rel = compare(&t.labels[i], &t.labels[j], kind.order());
                        let allowed = matches!(rel, OrderResult::Greater | OrderResult::Equal);
                        if !c.is_zero() && !allowed {
                            bad.push(format!("{} [{}] has support at [{}]", kind.name(), t.labels[i], t.labels[j]));
                        }
                    }
                }
            }
        }
    }
    (total, bad)
}

fn criterion_8() -> Verdict {
    let mut parts = Vec::new();
    let mut bad = Vec::new();
    for (name, run) in [
        ("basis round-trip", round_trip as fn() -> (usize, Vec<String>)),
        ("order-axiom", order_axioms),
        ("field-axiom", field_axioms),
        ("adjoint-identity", adjoint_identity),
        ("triangularity-support", triangularity_support),
    ] {
        let (total, failures) = run();
        parts.push(format!("{name} {}/{total}", total - failures.len().min(total)));
        bad.extend(failures);
    }
    if bad.is_empty() {
        Verdict::Pass(parts.join(", "))
    } else {
        let shown: Vec<_> = bad.iter().take(20).cloned().collect();
        Verdict::Fail(format!("{}; failures: {}", parts.join(", "), shown.join(" ")))
    }
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Macdonald tables reproduce M1_qt, M2_qt exactly", criterion_1),
        ("Jack tables reproduce M1_beta, M2_beta exactly", criterion_2),
        ("X0 diagonal equals the eigenvalue formula; v M = e v for all kinds", criterion_3),
        ("starred/unstarred biorthogonality, qt and beta, N=2, d<=3", criterion_4),
        ("pairwise distinct eigenvalues, N=2 d<=4, N=3 d<=2", criterion_5),
        ("hbar -> 0 limit decays 5x-20x per decade, tables and operator", criterion_6),
        ("single colour equals Gram-Schmidt Macdonald polynomials, |lambda|<=4", criterion_7),
        ("property suites", criterion_8),
    ];
    let mut unexpected = 0;
    let mut documented = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        let (status, detail) = match &verdict {
            Verdict::Pass(d) => ("PASS", d.clone()),
            Verdict::Fail(d) => {
                unexpected += 1;
                ("FAIL", d.clone())
            }
            Verdict::DocumentedFail(d) => {
                documented += 1;
                ("FAIL", format!("documented: {d}"))
            }
        };
        println!("criterion {} {status} [{secs:.2}s] {name}: {detail}", i + 1);
    }
    println!("{} passed, {documented} documented failures, {unexpected} unexpected failures", 8 - documented - unexpected);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
