use std::time::Instant;

use fixpoint::characters::verify_ratio_asymptotics;
use fixpoint::moments::{
    moment_commutator_fixed, moment_commutator_fixed_closed, moment_commutator_random, moment_icycle_walk,
    walk_cutoff_comparison, walk_exact_distribution, WalkCutoffReport,
};
use fixpoint::multiplicity::{mult_ding, ding_applies, mult_oracle, mult_skew, mult_updown};
use fixpoint::simulate::perm::{all_permutations, class_representative};
use fixpoint::simulate::{enumerate_commutator_distribution, exact_shape_probabilities};
use fixpoint::{
    all_partitions, bell, character, BigCount, multiplicity, poisson_moment, CycleType, Exact, Permutation, Real, Scalar,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::args::Suite;
use crate::output::Table;

type Gate = (&'static str, &'static str, fn() -> Result<String, String>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: fixpoint::Error) -> String {
    e.to_string()
}

fn q(n: i64, d: i64) -> Exact {
    Exact::new(n.into(), d.into())
}

fn bq(r: usize) -> Exact {
    Exact::from_integer(bell(r).into())
}

fn dimension_identity() -> Result<String, String> {
    for n in 1..=8usize {
        for r in 0..=6 {
            let s: BigCount = all_partitions(n).map(|l| multiplicity(&l, r) * l.dim()).sum();
            check(s == BigCount::from(n).pow(r as u32), || format!("n={n} r={r}"))?;
        }
    }
    Ok("sum m d = n^r for n<=8, r<=6".into())
}

fn bell_moments() -> Result<String, String> {
    for r in 0..=20 {
        check(poisson_moment(r, &Exact::one()) == bq(r), || format!("r={r}"))?;
    }
    Ok("Poisson(1) moments equal Bell numbers, r<=20".into())
}

fn closed_forms() -> Result<String, String> {
    for n in 4..=9 {
        for x in all_partitions(n).map(CycleType::new) {
            for r in 1..=2 {
                let a = moment_commutator_fixed_closed(n, &x, r).map_err(err)?;
                let b = moment_commutator_fixed(n, &x, r).map_err(err)?;
                check(a == b, || format!("n={n} x={x} r={r}"))?;
            }
        }
    }
    Ok("closed-form mean and second moment match, 4<=n<=9".into())
}

fn walk_distribution_identities() -> Result<String, String> {
    for n in 2..=8 {
        for i in 2..=n.min(4) {
            for k in 0..=5u64 {
                let d = walk_exact_distribution(n, i, k).map_err(err)?;
                check(d.total().is_one(), || format!("n={n} i={i} k={k} total"))?;
                check(d.probabilities().iter().all(|p| !p.is_negative() && *p <= Exact::one()), || format!("n={n} i={i} k={k} range"))?;
                for r in 1..=3 {
                    let m: Exact = moment_icycle_walk(n, i, k, r).map_err(err)?;
                    check(m == d.moment(r), || format!("n={n} i={i} k={k} r={r}"))?;
                }
            }
        }
    }
    Ok("walk laws sum to 1 and reproduce the moment engine, n<=8".into())
}

fn shape_probabilities() -> Result<String, String> {
    for n in 1..=8 {
        for r in 0..=6 {
            let total: Exact = exact_shape_probabilities(n, r).into_iter().map(|(_, p)| p).sum();
            check(total.is_one(), || format!("n={n} r={r}"))?;
        }
    }
    Ok("RSK shape laws sum to 1, n<=8, r<=6".into())
}

fn ratio_asymptotics() -> Result<String, String> {
    let grid = [200, 400, 800, 1600, 3200];
    let mut seqs = Vec::new();
    for i in [2, 3, 5] {
        for t in 1..=3 {
            let rep = verify_ratio_asymptotics(i, t, &grid).map_err(err)?;
            let seq: Vec<String> = rep.rows.iter().map(|r| format!("{:.4}", Scalar::to_f64(&r.max_scaled_error))).collect();
            check(rep.non_increasing(), || format!("i={i} t={t} not non-increasing: {seq:?}"))?;
            seqs.push(format!("i={i},t={t}:[{}]", seq.join(",")));
        }
    }
    Ok(format!("E-sequences over n=200..3200: {}", seqs.join(" ")))
}

fn commutator_trend() -> Result<String, String> {
    let mut out = Vec::new();
    for r in 1..=4 {
        let gap = |n: usize| (moment_commutator_random(n, r) - bq(r)).abs() * q(n as i64, 1);
        let c = gap(20);
        for n in [40, 80, 160] {
            check(gap(n) <= c, || format!("r={r} n={n}"))?;
        }
        out.push(format!("C_{r}={:.4}", Scalar::to_f64(&c)));
    }
    Ok(format!("n |moment - B(r)| <= C_r: {}", out.join(" ")))
}

fn walk_cutoff() -> Result<String, String> {
    let mut worst = 0.0f64;
    for i in [2, 3] {
        for c in [-0.5, 0.0, 1.0] {
            let big: WalkCutoffReport<Real> = walk_cutoff_comparison(2000, i, c, 3).map_err(err)?;
            let small: WalkCutoffReport<Real> = walk_cutoff_comparison(500, i, c, 3).map_err(err)?;
            for (b, s) in big.rows.iter().zip(&small.rows) {
                let e = b.difference.to_f64().abs();
                check(e <= 0.05 * (1.0 + b.reference.to_f64()), || format!("i={i} c={c} r={}", b.r))?;
                check(e < s.difference.to_f64().abs(), || format!("i={i} c={c} r={} did not shrink", b.r))?;
            }
            worst = worst.max(big.worst_relative_error());
        }
    }
    Ok(format!("n=2000 worst relative error {worst:.4}"))
}

fn mult_cross_algorithm() -> Result<String, String> {
    for n in 1..=6 {
        for l in all_partitions(n) {
            for r in 0..=5 {
                let s = mult_skew(&l, r);
                check(s == mult_updown(&l, r), || format!("updown {l} r={r}"))?;
                check(s == mult_oracle(&l, r).map_err(err)?, || format!("oracle {l} r={r}"))?;
                if ding_applies(&l, r) {
                    check(s == mult_ding(&l, r).map_err(err)?, || format!("ding {l} r={r}"))?;
                }
            }
        }
    }
    Ok("skew = updown = oracle (= ding where valid), n<=6, r<=5".into())
}

fn commutator_enumeration() -> Result<String, String> {
    for n in 1..=6 {
        let d = enumerate_commutator_distribution(n, None).map_err(err)?;
        for r in 0..=4 {
            check(d.moment(r) == moment_commutator_random(n, r), || format!("both random n={n} r={r}"))?;
        }
        for x in all_partitions(n).map(CycleType::new) {
            let d = enumerate_commutator_distribution(n, Some(&x)).map_err(err)?;
            for r in 0..=4 {
                check(d.moment(r) == moment_commutator_fixed(n, &x, r).map_err(err)?, || format!("n={n} x={x} r={r}"))?;
            }
        }
    }
    Ok("enumeration matches both commutator engines, n<=6".into())
}

fn functional_equation() -> Result<String, String> {
    for n in 1..=5 {
        let perms: Vec<Permutation> = all_permutations(n).collect();
        for mu in all_partitions(n).map(CycleType::new) {
            let xp = class_representative(&mu);
            let types: Vec<CycleType> = perms.iter().map(|g| Permutation::commutator(g, &xp).cycle_type()).collect();
            for l in all_partitions(n) {
                let mut sum = BigInt::zero();
                for ty in &types {
                    sum += character(&l, ty).map_err(err)?.0;
                }
                let chi = character(&l, &mu).map_err(err)?.0;
                let lhs = Exact::new(sum, perms.len().into());
                let rhs = Exact::new(&chi * &chi, l.dim().into());
                check(lhs == rhs, || format!("n={n} lambda={l} x={mu}"))?;
            }
        }
    }
    Ok("average of chi over commutators equals chi(x)^2/chi(1), n<=5".into())
}

fn column_orthogonality() -> Result<String, String> {
    for n in 1..=7 {
        let classes: Vec<CycleType> = all_partitions(n).map(CycleType::new).collect();
        let table: Vec<Vec<_>> = all_partitions(n)
            .map(|l| classes.iter().map(|mu| character(&l, mu).map(|c| c.0)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for (a, mu) in classes.iter().enumerate() {
            for (b, _) in classes.iter().enumerate() {
                let s = table.iter().fold(BigInt::zero(), |acc, row| acc + &row[a] * &row[b]);
                let want = if a == b { mu.centralizer_size().into() } else { Zero::zero() };
                check(s == want, || format!("n={n} columns {a},{b}"))?;
            }
        }
    }
    Ok("character columns orthogonal, n<=7".into())
}

const GATES: &[Gate] = &[
    ("identities", "dimension_identity", dimension_identity),
    ("identities", "bell_moments", bell_moments),
    ("identities", "closed_forms", closed_forms),
    ("identities", "walk_distribution", walk_distribution_identities),
    ("identities", "shape_probabilities", shape_probabilities),
    ("asymptotics", "ratio_asymptotics", ratio_asymptotics),
    ("asymptotics", "commutator_trend", commutator_trend),
    ("asymptotics", "walk_cutoff", walk_cutoff),
    ("oracles", "multiplicity_cross_algorithm", mult_cross_algorithm),
    ("oracles", "commutator_enumeration", commutator_enumeration),
    ("oracles", "functional_equation", functional_equation),
    ("oracles", "column_orthogonality", column_orthogonality),
];

pub struct GateResult {
    pub suite: &'static str,
    pub gate: &'static str,
    pub passed: bool,
    pub seconds: f64,
    pub detail: String,
}

impl GateResult {
    pub fn json(&self) -> serde_json::Value {
        json!({
            "schema_version": crate::output::SCHEMA_VERSION,
            "suite": self.suite,
            "gate": self.gate,
            "passed": self.passed,
            "seconds": self.seconds,
            "detail": self.detail,
        })
    }
}

pub fn run(suite: Suite) -> Vec<GateResult> {
    let wanted = |s: &str| match suite {
        Suite::All => true,
        Suite::Identities => s == "identities",
        Suite::Asymptotics => s == "asymptotics",
        Suite::Oracles => s == "oracles",
    };
    GATES
        .iter()
        .filter(|(s, _, _)| wanted(s))
        .map(|&(suite, gate, f)| {
            let start = Instant::now();
            let outcome = f();
            let seconds = start.elapsed().as_secs_f64();
            eprintln!("{gate}: {}", if outcome.is_ok() { "pass" } else { "FAIL" });
            match outcome {
                Ok(detail) => GateResult { suite, gate, passed: true, seconds, detail },
                Err(detail) => GateResult { suite, gate, passed: false, seconds, detail },
            }
        })
        .collect()
}

pub fn table(results: &[GateResult]) -> Table {
    let mut t = Table::new(&["suite", "gate", "passed", "seconds", "detail"]);
    for r in results {
        t.push(vec![r.suite.into(), r.gate.into(), r.passed.to_string(), format!("{:.3}", r.seconds), r.detail.clone()]);
    }
    t
}
