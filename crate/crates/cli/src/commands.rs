use fixpoint::characters::verify_ratio_asymptotics;
use fixpoint::moments::{
    commutator_fixed_report, commutator_random_report, moment_commutator_fixed, moment_commutator_random,
    moment_icycle_walk, walk_effective_c, walk_limit_mean, walk_report, walk_step_count, MomentReport,
};
use fixpoint::multiplicity::{mult_ding, mult_oracle, mult_skew, mult_updown};
use fixpoint::simulate::perm::class_representative;
use fixpoint::simulate::{
    enumerate_commutator_distribution, enumerate_fixed_point_distribution, simulate_fixed_points, tv_to_scaled_poisson,
    SamplerModel,
};
use fixpoint::{
    bell, char_ratio_icycle, moments, CycleType, Exact, ExactDistribution, HighFloat, Partition, RealScalar, Scalar,
};
use serde_json::{json, Value};

use crate::args::{AlgChoice, DistModel, MomentModel, Precision, SimModel};
use crate::output::{rational, Emit, Report, RunConfig, Table};
use crate::CliError;

/// A report plus a failure to raise after it is printed.
pub type Outcome = (Report, Option<CliError>);

fn require<T>(value: Option<T>, flag: &str, ctx: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Validation(format!("{ctx} needs --{flag}")))
}

pub fn mult(mut cfg: RunConfig, lambda: &Partition, r: usize, alg: AlgChoice) -> Result<Outcome, CliError> {
    cfg.lambda = Some(lambda.to_string());
    cfg.n = Some(lambda.size());
    cfg.r = Some(r);
    cfg.alg = Some(format!("{alg:?}").to_lowercase());
    let run = |a: AlgChoice| -> Result<String, fixpoint::Error> {
        Ok(match a {
            AlgChoice::Skew => mult_skew(lambda, r),
            AlgChoice::Updown => mult_updown(lambda, r),
            AlgChoice::Ding => mult_ding(lambda, r)?,
            AlgChoice::Oracle => mult_oracle(lambda, r)?,
            AlgChoice::All => unreachable!(),
        }
        .to_string())
    };
    let algs = match alg {
        AlgChoice::All => vec![AlgChoice::Skew, AlgChoice::Updown, AlgChoice::Ding, AlgChoice::Oracle],
        single => vec![single],
    };
    let mut table = Table::new(&["algorithm", "value", "status"]);
    let mut results = Vec::new();
    let mut values = Vec::new();
    for a in algs {
        let name = format!("{a:?}").to_lowercase();
        match run(a) {
            Ok(v) => {
                table.push(vec![name.clone(), v.clone(), "ok".into()]);
                results.push(json!({ "algorithm": name, "value": v }));
                values.push((name, v));
            }
            Err(e) if alg == AlgChoice::All => {
                table.push(vec![name.clone(), String::new(), format!("skipped: {e}")]);
                results.push(json!({ "algorithm": name, "skipped": e.to_string() }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let result = json!({ "lambda": lambda.to_string(), "n": lambda.size(), "r": r, "results": results, "agree": agree });
    let failure = (!agree).then(|| {
        let listing: Vec<String> = values.iter().map(|(a, v)| format!("{a}={v}")).collect();
        CliError::Disagreement(format!("multiplicity of {lambda} at r={r}: {}", listing.join(", ")))
    });
    Ok((Report { config: cfg, result, table }, failure))
}

fn moment_table<T: Scalar + Emit>(rep: &MomentReport<T>) -> (Vec<Value>, Table) {
    let mut table = Table::new(&["r", "moment", "reference", "difference", "formula"]);
    let mut entries = Vec::new();
    for (j, diff) in rep.differences().iter().enumerate() {
        let (m, rf, f) = (&rep.moments[j], &rep.reference_moments[j], rep.formula_used[j]);
        table.push(vec![(j + 1).to_string(), m.cell(), rf.cell(), diff.cell(), f.tag().into()]);
        entries.push(json!({
            "r": j + 1,
            "moment": m.json(),
            "reference": rf.json(),
            "difference": diff.json(),
            "formula": f.tag(),
        }));
    }
    (entries, table)
}

fn moment_body<T: Scalar + Emit>(rep: &MomentReport<T>, extra: Value) -> (Value, Table) {
    let (entries, table) = moment_table(rep);
    let mut body = json!({
        "model": rep.model.name(),
        "n": rep.params.n,
        "reference": {
            "label": rep.reference.label,
            "scale": rep.reference.scale,
            "mean": rep.reference.mean.json(),
        },
        "entries": entries,
    });
    if let (Value::Object(b), Value::Object(e)) = (&mut body, extra) {
        b.extend(e);
    }
    (body, table)
}

fn walk_body<T: RealScalar + Emit>(n: usize, i: usize, k: u64, c: Option<f64>, r_max: usize) -> Result<(Value, Table), CliError> {
    let rep: MomentReport<T> = walk_report(n, i, k, c, r_max)?;
    let extra = json!({
        "i": i,
        "k": k,
        "c_effective": walk_effective_c(n, i, k),
        "scalar": T::kind(),
        "precision_bits": T::precision_bits(),
    });
    Ok(moment_body(&rep, extra))
}

fn walk_body_exact(n: usize, i: usize, k: u64, c: Option<f64>, r_max: usize) -> Result<(Value, Table), CliError> {
    let real: MomentReport<HighFloat<128>> = walk_report(n, i, k, c, r_max)?;
    let mut table = Table::new(&["r", "moment", "reference", "difference", "formula"]);
    let mut entries = Vec::new();
    for r in 1..=r_max {
        let m: Exact = moment_icycle_walk(n, i, k, r)?;
        let reference = &real.reference_moments[r - 1];
        let diff = <HighFloat<128> as Scalar>::from_ratio(&m) - reference.clone();
        let tag = real.formula_used[r - 1].tag();
        table.push(vec![r.to_string(), m.cell(), reference.cell(), diff.cell(), tag.into()]);
        entries.push(json!({
            "r": r, "moment": m.json(), "reference": reference.json(), "difference": diff.json(), "formula": tag,
        }));
    }
    let body = json!({
        "model": real.model.name(),
        "n": n,
        "i": i,
        "k": k,
        "c_effective": walk_effective_c(n, i, k),
        "scalar": "exact",
        "reference": { "label": real.reference.label, "scale": 1, "mean": real.reference.mean.json() },
        "reference_precision_bits": 128,
        "entries": entries,
    });
    Ok((body, table))
}

fn resolve_k(n: usize, i: usize, k: Option<u64>, c: Option<f64>) -> Result<u64, CliError> {
    match (k, c) {
        (Some(k), None) => Ok(k),
        (None, Some(c)) => Ok(walk_step_count(n, i, c)?),
        (Some(_), Some(_)) => Err(CliError::Validation("give either --k or --c, not both".into())),
        (None, None) => Err(CliError::Validation("walk needs --k or --c".into())),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn moments(
    mut cfg: RunConfig,
    model: MomentModel,
    n: Option<usize>,
    x: Option<CycleType>,
    i: Option<usize>,
    k: Option<u64>,
    c: Option<f64>,
    r_max: usize,
    precision: Precision,
) -> Result<Outcome, CliError> {
    cfg.r_max = Some(r_max);
    let (result, table) = match model {
        MomentModel::CommutatorRandom => {
            let n = require(n, "n", "commutator-random")?;
            if n == 0 {
                return Err(CliError::Validation("n must be at least 1".into()));
            }
            cfg.model = Some("commutator-random".into());
            cfg.n = Some(n);
            let rep = commutator_random_report(n, r_max);
            let bell_ok = (1..=r_max).all(|r| rep.moments[r - 1] >= rep.reference_moments[r - 1]);
            moment_body(&rep, json!({ "at_least_bell": bell_ok }))
        }
        MomentModel::CommutatorFixed => {
            let x = require(x, "x", "commutator-fixed")?;
            if let Some(n) = n {
                if n != x.n() {
                    return Err(fixpoint::Error::SizeMismatch { left: n, right: x.n() }.into());
                }
            }
            cfg.model = Some("commutator-fixed".into());
            cfg.n = Some(x.n());
            cfg.x = Some(x.to_string());
            let rep = commutator_fixed_report(&x, r_max)?;
            moment_body(&rep, json!({ "x": x.to_string(), "n1": x.n1(), "n2": x.n2() }))
        }
        MomentModel::Walk => {
            let n = require(n, "n", "walk")?;
            let i = require(i, "i", "walk")?;
            let k = resolve_k(n, i, k, c)?;
            cfg.model = Some("walk".into());
            cfg.n = Some(n);
            cfg.i = Some(i);
            cfg.k = Some(k);
            cfg.c = c;
            match precision {
                Precision::Exact => walk_body_exact(n, i, k, c, r_max)?,
                Precision::Bits24 => walk_body::<f32>(n, i, k, c, r_max)?,
                Precision::Bits53 => walk_body::<f64>(n, i, k, c, r_max)?,
                Precision::Bits128 => walk_body::<HighFloat<128>>(n, i, k, c, r_max)?,
                Precision::Bits256 => walk_body::<HighFloat<256>>(n, i, k, c, r_max)?,
            }
        }
    };
    Ok((Report { config: cfg, result, table }, None))
}

/// `(scale, mean, label)` of the limit law used for the TV distance.
struct Limit {
    scale: usize,
    mean: f64,
    label: String,
}

impl Limit {
    fn poisson(mean: f64) -> Self {
        Limit { scale: 1, mean, label: format!("Poisson({mean})") }
    }

    fn for_fixed(x: &CycleType) -> Result<Self, CliError> {
        let rep = commutator_fixed_report(x, 1)?;
        Ok(Limit {
            scale: rep.reference.scale as usize,
            mean: Scalar::to_f64(&rep.reference.mean),
            label: rep.reference.label,
        })
    }

    fn json(&self) -> Value {
        json!({ "label": self.label, "scale": self.scale, "mean": self.mean.to_string() })
    }
}

#[allow(clippy::too_many_arguments)]
pub fn simulate(
    mut cfg: RunConfig,
    model: SimModel,
    n: usize,
    x: Option<CycleType>,
    i: Option<usize>,
    k: Option<u64>,
    c: Option<f64>,
    samples: u64,
    r_max: usize,
    seed: u64,
) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Validation("n must be at least 1".into()));
    }
    cfg.n = Some(n);
    cfg.samples = Some(samples);
    cfg.r_max = Some(r_max);
    // exact moment for r = 1..=r_max where one is available
    let (sampler, limit, exact): (SamplerModel, Limit, Vec<Option<Value>>) = match model {
        SimModel::Uniform => {
            cfg.model = Some("uniform".into());
            let exact = (1..=r_max)
                .map(|r| (r <= n).then(|| rational(&Exact::from_integer(bell(r).into()))))
                .collect();
            (SamplerModel::Uniform, Limit::poisson(1.0), exact)
        }
        SimModel::Commutator => match x {
            None => {
                cfg.model = Some("commutator".into());
                let exact = (1..=r_max).map(|r| Some(rational(&moment_commutator_random(n, r)))).collect();
                (SamplerModel::Commutator { x: None }, Limit::poisson(1.0), exact)
            }
            Some(x) => {
                if x.n() != n {
                    return Err(fixpoint::Error::SizeMismatch { left: n, right: x.n() }.into());
                }
                cfg.model = Some("commutator-fixed".into());
                cfg.x = Some(x.to_string());
                let exact = (1..=r_max)
                    .map(|r| moment_commutator_fixed(n, &x, r).map(|m| Some(rational(&m))))
                    .collect::<Result<_, _>>()?;
                (SamplerModel::Commutator { x: Some(class_representative(&x)) }, Limit::for_fixed(&x)?, exact)
            }
        },
        SimModel::Walk => {
            let i = require(i, "i", "walk")?;
            let k = resolve_k(n, i, k, c)?;
            cfg.model = Some("walk".into());
            cfg.i = Some(i);
            cfg.k = Some(k);
            cfg.c = c;
            let c_ref = c.unwrap_or_else(|| walk_effective_c(n, i, k));
            let mean: f64 = walk_limit_mean(i, c_ref);
            let exact = (1..=r_max)
                .map(|r| moment_icycle_walk::<HighFloat<128>>(n, i, k, r).map(|m| Some(m.json())))
                .collect::<Result<_, _>>()?;
            (SamplerModel::IcycleWalk { i, k }, Limit::poisson(mean), exact)
        }
    };
    let dist = simulate_fixed_points(n, &sampler, samples, seed)?;
    let tv = tv_to_scaled_poisson(&dist, limit.scale, limit.mean);
    let mut table = Table::new(&["r", "empirical", "std_error", "exact", "z"]);
    let mut entries = Vec::new();
    for r in 1..=r_max {
        let emp = dist.moment(r);
        let se = dist.moment_std_error(r);
        let exact_v = exact[r - 1].clone();
        let z = exact_v.as_ref().map(|v| (emp - value_to_f64(v)) / se).filter(|z| z.is_finite());
        table.push(vec![
            r.to_string(),
            format!("{emp:e}"),
            format!("{se:e}"),
            exact_v.as_ref().map(value_cell).unwrap_or_default(),
            z.map(|z| format!("{z:.3}")).unwrap_or_default(),
        ]);
        entries.push(json!({
            "r": r,
            "empirical": emp.to_string(),
            "std_error": se.to_string(),
            "exact": exact_v,
            "z": z.map(|z| z.to_string()),
            "within_4_sigma": z.map(|z| z.abs() <= 4.0),
        }));
    }
    let result = json!({
        "model": dist.model,
        "n": n,
        "samples": dist.samples,
        "seed": dist.seed,
        "histogram": dist.counts,
        "moments": entries,
        "reference": limit.json(),
        "tv_to_reference": tv.to_string(),
    });
    Ok((Report { config: cfg, result, table }, None))
}

fn value_to_f64(v: &Value) -> f64 {
    match v {
        Value::String(s) => s.parse().unwrap_or(f64::NAN),
        Value::Object(o) => {
            let num: f64 = o["num"].as_str().and_then(|s| s.parse().ok()).unwrap_or(f64::NAN);
            let den: f64 = o["den"].as_str().and_then(|s| s.parse().ok()).unwrap_or(f64::NAN);
            num / den
        }
        _ => f64::NAN,
    }
}

fn value_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) => {
            let num = o["num"].as_str().unwrap_or("");
            let den = o["den"].as_str().unwrap_or("1");
            if den == "1" {
                num.to_string()
            } else {
                format!("{num}/{den}")
            }
        }
        other => other.to_string(),
    }
}

pub fn ratio(
    mut cfg: RunConfig,
    lambda: Option<Partition>,
    i: usize,
    t: Option<usize>,
    n_list: Option<Vec<usize>>,
) -> Result<Outcome, CliError> {
    cfg.i = Some(i);
    match (lambda, t, n_list) {
        (Some(lambda), None, None) => {
            cfg.lambda = Some(lambda.to_string());
            cfg.n = Some(lambda.size());
            let rho = char_ratio_icycle(&lambda, i)?;
            let mut table = Table::new(&["lambda", "i", "ratio", "decimal"]);
            let dec = Scalar::to_f64(&rho);
            table.push(vec![lambda.to_string(), i.to_string(), rho.cell(), format!("{dec:e}")]);
            let result = json!({ "lambda": lambda.to_string(), "i": i, "ratio": rho.json(), "decimal": dec.to_string() });
            Ok((Report { config: cfg, result, table }, None))
        }
        (None, Some(t), Some(n_list)) => {
            cfg.t = Some(t);
            cfg.n_list = Some(n_list.clone());
            let rep = verify_ratio_asymptotics(i, t, &n_list)?;
            let mut table = Table::new(&["n", "shapes", "max_scaled_error", "decimal"]);
            let mut rows = Vec::new();
            for row in &rep.rows {
                let dec = Scalar::to_f64(&row.max_scaled_error);
                table.push(vec![row.n.to_string(), row.shapes.len().to_string(), row.max_scaled_error.cell(), format!("{dec:e}")]);
                rows.push(json!({
                    "n": row.n,
                    "shapes": row.shapes.len(),
                    "max_scaled_error": rational(&row.max_scaled_error),
                    "decimal": dec.to_string(),
                }));
            }
            let result = json!({
                "i": i,
                "t": t,
                "rows": rows,
                "observed_constant": rational(&rep.observed_constant()),
                "non_increasing": rep.non_increasing(),
            });
            Ok((Report { config: cfg, result, table }, None))
        }
        _ => Err(CliError::Validation("ratio needs either --lambda, or both --t and --n-list".into())),
    }
}

pub fn dist(
    mut cfg: RunConfig,
    model: DistModel,
    n: usize,
    x: Option<CycleType>,
    i: Option<usize>,
    k: Option<u64>,
    r_max: usize,
) -> Result<Outcome, CliError> {
    cfg.n = Some(n);
    cfg.r_max = Some(r_max);
    let (d, limit): (ExactDistribution, Limit) = match model {
        DistModel::Uniform => {
            cfg.model = Some("uniform".into());
            (enumerate_fixed_point_distribution(n)?, Limit::poisson(1.0))
        }
        DistModel::Commutator => {
            cfg.model = Some("commutator".into());
            cfg.x = x.as_ref().map(|x| x.to_string());
            let limit = match &x {
                Some(x) if x.n() == n => Limit::for_fixed(x)?,
                _ => Limit::poisson(1.0),
            };
            (enumerate_commutator_distribution(n, x.as_ref())?, limit)
        }
        DistModel::Walk => {
            let i = require(i, "i", "walk")?;
            let k = require(k, "k", "walk")?;
            cfg.model = Some("walk".into());
            cfg.i = Some(i);
            cfg.k = Some(k);
            let d = moments::walk_exact_distribution(n, i, k)?;
            let mean: f64 = if n >= 2 { walk_limit_mean(i, walk_effective_c(n, i, k)) } else { 1.0 };
            (d, Limit::poisson(mean))
        }
    };
    let mut table = Table::new(&["fixed_points", "probability", "decimal"]);
    let mut probs = Vec::new();
    for (j, p) in d.probabilities().iter().enumerate() {
        let dec = Scalar::to_f64(p);
        table.push(vec![j.to_string(), p.cell(), format!("{dec:e}")]);
        probs.push(json!({ "fixed_points": j, "probability": rational(p), "decimal": dec.to_string() }));
    }
    let moments: Vec<Value> = (1..=r_max).map(|r| json!({ "r": r, "moment": rational(&d.moment(r)) })).collect();
    let result = json!({
        "model": cfg.model,
        "n": n,
        "distribution": probs,
        "total": rational(&d.total()),
        "moments": moments,
        "reference": limit.json(),
        "tv_to_reference": tv_to_scaled_poisson(&d, limit.scale, limit.mean).to_string(),
    });
    Ok((Report { config: cfg, result, table }, None))
}
