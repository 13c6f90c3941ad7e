//! The five commands. Each one produces a CSV table and a JSON summary in
//! memory; nothing touches the file system until the whole run succeeded.

use std::time::Instant;

use nqa_core::analytic::{
    annealing_time_estimate, landau_zener_probability, near_unity_margin, nqa_mode_probability,
    system_probability_estimate, EstimateForm,
};
use nqa_core::observables::{
    chi_asymptotic, defect_expectation_analytic, defect_expectation_numeric, density_lerch, density_quadrature,
    domain_size, fit_asymptotic, hermitian_density, kz_length, measured_period, oscillation_period,
    staggered_zero_crossings, CorrelationTable, DefectRegime,
};
use nqa_core::quench::{evolve_chain, evolve_chain_final, system_ground_probability, uniform_samples, QuenchOptions};
use nqa_core::sweep::{required_annealing_time, SearchOptions};
use nqa_core::{ChainParams, Mode, NqaError};
use serde_json::{json, Value};

use crate::config::{CommandConfig, RunConfig};
use crate::output::{Cell, CsvTable};

/// Why a run stopped.
#[derive(Debug)]
pub enum RunError {
    Config(String),
    Numerical(NqaError),
    Io(std::io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) | RunError::Io(_) => 2,
            RunError::Numerical(_) => 3,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Config(m) => write!(f, "configuration error: {m}"),
            RunError::Numerical(e) => write!(f, "numerical failure: {e}"),
            RunError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<NqaError> for RunError {
    fn from(e: NqaError) -> Self {
        match e {
            NqaError::InvalidParameter(m) => RunError::Config(m),
            other => RunError::Numerical(other),
        }
    }
}

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub table: CsvTable,
    pub summary: Value,
    /// Set when some requested target could not be met.
    pub unreachable: bool,
}

impl RunOutput {
    /// The JSON document written next to the CSV file.
    pub fn document(&self, cfg: &RunConfig, seconds: f64, threads: usize) -> Value {
        json!({
            "config": cfg,
            "summary": self.summary,
            "timing": { "wall_seconds": seconds, "threads": threads },
        })
    }
}

/// Runs `cfg` on the current rayon pool.
pub fn run(cfg: &RunConfig) -> Result<RunOutput, RunError> {
    let params = cfg.chain.params();
    let quench = QuenchOptions { ode: cfg.tolerances.ode(), initial: cfg.initial };
    match &cfg.command {
        CommandConfig::Evolve { sample_count } => run_evolve(&params, *sample_count, &quench),
        CommandConfig::SweepTau { n_values, deltas, target, rel_width, cap_factor, screen_exponent, initial } => {
            let opts = SearchOptions {
                quench: QuenchOptions { initial: *initial, ..quench },
                screen_exponent: *screen_exponent,
                rel_width: *rel_width,
                cap_factor: *cap_factor,
            };
            run_sweep_tau(&params, n_values, deltas, *target, &opts)
        }
        CommandConfig::Correlations { max_p, deltas, ground_state } => {
            run_correlations(&params, *max_p, deltas, *ground_state, cfg.tolerances.determinant_imag, &quench)
        }
        CommandConfig::Defects { deltas, numeric } => run_defects(&params, deltas, *numeric, &quench),
        CommandConfig::Scaling { n_values, deltas, target } => run_scaling(&params, n_values, deltas, *target),
    }
}

/// Runs and times `cfg` on a pool of `threads` workers.
pub fn run_timed(cfg: &RunConfig, threads: usize) -> Result<(RunOutput, f64), RunError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| RunError::Config(format!("cannot start {threads} worker threads: {e}")))?;
    let start = Instant::now();
    let out = pool.install(|| run(cfg))?;
    Ok((out, start.elapsed().as_secs_f64()))
}

fn null_if_not_finite(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn regime_name(r: DefectRegime) -> &'static str {
    match r {
        DefectRegime::Slow => "slow",
        DefectRegime::Fast => "fast",
    }
}

fn run_evolve(params: &ChainParams, sample_count: usize, opts: &QuenchOptions) -> Result<RunOutput, RunError> {
    let times = uniform_samples(params.tau, sample_count);
    let trajectories = evolve_chain(params, &times, opts)?;
    let mut table = CsvTable::new(vec!["s", "mode_index", "k", "P_gs_k", "P_gs_total"]);
    let mut totals = Vec::with_capacity(times.len());
    for (i, &t) in times.iter().enumerate() {
        let total = system_ground_probability(&trajectories, params.n, t)?;
        totals.push(total);
        for tr in &trajectories {
            let sample = &tr.samples[i];
            table.push(vec![
                (t / params.tau).into(),
                tr.mode.index.into(),
                tr.mode.k.into(),
                sample.p_ground.into(),
                total.into(),
            ]);
        }
    }
    let defects: f64 = trajectories.iter().map(|tr| 2.0 * tr.last().excitation).sum();
    let lowest = Mode::new(params.n, 0);
    let lowest_estimate = if params.delta == 0.0 {
        landau_zener_probability(&lowest, params)?
    } else {
        nqa_mode_probability(&lowest, params)?
    };
    let analytic = defect_expectation_analytic(params)?;
    let steps: u64 = trajectories.iter().map(|tr| tr.stats.accepted + tr.stats.rejected).sum();
    let summary = json!({
        "p_gs_total_final": totals[totals.len() - 1],
        "p_gs_lowest_mode_final": trajectories[0].last().p_ground,
        "p_gs_lowest_mode_estimate": lowest_estimate,
        "defects_numeric": defects,
        "defect_density_numeric": defects / params.n as f64,
        "defects_analytic": analytic.value,
        "defects_analytic_full": analytic.full,
        "defects_analytic_regime": regime_name(analytic.regime),
        "kz_length": kz_length(params)?,
        "domain_size": domain_size(params)?,
        "ode_steps": steps,
    });
    Ok(RunOutput { table, summary, unreachable: false })
}

/// Least-squares line `y = a + b x`, with the fitted values.
fn line_fit(x: &[f64], y: &[f64]) -> Option<(f64, f64, Vec<f64>)> {
    let n = x.len() as f64;
    if x.len() < 2 {
        return None;
    }
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    Some((a, b, x.iter().map(|v| a + b * v).collect()))
}

/// Power-law and logarithmic fits of `tau(N)`. Both residual norms are of the
/// relative deviations `fit / tau - 1`, so they can be compared directly.
pub fn scaling_fits(ns: &[usize], taus: &[f64]) -> Value {
    let ln_n: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let ln_tau: Vec<f64> = taus.iter().map(|t| t.ln()).collect();
    let rel_norm = |fitted: &[f64]| -> f64 {
        fitted.iter().zip(taus).map(|(f, t)| (f / t - 1.0).powi(2)).sum::<f64>().sqrt()
    };
    let power = line_fit(&ln_n, &ln_tau).map(|(a, b, f)| {
        let fitted: Vec<f64> = f.iter().map(|v| v.exp()).collect();
        json!({ "exponent": b, "ln_prefactor": a, "relative_residual_norm": rel_norm(&fitted) })
    });
    let log = line_fit(&ln_n, taus).map(|(a, b, f)| {
        json!({ "intercept": a, "slope": b, "relative_residual_norm": rel_norm(&f) })
    });
    json!({ "points": ns.len(), "power_law": power, "logarithmic": log })
}

fn run_sweep_tau(
    base: &ChainParams,
    ns: &[usize],
    deltas: &[f64],
    target: f64,
    opts: &SearchOptions,
) -> Result<RunOutput, RunError> {
    let mut table = CsvTable::new(vec![
        "delta",
        "N",
        "target",
        "tau_star_numeric",
        "tau_star_analytic",
        "tau0",
        "tau_log",
        "reachable",
        "best_probability",
        "evaluations",
        "loglog_slope",
    ]);
    let mut per_delta = Vec::new();
    let mut unreachable = false;
    for &delta in deltas {
        let mut searches = Vec::new();
        for &n in ns {
            let params = ChainParams { n, delta, ..*base };
            searches.push(required_annealing_time(&params, target, opts)?);
        }
        let reached: Vec<(usize, f64)> = searches.iter().filter_map(|s| s.tau_star.map(|t| (s.n, t))).collect();
        let (rn, rt): (Vec<usize>, Vec<f64>) = reached.iter().copied().unzip();
        let fits = scaling_fits(&rn, &rt);
        let slope = fits["power_law"]["exponent"].as_f64();
        for s in &searches {
            unreachable |= s.tau_star.is_none();
            table.push(vec![
                delta.into(),
                s.n.into(),
                target.into(),
                s.tau_star.into(),
                s.analytic.tau_star.into(),
                s.analytic.tau0.into(),
                Some(s.analytic.tau_log).filter(|t| t.is_finite()).into(),
                s.tau_star.is_some().into(),
                s.best().into(),
                s.evaluations.len().into(),
                slope.into(),
            ]);
        }
        let analytic_ns: Vec<usize> = searches.iter().map(|s| s.n).collect();
        let analytic_taus: Vec<f64> = searches.iter().map(|s| s.analytic.tau_star).collect();
        let unreached: Vec<usize> = searches.iter().filter(|s| s.tau_star.is_none()).map(|s| s.n).collect();
        per_delta.push(json!({
            "delta": delta,
            "numeric_fits": fits,
            "analytic_fits": scaling_fits(&analytic_ns, &analytic_taus),
            "unreachable_n": unreached,
        }));
    }
    Ok(RunOutput { table, summary: json!({ "target": target, "deltas": per_delta }), unreachable })
}

fn run_correlations(
    base: &ChainParams,
    max_p: usize,
    deltas: &[f64],
    ground_state: bool,
    imag_tolerance: f64,
    opts: &QuenchOptions,
) -> Result<RunOutput, RunError> {
    let mut table =
        CsvTable::new(vec!["delta", "p", "G_re", "G_im", "im_beta", "chi", "chi_asymptotic", "status"]);
    let mut per_delta = Vec::new();
    for &delta in deltas {
        let params = base.with_delta(delta);
        // One order beyond max_p so that G_p exists for every row.
        let (table_p, defects) = if ground_state {
            (CorrelationTable::ground_state(max_p + 1)?, None)
        } else {
            let state = evolve_chain_final(&params, opts)?;
            (CorrelationTable::from_state(&state, max_p + 1)?, Some(defect_expectation_numeric(&state)?))
        };
        let chi: Vec<Result<f64, NqaError>> =
            (1..=max_p).map(|p| table_p.chi_with_tolerance(p, imag_tolerance)).collect();
        let values: Vec<f64> = chi.iter().map_while(|c| c.as_ref().ok().copied()).collect();
        let fit = fit_asymptotic(&values, &params).ok();
        let (amplitude, phase) = fit.map_or((1.0, 0.0), |f| (f.amplitude, f.phase));
        let failures = chi.iter().filter(|c| c.is_err()).count();
        for (i, c) in chi.iter().enumerate() {
            let p = i + 1;
            let g = table_p.g(p as i64).expect("table has one spare order");
            let (value, status) = match c {
                Ok(v) => (Cell::Float(*v), "ok".to_string()),
                Err(e) => (Cell::Missing, e.to_string()),
            };
            table.push(vec![
                delta.into(),
                p.into(),
                g.re.into(),
                g.im.into(),
                table_p.im_beta[p].into(),
                value,
                (amplitude * chi_asymptotic(p, &params, phase)?).into(),
                Cell::Text(status),
            ]);
        }
        let xi = kz_length(&params)?;
        let period = measured_period(&staggered_zero_crossings(&values, 1e-12));
        per_delta.push(json!({
            "delta": delta,
            "kz_length": xi,
            "domain_size": domain_size(&params)?,
            "predicted_period": oscillation_period(xi),
            "measured_period": period,
            "fit": fit.map(|f| json!({ "amplitude": f.amplitude, "phase": f.phase, "p_min": f.p_range.0, "p_max": f.p_range.1 })),
            "density_chi": values.first().map(|c| 0.5 * (1.0 + c)),
            "defects_numeric": defects,
            "determinant_failures": failures,
        }));
    }
    Ok(RunOutput { table, summary: json!({ "ground_state": ground_state, "deltas": per_delta }), unreachable: false })
}

fn strictly_decreasing(xs: &[f64]) -> bool {
    xs.windows(2).all(|w| w[1] < w[0])
}

fn run_defects(base: &ChainParams, deltas: &[f64], numeric: bool, opts: &QuenchOptions) -> Result<RunOutput, RunError> {
    let mut table = CsvTable::new(vec![
        "delta",
        "N_bar_numeric",
        "N_bar_analytic",
        "N_bar_analytic_full",
        "regime",
        "n_chi",
        "n_quadrature",
        "n_lerch",
        "n0",
        "kz_length",
        "domain_size",
        "status",
    ]);
    let mut numeric_values = Vec::new();
    let mut lerch_values = Vec::new();
    let mut analytic_values = Vec::new();
    let mut failures = 0usize;
    for &delta in deltas {
        let params = base.with_delta(delta);
        let (n_bar, n_chi) = if numeric {
            let state = evolve_chain_final(&params, opts)?;
            let chi1 = CorrelationTable::from_state(&state, 1)?.chi(1)?;
            (Some(defect_expectation_numeric(&state)?), Some(0.5 * (1.0 + chi1)))
        } else {
            (None, None)
        };
        let analytic = defect_expectation_analytic(&params)?;
        let lerch = density_lerch(&params)?;
        let (quad, status) = match density_quadrature(&params) {
            Ok(q) => (Some(q), "ok".to_string()),
            Err(e @ NqaError::Quadrature { .. }) => {
                failures += 1;
                (None, e.to_string())
            }
            Err(e) => return Err(e.into()),
        };
        numeric_values.extend(n_bar);
        lerch_values.push(lerch);
        analytic_values.push(analytic.value);
        table.push(vec![
            delta.into(),
            n_bar.into(),
            analytic.value.into(),
            analytic.full.into(),
            regime_name(analytic.regime).into(),
            n_chi.into(),
            quad.into(),
            lerch.into(),
            hermitian_density(&params).into(),
            kz_length(&params)?.into(),
            domain_size(&params)?.into(),
            Cell::Text(status),
        ]);
    }
    let ratios: Vec<Value> = analytic_values.iter().map(|v| null_if_not_finite(v / analytic_values[0])).collect();
    let summary = json!({
        "analytic_ratio_to_first": ratios,
        "numeric_strictly_decreasing": if numeric { json!(strictly_decreasing(&numeric_values)) } else { Value::Null },
        "lerch_strictly_decreasing": strictly_decreasing(&lerch_values),
        "quadrature_failures": failures,
    });
    Ok(RunOutput { table, summary, unreachable: false })
}

fn run_scaling(base: &ChainParams, ns: &[usize], deltas: &[f64], target: f64) -> Result<RunOutput, RunError> {
    let mut table = CsvTable::new(vec![
        "delta",
        "N",
        "target",
        "tau0",
        "tau_star_analytic",
        "tau_log",
        "p_full",
        "p_short_time",
        "p_near_unity",
        "near_unity_margin",
    ]);
    let mut per_delta = Vec::new();
    for &delta in deltas {
        let mut taus = Vec::new();
        for &n in ns {
            let params = ChainParams { n, delta, ..*base };
            let est = annealing_time_estimate(&params, target)?;
            taus.push(est.tau_star);
            table.push(vec![
                delta.into(),
                n.into(),
                target.into(),
                est.tau0.into(),
                est.tau_star.into(),
                Some(est.tau_log).filter(|t| t.is_finite()).into(),
                system_probability_estimate(&params, EstimateForm::Full)?.into(),
                system_probability_estimate(&params, EstimateForm::ShortTime)?.into(),
                system_probability_estimate(&params, EstimateForm::NearUnity)?.into(),
                Some(near_unity_margin(&params)?).filter(|m| m.is_finite()).into(),
            ]);
        }
        per_delta.push(json!({ "delta": delta, "fits": scaling_fits(ns, &taus) }));
    }
    Ok(RunOutput { table, summary: json!({ "target": target, "tau": base.tau, "deltas": per_delta }), unreachable: false })
}
