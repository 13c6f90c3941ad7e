//! WebAssembly bindings for the demo page in `www/`.
//!
//! Each exported function returns a flat `Float64Array`; the layouts are
//! documented per function. The plain-Rust versions in [`demo`] do the work
//! and are what the native tests exercise.

use wasm_bindgen::prelude::*;

pub mod demo {
    use nqa_core::analytic::{landau_zener_probability, nqa_mode_probability};
    use nqa_core::observables::{defect_expectation_analytic, density_lerch, hermitian_density, CorrelationTable};
    use nqa_core::quench::{evolve_chain_final, evolve_mode, uniform_samples, QuenchOptions};
    use nqa_core::{ChainParams, Mode};

    /// Largest chain the page may request; keeps the correlator interactive.
    pub const MAX_N: usize = 1024;

    fn params(n: usize, j: f64, g: f64, delta: f64, tau: f64) -> Result<ChainParams, String> {
        if n > MAX_N {
            return Err(format!("N is limited to {MAX_N} in the browser"));
        }
        ChainParams::new(n, j, g, delta, tau).map_err(|e| e.to_string())
    }

    /// Ground-state probability of mode `index` along the sweep:
    /// `[s_0, P_0, s_1, P_1, ..., estimate]`, where the last entry is the
    /// closed-form final value.
    pub fn mode_curve(n: usize, j: f64, g: f64, delta: f64, tau: f64, index: usize, samples: usize) -> Result<Vec<f64>, String> {
        let p = params(n, j, g, delta, tau)?;
        if index >= n / 2 {
            return Err(format!("mode index must be below {}", n / 2));
        }
        let mode = Mode::new(n, index);
        let times = uniform_samples(tau, samples.clamp(2, 2000));
        let tr = evolve_mode(&mode, &p, &times, &QuenchOptions::default()).map_err(|e| e.to_string())?;
        let mut out: Vec<f64> = tr.samples.iter().flat_map(|s| [s.amps.t / tau, s.p_ground]).collect();
        let estimate = if delta == 0.0 { landau_zener_probability(&mode, &p) } else { nqa_mode_probability(&mode, &p) };
        out.push(estimate.map_err(|e| e.to_string())?);
        Ok(out)
    }

    /// Defect density against dissipation: `[delta, n_lerch, N_bar_analytic / N]`
    /// triples for `count` values of `delta` in `[0, delta_max]`, then `n0`.
    pub fn defect_curve(n: usize, j: f64, g: f64, tau: f64, delta_max: f64, count: usize) -> Result<Vec<f64>, String> {
        let count = count.clamp(2, 400);
        if !(delta_max.is_finite() && delta_max > 0.0) {
            return Err("delta_max must be positive".into());
        }
        let mut out = Vec::with_capacity(3 * count + 1);
        for i in 0..count {
            let delta = delta_max * i as f64 / (count - 1) as f64;
            let p = params(n, j, g, delta, tau)?;
            out.push(delta);
            out.push(density_lerch(&p).map_err(|e| e.to_string())?);
            out.push(defect_expectation_analytic(&p).map_err(|e| e.to_string())?.value / n as f64);
        }
        out.push(hermitian_density(&params(n, j, g, 0.0, tau)?));
        Ok(out)
    }

    /// `chi(1), ..., chi(max_p)` after a full sweep of every mode.
    pub fn correlator(n: usize, j: f64, g: f64, delta: f64, tau: f64, max_p: usize) -> Result<Vec<f64>, String> {
        let p = params(n, j, g, delta, tau)?;
        let state = evolve_chain_final(&p, &QuenchOptions::default()).map_err(|e| e.to_string())?;
        let table = CorrelationTable::from_state(&state, max_p).map_err(|e| e.to_string())?;
        (1..=max_p).map(|k| table.chi(k).map_err(|e| e.to_string())).collect()
    }
}

fn to_js<T>(r: Result<T, String>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn mode_curve(n: usize, j: f64, g: f64, delta: f64, tau: f64, index: usize, samples: usize) -> Result<Vec<f64>, JsError> {
    to_js(demo::mode_curve(n, j, g, delta, tau, index, samples))
}

#[wasm_bindgen]
pub fn defect_curve(n: usize, j: f64, g: f64, tau: f64, delta_max: f64, count: usize) -> Result<Vec<f64>, JsError> {
    to_js(demo::defect_curve(n, j, g, tau, delta_max, count))
}

#[wasm_bindgen]
pub fn correlator(n: usize, j: f64, g: f64, delta: f64, tau: f64, max_p: usize) -> Result<Vec<f64>, JsError> {
    to_js(demo::correlator(n, j, g, delta, tau, max_p))
}
