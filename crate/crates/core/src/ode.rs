//! Adaptive Dormand-Prince 5(4) integrator for two-component complex linear
//! systems.
//!
//! The mode equations are linear, so the state may be rescaled at will. The
//! integrator exploits that: whenever the state norm drifts out of
//! `[1e-3, 1e3]` it is renormalised and the logarithm of the removed factor
//! is accumulated. This keeps the absolute tolerance meaningful when the
//! amplitudes grow or decay by many orders of magnitude, which happens for
//! any non-zero dissipation.

use num_complex::Complex64;

pub type State = [Complex64; 2];

/// Tolerances and limits of the integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Upper bound on accepted plus rejected steps for one integration.
    pub max_steps: u64,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self { rtol: 1e-10, atol: 1e-12, max_steps: 2_000_000_000 }
    }
}

impl OdeOptions {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.rtol > 0.0 && self.rtol < 1.0) {
            return Err(format!("rtol must lie in (0, 1), got {}", self.rtol));
        }
        if !(self.atol > 0.0 && self.atol.is_finite()) {
            return Err(format!("atol must be positive, got {}", self.atol));
        }
        if self.max_steps == 0 {
            return Err("max_steps must be positive".into());
        }
        Ok(())
    }
}

/// Why an integration stopped early.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeFailure {
    pub t: f64,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OdeStats {
    pub accepted: u64,
    pub rejected: u64,
    pub rhs_evals: u64,
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// Difference between the fifth- and fourth-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.8;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;
const RESCALE_HIGH: f64 = 1e3;
const RESCALE_LOW: f64 = 1e-3;

#[inline]
fn comb(y: &State, terms: &[(f64, &State)], h: f64) -> State {
    let mut out = *y;
    for (w, k) in terms {
        out[0] += k[0] * (h * w);
        out[1] += k[1] * (h * w);
    }
    out
}

#[inline]
fn norm(y: &State) -> f64 {
    (y[0].norm_sqr() + y[1].norm_sqr()).sqrt()
}

/// Integrator state that persists between successive output times.
pub struct DormandPrince<F> {
    rhs: F,
    opts: OdeOptions,
    t: f64,
    y: State,
    /// `ln` of the factor divided out of `y` so far.
    log_scale: f64,
    k1: State,
    h: f64,
    stats: OdeStats,
}

impl<F> DormandPrince<F>
where
    F: FnMut(f64, &State) -> State,
{
    pub fn new(mut rhs: F, t0: f64, y0: State, opts: OdeOptions) -> Self {
        let k1 = rhs(t0, &y0);
        let scale = norm(&y0).max(1e-300);
        let rate = norm(&k1) / scale;
        let h = if rate > 0.0 { 0.01 / rate } else { 1e-3 };
        let mut s = Self {
            rhs,
            opts,
            t: t0,
            y: y0,
            log_scale: 0.0,
            k1,
            h,
            stats: OdeStats { rhs_evals: 1, ..Default::default() },
        };
        s.rescale();
        s
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    /// Current state divided by `exp(log_scale)`.
    pub fn state(&self) -> State {
        self.y
    }

    pub fn log_scale(&self) -> f64 {
        self.log_scale
    }

    pub fn stats(&self) -> OdeStats {
        self.stats
    }

    fn rescale(&mut self) {
        let n = norm(&self.y);
        if n > 0.0 && n.is_finite() && !(RESCALE_LOW..=RESCALE_HIGH).contains(&n) {
            let inv = 1.0 / n;
            for i in 0..2 {
                self.y[i] *= inv;
                self.k1[i] *= inv;
            }
            self.log_scale += n.ln();
        }
    }

    /// Advances to `t_end`, landing on it exactly.
    pub fn advance_to(&mut self, t_end: f64) -> Result<(), OdeFailure> {
        if t_end < self.t {
            return Err(OdeFailure { t: self.t, reason: format!("cannot integrate backwards to {t_end}") });
        }
        while self.t < t_end {
            if self.stats.accepted + self.stats.rejected >= self.opts.max_steps {
                return Err(OdeFailure { t: self.t, reason: "step budget exhausted".into() });
            }
            let remaining = t_end - self.t;
            let last = self.h >= remaining;
            let h = if last { remaining } else { self.h };
            let h_min = 1e-14 * self.t.abs().max(1.0);
            if h < h_min && !last {
                return Err(OdeFailure { t: self.t, reason: format!("step size {h:.3e} underflow") });
            }

            let (y_new, k7, err) = self.trial(h);
            let factor;
            if err <= 1.0 {
                self.t = if last { t_end } else { self.t + h };
                self.y = y_new;
                self.k1 = k7;
                self.stats.accepted += 1;
                factor = if err == 0.0 { MAX_FACTOR } else { (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR) };
                // A step clipped to hit the output time says nothing about the
                // natural step size, so keep the previous proposal.
                if !last || h >= self.h {
                    self.h = h * factor;
                }
                if !self.y.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
                    return Err(OdeFailure { t: self.t, reason: "non-finite state".into() });
                }
                self.rescale();
            } else {
                self.stats.rejected += 1;
                factor = if err.is_finite() { (SAFETY * err.powf(-0.2)).max(MIN_FACTOR) } else { MIN_FACTOR };
                self.h = h * factor.min(1.0);
            }
        }
        Ok(())
    }

    fn trial(&mut self, h: f64) -> (State, State, f64) {
        let t = self.t;
        let y = self.y;
        let k1 = self.k1;
        let k2 = (self.rhs)(t + C2 * h, &comb(&y, &[(A21, &k1)], h));
        let k3 = (self.rhs)(t + C3 * h, &comb(&y, &[(A31, &k1), (A32, &k2)], h));
        let k4 = (self.rhs)(t + C4 * h, &comb(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)], h));
        let k5 = (self.rhs)(t + C5 * h, &comb(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], h));
        let k6 = (self.rhs)(t + h, &comb(&y, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)], h));
        let y_new = comb(&y, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)], h);
        let k7 = (self.rhs)(t + h, &y_new);
        self.stats.rhs_evals += 6;

        // Max norm over the complex components: an RMS norm lets the unitary
        // part of the error accumulate visibly over long sweeps.
        let mut err: f64 = 0.0;
        for i in 0..2 {
            let e = (k1[i] * E1 + k3[i] * E3 + k4[i] * E4 + k5[i] * E5 + k6[i] * E6 + k7[i] * E7) * h;
            let sc = self.opts.atol + self.opts.rtol * y[i].norm().max(y_new[i].norm());
            err = err.max(e.norm() / sc);
        }
        (y_new, k7, err)
    }
}
