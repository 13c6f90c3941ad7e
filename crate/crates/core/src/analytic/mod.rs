//! Exact mode solutions in parabolic-cylinder functions and the closed-form
//! transition probabilities built on their asymptotics.
//!
//! With `z(t) = e^{i pi/4} sqrt(2J/gamma) (gamma (tau - t) - cos phi)` and
//! `nu = J sin^2 phi / (2 gamma)` every solution of the mode equations is
//!
//! ```text
//! u = B D_{i nu}(s i z) + sqrt(i nu) A D_{-i nu - 1}(z)
//! v = A D_{-i nu}(z)  - s i sqrt(i nu) B D_{i nu - 1}(s i z)
//! ```
//!
//! for either orientation `s = +1` or `s = -1` of the second solution. The
//! Wronskian of the pair is of order `e^{-s pi Re nu / 2}`, so with `s = +1`
//! fitting `A` and `B` cancels about `Re nu` nepers of precision; the fit
//! below uses whichever orientation is better conditioned.
//!
//! [`exact_solution`] fixes `A` and `B` from the actual initial state, which
//! makes it an independent check of the ODE integration. The customary
//! choice `B = 0` ([`recessive_solution`]) only satisfies `u(0) = 0` up to
//! `O(|nu|^{1/2} / |z(0)|)`; it is the solution whose late-time limit gives
//! the familiar closed forms below.

pub mod gamma;
mod precise;
pub mod weber;

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{invalid, NqaError, Result};
use crate::model::{ChainParams, Mode};
pub use weber::{parabolic_cylinder_d, parabolic_cylinder_d_detail, PcfMethod, PcfValue};

/// Order and argument map of the Weber equation for one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeberParams {
    pub nu: Complex64,
    /// `sqrt(i nu)` on the branch consistent with the map `t -> z`.
    pub sqrt_i_nu: Complex64,
    /// `e^{i pi/4} sqrt(2J/gamma)`.
    pub scale: Complex64,
    pub gamma: Complex64,
    pub cos_phi: f64,
    pub tau: f64,
}

impl WeberParams {
    pub fn new(mode: &Mode, params: &ChainParams) -> Result<Self> {
        params.validate()?;
        if params.g <= 0.0 {
            return invalid("the Weber solution needs g > 0");
        }
        let (s, c) = mode.phi.sin_cos();
        let gamma = params.gamma();
        let j = params.j;
        let nu = j * s * s / (2.0 * gamma);
        let half = Complex64::from_polar(1.0, PI / 4.0);
        let root = (2.0 * j / gamma).sqrt();
        // sqrt(i nu) = e^{i pi/4} s sqrt(J / (2 gamma)) keeps the product in the
        // mode equations equal to i J sin(phi) for either sign of sin(phi).
        let sqrt_i_nu = half * s * (j / (2.0 * gamma)).sqrt();
        Ok(Self { nu, sqrt_i_nu, scale: half * root, gamma, cos_phi: c, tau: params.tau })
    }

    pub fn z(&self, t: f64) -> Complex64 {
        self.scale * (self.gamma * (self.tau - t) - self.cos_phi)
    }
}

/// The four parabolic-cylinder functions entering `u` and `v` at one time.
#[derive(Debug, Clone, Copy)]
struct Basis {
    /// `sqrt(i nu) D_{-i nu - 1}(z)`
    ua: Complex64,
    /// `D_{i nu}(s i z)`
    ub: Complex64,
    /// `D_{-i nu}(z)`
    va: Complex64,
    /// `-s i sqrt(i nu) D_{i nu - 1}(s i z)`
    vb: Complex64,
}

impl Basis {
    fn det(&self) -> Complex64 {
        self.ua * self.vb - self.ub * self.va
    }

    /// Ratio of the largest product in the determinant to the determinant.
    fn condition(&self) -> f64 {
        (self.ua * self.vb).norm().max((self.ub * self.va).norm()) / self.det().norm()
    }
}

fn basis(w: &WeberParams, t: f64, orientation: f64) -> Result<Basis> {
    let i = Complex64::i();
    let z = w.z(t);
    let inu = i * w.nu;
    let iz = orientation * i * z;
    Ok(Basis {
        ua: w.sqrt_i_nu * parabolic_cylinder_d(-inu - 1.0, z)?,
        ub: parabolic_cylinder_d(inu, iz)?,
        va: parabolic_cylinder_d(-inu, z)?,
        vb: -orientation * i * w.sqrt_i_nu * parabolic_cylinder_d(inu - 1.0, iz)?,
    })
}

/// A particular solution `(A, B)` of one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeberSolution {
    pub weber: WeberParams,
    pub a: Complex64,
    pub b: Complex64,
    /// Orientation `s` of the second solution, `+1` or `-1`.
    pub orientation: f64,
}

impl WeberSolution {
    /// `(u(t), v(t))`, for `0 <= t <= tau`.
    pub fn uv(&self, t: f64) -> Result<(Complex64, Complex64)> {
        if !(0.0..=self.weber.tau).contains(&t) {
            return invalid(format!("t = {t} outside [0, {}]", self.weber.tau));
        }
        if self.b == Complex64::new(0.0, 0.0) {
            let z = self.weber.z(t);
            let inu = Complex64::i() * self.weber.nu;
            let ua = self.weber.sqrt_i_nu * parabolic_cylinder_d(-inu - 1.0, z)?;
            return Ok((self.a * ua, self.a * parabolic_cylinder_d(-inu, z)?));
        }
        let f = basis(&self.weber, t, self.orientation)?;
        Ok((self.b * f.ub + self.a * f.ua, self.a * f.va + self.b * f.vb))
    }
}

/// Solution matching `(u, v) = (u0, v0)` at `t = 0`.
pub fn exact_solution_from(mode: &Mode, params: &ChainParams, u0: Complex64, v0: Complex64) -> Result<WeberSolution> {
    let weber = WeberParams::new(mode, params)?;
    let mut best: Option<(f64, Basis)> = None;
    for orientation in [-1.0, 1.0] {
        let f = basis(&weber, 0.0, orientation)?;
        let cond = f.condition();
        let better = match &best {
            Some((_, b)) => cond < b.condition(),
            None => true,
        };
        if cond.is_finite() && better {
            best = Some((orientation, f));
        }
    }
    let Some((orientation, f)) = best else {
        return Err(NqaError::OutOfRegion(format!("singular Weber basis for k = {}", mode.k)));
    };
    let det = f.det();
    let a = (u0 * f.vb - f.ub * v0) / det;
    let b = (f.ua * v0 - f.va * u0) / det;
    Ok(WeberSolution { weber, a, b, orientation })
}

/// Solution starting exactly from `(u, v) = (0, -1)`.
pub fn exact_solution(mode: &Mode, params: &ChainParams) -> Result<WeberSolution> {
    exact_solution_from(mode, params, Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0))
}

/// `(u, v)` at time `t` for the mode started from `(0, -1)`.
pub fn exact_uv(mode: &Mode, t: f64, params: &ChainParams) -> Result<(Complex64, Complex64)> {
    exact_solution(mode, params)?.uv(t)
}

/// The `B = 0` solution normalised to `v(0) = -1`.
pub fn recessive_solution(mode: &Mode, params: &ChainParams) -> Result<WeberSolution> {
    let weber = WeberParams::new(mode, params)?;
    let d = parabolic_cylinder_d(-Complex64::i() * weber.nu, weber.z(0.0))?;
    Ok(WeberSolution { weber, a: -1.0 / d, b: Complex64::new(0.0, 0.0), orientation: 1.0 })
}

fn need_field(params: &ChainParams) -> Result<()> {
    params.validate()?;
    if params.g <= 0.0 {
        return invalid("closed-form probabilities need g > 0");
    }
    Ok(())
}

/// Hermitian Landau-Zener probability of ending in the ground state,
/// `1 - exp(-pi J tau sin^2(phi) / g)`.
pub fn landau_zener_probability(mode: &Mode, params: &ChainParams) -> Result<f64> {
    need_field(params)?;
    let s = mode.phi.sin();
    Ok(-(-PI * params.j * params.tau * s * s / params.g).exp_m1())
}

/// `Re nu` of a mode: `J tau g sin^2(phi) / (2 (g^2 + delta^2))`.
pub fn re_nu(mode: &Mode, params: &ChainParams) -> Result<f64> {
    need_field(params)?;
    let s = mode.phi.sin();
    Ok(params.j * params.tau * params.g * s * s / (2.0 * (params.g.powi(2) + params.delta.powi(2))))
}

/// Late-time ground-state probability of a mode under dissipative
/// annealing, `(1 - e^{-2 pi Re nu}) / (1 - e^{-2 pi Re nu} + e^{-2 pi Re nu - Re z^2})`
/// with `Re z^2 = 2 delta J tau / g^2`.
pub fn nqa_mode_probability(mode: &Mode, params: &ChainParams) -> Result<f64> {
    let x = 2.0 * PI * re_nu(mode, params)?;
    let y = 2.0 * params.delta * params.j * params.tau / params.g.powi(2);
    Ok(two_level_probability(x, y))
}

/// `(1 - e^{-x}) / (1 - e^{-x} + e^{-x-y})`, stable for small and large `x`.
fn two_level_probability(x: f64, y: f64) -> f64 {
    let gain = -(-x).exp_m1();
    let loss = (-x - y).exp();
    gain / (gain + loss)
}

/// Forms of the whole-chain estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateForm {
    /// The complete two-exponential expression.
    Full,
    /// `1 / (1 + tau0/(2 pi tau) e^{-2 J delta tau / g^2})`, for `tau << tau0`.
    ShortTime,
    /// `1 - tau0/(2 pi tau) e^{-2 J delta tau / g^2}`, when that correction is small.
    NearUnity,
}

/// Ground-state probability of the chain estimated from its lowest mode.
pub fn system_probability_estimate(params: &ChainParams, form: EstimateForm) -> Result<f64> {
    need_field(params)?;
    let ratio = params.tau0() / (2.0 * PI * params.tau);
    let y = 2.0 * params.j * params.delta * params.tau / params.g.powi(2);
    Ok(match form {
        EstimateForm::Full => two_level_probability(1.0 / ratio, y),
        EstimateForm::ShortTime => 1.0 / (1.0 + ratio * (-y).exp()),
        EstimateForm::NearUnity => 1.0 - ratio * (-y).exp(),
    })
}

/// Left-hand side of the validity condition of [`EstimateForm::NearUnity`]:
/// `2 J delta tau / g^2 - ln(tau0 / (2 pi tau))`, which should be `>> 1`.
pub fn near_unity_margin(params: &ChainParams) -> Result<f64> {
    need_field(params)?;
    let y = 2.0 * params.j * params.delta * params.tau / params.g.powi(2);
    Ok(y - (params.tau0() / (2.0 * PI * params.tau)).ln())
}

/// Annealing times needed for a target ground-state probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingEstimate {
    pub n: usize,
    pub target: f64,
    pub tau0: f64,
    /// Smallest `tau` at which the full estimate reaches `target`.
    pub tau_star: f64,
    /// `g^2 ln(N) / (2 J delta)`; infinite without dissipation.
    pub tau_log: f64,
}

/// Solves the full estimate for `tau`.
///
/// Without dissipation this is `tau0 ln(1/(1 - target)) / (2 pi)`. Otherwise
/// the estimate is increasing in `tau` and bounded above by its Hermitian
/// value, so bisection on `[1, max(tau0, tau_hermitian)]` brackets the root;
/// it stops once the bracket is narrower than `1e-6 tau0`.
pub fn annealing_time_estimate(params: &ChainParams, target: f64) -> Result<ScalingEstimate> {
    need_field(params)?;
    if !(target > 0.0 && target < 1.0) {
        return Err(NqaError::UnreachableTarget { target, best: 1.0 });
    }
    let tau0 = params.tau0();
    let tau_hermitian = -tau0 * (-target).ln_1p() / (2.0 * PI);
    let tau_log = if params.delta > 0.0 {
        params.g.powi(2) * (params.n as f64).ln() / (2.0 * params.j * params.delta)
    } else {
        f64::INFINITY
    };
    let p_at = |tau: f64| system_probability_estimate(&params.with_tau(tau), EstimateForm::Full);

    let tau_star = if params.delta == 0.0 {
        tau_hermitian
    } else {
        let mut lo = 1.0_f64.min(tau_hermitian);
        let mut hi = tau0.max(tau_hermitian);
        if p_at(lo)? >= target {
            lo
        } else {
            while hi - lo > 1e-6 * tau0 {
                let mid = 0.5 * (lo + hi);
                if p_at(mid)? >= target {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            hi
        }
    };
    Ok(ScalingEstimate { n: params.n, target, tau0, tau_star, tau_log })
}
