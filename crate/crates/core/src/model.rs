//! Chain parameters, the momentum grid, the annealing schedule and the
//! per-mode Hamiltonian with its (generally complex) spectrum.
//!
//! The coupling follows `g~(t) = gamma (tau - t)` with `gamma = (g + i delta)/tau`,
//! so both the real field and the dissipative part ramp linearly to zero.

use num_complex::Complex64;

use crate::error::{invalid, NqaError, Result};

/// Physical parameters of one quench.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams {
    /// Number of spins (even, at least 4).
    pub n: usize,
    /// Ising coupling.
    pub j: f64,
    /// Initial transverse field.
    pub g: f64,
    /// Initial strength of the imaginary field.
    pub delta: f64,
    /// Annealing time.
    pub tau: f64,
}

impl ChainParams {
    pub fn new(n: usize, j: f64, g: f64, delta: f64, tau: f64) -> Result<Self> {
        let p = Self { n, j, g, delta, tau };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 4 || self.n % 2 != 0 {
            return invalid(format!("N must be even and >= 4, got {}", self.n));
        }
        if !(self.j.is_finite() && self.j > 0.0) {
            return invalid(format!("J must be positive, got {}", self.j));
        }
        if !(self.g.is_finite() && self.g >= 0.0) {
            return invalid(format!("g must be non-negative, got {}", self.g));
        }
        if !(self.delta.is_finite() && self.delta >= 0.0) {
            return invalid(format!("delta must be non-negative, got {}", self.delta));
        }
        if !(self.tau.is_finite() && self.tau > 0.0) {
            return invalid(format!("tau must be positive, got {}", self.tau));
        }
        Ok(())
    }

    /// Same chain, different annealing time.
    pub fn with_tau(&self, tau: f64) -> Self {
        Self { tau, ..*self }
    }

    /// Same chain, different dissipation strength.
    pub fn with_delta(&self, delta: f64) -> Self {
        Self { delta, ..*self }
    }

    /// Sweep rate of the complex coupling.
    pub fn gamma(&self) -> Complex64 {
        Complex64::new(self.g, self.delta) / self.tau
    }

    /// Time scale of the lowest mode: `2 g N^2 / (pi^2 J)`.
    pub fn tau0(&self) -> f64 {
        let n = self.n as f64;
        2.0 * self.g * n * n / (std::f64::consts::PI.powi(2) * self.j)
    }

    /// Complex coupling at time `t`; zero once the sweep is over.
    pub fn coupling(&self, t: f64) -> Result<Complex64> {
        if !t.is_finite() || t < 0.0 {
            return invalid(format!("schedule evaluated at t = {t}"));
        }
        if t >= self.tau {
            return Ok(Complex64::new(0.0, 0.0));
        }
        Ok(self.gamma() * (self.tau - t))
    }

    /// The momentum modes with `k > 0`, in increasing order.
    pub fn modes(&self) -> Vec<Mode> {
        (0..self.n / 2).map(|m| Mode::new(self.n, m)).collect()
    }
}

/// One momentum mode `k = m + 1/2` with `phi = 2 pi k / N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    /// Zero-based position on the positive half of the grid.
    pub index: usize,
    pub k: f64,
    pub phi: f64,
}

impl Mode {
    pub fn new(n: usize, index: usize) -> Self {
        let k = index as f64 + 0.5;
        Self { index, k, phi: 2.0 * std::f64::consts::PI * k / n as f64 }
    }

    /// `(sin phi, cos phi)`.
    pub fn sin_cos(&self) -> (f64, f64) {
        self.phi.sin_cos()
    }
}

/// The antiperiodic grid `k = 1/2, 3/2, ..., (N-1)/2`.
pub fn mode_grid(n: usize) -> Result<Vec<Mode>> {
    if n < 4 || n % 2 != 0 {
        return invalid(format!("N must be even and >= 4, got {n}"));
    }
    Ok((0..n / 2).map(|m| Mode::new(n, m)).collect())
}

/// `eps0 I - J [[g~ - c, s], [s, -(g~ - c)]]` for one mode.
pub fn mode_hamiltonian(phi: f64, g_tilde: Complex64, j: f64) -> [[Complex64; 2]; 2] {
    let (s, c) = phi.sin_cos();
    let eps0 = Complex64::new(j * c, -j * g_tilde.im);
    let d = g_tilde - c;
    [
        [eps0 - j * d, Complex64::new(-j * s, 0.0)],
        [Complex64::new(-j * s, 0.0), eps0 + j * d],
    ]
}

/// Eigenvalues `eps0 +- eps_k` of a mode, principal square root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    pub eps0: Complex64,
    pub eps_k: Complex64,
}

impl Spectrum {
    pub fn upper(&self) -> Complex64 {
        self.eps0 + self.eps_k
    }

    pub fn lower(&self) -> Complex64 {
        self.eps0 - self.eps_k
    }
}

pub fn spectrum(phi: f64, g_tilde: Complex64, j: f64) -> Spectrum {
    let c = phi.cos();
    let eps0 = Complex64::new(j * c, -j * g_tilde.im);
    Spectrum { eps0, eps_k: j * bloch_radius(phi, g_tilde) }
}

/// Principal `sqrt(g~^2 - 2 g~ cos phi + 1)`, from the factored radicand so
/// that no digits are lost near the crossing.
pub fn bloch_radius(phi: f64, g_tilde: Complex64) -> Complex64 {
    let e = Complex64::from_polar(1.0, phi);
    ((g_tilde - e) * (g_tilde - e.conj())).sqrt()
}

/// Complex Bloch angle with `cos = (c - g~)/R`, `sin = -s/R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochAngle {
    pub theta: Complex64,
    pub radius: Complex64,
}

impl BlochAngle {
    pub fn cos(&self) -> Complex64 {
        self.theta.cos()
    }

    pub fn sin(&self) -> Complex64 {
        self.theta.sin()
    }
}

/// Bloch angle on the principal branch (`Re R >= 0`, `Re theta` in `(-pi, pi]`).
pub fn bloch_angle(phi: f64, g_tilde: Complex64) -> Result<BlochAngle> {
    let (s, c) = phi.sin_cos();
    let radius = bloch_radius(phi, g_tilde);
    if radius.norm() < 1e-300 {
        return Err(NqaError::OutOfRegion(format!(
            "exceptional point: g~ = {g_tilde} coincides with exp(+-i phi)"
        )));
    }
    let e_itheta = Complex64::new(c, -s) - g_tilde;
    let theta = -Complex64::i() * (e_itheta / radius).ln();
    Ok(BlochAngle { theta, radius })
}

/// Follows the Bloch angle continuously along the schedule.
///
/// With `w1 = g~ - e^{i phi}` and `w2 = g~ - e^{-i phi}` we have
/// `R = sqrt(w1) sqrt(w2)` and `e^{i theta} = -sqrt(w2)/sqrt(w1)`. Each factor
/// root is continued by picking the sign closest to its previous value, which
/// keeps both `R` and `theta` analytic along any path avoiding `w1 = 0` or
/// `w2 = 0`. Steps are subdivided so that `g~` never moves by more than half
/// the distance to the nearer branch point.
#[derive(Debug, Clone)]
pub struct BlochTracker {
    phi: f64,
    g_tilde: Complex64,
    root1: Complex64,
    root2: Complex64,
    theta: Complex64,
}

const MAX_ANGLE_STEP: f64 = std::f64::consts::FRAC_PI_2;

impl BlochTracker {
    /// Starts on the principal branch at `g_tilde`.
    pub fn new(phi: f64, g_tilde: Complex64) -> Result<Self> {
        let start = bloch_angle(phi, g_tilde)?;
        let e = Complex64::from_polar(1.0, phi);
        let root1 = (g_tilde - e).sqrt();
        let mut root2 = (g_tilde - e.conj()).sqrt();
        if (root1 * root2 - start.radius).norm() > (root1 * root2 + start.radius).norm() {
            root2 = -root2;
        }
        Ok(Self { phi, g_tilde, root1, root2, theta: start.theta })
    }

    pub fn angle(&self) -> BlochAngle {
        BlochAngle { theta: self.theta, radius: self.root1 * self.root2 }
    }

    pub fn coupling(&self) -> Complex64 {
        self.g_tilde
    }

    /// Moves to `target` along the straight segment from the current coupling.
    pub fn advance(&mut self, target: Complex64, t: f64) -> Result<BlochAngle> {
        let e = Complex64::from_polar(1.0, self.phi);
        while self.g_tilde != target {
            let d1 = (self.g_tilde - e).norm();
            let d2 = (self.g_tilde - e.conj()).norm();
            let reach = 0.5 * d1.min(d2);
            if reach < 1e-280 {
                return Err(self.jump_error(t, f64::INFINITY));
            }
            let gap = target - self.g_tilde;
            let next = if gap.norm() <= reach { target } else { self.g_tilde + gap * (reach / gap.norm()) };
            let r1 = (next - e).sqrt();
            let r2 = (next - e.conj()).sqrt();
            let r1 = if (r1 - self.root1).norm() <= (r1 + self.root1).norm() { r1 } else { -r1 };
            let r2 = if (r2 - self.root2).norm() <= (r2 + self.root2).norm() { r2 } else { -r2 };
            // theta changes by the principal log of the ratio of e^{i theta}.
            let ratio = (r2 * self.root1) / (r1 * self.root2);
            let step = -Complex64::i() * ratio.ln();
            if step.norm() > MAX_ANGLE_STEP {
                return Err(self.jump_error(t, step.norm()));
            }
            self.theta += step;
            self.root1 = r1;
            self.root2 = r2;
            self.g_tilde = next;
        }
        Ok(self.angle())
    }

    fn jump_error(&self, t: f64, jump: f64) -> NqaError {
        NqaError::BranchJump { t, g_re: self.g_tilde.re, g_im: self.g_tilde.im, jump }
    }
}
