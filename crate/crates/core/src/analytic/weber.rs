//! Parabolic cylinder function `D_nu(z)` for complex order and argument.
//!
//! Two representations are used:
//!
//! * the large-`|z|` expansion, including the Stokes-switched second series
//!   once `|arg z| > pi/2`;
//! * the Maclaurin form
//!   `D_nu(z) = sqrt(pi) 2^{nu/2} e^{-z^2/4} [ M(-nu/2, 1/2, z^2/2) / Gamma((1-nu)/2)
//!   - sqrt(2) z M((1-nu)/2, 3/2, z^2/2) / Gamma(-nu/2) ]`.
//!
//! The expansion is used whenever its own truncation estimate is below
//! [`ASYMPTOTIC_ACCEPT`]. Otherwise the Maclaurin form is summed, in double
//! precision if the terms do not cancel much and in extended precision
//! otherwise: along the anti-Stokes rays the series terms grow like
//! `e^{|z|^2/2}` while the sum stays of order one, so a fixed double-precision
//! crossover radius would silently lose all digits for moderately large
//! orders.

use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};

use super::gamma::recip_gamma;
use super::precise::{self, BigComplex, Ctx, Scaled};
use crate::error::{NqaError, Result};

/// Largest supported `|nu|`.
pub const MAX_ORDER: f64 = 1.0e3;
/// Largest supported `|z|`.
pub const MAX_ARGUMENT: f64 = 1.0e4;
/// Relative truncation error below which the asymptotic expansion is trusted.
pub const ASYMPTOTIC_ACCEPT: f64 = 1e-14;
/// Relative disagreement between the two representations treated as a bug.
pub const REGIME_TOLERANCE: f64 = 1e-6;
/// Precision ceiling for the extended series.
const MAX_BITS: usize = 16_384;

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcfMethod {
    Asymptotic,
    Series,
    ExtendedSeries { bits: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PcfValue {
    pub value: Complex64,
    pub method: PcfMethod,
    /// Estimated relative error.
    pub error: f64,
}

/// `D_nu(z)`.
pub fn parabolic_cylinder_d(nu: Complex64, z: Complex64) -> Result<Complex64> {
    parabolic_cylinder_d_detail(nu, z).map(|v| v.value)
}

fn check(nu: Complex64, z: Complex64) -> Result<()> {
    if !(nu.re.is_finite() && nu.im.is_finite() && z.re.is_finite() && z.im.is_finite()) {
        return Err(NqaError::InvalidParameter(format!("non-finite input nu={nu}, z={z}")));
    }
    if nu.norm() > MAX_ORDER || z.norm() > MAX_ARGUMENT {
        return Err(NqaError::OutOfRegion(format!("D_nu(z) with |nu|={:.3e}, |z|={:.3e}", nu.norm(), z.norm())));
    }
    Ok(())
}

/// `D_nu(z)` together with the method used and its error estimate.
pub fn parabolic_cylinder_d_detail(nu: Complex64, z: Complex64) -> Result<PcfValue> {
    check(nu, z)?;
    if let Some((asy, truncation)) = asymptotic_with_truncation(nu, z)? {
        if asy.error < ASYMPTOTIC_ACCEPT {
            // Near the acceptance edge, cross-check against the series. The
            // rounding floor is left out of this test: it is always present
            // and would force the costly series on every large argument.
            if truncation > 1e-3 * ASYMPTOTIC_ACCEPT {
                let ser = series(nu, z)?;
                let rel = (ser.value - asy.value).norm() / asy.value.norm().max(f64::MIN_POSITIVE);
                if rel > REGIME_TOLERANCE {
                    return Err(NqaError::RegimeMismatch { nu: nu.to_string(), z: z.to_string(), rel_diff: rel });
                }
            }
            return Ok(asy);
        }
    }
    series(nu, z)
}

fn finish(ln_value: Complex64, what: &str) -> Result<Complex64> {
    if ln_value.re > 709.0 {
        return Err(NqaError::OutOfRegion(format!("{what} overflows double precision (ln|D| = {:.1})", ln_value.re)));
    }
    Ok(ln_value.exp())
}

struct Sum {
    value: Complex64,
    /// Largest term magnitude seen.
    peak: f64,
    /// Magnitude of the first omitted term (optimal truncation).
    tail: f64,
}

/// Sums `sum_s t_s` with `t_{s+1} = t_s * ratio(s)`, stopping at the smallest term.
fn divergent_sum(ratio: impl Fn(f64) -> Complex64) -> Sum {
    let mut term = Complex64::new(1.0, 0.0);
    let mut value = term;
    let mut peak: f64 = 1.0;
    for s in 0..400 {
        let next = term * ratio(s as f64);
        let nn = next.norm();
        if nn == 0.0 {
            return Sum { value, peak, tail: 0.0 };
        }
        if nn > term.norm() {
            return Sum { value, peak, tail: term.norm() };
        }
        term = next;
        value += term;
        peak = peak.max(nn);
        if nn < 1e-18 * value.norm() {
            return Sum { value, peak, tail: nn };
        }
    }
    Sum { value, peak, tail: term.norm() }
}

/// Large-`|z|` expansion. `None` when `|z|` is too small to bother.
pub fn asymptotic(nu: Complex64, z: Complex64) -> Result<Option<PcfValue>> {
    Ok(asymptotic_with_truncation(nu, z)?.map(|(v, _)| v))
}

/// The expansion and, separately, the relative truncation part of its error.
fn asymptotic_with_truncation(nu: Complex64, z: Complex64) -> Result<Option<(PcfValue, f64)>> {
    check(nu, z)?;
    if z.norm() < 4.0 {
        return Ok(None);
    }
    let z2 = z * z;
    let inv = 1.0 / (2.0 * z2);
    let ln_z = z.ln();

    let s1 = divergent_sum(|s| -(2.0 * s - nu) * (2.0 * s + 1.0 - nu) * inv / (s + 1.0));
    let ln1 = nu * ln_z - z2 / 4.0;

    let ph = z.arg();
    let mut parts = vec![(ln1, s1.value, s1.tail, 1e-16 * s1.peak)];
    let mut ambiguity = None;
    let switched = ph.abs() > PI / 2.0;
    let near_stokes = (ph.abs() - PI / 2.0).abs() < 0.35;
    if switched || near_stokes {
        let sigma = if ph > 0.0 || ph == PI { 1.0 } else { -1.0 };
        let rg = recip_gamma(-nu);
        let s2 = divergent_sum(|s| (1.0 + nu + 2.0 * s) * (2.0 + nu + 2.0 * s) * inv / (s + 1.0));
        let ln2 = 0.5 * (2.0 * PI).ln() + Complex64::new(0.0, sigma * PI) * nu - (nu + 1.0) * ln_z + z2 / 4.0;
        if rg != Complex64::new(0.0, 0.0) {
            let coef = -rg;
            if switched {
                parts.push((ln2 + coef.ln(), s2.value, s2.tail, 1e-16 * s2.peak));
            } else {
                ambiguity = Some((ln2 + coef.ln(), s2.value));
            }
        }
    }

    // Combine in log space so that neither part overflows prematurely.
    let top = parts.iter().map(|p| p.0.re).fold(f64::NEG_INFINITY, f64::max);
    let mut value = Complex64::new(0.0, 0.0);
    let mut trunc = 0.0;
    let mut round = 0.0;
    for (ln_pref, sum, tail, floor) in &parts {
        let w = (ln_pref - top).exp();
        value += w * sum;
        trunc += w.norm() * tail;
        round += w.norm() * floor;
    }
    if value.norm() == 0.0 {
        return Ok(None);
    }
    if let Some((ln_pref, sum)) = ambiguity {
        trunc += ((ln_pref - top).exp() * sum).norm();
    }
    let scale = value.norm();
    let ln_value = value.ln() + top;
    if ln_value.re > 709.0 {
        return Err(NqaError::OutOfRegion(format!("D_{nu}({z}) overflows double precision")));
    }
    let value = PcfValue { value: ln_value.exp(), method: PcfMethod::Asymptotic, error: (trunc + round) / scale };
    Ok(Some((value, trunc / scale)))
}

/// `ln` of the peak term of `M(a, b, x)`, for precision planning.
fn ln_peak(a: Complex64, b: f64, x: Complex64) -> f64 {
    let lx = x.norm().ln();
    let mut ln_t: f64 = 0.0;
    let mut best: f64 = 0.0;
    let limit = (4.0 * x.norm() + a.norm() + 50.0) as usize;
    for n in 0..limit {
        let n = n as f64;
        let an = (a + n).norm();
        if an == 0.0 {
            break;
        }
        ln_t += an.ln() + lx - (b + n).ln() - (n + 1.0).ln();
        best = best.max(ln_t);
    }
    best
}

/// The Maclaurin representation, precision chosen automatically.
pub fn series(nu: Complex64, z: Complex64) -> Result<PcfValue> {
    check(nu, z)?;
    let x = z * z / 2.0;
    let a1 = -nu / 2.0;
    let a2 = (1.0 - nu) / 2.0;
    let r1 = recip_gamma(a2);
    let r2 = recip_gamma(a1);
    let c2 = 2f64.sqrt() * z * r2;

    let ln_peak1 = ln_peak(a1, 0.5, x) + r1.norm().max(1e-300).ln();
    let ln_peak2 = ln_peak(a2, 1.5, x) + c2.norm().max(1e-300).ln();
    let ln_peak = ln_peak1.max(ln_peak2);

    // Leading-order magnitude of the bracket, from the expansion, as a guess
    // of how much cancellation to expect.
    let guess = if z.norm() > 1.0 {
        let ln_d = (nu * z.ln() - z * z / 4.0).re.max(((-nu - 1.0) * z.ln() + z * z / 4.0).re);
        ln_d + (z * z / 4.0).re - 0.5 * PI.ln() - 0.5 * nu.re * LN_2
    } else {
        0.0_f64.min(ln_peak)
    };
    let lost_guess = ((ln_peak - guess) / LN_2).max(0.0);

    if lost_guess < 12.0 {
        let (bracket, peak) = series_f64(a1, a2, x, r1, c2);
        let lost = (peak.ln() - bracket.norm().ln()) / LN_2;
        if lost.is_finite() && lost < 14.0 {
            let ln_pre = 0.5 * PI.ln() + nu * (LN_2 / 2.0) - z * z / 4.0;
            let value = finish(ln_pre + bracket.ln(), "series")?;
            return Ok(PcfValue { value, method: PcfMethod::Series, error: 2f64.powf(lost - 52.0) });
        }
    }

    let mut bits = lost_guess.ceil() as usize + 53 + 64;
    loop {
        bits = bits.div_ceil(64) * 64;
        if bits > MAX_BITS {
            return Err(NqaError::OutOfRegion(format!("D_{nu}({z}) needs more than {MAX_BITS} bits")));
        }
        let (bracket, lost) = series_extended(nu, z, bits)?;
        if (bits as f64) - lost >= 53.0 + 24.0 {
            let ln_pre = 0.5 * PI.ln() + nu * (LN_2 / 2.0) - z * z / 4.0;
            let value = finish(ln_pre + bracket.ln(), "series")?;
            let error = 2f64.powf(lost - bits as f64).max(f64::EPSILON);
            return Ok(PcfValue { value, method: PcfMethod::ExtendedSeries { bits }, error });
        }
        bits = lost.ceil() as usize + 53 + 64;
    }
}

/// Bracket in double precision and the largest term magnitude.
fn series_f64(a1: Complex64, a2: Complex64, x: Complex64, r1: Complex64, c2: Complex64) -> (Complex64, f64) {
    let m = |a: Complex64, b: f64| -> (Complex64, f64) {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        let mut peak: f64 = 1.0;
        let mut n = 0.0;
        loop {
            term *= (a + n) * x / ((b + n) * (n + 1.0));
            sum += term;
            peak = peak.max(term.norm());
            n += 1.0;
            if term.norm() <= 1e-17 * peak && n > x.norm() || term.norm() == 0.0 || n > 5000.0 {
                break;
            }
        }
        (sum, peak)
    };
    let (m1, p1) = m(a1, 0.5);
    let (m2, p2) = m(a2, 1.5);
    let bracket = m1 * r1 - c2 * m2;
    (bracket, (p1 * r1.norm()).max(p2 * c2.norm()))
}

/// Bracket at `bits` of working precision and the number of bits lost to
/// cancellation.
fn series_extended(nu: Complex64, z: Complex64, bits: usize) -> Result<(Scaled, f64)> {
    let ctx = Ctx::new(bits)?;
    let guard = precise::spouge_guard_bits(bits);
    let mut gctx = Ctx::new(bits + guard)?;

    let half = Complex64::new(0.5, 0.0);
    let nu_b = ctx.from_c64(nu);
    let a1 = ctx.scale(&nu_b, &ctx.real(-0.5));
    let a2 = ctx.add(&a1, &ctx.from_c64(half));
    let zb = ctx.from_c64(z);
    let x = ctx.scale(&ctx.mul(&zb, &zb), &ctx.real(0.5));

    let r1 = precise::recip_gamma(&mut gctx, &a2, bits)?;
    let r2 = precise::recip_gamma(&mut gctx, &a1, bits)?;
    let sqrt2 = ctx.real(2.0).sqrt(bits, astro_float::RoundingMode::ToEven);
    let c2 = ctx.scale(&ctx.mul(&zb, &r2), &sqrt2);

    let (m1, peak1) = m_series(&ctx, &a1, 0.5, &x);
    let (m2, peak2) = m_series(&ctx, &a2, 1.5, &x);
    let t1 = ctx.mul(&m1, &r1);
    let t2 = ctx.mul(&m2, &c2);
    let bracket = ctx.sub(&t1, &t2);

    let peak = (peak1 + ctx.log2_abs(&r1)).max(peak2 + ctx.log2_abs(&c2));
    let size = ctx.log2_abs(&bracket);
    let lost = if size.is_finite() { (peak - size).max(0.0) } else { f64::INFINITY };
    Ok((ctx.split(&bracket)?, lost))
}

/// `M(a, b, x)` and `log2` of its largest term.
fn m_series(ctx: &Ctx, a: &BigComplex, b: f64, x: &BigComplex) -> (BigComplex, f64) {
    let mut term = ctx.from_c64(Complex64::new(1.0, 0.0));
    let mut sum = term.clone();
    let mut peak: f64 = 0.0;
    let xn = ctx.log2_abs(x);
    let an = ctx.log2_abs(a);
    let min_terms = (2f64.powf(xn) + 2f64.powf(an) + 4.0) as usize;
    let mut n = 0usize;
    loop {
        let num = ctx.mul(&ctx.add(a, &ctx.from_c64(Complex64::new(n as f64, 0.0))), x);
        let den = ctx.real((b + n as f64) * (n as f64 + 1.0));
        term = ctx.div_real(&ctx.mul(&term, &num), &den);
        sum = ctx.add(&sum, &term);
        n += 1;
        let size = ctx.log2_abs(&term);
        if size == f64::NEG_INFINITY {
            break;
        }
        peak = peak.max(size);
        if n > min_terms && size < peak - ctx.p as f64 - 8.0 {
            break;
        }
    }
    (sum, peak)
}
