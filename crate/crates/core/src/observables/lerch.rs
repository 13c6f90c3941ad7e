//! Real Lerch transcendent `Phi(x, s, a) = sum_{n >= 0} x^n / (n + a)^s`.

use crate::analytic::gamma::ln_gamma;
use crate::error::{invalid, Result};
use num_complex::Complex64;

/// Terms summed directly before the Euler-Maclaurin tail takes over.
const DIRECT_TERMS: usize = 50;

// B_{2j} / (2j)! for j = 1..5.
const BERNOULLI: [f64; 5] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
];

/// `Phi(x, s, a)` for `0 <= x < 1`, `s > 0`, `a > 0`.
///
/// The first fifty terms are added directly. The remainder is replaced by its
/// integral, an incomplete gamma function, plus Euler-Maclaurin corrections
/// up to `B_10`; this keeps the cost fixed even as `x -> 1`, where the plain
/// series would need millions of terms.
pub fn lerch_phi(x: f64, s: f64, a: f64) -> Result<f64> {
    if !(x >= 0.0 && x < 1.0) {
        return invalid(format!("Lerch argument x must lie in [0, 1), got {x}"));
    }
    if !(s > 0.0 && s.is_finite()) || !(a > 0.0 && a.is_finite()) {
        return invalid(format!("Lerch parameters need s > 0 and a > 0, got s = {s}, a = {a}"));
    }
    if x == 0.0 {
        return Ok(a.powf(-s));
    }
    let lambda = -x.ln();
    let term = |n: f64| (-lambda * n).exp() * (n + a).powf(-s);

    let mut head = 0.0;
    for n in 0..DIRECT_TERMS {
        head += term(n as f64);
    }
    let m = DIRECT_TERMS as f64;
    let fm = term(m);
    if fm < 1e-18 * head {
        return Ok(head);
    }

    // int_M^inf e^{-lambda t} (t + a)^{-s} dt = e^{lambda a} lambda^{s-1} Gamma(1 - s, lambda (M + a))
    let y = lambda * (m + a);
    let ln_tail = lambda * a + (s - 1.0) * lambda.ln() + ln_upper_gamma(1.0 - s, y);
    let integral = ln_tail.exp();

    // Derivatives of e^{-lambda t} (t + a)^{-s} at t = M by Leibniz' rule.
    let mut corr = 0.0;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let order = 2 * j + 1;
        corr -= b * derivative(order, lambda, s, m + a) * (-lambda * m).exp();
    }
    Ok(head + integral + 0.5 * fm + corr)
}

/// `d^k/dt^k [e^{-lambda t} (t + a)^{-s}]` divided by `e^{-lambda t}`, at `t + a = w`.
fn derivative(k: usize, lambda: f64, s: f64, w: f64) -> f64 {
    let mut total = 0.0;
    let mut binom = 1.0;
    // falling = (-s)(-s-1)...(-s-i+1)
    let mut falling = 1.0;
    for i in 0..=k {
        if i > 0 {
            binom = binom * (k - i + 1) as f64 / i as f64;
            falling *= -s - (i - 1) as f64;
        }
        total += binom * (-lambda).powi((k - i) as i32) * falling * w.powf(-s - i as f64);
    }
    total
}

/// `ln Gamma(b, y)` for real `b` and `y > 0`.
pub fn ln_upper_gamma(b: f64, y: f64) -> f64 {
    if y > 1.0 + b.abs().max(1.0) {
        return ln_upper_gamma_cf(b, y);
    }
    if b > 0.0 {
        // Gamma(b) - gamma(b, y) with the lower function as a power series.
        let lg = ln_gamma(Complex64::new(b, 0.0)).re;
        let mut sum = 1.0 / b;
        let mut t = 1.0 / b;
        for n in 1..500 {
            t *= y / (b + n as f64);
            sum += t;
            if t < 1e-17 * sum {
                break;
            }
        }
        let lower = (b * y.ln() - y).exp() * sum;
        return (lg.exp() - lower).ln();
    }
    if b == 0.0 {
        return exp_integral_e1(y).ln();
    }
    // Gamma(b, y) = (Gamma(b + 1, y) - y^b e^{-y}) / b; both terms positive after the sign flip.
    let up = ln_upper_gamma(b + 1.0, y).exp();
    let pow = (b * y.ln() - y).exp();
    ((pow - up) / -b).ln()
}

/// Legendre continued fraction, evaluated with the modified Lentz method.
fn ln_upper_gamma_cf(b: f64, y: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut bb = y + 1.0 - b;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / bb;
    let mut h = d;
    for i in 1..2000 {
        let an = -(i as f64) * (i as f64 - b);
        bb += 2.0;
        d = an * d + bb;
        if d.abs() < TINY {
            d = TINY;
        }
        c = bb + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    b * y.ln() - y + h.ln()
}

fn exp_integral_e1(y: f64) -> f64 {
    const EULER: f64 = 0.577_215_664_901_532_9;
    let mut sum = 0.0;
    let mut t = 1.0;
    for n in 1..200 {
        t *= -y / n as f64;
        sum += t / n as f64;
        if t.abs() < 1e-18 {
            break;
        }
    }
    -EULER - y.ln() - sum
}
