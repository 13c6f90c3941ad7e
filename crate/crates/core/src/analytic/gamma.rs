//! Complex gamma function in double precision.

use num_complex::Complex64;
use std::f64::consts::PI;

// B_{2k} / (2k (2k - 1)) for k = 1..10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

const SHIFT_TO: f64 = 15.0;

/// `ln Gamma(z)`. For `Re z >= 1/2` this is the principal branch (analytic
/// continuation from the positive real axis); to the left of that line it
/// comes from the reflection formula and is only guaranteed modulo `2 pi i`.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(1.0 - z);
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < SHIFT_TO {
        shift += w.ln();
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        series += pow * c;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - shift
}

pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma(z).exp()
}

/// `1/Gamma(z)`, exactly zero at the poles.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        return (z * PI).sin() / PI * ln_gamma(1.0 - z).exp();
    }
    (-ln_gamma(z)).exp()
}
