//! Minimal arbitrary-precision complex arithmetic on top of `astro-float`,
//! just enough to sum confluent hypergeometric series that cancel by many
//! orders of magnitude, plus a reciprocal gamma function (Spouge's formula).

use std::cell::RefCell;
use std::collections::HashMap;

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_complex::Complex64;

use crate::error::{NqaError, Result};

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Clone)]
pub(crate) struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

/// A number split as `mantissa * 2^exponent` so that huge or tiny values
/// survive the trip back to double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Scaled {
    pub mantissa: Complex64,
    pub exponent: i64,
}

impl Scaled {
    pub fn ln(&self) -> Complex64 {
        self.mantissa.ln() + self.exponent as f64 * std::f64::consts::LN_2
    }
}

fn split(x: &BigFloat) -> (f64, i64) {
    match x.as_raw_parts() {
        None => (f64::NAN, 0),
        Some((words, _, sign, e, _)) => {
            if words.iter().all(|&w| w == 0) {
                return (0.0, 0);
            }
            let wbits = 8 * std::mem::size_of::<Word>();
            let mut acc: u64 = 0;
            let mut taken = 0;
            for &w in words.iter().rev() {
                if taken >= 64 {
                    break;
                }
                acc = if wbits >= 64 { w as u64 } else { (acc << wbits) | w as u64 };
                taken += wbits;
            }
            let f = acc as f64 / 2f64.powi(64);
            let f = if sign == Sign::Neg { -f } else { f };
            (f, e as i64)
        }
    }
}

pub(crate) struct Ctx {
    pub p: usize,
    cc: Consts,
}

impl Ctx {
    pub fn new(p: usize) -> Result<Self> {
        let cc = Consts::new().map_err(|e| NqaError::Precision(format!("{e:?}")))?;
        Ok(Self { p, cc })
    }

    pub fn real(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    pub fn from_c64(&self, z: Complex64) -> BigComplex {
        BigComplex { re: self.real(z.re), im: self.real(z.im) }
    }

    pub fn add(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        BigComplex { re: a.re.add(&b.re, self.p, RM), im: a.im.add(&b.im, self.p, RM) }
    }

    pub fn sub(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        BigComplex { re: a.re.sub(&b.re, self.p, RM), im: a.im.sub(&b.im, self.p, RM) }
    }

    pub fn mul(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        let p = self.p;
        let rr = a.re.mul(&b.re, p, RM);
        let ii = a.im.mul(&b.im, p, RM);
        let ri = a.re.mul(&b.im, p, RM);
        let ir = a.im.mul(&b.re, p, RM);
        BigComplex { re: rr.sub(&ii, p, RM), im: ri.add(&ir, p, RM) }
    }

    pub fn scale(&self, a: &BigComplex, r: &BigFloat) -> BigComplex {
        BigComplex { re: a.re.mul(r, self.p, RM), im: a.im.mul(r, self.p, RM) }
    }

    pub fn div_real(&self, a: &BigComplex, r: &BigFloat) -> BigComplex {
        BigComplex { re: a.re.div(r, self.p, RM), im: a.im.div(r, self.p, RM) }
    }

    pub fn div(&self, a: &BigComplex, b: &BigComplex) -> BigComplex {
        let p = self.p;
        let den = b.re.mul(&b.re, p, RM).add(&b.im.mul(&b.im, p, RM), p, RM);
        let conj = BigComplex { re: b.re.clone(), im: b.im.neg() };
        self.div_real(&self.mul(a, &conj), &den)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    pub fn exp(&mut self, a: &BigComplex) -> BigComplex {
        let p = self.p;
        let m = a.re.exp(p, RM, &mut self.cc);
        let c = a.im.cos(p, RM, &mut self.cc);
        let s = a.im.sin(p, RM, &mut self.cc);
        BigComplex { re: m.mul(&c, p, RM), im: m.mul(&s, p, RM) }
    }

    fn atan2(&mut self, y: &BigFloat, x: &BigFloat) -> BigFloat {
        let p = self.p;
        let pi = self.pi();
        if x.is_zero() {
            let half = pi.div(&BigFloat::from_f64(2.0, p), p, RM);
            return if y.is_negative() { half.neg() } else { half };
        }
        let base = y.div(x, p, RM).atan(p, RM, &mut self.cc);
        if x.is_positive() {
            base
        } else if y.is_negative() {
            base.sub(&pi, p, RM)
        } else {
            base.add(&pi, p, RM)
        }
    }

    /// Principal logarithm.
    pub fn ln(&mut self, a: &BigComplex) -> BigComplex {
        let p = self.p;
        let mod2 = a.re.mul(&a.re, p, RM).add(&a.im.mul(&a.im, p, RM), p, RM);
        let half = BigFloat::from_f64(0.5, p);
        let re = mod2.ln(p, RM, &mut self.cc).mul(&half, p, RM);
        let im = self.atan2(&a.im, &a.re);
        BigComplex { re, im }
    }

    /// `sin(pi a)`.
    pub fn sin_pi(&mut self, a: &BigComplex) -> BigComplex {
        let p = self.p;
        let pi = self.pi();
        let x = a.re.mul(&pi, p, RM);
        let y = a.im.mul(&pi, p, RM);
        let ey = y.exp(p, RM, &mut self.cc);
        let half = BigFloat::from_f64(0.5, p);
        let inv = ey.reciprocal(p, RM);
        let cosh = ey.add(&inv, p, RM).mul(&half, p, RM);
        let sinh = ey.sub(&inv, p, RM).mul(&half, p, RM);
        let sx = x.sin(p, RM, &mut self.cc);
        let cx = x.cos(p, RM, &mut self.cc);
        BigComplex { re: sx.mul(&cosh, p, RM), im: cx.mul(&sinh, p, RM) }
    }

    pub fn split(&self, a: &BigComplex) -> Result<Scaled> {
        let (mr, er) = split(&a.re);
        let (mi, ei) = split(&a.im);
        if mr.is_nan() || mi.is_nan() {
            return Err(NqaError::Precision("NaN in extended-precision evaluation".into()));
        }
        let e = if mr == 0.0 { ei } else if mi == 0.0 { er } else { er.max(ei) };
        let re = mr * 2f64.powi((er - e).clamp(-1100, 0) as i32);
        let im = mi * 2f64.powi((ei - e).clamp(-1100, 0) as i32);
        Ok(Scaled { mantissa: Complex64::new(re, im), exponent: e })
    }

    /// Cheap `log2 |a|`, good to about one bit; `-inf` for zero.
    pub fn log2_abs(&self, a: &BigComplex) -> f64 {
        match self.split(a) {
            Ok(s) if s.mantissa.norm() > 0.0 => s.mantissa.norm().log2() + s.exponent as f64,
            _ => f64::NEG_INFINITY,
        }
    }

    pub fn is_nan(a: &BigComplex) -> bool {
        a.re.is_nan() || a.im.is_nan()
    }
}

/// Spouge coefficients `c_0..c_{a-1}` for a given integer `a` and precision.
fn spouge_coefficients(ctx: &mut Ctx, a: usize) -> Vec<BigFloat> {
    let p = ctx.p;
    let two_pi = ctx.pi().mul(&BigFloat::from_f64(2.0, p), p, RM);
    let mut out = Vec::with_capacity(a);
    out.push(two_pi.sqrt(p, RM));
    let mut fact = BigFloat::from_f64(1.0, p);
    for k in 1..a {
        if k > 1 {
            fact = fact.mul(&BigFloat::from_f64((k - 1) as f64, p), p, RM);
        }
        let base = BigFloat::from_f64((a - k) as f64, p);
        let expo = BigFloat::from_f64(k as f64 - 0.5, p);
        let pow = base.ln(p, RM, &mut ctx.cc).mul(&expo, p, RM).exp(p, RM, &mut ctx.cc);
        let e = BigFloat::from_f64((a - k) as f64, p).exp(p, RM, &mut ctx.cc);
        let mut c = pow.mul(&e, p, RM).div(&fact, p, RM);
        if k % 2 == 0 {
            c = c.neg();
        }
        out.push(c);
    }
    out
}

thread_local! {
    static SPOUGE: RefCell<HashMap<usize, (usize, Vec<BigFloat>)>> = RefCell::new(HashMap::new());
}

/// `1/Gamma(w)` to roughly `target_bits` bits, evaluated at `ctx.p` bits
/// (which must exceed the target by the Spouge cancellation margin).
pub(crate) fn recip_gamma(ctx: &mut Ctx, w: &BigComplex, target_bits: usize) -> Result<BigComplex> {
    let half = BigFloat::from_f64(0.5, ctx.p);
    let reflect = w.re.cmp(&half).map(|c| c < 0).unwrap_or(false);
    // Spouge needs Re(z) > -1/2 after the reflection below; write Gamma(z + 1).
    let one = ctx.from_c64(Complex64::new(1.0, 0.0));
    let z = if reflect {
        BigComplex { re: w.re.neg(), im: w.im.neg() }
    } else {
        ctx.sub(w, &one)
    };

    let a = ((target_bits as f64) * std::f64::consts::LN_2 / (2.0 * std::f64::consts::PI).ln()).ceil() as usize + 2;
    let p = ctx.p;
    let coeffs = SPOUGE.with(|cache| {
        let mut cache = cache.borrow_mut();
        if let Some((cp, c)) = cache.get(&a) {
            if *cp >= p {
                return c.clone();
            }
        }
        let c = spouge_coefficients(ctx, a);
        cache.insert(a, (p, c.clone()));
        c
    });

    let mut sum = BigComplex { re: coeffs[0].clone(), im: BigFloat::from_f64(0.0, p) };
    for (k, ck) in coeffs.iter().enumerate().skip(1) {
        let den = ctx.add(&z, &ctx.from_c64(Complex64::new(k as f64, 0.0)));
        let term = ctx.div(&BigComplex { re: ck.clone(), im: BigFloat::from_f64(0.0, p) }, &den);
        sum = ctx.add(&sum, &term);
    }
    // Gamma(z+1) = (z+a)^{z+1/2} e^{-(z+a)} * sum
    let za = ctx.add(&z, &ctx.from_c64(Complex64::new(a as f64, 0.0)));
    let zh = ctx.add(&z, &ctx.from_c64(Complex64::new(0.5, 0.0)));
    let ln_za = ctx.ln(&za);
    let lg = ctx.sub(&ctx.mul(&zh, &ln_za), &za);
    let neg_lg = BigComplex { re: lg.re.neg(), im: lg.im.neg() };
    let e = ctx.exp(&neg_lg);
    let mut inv = ctx.div(&e, &sum);
    if reflect {
        // 1/Gamma(w) = sin(pi w) Gamma(1 - w) / pi, and Gamma(1-w) = Gamma(z+1).
        let s = ctx.sin_pi(w);
        let pi = ctx.pi();
        let gamma_1mw = ctx.div(&one, &inv);
        inv = ctx.div_real(&ctx.mul(&s, &gamma_1mw), &pi);
    }
    if Ctx::is_nan(&inv) {
        return Err(NqaError::Precision(format!("reciprocal gamma failed at precision {p}")));
    }
    Ok(inv)
}

/// Extra working bits Spouge's sum needs for a `target_bits` result.
pub(crate) fn spouge_guard_bits(target_bits: usize) -> usize {
    // The coefficients alternate in sign and grow like e^a / sqrt(a).
    let a = (target_bits as f64) * std::f64::consts::LN_2 / (2.0 * std::f64::consts::PI).ln() + 2.0;
    (a * std::f64::consts::LOG2_E).ceil() as usize + 32
}
