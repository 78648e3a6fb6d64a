//! Double-double ("twofloat") arithmetic: an unevaluated sum `hi + lo` of
//! two `f64`s carrying about 106 bits of significand.
//!
//! Closed-form term evaluation raises roots to powers in the hundreds; in
//! plain `f64` the rounding of the root alone is amplified `k`-fold, which
//! is enough to miss the nearest integer for terms near `2^48`. Carrying
//! roots, weights and powers in double-double keeps the error far below
//! half a unit there.

use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::unity::Rotor;
use crate::Complex;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub const fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    pub fn scale(self, factor: f64) -> Dd {
        // exact for powers of two
        Dd {
            hi: self.hi * factor,
            lo: self.lo * factor,
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let x = 1.0 / libm::sqrt(self.hi);
        let ax = Dd::new(self.hi * x);
        let residual = self - ax * ax;
        ax + Dd::new(residual.hi * x * 0.5)
    }

    /// Nearest integer as `(integer part, signed distance)`, both in `f64`.
    pub fn round_with_distance(self) -> (f64, f64) {
        let mut n = libm::round(self.hi);
        let mut frac = (self.hi - n) + self.lo;
        if frac > 0.5 {
            n += 1.0;
            frac -= 1.0;
        } else if frac < -0.5 {
            n -= 1.0;
            frac += 1.0;
        }
        (n, frac)
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::new(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::new(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

/// Complex number over [`Dd`] components.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: DdComplex = DdComplex {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    pub fn new(re: Dd, im: Dd) -> Self {
        DdComplex { re, im }
    }

    pub fn real(x: Dd) -> Self {
        DdComplex {
            re: x,
            im: Dd::ZERO,
        }
    }

    pub fn to_complex(self) -> Complex {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(self) -> Self {
        DdComplex {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn norm_sqr(self) -> Dd {
        self.re * self.re + self.im * self.im
    }

    pub fn norm(self) -> f64 {
        self.to_complex().norm()
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(self, factor: f64) -> Self {
        DdComplex {
            re: self.re.scale(factor),
            im: self.im.scale(factor),
        }
    }

    pub fn powu(self, mut k: u32) -> Self {
        let mut base = self;
        let mut acc = DdComplex::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    /// Refines an `f64` approximation of a root of `w^n = z` by Newton steps.
    pub fn refine_root(self, approx: Complex, n: u32) -> Self {
        let mut w = DdComplex::from(approx);
        if w.is_zero() {
            return w;
        }
        let n_dd = DdComplex::real(Dd::new(n as f64));
        for _ in 0..2 {
            let lower = w.powu(n - 1);
            let step = (lower * w - self) / (n_dd * lower);
            w = w - step;
        }
        w
    }

    /// Principal square root.
    pub fn sqrt(self) -> Self {
        if self.im.is_zero() {
            return if self.re.hi >= 0.0 {
                DdComplex::real(self.re.sqrt())
            } else {
                DdComplex::new(Dd::ZERO, (-self.re).sqrt())
            };
        }
        self.refine_root(self.to_complex().sqrt(), 2)
    }

    /// A rotor evaluated to double-double accuracy: the `f64` value
    /// polished as a root of `w^den = 1`.
    pub fn rotor(r: Rotor) -> Self {
        let value = r.value();
        match r.denominator() {
            1 | 2 | 4 => DdComplex::from(value),
            den if den <= 1 << 20 => DdComplex::ONE.refine_root(value, den as u32),
            _ => DdComplex::from(value),
        }
    }
}

impl From<Complex> for DdComplex {
    fn from(z: Complex) -> Self {
        DdComplex {
            re: Dd::new(z.re),
            im: Dd::new(z.im),
        }
    }
}

impl From<f64> for DdComplex {
    fn from(x: f64) -> Self {
        DdComplex::real(Dd::new(x))
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    fn add(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re + b.re,
            im: self.im + b.im,
        }
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    fn sub(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re - b.re,
            im: self.im - b.im,
        }
    }
}

impl Neg for DdComplex {
    type Output = DdComplex;
    fn neg(self) -> DdComplex {
        DdComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    fn mul(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

impl Div for DdComplex {
    type Output = DdComplex;
    fn div(self, b: DdComplex) -> DdComplex {
        // scale by a power of two near 1/|b| to keep the squared norm in range
        let mag = b.re.hi.abs().max(b.im.hi.abs());
        let factor = if mag > 0.0 {
            libm::exp2(-libm::ilogb(mag) as f64)
        } else {
            1.0
        };
        let bs = b.scale(factor);
        let denom = bs.norm_sqr();
        let num = self * bs.conj();
        DdComplex {
            re: num.re / denom,
            im: num.im / denom,
        }
        .scale(factor)
    }
}
