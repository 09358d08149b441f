//! Scalar abstraction over `f32`/`f64` plus seeded hashing helpers.
//!
//! Feature math runs in `f32`; gradient checks re-run the same generic code
//! in `f64` ("shadow mode"). Transcendentals always go through `libm`, never
//! the platform math library, so outputs are reproducible bit-for-bit.

use core::fmt::{Debug, Display};
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Real scalar used by the generic raster/attention/loss code.
pub trait Real:
    Copy
    + PartialOrd
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + 'static
{
    const ZERO: Self;
    const ONE: Self;

    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn from_usize(v: usize) -> Self {
        Self::from_f64(v as f64)
    }

    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn floor(self) -> Self;
    fn abs(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;

    fn is_finite(self) -> bool;

    fn max(self, other: Self) -> Self {
        if self > other {
            self
        } else {
            other
        }
    }
    fn min(self, other: Self) -> Self {
        if self < other {
            self
        } else {
            other
        }
    }
    fn clamp01(self) -> Self {
        self.max(Self::ZERO).min(Self::ONE)
    }
}

impl Real for f32 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;

    fn from_f64(v: f64) -> Self {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn exp(self) -> Self {
        libm::expf(self)
    }
    fn ln(self) -> Self {
        libm::logf(self)
    }
    fn sqrt(self) -> Self {
        libm::sqrtf(self)
    }
    fn floor(self) -> Self {
        libm::floorf(self)
    }
    fn abs(self) -> Self {
        libm::fabsf(self)
    }
    fn sin(self) -> Self {
        libm::sinf(self)
    }
    fn cos(self) -> Self {
        libm::cosf(self)
    }
    fn is_finite(self) -> bool {
        f32::is_finite(self)
    }
}

impl Real for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;

    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn exp(self) -> Self {
        libm::exp(self)
    }
    fn ln(self) -> Self {
        libm::log(self)
    }
    fn sqrt(self) -> Self {
        libm::sqrt(self)
    }
    fn floor(self) -> Self {
        libm::floor(self)
    }
    fn abs(self) -> Self {
        libm::fabs(self)
    }
    fn sin(self) -> Self {
        libm::sin(self)
    }
    fn cos(self) -> Self {
        libm::cos(self)
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

/// SplitMix64 step; used to derive independent stream seeds.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mixes two seeds into one; order-sensitive.
pub fn mix_seed(a: u64, b: u64) -> u64 {
    splitmix64(splitmix64(a).wrapping_add(b.rotate_left(17)))
}

/// Deterministic hash of a 2-D lattice point, uniform in `[0, 1)`.
pub fn lattice_noise(seed: u64, ix: i64, iy: i64) -> f64 {
    let h = splitmix64(
        seed ^ (ix as u64).wrapping_mul(0x8538_ecb5_bd45_6c1b)
            ^ (iy as u64).wrapping_mul(0xd6e8_feb8_6659_fd93),
    );
    (h >> 11) as f64 / (1u64 << 53) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_ops_match_between_widths() {
        let x = 0.73_f64;
        assert!((Real::exp(x as f32) as f64 - Real::exp(x)).abs() < 1e-6);
        assert!((Real::sqrt(x as f32) as f64 - Real::sqrt(x)).abs() < 1e-7);
    }

    #[test]
    fn lattice_noise_is_deterministic_and_bounded() {
        for i in -5..5_i64 {
            for j in -5..5_i64 {
                let a = lattice_noise(42, i, j);
                let b = lattice_noise(42, i, j);
                assert_eq!(a, b);
                assert!((0.0..1.0).contains(&a));
            }
        }
        assert_ne!(lattice_noise(1, 0, 0), lattice_noise(2, 0, 0));
    }

    #[test]
    fn mix_seed_spreads() {
        assert_ne!(mix_seed(0, 0), mix_seed(0, 1));
        assert_ne!(mix_seed(0, 1), mix_seed(1, 0));
    }
}
