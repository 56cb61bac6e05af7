//! Arbitrary-precision series oracle for the modified Bessel kernels.
//!
//! Test-only code, shared by the kernel unit tests and the acceptance
//! suite via `#[path]`. Everything is computed in exact rational
//! arithmetic (`num_rational::BigRational`) from the defining series,
//! truncated once a term drops below 1e-30, so the oracle is fully
//! independent of the production evaluation path:
//!
//!   I0(x) = sum_k (x^2/4)^k / (k!)^2
//!   I1(x) = (x/2) sum_k (x^2/4)^k / (k!(k+1)!)
//!   K0(x) = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} H_k (x^2/4)^k/(k!)^2
//!   K1(x) = 1/x + (ln(x/2) + gamma) I1(x)
//!           - (x/4) sum_k (H_k + H_{k+1}) (x^2/4)^k/(k!(k+1)!)
//!
//! ln of a rational is evaluated through the atanh series
//! ln(y) = 2 sum_j t^(2j+1)/(2j+1), t = (y-1)/(y+1); the Euler-Mascheroni
//! constant is a 50-digit literal.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// 1e-30 as a rational truncation threshold.
fn tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u8).pow(30))
}

/// Euler-Mascheroni constant, 50 decimal digits as an exact rational.
fn euler_gamma() -> BigRational {
    let digits = "57721566490153286060651209008240243104215933593992";
    BigRational::new(digits.parse::<BigInt>().unwrap(), BigInt::from(10u8).pow(50))
}

/// ln(y) for rational y in (0, 2] via 2*atanh((y-1)/(y+1)).
fn ln_rational(y: &BigRational) -> BigRational {
    assert!(y.is_positive(), "ln argument must be positive");
    let t = (y - BigRational::one()) / (y + BigRational::one());
    let t2 = &t * &t;
    let tol = tolerance() / BigRational::from_integer(BigInt::from(10));
    let mut power = t.clone();
    let mut sum = BigRational::zero();
    for j in 0..2000 {
        let term = &power / BigRational::from_integer(BigInt::from(2 * j + 1));
        sum += &term;
        if term.abs() < tol {
            break;
        }
        power *= &t2;
    }
    sum * BigRational::from_integer(BigInt::from(2))
}

pub fn i0_exact(x: &BigRational) -> BigRational {
    let q = x * x / BigRational::from_integer(BigInt::from(4));
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let tol = tolerance();
    for k in 1i64..2000 {
        term = term * &q / ratio(k * k, 1);
        sum += &term;
        if term < tol {
            break;
        }
    }
    sum
}

pub fn i1_exact(x: &BigRational) -> BigRational {
    let q = x * x / BigRational::from_integer(BigInt::from(4));
    let mut term = x / BigRational::from_integer(BigInt::from(2));
    let mut sum = term.clone();
    let tol = tolerance();
    for k in 1i64..2000 {
        term = term * &q / ratio(k * (k + 1), 1);
        sum += &term;
        if term < tol {
            break;
        }
    }
    sum
}

pub fn k0_exact(x: &BigRational) -> BigRational {
    let q = x * x / BigRational::from_integer(BigInt::from(4));
    let mut term = BigRational::one();
    let mut harmonic = BigRational::zero();
    let mut sum = BigRational::zero();
    let tol = tolerance();
    for k in 1i64..2000 {
        term = term * &q / ratio(k * k, 1);
        harmonic += ratio(1, k);
        let contribution = &term * &harmonic;
        sum += &contribution;
        if contribution < tol {
            break;
        }
    }
    let half_x = x / BigRational::from_integer(BigInt::from(2));
    -(ln_rational(&half_x) + euler_gamma()) * i0_exact(x) + sum
}

pub fn k1_exact(x: &BigRational) -> BigRational {
    let q = x * x / BigRational::from_integer(BigInt::from(4));
    let mut term = BigRational::one();
    let mut h_k = BigRational::zero();
    let mut h_k1 = BigRational::one();
    let mut sum = &h_k + &h_k1;
    let tol = tolerance();
    for k in 1i64..2000 {
        term = term * &q / ratio(k * (k + 1), 1);
        h_k += ratio(1, k);
        h_k1 += ratio(1, k + 1);
        let contribution = &term * (&h_k + &h_k1);
        sum += &contribution;
        if contribution < tol {
            break;
        }
    }
    let half_x = x / BigRational::from_integer(BigInt::from(2));
    x.recip() + (ln_rational(&half_x) + euler_gamma()) * i1_exact(x)
        - x / BigRational::from_integer(BigInt::from(4)) * sum
}

/// All four kernels at rational x = num/den, rounded to f64:
/// `[I0, I1, K0, K1]`.
pub fn all_kernels(num: i64, den: i64) -> [f64; 4] {
    let x = ratio(num, den);
    [
        i0_exact(&x).to_f64().unwrap(),
        i1_exact(&x).to_f64().unwrap(),
        k0_exact(&x).to_f64().unwrap(),
        k1_exact(&x).to_f64().unwrap(),
    ]
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn oracle_reproduces_frozen_values_at_one() {
        let [i0, i1, k0, k1] = all_kernels(1, 1);
        assert_eq!(i0, 1.266_065_877_752_008_4);
        assert_eq!(i1, 0.565_159_103_992_485);
        assert_eq!(k0, 0.421_024_438_240_708_34);
        assert_eq!(k1, 0.601_907_230_197_234_6);
    }

    #[test]
    fn ln_rational_matches_f64_ln() {
        for (n, d) in [(1i64, 2i64), (3, 2), (1, 10), (2, 1)] {
            let v = ln_rational(&ratio(n, d)).to_f64().unwrap();
            let expect = (n as f64 / d as f64).ln();
            assert!((v - expect).abs() <= 4.0 * f64::EPSILON * expect.abs().max(1.0));
        }
    }
}
