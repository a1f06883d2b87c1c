//! Float views of exact quantities. Everything decidable is decided in
//! integer/rational arithmetic elsewhere; these helpers only exist for
//! reporting logs and ratios of numbers that may exceed `f64` range.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Natural log of a positive big integer. Values inside `f64` range convert
/// directly; larger ones go through their top 64 bits plus a power-of-two
/// shift, which keeps the result accurate to a few ulps at any size.
pub fn big_ln(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "ln of zero");
    if let Some(v) = x.to_f64().filter(|v| v.is_finite()) {
        return v.ln();
    }
    let bits = x.bits();
    let shift = bits - 64;
    let top: BigUint = x >> shift;
    let mantissa = top.to_f64().expect("64-bit value converts");
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `f64` view of an exact rational, safe for numerators/denominators far
/// outside `f64` range.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    let numer = x.numer().abs().to_biguint().expect("|numerator| ≥ 0");
    let denom = x.denom().abs().to_biguint().expect("|denominator| > 0");
    if let (Some(n), Some(d)) = (
        numer.to_f64().filter(|v| v.is_finite()),
        denom.to_f64().filter(|v| v.is_finite()),
    ) {
        return sign * n / d;
    }
    sign * (big_ln(&numer) - big_ln(&denom)).exp()
}
