//! Certified decimal approximations of cyclotomic numbers under the standard
//! embedding `ζ_N ↦ exp(2πi/N)`.
//!
//! Everything is done in fixed point over `BigInt` with an explicit error
//! budget; if the requested rounding is ambiguous the working precision is
//! raised and the computation repeated.

use num::{BigInt, Integer, One, Signed, Zero};

use super::field::CyclotomicNumber;

/// A decimal approximation; `re` and `im` carry exactly `digits` fractional digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxComplex {
    pub re: String,
    pub im: String,
}

impl ApproxComplex {
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.parse().unwrap(), self.im.parse().unwrap())
    }
}

fn pow10(n: u32) -> BigInt {
    num::pow(BigInt::from(10), n as usize)
}

/// `atan(1/x)` scaled by `scale`, error at most `terms` ulps.
fn atan_inv(x: u64, scale: &BigInt) -> (BigInt, u64) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = scale / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power = &power / &x2;
        k += 1;
    }
    (sum, 2 * k + 2)
}

/// π scaled by `scale`, with an error bound in ulps.
fn pi(scale: &BigInt) -> (BigInt, u64) {
    let (a, ea) = atan_inv(5, scale);
    let (b, eb) = atan_inv(239, scale);
    (a * 16 - b * 4, 16 * ea + 4 * eb + 1)
}

/// `(cos θ, sin θ)` for `θ = 2πj/n` at fixed point `scale`, with an error bound in ulps.
fn cis(j: u64, n: u64, scale: &BigInt, pi_s: &BigInt, pi_err: u64) -> (BigInt, BigInt, u64) {
    // Reduce to θ in [0, π/2] using symmetries of the circle, exactly in j/n.
    let (j, n) = {
        let g = j.gcd(&n);
        (j / g, n / g)
    };
    let j4 = 4 * j;
    let quadrant = j4 / n;
    let rem = j4 % n; // θ = (quadrant + rem/n) π/2
    // reduced angle t = (rem/n)·π/2, in [0, π/2)
    let t = pi_s * BigInt::from(rem) / BigInt::from(2 * n);
    let t_err = pi_err + 1;
    let mut c = BigInt::zero();
    let mut s = BigInt::zero();
    let mut term = scale.clone();
    let mut k = 0u64;
    let mut steps = 0u64;
    while !term.is_zero() {
        match k % 4 {
            0 => c += &term,
            1 => s += &term,
            2 => c -= &term,
            _ => s -= &term,
        }
        k += 1;
        term = &term * &t / scale / BigInt::from(k);
        steps += 1;
    }
    // |d cos/dt| ≤ 1, so the argument error propagates one-for-one.
    let err = t_err + 2 * steps + 2;
    let (c, s) = match quadrant % 4 {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    };
    (c, s, err)
}

/// Rounds `x / scale` to `digits` fractional digits if the whole interval
/// `[x - err, x + err]` rounds the same way.
fn certified_round(x: &BigInt, err: &BigInt, scale_digits: u32, digits: u32) -> Option<BigInt> {
    let div = pow10(scale_digits - digits);
    let round = |v: &BigInt| -> BigInt {
        let twice: BigInt = v * 2u32 + &div;
        twice.div_floor(&(&div * 2))
    };
    let lo = round(&(x - err));
    let hi = round(&(x + err));
    (lo == hi).then_some(lo)
}

fn format_fixed(v: &BigInt, digits: u32) -> String {
    let neg = v.is_negative();
    let abs = v.abs();
    let div = pow10(digits);
    let (int, frac) = abs.div_rem(&div);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&int.to_string());
    if digits > 0 {
        let f = frac.to_string();
        s.push('.');
        for _ in f.len()..digits as usize {
            s.push('0');
        }
        s.push_str(&f);
    }
    s
}

impl CyclotomicNumber {
    /// Decimal approximation correct to `digits` fractional digits.
    ///
    /// Values exactly halfway between two representable decimals can never be
    /// certified; after a bounded number of refinements the nearest rounding
    /// of the best estimate is returned.
    pub fn approx_complex(&self, digits: u32) -> ApproxComplex {
        let digits = digits.max(1);
        let n = self.order() as u64;
        let num = self.numerators();
        let den = self.denominator();
        let magnitude: BigInt = num.iter().map(|c| c.abs()).sum::<BigInt>() + BigInt::one();
        let mag_digits = magnitude.to_string().len() as u32;
        let mut guard = 12u32;
        for attempt in 0..6 {
            let w = digits + guard + mag_digits;
            let scale = pow10(w);
            let (pi_s, pi_err) = pi(&scale);
            let mut re = BigInt::zero();
            let mut im = BigInt::zero();
            let mut err_sum = BigInt::zero();
            for (i, c) in num.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (cr, ci, e) = cis(i as u64, n, &scale, &pi_s, pi_err);
                re += c * cr;
                im += c * ci;
                err_sum += c.abs() * BigInt::from(e);
            }
            // divide by the common denominator; truncation adds one ulp.
            let re = re / den;
            let im = im / den;
            let err = err_sum / den + 2;
            let r = certified_round(&re, &err, w, digits);
            let m = certified_round(&im, &err, w, digits);
            match (r, m) {
                (Some(r), Some(m)) => {
                    return ApproxComplex { re: format_fixed(&r, digits), im: format_fixed(&m, digits) }
                }
                _ if attempt == 5 => {
                    let zero = BigInt::zero();
                    let r = certified_round(&re, &zero, w, digits).unwrap();
                    let m = certified_round(&im, &zero, w, digits).unwrap();
                    return ApproxComplex { re: format_fixed(&r, digits), im: format_fixed(&m, digits) };
                }
                _ => guard *= 2,
            }
        }
        unreachable!()
    }

    /// Floating point approximation for display and sanity checks.
    pub fn approx_f64(&self) -> (f64, f64) {
        self.approx_complex(17).to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_values() {
        let one = CyclotomicNumber::one(1).approx_complex(1);
        assert_eq!((one.re.as_str(), one.im.as_str()), ("1.0", "0.0"));
        let i = CyclotomicNumber::root_of_unity(4, 1).approx_complex(1);
        assert_eq!((i.re.as_str(), i.im.as_str()), ("0.0", "1.0"));
        let r2 = CyclotomicNumber::root_of_unity(8, 1) + CyclotomicNumber::root_of_unity(8, -1);
        let a = r2.approx_complex(20);
        assert_eq!(a.re, "1.41421356237309504880");
        assert_eq!(a.im, "0.00000000000000000000");
    }

    #[test]
    fn negative_parts() {
        let z = CyclotomicNumber::root_of_unity(3, 1).approx_complex(6);
        assert_eq!(z.re, "-0.500000");
        assert_eq!(z.im, "0.866025");
    }

    #[test]
    fn matches_float_trig() {
        for n in 1..=30u32 {
            for j in 0..n {
                let (re, im) = CyclotomicNumber::root_of_unity(n, j as i64).approx_f64();
                let t = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                assert!((re - t.cos()).abs() < 1e-12 && (im - t.sin()).abs() < 1e-12, "n={n} j={j}");
            }
        }
    }
}
