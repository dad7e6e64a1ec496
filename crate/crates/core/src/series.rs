//! Truncated formal power series over the rationals.
//!
//! A [`PowerSeries`] stores exact coefficients `c_0, ..., c_N` of a series in
//! one variable `z` truncated at order `N`.  Throughout the crate `z` plays
//! the role of an *even root variable*: a characteristic power series
//! `Q(z) = Q(x^2)` is recorded in `z = x^2`, so the coefficient of `z^k` is
//! the degree-`2k` part of the classical series.  This keeps every genus
//! computation inside the rationals (no square roots appear).
//!
//! Operations never fabricate coefficients beyond the truncation order:
//! combining series of different orders truncates to the smaller one, and
//! reading past the order is a programming error (panic), not a silent zero.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::Rational;

/// A formal power series `c_0 + c_1 z + ... + c_N z^N`, exact and truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Wraps an explicit coefficient list `c_0, ..., c_N`.
    ///
    /// Panics if the list is empty: a series always carries at least its
    /// constant term.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs a constant term");
        PowerSeries { coeffs }
    }

    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Builds a series from a coefficient rule `k -> c_k`.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Truncation order `N`; coefficients `0..=N` are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^k`.  Panics if `k` exceeds the truncation order:
    /// that coefficient was never computed and is not zero by fiat.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(
            k <= self.order(),
            "coefficient {k} requested beyond truncation order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    /// All stored coefficients, constant term first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Sum, truncated to the smaller order of the two operands.
    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        PowerSeries::from_fn(n, |k| self.coeffs[k].clone() + &other.coeffs[k])
    }

    /// Cauchy product, truncated to the smaller order of the two operands.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Multiplicative inverse to the same truncation order.
    ///
    /// Errors if the constant term vanishes; otherwise the result `b`
    /// satisfies `self * b = 1` exactly through order `N`.
    pub fn inverse(&self) -> Result<PowerSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let n = self.order();
        let c0_inv = self.coeffs[0].recip();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out[k] = -acc * &c0_inv;
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Argument rescaling `f(z) -> f(c z)`: coefficient `c_k` becomes
    /// `c^k c_k`.
    pub fn scale_arg(&self, c: &Rational) -> PowerSeries {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let scaled = a * &pow;
                pow *= c;
                scaled
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Negation, same order.
    pub fn neg(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{factorial, rational, Rational};

    /// `cosh(sqrt z) = sum z^k / (2k)!` — the even root-variable form.
    fn cosh_s(order: usize) -> PowerSeries {
        PowerSeries::from_fn(order, |k| {
            Rational::new(1.into(), factorial(2 * k as u32))
        })
    }

    /// `sinh(sqrt z)/sqrt z = sum z^k / (2k+1)!`.
    fn sinh_s(order: usize) -> PowerSeries {
        PowerSeries::from_fn(order, |k| {
            Rational::new(1.into(), factorial(2 * k as u32 + 1))
        })
    }

    #[test]
    fn product_of_the_hyperbolic_base_series() {
        // cosh_s * sinh_s = 1 + (1/6 + 1/2) z + ... = 1 + 2/3 z + ...
        let p = cosh_s(4).mul(&sinh_s(4));
        assert_eq!(*p.coeff(0), rational(1, 1));
        assert_eq!(*p.coeff(1), rational(2, 3));
        // closed form: coefficient of z^k is 2^{2k} / (2k+1)!  (from
        // cosh x sinh x = sinh(2x) / 2)
        assert_eq!(*p.coeff(2), rational(16, 120));
        assert_eq!(*p.coeff(3), rational(64, 5040));
    }

    #[test]
    fn inverse_of_sinh_s_starts_with_minus_one_sixth() {
        let inv = sinh_s(5).inverse().unwrap();
        assert_eq!(*inv.coeff(0), rational(1, 1));
        assert_eq!(*inv.coeff(1), rational(-1, 6));
        // verify the defining property exactly through the truncation order
        let check = sinh_s(5).mul(&inv);
        assert_eq!(check, PowerSeries::one(5));
    }

    #[test]
    fn inverse_requires_nonzero_constant_term() {
        let s = PowerSeries::from_coeffs(vec![rational(0, 1), rational(1, 1)]);
        assert!(matches!(s.inverse(), Err(Error::NonInvertibleSeries)));
    }

    #[test]
    fn scale_arg_multiplies_kth_coefficient_by_ck() {
        let s = sinh_s(3).scale_arg(&rational(1, 4));
        assert_eq!(*s.coeff(0), rational(1, 1));
        assert_eq!(*s.coeff(1), rational(1, 24)); // (1/6) * (1/4)
        assert_eq!(*s.coeff(2), rational(1, 1920)); // (1/120) * (1/16)
    }

    #[test]
    fn mixed_orders_truncate_to_the_smaller_operand() {
        let a = cosh_s(6);
        let b = sinh_s(2);
        assert_eq!(a.add(&b).order(), 2);
        assert_eq!(a.mul(&b).order(), 2);
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn reading_past_the_order_panics() {
        let s = cosh_s(2);
        let _ = s.coeff(3);
    }

    #[test]
    fn inverse_round_trips_on_a_generic_series() {
        let s = PowerSeries::from_coeffs(vec![
            rational(3, 2),
            rational(-1, 7),
            rational(0, 1),
            rational(5, 3),
            rational(2, 11),
        ]);
        let inv = s.inverse().unwrap();
        assert_eq!(s.mul(&inv), PowerSeries::one(4));
        assert_eq!(inv.inverse().unwrap(), s);
    }

    #[test]
    fn scale_arg_is_multiplicative_in_the_scalar() {
        let s = cosh_s(5);
        let a = rational(2, 3);
        let b = rational(-7, 5);
        let ab = &a * &b;
        assert_eq!(s.scale_arg(&a).scale_arg(&b), s.scale_arg(&ab));
    }
}
