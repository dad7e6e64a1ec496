//! Multiplicative genera: the L- and Ahat-sequences, Pontrjagin characters,
//! and their evaluation against characteristic numbers.
//!
//! Characteristic power series live in the even root variable `z = x^2`
//! (see [`crate::series`]):
//!
//! * L-genus:    `Q(x) = x / tanh x`, recorded as `cosh_s * sinh_s^{-1}`
//!   with `cosh_s = sum z^k/(2k)!` and `sinh_s = sum z^k/(2k+1)!`;
//! * Ahat-genus: `Q(x) = (x/2) / sinh(x/2)`, recorded as the inverse of
//!   `sinh_s` with argument rescaled by `1/4`.
//!
//! The weight-`m` polynomials `L_m` and `Ahat_m` come out of
//! [`multiplicative_sequence`]; closed forms for their `p_m`-coefficients
//! (`d_m` and the Ahat top coefficient) are provided separately from
//! Bernoulli numbers, giving two independent routes that the test suite pins
//! against each other.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numbers::{bernoulli, factorial, rational, Rational};
use crate::series::PowerSeries;
use crate::surgery::VirtualManifold;
use crate::symmetric::{multiplicative_sequence, newton_power_sums, GradedPoly, Partition};

/// `cosh(sqrt z) = sum z^k / (2k)!`.
fn cosh_s(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |k| Rational::new(1.into(), factorial(2 * k as u32)))
}

/// `sinh(sqrt z)/sqrt z = sum z^k / (2k+1)!`.
fn sinh_s(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |k| {
        Rational::new(1.into(), factorial(2 * k as u32 + 1))
    })
}

/// Characteristic series of the L-genus, `x/tanh x` in the even variable,
/// truncated at `order`.
pub fn l_series(order: usize) -> PowerSeries {
    let inv = sinh_s(order)
        .inverse()
        .expect("sinh_s has constant term 1");
    cosh_s(order).mul(&inv)
}

/// Characteristic series of the Ahat-genus, `(x/2)/sinh(x/2)` in the even
/// variable, truncated at `order`.
pub fn ahat_series(order: usize) -> PowerSeries {
    sinh_s(order)
        .scale_arg(&rational(1, 4))
        .inverse()
        .expect("scaled sinh_s has constant term 1")
}

/// The Hirzebruch polynomial `L_m(p_1, ..., p_m)`.  Panics if `m = 0`.
pub fn l_poly(m: u32) -> GradedPoly {
    assert!(m >= 1, "L-polynomials start at weight 1");
    multiplicative_sequence(&l_series(m as usize), m)
        .expect("L-series is a valid characteristic series")
}

/// The polynomial `Ahat_m(p_1, ..., p_m)`.  Panics if `m = 0`.
pub fn ahat_poly(m: u32) -> GradedPoly {
    assert!(m >= 1, "Ahat-polynomials start at weight 1");
    multiplicative_sequence(&ahat_series(m as usize), m)
        .expect("Ahat-series is a valid characteristic series")
}

/// Coefficient of `p_m` in `L_m`, in closed form:
///
/// ```text
/// d_m = 2^{2m} (2^{2m-1} - 1) B_m / (2m)! .
/// ```
///
/// Always positive, and bounded by `d_2 = 7/45 < 32/81` for `m >= 2`.
/// Panics if `m = 0`.
pub fn d_coeff(m: u32) -> Rational {
    assert!(m >= 1, "d_m starts at m = 1");
    let b = bernoulli(m).expect("m >= 1");
    let two = BigInt::from(2);
    let factor = two.pow(2 * m) * (BigInt::from(2).pow(2 * m - 1) - 1);
    b * Rational::new(factor, factorial(2 * m))
}

/// Coefficient of `p_m` in `Ahat_m`, in closed form:
///
/// ```text
/// -B_m / (2 (2m)!)
/// ```
///
/// (negative for every `m`).  Panics if `m = 0`.
pub fn ahat_top_coeff(m: u32) -> Rational {
    assert!(m >= 1, "Ahat top coefficient starts at m = 1");
    let b = bernoulli(m).expect("m >= 1");
    -b * Rational::new(1.into(), BigInt::from(2) * factorial(2 * m))
}

/// Pontrjagin numbers of a `dim`-manifold: one integer per partition of
/// `dim/4`, absent entries meaning zero.
///
/// Only defined when `dim` is a positive multiple of 4; manifolds of other
/// dimensions carry no Pontrjagin numbers at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontrjaginNumbers {
    dim: u32,
    values: BTreeMap<Partition, BigInt>,
}

impl PontrjaginNumbers {
    /// An all-zero table for a `dim`-manifold.  Errors unless `dim` is a
    /// positive multiple of 4.
    pub fn new(dim: u32) -> Result<Self> {
        if dim == 0 || !dim.is_multiple_of(4) {
            return Err(Error::domain(format!(
                "Pontrjagin numbers need dim to be a positive multiple of 4, got {dim}"
            )));
        }
        Ok(PontrjaginNumbers {
            dim,
            values: BTreeMap::new(),
        })
    }

    /// Dimension of the underlying manifold.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Common weight of all partitions, `dim/4`.
    pub fn weight(&self) -> u32 {
        self.dim / 4
    }

    /// Sets `p_lambda[M]`.  Errors if the partition weight is not `dim/4`.
    pub fn set(&mut self, lambda: Partition, value: BigInt) -> Result<()> {
        if lambda.weight() != self.weight() {
            return Err(Error::domain(format!(
                "partition {lambda} has weight {}, expected {} for dim {}",
                lambda.weight(),
                self.weight(),
                self.dim
            )));
        }
        if value.is_zero() {
            self.values.remove(&lambda);
        } else {
            self.values.insert(lambda, value);
        }
        Ok(())
    }

    /// The number `p_lambda[M]`, zero if unset.
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.values.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Stored (nonzero) entries in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `self + n * other`, entrywise.  Errors on a dimension mismatch.
    pub fn add_scaled(&self, other: &PontrjaginNumbers, n: &BigInt) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut out = self.clone();
        for (la, v) in &other.values {
            let sum = out.get(la) + v * n;
            out.set(la.clone(), sum)?;
        }
        Ok(out)
    }

    /// Entrywise negation (orientation reversal).
    pub fn negated(&self) -> Self {
        PontrjaginNumbers {
            dim: self.dim,
            values: self.values.iter().map(|(la, v)| (la.clone(), -v)).collect(),
        }
    }
}

/// Pairs a polynomial in the `p_i` against a table of Pontrjagin numbers.
///
/// Terms of weight `dim/4` contribute coefficient times number; terms of
/// strictly smaller weight (including constants) pair to zero against the
/// fundamental class.  A term of *larger* weight is an error — those numbers
/// do not exist on a `dim`-manifold.
pub fn evaluate(poly: &GradedPoly, numbers: &PontrjaginNumbers) -> Result<Rational> {
    let top = numbers.weight();
    let mut acc = Rational::zero();
    for (la, c) in poly.terms() {
        match la.weight().cmp(&top) {
            std::cmp::Ordering::Greater => {
                return Err(Error::WeightMismatch {
                    poly: la.weight(),
                    numbers: top,
                });
            }
            std::cmp::Ordering::Equal => {
                acc += c * Rational::from_integer(numbers.get(la));
            }
            std::cmp::Ordering::Less => {}
        }
    }
    Ok(acc)
}

/// Components `ph_0, ..., ph_maxweight` of the Pontrjagin character of a
/// real bundle of the given rank, as polynomials in its Pontrjagin classes.
///
/// `ph = rank + sum_w s_{2w}(c) / (2w)!` where the Chern classes of the
/// complexification are `c_{2i} = (-1)^i p_i`, odd classes zero, and `s_j`
/// are Newton power sums.  Component `w` sits in cohomological degree `4w`.
pub fn pontrjagin_character(rank: u32, max_weight: u32) -> Vec<GradedPoly> {
    let mut chern: BTreeMap<u32, GradedPoly> = BTreeMap::new();
    for i in 1..=max_weight {
        let sign = if i % 2 == 1 {
            rational(-1, 1)
        } else {
            rational(1, 1)
        };
        chern.insert(2 * i, GradedPoly::monomial(Partition::single(i), sign));
    }
    let s = newton_power_sums(&chern, 2 * max_weight);
    let mut out = Vec::with_capacity(max_weight as usize + 1);
    out.push(GradedPoly::constant(Rational::from_integer(rank.into())));
    for w in 1..=max_weight {
        let inv_fact = Rational::new(1.into(), factorial(2 * w));
        out.push(s[&(2 * w)].scale(&inv_fact));
    }
    out
}

/// The pairing `< ph(TM) . Ahat(M), [M] >` of a closed `4w`-manifold record.
///
/// Assembles the full Pontrjagin character of the tangent bundle (rank =
/// `dim`), multiplies by the total Ahat-polynomial, takes the weight-`w`
/// component and pairs it against the stored Pontrjagin numbers.
///
/// Errors if `dim` is not a positive multiple of 4 or the record carries no
/// Pontrjagin data.
pub fn genus_ph_ahat(m: &VirtualManifold) -> Result<Rational> {
    if m.dim == 0 || !m.dim.is_multiple_of(4) {
        return Err(Error::domain(format!(
            "the ph.Ahat pairing needs dim to be a positive multiple of 4, got {}",
            m.dim
        )));
    }
    let w = m.dim / 4;
    let numbers = m
        .pontrjagin
        .as_ref()
        .ok_or_else(|| Error::missing("manifold record has no Pontrjagin numbers"))?;

    let mut ph = GradedPoly::zero();
    for component in pontrjagin_character(m.dim, w) {
        ph = &ph + &component;
    }
    let mut ahat = GradedPoly::one();
    for v in 1..=w {
        ahat = &ahat + &ahat_poly(v);
    }
    let top = (&ph * &ahat).weight_component(w);
    evaluate(&top, numbers)
}

/// Outcome of the evenness criterion on `< ph . Ahat, [M] >`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityCheck {
    /// The integer value of the pairing.
    pub genus: BigInt,
    /// Whether the pairing is even.
    pub even: bool,
    /// Caller-asserted hypothesis that `Sq^2: H^{4w-2} -> H^{4w}` (mod 2) is
    /// onto; the criterion is only meaningful when this holds.  Recorded,
    /// never inferred.
    pub sq2_hypothesis: bool,
}

/// Evaluates the evenness criterion: the pairing `< ph . Ahat, [M] >` is
/// computed exactly and tested for parity.
///
/// `sq2_hypothesis` is carried through to the result untouched — whether the
/// cohomological hypothesis behind the criterion holds is knowledge about
/// the actual manifold that a record of characteristic numbers cannot
/// certify.
///
/// Errors if the pairing is not an integer (the record is then inconsistent:
/// for genuine closed manifolds this pairing is integral).
pub fn parity_criterion(m: &VirtualManifold, sq2_hypothesis: bool) -> Result<ParityCheck> {
    let value = genus_ph_ahat(m)?;
    if !value.is_integer() {
        return Err(Error::inconsistent(format!(
            "pairing <ph.Ahat,[M]> = {} is not an integer",
            crate::numbers::format_rational(&value)
        )));
    }
    let genus = value.to_integer();
    let even = (&genus % 2u32).is_zero();
    Ok(ParityCheck {
        genus,
        even,
        sq2_hypothesis,
    })
}
