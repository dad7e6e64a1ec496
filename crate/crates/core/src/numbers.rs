//! Exact integer and rational arithmetic, Bernoulli numbers, and small
//! number-theoretic helpers.
//!
//! # Bernoulli convention
//!
//! This crate indexes Bernoulli numbers the classical way used in the genus
//! literature: `B_m` here denotes the *unsigned* number `|B_{2m}|` of the
//! modern zero-based convention, so
//!
//! ```text
//! B_1 = 1/6,  B_2 = 1/30,  B_3 = 1/42,  B_4 = 1/30,  B_5 = 5/66,
//! B_6 = 691/2730,  B_7 = 7/6,  B_8 = 3617/510, ...
//! ```
//!
//! Equivalently, `B_m` is fixed by Euler's formula
//! `zeta(2m) = B_m (2 pi)^{2m} / (2 (2m)!)`; in particular every `B_m` is
//! positive.  All formulas in [`crate::genera`] and [`crate::surgery`]
//! (`d_m`, `|bP_{4m}|`, minimal Euler characteristics, ...) expect this
//! convention.  Use [`bernoulli_modern`] if you need the signed zero-based
//! sequence.
//!
//! Everything here is exact: integers are [`BigInt`], fractions are
//! [`Rational`] (always in lowest terms with positive denominator).  No
//! floating point appears anywhere in the crate's math path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator by construction.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a numerator/denominator pair.
///
/// Panics if `denom` is zero; intended for literals and internal formulas.
pub fn rational(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Builds a rational from an integer.
pub fn integer(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Numerator of `r` in lowest terms (sign carried by the numerator).
pub fn numerator_of(r: &Rational) -> BigInt {
    r.numer().clone()
}

/// Denominator of `r` in lowest terms; always positive.
pub fn denominator_of(r: &Rational) -> BigInt {
    r.denom().clone()
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n.max(1) {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// The coefficient `a_m`: 2 for odd `m`, 1 for even `m`.
///
/// This is the classical divisibility constant appearing in the image of the
/// stable `J`-homomorphism; the Ahat-genus of a closed spin manifold of
/// dimension `4m` lies in `a_m * Z`, and `a_m` enters the order of `bP_{4m}`
/// and the minimal Euler characteristic formulas in [`crate::surgery`].
pub fn a_m(m: u32) -> u32 {
    if m % 2 == 1 {
        2
    } else {
        1
    }
}

/// Signed Bernoulli numbers `B_0, B_1, ..., B_n` in the modern zero-based
/// convention (`B_1 = -1/2`, odd indices > 1 vanish), computed by the defining
/// recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
pub fn bernoulli_modern(n: u32) -> Vec<Rational> {
    let mut row: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    row.push(Rational::one());
    for j in 1..=n {
        let mut acc = Rational::zero();
        for (k, b) in row.iter().enumerate() {
            acc += b * Rational::from_integer(binomial(j + 1, k as u32));
        }
        row.push(-acc / Rational::from_integer(BigInt::from(j + 1)));
    }
    row
}

/// The `m`-th Bernoulli number in the crate's unsigned convention,
/// `B_m = |B_{2m}^{modern}|`.  See the module docs for the exact indexing.
///
/// Errors for `m = 0`: the classical sequence starts at `B_1 = 1/6`.
pub fn bernoulli(m: u32) -> Result<Rational> {
    if m == 0 {
        return Err(Error::domain(
            "Bernoulli convention used here starts at m = 1 (B_1 = 1/6)",
        ));
    }
    let row = bernoulli_modern(2 * m);
    Ok(row[2 * m as usize].abs())
}

/// Denominator of `B_m` predicted by the von Staudt–Clausen theorem: the
/// product of all primes `p` with `(p - 1) | 2m`.
///
/// This is an independent route to the denominator — it never touches the
/// Bernoulli recurrence — and doubles as a checked oracle for it.  The
/// theorem also shows every such denominator is squarefree and divisible by
/// 2 and 3.
pub fn vsc_denominator(m: u32) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::domain(
            "von Staudt–Clausen denominator defined for m >= 1",
        ));
    }
    let mut prod = BigInt::one();
    for p in primes_up_to(2 * m + 1) {
        if (2 * m).is_multiple_of(p - 1) {
            prod *= p;
        }
    }
    Ok(prod)
}

/// All primes `<= limit`, by sieve.
fn primes_up_to(limit: u32) -> Vec<u32> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &is_p)| if is_p { Some(i as u32) } else { None })
        .collect()
}

/// Whether `n` is squarefree (no prime divides it twice).  `0` is not
/// squarefree; signs are ignored.
pub fn is_squarefree(n: &BigInt) -> bool {
    let mut n = n.abs();
    if n.is_zero() {
        return false;
    }
    let mut f = BigInt::from(2);
    while (&f * &f) <= n {
        if n.is_multiple_of(&f) {
            n /= &f;
            if n.is_multiple_of(&f) {
                return false;
            }
        }
        f += if f == BigInt::from(2) { 1 } else { 2 };
    }
    true
}

/// Renders `r` as `"p/q"` in lowest terms, or just `"p"` when `r` is an
/// integer.  This is the canonical textual form used across the JSON
/// interfaces.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the textual form produced by [`format_rational`] (an optional sign,
/// digits, and an optional `/denominator`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::parse(format!("invalid integer `{t}` in rational `{s}`")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(Error::parse(format!("zero denominator in rational `{s}`")));
            }
            Ok(Rational::new(parse_int(num)?, d))
        }
    }
}

/// Decimal rendering of `r` with up to `max_frac_digits` fractional digits,
/// computed by exact long division (no floating point).  Display-only; the
/// result truncates, it does not round.
pub fn decimal_approx(r: &Rational, max_frac_digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().abs();
    let den = r.denom().clone();
    let (int_part, rem) = num.div_rem(&den);
    if rem.is_zero() {
        return format!("{sign}{int_part}");
    }
    let scale = BigInt::from(10).pow(max_frac_digits as u32);
    let (frac, tail) = (rem * &scale).div_rem(&den);
    let mut digits = format!("{:0width$}", frac, width = max_frac_digits);
    if tail.is_zero() {
        while digits.ends_with('0') {
            digits.pop();
        }
        format!("{sign}{int_part}.{digits}")
    } else {
        format!("{sign}{int_part}.{digits}...")
    }
}
