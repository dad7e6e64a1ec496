//! Partitions, graded polynomials in the Pontrjagin classes, and the
//! symmetric-function machinery behind multiplicative sequences.
//!
//! A genus assigns to each weight `m` a polynomial `K_m(p_1, ..., p_m)` in
//! formal classes `p_i` of weight `i`.  [`GradedPoly`] stores such
//! polynomials sparsely, keyed by the [`Partition`] of each monomial
//! (`p_2 p_1^2` is keyed by `[2, 1, 1]`).  [`multiplicative_sequence`]
//! produces `K_m` from a characteristic power series by expanding
//! `prod_i Q(x_i)` over formal root variables and rewriting the degree-`m`
//! symmetric part in elementary symmetric polynomials — the classical
//! Hirzebruch construction, done exactly.
//!
//! The canonical ordering used everywhere (term iteration, display, JSON) is
//! weight first, then reverse-lexicographic within a weight:
//! `[4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::Rational;
use crate::series::PowerSeries;

/// An integer partition with positive parts, stored weakly decreasing.
///
/// The empty partition is allowed and denotes the constant monomial `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, sorting the parts.  Panics on a zero part; use
    /// [`Partition::try_new`] for untrusted input.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Partition::try_new(parts.into()).expect("partition parts must be positive")
    }

    /// Fallible constructor for untrusted input: rejects zero parts.
    pub fn try_new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition (weight 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `[k]`, i.e. the monomial `p_k`.
    pub fn single(k: u32) -> Self {
        Partition::new(vec![k])
    }

    /// Parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiset union with another partition — the monomial product.
    pub fn merged(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Whether `p` occurs among the parts.
    pub fn contains_part(&self, p: u32) -> bool {
        self.parts.contains(&p)
    }
}

impl Ord for Partition {
    /// Weight ascending, then reverse-lexicographic: within a weight the
    /// partition with the larger leading parts comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Renders the monomial, e.g. `p2*p1^2`; the empty partition prints `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if mult == 1 {
                write!(f, "p{p}")?;
            } else {
                write!(f, "p{p}^{mult}")?;
            }
            i += mult;
        }
        Ok(())
    }
}

/// All partitions of `m`, in the canonical reverse-lexicographic order
/// (`[m]` first, `[1, ..., 1]` last).
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn gen(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let mut p = max_part.min(remaining);
        while p >= 1 {
            current.push(p);
            gen(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    gen(m, m, &mut Vec::new(), &mut out);
    out
}

/// A polynomial in formal classes `p_1, p_2, ...` with exact rational
/// coefficients, stored sparsely by monomial partition.
///
/// Zero coefficients are never stored, so equality of values is equality of
/// representations.  Iteration follows the canonical [`Partition`] order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedPoly {
    terms: BTreeMap<Partition, Rational>,
}

impl GradedPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        GradedPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        GradedPoly::constant(Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        GradedPoly::monomial(Partition::empty(), c)
    }

    /// A single term `c * p_lambda`.
    pub fn monomial(lambda: Partition, c: Rational) -> Self {
        let mut p = GradedPoly::zero();
        p.insert_add(lambda, c);
        p
    }

    /// Adds `c` to the coefficient of `p_lambda`, pruning zeros.
    pub fn insert_add(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `p_lambda` (zero if absent).
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return GradedPoly::zero();
        }
        GradedPoly {
            terms: self
                .terms
                .iter()
                .map(|(la, a)| (la.clone(), a * c))
                .collect(),
        }
    }

    /// Largest weight among the terms (`None` for the zero polynomial).
    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// The weight-`w` homogeneous component.
    pub fn weight_component(&self, w: u32) -> GradedPoly {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(la, _)| la.weight() == w)
                .map(|(la, c)| (la.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all terms of weight exceeding `max`.
    pub fn truncate_weight(&self, max: u32) -> GradedPoly {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(la, _)| la.weight() <= max)
                .map(|(la, c)| (la.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether every term has weight exactly `w` (vacuously true for zero).
    pub fn is_homogeneous(&self, w: u32) -> bool {
        self.terms.keys().all(|la| la.weight() == w)
    }

    /// Substitutes `p_i = 0` for every `i` in `killed`.
    pub fn kill_parts(&self, killed: &[u32]) -> GradedPoly {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(la, _)| !killed.iter().any(|&p| la.contains_part(p)))
                .map(|(la, c)| (la.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (la, c) in rhs.terms() {
            out.insert_add(la.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (la, c) in rhs.terms() {
            out.insert_add(la.clone(), -c);
        }
        out
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            terms: self.terms.iter().map(|(la, c)| (la.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (la, a) in self.terms() {
            for (mu, b) in rhs.terms() {
                out.insert_add(la.merged(mu), a * b);
            }
        }
        out
    }
}

impl fmt::Display for GradedPoly {
    /// Canonical-order rendering, e.g. `7/45*p2 - 1/45*p1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (la, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if la.parts().is_empty() {
                write!(f, "{}", crate::numbers::format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{la}")?;
            } else {
                write!(f, "{}*{la}", crate::numbers::format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// Polynomials in the formal root variables `x_1, ..., x_n`, used only
/// while expanding and reducing multiplicative sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RootPoly {
    nvars: usize,
    /// exponent vector (length `nvars`) -> coefficient; zero coeffs pruned.
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl RootPoly {
    fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], Rational::one());
        RootPoly { nvars, terms }
    }

    fn insert_add(&mut self, expo: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `Q(x_var)` as a polynomial in the root variables, truncated at total
    /// degree `maxdeg`.
    fn univariate(nvars: usize, var: usize, q: &PowerSeries, maxdeg: u32) -> Self {
        let mut out = RootPoly {
            nvars,
            terms: BTreeMap::new(),
        };
        for j in 0..=(maxdeg as usize).min(q.order()) {
            let mut expo = vec![0; nvars];
            expo[var] = j as u32;
            out.insert_add(expo, q.coeff(j).clone());
        }
        out
    }

    /// Product truncated at total degree `maxdeg`.
    fn mul(&self, other: &RootPoly, maxdeg: u32) -> RootPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = RootPoly {
            nvars: self.nvars,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da + db > maxdeg {
                    continue;
                }
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_add(expo, ca * cb);
            }
        }
        out
    }

    /// Homogeneous component of total degree `d`.
    fn homogeneous(&self, d: u32) -> RootPoly {
        RootPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lexicographically greatest monomial, if any.  `Vec<u32>` ordering is
    /// lexicographic, so this is the last key of the map.
    fn lex_leading(&self) -> Option<(Vec<u32>, Rational)> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// In-place `self -= c * other`.
    fn sub_scaled(&mut self, other: &RootPoly, c: &Rational) {
        for (e, a) in &other.terms {
            self.insert_add(e.clone(), -(a * c));
        }
    }

    /// The elementary symmetric polynomial `e_k(x_1, ..., x_nvars)`.
    fn elementary(nvars: usize, k: usize) -> RootPoly {
        let mut out = RootPoly {
            nvars,
            terms: BTreeMap::new(),
        };
        if k > nvars {
            return out; // e_k vanishes identically with too few variables
        }
        let mut choice = Vec::with_capacity(k);
        fn gen(
            start: usize,
            left: usize,
            nvars: usize,
            choice: &mut Vec<usize>,
            out: &mut RootPoly,
        ) {
            if left == 0 {
                let mut expo = vec![0; nvars];
                for &i in choice.iter() {
                    expo[i] = 1;
                }
                out.insert_add(expo, Rational::one());
                return;
            }
            for i in start..=(nvars - left) {
                choice.push(i);
                gen(i + 1, left - 1, nvars, choice, out);
                choice.pop();
            }
        }
        gen(0, k, nvars, &mut choice, &mut out);
        out
    }
}

/// Expands the elementary-symmetric monomial `prod_{i in lambda} e_i` in
/// `nvars` root variables.
fn elementary_product(lambda: &Partition, nvars: usize) -> RootPoly {
    let cap = lambda.weight();
    let mut acc = RootPoly::one(nvars);
    for &part in lambda.parts() {
        acc = acc.mul(&RootPoly::elementary(nvars, part as usize), cap);
    }
    acc
}

/// Expands a graded polynomial into root variables under `p_i = e_i` — the
/// inverse direction of the reduction below; used by the round-trip tests.
#[cfg(test)]
fn expand_in_elementary(poly: &GradedPoly, nvars: usize) -> RootPoly {
    let mut acc = RootPoly {
        nvars,
        terms: BTreeMap::new(),
    };
    for (la, c) in poly.terms() {
        for (e, a) in &elementary_product(la, nvars).terms {
            acc.insert_add(e.clone(), a * c);
        }
    }
    acc
}

/// Rewrites a symmetric homogeneous root polynomial of degree `m` as a
/// polynomial in `e_1, ..., e_m`, returned with `e_i` relabelled `p_i`.
///
/// Classical Gauss reduction: repeatedly subtract the elementary monomial
/// matching the lex-leading term.  Errors if the input is not symmetric.
fn symmetric_reduce(mut s: RootPoly, m: u32) -> Result<GradedPoly> {
    let mut out = GradedPoly::zero();
    while let Some((mono, c)) = s.lex_leading() {
        if mono.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(
                "root polynomial is not symmetric: leading exponents not weakly decreasing",
            ));
        }
        // leading monomial x^a with a weakly decreasing corresponds to
        // prod e_i^{a_i - a_{i+1}}, i.e. the partition with part i repeated
        // (a_i - a_{i+1}) times
        let mut parts = Vec::new();
        for (i, &a) in mono.iter().enumerate() {
            let next = mono.get(i + 1).copied().unwrap_or(0);
            for _ in 0..(a - next) {
                parts.push(i as u32 + 1);
            }
        }
        let lambda = Partition::new(parts);
        debug_assert_eq!(lambda.weight(), m);
        s.sub_scaled(&elementary_product(&lambda, s.nvars), &c);
        out.insert_add(lambda, c);
    }
    Ok(out)
}

/// The weight-`m` polynomial `K_m(p_1, ..., p_m)` of the multiplicative
/// sequence with characteristic series `q`.
///
/// `q` is a series in the even root variable (see [`crate::series`]) with
/// constant term 1, truncated at order at least `m`.  The result is
/// homogeneous of weight `m`; the basic sanity law is that `q = 1 + z`
/// yields exactly `K_m = p_m`.
///
/// Errors: `m = 0`, constant term of `q` not 1, or `q` truncated below `m`.
pub fn multiplicative_sequence(q: &PowerSeries, m: u32) -> Result<GradedPoly> {
    if m == 0 {
        return Err(Error::domain(
            "multiplicative sequence polynomials start at weight m = 1",
        ));
    }
    if !q.coeff(0).is_one() {
        return Err(Error::CharacteristicSeries);
    }
    if (q.order() as u32) < m {
        return Err(Error::domain(format!(
            "characteristic series truncated at order {} < weight {m}",
            q.order()
        )));
    }
    let nvars = m as usize;
    let mut prod = RootPoly::one(nvars);
    for var in 0..nvars {
        prod = prod.mul(&RootPoly::univariate(nvars, var, q, m), m);
    }
    symmetric_reduce(prod.homogeneous(m), m)
}

/// Power sums `s_1, ..., s_jmax` of formal Chern roots, from Chern classes
/// `c_i` given as graded polynomials, via the Newton identities
///
/// ```text
/// s_j = c_1 s_{j-1} - c_2 s_{j-2} + ... + (-1)^j c_{j-1} s_1 + (-1)^{j+1} j c_j .
/// ```
///
/// Classes absent from `c` are treated as zero.  Each `s_j` is returned under
/// its index `j`.
pub fn newton_power_sums(
    c: &BTreeMap<u32, GradedPoly>,
    j_max: u32,
) -> BTreeMap<u32, GradedPoly> {
    let class = |i: u32| c.get(&i).cloned().unwrap_or_else(GradedPoly::zero);
    let mut s: BTreeMap<u32, GradedPoly> = BTreeMap::new();
    for j in 1..=j_max {
        let mut acc = GradedPoly::zero();
        for i in 1..j {
            let term = &class(i) * &s[&(j - i)];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        let j_cj = class(j).scale(&Rational::from_integer(j.into()));
        acc = if j % 2 == 1 { &acc + &j_cj } else { &acc - &j_cj };
        s.insert(j, acc);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{factorial, rational};
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partition_order_is_weight_then_reverse_lex() {
        let sorted = vec![
            Partition::empty(),
            p(&[1]),
            p(&[2]),
            p(&[1, 1]),
            p(&[3]),
            p(&[2, 1]),
            p(&[1, 1, 1]),
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        for w in sorted.windows(2) {
            assert!(w[0] < w[1], "{} should precede {}", w[0], w[1]);
        }
    }

    #[test]
    fn partitions_of_four_in_canonical_order() {
        let all = partitions_of(4);
        assert_eq!(all.len(), 5);
        let expect = [
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(all, expect);
    }

    #[test]
    fn partition_counts_match_the_classical_sequence() {
        // p(1), ..., p(10)
        let counts: Vec<usize> = (1..=10).map(|m| partitions_of(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn partition_rejects_zero_parts() {
        assert!(Partition::try_new(vec![2, 0]).is_err());
    }

    #[test]
    fn graded_poly_product_merges_partitions() {
        // (p1 + p2) * (p1 - p2) = p1^2 - p2^2
        let a = &GradedPoly::monomial(p(&[1]), rational(1, 1))
            + &GradedPoly::monomial(p(&[2]), rational(1, 1));
        let b = &GradedPoly::monomial(p(&[1]), rational(1, 1))
            + &GradedPoly::monomial(p(&[2]), rational(-1, 1));
        let prod = &a * &b;
        assert_eq!(prod.coeff(&p(&[1, 1])), rational(1, 1));
        assert_eq!(prod.coeff(&p(&[2, 2])), rational(-1, 1));
        assert_eq!(prod.coeff(&p(&[2, 1])), rational(0, 1));
    }

    #[test]
    fn cancellation_prunes_storage() {
        let a = GradedPoly::monomial(p(&[3]), rational(5, 7));
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff, GradedPoly::zero());
    }

    #[test]
    fn kill_parts_drops_monomials_containing_them() {
        let mut g = GradedPoly::zero();
        g.insert_add(p(&[2]), rational(3, 1));
        g.insert_add(p(&[1, 1]), rational(5, 1));
        let killed = g.kill_parts(&[1]);
        assert_eq!(killed.coeff(&p(&[2])), rational(3, 1));
        assert!(killed.coeff(&p(&[1, 1])).is_zero());
    }

    #[test]
    fn one_plus_z_reproduces_the_top_class() {
        // Q = 1 + z  =>  prod (1 + x_i) has degree-m part e_m = p_m
        for m in 1..=5u32 {
            let q = PowerSeries::from_fn(m as usize, |k| {
                if k <= 1 {
                    rational(1, 1)
                } else {
                    rational(0, 1)
                }
            });
            let km = multiplicative_sequence(&q, m).unwrap();
            assert_eq!(km, GradedPoly::monomial(p(&[m]), rational(1, 1)), "m = {m}");
        }
    }

    #[test]
    fn constant_series_gives_zero_beyond_weight_zero() {
        for m in 1..=4u32 {
            let q = PowerSeries::one(m as usize);
            assert!(multiplicative_sequence(&q, m).unwrap().is_zero());
        }
    }

    #[test]
    fn multiplicative_sequence_rejects_bad_input() {
        let q = PowerSeries::one(4);
        assert!(matches!(
            multiplicative_sequence(&q, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            multiplicative_sequence(&q, 5),
            Err(Error::Domain(_))
        ));
        let bad = PowerSeries::from_fn(3, |_| rational(2, 1));
        assert!(matches!(
            multiplicative_sequence(&bad, 2),
            Err(Error::CharacteristicSeries)
        ));
    }

    /// The L-sequence through weight 2, from its hyperbolic characteristic
    /// series — the classical `L_1 = p_1/3`, `L_2 = (7 p_2 - p_1^2)/45`.
    #[test]
    fn l_polynomials_through_weight_two() {
        let order = 3usize;
        let cosh = PowerSeries::from_fn(order, |k| {
            Rational::new(1.into(), factorial(2 * k as u32))
        });
        let sinh = PowerSeries::from_fn(order, |k| {
            Rational::new(1.into(), factorial(2 * k as u32 + 1))
        });
        let q = cosh.mul(&sinh.inverse().unwrap());

        let l1 = multiplicative_sequence(&q, 1).unwrap();
        assert_eq!(l1, GradedPoly::monomial(p(&[1]), rational(1, 3)));

        let l2 = multiplicative_sequence(&q, 2).unwrap();
        let mut want = GradedPoly::zero();
        want.insert_add(p(&[2]), rational(7, 45));
        want.insert_add(p(&[1, 1]), rational(-1, 45));
        assert_eq!(l2, want);
    }

    #[test]
    fn newton_identities_on_two_formal_roots() {
        // With c_1 = p_1, c_2 = p_2 treated as independent classes:
        // s_1 = c_1, s_2 = c_1^2 - 2 c_2, s_3 = c_1^3 - 3 c_1 c_2.
        let mut c = BTreeMap::new();
        c.insert(1, GradedPoly::monomial(p(&[1]), rational(1, 1)));
        c.insert(2, GradedPoly::monomial(p(&[2]), rational(1, 1)));
        let s = newton_power_sums(&c, 3);

        assert_eq!(s[&1], GradedPoly::monomial(p(&[1]), rational(1, 1)));

        let mut s2 = GradedPoly::zero();
        s2.insert_add(p(&[1, 1]), rational(1, 1));
        s2.insert_add(p(&[2]), rational(-2, 1));
        assert_eq!(s[&2], s2);

        let mut s3 = GradedPoly::zero();
        s3.insert_add(p(&[1, 1, 1]), rational(1, 1));
        s3.insert_add(p(&[2, 1]), rational(-3, 1));
        assert_eq!(s[&3], s3);
    }

    #[test]
    fn display_uses_canonical_order_and_signs() {
        let mut g = GradedPoly::zero();
        g.insert_add(p(&[2]), rational(7, 45));
        g.insert_add(p(&[1, 1]), rational(-1, 45));
        assert_eq!(g.to_string(), "7/45*p2 - 1/45*p1^2");
        assert_eq!(GradedPoly::zero().to_string(), "0");
        assert_eq!(GradedPoly::constant(rational(-3, 1)).to_string(), "-3");
    }

    /// Strategy: a random homogeneous symmetric polynomial of weight `m`,
    /// built as a rational combination of elementary monomials.
    fn symmetric_input(m: u32) -> impl Strategy<Value = GradedPoly> {
        let partitions = partitions_of(m);
        let n = partitions.len();
        proptest::collection::vec((-20i64..=20, 1i64..=6), n).prop_map(move |coeffs| {
            let mut g = GradedPoly::zero();
            for (la, (num, den)) in partitions.iter().zip(coeffs) {
                g.insert_add(la.clone(), rational(num, den));
            }
            g
        })
    }

    proptest! {
        /// Reduction is a two-sided inverse of expansion: substituting
        /// `p_i = e_i(x)` and reducing back recovers the same coefficients.
        #[test]
        fn reduction_round_trips_through_root_variables(
            (m, g) in (1u32..=5).prop_flat_map(|m| {
                symmetric_input(m).prop_map(move |g| (m, g))
            })
        ) {
            let expanded = expand_in_elementary(&g, m as usize);
            let reduced = symmetric_reduce(expanded, m).unwrap();
            prop_assert_eq!(reduced, g);
        }
    }

    #[test]
    fn reduction_rejects_nonsymmetric_input() {
        // x_1 alone is not symmetric in two variables
        let mut s = RootPoly {
            nvars: 2,
            terms: BTreeMap::new(),
        };
        s.insert_add(vec![0, 1], rational(1, 1));
        assert!(symmetric_reduce(s, 1).is_err());
    }
}
