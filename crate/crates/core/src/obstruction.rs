//! The top obstruction to extending an almost complex structure from the
//! punctured manifold over the last point, for closed `4m`-manifolds.
//!
//! The obstruction lives in `pi_{4m-1}(SO(4m)/U(2m))`, which is `Z` for odd
//! `m` and `Z + Z/2` for even `m`; an [`ObstructionClass`] accordingly
//! carries an integer part `o0` and, for even `m` only, a mod-2 part `o2`.
//!
//! The integer part is computable from characteristic numbers alone:
//!
//! ```text
//! o0 = chi/2 + (1/4) < (-1)^{m+1} p_m + sum_{i+j=2m, i,j>=1} (-1)^i c_i c_j , [M] >
//! ```
//!
//! where the `c_i` are the Chern classes of the structure on the punctured
//! manifold (they extend uniquely below the top degree).  When a *stable*
//! extension of the top Chern class has been chosen the same number is
//! simply `o0 = (chi - c_{2m})/2`; the two routes are linked by the
//! complexification identity `sum_{i=0}^{2m} (-1)^i c_i c_{2m-i} =
//! (-1)^m p_m` and the test suite pins their agreement.
//!
//! The calculus: `o0(S^{4m}) = 1` and the sphere is the neutral element for
//! connected sums (`o0(A # B) = o0(A) + o0(B) - 1`, mod-2 parts add);
//! orientation reversal sends `o` to `-o + chi * o(S^{4m})`.  The mod-2
//! part is not determined by characteristic numbers; for manifolds whose
//! `Sq^2` hypothesis holds it vanishes iff the pairing `<ph . Ahat, [M]>`
//! is even ([`o2_vanishes`]).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::genera::ParityCheck;
use crate::numbers::Rational;
use crate::surgery::VirtualManifold;
use crate::symmetric::Partition;

/// The obstruction class of a `4m`-manifold with a structure on its
/// punctured part: integer part `o0`, and mod-2 part `o2` exactly when `m`
/// is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionClass {
    m: u32,
    o0: BigInt,
    o2: Option<u8>,
}

impl ObstructionClass {
    /// Assembles a class, validating that the mod-2 part is present exactly
    /// for even `m` and is 0 or 1.
    pub fn from_parts(m: u32, o0: BigInt, o2: Option<u8>) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("obstruction classes live in dimension 4m, m >= 1"));
        }
        match (m.is_multiple_of(2), o2) {
            (true, Some(v)) if v <= 1 => {}
            (true, Some(_)) => {
                return Err(Error::domain("mod-2 obstruction part must be 0 or 1"))
            }
            (true, None) => {
                return Err(Error::domain(
                    "even m has obstruction group Z + Z/2; the mod-2 part is required",
                ))
            }
            (false, Some(_)) => {
                return Err(Error::domain(
                    "odd m has obstruction group Z; there is no mod-2 part",
                ))
            }
            (false, None) => {}
        }
        Ok(ObstructionClass { m, o0, o2 })
    }

    /// Half the half-dimension: the class belongs to a `4m`-manifold.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Integer part.
    pub fn o0(&self) -> &BigInt {
        &self.o0
    }

    /// Mod-2 part; `Some` exactly when `m` is even.
    pub fn o2(&self) -> Option<u8> {
        self.o2
    }
}

/// The obstruction class of the standard sphere `S^{4m}`: integer part 1,
/// mod-2 part 0 where it exists.  Neutral element of [`o_connected_sum`].
pub fn o_sphere(m: u32) -> Result<ObstructionClass> {
    let o2 = if m.is_multiple_of(2) { Some(0) } else { None };
    ObstructionClass::from_parts(m, BigInt::one(), o2)
}

/// Obstruction class of a connected sum: integer parts add and drop 1,
/// mod-2 parts add.
pub fn o_connected_sum(a: &ObstructionClass, b: &ObstructionClass) -> Result<ObstructionClass> {
    if a.m != b.m {
        return Err(Error::DimensionMismatch {
            left: 4 * a.m,
            right: 4 * b.m,
        });
    }
    let o0 = &a.o0 + &b.o0 - 1;
    let o2 = match (a.o2, b.o2) {
        (Some(x), Some(y)) => Some(x ^ y),
        _ => None,
    };
    ObstructionClass::from_parts(a.m, o0, o2)
}

/// Obstruction class after orientation reversal (with the conjugate
/// structure): `-o + chi(M) * o(S^{4m})`, which is `(-o0 + chi, o2)`.
///
/// `manifold` supplies `chi` and must have dimension `4m` matching `o`.
pub fn o_reverse(manifold: &VirtualManifold, o: &ObstructionClass) -> Result<ObstructionClass> {
    if manifold.dim != 4 * o.m {
        return Err(Error::DimensionMismatch {
            left: manifold.dim,
            right: 4 * o.m,
        });
    }
    ObstructionClass::from_parts(o.m, -&o.o0 + &manifold.chi, o.o2)
}

/// Integer part of the obstruction from the decomposable formula:
///
/// ```text
/// o0 = chi/2 + (1/4)((-1)^{m+1} p_m[M] + sum_{i+j=2m} (-1)^i <c_i c_j>)
/// ```
///
/// with the sum over ordered pairs `i, j >= 1` (each unordered pair `i < j`
/// contributes twice; the indices have equal parity since `i + j` is even).
///
/// Errors: dimension not a positive multiple of 4, missing Chern data, or a
/// non-integral total — the latter means the record's invariants are
/// inconsistent with carrying such a structure.
pub fn o0_formula(manifold: &VirtualManifold) -> Result<BigInt> {
    let m = obstruction_weight(manifold)?;
    let chern = manifold
        .chern
        .as_ref()
        .ok_or_else(|| Error::missing("no Chern data recorded for the obstruction formula"))?;
    let p_m = manifold.pontrjagin_number(&Partition::single(m));
    let signed_pm = if m % 2 == 0 { -p_m } else { p_m };

    let mut chern_sum = BigInt::zero();
    for (&(i, j), v) in chern.iter_decomposable() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let weight = if i == j { 1 } else { 2 };
        chern_sum += BigInt::from(sign * weight) * v;
    }

    let total = Rational::new(manifold.chi.clone(), 2.into())
        + Rational::new(signed_pm + chern_sum, 4.into());
    if !total.is_integer() {
        return Err(Error::inconsistent(format!(
            "obstruction formula gives the non-integer {} on `{}`",
            crate::numbers::format_rational(&total),
            manifold.name
        )));
    }
    Ok(total.to_integer())
}

/// Integer part of the obstruction from a stable extension of the top
/// Chern class: `o0 = (chi - <c_{2m}, [M]>)/2`.
///
/// Errors: dimension not a positive multiple of 4, no stable top class
/// recorded, or `chi - c_{2m}` odd (inconsistent record).
pub fn o0_stable_formula(manifold: &VirtualManifold) -> Result<BigInt> {
    obstruction_weight(manifold)?;
    let chern = manifold
        .chern
        .as_ref()
        .ok_or_else(|| Error::missing("no Chern data recorded for the obstruction formula"))?;
    let c_top = chern.top_stable().ok_or_else(|| {
        Error::missing("no stable extension of the top Chern class is recorded")
    })?;
    let diff = &manifold.chi - c_top;
    if !(&diff % 2u32).is_zero() {
        return Err(Error::inconsistent(format!(
            "chi - c_top = {diff} is odd on `{}`",
            manifold.name
        )));
    }
    Ok(diff / 2)
}

fn obstruction_weight(manifold: &VirtualManifold) -> Result<u32> {
    if manifold.dim == 0 || !manifold.dim.is_multiple_of(4) {
        return Err(Error::domain(format!(
            "the obstruction calculus needs dim to be a positive multiple of 4, got {}",
            manifold.dim
        )));
    }
    Ok(manifold.dim / 4)
}

/// Smallest-correction realization of a prescribed integer part `t`: copies
/// `(a, b)` of a reference manifold `M` (with `o0(M) = 0` and Euler
/// characteristic `chi`) and of its reversal `-M` such that
///
/// ```text
/// o0(a M # b (-M)) = b (chi - 1) - (a - 1) = t ,
/// ```
///
/// with `b` minimal and then `a` minimal:
/// `b = max(0, ceil((t-1)/(chi-1)))`, `a = 1 + b (chi - 1) - t`.
/// `(a, b) = (0, 0)` stands for the bare sphere and realizes `t = 1`.
///
/// Errors if `chi <= 1`.
pub fn realize_o0(chi: &BigInt, t: &BigInt) -> Result<(BigInt, BigInt)> {
    if chi <= &BigInt::one() {
        return Err(Error::domain(
            "realization needs a reference manifold with chi >= 2",
        ));
    }
    let step = chi - 1;
    let b = (t - 1u32).div_ceil(&step).max(BigInt::zero());
    let a = BigInt::one() + &b * &step - t;
    Ok((a, b))
}

/// The evenness criterion for the mod-2 part: for a `4m`-manifold (`m`
/// even) satisfying the `Sq^2` surjectivity hypothesis, `o2 = 0` iff
/// `<ph . Ahat, [M]>` is even.
///
/// This computes the pairing exactly and reports its parity together with
/// the caller-asserted hypothesis flag; see
/// [`crate::genera::parity_criterion`].
pub fn o2_vanishes(manifold: &VirtualManifold, sq2_hypothesis: bool) -> Result<ParityCheck> {
    crate::genera::parity_criterion(manifold, sq2_hypothesis)
}
