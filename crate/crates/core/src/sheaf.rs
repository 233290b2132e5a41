//! Chern characters of the sheaves in the construction, and cohomology
//! bounds for ideal sheaves of complete-intersection point schemes.
//!
//! The sheaves are `O_X`, line bundles `O(D)`, twisted ideal sheaves
//! `I_Z(D)` of `Z = C1 ∩ C2`, and extensions. Cohomology of `I_Z(B)` is
//! bounded from the twisted Koszul resolution
//!
//! ```text
//! 0 -> O(B - C1 - C2) -> O(B - C1) ⊕ O(B - C2) -> I_Z(B) -> 0
//! ```
//!
//! and the restriction sequence `0 -> I_Z(B) -> O(B) -> O_Z -> 0`, after
//! removing fixed components of `|B|` that a generic `Z` avoids.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{parse_rational, ratio, rational, rational_string, DivisorClass, Rational};
use crate::surface::Surface;

/// `(rank, c1, ch2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernCharacter {
    pub rank: u32,
    pub c1: DivisorClass,
    #[serde(with = "rational_string")]
    pub ch2: Rational,
}

impl ChernCharacter {
    pub fn new(rank: u32, c1: DivisorClass, ch2: Rational) -> Self {
        ChernCharacter { rank, c1, ch2 }
    }

    pub fn structure_sheaf(picard_rank: usize) -> Self {
        ChernCharacter::new(1, DivisorClass::zero(picard_rank), Rational::zero())
    }

    /// `c2 = c1^2/2 - ch2`.
    pub fn c2(&self, s: &Surface) -> Result<Rational> {
        Ok(ratio(s.intersect(&self.c1, &self.c1)?, 2) - &self.ch2)
    }

    /// Chern character of the dual, `(r, -c1, ch2)`.
    pub fn dual(&self) -> Self {
        ChernCharacter::new(self.rank, -&self.c1, self.ch2.clone())
    }

    /// Parses `rank,c1_1,...,c1_r,ch2`, where `ch2` may be written `p/q`.
    pub fn parse(s: &str, picard_rank: usize) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != picard_rank + 2 {
            return Err(Error::Parse(format!(
                "`{s}`: expected rank, {picard_rank} c1 coefficient(s) and ch2"
            )));
        }
        let rank = parts[0]
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad rank `{}`", parts[0])))?;
        let c1 = parts[1..=picard_rank]
            .iter()
            .map(|p| {
                p.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let ch2 = parse_rational(parts[picard_rank + 1])?;
        Ok(ChernCharacter::new(rank, c1.into(), ch2))
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.rank, self.c1, self.ch2)
    }
}

/// Zero-dimensional complete intersection `Z = C1 ∩ C2` of two curves, given
/// by their classes. `generic` declares that the curves are general in
/// their linear systems, which the Koszul bounds rely on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointScheme {
    pub c1_first: DivisorClass,
    pub c1_second: DivisorClass,
    pub generic: bool,
}

impl PointScheme {
    pub fn new(first: DivisorClass, second: DivisorClass, generic: bool) -> Self {
        PointScheme {
            c1_first: first,
            c1_second: second,
            generic,
        }
    }

    pub fn generic(first: DivisorClass, second: DivisorClass) -> Self {
        PointScheme::new(first, second, true)
    }
}

pub fn ch_line_bundle(s: &Surface, d: &DivisorClass) -> Result<ChernCharacter> {
    let d2 = s.intersect(d, d)?;
    Ok(ChernCharacter::new(1, d.clone(), ratio(d2, 2)))
}

/// Length `l(Z) = C1.C2` of the complete intersection. Both curve classes
/// must be effective and nef (non-negative on every generator of `R0`), and
/// must meet positively.
pub fn ci_length(s: &Surface, z: &PointScheme) -> Result<i64> {
    for c in [&z.c1_first, &z.c1_second] {
        if !s.in_r0(c)? {
            return Err(Error::NotEffective(s.format_class(c)));
        }
        for g in s.r0_generators() {
            if s.intersect(c, g)? < 0 {
                return Err(Error::NotNef(s.format_class(c)));
            }
        }
    }
    let value = s.intersect(&z.c1_first, &z.c1_second)?;
    if value <= 0 {
        return Err(Error::NonPositiveIntersection {
            first: s.format_class(&z.c1_first),
            second: s.format_class(&z.c1_second),
            value,
        });
    }
    Ok(value)
}

/// `ch(I_Z(D)) = (1, D, D^2/2 - l(Z))`.
pub fn ch_ideal_twist(s: &Surface, z: &PointScheme, d: &DivisorClass) -> Result<ChernCharacter> {
    let length = ci_length(s, z)?;
    let mut ch = ch_line_bundle(s, d)?;
    ch.ch2 -= rational(length);
    Ok(ch)
}

/// Chern character of the middle term of `0 -> sub -> E -> quot -> 0`.
pub fn ch_extension(sub: &ChernCharacter, quot: &ChernCharacter) -> Result<ChernCharacter> {
    Ok(ChernCharacter::new(
        sub.rank + quot.rank,
        sub.c1.checked_add(&quot.c1)?,
        &sub.ch2 + &quot.ch2,
    ))
}

/// The two bundles of the construction: `E_{Z,D}` from
/// `0 -> O -> E -> I_Z(2D) -> 0` and `F_{Z,D}` from `0 -> E -> F -> O(D) -> 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernTower {
    pub ch_e: ChernCharacter,
    pub ch_f: ChernCharacter,
}

pub fn chern_tower(s: &Surface, z: &PointScheme, d: &DivisorClass) -> Result<ChernTower> {
    let structure = ChernCharacter::structure_sheaf(s.picard_rank());
    let twice = d.checked_scale(2)?;
    let ch_e = ch_extension(&structure, &ch_ideal_twist(s, z, &twice)?)?;
    let ch_f = ch_extension(&ch_e, &ch_line_bundle(s, d)?)?;
    Ok(ChernTower { ch_e, ch_f })
}

/// Closed interval `[lo, hi]` containing `h0(I_Z(B))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Bound {
    pub lo: u64,
    pub hi: u64,
}

impl H0Bound {
    pub fn certifies_vanishing(&self) -> bool {
        self.hi == 0
    }

    pub fn certifies_sections(&self) -> bool {
        self.lo > 0
    }
}

impl fmt::Display for H0Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Bounds `h0(I_Z(B))` for a generic complete intersection.
///
/// Upper: `H0(I_Z(B))` is a subspace of `H0(O(B))`, and the Koszul sequence
/// gives `h0(I_Z(B)) <= h0(B-C1) + h0(B-C2) - h0(B-C1-C2) + h1(B-C1-C2)`.
/// Lower: `Z` imposes at most `l(Z)` conditions on `H0(O(B))`.
pub fn ideal_h0_bound(s: &Surface, z: &PointScheme, b: &DivisorClass) -> Result<H0Bound> {
    if !z.generic {
        return Err(Error::NotGeneric);
    }
    let length = ci_length(s, z)?;
    s.check(b)?;
    let h0_b = s.line_bundle_cohomology(b)?.h0;
    let moving = moving_part(s, b)?;
    let hi = koszul_upper(s, z, b)?
        .min(koszul_upper(s, z, &moving)?)
        .min(i128::from(h0_b));
    let lo = (i128::from(h0_b) - i128::from(length)).max(0);
    Ok(H0Bound {
        lo: lo.to_u64().ok_or(Error::Overflow)?,
        hi: hi.to_u64().ok_or(Error::Overflow)?,
    })
}

fn koszul_upper(s: &Surface, z: &PointScheme, b: &DivisorClass) -> Result<i128> {
    let minus_first = b.checked_sub(&z.c1_first)?;
    let minus_second = b.checked_sub(&z.c1_second)?;
    let minus_both = minus_first.checked_sub(&z.c1_second)?;
    let first = s.line_bundle_cohomology(&minus_first)?;
    let second = s.line_bundle_cohomology(&minus_second)?;
    let both = s.line_bundle_cohomology(&minus_both)?;
    Ok(
        (i128::from(first.h0) + i128::from(second.h0) - i128::from(both.h0)).max(0)
            + i128::from(both.h1),
    )
}

/// Strips generator curves `N` with `h0(B - N) = h0(B)`, which lie in the
/// base locus of `|B|`. A generic `Z` cut by base-point-free curves misses
/// them, so `h0(I_Z(B))` is unchanged.
fn moving_part(s: &Surface, b: &DivisorClass) -> Result<DivisorClass> {
    let mut cur = b.clone();
    let mut h0 = s.line_bundle_cohomology(&cur)?.h0;
    if h0 == 0 {
        return Ok(cur);
    }
    'peel: loop {
        for g in s.r0_generators() {
            let next = cur.checked_sub(g)?;
            if s.line_bundle_cohomology(&next)?.h0 == h0 {
                cur = next;
                h0 = s.line_bundle_cohomology(&cur)?.h0;
                continue 'peel;
            }
        }
        return Ok(cur);
    }
}

/// `h1(I_Z(D)) = l(Z) - h0(O(D)) + h1(O(D))`, read off the restriction
/// sequence once `h0(I_Z(D)) = 0` is certified.
pub fn ideal_h1_exact(s: &Surface, z: &PointScheme, d: &DivisorClass) -> Result<i64> {
    let bound = ideal_h0_bound(s, z, d)?;
    if !bound.certifies_vanishing() {
        return Err(Error::Uncertified {
            lo: bound.lo,
            hi: bound.hi,
        });
    }
    let length = ci_length(s, z)?;
    let t = s.line_bundle_cohomology(d)?;
    let value = i128::from(length) - i128::from(t.h0) + i128::from(t.h1);
    i64::try_from(value).map_err(|_| Error::Overflow)
}
