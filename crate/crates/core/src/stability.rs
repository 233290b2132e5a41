//! Central charges, k-slopes and the per-subobject stability tests.
//!
//! For a sheaf with Chern character `(r, c1, ch2)` on `(X, L)` the polynomial
//! central charge is
//!
//! ```text
//! Z_k = -k (c1.L) + i (alpha r k^2 - ch2),    alpha = L^2 / 2,
//! ```
//!
//! and the k-slope is `mu_k = -Re Z_k / Im Z_k`. Asymptotic comparisons
//! reduce to the sign at infinity of one cross polynomial, so no comparison
//! in this module ever samples `k`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{rational, DivisorClass, Rational, RationalPolynomial, Sign};
use crate::sheaf::{ch_line_bundle, ideal_h0_bound, ChernCharacter, PointScheme};
use crate::surface::Surface;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharge {
    pub real_part: RationalPolynomial,
    pub imag_part: RationalPolynomial,
}

pub fn central_charge(s: &Surface, ch: &ChernCharacter) -> Result<CentralCharge> {
    let degree = s.degree(&ch.c1)?;
    Ok(CentralCharge {
        real_part: RationalPolynomial::monomial(rational(-degree), 1),
        imag_part: RationalPolynomial::new(vec![
            -ch.ch2.clone(),
            Rational::zero(),
            s.alpha() * rational(i64::from(ch.rank)),
        ]),
    })
}

/// `mu_k` at a specific `k`, or `None` where `Im Z_k` vanishes.
pub fn k_slope_at(s: &Surface, ch: &ChernCharacter, k: &Rational) -> Result<Option<Rational>> {
    let z = central_charge(s, ch)?;
    let im = z.imag_part.eval(k);
    if im.is_zero() {
        return Ok(None);
    }
    Ok(Some(-z.real_part.eval(k) / im))
}

/// Mumford slope `c1.L / r`.
pub fn mu_slope(s: &Surface, ch: &ChernCharacter) -> Result<Rational> {
    if ch.rank == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(Rational::new(
        s.degree(&ch.c1)?.into(),
        i64::from(ch.rank).into(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SlopeVerdict {
    SubSmaller,
    Equal,
    SubLarger,
}

impl SlopeVerdict {
    pub fn reversed(self) -> Self {
        match self {
            SlopeVerdict::SubSmaller => SlopeVerdict::SubLarger,
            SlopeVerdict::Equal => SlopeVerdict::Equal,
            SlopeVerdict::SubLarger => SlopeVerdict::SubSmaller,
        }
    }
}

/// Outcome of comparing `mu_k(F)` against `mu_k(E)` for `k >> 0`.
///
/// `witness_k0` is an explicit threshold: for every `k > witness_k0` both
/// imaginary parts are positive and the comparison has the stated sign.
/// `leading_term_degree` is the degree in `k` of the cross polynomial, i.e.
/// 3 when the Mumford slopes already differ and 1 when the tie is broken by
/// `ch2`; `None` for `Equal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeComparison {
    pub verdict: SlopeVerdict,
    pub witness_k0: Rational,
    pub leading_term_degree: Option<usize>,
    pub cross: RationalPolynomial,
}

/// `Re Z_F Im Z_E - Re Z_E Im Z_F`; positive exactly where `mu_k(F) < mu_k(E)`
/// (given positive imaginary parts).
pub fn slope_cross_polynomial(
    s: &Surface,
    ch_e: &ChernCharacter,
    ch_f: &ChernCharacter,
) -> Result<RationalPolynomial> {
    let ze = central_charge(s, ch_e)?;
    let zf = central_charge(s, ch_f)?;
    Ok(&(&zf.real_part * &ze.imag_part) - &(&ze.real_part * &zf.imag_part))
}

pub fn compare_k_slopes(
    s: &Surface,
    ch_e: &ChernCharacter,
    ch_f: &ChernCharacter,
) -> Result<SlopeComparison> {
    if ch_e.rank == 0 || ch_f.rank == 0 {
        return Err(Error::ZeroRank);
    }
    let cross = slope_cross_polynomial(s, ch_e, ch_f)?;
    let verdict = match cross.sign_at_infinity() {
        Sign::Positive => SlopeVerdict::SubSmaller,
        Sign::Zero => SlopeVerdict::Equal,
        Sign::Negative => SlopeVerdict::SubLarger,
    };
    let mut witness_k0 = central_charge(s, ch_e)?.imag_part.root_bound()?;
    witness_k0 = witness_k0.max(central_charge(s, ch_f)?.imag_part.root_bound()?);
    if !cross.is_zero() {
        witness_k0 = witness_k0.max(cross.root_bound()?);
    }
    Ok(SlopeComparison {
        verdict,
        witness_k0,
        leading_term_degree: cross.degree(),
        cross,
    })
}

/// Classification of a candidate subobject `F` of `E` by its numerical data.
/// The first two variants are the two ways `F` can fail to destabilize;
/// ties count as destabilizing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubobjectVerdict {
    /// `mu(F) < mu(E)`.
    SmallerSlope,
    /// Equal Mumford slopes, broken in favour of `E` at second order.
    TieBrokenBelow,
    Destabilizing,
}

impl SubobjectVerdict {
    pub fn is_destabilizing(self) -> bool {
        self == SubobjectVerdict::Destabilizing
    }
}

fn slope_cases(
    s: &Surface,
    ch_e: &ChernCharacter,
    ch_f: &ChernCharacter,
    tie_break: impl FnOnce() -> Result<bool>,
) -> Result<SubobjectVerdict> {
    let mu_e = mu_slope(s, ch_e)?;
    let mu_f = mu_slope(s, ch_f)?;
    Ok(if mu_f < mu_e {
        SubobjectVerdict::SmallerSlope
    } else if mu_f == mu_e && tie_break()? {
        SubobjectVerdict::TieBrokenBelow
    } else {
        SubobjectVerdict::Destabilizing
    })
}

/// Asymptotic Z-stability test for one subobject: `mu(F) < mu(E)`, or equal
/// slopes with `ch2(F) (c1(E).L) < ch2(E) (c1(F).L)`.
pub fn az_subobject_test(
    s: &Surface,
    ch_e: &ChernCharacter,
    ch_f: &ChernCharacter,
) -> Result<SubobjectVerdict> {
    slope_cases(s, ch_e, ch_f, || {
        let deg_e = rational(s.degree(&ch_e.c1)?);
        let deg_f = rational(s.degree(&ch_f.c1)?);
        Ok(&ch_f.ch2 * deg_e < &ch_e.ch2 * deg_f)
    })
}

/// Gieseker test for one subobject: `mu(F) < mu(E)`, or equal slopes with
/// `chi(F)/r(F) < chi(E)/r(E)`.
pub fn gieseker_subobject_test(
    s: &Surface,
    ch_e: &ChernCharacter,
    ch_f: &ChernCharacter,
) -> Result<SubobjectVerdict> {
    slope_cases(s, ch_e, ch_f, || {
        let reduced = |ch: &ChernCharacter| -> Result<Rational> {
            Ok(s.euler_characteristic(ch)? / rational(i64::from(ch.rank)))
        };
        Ok(reduced(ch_f)? < reduced(ch_e)?)
    })
}

/// Bogomolov inequality `c1^2 <= 4 c2` for rank two.
pub fn bogomolov_gate(s: &Surface, ch: &ChernCharacter) -> Result<bool> {
    if ch.rank != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: ch.rank,
        });
    }
    let c1sq = rational(s.intersect(&ch.c1, &ch.c1)?);
    Ok(c1sq <= rational(4) * ch.c2(s)?)
}

/// Whether `mu_k(O(B)) <= -mu_k(E)` for all large `k`, i.e. whether `B` is
/// one of the twists for which a rank-two a.Z-stable `E` must satisfy
/// `H0(E(B)) = 0`. Uses `-mu_k(E) = mu_k(E^*)`.
pub fn asymptotic_hoppe_predicate(
    s: &Surface,
    ch_e: &ChernCharacter,
    b: &DivisorClass,
) -> Result<bool> {
    if ch_e.rank != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: ch_e.rank,
        });
    }
    let line = ch_line_bundle(s, b)?;
    let cmp = compare_k_slopes(s, &ch_e.dual(), &line)?;
    Ok(cmp.verdict != SlopeVerdict::SubLarger)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MuEvidence {
    Verified,
    Unknown,
}

/// Hoppe-type sufficient criterion for the Hartshorne-Serre bundle
/// `0 -> O -> E -> I_Z(2D) -> 0` to be slope stable: `D.L > 0` and
/// `h0(I_Z(B)) = 0` for every `B` in `region` (which should be
/// `enumerate_region(s, D)`).
pub fn hs_mu_stability(
    s: &Surface,
    z: &PointScheme,
    d: &DivisorClass,
    region: &[DivisorClass],
) -> Result<MuEvidence> {
    if s.degree(d)? <= 0 {
        return Ok(MuEvidence::Unknown);
    }
    for b in region {
        if !ideal_h0_bound(s, z, b)?.certifies_vanishing() {
            return Ok(MuEvidence::Unknown);
        }
    }
    Ok(MuEvidence::Verified)
}
