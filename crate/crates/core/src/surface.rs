//! The catalog of polarized rational surfaces and their line-bundle
//! cohomology oracles.
//!
//! Each surface carries its intersection form, canonical class, `chi(O_X)`,
//! a polarization `L`, and a region `R0` of the Picard lattice outside of
//! which no line bundle has sections. `R0` is stored twice: as the
//! inequalities `w . B >= 0` that cut it out and as the extremal rays that
//! generate it, and region enumeration relies on the two agreeing.
//!
//! Basis order: `P2` uses `[H]`, `P1xP1` uses `[A, B]` (the two rulings),
//! `Bl_q P2` uses `[H, E]` with `E` the exceptional curve.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{ratio, rational, DivisorClass, IntersectionForm, Rational};
use crate::sheaf::ChernCharacter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SurfaceName {
    #[serde(rename = "p2")]
    P2,
    #[serde(rename = "p1xp1")]
    P1xP1,
    #[serde(rename = "blp2")]
    BlowupP2,
}

impl SurfaceName {
    pub const ALL: [SurfaceName; 3] = [SurfaceName::P2, SurfaceName::P1xP1, SurfaceName::BlowupP2];

    pub fn as_str(self) -> &'static str {
        match self {
            SurfaceName::P2 => "p2",
            SurfaceName::P1xP1 => "p1xp1",
            SurfaceName::BlowupP2 => "blp2",
        }
    }

    pub fn basis_labels(self) -> &'static [&'static str] {
        match self {
            SurfaceName::P2 => &["H"],
            SurfaceName::P1xP1 => &["A", "B"],
            SurfaceName::BlowupP2 => &["H", "E"],
        }
    }
}

impl fmt::Display for SurfaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SurfaceName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "p2" => Ok(SurfaceName::P2),
            "p1xp1" => Ok(SurfaceName::P1xP1),
            "blp2" => Ok(SurfaceName::BlowupP2),
            other => Err(Error::UnknownSurface(other.to_string())),
        }
    }
}

/// `(h0, h1, h2)` of a sheaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyTriple {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl CohomologyTriple {
    pub fn euler(&self) -> i128 {
        i128::from(self.h0) - i128::from(self.h1) + i128::from(self.h2)
    }
}

impl fmt::Display for CohomologyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.h0, self.h1, self.h2)
    }
}

/// Exact line-bundle cohomology on one surface.
pub trait CohomologyOracle: fmt::Debug + Send + Sync {
    fn cohomology(&self, surface: &Surface, b: &DivisorClass) -> Result<CohomologyTriple>;
}

fn binomial2(n: i128) -> i128 {
    // C(n, 2) for n >= 0
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

fn to_dim(value: i128, surface: &Surface, b: &DivisorClass) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::InconsistentOracle(surface.format_class(b)))
}

/// Completes an `h0` closed form to a full triple: `h2(B) = h0(K - B)` and
/// `h1 = h0 + h2 - chi(O(B))`.
fn triple_from_h0(
    surface: &Surface,
    b: &DivisorClass,
    h0: impl Fn(&[i64]) -> i128,
) -> Result<CohomologyTriple> {
    let dual = surface.serre_dual(b)?;
    let h0_b = h0(b.coeffs());
    let h2_b = h0(dual.coeffs());
    let chi = surface.line_bundle_euler(b)?;
    Ok(CohomologyTriple {
        h0: to_dim(h0_b, surface, b)?,
        h1: to_dim(h0_b + h2_b - chi, surface, b)?,
        h2: to_dim(h2_b, surface, b)?,
    })
}

/// `h0(O(a)) = C(a+2, 2)` on the projective plane.
#[derive(Debug, Default)]
pub struct ProjectivePlaneOracle;

impl CohomologyOracle for ProjectivePlaneOracle {
    fn cohomology(&self, surface: &Surface, b: &DivisorClass) -> Result<CohomologyTriple> {
        surface.check(b)?;
        triple_from_h0(surface, b, |c| {
            let a = i128::from(c[0]);
            if a >= 0 {
                binomial2(a + 2)
            } else {
                0
            }
        })
    }
}

/// Kunneth table for `O(a, b)` on the quadric.
#[derive(Debug, Default)]
pub struct QuadricOracle;

impl CohomologyOracle for QuadricOracle {
    fn cohomology(&self, surface: &Surface, b: &DivisorClass) -> Result<CohomologyTriple> {
        surface.check(b)?;
        let (a, bb) = (i128::from(b.coeffs()[0]), i128::from(b.coeffs()[1]));
        let (h0, h1, h2) = if a >= -1 && bb >= -1 {
            ((a + 1) * (bb + 1), 0, 0)
        } else if a >= -1 && bb <= -1 {
            (0, (a + 1) * (-bb - 1), 0)
        } else if a <= -1 && bb >= -1 {
            (0, (-a - 1) * (bb + 1), 0)
        } else {
            (0, 0, (a + 1) * (bb + 1))
        };
        Ok(CohomologyTriple {
            h0: to_dim(h0, surface, b)?,
            h1: to_dim(h1, surface, b)?,
            h2: to_dim(h2, surface, b)?,
        })
    }
}

/// Plane curves of degree `a` with a point of multiplicity `m` at the
/// blown-up point: `h0(aH - mE) = C(a+2, 2) - C(m+1, 2)` for `0 <= m <= a`,
/// zero for `m > a`; for `b >= 0` the exceptional curve is a fixed component
/// and `h0(aH + bE) = h0(aH)`.
#[derive(Debug, Default)]
pub struct BlowupOracle;

fn blowup_h0(c: &[i64]) -> i128 {
    let (a, b) = (i128::from(c[0]), i128::from(c[1]));
    if a < 0 {
        0
    } else if b >= 0 {
        binomial2(a + 2)
    } else {
        let m = -b;
        if m > a {
            0
        } else {
            binomial2(a + 2) - binomial2(m + 1)
        }
    }
}

impl CohomologyOracle for BlowupOracle {
    fn cohomology(&self, surface: &Surface, b: &DivisorClass) -> Result<CohomologyTriple> {
        surface.check(b)?;
        triple_from_h0(surface, b, blowup_h0)
    }
}

/// Wraps another oracle and shifts `h1` (and `h0`, to keep the Euler
/// characteristic) at a single class. Used for fault injection.
#[derive(Debug)]
pub struct ShiftedOracle {
    pub inner: Arc<dyn CohomologyOracle>,
    pub target: DivisorClass,
    pub h1_shift: i64,
}

impl CohomologyOracle for ShiftedOracle {
    fn cohomology(&self, surface: &Surface, b: &DivisorClass) -> Result<CohomologyTriple> {
        let mut t = self.inner.cohomology(surface, b)?;
        if *b == self.target {
            let shift = |v: u64| {
                u64::try_from(i128::from(v) + i128::from(self.h1_shift))
                    .map_err(|_| Error::InconsistentOracle(surface.format_class(b)))
            };
            t.h1 = shift(t.h1)?;
            t.h0 = shift(t.h0)?;
        }
        Ok(t)
    }
}

/// A polarized polycyclic surface with its cohomology oracle.
#[derive(Clone, Debug)]
pub struct Surface {
    name: SurfaceName,
    form: IntersectionForm,
    canonical: DivisorClass,
    polarization: DivisorClass,
    chi_structure_sheaf: i64,
    r0_inequalities: Vec<DivisorClass>,
    r0_generators: Vec<DivisorClass>,
    oracle: Arc<dyn CohomologyOracle>,
}

impl Surface {
    pub fn p2() -> Self {
        Surface {
            name: SurfaceName::P2,
            form: IntersectionForm::diagonal(&[1]),
            canonical: vec![-3].into(),
            polarization: vec![1].into(),
            chi_structure_sheaf: 1,
            r0_inequalities: vec![vec![1].into()],
            r0_generators: vec![vec![1].into()],
            oracle: Arc::new(ProjectivePlaneOracle),
        }
    }

    /// The quadric with `A^2 = B^2 = 0`, `A.B = 1`; this is the form for
    /// which `chi(O(a,b)) = (a+1)(b+1)` matches the Kunneth table.
    pub fn p1xp1() -> Self {
        Surface {
            name: SurfaceName::P1xP1,
            form: IntersectionForm::new(vec![vec![0, 1], vec![1, 0]]).expect("symmetric"),
            canonical: vec![-2, -2].into(),
            polarization: vec![1, 1].into(),
            chi_structure_sheaf: 1,
            r0_inequalities: vec![vec![1, 0].into(), vec![0, 1].into()],
            r0_generators: vec![vec![1, 0].into(), vec![0, 1].into()],
            oracle: Arc::new(QuadricOracle),
        }
    }

    pub fn blowup_p2() -> Self {
        Surface {
            name: SurfaceName::BlowupP2,
            form: IntersectionForm::diagonal(&[1, -1]),
            canonical: vec![-3, 1].into(),
            polarization: vec![3, -1].into(),
            chi_structure_sheaf: 1,
            // a >= 0 and a + b >= 0
            r0_inequalities: vec![vec![1, 0].into(), vec![1, 1].into()],
            // E and H - E
            r0_generators: vec![vec![0, 1].into(), vec![1, -1].into()],
            oracle: Arc::new(BlowupOracle),
        }
    }

    pub fn by_name(name: SurfaceName) -> Self {
        match name {
            SurfaceName::P2 => Surface::p2(),
            SurfaceName::P1xP1 => Surface::p1xp1(),
            SurfaceName::BlowupP2 => Surface::blowup_p2(),
        }
    }

    /// Replaces `L`. The new class must satisfy `L^2 > 0` and be positive on
    /// every generator of `R0`, so that regions `{B in R0 : B.L <= c}` stay finite.
    pub fn with_polarization(mut self, polarization: DivisorClass) -> Result<Self> {
        self.check(&polarization)?;
        if self.form.square(&polarization)? <= 0 {
            return Err(Error::InvalidPolarization(format!(
                "{} has non-positive self-intersection",
                self.format_class(&polarization)
            )));
        }
        for g in &self.r0_generators {
            if self.form.intersect(g, &polarization)? <= 0 {
                return Err(Error::InvalidPolarization(format!(
                    "{} is not positive on the effective generator {}",
                    self.format_class(&polarization),
                    self.format_class(g)
                )));
            }
        }
        self.polarization = polarization;
        Ok(self)
    }

    /// Polarization `-K_X`, for comparisons on del Pezzo surfaces.
    pub fn anticanonical(self) -> Result<Self> {
        let minus_k = -&self.canonical;
        self.with_polarization(minus_k)
    }

    pub fn with_oracle(mut self, oracle: Arc<dyn CohomologyOracle>) -> Self {
        self.oracle = oracle;
        self
    }

    pub fn oracle(&self) -> Arc<dyn CohomologyOracle> {
        Arc::clone(&self.oracle)
    }

    pub fn name(&self) -> SurfaceName {
        self.name
    }

    pub fn picard_rank(&self) -> usize {
        self.form.rank()
    }

    pub fn form(&self) -> &IntersectionForm {
        &self.form
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn polarization(&self) -> &DivisorClass {
        &self.polarization
    }

    pub fn chi_structure_sheaf(&self) -> i64 {
        self.chi_structure_sheaf
    }

    pub fn r0_inequalities(&self) -> &[DivisorClass] {
        &self.r0_inequalities
    }

    pub fn r0_generators(&self) -> &[DivisorClass] {
        &self.r0_generators
    }

    pub fn check(&self, d: &DivisorClass) -> Result<()> {
        self.form.check(d)
    }

    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
        self.form.intersect(d1, d2)
    }

    pub fn degree(&self, d: &DivisorClass) -> Result<i64> {
        self.form.intersect(d, &self.polarization)
    }

    /// `alpha = L^2 / 2`.
    pub fn alpha(&self) -> Rational {
        ratio(
            self.form
                .square(&self.polarization)
                .expect("validated polarization"),
            2,
        )
    }

    /// Riemann-Roch: `chi = ch2 - c1.K/2 + rk chi(O_X)`.
    pub fn euler_characteristic(&self, ch: &ChernCharacter) -> Result<Rational> {
        let c1k = self.intersect(&ch.c1, &self.canonical)?;
        Ok(
            ch.ch2.clone() - ratio(c1k, 2)
                + rational(i64::from(ch.rank) * self.chi_structure_sheaf),
        )
    }

    /// `chi(O(B)) = B.(B - K)/2 + chi(O_X)`; always an integer.
    pub fn line_bundle_euler(&self, b: &DivisorClass) -> Result<i128> {
        let twice =
            i128::from(self.intersect(b, b)?) - i128::from(self.intersect(b, &self.canonical)?);
        let (half, rem) = twice.div_rem(&2);
        debug_assert_eq!(rem, 0, "B^2 and B.K have equal parity");
        Ok(half + i128::from(self.chi_structure_sheaf))
    }

    pub fn line_bundle_cohomology(&self, b: &DivisorClass) -> Result<CohomologyTriple> {
        self.check(b)?;
        self.oracle.cohomology(self, b)
    }

    /// `K_X - B`.
    pub fn serre_dual(&self, b: &DivisorClass) -> Result<DivisorClass> {
        self.check(b)?;
        self.canonical.checked_sub(b)
    }

    pub fn in_r0(&self, b: &DivisorClass) -> Result<bool> {
        self.check(b)?;
        for w in &self.r0_inequalities {
            if w.dot(b)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Writes a class in the named basis, e.g. `-H+4E`.
    pub fn format_class(&self, d: &DivisorClass) -> String {
        let labels = self.name.basis_labels();
        if d.rank() != labels.len() {
            return d.to_string();
        }
        let mut out = String::new();
        for (c, label) in d.coeffs().iter().zip(labels) {
            if *c == 0 {
                continue;
            }
            if *c > 0 && !out.is_empty() {
                out.push('+');
            }
            match *c {
                1 => {}
                -1 => out.push('-'),
                _ => out.push_str(&c.to_string()),
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// `h0(O(B))` as an exact rational, for formulas mixing dimensions and
    /// Chern data.
    pub fn h0_rational(&self, b: &DivisorClass) -> Result<Rational> {
        let h0 = self.line_bundle_cohomology(b)?.h0;
        Ok(rational(h0.to_i64().ok_or(Error::Overflow)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sheaf::ch_line_bundle;

    fn class(c: &[i64]) -> DivisorClass {
        DivisorClass::new(c.to_vec())
    }

    fn triple(h0: u64, h1: u64, h2: u64) -> CohomologyTriple {
        CohomologyTriple { h0, h1, h2 }
    }

    fn box_classes(r: usize, bound: i64) -> Vec<DivisorClass> {
        let mut out = vec![vec![]];
        for _ in 0..r {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (-bound..=bound).map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(DivisorClass::new).collect()
    }

    #[test]
    fn euler_characteristic_examples() {
        let p2 = Surface::p2();
        let chi = p2
            .euler_characteristic(&ch_line_bundle(&p2, &class(&[1])).unwrap())
            .unwrap();
        assert_eq!(chi, rational(3));

        // B = H - 4E: ch2 = -15/2, B.K = -3 + 4 = 1, chi = -15/2 - 1/2 + 1
        let bl = Surface::blowup_p2();
        let ch = ch_line_bundle(&bl, &class(&[1, -4])).unwrap();
        assert_eq!(ch.ch2, ratio(-15, 2));
        assert_eq!(bl.intersect(&ch.c1, bl.canonical()).unwrap(), 1);
        assert_eq!(bl.euler_characteristic(&ch).unwrap(), rational(-7));

        for s in SurfaceName::ALL.map(Surface::by_name) {
            let zero = DivisorClass::zero(s.picard_rank());
            let ch = ch_line_bundle(&s, &zero).unwrap();
            assert_eq!(s.euler_characteristic(&ch).unwrap(), rational(1));
        }
    }

    #[test]
    fn cohomology_examples() {
        let q = Surface::p1xp1();
        assert_eq!(
            q.line_bundle_cohomology(&class(&[2, -3])).unwrap(),
            triple(0, 6, 0)
        );
        let bl = Surface::blowup_p2();
        assert_eq!(
            bl.line_bundle_cohomology(&class(&[1, -5])).unwrap(),
            triple(0, 12, 0)
        );
        assert_eq!(
            bl.line_bundle_cohomology(&class(&[-2, 1])).unwrap(),
            triple(0, 0, 0)
        );
        assert_eq!(
            bl.line_bundle_cohomology(&class(&[-4, 3])).unwrap(),
            triple(0, 0, 0)
        );
        assert_eq!(
            bl.line_bundle_cohomology(&class(&[-3, 1])).unwrap(),
            triple(0, 0, 1)
        );
        // H - 4E: no plane line has a 4-fold point, chi = -7
        assert_eq!(
            bl.line_bundle_cohomology(&class(&[1, -4])).unwrap(),
            triple(0, 7, 0)
        );
        assert_eq!(
            bl.line_bundle_cohomology(&class(&[1, -1])).unwrap(),
            triple(2, 0, 0)
        );
        let p2 = Surface::p2();
        assert_eq!(
            p2.line_bundle_cohomology(&class(&[0])).unwrap(),
            triple(1, 0, 0)
        );
        assert_eq!(
            p2.line_bundle_cohomology(&class(&[-3])).unwrap(),
            triple(0, 0, 1)
        );
        assert_eq!(
            p2.line_bundle_cohomology(&class(&[-5])).unwrap(),
            triple(0, 0, 6)
        );
    }

    #[test]
    fn serre_dual_examples() {
        let p2 = Surface::p2();
        assert_eq!(p2.serre_dual(&class(&[-1])).unwrap(), class(&[-2]));
        let bl = Surface::blowup_p2();
        let d = class(&[-1, 4]);
        let minus_2d = -2 * &d;
        let dual = bl.serre_dual(&minus_2d).unwrap();
        assert_eq!(dual, class(&[-5, 9]));
        assert_eq!(bl.line_bundle_cohomology(&dual).unwrap().h0, 0);
        for s in SurfaceName::ALL.map(Surface::by_name) {
            assert!(s.serre_dual(s.canonical()).unwrap().is_zero());
        }
    }

    #[test]
    fn in_r0_examples() {
        assert!(!Surface::p2().in_r0(&class(&[-1])).unwrap());
        assert!(Surface::blowup_p2().in_r0(&class(&[1, -1])).unwrap());
        assert!(Surface::p1xp1().in_r0(&class(&[0, 0])).unwrap());
        assert!(Surface::p1xp1().in_r0(&class(&[0])).is_err());
    }

    #[test]
    fn names_round_trip() {
        for name in SurfaceName::ALL {
            assert_eq!(name.as_str().parse::<SurfaceName>().unwrap(), name);
        }
        assert_eq!(
            "P3".parse::<SurfaceName>().unwrap_err(),
            Error::UnknownSurface("p3".into())
        );
    }

    #[test]
    fn polarization_override_is_validated() {
        let p2 = Surface::p2().anticanonical().unwrap();
        assert_eq!(p2.polarization(), &class(&[3]));
        assert_eq!(p2.alpha(), ratio(9, 2));
        let bl = Surface::blowup_p2().anticanonical().unwrap();
        assert_eq!(bl.polarization(), &class(&[3, -1]));
        // H is nef but not positive on E
        assert!(matches!(
            Surface::blowup_p2().with_polarization(class(&[1, 0])),
            Err(Error::InvalidPolarization(_))
        ));
        assert!(Surface::p1xp1().with_polarization(class(&[1, 0])).is_err());
        assert!(Surface::p1xp1().with_polarization(class(&[2, 1])).is_ok());
    }

    #[test]
    fn format_class_uses_basis_labels() {
        let bl = Surface::blowup_p2();
        assert_eq!(bl.format_class(&class(&[-1, 4])), "-H+4E");
        assert_eq!(bl.format_class(&class(&[1, -1])), "H-E");
        assert_eq!(bl.format_class(&class(&[0, 0])), "0");
        assert_eq!(Surface::p1xp1().format_class(&class(&[-2, 1])), "-2A+B");
    }

    #[test]
    fn catalog_invariants_hold() {
        for s in SurfaceName::ALL.map(Surface::by_name) {
            assert!(s.form().square(s.polarization()).unwrap() > 0);
            for g in s.r0_generators() {
                assert!(s.degree(g).unwrap() > 0);
                assert!(s.in_r0(g).unwrap());
            }
        }
    }

    // Box properties over [-8, 8]^r on every catalog surface.

    #[test]
    fn serre_duality_and_riemann_roch_on_box() {
        for s in SurfaceName::ALL.map(Surface::by_name) {
            for b in box_classes(s.picard_rank(), 8) {
                let t = s.line_bundle_cohomology(&b).unwrap();
                let dual = s
                    .line_bundle_cohomology(&s.serre_dual(&b).unwrap())
                    .unwrap();
                assert_eq!(t.h0, dual.h2, "{} {}", s.name(), b);
                assert_eq!(t.h1, dual.h1, "{} {}", s.name(), b);
                let chi = s
                    .euler_characteristic(&ch_line_bundle(&s, &b).unwrap())
                    .unwrap();
                assert_eq!(rational(t.euler() as i64), chi, "{} {}", s.name(), b);
            }
        }
    }

    #[test]
    fn blowup_vanishing_outside_r0() {
        let bl = Surface::blowup_p2();
        for b in box_classes(2, 8) {
            let (a, bb) = (b.coeffs()[0], b.coeffs()[1]);
            if a < 0 || (bb < -a && -a < 0) {
                assert_eq!(bl.line_bundle_cohomology(&b).unwrap().h0, 0, "{b}");
            }
        }
    }

    #[test]
    fn r0_soundness_and_monotonicity() {
        for s in SurfaceName::ALL.map(Surface::by_name) {
            for b in box_classes(s.picard_rank(), 8) {
                let h0 = s.line_bundle_cohomology(&b).unwrap().h0;
                if !s.in_r0(&b).unwrap() {
                    assert_eq!(h0, 0, "{} {}", s.name(), b);
                }
                for g in s.r0_generators() {
                    let bigger = s.line_bundle_cohomology(&(&b + g)).unwrap().h0;
                    assert!(h0 <= bigger, "{} {} + {}", s.name(), b, g);
                }
            }
        }
    }

    #[test]
    fn quadric_table_matches_derived_triple() {
        // Independent route: Serre duality plus RR from the h0 column alone.
        let q = Surface::p1xp1();
        let h0 = |c: &[i64]| -> i128 {
            if c[0] >= 0 && c[1] >= 0 {
                i128::from(c[0] + 1) * i128::from(c[1] + 1)
            } else {
                0
            }
        };
        for b in box_classes(2, 8) {
            assert_eq!(
                q.line_bundle_cohomology(&b).unwrap(),
                triple_from_h0(&q, &b, h0).unwrap(),
                "{b}"
            );
        }
    }

    #[test]
    fn shifted_oracle_perturbs_one_class() {
        let bl = Surface::blowup_p2();
        let target = class(&[1, -5]);
        let shifted = bl.clone().with_oracle(Arc::new(ShiftedOracle {
            inner: bl.oracle(),
            target: target.clone(),
            h1_shift: 1,
        }));
        assert_eq!(
            shifted.line_bundle_cohomology(&target).unwrap(),
            triple(1, 13, 0)
        );
        assert_eq!(
            shifted.line_bundle_cohomology(&class(&[1, -4])).unwrap(),
            bl.line_bundle_cohomology(&class(&[1, -4])).unwrap()
        );
    }
}
