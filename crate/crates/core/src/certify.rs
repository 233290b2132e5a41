//! Certificates for the rank-three tower
//!
//! ```text
//! 0 -> O -> E -> I_Z(2D) -> 0,      0 -> E -> F -> O(D) -> 0
//! ```
//!
//! built from a divisor `D` and a complete intersection `Z = C1 ∩ C2`.
//! Each engine evaluates five conditions with three-valued statuses and
//! attaches the exact integers it used.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::picard::DivisorClass;
use crate::sheaf::{chern_tower, ci_length, ideal_h0_bound, ideal_h1_exact, PointScheme};
use crate::stability::{bogomolov_gate, hs_mu_stability, MuEvidence};
use crate::surface::{Surface, SurfaceName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Verified,
    Failed,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "VERIFIED",
            Status::Failed => "FAILED",
            Status::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    StrictlyAzStable,
    NotConstructible,
    Inconclusive,
}

impl Verdict {
    pub const ALL: [Verdict; 3] = [
        Verdict::StrictlyAzStable,
        Verdict::Inconclusive,
        Verdict::NotConstructible,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::StrictlyAzStable => "STRICTLY_AZ_STABLE",
            Verdict::NotConstructible => "NOT_CONSTRUCTIBLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    pub label: String,
    pub value: Value,
}

impl Evidence {
    pub fn new(label: impl Into<String>, value: impl Serialize) -> Self {
        Evidence {
            label: label.into(),
            value: serde_json::to_value(value).unwrap_or(Value::Null),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Condition {
    pub status: Status,
    pub evidence: Vec<Evidence>,
}

impl Condition {
    fn new(status: Status) -> Self {
        Condition {
            status,
            evidence: Vec::new(),
        }
    }

    fn with(mut self, label: impl Into<String>, value: impl Serialize) -> Self {
        self.evidence.push(Evidence::new(label, value));
        self
    }

    fn holds(ok: bool) -> Self {
        Condition::new(if ok { Status::Verified } else { Status::Failed })
    }

    /// Value of the first evidence entry with this label.
    pub fn evidence_value(&self, label: &str) -> Option<&Value> {
        self.evidence
            .iter()
            .find(|e| e.label == label)
            .map(|e| &e.value)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Conditions {
    pub a: Condition,
    pub b: Condition,
    pub c: Condition,
    pub d: Condition,
    pub e: Condition,
}

impl Conditions {
    pub fn iter(&self) -> impl Iterator<Item = (char, &Condition)> {
        [
            ('a', &self.a),
            ('b', &self.b),
            ('c', &self.c),
            ('d', &self.d),
            ('e', &self.e),
        ]
        .into_iter()
    }

    fn verdict(&self) -> Verdict {
        if self.iter().any(|(_, c)| c.status == Status::Failed) {
            Verdict::NotConstructible
        } else if self.iter().any(|(_, c)| c.status == Status::Unknown) {
            Verdict::Inconclusive
        } else {
            Verdict::StrictlyAzStable
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityCertificate {
    pub surface: SurfaceName,
    pub polarization: DivisorClass,
    #[serde(rename = "D")]
    pub d: DivisorClass,
    #[serde(rename = "C1")]
    pub c1: DivisorClass,
    #[serde(rename = "C2")]
    pub c2: DivisorClass,
    pub length: i64,
    pub conditions: Conditions,
    pub region: Vec<DivisorClass>,
    pub assumptions: Vec<String>,
    pub verdict: Verdict,
    #[serde(rename = "ch_E")]
    pub ch_e: crate::sheaf::ChernCharacter,
    #[serde(rename = "ch_F")]
    pub ch_f: crate::sheaf::ChernCharacter,
}

/// All `B` in `R0` with `B.L <= D.L`, in lexicographic order.
pub fn enumerate_region(s: &Surface, d: &DivisorClass) -> Result<Vec<DivisorClass>> {
    let bound = s.degree(d)?;
    let mut caps = Vec::with_capacity(s.r0_generators().len());
    for g in s.r0_generators() {
        let deg = s.degree(g)?;
        if deg <= 0 {
            return Err(Error::ConeUnboundedAlongL(s.format_class(g)));
        }
        caps.push(bound.div_euclid(deg));
    }
    if bound < 0 {
        return Ok(Vec::new());
    }

    let mut found = BTreeSet::new();
    let mut counts = vec![0i64; caps.len()];
    loop {
        let mut b = DivisorClass::zero(s.picard_rank());
        for (g, &n) in s.r0_generators().iter().zip(&counts) {
            b = b.checked_add(&g.checked_scale(n)?)?;
        }
        if s.degree(&b)? <= bound {
            found.insert(b);
        }
        // odometer over 0..=caps[i]
        let mut i = 0;
        loop {
            if i == counts.len() {
                return Ok(found.into_iter().collect());
            }
            if counts[i] < caps[i] {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

const FAILED_MEANS: &str =
    "FAILED and NOT_CONSTRUCTIBLE mean the construction does not apply, not that a bundle is unstable";
const DUAL_SIGN: &str = "condition (d) tests h1(O(-D)), the dual of D";

fn common_assumptions(s: &Surface, z: &PointScheme) -> Vec<String> {
    let mut out = Vec::new();
    if z.generic {
        out.push("Z is a generic complete intersection of curves in |C1| and |C2|".to_owned());
    } else {
        out.push("Z is a special complete intersection; Koszul bounds unavailable".to_owned());
    }
    if s.name() == SurfaceName::P1xP1 {
        out.push("intersection form A^2 = B^2 = 0, A.B = 1".to_owned());
    }
    out.push("second-order slope comparisons use D.L".to_owned());
    out.push(FAILED_MEANS.to_owned());
    out
}

fn condition_a(s: &Surface, d: &DivisorClass) -> Result<Condition> {
    let deg = s.degree(d)?;
    Ok(Condition::holds(deg > 0).with("D.L", deg))
}

fn condition_b(s: &Surface, d: &DivisorClass, length: i64) -> Result<Condition> {
    let d2 = s.intersect(d, d)?;
    Ok(Condition::holds(d2 < length)
        .with("D^2", d2)
        .with("l(Z)", length))
}

fn condition_c(s: &Surface, z: &PointScheme, region: &[DivisorClass]) -> Result<Condition> {
    if !z.generic {
        return Ok(Condition::new(Status::Unknown).with("generic Z", false));
    }
    let mut status = Status::Verified;
    let mut evidence = Vec::new();
    let mut blocking = None;
    for b in region {
        let bound = ideal_h0_bound(s, z, b)?;
        let label = format!("h0(I_Z({}))", s.format_class(b));
        if bound.certifies_sections() {
            status = Status::Failed;
            blocking = Some(Evidence::new(label, [bound.lo, bound.hi]));
            break;
        }
        if !bound.certifies_vanishing() && status == Status::Verified {
            status = Status::Unknown;
            blocking = Some(Evidence::new(label.clone(), [bound.lo, bound.hi]));
        }
        evidence.push(Evidence::new(label, [bound.lo, bound.hi]));
    }
    match blocking {
        Some(e) if status != Status::Verified => Ok(Condition {
            status,
            evidence: vec![e],
        }),
        _ => Ok(Condition { status, evidence }),
    }
}

fn condition_d(s: &Surface, z: &PointScheme, d: &DivisorClass, length: i64) -> Result<Condition> {
    let minus_d = -d;
    let t = s.line_bundle_cohomology(&minus_d)?;
    let mut c = if t.h1 != 0 {
        Condition::new(Status::Verified).with("h1(O(-D))", t.h1)
    } else {
        let two_chi = 2 * s.chi_structure_sheaf();
        Condition::holds(t.h2 == 0 && length > two_chi)
            .with("h1(O(-D))", t.h1)
            .with("h2(O(-D))", t.h2)
            .with("l(Z)", length)
            .with("2chi(O_X)", two_chi)
    };
    if let Ok(h1) = ideal_h1_exact(s, z, d) {
        let naive = length - s.chi_structure_sheaf();
        c = c.with("h1(I_Z(D))", h1).with("l(Z)-chi(O_X)", naive);
        if (h1 > 0) != (naive > 0) {
            c = c.with("sign mismatch between h1(I_Z(D)) and l(Z)-chi(O_X)", true);
        }
    }
    Ok(c)
}

fn condition_e(s: &Surface, d: &DivisorClass) -> Result<Condition> {
    let minus_2d = d.checked_scale(-2)?;
    let h2 = s.line_bundle_cohomology(&minus_2d)?.h2;
    Ok(Condition::holds(h2 == 0)
        .with("h2(O(-2D))", h2)
        .with("K+2D", s.serre_dual(&minus_2d)?))
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    s: &Surface,
    d: &DivisorClass,
    z: &PointScheme,
    length: i64,
    conditions: Conditions,
    verdict: Verdict,
    region: Vec<DivisorClass>,
    assumptions: Vec<String>,
) -> Result<StabilityCertificate> {
    let tower = chern_tower(s, z, d)?;
    Ok(StabilityCertificate {
        surface: s.name(),
        polarization: s.polarization().clone(),
        d: d.clone(),
        c1: z.c1_first.clone(),
        c2: z.c1_second.clone(),
        length,
        conditions,
        region,
        assumptions,
        verdict,
        ch_e: tower.ch_e,
        ch_f: tower.ch_f,
    })
}

/// Full pipeline: checks all five conditions that together make `F`
/// strictly asymptotically Z-stable.
pub fn certify_construction(
    s: &Surface,
    d: &DivisorClass,
    z: &PointScheme,
) -> Result<StabilityCertificate> {
    s.check(d)?;
    let length = ci_length(s, z)?;
    let region = enumerate_region(s, d)?;
    let conditions = Conditions {
        a: condition_a(s, d)?,
        b: condition_b(s, d, length)?,
        c: condition_c(s, z, &region)?,
        d: condition_d(s, z, d, length)?,
        e: condition_e(s, d)?,
    };
    let verdict = conditions.verdict();
    let mut assumptions = common_assumptions(s, z);
    assumptions.push(DUAL_SIGN.to_owned());
    assemble(s, d, z, length, conditions, verdict, region, assumptions)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LocalFreeness {
    VerifiedGeneric,
    Failed,
}

/// Local freeness of `E` for generic `Z` when `h2(O(-2D))` does not vanish:
/// holds once `l(Z) > h0(O(2D + K))`.
pub fn generic_local_freeness_alt(
    s: &Surface,
    d: &DivisorClass,
    z: &PointScheme,
) -> Result<LocalFreeness> {
    let length = ci_length(s, z)?;
    let obstruction = s.serre_dual(&d.checked_scale(-2)?)?;
    let h0 = s.line_bundle_cohomology(&obstruction)?.h0;
    Ok(if i128::from(length) > i128::from(h0) {
        LocalFreeness::VerifiedGeneric
    } else {
        LocalFreeness::Failed
    })
}

/// Decides the extension directly from slope-stability evidence for `E`:
/// with `D.L > 0` and `E` slope stable, `F` is strictly asymptotically
/// Z-stable iff `c2(E) = l(Z) > D^2`. Conditions (d) and (e) still gate the
/// existence of a non-split locally free `F`; (e) here is the generic
/// alternative.
pub fn certify_direct(
    s: &Surface,
    d: &DivisorClass,
    z: &PointScheme,
    mu_evidence: MuEvidence,
) -> Result<StabilityCertificate> {
    s.check(d)?;
    let length = ci_length(s, z)?;
    let region = enumerate_region(s, d)?;
    let tower = chern_tower(s, z, d)?;
    let deg = s.degree(d)?;

    let mut a = condition_a(s, d)?;
    if deg < 0 {
        a = a.with("c2(E)", tower.ch_e.c2(s)?.to_string()).with(
            "bogomolov c1(E)^2 <= 4c2(E)",
            bogomolov_gate(s, &tower.ch_e)?,
        );
    }
    let b = condition_b(s, d, length)?;
    let c = match mu_evidence {
        MuEvidence::Verified => Condition::new(Status::Verified),
        MuEvidence::Unknown => Condition::new(Status::Unknown),
    }
    .with("slope stability of E", mu_evidence);
    let dcond = condition_d(s, z, d, length)?;
    let alt = generic_local_freeness_alt(s, d, z)?;
    let e = {
        let obstruction = s.serre_dual(&d.checked_scale(-2)?)?;
        let h0 = s.line_bundle_cohomology(&obstruction)?.h0;
        Condition::holds(alt == LocalFreeness::VerifiedGeneric)
            .with("h0(O(2D+K))", h0)
            .with("l(Z)", length)
            .with("local freeness", alt)
    };

    let verdict = if deg < 0 {
        Verdict::NotConstructible
    } else if deg == 0 || mu_evidence == MuEvidence::Unknown {
        Verdict::Inconclusive
    } else if b.status == Status::Failed {
        Verdict::NotConstructible
    } else if dcond.status != Status::Verified || e.status != Status::Verified {
        Verdict::Inconclusive
    } else {
        Verdict::StrictlyAzStable
    };

    let mut assumptions = common_assumptions(s, z);
    assumptions.push("E is slope stable exactly as the supplied evidence states".to_owned());
    assumptions.push("generic Z required for local freeness of E".to_owned());
    assumptions.push(DUAL_SIGN.to_owned());
    let conditions = Conditions {
        a,
        b,
        c,
        d: dcond,
        e,
    };
    assemble(s, d, z, length, conditions, verdict, region, assumptions)
}

/// [`certify_direct`] with slope evidence from the Koszul bounds on the region.
pub fn certify_direct_auto(
    s: &Surface,
    d: &DivisorClass,
    z: &PointScheme,
) -> Result<StabilityCertificate> {
    let region = enumerate_region(s, d)?;
    let mu = if z.generic {
        hs_mu_stability(s, z, d, &region)?
    } else {
        MuEvidence::Unknown
    };
    certify_direct(s, d, z, mu)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CertifyMode {
    #[default]
    Construction,
    Direct,
}

impl CertifyMode {
    pub fn certify(
        self,
        s: &Surface,
        d: &DivisorClass,
        z: &PointScheme,
    ) -> Result<StabilityCertificate> {
        match self {
            CertifyMode::Construction => certify_construction(s, d, z),
            CertifyMode::Direct => certify_direct_auto(s, d, z),
        }
    }
}

/// Axis-aligned integer box, inclusive on both ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientBox {
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl CoefficientBox {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                found: upper.len(),
            });
        }
        if let Some(i) = (0..lower.len()).find(|&i| lower[i] > upper[i]) {
            return Err(Error::InvalidBox(format!(
                "coordinate {i} has lower bound {} above upper bound {}",
                lower[i], upper[i]
            )));
        }
        Ok(CoefficientBox { lower, upper })
    }

    /// The same range on every coordinate.
    pub fn cube(rank: usize, lo: i64, hi: i64) -> Result<Self> {
        CoefficientBox::new(vec![lo; rank], vec![hi; rank])
    }

    pub fn point(d: &DivisorClass) -> Self {
        CoefficientBox {
            lower: d.coeffs().to_vec(),
            upper: d.coeffs().to_vec(),
        }
    }

    /// Parses `lo:hi` (every coordinate) or `lo:hi,lo:hi,...`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let range = |p: &str| -> Result<(i64, i64)> {
            let (lo, hi) = p
                .split_once(':')
                .ok_or_else(|| Error::InvalidBox(format!("`{p}` is not of the form lo:hi")))?;
            let num = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidBox(format!("`{t}` is not an integer")))
            };
            Ok((num(lo)?, num(hi)?))
        };
        let ranges = if parts.len() == 1 {
            vec![range(parts[0])?; rank]
        } else if parts.len() == rank {
            parts.into_iter().map(range).collect::<Result<_>>()?
        } else {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: parts.len(),
            });
        };
        let (lower, upper) = ranges.into_iter().unzip();
        CoefficientBox::new(lower, upper)
    }

    pub fn rank(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    /// Lattice points in lexicographic order.
    pub fn points(&self) -> Vec<DivisorClass> {
        let mut out = Vec::new();
        let mut cur = self.lower.clone();
        if cur.is_empty() {
            return out;
        }
        loop {
            out.push(DivisorClass::new(cur.clone()));
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.upper[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = self.lower[i];
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub d_box: CoefficientBox,
    pub c_box: CoefficientBox,
    pub mode: CertifyMode,
    pub workers: usize,
    pub keep_not_constructible: bool,
}

impl SearchConfig {
    pub fn new(d_box: CoefficientBox, c_box: CoefficientBox) -> Self {
        SearchConfig {
            d_box,
            c_box,
            mode: CertifyMode::Construction,
            workers: 1,
            keep_not_constructible: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateFailure {
    pub d: DivisorClass,
    pub c1: DivisorClass,
    pub c2: DivisorClass,
    pub error: Error,
}

#[derive(Clone, Debug, Default)]
pub struct SearchOutcome {
    pub certificates: Vec<StabilityCertificate>,
    pub failures: Vec<CandidateFailure>,
    pub examined: usize,
    pub filtered: usize,
}

impl SearchOutcome {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.certificates
            .iter()
            .filter(|c| c.verdict == verdict)
            .count()
    }
}

fn usable_curve(s: &Surface, c: &DivisorClass) -> Result<bool> {
    if c.is_zero() || !s.in_r0(c)? {
        return Ok(false);
    }
    for g in s.r0_generators() {
        if s.intersect(c, g)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Candidates `(D, C1, C2)` with `C1 <= C2`, both nef curve classes meeting
/// in a positive number of points, in lexicographic order.
pub fn search_candidates(
    s: &Surface,
    config: &SearchConfig,
) -> Result<Vec<(DivisorClass, PointScheme)>> {
    let rank = s.picard_rank();
    for b in [&config.d_box, &config.c_box] {
        if b.rank() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: b.rank(),
            });
        }
    }
    let mut curves = Vec::new();
    for c in config.c_box.points() {
        if usable_curve(s, &c)? {
            curves.push(c);
        }
    }
    let mut pairs = Vec::new();
    for (i, c1) in curves.iter().enumerate() {
        for c2 in &curves[i..] {
            if s.intersect(c1, c2)? > 0 {
                pairs.push(PointScheme::generic(c1.clone(), c2.clone()));
            }
        }
    }
    let mut out = Vec::new();
    for d in config.d_box.points() {
        for z in &pairs {
            out.push((d.clone(), z.clone()));
        }
    }
    Ok(out)
}

/// Certifies every candidate on a pool of `config.workers` threads. Output
/// order is candidate order, whatever the worker count.
pub fn search(s: &Surface, config: &SearchConfig) -> Result<SearchOutcome> {
    let candidates = search_candidates(s, config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let results: Vec<Result<StabilityCertificate>> = pool.install(|| {
        candidates
            .par_iter()
            .map(|(d, z)| config.mode.certify(s, d, z))
            .collect()
    });

    let mut outcome = SearchOutcome {
        examined: candidates.len(),
        ..SearchOutcome::default()
    };
    for ((d, z), result) in candidates.into_iter().zip(results) {
        match result {
            Ok(cert)
                if cert.verdict == Verdict::NotConstructible && !config.keep_not_constructible =>
            {
                outcome.filtered += 1;
            }
            Ok(cert) => outcome.certificates.push(cert),
            Err(error) => outcome.failures.push(CandidateFailure {
                d,
                c1: z.c1_first,
                c2: z.c1_second,
                error,
            }),
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use serde_json::json;

    fn class(c: &[i64]) -> DivisorClass {
        DivisorClass::new(c.to_vec())
    }

    fn z(a: &[i64], b: &[i64]) -> PointScheme {
        PointScheme::generic(class(a), class(b))
    }

    fn classes(cs: &[&[i64]]) -> Vec<DivisorClass> {
        cs.iter().map(|c| class(c)).collect()
    }

    #[test]
    fn region_examples() {
        let p2 = Surface::p2();
        assert_eq!(
            enumerate_region(&p2, &class(&[1])).unwrap(),
            classes(&[&[0], &[1]])
        );
        let bl = Surface::blowup_p2();
        assert_eq!(
            enumerate_region(&bl, &class(&[-1, 4])).unwrap(),
            classes(&[&[0, 0], &[0, 1]])
        );
        assert_eq!(
            enumerate_region(&bl, &class(&[-1, 5])).unwrap(),
            classes(&[&[0, 0], &[0, 1], &[0, 2], &[1, -1]])
        );
        let q = Surface::p1xp1();
        assert_eq!(
            enumerate_region(&q, &class(&[-1, 2])).unwrap(),
            classes(&[&[0, 0], &[0, 1], &[1, 0]])
        );
        assert!(enumerate_region(&p2, &class(&[-1])).unwrap().is_empty());
        assert_eq!(
            enumerate_region(&p2, &class(&[0])).unwrap(),
            classes(&[&[0]])
        );
    }

    fn status(cert: &StabilityCertificate) -> Vec<Status> {
        cert.conditions.iter().map(|(_, c)| c.status).collect()
    }

    #[test]
    fn construction_examples() {
        let p2 = Surface::p2();
        let cert = certify_construction(&p2, &class(&[1]), &z(&[2], &[2])).unwrap();
        assert_eq!(status(&cert), vec![Status::Verified; 5]);
        assert_eq!(cert.verdict, Verdict::StrictlyAzStable);
        assert_eq!(
            cert.conditions.e.evidence_value("h2(O(-2D))"),
            Some(&json!(0))
        );
        assert_eq!(
            cert.conditions.d.evidence_value("2chi(O_X)"),
            Some(&json!(2))
        );
        assert_eq!(cert.conditions.d.evidence_value("l(Z)"), Some(&json!(4)));

        let q = Surface::p1xp1();
        let cert = certify_construction(&q, &class(&[-1, 2]), &z(&[3, 3], &[3, 3])).unwrap();
        assert_eq!(cert.verdict, Verdict::StrictlyAzStable);
        assert_eq!(
            cert.conditions.d.evidence_value("h1(O(-D))"),
            Some(&json!(2))
        );

        let bl = Surface::blowup_p2();
        let cert = certify_construction(&bl, &class(&[-1, 5]), &z(&[2, 0], &[2, -2])).unwrap();
        assert_eq!(cert.verdict, Verdict::StrictlyAzStable);
        assert_eq!(
            cert.conditions.d.evidence_value("h1(O(-D))"),
            Some(&json!(12))
        );

        let cert = certify_construction(&p2, &class(&[2]), &z(&[3], &[3])).unwrap();
        assert_eq!(cert.conditions.e.status, Status::Failed);
        assert_eq!(
            cert.conditions.e.evidence_value("h2(O(-2D))"),
            Some(&json!(3))
        );
        assert_eq!(cert.verdict, Verdict::NotConstructible);
    }

    #[test]
    fn construction_negative_cases() {
        let p2 = Surface::p2();
        // D^2 = 4 >= l = 4
        let cert = certify_construction(&p2, &class(&[2]), &z(&[2], &[2])).unwrap();
        assert_eq!(cert.conditions.b.status, Status::Failed);
        // O(1) has sections vanishing on four points of a conic pair? no: on a line pair
        let cert = certify_construction(&p2, &class(&[1]), &z(&[1], &[2])).unwrap();
        assert_eq!(cert.conditions.c.status, Status::Failed);
        let cert = certify_construction(&p2, &class(&[-1]), &z(&[2], &[2])).unwrap();
        assert_eq!(cert.conditions.a.status, Status::Failed);
        assert!(cert.region.is_empty());
        let special = PointScheme::new(class(&[2]), class(&[2]), false);
        let cert = certify_construction(&p2, &class(&[1]), &special).unwrap();
        assert_eq!(cert.conditions.c.status, Status::Unknown);
        assert_eq!(cert.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn local_freeness_alternative() {
        let p2 = Surface::p2();
        assert_eq!(
            generic_local_freeness_alt(&p2, &class(&[2]), &z(&[3], &[3])).unwrap(),
            LocalFreeness::VerifiedGeneric
        );
        assert_eq!(
            generic_local_freeness_alt(&p2, &class(&[1]), &z(&[1], &[1])).unwrap(),
            LocalFreeness::VerifiedGeneric
        );
        // h0(O(3)) = 10 = l at D = 3H, Z = 2H ∩ 5H
        assert_eq!(
            generic_local_freeness_alt(&p2, &class(&[3]), &z(&[2], &[5])).unwrap(),
            LocalFreeness::Failed
        );
    }

    #[test]
    fn direct_examples() {
        let p2 = Surface::p2();
        let cert = certify_direct(&p2, &class(&[2]), &z(&[3], &[3]), MuEvidence::Verified).unwrap();
        assert_eq!(cert.verdict, Verdict::StrictlyAzStable);
        let auto = certify_direct_auto(&p2, &class(&[2]), &z(&[3], &[3])).unwrap();
        assert_eq!(auto.verdict, Verdict::StrictlyAzStable);

        let cert =
            certify_direct(&p2, &class(&[-1]), &z(&[2], &[2]), MuEvidence::Verified).unwrap();
        assert_eq!(cert.verdict, Verdict::NotConstructible);
        assert_eq!(
            cert.conditions
                .a
                .evidence_value("bogomolov c1(E)^2 <= 4c2(E)"),
            Some(&json!(true))
        );

        let q = Surface::p1xp1();
        let cert = certify_direct(
            &q,
            &class(&[-1, 1]),
            &z(&[1, 1], &[1, 1]),
            MuEvidence::Verified,
        )
        .unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        let cert = certify_direct(&p2, &class(&[1]), &z(&[2], &[2]), MuEvidence::Unknown).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn box_parsing() {
        let b = CoefficientBox::parse("-1:1", 2).unwrap();
        assert_eq!(b.points().len(), 9);
        assert_eq!(b.points()[0], class(&[-1, -1]));
        assert_eq!(b.points()[1], class(&[-1, 0]));
        let b = CoefficientBox::parse("0:2, -1:-1", 2).unwrap();
        assert_eq!(b.points(), classes(&[&[0, -1], &[1, -1], &[2, -1]]));
        assert!(matches!(
            CoefficientBox::parse("2:1", 1),
            Err(Error::InvalidBox(_))
        ));
        assert!(matches!(
            CoefficientBox::parse("0:1,0:1,0:1", 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn search_examples() {
        let p2 = Surface::p2();
        let config = SearchConfig::new(
            CoefficientBox::cube(1, -2, 2).unwrap(),
            CoefficientBox::cube(1, 0, 4).unwrap(),
        );
        let out = search(&p2, &config).unwrap();
        assert!(out.certificates.iter().any(|c| c.d == class(&[1])
            && c.c1 == class(&[2])
            && c.c2 == class(&[2])
            && c.verdict == Verdict::StrictlyAzStable));
        assert!(out
            .certificates
            .iter()
            .all(|c| c.verdict != Verdict::NotConstructible));
        assert!(out.failures.is_empty());

        let empty = SearchConfig::new(
            CoefficientBox::cube(1, -2, 2).unwrap(),
            CoefficientBox::cube(1, 0, 0).unwrap(),
        );
        assert!(search(&p2, &empty).unwrap().certificates.is_empty());

        let bl = Surface::blowup_p2();
        let config = SearchConfig::new(
            CoefficientBox::point(&class(&[-1, 4])),
            CoefficientBox::point(&class(&[1, 0])),
        );
        let out = search(&bl, &config).unwrap();
        assert_eq!(out.certificates.len(), 1);
        assert_eq!(out.certificates[0].verdict, Verdict::StrictlyAzStable);
    }

    fn brute_region(s: &Surface, d: &DivisorClass) -> Vec<DivisorClass> {
        let deg = s.degree(d).unwrap();
        let r = (3 * deg).abs();
        let mut out: Vec<_> = CoefficientBox::cube(s.picard_rank(), -r, r)
            .unwrap()
            .points()
            .into_iter()
            .filter(|b| s.in_r0(b).unwrap() && s.degree(b).unwrap() <= deg)
            .collect();
        out.sort();
        out
    }

    #[test]
    fn region_matches_brute_force() {
        for s in [Surface::p2(), Surface::p1xp1(), Surface::blowup_p2()] {
            for d in CoefficientBox::cube(s.picard_rank(), -4, 4)
                .unwrap()
                .points()
            {
                assert_eq!(
                    enumerate_region(&s, &d).unwrap(),
                    brute_region(&s, &d),
                    "{d}"
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn region_is_monotone(a in prop::collection::vec(-4i64..=4, 2), b in prop::collection::vec(-4i64..=4, 2)) {
            let s = Surface::blowup_p2();
            let (a, b) = (DivisorClass::new(a), DivisorClass::new(b));
            let (small, large) = if s.degree(&a)? <= s.degree(&b)? { (a, b) } else { (b, a) };
            let big: BTreeSet<_> = enumerate_region(&s, &large)?.into_iter().collect();
            prop_assert!(enumerate_region(&s, &small)?.iter().all(|x| big.contains(x)));
        }

        #[test]
        fn construction_factors_through_direct(
            d in prop::collection::vec(-3i64..=3, 2),
            c1 in (0i64..=4, 0i64..=4),
            c2 in (0i64..=4, 0i64..=4),
        ) {
            let s = Surface::blowup_p2();
            let d = DivisorClass::new(d);
            // nef classes aH - bE need a >= b >= 0
            let c = |(a, b): (i64, i64)| DivisorClass::new(vec![a.max(b), -b.min(a)]);
            let z = PointScheme::generic(c(c1), c(c2));
            prop_assume!(ci_length(&s, &z).is_ok());
            let cert = certify_construction(&s, &d, &z)?;
            if cert.verdict == Verdict::StrictlyAzStable {
                prop_assert_eq!(certify_direct(&s, &d, &z, MuEvidence::Verified)?.verdict, Verdict::StrictlyAzStable);
            }
            if cert.conditions.e.status == Status::Verified {
                prop_assert_eq!(generic_local_freeness_alt(&s, &d, &z)?, LocalFreeness::VerifiedGeneric);
            }
        }

        #[test]
        fn negative_degree_is_never_constructible(
            h in -6i64..=6,
            deficit in 1i64..=12,
            a in 1i64..=4,
        ) {
            let s = Surface::blowup_p2();
            let d = class(&[h, -3 * h - deficit]);
            prop_assert!(s.degree(&d)? < 0);
            let z = PointScheme::generic(class(&[a, 0]), class(&[a, -1]));
            for mu in [MuEvidence::Verified, MuEvidence::Unknown] {
                prop_assert_eq!(certify_direct(&s, &d, &z, mu)?.verdict, Verdict::NotConstructible);
            }
        }
    }
}
