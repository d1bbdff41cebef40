//! Classification of symplectic sums along positive-genus surfaces.
//!
//! The pipeline takes a [`SumProblem`] and decides which Kodaira-dimension-
//! zero model the glued manifold is diffeomorphic to:
//!
//! 1. validate the input classes (defined, equal genera; opposite squares);
//! 2. require the sum not smoothly trivial, relatively minimal, and glued
//!    along a surface of positive genus;
//! 3. require both sides to sum along `-F` with `F` anticanonical of genus
//!    one and the total `c1^2` to vanish (the Kodaira-zero gate);
//! 4. reduce the pair by blow-up trades to a standard configuration;
//! 5. dispatch: two `CP2#9`'s give the K3 surface, a `CP2#9` against a
//!    minimal `S^2`-bundle over `T^2` gives the Enriques surface, and two
//!    such bundles give the finite list of torus-bundle families produced
//!    by [`enumerate_table`].
//!
//! Every step is recorded in a [`Classification`] certificate that
//! [`replay`] can re-execute and compare.
//!
//! Also here: the numeric Kodaira dimension from the signs of `K.omega` and
//! `K^2` ([`kodaira_dimension`]), the `-F` hypothesis check
//! ([`check_minusf`]), the symplectic proportionality bound `mu = -1`
//! ([`mu_bound`]) with the case split explaining why no larger bound is
//! attainable, and model invariants `(chi, sigma, b1)` for each verdict
//! ([`model_invariants`]).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::glue::{complement_of, enumerate_table, ComplementKind, GlueError};
use crate::homology::{HomologyError, SurfaceFamily};
use crate::sumcalc::{SumProblem, Summand, SumViolation, TradeDirection};
use crate::torusbundle::{FamilyTag, TablePattern};
use crate::Trilean;

/// Errors of the classifier operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    /// The sign pair `(0, +)` for `(K.omega, K^2)` has no Kodaira dimension.
    UndefinedKodaira,
    /// The enumeration bound must be at least 1.
    InvalidBound(i64),
    /// The verdict does not pin down a single model manifold.
    NonManifoldVerdict,
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::UndefinedKodaira => {
                write!(f, "kodaira dimension is undefined for signs (0, +)")
            }
            ClassifyError::InvalidBound(b) => {
                write!(f, "enumeration bound must be at least 1, got {b}")
            }
            ClassifyError::NonManifoldVerdict => {
                write!(f, "verdict does not determine a single model manifold")
            }
        }
    }
}

/// Sign of a real quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Negative.
    Minus,
    /// Zero.
    Zero,
    /// Positive.
    Plus,
}

impl Sign {
    /// The sign of an integer.
    pub fn of(n: i64) -> Sign {
        match n.cmp(&0) {
            core::cmp::Ordering::Less => Sign::Minus,
            core::cmp::Ordering::Equal => Sign::Zero,
            core::cmp::Ordering::Greater => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Minus => write!(f, "-"),
            Sign::Zero => write!(f, "0"),
            Sign::Plus => write!(f, "+"),
        }
    }
}

/// The Kodaira dimension of a minimal symplectic 4-manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaDim {
    /// `-infinity`.
    MinusInfinity,
    /// `0`.
    Zero,
    /// `1`.
    One,
    /// `2`.
    Two,
}

impl fmt::Display for KodairaDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaDim::MinusInfinity => write!(f, "-infinity"),
            KodairaDim::Zero => write!(f, "0"),
            KodairaDim::One => write!(f, "1"),
            KodairaDim::Two => write!(f, "2"),
        }
    }
}

/// Kodaira dimension from the signs of `K.omega` and `K^2`, matching the
/// case list in order: either sign negative gives `-infinity`; `(0,0)` gives
/// `0`; `(+,0)` gives `1`; `(+,+)` gives `2`. The leftover pair `(0,+)` is
/// not assigned a dimension.
pub fn kodaira_dimension(k_omega: Sign, k_sq: Sign) -> Result<KodairaDim, ClassifyError> {
    match (k_omega, k_sq) {
        (Sign::Minus, _) | (_, Sign::Minus) => Ok(KodairaDim::MinusInfinity),
        (Sign::Zero, Sign::Zero) => Ok(KodairaDim::Zero),
        (Sign::Plus, Sign::Zero) => Ok(KodairaDim::One),
        (Sign::Plus, Sign::Plus) => Ok(KodairaDim::Two),
        (Sign::Zero, Sign::Plus) => Err(ClassifyError::UndefinedKodaira),
    }
}

/// Why a summand fails the `-F` hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinusFViolation {
    /// The surface class is not the anticanonical class.
    WrongClass,
    /// The surface genus is not one.
    WrongGenus,
}

impl fmt::Display for MinusFViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinusFViolation::WrongClass => {
                write!(f, "surface class is not the anticanonical class")
            }
            MinusFViolation::WrongGenus => write!(f, "surface genus is not 1"),
        }
    }
}

/// Checks that a summand sums along `-F` in the required sense: `F` is the
/// anticanonical class and has genus one. (For an anticanonical class the
/// adjunction genus is always one, so the second condition is a safety
/// re-check.)
pub fn check_minusf(s: &Summand) -> Result<(), MinusFViolation> {
    if !s.is_anticanonical() {
        return Err(MinusFViolation::WrongClass);
    }
    match s.class().adjunction_genus() {
        Ok(1) => Ok(()),
        _ => Err(MinusFViolation::WrongGenus),
    }
}

/// A rational proportionality factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProportionalityFactor {
    /// Numerator.
    pub num: i64,
    /// Denominator (positive).
    pub den: i64,
}

impl fmt::Display for ProportionalityFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Which argument shows the proportionality bound `mu = -1` is sharp for a
/// family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuCase {
    /// Rational family: an integrality argument on exceptional spheres.
    RationalIntegrality,
    /// Ruled over `T^2` with blow-ups: integrality on the exceptional
    /// spheres of the blown-up bundle.
    RuledBlownUpIntegrality,
    /// Minimal ruled over `T^2`: the section class must be excluded, after
    /// which the fiber class forces the bound.
    RuledMinimalSectionExcluded,
    /// Twisted ruled: integrality for the twisted bundle's classes.
    TwistedIntegrality,
}

impl fmt::Display for MuCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuCase::RationalIntegrality => write!(f, "rational"),
            MuCase::RuledBlownUpIntegrality => write!(f, "integrality"),
            MuCase::RuledMinimalSectionExcluded => write!(f, "section excluded"),
            MuCase::TwistedIntegrality => write!(f, "integrality"),
        }
    }
}

/// The proportionality bound for a family, with its case tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MuBound {
    /// The bound itself; always `-1` on this universe of families.
    pub bound: ProportionalityFactor,
    /// Which argument applies.
    pub case: MuCase,
}

/// The largest `mu` with `K - mu F` effective-like on the given family is
/// `-1`, for every family in the universe; the case records which exclusion
/// argument applies.
pub fn mu_bound(family: &SurfaceFamily) -> Result<MuBound, HomologyError> {
    family.validated()?;
    let case = match family {
        SurfaceFamily::CP2Blowup(_) | SurfaceFamily::S2xS2 => MuCase::RationalIntegrality,
        SurfaceFamily::RuledTrivial { blowups: 0, .. } => MuCase::RuledMinimalSectionExcluded,
        SurfaceFamily::RuledTrivial { .. } => MuCase::RuledBlownUpIntegrality,
        SurfaceFamily::RuledTwisted { .. } => MuCase::TwistedIntegrality,
    };
    Ok(MuBound {
        bound: ProportionalityFactor { num: -1, den: 1 },
        case,
    })
}

/// The classification verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The sum is a K3 surface.
    K3,
    /// The sum is an Enriques surface.
    Enriques,
    /// The sum is a torus bundle belonging to one of the listed normal-form
    /// patterns (parameter unbounded; the certificate records the tags seen
    /// within the enumeration bound).
    TorusBundleFamilies(Vec<TablePattern>),
    /// The sum exists but has nonzero Kodaira dimension; the reason records
    /// the failing quantity.
    NotKodairaZero(String),
    /// The input violates a standing hypothesis.
    HypothesisFailure(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::K3 => write!(f, "K3 surface"),
            Verdict::Enriques => write!(f, "Enriques surface"),
            Verdict::TorusBundleFamilies(pats) => {
                write!(f, "torus bundle families:")?;
                for p in pats {
                    write!(f, " {p};")?;
                }
                Ok(())
            }
            Verdict::NotKodairaZero(r) => write!(f, "not Kodaira dimension zero: {r}"),
            Verdict::HypothesisFailure(r) => write!(f, "hypothesis failure: {r}"),
        }
    }
}

/// One recorded step of a classification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertStep {
    /// Input classes validated (genera defined and equal, squares opposite,
    /// up to the square deferral noted in [`classify`]).
    Validated,
    /// Standing hypotheses checked: not smoothly trivial, relatively
    /// minimal, positive genus.
    CheckedHypotheses,
    /// Both sides sum along `-F`; records the total `c1^2`.
    CheckedMinusF {
        /// `c1^2(X1) + c1^2(X2)`; zero on the Kodaira-zero locus.
        c1sq_sum: i64,
    },
    /// One blow-up trade applied during reduction.
    Trade {
        /// Which side was blown down.
        direction: TradeDirection,
        /// The problem before the trade.
        from: String,
        /// The problem after the trade.
        to: String,
    },
    /// Complement kinds of the two reduced bundle summands.
    Complements {
        /// Side-1 complement.
        j: ComplementKind,
        /// Side-2 complement.
        k: ComplementKind,
    },
    /// Gluing enumeration performed.
    Enumerated {
        /// Parameter bound of the sweep.
        bound: i64,
        /// Every normal-form tag realized within the bound.
        tags: Vec<FamilyTag>,
    },
    /// Final dispatch on the reduced pair.
    Dispatched {
        /// The reduced pair, rendered.
        pair: String,
    },
}

impl fmt::Display for CertStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertStep::Validated => write!(f, "validated input classes"),
            CertStep::CheckedHypotheses => write!(
                f,
                "checked: not smoothly trivial, relatively minimal, genus >= 1"
            ),
            CertStep::CheckedMinusF { c1sq_sum } => {
                write!(f, "checked -F condition; c1^2 sum = {c1sq_sum}")
            }
            CertStep::Trade { direction, from, to } => {
                write!(f, "trade {direction}: {from} => {to}")
            }
            CertStep::Complements { j, k } => write!(f, "complements {j} and {k}"),
            CertStep::Enumerated { bound, tags } => {
                write!(f, "enumerated gluings at bound {bound}: {} tags", tags.len())
            }
            CertStep::Dispatched { pair } => write!(f, "dispatched {pair}"),
        }
    }
}

/// A verdict together with the certificate of steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// The verdict.
    pub verdict: Verdict,
    /// The recorded steps, in execution order.
    pub certificate: Vec<CertStep>,
}

fn is_nine(f: &SurfaceFamily) -> bool {
    matches!(f, SurfaceFamily::CP2Blowup(9))
}

fn is_t2_bundle(f: &SurfaceFamily) -> bool {
    matches!(
        f,
        SurfaceFamily::RuledTrivial {
            genus: 1,
            blowups: 0
        } | SurfaceFamily::RuledTwisted { genus: 1 }
    )
}

/// Runs the classification pipeline. `bound` is the gluing-enumeration
/// bound used when the verdict is a torus-bundle list.
///
/// Validation squares are deferred: a square mismatch alone does not abort,
/// because the `-F` gate reports the failing `c1^2` more informatively (the
/// anticanonical squares sum to the total `c1^2`). Genus violations are
/// fatal immediately.
pub fn classify(p: &SumProblem, bound: i64) -> Result<Classification, ClassifyError> {
    if bound < 1 {
        return Err(ClassifyError::InvalidBound(bound));
    }
    let mut cert = Vec::new();
    let fail = |cert: Vec<CertStep>, v: Verdict| Ok(Classification { verdict: v, certificate: cert });

    if let Err(violations) = p.validate() {
        if let Some(v) = violations
            .iter()
            .find(|v| !matches!(v, SumViolation::SquareMismatch { .. }))
        {
            return fail(cert, Verdict::HypothesisFailure(format!("{v}")));
        }
    }
    cert.push(CertStep::Validated);

    if p.is_smoothly_trivial() {
        return fail(
            cert,
            Verdict::HypothesisFailure("the sum is smoothly trivial".into()),
        );
    }
    if p.is_relatively_minimal() != Trilean::True {
        return fail(
            cert,
            Verdict::HypothesisFailure("the sum is not known to be relatively minimal".into()),
        );
    }
    let genus = p
        .x1
        .class()
        .adjunction_genus()
        .expect("validate guarantees defined genus");
    if genus < 1 {
        return fail(
            cert,
            Verdict::HypothesisFailure("the gluing surface must have positive genus".into()),
        );
    }
    cert.push(CertStep::CheckedHypotheses);

    for (side, s) in [(1, &p.x1), (2, &p.x2)] {
        if let Err(v) = check_minusf(s) {
            return fail(cert, Verdict::NotKodairaZero(format!("side {side}: {v}")));
        }
    }
    let c1sq_sum = p.x1.family().c1sq().expect("validated family")
        + p.x2.family().c1sq().expect("validated family");
    if c1sq_sum != 0 {
        return fail(
            cert,
            Verdict::NotKodairaZero(format!("c1^2 = {c1sq_sum} != 0")),
        );
    }
    cert.push(CertStep::CheckedMinusF { c1sq_sum });

    if [p.x1.family(), p.x2.family()]
        .iter()
        .any(|f| f.ruled_genus().is_some_and(|h| h >= 2))
    {
        return fail(
            cert,
            Verdict::HypothesisFailure("both X1 and X2 must be S2-bundles over T2".into()),
        );
    }

    let (reduced, directions) = match p.reduce_pair_traced() {
        Ok(r) => r,
        Err(e) => return fail(cert, Verdict::HypothesisFailure(format!("{e}"))),
    };
    let mut current = p.clone();
    for direction in directions {
        let next = current
            .trade_blowup(direction)
            .expect("recorded trade replays");
        cert.push(CertStep::Trade {
            direction,
            from: format!("{current}"),
            to: format!("{next}"),
        });
        current = next;
    }
    debug_assert_eq!(current, reduced);

    let (f1, f2) = (reduced.x1.family(), reduced.x2.family());
    let verdict = if is_nine(f1) && is_nine(f2) {
        Verdict::K3
    } else if (is_nine(f1) && is_t2_bundle(f2)) || (is_t2_bundle(f1) && is_nine(f2)) {
        Verdict::Enriques
    } else if is_t2_bundle(f1) && is_t2_bundle(f2) {
        let j = complement_of(&reduced.x1).expect("reduced bundle summand is in scope");
        let k = complement_of(&reduced.x2).expect("reduced bundle summand is in scope");
        cert.push(CertStep::Complements { j, k });
        let tags = enumerate_table(j, k, bound).map_err(|e| match e {
            GlueError::InvalidBound(b) => ClassifyError::InvalidBound(b),
            other => unreachable!("enumeration only rejects bad bounds: {other}"),
        })?;
        let tag_list: Vec<FamilyTag> = tags.iter().copied().collect();
        cert.push(CertStep::Enumerated {
            bound,
            tags: tag_list,
        });
        let mut patterns: Vec<TablePattern> = Vec::new();
        for t in &tags {
            if !patterns.contains(&t.pattern()) {
                patterns.push(t.pattern());
            }
        }
        patterns.sort_unstable();
        Verdict::TorusBundleFamilies(patterns)
    } else {
        Verdict::HypothesisFailure(format!("no model for the reduced configuration {reduced}"))
    };
    cert.push(CertStep::Dispatched {
        pair: format!("{reduced}"),
    });
    Ok(Classification {
        verdict,
        certificate: cert,
    })
}

/// Re-runs the pipeline on `p` (recovering the enumeration bound from the
/// certificate, default 3) and checks that it reproduces `c` exactly.
pub fn replay(p: &SumProblem, c: &Classification) -> Result<(), String> {
    let bound = c
        .certificate
        .iter()
        .find_map(|s| match s {
            CertStep::Enumerated { bound, .. } => Some(*bound),
            _ => None,
        })
        .unwrap_or(3);
    let again = classify(p, bound).map_err(|e| format!("replay failed to classify: {e}"))?;
    if &again == c {
        Ok(())
    } else {
        Err(format!(
            "replay mismatch: verdict {} vs {}",
            again.verdict, c.verdict
        ))
    }
}

/// Numeric invariants of a model manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelInvariants {
    /// Euler characteristic.
    pub chi: i64,
    /// Signature.
    pub sigma: i64,
    /// First Betti number.
    pub b1: usize,
}

/// Invariants of the model a single tag denotes: torus bundles have
/// `chi = sigma = 0` and `b1` read off `H_1` of the bundle.
pub fn model_invariants_tag(tag: &FamilyTag) -> ModelInvariants {
    ModelInvariants {
        chi: 0,
        sigma: 0,
        b1: tag.to_bundle().h1().rank,
    }
}

/// Invariants of the classified model, when the verdict pins one down: the
/// K3 surface has `(24, -16, 0)`, the Enriques surface `(12, -8, 0)`, and a
/// single-pattern torus-bundle verdict `(0, 0, b1)` of a representative tag.
pub fn model_invariants(c: &Classification) -> Result<ModelInvariants, ClassifyError> {
    match &c.verdict {
        Verdict::K3 => Ok(ModelInvariants {
            chi: 24,
            sigma: -16,
            b1: 0,
        }),
        Verdict::Enriques => Ok(ModelInvariants {
            chi: 12,
            sigma: -8,
            b1: 0,
        }),
        Verdict::TorusBundleFamilies(pats) if pats.len() == 1 => {
            let pattern = pats[0];
            let param = pattern.required_parity().unwrap_or(0);
            let tag = FamilyTag::new(pattern, param).expect("parity-respecting representative");
            Ok(model_invariants_tag(&tag))
        }
        _ => Err(ClassifyError::NonManifoldVerdict),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::H2Class;
    use alloc::string::ToString;
    use alloc::vec;

    fn anti(f1: SurfaceFamily, f2: SurfaceFamily) -> SumProblem {
        SumProblem::anticanonical(f1, f2).unwrap()
    }

    fn cp2(k: u32) -> SurfaceFamily {
        SurfaceFamily::CP2Blowup(k)
    }

    fn rt(genus: u32, blowups: u32) -> SurfaceFamily {
        SurfaceFamily::RuledTrivial { genus, blowups }
    }

    fn rtw(genus: u32) -> SurfaceFamily {
        SurfaceFamily::RuledTwisted { genus }
    }

    #[test]
    fn kodaira_dimension_cases() {
        let (m, z, p) = (Sign::Minus, Sign::Zero, Sign::Plus);
        assert_eq!(kodaira_dimension(m, m), Ok(KodairaDim::MinusInfinity));
        assert_eq!(kodaira_dimension(m, z), Ok(KodairaDim::MinusInfinity));
        assert_eq!(kodaira_dimension(m, p), Ok(KodairaDim::MinusInfinity));
        assert_eq!(kodaira_dimension(z, m), Ok(KodairaDim::MinusInfinity));
        assert_eq!(kodaira_dimension(p, m), Ok(KodairaDim::MinusInfinity));
        assert_eq!(kodaira_dimension(z, z), Ok(KodairaDim::Zero));
        assert_eq!(kodaira_dimension(p, z), Ok(KodairaDim::One));
        assert_eq!(kodaira_dimension(p, p), Ok(KodairaDim::Two));
        assert_eq!(
            kodaira_dimension(z, p),
            Err(ClassifyError::UndefinedKodaira)
        );
        assert_eq!(Sign::of(-7), Sign::Minus);
        assert_eq!(Sign::of(0), Sign::Zero);
        assert_eq!(Sign::of(3), Sign::Plus);
    }

    #[test]
    fn minusf_examples() {
        let ok = Summand::anticanonical(cp2(9)).unwrap();
        assert_eq!(check_minusf(&ok), Ok(()));
        let ok = Summand::anticanonical(rt(1, 0)).unwrap();
        assert_eq!(check_minusf(&ok), Ok(()));
        let h = Summand::new(cp2(9), H2Class::new(cp2(9), vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap())
            .unwrap();
        assert_eq!(check_minusf(&h), Err(MinusFViolation::WrongClass));
    }

    #[test]
    fn mu_bound_cases() {
        let m = mu_bound(&cp2(5)).unwrap();
        assert_eq!(m.bound, ProportionalityFactor { num: -1, den: 1 });
        assert_eq!(m.case, MuCase::RationalIntegrality);
        assert_eq!(m.bound.to_string(), "-1");
        assert_eq!(
            mu_bound(&SurfaceFamily::S2xS2).unwrap().case,
            MuCase::RationalIntegrality
        );
        assert_eq!(
            mu_bound(&rt(1, 0)).unwrap().case,
            MuCase::RuledMinimalSectionExcluded
        );
        assert_eq!(
            mu_bound(&rt(1, 2)).unwrap().case,
            MuCase::RuledBlownUpIntegrality
        );
        assert_eq!(mu_bound(&rtw(1)).unwrap().case, MuCase::TwistedIntegrality);
        assert!(mu_bound(&rt(0, 0)).is_err());
    }

    #[test]
    fn classify_k3_rows() {
        let c = classify(&anti(cp2(9), cp2(9)), 2).unwrap();
        assert_eq!(c.verdict, Verdict::K3);
        assert!(!c
            .certificate
            .iter()
            .any(|s| matches!(s, CertStep::Trade { .. })));

        let c = classify(&anti(cp2(4), cp2(14)), 2).unwrap();
        assert_eq!(c.verdict, Verdict::K3);
        let trades = c
            .certificate
            .iter()
            .filter(|s| matches!(s, CertStep::Trade { .. }))
            .count();
        assert_eq!(trades, 5);

        let c = classify(&anti(SurfaceFamily::S2xS2, cp2(17)), 2).unwrap();
        assert_eq!(c.verdict, Verdict::K3);
    }

    #[test]
    fn classify_enriques_rows() {
        for p in [
            anti(cp2(9), rt(1, 0)),
            anti(cp2(6), rt(1, 3)),
            anti(cp2(9), rtw(1)),
            anti(SurfaceFamily::S2xS2, rt(1, 8)),
            anti(rt(1, 9), cp2(0)),
        ] {
            let c = classify(&p, 2).unwrap();
            assert_eq!(c.verdict, Verdict::Enriques, "{p}");
        }
    }

    #[test]
    fn classify_bundle_rows() {
        let c = classify(&anti(rt(1, 0), rt(1, 0)), 2).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::TorusBundleFamilies(vec![
                TablePattern::IAnyZ00,
                TablePattern::MinusIEven00,
                TablePattern::IEven01,
                TablePattern::MinusIEven01,
            ])
        );
        assert!(c
            .certificate
            .iter()
            .any(|s| matches!(s, CertStep::Complements { j: ComplementKind::Y0, k: ComplementKind::Y0 })));

        let c = classify(&anti(rt(1, 0), rtw(1)), 2).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::TorusBundleFamilies(vec![
                TablePattern::MinusIOdd00,
                TablePattern::MinusIOdd01,
            ])
        );

        let c = classify(&anti(rtw(1), rtw(1)), 2).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::TorusBundleFamilies(vec![
                TablePattern::IAnyZ10,
                TablePattern::MinusIEven10,
                TablePattern::IOdd01,
            ])
        );
    }

    #[test]
    fn classify_not_kodaira_zero() {
        let c = classify(&anti(cp2(3), cp2(3)), 2).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::NotKodairaZero("c1^2 = 12 != 0".to_string())
        );

        // genus-one square-zero classes that are not anticanonical: the
        // zero class on S2xS2 on both sides
        let zero = Summand::from_coeffs(SurfaceFamily::S2xS2, vec![0, 0]).unwrap();
        let p = SumProblem::new(zero.clone(), zero);
        let c = classify(&p, 2).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::NotKodairaZero(
                "side 1: surface class is not the anticanonical class".to_string()
            )
        );
    }

    #[test]
    fn classify_hypothesis_failures() {
        // bundle section: smoothly trivial
        let section = Summand::from_coeffs(rt(1, 0), vec![1, 0]).unwrap();
        let anti_side = Summand::anticanonical(rt(1, 0)).unwrap();
        let c = classify(&SumProblem::new(section, anti_side), 2).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::HypothesisFailure("the sum is smoothly trivial".to_string())
        );

        // neither anticanonical nor minimal: relative minimality unknown
        let e1 = Summand::from_coeffs(cp2(1), vec![0, 1]).unwrap();
        let h = Summand::from_coeffs(cp2(0), vec![1]).unwrap();
        let c = classify(&SumProblem::new(e1, h), 2).unwrap();
        assert!(matches!(&c.verdict, Verdict::HypothesisFailure(m)
            if m.contains("relatively minimal")));

        // valid but genus zero
        let h = Summand::from_coeffs(cp2(0), vec![1]).unwrap();
        let anti_sq_minus1 = Summand::from_coeffs(rtw(1), vec![-1, 0]).unwrap();
        let c = classify(&SumProblem::new(h, anti_sq_minus1), 2).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::HypothesisFailure("the gluing surface must have positive genus".to_string())
        );

        // higher-genus ruled summand passes the numeric gates but is not an
        // S2-bundle over T2
        let p = anti(cp2(1), rt(2, 0));
        let c = classify(&p, 2).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::HypothesisFailure("both X1 and X2 must be S2-bundles over T2".to_string())
        );

        // fatal validation: genus mismatch
        let nine = Summand::anticanonical(cp2(9)).unwrap();
        let h9 = Summand::from_coeffs(cp2(9), vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        let c = classify(&SumProblem::new(nine, h9), 2).unwrap();
        assert!(matches!(&c.verdict, Verdict::HypothesisFailure(m)
            if m.contains("genus mismatch")));
    }

    #[test]
    fn classify_rejects_bad_bound() {
        assert_eq!(
            classify(&anti(cp2(9), cp2(9)), 0),
            Err(ClassifyError::InvalidBound(0))
        );
    }

    #[test]
    fn certificates_replay() {
        for p in [
            anti(cp2(4), cp2(14)),
            anti(cp2(9), rtw(1)),
            anti(rt(1, 0), rtw(1)),
            anti(cp2(3), cp2(3)),
        ] {
            let c = classify(&p, 2).unwrap();
            assert_eq!(replay(&p, &c), Ok(()), "{p}");
            let mut tampered = c.clone();
            tampered.verdict = Verdict::K3;
            if tampered != c {
                assert!(replay(&p, &tampered).is_err());
            }
        }
    }

    #[test]
    fn model_invariants_match_sums() {
        let p = anti(cp2(9), cp2(9));
        let c = classify(&p, 2).unwrap();
        let m = model_invariants(&c).unwrap();
        assert_eq!((m.chi, m.sigma, m.b1), (24, -16, 0));
        let s = p.sum_invariants().unwrap();
        assert_eq!((s.chi, s.sigma), (m.chi, m.sigma));

        let p = anti(cp2(9), rt(1, 0));
        let c = classify(&p, 2).unwrap();
        let m = model_invariants(&c).unwrap();
        assert_eq!((m.chi, m.sigma, m.b1), (12, -8, 0));
        let s = p.sum_invariants().unwrap();
        assert_eq!((s.chi, s.sigma), (m.chi, m.sigma));

        // two-pattern bundle verdicts name a finite set of models, not one
        let c = classify(&anti(rt(1, 0), rtw(1)), 2).unwrap();
        assert_eq!(
            model_invariants(&c),
            Err(ClassifyError::NonManifoldVerdict)
        );

        // a single-pattern verdict resolves through a representative tag
        let single = Classification {
            verdict: Verdict::TorusBundleFamilies(vec![TablePattern::MinusIOdd00]),
            certificate: vec![],
        };
        let m = model_invariants(&single).unwrap();
        assert_eq!((m.chi, m.sigma, m.b1), (0, 0, 2));

        let tag = FamilyTag::new(TablePattern::MinusIOdd00, 1).unwrap();
        let m = model_invariants_tag(&tag);
        assert_eq!((m.chi, m.sigma, m.b1), (0, 0, 2));
    }
}
