//! Fiber-sum problems: two summands glued along surfaces of equal genus and
//! opposite square.
//!
//! A [`Summand`] is a pair (family, class) where the class is the homology
//! class of the gluing surface; a [`SumProblem`] is two summands. The sum
//! hypotheses checked by [`SumProblem::validate`] are the homological ones:
//! both classes have a defined adjunction genus, the genera agree, and the
//! self-intersections are opposite (`F1^2 + F2^2 = 0`). Symplectic area
//! equality is *not* modeled: everything here computes diffeomorphism-type
//! data only.
//!
//! Numeric invariants of the glued manifold follow the normal-connected-sum
//! arithmetic `chi = chi1 + chi2 + 4g - 4`, `sigma = sigma1 + sigma2`,
//! `c1^2 = 2*chi + 3*sigma`.
//!
//! Blow-up trading ([`SumProblem::trade_blowup`]) moves one blow-up from one
//! summand to the other: blowing down the source away from its (anticanonical)
//! surface and blowing up the target on it. Both surface classes are reset to
//! the anticanonical class of the new family rather than transported
//! coefficient-by-coefficient — trading is only ever applied to anticanonical
//! pairs, where the image is again anticanonical. Repeated trading
//! ([`SumProblem::reduce_pair`]) normalizes rational pairs to
//! `{CP2#9, CP2#9}` and rational/ruled pairs to `{CP2#9, minimal ruled}`.
//!
//! Relative minimality (no (-1)-sphere in the complement of the surface) is
//! reported as three-valued logic: the anticanonical case is decided exactly
//! (any (-1)-class `E` has `F.E = 1`, so `E` cannot avoid `F`), minimal pairs
//! are trivially relatively minimal, and everything else is `Unknown` —
//! enumerating (-1)-classes in general is out of scope.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::homology::{H2Class, HomologyError, SurfaceFamily};
use crate::Trilean;

/// Errors from summand construction and blow-up trading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumError {
    /// An underlying lattice computation failed.
    Homology(HomologyError),
    /// The surface class belongs to a different family than the summand.
    ClassFamilyMismatch,
    /// Trading requires both surface classes to be anticanonical.
    NonAnticanonical,
    /// The trade source carries no blow-up.
    NothingToTrade,
    /// The pair cannot be reduced to a canonical configuration.
    InapplicableConfiguration(String),
}

impl fmt::Display for SumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumError::Homology(e) => write!(f, "{e}"),
            SumError::ClassFamilyMismatch => {
                write!(f, "surface class belongs to a different family")
            }
            SumError::NonAnticanonical => {
                write!(f, "trading requires both surface classes anticanonical")
            }
            SumError::NothingToTrade => write!(f, "source summand has no blow-up to trade"),
            SumError::InapplicableConfiguration(msg) => {
                write!(f, "configuration not reducible: {msg}")
            }
        }
    }
}

impl From<HomologyError> for SumError {
    fn from(e: HomologyError) -> Self {
        SumError::Homology(e)
    }
}

/// A single violation of the sum hypotheses, as collected by
/// [`SumProblem::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumViolation {
    /// The adjunction genus of one side's class is undefined.
    UndefinedGenus {
        /// Which summand (1 or 2).
        side: u8,
        /// The underlying adjunction failure.
        source: HomologyError,
    },
    /// The two surfaces have different genera.
    GenusMismatch {
        /// Genus on side 1.
        g1: i64,
        /// Genus on side 2.
        g2: i64,
    },
    /// The self-intersections are not opposite.
    SquareMismatch {
        /// `F1^2`.
        sq1: i64,
        /// `F2^2`.
        sq2: i64,
    },
}

impl fmt::Display for SumViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumViolation::UndefinedGenus { side, source } => {
                write!(f, "side {side}: {source}")
            }
            SumViolation::GenusMismatch { g1, g2 } => {
                write!(f, "genus mismatch: {g1} vs {g2}")
            }
            SumViolation::SquareMismatch { sq1, sq2 } => {
                write!(f, "squares not opposite: {sq1} and {sq2}")
            }
        }
    }
}

/// One side of a sum: a surface family together with the class of the
/// gluing surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    family: SurfaceFamily,
    class: H2Class,
}

impl Summand {
    /// Builds a summand; the class must live in `family`'s lattice.
    pub fn new(family: SurfaceFamily, class: H2Class) -> Result<Self, SumError> {
        family.validated()?;
        if *class.family() != family {
            return Err(SumError::ClassFamilyMismatch);
        }
        Ok(Summand { family, class })
    }

    /// Builds a summand directly from basis coefficients.
    pub fn from_coeffs(family: SurfaceFamily, coeffs: Vec<i64>) -> Result<Self, SumError> {
        let class = H2Class::new(family, coeffs)?;
        Ok(Summand { family, class })
    }

    /// Builds the summand whose surface class is the family's anticanonical
    /// class.
    pub fn anticanonical(family: SurfaceFamily) -> Result<Self, SumError> {
        let class = family.anticanonical()?;
        Ok(Summand { family, class })
    }

    /// The surface family.
    pub fn family(&self) -> &SurfaceFamily {
        &self.family
    }

    /// The gluing-surface class.
    pub fn class(&self) -> &H2Class {
        &self.class
    }

    /// Whether the surface class equals the family's anticanonical class.
    pub fn is_anticanonical(&self) -> bool {
        match self.family.anticanonical() {
            Ok(anti) => anti == self.class,
            Err(_) => false,
        }
    }

    fn fiber_pairings(&self) -> Vec<i64> {
        // Intersection numbers of the class with each ruling-fiber class of
        // the underlying S^2-bundle; empty when the family is not a bundle
        // blow-up.
        let fibers: Vec<H2Class> = match self.family {
            SurfaceFamily::CP2Blowup(_) => Vec::new(),
            SurfaceFamily::S2xS2 => {
                let a = H2Class::new(self.family, alloc::vec![1, 0]).expect("valid basis class");
                let b = H2Class::new(self.family, alloc::vec![0, 1]).expect("valid basis class");
                alloc::vec![a, b]
            }
            SurfaceFamily::RuledTrivial { blowups, .. } => {
                let n = 2 + blowups as usize;
                let mut c = alloc::vec![0i64; n];
                c[1] = 1;
                alloc::vec![H2Class::new(self.family, c).expect("valid basis class")]
            }
            SurfaceFamily::RuledTwisted { .. } => {
                alloc::vec![H2Class::new(self.family, alloc::vec![0, 1]).expect("valid basis class")]
            }
        };
        fibers
            .iter()
            .map(|f| self.class.intersect(f).expect("same family"))
            .collect()
    }

    /// Whether the summand is an unblown-up `S^2`-bundle with the class a
    /// section (it meets some ruling fiber exactly once).
    pub fn is_bundle_section(&self) -> bool {
        let is_bundle = matches!(
            self.family,
            SurfaceFamily::S2xS2
                | SurfaceFamily::RuledTrivial { blowups: 0, .. }
                | SurfaceFamily::RuledTwisted { .. }
        );
        is_bundle && self.fiber_pairings().iter().any(|n| *n == 1)
    }

    /// Whether the class avoids every exceptional class and projects to a
    /// section class of the underlying `S^2`-bundle.
    pub fn is_blowup_of_section(&self) -> bool {
        match self.family {
            SurfaceFamily::CP2Blowup(_) => false,
            SurfaceFamily::S2xS2 | SurfaceFamily::RuledTwisted { .. } => self.is_bundle_section(),
            SurfaceFamily::RuledTrivial { .. } => {
                self.class.coeffs()[2..].iter().all(|c| *c == 0)
                    && self.fiber_pairings() == [1]
            }
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.family, self.class)
    }
}

/// Which summand gives up a blow-up in a trade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TradeDirection {
    /// Side 1 is the source (blown down), side 2 the target (blown up).
    OneToTwo,
    /// Side 2 is the source, side 1 the target.
    TwoToOne,
}

impl fmt::Display for TradeDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TradeDirection::OneToTwo => write!(f, "1->2"),
            TradeDirection::TwoToOne => write!(f, "2->1"),
        }
    }
}

/// Numeric invariants of the glued manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumInvariants {
    /// Euler characteristic `chi1 + chi2 + 4g - 4`.
    pub chi: i64,
    /// Signature `sigma1 + sigma2`.
    pub sigma: i64,
    /// `c1^2 = 2*chi + 3*sigma`.
    pub c1sq: i64,
    /// Common genus of the gluing surfaces.
    pub genus: i64,
}

/// A sum problem: two summands to be glued along their surfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumProblem {
    /// First summand.
    pub x1: Summand,
    /// Second summand.
    pub x2: Summand,
}

impl SumProblem {
    /// Pairs two summands. Hypotheses are checked by [`validate`], not here.
    ///
    /// [`validate`]: SumProblem::validate
    pub fn new(x1: Summand, x2: Summand) -> Self {
        SumProblem { x1, x2 }
    }

    /// Builds the problem whose surface classes are both anticanonical.
    pub fn anticanonical(f1: SurfaceFamily, f2: SurfaceFamily) -> Result<Self, SumError> {
        Ok(SumProblem::new(
            Summand::anticanonical(f1)?,
            Summand::anticanonical(f2)?,
        ))
    }

    /// Checks the sum hypotheses, collecting every violation: defined genus
    /// on both sides, equal genera, opposite squares.
    pub fn validate(&self) -> Result<(), Vec<SumViolation>> {
        let mut violations = Vec::new();
        let g1 = self.x1.class.adjunction_genus();
        let g2 = self.x2.class.adjunction_genus();
        if let Err(e) = &g1 {
            violations.push(SumViolation::UndefinedGenus {
                side: 1,
                source: e.clone(),
            });
        }
        if let Err(e) = &g2 {
            violations.push(SumViolation::UndefinedGenus {
                side: 2,
                source: e.clone(),
            });
        }
        if let (Ok(g1), Ok(g2)) = (&g1, &g2) {
            if g1 != g2 {
                violations.push(SumViolation::GenusMismatch { g1: *g1, g2: *g2 });
            }
        }
        let sq1 = self.x1.class.self_intersection();
        let sq2 = self.x2.class.self_intersection();
        if sq1 + sq2 != 0 {
            violations.push(SumViolation::SquareMismatch { sq1, sq2 });
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// Invariants of the glued manifold; requires [`validate`] to pass.
    ///
    /// [`validate`]: SumProblem::validate
    pub fn sum_invariants(&self) -> Result<SumInvariants, Vec<SumViolation>> {
        self.validate()?;
        let g = self
            .x1
            .class
            .adjunction_genus()
            .expect("validate guarantees defined genus");
        let chi1 = self.x1.family.euler().expect("validated family");
        let chi2 = self.x2.family.euler().expect("validated family");
        let sigma1 = self.x1.family.signature().expect("validated family");
        let sigma2 = self.x2.family.signature().expect("validated family");
        let chi = chi1 + chi2 + 4 * g - 4;
        let sigma = sigma1 + sigma2;
        Ok(SumInvariants {
            chi,
            sigma,
            c1sq: 2 * chi + 3 * sigma,
            genus: g,
        })
    }

    /// Whether the sum is smoothly trivial: some summand is an `S^2`-bundle
    /// whose surface is a section.
    pub fn is_smoothly_trivial(&self) -> bool {
        self.x1.is_bundle_section() || self.x2.is_bundle_section()
    }

    /// Whether some summand is a blow-up of an (`S^2`-bundle, section) pair:
    /// the surface avoids every exceptional class and projects to a section.
    pub fn is_blowup_type(&self) -> bool {
        self.x1.is_blowup_of_section() || self.x2.is_blowup_of_section()
    }

    /// Relative minimality (no (-1)-sphere avoiding the surfaces), decided
    /// three-valued: `True` when both classes are anticanonical (every
    /// (-1)-class meets an anticanonical class once) or both families are
    /// minimal; `Unknown` otherwise.
    pub fn is_relatively_minimal(&self) -> Trilean {
        if self.x1.is_anticanonical() && self.x2.is_anticanonical() {
            return Trilean::True;
        }
        let m1 = self.x1.family.is_minimal().expect("validated family");
        let m2 = self.x2.family.is_minimal().expect("validated family");
        if m1 && m2 {
            Trilean::True
        } else {
            Trilean::Unknown
        }
    }

    /// Moves one blow-up from the source side to the target side, resetting
    /// both surface classes to the anticanonical class of the new families.
    /// Requires both classes anticanonical and a blow-up on the source.
    pub fn trade_blowup(&self, direction: TradeDirection) -> Result<SumProblem, SumError> {
        if !self.x1.is_anticanonical() || !self.x2.is_anticanonical() {
            return Err(SumError::NonAnticanonical);
        }
        let (source, target) = match direction {
            TradeDirection::OneToTwo => (&self.x1, &self.x2),
            TradeDirection::TwoToOne => (&self.x2, &self.x1),
        };
        let new_source = match source.family.blow_down() {
            Ok(fam) => fam,
            Err(HomologyError::MinimalFamily) => return Err(SumError::NothingToTrade),
            Err(e) => return Err(SumError::Homology(e)),
        };
        let new_target = target.family.blow_up()?;
        let (f1, f2) = match direction {
            TradeDirection::OneToTwo => (new_source, new_target),
            TradeDirection::TwoToOne => (new_target, new_source),
        };
        SumProblem::anticanonical(f1, f2)
    }

    /// [`reduce_pair`] with the trade sequence that was applied.
    ///
    /// [`reduce_pair`]: SumProblem::reduce_pair
    pub fn reduce_pair_traced(&self) -> Result<(SumProblem, Vec<TradeDirection>), SumError> {
        if !self.x1.is_anticanonical() || !self.x2.is_anticanonical() {
            return Err(SumError::NonAnticanonical);
        }
        let mut current = self.clone();
        let mut trades = Vec::new();
        let trade = |p: &SumProblem, dir, trades: &mut Vec<TradeDirection>| {
            let next = p.trade_blowup(dir)?;
            trades.push(dir);
            Ok::<SumProblem, SumError>(next)
        };

        let rational1 = current.x1.family.is_rational();
        let rational2 = current.x2.family.is_rational();
        match (rational1, rational2) {
            (true, true) => {
                // Relabel any S2xS2 side by blowing it up (and the other side
                // down), turning it into CP2Blowup(2).
                if current.x1.family == SurfaceFamily::S2xS2 {
                    if current.x2.family.blowup_count() == 0 {
                        return Err(SumError::InapplicableConfiguration(
                            "cannot relabel S2xS2: partner has no blow-up to trade".to_string(),
                        ));
                    }
                    current = trade(&current, TradeDirection::TwoToOne, &mut trades)?;
                }
                if current.x2.family == SurfaceFamily::S2xS2 {
                    if current.x1.family.blowup_count() == 0 {
                        return Err(SumError::InapplicableConfiguration(
                            "cannot relabel S2xS2: partner has no blow-up to trade".to_string(),
                        ));
                    }
                    current = trade(&current, TradeDirection::OneToTwo, &mut trades)?;
                }
                let k1 = current.x1.family.blowup_count();
                let k2 = current.x2.family.blowup_count();
                if k1 + k2 != 18 {
                    return Err(SumError::InapplicableConfiguration(alloc::format!(
                        "rational pair has total blow-up count {}, expected 18",
                        k1 + k2
                    )));
                }
                while current.x1.family.blowup_count() != 9 {
                    let dir = if current.x1.family.blowup_count() < 9 {
                        TradeDirection::TwoToOne
                    } else {
                        TradeDirection::OneToTwo
                    };
                    current = trade(&current, dir, &mut trades)?;
                }
            }
            (true, false) | (false, true) => {
                let ruled_is_2 = rational1;
                // Move every blow-up of the ruled side onto the rational side.
                loop {
                    let ruled = if ruled_is_2 { &current.x2 } else { &current.x1 };
                    if ruled.family.blowup_count() == 0 {
                        break;
                    }
                    let dir = if ruled_is_2 {
                        TradeDirection::TwoToOne
                    } else {
                        TradeDirection::OneToTwo
                    };
                    current = trade(&current, dir, &mut trades)?;
                }
                let rational = if ruled_is_2 { &current.x1 } else { &current.x2 };
                if rational.family != SurfaceFamily::CP2Blowup(9) {
                    return Err(SumError::InapplicableConfiguration(alloc::format!(
                        "rational side reduces to {}, expected CP2#9",
                        rational.family
                    )));
                }
            }
            (false, false) => {
                let k1 = current.x1.family.blowup_count();
                let k2 = current.x2.family.blowup_count();
                if k1 != 0 || k2 != 0 {
                    return Err(SumError::InapplicableConfiguration(
                        "blow-ups cannot be traded between two ruled summands".to_string(),
                    ));
                }
            }
        }
        Ok((current, trades))
    }

    /// Trades blow-ups toward the canonical pair: rational+rational to
    /// `{CP2#9, CP2#9}`, rational+ruled to `{CP2#9, minimal ruled}`,
    /// ruled+ruled unchanged (both already minimal) or an error.
    pub fn reduce_pair(&self) -> Result<SumProblem, SumError> {
        Ok(self.reduce_pair_traced()?.0)
    }
}

impl fmt::Display for SumProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.x1, self.x2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anti_pair(f1: SurfaceFamily, f2: SurfaceFamily) -> SumProblem {
        SumProblem::anticanonical(f1, f2).unwrap()
    }

    fn e1() -> SurfaceFamily {
        SurfaceFamily::e1()
    }

    fn rt(genus: u32, blowups: u32) -> SurfaceFamily {
        SurfaceFamily::RuledTrivial { genus, blowups }
    }

    #[test]
    fn validate_examples() {
        assert!(anti_pair(e1(), e1()).validate().is_ok());

        let p = SumProblem::new(
            Summand::from_coeffs(SurfaceFamily::S2xS2, vec![2, 2]).unwrap(),
            Summand::anticanonical(SurfaceFamily::CP2Blowup(17)).unwrap(),
        );
        assert_eq!(p.x1.class().self_intersection(), 8);
        assert_eq!(p.x2.class().self_intersection(), -8);
        assert!(p.validate().is_ok());

        let p = SumProblem::new(
            Summand::from_coeffs(SurfaceFamily::CP2Blowup(0), vec![1]).unwrap(),
            Summand::anticanonical(e1()).unwrap(),
        );
        let violations = p.validate().unwrap_err();
        assert!(violations.contains(&SumViolation::GenusMismatch { g1: 0, g2: 1 }));
    }

    #[test]
    fn validate_collects_everything() {
        // side 1 has undefined genus (2E1 gives genus -2) and the squares
        // (-4 and 1) are not opposite: both violations must be reported.
        let p = SumProblem::new(
            Summand::from_coeffs(SurfaceFamily::CP2Blowup(1), vec![0, 2]).unwrap(),
            Summand::from_coeffs(SurfaceFamily::CP2Blowup(0), vec![1]).unwrap(),
        );
        let violations = p.validate().unwrap_err();
        assert_eq!(violations.len(), 2);
        assert!(matches!(
            violations[0],
            SumViolation::UndefinedGenus { side: 1, .. }
        ));
        assert_eq!(
            violations[1],
            SumViolation::SquareMismatch { sq1: -4, sq2: 1 }
        );
    }

    #[test]
    fn summand_constructor_is_checked() {
        let class = H2Class::new(SurfaceFamily::S2xS2, vec![1, 0]).unwrap();
        assert_eq!(
            Summand::new(SurfaceFamily::CP2Blowup(1), class),
            Err(SumError::ClassFamilyMismatch)
        );
        assert!(matches!(
            Summand::anticanonical(SurfaceFamily::RuledTwisted { genus: 0 }),
            Err(SumError::Homology(HomologyError::InvalidFamily(_)))
        ));
    }

    #[test]
    fn sum_invariants_examples() {
        let inv = anti_pair(e1(), e1()).sum_invariants().unwrap();
        assert_eq!((inv.chi, inv.sigma, inv.c1sq, inv.genus), (24, -16, 0, 1));

        let inv = anti_pair(e1(), rt(1, 0)).sum_invariants().unwrap();
        assert_eq!((inv.chi, inv.sigma, inv.c1sq), (12, -8, 0));

        let inv = anti_pair(rt(1, 0), rt(1, 0)).sum_invariants().unwrap();
        assert_eq!((inv.chi, inv.sigma, inv.c1sq), (0, 0, 0));
    }

    #[test]
    fn smoothly_trivial_examples() {
        let section = Summand::from_coeffs(rt(1, 0), vec![1, 0]).unwrap();
        let partner = Summand::anticanonical(rt(1, 0)).unwrap();
        assert!(SumProblem::new(section, partner.clone()).is_smoothly_trivial());

        let bisection = Summand::from_coeffs(rt(1, 0), vec![2, 0]).unwrap();
        assert!(!SumProblem::new(bisection, partner).is_smoothly_trivial());

        assert!(!anti_pair(e1(), e1()).is_smoothly_trivial());

        // both rulings of S2xS2 count
        let sec_a = Summand::from_coeffs(SurfaceFamily::S2xS2, vec![1, 3]).unwrap();
        let sec_b = Summand::from_coeffs(SurfaceFamily::S2xS2, vec![3, 1]).unwrap();
        let other = Summand::anticanonical(e1()).unwrap();
        assert!(SumProblem::new(sec_a, other.clone()).is_smoothly_trivial());
        assert!(SumProblem::new(sec_b, other).is_smoothly_trivial());
    }

    #[test]
    fn blowup_type_examples() {
        let off_section = Summand::from_coeffs(rt(1, 3), vec![1, 0, 0, 0, 0]).unwrap();
        let partner = Summand::anticanonical(rt(1, 0)).unwrap();
        assert!(SumProblem::new(off_section, partner.clone()).is_blowup_type());

        let meets_e1 = Summand::from_coeffs(rt(1, 3), vec![1, 0, -1, 0, 0]).unwrap();
        assert!(!SumProblem::new(meets_e1, partner).is_blowup_type());

        assert!(!anti_pair(e1(), e1()).is_blowup_type());
    }

    #[test]
    fn relatively_minimal_examples() {
        assert_eq!(anti_pair(e1(), e1()).is_relatively_minimal(), Trilean::True);
        assert_eq!(
            anti_pair(rt(1, 0), SurfaceFamily::RuledTwisted { genus: 1 }).is_relatively_minimal(),
            Trilean::True
        );
        // minimal families with non-anticanonical classes are still True
        let p = SumProblem::new(
            Summand::from_coeffs(SurfaceFamily::S2xS2, vec![1, 2]).unwrap(),
            Summand::from_coeffs(SurfaceFamily::S2xS2, vec![2, 1]).unwrap(),
        );
        assert_eq!(p.is_relatively_minimal(), Trilean::True);
        // non-minimal, non-anticanonical: unknown
        let p = SumProblem::new(
            Summand::from_coeffs(SurfaceFamily::CP2Blowup(3), vec![1, 0, 0, 0]).unwrap(),
            Summand::anticanonical(e1()).unwrap(),
        );
        assert_eq!(p.is_relatively_minimal(), Trilean::Unknown);
    }

    #[test]
    fn trade_examples() {
        let p = anti_pair(SurfaceFamily::CP2Blowup(4), SurfaceFamily::CP2Blowup(14));
        let q = p.trade_blowup(TradeDirection::TwoToOne).unwrap();
        assert_eq!(*q.x1.family(), SurfaceFamily::CP2Blowup(5));
        assert_eq!(*q.x2.family(), SurfaceFamily::CP2Blowup(13));
        assert!(q.x1.is_anticanonical() && q.x2.is_anticanonical());

        let p = anti_pair(SurfaceFamily::S2xS2, SurfaceFamily::CP2Blowup(17));
        let q = p.trade_blowup(TradeDirection::TwoToOne).unwrap();
        assert_eq!(*q.x1.family(), SurfaceFamily::CP2Blowup(2));
        assert_eq!(*q.x2.family(), SurfaceFamily::CP2Blowup(16));

        let p = anti_pair(e1(), SurfaceFamily::RuledTwisted { genus: 1 });
        assert_eq!(
            p.trade_blowup(TradeDirection::TwoToOne),
            Err(SumError::NothingToTrade)
        );

        let p = SumProblem::new(
            Summand::from_coeffs(SurfaceFamily::CP2Blowup(4), vec![1, 0, 0, 0, 0]).unwrap(),
            Summand::anticanonical(SurfaceFamily::CP2Blowup(14)).unwrap(),
        );
        assert_eq!(
            p.trade_blowup(TradeDirection::OneToTwo),
            Err(SumError::NonAnticanonical)
        );
    }

    #[test]
    fn trade_preserves_invariants() {
        for k in 1..=18u32 {
            let p = anti_pair(
                SurfaceFamily::CP2Blowup(k),
                SurfaceFamily::CP2Blowup(18 - k),
            );
            let before = p.sum_invariants().unwrap();
            let after = p
                .trade_blowup(TradeDirection::OneToTwo)
                .unwrap()
                .sum_invariants()
                .unwrap();
            assert_eq!(before, after);
        }
        // and across the S2xS2 relabeling
        let p = anti_pair(SurfaceFamily::S2xS2, SurfaceFamily::CP2Blowup(17));
        let before = p.sum_invariants().unwrap();
        let after = p
            .trade_blowup(TradeDirection::TwoToOne)
            .unwrap()
            .sum_invariants()
            .unwrap();
        assert_eq!(before, after);
    }

    #[test]
    fn reduce_examples() {
        let p = anti_pair(SurfaceFamily::CP2Blowup(4), SurfaceFamily::CP2Blowup(14));
        let (q, trades) = p.reduce_pair_traced().unwrap();
        assert_eq!(*q.x1.family(), SurfaceFamily::CP2Blowup(9));
        assert_eq!(*q.x2.family(), SurfaceFamily::CP2Blowup(9));
        assert_eq!(trades.len(), 5);
        assert!(trades.iter().all(|d| *d == TradeDirection::TwoToOne));

        let p = anti_pair(SurfaceFamily::CP2Blowup(6), rt(1, 3));
        let q = p.reduce_pair().unwrap();
        assert_eq!(*q.x1.family(), SurfaceFamily::CP2Blowup(9));
        assert_eq!(*q.x2.family(), rt(1, 0));

        let p = anti_pair(rt(1, 0), SurfaceFamily::RuledTwisted { genus: 1 });
        let (q, trades) = p.reduce_pair_traced().unwrap();
        assert_eq!(q, p);
        assert!(trades.is_empty());

        // S2xS2 relabeling happens first in rational pairs
        let p = anti_pair(SurfaceFamily::S2xS2, SurfaceFamily::CP2Blowup(17));
        let q = p.reduce_pair().unwrap();
        assert_eq!(*q.x1.family(), SurfaceFamily::CP2Blowup(9));
        assert_eq!(*q.x2.family(), SurfaceFamily::CP2Blowup(9));
    }

    #[test]
    fn reduce_errors() {
        let p = anti_pair(SurfaceFamily::CP2Blowup(3), SurfaceFamily::CP2Blowup(3));
        assert!(matches!(
            p.reduce_pair(),
            Err(SumError::InapplicableConfiguration(_))
        ));

        let p = anti_pair(SurfaceFamily::S2xS2, SurfaceFamily::S2xS2);
        assert!(matches!(
            p.reduce_pair(),
            Err(SumError::InapplicableConfiguration(_))
        ));

        let p = anti_pair(rt(1, 1), rt(1, 0));
        assert!(matches!(
            p.reduce_pair(),
            Err(SumError::InapplicableConfiguration(_))
        ));

        let p = anti_pair(SurfaceFamily::S2xS2, rt(1, 0));
        assert!(matches!(
            p.reduce_pair(),
            Err(SumError::InapplicableConfiguration(_))
        ));
    }

    #[test]
    fn reduce_is_idempotent() {
        let pairs = [
            anti_pair(SurfaceFamily::CP2Blowup(0), SurfaceFamily::CP2Blowup(18)),
            anti_pair(SurfaceFamily::CP2Blowup(13), SurfaceFamily::CP2Blowup(5)),
            anti_pair(SurfaceFamily::S2xS2, SurfaceFamily::CP2Blowup(17)),
            anti_pair(SurfaceFamily::CP2Blowup(1), rt(1, 8)),
            anti_pair(rt(1, 4), SurfaceFamily::CP2Blowup(5)),
            anti_pair(rt(1, 0), rt(1, 0)),
        ];
        for p in pairs {
            let (q, trades) = p.reduce_pair_traced().unwrap();
            assert!(trades.len() <= 18);
            let (q2, trades2) = q.reduce_pair_traced().unwrap();
            assert_eq!(q, q2);
            assert!(trades2.is_empty());
            // validity is preserved through the reduction
            assert!(p.validate().is_err() || q.validate().is_ok());
        }
    }

    #[test]
    fn traded_problems_stay_valid() {
        let p = anti_pair(SurfaceFamily::CP2Blowup(4), SurfaceFamily::CP2Blowup(14));
        assert!(p.validate().is_ok());
        let mut current = p;
        for _ in 0..4 {
            current = current.trade_blowup(TradeDirection::TwoToOne).unwrap();
            assert!(current.validate().is_ok());
        }
    }

    #[test]
    fn display_formats() {
        let p = anti_pair(SurfaceFamily::CP2Blowup(2), rt(1, 0));
        assert_eq!(p.to_string(), "{(CP2#2, 3H - E1 - E2), (S2xT2, 2s)}");
        assert_eq!(TradeDirection::OneToTwo.to_string(), "1->2");
        assert_eq!(TradeDirection::TwoToOne.to_string(), "2->1");
    }
}
