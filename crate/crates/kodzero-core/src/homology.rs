//! Second-homology lattices of rational and ruled surfaces.
//!
//! Four families of closed 4-manifolds are modeled, each with a fixed ordered
//! basis of `H_2` and its intersection form:
//!
//! * [`SurfaceFamily::CP2Blowup`]`(k)` — the projective plane blown up at `k`
//!   points, basis `H, E1, ..., Ek`, form `diag(1, -1, ..., -1)`;
//! * [`SurfaceFamily::S2xS2`] — the product of two spheres, basis
//!   `a = [S^2 x pt]`, `b = [pt x S^2]`, hyperbolic form `[[0,1],[1,0]]`;
//! * [`SurfaceFamily::RuledTrivial`]`(h, k)` — the trivial `S^2`-bundle over a
//!   genus-`h` surface blown up `k` times, basis `s, f, e1, ..., ek` with
//!   `s^2 = f^2 = 0`, `s.f = 1`, `ei^2 = -1`;
//! * [`SurfaceFamily::RuledTwisted`]`(h)` — the twisted `S^2`-bundle over a
//!   genus-`h` surface, basis `(s-, f)` with Gram `[[-1,1],[1,0]]`. The
//!   positive section is the derived class `s+ = s- + f`.
//!
//! On top of the forms the module computes anticanonical classes, the numeric
//! invariants `chi`, `sigma`, `c1^2 = 2*chi + 3*sigma`, genus via the
//! adjunction formula `2g - 2 = F^2 + kappa.F`, and the blow-up/blow-down
//! moves between families (blowing up `S^2 x S^2` relabels to `CP2Blowup(2)`
//! under the standard basis change rather than silently coercing classes).
//!
//! Genus is computed only through adjunction; whether a class is represented
//! by an embedded symplectic surface is an input assumption, not checked.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Errors from lattice and invariant computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    /// A ruled family was given base genus 0 (the base must have genus >= 1).
    InvalidFamily(String),
    /// Two classes from different families were paired.
    FamilyMismatch,
    /// A coefficient vector has the wrong length for its family's basis.
    WrongCoeffLength {
        /// Basis rank of the family.
        expected: usize,
        /// Length supplied.
        got: usize,
    },
    /// The adjunction right-hand side `F^2 + kappa.F` is odd.
    OddAdjunction(i64),
    /// The adjunction genus would be negative (value recorded).
    NegativeGenus(i64),
    /// Blow-down was requested on a minimal family.
    MinimalFamily,
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::InvalidFamily(msg) => write!(f, "invalid family: {msg}"),
            HomologyError::FamilyMismatch => {
                write!(f, "classes belong to different families")
            }
            HomologyError::WrongCoeffLength { expected, got } => write!(
                f,
                "coefficient vector has length {got}, basis has rank {expected}"
            ),
            HomologyError::OddAdjunction(rhs) => {
                write!(f, "adjunction genus undefined: right-hand side {rhs} is odd")
            }
            HomologyError::NegativeGenus(g) => {
                write!(f, "adjunction genus undefined: computed genus {g} < 0")
            }
            HomologyError::MinimalFamily => {
                write!(f, "cannot blow down a minimal family")
            }
        }
    }
}

/// One of the four surface families, with its blow-up count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SurfaceFamily {
    /// `CP^2 # k CP^2-bar`: the plane blown up `k >= 0` times.
    CP2Blowup(u32),
    /// `S^2 x S^2`.
    S2xS2,
    /// The trivial `S^2`-bundle over a genus-`h >= 1` surface, blown up
    /// `k >= 0` times.
    RuledTrivial {
        /// Base genus, at least 1.
        genus: u32,
        /// Number of blow-ups.
        blowups: u32,
    },
    /// The twisted `S^2`-bundle over a genus-`h >= 1` surface.
    RuledTwisted {
        /// Base genus, at least 1.
        genus: u32,
    },
}

/// A basis-labelled integer Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    /// Names of the ordered basis classes.
    pub basis_labels: Vec<String>,
    /// Symmetric Gram matrix in that basis (unimodular for every family
    /// here).
    pub gram: Vec<Vec<i64>>,
}

impl SurfaceFamily {
    /// The rational elliptic surface `E(1) = CP2Blowup(9)`.
    pub const fn e1() -> SurfaceFamily {
        SurfaceFamily::CP2Blowup(9)
    }

    /// Checks the family parameters (ruled bases need genus >= 1).
    pub fn validated(&self) -> Result<(), HomologyError> {
        match self {
            SurfaceFamily::RuledTrivial { genus: 0, .. }
            | SurfaceFamily::RuledTwisted { genus: 0 } => Err(HomologyError::InvalidFamily(
                "ruled families need base genus >= 1".to_string(),
            )),
            _ => Ok(()),
        }
    }

    /// Rank of the family's `H_2` basis.
    pub fn rank(&self) -> Result<usize, HomologyError> {
        self.validated()?;
        Ok(match self {
            SurfaceFamily::CP2Blowup(k) => 1 + *k as usize,
            SurfaceFamily::S2xS2 => 2,
            SurfaceFamily::RuledTrivial { blowups, .. } => 2 + *blowups as usize,
            SurfaceFamily::RuledTwisted { .. } => 2,
        })
    }

    /// Ordered basis labels.
    pub fn basis_labels(&self) -> Result<Vec<String>, HomologyError> {
        self.validated()?;
        Ok(match self {
            SurfaceFamily::CP2Blowup(k) => {
                let mut v = alloc::vec!["H".to_string()];
                v.extend((1..=*k).map(|i| format!("E{i}")));
                v
            }
            SurfaceFamily::S2xS2 => alloc::vec!["a".to_string(), "b".to_string()],
            SurfaceFamily::RuledTrivial { blowups, .. } => {
                let mut v = alloc::vec!["s".to_string(), "f".to_string()];
                v.extend((1..=*blowups).map(|i| format!("e{i}")));
                v
            }
            SurfaceFamily::RuledTwisted { .. } => {
                alloc::vec!["s-".to_string(), "f".to_string()]
            }
        })
    }

    /// The Gram matrix of the intersection form in the family basis.
    pub fn gram(&self) -> Result<Lattice, HomologyError> {
        let n = self.rank()?;
        let mut g = alloc::vec![alloc::vec![0i64; n]; n];
        match self {
            SurfaceFamily::CP2Blowup(_) => {
                g[0][0] = 1;
                for (i, row) in g.iter_mut().enumerate().skip(1) {
                    row[i] = -1;
                }
            }
            SurfaceFamily::S2xS2 => {
                g[0][1] = 1;
                g[1][0] = 1;
            }
            SurfaceFamily::RuledTrivial { .. } => {
                g[0][1] = 1;
                g[1][0] = 1;
                for (i, row) in g.iter_mut().enumerate().skip(2) {
                    row[i] = -1;
                }
            }
            SurfaceFamily::RuledTwisted { .. } => {
                g[0][0] = -1;
                g[0][1] = 1;
                g[1][0] = 1;
            }
        }
        Ok(Lattice {
            basis_labels: self.basis_labels()?,
            gram: g,
        })
    }

    /// The anticanonical class `-PD(kappa)` in the family basis.
    pub fn anticanonical(&self) -> Result<H2Class, HomologyError> {
        self.validated()?;
        let coeffs = match self {
            SurfaceFamily::CP2Blowup(k) => {
                let mut v = alloc::vec![3i64];
                v.extend(core::iter::repeat(-1).take(*k as usize));
                v
            }
            SurfaceFamily::S2xS2 => alloc::vec![2, 2],
            SurfaceFamily::RuledTrivial { genus, blowups } => {
                let h = i64::from(*genus);
                let mut v = alloc::vec![2, -(2 * h - 2)];
                v.extend(core::iter::repeat(-1).take(*blowups as usize));
                v
            }
            SurfaceFamily::RuledTwisted { genus } => {
                let h = i64::from(*genus);
                // -(2h-3)[s+] + (2h-1)[s-] rewritten via s+ = s- + f.
                alloc::vec![2, -(2 * h - 3)]
            }
        };
        H2Class::new(*self, coeffs)
    }

    /// Euler characteristic.
    pub fn euler(&self) -> Result<i64, HomologyError> {
        self.validated()?;
        Ok(match self {
            SurfaceFamily::CP2Blowup(k) => 3 + i64::from(*k),
            SurfaceFamily::S2xS2 => 4,
            SurfaceFamily::RuledTrivial { genus, blowups } => {
                4 - 4 * i64::from(*genus) + i64::from(*blowups)
            }
            SurfaceFamily::RuledTwisted { genus } => 4 - 4 * i64::from(*genus),
        })
    }

    /// Signature of the intersection form.
    pub fn signature(&self) -> Result<i64, HomologyError> {
        self.validated()?;
        Ok(match self {
            SurfaceFamily::CP2Blowup(k) => 1 - i64::from(*k),
            SurfaceFamily::S2xS2 => 0,
            SurfaceFamily::RuledTrivial { blowups, .. } => -i64::from(*blowups),
            SurfaceFamily::RuledTwisted { .. } => 0,
        })
    }

    /// `c1^2 = 2*chi + 3*sigma`.
    pub fn c1sq(&self) -> Result<i64, HomologyError> {
        Ok(2 * self.euler()? + 3 * self.signature()?)
    }

    /// Blows up one point. `S^2 x S^2` relabels to `CP2Blowup(2)` and the
    /// twisted ruled surface to its trivial counterpart with one blow-up
    /// (the standard diffeomorphisms of the one-point blow-ups).
    pub fn blow_up(&self) -> Result<SurfaceFamily, HomologyError> {
        self.validated()?;
        Ok(match self {
            SurfaceFamily::CP2Blowup(k) => SurfaceFamily::CP2Blowup(k + 1),
            SurfaceFamily::S2xS2 => SurfaceFamily::CP2Blowup(2),
            SurfaceFamily::RuledTrivial { genus, blowups } => SurfaceFamily::RuledTrivial {
                genus: *genus,
                blowups: blowups + 1,
            },
            SurfaceFamily::RuledTwisted { genus } => SurfaceFamily::RuledTrivial {
                genus: *genus,
                blowups: 1,
            },
        })
    }

    /// Removes one blow-up; errors on minimal families.
    pub fn blow_down(&self) -> Result<SurfaceFamily, HomologyError> {
        self.validated()?;
        match self {
            SurfaceFamily::CP2Blowup(k) if *k >= 1 => Ok(SurfaceFamily::CP2Blowup(k - 1)),
            SurfaceFamily::RuledTrivial { genus, blowups } if *blowups >= 1 => {
                Ok(SurfaceFamily::RuledTrivial {
                    genus: *genus,
                    blowups: blowups - 1,
                })
            }
            _ => Err(HomologyError::MinimalFamily),
        }
    }

    /// Whether the family is minimal (no blow-ups to remove).
    pub fn is_minimal(&self) -> Result<bool, HomologyError> {
        self.validated()?;
        Ok(match self {
            SurfaceFamily::CP2Blowup(k) => *k == 0,
            SurfaceFamily::S2xS2 => true,
            SurfaceFamily::RuledTrivial { blowups, .. } => *blowups == 0,
            SurfaceFamily::RuledTwisted { .. } => true,
        })
    }

    /// Whether the family is rational (a blown-up plane or `S^2 x S^2`).
    pub fn is_rational(&self) -> bool {
        matches!(
            self,
            SurfaceFamily::CP2Blowup(_) | SurfaceFamily::S2xS2
        )
    }

    /// Base genus for the ruled families, `None` for the rational ones.
    pub fn ruled_genus(&self) -> Option<u32> {
        match self {
            SurfaceFamily::RuledTrivial { genus, .. } | SurfaceFamily::RuledTwisted { genus } => {
                Some(*genus)
            }
            _ => None,
        }
    }

    /// Number of blow-ups carried by the family.
    pub fn blowup_count(&self) -> u32 {
        match self {
            SurfaceFamily::CP2Blowup(k) => *k,
            SurfaceFamily::S2xS2 => 0,
            SurfaceFamily::RuledTrivial { blowups, .. } => *blowups,
            SurfaceFamily::RuledTwisted { .. } => 0,
        }
    }
}

impl fmt::Display for SurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceFamily::CP2Blowup(0) => write!(f, "CP2"),
            SurfaceFamily::CP2Blowup(k) => write!(f, "CP2#{k}"),
            SurfaceFamily::S2xS2 => write!(f, "S2xS2"),
            SurfaceFamily::RuledTrivial { genus: 1, blowups: 0 } => write!(f, "S2xT2"),
            SurfaceFamily::RuledTrivial { genus: 1, blowups } => write!(f, "S2xT2#{blowups}"),
            SurfaceFamily::RuledTrivial { genus, blowups: 0 } => write!(f, "S2xSigma{genus}"),
            SurfaceFamily::RuledTrivial { genus, blowups } => {
                write!(f, "S2xSigma{genus}#{blowups}")
            }
            SurfaceFamily::RuledTwisted { genus: 1 } => write!(f, "S2~xT2"),
            SurfaceFamily::RuledTwisted { genus } => write!(f, "S2~xSigma{genus}"),
        }
    }
}

/// An integer homology class in a family's fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct H2Class {
    family: SurfaceFamily,
    coeffs: Vec<i64>,
}

impl H2Class {
    /// Builds a class, validating the family and the coefficient length.
    pub fn new(family: SurfaceFamily, coeffs: Vec<i64>) -> Result<Self, HomologyError> {
        let expected = family.rank()?;
        if coeffs.len() != expected {
            return Err(HomologyError::WrongCoeffLength {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(H2Class { family, coeffs })
    }

    /// The class's family.
    pub fn family(&self) -> &SurfaceFamily {
        &self.family
    }

    /// The coefficients in the family basis.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Intersection pairing with classes assumed valid (internal fast path).
    fn pair(&self, other: &H2Class) -> i64 {
        let u = &self.coeffs;
        let v = &other.coeffs;
        match self.family {
            SurfaceFamily::CP2Blowup(_) => {
                u[0] * v[0] - u[1..].iter().zip(&v[1..]).map(|(a, b)| a * b).sum::<i64>()
            }
            SurfaceFamily::S2xS2 => u[0] * v[1] + u[1] * v[0],
            SurfaceFamily::RuledTrivial { .. } => {
                u[0] * v[1] + u[1] * v[0]
                    - u[2..].iter().zip(&v[2..]).map(|(a, b)| a * b).sum::<i64>()
            }
            SurfaceFamily::RuledTwisted { .. } => -u[0] * v[0] + u[0] * v[1] + u[1] * v[0],
        }
    }

    /// Intersection number `self . other` (same family required).
    pub fn intersect(&self, other: &H2Class) -> Result<i64, HomologyError> {
        if self.family != other.family {
            return Err(HomologyError::FamilyMismatch);
        }
        Ok(self.pair(other))
    }

    /// Self-intersection number.
    pub fn self_intersection(&self) -> i64 {
        self.pair(self)
    }

    /// Genus from the adjunction formula `2g - 2 = F^2 + kappa.F`; errors
    /// when the right-hand side is odd or the genus would be negative.
    pub fn adjunction_genus(&self) -> Result<i64, HomologyError> {
        let anti = self.family.anticanonical()?;
        let rhs = self.self_intersection() - self.pair(&anti);
        if rhs.rem_euclid(2) != 0 {
            return Err(HomologyError::OddAdjunction(rhs));
        }
        let g = (rhs + 2) / 2;
        if g < 0 {
            return Err(HomologyError::NegativeGenus(g));
        }
        Ok(g)
    }
}

impl fmt::Display for H2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = match self.family.basis_labels() {
            Ok(l) => l,
            Err(_) => return write!(f, "<invalid family>"),
        };
        let mut wrote = false;
        for (c, label) in self.coeffs.iter().zip(labels.iter()) {
            if *c == 0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if *c > 0 { "+" } else { "-" })?;
                match c.unsigned_abs() {
                    1 => write!(f, "{label}")?,
                    m => write!(f, "{m}{label}")?,
                }
            } else {
                match *c {
                    1 => write!(f, "{label}")?,
                    -1 => write!(f, "-{label}")?,
                    m => write!(f, "{m}{label}")?,
                }
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::IntMat;
    use proptest::prelude::*;

    fn cls(fam: SurfaceFamily, c: &[i64]) -> H2Class {
        H2Class::new(fam, c.to_vec()).unwrap()
    }

    #[test]
    fn gram_matrices() {
        let l = SurfaceFamily::CP2Blowup(2).gram().unwrap();
        assert_eq!(l.basis_labels, ["H", "E1", "E2"]);
        assert_eq!(
            l.gram,
            [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
        );
        let l = SurfaceFamily::S2xS2.gram().unwrap();
        assert_eq!(l.gram, [[0, 1], [1, 0]]);
        let l = SurfaceFamily::RuledTwisted { genus: 1 }.gram().unwrap();
        assert_eq!(l.basis_labels, ["s-", "f"]);
        assert_eq!(l.gram, [[-1, 1], [1, 0]]);
    }

    #[test]
    fn gram_is_symmetric_and_unimodular() {
        let families = [
            SurfaceFamily::CP2Blowup(0),
            SurfaceFamily::CP2Blowup(4),
            SurfaceFamily::S2xS2,
            SurfaceFamily::RuledTrivial { genus: 1, blowups: 3 },
            SurfaceFamily::RuledTrivial { genus: 3, blowups: 0 },
            SurfaceFamily::RuledTwisted { genus: 2 },
        ];
        for fam in families {
            let l = fam.gram().unwrap();
            let n = l.gram.len();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(l.gram[i][j], l.gram[j][i], "{fam} gram not symmetric");
                }
            }
            let det = IntMat::from_rows_i64(&l.gram).det();
            assert_eq!(
                num_traits::Signed::abs(&det),
                num_traits::One::one(),
                "{fam} gram not unimodular"
            );
        }
    }

    #[test]
    fn intersection_examples() {
        let h = cls(SurfaceFamily::CP2Blowup(1), &[1, 0]);
        assert_eq!(h.intersect(&h).unwrap(), 1);
        let fiber = cls(SurfaceFamily::CP2Blowup(9), &[3, -1, -1, -1, -1, -1, -1, -1, -1, -1]);
        assert_eq!(fiber.self_intersection(), 0);
        let tw = SurfaceFamily::RuledTwisted { genus: 1 };
        let s_minus = cls(tw, &[1, 0]);
        let s_plus = cls(tw, &[1, 1]);
        assert_eq!(s_plus.intersect(&s_minus).unwrap(), 0);
        assert_eq!(s_plus.self_intersection(), 1);
        // mismatched families refuse to pair
        let a = cls(SurfaceFamily::S2xS2, &[1, 0]);
        assert_eq!(h.intersect(&a), Err(HomologyError::FamilyMismatch));
    }

    #[test]
    fn anticanonical_classes() {
        assert_eq!(
            SurfaceFamily::CP2Blowup(2).anticanonical().unwrap().coeffs(),
            [3, -1, -1]
        );
        assert_eq!(
            SurfaceFamily::RuledTrivial { genus: 1, blowups: 0 }
                .anticanonical()
                .unwrap()
                .coeffs(),
            [2, 0]
        );
        assert_eq!(
            SurfaceFamily::RuledTwisted { genus: 1 }
                .anticanonical()
                .unwrap()
                .coeffs(),
            [2, 1]
        );
        assert_eq!(
            SurfaceFamily::RuledTrivial { genus: 2, blowups: 1 }
                .anticanonical()
                .unwrap()
                .coeffs(),
            [2, -2, -1]
        );
    }

    #[test]
    fn adjunction_examples() {
        let e1_fiber = SurfaceFamily::CP2Blowup(9).anticanonical().unwrap();
        assert_eq!(e1_fiber.adjunction_genus().unwrap(), 1);
        let line = cls(SurfaceFamily::CP2Blowup(0), &[1]);
        assert_eq!(line.adjunction_genus().unwrap(), 0);
        let bidegree22 = cls(SurfaceFamily::S2xS2, &[2, 2]);
        assert_eq!(bidegree22.adjunction_genus().unwrap(), 1);
        // 2E in the one-point blow-up has adjunction genus -2: undefined
        let double_exceptional = cls(SurfaceFamily::CP2Blowup(1), &[0, 2]);
        assert_eq!(
            double_exceptional.adjunction_genus(),
            Err(HomologyError::NegativeGenus(-2))
        );
    }

    #[test]
    fn numeric_invariants() {
        assert_eq!(SurfaceFamily::CP2Blowup(9).euler().unwrap(), 12);
        assert_eq!(SurfaceFamily::CP2Blowup(9).signature().unwrap(), -8);
        assert_eq!(SurfaceFamily::S2xS2.c1sq().unwrap(), 8);
        for k in 0..=20u32 {
            assert_eq!(
                SurfaceFamily::CP2Blowup(k).c1sq().unwrap(),
                9 - i64::from(k)
            );
        }
        for h in 1..=4u32 {
            for k in 0..=20u32 {
                let fam = SurfaceFamily::RuledTrivial { genus: h, blowups: k };
                assert_eq!(
                    fam.c1sq().unwrap(),
                    8 - 8 * i64::from(h) - i64::from(k)
                );
            }
            let fam = SurfaceFamily::RuledTwisted { genus: h };
            assert_eq!(fam.c1sq().unwrap(), 8 - 8 * i64::from(h));
        }
    }

    #[test]
    fn anticanonical_square_is_c1sq() {
        let mut families = alloc::vec![SurfaceFamily::S2xS2];
        for k in 0..=20u32 {
            families.push(SurfaceFamily::CP2Blowup(k));
        }
        for h in 1..=4u32 {
            families.push(SurfaceFamily::RuledTwisted { genus: h });
            for k in 0..=20u32 {
                families.push(SurfaceFamily::RuledTrivial { genus: h, blowups: k });
            }
        }
        for fam in families {
            let anti = fam.anticanonical().unwrap();
            assert_eq!(anti.self_intersection(), fam.c1sq().unwrap(), "{fam}");
            // and the anticanonical class always has adjunction genus 1
            assert_eq!(anti.adjunction_genus().unwrap(), 1, "{fam}");
        }
    }

    #[test]
    fn blowup_moves() {
        assert_eq!(
            SurfaceFamily::CP2Blowup(3).blow_up().unwrap(),
            SurfaceFamily::CP2Blowup(4)
        );
        assert_eq!(
            SurfaceFamily::S2xS2.blow_up().unwrap(),
            SurfaceFamily::CP2Blowup(2)
        );
        assert_eq!(
            SurfaceFamily::RuledTwisted { genus: 1 }.blow_up().unwrap(),
            SurfaceFamily::RuledTrivial { genus: 1, blowups: 1 }
        );
        assert_eq!(
            SurfaceFamily::RuledTrivial { genus: 1, blowups: 1 }
                .blow_down()
                .unwrap(),
            SurfaceFamily::RuledTrivial { genus: 1, blowups: 0 }
        );
        assert_eq!(
            SurfaceFamily::S2xS2.blow_down(),
            Err(HomologyError::MinimalFamily)
        );
        assert_eq!(
            SurfaceFamily::CP2Blowup(0).blow_down(),
            Err(HomologyError::MinimalFamily)
        );
        // blowing up preserves c1^2 - 1 and euler + 1
        for fam in [
            SurfaceFamily::CP2Blowup(5),
            SurfaceFamily::S2xS2,
            SurfaceFamily::RuledTwisted { genus: 2 },
        ] {
            let up = fam.blow_up().unwrap();
            assert_eq!(up.euler().unwrap(), fam.euler().unwrap() + 1);
            assert_eq!(up.c1sq().unwrap(), fam.c1sq().unwrap() - 1);
        }
    }

    #[test]
    fn genus_zero_base_is_rejected() {
        let bad = SurfaceFamily::RuledTrivial { genus: 0, blowups: 0 };
        assert!(matches!(bad.euler(), Err(HomologyError::InvalidFamily(_))));
        assert!(matches!(
            H2Class::new(SurfaceFamily::RuledTwisted { genus: 0 }, alloc::vec![1, 0]),
            Err(HomologyError::InvalidFamily(_))
        ));
        assert!(matches!(
            H2Class::new(SurfaceFamily::S2xS2, alloc::vec![1, 0, 0]),
            Err(HomologyError::WrongCoeffLength { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn class_display() {
        assert_eq!(
            SurfaceFamily::CP2Blowup(2)
                .anticanonical()
                .unwrap()
                .to_string(),
            "3H - E1 - E2"
        );
        assert_eq!(
            SurfaceFamily::RuledTwisted { genus: 1 }
                .anticanonical()
                .unwrap()
                .to_string(),
            "2s- + f"
        );
        assert_eq!(
            cls(SurfaceFamily::RuledTrivial { genus: 1, blowups: 0 }, &[2, 0]).to_string(),
            "2s"
        );
        assert_eq!(cls(SurfaceFamily::S2xS2, &[0, 0]).to_string(), "0");
        assert_eq!(cls(SurfaceFamily::S2xS2, &[-1, 3]).to_string(), "-a + 3b");
        assert_eq!(SurfaceFamily::e1().to_string(), "CP2#9");
        assert_eq!(
            SurfaceFamily::RuledTrivial { genus: 2, blowups: 1 }.to_string(),
            "S2xSigma2#1"
        );
        assert_eq!(SurfaceFamily::RuledTwisted { genus: 3 }.to_string(), "S2~xSigma3");
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_and_bilinear(
            fam_idx in 0usize..4,
            u in proptest::collection::vec(-6i64..=6, 4),
            v in proptest::collection::vec(-6i64..=6, 4),
            w in proptest::collection::vec(-6i64..=6, 4),
            lam in -3i64..=3,
        ) {
            let fam = [
                SurfaceFamily::CP2Blowup(3),
                SurfaceFamily::S2xS2,
                SurfaceFamily::RuledTrivial { genus: 2, blowups: 2 },
                SurfaceFamily::RuledTwisted { genus: 1 },
            ][fam_idx];
            let n = fam.rank().unwrap();
            let mk = |c: &[i64]| H2Class::new(fam, c[..n].to_vec()).unwrap();
            let (cu, cv, cw) = (mk(&u), mk(&v), mk(&w));
            prop_assert_eq!(cu.intersect(&cv).unwrap(), cv.intersect(&cu).unwrap());
            let sum: alloc::vec::Vec<i64> =
                v[..n].iter().zip(&w[..n]).map(|(a, b)| a + lam * b).collect();
            let csum = H2Class::new(fam, sum).unwrap();
            prop_assert_eq!(
                cu.intersect(&csum).unwrap(),
                cu.intersect(&cv).unwrap() + lam * cu.intersect(&cw).unwrap()
            );
            // pairing agrees with the Gram matrix
            let gram = fam.gram().unwrap().gram;
            let mut expect = 0;
            for i in 0..n {
                for j in 0..n {
                    expect += u[i] * gram[i][j] * v[j];
                }
            }
            prop_assert_eq!(cu.intersect(&cv).unwrap(), expect);
        }
    }
}
