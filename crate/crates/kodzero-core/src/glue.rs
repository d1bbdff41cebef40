//! Annulus-bundle complements and their gluings.
//!
//! Removing a neighborhood of an anticanonical torus from an `S^2`-bundle
//! over `T^2` leaves an orientable annulus bundle over `T^2` with connected
//! `T^3` boundary: `Y_0` for the trivial `S^2`-bundle, `Y_1` for the twisted
//! one ([`ComplementKind`]). Its fundamental group is
//! `< a, b, m | a^-1 m a = m^-1, [b,m] = 1, [a,b] = m^j >`, and the boundary
//! torus carries the marked basis `(a^2, b, m)`.
//!
//! Gluing `Y_j` to `Y_k` along the boundary is described by a 3x3 integer
//! matrix in those bases ([`BoundaryMap`], columns = images of
//! `(a1^2, b1, m1)`, third column `(0,0,+-1)`). After the allowed generator
//! changes every gluing lands in one of two parameter forms
//! ([`GluingData`]): Even `gamma = a^2 b^{2c} m^e` (with `d - 2bc = 1`) or
//! Odd `gamma = a^{2a} b m^e` (with `ad - b = 1`);
//! [`normalize_boundary_map`] performs that reduction and proves it safe by
//! comparing abelianizations of the glued presentations before and after.
//!
//! [`glue_presentation`] writes down the amalgamated presentation on
//! `a1, b1, a2, b2, m`; [`glue_bundle`] evaluates the closed-form torus
//! bundle the glued manifold is diffeomorphic to:
//!
//! * Even: `M([[-1,kc-e],[0,-1]], [[1,j-k+2(f-be)],[0,1]]; (j+2(f-be),0))`
//! * Odd:  `M([[-1,k-2e],[0,-1]], [[-1,j+2(f-de)],[0,-1]]; (0,1))`
//!
//! and the two must always have identical `H_1` — the cross-check that pins
//! the fundamental-group conventions used throughout.
//!
//! [`involution_composite`] decides whether the composite of the two
//! half-period fiber translations, transported through a monodromy `A`, is
//! the identity or a free involution: it is translation by
//! `((d+1)/2, -c/2) mod 1`, the identity exactly when `c` is even.
//!
//! [`enumerate_table`] sweeps every gluing form over a parameter box and
//! returns the deduplicated set of normal-form tags. Gluings are normalized
//! so that `m1` maps to `m2` with positive sign; the parameter sweep covers
//! only that normalized sign.

use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;

use num_integer::Integer;

use crate::fpgroup::{commutator, Presentation, Word};
use crate::homology::SurfaceFamily;
use crate::intmat::ext_gcd;
use crate::sumcalc::Summand;
use crate::torusbundle::{FamilyTag, Mat2, TorusBundle};

/// Errors from complement identification, gluing data, and normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlueError {
    /// The summand is not an `S^2`-bundle over `T^2` with anticanonical
    /// surface, so its complement is not an annulus bundle handled here.
    OutOfScopeSummand(String),
    /// Gluing parameters violate their determinant identity.
    DeterminantIdentity {
        /// The value of `d - 2bc` (Even) or `ad - b` (Odd); must be 1.
        got: i64,
    },
    /// The boundary map does not send `m1` to `m2^{+-1}` (third column must
    /// be `(0, 0, +-1)`).
    MColumnViolation,
    /// The first column does not project to a primitive vector of the
    /// `(a^2, b)` plane.
    NonPrimitiveFirstColumn,
    /// The boundary map reverses orientation (block determinant is -1).
    OrientationReversing,
    /// Normalization produced a gluing whose abelianization disagrees with
    /// the input's — never expected; reported rather than silently glued.
    NormalizationMismatch,
    /// A matrix expected in `SL(2,Z)` has a different determinant.
    NotSL2 {
        /// The offending determinant.
        det: i64,
    },
    /// The enumeration bound must be at least 1.
    InvalidBound(i64),
}

impl fmt::Display for GlueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlueError::OutOfScopeSummand(s) => {
                write!(f, "summand {s} has no annulus-bundle complement here")
            }
            GlueError::DeterminantIdentity { got } => {
                write!(f, "gluing parameters violate the determinant identity: got {got}, expected 1")
            }
            GlueError::MColumnViolation => {
                write!(f, "boundary map must send m to m or its inverse (third column (0,0,+-1))")
            }
            GlueError::NonPrimitiveFirstColumn => {
                write!(f, "first column is not primitive in the (a^2, b) plane")
            }
            GlueError::OrientationReversing => {
                write!(f, "boundary map reverses orientation")
            }
            GlueError::NormalizationMismatch => {
                write!(f, "normalized gluing changed the abelianization")
            }
            GlueError::NotSL2 { det } => {
                write!(f, "matrix is not in SL(2,Z): determinant {det}")
            }
            GlueError::InvalidBound(b) => {
                write!(f, "enumeration bound must be at least 1, got {b}")
            }
        }
    }
}

/// Which annulus bundle a complement is: `Y_0` (from the trivial bundle) or
/// `Y_1` (from the twisted one).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComplementKind {
    /// Complement of an anticanonical torus in `S^2 x T^2`.
    Y0,
    /// Complement of an anticanonical torus in the twisted bundle.
    Y1,
}

impl ComplementKind {
    /// The index `j` in `{0, 1}`.
    pub fn j(&self) -> i64 {
        match self {
            ComplementKind::Y0 => 0,
            ComplementKind::Y1 => 1,
        }
    }

    /// The complement kind of index `n` after [`annulus_bundle_reduce`].
    pub fn from_index(n: i64) -> ComplementKind {
        if annulus_bundle_reduce(n) == 0 {
            ComplementKind::Y0
        } else {
            ComplementKind::Y1
        }
    }
}

impl fmt::Display for ComplementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplementKind::Y0 => write!(f, "Y0"),
            ComplementKind::Y1 => write!(f, "Y1"),
        }
    }
}

/// Reduces the annulus-bundle index: `Y_n` is diffeomorphic to `Y_{n mod 2}`
/// (a fiber-preserving diffeomorphism takes a representative of `m` to one
/// of `m + 2nl`).
pub fn annulus_bundle_reduce(n: i64) -> i64 {
    n.rem_euclid(2)
}

/// Identifies the complement of the summand's surface, when the summand is
/// an `S^2`-bundle over `T^2` with anticanonical surface class.
pub fn complement_of(s: &Summand) -> Result<ComplementKind, GlueError> {
    let kind = match s.family() {
        SurfaceFamily::RuledTrivial { genus: 1, blowups: 0 } => ComplementKind::Y0,
        SurfaceFamily::RuledTwisted { genus: 1 } => ComplementKind::Y1,
        _ => return Err(GlueError::OutOfScopeSummand(alloc::format!("{s}"))),
    };
    if !s.is_anticanonical() {
        return Err(GlueError::OutOfScopeSummand(alloc::format!("{s}")));
    }
    Ok(kind)
}

/// The fundamental group of a complement together with its marked boundary
/// basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementPresentation {
    /// `< a, b, m | a^-1 m a m, [b,m], [a,b] m^-j >`.
    pub presentation: Presentation,
    /// The boundary `T^3` basis `(a^2, b, m)` as words.
    pub boundary_basis: [Word; 3],
}

/// The fundamental group of `Y_j` with its boundary marking.
pub fn boundary_pi1(kind: ComplementKind) -> ComplementPresentation {
    use alloc::string::ToString;
    let j = kind.j();
    let (a, b, m) = (0usize, 1usize, 2usize);
    let relators = alloc::vec![
        Word::from_syllables([(a, -1), (m, 1), (a, 1), (m, 1)]),
        commutator(&Word::gen(b), &Word::gen(m)),
        commutator(&Word::gen(a), &Word::gen(b)).concat(&Word::gen_pow(m, -j)),
    ];
    let presentation = Presentation::new(
        alloc::vec!["a".to_string(), "b".to_string(), "m".to_string()],
        relators,
    )
    .expect("complement presentation is well-formed");
    ComplementPresentation {
        presentation,
        boundary_basis: [Word::gen_pow(a, 2), Word::gen(b), Word::gen(m)],
    }
}

/// Normalized gluing parameters: the image of `a1^2` takes one of the forms
/// `a^2 b^{2c} m^e` (Even) or `a^{2a} b m^e` (Odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GluingData {
    /// `a1^2 -> a2^2 b2^{2c} m2^e`, `b1 -> a2^{2b} b2^d m2^f`, `d - 2bc = 1`.
    Even {
        /// `b` parameter (half the `a^2`-exponent of the `b1`-image).
        b: i64,
        /// `c` parameter (half the `b`-exponent of the `a1^2`-image).
        c: i64,
        /// `d` parameter, determined by `d = 1 + 2bc`.
        d: i64,
        /// `m`-exponent of the `a1^2`-image.
        e: i64,
        /// `m`-exponent of the `b1`-image.
        f: i64,
    },
    /// `a1^2 -> a2^{2a} b2 m2^e`, `b1 -> a2^{2b} b2^d m2^f`, `ad - b = 1`.
    Odd {
        /// `a` parameter (half the `a^2`-exponent of the `a1^2`-image).
        a: i64,
        /// `b` parameter, determined by `b = ad - 1`.
        b: i64,
        /// `d` parameter (`b`-exponent of the `b1`-image).
        d: i64,
        /// `m`-exponent of the `a1^2`-image.
        e: i64,
        /// `m`-exponent of the `b1`-image.
        f: i64,
    },
}

impl GluingData {
    /// Builds Even-form data, checking `d - 2bc = 1`.
    pub fn even(b: i64, c: i64, d: i64, e: i64, f: i64) -> Result<Self, GlueError> {
        let g = GluingData::Even { b, c, d, e, f };
        g.check()?;
        Ok(g)
    }

    /// Builds Odd-form data, checking `ad - b = 1`.
    pub fn odd(a: i64, b: i64, d: i64, e: i64, f: i64) -> Result<Self, GlueError> {
        let g = GluingData::Odd { a, b, d, e, f };
        g.check()?;
        Ok(g)
    }

    /// Re-checks the determinant identity.
    pub fn check(&self) -> Result<(), GlueError> {
        let got = match self {
            GluingData::Even { b, c, d, .. } => d - 2 * b * c,
            GluingData::Odd { a, b, d, .. } => a * d - b,
        };
        if got == 1 {
            Ok(())
        } else {
            Err(GlueError::DeterminantIdentity { got })
        }
    }
}

impl fmt::Display for GluingData {
    fn fmt(&self, fmtr: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GluingData::Even { b, c, d, e, f } => {
                write!(fmtr, "even(b={b},c={c},d={d},e={e},f={f})")
            }
            GluingData::Odd { a, b, d, e, f } => {
                write!(fmtr, "odd(a={a},b={b},d={d},e={e},f={f})")
            }
        }
    }
}

/// A gluing of the boundary tori: 3x3 integer matrix in the ordered bases
/// `(a^2, b, m)`, columns = images of `(a1^2, b1, m1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryMap(pub [[i64; 3]; 3]);

impl fmt::Display for BoundaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(
            f,
            "[[{},{},{}],[{},{},{}],[{},{},{}]]",
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]
        )
    }
}

/// The boundary map induced by normalized gluing data.
pub fn boundary_map_of(g: &GluingData) -> BoundaryMap {
    match *g {
        GluingData::Even { b, c, d, e, f } => {
            BoundaryMap([[1, b, 0], [2 * c, d, 0], [e, f, 1]])
        }
        GluingData::Odd { a, b, d, e, f } => BoundaryMap([[a, b, 0], [1, d, 0], [e, f, 1]]),
    }
}

fn mat3_mul(a: &[[i64; 3]; 3], b: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let mut out = [[0i64; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..3).map(|t| a[i][t] * b[t][j]).sum();
        }
    }
    out
}

fn mat3_det(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Inverse of an integer matrix with determinant `+-1` (adjugate divided by
/// the determinant).
fn mat3_inverse_unimodular(m: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let det = mat3_det(m);
    debug_assert!(det == 1 || det == -1);
    let cof = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]
    };
    let adj = [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ];
    let mut out = [[0i64; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = adj[i][j] * det;
        }
    }
    debug_assert_eq!(mat3_mul(m, &out), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    out
}

/// The amalgamated fundamental group for an arbitrary boundary map, on six
/// generators `a1, b1, m1, a2, b2, m2` (three relators per side plus the
/// three identification relators reading off the matrix columns). No
/// normalization is assumed; this is the reference against which
/// [`normalize_boundary_map`] certifies itself.
pub fn glue_presentation_raw(j: ComplementKind, k: ComplementKind, m: &BoundaryMap) -> Presentation {
    use alloc::string::ToString;
    let (a1, b1, m1, a2, b2, m2) = (0usize, 1usize, 2usize, 3usize, 4usize, 5usize);
    let w = &m.0;
    let image = |col: usize, lead: (usize, i64)| {
        // image of the basis word in side-2 coordinates, inverted and
        // appended to the side-1 word
        Word::from_syllables([
            lead,
            (m2, -w[2][col]),
            (b2, -w[1][col]),
            (a2, -2 * w[0][col]),
        ])
    };
    let relators = alloc::vec![
        Word::from_syllables([(a1, -1), (m1, 1), (a1, 1), (m1, 1)]),
        commutator(&Word::gen(b1), &Word::gen(m1)),
        commutator(&Word::gen(a1), &Word::gen(b1)).concat(&Word::gen_pow(m1, -j.j())),
        Word::from_syllables([(a2, -1), (m2, 1), (a2, 1), (m2, 1)]),
        commutator(&Word::gen(b2), &Word::gen(m2)),
        commutator(&Word::gen(a2), &Word::gen(b2)).concat(&Word::gen_pow(m2, -k.j())),
        image(0, (a1, 2)),
        image(1, (b1, 1)),
        image(2, (m1, 1)),
    ];
    Presentation::new(
        alloc::vec![
            "a1".to_string(),
            "b1".to_string(),
            "m1".to_string(),
            "a2".to_string(),
            "b2".to_string(),
            "m2".to_string(),
        ],
        relators,
    )
    .expect("amalgamated presentation is well-formed")
}

/// The glued fundamental group for normalized gluing data, on generators
/// `a1, b1, a2, b2, m` (the two `m`'s already identified).
pub fn glue_presentation(
    j: ComplementKind,
    k: ComplementKind,
    g: &GluingData,
) -> Result<Presentation, GlueError> {
    use alloc::string::ToString;
    g.check()?;
    let (a1, b1, a2, b2, m) = (0usize, 1usize, 2usize, 3usize, 4usize);
    let gamma_relator = match *g {
        GluingData::Even { c, e, .. } => {
            Word::from_syllables([(a1, 2), (m, -e), (b2, -2 * c), (a2, -2)])
        }
        GluingData::Odd { a, e, .. } => {
            Word::from_syllables([(a1, 2), (m, -e), (b2, -1), (a2, -2 * a)])
        }
    };
    let (bb, dd, ff) = match *g {
        GluingData::Even { b, d, f, .. } | GluingData::Odd { b, d, f, .. } => (b, d, f),
    };
    let relators = alloc::vec![
        Word::from_syllables([(a1, -1), (m, 1), (a1, 1), (m, 1)]),
        commutator(&Word::gen(b1), &Word::gen(m)),
        commutator(&Word::gen(a1), &Word::gen(b1)).concat(&Word::gen_pow(m, -j.j())),
        Word::from_syllables([(a2, -1), (m, 1), (a2, 1), (m, 1)]),
        commutator(&Word::gen(b2), &Word::gen(m)),
        commutator(&Word::gen(a2), &Word::gen(b2)).concat(&Word::gen_pow(m, -k.j())),
        gamma_relator,
        Word::from_syllables([(b1, 1), (m, -ff), (b2, -dd), (a2, -2 * bb)]),
    ];
    Ok(Presentation::new(
        alloc::vec![
            "a1".to_string(),
            "b1".to_string(),
            "a2".to_string(),
            "b2".to_string(),
            "m".to_string(),
        ],
        relators,
    )
    .expect("glued presentation is well-formed"))
}

/// The closed-form torus bundle of a normalized gluing.
pub fn glue_bundle(
    j: ComplementKind,
    k: ComplementKind,
    g: &GluingData,
) -> Result<TorusBundle, GlueError> {
    g.check()?;
    let (jj, kk) = (j.j(), k.j());
    let bundle = match *g {
        GluingData::Even { b, c, e, f, .. } => {
            let twist = jj + 2 * (f - b * e);
            TorusBundle::new(
                Mat2([[-1, kk * c - e], [0, -1]]),
                Mat2([[1, jj - kk + 2 * (f - b * e)], [0, 1]]),
                (twist, 0),
            )
        }
        GluingData::Odd { d, e, f, .. } => TorusBundle::new(
            Mat2([[-1, kk - 2 * e], [0, -1]]),
            Mat2([[-1, jj + 2 * (f - d * e)], [0, -1]]),
            (0, 1),
        ),
    };
    Ok(bundle.expect("closed-form monodromies commute"))
}

fn extract_gluing(w: &[[i64; 3]; 3]) -> Option<GluingData> {
    if w[0][0] == 1 && w[1][0].rem_euclid(2) == 0 {
        Some(GluingData::Even {
            b: w[0][1],
            c: w[1][0] / 2,
            d: w[1][1],
            e: w[2][0],
            f: w[2][1],
        })
    } else if w[1][0] == 1 {
        Some(GluingData::Odd {
            a: w[0][0],
            b: w[0][1],
            d: w[1][1],
            e: w[2][0],
            f: w[2][1],
        })
    } else {
        None
    }
}

/// Reduces an arbitrary boundary map to normalized [`GluingData`] by the
/// allowed generator changes, certifying the result by comparing glued
/// abelianizations.
///
/// Steps: (1) require the `m`-column to be `(0,0,+-1)`; (2) require the
/// first column primitive in the `(a^2, b)` plane; (3) if `m1 -> m2^{-1}`,
/// change side-2 generators by `b -> b m^k`, `m -> m^{-1}` (which preserves
/// `Y_k`'s presentation); (4) require the `(a^2, b)`-block determinant be
/// `+1`; (5) read the parameters off directly when the first column is
/// already `(1, even)` or `(*, 1)`; (6) otherwise apply a side-2 change of
/// generators `a' = a^p b^r`, `b' = a^{2Q} b^s` (its boundary action has
/// `a'^2 = (a^2)^p b^{2r} m^{k r (p mod 2)}`) chosen by a Bezout argument to
/// make the first column `(1,0)` or `(0,1)`; (7) verify that the glued
/// abelianization is unchanged, else report [`GlueError::NormalizationMismatch`].
pub fn normalize_boundary_map(
    m: &BoundaryMap,
    j: ComplementKind,
    k: ComplementKind,
) -> Result<GluingData, GlueError> {
    let mut w = m.0;
    if w[0][2] != 0 || w[1][2] != 0 || (w[2][2] != 1 && w[2][2] != -1) {
        return Err(GlueError::MColumnViolation);
    }
    if w[0][0].gcd(&w[1][0]) != 1 {
        return Err(GlueError::NonPrimitiveFirstColumn);
    }
    if w[2][2] == -1 {
        // side-2 m-sign flip: b2 -> b2 m2^k, m2 -> m2^{-1}; the change of
        // basis is its own inverse
        let flip = [[1, 0, 0], [0, 1, 0], [0, k.j(), -1]];
        w = mat3_mul(&flip, &w);
    }
    let block = w[0][0] * w[1][1] - w[0][1] * w[1][0];
    if block != 1 {
        return Err(GlueError::OrientationReversing);
    }
    let data = match extract_gluing(&w) {
        Some(g) => g,
        None => {
            let (x1, x2) = (w[0][0], w[1][0]);
            let c2 = if x2.rem_euclid(2) == 0 {
                // aim the first column at (1,0): new a' = a^{x1} b^{x2/2},
                // b' = a^{2Q} b^{s} with s*x1 - Q*x2 = 1
                let (g, s, mq) = ext_gcd(x1, x2);
                debug_assert_eq!(g, 1);
                let q = -mq;
                let (p_word, r_word) = (x1, x2 / 2);
                [
                    [x1, q, 0],
                    [x2, s, 0],
                    [k.j() * r_word * p_word.rem_euclid(2), 0, 1],
                ]
            } else {
                // aim the first column at (0,1): new a' = a^p b^r with
                // p*x2 - 2r*x1 = 1, b' = a^{x1... (2*x1)/2} b^{x2}
                let (g, p, md) = ext_gcd(x2, 2 * x1);
                debug_assert_eq!(g, 1);
                let r = -md;
                [
                    [p, x1, 0],
                    [2 * r, x2, 0],
                    [k.j() * r * p.rem_euclid(2), 0, 1],
                ]
            };
            let inv = mat3_inverse_unimodular(&c2);
            w = mat3_mul(&inv, &w);
            extract_gluing(&w).ok_or(GlueError::NormalizationMismatch)?
        }
    };
    data.check().map_err(|_| GlueError::NormalizationMismatch)?;
    // certify: gluing by the original map, by the induced map of the
    // result, and by the normalized presentation all abelianize equally
    let before = glue_presentation_raw(j, k, m).abelianize();
    let mid = glue_presentation_raw(j, k, &boundary_map_of(&data)).abelianize();
    let after = glue_presentation(j, k, &data)
        .expect("extracted data satisfies its identity")
        .abelianize();
    if before != mid || mid != after {
        return Err(GlueError::NormalizationMismatch);
    }
    Ok(data)
}

/// Whether the composite of the half-period translations on the two sides
/// of a gluing is the identity or a free involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionKind {
    /// The composite is isotopic to the identity.
    Identity,
    /// The composite is a free involution (translation by a nonzero
    /// half-period).
    FreeInvolution,
}

/// Verdict of [`involution_composite`]: the composite map is translation of
/// the torus by `(n1/2, n2/2) mod 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvolutionVerdict {
    /// Identity or free involution.
    pub kind: InvolutionKind,
    /// Numerators `(n1, n2)` of the half-period translation, each in
    /// `{0, 1}`.
    pub translation_num: (i64, i64),
}

impl fmt::Display for InvolutionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = |n: i64| if n == 0 { "0" } else { "1/2" };
        let name = match self.kind {
            InvolutionKind::Identity => "Identity",
            InvolutionKind::FreeInvolution => "FreeInvolution",
        };
        write!(
            f,
            "{name} ({},{})",
            half(self.translation_num.0),
            half(self.translation_num.1)
        )
    }
}

/// Composes the fiber half-period translation with its conjugate through the
/// monodromy `A = [[a,b],[c,d]]`: the result is translation by
/// `((d+1)/2, -c/2) mod 1` — the identity iff `c` is even, a free
/// involution iff `c` is odd.
pub fn involution_composite(a: &Mat2) -> Result<InvolutionVerdict, GlueError> {
    if a.det() != 1 {
        return Err(GlueError::NotSL2 { det: a.det() });
    }
    let c = a.0[1][0];
    let d = a.0[1][1];
    let n1 = (d + 1).rem_euclid(2);
    let n2 = c.rem_euclid(2);
    let kind = if (n1, n2) == (0, 0) {
        InvolutionKind::Identity
    } else {
        InvolutionKind::FreeInvolution
    };
    Ok(InvolutionVerdict {
        kind,
        translation_num: (n1, n2),
    })
}

/// Sweeps every gluing form with all parameters of absolute value at most
/// `bound` (derived parameters included), glues, reduces to normal form, and
/// returns the deduplicated tag set.
pub fn enumerate_table(
    j: ComplementKind,
    k: ComplementKind,
    bound: i64,
) -> Result<BTreeSet<FamilyTag>, GlueError> {
    if bound < 1 {
        return Err(GlueError::InvalidBound(bound));
    }
    let mut out = BTreeSet::new();
    let mut push = |g: GluingData| {
        let bundle = glue_bundle(j, k, &g).expect("grid data satisfies its identity");
        let nf = bundle
            .normal_form()
            .expect("glued bundles are always pre-normal");
        out.insert(nf.tag);
    };
    for b in -bound..=bound {
        for c in -bound..=bound {
            let d = 1 + 2 * b * c;
            if d.abs() > bound {
                continue;
            }
            for e in -bound..=bound {
                for f in -bound..=bound {
                    push(GluingData::Even { b, c, d, e, f });
                }
            }
        }
    }
    for a in -bound..=bound {
        for d in -bound..=bound {
            let b = a * d - 1;
            if b.abs() > bound {
                continue;
            }
            for e in -bound..=bound {
                for f in -bound..=bound {
                    push(GluingData::Odd { a, b, d, e, f });
                }
            }
        }
    }
    Ok(out)
}
