//! Finitely presented groups as explicit generator/relator data.
//!
//! Words are stored in syllable form (generator index, exponent) and are
//! always kept freely reduced. A [`Presentation`] owns generator names and a
//! relator list; the supported moves are the two Tietze operations that the
//! gluing calculus needs — adding a generator with a defining relator and
//! eliminating a generator that occurs exactly once, with exponent `+-1`, in
//! some relator — plus abelianization into invariant factors via Smith
//! normal form.
//!
//! Both Tietze moves are sound by construction: they never change the
//! isomorphism type of the presented group, and in particular leave the
//! abelianization fixed (a property the test suites exercise heavily).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::intmat::{snf, IntMat};

/// A freely reduced word in the generators of some presentation.
///
/// Syllables are `(generator index, exponent)` with nonzero exponents and no
/// two adjacent syllables sharing a generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Word {
            syllables: Vec::new(),
        }
    }

    /// The single-letter word `g_index`.
    pub fn gen(index: usize) -> Self {
        Word::gen_pow(index, 1)
    }

    /// The word `g_index^exp` (empty when `exp == 0`).
    pub fn gen_pow(index: usize, exp: i64) -> Self {
        if exp == 0 {
            Word::identity()
        } else {
            Word {
                syllables: alloc::vec![(index, exp)],
            }
        }
    }

    /// Builds a word from raw syllables, freely reducing along the way.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i64)>>(raw: I) -> Self {
        let mut stack: Vec<(usize, i64)> = Vec::new();
        for (g, e) in raw {
            if e == 0 {
                continue;
            }
            match stack.last_mut() {
                Some((top, te)) if *top == g => {
                    *te += e;
                    if *te == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((g, e)),
            }
        }
        Word { syllables: stack }
    }

    /// The syllables of the word, in order.
    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    /// Whether this is the empty word.
    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The inverse word.
    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    /// Concatenation `self * other`, freely reduced.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_syllables(
            self.syllables
                .iter()
                .chain(other.syllables.iter())
                .copied(),
        )
    }

    /// The power `self^exp`, freely reduced.
    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Total exponent of generator `g` in the word.
    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.syllables
            .iter()
            .filter(|&&(h, _)| h == g)
            .map(|&(_, e)| e)
            .sum()
    }

    /// Number of syllables whose generator is `g`.
    pub fn occurrences(&self, g: usize) -> usize {
        self.syllables.iter().filter(|&&(h, _)| h == g).count()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    /// Replaces every occurrence of generator `g` by `replacement` (raised to
    /// the syllable's exponent) and freely reduces.
    pub fn substitute_generator(&self, g: usize, replacement: &Word) -> Word {
        let mut out = Word::identity();
        for &(h, e) in &self.syllables {
            if h == g {
                out = out.concat(&replacement.pow(e));
            } else {
                out = out.concat(&Word::gen_pow(h, e));
            }
        }
        out
    }

    /// Shifts every generator index above `g` down by one (used after a
    /// generator has been removed). The word must not mention `g` itself.
    fn reindex_without(&self, g: usize) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .map(|&(h, e)| {
                    debug_assert_ne!(h, g, "reindex of a word still using the removed generator");
                    (if h > g { h - 1 } else { h }, e)
                })
                .collect(),
        }
    }
}

/// Freely reduces a raw syllable list into a [`Word`].
///
/// Adjacent syllables in the same generator merge, zero exponents vanish, and
/// the process repeats until stable (the stack construction achieves the
/// fixpoint in one pass).
pub fn free_reduce(raw: &[(usize, i64)]) -> Word {
    Word::from_syllables(raw.iter().copied())
}

/// The commutator `a b a^-1 b^-1`, freely reduced.
pub fn commutator(a: &Word, b: &Word) -> Word {
    a.concat(b).concat(&a.inverse()).concat(&b.inverse())
}

/// Errors from presentation construction and Tietze moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FpError {
    /// A generator name is empty or repeated.
    BadGeneratorNames(String),
    /// A relator mentions a generator index outside the presentation.
    GeneratorIndexOutOfRange {
        /// The offending index.
        index: usize,
        /// Number of generators in the presentation.
        count: usize,
    },
    /// A name passed to a move does not belong to the presentation (and the
    /// move required it to).
    UnknownGenerator(String),
    /// The requested name is already in use.
    NameInUse(String),
    /// No relator lets the requested generator be eliminated in favour of the
    /// given replacement word.
    NotEliminable(String),
}

impl fmt::Display for FpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FpError::BadGeneratorNames(msg) => write!(f, "bad generator names: {msg}"),
            FpError::GeneratorIndexOutOfRange { index, count } => write!(
                f,
                "relator mentions generator #{index}, but only {count} generators exist"
            ),
            FpError::UnknownGenerator(name) => write!(f, "unknown generator `{name}`"),
            FpError::NameInUse(name) => write!(f, "generator name `{name}` already in use"),
            FpError::NotEliminable(msg) => {
                write!(f, "non-eliminable substitution requested: {msg}")
            }
        }
    }
}

/// Rank and invariant factors of a finitely generated abelian group,
/// `Z^rank + Z/t_1 + ... + Z/t_k` with `t_1 | t_2 | ... | t_k`, `t_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    /// Free rank.
    pub rank: usize,
    /// Torsion coefficients in divisibility order, each at least 2.
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A finite presentation: named generators and freely reduced relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation, validating that generator names are nonempty
    /// and distinct and that every relator stays within the generator range.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, FpError> {
        for (i, name) in generators.iter().enumerate() {
            if name.is_empty() {
                return Err(FpError::BadGeneratorNames("empty name".to_string()));
            }
            if generators[..i].contains(name) {
                return Err(FpError::BadGeneratorNames(format!("duplicate `{name}`")));
            }
        }
        let count = generators.len();
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= count {
                    return Err(FpError::GeneratorIndexOutOfRange { index: m, count });
                }
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// The generator names, in index order.
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// The relators.
    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Index of a generator name, if present.
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Abelianization: Smith normal form of the relator exponent matrix
    /// (one row per relator, one column per generator).
    pub fn abelianize(&self) -> AbelianInvariants {
        let n = self.generators.len();
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| (0..n).map(|g| r.exponent_sum(g)).collect())
            .collect();
        let m = if rows.is_empty() {
            IntMat::zero(0, n)
        } else {
            IntMat::from_rows_i64(&rows)
        };
        let s = snf(&m);
        let diag = s.diagonal();
        let nonzero = diag.iter().filter(|d| !num_traits::Zero::is_zero(*d)).count();
        let torsion = diag
            .iter()
            .filter(|d| !num_traits::Zero::is_zero(*d) && !d.is_one())
            .cloned()
            .collect();
        AbelianInvariants {
            rank: n - nonzero,
            torsion,
        }
    }

    /// Tietze enlargement: adds a fresh generator `name` together with the
    /// defining relator `name^-1 * defining` (so the new generator equals the
    /// word `defining` in the old generators).
    pub fn add_generator(&self, name: &str, defining: &Word) -> Result<Presentation, FpError> {
        if self.generator_index(name).is_some() {
            return Err(FpError::NameInUse(name.to_string()));
        }
        if name.is_empty() {
            return Err(FpError::BadGeneratorNames("empty name".to_string()));
        }
        if let Some(m) = defining.max_generator() {
            if m >= self.generators.len() {
                return Err(FpError::GeneratorIndexOutOfRange {
                    index: m,
                    count: self.generators.len(),
                });
            }
        }
        let new_index = self.generators.len();
        let mut generators = self.generators.clone();
        generators.push(name.to_string());
        let mut relators = self.relators.clone();
        relators.push(Word::gen_pow(new_index, -1).concat(defining));
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Solves relator `r` for generator `g`, if `g` occurs in `r` exactly
    /// once and with exponent `+-1`. Returns the word equal to `g`.
    fn solve_for(r: &Word, g: usize) -> Option<Word> {
        if r.occurrences(g) != 1 {
            return None;
        }
        let pos = r.syllables().iter().position(|&(h, _)| h == g)?;
        let (_, e) = r.syllables()[pos];
        if e != 1 && e != -1 {
            return None;
        }
        let u = Word::from_syllables(r.syllables()[..pos].iter().copied());
        let t = Word::from_syllables(r.syllables()[pos + 1..].iter().copied());
        // u g^e t = 1  =>  g = (u^-1 t^-1)^e
        let expr = u.inverse().concat(&t.inverse());
        let expr = if e == 1 { expr } else { expr.inverse() };
        if expr.occurrences(g) != 0 {
            return None;
        }
        Some(expr)
    }

    /// Tietze elimination of generator index `g` using relator index `ri`
    /// (which must determine `g` as a word in the other generators). The
    /// generator and the witnessing relator are removed; every other relator
    /// has `g` substituted away; relators that become trivial are dropped.
    fn eliminate_with(&self, g: usize, ri: usize, expr: &Word) -> Presentation {
        let mut relators: Vec<Word> = Vec::new();
        for (i, r) in self.relators.iter().enumerate() {
            if i == ri {
                continue;
            }
            let s = r.substitute_generator(g, expr).reindex_without(g);
            if !s.is_identity() {
                relators.push(s);
            }
        }
        let mut generators = self.generators.clone();
        generators.remove(g);
        Presentation {
            generators,
            relators,
        }
    }

    /// Eliminates generator index `g`, searching the relators for one that
    /// determines it (single occurrence, exponent `+-1`).
    pub fn eliminate_generator(&self, g: usize) -> Result<Presentation, FpError> {
        if g >= self.generators.len() {
            return Err(FpError::GeneratorIndexOutOfRange {
                index: g,
                count: self.generators.len(),
            });
        }
        for (ri, r) in self.relators.iter().enumerate() {
            if let Some(expr) = Self::solve_for(r, g) {
                return Ok(self.eliminate_with(g, ri, &expr));
            }
        }
        Err(FpError::NotEliminable(format!(
            "generator `{}` has no determining relator",
            self.generators[g]
        )))
    }

    /// Substitution move. If `name` is an existing generator, it is
    /// eliminated in favour of `replacement`: some relator must determine
    /// `name` as a word freely equal to `replacement` (otherwise the
    /// substitution would change the group and is refused). If `name` is
    /// fresh, this is the enlargement adding `name` with defining relator
    /// `name^-1 * replacement`.
    pub fn substitute(&self, name: &str, replacement: &Word) -> Result<Presentation, FpError> {
        match self.generator_index(name) {
            None => self.add_generator(name, replacement),
            Some(g) => {
                for (ri, r) in self.relators.iter().enumerate() {
                    if let Some(expr) = Self::solve_for(r, g) {
                        if &expr == replacement {
                            return Ok(self.eliminate_with(g, ri, &expr));
                        }
                    }
                }
                Err(FpError::NotEliminable(format!(
                    "no relator determines `{name}` as the given word"
                )))
            }
        }
    }

    /// Renders a word with this presentation's generator names, e.g.
    /// `a^-1*m*a*m`. The empty word renders as `1`.
    pub fn word_string(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".to_string();
        }
        let parts: Vec<String> = w
            .syllables()
            .iter()
            .map(|&(g, e)| {
                let name = &self.generators[g];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators.join(", ");
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_string(r)).collect();
        write!(f, "< {} | {} >", gens, rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(rank: usize, torsion: &[i64]) -> AbelianInvariants {
        AbelianInvariants {
            rank,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    #[test]
    fn free_reduction_merges_and_cancels() {
        let w = free_reduce(&[(0, 1), (1, 1), (1, -1), (0, 1)]);
        assert_eq!(w.syllables(), &[(0, 2)]);
        let w = free_reduce(&[(0, 1), (0, -1)]);
        assert!(w.is_identity());
        let w = free_reduce(&[(2, 3), (2, -1), (1, 0), (2, -2), (0, 1)]);
        assert_eq!(w.syllables(), &[(0, 1)]);
    }

    #[test]
    fn inverse_and_concat() {
        let w = Word::from_syllables([(0, 2), (1, -1)]);
        assert_eq!(w.inverse().syllables(), &[(1, 1), (0, -2)]);
        assert!(w.concat(&w.inverse()).is_identity());
        assert_eq!(w.pow(-2), w.inverse().concat(&w.inverse()));
    }

    #[test]
    fn abelianize_free_and_torsion() {
        // < a, b | [a,b] > = Z^2
        let p = Presentation::new(
            alloc::vec!["a".into(), "b".into()],
            alloc::vec![commutator(&Word::gen(0), &Word::gen(1))],
        )
        .unwrap();
        assert_eq!(p.abelianize(), inv(2, &[]));
        // < a, b | a b a^-1 b > = Z + Z/2
        let p = Presentation::new(
            alloc::vec!["a".into(), "b".into()],
            alloc::vec![Word::from_syllables([(0, 1), (1, 1), (0, -1), (1, 1)])],
        )
        .unwrap();
        assert_eq!(p.abelianize(), inv(1, &[2]));
        // no relators: free of rank 3
        let p = Presentation::new(
            alloc::vec!["a".into(), "b".into(), "c".into()],
            alloc::vec![],
        )
        .unwrap();
        assert_eq!(p.abelianize(), inv(3, &[]));
    }

    #[test]
    fn add_then_eliminate_roundtrips() {
        let p = Presentation::new(
            alloc::vec!["x".into(), "y".into()],
            alloc::vec![commutator(&Word::gen(0), &Word::gen(1))],
        )
        .unwrap();
        let defining = Word::from_syllables([(0, 1), (1, 2)]); // g = x y^2
        let q = p.add_generator("g", &defining).unwrap();
        assert_eq!(q.generators(), &["x", "y", "g"]);
        assert_eq!(q.abelianize(), p.abelianize());
        // eliminate x: the defining relator g^-1 x y^2 determines x = g y^-2
        let r = q.eliminate_generator(0).unwrap();
        assert_eq!(r.generators(), &["y", "g"]);
        assert_eq!(r.abelianize(), p.abelianize());
        // the surviving relator is the rewritten commutator [g, y]
        assert_eq!(r.relators().len(), 1);
        assert_eq!(
            r.relators()[0],
            commutator(&Word::gen(1), &Word::gen(0))
        );
    }

    #[test]
    fn substitute_checks_the_claimed_word() {
        let p = Presentation::new(
            alloc::vec!["x".into(), "y".into()],
            alloc::vec![],
        )
        .unwrap();
        let q = p
            .substitute("g", &Word::from_syllables([(0, 1), (1, 1)]))
            .unwrap(); // enlargement
        assert_eq!(q.generators(), &["x", "y", "g"]);
        // eliminating x through g's defining relator: x = g y^-1
        let claimed = Word::from_syllables([(2, 1), (1, -1)]);
        let r = q.substitute("x", &claimed).unwrap();
        assert_eq!(r.generators(), &["y", "g"]);
        // a wrong claim is refused
        let wrong = Word::from_syllables([(1, 1), (0, 1)]);
        assert!(matches!(
            q.substitute("x", &wrong),
            Err(FpError::NotEliminable(_))
        ));
        // eliminating a generator with no determining relator is refused
        assert!(matches!(
            p.eliminate_generator(1),
            Err(FpError::NotEliminable(_))
        ));
    }

    #[test]
    fn display_formats() {
        let p = Presentation::new(
            alloc::vec!["a".into(), "m".into()],
            alloc::vec![Word::from_syllables([(0, -1), (1, 1), (0, 1), (1, 1)])],
        )
        .unwrap();
        assert_eq!(format!("{p}"), "< a, m | a^-1*m*a*m >");
        assert_eq!(inv(0, &[]).to_string(), "0");
        assert_eq!(inv(2, &[2, 4]).to_string(), "Z^2 + Z/2 + Z/4");
        assert_eq!(inv(1, &[]).to_string(), "Z");
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            Presentation::new(alloc::vec!["a".into(), "a".into()], alloc::vec![]),
            Err(FpError::BadGeneratorNames(_))
        ));
        assert!(matches!(
            Presentation::new(alloc::vec!["a".into()], alloc::vec![Word::gen(1)]),
            Err(FpError::GeneratorIndexOutOfRange { .. })
        ));
    }
}
