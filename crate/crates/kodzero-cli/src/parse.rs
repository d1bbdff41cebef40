//! Parsers for the textual input grammar: surface families, class vectors,
//! 2x2 integer matrices, torus-bundle literals, family tags, and gluing
//! parameter lists. All literals are ASCII; whitespace is tolerated between
//! tokens. Renderings produced by the library's `Display` implementations
//! parse back to the same value.

use kodzero_core::homology::SurfaceFamily;
use kodzero_core::torusbundle::{FamilyTag, Mat2, TablePattern};
use std::fmt;

/// A failed parse: the offending input and what was expected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// The full input text.
    pub input: String,
    /// Human description of the expected form.
    pub expected: &'static str,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse {:?}: expected {}", self.input, self.expected)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(input: &str, expected: &'static str) -> Result<T, ParseError> {
    Err(ParseError {
        input: input.to_string(),
        expected,
    })
}

/// Character cursor with token helpers.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    /// Consumes a literal token (after skipping whitespace).
    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    /// Consumes a signed 64-bit integer.
    fn int(&mut self) -> Option<i64> {
        self.skip_ws();
        let rest = self.rest();
        let mut len = 0;
        let bytes = rest.as_bytes();
        if len < bytes.len() && (bytes[len] == b'-' || bytes[len] == b'+') {
            len += 1;
        }
        let digits_start = len;
        while len < bytes.len() && bytes[len].is_ascii_digit() {
            len += 1;
        }
        if len == digits_start {
            return None;
        }
        let parsed: i64 = rest[..len].parse().ok()?;
        self.pos += len;
        Some(parsed)
    }

    /// Consumes an unsigned 32-bit integer (no sign).
    fn uint(&mut self) -> Option<u32> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let parsed: u32 = rest[..len].parse().ok()?;
        self.pos += len;
        Some(parsed)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }
}

/// Parses a surface-family spec:
/// `CP2[#k]`, `E1` (alias for `CP2#9`), `S2xS2`, `S2xT2[#k]`, `S2~xT2`,
/// `S2xSigma<h>[#k]`, `S2~xSigma<h>` with genus `h >= 1`.
pub fn family(input: &str) -> Result<SurfaceFamily, ParseError> {
    const EXPECTED: &str =
        "a surface family: CP2[#k], E1, S2xS2, S2xT2[#k], S2~xT2, S2xSigma<h>[#k], S2~xSigma<h>";
    let mut c = Cursor::new(input);
    c.skip_ws();
    let fam = if c.eat("CP2") {
        let k = if c.eat("#") {
            match c.uint() {
                Some(k) => k,
                None => return err(input, EXPECTED),
            }
        } else {
            0
        };
        SurfaceFamily::CP2Blowup(k)
    } else if c.eat("E1") {
        SurfaceFamily::CP2Blowup(9)
    } else if c.eat("S2xS2") {
        SurfaceFamily::S2xS2
    } else if c.eat("S2xSigma") {
        let genus = match c.uint() {
            Some(h) if h >= 1 => h,
            _ => return err(input, EXPECTED),
        };
        let blowups = if c.eat("#") {
            match c.uint() {
                Some(k) => k,
                None => return err(input, EXPECTED),
            }
        } else {
            0
        };
        SurfaceFamily::RuledTrivial { genus, blowups }
    } else if c.eat("S2xT2") {
        let blowups = if c.eat("#") {
            match c.uint() {
                Some(k) => k,
                None => return err(input, EXPECTED),
            }
        } else {
            0
        };
        SurfaceFamily::RuledTrivial { genus: 1, blowups }
    } else if c.eat("S2~xSigma") {
        let genus = match c.uint() {
            Some(h) if h >= 1 => h,
            _ => return err(input, EXPECTED),
        };
        SurfaceFamily::RuledTwisted { genus }
    } else if c.eat("S2~xT2") {
        SurfaceFamily::RuledTwisted { genus: 1 }
    } else {
        return err(input, EXPECTED);
    };
    if !c.at_end() {
        return err(input, EXPECTED);
    }
    Ok(fam)
}

/// Parses a class vector `[c1,c2,...]` (possibly empty: `[]`).
pub fn class_vector(input: &str) -> Result<Vec<i64>, ParseError> {
    const EXPECTED: &str = "a class vector like [3,-1,-1]";
    let mut c = Cursor::new(input);
    let coeffs = match vector_body(&mut c) {
        Some(v) => v,
        None => return err(input, EXPECTED),
    };
    if !c.at_end() {
        return err(input, EXPECTED);
    }
    Ok(coeffs)
}

/// `[n1,n2,...]` including `[]`; returns `None` on malformed input.
fn vector_body(c: &mut Cursor) -> Option<Vec<i64>> {
    if !c.eat("[") {
        return None;
    }
    let mut out = Vec::new();
    if c.eat("]") {
        return Some(out);
    }
    loop {
        out.push(c.int()?);
        if c.eat("]") {
            return Some(out);
        }
        if !c.eat(",") {
            return None;
        }
    }
}

/// `[[a,b],[c,d]]`; returns `None` on malformed input.
fn mat2_body(c: &mut Cursor) -> Option<Mat2> {
    if !c.eat("[") {
        return None;
    }
    let row = |c: &mut Cursor| -> Option<[i64; 2]> {
        if !c.eat("[") {
            return None;
        }
        let x = c.int()?;
        if !c.eat(",") {
            return None;
        }
        let y = c.int()?;
        if !c.eat("]") {
            return None;
        }
        Some([x, y])
    };
    let top = row(c)?;
    if !c.eat(",") {
        return None;
    }
    let bottom = row(c)?;
    if !c.eat("]") {
        return None;
    }
    Some(Mat2([top, bottom]))
}

/// Parses a 2x2 integer matrix `[[a,b],[c,d]]`.
pub fn mat2(input: &str) -> Result<Mat2, ParseError> {
    const EXPECTED: &str = "a 2x2 integer matrix like [[1,0],[1,1]]";
    let mut c = Cursor::new(input);
    let m = match mat2_body(&mut c) {
        Some(m) => m,
        None => return err(input, EXPECTED),
    };
    if !c.at_end() {
        return err(input, EXPECTED);
    }
    Ok(m)
}

/// Parses a torus-bundle literal `M([[a,b],[c,d]],[[e,f],[g,h]];(m,n))` into
/// its raw parts (monodromies and twist); bundle validity (determinants,
/// commutation) is checked at construction, not here.
pub fn bundle_parts(input: &str) -> Result<(Mat2, Mat2, (i64, i64)), ParseError> {
    const EXPECTED: &str = "a bundle literal like M([[1,0],[0,1]],[[1,0],[0,1]];(0,0))";
    let mut c = Cursor::new(input);
    let parse = |c: &mut Cursor| -> Option<(Mat2, Mat2, (i64, i64))> {
        if !c.eat("M") || !c.eat("(") {
            return None;
        }
        let a = mat2_body(c)?;
        if !c.eat(",") {
            return None;
        }
        let b = mat2_body(c)?;
        if !c.eat(";") || !c.eat("(") {
            return None;
        }
        let m = c.int()?;
        if !c.eat(",") {
            return None;
        }
        let n = c.int()?;
        if !c.eat(")") || !c.eat(")") {
            return None;
        }
        Some((a, b, (m, n)))
    };
    let parts = match parse(&mut c) {
        Some(p) => p,
        None => return err(input, EXPECTED),
    };
    if !c.at_end() {
        return err(input, EXPECTED);
    }
    Ok(parts)
}

/// Parses a family-tag literal: the pattern's printed form followed by
/// `with z=<int>` (free-parameter patterns) or `with y=<int>` (fixed-parity
/// patterns, parameter `2y + parity`).
pub fn tag(input: &str) -> Result<FamilyTag, ParseError> {
    const EXPECTED: &str = "a family tag like M(I,[[-1,z],[0,-1]];(0,0)) with z=-2";
    let trimmed = input.trim();
    for pattern in TablePattern::ALL {
        let Some(rest) = trimmed.strip_prefix(pattern.as_str()) else {
            continue;
        };
        let mut c = Cursor::new(rest);
        if !c.eat("with") {
            return err(input, EXPECTED);
        }
        let param = match pattern.required_parity() {
            None => {
                if !c.eat("z") || !c.eat("=") {
                    return err(input, EXPECTED);
                }
                match c.int() {
                    Some(z) => z,
                    None => return err(input, EXPECTED),
                }
            }
            Some(parity) => {
                if !c.eat("y") || !c.eat("=") {
                    return err(input, EXPECTED);
                }
                match c.int() {
                    Some(y) => 2 * y + parity,
                    None => return err(input, EXPECTED),
                }
            }
        };
        if !c.at_end() {
            return err(input, EXPECTED);
        }
        return match FamilyTag::new(pattern, param) {
            Ok(t) => Ok(t),
            Err(_) => err(input, EXPECTED),
        };
    }
    err(input, EXPECTED)
}

/// Parses a comma-separated list of exactly `n` integers (gluing parameters).
pub fn int_list(input: &str, n: usize) -> Result<Vec<i64>, ParseError> {
    const EXPECTED: &str = "a comma-separated integer list like 0,0,1,0,0";
    let mut c = Cursor::new(input);
    let mut out = Vec::new();
    loop {
        match c.int() {
            Some(v) => out.push(v),
            None => return err(input, EXPECTED),
        }
        if c.at_end() {
            break;
        }
        if !c.eat(",") {
            return err(input, EXPECTED);
        }
    }
    if out.len() != n {
        return err(input, EXPECTED);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_parse_and_round_trip() {
        let cases = [
            ("CP2", SurfaceFamily::CP2Blowup(0)),
            ("CP2#9", SurfaceFamily::CP2Blowup(9)),
            ("E1", SurfaceFamily::CP2Blowup(9)),
            ("S2xS2", SurfaceFamily::S2xS2),
            (
                "S2xT2",
                SurfaceFamily::RuledTrivial {
                    genus: 1,
                    blowups: 0,
                },
            ),
            (
                "S2xT2#8",
                SurfaceFamily::RuledTrivial {
                    genus: 1,
                    blowups: 8,
                },
            ),
            ("S2~xT2", SurfaceFamily::RuledTwisted { genus: 1 }),
            (
                "S2xSigma3#2",
                SurfaceFamily::RuledTrivial {
                    genus: 3,
                    blowups: 2,
                },
            ),
            ("S2~xSigma2", SurfaceFamily::RuledTwisted { genus: 2 }),
        ];
        for (text, want) in cases {
            assert_eq!(family(text).unwrap(), want, "input {text}");
        }
        // Display output parses back to the same family
        for (_, fam) in cases {
            assert_eq!(family(&fam.to_string()).unwrap(), fam);
        }
    }

    #[test]
    fn family_rejections() {
        for bad in [
            "CP2#x", "CP3", "S2xT2#", "S2xSigma0", "S2~xSigma0", "S2xT3", "", "CP2 #1x",
            "CP2#-1", "S2xS2 extra",
        ] {
            assert!(family(bad).is_err(), "input {bad:?} should fail");
        }
    }

    #[test]
    fn vectors_and_matrices() {
        assert_eq!(class_vector("[3,-1,-1]").unwrap(), vec![3, -1, -1]);
        assert_eq!(class_vector("[ 1 , 2 ]").unwrap(), vec![1, 2]);
        assert_eq!(class_vector("[]").unwrap(), Vec::<i64>::new());
        assert!(class_vector("[1,]").is_err());
        assert!(class_vector("1,2").is_err());

        assert_eq!(mat2("[[1,0],[1,1]]").unwrap(), Mat2([[1, 0], [1, 1]]));
        assert_eq!(
            mat2(" [[ -1, 2 ], [ 0, -1 ]] ").unwrap(),
            Mat2([[-1, 2], [0, -1]])
        );
        assert!(mat2("[[1,0],[1]]").is_err());
        assert!(mat2("[[1,0],[1,1]] junk").is_err());
    }

    #[test]
    fn bundle_literals_round_trip() {
        use kodzero_core::torusbundle::TorusBundle;
        let text = "M([[-1,1],[0,-1]],[[1,-1],[0,1]];(0,0))";
        let (a, b, v) = bundle_parts(text).unwrap();
        let bundle = TorusBundle::new(a, b, v).unwrap();
        assert_eq!(bundle.to_string(), text);
        assert!(bundle_parts("M([[1,0],[0,1]],[[1,0],[0,1]];(0))").is_err());
        assert!(bundle_parts("M([[1,0],[0,1]];(0,0))").is_err());
    }

    #[test]
    fn tag_literals_round_trip() {
        for pattern in TablePattern::ALL {
            let params: &[i64] = match pattern.required_parity() {
                None => &[0, 1, -2, 5],
                Some(0) => &[0, 2, -4],
                Some(_) => &[1, 3, -5],
            };
            for &p in params {
                let t = FamilyTag::new(pattern, p).unwrap();
                assert_eq!(tag(&t.to_string()).unwrap(), t, "tag {t}");
            }
        }
        assert!(tag("M(I,[[-1,z],[0,-1]];(0,0)) with y=1").is_err());
        assert!(tag("M(I,[[-1,z],[0,-1]];(0,0))").is_err());
        assert!(tag("nonsense with z=1").is_err());
    }

    #[test]
    fn int_lists() {
        assert_eq!(int_list("0,0,1,0,0", 5).unwrap(), vec![0, 0, 1, 0, 0]);
        assert_eq!(int_list(" 1, -2 , 3 ,4,5 ", 5).unwrap(), vec![1, -2, 3, 4, 5]);
        assert!(int_list("1,2,3", 5).is_err());
        assert!(int_list("1,2,3,4,", 5).is_err());
        assert!(int_list("a,b,c,d,e", 5).is_err());
    }
}
