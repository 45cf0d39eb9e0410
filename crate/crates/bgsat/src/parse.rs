//! Knot descriptor grammar:
//!
//! ```text
//! D ::= U
//!     | T(p,q)
//!     | C(m,n)[D]
//!     | BG(w,b,t)[D]
//!     | PRETZEL(-2,3,7)
//! ```
//!
//! `C(m,n)` is sugar for `BG(m,0,n)`. Whitespace is permitted between
//! tokens. Syntax errors carry a byte position; invalid parameters
//! surface the underlying domain error.

use thiserror::Error;

use crate::hf::{HfError, KnotDescriptor};
use crate::pattern::{BergeGabaiPattern, PatternError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Knot(#[from] HfError),
}

/// Parses a descriptor string; the whole input must be consumed.
pub fn parse_descriptor(text: &str) -> Result<KnotDescriptor, ParseError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let d = p.descriptor()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.syntax("trailing input"));
    }
    Ok(d)
}

/// Canonical string form; satisfies
/// `parse_descriptor(render_descriptor(d)) == d`.
pub fn render_descriptor(d: &KnotDescriptor) -> String {
    d.to_string()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("expected `{}`", ch as char)))
        }
    }

    fn ident(&mut self) -> Result<&str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected a descriptor name"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii"))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.syntax("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| ParseError::Syntax {
                pos: start,
                message: "integer out of range".to_string(),
            })
    }

    /// `(a, b)` or `(a, b, c)` depending on `arity`.
    fn int_args(&mut self, arity: usize) -> Result<Vec<i64>, ParseError> {
        self.expect(b'(')?;
        let mut args = Vec::with_capacity(arity);
        for i in 0..arity {
            if i > 0 {
                self.expect(b',')?;
            }
            args.push(self.integer()?);
        }
        self.expect(b')')?;
        Ok(args)
    }

    fn companion(&mut self) -> Result<KnotDescriptor, ParseError> {
        self.expect(b'[')?;
        let d = self.descriptor()?;
        self.expect(b']')?;
        Ok(d)
    }

    fn descriptor(&mut self) -> Result<KnotDescriptor, ParseError> {
        self.skip_ws();
        let name_pos = self.pos;
        let name = self.ident()?.to_string();
        match name.as_str() {
            "U" => Ok(KnotDescriptor::Unknot),
            "T" => {
                let a = self.int_args(2)?;
                Ok(KnotDescriptor::torus(a[0], a[1])?)
            }
            "C" => {
                let a = self.int_args(2)?;
                let pattern = BergeGabaiPattern::cable(a[0], a[1])?;
                Ok(KnotDescriptor::satellite(pattern, self.companion()?))
            }
            "BG" => {
                let a = self.int_args(3)?;
                let pattern = BergeGabaiPattern::new(a[0], a[1], a[2])?;
                Ok(KnotDescriptor::satellite(pattern, self.companion()?))
            }
            "PRETZEL" => {
                let a = self.int_args(3)?;
                if a != [-2, 3, 7] {
                    return Err(ParseError::Syntax {
                        pos: name_pos,
                        message: format!(
                            "unsupported pretzel ({},{},{}); only PRETZEL(-2,3,7) is cataloged",
                            a[0], a[1], a[2]
                        ),
                    });
                }
                Ok(KnotDescriptor::pretzel_m2_3_7())
            }
            _ => Err(ParseError::Syntax {
                pos: name_pos,
                message: format!("unknown descriptor `{name}`"),
            }),
        }
    }
}
