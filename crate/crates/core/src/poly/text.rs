//! Shared term grammar for polynomial text: a signed sum of
//! `c*v^i*w^j` terms with `c` in `p/q` form and `*` between factors.

use num_traits::One;

use crate::arith::{Integer, Rational};
use crate::poly::PolyError;

pub(crate) struct Term {
    pub coeff: Rational,
    pub vars: Vec<(String, u32)>,
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

#[derive(Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Number(Integer),
    Ident(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self) -> PolyError {
        PolyError::Parse(self.src.to_string())
    }

    fn next(&mut self) -> Result<Tok, PolyError> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.bytes.len() {
            return Ok(Tok::End);
        }
        let b = self.bytes[self.pos];
        self.pos += 1;
        match b {
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'*' => Ok(Tok::Star),
            b'^' => Ok(Tok::Caret),
            b'/' => Ok(Tok::Slash),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: Integer = self.src[start..self.pos].parse().map_err(|_| self.error())?;
                Ok(Tok::Number(n))
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos - 1;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(self.src[start..self.pos].to_string()))
            }
            _ => Err(self.error()),
        }
    }

    fn peek(&mut self) -> Result<Tok, PolyError> {
        let save = self.pos;
        let t = self.next();
        self.pos = save;
        t
    }
}

/// Parse a sum of terms. Exponents are nonnegative; repeated variables within
/// a term accumulate.
pub(crate) fn parse_terms(src: &str) -> Result<Vec<Term>, PolyError> {
    let mut lx = Lexer::new(src);
    let mut terms = Vec::new();
    let mut tok = lx.next()?;
    if tok == Tok::End {
        return Err(lx.error());
    }
    loop {
        // optional sign
        let mut sign = 1i32;
        while matches!(tok, Tok::Plus | Tok::Minus) {
            if tok == Tok::Minus {
                sign = -sign;
            }
            tok = lx.next()?;
        }
        let mut coeff = Rational::one();
        let mut vars: Vec<(String, u32)> = Vec::new();
        loop {
            match tok {
                Tok::Number(n) => {
                    let denom = if lx.peek()? == Tok::Slash {
                        lx.next()?; // consume '/'
                        match lx.next()? {
                            Tok::Number(d) => d,
                            _ => return Err(lx.error()),
                        }
                    } else {
                        Integer::one()
                    };
                    if denom == Integer::from(0) {
                        return Err(lx.error());
                    }
                    coeff *= Rational::new(n, denom);
                }
                Tok::Ident(name) => {
                    let exp = if lx.peek()? == Tok::Caret {
                        lx.next()?; // consume '^'
                        match lx.next()? {
                            Tok::Number(e) => {
                                u32::try_from(&e).map_err(|_| lx.error())?
                            }
                            _ => return Err(lx.error()),
                        }
                    } else {
                        1
                    };
                    match vars.iter_mut().find(|(v, _)| *v == name) {
                        Some((_, e)) => *e += exp,
                        None => vars.push((name, exp)),
                    }
                }
                _ => return Err(lx.error()),
            }
            tok = lx.next()?;
            if tok == Tok::Star {
                tok = lx.next()?;
                continue;
            }
            break;
        }
        if sign < 0 {
            coeff = -coeff;
        }
        terms.push(Term { coeff, vars });
        match tok {
            Tok::End => break,
            Tok::Plus | Tok::Minus => continue,
            _ => return Err(lx.error()),
        }
    }
    Ok(terms)
}
