//! Lexer and recursive-descent parser.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};

use super::{Expr, Func, Var};

#[derive(Clone, Debug, PartialEq)]
pub enum ParseError {
    /// Malformed input: byte offset plus what was expected there.
    Syntax { offset: usize, expected: String },
    /// A name outside the declared variables and the function set.
    UnknownIdentifier { offset: usize, name: String },
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ParseError::Syntax { offset, expected } => {
                write!(f, "syntax error at byte {offset}: expected {expected}")
            }
            ParseError::UnknownIdentifier { offset, name } => {
                write!(f, "unknown identifier `{name}` at byte {offset}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token plus its starting byte offset.
    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, start));
        }
        let c = self.src[self.pos] as char;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' | '.' => {
                let mut end = self.pos;
                let digits = |b: u8| (b as char).is_ascii_digit();
                while end < self.src.len() && digits(self.src[end]) {
                    end += 1;
                }
                if end < self.src.len() && self.src[end] == b'.' {
                    end += 1;
                    while end < self.src.len() && digits(self.src[end]) {
                        end += 1;
                    }
                }
                if end < self.src.len() && (self.src[end] == b'e' || self.src[end] == b'E') {
                    let mut cursor = end + 1;
                    if cursor < self.src.len()
                        && (self.src[cursor] == b'+' || self.src[cursor] == b'-')
                    {
                        cursor += 1;
                    }
                    if cursor < self.src.len() && digits(self.src[cursor]) {
                        while cursor < self.src.len() && digits(self.src[cursor]) {
                            cursor += 1;
                        }
                        end = cursor;
                    }
                }
                let text = core::str::from_utf8(&self.src[self.pos..end]).unwrap();
                let v: f64 = text.parse().map_err(|_| ParseError::Syntax {
                    offset: start,
                    expected: "a numeric literal".to_string(),
                })?;
                self.pos = end;
                return Ok((Tok::Num(v), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut end = self.pos;
                while end < self.src.len() {
                    let b = self.src[end] as char;
                    if b.is_ascii_alphanumeric() || b == '_' {
                        end += 1;
                    } else {
                        break;
                    }
                }
                let name = core::str::from_utf8(&self.src[self.pos..end])
                    .unwrap()
                    .to_string();
                self.pos = end;
                return Ok((Tok::Ident(name), start));
            }
            _ => {
                return Err(ParseError::Syntax {
                    offset: start,
                    expected: format!("a token, found `{c}`"),
                })
            }
        };
        self.pos += 1;
        Ok((tok, start))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    look: (Tok, usize),
    vars: &'a [(&'a str, Var)],
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a [(&'a str, Var)]) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let look = lexer.next()?;
        Ok(Parser { lexer, look, vars })
    }

    fn advance(&mut self) -> Result<(Tok, usize), ParseError> {
        let mut next = self.lexer.next()?;
        core::mem::swap(&mut self.look, &mut next);
        Ok(next)
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if self.look.0 == tok {
            self.advance()?;
            Ok(())
        } else {
            Err(ParseError::Syntax {
                offset: self.look.1,
                expected: expected.to_string(),
            })
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.look.0 {
                Tok::Plus => {
                    self.advance()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.advance()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.look.0 {
                Tok::Star => {
                    self.advance()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.advance()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.look.0 == Tok::Minus {
            self.advance()?;
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.look.0 == Tok::Caret {
            self.advance()?;
            base = Expr::Pow(Box::new(base), self.exponent()?);
        }
        Ok(base)
    }

    /// Integer literal, optionally negated, optionally parenthesized.
    fn exponent(&mut self) -> Result<i32, ParseError> {
        let parenthesized = self.look.0 == Tok::LParen;
        if parenthesized {
            self.advance()?;
        }
        let negative = self.look.0 == Tok::Minus;
        if negative {
            self.advance()?;
        }
        let (tok, offset) = self.look.clone();
        let n = match tok {
            Tok::Num(v) if v.fract() == 0.0 && v.abs() <= i32::MAX as f64 => v as i32,
            _ => {
                return Err(ParseError::Syntax {
                    offset,
                    expected: "an integer exponent".to_string(),
                })
            }
        };
        self.advance()?;
        if parenthesized {
            self.expect(Tok::RParen, "`)`")?;
        }
        Ok(if negative { -n } else { n })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, offset) = self.look.clone();
        match tok {
            Tok::Num(v) => {
                self.advance()?;
                Ok(Expr::Num(v))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.advance()?;
                if let Some(func) = Func::from_name(&name) {
                    self.expect(Tok::LParen, "`(`")?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "`)`")?;
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                for (vn, var) in self.vars {
                    if *vn == name {
                        return Ok(Expr::Var(*var));
                    }
                }
                Err(ParseError::UnknownIdentifier { offset, name })
            }
            _ => Err(ParseError::Syntax {
                offset,
                expected: "a literal, variable, function, or `(`".to_string(),
            }),
        }
    }
}

const HAMILTONIAN_VARS: [(&str, Var); 3] =
    [("phi", Var::Phi), ("p0", Var::P0), ("p1", Var::P1)];

/// Parses a Hamiltonian over the variables `phi`, `p0`, `p1`.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    parse_named(src, &HAMILTONIAN_VARS)
}

/// Parses with a caller-supplied variable table (used for boundary and
/// initial-data expressions in a single named variable).
pub fn parse_named(src: &str, vars: &[(&str, Var)]) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src, vars)?;
    let e = p.expr()?;
    if p.look.0 != Tok::End {
        return Err(ParseError::Syntax {
            offset: p.look.1,
            expected: "end of input".to_string(),
        });
    }
    Ok(e)
}
