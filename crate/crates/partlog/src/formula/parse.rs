//! Recursive-descent parser for the ASCII formula syntax.
//!
//! Binding, tightest first: `~`, `/\`, `\/`, `|`, `=>` (right-assoc),
//! `<=>`/`<~>`. The other binary operators associate to the left.
//! `nor(a, b)` and `diff(a, b)` are written in function form.

use super::Formula;
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Tilde,
    Meet,
    Join,
    Bar,
    Arrow,
    Equiv,
    Inequiv,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(n) => format!("`{n}`"),
            Tok::End => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Zero => "0",
            Tok::One => "1",
            Tok::Tilde => "~",
            Tok::Meet => "/\\",
            Tok::Join => "\\/",
            Tok::Bar => "|",
            Tok::Arrow => "=>",
            Tok::Equiv => "<=>",
            Tok::Inequiv => "<~>",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Ident(_) | Tok::End => "",
        }
    }
}

const BINARY: [&str; 6] = ["/\\", "\\/", "|", "=>", "<=>", "<~>"];
const OPERAND: [&str; 5] = ["(", "0", "1", "atom", "~"];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let rest = &text[i..];
        let fixed = [
            ("<=>", Tok::Equiv),
            ("<~>", Tok::Inequiv),
            ("/\\", Tok::Meet),
            ("\\/", Tok::Join),
            ("=>", Tok::Arrow),
            ("|", Tok::Bar),
            ("~", Tok::Tilde),
            ("(", Tok::LParen),
            (")", Tok::RParen),
            (",", Tok::Comma),
        ];
        if let Some((sym, tok)) = fixed.iter().find(|(sym, _)| rest.starts_with(sym)) {
            out.push((start, tok.clone()));
            i += sym.len();
            continue;
        }
        if c.is_ascii_lowercase() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let tok = match &text[start..i] {
                "0" => Tok::Zero,
                "1" => Tok::One,
                other => {
                    return Err(ParseError {
                        position: start,
                        expected: vec!["0".into(), "1".into()],
                        found: format!("`{other}`"),
                    })
                }
            };
            out.push((start, tok));
            continue;
        }
        let ch = rest.chars().next().unwrap_or_default();
        let mut expected: Vec<String> = OPERAND.iter().chain(&BINARY).map(|s| s.to_string()).collect();
        expected.extend([")".to_string(), ",".to_string()]);
        return Err(ParseError {
            position: start,
            expected,
            found: format!("`{ch}`"),
        });
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (position, tok) = &self.toks[self.at];
        ParseError {
            position: *position,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[tok.symbol()]))
        }
    }

    fn equiv(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        loop {
            match self.peek() {
                Tok::Equiv => {
                    self.bump();
                    lhs = Formula::equiv(lhs, self.implication()?);
                }
                Tok::Inequiv => {
                    self.bump();
                    lhs = Formula::inequiv(lhs, self.implication()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.nand()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            return Ok(Formula::implies(lhs, self.implication()?));
        }
        Ok(lhs)
    }

    fn left_assoc(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Formula, ParseError>,
        build: fn(Formula, Formula) -> Formula,
    ) -> Result<Formula, ParseError> {
        let mut lhs = next(self)?;
        while *self.peek() == op {
            self.bump();
            lhs = build(lhs, next(self)?);
        }
        Ok(lhs)
    }

    fn nand(&mut self) -> Result<Formula, ParseError> {
        self.left_assoc(Tok::Bar, Self::join, Formula::nand)
    }

    fn join(&mut self) -> Result<Formula, ParseError> {
        self.left_assoc(Tok::Join, Self::meet, Formula::join)
    }

    fn meet(&mut self) -> Result<Formula, ParseError> {
        self.left_assoc(Tok::Meet, Self::unary, Formula::meet)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Tok::Tilde {
            self.bump();
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Zero => {
                self.bump();
                Ok(Formula::Zero)
            }
            Tok::One => {
                self.bump();
                Ok(Formula::One)
            }
            Tok::Ident(name) => {
                let build: Option<fn(Formula, Formula) -> Formula> = match (name.as_str(), self.peek2()) {
                    ("nor", Tok::LParen) => Some(Formula::nor),
                    ("diff", Tok::LParen) => Some(Formula::diff),
                    _ => None,
                };
                self.bump();
                match build {
                    None => Ok(Formula::Atom(name)),
                    Some(build) => {
                        self.expect(Tok::LParen)?;
                        let a = self.equiv()?;
                        self.expect(Tok::Comma)?;
                        let b = self.equiv()?;
                        self.expect(Tok::RParen)?;
                        Ok(build(a, b))
                    }
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.equiv()?;
                if *self.peek() != Tok::RParen {
                    let mut expected = BINARY.to_vec();
                    expected.push(")");
                    return Err(self.error(&expected));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(&OPERAND)),
        }
    }
}

/// Parses formula text into a surface AST (derived connectives kept).
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.equiv()?;
    if *p.peek() != Tok::End {
        let mut expected = BINARY.to_vec();
        expected.push("end of input");
        return Err(p.error(&expected));
    }
    Ok(f)
}
