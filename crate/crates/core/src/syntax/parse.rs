use super::{Connective, Formula};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownToken(char),
    UnexpectedToken { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    UnclosedParen,
    UnmatchedParen,
    MixedArrows,
    Empty,
    MissingSemicolon,
    MissingTurnstile,
    DuplicateTurnstile,
}

/// A syntax error; `position` is a byte offset into the text handed to the
/// top-level parser.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {}", describe(.kind))]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::UnknownToken(c) => format!("unknown token {c:?}"),
        ParseErrorKind::UnexpectedToken { found, expected } => {
            format!("found {found:?}, expected {expected}")
        }
        ParseErrorKind::UnexpectedEnd { expected } => {
            format!("unexpected end of input, expected {expected}")
        }
        ParseErrorKind::UnclosedParen => "unbalanced parentheses: '(' is never closed".into(),
        ParseErrorKind::UnmatchedParen => "unbalanced parentheses: unmatched ')'".into(),
        ParseErrorKind::MixedArrows => {
            "'->' and '-<' cannot be mixed without parentheses".into()
        }
        ParseErrorKind::Empty => "empty formula".into(),
        ParseErrorKind::MissingSemicolon => "sequent needs ';' between assumptions and counterassumptions".into(),
        ParseErrorKind::MissingTurnstile => "sequent needs '|-+' or '|--' before the succedent".into(),
        ParseErrorKind::DuplicateTurnstile => "sequent has more than one turnstile".into(),
    }
}

impl ParseError {
    pub(crate) fn shifted(mut self, offset: usize) -> ParseError {
        self.position += offset;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bottom,
    Top,
    Op(Connective),
    LParen,
    RParen,
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::Bottom => "F".into(),
            Tok::Top => "T".into(),
            Tok::Op(c) => c.token().into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
        }
    }
}

pub(crate) fn is_atom_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    s != "F" && s != "T" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let two = bytes.get(i..i + 2);
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ if two == Some(b"/\\") => Tok::Op(Connective::And),
            _ if two == Some(b"\\/") => Tok::Op(Connective::Or),
            _ if two == Some(b"->") => Tok::Op(Connective::Imp),
            _ if two == Some(b"-<") => Tok::Op(Connective::Coimp),
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "F" => Tok::Bottom,
                    "T" => Tok::Top,
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError { position: i, kind: ParseErrorKind::UnknownToken(ch) });
            }
        };
        let len = if matches!(tok, Tok::Op(_)) { 2 } else { 1 };
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            None => ParseError { position: self.end, kind: ParseErrorKind::UnexpectedEnd { expected } },
            Some(Tok::RParen) if expected == "a formula" || expected == "end of input" => {
                ParseError { position: self.offset(), kind: ParseErrorKind::UnmatchedParen }
            }
            Some(t) => ParseError {
                position: self.offset(),
                kind: ParseErrorKind::UnexpectedToken { found: t.text(), expected },
            },
        }
    }

    // arrow := disj ((-> | -<) disj)*, one arrow kind per level, folded right
    fn arrow(&mut self) -> Result<Formula, ParseError> {
        let mut operands = vec![self.disj()?];
        let mut kind: Option<Connective> = None;
        while let Some(Tok::Op(c @ (Connective::Imp | Connective::Coimp))) = self.peek() {
            let c = *c;
            if kind.is_some_and(|k| k != c) {
                return Err(ParseError { position: self.offset(), kind: ParseErrorKind::MixedArrows });
            }
            kind = Some(c);
            self.pos += 1;
            operands.push(self.disj()?);
        }
        let mut acc = operands.pop().expect("at least one operand");
        if let Some(k) = kind {
            while let Some(lhs) = operands.pop() {
                acc = k.apply(lhs, acc);
            }
        }
        Ok(acc)
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conj()?;
        while self.peek() == Some(&Tok::Op(Connective::Or)) {
            self.pos += 1;
            acc = Formula::or(acc, self.conj()?);
        }
        Ok(acc)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.primary()?;
        while self.peek() == Some(&Tok::Op(Connective::And)) {
            self.pos += 1;
            acc = Formula::and(acc, self.primary()?);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let f = match self.peek() {
            Some(Tok::Ident(name)) => Formula::Atom(name.clone()),
            Some(Tok::Bottom) => Formula::Bottom,
            Some(Tok::Top) => Formula::Top,
            Some(Tok::LParen) => {
                let open = self.offset();
                self.pos += 1;
                let inner = self.arrow()?;
                match self.peek() {
                    Some(Tok::RParen) => {}
                    None => {
                        return Err(ParseError { position: open, kind: ParseErrorKind::UnclosedParen })
                    }
                    Some(_) => return Err(self.err("')'")),
                }
                inner
            }
            _ => return Err(self.err("a formula")),
        };
        self.pos += 1;
        Ok(f)
    }
}

/// Parses the ASCII concrete syntax into a [`Formula`].
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError { position: 0, kind: ParseErrorKind::Empty });
    }
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let f = p.arrow()?;
    if p.peek().is_some() {
        return Err(p.err("end of input"));
    }
    Ok(f)
}
