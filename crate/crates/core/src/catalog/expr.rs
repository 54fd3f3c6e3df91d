use std::fmt;

use crate::error::{Error, Result};

/// A construction tree for a permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Sym(usize),
    Alt(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    Quaternion8,
    ElemAbelian(usize, usize),
    SL23,
    Direct(Box<GroupExpr>, Box<GroupExpr>),
    /// `normal ⋊ complement`; `action` lists, per complement generator
    /// (separated by `;`), images `gI->word` of the normal factor's generators.
    Semidirect {
        normal: Box<GroupExpr>,
        complement: Box<GroupExpr>,
        action: String,
    },
    Perm { degree: usize, gens: Vec<String> },
}

impl GroupExpr {
    pub fn direct(a: GroupExpr, b: GroupExpr) -> Self {
        GroupExpr::Direct(Box::new(a), Box::new(b))
    }

    pub fn semidirect(normal: GroupExpr, complement: GroupExpr, action: &str) -> Self {
        GroupExpr::Semidirect {
            normal: Box::new(normal),
            complement: Box::new(complement),
            action: action.to_string(),
        }
    }

    /// Order implied by the construction, assuming semidirect actions are
    /// faithful. `None` for explicit permutation generators.
    pub fn expected_order(&self) -> Option<u64> {
        use GroupExpr::*;
        Some(match self {
            Cyclic(n) => *n as u64,
            Sym(n) => (1..=*n as u64).product(),
            Alt(n) => ((1..=*n as u64).product::<u64>() / 2).max(1),
            Dihedral(n) => *n as u64,
            Quaternion8 => 8,
            ElemAbelian(p, k) => (*p as u64).checked_pow(*k as u32)?,
            SL23 => 24,
            Direct(a, b) => a.expected_order()?.checked_mul(b.expected_order()?)?,
            Semidirect {
                normal, complement, ..
            } => normal.expected_order()?.checked_mul(complement.expected_order()?)?,
            Perm { .. } => return None,
        })
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupExpr::*;
        match self {
            Cyclic(n) => write!(f, "Cyclic({n})"),
            Sym(n) => write!(f, "Sym({n})"),
            Alt(n) => write!(f, "Alt({n})"),
            Dihedral(n) => write!(f, "Dihedral({n})"),
            Quaternion8 => f.write_str("Quaternion8"),
            ElemAbelian(p, k) => write!(f, "ElemAbelian({p}, {k})"),
            SL23 => f.write_str("SL23"),
            Direct(a, b) => write!(f, "Direct({a}, {b})"),
            Semidirect {
                normal,
                complement,
                action,
            } => write!(f, "Semidirect({normal}, {complement}, \"{action}\")"),
            Perm { degree, gens } => {
                write!(f, "Perm({degree}")?;
                for g in gens {
                    write!(f, ", \"{g}\"")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Number(usize),
    Str(String),
    Open,
    Close,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let err = |offset: usize, message: String| Error::CycleSyntax { offset, message };
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            _ if c.is_whitespace() => i += 1,
            '(' => {
                out.push((start, Token::Open));
                i += 1;
            }
            ')' => {
                out.push((start, Token::Close));
                i += 1;
            }
            ',' => {
                out.push((start, Token::Comma));
                i += 1;
            }
            '"' => {
                i += 1;
                let body_start = i;
                while i < chars.len() && chars[i] != '"' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(err(start, "unterminated string".into()));
                }
                out.push((start, Token::Str(chars[body_start..i].iter().collect())));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s
                    .parse()
                    .map_err(|_| err(start, format!("number {s} too large")))?;
                out.push((start, Token::Number(n)));
            }
            _ if c.is_ascii_alphabetic() => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Token::Ident(chars[start..i].iter().collect())));
            }
            _ => return Err(err(start, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::CycleSyntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        if self.tokens.get(self.pos).map(|t| &t.1) == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn number(&mut self) -> Result<usize> {
        match self.tokens.get(self.pos).map(|t| t.1.clone()) {
            Some(Token::Number(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail("expected a number"),
        }
    }

    fn string(&mut self) -> Result<String> {
        match self.tokens.get(self.pos).map(|t| t.1.clone()) {
            Some(Token::Str(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => self.fail("expected a quoted string"),
        }
    }

    fn args<T>(&mut self, body: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        self.expect(Token::Open, "'('")?;
        let v = body(self)?;
        self.expect(Token::Close, "')'")?;
        Ok(v)
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let start = self.pos;
        let name = match self.next() {
            Some(Token::Ident(name)) => name,
            _ => {
                self.pos = start;
                return self.fail("expected a constructor name");
            }
        };
        use GroupExpr::*;
        Ok(match name.as_str() {
            "Cyclic" => Cyclic(self.args(Self::number)?),
            "Sym" => Sym(self.args(Self::number)?),
            "Alt" => Alt(self.args(Self::number)?),
            "Dihedral" => Dihedral(self.args(Self::number)?),
            "Quaternion8" => Quaternion8,
            "SL23" => SL23,
            "ElemAbelian" => self.args(|s| {
                let p = s.number()?;
                s.expect(Token::Comma, "','")?;
                Ok(ElemAbelian(p, s.number()?))
            })?,
            "Direct" => self.args(|s| {
                let a = s.expr()?;
                s.expect(Token::Comma, "','")?;
                Ok(GroupExpr::direct(a, s.expr()?))
            })?,
            "Semidirect" => self.args(|s| {
                let n = s.expr()?;
                s.expect(Token::Comma, "','")?;
                let k = s.expr()?;
                s.expect(Token::Comma, "','")?;
                let action = s.string()?;
                Ok(GroupExpr::semidirect(n, k, &action))
            })?,
            "Perm" => self.args(|s| {
                let degree = s.number()?;
                let mut gens = Vec::new();
                while s.tokens.get(s.pos).map(|t| &t.1) == Some(&Token::Comma) {
                    s.pos += 1;
                    gens.push(s.string()?);
                }
                Ok(Perm { degree, gens })
            })?,
            other => {
                self.pos = start;
                return self.fail(format!("unknown constructor {other}"));
            }
        })
    }
}

/// Parses the textual form produced by `Display`.
pub fn parse_expr(text: &str) -> Result<GroupExpr> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        len: text.chars().count(),
    };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return p.fail("trailing input");
    }
    Ok(e)
}

/// A word in named generators: `(generator index, exponent)` factors, read left to right.
pub type Word = Vec<(usize, i64)>;

/// Parses `g2^-1*g1^3*g2` (1-based names, `1` or `e` for the empty word).
pub fn parse_word(text: &str, gens: usize) -> Result<Word> {
    let bad = |m: String| Error::InvalidAction(format!("{m} in word {text:?}"));
    let t = text.trim();
    if t == "1" || t == "e" {
        return Ok(Vec::new());
    }
    let mut word = Vec::new();
    for factor in t.split('*') {
        let factor = factor.trim();
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (
                b.trim(),
                e.trim()
                    .parse::<i64>()
                    .map_err(|_| bad(format!("bad exponent {e:?}")))?,
            ),
            None => (factor, 1),
        };
        let idx: usize = base
            .strip_prefix('g')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| bad(format!("bad generator name {base:?}")))?;
        if idx == 0 || idx > gens {
            return Err(bad(format!("generator {base} out of range g1..g{gens}")));
        }
        word.push((idx - 1, exp));
    }
    Ok(word)
}

/// Parses an action string into, per complement generator, the image word of
/// each normal-factor generator (unlisted generators map to themselves).
pub fn parse_action(text: &str, normal_gens: usize, complement_gens: usize) -> Result<Vec<Vec<Word>>> {
    let maps: Vec<&str> = text.split(';').collect();
    if maps.len() != complement_gens {
        return Err(Error::InvalidAction(format!(
            "{} generator maps given for a complement with {complement_gens} generators",
            maps.len()
        )));
    }
    maps.into_iter()
        .map(|m| {
            let mut images: Vec<Word> = (0..normal_gens).map(|i| vec![(i, 1)]).collect();
            let mut seen = vec![false; normal_gens];
            for entry in m.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                let (lhs, rhs) = entry
                    .split_once("->")
                    .or_else(|| entry.split_once('→'))
                    .ok_or_else(|| Error::InvalidAction(format!("expected gI->word, got {entry:?}")))?;
                let src = parse_word(lhs, normal_gens)?;
                let [(i, 1)] = src[..] else {
                    return Err(Error::InvalidAction(format!("left side {lhs:?} is not a generator")));
                };
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidAction(format!("g{} mapped twice", i + 1)));
                }
                images[i] = parse_word(rhs, normal_gens)?;
            }
            Ok(images)
        })
        .collect()
}
