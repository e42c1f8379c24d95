//! Construction expressions: `C(2) x Tstar`, `semi(C(3),Ostar,invert)`,
//! `cext(SL(2,5),outer2,2,zcenter)` and so on.
//!
//! Whitespace is ignored and names are case-sensitive. The lexer matches
//! the longest keyword at each position, so `Q8xQ8` reads as `Q8 x Q8`.
//! `x` is left-associative; parentheses group.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::ConstructError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Named {
    /// Cyclic of order n.
    C(usize),
    /// Dihedral of order 2n.
    D(usize),
    /// Dicyclic of order n (a multiple of 4, at least 8).
    Dic(usize),
    S(usize),
    A(usize),
    Q8,
    Tstar,
    Ostar,
    Istar,
    /// `SL(2, q)`
    SL(usize),
    /// `GL(2, q)`
    GL(usize),
    SL25dot2,
    SL25colon2,
    ES32minus,
    ES1920,
}

/// How the complement acts in `semi(N, H, action)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Action {
    /// Inversion on an abelian `N`, through an index-2 subgroup of `H`.
    Invert,
    /// Coordinate exchange on `N = X x X`, through an index-2 subgroup of `H`.
    Swap,
    /// An outer automorphism of order 2, through an index-2 subgroup of `H`.
    Outer2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AutSel {
    Outer2,
    Id,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZSel {
    Id,
    /// The unique involution of the centre.
    ZCenter,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupExpr {
    Named(Named),
    Direct(Box<GroupExpr>, Box<GroupExpr>),
    Swap2(Box<GroupExpr>),
    Semidirect(Box<GroupExpr>, Box<GroupExpr>, Action),
    CentralProduct(Box<GroupExpr>, Box<GroupExpr>),
    CyclicExt(Box<GroupExpr>, AutSel, usize, ZSel),
}

impl GroupExpr {
    pub fn parse(text: &str) -> Result<GroupExpr, ConstructError> {
        text.parse()
    }

    pub fn direct(l: GroupExpr, r: GroupExpr) -> GroupExpr {
        GroupExpr::Direct(Box::new(l), Box::new(r))
    }

    /// Order implied by the expression alone.
    pub fn expected_order(&self) -> usize {
        use GroupExpr::*;
        match self {
            Named(n) => n.order(),
            Direct(l, r) => l.expected_order() * r.expected_order(),
            Swap2(g) => 2 * g.expected_order().pow(2),
            Semidirect(n, h, _) => n.expected_order() * h.expected_order(),
            // depends on the centres; reported as the direct product order
            CentralProduct(l, r) => l.expected_order() * r.expected_order(),
            CyclicExt(n, _, m, _) => n.expected_order() * m,
        }
    }
}

impl Named {
    pub fn order(&self) -> usize {
        let fact = |n: usize| (1..=n).product::<usize>();
        match *self {
            Named::C(n) => n,
            Named::D(n) => 2 * n,
            Named::Dic(n) => n,
            Named::S(n) => fact(n),
            Named::A(n) => fact(n).div_ceil(2).max(1),
            Named::Q8 => 8,
            Named::Tstar => 24,
            Named::Ostar => 48,
            Named::Istar => 120,
            Named::SL(q) => q * (q * q - 1),
            Named::GL(q) => (q * q - 1) * (q * q - q),
            Named::SL25dot2 | Named::SL25colon2 => 240,
            Named::ES32minus => 32,
            Named::ES1920 => 1920,
        }
    }

    fn validate(&self) -> Result<(), String> {
        match *self {
            Named::C(n) | Named::D(n) if n == 0 => Err("order parameter must be at least 1".into()),
            Named::Dic(n) if n % 4 != 0 || n < 8 => Err(format!(
                "Dic({n}): the order must be a multiple of 4 and at least 8"
            )),
            Named::S(n) | Named::A(n) if n == 0 || n > 7 => {
                Err(format!("degree {n} outside the supported range 1..=7"))
            }
            Named::SL(q) | Named::GL(q) if ![3, 5, 9].contains(&q) => {
                Err(format!("q = {q} is not one of 3, 5, 9"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::C(n) => write!(f, "C({n})"),
            Named::D(n) => write!(f, "D({n})"),
            Named::Dic(n) => write!(f, "Dic({n})"),
            Named::S(n) => write!(f, "S({n})"),
            Named::A(n) => write!(f, "A({n})"),
            Named::SL(q) => write!(f, "SL(2,{q})"),
            Named::GL(q) => write!(f, "GL(2,{q})"),
            Named::Q8 => f.write_str("Q8"),
            Named::Tstar => f.write_str("Tstar"),
            Named::Ostar => f.write_str("Ostar"),
            Named::Istar => f.write_str("Istar"),
            Named::SL25dot2 => f.write_str("SL25dot2"),
            Named::SL25colon2 => f.write_str("SL25colon2"),
            Named::ES32minus => f.write_str("ES32minus"),
            Named::ES1920 => f.write_str("ES1920"),
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::Invert => "invert",
            Action::Swap => "swap",
            Action::Outer2 => "outer2",
        })
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Named(n) => write!(f, "{n}"),
            GroupExpr::Direct(l, r) => {
                if matches!(**r, GroupExpr::Direct(..)) {
                    write!(f, "{l} x ({r})")
                } else {
                    write!(f, "{l} x {r}")
                }
            }
            GroupExpr::Swap2(g) => write!(f, "swap2({g})"),
            GroupExpr::Semidirect(n, h, a) => write!(f, "semi({n},{h},{a})"),
            GroupExpr::CentralProduct(l, r) => write!(f, "cprod({l},{r})"),
            GroupExpr::CyclicExt(n, a, m, z) => {
                let a = match a {
                    AutSel::Outer2 => "outer2",
                    AutSel::Id => "id",
                };
                let z = match z {
                    ZSel::Id => "id",
                    ZSel::ZCenter => "zcenter",
                };
                write!(f, "cext({n},{a},{m},{z})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(&'static str),
    Int(usize),
    LParen,
    RParen,
    Comma,
}

const KEYWORDS: &[&str] = &[
    "SL25colon2",
    "SL25dot2",
    "ES32minus",
    "ES1920",
    "zcenter",
    "outer2",
    "invert",
    "Tstar",
    "Ostar",
    "Istar",
    "swap2",
    "cprod",
    "swap",
    "semi",
    "cext",
    "Dic",
    "Q8",
    "SL",
    "GL",
    "id",
    "C",
    "D",
    "S",
    "A",
    "x",
];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ConstructError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b',' => {
                out.push((i, Tok::Comma));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = text[start..i]
                    .parse::<usize>()
                    .map_err(|_| ConstructError::Parse {
                        pos: start,
                        message: "integer out of range".into(),
                    })?;
                out.push((start, Tok::Int(v)));
            }
            _ => {
                let kw = KEYWORDS
                    .iter()
                    .filter(|k| text[i..].starts_with(**k))
                    .max_by_key(|k| k.len())
                    .ok_or_else(|| ConstructError::Parse {
                        pos: i,
                        message: format!(
                            "unexpected character {:?}",
                            text[i..].chars().next().unwrap()
                        ),
                    })?;
                out.push((i, Tok::Word(kw)));
                i += kw.len();
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ConstructError> {
        Err(ConstructError::Parse {
            pos: self.here(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ConstructError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn int(&mut self) -> Result<usize, ConstructError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn word(&mut self, choices: &[&str]) -> Result<&'static str, ConstructError> {
        match self.peek() {
            Some(Tok::Word(w)) if choices.contains(w) => {
                let w = *w;
                self.pos += 1;
                Ok(w)
            }
            _ => self.err(format!("expected one of {}", choices.join(", "))),
        }
    }

    fn expr(&mut self) -> Result<GroupExpr, ConstructError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Word("x")) {
            self.pos += 1;
            let rhs = self.term()?;
            acc = GroupExpr::direct(acc, rhs);
        }
        Ok(acc)
    }

    fn param(&mut self) -> Result<usize, ConstructError> {
        self.expect(Tok::LParen, "'('")?;
        let v = self.int()?;
        self.expect(Tok::RParen, "')'")?;
        Ok(v)
    }

    fn classical(&mut self) -> Result<usize, ConstructError> {
        self.expect(Tok::LParen, "'('")?;
        if self.int()? != 2 {
            self.pos -= 1;
            return self.err("only degree 2 is supported");
        }
        self.expect(Tok::Comma, "','")?;
        let q = self.int()?;
        self.expect(Tok::RParen, "')'")?;
        Ok(q)
    }

    fn term(&mut self) -> Result<GroupExpr, ConstructError> {
        let start = self.here();
        let tok = match self.next() {
            Some(t) => t,
            None => {
                self.pos -= 1;
                return self.err("unexpected end of input");
            }
        };
        let named = |n: Named| -> Result<GroupExpr, ConstructError> {
            n.validate()
                .map(|_| GroupExpr::Named(n))
                .map_err(|message| ConstructError::Parse {
                    pos: start,
                    message,
                })
        };
        match tok {
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Word(w) => match w {
                "C" => {
                    let n = self.param()?;
                    named(Named::C(n))
                }
                "D" => {
                    let n = self.param()?;
                    named(Named::D(n))
                }
                "Dic" => {
                    let n = self.param()?;
                    named(Named::Dic(n))
                }
                "S" => {
                    let n = self.param()?;
                    named(Named::S(n))
                }
                "A" => {
                    let n = self.param()?;
                    named(Named::A(n))
                }
                "SL" => {
                    let q = self.classical()?;
                    named(Named::SL(q))
                }
                "GL" => {
                    let q = self.classical()?;
                    named(Named::GL(q))
                }
                "Q8" => Ok(GroupExpr::Named(Named::Q8)),
                "Tstar" => Ok(GroupExpr::Named(Named::Tstar)),
                "Ostar" => Ok(GroupExpr::Named(Named::Ostar)),
                "Istar" => Ok(GroupExpr::Named(Named::Istar)),
                "SL25dot2" => Ok(GroupExpr::Named(Named::SL25dot2)),
                "SL25colon2" => Ok(GroupExpr::Named(Named::SL25colon2)),
                "ES32minus" => Ok(GroupExpr::Named(Named::ES32minus)),
                "ES1920" => Ok(GroupExpr::Named(Named::ES1920)),
                "swap2" => {
                    self.expect(Tok::LParen, "'('")?;
                    let g = self.expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(GroupExpr::Swap2(Box::new(g)))
                }
                "cprod" => {
                    self.expect(Tok::LParen, "'('")?;
                    let l = self.expr()?;
                    self.expect(Tok::Comma, "','")?;
                    let r = self.expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(GroupExpr::CentralProduct(Box::new(l), Box::new(r)))
                }
                "semi" => {
                    self.expect(Tok::LParen, "'('")?;
                    let n = self.expr()?;
                    self.expect(Tok::Comma, "','")?;
                    let h = self.expr()?;
                    self.expect(Tok::Comma, "','")?;
                    let a = match self.word(&["invert", "swap", "outer2"])? {
                        "invert" => Action::Invert,
                        "swap" => Action::Swap,
                        _ => Action::Outer2,
                    };
                    self.expect(Tok::RParen, "')'")?;
                    Ok(GroupExpr::Semidirect(Box::new(n), Box::new(h), a))
                }
                "cext" => {
                    self.expect(Tok::LParen, "'('")?;
                    let n = self.expr()?;
                    self.expect(Tok::Comma, "','")?;
                    let a = match self.word(&["outer2", "id"])? {
                        "outer2" => AutSel::Outer2,
                        _ => AutSel::Id,
                    };
                    self.expect(Tok::Comma, "','")?;
                    let m = self.int()?;
                    if m == 0 {
                        self.pos -= 1;
                        return self.err("extension degree must be positive");
                    }
                    self.expect(Tok::Comma, "','")?;
                    let z = match self.word(&["id", "zcenter"])? {
                        "id" => ZSel::Id,
                        _ => ZSel::ZCenter,
                    };
                    self.expect(Tok::RParen, "')'")?;
                    Ok(GroupExpr::CyclicExt(Box::new(n), a, m, z))
                }
                other => {
                    self.pos -= 1;
                    self.err(format!("unexpected {other:?}"))
                }
            },
            _ => {
                self.pos -= 1;
                self.err("expected a group")
            }
        }
    }
}

impl std::str::FromStr for GroupExpr {
    type Err = ConstructError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let toks = lex(text)?;
        let mut p = Parser {
            toks,
            pos: 0,
            end: text.len(),
        };
        let e = p.expr()?;
        if p.pos < p.toks.len() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> GroupExpr {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            parse("Tstar x Tstar"),
            GroupExpr::direct(
                GroupExpr::Named(Named::Tstar),
                GroupExpr::Named(Named::Tstar)
            )
        );
        assert_eq!(parse("C(7)"), GroupExpr::Named(Named::C(7)));
        assert_eq!(parse("swap2(Dic(12))").expected_order(), 288);
        assert_eq!(parse("Q8xQ8"), parse("Q8 x Q8"));
        assert_eq!(parse("C(2)xC(4)").to_string(), "C(2) x C(4)");
        assert_eq!(
            parse("cext( SL(2,5), outer2, 2, zcenter )").expected_order(),
            240
        );
        assert_eq!(parse("semi(C(3),Ostar,invert)").expected_order(), 144);
    }

    #[test]
    fn direct_is_left_associative() {
        let e = parse("C(2) x C(3) x C(5)");
        match &e {
            GroupExpr::Direct(l, r) => {
                assert!(matches!(**l, GroupExpr::Direct(..)));
                assert_eq!(**r, GroupExpr::Named(Named::C(5)));
            }
            _ => panic!(),
        }
        assert_eq!(e.to_string(), "C(2) x C(3) x C(5)");
        let grouped = parse("C(2) x (C(3) x C(5))");
        assert_eq!(grouped.to_string(), "C(2) x (C(3) x C(5))");
        assert_ne!(grouped, e);
        assert_eq!(parse(&grouped.to_string()), grouped);
    }

    #[test]
    fn errors_carry_positions() {
        for (text, pos) in [
            ("C(", 2),
            ("Tstar x", 7),
            ("Foo", 0),
            ("Dic(10)", 0),
            ("SL(3,3)", 3),
            ("semi(C(3),C(2),flip)", 15),
            ("C(2) C(3)", 5),
            ("GL(2,7)", 0),
        ] {
            match text.parse::<GroupExpr>() {
                Err(ConstructError::Parse { pos: p, .. }) => assert_eq!(p, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
