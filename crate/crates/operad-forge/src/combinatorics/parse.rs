//! Text grammar for basis elements.

use thiserror::Error;

use super::hypertree::RootedHypertree;
use super::planar::{Color, Family, PlanarTree};
use super::pointed::PointedSet;
use super::tree::RootedTree;
use super::word::{Monomial, Surjection, Word};
use super::{Basis, BasisKind, Label};

const MAX_DEPTH: usize = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { s: text.as_bytes(), pos: 0, depth: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(())
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.err("nesting too deep");
        }
        Ok(())
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        match text.parse::<u32>() {
            Ok(0) | Err(_) => {
                self.pos = start;
                self.err("labels are positive integers below 2^32")
            }
            Ok(v) => Ok(v),
        }
    }

    fn label(&mut self) -> Result<Label, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Label::Num(self.number()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let next = self.s.get(self.pos + 1).copied();
                if next.is_some_and(|n| n.is_ascii_alphanumeric()) {
                    return self.err("symbolic labels are single letters");
                }
                self.pos += 1;
                Ok(Label::Sym(c as char))
            }
            _ => self.err("expected a label"),
        }
    }

    fn word_ahead(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        while end < self.s.len() && self.s[end].is_ascii_alphabetic() {
            end += 1;
        }
        if end - start > 1 {
            std::str::from_utf8(&self.s[start..end]).ok()
        } else {
            None
        }
    }

    fn list<T>(&mut self, open: u8, close: u8, mut item: impl FnMut(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        self.expect(open)?;
        let mut out = vec![item(self)?];
        while self.eat(b',') {
            out.push(item(self)?);
        }
        self.expect(close)?;
        Ok(out)
    }

    fn tree(&mut self) -> Result<RootedTree, ParseError> {
        self.enter()?;
        let label = self.label()?;
        let children = if self.peek() == Some(b'(') { self.list(b'(', b')', |c| c.tree())? } else { Vec::new() };
        self.depth -= 1;
        Ok(RootedTree::node(label, children))
    }

    fn braced(&mut self) -> Result<Basis, ParseError> {
        let items = self.list(b'{', b'}', |c| {
            let star = c.eat(b'*');
            Ok((star, c.label()?))
        })?;
        let stars = items.iter().filter(|(s, _)| *s).count();
        match stars {
            0 => Ok(Basis::Mono(Monomial::new(items.into_iter().map(|(_, l)| l).collect()))),
            1 => {
                let point = items.iter().find(|(s, _)| *s).unwrap().1;
                let mut rest: Vec<Label> = Vec::new();
                let mut skipped = false;
                for (s, l) in items {
                    if s && !skipped {
                        skipped = true;
                    } else {
                        rest.push(l);
                    }
                }
                Ok(Basis::Pointed(PointedSet::new(point, rest)))
            }
            _ => self.err("at most one point"),
        }
    }

    fn planar(&mut self) -> Result<PlanarTree, ParseError> {
        self.enter()?;
        let out = match self.word_ahead() {
            Some(name) => {
                let color = match Color::from_name(name) {
                    Some(c) => c,
                    None => return self.err(format!("unknown node colour '{name}'")),
                };
                self.pos += name.len();
                let cs = self.list(b'(', b')', |c| c.planar())?;
                if cs.len() < 2 {
                    return self.err("planar nodes need at least two children");
                }
                PlanarTree::Node(color, cs)
            }
            None => PlanarTree::Leaf(self.label()?),
        };
        self.depth -= 1;
        Ok(out)
    }

    fn hypertree(&mut self) -> Result<RootedHypertree, ParseError> {
        match self.word_ahead() {
            Some("ht") => self.pos += 2,
            _ => return self.err("expected 'ht'"),
        }
        self.expect(b'(')?;
        match self.word_ahead() {
            Some("root") => self.pos += 4,
            _ => return self.err("expected 'root'"),
        }
        self.expect(b'=')?;
        let root = self.label()?;
        let mut edges = Vec::new();
        while self.eat(b';') {
            edges.push(self.list(b'{', b'}', |c| c.label())?);
        }
        self.expect(b')')?;
        let h = RootedHypertree::new(root, edges);
        if !h.is_valid() {
            return self.err("not a hypertree");
        }
        Ok(h)
    }
}

/// Parses `text` as an element of the given kind.
pub fn parse_element(kind: BasisKind, text: &str) -> Result<Basis, ParseError> {
    let mut c = Cursor::new(text);
    let out = match kind {
        BasisKind::Tree => Basis::Tree(c.tree()?),
        BasisKind::Pointed => match c.braced()? {
            b @ Basis::Pointed(_) => b,
            _ => return c.err("expected a pointed set"),
        },
        BasisKind::Monomial => match c.braced()? {
            b @ Basis::Mono(_) => b,
            _ => return c.err("expected a monomial"),
        },
        BasisKind::Word => Basis::Word(Word(c.list(b'[', b']', |c| c.label())?)),
        BasisKind::Surjection => {
            let vals = c.list(b'(', b')', |c| c.number())?;
            match Surjection::new(vals) {
                Some(s) => Basis::Surj(s),
                None => return c.err("values must cover 1..r"),
            }
        }
        BasisKind::Hypertree => Basis::Hyper(c.hypertree()?),
        BasisKind::Planar(fam) => {
            let t = c.planar()?;
            if !t.is_valid(fam) {
                return c.err("tree is not in normal form for this family");
            }
            Basis::Planar(t)
        }
    };
    c.finish()?;
    Ok(out)
}

/// Guesses the kind from the leading characters.
pub fn detect_kind(text: &str) -> BasisKind {
    let t = text.trim_start();
    if t.starts_with('{') {
        if t.contains('*') {
            BasisKind::Pointed
        } else {
            BasisKind::Monomial
        }
    } else if t.starts_with('[') {
        BasisKind::Word
    } else if t.starts_with('(') {
        BasisKind::Surjection
    } else if t.starts_with("ht") {
        BasisKind::Hypertree
    } else if t.starts_with("star") || t.starts_with("dot") {
        BasisKind::Planar(if t.contains("prec") { Family::Dipterous } else { Family::Alternating })
    } else if t.starts_with("prec") {
        BasisKind::Planar(Family::Dipterous)
    } else if t.starts_with("node") {
        BasisKind::Planar(Family::Magmatic)
    } else {
        BasisKind::Tree
    }
}

pub fn parse_any(text: &str) -> Result<Basis, ParseError> {
    parse_element(detect_kind(text), text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in [
            "1(2,3(4))",
            "{*1,2,3}",
            "{2,*3}",
            "[1,2,3]",
            "[a,b,a]",
            "{1,2,2}",
            "(1,1,2)",
            "ht(root=1; {1,2}; {1,3,4})",
            "star(a,dot(b,c))",
            "star(prec(1,2),3)",
        ] {
            let b = parse_any(s).unwrap_or_else(|e| panic!("{s}: {e}"));
            assert_eq!(b.to_string(), s);
        }
    }

    #[test]
    fn canonicalises_children_and_edges() {
        assert_eq!(parse_any("1(3(4),2)").unwrap().to_string(), "1(2,3(4))");
        assert_eq!(parse_any("ht(root=1; {1,4}; {1,3,2})").unwrap().to_string(), "ht(root=1; {1,2,3}; {1,4})");
        assert_eq!(parse_any("{ 3 , *1 , 2 }").unwrap().to_string(), "{*1,2,3}");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "1(", "(1,3)", "{*1,*2}", "ht(root=1; {1})", "star(a)", "dot(a,dot(b,c))", "[]", "1)", "0", "ab", "prec(star(1,2),3)"] {
            assert!(parse_any(s).is_err(), "{s}");
        }
    }
}
