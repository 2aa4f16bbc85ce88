//! Text syntax shared by the CLI, fixtures and tests.
//!
//! ```text
//! rooted tree   := label | label "(" tree ("," tree)* ")"
//! binary term   := label | "(" term "*" term ")"
//! planar binary := "o" | "(" pbt "," pbt ")" [":" genIndex]
//! word          := [a-z]+
//! ```
//!
//! Whitespace between tokens is ignored. Child order in rooted trees is
//! insignificant on input; the parsed tree is canonicalized.

use std::collections::BTreeSet;
use std::str::FromStr;

use super::{BasisKind, BinaryTerm, Element, Label, PlanarBinaryTree, RootedTree, Word};
use crate::error::{Error, Result};

pub fn parse_term(text: &str, kind: BasisKind) -> Result<Element> {
    Ok(match kind {
        BasisKind::Rooted => Element::Rooted(text.parse()?),
        BasisKind::Binary => Element::Binary(text.parse()?),
        BasisKind::Pbt => Element::Pbt(text.parse()?),
        BasisKind::Word => Element::Word(text.parse()?),
    })
}

pub fn format_term(elem: &Element) -> String {
    elem.to_string()
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == c => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => self.error(format!("expected '{}', found '{}'", c as char, b as char)),
            None => self.error(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.error(format!("expected {what}"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match digits.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => {
                self.pos = start;
                self.error(format!("{what} must be an integer between 1 and {}", u32::MAX))
            }
        }
    }

    fn label(&mut self) -> Result<Label> {
        self.number("label").map(Label)
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(b) => self.error(format!("unexpected trailing '{}'", b as char)),
        }
    }

    fn rooted(&mut self) -> Result<RootedTree> {
        let root = self.label()?;
        let mut children = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                children.push(self.rooted()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.error("expected ',' or ')'"),
                }
            }
        }
        Ok(RootedTree::from_planar(root, children))
    }

    fn binary(&mut self) -> Result<BinaryTerm> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let left = self.binary()?;
            self.expect(b'*')?;
            let right = self.binary()?;
            self.expect(b')')?;
            Ok(BinaryTerm::node(left, right))
        } else {
            Ok(BinaryTerm::Leaf(self.label()?))
        }
    }

    fn pbt(&mut self) -> Result<PlanarBinaryTree> {
        match self.peek() {
            Some(b'o') => {
                self.pos += 1;
                Ok(PlanarBinaryTree::Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.pbt()?;
                self.expect(b',')?;
                let right = self.pbt()?;
                self.expect(b')')?;
                let gen = if self.peek() == Some(b':') {
                    self.pos += 1;
                    Some(self.number("generator index")?)
                } else {
                    None
                };
                Ok(PlanarBinaryTree::join(left, right, gen))
            }
            _ => self.error("expected 'o' or '('"),
        }
    }
}

impl FromStr for RootedTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let t = c.rooted()?;
        c.finish()?;
        t.canonicalize()
    }
}

impl FromStr for BinaryTerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let t = c.binary()?;
        c.finish()?;
        let mut seen = BTreeSet::new();
        for l in t.leaves() {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.get()));
            }
        }
        Ok(t)
    }
}

impl FromStr for PlanarBinaryTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let t = c.pbt()?;
        c.finish()?;
        t.check_generators()?;
        Ok(t)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let offset = s.len() - s.trim_start().len();
        if trimmed.is_empty() {
            return Err(Error::Syntax {
                offset,
                message: "empty word".into(),
            });
        }
        if let Some(i) = trimmed.bytes().position(|b| !b.is_ascii_lowercase()) {
            return Err(Error::Syntax {
                offset: offset + i,
                message: "words use the letters a-z".into(),
            });
        }
        Ok(Word::from_letters(trimmed.as_bytes().to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treebases::{enumerate_commag, enumerate_pbt, enumerate_rooted_trees};

    #[test]
    fn examples() {
        assert_eq!(parse_term("1(3,2)", BasisKind::Rooted).unwrap().to_string(), "1(2,3)");
        let b: BinaryTerm = "(2*(1*3))".parse().unwrap();
        match &b {
            BinaryTerm::Node(l, r) => {
                assert_eq!(**l, BinaryTerm::Leaf(Label(2)));
                assert_eq!(r.to_string(), "(1*3)");
            }
            _ => panic!("expected a product"),
        }
        let p: PlanarBinaryTree = "((o,o),o)".parse().unwrap();
        assert_eq!(p.leaves(), 3);
        match p {
            PlanarBinaryTree::Node { left, right, .. } => {
                assert_eq!(*left, PlanarBinaryTree::generator(None));
                assert!(right.is_leaf());
            }
            _ => panic!("expected a node"),
        }
        assert_eq!("abba".parse::<Word>().unwrap().to_string(), "abba");
        assert_eq!(" 1 ( 2 , 3 ) ".parse::<RootedTree>().unwrap().to_string(), "1(2,3)");
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            "1(2,".parse::<RootedTree>(),
            Err(Error::Syntax {
                offset: 4,
                message: "expected label".into()
            })
        );
        assert!(matches!(
            "(1*2".parse::<BinaryTerm>(),
            Err(Error::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            "1(2)x".parse::<RootedTree>(),
            Err(Error::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            "0".parse::<RootedTree>(),
            Err(Error::Syntax { offset: 0, .. })
        ));
        assert!(matches!("ab1".parse::<Word>(), Err(Error::Syntax { offset: 2, .. })));
        assert_eq!("1(2,1)".parse::<RootedTree>(), Err(Error::DuplicateLabel(1)));
        assert_eq!("(1*1)".parse::<BinaryTerm>(), Err(Error::DuplicateLabel(1)));
        assert_eq!("((o,o),o):2".parse::<PlanarBinaryTree>(), Err(Error::MixedGenerators));
    }

    #[test]
    fn round_trip_all_enumerated() {
        for n in 1..=5 {
            for t in enumerate_rooted_trees(n).unwrap() {
                assert_eq!(
                    parse_term(&format_term(&Element::Rooted(t.clone())), BasisKind::Rooted).unwrap(),
                    Element::Rooted(t)
                );
            }
            for t in enumerate_commag(n).unwrap() {
                assert_eq!(t.to_string().parse::<BinaryTerm>().unwrap(), t);
            }
            for g in 1..=2 {
                for t in enumerate_pbt(n, g).unwrap() {
                    assert_eq!(t.to_string().parse::<PlanarBinaryTree>().unwrap(), t);
                }
            }
        }
    }
}
