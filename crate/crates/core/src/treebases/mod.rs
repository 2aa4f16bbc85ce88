//! Tree-shaped basis objects: labelled rooted trees, binary terms, planar
//! binary trees and words, with their enumerations and text syntax.

mod binary;
mod parse;
mod pbt;
mod rooted;
mod word;

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use binary::{enumerate_commag, enumerate_mag, enumerate_planar_mag, BinaryTerm};
pub use parse::{format_term, parse_term};
pub use pbt::{catalan, enumerate_pbt, PlanarBinaryTree};
pub use rooted::{enumerate_rooted_trees, RootedTree};
pub use word::Word;

pub const MAX_ROOTED_N: usize = 8;
pub const MAX_COMMAG_N: usize = 9;

/// A vertex or leaf label. Always at least 1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Label(u32);

impl Label {
    pub fn new(value: u32) -> Result<Self> {
        if value == 0 {
            Err(Error::InvalidLabel(0))
        } else {
            Ok(Label(value))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for Label {
    type Error = Error;
    fn try_from(value: u32) -> Result<Self> {
        Label::new(value)
    }
}

impl From<Label> for u32 {
    fn from(l: Label) -> u32 {
        l.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which family of tree-shaped objects a term belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Rooted,
    Binary,
    Pbt,
    Word,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisKind::Rooted => "rooted",
            BasisKind::Binary => "binary",
            BasisKind::Pbt => "pbt",
            BasisKind::Word => "word",
        })
    }
}

/// A basis element of any kind, as produced by [`parse_term`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Rooted(RootedTree),
    Binary(BinaryTerm),
    Pbt(PlanarBinaryTree),
    Word(Word),
}

impl Element {
    pub fn kind(&self) -> BasisKind {
        match self {
            Element::Rooted(_) => BasisKind::Rooted,
            Element::Binary(_) => BasisKind::Binary,
            Element::Pbt(_) => BasisKind::Pbt,
            Element::Word(_) => BasisKind::Word,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Rooted(t) => t.fmt(f),
            Element::Binary(t) => t.fmt(f),
            Element::Pbt(t) => t.fmt(f),
            Element::Word(w) => w.fmt(f),
        }
    }
}

/// Basis elements usable as keys of a [`LinComb`](crate::exact::LinComb).
///
/// Implementors are always in canonical form, so structural equality
/// coincides with equality of the formatted strings.
pub trait Basis: Clone + Ord + Hash + fmt::Display + fmt::Debug + Send + Sync {
    const KIND: BasisKind;

    fn parse(text: &str) -> Result<Self>;

    fn into_element(self) -> Element;
}

impl Basis for RootedTree {
    const KIND: BasisKind = BasisKind::Rooted;
    fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
    fn into_element(self) -> Element {
        Element::Rooted(self)
    }
}

impl Basis for BinaryTerm {
    const KIND: BasisKind = BasisKind::Binary;
    fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
    fn into_element(self) -> Element {
        Element::Binary(self)
    }
}

impl Basis for PlanarBinaryTree {
    const KIND: BasisKind = BasisKind::Pbt;
    fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
    fn into_element(self) -> Element {
        Element::Pbt(self)
    }
}

impl Basis for Word {
    const KIND: BasisKind = BasisKind::Word;
    fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
    fn into_element(self) -> Element {
        Element::Word(self)
    }
}

pub(crate) fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        Err(Error::OutOfRange { what, value, min, max })
    } else {
        Ok(())
    }
}

/// Guesses which grammar `text` belongs to, if any.
pub fn detect_kind(text: &str) -> Option<BasisKind> {
    [BasisKind::Rooted, BasisKind::Binary, BasisKind::Pbt, BasisKind::Word]
        .into_iter()
        .find(|&k| parse_term(text, k).is_ok())
}
