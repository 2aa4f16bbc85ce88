use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use super::{check_range, Label, MAX_COMMAG_N};
use crate::error::{Error, Result};

/// A full binary tree with labelled leaves: an element of the free magmatic
/// algebra, and in normalized writing a basis element of `ComMag`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinaryTerm {
    Leaf(Label),
    Node(Arc<BinaryTerm>, Arc<BinaryTerm>),
}

impl BinaryTerm {
    pub fn leaf(label: Label) -> Self {
        BinaryTerm::Leaf(label)
    }

    pub fn node(left: BinaryTerm, right: BinaryTerm) -> Self {
        BinaryTerm::Node(Arc::new(left), Arc::new(right))
    }

    pub fn leaves(&self) -> Vec<Label> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Label>) {
        match self {
            BinaryTerm::Leaf(l) => out.push(*l),
            BinaryTerm::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            BinaryTerm::Leaf(_) => 1,
            BinaryTerm::Node(a, b) => a.arity() + b.arity(),
        }
    }

    pub fn max_label(&self) -> Label {
        match self {
            BinaryTerm::Leaf(l) => *l,
            BinaryTerm::Node(a, b) => a.max_label().max(b.max_label()),
        }
    }

    pub fn check_distinct(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for l in self.leaves() {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.get()));
            }
        }
        Ok(())
    }

    /// Normalized writing: at every product the maximal label lies in the
    /// right factor.
    pub fn is_normalized(&self) -> bool {
        match self {
            BinaryTerm::Leaf(_) => true,
            BinaryTerm::Node(a, b) => a.max_label() < b.max_label() && a.is_normalized() && b.is_normalized(),
        }
    }
}

impl fmt::Display for BinaryTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTerm::Leaf(l) => write!(f, "{l}"),
            BinaryTerm::Node(a, b) => write!(f, "({a}*{b})"),
        }
    }
}

/// All normalized `ComMag` terms on `{1..n}`; there are `(2n-3)!!`.
///
/// The right factor is the block containing the maximal label; both factors
/// are enumerated recursively, so every term appears exactly once.
pub fn enumerate_commag(n: usize) -> Result<Vec<BinaryTerm>> {
    check_range("n", n, 1, MAX_COMMAG_N)?;
    let mut memo = HashMap::new();
    Ok(commag_on((1u32 << n) - 1, &mut memo)
        .iter()
        .map(|t| (**t).clone())
        .collect())
}

fn labels_of(mask: u32) -> Vec<u32> {
    (0..32).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

fn commag_on(mask: u32, memo: &mut HashMap<u32, Vec<Arc<BinaryTerm>>>) -> Vec<Arc<BinaryTerm>> {
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let labels = labels_of(mask);
    let out = if labels.len() == 1 {
        vec![Arc::new(BinaryTerm::Leaf(Label(labels[0])))]
    } else {
        let top_bit = 1u32 << (labels[labels.len() - 1] - 1);
        let rest: Vec<u32> = labels[..labels.len() - 1].iter().map(|l| 1 << (l - 1)).collect();
        // right block = {max} plus a proper subset of the rest
        let mut choices: Vec<u32> = (0..(1u32 << rest.len()) - 1)
            .map(|bits| {
                top_bit
                    | rest
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| bits & (1 << i) != 0)
                        .fold(0, |acc, (_, b)| acc | b)
            })
            .collect();
        choices.sort_by_key(|right| (right.count_ones(), labels_of(mask & !right)));
        let mut out = Vec::new();
        for right in choices {
            let left = mask & !right;
            let lefts = commag_on(left, memo);
            let rights = commag_on(right, memo);
            for l in &lefts {
                for r in &rights {
                    out.push(Arc::new(BinaryTerm::Node(l.clone(), r.clone())));
                }
            }
        }
        out
    };
    memo.insert(mask, out.clone());
    out
}

/// All planar binary terms with `n` leaves labelled `1..n` from left to
/// right: one per shape, `Catalan(n-1)` of them. This is a basis of the
/// arity-`n` component of the non-symmetric operad `Mag`.
pub fn enumerate_planar_mag(n: usize) -> Result<Vec<BinaryTerm>> {
    check_range("n", n, 1, 12)?;
    Ok(planar_shapes(1, n))
}

fn planar_shapes(first: u32, n: usize) -> Vec<BinaryTerm> {
    if n == 1 {
        return vec![BinaryTerm::Leaf(Label(first))];
    }
    let mut out = Vec::new();
    for k in 1..n {
        let lefts = planar_shapes(first, k);
        let rights = planar_shapes(first + k as u32, n - k);
        for l in &lefts {
            for r in &rights {
                out.push(BinaryTerm::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// All binary terms on `{1..n}` with every leaf order: `n! Catalan(n-1)`
/// terms, a basis of `Mag(n)`.
pub fn enumerate_mag(n: usize) -> Result<Vec<BinaryTerm>> {
    check_range("n", n, 1, 7)?;
    let shapes = planar_shapes(1, n);
    let mut out = Vec::new();
    for perm in permutations(n) {
        for s in &shapes {
            out.push(relabel(s, &perm));
        }
    }
    Ok(out)
}

fn relabel(t: &BinaryTerm, perm: &[u32]) -> BinaryTerm {
    match t {
        BinaryTerm::Leaf(l) => BinaryTerm::Leaf(Label(perm[l.0 as usize - 1])),
        BinaryTerm::Node(a, b) => BinaryTerm::node(relabel(a, perm), relabel(b, perm)),
    }
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as u32);
            out.push(q);
        }
    }
    out.sort();
    out
}
