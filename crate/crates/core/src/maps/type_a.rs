use crate::error::{Error, Result};
use crate::treebases::{BinaryTerm, RootedTree};

/// Rewrites a `ComMag` term so that at every product the factor holding the
/// larger maximal label is on the right.
pub fn normalize_commag(t: &BinaryTerm) -> Result<BinaryTerm> {
    t.check_distinct()?;
    Ok(normalize(t))
}

fn normalize(t: &BinaryTerm) -> BinaryTerm {
    match t {
        BinaryTerm::Leaf(_) => t.clone(),
        BinaryTerm::Node(a, b) => {
            let (a, b) = (normalize(a), normalize(b));
            if a.max_label() < b.max_label() {
                BinaryTerm::node(a, b)
            } else {
                BinaryTerm::node(b, a)
            }
        }
    }
}

/// `Ψ(x·y) = Ψ(x) ~* Ψ(y)` on normalized terms, `Ψ(a)` the one-vertex tree.
pub fn psi(t: &BinaryTerm) -> Result<RootedTree> {
    t.check_distinct()?;
    if !t.is_normalized() {
        return Err(Error::NotNormalized(t.to_string()));
    }
    Ok(psi_unchecked(t))
}

fn psi_unchecked(t: &BinaryTerm) -> RootedTree {
    match t {
        BinaryTerm::Leaf(l) => RootedTree::leaf(*l),
        BinaryTerm::Node(a, b) => psi_unchecked(a).graft_at_root(&psi_unchecked(b)),
    }
}

/// Membership in `A[S]`, the image of `Ψ`: every root subtree is of type A
/// and the root label is below the maximum of each root subtree.
pub fn is_type_a(t: &RootedTree) -> bool {
    t.children().iter().all(|c| t.root() < c.max_label() && is_type_a(c))
}

/// The factorization `T = X1 ~* X2` with `max(T)` in `X2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factorization {
    /// One-vertex tree; `d` is undefined.
    RootIsMax,
    Graft {
        x1: RootedTree,
        x2: RootedTree,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeACertificate {
    pub tree: RootedTree,
    pub factorization: Factorization,
    /// `|X2|`, absent for one-vertex trees.
    pub d: Option<usize>,
}

fn split_max(t: &RootedTree) -> Option<(RootedTree, RootedTree)> {
    let idx = t
        .children()
        .iter()
        .enumerate()
        .max_by_key(|(_, c)| c.max_label())
        .map(|(i, _)| i)?;
    Some(t.without_child(idx))
}

pub fn type_a_certificate(t: &RootedTree) -> Result<TypeACertificate> {
    if !is_type_a(t) {
        return Err(Error::NotTypeA(t.to_string()));
    }
    let (factorization, d) = match split_max(t) {
        None => (Factorization::RootIsMax, None),
        Some((x1, x2)) => {
            let d = x2.size();
            (Factorization::Graft { x1, x2 }, Some(d))
        }
    };
    Ok(TypeACertificate {
        tree: t.clone(),
        factorization,
        d,
    })
}

/// `d(T) = |X2|` for type-A trees with at least two vertices.
pub fn d_statistic(t: &RootedTree) -> Option<usize> {
    type_a_certificate(t).ok().and_then(|c| c.d)
}

pub fn psi_inverse(t: &RootedTree) -> Result<BinaryTerm> {
    if !is_type_a(t) {
        return Err(Error::NotTypeA(t.to_string()));
    }
    Ok(psi_inverse_unchecked(t))
}

fn psi_inverse_unchecked(t: &RootedTree) -> BinaryTerm {
    match split_max(t) {
        None => BinaryTerm::Leaf(t.root()),
        Some((x1, x2)) => BinaryTerm::node(psi_inverse_unchecked(&x1), psi_inverse_unchecked(&x2)),
    }
}
