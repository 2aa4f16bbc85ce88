//! The free λ-dendriform algebra on planar binary trees.
//!
//! For `t = t_l ∨ t_r` and `s = s_l ∨ s_r`:
//!
//! ```text
//! t ≺ s = t_l ∨ (t_r ≺ s + λ t_r ≻ s)      with  | ≺ s + λ | ≻ s := s
//! t ≻ s = (λ t ≺ s_l + t ≻ s_l) ∨ s_r      with  λ t ≺ | + t ≻ | := t
//! ```
//!
//! where `|` is the tree without internal nodes. The root of each result
//! keeps the generator of the operand it comes from.
//!
//! These products satisfy the three λ-dendriform relations exactly when
//! `λ(1 − λ²) = 0`: at λ = 1 (dendriform), λ = 0 (duplicial) and λ = −1.
//! For other values of λ the free algebra on one generator is smaller than
//! the span of planar binary trees (12 instead of 14 in arity 4), so no
//! formula on this basis can satisfy the relations for every λ at once.

use crate::error::{Error, Result};
use crate::exact::{LambdaPoly, LinComb};
use crate::treebases::PlanarBinaryTree;

pub type DendComb = LinComb<PlanarBinaryTree, LambdaPoly>;

fn check_operands(t: &PlanarBinaryTree, s: &PlanarBinaryTree) -> Result<()> {
    if t.is_leaf() || s.is_leaf() {
        return Err(Error::EmptyOperand);
    }
    match (t.labelled(), s.labelled()) {
        (Some(a), Some(b)) if a == b => Ok(()),
        _ => Err(Error::MixedGenerators),
    }
}

fn parts(t: &PlanarBinaryTree) -> (&PlanarBinaryTree, &PlanarBinaryTree, Option<u32>) {
    match t {
        PlanarBinaryTree::Node { left, right, gen } => (left, right, *gen),
        PlanarBinaryTree::Leaf => unreachable!("operands are checked to be nonempty"),
    }
}

fn left(t: &PlanarBinaryTree, s: &PlanarBinaryTree) -> DendComb {
    let (tl, tr, gen) = parts(t);
    left_sum(tr, s).map_basis(|c| PlanarBinaryTree::join(tl.clone(), c.clone(), gen))
}

fn right(t: &PlanarBinaryTree, s: &PlanarBinaryTree) -> DendComb {
    let (sl, sr, gen) = parts(s);
    right_sum(t, sl).map_basis(|c| PlanarBinaryTree::join(c.clone(), sr.clone(), gen))
}

// a ≺ s + λ a ≻ s
fn left_sum(a: &PlanarBinaryTree, s: &PlanarBinaryTree) -> DendComb {
    if a.is_leaf() {
        return LinComb::basis(s.clone());
    }
    let mut out = left(a, s);
    out.add_scaled(&right(a, s), &LambdaPoly::lambda());
    out
}

// λ t ≺ b + t ≻ b
fn right_sum(t: &PlanarBinaryTree, b: &PlanarBinaryTree) -> DendComb {
    if b.is_leaf() {
        return LinComb::basis(t.clone());
    }
    let mut out = right(t, b);
    out.add_scaled(&left(t, b), &LambdaPoly::lambda());
    out
}

pub fn dend_left_basis(t: &PlanarBinaryTree, s: &PlanarBinaryTree) -> Result<DendComb> {
    check_operands(t, s)?;
    Ok(left(t, s))
}

pub fn dend_right_basis(t: &PlanarBinaryTree, s: &PlanarBinaryTree) -> Result<DendComb> {
    check_operands(t, s)?;
    Ok(right(t, s))
}

/// `x ≺ y`
pub fn dend_left(x: &DendComb, y: &DendComb) -> Result<DendComb> {
    x.bilinear(y, dend_left_basis)
}

/// `x ≻ y`
pub fn dend_right(x: &DendComb, y: &DendComb) -> Result<DendComb> {
    x.bilinear(y, dend_right_basis)
}

/// `x □ y = x ≺ y − x ≻ y`
pub fn dend_square(x: &DendComb, y: &DendComb) -> Result<DendComb> {
    Ok(dend_left(x, y)? - dend_right(x, y)?)
}

/// `{x, y} = x ≺ y − y ≻ x`
pub fn dend_brace(x: &DendComb, y: &DendComb) -> Result<DendComb> {
    Ok(dend_left(x, y)? - dend_right(y, x)?)
}
