use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use super::{check_range, Label, MAX_ROOTED_N};
use crate::error::{Error, Result};

/// A labelled, non-planar rooted tree: the basis of `preLie[S]` and `NAP[S]`.
///
/// Values built through [`RootedTree::new`], [`RootedTree::canonicalize`] or
/// the parser are canonical: at every vertex the children are sorted by the
/// smallest label occurring in their subtree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree {
    root: Label,
    children: Vec<RootedTree>,
    // Cached subtree extrema.
    min: Label,
    max: Label,
    size: usize,
}

impl RootedTree {
    pub fn leaf(label: Label) -> Self {
        RootedTree {
            root: label,
            children: Vec::new(),
            min: label,
            max: label,
            size: 1,
        }
    }

    /// Builds a tree keeping the children in the given order. Labels are not
    /// checked; call [`canonicalize`](Self::canonicalize) before use as a
    /// basis element.
    pub fn from_planar(root: Label, children: Vec<RootedTree>) -> Self {
        let min = children.iter().map(|c| c.min).fold(root, Label::min);
        let max = children.iter().map(|c| c.max).fold(root, Label::max);
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        RootedTree {
            root,
            children,
            min,
            max,
            size,
        }
    }

    pub fn new(root: Label, children: Vec<RootedTree>) -> Result<Self> {
        Self::from_planar(root, children).canonicalize()
    }

    /// Sorts children by minimal label at every vertex.
    pub fn canonicalize(&self) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in self.labels() {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.get()));
            }
        }
        Ok(self.sorted())
    }

    fn sorted(&self) -> Self {
        let mut children: Vec<_> = self.children.iter().map(|c| c.sorted()).collect();
        children.sort_by_key(|c| c.min);
        RootedTree {
            root: self.root,
            children,
            min: self.min,
            max: self.max,
            size: self.size,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.children.windows(2).all(|w| w[0].min < w[1].min) && self.children.iter().all(|c| c.is_canonical())
    }

    pub fn root(&self) -> Label {
        self.root
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    /// Number of subtrees attached to the root.
    pub fn degree(&self) -> usize {
        self.children.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn min_label(&self) -> Label {
        self.min
    }

    pub fn max_label(&self) -> Label {
        self.max
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Labels in depth-first preorder, children visited in stored order.
    pub fn labels(&self) -> Vec<Label> {
        let mut out = Vec::with_capacity(self.size);
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<Label>) {
        out.push(self.root);
        for c in &self.children {
            c.collect_labels(out);
        }
    }

    /// Edges as `(parent, child)` pairs in preorder.
    pub fn edges(&self) -> Vec<(Label, Label)> {
        let mut out = Vec::with_capacity(self.size.saturating_sub(1));
        self.collect_edges(&mut out);
        out
    }

    fn collect_edges(&self, out: &mut Vec<(Label, Label)>) {
        for c in &self.children {
            out.push((self.root, c.root));
            c.collect_edges(out);
        }
    }

    pub fn contains(&self, label: Label) -> bool {
        label >= self.min
            && label <= self.max
            && (self.root == label || self.children.iter().any(|c| c.contains(label)))
    }

    /// Labels shared with `other`, ascending.
    pub fn common_labels(&self, other: &RootedTree) -> Vec<Label> {
        let mine: BTreeSet<_> = self.labels().into_iter().collect();
        let mut shared: Vec<_> = other.labels().into_iter().filter(|l| mine.contains(l)).collect();
        shared.sort();
        shared
    }

    pub(crate) fn with_children(&self, children: Vec<RootedTree>) -> Self {
        let mut t = Self::from_planar(self.root, children);
        t.children.sort_by_key(|c| c.min);
        t
    }

    /// Attaches the root of `other` as a new child of the root of `self`.
    /// Labels are assumed disjoint.
    pub(crate) fn graft_at_root(&self, other: &RootedTree) -> Self {
        let mut children = self.children.clone();
        let pos = children.partition_point(|c| c.min < other.min);
        children.insert(pos, other.clone());
        Self::from_planar(self.root, children)
    }

    /// All trees obtained by attaching the root of `other` to one vertex of
    /// `self`, vertices taken in canonical depth-first order. Labels are
    /// assumed disjoint.
    pub(crate) fn graft_everywhere(&self, other: &RootedTree) -> Vec<RootedTree> {
        let mut out = Vec::with_capacity(self.size);
        self.graft_into(other, &mut out);
        out
    }

    fn graft_into(&self, other: &RootedTree, out: &mut Vec<RootedTree>) {
        out.push(self.graft_at_root(other));
        for (i, child) in self.children.iter().enumerate() {
            for grafted in child.graft_everywhere(other) {
                let mut children = self.children.clone();
                children[i] = grafted;
                out.push(self.with_children(children));
            }
        }
    }

    /// Removes the subtree at child position `index` of the root.
    pub(crate) fn without_child(&self, index: usize) -> (RootedTree, RootedTree) {
        let mut children = self.children.clone();
        let removed = children.remove(index);
        (Self::from_planar(self.root, children), removed)
    }

    /// Applies `f` to every label and re-canonicalizes.
    pub fn relabel(&self, f: &impl Fn(Label) -> Label) -> Result<Self> {
        self.map_labels(f).canonicalize()
    }

    fn map_labels(&self, f: &impl Fn(Label) -> Label) -> Self {
        Self::from_planar(f(self.root), self.children.iter().map(|c| c.map_labels(f)).collect())
    }

    /// Canonical string of the unlabelled shape.
    pub fn shape(&self) -> String {
        let mut parts: Vec<String> = self.children.iter().map(|c| c.shape()).collect();
        parts.sort();
        format!("[{}]", parts.concat())
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.root)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// All labelled rooted trees on `{1..n}`, canonical, `n^(n-1)` of them.
///
/// Trees are produced root by root, each from a parent function on the
/// remaining labels that has no cycle.
pub fn enumerate_rooted_trees(n: usize) -> Result<Vec<RootedTree>> {
    check_range("n", n, 1, MAX_ROOTED_N)?;
    let per_root: Vec<Vec<RootedTree>> = (1..=n).into_par_iter().map(|root| trees_with_root(n, root)).collect();
    Ok(per_root.into_iter().flatten().collect())
}

fn trees_with_root(n: usize, root: usize) -> Vec<RootedTree> {
    // parent[v] for v != root, ranging over 1..=n except v itself.
    let others: Vec<usize> = (1..=n).filter(|&v| v != root).collect();
    let mut parent = vec![0usize; n + 1];
    let mut digits = vec![0usize; others.len()];
    let mut out = Vec::new();
    loop {
        for (k, &v) in others.iter().enumerate() {
            // skip v itself in the range of choices
            let choice = digits[k] + 1;
            parent[v] = if choice >= v { choice + 1 } else { choice };
        }
        if is_arborescence(&parent, &others, root, n) {
            out.push(build_tree(&parent, root, n));
        }
        // odometer over (n-1)^(n-1) choices
        let mut k = 0;
        loop {
            if k == digits.len() {
                return out;
            }
            digits[k] += 1;
            if digits[k] < n - 1 {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

fn is_arborescence(parent: &[usize], others: &[usize], root: usize, n: usize) -> bool {
    others.iter().all(|&start| {
        let mut v = start;
        for _ in 0..n {
            if v == root {
                return true;
            }
            v = parent[v];
        }
        v == root
    })
}

fn build_tree(parent: &[usize], root: usize, n: usize) -> RootedTree {
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for v in 1..=n {
        if v != root {
            kids[parent[v]].push(v);
        }
    }
    fn go(v: usize, kids: &[Vec<usize>]) -> RootedTree {
        let mut children: Vec<_> = kids[v].iter().map(|&c| go(c, kids)).collect();
        children.sort_by_key(|c| c.min);
        RootedTree::from_planar(Label(v as u32), children)
    }
    go(root, &kids)
}
