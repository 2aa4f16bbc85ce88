//! Red/black edge colouring of labelled rooted trees.
//!
//! Cutting the red edges of a coloured tree leaves a forest of type-A trees
//! (the black components). Every red edge joins the maximal vertex of the
//! component above it to the root of the component below it. Contracting
//! each black component to its maximal label gives the skeleton, a tree
//! whose edges are all red.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::is_type_a;
use crate::treebases::{enumerate_rooted_trees, Label, RootedTree};

/// A rooted tree with a subset of its edges marked red.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTree {
    pub tree: RootedTree,
    /// `(parent, child)` pairs.
    pub red_edges: BTreeSet<(Label, Label)>,
}

impl ColoredTree {
    pub fn is_all_red(&self) -> bool {
        self.red_edges.len() + 1 == self.tree.size()
    }
}

/// `1(3(2),4) red=[(1,3),(1,4),(3,2)]`
impl fmt::Display for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} red=[", self.tree)?;
        for (i, (p, c)) in self.red_edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({p},{c})")?;
        }
        f.write_str("]")
    }
}

// Colouring state of a subtree: its black root component and whether that
// component is the whole subtree.
struct Colored {
    black_max: Label,
    whole_black: bool,
}

/// Colours the edges from the leaves down to the root. At a vertex `r` with
/// subtrees `T_i`, let `T'_i` be the black component at the root of `T_i`,
/// ordered by `b'_i = max(T'_i)`. The edges out of `r` are red when
/// `r > b'_1`, or when some `T_i` with `i < ℓ` is not entirely black;
/// otherwise they are black.
pub fn color_edges(t: &RootedTree) -> ColoredTree {
    let mut red = BTreeSet::new();
    color_rec(t, &mut red);
    ColoredTree {
        tree: t.clone(),
        red_edges: red,
    }
}

fn color_rec(t: &RootedTree, red: &mut BTreeSet<(Label, Label)>) -> Colored {
    let r = t.root();
    if t.is_leaf() {
        return Colored {
            black_max: r,
            whole_black: true,
        };
    }
    let mut subs: Vec<Colored> = t.children().iter().map(|c| color_rec(c, red)).collect();
    subs.sort_by_key(|s| s.black_max);
    let last = subs.len() - 1;
    let make_red = r > subs[0].black_max || subs[..last].iter().any(|s| !s.whole_black);
    if make_red {
        for c in t.children() {
            red.insert((r, c.root()));
        }
        Colored {
            black_max: r,
            whole_black: false,
        }
    } else {
        Colored {
            black_max: subs[last].black_max.max(r),
            whole_black: subs.iter().all(|s| s.whole_black),
        }
    }
}

/// Black components, each a type-A tree, together with the red skeleton on
/// their maximal labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Blocks of the label set, each sorted, blocks ordered by least label.
    pub blocks: Vec<Vec<Label>>,
    /// `components[i]` is the black tree on `blocks[i]`.
    pub components: Vec<RootedTree>,
    /// Tree on the block maxima.
    pub skeleton: RootedTree,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    blocks: Vec<Vec<u32>>,
    components: Vec<String>,
    skeleton: String,
}

impl Decomposition {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DecompositionJson {
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|l| l.get()).collect())
                .collect(),
            components: self.components.iter().map(|c| c.to_string()).collect(),
            skeleton: self.skeleton.to_string(),
        })
        .expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: DecompositionJson = serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        let blocks = raw
            .blocks
            .into_iter()
            .map(|b| b.into_iter().map(Label::new).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let components = raw.components.iter().map(|c| c.parse()).collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            blocks,
            components,
            skeleton: raw.skeleton.parse()?,
        })
    }
}

fn black_component(t: &RootedTree, red: &BTreeSet<(Label, Label)>, below: &mut Vec<RootedTree>) -> RootedTree {
    let mut children = Vec::new();
    for c in t.children() {
        if red.contains(&(t.root(), c.root())) {
            below.push(c.clone());
        } else {
            children.push(black_component(c, red, below));
        }
    }
    RootedTree::from_planar(t.root(), children)
}

/// Splits `t` along its red edges.
///
/// The result is checked before it is returned: every component must be of
/// type A and every red edge must leave the maximum of its upper component.
pub fn decompose(t: &RootedTree) -> Result<Decomposition> {
    let colored = color_edges(t);
    let mut components: Vec<RootedTree> = Vec::new();
    // (parent max, child max) skeleton edges
    let mut skeleton_edges: Vec<(Label, Label)> = Vec::new();
    let mut pending = vec![(None::<Label>, t.clone())];
    while let Some((parent_max, sub)) = pending.pop() {
        let mut below = Vec::new();
        let comp = black_component(&sub, &colored.red_edges, &mut below);
        let comp = comp.canonicalize()?;
        if !is_type_a(&comp) {
            return Err(Error::InvalidDecomposition(format!(
                "black component {comp} of {t} is not of type A"
            )));
        }
        let top = comp.max_label();
        for b in &below {
            let parent = find_parent(&sub, b.root()).expect("child of a vertex in sub");
            if parent != top {
                return Err(Error::InvalidDecomposition(format!(
                    "red edge ({parent},{}) of {t} does not leave the maximum {top}",
                    b.root()
                )));
            }
        }
        if let Some(p) = parent_max {
            skeleton_edges.push((p, top));
        }
        pending.extend(below.into_iter().map(|b| (Some(top), b)));
        components.push(comp);
    }
    components.sort_by_key(|c| c.min_label());
    let blocks = components
        .iter()
        .map(|c| {
            let mut b = c.labels();
            b.sort();
            b
        })
        .collect();
    let skeleton = tree_from_edges(t_max_root(&components, t), &skeleton_edges)?;
    Ok(Decomposition {
        blocks,
        components,
        skeleton,
    })
}

fn t_max_root(components: &[RootedTree], t: &RootedTree) -> Label {
    components
        .iter()
        .find(|c| c.root() == t.root())
        .map(|c| c.max_label())
        .expect("root component exists")
}

fn find_parent(t: &RootedTree, child: Label) -> Option<Label> {
    t.children().iter().find_map(|c| {
        if c.root() == child {
            Some(t.root())
        } else {
            find_parent(c, child)
        }
    })
}

fn tree_from_edges(root: Label, edges: &[(Label, Label)]) -> Result<RootedTree> {
    let mut kids: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    for &(p, c) in edges {
        kids.entry(p).or_default().push(c);
    }
    fn go(v: Label, kids: &BTreeMap<Label, Vec<Label>>, depth: usize) -> Result<RootedTree> {
        if depth > kids.len() + 1 {
            return Err(Error::InvalidDecomposition("skeleton has a cycle".into()));
        }
        let children = kids
            .get(&v)
            .map(|cs| cs.iter().map(|&c| go(c, kids, depth + 1)).collect::<Result<Vec<_>>>())
            .transpose()?
            .unwrap_or_default();
        Ok(RootedTree::from_planar(v, children))
    }
    let t = go(root, &kids, 0)?;
    if t.size() != edges.len() + 1 {
        return Err(Error::InvalidDecomposition("skeleton is not connected".into()));
    }
    t.canonicalize()
}

/// Reassembles a tree: each component hangs by its root from the maximal
/// vertex of the component it is attached to in the skeleton.
pub fn reconstruct(d: &Decomposition) -> Result<RootedTree> {
    let invalid = |m: String| Err(Error::InvalidDecomposition(m));
    if d.blocks.len() != d.components.len() {
        return invalid("blocks and components differ in number".into());
    }
    let mut by_max: BTreeMap<Label, &RootedTree> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for (block, comp) in d.blocks.iter().zip(&d.components) {
        let mut labels = comp.labels();
        labels.sort();
        if &labels != block {
            return invalid(format!("component {comp} does not match its block"));
        }
        if !is_type_a(comp) {
            return invalid(format!("component {comp} is not of type A"));
        }
        for l in labels {
            if !seen.insert(l) {
                return invalid(format!("label {l} occurs in two blocks"));
            }
        }
        by_max.insert(comp.max_label(), comp);
    }
    let mut skel_labels = d.skeleton.labels();
    skel_labels.sort();
    if skel_labels != by_max.keys().copied().collect::<Vec<_>>() {
        return invalid("skeleton labels are not the block maxima".into());
    }
    let t = attach(&d.skeleton, &by_max).canonicalize()?;
    // Only decompositions produced by the colouring have a preimage.
    if &decompose(&t)? != d {
        return invalid(format!("colouring of {t} does not reproduce the decomposition"));
    }
    Ok(t)
}

fn attach(skel: &RootedTree, by_max: &BTreeMap<Label, &RootedTree>) -> RootedTree {
    let comp = by_max[&skel.root()];
    let hanging: Vec<RootedTree> = skel.children().iter().map(|c| attach(c, by_max)).collect();
    hang_at(comp, skel.root(), &hanging)
}

fn hang_at(t: &RootedTree, at: Label, extra: &[RootedTree]) -> RootedTree {
    let mut children: Vec<RootedTree> = t.children().iter().map(|c| hang_at(c, at, extra)).collect();
    if t.root() == at {
        children.extend(extra.iter().cloned());
    }
    RootedTree::from_planar(t.root(), children)
}

/// Membership in 𝒳: `T = (r, {T_i})` with subtrees ordered by their roots
/// `r_1 < … < r_ℓ` lies in 𝒳 iff every `T_i` does and either `r > r_1`, or
/// `r < r_1`, `ℓ > 1` and some `T_i` with `i < ℓ` has more than one vertex.
pub fn is_x_tree(t: &RootedTree) -> bool {
    if t.is_leaf() {
        return true;
    }
    let mut subs: Vec<&RootedTree> = t.children().iter().collect();
    subs.sort_by_key(|s| s.root());
    let l = subs.len();
    subs.iter().all(|s| is_x_tree(s))
        && (t.root() > subs[0].root() || (l > 1 && subs[..l - 1].iter().any(|s| s.size() > 1)))
}

pub fn count_x_trees(n: usize) -> Result<usize> {
    crate::treebases::check_range("n", n, 1, 7)?;
    Ok(enumerate_rooted_trees(n)?.iter().filter(|t| is_x_tree(t)).count())
}
