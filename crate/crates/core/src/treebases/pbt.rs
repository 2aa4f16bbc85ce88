use std::fmt;

use super::check_range;
use crate::error::{Error, Result};

/// A planar binary tree. Internal nodes optionally carry a generator index;
/// with a single generator the index is omitted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarBinaryTree {
    Leaf,
    Node {
        left: Box<PlanarBinaryTree>,
        right: Box<PlanarBinaryTree>,
        gen: Option<u32>,
    },
}

impl PlanarBinaryTree {
    /// `left ∨ right`, the grafting of two trees on a new root.
    pub fn join(left: PlanarBinaryTree, right: PlanarBinaryTree, gen: Option<u32>) -> Self {
        PlanarBinaryTree::Node {
            left: Box::new(left),
            right: Box::new(right),
            gen,
        }
    }

    /// The tree with one internal node, i.e. a generator of the free
    /// dendriform algebra.
    pub fn generator(gen: Option<u32>) -> Self {
        Self::join(PlanarBinaryTree::Leaf, PlanarBinaryTree::Leaf, gen)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarBinaryTree::Leaf)
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            PlanarBinaryTree::Leaf => 0,
            PlanarBinaryTree::Node { left, right, .. } => 1 + left.internal_nodes() + right.internal_nodes(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.internal_nodes() + 1
    }

    /// `Some(true)` if every internal node is labelled, `Some(false)` if none
    /// is, `None` when mixed. A bare leaf counts as unlabelled.
    pub fn labelled(&self) -> Option<bool> {
        match self {
            PlanarBinaryTree::Leaf => Some(false),
            PlanarBinaryTree::Node { left, right, gen } => {
                let here = gen.is_some();
                let ok = |t: &PlanarBinaryTree| t.is_leaf() || t.labelled() == Some(here);
                (ok(left) && ok(right)).then_some(here)
            }
        }
    }

    pub(crate) fn check_generators(&self) -> Result<()> {
        self.labelled().map(|_| ()).ok_or(Error::MixedGenerators)
    }
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarBinaryTree::Leaf => f.write_str("o"),
            PlanarBinaryTree::Node { left, right, gen } => {
                write!(f, "({left},{right})")?;
                if let Some(g) = gen {
                    write!(f, ":{g}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn catalan(n: usize) -> u64 {
    // C_{k+1} = C_k * 2(2k+1)/(k+2)
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k as u64 + 1) / (k as u64 + 2))
}

/// All planar binary trees with `leaves` leaves. With `generators > 1`
/// every shape is repeated once per labelling of its internal nodes by
/// `1..=generators`.
pub fn enumerate_pbt(leaves: usize, generators: u32) -> Result<Vec<PlanarBinaryTree>> {
    check_range("leaves", leaves, 1, 16)?;
    check_range("generators", generators as usize, 1, 26)?;
    let labels: Vec<Option<u32>> = if generators == 1 {
        vec![None]
    } else {
        (1..=generators).map(Some).collect()
    };
    Ok(trees_with(leaves - 1, &labels))
}

fn trees_with(internal: usize, labels: &[Option<u32>]) -> Vec<PlanarBinaryTree> {
    if internal == 0 {
        return vec![PlanarBinaryTree::Leaf];
    }
    let mut out = Vec::new();
    for k in 0..internal {
        let lefts = trees_with(k, labels);
        let rights = trees_with(internal - 1 - k, labels);
        for l in &lefts {
            for r in &rights {
                for g in labels {
                    out.push(PlanarBinaryTree::join(l.clone(), r.clone(), *g));
                }
            }
        }
    }
    out
}
