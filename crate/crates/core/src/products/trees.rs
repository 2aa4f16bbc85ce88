use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{LinComb, Scalar};
use crate::treebases::RootedTree;

/// The two products on labelled rooted trees.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum TreeProduct {
    /// Grafting on every vertex: the free pre-Lie product `*`.
    PreLie,
    /// Grafting on the root only: the free NAP product `~*`.
    Nap,
}

impl fmt::Display for TreeProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeProduct::PreLie => "prelie",
            TreeProduct::Nap => "nap",
        })
    }
}

impl FromStr for TreeProduct {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prelie" => Ok(TreeProduct::PreLie),
            "nap" => Ok(TreeProduct::Nap),
            _ => Err(Error::Json(format!("unknown tree product {s:?}"))),
        }
    }
}

fn check_disjoint(t: &RootedTree, y: &RootedTree) -> Result<()> {
    let shared = t.common_labels(y);
    if shared.is_empty() {
        Ok(())
    } else {
        Err(Error::OverlappingLabels(shared.into_iter().map(|l| l.get()).collect()))
    }
}

/// `T * Y`: sum over the vertices of `T` of the tree with the root of `Y`
/// grafted on that vertex.
pub fn prelie_product_trees<S: Scalar>(t: &RootedTree, y: &RootedTree) -> Result<LinComb<RootedTree, S>> {
    check_disjoint(t, y)?;
    let mut out = LinComb::zero();
    for g in t.graft_everywhere(y) {
        out.add_term(g, S::one());
    }
    Ok(out)
}

/// `T ~* Y`: the root of `Y` becomes a new child of the root of `T`.
pub fn nap_product_trees(t: &RootedTree, y: &RootedTree) -> Result<RootedTree> {
    check_disjoint(t, y)?;
    Ok(t.graft_at_root(y))
}

pub fn prelie_product<S: Scalar>(
    x: &LinComb<RootedTree, S>,
    y: &LinComb<RootedTree, S>,
) -> Result<LinComb<RootedTree, S>> {
    x.bilinear(y, prelie_product_trees)
}

pub fn nap_product<S: Scalar>(
    x: &LinComb<RootedTree, S>,
    y: &LinComb<RootedTree, S>,
) -> Result<LinComb<RootedTree, S>> {
    x.bilinear(y, |a, b| Ok(LinComb::basis(nap_product_trees(a, b)?)))
}

/// Symmetrization `x # y = x·y + y·x` of either tree product.
pub fn sharp<S: Scalar>(
    kind: TreeProduct,
    x: &LinComb<RootedTree, S>,
    y: &LinComb<RootedTree, S>,
) -> Result<LinComb<RootedTree, S>> {
    let product = match kind {
        TreeProduct::PreLie => prelie_product::<S>,
        TreeProduct::Nap => nap_product::<S>,
    };
    Ok(product(x, y)? + product(y, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn t(s: &str) -> LinComb<RootedTree> {
        LinComb::basis(s.parse().unwrap())
    }

    fn sum(parts: &[&str]) -> LinComb<RootedTree> {
        parts.iter().fold(LinComb::zero(), |acc, p| acc + t(p))
    }

    #[test]
    fn prelie_examples() {
        assert_eq!(
            prelie_product(&t("3(1,4)"), &t("2")).unwrap(),
            sum(&["3(1(2),4)", "3(1,2,4)", "3(1,4(2))"])
        );
        assert_eq!(prelie_product(&t("1"), &t("2")).unwrap(), t("1(2)"));
        assert_eq!(
            prelie_product(&t("1(2)"), &t("3")).unwrap(),
            sum(&["1(2,3)", "1(2(3))"])
        );
        assert_eq!(
            prelie_product(&t("1(2)"), &t("2")),
            Err(Error::OverlappingLabels(vec![2]))
        );
    }

    #[test]
    fn nap_examples() {
        assert_eq!(nap_product(&t("1(2)"), &t("3(4)")).unwrap(), t("1(2,3(4))"));
        assert_eq!(nap_product(&t("1"), &t("2")).unwrap(), t("1(2)"));
        let a = nap_product(&nap_product(&t("1(2)"), &t("3")).unwrap(), &t("4")).unwrap();
        let b = nap_product(&nap_product(&t("1(2)"), &t("4")).unwrap(), &t("3")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, t("1(2,3,4)"));
        assert!(nap_product(&t("1"), &t("1")).is_err());
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(
            sharp(TreeProduct::PreLie, &t("1"), &t("2")).unwrap(),
            sum(&["1(2)", "2(1)"])
        );
        assert_eq!(
            sharp(TreeProduct::Nap, &t("1(2)"), &t("3")).unwrap(),
            sum(&["1(2,3)", "3(1(2))"])
        );
        assert_eq!(
            sharp(TreeProduct::Nap, &t("2"), &t("1(3)")).unwrap(),
            sum(&["2(1(3))", "1(2,3)"])
        );
        let twice: LinComb<RootedTree, Rational> = sharp(TreeProduct::Nap, &t("1"), &t("2")).unwrap();
        assert_eq!(twice.len(), 2);
    }
}
