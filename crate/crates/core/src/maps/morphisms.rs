use std::collections::BTreeMap;

use super::normalize_commag;
use crate::error::{Error, Result};
use crate::exact::{LinComb, Rational};
use crate::products::{dend_square, sharp, DendComb, TreeProduct};
use crate::treebases::{BinaryTerm, Label, PlanarBinaryTree, RootedTree};

fn symmetrize(t: &BinaryTerm, kind: TreeProduct) -> Result<LinComb<RootedTree>> {
    let normalized = normalize_commag(t)?;
    Ok(symmetrize_rec(&normalized, kind))
}

fn symmetrize_rec(t: &BinaryTerm, kind: TreeProduct) -> LinComb<RootedTree> {
    match t {
        BinaryTerm::Leaf(l) => LinComb::basis(RootedTree::leaf(*l)),
        BinaryTerm::Node(a, b) => sharp(kind, &symmetrize_rec(a, kind), &symmetrize_rec(b, kind))
            .expect("factors of a term with distinct labels are disjoint"),
    }
}

/// `Φ(x·y) = Φ(x) # Φ(y)` with `#` the symmetrized pre-Lie product.
pub fn phi(t: &BinaryTerm) -> Result<LinComb<RootedTree>> {
    symmetrize(t, TreeProduct::PreLie)
}

/// `Φ̃(x·y) = Φ̃(x) #̃ Φ̃(y)` with `#̃` the symmetrized NAP product.
pub fn phi_tilde(t: &BinaryTerm) -> Result<LinComb<RootedTree>> {
    symmetrize(t, TreeProduct::Nap)
}

/// `ComMag → Mag`: every product `u·v` becomes `uv + vu`.
pub fn commag_to_mag(t: &BinaryTerm) -> LinComb<BinaryTerm> {
    match t {
        BinaryTerm::Leaf(_) => LinComb::basis(t.clone()),
        BinaryTerm::Node(a, b) => {
            let (ea, eb) = (commag_to_mag(a), commag_to_mag(b));
            let mut out = LinComb::zero();
            for (u, cu) in ea.iter() {
                for (v, cv) in eb.iter() {
                    let c: Rational = cu * cv;
                    out.add_term(BinaryTerm::node(u.clone(), v.clone()), c.clone());
                    out.add_term(BinaryTerm::node(v.clone(), u.clone()), c);
                }
            }
            out
        }
    }
}

/// Assignment of leaf labels to dendriform generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum GeneratorMap {
    /// Every leaf is the single generator; trees carry no generator index.
    #[default]
    Single,
    Labels(BTreeMap<Label, u32>),
}

impl GeneratorMap {
    fn generator(&self, l: Label) -> Result<Option<u32>> {
        match self {
            GeneratorMap::Single => Ok(None),
            GeneratorMap::Labels(m) => m.get(&l).copied().map(Some).ok_or(Error::OutOfRange {
                what: "leaf label without generator",
                value: l.get() as usize,
                min: 1,
                max: m.keys().last().map_or(0, |k| k.get() as usize),
            }),
        }
    }
}

/// `Mag → λ-Dend`: each product is read as `x □ y = x ≺ y − x ≻ y`.
pub fn mag_to_dend(t: &BinaryTerm, generators: &GeneratorMap) -> Result<DendComb> {
    match t {
        BinaryTerm::Leaf(l) => Ok(LinComb::basis(PlanarBinaryTree::generator(generators.generator(*l)?))),
        BinaryTerm::Node(a, b) => dend_square(&mag_to_dend(a, generators)?, &mag_to_dend(b, generators)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::LambdaPoly;
    use num_traits::{One, Zero};

    fn b(s: &str) -> BinaryTerm {
        s.parse().unwrap()
    }

    fn trees(parts: &[&str]) -> LinComb<RootedTree> {
        parts.iter().map(|p| (p.parse().unwrap(), Rational::one())).collect()
    }

    #[test]
    fn phi_tilde_arity_three_displays() {
        assert_eq!(
            phi_tilde(&b("(1*(2*3))")).unwrap(),
            trees(&["1(2(3))", "1(3(2))", "2(1,3)", "3(1,2)"])
        );
        assert_eq!(
            phi_tilde(&b("((1*2)*3)")).unwrap(),
            trees(&["1(2,3)", "2(1,3)", "3(1(2))", "3(2(1))"])
        );
        assert_eq!(
            phi_tilde(&b("(2*(1*3))")).unwrap(),
            trees(&["2(1(3))", "2(3(1))", "1(2,3)", "3(1,2)"])
        );
    }

    #[test]
    fn phi_small() {
        assert_eq!(phi(&b("(1*2)")).unwrap(), trees(&["1(2)", "2(1)"]));
        // normalization happens first
        assert_eq!(phi(&b("(2*1)")).unwrap(), phi(&b("(1*2)")).unwrap());
        let dup = BinaryTerm::node(b("1"), b("1"));
        assert_eq!(phi(&dup), Err(Error::DuplicateLabel(1)));
    }

    #[test]
    fn commag_to_mag_expansion() {
        let sum = |parts: &[&str]| -> LinComb<BinaryTerm> { parts.iter().map(|p| (b(p), Rational::one())).collect() };
        assert_eq!(commag_to_mag(&b("(1*2)")), sum(&["(1*2)", "(2*1)"]));
        assert_eq!(commag_to_mag(&b("((1*2)*3)")).len(), 4);
        assert_eq!(
            commag_to_mag(&b("(1*(2*3))")),
            sum(&["(1*(2*3))", "(1*(3*2))", "((2*3)*1)", "((3*2)*1)"])
        );
    }

    #[test]
    fn mag_to_dend_small() {
        let x: PlanarBinaryTree = "(o,o)".parse().unwrap();
        assert_eq!(mag_to_dend(&b("1"), &GeneratorMap::Single).unwrap(), LinComb::basis(x));
        let sq = mag_to_dend(&b("(1*2)"), &GeneratorMap::Single).unwrap();
        assert_eq!(sq.len(), 2);
        assert_eq!(sq.coeff(&"(o,(o,o))".parse().unwrap()), LambdaPoly::one());
        assert_eq!(sq.coeff(&"((o,o),o)".parse().unwrap()), -LambdaPoly::one());
        let gens = GeneratorMap::Labels([(Label::new(1).unwrap(), 1), (Label::new(2).unwrap(), 2)].into());
        let sq = mag_to_dend(&b("(1*2)"), &gens).unwrap();
        assert_eq!(sq.coeff(&"(o,(o,o):2):1".parse().unwrap()), LambdaPoly::one());
        assert!(mag_to_dend(&b("(1*3)"), &gens).is_err());
        assert!(!LambdaPoly::one().is_zero());
    }
}
