use operad_forest::maps::{d_statistic, is_type_a, phi_tilde, psi, psi_inverse, type_a_certificate, Factorization};
use operad_forest::products::nap_product_trees;
use operad_forest::treebases::{enumerate_commag, enumerate_rooted_trees, BinaryTerm, Label};
use proptest::prelude::*;

/// No type-A term of Φ̃(t) has a larger d-statistic than Ψ(t). Ties do
/// occur from arity 4 on, so the leading term is not unique term by term.
#[test]
fn psi_attains_the_largest_d_statistic() {
    let mut ties = 0;
    for n in 2..=6 {
        for term in enumerate_commag(n).unwrap() {
            let lead = psi(&term).unwrap();
            let d_lead = d_statistic(&lead);
            let image = phi_tilde(&term).unwrap();
            let competitors: Vec<_> = image
                .iter()
                .filter(|(t, _)| **t != lead && is_type_a(t) && d_statistic(t) >= d_lead)
                .map(|(t, _)| (t.to_string(), d_statistic(t)))
                .collect();
            assert!(
                competitors.iter().all(|(_, d)| *d == d_lead),
                "{term}: {competitors:?} beat Ψ = {lead}"
            );
            ties += usize::from(!competitors.is_empty());
        }
    }
    assert!(ties > 0);
    let term: BinaryTerm = "((2*(1*3))*4)".parse().unwrap();
    let image = phi_tilde(&term).unwrap();
    let tied = "1(2,3,4)".parse().unwrap();
    assert!(image.coeff(&tied) != operad_forest::exact::rational(0) && is_type_a(&tied));
    assert_eq!(d_statistic(&tied), d_statistic(&psi(&term).unwrap()));
}

#[test]
fn certificates_factor_through_nap() {
    for n in 1..=6 {
        for tree in enumerate_rooted_trees(n).unwrap().into_iter().filter(is_type_a) {
            let c = type_a_certificate(&tree).unwrap();
            match c.factorization {
                Factorization::RootIsMax => assert_eq!(n, 1),
                Factorization::Graft { x1, x2 } => {
                    assert_eq!(nap_product_trees(&x1, &x2).unwrap(), tree);
                    assert!(x2.contains(tree.max_label()));
                    assert_eq!(c.d, Some(x2.size()));
                }
            }
        }
    }
}

fn arb_commag(max: usize) -> impl Strategy<Value = BinaryTerm> {
    (1..=max).prop_flat_map(|n| {
        let terms = enumerate_commag(n).unwrap();
        (0..terms.len(), Just(terms)).prop_map(|(i, ts)| ts[i].clone())
    })
}

proptest! {
    #[test]
    fn psi_round_trip(term in arb_commag(7), shift in 0u32..50) {
        // relabelling by an increasing map commutes with Ψ
        let relabel = |t: &BinaryTerm| -> BinaryTerm {
            fn go(t: &BinaryTerm, s: u32) -> BinaryTerm {
                match t {
                    BinaryTerm::Leaf(l) => BinaryTerm::leaf(Label::new(l.get() * 2 + s).unwrap()),
                    BinaryTerm::Node(a, b) => BinaryTerm::node(go(a, s), go(b, s)),
                }
            }
            go(t, shift)
        };
        let moved = relabel(&term);
        let tree = psi(&moved).unwrap();
        prop_assert!(is_type_a(&tree));
        prop_assert_eq!(psi_inverse(&tree).unwrap(), moved);
        prop_assert_eq!(tree.size(), term.arity());
    }
}
