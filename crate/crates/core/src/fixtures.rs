//! Golden values transcribed from worked examples and figures, shared by
//! unit tests, the acceptance suite and the `fixtures` CLI command.

use serde_json::{json, Value};

/// All 64 red/black colourings of labelled rooted trees on four vertices,
/// plus the two worked three-edge examples at the front.
pub const REDBLACK_N4: &[&str] = &[
    "1(3(2),4) red=[(1,3),(1,4),(3,2)]",
    "1(4(2),3) red=[(4,2)]",
    "1(2(3(4))) red=[]",
    "1(2(4(3))) red=[(4,3)]",
    "1(3(2(4))) red=[]",
    "1(3(4(2))) red=[(4,2)]",
    "1(4(2(3))) red=[(4,2)]",
    "1(4(3(2))) red=[(3,2),(4,3)]",
    "2(1(3(4))) red=[]",
    "2(1(4(3))) red=[(4,3)]",
    "2(3(1(4))) red=[]",
    "2(3(4(1))) red=[(4,1)]",
    "2(4(1(3))) red=[(4,1)]",
    "2(4(3(1))) red=[(3,1),(4,3)]",
    "3(1(2(4))) red=[]",
    "3(1(4(2))) red=[(4,2)]",
    "3(2(1(4))) red=[]",
    "3(2(4(1))) red=[(4,1)]",
    "3(4(1(2))) red=[(4,1)]",
    "3(4(2(1))) red=[(2,1),(4,2)]",
    "4(1(2(3))) red=[(4,1)]",
    "4(1(3(2))) red=[(3,2),(4,1)]",
    "4(2(1(3))) red=[(4,2)]",
    "4(2(3(1))) red=[(3,1),(4,2)]",
    "4(3(1(2))) red=[(3,1),(4,3)]",
    "4(3(2(1))) red=[(2,1),(3,2),(4,3)]",
    "1(2(3,4)) red=[]",
    "1(3(2,4)) red=[(3,2),(3,4)]",
    "1(4(2,3)) red=[(4,2),(4,3)]",
    "2(1(3,4)) red=[]",
    "2(3(1,4)) red=[(3,1),(3,4)]",
    "2(4(1,3)) red=[(4,1),(4,3)]",
    "3(1(2,4)) red=[]",
    "3(2(1,4)) red=[(2,1),(2,4),(3,2)]",
    "3(4(1,2)) red=[(4,1),(4,2)]",
    "4(1(2,3)) red=[(4,1)]",
    "4(2(1,3)) red=[(2,1),(2,3),(4,2)]",
    "4(3(1,2)) red=[(3,1),(3,2),(4,3)]",
    "1(2,3(4)) red=[]",
    "1(2,4(3)) red=[(4,3)]",
    "1(2(4),3) red=[]",
    "1(4(2),3) red=[(4,2)]",
    "1(2(3),4) red=[]",
    "1(3(2),4) red=[(1,3),(1,4),(3,2)]",
    "2(1,3(4)) red=[(2,1),(2,3)]",
    "2(1,4(3)) red=[(2,1),(2,4),(4,3)]",
    "2(1(4),3) red=[]",
    "2(4(1),3) red=[(4,1)]",
    "2(1(3),4) red=[]",
    "2(3(1),4) red=[(2,3),(2,4),(3,1)]",
    "3(1,2(4)) red=[(3,1),(3,2)]",
    "3(1,4(2)) red=[(3,1),(3,4),(4,2)]",
    "3(1(4),2) red=[(3,1),(3,2)]",
    "3(4(1),2) red=[(3,2),(3,4),(4,1)]",
    "3(1(2),4) red=[(3,1),(3,4)]",
    "3(2(1),4) red=[(2,1),(3,2),(3,4)]",
    "4(1,2(3)) red=[(4,1),(4,2)]",
    "4(1,3(2)) red=[(3,2),(4,1),(4,3)]",
    "4(1(3),2) red=[(4,1),(4,2)]",
    "4(3(1),2) red=[(3,1),(4,2),(4,3)]",
    "4(1(2),3) red=[(4,1),(4,3)]",
    "4(2(1),3) red=[(2,1),(4,2),(4,3)]",
    "1(2,3,4) red=[]",
    "2(1,3,4) red=[(2,1),(2,3),(2,4)]",
    "3(1,2,4) red=[(3,1),(3,2),(3,4)]",
    "4(1,2,3) red=[(4,1),(4,2),(4,3)]",
];

/// `3(1,4) * 2`, one term per grafting vertex.
pub const PRELIE_GRAFT: (&str, &str, &[&str]) = ("3(1,4)", "2", &["3(1,2,4)", "3(1(2),4)", "3(1,4(2))"]);

/// The three normalized products on {1,2,3}.
pub const COMMAG_3: &[&str] = &["((1*2)*3)", "(1*(2*3))", "(2*(1*3))"];

/// `(term, Ψ(term))` pairs.
pub const PSI: &[(&str, &str)] = &[
    ("1", "1"),
    ("(1*2)", "1(2)"),
    ("((1*2)*3)", "1(2,3)"),
    ("(1*(2*3))", "1(2(3))"),
    ("(2*(1*3))", "2(1(3))"),
];

/// `(term, Φ̃(term))` with every coefficient equal to one.
pub const PHI_TILDE_3: &[(&str, &[&str])] = &[
    ("(1*(2*3))", &["1(2(3))", "1(3(2))", "2(1,3)", "3(1,2)"]),
    ("((1*2)*3)", &["1(2,3)", "2(1,3)", "3(1(2))", "3(2(1))"]),
    ("(2*(1*3))", &["1(2,3)", "2(1(3))", "2(3(1))", "3(1,2)"]),
];

/// `(type-A tree, d)`.
pub const D_STATISTIC: &[(&str, Option<usize>)] = &[("1(2,3)", Some(1)), ("1(2(3))", Some(2)), ("2(1(3))", Some(2))];

/// `4(1(2,3))` and its decomposition.
pub const DECOMPOSITION: (&str, &str) = (
    "4(1(2,3))",
    r#"{"blocks":[[1,2,3],[4]],"components":["1(2,3)","4"],"skeleton":"4(3)"}"#,
);

/// Number of 𝒳-trees on `n` vertices, `n = 1..=7`.
pub const X_COUNTS: &[usize] = &[1, 1, 3, 16, 120, 1146, 13258];

pub fn fixtures_json() -> Value {
    json!({
        "redblack_n4": REDBLACK_N4,
        "prelie_graft": {"left": PRELIE_GRAFT.0, "right": PRELIE_GRAFT.1, "terms": PRELIE_GRAFT.2},
        "commag_3": COMMAG_3,
        "psi": PSI.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "phi_tilde_3": PHI_TILDE_3.iter().map(|(a, b)| json!({"term": a, "terms": b})).collect::<Vec<_>>(),
        "d_statistic": D_STATISTIC.iter().map(|(a, d)| json!([a, d])).collect::<Vec<_>>(),
        "decomposition": {"tree": DECOMPOSITION.0, "result": serde_json::from_str::<Value>(DECOMPOSITION.1).expect("valid json")},
        "x_counts": X_COUNTS,
    })
}
