//! The `check` suites. Each returns its assertions, findings and results;
//! exhaustive scans run on the rayon pool and are collected in order.

use std::collections::BTreeSet;

use clap::ValueEnum;
use operad_forest::exact::{parse_rational, rational, LambdaPoly, LinComb, Rational, RationalMatrix};
use operad_forest::fixtures::{DECOMPOSITION, REDBLACK_N4, X_COUNTS};
use operad_forest::maps::{injectivity_certificate, is_type_a, psi, psi_inverse, CertifiedMap};
use operad_forest::products::{
    assoc_sym, dend_brace, dend_left, dend_right, dend_square, nap_product_trees, prelie_product, prelie_product_trees,
    DendComb,
};
use operad_forest::redblack::{color_edges, count_x_trees, decompose, is_x_tree, reconstruct, Decomposition};
use operad_forest::seriescalc::{dup_split_check, x_dims, y_dims, z_dims, DEFAULT_ORDER, Y_LISTED};
use operad_forest::treebases::{
    enumerate_commag, enumerate_pbt, enumerate_rooted_trees, Label, PlanarBinaryTree, RootedTree, Word,
};
use rayon::prelude::*;

use crate::commands::plain_rational;
use crate::config::Limits;
use crate::error::{usage, CliError};
use crate::report::Outcome;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    PrelieIdentity,
    NapIdentity,
    DendRelations,
    PhiRecursion,
    Injectivity,
    Roundtrip,
    RedblackGolden,
    Jordan,
    LemmaSquare,
    Series,
    Filtration,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

/// Options shared by all suites; each suite reads the ones it understands.
#[derive(Clone, Debug, Default)]
pub struct SuiteArgs {
    pub n: Option<usize>,
    pub order: Option<usize>,
    pub degree: Option<usize>,
    pub map: Option<String>,
    pub lambda: Option<String>,
}

type SuiteResult = Result<Outcome, CliError>;

pub fn run(suite: Suite, args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    match suite {
        Suite::PrelieIdentity => prelie_identity(args, limits),
        Suite::NapIdentity => nap_identity(args, limits),
        Suite::DendRelations => dend_relations(args, limits),
        Suite::PhiRecursion => phi_recursion(args, limits),
        Suite::Injectivity => injectivity(args, limits),
        Suite::Roundtrip => roundtrip(args, limits),
        Suite::RedblackGolden => redblack_golden(limits),
        Suite::Jordan => Ok(jordan()),
        Suite::LemmaSquare => lemma_square(args, limits),
        Suite::Series => series(args, limits),
        Suite::Filtration => filtration(args, limits),
    }
}

fn lab(v: u32) -> Label {
    Label::new(v).expect("labels start at 1")
}

/// Ordered set partitions of `{1..m}` into `k` nonempty blocks.
pub fn ordered_splits(m: u32, k: usize) -> Vec<Vec<Vec<u32>>> {
    let total = (k as u64).pow(m);
    (0..total)
        .filter_map(|mut code| {
            let mut blocks = vec![Vec::new(); k];
            for label in 1..=m {
                blocks[(code % k as u64) as usize].push(label);
                code /= k as u64;
            }
            blocks.iter().all(|b| !b.is_empty()).then_some(blocks)
        })
        .collect()
}

/// Every rooted tree whose label set is `labels`.
pub fn trees_on(labels: &[u32]) -> Result<Vec<RootedTree>, CliError> {
    enumerate_rooted_trees(labels.len())?
        .iter()
        .map(|t| {
            t.relabel(&|l: Label| lab(labels[l.get() as usize - 1]))
                .map_err(CliError::from)
        })
        .collect()
}

/// Tuples of trees with disjoint labels covering `{1..m}`, `arity ≤ m ≤ max`.
fn tree_tuples(arity: usize, max: u32) -> Result<Vec<Vec<RootedTree>>, CliError> {
    let mut out = Vec::new();
    for m in arity as u32..=max {
        for parts in ordered_splits(m, arity) {
            let mut partial: Vec<Vec<RootedTree>> = vec![Vec::new()];
            for block in &parts {
                let choices = trees_on(block)?;
                partial = partial
                    .iter()
                    .flat_map(|p| {
                        choices.iter().map(move |c| {
                            let mut v = p.clone();
                            v.push(c.clone());
                            v
                        })
                    })
                    .collect();
            }
            out.extend(partial);
        }
    }
    Ok(out)
}

/// Tuples of one-generator planar binary trees with at most `max_internal`
/// internal vertices in total.
fn pbt_tuples(arity: usize, max_internal: usize) -> Result<Vec<Vec<PlanarBinaryTree>>, CliError> {
    let by_size: Vec<Vec<PlanarBinaryTree>> = (0..=max_internal)
        .map(|k| {
            if k == 0 {
                Ok(Vec::new())
            } else {
                enumerate_pbt(k + 1, 1)
            }
        })
        .collect::<Result<_, _>>()?;
    let mut out: Vec<(usize, Vec<PlanarBinaryTree>)> = vec![(0, Vec::new())];
    for _ in 0..arity {
        let mut next = Vec::new();
        for (used, tuple) in &out {
            let room = max_internal.saturating_sub(*used);
            for (k, trees) in by_size.iter().enumerate().take(room + 1).skip(1) {
                for p in trees {
                    let mut v = tuple.clone();
                    v.push(p.clone());
                    next.push((used + k, v));
                }
            }
        }
        out = next;
    }
    Ok(out.into_iter().map(|(_, v)| v).collect())
}

fn dend(p: &PlanarBinaryTree) -> DendComb {
    LinComb::basis(p.clone())
}

fn at(x: &DendComb, lambda: &Rational) -> LinComb<PlanarBinaryTree> {
    x.map_scalars(|p| p.eval(lambda))
}

fn first_failures(bad: &[String]) -> String {
    let shown: Vec<&str> = bad.iter().take(3).map(String::as_str).collect();
    format!("{} failures, e.g. {}", bad.len(), shown.join("; "))
}

fn scan_detail(count: usize, what: &str, bad: &[String]) -> String {
    if bad.is_empty() {
        format!("{count} {what}")
    } else {
        first_failures(bad)
    }
}

fn rooted_bound(args: &SuiteArgs, limits: &Limits, default: usize) -> Result<usize, CliError> {
    Limits::pick("n", args.n, default, limits.arity)
}

fn prelie_identity(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    let n = rooted_bound(args, limits, 5)?;
    let triples = tree_tuples(3, n as u32)?;
    let bad: Vec<String> = triples
        .par_iter()
        .filter_map(|v| {
            let b = |t: &RootedTree| LinComb::<RootedTree>::basis(t.clone());
            let (x, y, z) = (b(&v[0]), b(&v[1]), b(&v[2]));
            let p = |u: &LinComb<RootedTree>, w: &LinComb<RootedTree>| prelie_product(u, w).expect("disjoint labels");
            let assoc = |u, w, s| p(&p(u, w), s) - p(u, &p(w, s));
            let diff = assoc(&x, &y, &z) - assoc(&x, &z, &y);
            (!diff.is_zero()).then(|| format!("({},{},{})", v[0], v[1], v[2]))
        })
        .collect();
    let mut out = Outcome::default();
    out.check(
        "pre-Lie associator right-symmetric",
        bad.is_empty(),
        scan_detail(triples.len(), &format!("triples with ≤ {n} labels"), &bad),
    );
    out.result("labels", n);
    out.result("triples", triples.len());
    Ok(out)
}

fn nap_identity(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    let n = rooted_bound(args, limits, 5)?;
    let triples = tree_tuples(3, n as u32)?;
    let bad: Vec<String> = triples
        .par_iter()
        .filter_map(|v| {
            let p = |u: &RootedTree, w: &RootedTree| nap_product_trees(u, w).expect("disjoint labels");
            (p(&p(&v[0], &v[1]), &v[2]) != p(&p(&v[0], &v[2]), &v[1])).then(|| format!("({},{},{})", v[0], v[1], v[2]))
        })
        .collect();
    let mut out = Outcome::default();
    out.check(
        "(x ~* y) ~* z = (x ~* z) ~* y",
        bad.is_empty(),
        scan_detail(triples.len(), &format!("triples with ≤ {n} labels"), &bad),
    );
    out.result("labels", n);
    out.result("triples", triples.len());
    Ok(out)
}

/// The three λ-dendriform relations on `(x, y, z)`, as LambdaPoly elements.
fn dend_relations_on(x: &DendComb, y: &DendComb, z: &DendComb) -> [DendComb; 3] {
    let lambda = LambdaPoly::lambda();
    let l = |a: &DendComb, b: &DendComb| dend_left(a, b).expect("one-generator operands");
    let r = |a: &DendComb, b: &DendComb| dend_right(a, b).expect("one-generator operands");
    [
        l(&l(x, y), z) - l(x, &l(y, z)) - l(x, &r(y, z)).scale(&lambda),
        l(&r(x, y), z) - r(x, &l(y, z)),
        r(&l(x, y), z).scale(&lambda) + r(&r(x, y), z) - r(x, &r(y, z)),
    ]
}

fn dend_relations(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    // --n counts internal vertices over the three operands
    let n = Limits::pick("n", args.n, 6, limits.bounds.max_pbt_leaves.saturating_sub(1))?;
    let mut values: Vec<(String, Rational)> = [0, 1, -1].iter().map(|&v| (v.to_string(), rational(v))).collect();
    if let Some(text) = &args.lambda {
        let v = parse_rational(text)?;
        if !values.iter().any(|(_, w)| *w == v) {
            values.push((plain_rational(&v), v));
        }
    }
    let triples = pbt_tuples(3, n)?;
    let rows: Vec<([DendComb; 3], bool)> = triples
        .par_iter()
        .map(|v| {
            let (x, y, z) = (dend(&v[0]), dend(&v[1]), dend(&v[2]));
            let rels = dend_relations_on(&x, &y, &z);
            let zero = rational(0);
            let l = |a: &DendComb, b: &DendComb| dend_left(a, b).expect("one generator");
            let r = |a: &DendComb, b: &DendComb| dend_right(a, b).expect("one generator");
            let dup = at(&l(&l(&x, &y), &z), &zero) == at(&l(&x, &l(&y, &z)), &zero)
                && at(&r(&r(&x, &y), &z), &zero) == at(&r(&x, &r(&y, &z)), &zero);
            (rels, dup)
        })
        .collect();
    let label = |v: &[PlanarBinaryTree]| format!("({},{},{})", v[0], v[1], v[2]);

    let mut out = Outcome::default();
    for (name, value) in &values {
        let bad: Vec<String> = rows
            .iter()
            .zip(&triples)
            .filter(|(row, _)| row.0.iter().any(|rel| !at(rel, value).is_zero()))
            .map(|(_, v)| label(v))
            .collect();
        out.check(
            format!("three relations at λ = {name}"),
            bad.is_empty(),
            scan_detail(triples.len(), "triples", &bad),
        );
    }
    let bad: Vec<String> = rows
        .iter()
        .zip(&triples)
        .filter(|(row, _)| !row.1)
        .map(|(_, v)| label(v))
        .collect();
    out.check(
        "duplicial double associativity at λ = 0",
        bad.is_empty(),
        scan_detail(triples.len(), "triples", &bad),
    );

    let formal: Vec<(usize, &Vec<PlanarBinaryTree>, &DendComb)> = rows
        .iter()
        .zip(&triples)
        .filter_map(|(row, v)| {
            row.0
                .iter()
                .enumerate()
                .find(|(_, r)| !r.is_zero())
                .map(|(i, r)| (i, v, r))
        })
        .collect();
    if let Some((i, v, residue)) = formal.first() {
        out.finding(format!(
            "the relations hold at λ ∈ {{0, 1, −1}} but not for formal λ: {} of {} triples leave a residue, e.g. relation {} on {} leaves {}",
            formal.len(),
            triples.len(),
            i + 1,
            label(v),
            residue
        ));
    }
    out.result("internal_vertices", n);
    out.result("triples", triples.len());
    out.result("formal_lambda_failures", formal.len());
    Ok(out)
}

/// `φ(r ∨ s) = φ(r) ≻ x ≺ φ(s)`, a leaf side contributing nothing.
fn phi_of(p: &PlanarBinaryTree, right_first: bool) -> Result<DendComb, CliError> {
    let PlanarBinaryTree::Node { left, right, .. } = p else {
        return Err(usage("the leaf has no image under φ"));
    };
    let x = dend(&PlanarBinaryTree::generator(None));
    Ok(match (left.is_leaf(), right.is_leaf()) {
        (true, true) => x,
        (false, true) => dend_right(&phi_of(left, right_first)?, &x)?,
        (true, false) => dend_left(&x, &phi_of(right, right_first)?)?,
        (false, false) => {
            let (r, s) = (phi_of(left, right_first)?, phi_of(right, right_first)?);
            if right_first {
                dend_right(&r, &dend_left(&x, &s)?)?
            } else {
                dend_left(&dend_right(&r, &x)?, &s)?
            }
        }
    })
}

fn phi_recursion(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    let leaves = Limits::pick("n", args.n, 7, limits.bounds.max_pbt_leaves)?;
    let trees: Vec<PlanarBinaryTree> = (2..=leaves)
        .map(|k| enumerate_pbt(k, 1))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let bad: Vec<String> = trees
        .par_iter()
        .map(|p| {
            for right_first in [false, true] {
                let got = phi_of(p, right_first)?;
                if got != dend(p) {
                    return Ok(Some(format!("φ({p}) = {got}")));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>, CliError>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut out = Outcome::default();
    out.check(
        "φ reproduces every tree with coefficient 1",
        bad.is_empty(),
        scan_detail(
            trees.len(),
            &format!("trees with 2..={leaves} leaves, both bracketings"),
            &bad,
        ),
    );
    out.result("leaves", leaves);
    out.result("trees", trees.len());
    Ok(out)
}

fn injectivity(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    let maps: Vec<CertifiedMap> = match &args.map {
        Some(name) => vec![name.parse().map_err(|_| {
            usage(format!(
                "unknown map {name:?}; expected phi, phi-tilde, commag-to-mag or mag-to-dend@<λ>"
            ))
        })?],
        None => vec![
            CertifiedMap::Phi,
            CertifiedMap::PhiTilde,
            CertifiedMap::CommagToMag,
            CertifiedMap::MagToDend(rational(0)),
            CertifiedMap::MagToDend(rational(1)),
        ],
    };
    let arities: Vec<usize> = match args.n {
        Some(n) => vec![Limits::pick("n", Some(n), n, limits.arity)?],
        None => (1..=limits.arity).collect(),
    };
    let mut out = Outcome::default();
    let mut certs = Vec::new();
    for map in &maps {
        for &n in &arities {
            let c = injectivity_certificate(map, n, limits.arity)?;
            out.check(
                format!("{map} injective at n = {n}"),
                c.injective,
                format!(
                    "rank {} of {} ({}×{} matrix)",
                    c.rank, c.source_dim, c.matrix[0], c.matrix[1]
                ),
            );
            certs.push(serde_json::to_value(&c).expect("certificate serializes"));
        }
    }
    out.result("certificates", certs);
    Ok(out)
}

fn roundtrip(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    let n = rooted_bound(args, limits, limits.arity)?;
    let mut out = Outcome::default();
    let mut bad_psi = Vec::new();
    let mut terms = 0;
    for k in 1..=n {
        for term in enumerate_commag(k)? {
            let tree = psi(&term)?;
            if !is_type_a(&tree) || psi_inverse(&tree).ok().as_ref() != Some(&term) {
                bad_psi.push(term.to_string());
            }
            terms += 1;
        }
    }
    out.check(
        "Ψ⁻¹∘Ψ = id on ComMag",
        bad_psi.is_empty(),
        scan_detail(terms, &format!("terms with ≤ {n} leaves"), &bad_psi),
    );

    let mut trees_total = 0;
    let mut bad_inv = Vec::new();
    let mut bad_dec = Vec::new();
    let mut bad_x = Vec::new();
    for k in 1..=n {
        let trees = enumerate_rooted_trees(k)?;
        let rows: Vec<(Option<String>, Option<String>, Option<String>)> = trees
            .par_iter()
            .map(|t| {
                let inv = is_type_a(t)
                    .then(|| psi_inverse(t).ok().and_then(|b| psi(&b).ok()))
                    .and_then(|back| (back.as_ref() != Some(t)).then(|| t.to_string()));
                let dec = match decompose(t).and_then(|d| reconstruct(&d)) {
                    Ok(back) if back == *t => None,
                    _ => Some(t.to_string()),
                };
                let x = (color_edges(t).is_all_red() != is_x_tree(t)).then(|| t.to_string());
                (inv, dec, x)
            })
            .collect();
        for (inv, dec, x) in rows {
            bad_inv.extend(inv);
            bad_dec.extend(dec);
            bad_x.extend(x);
        }
        trees_total += trees.len();
    }
    let what = format!("trees with ≤ {n} vertices");
    out.check(
        "Ψ∘Ψ⁻¹ = id on type-A trees",
        bad_inv.is_empty(),
        scan_detail(trees_total, &what, &bad_inv),
    );
    out.check(
        "reconstruct∘decompose = id",
        bad_dec.is_empty(),
        scan_detail(trees_total, &what, &bad_dec),
    );
    out.check(
        "𝒳-tree ⇔ all edges red",
        bad_x.is_empty(),
        scan_detail(trees_total, &what, &bad_x),
    );
    out.result("n", n);
    out.result("commag_terms", terms);
    out.result("rooted_trees", trees_total);
    Ok(out)
}

fn redblack_golden(limits: &Limits) -> SuiteResult {
    let mut out = Outcome::default();
    let bad: Vec<String> = REDBLACK_N4
        .iter()
        .filter_map(|line| {
            let (tree, _) = line.split_once(" red=")?;
            let got = tree.parse::<RootedTree>().map(|t| color_edges(&t).to_string());
            (got.as_deref().ok() != Some(*line)).then(|| format!("{line} (got {got:?})"))
        })
        .collect();
    out.check(
        "n = 4 colourings",
        bad.is_empty(),
        scan_detail(REDBLACK_N4.len(), "colourings", &bad),
    );

    let (tree, want) = DECOMPOSITION;
    let want = serde_json::from_str(want).map_err(|e| usage(e.to_string()))?;
    let want = Decomposition::from_json(&want)?;
    let got = decompose(&tree.parse()?)?;
    out.check(
        format!("decomposition of {tree}"),
        got == want,
        got.to_json().to_string(),
    );

    let n = limits.arity.min(X_COUNTS.len());
    let counts: Vec<usize> = (1..=n).map(count_x_trees).collect::<Result<_, _>>()?;
    out.check(
        format!("𝒳-tree counts for n ≤ {n}"),
        counts == X_COUNTS[..n],
        format!("{counts:?}"),
    );
    out.result("x_counts", counts);
    Ok(out)
}

fn word(letters: &str) -> LinComb<Word> {
    LinComb::basis(letters.parse().expect("letters are words"))
}

fn jordan() -> Outcome {
    let dot = assoc_sym;
    let (x, y, z, t) = (word("x"), word("y"), word("z"), word("t"));
    let ops = [dot(&dot(&x, &y), &z), dot(&dot(&x, &z), &y), dot(&dot(&y, &z), &x)];
    let columns: BTreeSet<Word> = ops.iter().flat_map(|o| o.iter().map(|(w, _)| w.clone())).collect();
    let dense: Vec<Vec<Rational>> = ops
        .iter()
        .map(|o| columns.iter().map(|w| o.coeff(w)).collect())
        .collect();
    let rank = RationalMatrix::from_dense(&dense).rank();

    let lhs = dot(&dot(&x, &y), &dot(&t, &z)) + dot(&dot(&x, &z), &dot(&t, &y)) + dot(&dot(&y, &z), &dot(&t, &x));
    let rhs = dot(&dot(&dot(&x, &y), &t), &z) + dot(&dot(&dot(&x, &z), &t), &y) + dot(&dot(&dot(&y, &z), &t), &x);
    let identity = lhs - rhs;

    let (a, b) = (word("a"), word("b"));
    let a2 = dot(&a, &a);
    let relation = dot(&a2, &dot(&b, &a)) - dot(&dot(&a2, &b), &a);

    let mut out = Outcome::default();
    out.check("arity-3 rank", rank == 3, format!("rank {rank} of 3"));
    out.check("arity-4 identity", identity.is_zero(), identity.to_string());
    out.check(
        "Jordan relation (a²)·(b·a) = ((a²)·b)·a",
        relation.is_zero(),
        relation.to_string(),
    );
    out.result("arity3_rank", rank);
    out
}

fn lemma_square(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    let n = Limits::pick("n", args.n, 6, limits.bounds.max_pbt_leaves.saturating_sub(1))?;
    let pairs = pbt_tuples(2, n)?;
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|v| {
            let (x, y) = (dend(&v[0]), dend(&v[1]));
            let sq = |a: &DendComb, b: &DendComb| dend_square(a, b).expect("one generator");
            let br = |a: &DendComb, b: &DendComb| dend_brace(a, b).expect("one generator");
            let diff = sq(&x, &y) + sq(&y, &x) - br(&x, &y) - br(&y, &x);
            (!diff.is_zero()).then(|| format!("({},{})", v[0], v[1]))
        })
        .collect();
    let mut out = Outcome::default();
    out.check(
        "x□y + y□x = {x,y} + {y,x}",
        bad.is_empty(),
        scan_detail(pairs.len(), &format!("pairs with ≤ {n} internal vertices"), &bad),
    );
    let triples = pbt_tuples(3, n)?;
    let one = rational(1);
    let bad: Vec<String> = triples
        .par_iter()
        .filter_map(|v| {
            let (x, y, z) = (dend(&v[0]), dend(&v[1]), dend(&v[2]));
            let b = |u: &DendComb, w: &DendComb| dend_brace(u, w).expect("one generator");
            let assoc =
                |u: &DendComb, w: &DendComb, s: &DendComb| at(&b(&b(u, w), s), &one) - at(&b(u, &b(w, s)), &one);
            (!(assoc(&x, &y, &z) - assoc(&x, &z, &y)).is_zero()).then(|| format!("({},{},{})", v[0], v[1], v[2]))
        })
        .collect();
    out.check(
        "brace associator right-symmetric at λ = 1",
        bad.is_empty(),
        scan_detail(triples.len(), &format!("triples with ≤ {n} internal vertices"), &bad),
    );
    out.result("internal_vertices", n);
    out.result("pairs", pairs.len());
    out.result("triples", triples.len());
    Ok(out)
}

fn series(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    let order = Limits::pick("order", args.order, DEFAULT_ORDER, limits.bounds.max_series_order)?;
    let mut out = Outcome::default();

    let x = x_dims(order)?;
    let xd = x.dims();
    let x_detail = match xd.as_ref().and_then(|d| d.dims_u64()) {
        Some(v) => format!("{v:?}"),
        None => x.findings().join("; "),
    };
    out.check("x dims are nonnegative integers", xd.is_some(), x_detail);
    let upto = order.min(limits.arity).min(X_COUNTS.len());
    let counts: Vec<u64> = (1..=upto)
        .map(|n| count_x_trees(n).map(|c| c as u64))
        .collect::<Result<_, _>>()?;
    let head: Option<Vec<u64>> = xd.as_ref().and_then(|d| d.dims_u64()).map(|v| v[..upto].to_vec());
    out.check(
        format!("x dims agree with 𝒳-tree counts for n ≤ {upto}"),
        head.as_deref() == Some(&counts[..]),
        format!("{counts:?}"),
    );

    let y = y_dims(order)?;
    let m = order.min(Y_LISTED.len());
    let listed: Vec<Rational> = Y_LISTED[..m]
        .iter()
        .map(|&v| Rational::from_integer(v.into()))
        .collect();
    out.check(
        format!("y dims match the listed values for n ≤ {m}"),
        y.values[..m] == listed[..],
        y.values[..m].iter().map(plain_rational).collect::<Vec<_>>().join(", "),
    );

    let dup_order = order.min(14);
    let holds = dup_split_check(dup_order)?;
    out.check(
        format!("f_As∘f_Mag = f_Dup to order {dup_order}"),
        holds,
        format!("holds: {holds}"),
    );

    let z = z_dims(order)?;
    for f in z.findings() {
        out.finding(format!("z dims: {f}"));
    }
    out.result("order", order);
    out.result("x", x.to_json());
    out.result("y", y.to_json());
    out.result("z", z.to_json());
    Ok(out)
}

fn filtration(args: &SuiteArgs, limits: &Limits) -> SuiteResult {
    let n = rooted_bound(args, limits, 6)?;
    let pairs = tree_tuples(2, n as u32)?;
    let pairs: Vec<&Vec<RootedTree>> = pairs
        .iter()
        .filter(|v| args.degree.is_none_or(|d| v[0].degree() == d))
        .collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|v| {
            let (t, y) = (&v[0], &v[1]);
            let p: LinComb<RootedTree> = prelie_product_trees(t, y).expect("disjoint labels");
            let nap = nap_product_trees(t, y).expect("disjoint labels");
            let ok = p.coeff(&nap) == rational(1) && p.iter().all(|(s, _)| *s == nap || s.degree() == t.degree());
            (!ok).then(|| format!("{t} * {y}"))
        })
        .collect();
    let mut out = Outcome::default();
    let scope = match args.degree {
        Some(d) => format!("pairs with |T|+|Y| ≤ {n} and deg(T) = {d}"),
        None => format!("pairs with |T|+|Y| ≤ {n}"),
    };
    out.check(
        "T*Y = T~*Y + terms of root degree deg(T)",
        bad.is_empty(),
        scan_detail(pairs.len(), &scope, &bad),
    );
    out.result("n", n);
    out.result("pairs", pairs.len());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Bounds;

    fn limits() -> Limits {
        Limits::new(Bounds::default(), false, None)
    }

    #[test]
    fn splits_are_ordered_and_surjective() {
        assert_eq!(ordered_splits(3, 3).len(), 6);
        assert_eq!(ordered_splits(3, 2).len(), 6);
        assert_eq!(ordered_splits(4, 2).len(), 14);
    }

    #[test]
    fn pbt_tuple_counts() {
        // pairs of trees with i + j ≤ 2 internal vertices: only (1,1)
        assert_eq!(pbt_tuples(2, 2).unwrap().len(), 1);
        // (1,1), (1,2) ×2, (2,1) ×2
        assert_eq!(pbt_tuples(2, 3).unwrap().len(), 5);
    }

    #[test]
    fn small_suites_pass() {
        let args = SuiteArgs {
            n: Some(4),
            ..Default::default()
        };
        for s in [
            Suite::PrelieIdentity,
            Suite::NapIdentity,
            Suite::Filtration,
            Suite::Roundtrip,
            Suite::PhiRecursion,
        ] {
            let o = run(s, &args, &limits()).unwrap();
            assert!(o.assertions.iter().all(|a| a.passed), "{s:?}: {:?}", o.assertions);
        }
        assert!(jordan().assertions.iter().all(|a| a.passed));
    }

    #[test]
    fn dend_relations_report_the_formal_residue() {
        let args = SuiteArgs {
            n: Some(4),
            ..Default::default()
        };
        let o = run(Suite::DendRelations, &args, &limits()).unwrap();
        assert!(o.assertions.iter().all(|a| a.passed));
        assert_eq!(o.findings.len(), 1);
        let args = SuiteArgs {
            n: Some(4),
            lambda: Some("2".into()),
            ..Default::default()
        };
        let o = run(Suite::DendRelations, &args, &limits()).unwrap();
        assert!(o.assertions.iter().any(|a| !a.passed && a.name.contains("λ = 2")));
    }

    #[test]
    fn bounds_are_enforced() {
        let args = SuiteArgs {
            n: Some(7),
            ..Default::default()
        };
        assert!(matches!(
            run(Suite::Roundtrip, &args, &limits()),
            Err(CliError::Resource(_))
        ));
    }
}
