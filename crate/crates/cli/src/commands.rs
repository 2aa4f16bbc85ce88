//! Everything except `check`: each command yields a text rendering and a
//! JSON payload, and `main` prints whichever was asked for.

use std::collections::BTreeMap;

use clap::ValueEnum;
use operad_forest::exact::{parse_rational, LambdaPoly, LinComb, Rational, Scalar};
use operad_forest::fixtures::fixtures_json;
use operad_forest::maps::{
    commag_to_mag, d_statistic, mag_to_dend, normalize_commag, phi, phi_tilde, psi, psi_inverse, type_a_certificate,
    Factorization, GeneratorMap,
};
use operad_forest::products::{
    assoc_concat, assoc_sym, dend_brace, dend_left, dend_right, dend_square, nap_product, prelie_product, sharp,
    DendComb, TreeProduct,
};
use operad_forest::redblack::{color_edges, decompose, is_x_tree, Decomposition};
use operad_forest::seriescalc::{
    dup_split_check, x_dims, y_closed_form_report, y_dims, z_dims, DimValues, DEFAULT_ORDER,
};
use operad_forest::treebases::{
    enumerate_commag, enumerate_mag, enumerate_pbt, enumerate_planar_mag, enumerate_rooted_trees, Basis, BinaryTerm,
    Label, PlanarBinaryTree, RootedTree, Word,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::Limits;
use crate::error::{usage, CliError};

/// Text and JSON renderings of one command's result.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
        }
    }
}

type CmdResult = Result<Output, CliError>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Rooted,
    Commag,
    Mag,
    PlanarMag,
    Pbt,
}

pub fn enumerate(kind: EnumKind, n: Option<usize>, generators: u32, count_only: bool, limits: &Limits) -> CmdResult {
    let n = n.ok_or_else(|| usage("enumerate needs --n (or --leaves)"))?;
    let items: Vec<String> = match kind {
        EnumKind::Pbt => {
            Limits::pick("leaves", Some(n), n, limits.bounds.max_pbt_leaves)?;
            strings(enumerate_pbt(n, generators)?)
        }
        _ => {
            Limits::pick("n", Some(n), n, limits.bounds.max_enumerate_n)?;
            match kind {
                EnumKind::Rooted => strings(enumerate_rooted_trees(n)?),
                EnumKind::Commag => strings(enumerate_commag(n)?),
                EnumKind::Mag => strings(enumerate_mag(n)?),
                _ => strings(enumerate_planar_mag(n)?),
            }
        }
    };
    let count = items.len();
    let mut text = String::new();
    if !count_only {
        for s in &items {
            text.push_str(s);
            text.push('\n');
        }
    }
    text.push_str(&format!("count: {count}"));
    let kind_name = kind.to_possible_value().expect("named").get_name().to_string();
    let mut payload = json!({"kind": kind_name, "n": n, "count": count});
    if !count_only {
        payload["items"] = json!(items);
    }
    Ok(Output::new(text, payload))
}

/// `3` rather than `3/1`; fractions stay `n/d`.
pub fn plain_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn strings<T: ToString + Sync>(items: Vec<T>) -> Vec<String> {
    items.par_iter().map(ToString::to_string).collect()
}

/// A basis element in the term grammar, or a JSON linear combination.
pub fn operand<B: Basis, S: Scalar>(text: &str) -> Result<LinComb<B, S>, CliError> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let value: Value = serde_json::from_str(trimmed).map_err(|e| usage(format!("bad JSON operand: {e}")))?;
        Ok(LinComb::from_json(&value)?)
    } else {
        Ok(LinComb::basis(B::parse(trimmed)?))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductOp {
    Prelie,
    Nap,
    PrelieSharp,
    NapSharp,
    DendLeft,
    DendRight,
    Square,
    Brace,
    Assoc,
    AssocSym,
}

fn comb<B: Basis, S: Scalar>(x: &LinComb<B, S>) -> Output {
    Output::new(x.to_string(), x.to_json())
}

/// A λ-polynomial result, or its value at `lambda` when one is given.
fn dend_output(x: &DendComb, lambda: Option<&str>) -> CmdResult {
    match lambda {
        None => Ok(comb(x)),
        Some(v) => {
            let v = parse_rational(v)?;
            Ok(comb(&x.map_scalars(|p: &LambdaPoly| p.eval(&v))))
        }
    }
}

pub fn product(op: ProductOp, lhs: &str, rhs: &str, lambda: Option<&str>) -> CmdResult {
    match op {
        ProductOp::Prelie | ProductOp::Nap | ProductOp::PrelieSharp | ProductOp::NapSharp => {
            if lambda.is_some() {
                return Err(usage("--lambda applies to dendriform products only"));
            }
            let (x, y) = (
                operand::<RootedTree, Rational>(lhs)?,
                operand::<RootedTree, Rational>(rhs)?,
            );
            let r = match op {
                ProductOp::Prelie => prelie_product(&x, &y)?,
                ProductOp::Nap => nap_product(&x, &y)?,
                ProductOp::PrelieSharp => sharp(TreeProduct::PreLie, &x, &y)?,
                _ => sharp(TreeProduct::Nap, &x, &y)?,
            };
            Ok(comb(&r))
        }
        ProductOp::Assoc | ProductOp::AssocSym => {
            if lambda.is_some() {
                return Err(usage("--lambda applies to dendriform products only"));
            }
            let (x, y) = (operand::<Word, Rational>(lhs)?, operand::<Word, Rational>(rhs)?);
            let r = if op == ProductOp::Assoc {
                assoc_concat(&x, &y)
            } else {
                assoc_sym(&x, &y)
            };
            Ok(comb(&r))
        }
        _ => {
            let (x, y) = (
                operand::<PlanarBinaryTree, LambdaPoly>(lhs)?,
                operand::<PlanarBinaryTree, LambdaPoly>(rhs)?,
            );
            let r = match op {
                ProductOp::DendLeft => dend_left(&x, &y)?,
                ProductOp::DendRight => dend_right(&x, &y)?,
                ProductOp::Square => dend_square(&x, &y)?,
                _ => dend_brace(&x, &y)?,
            };
            dend_output(&r, lambda)
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Psi,
    PsiInverse,
    Phi,
    PhiTilde,
    Normalize,
    CommagToMag,
    MagToDend,
    TypeA,
    Color,
}

/// `"1:1,2:2,3:1"` assigns generators to leaf labels.
pub fn parse_generators(text: Option<&str>) -> Result<GeneratorMap, CliError> {
    let Some(text) = text else {
        return Ok(GeneratorMap::Single);
    };
    let mut m = BTreeMap::new();
    for part in text.split(',') {
        let (l, g) = part
            .split_once(':')
            .ok_or_else(|| usage(format!("generator entry {part:?} is not label:generator")))?;
        let l: u32 = l.trim().parse().map_err(|_| usage(format!("bad label in {part:?}")))?;
        let g: u32 = g
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad generator in {part:?}")))?;
        m.insert(Label::new(l)?, g);
    }
    Ok(GeneratorMap::Labels(m))
}

fn binary(term: &str) -> Result<BinaryTerm, CliError> {
    Ok(term.trim().parse()?)
}

fn rooted(term: &str) -> Result<RootedTree, CliError> {
    Ok(term.trim().parse()?)
}

pub fn map(name: MapName, term: &str, lambda: Option<&str>, generators: Option<&str>) -> CmdResult {
    if lambda.is_some() && name != MapName::MagToDend {
        return Err(usage("--lambda applies to mag-to-dend only"));
    }
    if generators.is_some() && name != MapName::MagToDend {
        return Err(usage("--generators applies to mag-to-dend only"));
    }
    match name {
        MapName::Psi => {
            let t = psi(&binary(term)?)?;
            Ok(Output::new(t.to_string(), json!({"tree": t.to_string()})))
        }
        MapName::PsiInverse => {
            let b = psi_inverse(&rooted(term)?)?;
            Ok(Output::new(b.to_string(), json!({"term": b.to_string()})))
        }
        MapName::Normalize => {
            let b = normalize_commag(&binary(term)?)?;
            Ok(Output::new(b.to_string(), json!({"term": b.to_string()})))
        }
        MapName::Phi => Ok(comb(&phi(&binary(term)?)?)),
        MapName::PhiTilde => Ok(comb(&phi_tilde(&binary(term)?)?)),
        MapName::CommagToMag => Ok(comb(&commag_to_mag(&binary(term)?))),
        MapName::MagToDend => {
            let r = mag_to_dend(&binary(term)?, &parse_generators(generators)?)?;
            dend_output(&r, lambda)
        }
        MapName::TypeA => {
            let c = type_a_certificate(&rooted(term)?)?;
            let (x1, x2) = match &c.factorization {
                Factorization::RootIsMax => (None, None),
                Factorization::Graft { x1, x2 } => (Some(x1.to_string()), Some(x2.to_string())),
            };
            let text = match (&x1, &x2) {
                (Some(a), Some(b)) => format!("{} = {a} ~* {b}, d = {}", c.tree, c.d.unwrap_or(0)),
                _ => format!("{}: one vertex, d undefined", c.tree),
            };
            Ok(Output::new(
                text,
                json!({"tree": c.tree.to_string(), "x1": x1, "x2": x2, "d": c.d}),
            ))
        }
        MapName::Color => {
            let t = rooted(term)?;
            let c = color_edges(&t);
            let red: Vec<Value> = c.red_edges.iter().map(|(a, b)| json!([a.get(), b.get()])).collect();
            let payload = json!({
                "tree": t.to_string(),
                "red": red,
                "all_red": c.is_all_red(),
                "x_tree": is_x_tree(&t),
                "d": d_statistic(&t),
            });
            Ok(Output::new(c.to_string(), payload))
        }
    }
}

fn decomposition_text(t: &RootedTree, d: &Decomposition) -> String {
    let blocks: Vec<String> = d
        .blocks
        .iter()
        .map(|b| {
            format!(
                "{{{}}}",
                b.iter().map(|l| l.get().to_string()).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    let components: Vec<String> = d.components.iter().map(ToString::to_string).collect();
    format!(
        "colored: {}\nblocks: {}\ncomponents: {}\nskeleton: {}",
        color_edges(t),
        blocks.join(" "),
        components.join(" "),
        d.skeleton
    )
}

pub fn decompose_one(tree: &str) -> CmdResult {
    let t = rooted(tree)?;
    let d = decompose(&t)?;
    Ok(Output::new(decomposition_text(&t, &d), d.to_json()))
}

pub fn decompose_all(n: usize, count_x: bool, limits: &Limits) -> CmdResult {
    let n = Limits::pick("n", Some(n), n, limits.arity)?;
    let trees = enumerate_rooted_trees(n)?;
    if count_x {
        let count = trees.par_iter().filter(|t| color_edges(t).is_all_red()).count();
        return Ok(Output::new(count.to_string(), json!({"n": n, "count_x": count})));
    }
    let rows: Vec<(String, Value)> = trees
        .par_iter()
        .map(|t| {
            let d = decompose(t)?;
            let blocks: Vec<String> = d
                .blocks
                .iter()
                .map(|b| {
                    format!(
                        "{{{}}}",
                        b.iter().map(|l| l.get().to_string()).collect::<Vec<_>>().join(",")
                    )
                })
                .collect();
            let line = format!("{t} => blocks {} skeleton {}", blocks.join(" "), d.skeleton);
            Ok((line, json!({"tree": t.to_string(), "decomposition": d.to_json()})))
        })
        .collect::<Result<_, CliError>>()?;
    let mut text: Vec<String> = rows.iter().map(|r| r.0.clone()).collect();
    text.push(format!("count: {}", rows.len()));
    let items: Vec<Value> = rows.into_iter().map(|r| r.1).collect();
    Ok(Output::new(
        text.join("\n"),
        json!({"n": n, "count": items.len(), "items": items}),
    ))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesTarget {
    X,
    Y,
    Z,
    YClosedForm,
    DupSplit,
}

fn values_output(v: &DimValues) -> Output {
    let text = match v.dims() {
        Some(d) => d.to_table(),
        None => {
            let vals: Vec<String> = v.values.iter().map(plain_rational).collect();
            format!("{} {}\nfindings: {}", v.kind, vals.join(", "), v.findings().join("; "))
        }
    };
    Output::new(text, v.to_json())
}

pub fn series(target: SeriesTarget, order: Option<usize>, limits: &Limits) -> CmdResult {
    let order = Limits::pick("order", order, DEFAULT_ORDER, limits.bounds.max_series_order)?;
    match target {
        SeriesTarget::X => Ok(values_output(&x_dims(order)?)),
        SeriesTarget::Y => Ok(values_output(&y_dims(order)?)),
        SeriesTarget::Z => Ok(values_output(&z_dims(order)?)),
        SeriesTarget::YClosedForm => {
            let r = y_closed_form_report()?;
            let text = format!(
                "listed:   {:?}\ncomputed: {} (matches: {})\nOGS 1/(1-3t-t^3): {} (matches: {})\nEGS n!*[t^(n-1)]: {} (matches: {})",
                r.listed,
                r.computed.join(", "),
                r.computed_matches_listed,
                r.ogs_reading.join(", "),
                r.ogs_matches,
                r.egs_reading.join(", "),
                r.egs_matches
            );
            let payload = serde_json::to_value(&r).map_err(|e| usage(e.to_string()))?;
            Ok(Output::new(text, payload))
        }
        SeriesTarget::DupSplit => {
            let holds = dup_split_check(order)?;
            Ok(Output::new(
                format!("f_As∘f_Mag = f_Dup to order {order}: {holds}"),
                json!({"order": order, "holds": holds}),
            ))
        }
    }
}

pub fn fixtures() -> Output {
    let value = fixtures_json();
    let text = serde_json::to_string_pretty(&value).expect("fixtures serialize");
    Output::new(text, value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Bounds;

    fn limits() -> Limits {
        Limits::new(Bounds::default(), false, None)
    }

    #[test]
    fn enumerate_counts() {
        let l = limits();
        assert_eq!(
            enumerate(EnumKind::Rooted, Some(3), 1, false, &l).unwrap().json["count"],
            9
        );
        assert_eq!(
            enumerate(EnumKind::Commag, Some(3), 1, false, &l).unwrap().json["count"],
            3
        );
        assert_eq!(enumerate(EnumKind::Pbt, Some(4), 1, true, &l).unwrap().text, "count: 5");
        assert!(matches!(
            enumerate(EnumKind::Rooted, Some(8), 1, true, &l),
            Err(CliError::Resource(_))
        ));
    }

    #[test]
    fn products_and_maps() {
        let p = product(ProductOp::Prelie, "3(1,4)", "2", None).unwrap();
        assert_eq!(p.text, "3(1(2),4) + 3(1,2,4) + 3(1,4(2))");
        assert_eq!(product(ProductOp::Nap, "1(2)", "3(4)", None).unwrap().text, "1(2,3(4))");
        assert_eq!(map(MapName::Psi, "(2*(1*3))", None, None).unwrap().text, "2(1(3))");
        assert_eq!(
            map(MapName::PsiInverse, "1(2,3)", None, None).unwrap().text,
            "((1*2)*3)"
        );
        let json_operand = r#"[{"basis":"1","coeff":"2"}]"#;
        assert_eq!(product(ProductOp::Nap, json_operand, "2", None).unwrap().text, "2·1(2)");
        assert!(product(ProductOp::Prelie, "1", "2", Some("1")).is_err());
    }

    #[test]
    fn generators_parse() {
        assert_eq!(parse_generators(None).unwrap(), GeneratorMap::Single);
        assert!(matches!(parse_generators(Some("1:1,2:2")).unwrap(), GeneratorMap::Labels(m) if m.len() == 2));
        assert!(parse_generators(Some("1-2")).is_err());
    }
}
