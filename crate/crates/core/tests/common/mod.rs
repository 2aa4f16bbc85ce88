//! Independent reference computations for the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `(2n−3)!!`, with the empty product at `n = 1`.
pub fn double_factorial(n: u64) -> u64 {
    (1..n).map(|k| 2 * k - 1).product()
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

pub fn cayley(n: u64) -> u64 {
    n.pow(n as u32 - 1)
}

/// Rank by textbook Gaussian elimination on a dense rational matrix.
pub fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                for c in col..ncols {
                    let delta = &f * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn is_one(x: &BigRational) -> bool {
    x.is_one()
}

/// Set partitions of `{1..n}`, each a list of blocks in order of least
/// element.
pub fn set_partitions(n: u32) -> Vec<Vec<Vec<u32>>> {
    let mut out: Vec<Vec<Vec<u32>>> = vec![vec![]];
    for x in 1..=n {
        let mut next = Vec::new();
        for p in out {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p;
            q.push(vec![x]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Ordered splits of `{1..m}` into `k` nonempty labelled parts.
pub fn ordered_splits(m: u32, k: usize) -> Vec<Vec<Vec<u32>>> {
    let total = (k as u64).pow(m);
    (0..total)
        .filter_map(|mut code| {
            let mut parts = vec![Vec::new(); k];
            for x in 1..=m {
                parts[(code % k as u64) as usize].push(x);
                code /= k as u64;
            }
            parts.iter().all(|p| !p.is_empty()).then_some(parts)
        })
        .collect()
}

/// Dimension in arity `n` of the free algebra on one generator with two
/// operations `≺`, `≻` subject to the three λ-dendriform relations at the
/// given value of λ: monomials modulo every consequence of the relations.
pub fn free_lambda_dend_dim(n: usize, lambda: &BigRational) -> usize {
    let monos = monomials(n);
    let index: std::collections::HashMap<&String, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows: Vec<Vec<BigRational>> = consequences(n, lambda)
        .into_iter()
        .map(|rel| {
            let mut row = vec![BigRational::zero(); monos.len()];
            for (m, c) in rel {
                row[index[&m]] += c;
            }
            row
        })
        .collect();
    monos.len() - dense_rank(rows)
}

fn monomials(n: usize) -> Vec<String> {
    if n == 1 {
        return vec!["x".into()];
    }
    let mut out = Vec::new();
    for k in 1..n {
        for a in monomials(k) {
            for b in monomials(n - k) {
                for op in ['<', '>'] {
                    out.push(format!("({a}{op}{b})"));
                }
            }
        }
    }
    out
}

type Relation = Vec<(String, BigRational)>;

fn relations(a: &str, b: &str, c: &str, lambda: &BigRational) -> [Relation; 3] {
    let l = |u: &str, v: &str| format!("({u}<{v})");
    let r = |u: &str, v: &str| format!("({u}>{v})");
    [
        vec![
            (l(&l(a, b), c), q(1)),
            (l(a, &l(b, c)), q(-1)),
            (l(a, &r(b, c)), -lambda.clone()),
        ],
        vec![(l(&r(a, b), c), q(1)), (r(a, &l(b, c)), q(-1))],
        vec![
            (r(&l(a, b), c), lambda.clone()),
            (r(&r(a, b), c), q(1)),
            (r(a, &r(b, c)), q(-1)),
        ],
    ]
}

fn consequences(n: usize, lambda: &BigRational) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n - i {
            let k = n - i - j;
            for a in monomials(i) {
                for b in monomials(j) {
                    for c in monomials(k) {
                        out.extend(relations(&a, &b, &c, lambda));
                    }
                }
            }
        }
    }
    for k in 3..n {
        for rel in consequences(k, lambda) {
            for m in monomials(n - k) {
                for op in ['<', '>'] {
                    out.push(rel.iter().map(|(t, c)| (format!("({t}{op}{m})"), c.clone())).collect());
                    out.push(rel.iter().map(|(t, c)| (format!("({m}{op}{t})"), c.clone())).collect());
                }
            }
        }
    }
    out
}
