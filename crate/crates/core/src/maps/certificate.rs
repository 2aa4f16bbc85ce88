use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{commag_to_mag, mag_to_dend, phi, phi_tilde, GeneratorMap};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, LinComb, Rational, RationalMatrix};
use crate::treebases::{check_range, enumerate_commag, enumerate_planar_mag, Basis, MAX_COMMAG_N, MAX_ROOTED_N};

/// A morphism whose injectivity on one arity can be certified by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifiedMap {
    Phi,
    PhiTilde,
    CommagToMag,
    /// `Mag → λ-Dend` with λ specialized to the given value.
    MagToDend(Rational),
}

impl fmt::Display for CertifiedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifiedMap::Phi => f.write_str("phi"),
            CertifiedMap::PhiTilde => f.write_str("phi-tilde"),
            CertifiedMap::CommagToMag => f.write_str("commag-to-mag"),
            CertifiedMap::MagToDend(l) if l.is_integer() => write!(f, "mag-to-dend@{}", l.numer()),
            CertifiedMap::MagToDend(l) => write!(f, "mag-to-dend@{}", format_rational(l)),
        }
    }
}

impl FromStr for CertifiedMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(CertifiedMap::Phi),
            "phi-tilde" => Ok(CertifiedMap::PhiTilde),
            "commag-to-mag" => Ok(CertifiedMap::CommagToMag),
            _ => match s.strip_prefix("mag-to-dend@") {
                Some(v) => Ok(CertifiedMap::MagToDend(parse_rational(v)?)),
                None => Err(Error::Json(format!("unknown map {s:?}"))),
            },
        }
    }
}

/// Outcome of an exact rank computation for one arity of a morphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub map: String,
    pub n: usize,
    pub source_dim: usize,
    pub rank: usize,
    pub injective: bool,
    /// `[rows, cols]`
    pub matrix: [usize; 2],
}

/// Builds the matrix of `map` on arity `n` (one row per source basis
/// element, one column per target basis element in its image) and computes
/// its exact rank. `max_n` is the caller's resource bound.
pub fn injectivity_certificate(map: &CertifiedMap, n: usize, max_n: usize) -> Result<RankCertificate> {
    check_range("n", n, 1, max_n)?;
    match map {
        CertifiedMap::Phi | CertifiedMap::PhiTilde => {
            check_range("n", n, 1, MAX_ROOTED_N)?;
            let f = if *map == CertifiedMap::Phi { phi } else { phi_tilde };
            let rows = enumerate_commag(n)?.par_iter().map(f).collect::<Result<Vec<_>>>()?;
            Ok(certify(map, n, rows))
        }
        CertifiedMap::CommagToMag => {
            check_range("n", n, 1, MAX_COMMAG_N)?;
            let rows = enumerate_commag(n)?.par_iter().map(commag_to_mag).collect();
            Ok(certify(map, n, rows))
        }
        CertifiedMap::MagToDend(lambda) => {
            let rows = enumerate_planar_mag(n)?
                .par_iter()
                .map(|t| mag_to_dend(t, &GeneratorMap::Single).map(|x| x.map_scalars(|p| p.eval(lambda))))
                .collect::<Result<Vec<_>>>()?;
            Ok(certify(map, n, rows))
        }
    }
}

fn certify<B: Basis>(map: &CertifiedMap, n: usize, rows: Vec<LinComb<B>>) -> RankCertificate {
    let columns: Vec<&B> = rows
        .iter()
        .flat_map(|r| r.iter().map(|(b, _)| b))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index = |b: &B| columns.binary_search(&b).expect("column collected from rows");
    let sparse: Vec<Vec<(usize, Rational)>> = rows
        .par_iter()
        .map(|r| r.iter().map(|(b, c)| (index(b), c.clone())).collect())
        .collect();
    let matrix = RationalMatrix::from_sparse_rows(columns.len(), sparse);
    let rank = matrix.rank();
    RankCertificate {
        map: map.to_string(),
        n,
        source_dim: rows.len(),
        rank,
        injective: rank == rows.len(),
        matrix: [matrix.nrows(), matrix.ncols()],
    }
}
