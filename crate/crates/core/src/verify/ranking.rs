use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::sweep::{ClassInfo, Sweep};
use crate::digraph::{CanonicalForm, Digraph};
use crate::error::{Error, Result};
use crate::spectral::{
    adjacency_matrix, char_poly, compare_largest_roots, largest_real_root, signless_laplacian,
    IntPolynomial,
};

/// Default value-grouping tolerance for rankings.
pub const GROUPING_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// Signless Laplacian spectral radius.
    Q,
    /// Adjacency spectral radius.
    Rho,
}

impl Metric {
    pub fn of(&self, c: &ClassInfo) -> f64 {
        match self {
            Metric::Q => c.q,
            Metric::Rho => c.rho,
        }
    }

    pub fn char_poly(&self, d: &Digraph) -> Result<IntPolynomial> {
        char_poly(&match self {
            Metric::Q => signless_laplacian(d),
            Metric::Rho => adjacency_matrix(d),
        })
    }
}

impl FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(Metric::Q),
            "rho" => Ok(Metric::Rho),
            _ => Err(Error::InvalidParameter(format!("unknown metric `{s}` (expected q or rho)"))),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Q => "q",
            Metric::Rho => "rho",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankEntry {
    /// 1-based; classes with equal values share a rank.
    pub rank: usize,
    pub canonical: String,
    pub digraph: Digraph,
    pub value: f64,
    /// Largest real root of the exact characteristic polynomial.
    pub exact_root: f64,
    /// Set when this entry's value lies within ten grouping tolerances of its
    /// predecessor's and the order was decided from exact polynomials.
    pub adjudicated: bool,
    #[serde(skip)]
    pub form: CanonicalForm,
}

#[derive(Debug, Clone, Serialize)]
pub struct Ranking {
    pub n: usize,
    pub metric: Metric,
    pub direction: Direction,
    pub tolerance: f64,
    pub entries: Vec<RankEntry>,
}

impl Ranking {
    /// Entries holding rank `r` (1-based).
    pub fn rank(&self, r: usize) -> Vec<&RankEntry> {
        self.entries.iter().filter(|e| e.rank == r).collect()
    }

    pub fn rank_count(&self) -> usize {
        self.entries.last().map_or(0, |e| e.rank)
    }
}

/// The `top_k` extremal isomorphism classes of the sweep by `metric`.
///
/// Classes are sorted by value; neighbours closer than ten tolerances are
/// compared exactly through their characteristic polynomials, so exactly equal
/// values share a rank and distinct ones never do.
pub fn extremal_ranking(
    sweep: &Sweep,
    metric: Metric,
    direction: Direction,
    top_k: usize,
    tolerance: f64,
) -> Result<Ranking> {
    let mut order: Vec<&ClassInfo> = sweep.classes.iter().collect();
    let key = |c: &ClassInfo| match direction {
        Direction::Min => metric.of(c),
        Direction::Max => -metric.of(c),
    };
    order.sort_by(|a, b| key(a).total_cmp(&key(b)).then(a.canonical.cmp(&b.canonical)));

    let mut entries: Vec<RankEntry> = Vec::new();
    let mut rank = 0;
    let mut prev: Option<(&ClassInfo, IntPolynomial)> = None;
    for c in order {
        let poly = metric.char_poly(&c.digraph)?;
        let mut adjudicated = false;
        let same = match &prev {
            None => false,
            Some((p, p_poly)) => {
                let gap = (metric.of(c) - metric.of(p)).abs();
                if gap < 10.0 * tolerance {
                    adjudicated = true;
                    compare_largest_roots(&poly, p_poly)? == Ordering::Equal
                } else {
                    false
                }
            }
        };
        if !same {
            rank += 1;
            if rank > top_k {
                break;
            }
        }
        entries.push(RankEntry {
            rank,
            canonical: c.canonical.to_string(),
            digraph: c.digraph.clone(),
            value: metric.of(c),
            exact_root: largest_real_root(&poly)?,
            adjudicated,
            form: c.canonical,
        });
        prev = Some((c, poly));
    }
    // Re-sort adjudicated neighbours that floating point placed out of order.
    let mut i = 1;
    while i < entries.len() {
        if entries[i].adjudicated && entries[i].rank != entries[i - 1].rank {
            let (a, b) = (&entries[i - 1], &entries[i]);
            let ord = compare_largest_roots(
                &metric.char_poly(&b.digraph)?,
                &metric.char_poly(&a.digraph)?,
            )?;
            let misplaced = match direction {
                Direction::Min => ord == Ordering::Less,
                Direction::Max => ord == Ordering::Greater,
            };
            if misplaced {
                let (ra, rb) = (a.rank, b.rank);
                entries.swap(i - 1, i);
                entries[i - 1].rank = ra;
                entries[i].rank = rb;
            }
        }
        i += 1;
    }
    Ok(Ranking {
        n: sweep.n,
        metric,
        direction,
        tolerance,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertex_minimum_q() {
        let s = Sweep::get(3, 1).unwrap();
        let r = extremal_ranking(&s, Metric::Q, Direction::Min, 2, GROUPING_TOLERANCE).unwrap();
        assert_eq!(r.rank(1).len(), 1);
        assert!((r.rank(1)[0].value - 2.0).abs() < 1e-9);
        assert_eq!(r.rank(1)[0].digraph.arc_count(), 3);
        for e in &r.entries {
            assert!((e.value - e.exact_root).abs() < 1e-8);
        }
        let top = extremal_ranking(&s, Metric::Rho, Direction::Max, 1, GROUPING_TOLERANCE).unwrap();
        assert!((top.entries[0].value - 2.0).abs() < 1e-9);
    }
}
