//! Degree-based bounds on `q(D)`, including the family of bounds indexed by a
//! position in the sorted out-degree sequence.

use serde::Serialize;

use crate::digraph::{degree_profile, is_strongly_connected, DegreeProfile, Digraph};
use crate::error::{Error, Result};
use crate::spectral;

/// `(min, max)` of `d⁺_i + d⁺_j` over arcs `(i, j)`.
pub fn arc_sum_bounds(d: &Digraph) -> Result<(f64, f64)> {
    d.require_simple()?;
    let p = degree_profile(d);
    let sums = d
        .arcs()
        .map(|(i, j, _)| (p.out_degrees[i] + p.out_degrees[j]) as f64);
    min_max(sums).ok_or(Error::EmptyArcSet)
}

/// `(min, max)` of `d⁺_i + m⁺_i` over vertices.
pub fn avg_two_out_bounds(d: &Digraph) -> Result<(f64, f64)> {
    let p = profile_without_sinks(d)?;
    let vals = (0..d.n()).map(|i| p.out_degrees[i] as f64 + m(&p, i));
    Ok(min_max(vals).expect("n >= 1"))
}

/// Maximum over arcs `(i, j)` of `(d⁺_i + d⁺_j + √((d⁺_i − d⁺_j)² + 4 m⁺_i m⁺_j)) / 2`.
pub fn arc_avg_bound(d: &Digraph) -> Result<f64> {
    let p = profile_without_sinks(d)?;
    d.arcs()
        .map(|(i, j, _)| {
            let (di, dj) = (p.out_degrees[i] as f64, p.out_degrees[j] as f64);
            (di + dj + ((di - dj).powi(2) + 4.0 * m(&p, i) * m(&p, j)).sqrt()) / 2.0
        })
        .reduce(f64::max)
        .ok_or(Error::EmptyArcSet)
}

/// Maximum over vertices of `d⁺_i + √t⁺_i`.
pub fn two_out_root_bound(d: &Digraph) -> Result<f64> {
    let p = profile_without_sinks(d)?;
    Ok((0..d.n())
        .map(|i| p.out_degrees[i] as f64 + (p.two_out[i] as f64).sqrt())
        .fold(f64::MIN, f64::max))
}

fn profile_without_sinks(d: &Digraph) -> Result<DegreeProfile> {
    let p = degree_profile(d);
    match p.first_sink() {
        Some(v) => Err(Error::ZeroOutDegree(v)),
        None => Ok(p),
    }
}

fn m(p: &DegreeProfile, i: usize) -> f64 {
    p.avg_two_out_f64(i).expect("sinks rejected")
}

fn min_max(it: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    it.fold(None, |acc, x| match acc {
        None => Some((x, x)),
        Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
    })
}

/// Out-degrees sorted in non-increasing order.
fn sorted_out_degrees(d: &Digraph) -> Vec<u64> {
    let mut deg: Vec<u64> = (0..d.n()).map(|u| d.out_degree(u) as u64).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    deg
}

/// The degree-sequence bound at index `l` in `1..=n` of the non-increasing
/// out-degree sequence.
pub fn sequence_bound(d: &Digraph, l: usize) -> Result<f64> {
    let deg = sorted_out_degrees(d);
    if l == 0 || l > deg.len() {
        return Err(Error::InvalidParameter(format!(
            "index l = {l} must lie in 1..={}",
            deg.len()
        )));
    }
    Ok(sequence_bound_from_sorted(&deg, l))
}

fn sequence_bound_from_sorted(deg: &[u64], l: usize) -> f64 {
    let d1 = deg[0] as f64;
    if l == 1 {
        return 2.0 * d1;
    }
    let dl = deg[l - 1];
    let excess: u64 = deg[..l - 1].iter().map(|&di| di - dl).sum();
    let dl = dl as f64;
    (d1 + 2.0 * dl - 1.0 + ((2.0 * dl - d1 + 1.0).powi(2) + 8.0 * excess as f64).sqrt()) / 2.0
}

/// The degree-sequence bounds at every index `1..=n`.
pub fn sequence_bounds(d: &Digraph) -> Vec<f64> {
    let deg = sorted_out_degrees(d);
    (1..=deg.len()).map(|l| sequence_bound_from_sorted(&deg, l)).collect()
}

/// The smallest degree-sequence bound and the smallest (1-based) index attaining it.
pub fn min_sequence_bound(d: &Digraph) -> (f64, usize) {
    let vals = sequence_bounds(d);
    let mut best = (vals[0], 1);
    for (i, &v) in vals.iter().enumerate().skip(1) {
        if v < best.0 {
            best = (v, i + 1);
        }
    }
    best
}

/// Which case of the equality characterization of the smallest degree-sequence bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum SequenceBoundTightness {
    /// All out-degrees equal.
    Regular,
    /// The `t − 1` vertices of largest out-degree are joined from every other
    /// vertex, all remaining vertices share the smallest out-degree, and `t` is at most
    /// the minimizing index.
    Threshold { t: usize },
    NotTight,
}

impl SequenceBoundTightness {
    pub fn is_tight(&self) -> bool {
        !matches!(self, SequenceBoundTightness::NotTight)
    }
}

/// Decide whether `q(D)` equals its smallest degree-sequence bound from the
/// degree sequence alone.
///
/// When several vertices share the top out-degree, the top block is all of
/// them: `t − 1` is the number of vertices whose out-degree exceeds the minimum.
pub fn sequence_bound_tightness(d: &Digraph) -> Result<SequenceBoundTightness> {
    d.require_simple()?;
    if !is_strongly_connected(d) {
        return Err(Error::NotStronglyConnected);
    }
    let p = degree_profile(d);
    if p.is_out_regular() {
        return Ok(SequenceBoundTightness::Regular);
    }
    let n = d.n();
    let max = *p.out_degrees.iter().max().unwrap();
    let min = *p.out_degrees.iter().min().unwrap();
    let two_levels = p.out_degrees.iter().all(|&x| x == max || x == min);
    let top: Vec<usize> = (0..n).filter(|&v| p.out_degrees[v] == max).collect();
    let joined = top.iter().all(|&v| p.in_degrees[v] as usize == n - 1);
    let t = top.len() + 1;
    let (_, s) = min_sequence_bound(d);
    Ok(if two_levels && joined && t <= s {
        SequenceBoundTightness::Threshold { t }
    } else {
        SequenceBoundTightness::NotTight
    })
}

/// Every bound for one digraph, alongside its exact `q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub n: usize,
    pub q: f64,
    pub arc_sum_lower: f64,
    pub arc_sum_upper: f64,
    pub avg_two_out_lower: f64,
    pub avg_two_out_upper: f64,
    pub arc_avg_upper: f64,
    pub two_out_root_upper: f64,
    pub sequence_bounds: Vec<f64>,
    pub min_sequence_bound: f64,
    /// 1-based index attaining `min_sequence_bound`.
    pub min_index: usize,
    pub tight: SequenceBoundTightness,
}

pub const CSV_HEADER: &str =
    "name,n,q,arc_sum_lower,arc_sum_upper,avg_two_out_lower,avg_two_out_upper,arc_avg_upper,two_out_root_upper,min_sequence_bound,min_index,tight";

impl BoundReport {
    pub fn new(name: impl Into<String>, d: &Digraph) -> Result<Self> {
        let tight = sequence_bound_tightness(d)?;
        let (arc_sum_lower, arc_sum_upper) = arc_sum_bounds(d)?;
        let (avg_two_out_lower, avg_two_out_upper) = avg_two_out_bounds(d)?;
        let (min_sequence_bound, min_index) = min_sequence_bound(d);
        Ok(BoundReport {
            name: name.into(),
            n: d.n(),
            q: spectral::q(d)?.radius,
            arc_sum_lower,
            arc_sum_upper,
            avg_two_out_lower,
            avg_two_out_upper,
            arc_avg_upper: arc_avg_bound(d)?,
            two_out_root_upper: two_out_root_bound(d)?,
            sequence_bounds: sequence_bounds(d),
            min_sequence_bound,
            min_index,
            tight,
        })
    }

    /// Column values in [`CSV_HEADER`] order, reals formatted by `fmt`.
    pub fn fields(&self, fmt: impl Fn(f64) -> String) -> Vec<String> {
        let tight = match self.tight {
            SequenceBoundTightness::Regular => "regular".to_string(),
            SequenceBoundTightness::Threshold { t } => format!("threshold-{t}"),
            SequenceBoundTightness::NotTight => "no".to_string(),
        };
        vec![
            self.name.clone(),
            self.n.to_string(),
            fmt(self.q),
            fmt(self.arc_sum_lower),
            fmt(self.arc_sum_upper),
            fmt(self.avg_two_out_lower),
            fmt(self.avg_two_out_upper),
            fmt(self.arc_avg_upper),
            fmt(self.two_out_root_upper),
            fmt(self.min_sequence_bound),
            self.min_index.to_string(),
            tight,
        ]
    }

    /// One CSV line; fields containing commas or quotes are quoted.
    pub fn csv_row(&self, fmt: impl Fn(f64) -> String) -> String {
        self.fields(fmt)
            .into_iter()
            .map(|f| {
                if f.contains([',', '"']) {
                    format!("\"{}\"", f.replace('"', "\"\""))
                } else {
                    f
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}
