//! Named digraph families and their closed-form spectral data.
//!
//! Vertex `u_i` of the usual 1-indexed labeling is index `i − 1` here.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::spectral::IntPolynomial;

/// A family member with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    Cycle { n: usize },
    Complete { n: usize },
    CompleteMinusArc { n: usize },
    /// Clique of order `d` joined to a directed path through one shared vertex.
    CliquePath { n: usize, d: usize },
    /// As [`FamilySpec::CliquePath`], but the path re-enters the clique at a different vertex.
    CliquePathAlt { n: usize, d: usize },
    /// Directed cycle of length `g` with a return path through the remaining vertices.
    CycleWithPath { n: usize, g: usize },
    /// As [`FamilySpec::CycleWithPath`], with the return path closing onto the cycle's far junction.
    CycleWithPathAlt { n: usize, g: usize },
    /// Three internally disjoint directed paths with `a`, `b`, `c` interior vertices.
    Theta { a: usize, b: usize, c: usize },
    /// `θ(1, 1, n − 4)` plus an arc between the interiors of its two parallel paths.
    ThetaChord { n: usize },
    /// Complete `k`-cut joining an `m`-clique and an `(n−m−k)`-clique, with
    /// one-way arcs from the first clique to the second.
    CutJoin { n: usize, k: usize, m: usize },
    /// A cycle through all vertices but one hub, every arc into the hub, and
    /// three arcs out of it.
    HubCycle { n: usize },
}

impl FamilySpec {
    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::Theta { a, b, c } => a + b + c + 2,
            FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::CompleteMinusArc { n }
            | FamilySpec::CliquePath { n, .. }
            | FamilySpec::CliquePathAlt { n, .. }
            | FamilySpec::CycleWithPath { n, .. }
            | FamilySpec::CycleWithPathAlt { n, .. }
            | FamilySpec::ThetaChord { n }
            | FamilySpec::CutJoin { n, .. }
            | FamilySpec::HubCycle { n } => n,
        }
    }

    pub fn build(&self) -> Result<Digraph> {
        build(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Cycle { n } => write!(f, "cycle({n})"),
            FamilySpec::Complete { n } => write!(f, "complete({n})"),
            FamilySpec::CompleteMinusArc { n } => write!(f, "complete-minus-arc({n})"),
            FamilySpec::CliquePath { n, d } => write!(f, "B({n},{d})"),
            FamilySpec::CliquePathAlt { n, d } => write!(f, "Bprime({n},{d})"),
            FamilySpec::CycleWithPath { n, g } => write!(f, "C({n},{g})"),
            FamilySpec::CycleWithPathAlt { n, g } => write!(f, "Cprime({n},{g})"),
            FamilySpec::Theta { a, b, c } => write!(f, "theta({a},{b},{c})"),
            FamilySpec::ThetaChord { n } => write!(f, "theta-hat({n})"),
            FamilySpec::CutJoin { n, k, m } => write!(f, "K3({n},{k},{m})"),
            FamilySpec::HubCycle { n } => write!(f, "D1({n})"),
        }
    }
}

/// Family names as accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Cycle,
    Complete,
    CompleteMinusArc,
    CliquePath,
    CliquePathAlt,
    CycleWithPath,
    CycleWithPathAlt,
    Theta,
    ThetaChord,
    CutJoin,
    HubCycle,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 11] = [
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteMinusArc,
        FamilyKind::CliquePath,
        FamilyKind::CliquePathAlt,
        FamilyKind::CycleWithPath,
        FamilyKind::CycleWithPathAlt,
        FamilyKind::Theta,
        FamilyKind::ThetaChord,
        FamilyKind::CutJoin,
        FamilyKind::HubCycle,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteMinusArc => "complete-minus-arc",
            FamilyKind::CliquePath => "B",
            FamilyKind::CliquePathAlt => "Bprime",
            FamilyKind::CycleWithPath => "C",
            FamilyKind::CycleWithPathAlt => "Cprime",
            FamilyKind::Theta => "theta",
            FamilyKind::ThetaChord => "theta-hat",
            FamilyKind::CutJoin => "K3",
            FamilyKind::HubCycle => "D1",
        }
    }

    /// Assemble a spec from loosely supplied parameters, naming whichever is missing.
    pub fn with_params(&self, p: &FamilyParams) -> Result<FamilySpec> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| {
                Error::InvalidParameter(format!("family {} needs --{what}", self.name()))
            })
        };
        Ok(match self {
            FamilyKind::Cycle => FamilySpec::Cycle { n: need(p.n, "n")? },
            FamilyKind::Complete => FamilySpec::Complete { n: need(p.n, "n")? },
            FamilyKind::CompleteMinusArc => FamilySpec::CompleteMinusArc { n: need(p.n, "n")? },
            FamilyKind::CliquePath => FamilySpec::CliquePath { n: need(p.n, "n")?, d: need(p.d, "d")? },
            FamilyKind::CliquePathAlt => FamilySpec::CliquePathAlt { n: need(p.n, "n")?, d: need(p.d, "d")? },
            FamilyKind::CycleWithPath => FamilySpec::CycleWithPath { n: need(p.n, "n")?, g: need(p.g, "g")? },
            FamilyKind::CycleWithPathAlt => FamilySpec::CycleWithPathAlt { n: need(p.n, "n")?, g: need(p.g, "g")? },
            FamilyKind::Theta => FamilySpec::Theta {
                a: need(p.a, "a")?,
                b: need(p.b, "b")?,
                c: need(p.c, "c")?,
            },
            FamilyKind::ThetaChord => FamilySpec::ThetaChord { n: need(p.n, "n")? },
            FamilyKind::CutJoin => FamilySpec::CutJoin {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
                m: need(p.m, "m")?,
            },
            FamilyKind::HubCycle => FamilySpec::HubCycle { n: need(p.n, "n")? },
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        // The comparison-table names for the clique-path and cycle-path rows.
        match s {
            "D2" => return Ok(FamilyKind::CliquePath),
            "D3" => return Ok(FamilyKind::CycleWithPath),
            _ => {}
        }
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = FamilyKind::ALL.iter().map(|k| k.name()).collect();
                Error::InvalidParameter(format!(
                    "unknown family `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Optional integer parameters, as collected from command-line flags.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub g: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub c: Option<usize>,
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// Arcs given with 1-based vertex labels.
fn from_labels(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
    let arcs: Vec<_> = arcs.into_iter().map(|(u, v)| (u - 1, v - 1)).collect();
    Digraph::from_arcs(n, &arcs)
}

fn complete_on(labels: &[usize]) -> Vec<(usize, usize)> {
    labels
        .iter()
        .flat_map(|&u| labels.iter().filter(move |&&v| v != u).map(move |&v| (u, v)))
        .collect()
}

pub fn build(spec: &FamilySpec) -> Result<Digraph> {
    match *spec {
        FamilySpec::Cycle { n } => {
            check(n >= 2, || format!("cycle requires n ≥ 2 (got n = {n})"))?;
            from_labels(n, (1..=n).map(|i| (i, i % n + 1)))
        }
        FamilySpec::Complete { n } => {
            check(n >= 1, || "complete digraph requires n ≥ 1".into())?;
            from_labels(n, complete_on(&(1..=n).collect::<Vec<_>>()))
        }
        FamilySpec::CompleteMinusArc { n } => {
            check(n >= 3, || format!("complete-minus-arc requires n ≥ 3 (got n = {n})"))?;
            let arcs = complete_on(&(1..=n).collect::<Vec<_>>());
            from_labels(n, arcs.into_iter().filter(|&a| a != (1, 2)))
        }
        FamilySpec::CliquePath { n, d } => {
            check(2 <= d && d < n, || format!("B(n,d) requires 2 ≤ d ≤ n−1 (got n = {n}, d = {d})"))?;
            from_labels(n, b_arcs(n, d))
        }
        FamilySpec::CliquePathAlt { n, d } => {
            check(2 <= d && d < n, || format!("B'(n,d) requires 2 ≤ d ≤ n−1 (got n = {n}, d = {d})"))?;
            let tail = n - d + 1;
            let arcs = b_arcs(n, d)
                .into_iter()
                .filter(|&a| a != (tail, tail + 1))
                .chain([(tail, 1)]);
            from_labels(n, arcs)
        }
        FamilySpec::CycleWithPath { n, g } => {
            check(2 <= g && g < n, || format!("C(n,g) requires 2 ≤ g ≤ n−1 (got n = {n}, g = {g})"))?;
            from_labels(n, c_arcs(n, g))
        }
        FamilySpec::CycleWithPathAlt { n, g } => {
            check(2 <= g && g < n, || format!("C'(n,g) requires 2 ≤ g ≤ n−1 (got n = {n}, g = {g})"))?;
            let arcs = c_arcs(n, g)
                .into_iter()
                .filter(|&a| a != (n, 1))
                .chain([(n, g)]);
            from_labels(n, arcs)
        }
        FamilySpec::Theta { a, b, c } => {
            check(a + b > 0, || "theta(a,b,c) requires a + b ≥ 1".into())?;
            from_labels(a + b + c + 2, theta_arcs(a, b, c))
        }
        FamilySpec::ThetaChord { n } => {
            check(n >= 4, || format!("theta-hat requires n ≥ 4 (got n = {n})"))?;
            from_labels(n, theta_arcs(1, 1, n - 4).into_iter().chain([(2, 3)]))
        }
        FamilySpec::CutJoin { n, k, m } => {
            check(k >= 1 && k + 2 <= n, || {
                format!("K(n,k,m) requires 1 ≤ k ≤ n−2 (got n = {n}, k = {k})")
            })?;
            check(m >= 1 && m + k < n, || {
                format!("K(n,k,m) requires 1 ≤ m ≤ n−k−1 (got n = {n}, k = {k}, m = {m})")
            })?;
            Digraph::from_arcs(n, &k3_arcs(n, k, m))
        }
        FamilySpec::HubCycle { n } => {
            check(n >= 4, || format!("D1 requires n ≥ 4 (got n = {n})"))?;
            let cycle = (2..=n).map(|i| (i, if i == n { 2 } else { i + 1 }));
            let into_hub = (2..=n).map(|i| (i, 1));
            let hub_out: Vec<usize> = if n == 4 { vec![2, 3, 4] } else { vec![3, 4, n] };
            from_labels(n, cycle.chain(into_hub).chain(hub_out.into_iter().map(|v| (1, v))))
        }
    }
}

/// Clique on `{u_1, u_{n−d+2}, …, u_n}` plus the path `u_1 → u_2 → … → u_{n−d+2}`.
fn b_arcs(n: usize, d: usize) -> Vec<(usize, usize)> {
    let clique: Vec<usize> = std::iter::once(1).chain(n - d + 2..=n).collect();
    let mut arcs = complete_on(&clique);
    arcs.extend((1..n - d + 2).map(|i| (i, i + 1)));
    arcs
}

/// Path `u_1 → … → u_n` closed by `(u_g, u_1)` and `(u_n, u_1)`.
fn c_arcs(n: usize, g: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i, i + 1)).chain([(g, 1), (n, 1)]).collect()
}

/// Two paths from `u_1` to `x = u_{a+b+2}` with interiors `u_2..u_{a+1}` and
/// `u_{a+2}..u_{a+b+1}`, and a return path from `x` through `u_{a+b+3}..u_n`.
fn theta_arcs(a: usize, b: usize, c: usize) -> Vec<(usize, usize)> {
    let x = a + b + 2;
    let path = |inner: Vec<usize>, from: usize, to: usize| {
        let mut seq = vec![from];
        seq.extend(inner);
        seq.push(to);
        seq.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()
    };
    let mut arcs = path((2..a + 2).collect(), 1, x);
    arcs.extend(path((a + 2..a + b + 2).collect(), 1, x));
    arcs.extend(path((x + 1..x + 1 + c).collect(), x, 1));
    arcs
}

/// Blocks in order: `m`-clique, `k`-cut, remaining `t`-clique (0-based indices).
fn k3_arcs(n: usize, k: usize, m: usize) -> Vec<(usize, usize)> {
    let block = |v: usize| {
        if v < m {
            0
        } else if v < m + k {
            1
        } else {
            2
        }
    };
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let (bu, bv) = (block(u), block(v));
            if bu == bv || bu == 1 || bv == 1 || (bu == 0 && bv == 2) {
                arcs.push((u, v));
            }
        }
    }
    arcs
}

/// `(3n − m − 4 + √((n − 3m)² + 8mk)) / 2`.
pub fn cut_join_q(n: usize, k: usize, m: usize) -> Result<f64> {
    check(k >= 1 && k + 2 <= n && m >= 1 && m + k < n, || {
        format!("K(n,k,m) requires 1 ≤ k ≤ n−2 and 1 ≤ m ≤ n−k−1 (got n = {n}, k = {k}, m = {m})")
    })?;
    let (n, k, m) = (n as f64, k as f64, m as f64);
    Ok((3.0 * n - m - 4.0 + ((n - 3.0 * m).powi(2) + 8.0 * m * k).sqrt()) / 2.0)
}

/// The upper bound `(3d − 3 + √((d − 1)² + 8)) / 2` on `q(B(n,d))`.
pub fn clique_path_q_bound(d: usize) -> Result<f64> {
    check(d >= 2, || format!("requires d ≥ 2 (got d = {d})"))?;
    let d = d as f64;
    Ok((3.0 * d - 3.0 + ((d - 1.0).powi(2) + 8.0).sqrt()) / 2.0)
}

/// The three bicyclic digraphs with explicit signless Laplacian polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaVariant {
    /// θ(1, 1, n − 4)
    Theta11,
    /// θ(0, 2, n − 4)
    Theta02,
    /// θ(1, 1, n − 4) plus the arc `(u_2, u_3)`.
    ThetaChord,
}

impl ThetaVariant {
    pub fn spec(&self, n: usize) -> FamilySpec {
        match self {
            ThetaVariant::Theta11 => FamilySpec::Theta { a: 1, b: 1, c: n.saturating_sub(4) },
            ThetaVariant::Theta02 => FamilySpec::Theta { a: 0, b: 2, c: n.saturating_sub(4) },
            ThetaVariant::ThetaChord => FamilySpec::ThetaChord { n },
        }
    }
}

/// Closed-form characteristic polynomial of `Q` for the given variant.
pub fn theta_charpoly(variant: ThetaVariant, n: usize) -> Result<IntPolynomial> {
    check(n >= 4, || format!("requires n ≥ 4 (got n = {n})"))?;
    let e = (n - 2) as u32;
    let x1 = IntPolynomial::x_minus(1);
    let x2 = IntPolynomial::x_minus(2);
    let c = IntPolynomial::constant;
    Ok(match variant {
        // (x−1)[(x−2)(x−1)^{n−2} − 2]
        ThetaVariant::Theta11 => &x1 * &(&(&x2 * &x1.pow(e)) - &c(2)),
        // (x−1)²[(x−2)(x−1)^{n−3} − 1] − 1
        ThetaVariant::Theta02 => &(&x1.pow(2) * &(&(&x2 * &x1.pow(e - 1)) - &c(1))) - &c(1),
        // (x−1)[(x−2)²(x−1)^{n−3} − 2]
        ThetaVariant::ThetaChord => &x1 * &(&(&x2.pow(2) * &x1.pow(e - 1)) - &c(2)),
    })
}
