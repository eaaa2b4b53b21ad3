use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::enumerate::MAX_ENUM_N;
use super::ranking::{extremal_ranking, Direction, Metric};
use super::sweep::{ClassInfo, Sweep};
use crate::bounds::{arc_avg_bound, two_out_root_bound, arc_sum_bounds, avg_two_out_bounds, min_sequence_bound, sequence_bound_tightness};
use crate::digraph::{
    canonical_form, degree_profile, is_strongly_connected, CanonicalForm, Digraph,
};
use crate::error::{Error, Result};
use crate::families::{build, clique_path_q_bound, cut_join_q, FamilySpec};
use crate::spectral::{self, SpectralResult};
use crate::transforms::{contract, insert_vertex, redirect_arc};

/// Largest order for claims checked on explicit family members only.
pub const MAX_FAMILY_N: usize = 12;

/// Claims the harness can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    SequenceBound,
    ExtremeValues,
    ArcRedirection,
    ComponentMaximum,
    PathMonotonicity,
    ArcContraction,
    ArcSubdivision,
    CliqueMinimizer,
    CliquePathBracket,
    CliquePathInterleaving,
    GirthMinimizer,
    GirthChain,
    MinimumQOrder,
    CutJoinClosedForm,
    SecondMaximumQ,
    ConnectivityMaximum,
    GirthChainRho,
    MinimumRhoOrder,
    SecondMaximumRho,
}

/// How a claim's parameter range is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scope {
    /// Every strongly connected digraph of each order (capped at [`MAX_ENUM_N`]).
    Exhaustive,
    /// Explicit family members (capped at [`MAX_FAMILY_N`]).
    Family,
    /// Exhaustive up to [`MAX_ENUM_N`], family members above.
    Mixed,
}

impl TheoremId {
    pub const ALL: [TheoremId; 19] = [
        TheoremId::SequenceBound,
        TheoremId::ExtremeValues,
        TheoremId::ArcRedirection,
        TheoremId::ComponentMaximum,
        TheoremId::PathMonotonicity,
        TheoremId::ArcContraction,
        TheoremId::ArcSubdivision,
        TheoremId::CliqueMinimizer,
        TheoremId::CliquePathBracket,
        TheoremId::CliquePathInterleaving,
        TheoremId::GirthMinimizer,
        TheoremId::GirthChain,
        TheoremId::MinimumQOrder,
        TheoremId::CutJoinClosedForm,
        TheoremId::SecondMaximumQ,
        TheoremId::ConnectivityMaximum,
        TheoremId::GirthChainRho,
        TheoremId::MinimumRhoOrder,
        TheoremId::SecondMaximumRho,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::SequenceBound => "T2.7",
            TheoremId::ExtremeValues => "C2.6",
            TheoremId::ArcRedirection => "T3.2",
            TheoremId::ComponentMaximum => "C3.4",
            TheoremId::PathMonotonicity => "L3.5",
            TheoremId::ArcContraction => "T3.6",
            TheoremId::ArcSubdivision => "C3.7",
            TheoremId::CliqueMinimizer => "T4.2",
            TheoremId::CliquePathBracket => "L4.3",
            TheoremId::CliquePathInterleaving => "C4.4",
            TheoremId::GirthMinimizer => "T5.2",
            TheoremId::GirthChain => "T5.3",
            TheoremId::MinimumQOrder => "T5.4",
            TheoremId::CutJoinClosedForm => "T6.3",
            TheoremId::SecondMaximumQ => "T6.6",
            TheoremId::ConnectivityMaximum => "C6.7",
            TheoremId::GirthChainRho => "T7.2",
            TheoremId::MinimumRhoOrder => "T7.3",
            TheoremId::SecondMaximumRho => "T7.4",
        }
    }

    /// One-line statement of what is checked.
    pub fn claim(&self) -> &'static str {
        match self {
            TheoremId::SequenceBound => "q is at most every degree-sequence bound, every degree bound holds, and the tightness rule matches equality",
            TheoremId::ExtremeValues => "2 ≤ q ≤ 2n−2, with 2 only for the cycle and 2n−2 only for the complete digraph",
            TheoremId::ArcRedirection => "redirecting (u,v) to (u,w) with x_w ≥ x_v does not decrease q, strictly if x_w > x_v and the result is strong",
            TheoremId::ComponentMaximum => "q of a disjoint union is the largest q of its parts",
            TheoremId::PathMonotonicity => "Perron entries strictly increase along out-degree-one path interiors",
            TheoremId::ArcContraction => "contracting an arc into an in/out-degree-one path vertex does not decrease q",
            TheoremId::ArcSubdivision => "subdividing an arc does not increase q (non-cycles)",
            TheoremId::CliqueMinimizer => "B(n,d) is the unique q-minimizer with clique number d",
            TheoremId::CliquePathBracket => "2d−2 < q(B(n,d)) ≤ (3d−3+√((d−1)²+8))/2",
            TheoremId::CliquePathInterleaving => "q(C_n) < q(B(n,2)) < 4 < q(B(n,3)) < … < q(B(n,n−1)) < 2n−2",
            TheoremId::GirthMinimizer => "C(n,g) is the unique q-minimizer with girth g",
            TheoremId::GirthChain => "2 < q(C(n,n−1)) < … < q(C(n,2)) < 3",
            TheoremId::MinimumQOrder => "minimum-q order: cycle, θ(0,1,n−3), θ(1,1,n−4), θ(0,2,n−4)",
            TheoremId::CutJoinClosedForm => "q(K(n,k,m)) = (3n−m−4+√((n−3m)²+8mk))/2",
            TheoremId::SecondMaximumQ => "every digraph other than K_n and K(n,n−2,1) has q < (3n−5+√(n²+2n−7))/2",
            TheoremId::ConnectivityMaximum => "max q with connectivity k is (3n−5+√((n−3)²+8k))/2, attained only by K(n,k,1)",
            TheoremId::GirthChainRho => "ρ(C_n) < ρ(C(n,n−1)) < … < ρ(C(n,2))",
            TheoremId::MinimumRhoOrder => "minimum-ρ order: cycle, θ(0,1,n−3), θ(1,1,n−4), θ(0,2,n−4)",
            TheoremId::SecondMaximumRho => "K(n,n−2,1) is the unique second ρ-maximizer with ρ = (n−2+√(n²−4))/2",
        }
    }

    /// Open statements: the harness gathers evidence but never proves them.
    pub fn is_conjecture(&self) -> bool {
        matches!(self, TheoremId::ConnectivityMaximum)
    }

    pub fn default_range(&self) -> (usize, usize) {
        match self {
            TheoremId::SequenceBound | TheoremId::ExtremeValues => (2, 5),
            TheoremId::ComponentMaximum => (2, 5),
            TheoremId::ArcRedirection | TheoremId::ArcSubdivision => (4, 4),
            TheoremId::PathMonotonicity | TheoremId::ArcContraction => (3, 8),
            TheoremId::CliquePathBracket => (5, 10),
            TheoremId::CliquePathInterleaving => (4, 9),
            TheoremId::GirthChain | TheoremId::GirthChainRho => (4, 12),
            TheoremId::CutJoinClosedForm => (4, 10),
            TheoremId::CliqueMinimizer
            | TheoremId::GirthMinimizer
            | TheoremId::MinimumQOrder
            | TheoremId::SecondMaximumQ
            | TheoremId::ConnectivityMaximum
            | TheoremId::MinimumRhoOrder
            | TheoremId::SecondMaximumRho => (4, 5),
        }
    }

    fn scope(&self) -> Scope {
        match self {
            TheoremId::CliquePathBracket
            | TheoremId::CliquePathInterleaving
            | TheoremId::GirthChain
            | TheoremId::CutJoinClosedForm
            | TheoremId::GirthChainRho => Scope::Family,
            TheoremId::PathMonotonicity | TheoremId::ArcContraction => Scope::Mixed,
            _ => Scope::Exhaustive,
        }
    }

    fn min_n(&self) -> usize {
        match self {
            TheoremId::SequenceBound | TheoremId::ExtremeValues | TheoremId::ComponentMaximum => 2,
            TheoremId::PathMonotonicity | TheoremId::ArcContraction | TheoremId::CliqueMinimizer | TheoremId::GirthMinimizer => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Violated,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub claim: String,
    pub conjecture: bool,
    pub range: String,
    pub verdict: Verdict,
    /// Instances examined.
    pub instances: usize,
    pub counterexample: Option<Digraph>,
    pub details: Vec<String>,
    pub elapsed_seconds: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyParams {
    pub n_min: usize,
    pub n_max: usize,
    pub tolerance: f64,
    pub workers: usize,
    /// Extra random strongly connected digraphs on 6..=9 vertices for the bound sweep.
    pub random_samples: usize,
    pub seed: u64,
}

impl VerifyParams {
    pub fn defaults_for(id: TheoremId) -> Self {
        let (n_min, n_max) = id.default_range();
        VerifyParams {
            n_min,
            n_max,
            tolerance: 1e-8,
            workers: 0,
            random_samples: 200,
            seed: 0x5eed,
        }
    }
}

/// Accumulates instance counts, notes and the first failure.
struct Check {
    instances: usize,
    details: Vec<String>,
    failure: Option<(Digraph, String)>,
    /// Named tallies reported as `name: count` details.
    tallies: std::collections::BTreeMap<&'static str, usize>,
}

impl Check {
    fn new() -> Self {
        Check {
            instances: 0,
            details: Vec::new(),
            failure: None,
            tallies: Default::default(),
        }
    }

    fn tally(&mut self, name: &'static str) {
        *self.tallies.entry(name).or_default() += 1;
    }

    fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }

    /// Record one instance; keep the first failure as the counterexample.
    fn expect(&mut self, ok: bool, d: &Digraph, why: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some((d.clone(), why()));
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

pub fn verify_theorem(id: TheoremId, params: &VerifyParams) -> Result<TheoremReport> {
    let start = Instant::now();
    let (lo, hi) = (params.n_min, params.n_max);
    if lo > hi {
        return Err(Error::InvalidParameter(format!("empty range {lo}..{hi}")));
    }
    if lo < id.min_n() {
        return Err(Error::InvalidParameter(format!(
            "{id} needs n ≥ {} (got {lo})",
            id.min_n()
        )));
    }
    let cap = match id.scope() {
        Scope::Exhaustive => MAX_ENUM_N,
        Scope::Family | Scope::Mixed => MAX_FAMILY_N,
    };
    if hi > cap {
        return Err(Error::TooLarge {
            what: "verification range",
            n: hi,
            max: cap,
        });
    }
    let mut c = Check::new();
    let p = params;
    for n in lo..=hi {
        match id {
            TheoremId::SequenceBound => check_bounds(&mut c, &*Sweep::get(n, p.workers)?, p)?,
            TheoremId::ExtremeValues => check_extreme_values(&mut c, &*Sweep::get(n, p.workers)?, p)?,
            TheoremId::ArcRedirection => check_redirection(&mut c, &*Sweep::get(n, p.workers)?, p)?,
            TheoremId::ComponentMaximum => check_unions(&mut c, n, p)?,
            TheoremId::PathMonotonicity => {
                for d in instances_for_paths(n, p)? {
                    check_path_monotonicity(&mut c, &d)?;
                }
            }
            TheoremId::ArcContraction => {
                for d in instances_for_paths(n, p)? {
                    check_contraction(&mut c, &d, p)?;
                }
            }
            TheoremId::ArcSubdivision => check_subdivision(&mut c, &*Sweep::get(n, p.workers)?, p)?,
            TheoremId::CliqueMinimizer => {
                let s = Sweep::get(n, p.workers)?;
                for d in 2..n {
                    check_unique_min(&mut c, &s, p, |k| k.clique == d, FamilySpec::CliquePath { n, d })?;
                }
            }
            TheoremId::CliquePathBracket => {
                for d in 2..n {
                    let b = build(&FamilySpec::CliquePath { n, d })?;
                    let q = spectral::q(&b)?.radius;
                    let hi = clique_path_q_bound(d)?;
                    c.expect(2.0 * d as f64 - 2.0 < q && q <= hi + p.tolerance, &b, || {
                        format!("q(B({n},{d})) = {q} outside ({}, {hi}]", 2 * d - 2)
                    });
                }
            }
            TheoremId::CliquePathInterleaving => {
                let q_of = |spec: FamilySpec| -> Result<f64> { Ok(spectral::q(&build(&spec)?)?.radius) };
                let mut chain = vec![(q_of(FamilySpec::Cycle { n })?, "cycle".to_string())];
                for d in 2..n {
                    chain.push((q_of(FamilySpec::CliquePath { n, d })?, format!("B({n},{d})")));
                    let even = if d + 1 < n { 2 * d } else { 2 * n - 2 };
                    chain.push((even as f64, even.to_string()));
                }
                let complete = build(&FamilySpec::Complete { n })?;
                check_chain(&mut c, &chain, &complete, 0.0);
            }
            TheoremId::GirthMinimizer => {
                let s = Sweep::get(n, p.workers)?;
                for g in 2..n {
                    check_unique_min(&mut c, &s, p, |k| k.girth == g, FamilySpec::CycleWithPath { n, g })?;
                }
            }
            TheoremId::GirthChain | TheoremId::GirthChainRho => {
                let metric = if id == TheoremId::GirthChain { Metric::Q } else { Metric::Rho };
                let value = |spec: FamilySpec| -> Result<f64> {
                    let d = build(&spec)?;
                    Ok(match metric {
                        Metric::Q => spectral::q(&d)?.radius,
                        Metric::Rho => spectral::rho(&d)?.radius,
                    })
                };
                let mut chain = vec![(value(FamilySpec::Cycle { n })?, "cycle".to_string())];
                for g in (2..n).rev() {
                    chain.push((value(FamilySpec::CycleWithPath { n, g })?, format!("C({n},{g})")));
                }
                if metric == Metric::Q {
                    chain.push((3.0, "3".to_string()));
                }
                let witness = build(&FamilySpec::CycleWithPath { n, g: 2 })?;
                check_chain(&mut c, &chain, &witness, 1e-10);
            }
            TheoremId::MinimumQOrder | TheoremId::MinimumRhoOrder => {
                let metric = if id == TheoremId::MinimumQOrder { Metric::Q } else { Metric::Rho };
                let expected = [
                    FamilySpec::Cycle { n },
                    FamilySpec::Theta { a: 0, b: 1, c: n - 3 },
                    FamilySpec::Theta { a: 1, b: 1, c: n - 4 },
                    FamilySpec::Theta { a: 0, b: 2, c: n - 4 },
                ];
                check_ranking(&mut c, n, metric, Direction::Min, &expected, &[], p)?;
            }
            TheoremId::CutJoinClosedForm => {
                for k in 1..=n - 2 {
                    for m in 1..n - k {
                        let d = build(&FamilySpec::CutJoin { n, k, m })?;
                        let q = spectral::q(&d)?.radius;
                        let closed = cut_join_q(n, k, m)?;
                        c.expect((q - closed).abs() < p.tolerance, &d, || {
                            format!("q(K({n},{k},{m})) = {q}, closed form {closed}")
                        });
                    }
                }
            }
            TheoremId::SecondMaximumQ => {
                let nf = n as f64;
                let second = (3.0 * nf - 5.0 + (nf * nf + 2.0 * nf - 7.0).sqrt()) / 2.0;
                let expected = [FamilySpec::Complete { n }, FamilySpec::CutJoin { n, k: n - 2, m: 1 }];
                check_ranking(&mut c, n, Metric::Q, Direction::Max, &expected, &[(2, second)], p)?;
                let s = Sweep::get(n, p.workers)?;
                let skip = [canon(&expected[0])?, canon(&expected[1])?];
                for k in &s.classes {
                    if !skip.contains(&k.canonical) {
                        c.expect(k.q < second, &k.digraph, || {
                            format!("q = {} is not below {second}", k.q)
                        });
                    }
                }
            }
            TheoremId::ConnectivityMaximum => check_connectivity_maxima(&mut c, &*Sweep::get(n, p.workers)?, p)?,
            TheoremId::SecondMaximumRho => {
                let nf = n as f64;
                let second = (nf - 2.0 + (nf * nf - 4.0).sqrt()) / 2.0;
                let expected = [FamilySpec::Complete { n }, FamilySpec::CutJoin { n, k: n - 2, m: 1 }];
                check_ranking(
                    &mut c,
                    n,
                    Metric::Rho,
                    Direction::Max,
                    &expected,
                    &[(1, nf - 1.0), (2, second)],
                    p,
                )?;
            }
        }
    }
    if id == TheoremId::SequenceBound && p.random_samples > 0 {
        check_random_bounds(&mut c, p)?;
    }

    let verdict = if c.instances == 0 {
        Verdict::Skipped
    } else if c.failed() {
        Verdict::Violated
    } else {
        Verdict::Verified
    };
    let mut details = c.details;
    details.extend(c.tallies.iter().map(|(k, v)| format!("{k}: {v}")));
    let counterexample = c.failure.map(|(d, why)| {
        details.insert(0, why);
        d
    });
    Ok(TheoremReport {
        theorem: id.to_string(),
        claim: id.claim().to_string(),
        conjecture: id.is_conjecture(),
        range: format!("n = {lo}..{hi}"),
        verdict,
        instances: c.instances,
        counterexample,
        details,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

fn canon(spec: &FamilySpec) -> Result<CanonicalForm> {
    canonical_form(&build(spec)?)
}

fn bound_violation(d: &Digraph, q: f64, tol: f64) -> Result<Option<String>> {
    let (l11, u11) = arc_sum_bounds(d)?;
    let (l12, u12) = avg_two_out_bounds(d)?;
    let u13 = arc_avg_bound(d)?;
    let u14 = two_out_root_bound(d)?;
    let (seq_bound, index) = min_sequence_bound(d);
    let tight = sequence_bound_tightness(d)?.is_tight();
    let checks = [
        (l11 <= q + tol, "lower degree-pair bound"),
        (q <= u11 + tol, "upper degree-pair bound"),
        (l12 <= q + tol, "lower average-2-degree bound"),
        (q <= u12 + tol, "upper average-2-degree bound"),
        (q <= u13 + tol, "mixed degree bound"),
        (q <= u14 + tol, "2-degree square-root bound"),
        (q <= seq_bound + tol, "degree-sequence bound"),
        (tight == ((q - seq_bound).abs() < tol), "tightness characterization"),
    ];
    Ok(checks
        .iter()
        .find(|(ok, _)| !ok)
        .map(|(_, what)| format!("{what} fails: q = {q}, smallest sequence bound = {seq_bound} (index {index}), tight rule = {tight}")))
}

fn check_bounds(c: &mut Check, s: &Sweep, p: &VerifyParams) -> Result<()> {
    for (d, k) in s.labeled() {
        let q = s.classes[k].q;
        let bad = bound_violation(&d, q, p.tolerance)?;
        c.expect(bad.is_none(), &d, || bad.unwrap_or_default());
    }
    c.note(format!("n = {}: {} labeled digraphs", s.n, s.labeled_count()));
    Ok(())
}

/// A uniformly random-density strongly connected digraph on `n` vertices.
pub fn random_strong_digraph(rng: &mut impl Rng, n: usize) -> Digraph {
    loop {
        let density: f64 = rng.gen_range(0.15..0.85);
        let mut d = Digraph::empty(n).expect("n >= 1");
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(density) {
                    d.add_arc(u, v).expect("no loops");
                }
            }
        }
        if is_strongly_connected(&d) {
            return d;
        }
    }
}

fn check_random_bounds(c: &mut Check, p: &VerifyParams) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..p.random_samples {
        let n = rng.gen_range(6..=9);
        let d = random_strong_digraph(&mut rng, n);
        let q = spectral::q(&d)?.radius;
        let bad = bound_violation(&d, q, p.tolerance)?;
        c.expect(bad.is_none(), &d, || bad.unwrap_or_default());
    }
    c.note(format!("{} random digraphs on 6..9 vertices (seed {})", p.random_samples, p.seed));
    Ok(())
}

fn check_extreme_values(c: &mut Check, s: &Sweep, p: &VerifyParams) -> Result<()> {
    let n = s.n;
    let top = 2.0 * n as f64 - 2.0;
    let cycle = canon(&FamilySpec::Cycle { n })?;
    let complete = canon(&FamilySpec::Complete { n })?;
    for k in &s.classes {
        let q = k.q;
        let in_range = 2.0 - p.tolerance <= q && q <= top + p.tolerance;
        let low_ok = ((q - 2.0).abs() < p.tolerance) == (k.canonical == cycle);
        let high_ok = ((q - top).abs() < p.tolerance) == (k.canonical == complete);
        c.expect(in_range && low_ok && high_ok, &k.digraph, || {
            format!("q = {q} breaks 2 ≤ q ≤ {top} or its equality cases")
        });
    }
    Ok(())
}

fn check_redirection(c: &mut Check, s: &Sweep, p: &VerifyParams) -> Result<()> {
    let n = s.n;
    let mut strict = 0;
    for (d, k) in s.labeled() {
        let r = spectral::q(&d)?;
        let x = r.perron_vector.expect("strongly connected digraphs have a Perron vector");
        let q = r.radius;
        debug_assert!((q - s.classes[k].q).abs() < 1e-8);
        for (u, v, _) in d.arcs().collect::<Vec<_>>() {
            for w in (0..n).filter(|&w| w != u && w != v) {
                if x[w] < x[v] {
                    continue;
                }
                let h = redirect_arc(&d, u, v, w)?;
                let qh = spectral::q(&h)?.radius;
                c.expect(qh >= q - p.tolerance, &d, || {
                    format!("redirect ({u},{v})→({u},{w}): q drops from {q} to {qh}")
                });
                // Strictness is only checked where x_w − x_v is resolvable.
                if x[w] - x[v] > 1e-6 && is_strongly_connected(&h) {
                    strict += 1;
                    c.expect(qh > q, &d, || {
                        format!("redirect ({u},{v})→({u},{w}): q not increased ({q} → {qh})")
                    });
                }
            }
        }
    }
    c.note(format!("n = {n}: {strict} strict cases"));
    Ok(())
}

fn check_unions(c: &mut Check, n: usize, p: &VerifyParams) -> Result<()> {
    let single = Digraph::empty(1)?;
    let parts = |k: usize| -> Result<Vec<(Digraph, f64)>> {
        if k == 1 {
            return Ok(vec![(single.clone(), 0.0)]);
        }
        Ok(Sweep::get(k, p.workers)?
            .classes
            .iter()
            .map(|c| (c.digraph.clone(), c.q))
            .collect())
    };
    for a in 1..=n / 2 {
        let b = n - a;
        let (pa, pb) = (parts(a)?, parts(b)?);
        for (da, qa) in &pa {
            for (db, qb) in &pb {
                let u = da.disjoint_union(db);
                let q = spectral::q(&u)?.radius;
                let expect = qa.max(*qb);
                c.expect((q - expect).abs() < p.tolerance, &u, || {
                    format!("q(union) = {q} but max of parts = {expect}")
                });
            }
        }
    }
    Ok(())
}

/// Digraphs other than the cycle used for path-based claims: every class for
/// exhaustively enumerable orders, family members above.
fn instances_for_paths(n: usize, p: &VerifyParams) -> Result<Vec<Digraph>> {
    let cycle = build(&FamilySpec::Cycle { n })?;
    if n <= MAX_ENUM_N {
        let cf = canonical_form(&cycle)?;
        return Ok(Sweep::get(n, p.workers)?
            .classes
            .iter()
            .filter(|c| c.canonical != cf)
            .map(|c| c.digraph.clone())
            .collect());
    }
    let mut specs = vec![FamilySpec::ThetaChord { n }, FamilySpec::HubCycle { n }];
    for j in 2..n {
        specs.extend([
            FamilySpec::CliquePath { n, d: j },
            FamilySpec::CliquePathAlt { n, d: j },
            FamilySpec::CycleWithPath { n, g: j },
            FamilySpec::CycleWithPathAlt { n, g: j },
        ]);
    }
    for a in 0..n - 1 {
        for b in a.max(1)..n - 1 - a {
            specs.push(FamilySpec::Theta { a, b, c: n - 2 - a - b });
        }
    }
    specs.iter().map(build).collect()
}

fn perron(d: &Digraph) -> Result<Vec<f64>> {
    let r: SpectralResult = spectral::q(d)?;
    Ok(r.perron_vector.expect("strongly connected"))
}

fn check_path_monotonicity(c: &mut Check, d: &Digraph) -> Result<()> {
    let x = perron(d)?;
    let p = degree_profile(d);
    for a in 0..d.n() {
        for b in d.out_neighbors(a) {
            // Walk a → b → … while the current vertex has out-degree one.
            let mut seen = vec![false; d.n()];
            seen[a] = true;
            let mut cur = b;
            while p.out_degrees[cur] == 1 && !seen[cur] {
                seen[cur] = true;
                let next = d.out_neighbors(cur).next().unwrap();
                if seen[next] {
                    break;
                }
                c.expect(x[cur] < x[next], d, || {
                    format!("path {a}→…→{cur}→{next}: x_{cur} = {} ≥ x_{next} = {}", x[cur], x[next])
                });
                cur = next;
            }
        }
    }
    Ok(())
}

fn check_contraction(c: &mut Check, d: &Digraph, p: &VerifyParams) -> Result<()> {
    let q = spectral::q(d)?.radius;
    let prof = degree_profile(d);
    for (a, b, _) in d.arcs().collect::<Vec<_>>() {
        if prof.out_degrees[b] != 1 || prof.in_degrees[b] != 1 {
            continue;
        }
        let next = d.out_neighbors(b).next().unwrap();
        if next == a {
            continue;
        }
        let qc = spectral::q(&contract(d, a, b)?)?.radius;
        let ok = qc >= q - p.tolerance;
        // With (a, next) already present the identification merges two arcs,
        // which the auxiliary-digraph argument does not account for.
        let shortcut = d.has_arc(a, next);
        if !ok {
            c.tally(if shortcut {
                "decreases with the shortcut arc present"
            } else {
                "decreases without a shortcut arc"
            });
        }
        c.expect(ok, d, || {
            let extra = if shortcut { format!(" (arc ({a},{next}) already present)") } else { String::new() };
            format!("contracting ({a},{b}) lowers q from {q} to {qc}{extra}")
        });
    }
    Ok(())
}

fn check_subdivision(c: &mut Check, s: &Sweep, p: &VerifyParams) -> Result<()> {
    let n = s.n;
    let cycle = canon(&FamilySpec::Cycle { n })?;
    let mut run = |d: &Digraph, q: f64| -> Result<()> {
        for (u, v, _) in d.arcs().collect::<Vec<_>>() {
            let qw = spectral::q(&insert_vertex(d, u, v)?)?.radius;
            c.expect(qw <= q + p.tolerance, d, || {
                format!("subdividing ({u},{v}) raises q from {q} to {qw}")
            });
        }
        Ok(())
    };
    // Labeled digraphs while cheap; one representative per class beyond.
    if n <= 4 {
        for (d, k) in s.labeled() {
            if s.classes[k].canonical != cycle {
                run(&d, s.classes[k].q)?;
            }
        }
    } else {
        for k in s.classes.iter().filter(|k| k.canonical != cycle) {
            run(&k.digraph, k.q)?;
        }
    }
    Ok(())
}

fn check_unique_min(
    c: &mut Check,
    s: &Sweep,
    p: &VerifyParams,
    member: impl Fn(&ClassInfo) -> bool,
    extremal: FamilySpec,
) -> Result<()> {
    let target = canon(&extremal)?;
    let members: Vec<&ClassInfo> = s.classes.iter().filter(|k| member(k)).collect();
    let Some(min) = members.iter().map(|k| k.q).reduce(f64::min) else {
        c.note(format!("{extremal}: class is empty"));
        return Ok(());
    };
    let at_min: Vec<&&ClassInfo> = members.iter().filter(|k| k.q - min < p.tolerance).collect();
    let ok = at_min.len() == 1 && at_min[0].canonical == target;
    let witness = at_min
        .iter()
        .find(|k| k.canonical != target)
        .map_or_else(|| build(&extremal), |k| Ok(k.digraph.clone()))?;
    c.expect(ok, &witness, || {
        format!(
            "{extremal}: {} classes attain the minimum {min}; expected only {extremal}",
            at_min.len()
        )
    });
    c.note(format!("{extremal}: minimum q = {min:.12} over {} classes", members.len()));
    Ok(())
}

/// `values` pins `(rank, value)` pairs that must also match.
fn check_ranking(
    c: &mut Check,
    n: usize,
    metric: Metric,
    direction: Direction,
    expected: &[FamilySpec],
    values: &[(usize, f64)],
    p: &VerifyParams,
) -> Result<()> {
    let s = Sweep::get(n, p.workers)?;
    let r = extremal_ranking(&s, metric, direction, expected.len(), p.tolerance)?;
    for (i, spec) in expected.iter().enumerate() {
        let rank = r.rank(i + 1);
        let target = canon(spec)?;
        let ok = rank.len() == 1 && rank[0].form == target;
        let witness = rank
            .iter()
            .find(|e| e.form != target)
            .map_or_else(|| build(spec), |e| Ok(e.digraph.clone()))?;
        c.expect(ok, &witness, || {
            format!("rank {} of {direction:?} {metric}: expected only {spec}, found {} classes", i + 1, rank.len())
        });
        if let Some(e) = rank.first() {
            c.note(format!("rank {}: {spec} value {:.12}", i + 1, e.value));
            c.expect((e.value - e.exact_root).abs() < p.tolerance, &e.digraph, || {
                format!("power iteration {} disagrees with exact root {}", e.value, e.exact_root)
            });
        }
    }
    for &(rank, v) in values {
        let entry = r.rank(rank);
        let ok = entry.first().is_some_and(|e| (e.value - v).abs() < p.tolerance);
        let d = entry.first().map_or_else(|| build(&expected[rank - 1]), |e| Ok(e.digraph.clone()))?;
        c.expect(ok, &d, || format!("rank {rank} value differs from {v}"));
    }
    Ok(())
}

/// `chain` must be strictly increasing with consecutive gaps above `min_gap`.
fn check_chain(c: &mut Check, chain: &[(f64, String)], witness: &Digraph, min_gap: f64) {
    for w in chain.windows(2) {
        let ((a, na), (b, nb)) = (&w[0], &w[1]);
        c.expect(b - a > min_gap, witness, || {
            format!("chain breaks between {na} = {a} and {nb} = {b}")
        });
    }
    let text: Vec<String> = chain.iter().map(|(v, name)| format!("{name}={v:.12}")).collect();
    c.note(text.join(" < "));
}

fn check_connectivity_maxima(c: &mut Check, s: &Sweep, p: &VerifyParams) -> Result<()> {
    let n = s.n;
    let nf = n as f64;
    for k in 1..=n - 2 {
        let conjectured = (3.0 * nf - 5.0 + ((nf - 3.0).powi(2) + 8.0 * k as f64).sqrt()) / 2.0;
        let members: Vec<&ClassInfo> = s.classes.iter().filter(|c| c.connectivity == k).collect();
        let max = members.iter().map(|c| c.q).fold(f64::MIN, f64::max);
        let at_max: Vec<&&ClassInfo> = members.iter().filter(|c| max - c.q < p.tolerance).collect();
        let target = canon(&FamilySpec::CutJoin { n, k, m: 1 })?;
        let which: Vec<String> = at_max
            .iter()
            .map(|c| {
                (1..n - k)
                    .find(|&m| canon(&FamilySpec::CutJoin { n, k, m }).is_ok_and(|f| f == c.canonical))
                    .map_or_else(|| c.canonical.to_string(), |m| format!("K({n},{k},{m})"))
            })
            .collect();
        c.note(format!(
            "n = {n}, k = {k}: max q = {max:.12} by {} vs conjectured {conjectured:.12}",
            which.join(", ")
        ));
        let ok = (max - conjectured).abs() < p.tolerance && at_max.len() == 1 && at_max[0].canonical == target;
        c.expect(ok, &at_max[0].digraph, || {
            let relation = if max > conjectured + p.tolerance {
                "above"
            } else if max < conjectured - p.tolerance {
                "below"
            } else {
                "at"
            };
            format!(
                "first failure: n = {n}, k = {k}, {} reaches {max:.12}, {relation} the conjectured {conjectured:.12}",
                which.join(", ")
            )
        });
    }
    Ok(())
}
