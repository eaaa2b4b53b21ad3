use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_scd_masks, mask_rows, pairs, rows_digraph, with_workers};
use crate::digraph::canonical::canonical_from_rows;
use crate::digraph::{clique_number, girth, vertex_connectivity, CanonicalForm, Digraph};
use crate::error::Result;
use crate::spectral::{self, SpectralResult};

/// Invariants of one isomorphism class of strongly connected digraphs.
#[derive(Debug, Clone, Serialize)]
pub struct ClassInfo {
    pub canonical: CanonicalForm,
    /// The canonical representative.
    pub digraph: Digraph,
    /// Number of labeled digraphs in the class.
    pub labeled_count: usize,
    pub q: f64,
    pub rho: f64,
    pub girth: usize,
    pub clique: usize,
    pub connectivity: usize,
    #[serde(skip)]
    pub q_result: SpectralResult,
}

/// One exhaustive pass over all labeled strongly connected digraphs of order `n`,
/// with the per-class invariants every theorem check draws on.
#[derive(Debug)]
pub struct Sweep {
    pub n: usize,
    /// Labeled candidates examined, `2^{n(n−1)}`.
    pub examined: u64,
    /// Classes sorted by canonical form.
    pub classes: Vec<ClassInfo>,
    /// `(arc mask, class index)` per labeled strongly connected digraph, by mask.
    labeled: Vec<(u32, u32)>,
    pairs: Vec<(usize, usize)>,
}

impl Sweep {
    /// The sweep for `n`, computed once per process and shared afterwards.
    pub fn get(n: usize, workers: usize) -> Result<Arc<Sweep>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Sweep>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        // Holding the lock while computing keeps concurrent callers from
        // duplicating a multi-second sweep.
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(s) = guard.get(&n) {
            return Ok(Arc::clone(s));
        }
        let s = Arc::new(Sweep::compute(n, workers)?);
        guard.insert(n, Arc::clone(&s));
        Ok(s)
    }

    pub fn compute(n: usize, workers: usize) -> Result<Sweep> {
        let masks = enumerate_scd_masks(n, workers)?;
        let pairs = pairs(n);
        with_workers(workers, || {
            let forms: Vec<CanonicalForm> = masks
                .par_iter()
                .map(|&m| canonical_from_rows(n, &mask_rows(n, &pairs, m)[..n]))
                .collect();
            let mut counts: HashMap<CanonicalForm, usize> = HashMap::new();
            for f in &forms {
                *counts.entry(*f).or_default() += 1;
            }
            let mut keys: Vec<CanonicalForm> = counts.keys().copied().collect();
            keys.sort();
            let index: HashMap<CanonicalForm, u32> =
                keys.iter().enumerate().map(|(i, f)| (*f, i as u32)).collect();
            let classes = keys
                .par_iter()
                .map(|f| class_info(*f, counts[f]))
                .collect::<Result<Vec<_>>>()?;
            let labeled = masks.iter().zip(&forms).map(|(&m, f)| (m, index[f])).collect();
            Ok(Sweep {
                n,
                examined: 1u64 << pairs.len(),
                classes,
                labeled,
                pairs,
            })
        })
    }

    pub fn labeled_count(&self) -> usize {
        self.labeled.len()
    }

    /// Every labeled strongly connected digraph with its class index.
    pub fn labeled(&self) -> impl ExactSizeIterator<Item = (Digraph, usize)> + '_ {
        self.labeled
            .iter()
            .map(|&(m, c)| (rows_digraph(self.n, &mask_rows(self.n, &self.pairs, m)), c as usize))
    }

    pub fn class_of(&self, d: &Digraph) -> Option<&ClassInfo> {
        let f = crate::digraph::canonical_form(d).ok()?;
        self.classes
            .binary_search_by(|c| c.canonical.cmp(&f))
            .ok()
            .map(|i| &self.classes[i])
    }
}

fn class_info(canonical: CanonicalForm, labeled_count: usize) -> Result<ClassInfo> {
    let d = canonical.to_digraph();
    let q_result = spectral::q(&d)?;
    Ok(ClassInfo {
        canonical,
        labeled_count,
        q: q_result.radius,
        rho: spectral::rho(&d)?.radius,
        girth: girth(&d).expect("strongly connected digraphs on n ≥ 2 have a cycle"),
        clique: clique_number(&d)?,
        connectivity: vertex_connectivity(&d)?,
        q_result,
        digraph: d,
    })
}
