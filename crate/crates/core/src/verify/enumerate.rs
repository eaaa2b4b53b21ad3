use rayon::prelude::*;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order enumerated exhaustively (`2^{n(n−1)}` labeled candidates).
pub const MAX_ENUM_N: usize = 5;

/// Off-diagonal ordered pairs in row-major order; bit `k` of a mask is pair `k`.
pub(crate) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

/// Out-neighbor bitmask per vertex.
pub(crate) fn mask_rows(n: usize, pairs: &[(usize, usize)], mask: u32) -> [u8; 8] {
    let mut rows = [0u8; 8];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[u] |= 1 << v;
        }
    }
    debug_assert!(n <= 8);
    rows
}

pub(crate) fn rows_digraph(n: usize, rows: &[u8]) -> Digraph {
    let mut d = Digraph::empty(n).expect("n >= 1");
    for (u, &r) in rows.iter().enumerate().take(n) {
        for v in 0..n {
            if r >> v & 1 == 1 {
                d.add_arc(u, v).expect("masks never contain loops");
            }
        }
    }
    d
}

/// Strong connectivity on bitmask rows: vertex 0 reaches everything and is
/// reached from everything.
pub(crate) fn rows_strongly_connected(n: usize, rows: &[u8]) -> bool {
    let full = ((1u16 << n) - 1) as u8;
    let mut cols = [0u8; 8];
    for u in 0..n {
        for v in 0..n {
            if rows[u] >> v & 1 == 1 {
                cols[v] |= 1 << u;
            }
        }
    }
    let reach = |adj: &[u8]| {
        let mut seen = 1u8;
        let mut frontier = 1u8;
        while frontier != 0 {
            let mut next = 0u8;
            for u in 0..n {
                if frontier >> u & 1 == 1 {
                    next |= adj[u];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & full
    };
    reach(rows) == full && reach(&cols) == full
}

pub(crate) fn check_enum_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration needs n ≥ 2 (got {n})"
        )));
    }
    if n > MAX_ENUM_N {
        return Err(Error::TooLarge {
            what: "exhaustive enumeration",
            n,
            max: MAX_ENUM_N,
        });
    }
    Ok(())
}

/// Arc masks of every labeled simple strongly connected digraph on `n`
/// vertices, in increasing order. The mask space is split into contiguous
/// ranges processed by `workers` threads and concatenated in order.
pub fn enumerate_scd_masks(n: usize, workers: usize) -> Result<Vec<u32>> {
    check_enum_n(n)?;
    let pairs = pairs(n);
    let total: u64 = 1 << pairs.len();
    let chunks = (workers.max(1) * 16) as u64;
    let step = total.div_ceil(chunks);
    let run = || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = c * step;
                let hi = ((c + 1) * step).min(total);
                (lo..hi)
                    .map(|m| m as u32)
                    .filter(|&m| rows_strongly_connected(n, &mask_rows(n, &pairs, m)))
                    .collect::<Vec<u32>>()
            })
            .collect::<Vec<_>>()
            .concat()
    };
    Ok(with_workers(workers, run))
}

/// Every labeled simple strongly connected digraph on `n ∈ 2..=5` vertices.
pub fn enumerate_scd(n: usize) -> Result<Vec<Digraph>> {
    let pairs = pairs(n);
    Ok(enumerate_scd_masks(n, 1)?
        .into_iter()
        .map(|m| rows_digraph(n, &mask_rows(n, &pairs, m)))
        .collect())
}

/// Run `f` on a dedicated pool of `workers` threads (`0` means rayon's default).
pub(crate) fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
