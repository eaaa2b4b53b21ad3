use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::Digraph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`]; `8² = 64` bits fill a `u64`.
pub const MAX_CANONICAL_N: usize = 8;

/// Lexicographically smallest row-major adjacency bit-string over all vertex
/// relabelings. Two simple digraphs are isomorphic iff their forms are equal.
///
/// Bits are packed most-significant first, so integer order on `bits` is the
/// lexicographic order of the strings (for equal `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonical representative itself.
    pub fn to_digraph(&self) -> Digraph {
        let n = self.n();
        let mut d = Digraph::empty(n).expect("canonical forms have n >= 1");
        for u in 0..n {
            for v in 0..n {
                if self.bits >> (n * n - 1 - (u * n + v)) & 1 == 1 {
                    d.add_arc(u, v).expect("canonical forms have no loops");
                }
            }
        }
        d
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.n() * self.n();
        for k in (0..len).rev() {
            f.write_str(if self.bits >> k & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn permutations(n: usize) -> &'static [Vec<u8>] {
    static TABLES: OnceLock<Vec<Vec<Vec<u8>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=MAX_CANONICAL_N)
            .map(|k| {
                let mut out = Vec::new();
                let mut current: Vec<u8> = (0..k as u8).collect();
                heap_permutations(k, &mut current, &mut out);
                out.sort();
                out
            })
            .collect()
    });
    &tables[n]
}

fn heap_permutations(k: usize, a: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(k - 1, a, out);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permutations(k - 1, a, out);
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    let n = d.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::TooLarge {
            what: "canonical form",
            n,
            max: MAX_CANONICAL_N,
        });
    }
    d.require_simple()?;
    // rows[u] bit v set iff arc (u, v).
    let rows: Vec<u8> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| d.has_arc(u, v))
                .fold(0u8, |acc, v| acc | 1 << v)
        })
        .collect();
    Ok(canonical_from_rows(n, &rows))
}

/// Canonical form from out-neighbor bitmasks (`rows[u]` bit `v` ⇔ arc `u → v`).
pub(crate) fn canonical_from_rows(n: usize, rows: &[u8]) -> CanonicalForm {
    let row_mask = if n == 8 { u64::MAX >> 56 } else { (1u64 << n) - 1 };
    let mut best = u64::MAX;
    for perm in permutations(n) {
        let mut code = 0u64;
        let mut tied = true;
        let mut rejected = false;
        for i in 0..n {
            let src = rows[perm[i] as usize];
            let mut r = 0u64;
            for &pj in perm.iter() {
                r = r << 1 | (src >> pj & 1) as u64;
            }
            if tied {
                let best_row = best >> (n * (n - 1 - i)) & row_mask;
                if r > best_row {
                    rejected = true;
                    break;
                }
                tied = r == best_row;
            }
            code = code << n | r;
        }
        if !rejected {
            best = code;
        }
    }
    CanonicalForm {
        n: n as u8,
        bits: if n == 0 { 0 } else { best },
    }
}
