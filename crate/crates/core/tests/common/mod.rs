//! Deliberately naive reference implementations used as test oracles.
#![allow(dead_code)]

use digraph_spectra::Digraph;

/// Dense matrix `Q = diag(out-degree) + A` (or plain `A`) as floats.
pub fn dense(d: &Digraph, signless: bool) -> Vec<Vec<f64>> {
    let n = d.n();
    let mut m = vec![vec![0.0; n]; n];
    for (u, v, k) in d.arcs() {
        m[u][v] += k as f64;
        if signless {
            m[u][u] += k as f64;
        }
    }
    m
}

/// Largest eigenvalue of a nonnegative irreducible matrix by plain power
/// iteration on `M + I`, stopped when the Rayleigh-style ratio settles.
pub fn naive_radius(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut x = vec![1.0; n];
    let mut last = 0.0;
    for it in 0..2_000_000 {
        let mut y: Vec<f64> = (0..n)
            .map(|i| x[i] + (0..n).map(|j| m[i][j] * x[j]).sum::<f64>())
            .collect();
        let norm: f64 = y.iter().sum();
        let lambda = norm / x.iter().sum::<f64>() - 1.0;
        y.iter_mut().for_each(|v| *v /= norm);
        x = y;
        if it > 50 && (lambda - last).abs() < 1e-15 {
            return lambda;
        }
        last = lambda;
    }
    last
}

pub fn naive_q(d: &Digraph) -> f64 {
    naive_radius(&dense(d, true))
}

pub fn naive_rho(d: &Digraph) -> f64 {
    naive_radius(&dense(d, false))
}

/// Strong connectivity by Warshall transitive closure.
pub fn warshall_strong(d: &Digraph) -> bool {
    let n = d.n();
    let mut r = vec![vec![false; n]; n];
    for (u, v, _) in d.arcs() {
        r[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n).all(|i| (0..n).all(|j| i == j || r[i][j]))
}

/// Digraph from an arc bitmask over the off-diagonal pairs in row-major order.
pub fn from_mask(n: usize, mask: u64) -> Digraph {
    let mut d = Digraph::empty(n).unwrap();
    let mut k = 0;
    for u in 0..n {
        for v in 0..n {
            if u != v {
                if mask >> k & 1 == 1 {
                    d.add_arc(u, v).unwrap();
                }
                k += 1;
            }
        }
    }
    d
}

/// Every permutation of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k % 2 == 0 { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

/// Brute-force isomorphism test.
pub fn isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.n() == b.n()
        && a.arc_count() == b.arc_count()
        && permutations(a.n()).iter().any(|p| a.permuted(p).unwrap() == *b)
}
