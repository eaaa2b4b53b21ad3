use std::collections::VecDeque;

use super::{is_strongly_connected, Digraph};
use crate::error::{Error, Result};

/// Vertex connectivity κ(D) of a simple strongly connected digraph.
///
/// The complete digraph gets `n − 1`. Otherwise κ is the minimum, over ordered
/// pairs `(u, v)` with no arc `u → v`, of the number of internally disjoint
/// `u → v` paths, computed as a unit-capacity maximum flow after splitting every
/// vertex `w` into `w_in → w_out`.
pub fn vertex_connectivity(d: &Digraph) -> Result<usize> {
    d.require_simple()?;
    if !is_strongly_connected(d) {
        return Err(Error::NotStronglyConnected);
    }
    let n = d.n();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "vertex connectivity needs at least 2 vertices".into(),
        ));
    }
    if d.is_complete() {
        return Ok(n - 1);
    }
    let mut best = n - 1;
    for u in 0..n {
        for v in 0..n {
            if u != v && !d.has_arc(u, v) {
                best = best.min(SplitNetwork::new(d).max_flow(u, v, best));
            }
        }
    }
    Ok(best)
}

/// Residual network on `2n` nodes: `w_in = 2w`, `w_out = 2w + 1`.
struct SplitNetwork {
    cap: Vec<Vec<i32>>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(d: &Digraph) -> Self {
        let n = d.n();
        let nodes = 2 * n;
        let inf = n as i32;
        let mut cap = vec![vec![0; nodes]; nodes];
        let mut adj = vec![Vec::new(); nodes];
        let mut link = |a: usize, b: usize, c: i32, cap: &mut Vec<Vec<i32>>| {
            if cap[a][b] == 0 && cap[b][a] == 0 {
                adj[a].push(b);
                adj[b].push(a);
            }
            cap[a][b] += c;
        };
        for w in 0..n {
            link(2 * w, 2 * w + 1, 1, &mut cap);
        }
        for (a, b, _) in d.arcs() {
            link(2 * a + 1, 2 * b, inf, &mut cap);
        }
        SplitNetwork { cap, adj }
    }

    /// Maximum flow from `u_out` to `v_in`, stopping early once `limit` is reached.
    fn max_flow(mut self, u: usize, v: usize, limit: usize) -> usize {
        let source = 2 * u + 1;
        let sink = 2 * v;
        let nodes = self.cap.len();
        let mut flow = 0;
        let mut parent = vec![usize::MAX; nodes];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(a) = queue.pop_front() {
                if a == sink {
                    break;
                }
                for &b in &self.adj[a] {
                    if parent[b] == usize::MAX && self.cap[a][b] > 0 {
                        parent[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            // Every augmenting path crosses a unit split arc, so each carries one unit.
            let mut b = sink;
            while b != source {
                let a = parent[b];
                self.cap[a][b] -= 1;
                self.cap[b][a] += 1;
                b = a;
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::is_strongly_connected;

    fn complete(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    /// Smallest vertex subset whose removal leaves a non-strongly-connected
    /// digraph (or a single vertex).
    fn removal_oracle(d: &Digraph) -> usize {
        let n = d.n();
        let mut best = n - 1;
        for mask in 0u32..1 << n {
            let removed = mask.count_ones() as usize;
            if removed >= best {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
            if keep.len() >= 2 && !is_strongly_connected(&d.induced(&keep).unwrap()) {
                best = removed;
            }
        }
        best
    }

    #[test]
    fn complete_digraph_convention() {
        for n in 2..7 {
            assert_eq!(vertex_connectivity(&complete(n)).unwrap(), n - 1);
        }
    }

    #[test]
    fn cycle_has_connectivity_one() {
        let c = Digraph::from_arcs(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(vertex_connectivity(&c).unwrap(), 1);
    }

    #[test]
    fn rejects_disconnected() {
        let p = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(vertex_connectivity(&p), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn agrees_with_removal_oracle() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut checked = 0;
        while checked < 150 {
            let mut d = Digraph::empty(6).unwrap();
            for u in 0..6 {
                for v in 0..6 {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if u != v && state % 100 < 65 {
                        d.add_arc(u, v).unwrap();
                    }
                }
            }
            if !is_strongly_connected(&d) {
                continue;
            }
            assert_eq!(vertex_connectivity(&d).unwrap(), removal_oracle(&d), "{d:?}");
            checked += 1;
        }
    }
}
