use std::collections::VecDeque;

use num_rational::Ratio;

use super::Digraph;

/// Out-degrees, in-degrees, 2-outdegrees `t⁺` and average 2-outdegrees `m⁺`,
/// all counted with arc multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub out_degrees: Vec<u32>,
    pub in_degrees: Vec<u32>,
    pub two_out: Vec<u64>,
    /// `t⁺_i / d⁺_i`, `None` where `d⁺_i = 0`.
    pub avg_two_out: Vec<Option<Ratio<u64>>>,
}

impl DegreeProfile {
    pub fn is_out_regular(&self) -> bool {
        self.out_degrees.windows(2).all(|w| w[0] == w[1])
    }

    /// First vertex with zero out-degree, if any.
    pub fn first_sink(&self) -> Option<usize> {
        self.out_degrees.iter().position(|&d| d == 0)
    }

    /// `m⁺_i` as a float; `None` where `d⁺_i = 0`.
    pub fn avg_two_out_f64(&self, i: usize) -> Option<f64> {
        self.avg_two_out[i].map(|r| *r.numer() as f64 / *r.denom() as f64)
    }
}

pub fn degree_profile(d: &Digraph) -> DegreeProfile {
    let n = d.n();
    let out_degrees: Vec<u32> = (0..n).map(|u| d.out_degree(u)).collect();
    let in_degrees: Vec<u32> = (0..n).map(|v| d.in_degree(v)).collect();
    let two_out: Vec<u64> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| d.multiplicity(u, v) as u64 * out_degrees[v] as u64)
                .sum()
        })
        .collect();
    let avg_two_out = two_out
        .iter()
        .zip(&out_degrees)
        .map(|(&t, &deg)| (deg > 0).then(|| Ratio::new(t, deg as u64)))
        .collect();
    DegreeProfile {
        out_degrees,
        in_degrees,
        two_out,
        avg_two_out,
    }
}

/// Strongly connected components in an order where every arc leaving a
/// component lands in a component of larger index.
///
/// Tarjan's algorithm emits components sinks-first; the result is reversed.
/// Vertices inside each component are sorted.
pub fn strongly_connected_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let succ: Vec<Vec<usize>> = (0..n).map(|u| d.out_neighbors(u).collect()).collect();

    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::with_capacity(n);
    let mut next_index = 0;
    let mut components = Vec::new();

    // Explicit call stack of (vertex, next successor position).
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < succ[v].len() {
                let w = succ[v][*pos];
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components.reverse();
    components
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    let n = d.n();
    let reaches_all = |forward: bool| {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                let arc = if forward {
                    d.has_arc(u, v)
                } else {
                    d.has_arc(v, u)
                };
                if arc && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    };
    reaches_all(true) && reaches_all(false)
}

/// Length of a shortest directed cycle, or `None` for an acyclic digraph.
pub fn girth(d: &Digraph) -> Option<usize> {
    let n = d.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|x| *x = usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| dist[u] + 1 >= b) {
                break;
            }
            for v in d.out_neighbors(u) {
                if v == s {
                    let len = dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                    break 'bfs;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    best
}
