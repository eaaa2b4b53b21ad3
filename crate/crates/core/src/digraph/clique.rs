use super::Digraph;
use crate::error::Result;

/// Size of the largest vertex set inducing a complete digraph.
///
/// Runs Bron–Kerbosch with Tomita pivoting on the symmetric part (pairs joined
/// by arcs in both directions), pruning branches that cannot beat the incumbent.
/// A single vertex always counts, so the result is at least 1.
pub fn clique_number(d: &Digraph) -> Result<usize> {
    d.require_simple()?;
    let n = d.n();
    let sym: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| d.has_arc(u, v) && d.has_arc(v, u)).collect())
        .collect();
    let mut best = 1;
    expand(&sym, 0, (0..n).collect(), Vec::new(), &mut best);
    Ok(best)
}

fn expand(
    sym: &[Vec<bool>],
    depth: usize,
    mut candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    best: &mut usize,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            *best = (*best).max(depth);
        }
        return;
    }
    if depth + candidates.len() <= *best {
        return;
    }
    let pivot = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .max_by_key(|&u| candidates.iter().filter(|&&v| sym[u][v]).count())
        .expect("nonempty candidate set");
    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !sym[pivot][v])
        .collect();
    for v in branch {
        let next_candidates: Vec<usize> =
            candidates.iter().copied().filter(|&w| sym[v][w]).collect();
        let next_excluded: Vec<usize> = excluded.iter().copied().filter(|&w| sym[v][w]).collect();
        expand(sym, depth + 1, next_candidates, next_excluded, best);
        candidates.retain(|&w| w != v);
        excluded.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn brute_force(d: &Digraph) -> usize {
        let n = d.n();
        (1u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|u| {
                    (0..n).all(|v| {
                        u == v
                            || mask >> u & 1 == 0
                            || mask >> v & 1 == 0
                            || (d.has_arc(u, v) && d.has_arc(v, u))
                    })
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn cycle_and_complete() {
        let c5 = Digraph::from_arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(clique_number(&c5).unwrap(), 1);
        let arcs: Vec<_> = (0..6)
            .flat_map(|i| (0..6).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let k6 = Digraph::from_arcs(6, &arcs).unwrap();
        assert_eq!(clique_number(&k6).unwrap(), 6);
    }

    #[test]
    fn rejects_multi_arcs() {
        let d = Digraph::from_arcs(2, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert!(matches!(clique_number(&d), Err(Error::NotSimple { .. })));
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        // Deterministic pseudo-random digraphs on 7 vertices.
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..200 {
            let mut d = Digraph::empty(7).unwrap();
            for u in 0..7 {
                for v in 0..7 {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if u != v && state % 10 < 7 {
                        d.add_arc(u, v).unwrap();
                    }
                }
            }
            assert_eq!(clique_number(&d).unwrap(), brute_force(&d), "{d:?}");
        }
    }
}
