//! Arc redirection, arc contraction and arc subdivision.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

fn require_arc(d: &Digraph, u: usize, v: usize) -> Result<()> {
    for x in [u, v] {
        if x >= d.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: d.n() });
        }
    }
    if d.has_arc(u, v) {
        Ok(())
    } else {
        Err(Error::MissingArc { tail: u, head: v })
    }
}

/// Replace one copy of `(u, v)` by `(u, w)`. Redirecting onto an existing arc
/// yields a multi-arc; out-degrees are unchanged.
pub fn redirect_arc(d: &Digraph, u: usize, v: usize, w: usize) -> Result<Digraph> {
    require_arc(d, u, v)?;
    let mut h = d.clone();
    h.remove_arc(u, v)?;
    h.add_arc(u, w)?;
    Ok(h)
}

/// Delete `(u, v)` and identify `v` with `u`, dropping loops and collapsing
/// parallel arcs. The merged vertex keeps `u`'s index (adjusted if `v < u`);
/// indices above `v` shift down by one.
pub fn contract(d: &Digraph, u: usize, v: usize) -> Result<Digraph> {
    d.require_simple()?;
    require_arc(d, u, v)?;
    let n = d.n();
    let map = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let mut h = Digraph::empty(n - 1)?;
    for (a, b, _) in d.arcs() {
        let (a, b) = (map(a), map(b));
        if a != b && !h.has_arc(a, b) {
            h.add_arc(a, b)?;
        }
    }
    Ok(h)
}

/// Subdivide `(u, v)` with a new vertex `w = n`.
pub fn insert_vertex(d: &Digraph, u: usize, v: usize) -> Result<Digraph> {
    require_arc(d, u, v)?;
    let n = d.n();
    let mut h = Digraph::empty(n + 1)?;
    for (a, b, mult) in d.arcs() {
        for _ in 0..mult {
            h.add_arc(a, b)?;
        }
    }
    h.remove_arc(u, v)?;
    h.add_arc(u, n)?;
    h.add_arc(n, v)?;
    Ok(h)
}
