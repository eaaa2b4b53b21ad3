//! Labeled digraphs with integer arc multiplicities and their structural parameters.
//!
//! A [`Digraph`] stores an `n × n` matrix of arc multiplicities indexed
//! `(tail, head)` with a zero diagonal. Simple digraphs have every entry in
//! `{0, 1}`; multi-arcs only arise from arc redirection and are accepted by the
//! spectral routines, while the combinatorial parameters (clique number, vertex
//! connectivity, canonical form) refuse them.

pub(crate) mod canonical;
mod clique;
mod connectivity;
mod edgelist;
mod structure;

pub use canonical::{canonical_form, CanonicalForm, MAX_CANONICAL_N};
pub use clique::clique_number;
pub use connectivity::vertex_connectivity;
pub use edgelist::{parse_edge_list, write_edge_list};
pub use structure::{
    degree_profile, girth, is_strongly_connected, strongly_connected_components, DegreeProfile,
};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<u32>,
}

impl Digraph {
    /// The digraph on `n` vertices without arcs.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(Digraph {
            n,
            adj: vec![0; n * n],
        })
    }

    /// Builds a digraph from a list of `(tail, head)` pairs. Repeated pairs
    /// accumulate multiplicity.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::empty(n)?;
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Builds a digraph from a row-major multiplicity matrix.
    pub fn from_matrix(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut d = Digraph::empty(n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix);
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 0 {
                    return Err(Error::LoopArc(i));
                }
                d.adj[i * n + j] = m;
            }
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds one copy of arc `(u, v)`.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopArc(u));
        }
        self.adj[u * self.n + v] += 1;
        Ok(())
    }

    /// Removes one copy of arc `(u, v)`.
    pub fn remove_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let slot = &mut self.adj[u * self.n + v];
        if *slot == 0 {
            return Err(Error::MissingArc { tail: u, head: v });
        }
        *slot -= 1;
        Ok(())
    }

    /// Multiplicity of arc `(u, v)`; panics on out-of-range indices.
    #[inline]
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Arcs as `(tail, head, multiplicity)` in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.n;
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(move |(idx, &m)| (idx / n, idx % n, m))
    }

    /// Total arc count, counted with multiplicity.
    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(|&m| m as usize).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.adj.iter().all(|&m| m <= 1)
    }

    /// Errors with [`Error::NotSimple`] unless every multiplicity is at most one.
    pub fn require_simple(&self) -> Result<()> {
        match self.arcs().find(|&(_, _, m)| m > 1) {
            Some((tail, head, multiplicity)) => Err(Error::NotSimple {
                tail,
                head,
                multiplicity,
            }),
            None => Ok(()),
        }
    }

    pub fn out_degree(&self, u: usize) -> u32 {
        self.adj[u * self.n..(u + 1) * self.n].iter().sum()
    }

    pub fn in_degree(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.multiplicity(u, v)).sum()
    }

    /// Distinct out-neighbors of `u` in increasing order.
    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_arc(u, v))
    }

    /// Distinct in-neighbors of `v` in increasing order.
    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_arc(u, v))
    }

    /// The subdigraph induced by `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let k = vertices.len();
        let mut d = Digraph::empty(k)?;
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                d.adj[a * k + b] = self.multiplicity(u, v);
            }
        }
        Ok(d)
    }

    /// Relabels vertices so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {} but the digraph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter(format!(
                    "vertex {p} appears twice in permutation"
                )));
            }
        }
        self.induced(perm)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let n = self.n + other.n;
        let mut adj = vec![0; n * n];
        for (u, v, m) in self.arcs() {
            adj[u * n + v] = m;
        }
        for (u, v, m) in other.arcs() {
            adj[(u + self.n) * n + v + self.n] = m;
        }
        Digraph { n, adj }
    }

    /// Row-major multiplicity matrix.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.adj.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// True when every ordered pair of distinct vertices is an arc of multiplicity one.
    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| u == v || self.multiplicity(u, v) == 1))
    }
}

/// Serialized as `{"n": …, "arcs": [[tail, head], …]}` with multi-arcs repeated.
impl serde::Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let arcs: Vec<[usize; 2]> = self
            .arcs()
            .flat_map(|(u, v, m)| std::iter::repeat([u, v]).take(m as usize))
            .collect();
        let mut st = s.serialize_struct("Digraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("arcs", &arcs)?;
        st.end()
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let arcs: Vec<_> = self
            .arcs()
            .flat_map(|(u, v, m)| std::iter::repeat((u, v)).take(m as usize))
            .collect();
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &arcs)
            .finish()
    }
}
