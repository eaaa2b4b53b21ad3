//! Spectral radii of nonnegative integer matrices and digraphs.
//!
//! [`spectral_radius`] runs power iteration on `M + I` (primitive whenever `M`
//! is irreducible, so the iteration cannot oscillate) and certifies the result
//! with the Collatz–Wielandt enclosure
//! `min_i (Mx)_i / x_i ≤ ρ(M) ≤ max_i (Mx)_i / x_i` at the final iterate.
//! Reducible matrices are split into irreducible diagonal blocks along the
//! strongly connected components of their support.

mod poly;
mod roots;

pub use poly::{char_poly, IntPolynomial, MAX_CHAR_POLY_N};
pub use roots::{compare_largest_roots, largest_real_root};

use serde::Serialize;

use crate::digraph::{strongly_connected_components, Digraph};
use crate::error::{Error, Result};

/// Dense square matrix of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix);
        }
        let data: Vec<i64> = rows.iter().flatten().copied().collect();
        if data.iter().any(|&x| x < 0) {
            return Err(Error::InvalidMatrix);
        }
        Ok(IntMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.data.chunks(self.n).map(|r| r.iter().sum()).collect()
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> IntMatrix {
        let k = idx.len();
        let mut data = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                data.push(self.get(i, j));
            }
        }
        IntMatrix { n: k, data }
    }

    /// Digraph of the off-diagonal support pattern.
    fn support(&self) -> Digraph {
        let mut d = Digraph::empty(self.n).expect("matrices are nonempty");
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.get(i, j) != 0 {
                    d.add_arc(i, j).expect("indices in range");
                }
            }
        }
        d
    }
}

/// `A(D)`: entry `(i, j)` is the multiplicity of arc `(i, j)`.
pub fn adjacency_matrix(d: &Digraph) -> IntMatrix {
    let n = d.n();
    let data = (0..n)
        .flat_map(|i| (0..n).map(move |j| d.multiplicity(i, j) as i64))
        .collect();
    IntMatrix { n, data }
}

/// `Q(D) = diag(d⁺) + A(D)`.
pub fn signless_laplacian(d: &Digraph) -> IntMatrix {
    let mut m = adjacency_matrix(d);
    for i in 0..m.n {
        m.data[i * m.n + i] = d.out_degree(i) as i64;
    }
    m
}

/// Certified spectral radius with its Perron data.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub radius: f64,
    /// Positive eigenvector with unit 1-norm; absent for reducible input.
    pub perron_vector: Option<Vec<f64>>,
    pub cw_lower: f64,
    pub cw_upper: f64,
    pub iterations: usize,
}

impl SpectralResult {
    pub fn enclosure_width(&self) -> f64 {
        self.cw_upper - self.cw_lower
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    /// Required absolute width of the Collatz–Wielandt interval.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            tolerance: 1e-12,
            max_iterations: 1_000_000,
        }
    }
}

/// Spectral radius of a nonnegative matrix with default certification options.
///
/// With `irreducible_hint` the caller asserts irreducibility and the matrix is
/// iterated as a whole. Without it the support is split into strong components
/// and the radius is the maximum over the irreducible diagonal blocks; a Perron
/// vector is still returned when there is a single block.
pub fn spectral_radius(m: &IntMatrix, irreducible_hint: bool) -> Result<SpectralResult> {
    spectral_radius_with(m, irreducible_hint, &PowerOptions::default())
}

pub fn spectral_radius_with(
    m: &IntMatrix,
    irreducible_hint: bool,
    opts: &PowerOptions,
) -> Result<SpectralResult> {
    if m.n == 1 {
        let r = m.get(0, 0) as f64;
        return Ok(SpectralResult {
            radius: r,
            perron_vector: Some(vec![1.0]),
            cw_lower: r,
            cw_upper: r,
            iterations: 0,
        });
    }
    if irreducible_hint {
        if let Some(res) = power_iteration(m, opts)? {
            return Ok(res);
        }
    }
    block_radius(m, opts)
}

fn block_radius(m: &IntMatrix, opts: &PowerOptions) -> Result<SpectralResult> {
    let components = strongly_connected_components(&m.support());
    if components.len() == 1 {
        if let Some(res) = power_iteration(m, opts)? {
            return Ok(res);
        }
    }
    let mut out = SpectralResult {
        radius: 0.0,
        perron_vector: None,
        cw_lower: 0.0,
        cw_upper: 0.0,
        iterations: 0,
    };
    for comp in &components {
        let block = m.principal_submatrix(comp);
        let r = if block.n == 1 {
            let v = block.get(0, 0) as f64;
            (v, v, v, 0)
        } else {
            let res = power_iteration(&block, opts)?.ok_or(Error::InvalidMatrix)?;
            (res.radius, res.cw_lower, res.cw_upper, res.iterations)
        };
        out.radius = out.radius.max(r.0);
        out.cw_lower = out.cw_lower.max(r.1);
        out.cw_upper = out.cw_upper.max(r.2);
        out.iterations += r.3;
    }
    Ok(out)
}

/// Power iteration on `M + I`. `Ok(None)` when an iterate component vanishes.
fn power_iteration(m: &IntMatrix, opts: &PowerOptions) -> Result<Option<SpectralResult>> {
    let n = m.n;
    let a: Vec<f64> = m.data.iter().map(|&v| v as f64).collect();
    let mut x = vec![1.0 / n as f64; n];
    let mut y = vec![0.0; n];
    let mut width = f64::INFINITY;
    for it in 1..=opts.max_iterations {
        // y = (M + I) x
        for i in 0..n {
            let row = &a[i * n..(i + 1) * n];
            y[i] = x[i] + row.iter().zip(&x).map(|(r, xi)| r * xi).sum::<f64>();
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            if x[i] <= 0.0 || !x[i].is_finite() {
                return Ok(None);
            }
            let ratio = y[i] / x[i] - 1.0;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        width = hi - lo;
        if width <= opts.tolerance {
            let lo = lo.max(0.0);
            return Ok(Some(SpectralResult {
                radius: 0.5 * (lo + hi),
                perron_vector: Some(x),
                cw_lower: lo,
                cw_upper: hi,
                iterations: it,
            }));
        }
        let s: f64 = y.iter().sum();
        for i in 0..n {
            x[i] = y[i] / s;
        }
    }
    Err(Error::NotConverged {
        iterations: opts.max_iterations,
        width,
    })
}

/// Signless Laplacian spectral radius `q(D)`.
///
/// For a digraph that is not strongly connected this is the largest radius of
/// the diagonal blocks of `Q(D)` on its strong components, with no Perron vector.
pub fn q(d: &Digraph) -> Result<SpectralResult> {
    let strong = crate::digraph::is_strongly_connected(d);
    spectral_radius(&signless_laplacian(d), strong)
}

/// Adjacency spectral radius `ρ(D)`.
pub fn rho(d: &Digraph) -> Result<SpectralResult> {
    let strong = crate::digraph::is_strongly_connected(d);
    spectral_radius(&adjacency_matrix(d), strong)
}
