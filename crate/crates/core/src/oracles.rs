//! Brute-force invariants computed directly from a graph: BFS distances,
//! effective resistances, Laplacian spectra and Matrix-Tree cofactors.
//!
//! Nothing here knows about the chain structure beyond adjacency and
//! degrees, so every value is an independent check on the closed forms.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphs::{ChainGraph, VertexId};
use crate::numerics::{
    det_bareiss, symmetric_eigenvalues, DenseMatrix, FloatLu, RationalLu,
};
use crate::spectral::{laplacian, normalized_laplacian};

/// Hop distances between every pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.order + j]
    }

    pub fn diameter(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// Symmetric, zero diagonal, triangle inequality.
    pub fn is_metric(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| self.get(i, i) == 0)
            && (0..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(j, i)))
            && (0..n).all(|i| {
                (0..n).all(|j| (0..n).all(|k| self.get(i, k) <= self.get(i, j) + self.get(j, k)))
            })
    }
}

fn bfs(g: &ChainGraph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for &w in g.neighbors(VertexId(u)) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &ChainGraph) -> Result<DistanceMatrix> {
    let order = g.vertex_count();
    let rows: Vec<Vec<Option<u32>>> = (0..order).into_par_iter().map(|s| bfs(g, s)).collect();
    let data = rows
        .into_iter()
        .flatten()
        .collect::<Option<Vec<u32>>>()
        .ok_or(Error::Disconnected)?;
    Ok(DistanceMatrix { order, data })
}

/// `½ Σ_{i,j} w(i, j) d_ij` as an exact integer.
fn weighted_distance_sum(dist: &DistanceMatrix, weight: impl Fn(usize, usize) -> u64) -> BigInt {
    let n = dist.order();
    let mut total = BigInt::zero();
    for i in 0..n {
        for j in i + 1..n {
            total += BigInt::from(weight(i, j) * u64::from(dist.get(i, j)));
        }
    }
    total
}

pub fn wiener_from(dist: &DistanceMatrix) -> BigInt {
    weighted_distance_sum(dist, |_, _| 1)
}

pub fn schultz_from(g: &ChainGraph, dist: &DistanceMatrix) -> BigInt {
    let d = g.degrees();
    weighted_distance_sum(dist, |i, j| (d[i] + d[j]) as u64)
}

pub fn gutman_from(g: &ChainGraph, dist: &DistanceMatrix) -> BigInt {
    let d = g.degrees();
    weighted_distance_sum(dist, |i, j| (d[i] * d[j]) as u64)
}

pub fn wiener(g: &ChainGraph) -> Result<BigInt> {
    Ok(wiener_from(&all_pairs_distances(g)?))
}

pub fn schultz_oracle(g: &ChainGraph) -> Result<BigInt> {
    Ok(schultz_from(g, &all_pairs_distances(g)?))
}

pub fn gutman_oracle(g: &ChainGraph) -> Result<BigInt> {
    Ok(gutman_from(g, &all_pairs_distances(g)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResistanceMode {
    Exact,
    Float,
}

/// Effective resistances in either arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum ResistanceMatrix {
    Exact(DenseMatrix<BigRational>),
    Float(DenseMatrix<f64>),
}

/// Vertex count up to which [`ResistanceMode::Exact`] is the default.
pub const EXACT_RESISTANCE_LIMIT: usize = 60;

pub fn default_mode(g: &ChainGraph) -> ResistanceMode {
    if g.vertex_count() <= EXACT_RESISTANCE_LIMIT {
        ResistanceMode::Exact
    } else {
        ResistanceMode::Float
    }
}

pub fn effective_resistances(g: &ChainGraph, mode: ResistanceMode) -> Result<ResistanceMatrix> {
    Ok(match mode {
        ResistanceMode::Exact => ResistanceMatrix::Exact(exact_resistances(g)?),
        ResistanceMode::Float => ResistanceMatrix::Float(float_resistances(g)?),
    })
}

/// Indices of the grounded Laplacian, mapping back to graph vertices.
fn grounded_indices(order: usize, ground: usize) -> Vec<usize> {
    (0..order).filter(|&v| v != ground).collect()
}

/// `r_ij = G_ii + G_jj - 2 G_ij` where `G` is the inverse of the Laplacian
/// with vertex `ground` removed (and `G` is zero on the ground row/column).
fn resistances_from_inverse<T: Clone + Zero>(
    order: usize,
    ground: usize,
    columns: Vec<Vec<T>>,
    combine: impl Fn(&T, &T, &T) -> T,
) -> DenseMatrix<T> {
    let keep = grounded_indices(order, ground);
    let mut inv = DenseMatrix::filled(order, T::zero());
    for (c, col) in columns.into_iter().enumerate() {
        for (r, v) in col.into_iter().enumerate() {
            inv[(keep[r], keep[c])] = v;
        }
    }
    DenseMatrix::from_fn(order, |i, j| {
        if i == j {
            T::zero()
        } else {
            combine(&inv[(i, i)], &inv[(j, j)], &inv[(i, j)])
        }
    })
}

/// Exact resistances, grounding at `ground`.
pub fn exact_resistances_grounded(g: &ChainGraph, ground: usize) -> Result<DenseMatrix<BigRational>> {
    let order = g.vertex_count();
    let lap = laplacian(g).map(|v| BigRational::from_integer(v.clone()));
    let lu = RationalLu::factor(&lap.delete(&[ground])).map_err(|_| Error::Disconnected)?;
    let dim = order - 1;
    let columns = (0..dim)
        .into_par_iter()
        .map(|c| {
            let mut e = vec![BigRational::zero(); dim];
            e[c] = BigRational::one();
            lu.solve(&e)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(resistances_from_inverse(order, ground, columns, |a, b, x| {
        a + b - x * BigRational::from_integer(BigInt::from(2))
    }))
}

pub fn exact_resistances(g: &ChainGraph) -> Result<DenseMatrix<BigRational>> {
    exact_resistances_grounded(g, 0)
}

pub fn float_resistances(g: &ChainGraph) -> Result<DenseMatrix<f64>> {
    let order = g.vertex_count();
    let lap = laplacian(g).map(|v| f64::from(i32::try_from(v.clone()).expect("small entry")));
    let lu = FloatLu::factor(&lap.delete(&[0])).map_err(|_| Error::Disconnected)?;
    let dim = order - 1;
    let columns = (0..dim)
        .map(|c| {
            let mut e = vec![0.0; dim];
            e[c] = 1.0;
            lu.solve(&e)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(resistances_from_inverse(order, 0, columns, |a, b, x| a + b - 2.0 * x))
}

/// `Kf = Σ_{i<j} r_ij`.
pub fn kirchhoff_from(res: &DenseMatrix<BigRational>) -> BigRational {
    let n = res.order();
    let mut total = BigRational::zero();
    for i in 0..n {
        for j in i + 1..n {
            total += &res[(i, j)];
        }
    }
    total
}

/// `Kf* = Σ_{i<j} d_i d_j r_ij`, degrees read from the graph.
pub fn degree_kirchhoff_from(g: &ChainGraph, res: &DenseMatrix<BigRational>) -> BigRational {
    let d = g.degrees();
    let n = res.order();
    let mut total = BigRational::zero();
    for i in 0..n {
        for j in i + 1..n {
            total += &res[(i, j)] * BigRational::from_integer(BigInt::from(d[i] * d[j]));
        }
    }
    total
}

pub fn kirchhoff_oracle(g: &ChainGraph) -> Result<BigRational> {
    Ok(kirchhoff_from(&exact_resistances(g)?))
}

pub fn degree_kirchhoff_oracle(g: &ChainGraph) -> Result<BigRational> {
    Ok(degree_kirchhoff_from(g, &exact_resistances(g)?))
}

/// `Σ_{uv ∈ E} r_uv`, which Foster's theorem fixes at `|V| - 1`.
pub fn foster_sum(g: &ChainGraph, res: &DenseMatrix<BigRational>) -> BigRational {
    g.edges().into_iter().map(|(u, v)| res[(u, v)].clone()).sum()
}

/// Eigenvalues with the single zero eigenvalue of a connected graph removed.
fn nonzero_spectrum(mut eig: Vec<f64>, zero_tol: f64) -> Result<Vec<f64>> {
    let zeros = eig.iter().filter(|l| l.abs() < zero_tol).count();
    if zeros != 1 {
        return Err(Error::ZeroEigenvalueCount(zeros));
    }
    eig.remove(0);
    Ok(eig)
}

const ZERO_EIGENVALUE_TOL: f64 = 1e-8;

fn normalized_nonzero(g: &ChainGraph, tol: f64) -> Result<Vec<f64>> {
    let eig = symmetric_eigenvalues(&normalized_laplacian(g), tol)?;
    nonzero_spectrum(eig, ZERO_EIGENVALUE_TOL)
}

/// `Kf* = 2|E| Σ 1/λ̄_i` over the nonzero normalized-Laplacian eigenvalues.
pub fn kf_star_spectral(g: &ChainGraph, tol: f64) -> Result<f64> {
    let eig = normalized_nonzero(g, tol)?;
    Ok(2.0 * g.edge_count() as f64 * eig.iter().map(|l| 1.0 / l).sum::<f64>())
}

/// `Kc = Σ 1/λ̄_i`.
pub fn kemeny_spectral(g: &ChainGraph, tol: f64) -> Result<f64> {
    let eig = normalized_nonzero(g, tol)?;
    Ok(eig.iter().map(|l| 1.0 / l).sum())
}

/// `Kf = |V| Σ 1/λ_i` over the nonzero Laplacian eigenvalues.
pub fn kf_spectral(g: &ChainGraph, tol: f64) -> Result<f64> {
    let lap = laplacian(g).map(|v| f64::from(i32::try_from(v.clone()).expect("small entry")));
    let eig = nonzero_spectrum(symmetric_eigenvalues(&lap, tol)?, ZERO_EIGENVALUE_TOL)?;
    Ok(g.vertex_count() as f64 * eig.iter().map(|l| 1.0 / l).sum::<f64>())
}

/// Determinant of the Laplacian with row and column `index` removed.
pub fn laplacian_cofactor(g: &ChainGraph, index: usize) -> BigInt {
    det_bareiss(&laplacian(g).delete(&[index]))
}

/// Matrix-Tree count, cross-checked at the first and last vertex.
pub fn spanning_trees_oracle(g: &ChainGraph) -> Result<BigInt> {
    let first = laplacian_cofactor(g, 0);
    let last = laplacian_cofactor(g, g.vertex_count() - 1);
    assert_eq!(first, last, "Laplacian cofactors must agree");
    if first.is_zero() {
        return Err(Error::Disconnected);
    }
    Ok(first)
}

/// `τ = Π d_i · Π_{i≥2} λ̄_i / 2|E|`, accumulated in logarithms.
pub fn spanning_trees_normalized_check(g: &ChainGraph, tol: f64) -> Result<f64> {
    let eig = normalized_nonzero(g, tol)?;
    let log_deg: f64 = g.degrees().iter().map(|&d| (d as f64).ln()).sum();
    let log_eig: f64 = eig.iter().map(|l| l.ln()).sum();
    Ok((log_deg + log_eig - (2.0 * g.edge_count() as f64).ln()).exp())
}
