//! Laplacians and the reflection decomposition `𝓛 ↦ (𝓛_A, 𝓛_S)`.
//!
//! With vertices ordered (middle | upper | lower), the reflection `i ↔ i'`
//! block-diagonalizes the normalized Laplacian into
//!
//! ```text
//! 𝓛_A = [ 𝓛00      √2·𝓛01    ]      𝓛_S = 𝓛11 − 𝓛12
//!       [ √2·𝓛10   𝓛11 + 𝓛12 ]
//! ```
//!
//! of orders `3n` and `2n`. `𝓛_A` has entries in `Q(√3)`; `𝓛_S` is rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{ChainGraph, VertexId};
use crate::numerics::{
    frac, quad_charpoly, rat, rational_charpoly, symmetric_eigenvalues, DenseMatrix, QuadRat,
    Sqrt3,
};

/// Combinatorial Laplacian `L = D − A`.
pub fn laplacian(g: &ChainGraph) -> DenseMatrix<BigInt> {
    let mut m = DenseMatrix::zeros(g.vertex_count());
    for v in g.vertices() {
        m[(v.0, v.0)] = BigInt::from(g.degree(v));
        for &w in g.neighbors(v) {
            m[(v.0, w)] = BigInt::from(-1);
        }
    }
    m
}

/// Normalized Laplacian `𝓛 = I − D^{-1/2} A D^{-1/2}` in floating point.
pub fn normalized_laplacian(g: &ChainGraph) -> DenseMatrix<f64> {
    let deg: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    let mut m = DenseMatrix::identity(g.vertex_count());
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            m[(v.0, w)] = -1.0 / (deg[v.0] * deg[w]).sqrt();
        }
    }
    m
}

/// Vertex order (middle | upper | lower) used by the block form.
pub fn block_order(g: &ChainGraph) -> Vec<usize> {
    let n = g.n();
    (1..=n)
        .map(|i| g.middle(i).0)
        .chain((1..=2 * n).map(|i| g.upper(i).0))
        .chain((1..=2 * n).map(|i| g.lower(i).0))
        .collect()
}

/// Exact normalized-Laplacian entry between two vertices of degree 3.
fn cubic_entry(g: &ChainGraph, u: usize, v: usize) -> BigRational {
    if u == v {
        BigRational::one()
    } else if g.has_edge(VertexId(u), VertexId(v)) {
        debug_assert_eq!((g.degree(VertexId(u)), g.degree(VertexId(v))), (3, 3));
        frac(-1, 3)
    } else {
        BigRational::zero()
    }
}

/// `√2 · 𝓛[u][v]` for a middle vertex `u` (degree 2) and a side vertex `v` (degree 3).
fn coupling_entry(g: &ChainGraph, u: usize, v: usize) -> QuadRat<Sqrt3> {
    if g.has_edge(VertexId(u), VertexId(v)) {
        debug_assert_eq!(g.degree(VertexId(u)) * g.degree(VertexId(v)), 6);
        // √2 · (−1/√6) = −1/√3 = −√3/3
        QuadRat::surd(frac(-1, 3))
    } else {
        QuadRat::zero()
    }
}

/// The two reflection blocks of the normalized Laplacian.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    /// Order `3n`, entries in `Q(√3)`.
    pub la: DenseMatrix<QuadRat<Sqrt3>>,
    /// Order `2n`, rational entries.
    pub ls: DenseMatrix<BigRational>,
}

impl Decomposition {
    pub fn la_f64(&self) -> DenseMatrix<f64> {
        self.la.map(QuadRat::to_f64)
    }

    pub fn ls_f64(&self) -> DenseMatrix<f64> {
        self.ls.map(crate::numerics::rational_to_f64)
    }
}

pub fn decompose(g: &ChainGraph) -> Decomposition {
    let n = g.n();
    let middle: Vec<usize> = (1..=n).map(|i| g.middle(i).0).collect();
    let upper: Vec<usize> = (1..=2 * n).map(|i| g.upper(i).0).collect();
    let lower: Vec<usize> = (1..=2 * n).map(|i| g.lower(i).0).collect();

    let l11 = |a: usize, b: usize| cubic_entry(g, upper[a], upper[b]);
    let l12 = |a: usize, b: usize| cubic_entry(g, upper[a], lower[b]);

    let la = DenseMatrix::from_fn(3 * n, |r, c| match (r < n, c < n) {
        (true, true) => {
            if r == c {
                QuadRat::one()
            } else {
                QuadRat::zero()
            }
        }
        (true, false) => coupling_entry(g, middle[r], upper[c - n]),
        (false, true) => coupling_entry(g, middle[c], upper[r - n]),
        (false, false) => QuadRat::rational(l11(r - n, c - n) + l12(r - n, c - n)),
    });
    let ls = DenseMatrix::from_fn(2 * n, |r, c| l11(r, c) - l12(r, c));
    Decomposition { la, ls }
}

/// Spectra of the two blocks together with the union check against `𝓛`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecomposedSpectra {
    pub rho: Vec<f64>,
    pub mu: Vec<f64>,
    pub union_check_max_err: f64,
}

/// Eigenvalues of `𝓛(g)`, ascending.
pub fn normalized_spectrum(g: &ChainGraph, tol: f64) -> Result<Vec<f64>> {
    symmetric_eigenvalues(&normalized_laplacian(g), tol)
}

pub fn decomposed_spectra(g: &ChainGraph, tol: f64) -> Result<DecomposedSpectra> {
    let d = decompose(g);
    let rho = symmetric_eigenvalues(&d.la_f64(), tol)?;
    let mu = symmetric_eigenvalues(&d.ls_f64(), tol)?;
    let full = normalized_spectrum(g, tol)?;

    let mut union: Vec<f64> = rho.iter().chain(&mu).copied().collect();
    union.sort_by(f64::total_cmp);
    if union.len() != full.len() {
        return Err(Error::DimensionMismatch {
            expected: full.len(),
            got: union.len(),
        });
    }
    let union_check_max_err = union
        .iter()
        .zip(&full)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(DecomposedSpectra {
        rho,
        mu,
        union_check_max_err,
    })
}

/// Characteristic polynomial of `𝓛_A` with every coefficient checked rational.
pub fn la_charpoly(g: &ChainGraph) -> Result<Vec<BigRational>> {
    quad_charpoly(&decompose(g).la)
        .into_iter()
        .map(|c| {
            c.to_rational()
                .ok_or_else(|| Error::IrrationalCoefficient(c.to_string()))
        })
        .collect()
}

/// `(γ_{3n−1}, γ_{3n−2})` from `φ(𝓛_A) = y^{3n} + γ_1 y^{3n−1} + … + γ_{3n}`.
pub fn gamma_coefficients(g: &ChainGraph) -> Result<(BigRational, BigRational)> {
    let c = la_charpoly(g)?;
    let k = 3 * g.n();
    Ok((c[k - 1].clone(), c[k - 2].clone()))
}

/// `(δ_{2n−1}, det 𝓛_S)` from `φ(𝓛_S) = y^{2n} + δ_1 y^{2n−1} + … + δ_{2n}`.
pub fn delta_coefficients(g: &ChainGraph) -> (BigRational, BigRational) {
    let c = rational_charpoly(&decompose(g).ls);
    let k = 2 * g.n();
    (c[k - 1].clone(), c[k].clone())
}

/// `3·𝓛_S` as an integer matrix.
pub fn scaled_ls(g: &ChainGraph) -> DenseMatrix<BigInt> {
    decompose(g).ls.map(|x| {
        let y = x * rat(3);
        assert!(y.is_integer(), "3·L_S has integer entries");
        y.to_integer()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_chain, ChainFamily};
    use crate::numerics::{det_bareiss, det_quad_field};

    fn chain(n: usize, family: ChainFamily) -> ChainGraph {
        build_chain(n, family).unwrap()
    }

    #[test]
    fn laplacian_basics() {
        let g = chain(2, ChainFamily::Cylinder);
        let l = laplacian(&g);
        assert_eq!(l.trace(), BigInt::from(28));
        for row in l.rows() {
            assert!(row.iter().sum::<BigInt>().is_zero());
        }
        assert!(l.is_symmetric());
        // rank 9: the 9x9 principal minor is nonzero
        assert!(!det_bareiss(&l.delete(&[0])).is_zero());
    }

    #[test]
    fn normalized_entries() {
        let g = chain(2, ChainFamily::Cylinder);
        let m = normalized_laplacian(&g);
        assert!((m.trace() - 10.0).abs() < 1e-12);
        let e = m[(g.upper(2).0, g.middle(1).0)];
        assert!((e + 1.0 / 6f64.sqrt()).abs() < 1e-15);
        let e = m[(g.upper(1).0, g.upper(2).0)];
        assert!((e + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn ls_for_p2_matches_display() {
        let g = chain(2, ChainFamily::Cylinder);
        let expected = [[4, -1, 0, -1], [-1, 3, -1, 0], [0, -1, 4, -1], [-1, 0, -1, 3]];
        let n = scaled_ls(&g);
        for (r, row) in expected.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(n[(r, c)], BigInt::from(v), "({r},{c})");
            }
        }
    }

    #[test]
    fn mobius_ls_corner() {
        let g = chain(2, ChainFamily::Mobius);
        let ls = decompose(&g).ls;
        assert_eq!(ls[(0, 3)], frac(1, 3));
        assert_eq!(ls[(3, 0)], frac(1, 3));
    }

    #[test]
    fn la_is_family_independent() {
        for n in 2..6 {
            assert_eq!(
                decompose(&chain(n, ChainFamily::Cylinder)).la,
                decompose(&chain(n, ChainFamily::Mobius)).la
            );
        }
    }

    #[test]
    fn la_is_singular() {
        let g = chain(2, ChainFamily::Cylinder);
        let (a, b) = det_quad_field(&decompose(&g).la);
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn spectra_union() {
        for family in ChainFamily::ALL {
            let s = decomposed_spectra(&chain(2, family), 1e-14).unwrap();
            assert_eq!((s.rho.len(), s.mu.len()), (6, 4));
            assert!(s.union_check_max_err < 1e-8);
            assert!(s.rho[0].abs() < 1e-10 && s.rho[1] > 1e-3);
            assert!(s.mu[0] > 1e-3);
        }
    }

    #[test]
    fn gamma_small() {
        let (g5, g4) = gamma_coefficients(&chain(2, ChainFamily::Cylinder)).unwrap();
        assert_eq!(g5, frac(-56, 81));
        assert_eq!(g4, frac(1044, 243));
        let (g8, _) = gamma_coefficients(&chain(3, ChainFamily::Mobius)).unwrap();
        assert_eq!(g8, frac(126, 729));
    }

    #[test]
    fn delta_small() {
        let (d3, det) = delta_coefficients(&chain(2, ChainFamily::Cylinder));
        assert_eq!(det, frac(96, 81));
        assert_eq!(-d3, frac(140, 27));
        let (_, det) = delta_coefficients(&chain(2, ChainFamily::Mobius));
        assert_eq!(det, frac(100, 81));
    }
}
