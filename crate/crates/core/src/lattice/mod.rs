//! Integral lattices by Gram matrix: constructors, signatures, short-vector
//! enumeration, theta series, ADE root systems and the 2-cocycle.

mod cocycle;
mod data;
mod enumerate;
mod roots;
mod theta;

pub use cocycle::Cocycle;
pub use enumerate::{short_vector_counts, short_vectors};
pub use roots::{affine_cartan, root_system, RootFamily, RootSystem, RootSystemError};
pub use theta::{jacobi_theta_specialized, theta_series};

use crate::arith::{q_format, q_int, q_parse, Q};
use crate::linalg;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// Errors from lattice construction and queries.
#[derive(Debug, thiserror::Error)]
pub enum LatticeError {
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("lattice is not even (odd diagonal entry)")]
    NotEven,
    #[error("operation requires a positive-definite lattice, got signature {0:?}")]
    NotPositiveDefinite((usize, usize, usize)),
    #[error("glue vector does not lie in the dual lattice")]
    GlueNotInDual,
    #[error("vector has wrong length {got}, lattice rank is {want}")]
    WrongLength { got: usize, want: usize },
    #[error("malformed lattice JSON: {0}")]
    Json(String),
}

/// A vector in `L tensor Q`, in coordinates over the lattice basis. Integer
/// coordinates are genuine lattice elements.
pub type LatticeVector = Vec<Q>;

pub fn vec_from_i64(coords: &[i64]) -> LatticeVector {
    coords.iter().map(|&c| q_int(c)).collect()
}

pub fn vec_is_integral(v: &LatticeVector) -> bool {
    v.iter().all(|c| c.denom().is_one())
}

/// An integral lattice presented by a Gram matrix over a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralLattice {
    label: String,
    gram: linalg::Matrix,
    signature: (usize, usize, usize),
    even: bool,
    /// Ranks of direct summands when built as a direct sum; used to
    /// factorize theta series.
    components: Vec<usize>,
}

impl IntegralLattice {
    /// Build from an explicit symmetric integer (or rational) Gram matrix.
    pub fn from_gram(label: &str, gram: linalg::Matrix) -> Result<Arc<Self>, LatticeError> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(LatticeError::NotSquare);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        let even = (0..n).all(|i| {
            gram[i][i].denom().is_one() && (gram[i][i].numer() % 2i32).is_zero()
        });
        let signature = linalg::signature(&gram);
        Ok(Arc::new(IntegralLattice {
            label: label.to_string(),
            gram,
            signature,
            even,
            components: vec![n],
        }))
    }

    pub fn from_gram_i64(label: &str, gram: &[Vec<i64>]) -> Result<Arc<Self>, LatticeError> {
        Self::from_gram(label, linalg::mat_from_i64(gram))
    }

    /// The even unimodular hyperbolic plane `II_{1,1}` with Gram
    /// `[[0,1],[1,0]]`.
    pub fn hyperbolic_plane() -> Arc<Self> {
        Self::from_gram_i64("II_{1,1}", &[vec![0, 1], vec![1, 0]]).expect("valid gram")
    }

    /// Root lattice of an ADE root system: Gram matrix is the Cartan matrix.
    pub fn root_lattice(rs: &RootSystem) -> Arc<Self> {
        Self::from_gram(&format!("root({})", rs.label()), rs.cartan_matrix().clone())
            .expect("Cartan matrices are valid Gram matrices")
    }

    /// The Leech lattice from the fixed stored generator matrix.
    pub fn leech() -> Arc<Self> {
        let b: Vec<Vec<Q>> = data::LEECH_BASIS
            .iter()
            .map(|row| row.iter().map(|&x| q_int(x)).collect())
            .collect();
        let bt = linalg::mat_transpose(&b);
        let mut gram = linalg::mat_mul(&b, &bt);
        for row in gram.iter_mut() {
            for x in row.iter_mut() {
                *x = &*x / q_int(8);
                assert!(x.denom().is_one(), "Leech Gram must be integral");
            }
        }
        let l = Self::from_gram("Leech", gram).expect("valid gram");
        debug_assert!(l.even);
        l
    }

    /// Direct sum: block-diagonal Gram, concatenated coordinates.
    pub fn direct_sum(label: &str, parts: &[Arc<Self>]) -> Arc<Self> {
        let n: usize = parts.iter().map(|p| p.rank()).sum();
        let mut gram = linalg::zeros(n, n);
        let mut off = 0usize;
        let mut components = Vec::new();
        for p in parts {
            let r = p.rank();
            for i in 0..r {
                for j in 0..r {
                    gram[off + i][off + j] = p.gram[i][j].clone();
                }
            }
            components.extend(p.components.iter().map(|&c| c));
            off += r;
        }
        let signature = linalg::signature(&gram);
        let even = parts.iter().all(|p| p.even);
        Arc::new(IntegralLattice { label: label.to_string(), gram, signature, even, components })
    }

    /// Extend `base` by glue vectors (rational coordinates over the base
    /// basis). The glue vectors must pair integrally with the base lattice
    /// (lie in the dual); the result is the lattice they generate together.
    pub fn glue(
        label: &str,
        base: &Arc<Self>,
        glue_vectors: &[LatticeVector],
    ) -> Result<Arc<Self>, LatticeError> {
        let n = base.rank();
        for g in glue_vectors {
            if g.len() != n {
                return Err(LatticeError::WrongLength { got: g.len(), want: n });
            }
            for i in 0..n {
                let pairing: Q = (0..n).map(|j| &base.gram[i][j] * &g[j]).sum();
                if !pairing.denom().is_one() {
                    return Err(LatticeError::GlueNotInDual);
                }
            }
        }
        // Stack base basis (identity) and glue rows, clear denominators,
        // HNF-reduce, and rescale back.
        let mut den = num_bigint::BigInt::one();
        for g in glue_vectors {
            for c in g {
                den = num_integer::lcm(den, c.denom().clone());
            }
        }
        let mut rows: Vec<Vec<num_bigint::BigInt>> = Vec::new();
        for i in 0..n {
            let mut row = vec![num_bigint::BigInt::zero(); n];
            row[i] = den.clone();
            rows.push(row);
        }
        for g in glue_vectors {
            rows.push(g.iter().map(|c| c.numer() * (&den / c.denom())).collect());
        }
        let h = linalg::hnf(&rows);
        if h.len() != n {
            return Err(LatticeError::GlueNotInDual);
        }
        // New basis in old coordinates.
        let basis: linalg::Matrix = h
            .iter()
            .map(|row| row.iter().map(|x| Q::new(x.clone(), den.clone())).collect())
            .collect();
        let gram = linalg::mat_mul(&linalg::mat_mul(&basis, &base.gram), &linalg::mat_transpose(&basis));
        for row in &gram {
            for x in row {
                if !x.denom().is_one() {
                    return Err(LatticeError::GlueNotInDual);
                }
            }
        }
        Self::from_gram(label, gram)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &linalg::Matrix {
        &self.gram
    }

    pub fn gram_entry(&self, i: usize, j: usize) -> &Q {
        &self.gram[i][j]
    }

    /// `(positive, negative, zero)` inertia of the Gram matrix.
    pub fn signature(&self) -> (usize, usize, usize) {
        self.signature
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature == (self.rank(), 0, 0)
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn det(&self) -> Q {
        linalg::det(&self.gram)
    }

    /// Bilinear form of two rational vectors in lattice coordinates.
    pub fn inner(&self, a: &LatticeVector, b: &LatticeVector) -> Q {
        assert_eq!(a.len(), self.rank(), "vector length mismatch");
        assert_eq!(b.len(), self.rank(), "vector length mismatch");
        let mut acc = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc += ai * &self.gram[i][j] * bj;
                }
            }
        }
        acc
    }

    pub fn norm(&self, a: &LatticeVector) -> Q {
        self.inner(a, a)
    }

    /// Dual basis coordinates: row `i` is the vector pairing to `delta_ij`
    /// with the basis. Requires a nondegenerate Gram matrix.
    pub fn dual_basis(&self) -> linalg::Matrix {
        linalg::inverse(&self.gram).expect("nondegenerate Gram matrix")
    }

    /// JSON per the external interface:
    /// `{ "label": ..., "gram": [[int]], "glue": [] }`.
    pub fn to_json(&self) -> serde_json::Value {
        let gram: Vec<Vec<serde_json::Value>> = self
            .gram
            .iter()
            .map(|row| row.iter().map(|x| serde_json::json!(q_format(x))).collect())
            .collect();
        serde_json::json!({ "label": self.label, "gram": gram, "glue": [] })
    }

    /// Parse the JSON lattice format; `glue` rows, when present, extend the
    /// Gram-presented base lattice.
    pub fn from_json(v: &serde_json::Value) -> Result<Arc<Self>, LatticeError> {
        let err = |m: &str| LatticeError::Json(m.to_string());
        let label = v.get("label").and_then(|x| x.as_str()).unwrap_or("lattice");
        let gram_json = v.get("gram").and_then(|x| x.as_array()).ok_or_else(|| err("missing gram"))?;
        let mut gram = Vec::new();
        for row in gram_json {
            let row = row.as_array().ok_or_else(|| err("gram row must be an array"))?;
            let mut out = Vec::new();
            for x in row {
                let q = if let Some(i) = x.as_i64() {
                    q_int(i)
                } else if let Some(s) = x.as_str() {
                    q_parse(s).map_err(LatticeError::Json)?
                } else {
                    return Err(err("gram entries must be integers or \"num/den\""));
                };
                out.push(q);
            }
            gram.push(out);
        }
        let base = Self::from_gram(label, gram)?;
        let glue_json = v.get("glue").and_then(|x| x.as_array());
        match glue_json {
            None => Ok(base),
            Some(rows) if rows.is_empty() => Ok(base),
            Some(rows) => {
                let mut glue = Vec::new();
                for row in rows {
                    let row = row.as_array().ok_or_else(|| err("glue row must be an array"))?;
                    let mut out = Vec::new();
                    for x in row {
                        out.push(
                            q_parse(x.as_str().ok_or_else(|| err("glue entries are strings"))?)
                                .map_err(LatticeError::Json)?,
                        );
                    }
                    glue.push(out);
                }
                Self::glue(label, &base, &glue)
            }
        }
    }

    /// Look up a lattice by short name: `ii11`, `leech`, `e8`, `e8^3`,
    /// `ii17_1`... Used by the CLI.
    pub fn by_name(name: &str) -> Option<Arc<Self>> {
        match name.to_ascii_lowercase().as_str() {
            "ii11" | "ii_{1,1}" | "hyperbolic" => Some(Self::hyperbolic_plane()),
            "leech" => Some(Self::leech()),
            "e8" => {
                let rs = root_system(&[(RootFamily::E, 8)]).ok()?;
                Some(Self::root_lattice(&rs))
            }
            "a1" => {
                let rs = root_system(&[(RootFamily::A, 1)]).ok()?;
                Some(Self::root_lattice(&rs))
            }
            "e8^3" | "e83" => {
                let rs = root_system(&[(RootFamily::E, 8)]).ok()?;
                let e8 = Self::root_lattice(&rs);
                Some(Self::direct_sum("E8^3", &[e8.clone(), e8.clone(), e8]))
            }
            "e10" => {
                let rs = root_system(&[(RootFamily::E, 8)]).ok()?;
                let e8 = Self::root_lattice(&rs);
                Some(Self::direct_sum("E10", &[Self::hyperbolic_plane(), e8]))
            }
            "ii251" | "ii_{25,1}" => {
                Some(Self::direct_sum("II_{25,1}", &[Self::leech(), Self::hyperbolic_plane()]))
            }
            "ii22" | "ii_{2,2}" => Some(crate::superfock::ii22_paper_basis()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q_ratio;

    #[test]
    fn hyperbolic_plane_properties() {
        let h = IntegralLattice::hyperbolic_plane();
        assert_eq!(h.signature(), (1, 1, 0));
        assert!(h.is_even());
        assert_eq!(h.det(), q_int(-1));
    }

    #[test]
    fn e8_cubed_is_even_unimodular_rank_24() {
        let rs = root_system(&[(RootFamily::E, 8)]).unwrap();
        let e8 = IntegralLattice::root_lattice(&rs);
        assert_eq!(e8.det(), q_int(1));
        let l = IntegralLattice::direct_sum("E8^3", &[e8.clone(), e8.clone(), e8]);
        assert_eq!(l.rank(), 24);
        assert!(l.is_even());
        assert_eq!(l.det().abs(), q_int(1));
        assert!(l.is_positive_definite());
    }

    #[test]
    fn leech_is_even_unimodular() {
        let l = IntegralLattice::leech();
        assert_eq!(l.rank(), 24);
        assert!(l.is_even());
        assert!(l.is_positive_definite());
        assert_eq!(l.det(), q_int(1));
    }

    #[test]
    fn niemeier_sum_with_hyperbolic_is_unimodular_lorentzian() {
        // N + II_{1,1} even with |det| = 1 for both rank-24 candidates.
        for name in ["leech", "e8^3"] {
            let n = IntegralLattice::by_name(name).unwrap();
            let l = IntegralLattice::direct_sum("N+H", &[n, IntegralLattice::hyperbolic_plane()]);
            assert!(l.is_even(), "{name}");
            assert_eq!(l.det().abs(), q_int(1), "{name}");
            assert_eq!(l.signature(), (25, 1, 0), "{name}");
        }
    }

    #[test]
    fn glue_two_a1_into_square_lattice() {
        // A1 + A1 glued by (1/2, 1/2): Gram becomes unimodular odd (Z^2 up to
        // scale); here norms: (1/2,1/2) has norm (2+2)/4 = 1.
        let rs = root_system(&[(RootFamily::A, 1), (RootFamily::A, 1)]).unwrap();
        let base = IntegralLattice::root_lattice(&rs);
        let glued =
            IntegralLattice::glue("D2*", &base, &[vec![q_ratio(1, 2), q_ratio(1, 2)]]).unwrap();
        assert_eq!(glued.det().abs(), q_int(1));
        assert!(!glued.is_even());
        // Gluing by a non-dual vector fails.
        assert!(IntegralLattice::glue("bad", &base, &[vec![q_ratio(1, 3), q_int(0)]]).is_err());
    }

    #[test]
    fn rejects_asymmetric_gram() {
        let res = IntegralLattice::from_gram_i64("bad", &[vec![0, 1], vec![2, 0]]);
        assert!(matches!(res, Err(LatticeError::NotSymmetric)));
    }
}
