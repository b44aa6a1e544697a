//! ADE root systems: simple roots in the root-lattice basis (Gram = Cartan
//! matrix), positive-root enumeration, Weyl vectors, affine Cartan matrices.

use crate::arith::{q_int, q_ratio, Q};
use crate::linalg::{self, Matrix};
use num_traits::Zero;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootFamily {
    A,
    D,
    E,
}

impl std::fmt::Display for RootFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootFamily::A => write!(f, "A"),
            RootFamily::D => write!(f, "D"),
            RootFamily::E => write!(f, "E"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RootSystemError {
    #[error("unsupported root system {0}{1}: A needs rank >= 1, D rank >= 4, E rank 6..8")]
    Unsupported(RootFamily, usize),
    #[error("operation requires an irreducible root system")]
    Reducible,
    #[error("operation requires equal Coxeter numbers, got {0:?}")]
    UnequalCoxeterNumbers(Vec<i64>),
}

/// An ADE root system, possibly a direct sum. Roots are integer coordinate
/// vectors over the simple roots; the bilinear form is the Cartan matrix.
#[derive(Debug, Clone)]
pub struct RootSystem {
    factors: Vec<(RootFamily, usize)>,
    /// Start offset of each factor in the coordinate range.
    offsets: Vec<usize>,
    cartan: Matrix,
    /// All positive roots, as integer coordinates over the simple roots.
    positive: Vec<Vec<i64>>,
    /// Highest root of each irreducible factor.
    highest: Vec<Vec<i64>>,
    /// Coxeter number of each factor.
    coxeter: Vec<i64>,
}

fn dynkin_edges(family: RootFamily, rank: usize) -> Result<Vec<(usize, usize)>, RootSystemError> {
    let bad = || RootSystemError::Unsupported(family, rank);
    match family {
        RootFamily::A => {
            if rank < 1 {
                return Err(bad());
            }
            Ok((0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect())
        }
        RootFamily::D => {
            if rank < 4 {
                return Err(bad());
            }
            let mut e: Vec<(usize, usize)> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 1));
            Ok(e)
        }
        RootFamily::E => {
            if !(6..=8).contains(&rank) {
                return Err(bad());
            }
            // Bourbaki: chain 1-3-4-5-...-rank with node 2 attached to 4.
            let mut e = vec![(0, 2)];
            for i in 2..rank - 1 {
                e.push((i, i + 1));
            }
            e.push((1, 3));
            Ok(e)
        }
    }
}

fn coxeter_number(family: RootFamily, rank: usize) -> i64 {
    match family {
        RootFamily::A => rank as i64 + 1,
        RootFamily::D => 2 * rank as i64 - 2,
        RootFamily::E => match rank {
            6 => 12,
            7 => 18,
            8 => 30,
            _ => unreachable!("validated"),
        },
    }
}

/// Build an ADE root system, possibly reducible, from a list of factors.
pub fn root_system(types: &[(RootFamily, usize)]) -> Result<RootSystem, RootSystemError> {
    assert!(!types.is_empty(), "at least one factor");
    let total: usize = types.iter().map(|&(_, r)| r).sum();
    let mut cartan = linalg::zeros(total, total);
    let mut offsets = Vec::new();
    let mut off = 0usize;
    for &(family, rank) in types {
        offsets.push(off);
        for i in 0..rank {
            cartan[off + i][off + i] = q_int(2);
        }
        for (i, j) in dynkin_edges(family, rank)? {
            cartan[off + i][off + j] = q_int(-1);
            cartan[off + j][off + i] = q_int(-1);
        }
        off += rank;
    }

    // Positive roots per factor by closure: for simply-laced systems, r + s
    // is a root iff (r, s) = -1 for a simple root s.
    let inner = |a: &[i64], b: &[i64]| -> i64 {
        let mut acc = Q::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc += q_int(ai) * &cartan[i][j] * q_int(bj);
                }
            }
        }
        crate::arith::q_to_i64(&acc).expect("integer inner product")
    };

    let mut positive: Vec<Vec<i64>> = Vec::new();
    let mut highest = Vec::new();
    let mut coxeter = Vec::new();
    for (fidx, &(family, rank)) in types.iter().enumerate() {
        let off = offsets[fidx];
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; total];
            v[off + i] = 1;
            seen.insert(v.clone());
            frontier.push(v);
        }
        while let Some(r) = frontier.pop() {
            for i in 0..rank {
                let mut s = vec![0i64; total];
                s[off + i] = 1;
                if inner(&r, &s) == -1 {
                    let mut sum = r.clone();
                    sum[off + i] += 1;
                    if seen.insert(sum.clone()) {
                        frontier.push(sum);
                    }
                }
            }
        }
        let mut factor_roots: Vec<Vec<i64>> = seen.into_iter().collect();
        factor_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let h = coxeter_number(family, rank);
        assert_eq!(
            factor_roots.len(),
            (rank as i64 * h / 2) as usize,
            "positive root count must be rank * h / 2 for {family}{rank}"
        );
        highest.push(factor_roots.last().expect("nonempty").clone());
        coxeter.push(h);
        positive.extend(factor_roots);
    }

    Ok(RootSystem { factors: types.to_vec(), offsets, cartan, positive, highest, coxeter })
}

impl RootSystem {
    pub fn label(&self) -> String {
        self.factors
            .iter()
            .map(|(f, r)| format!("{f}{r}"))
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn factors(&self) -> &[(RootFamily, usize)] {
        &self.factors
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    /// Gram matrix of the simple roots (the Cartan matrix: simply laced).
    pub fn cartan_matrix(&self) -> &Matrix {
        &self.cartan
    }

    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| {
                let mut v = vec![0i64; self.rank()];
                v[i] = 1;
                v
            })
            .collect()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// All roots (positive and negative).
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(|r| r.iter().map(|&c| -c).collect::<Vec<i64>>()));
        out
    }

    pub fn inner_i64(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = Q::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc += q_int(ai) * &self.cartan[i][j] * q_int(bj);
                }
            }
        }
        crate::arith::q_to_i64(&acc).expect("integer inner product")
    }

    /// Highest root; requires irreducibility.
    pub fn highest_root(&self) -> Result<&Vec<i64>, RootSystemError> {
        if !self.is_irreducible() {
            return Err(RootSystemError::Reducible);
        }
        Ok(&self.highest[0])
    }

    pub fn highest_roots(&self) -> &[Vec<i64>] {
        &self.highest
    }

    /// Weyl vector: half the sum of the positive roots (rational coords).
    pub fn weyl_vector(&self) -> Vec<Q> {
        let mut acc = vec![Q::zero(); self.rank()];
        for r in &self.positive {
            for (a, &c) in acc.iter_mut().zip(r) {
                *a += q_int(c);
            }
        }
        for a in acc.iter_mut() {
            *a *= q_ratio(1, 2);
        }
        acc
    }

    /// Coxeter number; requires all factors to agree.
    pub fn coxeter_number(&self) -> Result<i64, RootSystemError> {
        let h = self.coxeter[0];
        if self.coxeter.iter().any(|&c| c != h) {
            return Err(RootSystemError::UnequalCoxeterNumbers(self.coxeter.clone()));
        }
        Ok(h)
    }

    pub fn coxeter_numbers(&self) -> &[i64] {
        &self.coxeter
    }
}

/// Affine Cartan matrix of an irreducible ADE root system: index 0 is the
/// affine node `alpha_0 = delta - gamma` with `gamma` the highest root, so
/// `A[0][j] = -(gamma, alpha_j)` and `A[0][0] = (gamma, gamma) = 2`.
pub fn affine_cartan(rs: &RootSystem) -> Result<Matrix, RootSystemError> {
    let gamma = rs.highest_root()?.clone();
    let n = rs.rank();
    let mut a = linalg::zeros(n + 1, n + 1);
    a[0][0] = q_int(2);
    for j in 0..n {
        let mut e = vec![0i64; n];
        e[j] = 1;
        let p = q_int(-rs.inner_i64(&gamma, &e));
        a[0][j + 1] = p.clone();
        a[j + 1][0] = p;
    }
    for i in 0..n {
        for j in 0..n {
            a[i + 1][j + 1] = rs.cartan_matrix()[i][j].clone();
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_and_a2_basics() {
        let a1 = root_system(&[(RootFamily::A, 1)]).unwrap();
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.coxeter_number().unwrap(), 2);

        let a2 = root_system(&[(RootFamily::A, 2)]).unwrap();
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.highest_root().unwrap(), &vec![1, 1]);
    }

    #[test]
    fn e8_counts() {
        let e8 = root_system(&[(RootFamily::E, 8)]).unwrap();
        assert_eq!(e8.positive_roots().len(), 120);
        assert_eq!(e8.coxeter_number().unwrap(), 30);
        // 240 = rank * h
        assert_eq!(e8.all_roots().len(), 240);
        // All positive roots have norm 2.
        for r in e8.positive_roots() {
            assert_eq!(e8.inner_i64(r, r), 2);
        }
        // Highest root pairs nonnegatively with all simple roots.
        let gamma = e8.highest_root().unwrap().clone();
        for s in e8.simple_roots() {
            assert!(e8.inner_i64(&gamma, &s) >= 0);
        }
    }

    #[test]
    fn d4_counts() {
        let d4 = root_system(&[(RootFamily::D, 4)]).unwrap();
        assert_eq!(d4.positive_roots().len(), 12);
        assert_eq!(d4.coxeter_number().unwrap(), 6);
    }

    #[test]
    fn affine_cartan_a1_a2() {
        let a1 = root_system(&[(RootFamily::A, 1)]).unwrap();
        let m = affine_cartan(&a1).unwrap();
        assert_eq!(m, linalg::mat_from_i64(&[vec![2, -2], vec![-2, 2]]));

        let a2 = root_system(&[(RootFamily::A, 2)]).unwrap();
        let m2 = affine_cartan(&a2).unwrap();
        assert_eq!(
            m2,
            linalg::mat_from_i64(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]])
        );
        // Diagonal is 2 everywhere.
        for (i, row) in m2.iter().enumerate() {
            assert_eq!(row[i], q_int(2));
        }
        // Reducible input is rejected.
        let red = root_system(&[(RootFamily::A, 1), (RootFamily::A, 1)]).unwrap();
        assert!(affine_cartan(&red).is_err());
    }

    #[test]
    fn weyl_vector_pairs_to_one_with_simples() {
        // (rho, alpha_i) = 1 for every simple root of a simply-laced system.
        for types in [vec![(RootFamily::A, 3)], vec![(RootFamily::D, 4)], vec![(RootFamily::E, 6)]]
        {
            let rs = root_system(&types).unwrap();
            let rho = rs.weyl_vector();
            for i in 0..rs.rank() {
                let pairing: Q = (0..rs.rank())
                    .map(|j| &rho[j] * &rs.cartan_matrix()[j][i])
                    .sum();
                assert_eq!(pairing, q_int(1));
            }
        }
    }
}
