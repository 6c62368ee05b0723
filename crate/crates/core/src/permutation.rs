//! Permutations of `{1..n}` and their permutation matrices.
//!
//! The matrix of `σ` is `P_σ = [δ_{σ(i), j}]`, i.e. row `i` has its single one in
//! column `σ(i)`. With that convention `P_σ P_τ = P_{τ∘σ}`, so [`Permutation::compose`]
//! is defined as `i ↦ τ(σ(i))` to make `to_matrix` a homomorphism.

use std::fmt;

use num_traits::{One, Zero};

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A bijection of `{1..n}`. Stored 0-based; every public accessor is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its 1-indexed image list `[σ(1), …, σ(n)]`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("image {img} out of range"),
                });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("image {img} repeated"),
                });
            }
            map.push(img - 1);
        }
        Ok(Self { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        debug_assert!(!map.is_empty());
        Self { map }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self {
            map: (0..n).collect(),
        })
    }

    /// The cycle `π_n(i) = (i mod n) + 1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self {
            map: (0..n).map(|i| (i + 1) % n).collect(),
        })
    }

    /// `π_n^r`, i.e. `i ↦ ((i - 1 + r) mod n) + 1`.
    pub fn cyclic_power(n: usize, r: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self {
            map: (0..n).map(|i| (i + r) % n).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.map.len()
    }

    /// `σ(i)` for 1-indexed `i`.
    pub fn image(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    /// The 1-indexed image list.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&i| i + 1).collect()
    }

    /// 0-based image, for internal index arithmetic.
    pub(crate) fn map0(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    fn check_order(&self, other: usize) -> Result<()> {
        if self.order() != other {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other,
            });
        }
        Ok(())
    }

    /// `i ↦ τ(σ(i))` where `self = σ`.
    pub fn compose(&self, tau: &Permutation) -> Result<Permutation> {
        self.check_order(tau.order())?;
        Ok(Self {
            map: self.map.iter().map(|&i| tau.map[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.order()];
        for (i, &j) in self.map.iter().enumerate() {
            map[j] = i;
        }
        Self { map }
    }

    /// `σ(x)`, the vector with `i`-th entry `x_{σ(i)}`; equal to `P_σ x`.
    pub fn apply<T: Clone>(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.order() {
            return Err(Error::LengthMismatch {
                expected: self.order(),
                actual: x.len(),
            });
        }
        Ok(self.map.iter().map(|&j| x[j].clone()).collect())
    }

    pub fn to_matrix(&self) -> DenseMatrix {
        let n = self.order();
        let mut m = DenseMatrix::zeros(n, n);
        for (i, &j) in self.map.iter().enumerate() {
            m[(i, j)] = Rational::one();
        }
        m
    }

    /// Cycles as 0-based index lists, ordered by minimal element, each starting
    /// at its minimum and following `σ`.
    pub(crate) fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                cycle.push(i);
                i = self.map[i];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Canonical `(γ, sizes)` with `P_γᵀ P_σ P_γ = C_{sizes[0]} ⊕ C_{sizes[1]} ⊕ …`.
    ///
    /// Block position `b` corresponds to original index `γ⁻¹(b)`; the inverse
    /// lists the cycles of `σ` one after another, ordered by minimal element and
    /// each walked from its minimum along `σ`.
    pub fn cycle_decomposition(&self) -> (Permutation, Vec<usize>) {
        let cycles = self.cycles();
        let sizes = cycles.iter().map(Vec::len).collect();
        let walk: Vec<usize> = cycles.into_iter().flatten().collect();
        let gamma = Self { map: walk }.inverse();
        (gamma, sizes)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, img) in self.images().into_iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "]")
    }
}

/// `diag(x)` as a dense matrix.
pub fn diag(x: &[Rational]) -> DenseMatrix {
    let n = x.len();
    let mut m = DenseMatrix::zeros(n, n);
    for (i, v) in x.iter().enumerate() {
        if !v.is_zero() {
            m[(i, i)] = v.clone();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::dense_multiply;
    use crate::rational::int;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images).unwrap()
    }

    #[test]
    fn identity_and_cyclic() {
        assert_eq!(Permutation::identity(3).unwrap().images(), vec![1, 2, 3]);
        assert_eq!(Permutation::cyclic(3).unwrap().images(), vec![2, 3, 1]);
        assert_eq!(Permutation::cyclic(1).unwrap().images(), vec![1]);
        assert_eq!(Permutation::identity(0), Err(Error::ZeroOrder));
        assert_eq!(Permutation::cyclic(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Permutation::new(&[1, 1, 2]),
            Err(Error::InvalidPermutation { .. })
        ));
        assert!(matches!(
            Permutation::new(&[1, 4, 2]),
            Err(Error::InvalidPermutation { .. })
        ));
        assert_eq!(Permutation::new(&[]), Err(Error::ZeroOrder));
    }

    #[test]
    fn c3_matrix() {
        let c3 = Permutation::cyclic(3).unwrap().to_matrix();
        let expected = DenseMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).unwrap();
        assert_eq!(c3, expected);
        assert_eq!(
            Permutation::identity(3).unwrap().to_matrix(),
            DenseMatrix::identity(3)
        );
    }

    #[test]
    fn compose_examples() {
        let c = Permutation::cyclic(3).unwrap();
        // C_3 · C_3 read off densely: rows (0,0,1),(1,0,0),(0,1,0).
        let sq = dense_multiply(&c.to_matrix(), &c.to_matrix()).unwrap();
        assert_eq!(sq, perm(&[3, 1, 2]).to_matrix());
        assert_eq!(c.compose(&c).unwrap().images(), vec![3, 1, 2]);
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
        let id4 = Permutation::identity(4).unwrap();
        let s = perm(&[2, 4, 1, 3]);
        assert_eq!(id4.compose(&s).unwrap(), s);
        assert!(matches!(c.compose(&id4), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        let c = Permutation::cyclic(3).unwrap();
        assert_eq!(c.inverse().images(), vec![3, 1, 2]);
        assert_eq!(c.inverse().to_matrix(), c.to_matrix().transpose());
        assert_eq!(c.inverse().inverse(), c);
        assert!(Permutation::identity(5).unwrap().inverse().is_identity());
    }

    #[test]
    fn apply_examples() {
        let c = Permutation::cyclic(3).unwrap();
        let x = vec![int(3), int(5), int(2)];
        assert_eq!(c.apply(&x).unwrap(), vec![int(5), int(2), int(3)]);
        assert_eq!(
            c.to_matrix().mul_vector(&x).unwrap(),
            vec![int(5), int(2), int(3)]
        );
        assert_eq!(c.apply(&c.inverse().apply(&x).unwrap()).unwrap(), x);
        assert!(matches!(
            c.apply(&x[..2]),
            Err(Error::LengthMismatch {
                expected: 3,
                actual: 2
            })
        ));
    }

    #[test]
    fn cycle_decomposition_examples() {
        let (g, sizes) = Permutation::cyclic(5).unwrap().cycle_decomposition();
        assert!(g.is_identity());
        assert_eq!(sizes, vec![5]);

        let (g, sizes) = perm(&[1, 3, 2]).cycle_decomposition();
        assert!(g.is_identity());
        assert_eq!(sizes, vec![1, 2]);

        // (1 3)(2) → walk 1,3,2; γ⁻¹ = [1,3,2].
        let (g, sizes) = perm(&[3, 2, 1]).cycle_decomposition();
        assert_eq!(g.inverse().images(), vec![1, 3, 2]);
        assert_eq!(sizes, vec![2, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(perm(&[2, 1]).to_string(), "[2, 1]");
    }
}
