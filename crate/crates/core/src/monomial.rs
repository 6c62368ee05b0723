//! Monomial matrices `A = D_x P_σ`, stored as the pair `(x, σ)`.
//!
//! Row `i` of `A` holds its single nonzero `x_i` in column `σ(i)`.

use num_traits::{One, Signed, Zero};

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    values: Vec<Rational>,
    perm: Permutation,
}

fn check_nonzero(x: &[Rational]) -> Result<()> {
    match x.iter().position(Zero::is_zero) {
        Some(i) => Err(Error::ZeroEntry { index: i + 1 }),
        None => Ok(()),
    }
}

/// `α_x = det D_x = ∏ x_k`.
pub fn alpha(x: &[Rational]) -> Rational {
    x.iter().fold(Rational::one(), |acc, v| acc * v)
}

/// Products of `x` along the orbits of `π_n`: entry `[r][i]` (0-based `i`) is
/// `∏_{t=0}^{r-1} x_{π^t(i)}` for `r = 0..n`, so row `n` is constant `α_x`.
///
/// Row `r` holds the nonzero values of `K_x^r` (located at `(i, π^r(i))`).
pub fn orbit_products(x: &[Rational]) -> Vec<Vec<Rational>> {
    let n = x.len();
    let mut rows = Vec::with_capacity(n + 1);
    rows.push(vec![Rational::one(); n]);
    for r in 0..n {
        let prev: &Vec<Rational> = &rows[r];
        let next = (0..n).map(|i| &prev[i] * &x[(i + r) % n]).collect();
        rows.push(next);
    }
    rows
}

impl MonomialMatrix {
    pub fn new(values: Vec<Rational>, perm: Permutation) -> Result<Self> {
        if values.len() != perm.order() {
            return Err(Error::LengthMismatch {
                expected: perm.order(),
                actual: values.len(),
            });
        }
        check_nonzero(&values)?;
        Ok(Self { values, perm })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Ok(Self {
            values: vec![Rational::one(); n],
            perm: Permutation::identity(n)?,
        })
    }

    /// `K_x = D_x C_n`.
    pub fn k_of(x: &[Rational]) -> Result<Self> {
        let perm = Permutation::cyclic(x.len())?;
        Self::new(x.to_vec(), perm)
    }

    pub fn order(&self) -> usize {
        self.perm.order()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn alpha(&self) -> Rational {
        alpha(&self.values)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(Signed::is_positive)
    }

    /// Recovers `(x, σ)` from a dense matrix with exactly one nonzero per row and column.
    pub fn from_dense(m: &DenseMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut values = Vec::with_capacity(n);
        let mut images = Vec::with_capacity(n);
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let mut nonzeros = m.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero());
            let (j, v) = match (nonzeros.next(), nonzeros.next()) {
                (Some(first), None) => first,
                (None, _) => {
                    return Err(Error::NotMonomial {
                        row: i + 1,
                        reason: "has no nonzero entry".into(),
                    })
                }
                (Some(_), Some(_)) => {
                    return Err(Error::NotMonomial {
                        row: i + 1,
                        reason: "has more than one nonzero entry".into(),
                    })
                }
            };
            if let Some(prev) = owner[j] {
                return Err(Error::NotMonomial {
                    row: i + 1,
                    reason: format!("shares column {} with row {}", j + 1, prev + 1),
                });
            }
            owner[j] = Some(i);
            values.push(v.clone());
            images.push(j + 1);
        }
        Self::new(values, Permutation::new(&images)?)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.order();
        let mut m = DenseMatrix::zeros(n, n);
        for (i, v) in self.values.iter().enumerate() {
            m[(i, self.perm.map0(i))] = v.clone();
        }
        m
    }

    /// `D_x P_σ · D_y P_τ = D_{x ⊙ σ(y)} P_{τ∘σ}`.
    pub fn multiply(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        let perm = self.perm.compose(&other.perm)?;
        let moved = self.perm.apply(&other.values)?;
        let values = self.values.iter().zip(&moved).map(|(a, b)| a * b).collect();
        Ok(Self { values, perm })
    }

    pub fn scale(&self, c: &Rational) -> Result<MonomialMatrix> {
        if c.is_zero() {
            return Err(Error::ZeroEntry { index: 0 });
        }
        Ok(Self {
            values: self.values.iter().map(|v| v * c).collect(),
            perm: self.perm.clone(),
        })
    }

    /// `P_q · self · P_qᵀ`.
    pub fn permutation_similar(&self, q: &Permutation) -> Result<MonomialMatrix> {
        let perm = q.compose(&self.perm)?.compose(&q.inverse())?;
        let values = q.apply(&self.values)?;
        Ok(Self { values, perm })
    }

    /// Block-diagonal monomial matrix `K_{y_1} ⊕ … ⊕ K_{y_k}`.
    pub fn block_diagonal(blocks: &[Vec<Rational>]) -> Result<MonomialMatrix> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut map = Vec::with_capacity(n);
        let mut values = Vec::with_capacity(n);
        let mut offset = 0;
        for y in blocks {
            let size = y.len();
            if size == 0 {
                return Err(Error::ZeroOrder);
            }
            map.extend((0..size).map(|l| offset + (l + 1) % size));
            values.extend(y.iter().cloned());
            offset += size;
        }
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Self::new(values, Permutation::from_map_unchecked(map))
    }

    /// Canonical `Qᵀ A Q = ⊕ K_{y_i}` with `Q = P_γ` from
    /// [`Permutation::cycle_decomposition`] and `y = γ⁻¹(x)`.
    pub fn frobenius_normal_form(&self) -> FrobeniusForm {
        let (gamma, sizes) = self.perm.cycle_decomposition();
        let y = gamma
            .inverse()
            .apply(&self.values)
            .expect("gamma has the matrix order");
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut rest = y.as_slice();
        for size in sizes {
            let (head, tail) = rest.split_at(size);
            blocks.push(head.to_vec());
            rest = tail;
        }
        FrobeniusForm { gamma, blocks }
    }

    /// `A^j` through the Frobenius normal form and closed-form block powers.
    pub fn power(&self, j: u64) -> MonomialMatrix {
        if j == 0 {
            return Self::identity(self.order()).expect("order is at least 1");
        }
        let fnf = self.frobenius_normal_form();
        fnf.map_blocks(|y| power_primitive(y, j).expect("blocks have nonzero entries"))
    }
}

/// `K_x^j = α_x^q (∏_{t=0}^{r-1} D_{π^t(x)}) C^r` with `q = ⌊j/n⌋`, `r = j mod n`.
///
/// The nonzero in row `i` sits at column `π^r(i)` and equals `α_x^q ∏_{t<r} x_{π^t(i)}`.
pub fn power_primitive(x: &[Rational], j: u64) -> Result<MonomialMatrix> {
    check_nonzero(x)?;
    let n = x.len();
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let q = j / n as u64;
    let r = (j % n as u64) as usize;
    let scale = rational::pow(&alpha(x), q);
    let values = (0..n)
        .map(|i| (0..r).fold(scale.clone(), |acc, t| acc * &x[(i + t) % n]))
        .collect();
    MonomialMatrix::new(values, Permutation::cyclic_power(n, r)?)
}

/// The result of [`MonomialMatrix::frobenius_normal_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusForm {
    pub gamma: Permutation,
    pub blocks: Vec<Vec<Rational>>,
}

impl FrobeniusForm {
    pub fn order(&self) -> usize {
        self.gamma.order()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// 0-based starting row of each block inside the direct sum.
    pub fn offsets(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, b| {
                let start = *acc;
                *acc += b.len();
                Some(start)
            })
            .collect()
    }

    /// `⊕ K_{y_i}` as a monomial matrix.
    pub fn block_diagonal(&self) -> MonomialMatrix {
        MonomialMatrix::block_diagonal(&self.blocks).expect("blocks are nonempty and nonzero")
    }

    /// `Q (⊕ K_{y_i}) Qᵀ`, the original matrix.
    pub fn reconstruct(&self) -> MonomialMatrix {
        self.block_diagonal()
            .permutation_similar(&self.gamma)
            .expect("gamma has the matrix order")
    }

    /// `Q (⊕ f(y_i)) Qᵀ` where `f(y_i)` must be a monomial matrix with cycle-power
    /// structure of the block's order.
    fn map_blocks(&self, f: impl Fn(&[Rational]) -> MonomialMatrix) -> MonomialMatrix {
        let n = self.order();
        let mut map = Vec::with_capacity(n);
        let mut values = Vec::with_capacity(n);
        for (y, offset) in self.blocks.iter().zip(self.offsets()) {
            let block = f(y);
            map.extend((0..y.len()).map(|l| offset + block.perm.map0(l)));
            values.extend(block.values);
        }
        MonomialMatrix {
            values,
            perm: Permutation::from_map_unchecked(map),
        }
        .permutation_similar(&self.gamma)
        .expect("gamma has the matrix order")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{dense_multiply, dense_power};
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| int(a)).collect()
    }

    fn example_a() -> DenseMatrix {
        DenseMatrix::from_i64_rows(&[&[0, 3, 0, 0], &[0, 0, 5, 0], &[0, 0, 0, 2], &[1, 0, 0, 0]])
            .unwrap()
    }

    #[test]
    fn k_of_layout() {
        let k = MonomialMatrix::k_of(&ints(&[7, 11, 13]))
            .unwrap()
            .to_dense();
        let expected = DenseMatrix::from_i64_rows(&[&[0, 7, 0], &[0, 0, 11], &[13, 0, 0]]).unwrap();
        assert_eq!(k, expected);
        assert_eq!(
            MonomialMatrix::k_of(&ints(&[3, 5, 2, 1]))
                .unwrap()
                .to_dense(),
            example_a()
        );
        assert_eq!(
            MonomialMatrix::k_of(&ints(&[1])).unwrap().to_dense(),
            DenseMatrix::identity(1)
        );
        assert_eq!(
            MonomialMatrix::k_of(&ints(&[1, 0])),
            Err(Error::ZeroEntry { index: 2 })
        );
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&ints(&[3, 5, 2, 1])), int(30));
        assert_eq!(alpha(&ints(&[1, 1, 1])), int(1));
        assert_eq!(alpha(&[int(2), rational::ratio(1, 2)]), int(1));
    }

    #[test]
    fn from_dense_examples() {
        let id = MonomialMatrix::from_dense(&DenseMatrix::identity(3)).unwrap();
        assert_eq!(id, MonomialMatrix::identity(3).unwrap());
        let a = MonomialMatrix::from_dense(&example_a()).unwrap();
        assert_eq!(a.values(), ints(&[3, 5, 2, 1]).as_slice());
        assert_eq!(a.perm(), &Permutation::cyclic(4).unwrap());

        let two = DenseMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap();
        assert!(matches!(
            MonomialMatrix::from_dense(&two),
            Err(Error::NotMonomial { row: 1, .. })
        ));
        let empty_row = DenseMatrix::from_i64_rows(&[&[1, 0], &[0, 0]]).unwrap();
        assert!(matches!(
            MonomialMatrix::from_dense(&empty_row),
            Err(Error::NotMonomial { row: 2, .. })
        ));
        let shared = DenseMatrix::from_i64_rows(&[&[1, 0], &[2, 0]]).unwrap();
        assert!(matches!(
            MonomialMatrix::from_dense(&shared),
            Err(Error::NotMonomial { row: 2, .. })
        ));
        let rect = DenseMatrix::zeros(2, 3);
        assert!(matches!(
            MonomialMatrix::from_dense(&rect),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn to_dense_scalar() {
        let m = MonomialMatrix::new(vec![int(-4)], Permutation::identity(1).unwrap()).unwrap();
        assert_eq!(m.to_dense(), DenseMatrix::scalar(1, &int(-4)));
    }

    #[test]
    fn multiply_examples() {
        let a = MonomialMatrix::k_of(&ints(&[3, 5, 2, 1])).unwrap();
        let id = MonomialMatrix::identity(4).unwrap();
        assert_eq!(a.multiply(&id).unwrap(), a);
        let sq = a.multiply(&a).unwrap();
        assert_eq!(
            sq.to_dense(),
            dense_multiply(&example_a(), &example_a()).unwrap()
        );
        assert_eq!(sq.alpha(), int(900));
    }

    #[test]
    fn fnf_examples() {
        let x = ints(&[3, 5, 2, 1]);
        let fnf = MonomialMatrix::k_of(&x).unwrap().frobenius_normal_form();
        assert!(fnf.gamma.is_identity());
        assert_eq!(fnf.blocks, vec![x]);

        let d = MonomialMatrix::new(ints(&[5]), Permutation::identity(1).unwrap()).unwrap();
        assert_eq!(d.frobenius_normal_form().blocks, vec![ints(&[5])]);

        let a =
            MonomialMatrix::new(ints(&[7, 2, 9]), Permutation::new(&[1, 3, 2]).unwrap()).unwrap();
        let fnf = a.frobenius_normal_form();
        assert_eq!(fnf.blocks, vec![ints(&[7]), ints(&[2, 9])]);
        assert_eq!(fnf.reconstruct(), a);
    }

    #[test]
    fn fnf_conjugation_is_block_diagonal() {
        // σ = (1 4 2)(3 5): γ⁻¹ walks 1,4,2,3,5.
        let a = MonomialMatrix::new(
            ints(&[2, 3, 5, 7, 11]),
            Permutation::new(&[4, 1, 5, 2, 3]).unwrap(),
        )
        .unwrap();
        let fnf = a.frobenius_normal_form();
        assert_eq!(fnf.sizes(), vec![3, 2]);
        assert_eq!(fnf.blocks, vec![ints(&[2, 7, 3]), ints(&[5, 11])]);
        let q = fnf.gamma.to_matrix();
        let conj =
            dense_multiply(&dense_multiply(&q.transpose(), &a.to_dense()).unwrap(), &q).unwrap();
        assert_eq!(conj, fnf.block_diagonal().to_dense());
    }

    #[test]
    fn power_primitive_examples() {
        let x = ints(&[3, 5, 2, 1]);
        assert_eq!(
            power_primitive(&x, 0).unwrap(),
            MonomialMatrix::identity(4).unwrap()
        );
        assert_eq!(
            power_primitive(&x, 4).unwrap().to_dense(),
            DenseMatrix::scalar(4, &int(30))
        );
        let a7 = power_primitive(&x, 7).unwrap();
        assert_eq!(a7.to_dense(), dense_power(&example_a(), 7).unwrap());
        // 30 · D_x D_{π(x)} D_{π²(x)} C³, row 1: 30 · 3·5·2 at column π³(1) = 4.
        assert_eq!(a7.values()[0], int(900));
        assert_eq!(a7.perm().image(1), 4);
        assert!(power_primitive(&ints(&[1, 0]), 3).is_err());
    }

    #[test]
    fn orbit_products_rows() {
        let x = ints(&[3, 5, 2, 1]);
        let rows = orbit_products(&x);
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[4], vec![int(30); 4]);
        for (r, row) in rows.iter().take(4).enumerate() {
            assert_eq!(row, power_primitive(&x, r as u64).unwrap().values());
        }
    }

    #[test]
    fn power_examples() {
        let a = MonomialMatrix::k_of(&ints(&[3, 5, 2, 1])).unwrap();
        assert_eq!(a.power(1), a);
        assert_eq!(a.power(0), MonomialMatrix::identity(4).unwrap());
        assert_eq!(
            a.power(20).to_dense(),
            DenseMatrix::scalar(4, &rational::pow(&int(30), 5))
        );
        assert_eq!(
            a.power(20).to_dense(),
            dense_power(&example_a(), 20).unwrap()
        );
    }
}
