//! Closed-form evaluation of `p(A)` for monomial `A`.
//!
//! For a primitive block `K_x` of order `n`, every power reduces to
//! `K_x^k = α_x^q K_x^r` with `k = qn + r`, so
//!
//! ```text
//! p(K_x) = Σ_{r=0}^{n-1} c_r K_x^r,   c_r = Σ_{k ≡ r (mod n)} a_k α_x^{(k-r)/n}.
//! ```
//!
//! The `c_r` are exact rationals; they coincide with `p_(r,n)(α^{1/n}) / α^{r/n}`
//! without ever forming the root. A general monomial matrix is handled block by
//! block through its Frobenius normal form, using `p(Q B Qᵀ) = Q p(B) Qᵀ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::monomial::{alpha, orbit_products, FrobeniusForm, MonomialMatrix};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Coefficients `c_0..c_{n-1}` with `p(K_x) = Σ c_r K_x^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCoefficients {
    pub c: Vec<Rational>,
}

impl BlockCoefficients {
    pub fn order(&self) -> usize {
        self.c.len()
    }
}

pub fn block_coefficients(p: &Polynomial, x: &[Rational]) -> Result<BlockCoefficients> {
    let n = x.len();
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if let Some(i) = x.iter().position(Zero::is_zero) {
        return Err(Error::ZeroEntry { index: i + 1 });
    }
    let Some(m) = p.degree() else {
        return Ok(BlockCoefficients {
            c: vec![Rational::zero(); n],
        });
    };
    // integer sums over the common denominator L·D^qmax, where α = N/D and
    // L clears the coefficients' denominators; one reduction per c_r
    let a = alpha(x);
    let qmax = m / n;
    let powers = |base: &BigInt| {
        let mut v = Vec::with_capacity(qmax + 1);
        v.push(BigInt::one());
        for q in 1..=qmax {
            let next = &v[q - 1] * base;
            v.push(next);
        }
        v
    };
    let (num_pows, den_pows) = (powers(a.numer()), powers(a.denom()));
    let l = p
        .terms()
        .fold(BigInt::one(), |l, (_, ak)| l.lcm(ak.denom()));
    let mut sums = vec![BigInt::zero(); n];
    for (k, ak) in p.terms() {
        let q = k / n;
        let scaled = ak.numer() * (&l / ak.denom());
        sums[k % n] += scaled * &num_pows[q] * &den_pows[qmax - q];
    }
    let common = l * &den_pows[qmax];
    let c = sums
        .into_iter()
        .map(|s| Rational::new(s, common.clone()))
        .collect();
    Ok(BlockCoefficients { c })
}

/// `p(K_x)` as a dense matrix.
pub fn eval_k(p: &Polynomial, x: &[Rational]) -> Result<DenseMatrix> {
    let coeffs = block_coefficients(p, x)?;
    let n = x.len();
    let prods = orbit_products(x);
    let mut out = DenseMatrix::zeros(n, n);
    for (r, cr) in coeffs.c.iter().enumerate() {
        if cr.is_zero() {
            continue;
        }
        for i in 0..n {
            out[(i, (i + r) % n)] = cr * &prods[r][i];
        }
    }
    Ok(out)
}

/// `p(A)` kept in factored form: the Frobenius normal form of `A` and one
/// coefficient vector per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredEval {
    pub form: FrobeniusForm,
    pub coefficients: Vec<BlockCoefficients>,
}

impl StructuredEval {
    pub fn new(p: &Polynomial, a: &MonomialMatrix) -> Self {
        let form = a.frobenius_normal_form();
        let coefficients = form
            .blocks
            .iter()
            .map(|y| block_coefficients(p, y).expect("monomial blocks are nonzero"))
            .collect();
        Self { form, coefficients }
    }

    /// Materializes `Q (⊕_i Σ_r c_{i,r} K_{y_i}^r) Qᵀ`.
    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.form.order();
        // position b of the direct sum is row γ⁻¹(b) of A
        let walk = self.form.gamma.inverse();
        let mut out = DenseMatrix::zeros(n, n);
        for ((y, coeffs), offset) in self
            .form
            .blocks
            .iter()
            .zip(&self.coefficients)
            .zip(self.form.offsets())
        {
            let s = y.len();
            let prods = orbit_products(y);
            for (r, cr) in coeffs.c.iter().enumerate() {
                if cr.is_zero() {
                    continue;
                }
                for (l, prod) in prods[r].iter().enumerate() {
                    let row = walk.map0(offset + l);
                    let col = walk.map0(offset + (l + r) % s);
                    out[(row, col)] = cr * prod;
                }
            }
        }
        out
    }
}

/// `p(A)` by the closed form, densified.
pub fn eval_monomial(p: &Polynomial, a: &MonomialMatrix) -> DenseMatrix {
    StructuredEval::new(p, a).to_dense()
}
