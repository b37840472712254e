//! Row vectors over the Gaussian rationals and square rational matrices.
//!
//! Vectors act on matrices from the left (`x ↦ xA`), matching the row-vector
//! convention used for reflections and the regular representation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalVector(Vec<Scalar>);

impl RationalVector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        RationalVector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        RationalVector(vec![Scalar::zero(); dim])
    }

    /// The `j`-th standard basis vector (0-based).
    pub fn unit(dim: usize, j: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[j] = Scalar::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(Scalar::is_real)
    }

    /// Hermitian pairing `⟨self, other⟩ = Σ self_j · conj(other_j)`.
    pub fn hermitian(&self, other: &RationalVector) -> Scalar {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * &b.conj())
            .sum()
    }

    /// Bilinear pairing `(self, other) = Σ self_j · other_j`.
    pub fn bilinear(&self, other: &RationalVector) -> Scalar {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_squared(&self) -> Scalar {
        self.hermitian(self)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        RationalVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> Self {
        RationalVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &RationalVector) -> Self {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RationalVector) -> Self {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn conj(&self) -> Self {
        RationalVector(self.0.iter().map(Scalar::conj).collect())
    }

    /// Row vector times matrix, `(xA)_k = Σ_i x_i A_ik`.
    pub fn mul_matrix(&self, a: &Matrix) -> Self {
        assert_eq!(self.dim(), a.dim(), "vector/matrix dimension mismatch");
        let n = a.dim();
        let coords = (0..n)
            .map(|k| {
                (0..n)
                    .filter(|&i| !a.get(i, k).is_zero())
                    .map(|i| self.0[i].scale(a.get(i, k)))
                    .sum()
            })
            .collect();
        RationalVector(coords)
    }

    /// `true` when every coordinate is a rational multiple of the matching
    /// coordinate of `other` with one common factor.
    pub fn is_parallel_to(&self, other: &RationalVector) -> bool {
        let Some(k) = other.0.iter().position(|c| !c.is_zero()) else {
            return self.is_zero();
        };
        let factor = &self.0[k] / &other.0[k];
        self.0.iter().zip(&other.0).all(|(a, b)| *a == b * &factor)
    }
}

impl Index<usize> for RationalVector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Graded-lexicographic comparison of real vectors: coordinate sum first,
/// then lexicographic on the coordinates.
pub fn grlex_cmp(a: &RationalVector, b: &RationalVector) -> Ordering {
    let sum = |v: &RationalVector| {
        v.coords()
            .iter()
            .map(|c| c.re().clone())
            .sum::<BigRational>()
    };
    sum(a).cmp(&sum(b)).then_with(|| {
        a.coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| x.re().cmp(y.re()))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Square matrix with rational entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigRational::one();
        }
        Matrix { n, entries }
    }

    /// Builds a matrix from rows; panics if the rows are ragged or not square.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        Matrix { n, entries }
    }

    pub fn mul(&self, rhs: &Matrix) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Matrix { n, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self).is_identity()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.n.max(1))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn first_nonzero_is_positive(v: &RationalVector) -> bool {
    v.coords()
        .iter()
        .find(|c| !c.re().is_zero())
        .is_some_and(|c| c.re().is_positive())
}
