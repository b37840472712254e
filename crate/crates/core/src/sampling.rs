//! Seeded generators for random polynomials, directions, multiplicities and
//! sample points. Every generator draws from a ChaCha stream, so a
//! `(seed, stream)` pair reproduces the same values on every platform.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::DunklError;
use crate::linalg::RationalVector;
use crate::polynomial::{Monomial, Polynomial};
use crate::rootsystem::{MultiplicityFunction, RootSystem};
use crate::scalar::Scalar;

/// Rejection-sampling cap for points off the reflecting hyperplanes.
pub const MAX_POINT_ATTEMPTS: usize = 1000;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    /// `a/b` with `a ∈ [−9, 9]`, `b ∈ [1, 4]`.
    pub fn small_rational(&mut self) -> Scalar {
        let num = self.rng.gen_range(-9..=9);
        let den = self.rng.gen_range(1..=4);
        Scalar::frac(num, den)
    }

    /// Gaussian rational with small parts; the imaginary part is zero about
    /// a third of the time.
    pub fn gaussian(&mut self) -> Scalar {
        let re = self.small_rational();
        let im = if self.rng.gen_range(0..3) == 0 {
            Scalar::zero()
        } else {
            self.small_rational()
        };
        &re + &(&im * &Scalar::i())
    }

    pub fn nonzero_gaussian(&mut self) -> Scalar {
        loop {
            let c = self.gaussian();
            if !c.is_zero() {
                return c;
            }
        }
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let c = self.small_rational();
            if !c.is_zero() {
                return c;
            }
        }
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn monomial(&mut self, dim: usize, degree: u32) -> Monomial {
        let mut exps = vec![0u32; dim];
        if dim > 0 {
            for _ in 0..degree {
                exps[self.rng.gen_range(0..dim)] += 1;
            }
        }
        Monomial::new(exps)
    }

    /// Between one and `max_terms` terms of degree at most `max_degree`; the
    /// first term always has degree exactly `max_degree`. Never zero.
    pub fn polynomial(&mut self, dim: usize, max_degree: u32, max_terms: usize) -> Polynomial {
        loop {
            let count = self.rng.gen_range(1..=max_terms.max(1));
            let mut terms = Vec::with_capacity(count);
            for k in 0..count {
                let degree = if k == 0 {
                    max_degree
                } else {
                    self.rng.gen_range(0..=max_degree)
                };
                terms.push((self.monomial(dim, degree), self.nonzero_gaussian()));
            }
            let p = Polynomial::from_terms(dim, terms);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A homogeneous polynomial of the given degree.
    pub fn homogeneous(&mut self, dim: usize, degree: u32, max_terms: usize) -> Polynomial {
        loop {
            let count = self.rng.gen_range(1..=max_terms.max(1));
            let terms: Vec<_> = (0..count)
                .map(|_| (self.monomial(dim, degree), self.nonzero_gaussian()))
                .collect();
            let p = Polynomial::from_terms(dim, terms);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A nonzero complex direction.
    pub fn direction(&mut self, dim: usize) -> RationalVector {
        loop {
            let v = RationalVector::new((0..dim).map(|_| self.gaussian()).collect());
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn kappa(&mut self, system: &RootSystem) -> MultiplicityFunction {
        let values = (0..system.orbits().len())
            .map(|_| self.nonzero_gaussian())
            .collect();
        MultiplicityFunction::from_values(system, values)
    }

    /// A real rational point with `⟨z0, v⟩ ≠ 0` for every `v` in `avoid`.
    pub fn admissible_point(
        &mut self,
        dim: usize,
        avoid: &[RationalVector],
    ) -> Result<RationalVector, DunklError> {
        for _ in 0..MAX_POINT_ATTEMPTS {
            let z0 = RationalVector::new((0..dim).map(|_| self.small_rational()).collect());
            if avoid.iter().all(|v| !z0.hermitian(v).is_zero()) {
                return Ok(z0);
            }
        }
        Err(DunklError::SamplingExhausted(MAX_POINT_ATTEMPTS))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed_and_stream() {
        let a = Sampler::new(7, 3).polynomial(3, 5, 4);
        let b = Sampler::new(7, 3).polynomial(3, 5, 4);
        let c = Sampler::new(7, 4).polynomial(3, 5, 4);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.degree(), Some(5));
    }

    #[test]
    fn rationals_within_bounds() {
        let mut s = Sampler::new(1, 0);
        for _ in 0..200 {
            let x = s.small_rational();
            assert!(x.is_real());
            assert!(x.re().denom() <= &4.into());
            let abs = num_traits::Signed::abs(x.re());
            assert!(abs <= num_rational::BigRational::from_integer(9.into()));
        }
    }

    #[test]
    fn points_avoid_hyperplanes() {
        let b2 = RootSystem::from_name("B2").unwrap();
        let mut s = Sampler::new(11, 0);
        for _ in 0..50 {
            let z0 = s.admissible_point(2, b2.positive_roots()).unwrap();
            assert!(b2
                .positive_roots()
                .iter()
                .all(|v| !z0.hermitian(v).is_zero()));
        }
        // the zero vector is orthogonal to every point
        assert!(matches!(
            s.admissible_point(1, &[RationalVector::from_ints(&[0])]),
            Err(DunklError::SamplingExhausted(MAX_POINT_ATTEMPTS))
        ));
    }
}
