//! Sparse multivariate polynomials over the Gaussian rationals.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic. Zero coefficients are never stored, so two
//! polynomials are equal exactly when their term maps are equal.
//!
//! The canonical text form lists terms in descending graded-lex order,
//! e.g. `3*z1^2*z2 - 1/2*z3`, and is accepted back by
//! [`crate::parse::parse_polynomial`].

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::PolynomialError;
use crate::linalg::{Matrix, RationalVector};
use crate::scalar::Scalar;

/// Exponent vector of a monomial `z1^e1 * ... * zN^eN`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    pub fn var(dim: usize, j: usize) -> Self {
        let mut m = Self::one(dim);
        m.0[j] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Scalar) -> Self {
        Self::term(Monomial::one(dim), c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Scalar::one())
    }

    /// The coordinate function `z_{j+1}` (0-based `j`).
    pub fn var(dim: usize, j: usize) -> Self {
        Self::term(Monomial::var(dim, j), Scalar::one())
    }

    pub fn term(monomial: Monomial, coeff: Scalar) -> Self {
        let mut p = Polynomial::zero(monomial.dim());
        if !coeff.is_zero() {
            p.terms.insert(monomial, coeff);
        }
        p
    }

    /// Collects `(monomial, coefficient)` pairs, summing repeats.
    /// Panics if a monomial has the wrong length.
    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Polynomial::zero(dim);
        for (m, c) in terms {
            assert_eq!(m.dim(), dim, "monomial length must equal the dimension");
            p.add_term(m, &c);
        }
        p
    }

    /// `Σ v_j z_j`.
    pub fn linear_form(v: &RationalVector) -> Self {
        let dim = v.dim();
        Self::from_terms(
            dim,
            v.coords()
                .iter()
                .enumerate()
                .map(|(j, c)| (Monomial::var(dim, j), c.clone())),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: usize) -> Result<(), PolynomialError> {
        if self.dim == other {
            Ok(())
        } else {
            Err(PolynomialError::DimensionMismatch {
                expected: self.dim,
                found: other,
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolynomialError> {
        self.check_dim(other.dim)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolynomialError> {
        self.check_dim(other.dim)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolynomialError> {
        self.check_dim(other.dim)?;
        let mut out = Polynomial::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.dim);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Complex conjugate of every coefficient.
    pub fn conj(&self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    /// Formal partial derivative `∂/∂z_{j+1}` (0-based `j`).
    pub fn partial_derivative(&self, j: usize) -> Result<Polynomial, PolynomialError> {
        if j >= self.dim {
            return Err(PolynomialError::IndexOutOfRange {
                index: j,
                dim: self.dim,
            });
        }
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in &self.terms {
            let e = m.0[j];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[j] -= 1;
            out.add_term(
                Monomial(exps),
                &c.scale(&BigRational::from_integer(e.into())),
            );
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.dim)
            .map(|j| self.partial_derivative(j).expect("index within dimension"))
            .collect()
    }

    /// `Σ_j ∂²/∂z_j²`.
    pub fn laplacian(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for j in 0..self.dim {
            let d = self
                .partial_derivative(j)
                .and_then(|d| d.partial_derivative(j));
            out = &out + &d.expect("index within dimension");
        }
        out
    }

    /// `z ↦ p(zA)` for row vectors `z`, expanded exactly.
    pub fn compose_linear(&self, a: &Matrix) -> Result<Polynomial, PolynomialError> {
        self.check_dim(a.dim())?;
        let n = self.dim;
        // (zA)_k = Σ_i z_i A_ik
        let images: Vec<Polynomial> = (0..n)
            .map(|k| {
                Polynomial::from_terms(
                    n,
                    (0..n)
                        .filter(|&i| !a.get(i, k).is_zero())
                        .map(|i| (Monomial::var(n, i), Scalar::real(a.get(i, k).clone()))),
                )
            })
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|l| vec![Polynomial::one(n), l.clone()])
            .collect();
        let mut out = Polynomial::zero(n);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(n, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[k];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[k];
                    cache.push(next);
                }
                acc = &acc * &cache[e as usize];
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, &cc);
            }
        }
        Ok(out)
    }

    /// Exact quotient of `self` by the linear form `Σ v_j z_j`.
    ///
    /// Picks the first coordinate `k` with `v_k ≠ 0` and eliminates `z_k`
    /// degree by degree; any remainder free of `z_k` that is left over means
    /// the form does not divide `self`.
    pub fn divide_by_linear_form(&self, v: &RationalVector) -> Result<Polynomial, PolynomialError> {
        self.check_dim(v.dim())?;
        let Some(k) = v.coords().iter().position(|c| !c.is_zero()) else {
            return Err(PolynomialError::ZeroLinearForm);
        };
        let n = self.dim;
        let lead_inv = v[k].inv().expect("nonzero pivot");
        let others: Vec<(usize, Scalar)> = v
            .coords()
            .iter()
            .enumerate()
            .filter(|(j, c)| *j != k && !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();

        // buckets[e] holds the coefficient of z_k^e as a polynomial in the other variables
        let max_e = self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0) as usize;
        let mut buckets: Vec<Polynomial> = vec![Polynomial::zero(n); max_e + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = std::mem::replace(&mut exps[k], 0) as usize;
            buckets[e].add_term(Monomial(exps), c);
        }

        let mut quotient = Polynomial::zero(n);
        for e in (1..=max_e).rev() {
            let q = std::mem::replace(&mut buckets[e], Polynomial::zero(n)).scale(&lead_inv);
            if q.is_zero() {
                continue;
            }
            for (j, vj) in &others {
                let zj = Monomial::var(n, *j);
                for (m, c) in &q.terms {
                    buckets[e - 1].add_term(m.mul(&zj), &-(c * vj));
                }
            }
            let shift = {
                let mut exps = vec![0; n];
                exps[k] = (e - 1) as u32;
                Monomial(exps)
            };
            for (m, c) in q.terms {
                quotient.add_term(m.mul(&shift), &c);
            }
        }
        if buckets[0].is_zero() {
            Ok(quotient)
        } else {
            Err(PolynomialError::NotDivisible {
                form: Polynomial::linear_form(v).to_string(),
            })
        }
    }

    pub fn evaluate(&self, point: &RationalVector) -> Result<Scalar, PolynomialError> {
        self.check_dim(point.dim())?;
        let mut powers: Vec<Vec<Scalar>> = point
            .coords()
            .iter()
            .map(|x| vec![Scalar::one(), x.clone()])
            .collect();
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[k];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &point[k];
                    cache.push(next);
                }
                value = &value * &cache[e as usize];
            }
            total += &value;
        }
        Ok(total)
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.dim))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            dim: self.dim,
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.0.clone(),
                    re: c.re().to_string(),
                    im: c.im().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Polynomial, PolynomialError> {
        let mut p = Polynomial::zero(json.dim);
        for t in &json.terms {
            if t.exp.len() != json.dim {
                return Err(PolynomialError::Json(format!(
                    "exponent vector of length {} in dimension {}",
                    t.exp.len(),
                    json.dim
                )));
            }
            let re = parse_fraction(&t.re).map_err(PolynomialError::Json)?;
            let im = parse_fraction(&t.im).map_err(PolynomialError::Json)?;
            p.add_term(Monomial(t.exp.clone()), &Scalar::new(re, im));
        }
        Ok(p)
    }
}

/// Parses `a`, `-a`, or `a/b` into a rational.
pub fn parse_fraction(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: num_bigint::BigInt = num
        .parse()
        .map_err(|_| format!("invalid fraction {text:?}"))?;
    let den: num_bigint::BigInt = den
        .parse()
        .map_err(|_| format!("invalid fraction {text:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(BigRational::new(num, den))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub dim: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub re: String,
    pub im: String,
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (j, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "z{}", j + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Splits a coefficient into a sign and a magnitude that renders as a factor.
fn sign_split(c: &Scalar) -> (bool, Scalar) {
    if c.is_real() {
        (c.re().is_negative(), Scalar::real(c.re().abs()))
    } else if c.re().is_zero() {
        (
            c.im().is_negative(),
            Scalar::new(BigRational::zero(), c.im().abs()),
        )
    } else {
        (false, c.clone())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let (negative, magnitude) = sign_split(c);
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                magnitude.fmt_factor(f)?;
            } else {
                if !magnitude.is_one() {
                    magnitude.fmt_factor(f)?;
                    f.write_str("*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.dim, self)
    }
}

// Operator forms panic on dimension mismatch; the `checked_*` methods report it.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn z(dim: usize, j: usize) -> Polynomial {
        Polynomial::var(dim, j)
    }

    fn c(dim: usize, s: Scalar) -> Polynomial {
        Polynomial::constant(dim, s)
    }

    #[test]
    fn addition_examples() {
        assert!((&z(1, 0) + &-&z(1, 0)).is_zero());
        let p = &z(2, 0).pow(2) + &z(2, 1);
        let sum = &p + &z(2, 1);
        assert_eq!(sum, &z(2, 0).pow(2) + &z(2, 1).scale(&Scalar::from_int(2)));
        let half = z(1, 0).scale(&Scalar::frac(1, 2));
        let third = z(1, 0).scale(&Scalar::frac(1, 3));
        assert_eq!(&half + &third, z(1, 0).scale(&Scalar::frac(5, 6)));
        assert!(matches!(
            z(1, 0).checked_add(&z(2, 0)),
            Err(PolynomialError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn multiplication_examples() {
        let (a, b) = (z(2, 0), z(2, 1));
        assert_eq!(&(&a - &b) * &(&a + &b), &a.pow(2) - &b.pow(2));
        assert!((&Polynomial::zero(2) * &a).is_zero());
        let iz = a.scale(&Scalar::i());
        assert_eq!(&iz * &iz, -&a.pow(2));
        assert_eq!((&a.pow(3) * &b.pow(2)).degree(), Some(5));
    }

    #[test]
    fn derivative_examples() {
        let z1 = z(2, 0);
        assert_eq!(
            z1.pow(3).partial_derivative(0).unwrap(),
            z1.pow(2).scale(&Scalar::from_int(3))
        );
        assert!(z1.pow(3).partial_derivative(1).unwrap().is_zero());
        let p = &(&z1.pow(2) * &z(2, 1)) + &z1.scale(&Scalar::i());
        let expected = &(&z1 * &z(2, 1)).scale(&Scalar::from_int(2)) + &c(2, Scalar::i());
        assert_eq!(p.partial_derivative(0).unwrap(), expected);
        assert!(matches!(
            p.partial_derivative(2),
            Err(PolynomialError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn gradient_examples() {
        let p = &z(2, 0) * &z(2, 1);
        assert_eq!(p.gradient(), vec![z(2, 1), z(2, 0)]);
        assert!(c(3, Scalar::from_int(7))
            .gradient()
            .iter()
            .all(Polynomial::is_zero));
        let q = &z(2, 0).pow(2) + &z(2, 1).pow(2);
        let two = Scalar::from_int(2);
        assert_eq!(q.gradient(), vec![z(2, 0).scale(&two), z(2, 1).scale(&two)]);
    }

    #[test]
    fn compose_linear_examples() {
        let flip = Matrix::from_int_rows(&[&[-1, 0], &[0, 1]]);
        assert_eq!(z(2, 0).compose_linear(&flip).unwrap(), -&z(2, 0));
        let p = &(&z(2, 0).pow(3) * &z(2, 1)) + &c(2, Scalar::frac(1, 2));
        assert_eq!(p.compose_linear(&Matrix::identity(2)).unwrap(), p);
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            z(2, 0).pow(2).compose_linear(&swap).unwrap(),
            z(2, 1).pow(2)
        );
        // general (non-orthogonal) substitution: z1 -> z1 + 2 z2
        let shear = Matrix::from_int_rows(&[&[1, 0], &[2, 1]]);
        let expected = &z(2, 0) + &z(2, 1).scale(&Scalar::from_int(2));
        assert_eq!(z(2, 0).compose_linear(&shear).unwrap(), expected);
        assert!(z(3, 0).compose_linear(&swap).is_err());
    }

    #[test]
    fn division_examples() {
        let p = &z(2, 0).pow(2) - &z(2, 1).pow(2);
        let v = RationalVector::from_ints(&[1, -1]);
        assert_eq!(p.divide_by_linear_form(&v).unwrap(), &z(2, 0) + &z(2, 1));
        assert!(Polynomial::zero(2)
            .divide_by_linear_form(&v)
            .unwrap()
            .is_zero());
        assert!(matches!(
            z(2, 1).divide_by_linear_form(&RationalVector::from_ints(&[1, 0])),
            Err(PolynomialError::NotDivisible { .. })
        ));
        assert_eq!(
            z(2, 0).divide_by_linear_form(&RationalVector::zeros(2)),
            Err(PolynomialError::ZeroLinearForm)
        );
    }

    #[test]
    fn evaluation_examples() {
        let p = &z(2, 0).pow(2) + &z(2, 1);
        assert_eq!(
            p.evaluate(&RationalVector::from_ints(&[2, 3])).unwrap(),
            Scalar::from_int(7)
        );
        let k = Scalar::gaussian(2, 3, -1, 5);
        assert_eq!(
            c(2, k.clone())
                .evaluate(&RationalVector::from_ints(&[4, 9]))
                .unwrap(),
            k
        );
        let iz = z(2, 0).scale(&Scalar::i());
        let pt = RationalVector::new(vec![Scalar::frac(1, 2), Scalar::zero()]);
        assert_eq!(iz.evaluate(&pt).unwrap(), Scalar::gaussian(0, 1, 1, 2));
    }

    #[test]
    fn homogeneous_component_examples() {
        let p = &z(1, 0).pow(2) + &z(1, 0);
        let comps = p.homogeneous_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&2], z(1, 0).pow(2));
        assert_eq!(comps[&1], z(1, 0));
        assert!(Polynomial::zero(1).homogeneous_components().is_empty());
        let q = &(&z(2, 0) * &z(2, 1)) + &z(2, 0).pow(2);
        let comps = q.homogeneous_components();
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![2]);
        assert!(q.is_homogeneous());
    }

    #[test]
    fn canonical_text() {
        let p = &(&z(3, 0).pow(2) * &z(3, 1)).scale(&Scalar::from_int(3))
            - &z(3, 2).scale(&Scalar::frac(1, 2));
        assert_eq!(p.to_string(), "3*z1^2*z2 - 1/2*z3");
        let q = &(&z(2, 0).scale(&Scalar::gaussian(1, 2, -3, 1)) - &z(2, 1).scale(&Scalar::i()))
            + &c(2, Scalar::from_int(-4));
        assert_eq!(q.to_string(), "(1/2-3*i)*z1 - i*z2 - 4");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!((-&z(1, 0)).to_string(), "-z1");
    }

    #[test]
    fn json_round_trip() {
        let p = &z(2, 0).scale(&Scalar::gaussian(1, 2, -3, 4)) + &c(2, Scalar::from_int(5));
        let json = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"dim":2,"terms":[{"exp":[1,0],"re":"1/2","im":"-3/4"},{"exp":[0,0],"re":"5","im":"0"}]}"#
        );
        let back: PolynomialJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Polynomial::from_json(&back).unwrap(), p);
    }
}
