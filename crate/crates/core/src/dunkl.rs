//! Difference quotients, Dunkl operators and checkers for their identities.
//!
//! All operators act on exact polynomials. Identities whose individual terms
//! are rational functions are checked by exact evaluation at points off every
//! reflecting hyperplane.
//!
//! Direction vectors `u, t` may be complex. Pairings with them are Hermitian,
//! `⟨a, u⟩ = Σ a_j · conj(u_j)`, so `𝒟_u = Σ_j conj(u_j) 𝒟_j`. Roots stay
//! real, which keeps `⟨z, v⟩` a polynomial in `z`.

use crate::error::DunklError;
use crate::linalg::RationalVector;
use crate::polynomial::Polynomial;
use crate::rootsystem::{reflection_matrix, GroupElement, MultiplicityFunction, RootSystem};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
struct PositiveRoot {
    root: RationalVector,
    sigma: GroupElement,
    kappa: Scalar,
}

/// A root system together with a multiplicity function on it.
#[derive(Clone, Debug)]
pub struct DunklContext {
    system: RootSystem,
    kappa: MultiplicityFunction,
    positive: Vec<PositiveRoot>,
}

fn check_dim(expected: usize, found: usize) -> Result<(), DunklError> {
    if expected == found {
        Ok(())
    } else {
        Err(crate::error::PolynomialError::DimensionMismatch { expected, found }.into())
    }
}

fn check_real_root(v: &RationalVector) -> Result<(), DunklError> {
    if v.is_real() && !v.is_zero() {
        Ok(())
    } else {
        Err(DunklError::InvalidRoot(v.to_string()))
    }
}

/// `ρ_v p = (p(z) − p(zσ_v)) / ⟨z, v⟩`, computed by exact division.
pub fn rho(p: &Polynomial, v: &RationalVector) -> Result<Polynomial, DunklError> {
    check_real_root(v)?;
    check_dim(p.dim(), v.dim())?;
    let sigma = reflection_matrix(v)?;
    rho_with(p, v, &sigma)
}

fn rho_with(
    p: &Polynomial,
    v: &RationalVector,
    sigma: &GroupElement,
) -> Result<Polynomial, DunklError> {
    let numerator = p - &p.compose_linear(sigma.matrix())?;
    Ok(numerator.divide_by_linear_form(v)?)
}

/// `⟨∇p, u⟩ = Σ_j conj(u_j) ∂_j p`.
pub fn directional_derivative(
    p: &Polynomial,
    u: &RationalVector,
) -> Result<Polynomial, DunklError> {
    check_dim(p.dim(), u.dim())?;
    let mut out = Polynomial::zero(p.dim());
    for (j, uj) in u.coords().iter().enumerate() {
        if !uj.is_zero() {
            out = &out + &p.partial_derivative(j)?.scale(&uj.conj());
        }
    }
    Ok(out)
}

/// `B(v, s) = ⟨v, t⟩⟨s, u⟩ − ⟨v, u⟩⟨s, t⟩` with Hermitian pairings.
pub fn bilinear_form_b(
    t: &RationalVector,
    u: &RationalVector,
    v: &RationalVector,
    s: &RationalVector,
) -> Result<Scalar, DunklError> {
    let n = t.dim();
    for w in [u, v, s] {
        check_dim(n, w.dim())?;
    }
    Ok(&(&v.hermitian(t) * &s.hermitian(u)) - &(&v.hermitian(u) * &s.hermitian(t)))
}

/// Which denominator multiplies the right-hand side of the commutator identity
/// `[⟨∇,u⟩, ρ_v] f = (⟨v,u⟩ / D) (2⟨∇f(zσ_v), v⟩/⟨v,v⟩ − ρ_v f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommutatorDenominator {
    /// `D = ⟨z, v⟩`; this is the form that holds.
    RootPairing,
    /// `D = ⟨z, u⟩`; kept so the failing variant can be demonstrated.
    DirectionPairing,
}

/// Weight `w` of the difference term in the expanded Dunkl Laplacian
/// `Δ_h f = Δf + 2 Σ κ_v ⟨∇f, v⟩/⟨z,v⟩ − w Σ κ_v |v|² (f − f∘σ_v)/⟨z,v⟩²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferenceWeight {
    /// `w = 1`; this is the form that holds.
    One,
    /// `w = 2`; kept so the failing variant can be demonstrated.
    Two,
}

impl DunklContext {
    pub fn new(system: RootSystem, kappa: MultiplicityFunction) -> Result<Self, DunklError> {
        if *kappa.orbits() != system.orbits() {
            return Err(DunklError::MultiplicityMismatch);
        }
        let positive = system
            .positive_roots()
            .iter()
            .zip(system.reflections())
            .map(|(root, sigma)| PositiveRoot {
                kappa: kappa
                    .value_for(root)
                    .expect("orbit decomposition covers every root")
                    .clone(),
                root: root.clone(),
                sigma,
            })
            .collect();
        Ok(DunklContext {
            system,
            kappa,
            positive,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn kappa(&self) -> &MultiplicityFunction {
        &self.kappa
    }

    pub fn dim(&self) -> usize {
        self.system.dim()
    }

    fn check_poly(&self, p: &Polynomial) -> Result<(), DunklError> {
        check_dim(self.dim(), p.dim())
    }

    fn check_vector(&self, v: &RationalVector) -> Result<(), DunklError> {
        check_dim(self.dim(), v.dim())
    }

    /// `𝒟_j p = ∂_j p + Σ_{v∈R₊} κ_v v_j ρ_v p` for the 0-based coordinate `j`.
    pub fn dunkl_j(&self, p: &Polynomial, j: usize) -> Result<Polynomial, DunklError> {
        self.check_poly(p)?;
        let mut out = p.partial_derivative(j)?;
        for r in &self.positive {
            let weight = &r.kappa * &r.root[j];
            if weight.is_zero() {
                continue;
            }
            out = &out + &rho_with(p, &r.root, &r.sigma)?.scale(&weight);
        }
        Ok(out)
    }

    /// The real operator `𝒯_j`: the same formula as [`Self::dunkl_j`], read on
    /// real polynomials.
    pub fn real_dunkl_j(&self, p: &Polynomial, j: usize) -> Result<Polynomial, DunklError> {
        self.dunkl_j(p, j)
    }

    /// `𝒟_u p = ⟨∇p, u⟩ + Σ_{v∈R₊} κ_v ⟨v, u⟩ ρ_v p`.
    pub fn dunkl_dir(&self, p: &Polynomial, u: &RationalVector) -> Result<Polynomial, DunklError> {
        self.check_poly(p)?;
        self.check_vector(u)?;
        let mut out = directional_derivative(p, u)?;
        for r in &self.positive {
            let weight = &r.kappa * &r.root.hermitian(u);
            if weight.is_zero() {
                continue;
            }
            out = &out + &rho_with(p, &r.root, &r.sigma)?.scale(&weight);
        }
        Ok(out)
    }

    /// `Δ_h = 𝒟_1² + ⋯ + 𝒟_N²`.
    pub fn dunkl_laplacian(&self, p: &Polynomial) -> Result<Polynomial, DunklError> {
        self.check_poly(p)?;
        let mut out = Polynomial::zero(self.dim());
        for j in 0..self.dim() {
            out = &out + &self.dunkl_j(&self.dunkl_j(p, j)?, j)?;
        }
        Ok(out)
    }

    /// `𝒟_t 𝒟_u p − 𝒟_u 𝒟_t p`, with `𝒟_u` applied first in the first term.
    pub fn commutator(
        &self,
        p: &Polynomial,
        t: &RationalVector,
        u: &RationalVector,
    ) -> Result<Polynomial, DunklError> {
        let tu = self.dunkl_dir(&self.dunkl_dir(p, u)?, t)?;
        let ut = self.dunkl_dir(&self.dunkl_dir(p, t)?, u)?;
        Ok(&tu - &ut)
    }

    /// `𝓡(g)⁻¹ 𝒟_u 𝓡(g) p − 𝒟_{ug} p`, where `𝓡(g)p(z) = p(zg)`.
    pub fn equivariance_defect(
        &self,
        p: &Polynomial,
        u: &RationalVector,
        g: &GroupElement,
    ) -> Result<Polynomial, DunklError> {
        self.check_poly(p)?;
        self.check_vector(u)?;
        check_dim(self.dim(), g.dim())?;
        let conjugated = self
            .dunkl_dir(&p.compose_linear(g.matrix())?, u)?
            .compose_linear(g.inverse().matrix())?;
        let ug = u.mul_matrix(g.matrix());
        Ok(&conjugated - &self.dunkl_dir(p, &ug)?)
    }

    /// `Σ_{v,s∈R₊} κ_v κ_s B(v, s) ρ_v ρ_s p`, with `ρ_s` applied first.
    pub fn double_sum_defect(
        &self,
        p: &Polynomial,
        t: &RationalVector,
        u: &RationalVector,
    ) -> Result<Polynomial, DunklError> {
        self.check_poly(p)?;
        self.check_vector(t)?;
        self.check_vector(u)?;
        let inner: Vec<Polynomial> = self
            .positive
            .iter()
            .map(|s| rho_with(p, &s.root, &s.sigma))
            .collect::<Result<_, _>>()?;
        let mut out = Polynomial::zero(self.dim());
        for v in &self.positive {
            for (s, rho_s) in self.positive.iter().zip(&inner) {
                let weight = &(&v.kappa * &s.kappa) * &bilinear_form_b(t, u, &v.root, &s.root)?;
                if weight.is_zero() || rho_s.is_zero() {
                    continue;
                }
                out = &out + &rho_with(rho_s, &v.root, &v.sigma)?.scale(&weight);
            }
        }
        Ok(out)
    }

    /// Left minus right side of
    /// `⟨∇,u⟩ρ_v f − ρ_v⟨∇,u⟩f = (⟨v,u⟩/D)(2⟨∇f(zσ_v), v⟩/⟨v,v⟩ − (f(z) − f(zσ_v))/⟨z,v⟩)`
    /// evaluated exactly at `z0`.
    pub fn gradient_commutator_defect_at(
        &self,
        f: &Polynomial,
        u: &RationalVector,
        v: &RationalVector,
        z0: &RationalVector,
        denominator: CommutatorDenominator,
    ) -> Result<Scalar, DunklError> {
        self.check_poly(f)?;
        self.check_vector(u)?;
        self.check_vector(v)?;
        self.check_vector(z0)?;
        check_real_root(v)?;
        let zv = z0.hermitian(v);
        if zv.is_zero() {
            return Err(DunklError::PointOnHyperplane {
                point: z0.to_string(),
                root: v.to_string(),
            });
        }
        let outer = match denominator {
            CommutatorDenominator::RootPairing => zv.clone(),
            CommutatorDenominator::DirectionPairing => {
                let zu = z0.hermitian(u);
                if zu.is_zero() {
                    return Err(DunklError::PointOnHyperplane {
                        point: z0.to_string(),
                        root: u.to_string(),
                    });
                }
                zu
            }
        };
        let sigma = reflection_matrix(v)?;

        let lhs = &directional_derivative(&rho_with(f, v, &sigma)?, u)?
            - &rho_with(&directional_derivative(f, u)?, v, &sigma)?;
        let lhs = lhs.evaluate(z0)?;

        let z_sigma = z0.mul_matrix(sigma.matrix());
        let grad_at_reflected: Vec<Scalar> = f
            .gradient()
            .iter()
            .map(|g| g.evaluate(&z_sigma))
            .collect::<Result<_, _>>()?;
        let grad_v = RationalVector::new(grad_at_reflected).hermitian(v);
        let difference = &(&f.evaluate(z0)? - &f.evaluate(&z_sigma)?) / &zv;
        let bracket = &(&(&grad_v * &Scalar::from_int(2)) / &v.norm_squared()) - &difference;
        let rhs = &(&v.hermitian(u) / &outer) * &bracket;
        Ok(&lhs - &rhs)
    }

    /// `Δ_h f(z0)` minus the expanded right-hand side at `z0`.
    pub fn laplacian_formula_defect_at(
        &self,
        f: &Polynomial,
        z0: &RationalVector,
        weight: DifferenceWeight,
    ) -> Result<Scalar, DunklError> {
        self.check_poly(f)?;
        self.check_vector(z0)?;
        for r in &self.positive {
            if z0.hermitian(&r.root).is_zero() {
                return Err(DunklError::PointOnHyperplane {
                    point: z0.to_string(),
                    root: r.root.to_string(),
                });
            }
        }
        let lhs = self.dunkl_laplacian(f)?.evaluate(z0)?;

        let grad: Vec<Scalar> = f
            .gradient()
            .iter()
            .map(|g| g.evaluate(z0))
            .collect::<Result<_, _>>()?;
        let grad = RationalVector::new(grad);
        let f_z = f.evaluate(z0)?;
        let w = match weight {
            DifferenceWeight::One => Scalar::from_int(1),
            DifferenceWeight::Two => Scalar::from_int(2),
        };
        let two = Scalar::from_int(2);
        let mut rhs = f.laplacian().evaluate(z0)?;
        for r in &self.positive {
            let zv = z0.hermitian(&r.root);
            let gradient_term = &(&two * &r.kappa) * &(&grad.hermitian(&r.root) / &zv);
            let f_sigma = f.evaluate(&z0.mul_matrix(r.sigma.matrix()))?;
            let difference_term =
                &(&(&w * &r.kappa) * &r.root.norm_squared()) * &(&(&f_z - &f_sigma) / &(&zv * &zv));
            rhs = &(&rhs + &gradient_term) - &difference_term;
        }
        Ok(&lhs - &rhs)
    }
}
