//! Rational root systems, their reflections, orbits, reflection groups and
//! multiplicity functions.
//!
//! Roots are real vectors with rational coordinates. The positive subsystem
//! is always the lexicographic one: a root is positive when its first nonzero
//! coordinate is positive.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::RootSystemError;
use crate::linalg::{first_nonzero_is_positive, grlex_cmp, Matrix, RationalVector};
use crate::polynomial::parse_fraction;
use crate::scalar::Scalar;

/// Default cap on group closure, large enough for B6 (46080 elements).
pub const DEFAULT_MAX_ORDER: usize = 200_000;

const MAX_CATALOG_RANK: usize = 12;

/// An orthogonal matrix with rational entries acting on row vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(Matrix);

impl GroupElement {
    pub fn new(matrix: Matrix) -> Result<Self, RootSystemError> {
        if matrix.is_orthogonal() {
            Ok(GroupElement(matrix))
        } else {
            Err(RootSystemError::NotOrthogonal)
        }
    }

    pub fn identity(dim: usize) -> Self {
        GroupElement(Matrix::identity(dim))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// The inverse of an orthogonal matrix is its transpose.
    pub fn inverse(&self) -> Self {
        GroupElement(self.0.transpose())
    }

    /// Matrix product `self · rhs`; on row vectors this applies `self` first.
    pub fn then(&self, rhs: &GroupElement) -> Self {
        GroupElement(self.0.mul(&rhs.0))
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

fn real_norm_squared(v: &RationalVector) -> BigRational {
    v.coords().iter().map(|c| c.re() * c.re()).sum()
}

/// `(σ_v)_ij = δ_ij − 2 v_i v_j / ‖v‖²`.
pub fn reflection_matrix(v: &RationalVector) -> Result<GroupElement, RootSystemError> {
    if !v.is_real() {
        return Err(RootSystemError::NonReal(v.to_string()));
    }
    if v.is_zero() {
        return Err(RootSystemError::ZeroVector);
    }
    let n = v.dim();
    let two_over_norm = BigRational::from_integer(2.into()) / real_norm_squared(v);
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let delta = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    delta - v[i].re() * v[j].re() * &two_over_norm
                })
                .collect()
        })
        .collect();
    Ok(GroupElement(Matrix::from_rows(rows)))
}

/// Reflects `x` in the hyperplane orthogonal to the real vector `v`.
fn reflect(x: &RationalVector, v: &RationalVector) -> RationalVector {
    let factor = x
        .bilinear(v)
        .scale(&(BigRational::from_integer(2.into()) / real_norm_squared(v)));
    x.sub(&v.scale(&factor))
}

/// Row-vector action `x ↦ xg`.
pub fn apply_group_element(
    x: &RationalVector,
    g: &GroupElement,
) -> Result<RationalVector, RootSystemError> {
    if x.dim() != g.dim() {
        return Err(RootSystemError::VectorDimension {
            expected: g.dim(),
            found: x.dim(),
        });
    }
    Ok(x.mul_matrix(g.matrix()))
}

/// Lexicographic positive subsystem: roots whose first nonzero coordinate is
/// positive.
pub fn positive_subsystem(roots: &[RationalVector]) -> Vec<RationalVector> {
    roots
        .iter()
        .filter(|r| first_nonzero_is_positive(r))
        .cloned()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

#[derive(Clone, PartialEq, Eq)]
pub struct RootSystem {
    dim: usize,
    roots: Vec<RationalVector>,
    positive: Vec<RationalVector>,
    name: Option<String>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("roots", &self.roots)
            .finish()
    }
}

impl RootSystem {
    /// Validates the root-system axioms exactly and fixes the lexicographic
    /// positive subsystem. Duplicate vectors are merged.
    pub fn new(roots: Vec<RationalVector>) -> Result<Self, RootSystemError> {
        let first = roots.first().ok_or(RootSystemError::Empty)?;
        let dim = first.dim();
        for r in &roots {
            if r.dim() != dim {
                return Err(RootSystemError::DimensionMismatch {
                    root: r.to_string(),
                    expected: dim,
                    found: r.dim(),
                });
            }
            if !r.is_real() {
                return Err(RootSystemError::NonReal(r.to_string()));
            }
            if r.is_zero() {
                return Err(RootSystemError::ContainsZero);
            }
        }
        let mut sorted = roots;
        sorted.sort_by(grlex_cmp);
        sorted.dedup();
        let set: HashSet<&RationalVector> = sorted.iter().collect();

        for r in &sorted {
            if !set.contains(&r.neg()) {
                return Err(RootSystemError::MissingNegative(r.to_string()));
            }
        }
        for (a, r) in sorted.iter().enumerate() {
            let neg = r.neg();
            if sorted
                .iter()
                .enumerate()
                .any(|(b, w)| a != b && *w != neg && w.is_parallel_to(r))
            {
                return Err(RootSystemError::LineConditionViolated(r.to_string()));
            }
        }
        for u in &sorted {
            for v in &sorted {
                if !set.contains(&reflect(v, u)) {
                    return Err(RootSystemError::NotClosedUnderReflection {
                        u: u.to_string(),
                        v: v.to_string(),
                    });
                }
            }
        }
        let positive = positive_subsystem(&sorted);
        Ok(RootSystem {
            dim,
            roots: sorted,
            positive,
            name: None,
        })
    }

    pub fn catalog(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let name = format!("{family:?}{rank}");
        let min_rank = if family == Family::A { 1 } else { 2 };
        if rank < min_rank || rank > MAX_CATALOG_RANK {
            return Err(RootSystemError::UnsupportedCatalog(name));
        }
        let n = if family == Family::A { rank + 1 } else { rank };
        let e = |i: usize| RationalVector::unit(n, i);
        let mut roots = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                roots.push(e(i).sub(&e(j)));
                if family != Family::A && i < j {
                    roots.push(e(i).add(&e(j)));
                    roots.push(e(i).add(&e(j)).neg());
                }
            }
            match family {
                Family::B => {
                    roots.push(e(i));
                    roots.push(e(i).neg());
                }
                Family::C => {
                    roots.push(e(i).scale(&Scalar::from_int(2)));
                    roots.push(e(i).scale(&Scalar::from_int(-2)));
                }
                Family::A | Family::D => {}
            }
        }
        let mut system = RootSystem::new(roots)?;
        system.name = Some(name);
        Ok(system)
    }

    /// Catalog lookup by name: `A1dim1` (the rank-one system `{±1}` in ℝ¹),
    /// or a family letter followed by the rank, e.g. `A2`, `B3`, `D4`.
    pub fn from_name(name: &str) -> Result<Self, RootSystemError> {
        if name == "A1dim1" {
            let mut system = RootSystem::new(vec![
                RationalVector::from_ints(&[1]),
                RationalVector::from_ints(&[-1]),
            ])?;
            system.name = Some(name.to_string());
            return Ok(system);
        }
        let unsupported = || RootSystemError::UnsupportedCatalog(name.to_string());
        let mut chars = name.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(unsupported()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        Self::catalog(family, rank)
    }

    pub fn from_json(json: &RootSystemJson) -> Result<Self, RootSystemError> {
        let mut roots = Vec::with_capacity(json.roots.len());
        for coords in &json.roots {
            if coords.len() != json.dim {
                return Err(RootSystemError::DimensionMismatch {
                    root: format!("{coords:?}"),
                    expected: json.dim,
                    found: coords.len(),
                });
            }
            let parsed = coords
                .iter()
                .map(|c| parse_fraction(c).map(Scalar::real))
                .collect::<Result<Vec<_>, _>>()
                .map_err(RootSystemError::Json)?;
            roots.push(RationalVector::new(parsed));
        }
        RootSystem::new(roots)
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            dim: self.dim,
            roots: self
                .roots
                .iter()
                .map(|r| r.coords().iter().map(|c| c.re().to_string()).collect())
                .collect(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All roots in ascending graded-lex order.
    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RationalVector] {
        &self.positive
    }

    /// One reflection per positive root, in the order of [`Self::positive_roots`].
    pub fn reflections(&self) -> Vec<GroupElement> {
        self.positive
            .iter()
            .map(|v| reflection_matrix(v).expect("roots are nonzero and real"))
            .collect()
    }

    /// Closes the root set under all reflections `σ_v`; never builds the group.
    pub fn orbits(&self) -> OrbitDecomposition {
        let index: HashMap<&RationalVector, usize> =
            self.roots.iter().enumerate().map(|(k, r)| (r, k)).collect();
        let mut assigned = vec![usize::MAX; self.roots.len()];
        let mut orbits = Vec::new();
        for start in 0..self.roots.len() {
            if assigned[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            assigned[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(k) = queue.pop_front() {
                for v in &self.positive {
                    let image = index[&reflect(&self.roots[k], v)];
                    if assigned[image] == usize::MAX {
                        assigned[image] = id;
                        members.push(image);
                        queue.push_back(image);
                    }
                }
            }
            members.sort_unstable();
            let roots: Vec<RationalVector> =
                members.into_iter().map(|k| self.roots[k].clone()).collect();
            let label = roots
                .iter()
                .filter(|r| first_nonzero_is_positive(r))
                .min_by(|a, b| grlex_cmp(a, b))
                .expect("every orbit contains a positive root")
                .clone();
            orbits.push(Orbit {
                label,
                roots,
                aliases: Vec::new(),
            });
        }
        orbits.sort_by(|a, b| grlex_cmp(&a.label, &b.label));
        assign_aliases(&mut orbits);
        OrbitDecomposition { orbits }
    }

    /// Breadth-first closure of the reflections under multiplication.
    /// The identity comes first; element order is deterministic.
    pub fn generate_group(&self, max_order: usize) -> Result<Vec<GroupElement>, RootSystemError> {
        let generators = self.reflections();
        let identity = GroupElement::identity(self.dim);
        let mut seen: HashSet<GroupElement> = HashSet::from([identity.clone()]);
        let mut elements = vec![identity];
        let mut cursor = 0;
        if elements.len() > max_order {
            return Err(RootSystemError::OrderCapExceeded(max_order));
        }
        while cursor < elements.len() {
            let current = elements[cursor].clone();
            cursor += 1;
            for s in &generators {
                let next = current.then(s);
                if seen.insert(next.clone()) {
                    elements.push(next);
                    if elements.len() > max_order {
                        return Err(RootSystemError::OrderCapExceeded(max_order));
                    }
                }
            }
        }
        Ok(elements)
    }

    /// Every product `σ_{a1} σ_{a2} ⋯ σ_{ak}` of `k ≤ max_len` positive-root
    /// reflections, as `(word, element)` pairs; repeats are kept.
    pub fn generator_words(&self, max_len: usize) -> Vec<(Vec<usize>, GroupElement)> {
        let generators = self.reflections();
        let mut layer = vec![(Vec::new(), GroupElement::identity(self.dim))];
        let mut out = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * generators.len());
            for (word, g) in &layer {
                for (k, s) in generators.iter().enumerate() {
                    let mut w = word.clone();
                    w.push(k);
                    next.push((w, g.then(s)));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

fn assign_aliases(orbits: &mut [Orbit]) {
    if orbits.len() == 1 {
        orbits[0].aliases.push("all".to_string());
        return;
    }
    if orbits.len() == 2 {
        let n0 = real_norm_squared(&orbits[0].label);
        let n1 = real_norm_squared(&orbits[1].label);
        if n0 != n1 {
            let (short, long) = if n0 < n1 { (0, 1) } else { (1, 0) };
            orbits[short].aliases.push("short".to_string());
            orbits[long].aliases.push("long".to_string());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub dim: usize,
    pub roots: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    label: RationalVector,
    roots: Vec<RationalVector>,
    aliases: Vec<String>,
}

impl Orbit {
    /// Graded-lex-smallest positive root of the orbit.
    pub fn label(&self) -> &RationalVector {
        &self.label
    }

    pub fn label_string(&self) -> String {
        self.label.to_string()
    }

    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    pub fn aliases(&self) -> &[String] {
        &self.aliases
    }

    pub fn answers_to(&self, name: &str) -> bool {
        self.label_string() == name || self.aliases.iter().any(|a| a == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    orbits: Vec<Orbit>,
}

impl OrbitDecomposition {
    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit_of(&self, root: &RationalVector) -> Option<usize> {
        self.orbits.iter().position(|o| o.roots.contains(root))
    }

    pub fn resolve(&self, name: &str) -> Option<usize> {
        self.orbits.iter().position(|o| o.answers_to(name))
    }
}

/// A `G`-invariant multiplicity function: one value per orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityFunction {
    orbits: OrbitDecomposition,
    values: Vec<Scalar>,
}

impl MultiplicityFunction {
    /// Builds κ from `(orbit label or alias, value)` pairs covering every
    /// orbit exactly once.
    pub fn from_orbit_values<S: AsRef<str>>(
        system: &RootSystem,
        assignments: &[(S, Scalar)],
    ) -> Result<Self, RootSystemError> {
        let orbits = system.orbits();
        let mut values: Vec<Option<Scalar>> = vec![None; orbits.len()];
        for (name, value) in assignments {
            let name = name.as_ref();
            let k = orbits
                .resolve(name)
                .ok_or_else(|| RootSystemError::UnknownOrbitLabel(name.to_string()))?;
            if values[k].replace(value.clone()).is_some() {
                return Err(RootSystemError::DuplicateOrbit(
                    orbits.orbits[k].label_string(),
                ));
            }
        }
        let values = values
            .into_iter()
            .zip(&orbits.orbits)
            .map(|(v, o)| v.ok_or_else(|| RootSystemError::MissingOrbit(o.label_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiplicityFunction { orbits, values })
    }

    /// Assigns the values orbit by orbit, in the order of [`RootSystem::orbits`].
    /// Panics if the count does not match.
    pub fn from_values(system: &RootSystem, values: Vec<Scalar>) -> Self {
        let orbits = system.orbits();
        assert_eq!(
            orbits.len(),
            values.len(),
            "one multiplicity value per orbit"
        );
        MultiplicityFunction { orbits, values }
    }

    pub fn constant(system: &RootSystem, value: Scalar) -> Self {
        let orbits = system.orbits();
        let values = vec![value; orbits.len()];
        MultiplicityFunction { orbits, values }
    }

    pub fn orbits(&self) -> &OrbitDecomposition {
        &self.orbits
    }

    /// κ_v for a root `v`; `None` if `v` is not a root.
    pub fn value_for(&self, root: &RationalVector) -> Option<&Scalar> {
        self.orbits.orbit_of(root).map(|k| &self.values[k])
    }

    /// `(orbit label, value)` in orbit order.
    pub fn entries(&self) -> BTreeMap<String, Scalar> {
        self.orbits
            .orbits
            .iter()
            .map(|o| o.label_string())
            .zip(self.values.iter().cloned())
            .collect()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}
