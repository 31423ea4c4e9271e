//! The cone of cross sections, per-class stretch factors and orientability,
//! and the Newton polytope description of the cone.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::invariants::InvariantBundle;
use crate::laurent::{CohomClass, GroupElement, LaurentPoly, LaurentPoly1V};
use crate::orientation::OrientabilityKind;
use crate::roots::roots;
use crate::upoly::IntPoly;

/// Roots whose moduli are closer than this at the extremum are treated as
/// ambiguous.
pub const SEPARATION_GUARD: f64 = 1e-10;
const REALITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeOfSections {
    pub rank: usize,
    /// Exponents of `supp(m′) ∖ {0}`; each gives a strict inequality.
    pub support_vectors: Vec<Vec<i64>>,
    /// Primitive extreme rays of the closure; computed in rank 2 only.
    pub rays: Option<Vec<Vec<i64>>>,
}

fn dot(u: &[i64], s: &[i64]) -> i64 {
    u.iter().zip(s).map(|(a, b)| a * b).sum()
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g <= 1 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

fn cross(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Boundary rays of `{u : u·s ≥ 0}` in the plane. The support vectors lie in
/// an open half-plane, so the angular order is total and has two extremes.
fn planar_rays(support: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut lo = &support[0];
    let mut hi = &support[0];
    for s in support {
        if cross(s, lo) > 0 {
            lo = s;
        }
        if cross(hi, s) > 0 {
            hi = s;
        }
    }
    // Perpendicular to one extreme, on the side of the other.
    let perp = |s: &Vec<i64>, other: &Vec<i64>| -> Vec<Vec<i64>> {
        let r = vec![s[1], -s[0]];
        match dot(&r, other).signum() {
            1 => vec![primitive(r)],
            -1 => vec![primitive(vec![-r[0], -r[1]])],
            // All support vectors are collinear: the closure is a half-plane.
            _ => vec![primitive(r.clone()), primitive(vec![-r[0], -r[1]])],
        }
    };
    let mut rays = perp(lo, hi);
    if lo != hi {
        rays.extend(perp(hi, lo));
    }
    rays.sort();
    rays.dedup();
    rays
}

pub fn cone_of_sections(m_prime: &LaurentPoly) -> Result<ConeOfSections> {
    let rank = m_prime.rank();
    let origin = GroupElement::zero(rank);
    if m_prime.coeff(&origin).is_zero() {
        return Err(Error::MalformedNormalization);
    }
    let support_vectors: Vec<Vec<i64>> = m_prime
        .support()
        .filter(|e| **e != origin)
        .map(|e| e.0.clone())
        .collect();
    let rays = (rank == 2 && !support_vectors.is_empty()).then(|| planar_rays(&support_vectors));
    Ok(ConeOfSections {
        rank,
        support_vectors,
        rays,
    })
}

impl ConeOfSections {
    pub fn contains(&self, u: &CohomClass) -> bool {
        u.0.len() == self.rank && self.support_vectors.iter().all(|s| dot(&u.0, s) > 0)
    }

    /// Distinct primitive inequality normals, i.e. the irredundant-looking
    /// list used for display (redundant ones are kept).
    pub fn inequalities(&self) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = self
            .support_vectors
            .iter()
            .cloned()
            .map(primitive)
            .collect();
        v.sort();
        v.dedup();
        v
    }

    fn check_class(&self, u: &CohomClass) -> Result<()> {
        if u.0.len() != self.rank {
            return Err(Error::ClassRank {
                class: u.0.clone(),
                expected: self.rank,
                got: u.0.len(),
            });
        }
        if !u.is_primitive() {
            return Err(Error::NotPrimitive(u.0.clone()));
        }
        if !self.contains(u) {
            return Err(Error::NotInCone(u.0.clone()));
        }
        Ok(())
    }
}

fn moduli(p: &IntPoly) -> Result<Vec<(f64, Complex64)>> {
    let mut v: Vec<(f64, Complex64)> = roots(p)?.into_iter().map(|z| (z.norm(), z)).collect();
    v.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(v)
}

/// `λ(u)`: reciprocal of the smallest root modulus of `m^u`.
pub fn lambda_of_class(
    bundle: &InvariantBundle,
    cone: &ConeOfSections,
    u: &CohomClass,
) -> Result<f64> {
    cone.check_class(u)?;
    let q = bundle.mcmullen_normalized.specialize(u).cleared();
    let ms = moduli(&q)?;
    let (min, root) = *ms
        .first()
        .ok_or_else(|| Error::RootFinding("specialization has no roots".into()))?;
    if let Some(&(next, _)) = ms.get(1) {
        if next - min < SEPARATION_GUARD {
            return Err(Error::RootFinding(format!(
                "smallest root moduli {min} and {next} are not separated"
            )));
        }
    }
    if root.im.abs() > REALITY_TOL || root.re <= 0.0 {
        return Err(Error::RootFinding(format!(
            "smallest root {root} is not real positive"
        )));
    }
    Ok(1.0 / min)
}

/// `q(t) = (1-t)^p·Δ^u(t)` with `p = 1` in rank at least two.
pub fn rho_polynomial(bundle: &InvariantBundle, u: &CohomClass) -> LaurentPoly1V {
    let specialized = bundle.alexander.specialize(u);
    if bundle.rank >= 2 {
        &LaurentPoly1V::from_terms([(0, 1), (1, -1)]) * &specialized
    } else {
        specialized
    }
}

/// `ρ(u)`: the largest `1/|μ|` over roots `μ` of `q`; zero when `q` is a
/// unit.
pub fn rho_of_class(
    bundle: &InvariantBundle,
    cone: &ConeOfSections,
    u: &CohomClass,
) -> Result<f64> {
    cone.check_class(u)?;
    let q = rho_polynomial(bundle, u).cleared();
    if q.degree().unwrap_or(0) == 0 {
        return Ok(0.0);
    }
    let ms = moduli(&q)?;
    Ok(1.0 / ms[0].0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassVerdict {
    Pos,
    Neg,
    None,
    NotApplicable,
}

impl ClassVerdict {
    pub fn label(self) -> &'static str {
        match self {
            ClassVerdict::Pos => "pos",
            ClassVerdict::Neg => "neg",
            ClassVerdict::None => "none",
            ClassVerdict::NotApplicable => "not-applicable",
        }
    }
}

/// Orientability of the monodromy dual to `u`, decided from the base map:
/// everything in the cone shares a positive orientation, a negative one
/// propagates exactly to the classes congruent to `u₀` mod 2, and a
/// non-orientable base forces non-orientability everywhere.
pub fn classify_class(
    cone: &ConeOfSections,
    base: OrientabilityKind,
    u0: &CohomClass,
    u: &CohomClass,
) -> Result<ClassVerdict> {
    cone.check_class(u)?;
    Ok(match base {
        OrientabilityKind::PosOrientable => ClassVerdict::Pos,
        OrientabilityKind::NegOrientable if u.mod2() == u0.mod2() => ClassVerdict::Neg,
        OrientabilityKind::NegOrientable | OrientabilityKind::NonOrientable => ClassVerdict::None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassReport {
    pub u: CohomClass,
    pub in_cone: bool,
    pub lambda: Option<f64>,
    pub rho: Option<f64>,
    pub orientability: ClassVerdict,
    pub spec_m: LaurentPoly1V,
    pub spec_delta: LaurentPoly1V,
}

/// Everything about one class. Classes outside the cone get a report with
/// no stretch factors; non-primitive or wrong-length classes are errors.
pub fn class_report(
    bundle: &InvariantBundle,
    cone: &ConeOfSections,
    base: OrientabilityKind,
    u0: &CohomClass,
    u: &CohomClass,
) -> Result<ClassReport> {
    let spec_m = bundle.mcmullen_normalized.specialize(u);
    let spec_delta = bundle.alexander.specialize(u);
    match cone.check_class(u) {
        Err(Error::NotInCone(_)) => {
            return Ok(ClassReport {
                u: u.clone(),
                in_cone: false,
                lambda: None,
                rho: None,
                orientability: ClassVerdict::NotApplicable,
                spec_m,
                spec_delta,
            })
        }
        Err(e) => return Err(e),
        Ok(()) => {}
    }
    Ok(ClassReport {
        u: u.clone(),
        in_cone: true,
        lambda: Some(lambda_of_class(bundle, cone, u)?),
        rho: Some(rho_of_class(bundle, cone, u)?),
        orientability: classify_class(cone, base, u0, u)?,
        spec_m,
        spec_delta,
    })
}

/// Exact test of `x ∈ cone(gens)` by Carathéodory: some linearly independent
/// subset of the generators expresses `x` with nonnegative coefficients.
fn in_generated_cone(x: &[i64], gens: &[Vec<i64>]) -> bool {
    let b = x.len();
    if x.iter().all(|&c| c == 0) {
        return true;
    }
    let mut subset = Vec::new();
    search_subsets(x, gens, b, 0, &mut subset)
}

fn search_subsets(
    x: &[i64],
    gens: &[Vec<i64>],
    b: usize,
    start: usize,
    subset: &mut Vec<usize>,
) -> bool {
    if !subset.is_empty() {
        if let Some(coeffs) = solve_independent(gens, subset, x) {
            if coeffs.iter().all(|c| !c.is_negative()) {
                return true;
            }
        }
    }
    if subset.len() == b {
        return false;
    }
    for i in start..gens.len() {
        subset.push(i);
        if search_subsets(x, gens, b, i + 1, subset) {
            return true;
        }
        subset.pop();
    }
    false
}

/// Solves `Σ c_j g_{s_j} = x` when the chosen generators are independent;
/// `None` when they are dependent or `x` is outside their span.
fn solve_independent(gens: &[Vec<i64>], subset: &[usize], x: &[i64]) -> Option<Vec<BigRational>> {
    let b = x.len();
    let k = subset.len();
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    // Augmented b × (k+1) system.
    let mut a: Vec<Vec<BigRational>> = (0..b)
        .map(|i| {
            let mut row: Vec<BigRational> = subset.iter().map(|&j| q(gens[j][i])).collect();
            row.push(q(x[i]));
            row
        })
        .collect();
    for (r, c) in (0..k).enumerate() {
        let p = (r..b).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for v in a[r].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..b {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in 0..=k {
                    let t = &factor * &a[r][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
    }
    if a[k..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| a[i][k].clone()).collect())
}

fn same_generated_cone(g1: &[Vec<i64>], g2: &[Vec<i64>]) -> bool {
    g1.iter().all(|x| in_generated_cone(x, g2)) && g2.iter().all(|x| in_generated_cone(x, g1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonCheck {
    pub equal: bool,
    /// The vertex of `N(inv(Δ))` maximizing `u₀`, when unique.
    pub vertex: Option<Vec<i64>>,
    /// Normals `v - s` of the vertex's dual cone.
    pub dual_generators: Vec<Vec<i64>>,
}

/// Compares the cone of sections with the dual cone of the `u₀`-maximal
/// vertex of the Newton polytope of `inv(Δ)`. Two open cones cut out by
/// strict inequalities agree exactly when their normals generate the same
/// closed cone, which is decided exactly over the rationals.
pub fn newton_dual_cone_check(
    alexander: &LaurentPoly,
    cone: &ConeOfSections,
    u0: &CohomClass,
    base: OrientabilityKind,
) -> Result<NewtonCheck> {
    if base == OrientabilityKind::NonOrientable {
        return Err(Error::NotOrientableBase);
    }
    let points: Vec<Vec<i64>> = alexander
        .apply_inv()
        .support()
        .map(|e| e.0.clone())
        .collect();
    let best = points
        .iter()
        .map(|p| dot(&u0.0, p))
        .max()
        .ok_or(Error::ZeroPolynomial)?;
    let top: Vec<&Vec<i64>> = points.iter().filter(|p| dot(&u0.0, p) == best).collect();
    if top.len() != 1 {
        return Ok(NewtonCheck {
            equal: false,
            vertex: None,
            dual_generators: Vec::new(),
        });
    }
    let v = top[0].clone();
    let dual_generators: Vec<Vec<i64>> = points
        .iter()
        .filter(|p| **p != v)
        .map(|p| v.iter().zip(p).map(|(a, b)| a - b).collect())
        .collect();
    let equal = same_generated_cone(&cone.support_vectors, &dual_generators);
    Ok(NewtonCheck {
        equal,
        vertex: Some(v),
        dual_generators,
    })
}
