//! Alexander, McMullen and vertex polynomials, and the relations between
//! them.

use crate::det::{laurent_det, z_minus};
use crate::error::{Error, Result};
use crate::graph::GraphMap;
use crate::homology::{vertex_cycles, LiftedMatrices, TorusPresentation};
use crate::laurent::{CohomClass, GroupElement, LaurentPoly, LaurentPoly1V};
use crate::matrices::{char_poly, monodromy_char_poly, transition_matrix};
use crate::orientation::{OrientabilityClass, OrientabilityKind};
use crate::snf::diagonalize;
use crate::upoly::IntPoly;

/// Exact quotient in ℤ[H]; the denominators used here are monic in `z`.
pub fn monic_div_in_z(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    num.exact_div(den)
}

/// `1` when `b ≥ 2`, `z - 1` when `b = 1`.
pub fn r_factor(rank: usize) -> LaurentPoly {
    if rank >= 2 {
        LaurentPoly::one(rank)
    } else {
        &LaurentPoly::var(rank, rank - 1) - &LaurentPoly::one(rank)
    }
}

/// `Δ = det(zI - M̃)·r / det(zI - P̃)`, in unit normal form.
pub fn alexander_polynomial(
    pres: &TorusPresentation,
    lifted: &LiftedMatrices,
) -> Result<LaurentPoly> {
    let b = pres.rank;
    let num = laurent_det(&z_minus(&lifted.mlift, b), b)?;
    let den = laurent_det(&z_minus(&lifted.plift, b), b)?;
    monic_div_in_z(&(&num * &r_factor(b)), &den)?.unit_normal_form()
}

/// `(m, m′)`: `m = det(zI - Ã)` in unit normal form and
/// `m′ = z^{-|E|}·det(zI - Ã)`, which contains `1` and is positive on the
/// cone elsewhere.
pub fn mcmullen_polynomial(
    pres: &TorusPresentation,
    lifted: &LiftedMatrices,
) -> Result<(LaurentPoly, LaurentPoly)> {
    let b = pres.rank;
    let raw = laurent_det(&z_minus(&lifted.alift, b), b)?;
    let n = lifted.alift.len() as i64;
    let normalized = raw.shift(&pres.zbar.scale(-n));
    Ok((raw.unit_normal_form()?, normalized))
}

/// `p = ∏(1 - cᵢ)` over vertex cycles, checked against `det(zI - P̃)`.
pub fn vertex_polynomial(
    pres: &TorusPresentation,
    lifted: &LiftedMatrices,
    f: &GraphMap,
) -> Result<LaurentPoly> {
    let b = pres.rank;
    let one = LaurentPoly::one(b);
    let p = vertex_cycles(pres, f).iter().fold(one.clone(), |acc, c| {
        &acc * &(&one - &LaurentPoly::monomial(c.class.clone(), 1))
    });
    let det = laurent_det(&z_minus(&lifted.plift, b), b)?;
    if !p.unit_equivalent(&det) {
        return Err(Error::Inconsistent(format!(
            "vertex-cycle product {p} is not a unit multiple of det(zI - P) = {det}"
        )));
    }
    p.unit_normal_form()
}

/// `u₀ mod 2` for a negatively orientable base map, zero for a positively
/// orientable one, absent otherwise.
pub fn orientation_class(
    pres: &TorusPresentation,
    orient: &OrientabilityClass,
) -> Option<CohomClass> {
    match orient.kind {
        OrientabilityKind::PosOrientable => Some(CohomClass(vec![0; pres.rank])),
        OrientabilityKind::NegOrientable => Some(pres.dual_class.mod2()),
        OrientabilityKind::NonOrientable => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle {
    pub rank: usize,
    pub alexander: LaurentPoly,
    pub mcmullen: LaurentPoly,
    pub mcmullen_normalized: LaurentPoly,
    pub vertex_poly: LaurentPoly,
    pub r_factor: LaurentPoly,
}

pub fn compute_invariants(
    pres: &TorusPresentation,
    lifted: &LiftedMatrices,
    f: &GraphMap,
) -> Result<InvariantBundle> {
    let (mcmullen, mcmullen_normalized) = mcmullen_polynomial(pres, lifted)?;
    Ok(InvariantBundle {
        rank: pres.rank,
        alexander: alexander_polynomial(pres, lifted)?,
        mcmullen,
        mcmullen_normalized,
        vertex_poly: vertex_polynomial(pres, lifted, f)?,
        r_factor: r_factor(pres.rank),
    })
}

impl InvariantBundle {
    /// `m̂`: `m`, or `m·(z - 1)` in rank one.
    pub fn mcmullen_hat(&self) -> LaurentPoly {
        &self.mcmullen * &self.r_factor
    }

    /// `Δ ≐ inv(Δ)`; reported for curiosity only.
    pub fn alexander_is_symmetric(&self) -> bool {
        self.alexander.unit_equivalent(&self.alexander.apply_inv())
    }

    /// The integer span of `supp(m′)` is all of `H`.
    pub fn support_generates(&self) -> bool {
        let rows: Vec<Vec<i64>> = self
            .mcmullen_normalized
            .support()
            .map(|e| e.0.clone())
            .collect();
        match diagonalize(&rows, self.rank) {
            Ok(d) => d.rank == self.rank && d.diagonal[..d.rank].iter().all(|&x| x == 1),
            Err(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    /// `m̂ ≐ Δ·p`; checked for positively orientable maps.
    pub pos: Option<bool>,
    /// `ι(m)·r ≐ Δ·p`; checked for negatively orientable maps. The rank-one
    /// factor `r = z - 1` is applied after the involution.
    pub neg: Option<bool>,
    /// `m̂ ≡ Δ·p (mod 2)` up to a monomial; always checked.
    pub mod2: bool,
    pub witnesses: Vec<String>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.pos != Some(false) && self.neg != Some(false) && self.mod2
    }
}

pub fn verify_relations(
    bundle: &InvariantBundle,
    pres: &TorusPresentation,
    orient: &OrientabilityClass,
) -> RelationReport {
    let m_hat = bundle.mcmullen_hat();
    let rhs = &bundle.alexander * &bundle.vertex_poly;
    let mut witnesses = Vec::new();
    let mut exact = |lhs: &LaurentPoly, label: &str| -> bool {
        let ok = lhs.unit_equivalent(&rhs);
        if !ok {
            witnesses.push(format!(
                "{label}: {} vs {}",
                lhs.unit_normal_form()
                    .map(|p| p.to_string())
                    .unwrap_or_default(),
                rhs.unit_normal_form()
                    .map(|p| p.to_string())
                    .unwrap_or_default()
            ));
        }
        ok
    };
    let (pos, neg) = match (orient.kind, orientation_class(pres, orient)) {
        (OrientabilityKind::PosOrientable, _) => (Some(exact(&m_hat, "m ≐ Δp")), None),
        (OrientabilityKind::NegOrientable, Some(eps)) => {
            let lhs = &bundle.mcmullen.apply_involution(&eps) * &bundle.r_factor;
            (None, Some(exact(&lhs, "ι(m)·r ≐ Δp")))
        }
        _ => (None, None),
    };
    let mod2 = m_hat.mod2_equivalent(&rhs);
    if !mod2 {
        witnesses.push(format!("mod 2: {m_hat} vs {rhs}"));
    }
    RelationReport {
        pos,
        neg,
        mod2,
        witnesses,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationReport {
    pub mcmullen_lhs: LaurentPoly1V,
    pub mcmullen_rhs: LaurentPoly1V,
    pub alexander_lhs: LaurentPoly1V,
    pub alexander_rhs: LaurentPoly1V,
    pub mcmullen: bool,
    pub alexander: bool,
}

/// `m(u₀) ≐ det(t⁻¹I - A)` and `(1-t)^p·Δ(u₀) ≐ det(t⁻¹I - f_*)`.
pub fn verify_specializations(
    bundle: &InvariantBundle,
    pres: &TorusPresentation,
    f: &GraphMap,
) -> Result<SpecializationReport> {
    let u0 = &pres.dual_class;
    let mcmullen_lhs = bundle.mcmullen.specialize(u0);
    let mcmullen_rhs = LaurentPoly1V::from_poly_inverted(&char_poly(&transition_matrix(f))?);
    let one_minus_t = LaurentPoly1V::from_poly(&IntPoly::from_i64(&[1, -1]));
    let specialized = bundle.alexander.specialize(u0);
    let alexander_lhs = if pres.rank >= 2 {
        &one_minus_t * &specialized
    } else {
        specialized
    };
    let alexander_rhs = LaurentPoly1V::from_poly_inverted(&monodromy_char_poly(f)?);
    Ok(SpecializationReport {
        mcmullen: mcmullen_lhs.unit_equivalent(&mcmullen_rhs),
        alexander: alexander_lhs.unit_equivalent(&alexander_rhs),
        mcmullen_lhs,
        mcmullen_rhs,
        alexander_lhs,
        alexander_rhs,
    })
}

/// The deck element `z` as a group element of rank `b`.
pub fn zbar(rank: usize) -> GroupElement {
    GroupElement::basis(rank, rank - 1)
}
