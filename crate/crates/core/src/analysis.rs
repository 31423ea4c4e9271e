//! The full pipeline for one graph map.

use crate::cones::{class_report, cone_of_sections, ClassReport, ConeOfSections};
use crate::error::{Error, Result};
use crate::graph::GraphMap;
use crate::homology::{
    compute_presentation, lifted_matrices, LiftedMatrices, PresentationOptions, TorusPresentation,
};
use crate::invariants::{
    compute_invariants, verify_relations, verify_specializations, InvariantBundle, RelationReport,
    SpecializationReport,
};
use crate::laurent::CohomClass;
use crate::orientation::{classify_orientability, OrientabilityClass, OrientabilityKind};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub map: GraphMap,
    /// Absent when the transition matrix is reducible.
    pub orientation: Option<OrientabilityClass>,
    pub presentation: TorusPresentation,
    pub lifted: LiftedMatrices,
    pub bundle: InvariantBundle,
    pub cone: ConeOfSections,
}

impl Analysis {
    pub fn new(map: GraphMap, opts: &PresentationOptions) -> Result<Self> {
        let orientation = match classify_orientability(&map) {
            Ok(c) => Some(c),
            Err(Error::ReducibleInput) => None,
            Err(e) => return Err(e),
        };
        let presentation = compute_presentation(&map, opts)?;
        let lifted = lifted_matrices(&presentation, &map);
        if !lifted.augments_to(&map) {
            return Err(Error::Inconsistent(
                "lifted matrices do not augment to A, M, P".into(),
            ));
        }
        let bundle = compute_invariants(&presentation, &lifted, &map)?;
        let cone = cone_of_sections(&bundle.mcmullen_normalized)?;
        Ok(Analysis {
            map,
            orientation,
            presentation,
            lifted,
            bundle,
            cone,
        })
    }

    pub fn orientability(&self) -> Result<&OrientabilityClass> {
        self.orientation.as_ref().ok_or(Error::ReducibleInput)
    }

    pub fn kind(&self) -> Result<OrientabilityKind> {
        Ok(self.orientability()?.kind)
    }

    pub fn u0(&self) -> &CohomClass {
        &self.presentation.dual_class
    }

    pub fn relations(&self) -> Result<RelationReport> {
        Ok(verify_relations(
            &self.bundle,
            &self.presentation,
            self.orientability()?,
        ))
    }

    pub fn specializations(&self) -> Result<SpecializationReport> {
        verify_specializations(&self.bundle, &self.presentation, &self.map)
    }

    pub fn class_report(&self, u: &CohomClass) -> Result<ClassReport> {
        class_report(&self.bundle, &self.cone, self.kind()?, self.u0(), u)
    }

    pub fn var_names(&self) -> &[String] {
        self.presentation.group.names()
    }
}
