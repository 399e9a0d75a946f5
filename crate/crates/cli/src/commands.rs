//! The four analyses behind the CLI subcommands, independent of argument
//! parsing so they can be driven directly from tests.

use num_bigint::BigInt;

use multiproj_core::chambers;
use multiproj_core::cones::RationalCone;
use multiproj_core::grading::{DegreeVector, GradedPolyRing, Monomial};
use multiproj_core::lattice::GroupHom;
use multiproj_core::proj;
use multiproj_core::{Error as CoreError, Limits};

use crate::error::CliError;
use crate::report::{
    ints, support_1based, ChambersReport, ConeOut, DegreeOut, ProjReport, RayRestrictionOut,
    RefinementOut, RegradeReport, RelevanceReport,
};
use crate::schema::{GroupSpec, ProblemSpec};

pub struct ProjOptions {
    /// Include the maximal separated chart subcollections.
    pub maximal: bool,
    /// Compute chart coordinate semigroups.
    pub semigroups: bool,
}

pub fn cmd_relevance(
    spec: &ProblemSpec,
    exponents: &[BigInt],
    _limits: &Limits,
) -> Result<RelevanceReport, CliError> {
    let ring = spec.to_ring()?;
    let monomial =
        Monomial::new(exponents.to_vec()).map_err(|e| CliError::input(e.to_string()))?;
    let degree = ring.degree_of(&monomial)?;
    let cone = ring.cone_of_monomial(&monomial)?;
    let relevant = ring.is_relevant(&monomial)?;
    Ok(RelevanceReport {
        schema: "multiproj.relevance/1".into(),
        monomial: ints(exponents),
        degree: DegreeOut::from_degree(&degree),
        cone: ConeOut::from_cone(&cone),
        free_rank: ring.free_rank(),
        relevant,
    })
}

pub fn cmd_proj(
    spec: &ProblemSpec,
    options: &ProjOptions,
    limits: &Limits,
) -> Result<ProjReport, CliError> {
    let ring = spec.to_ring()?;
    let mut data = proj::build_proj(&ring, limits)?;
    if options.semigroups {
        data = data.with_semigroups(limits)?;
    }
    let maximal = if options.maximal {
        Some(proj::maximal_separated_subcollections(&data, limits)?)
    } else {
        None
    };
    Ok(ProjReport::from_data(&data, maximal))
}

pub fn cmd_chambers(spec: &ProblemSpec, limits: &Limits) -> Result<ChambersReport, CliError> {
    let ring = spec.to_ring()?;
    let ample = spec.to_ample_class()?;
    let all_gen = spec.all_gen.unwrap_or(false);
    let rep = chambers::embedding_report(&ring, ample.as_deref(), all_gen, limits)?;
    Ok(ChambersReport::from_embedding(&rep))
}

pub fn cmd_regrade(spec: &ProblemSpec, limits: &Limits) -> Result<RegradeReport, CliError> {
    let ring = spec.to_ring()?;
    let Some(delta) = spec.to_regrading()? else {
        return Err(CliError::input(
            "regrade requires a 'regrading' entry in the problem document",
        ));
    };
    if !delta.is_surjective_onto_free() {
        return Err(CliError::input(
            "regrading is not surjective onto the target free part (checked via Smith normal form)",
        ));
    }
    let regraded = ring.regrade(&delta)?;

    let before = ring.relevant_supports(limits)?;
    let after = regraded.relevant_supports(limits)?;
    let gained: Vec<Vec<usize>> = after.iter().filter(|s| !before.contains(s)).cloned().collect();
    let containment_ok = before.iter().all(|s| after.contains(s));

    let dim_before = proj::build_proj(&ring, limits)?.dimension();
    let dim_after = proj::build_proj(&regraded, limits)?.dimension();

    let refinement = chamber_refinement(&ring, &regraded, &delta, limits)?;

    let degrees = (0..regraded.num_vars())
        .map(|i| DegreeOut::from_degree(&regraded.degree_map().variable_degree(i)))
        .collect();

    Ok(RegradeReport {
        schema: "multiproj.regrade/1".into(),
        target_group: GroupSpec::from_group(regraded.group()),
        degrees,
        relevant_supports_before: before.iter().map(|s| support_1based(s)).collect(),
        relevant_supports_after: after.iter().map(|s| support_1based(s)).collect(),
        supports_gained: gained.iter().map(|s| support_1based(s)).collect(),
        chart_containment_ok: containment_ok,
        dimension_before: dim_before,
        dimension_after: dim_after,
        chamber_refinement: refinement,
    })
}

/// For each chamber of the regraded problem, the original chambers whose
/// image under the regrading contains it. `None` when either side has a
/// degenerate degree cone.
fn chamber_refinement(
    ring: &GradedPolyRing,
    regraded: &GradedPolyRing,
    delta: &GroupHom,
    limits: &Limits,
) -> Result<Option<Vec<RefinementOut>>, CliError> {
    let old_fan = match chambers::enumerate_chambers(ring, limits) {
        Ok(f) => f,
        Err(CoreError::DegenerateDegreeCone) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let new_fan = match chambers::enumerate_chambers(regraded, limits) {
        Ok(f) => f,
        Err(CoreError::DegenerateDegreeCone) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let images: Vec<RationalCone> = old_fan
        .chambers
        .iter()
        .map(|c| c.cone.image(delta.free_matrix()))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (j, ch) in new_fan.chambers.iter().enumerate() {
        let covered_by: Vec<usize> = images
            .iter()
            .enumerate()
            .filter(|(_, img)| ch.cone.generators().iter().all(|g| img.contains(g)))
            .map(|(i, _)| i)
            .collect();
        out.push(RefinementOut {
            chamber: j,
            covered_by,
        });
    }
    Ok(Some(out))
}

/// The ray-restriction analysis; exposed for tests and library callers.
pub fn ray_restriction(
    spec: &ProblemSpec,
    free: &[BigInt],
    limits: &Limits,
) -> Result<RayRestrictionOut, CliError> {
    let ring = spec.to_ring()?;
    let d = DegreeVector::new(
        ring.group(),
        free.to_vec(),
        vec![BigInt::from(0); ring.group().torsion().len()],
    )
    .map_err(CliError::from)?;
    let r = proj::restrict_to_ray(&ring, &d, limits)?;
    Ok(RayRestrictionOut::from_restriction(&r))
}
