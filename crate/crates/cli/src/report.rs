//! Machine-readable reports. Field order is declaration order and all
//! collections are sorted upstream, so serialization is byte-stable.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use multiproj_core::chambers::{ChamberFan, EmbeddingReport, ModelSummary};
use multiproj_core::cones::RationalCone;
use multiproj_core::grading::DegreeVector;
use multiproj_core::proj::{ChartSemigroup, ProjData, RayRestriction};

use crate::schema::GroupSpec;

pub fn ints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn int_rows(vs: &[Vec<BigInt>]) -> Vec<Vec<String>> {
    vs.iter().map(|v| ints(v)).collect()
}

/// 1-based variable indices for a support set.
pub fn support_1based(s: &[usize]) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DegreeOut {
    pub free: Vec<String>,
    pub torsion: Vec<String>,
}

impl DegreeOut {
    pub fn from_degree(d: &DegreeVector) -> Self {
        DegreeOut {
            free: ints(&d.free),
            torsion: ints(&d.torsion),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConeOut {
    pub rays: Vec<Vec<String>>,
    pub lineality: Vec<Vec<String>>,
    pub dim: usize,
}

impl ConeOut {
    pub fn from_cone(c: &RationalCone) -> Self {
        ConeOut {
            rays: int_rows(c.rays()),
            lineality: int_rows(c.lineality_basis()),
            dim: c.dimension(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RelevanceReport {
    pub schema: String,
    pub monomial: Vec<String>,
    pub degree: DegreeOut,
    pub cone: ConeOut,
    pub free_rank: usize,
    pub relevant: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SemigroupOut {
    pub m_coords: Vec<Vec<String>>,
    pub exponents: Vec<Vec<String>>,
}

impl SemigroupOut {
    pub fn from_semigroup(s: &ChartSemigroup) -> Self {
        SemigroupOut {
            m_coords: int_rows(&s.m_coords),
            exponents: int_rows(&s.exponents),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChartOut {
    /// 1-based variable indices of the indexing square-free monomial.
    pub support: Vec<usize>,
    pub degree_cone: ConeOut,
    pub sigma: ConeOut,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupOut>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessOut {
    /// 0-based indices into the chart list.
    pub charts: [usize; 2],
    /// The same pair as 1-based variable supports.
    pub supports: [Vec<usize>; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProjReport {
    pub schema: String,
    /// "ok" or "empty" (no relevant element).
    pub status: String,
    pub variables: Vec<String>,
    pub free_rank: usize,
    pub m_basis: Vec<Vec<String>>,
    pub dimension: Option<usize>,
    pub charts: Vec<ChartOut>,
    pub separated: bool,
    pub separation_witness: Option<WitnessOut>,
    pub fan_complete: Option<bool>,
    /// Maximal separated chart subcollections (0-based chart indices),
    /// present when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal_separated: Option<Vec<Vec<usize>>>,
}

impl ProjReport {
    pub fn from_data(p: &ProjData, maximal: Option<Vec<Vec<usize>>>) -> Self {
        let charts = p
            .charts()
            .iter()
            .map(|c| ChartOut {
                support: support_1based(&c.support),
                degree_cone: ConeOut::from_cone(&c.degree_cone),
                sigma: ConeOut::from_cone(&c.sigma),
                semigroup: c.semigroup.as_ref().map(SemigroupOut::from_semigroup),
            })
            .collect();
        let separation_witness = p.separation_witness().map(|(i, j)| WitnessOut {
            charts: [i, j],
            supports: [
                support_1based(&p.charts()[i].support),
                support_1based(&p.charts()[j].support),
            ],
        });
        ProjReport {
            schema: "multiproj.proj/1".into(),
            status: if p.is_empty_spectrum() { "empty" } else { "ok" }.into(),
            variables: p.ring().var_names().to_vec(),
            free_rank: p.ring().free_rank(),
            m_basis: int_rows(p.m_basis()),
            dimension: p.dimension(),
            charts,
            separated: p.separated(),
            separation_witness,
            fan_complete: p.fan_complete(),
            maximal_separated: maximal,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SummaryOut {
    pub model_dimension: usize,
    pub complete: bool,
    /// 1-based variable indices whose rays the model uses.
    pub rays_used: Vec<usize>,
    /// 1-based variable indices contracted by the model.
    pub contracted: Vec<usize>,
    pub maximal_cones: usize,
}

impl SummaryOut {
    pub fn from_summary(s: &ModelSummary) -> Self {
        SummaryOut {
            model_dimension: s.model_dimension,
            complete: s.complete,
            rays_used: support_1based(&s.rays_used),
            contracted: support_1based(&s.contracted),
            maximal_cones: s.maximal_cones,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChamberOut {
    pub cone: ConeOut,
    pub sample_point: Vec<String>,
    /// 1-based variable supports relevant on this chamber's interior.
    pub relevant_supports: Vec<Vec<usize>>,
    pub fan: Vec<ConeOut>,
    pub summary: SummaryOut,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WallOut {
    /// 0-based indices of the two incident chambers.
    pub chambers: [usize; 2],
    pub cone: ConeOut,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EmbeddingOut {
    pub picard_group: GroupSpec,
    pub effective_cone: ConeOut,
    pub ample_chamber: Option<usize>,
    pub all_gen_assumed: bool,
    /// "unconditional" when every class is assumed gen, otherwise
    /// "conditional-on-gen".
    pub model_claims: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChambersReport {
    pub schema: String,
    pub degree_cone: ConeOut,
    pub chambers: Vec<ChamberOut>,
    pub walls: Vec<WallOut>,
    pub embedding: EmbeddingOut,
}

impl ChambersReport {
    pub fn from_embedding(rep: &EmbeddingReport) -> Self {
        let fan: &ChamberFan = &rep.fan;
        let chambers = fan
            .chambers
            .iter()
            .zip(&rep.summaries)
            .map(|(c, s)| ChamberOut {
                cone: ConeOut::from_cone(&c.cone),
                sample_point: ints(&c.sample_point),
                relevant_supports: c
                    .relevant_supports
                    .iter()
                    .map(|v| support_1based(v))
                    .collect(),
                fan: c.fan.iter().map(ConeOut::from_cone).collect(),
                summary: SummaryOut::from_summary(s),
            })
            .collect();
        let walls = fan
            .walls
            .iter()
            .map(|w| WallOut {
                chambers: [w.chambers.0, w.chambers.1],
                cone: ConeOut::from_cone(&w.cone),
            })
            .collect();
        ChambersReport {
            schema: "multiproj.chambers/1".into(),
            degree_cone: ConeOut::from_cone(&fan.degree_cone),
            chambers,
            walls,
            embedding: EmbeddingOut {
                picard_group: GroupSpec::from_group(&rep.picard_group),
                effective_cone: ConeOut::from_cone(&rep.effective_cone),
                ample_chamber: rep.ample_chamber,
                all_gen_assumed: rep.all_gen,
                model_claims: if rep.all_gen {
                    "unconditional"
                } else {
                    "conditional-on-gen"
                }
                .into(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RefinementOut {
    /// 0-based chamber index in the regraded problem.
    pub chamber: usize,
    /// 0-based original chambers whose image contains this chamber.
    pub covered_by: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RegradeReport {
    pub schema: String,
    pub target_group: GroupSpec,
    pub degrees: Vec<DegreeOut>,
    /// 1-based variable supports, before and after the regrading.
    pub relevant_supports_before: Vec<Vec<usize>>,
    pub relevant_supports_after: Vec<Vec<usize>>,
    pub supports_gained: Vec<Vec<usize>>,
    /// Every chart of the original grading appears among the regraded
    /// charts (guaranteed for surjective regradings).
    pub chart_containment_ok: bool,
    pub dimension_before: Option<usize>,
    pub dimension_after: Option<usize>,
    /// Chamber refinement relation, when both degree cones are
    /// full-dimensional.
    pub chamber_refinement: Option<Vec<RefinementOut>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RayRestrictionOut {
    pub generators: Vec<RayGeneratorOut>,
    pub charts: Vec<Vec<String>>,
    pub covers: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RayGeneratorOut {
    pub exponents: Vec<String>,
    pub multiple: String,
}

impl RayRestrictionOut {
    pub fn from_restriction(r: &RayRestriction) -> Self {
        RayRestrictionOut {
            generators: r
                .generators
                .iter()
                .map(|(m, mult)| RayGeneratorOut {
                    exponents: ints(m.exponents()),
                    multiple: mult.to_string(),
                })
                .collect(),
            charts: r.charts.iter().map(|m| ints(m.exponents())).collect(),
            covers: r.covers,
        }
    }
}
