//! Chamber decomposition of the degree cone.
//!
//! The degree cone is cut by every hyperplane spanned by an (r-1)-subset of
//! the variable degrees; the full-dimensional cells of the resulting
//! arrangement are the chambers. On the interior of a chamber the set of
//! relevant supports whose monomial cone contains the point in its interior
//! is constant, and those supports' chart cones assemble into the fan of
//! the chamber's model. Crossing a wall changes the model.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::cones::{self, RationalCone};
use crate::error::Error;
use crate::grading::GradedPolyRing;
use crate::lattice::{self, FgAbelianGroup, IntegerMatrix};
use crate::linalg;
use crate::Limits;

/// One chamber: the closed cell, an interior certificate, the relevant
/// supports at the sample, and the fan of chart cones they induce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub cone: RationalCone,
    pub sample_point: Vec<BigInt>,
    pub relevant_supports: Vec<Vec<usize>>,
    pub fan: Vec<RationalCone>,
}

/// Common facet of two adjacent chambers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub chambers: (usize, usize),
    pub cone: RationalCone,
}

/// The finite decomposition of the degree cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberFan {
    pub degree_cone: RationalCone,
    pub chambers: Vec<Chamber>,
    pub walls: Vec<Wall>,
}

/// Location of a degree class relative to a chamber fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChamberLocation {
    /// Interior of the chamber with this index.
    Interior(usize),
    /// On a wall (or on the boundary of the degree cone); carries the
    /// indices of all chambers whose closure contains the point.
    Wall { incident: Vec<usize> },
}

/// Per-chamber model report: which variable rays its fan uses, which are
/// contracted, and whether the fan is complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSummary {
    /// Dimension of the toric model (the rank of N).
    pub model_dimension: usize,
    pub complete: bool,
    /// Variables whose ray appears in the chamber's fan.
    pub rays_used: Vec<usize>,
    /// Variables contracted by this model: their ray appears in no cone of
    /// the chamber's fan.
    pub contracted: Vec<usize>,
    /// Number of inclusion-maximal cones in the fan.
    pub maximal_cones: usize,
}

/// Chamber fan plus the ambient-embedding data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub fan: ChamberFan,
    /// The divisor class group of the toric model: Z^k modulo the character
    /// lattice, in invariant-factor form. Coincides with the grading group
    /// exactly when the degree map is surjective.
    pub picard_group: FgAbelianGroup,
    pub effective_cone: RationalCone,
    pub summaries: Vec<ModelSummary>,
    /// Chamber containing the supplied ample class, if one was given.
    pub ample_chamber: Option<usize>,
    /// Caller-supplied assumption that every class in the cone is gen;
    /// when false, chamber-to-model claims are conditional.
    pub all_gen: bool,
}

fn degree_columns(ring: &GradedPolyRing) -> Vec<Vec<BigInt>> {
    let free = ring.degree_map().free_matrix();
    (0..ring.num_vars()).map(|i| free.col(i)).collect()
}

/// Normals of all hyperplanes spanned by (r-1)-subsets of the degree
/// vectors, deduplicated up to sign.
fn arrangement_normals(degrees: &[Vec<BigInt>], r: usize) -> Vec<Vec<BigInt>> {
    let mut distinct: Vec<Vec<BigInt>> = Vec::new();
    for d in degrees {
        if let Some(p) = linalg::primitive_signed(d) {
            if !distinct.contains(&p) {
                distinct.push(p);
            }
        }
    }
    let mut normals: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let n = distinct.len();
    let take = r.saturating_sub(1);
    let mut subset: Vec<usize> = (0..take).collect();
    if take > n {
        return Vec::new();
    }
    loop {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| distinct[i].clone()).collect();
        if linalg::rank(&rows) == take {
            let kernel = lattice::kernel_basis(&IntegerMatrix::from_rows(rows));
            if kernel.len() == 1 {
                if let Some(p) = linalg::primitive_signed(&kernel[0]) {
                    normals.insert(p);
                }
            }
        }
        // Next (r-1)-subset in lexicographic order.
        if take == 0 {
            break;
        }
        let mut i = take;
        loop {
            if i == 0 {
                return normals.into_iter().collect();
            }
            i -= 1;
            if subset[i] != i + n - take {
                subset[i] += 1;
                for j in i + 1..take {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
    normals.into_iter().collect()
}

/// Supports whose monomial cone contains `w` in its interior, together with
/// their chart cones.
fn supports_and_fan_at(
    ring: &GradedPolyRing,
    w: &[BigInt],
    limits: &Limits,
) -> Result<(Vec<Vec<usize>>, Vec<RationalCone>), Error> {
    let r = ring.free_rank();
    let m_basis = lattice::kernel_basis(ring.degree_map().free_matrix());
    let k = ring.num_vars();
    let mut supports = Vec::new();
    let mut fan = Vec::new();
    for s in ring.relevant_supports(limits)? {
        let c = ring.cone_of_support(&s);
        if c.dimension() == r && c.relative_interior_contains(w) {
            let v = (0..k)
                .filter(|j| !s.contains(j))
                .map(|j| m_basis.iter().map(|b| b[j].clone()).collect())
                .collect::<Vec<Vec<BigInt>>>();
            fan.push(RationalCone::from_generators(m_basis.len(), &v)?);
            supports.push(s);
        }
    }
    Ok((supports, fan))
}

/// Enumerates the chambers of the degree cone, their walls, and each
/// chamber's fan. Chambers are sorted by their canonical ray lists.
pub fn enumerate_chambers(ring: &GradedPolyRing, limits: &Limits) -> Result<ChamberFan, Error> {
    let r = ring.free_rank();
    let k = ring.num_vars();
    if r > limits.max_chamber_rank {
        return Err(Error::LimitExceeded {
            what: "free rank in chamber enumeration",
            limit: limits.max_chamber_rank,
            needed: r,
        });
    }
    if k > limits.max_chamber_vars {
        return Err(Error::LimitExceeded {
            what: "variables in chamber enumeration",
            limit: limits.max_chamber_vars,
            needed: k,
        });
    }
    let degrees = degree_columns(ring);
    let degree_cone = RationalCone::from_generators(r, &degrees)?;
    if degree_cone.dimension() != r {
        return Err(Error::DegenerateDegreeCone);
    }

    let mut cells = vec![degree_cone.clone()];
    for h in arrangement_normals(&degrees, r) {
        let neg: Vec<BigInt> = h.iter().map(|x| -x).collect();
        let mut next = Vec::new();
        for cell in cells {
            let mut ineqs = cell.facets().to_vec();
            ineqs.push(h.clone());
            let plus = RationalCone::from_h_rep(r, &ineqs, cell.equations())?;
            let mut ineqs = cell.facets().to_vec();
            ineqs.push(neg.clone());
            let minus = RationalCone::from_h_rep(r, &ineqs, cell.equations())?;
            if plus.dimension() == r && minus.dimension() == r {
                next.push(plus);
                next.push(minus);
            } else {
                next.push(cell);
            }
        }
        cells = next;
    }
    cells.sort_by(|a, b| a.rays().cmp(b.rays()));

    let mut chambers = Vec::new();
    for cell in cells {
        assert!(cell.is_pointed(), "arrangement cells are pointed");
        let mut sample = vec![BigInt::zero(); r];
        for ray in cell.rays() {
            for (s, x) in sample.iter_mut().zip(ray) {
                *s += x;
            }
        }
        debug_assert!(cell.relative_interior_contains(&sample));
        let (supports, fan) = supports_and_fan_at(ring, &sample, limits)?;
        chambers.push(Chamber {
            cone: cell,
            sample_point: sample,
            relevant_supports: supports,
            fan,
        });
    }

    let mut walls = Vec::new();
    for i in 0..chambers.len() {
        for j in i + 1..chambers.len() {
            let shared = chambers[i].cone.intersect(&chambers[j].cone)?;
            if r > 0 && shared.dimension() == r - 1 {
                walls.push(Wall {
                    chambers: (i, j),
                    cone: shared,
                });
            }
        }
    }

    Ok(ChamberFan {
        degree_cone,
        chambers,
        walls,
    })
}

/// Locates a class in an enumerated chamber fan.
pub fn locate_in_fan(fan: &ChamberFan, w: &[BigInt]) -> Result<ChamberLocation, Error> {
    if !fan.degree_cone.contains(w) {
        return Err(Error::OutsideDegreeCone);
    }
    for (i, ch) in fan.chambers.iter().enumerate() {
        if ch.cone.relative_interior_contains(w) {
            return Ok(ChamberLocation::Interior(i));
        }
    }
    let incident: Vec<usize> = fan
        .chambers
        .iter()
        .enumerate()
        .filter(|(_, ch)| ch.cone.contains(w))
        .map(|(i, _)| i)
        .collect();
    Ok(ChamberLocation::Wall { incident })
}

/// The chamber of a class `w` in the degree cone. Wall points are reported
/// as an explicit location, not an error.
pub fn chamber_of(
    ring: &GradedPolyRing,
    w: &[BigInt],
    limits: &Limits,
) -> Result<(ChamberFan, ChamberLocation), Error> {
    if w.len() != ring.free_rank() {
        return Err(Error::DimensionMismatch {
            expected: ring.free_rank(),
            got: w.len(),
        });
    }
    let fan = enumerate_chambers(ring, limits)?;
    let loc = locate_in_fan(&fan, w)?;
    Ok((fan, loc))
}

/// Summary of a chamber's toric model.
pub fn chamber_model_summary(
    ring: &GradedPolyRing,
    chamber: &Chamber,
) -> Result<ModelSummary, Error> {
    let k = ring.num_vars();
    // A variable ray appears in the fan unless the variable lies in every
    // relevant support of the chamber.
    let mut contracted: Vec<usize> = (0..k).collect();
    for s in &chamber.relevant_supports {
        contracted.retain(|j| s.contains(j));
    }
    if chamber.relevant_supports.is_empty() {
        contracted = Vec::new();
    }
    let rays_used: Vec<usize> = (0..k).filter(|j| !contracted.contains(j)).collect();

    let model_dimension = chamber
        .fan
        .first()
        .map_or(0, RationalCone::ambient_dim);
    let complete = if chamber.fan.is_empty() {
        false
    } else {
        cones::is_complete_fan(&chamber.fan)?
    };
    let maximal_cones = chamber
        .fan
        .iter()
        .filter(|c| {
            !chamber
                .fan
                .iter()
                .any(|d| d != *c && c.generators().iter().all(|g| d.contains(g)))
        })
        .count();
    Ok(ModelSummary {
        model_dimension,
        complete,
        rays_used,
        contracted,
        maximal_cones,
    })
}

/// Assembles the chamber fan together with the embedding data: the divisor
/// class group of the model, the effective cone, per-chamber summaries, and
/// the chamber of a supplied ample class. An ample class on a wall is an
/// error carrying the incident chambers.
pub fn embedding_report(
    ring: &GradedPolyRing,
    ample_class: Option<&[BigInt]>,
    all_gen: bool,
    limits: &Limits,
) -> Result<EmbeddingReport, Error> {
    let fan = enumerate_chambers(ring, limits)?;
    let m_basis = lattice::kernel_basis(ring.degree_map().free_matrix());
    let picard_group = if m_basis.is_empty() {
        FgAbelianGroup::free(ring.num_vars())
    } else {
        lattice::cokernel(&IntegerMatrix::from_cols(m_basis)).0
    };
    let summaries = fan
        .chambers
        .iter()
        .map(|c| chamber_model_summary(ring, c))
        .collect::<Result<Vec<_>, _>>()?;
    let ample_chamber = match ample_class {
        None => None,
        Some(w) => {
            if w.len() != ring.free_rank() {
                return Err(Error::DimensionMismatch {
                    expected: ring.free_rank(),
                    got: w.len(),
                });
            }
            match locate_in_fan(&fan, w)? {
                ChamberLocation::Interior(i) => Some(i),
                ChamberLocation::Wall { incident } => {
                    return Err(Error::OnWall { incident });
                }
            }
        }
    };
    let effective_cone = fan.degree_cone.clone();
    Ok(EmbeddingReport {
        fan,
        picard_group,
        effective_cone,
        summaries,
        ample_chamber,
        all_gen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::DegreeVector;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn ring(r: usize, degrees: &[&[i64]]) -> GradedPolyRing {
        let degs = degrees
            .iter()
            .map(|v| DegreeVector {
                free: v.iter().map(|&x| bi(x)).collect(),
                torsion: Vec::new(),
            })
            .collect();
        GradedPolyRing::with_degrees(FgAbelianGroup::free(r), degs).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn cone2(vs: &[&[i64]]) -> RationalCone {
        RationalCone::from_generators(
            2,
            &vs.iter()
                .map(|v| v.iter().map(|&x| bi(x)).collect())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn total_degree_has_single_chamber() {
        let fan = enumerate_chambers(&ring(1, &[&[1], &[1], &[1]]), &lim()).unwrap();
        assert_eq!(fan.chambers.len(), 1);
        assert!(fan.walls.is_empty());
        // The model is P^2: complete fan on all three rays.
        let summary =
            chamber_model_summary(&ring(1, &[&[1], &[1], &[1]]), &fan.chambers[0]).unwrap();
        assert!(summary.complete);
        assert_eq!(summary.rays_used, alloc::vec![0, 1, 2]);
        assert!(summary.contracted.is_empty());
    }

    #[test]
    fn three_variable_chambers() {
        let three = ring(2, &[&[1, 0], &[1, 1], &[0, 1]]);
        let fan = enumerate_chambers(&three, &lim()).unwrap();
        assert_eq!(fan.chambers.len(), 2);
        let expected: BTreeSet<RationalCone> = [
            cone2(&[&[1, 0], &[1, 1]]),
            cone2(&[&[1, 1], &[0, 1]]),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<RationalCone> = fan.chambers.iter().map(|c| c.cone.clone()).collect();
        let expected: Vec<_> = expected.into_iter().collect();
        let got: Vec<_> = got.into_iter().collect();
        assert_eq!(got.len(), 2);
        for c in &expected {
            assert!(got.contains(c));
        }
        assert_eq!(fan.walls.len(), 1);
        assert_eq!(fan.walls[0].cone, cone2(&[&[1, 1]]));

        // The chamber at (2,1) carries supports {12},{13},{123} and a fan
        // with two maximal cones.
        let loc = locate_in_fan(&fan, &[bi(2), bi(1)]).unwrap();
        let ChamberLocation::Interior(i) = loc else {
            panic!("interior point expected");
        };
        let ch = &fan.chambers[i];
        assert_eq!(
            ch.relevant_supports,
            alloc::vec![alloc::vec![0, 1], alloc::vec![0, 2], alloc::vec![0, 1, 2]]
        );
        let summary = chamber_model_summary(&three, ch).unwrap();
        assert_eq!(summary.maximal_cones, 2);
        assert!(summary.complete);

        // (1,1) is the wall point between the two chambers.
        let loc = locate_in_fan(&fan, &[bi(1), bi(1)]).unwrap();
        assert_eq!(
            loc,
            ChamberLocation::Wall {
                incident: alloc::vec![0, 1]
            }
        );
    }

    #[test]
    fn chamber_of_entry_point() {
        let three = ring(2, &[&[1, 0], &[1, 1], &[0, 1]]);
        let (fan, loc) = chamber_of(&three, &[bi(2), bi(1)], &lim()).unwrap();
        let ChamberLocation::Interior(i) = loc else {
            panic!("interior expected");
        };
        assert_eq!(fan.chambers[i].cone, cone2(&[&[1, 0], &[1, 1]]));
        assert_eq!(
            chamber_of(&three, &[bi(-1), bi(0)], &lim()),
            Err(Error::OutsideDegreeCone)
        );
    }

    /// Ray data of the blow-up of the projective plane at a point; the
    /// degree map is the cokernel projection of the ray matrix.
    fn blowup_ring() -> GradedPolyRing {
        let rays = [
            alloc::vec![bi(1), bi(0)],
            alloc::vec![bi(0), bi(1)],
            alloc::vec![bi(-1), bi(1)],
            alloc::vec![bi(0), bi(-1)],
        ];
        let b = IntegerMatrix::from_rows(rays.to_vec());
        let (group, proj) = lattice::cokernel(&b);
        assert_eq!(group.free_rank(), 2);
        assert!(group.torsion().is_empty());
        let degrees: Vec<DegreeVector> = (0..4)
            .map(|i| DegreeVector {
                free: proj.free_matrix().col(i),
                torsion: Vec::new(),
            })
            .collect();
        GradedPolyRing::with_degrees(group, degrees).unwrap()
    }

    #[test]
    fn blowup_has_two_chambers_one_contraction() {
        let ring = blowup_ring();
        let fan = enumerate_chambers(&ring, &lim()).unwrap();
        assert_eq!(fan.chambers.len(), 2);
        assert_eq!(fan.walls.len(), 1);
        let summaries: Vec<ModelSummary> = fan
            .chambers
            .iter()
            .map(|c| chamber_model_summary(&ring, c).unwrap())
            .collect();
        let mut contraction_counts: Vec<usize> =
            summaries.iter().map(|s| s.contracted.len()).collect();
        contraction_counts.sort();
        assert_eq!(contraction_counts, alloc::vec![0, 1]);
        for s in &summaries {
            assert!(s.complete);
            assert_eq!(s.model_dimension, 2);
        }
        // The full model uses all four rays, the contracted one has three
        // maximal cones.
        let full = summaries.iter().find(|s| s.contracted.is_empty()).unwrap();
        assert_eq!(full.rays_used.len(), 4);
        assert_eq!(full.maximal_cones, 4);
        let contracted = summaries.iter().find(|s| !s.contracted.is_empty()).unwrap();
        assert_eq!(contracted.maximal_cones, 3);
    }

    #[test]
    fn embedding_reports() {
        let ring = blowup_ring();
        let fan = enumerate_chambers(&ring, &lim()).unwrap();
        // An interior point of each chamber is ample for that model.
        for (i, ch) in fan.chambers.iter().enumerate() {
            let rep = embedding_report(&ring, Some(&ch.sample_point), true, &lim()).unwrap();
            assert_eq!(rep.ample_chamber, Some(i));
            assert_eq!(rep.picard_group, FgAbelianGroup::free(2));
            assert_eq!(rep.effective_cone, fan.degree_cone);
        }
        // A wall point is rejected with the incident chambers.
        let wall_point = fan.walls[0].cone.rays()[0].clone();
        let err = embedding_report(&ring, Some(&wall_point), true, &lim());
        assert_eq!(
            err,
            Err(Error::OnWall {
                incident: alloc::vec![0, 1]
            })
        );

        let single = ring3();
        let rep = embedding_report(&single, Some(&[bi(1)]), false, &lim()).unwrap();
        assert_eq!(rep.ample_chamber, Some(0));
        assert!(!rep.all_gen);
    }

    fn ring3() -> GradedPolyRing {
        ring(1, &[&[1], &[1], &[1]])
    }

    #[test]
    fn chamber_fans_are_fans() {
        for r in [
            ring(2, &[&[1, 0], &[1, 1], &[0, 1]]),
            blowup_ring(),
            ring3(),
        ] {
            let fan = enumerate_chambers(&r, &lim()).unwrap();
            for ch in &fan.chambers {
                assert!(cones::is_fan(&ch.fan).unwrap());
            }
        }
    }
}
