//! The multihomogeneous spectrum of a monomially graded polynomial ring,
//! presented as a (possibly non-separated) simplicial torus embedding.
//!
//! The character lattice is M = ker(d) inside the exponent lattice Z^k, and
//! N is its dual. The image v_j of the j-th dual coordinate vector in N is
//! the j-th row of the kernel-basis matrix, so the chart of a relevant
//! square-free support I is the simplicial cone spanned by the v_j with
//! j outside I. Charts are indexed by supports: the localization only
//! depends on the support of a monomial, so this deduplicates the
//! infinitely many relevant monomials sharing one.
//!
//! Two separatedness tests are provided. The exact one checks the toric
//! gluing condition pairwise: the chart cones must intersect exactly in the
//! cone of the union support, as a common face. The sufficient one checks
//! that the degree cones of two charts overlap with nonempty interior; it
//! implies the exact condition but not conversely.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cones::{self, RationalCone};
use crate::error::Error;
use crate::grading::{DegreeVector, GradedPolyRing, Monomial};
use crate::lattice::{self, IntegerMatrix};
use crate::Limits;

/// Generators of the degree-zero coordinate semigroup of a chart, in the
/// coordinates of the kernel basis and as exponent vectors in Z^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartSemigroup {
    pub m_coords: Vec<Vec<BigInt>>,
    pub exponents: Vec<Vec<BigInt>>,
}

/// One affine chart of the spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    /// Sorted variable indices of the indexing square-free monomial.
    pub support: Vec<usize>,
    /// Cone of the monomial in D ⊗ Q; full-dimensional by relevance.
    pub degree_cone: RationalCone,
    /// Chart cone in N ⊗ Q; strongly convex and simplicial.
    pub sigma: RationalCone,
    /// Hilbert basis of the chart semigroup, when computed.
    pub semigroup: Option<ChartSemigroup>,
}

/// The computed spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjData {
    ring: GradedPolyRing,
    m_basis: Vec<Vec<BigInt>>,
    charts: Vec<Chart>,
    dimension: Option<usize>,
    separated: bool,
    separation_witness: Option<(usize, usize)>,
    fan_complete: Option<bool>,
}

impl ProjData {
    pub fn ring(&self) -> &GradedPolyRing {
        &self.ring
    }

    /// Basis of the character lattice M = ker d.
    pub fn m_basis(&self) -> &[Vec<BigInt>] {
        &self.m_basis
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }

    pub fn is_empty_spectrum(&self) -> bool {
        self.charts.is_empty()
    }

    /// Dimension of the spectrum; `None` for the empty spectrum.
    pub fn dimension(&self) -> Option<usize> {
        self.dimension
    }

    pub fn separated(&self) -> bool {
        self.separated
    }

    pub fn separation_witness(&self) -> Option<(usize, usize)> {
        self.separation_witness
    }

    /// Completeness of the chart fan, reported when the spectrum is
    /// separated (evidence towards properness, not a projectivity
    /// certificate).
    pub fn fan_complete(&self) -> Option<bool> {
        self.fan_complete
    }

    pub fn chart_index_by_support(&self, support: &[usize]) -> Option<usize> {
        self.charts.iter().position(|c| c.support == support)
    }

    /// A copy with the coordinate semigroup computed for every chart.
    pub fn with_semigroups(&self, limits: &Limits) -> Result<ProjData, Error> {
        let mut data = self.clone();
        for chart in &mut data.charts {
            chart.semigroup = Some(chart_semigroup_generators(
                &self.ring,
                &chart.support,
                limits,
            )?);
        }
        Ok(data)
    }
}

/// Rows of the kernel-basis matrix: `v_j` is the image in N of the j-th
/// dual coordinate vector.
fn dual_images(m_basis: &[Vec<BigInt>], k: usize) -> Vec<Vec<BigInt>> {
    (0..k)
        .map(|j| m_basis.iter().map(|b| b[j].clone()).collect())
        .collect()
}

/// Chart cone of a support given precomputed kernel data.
fn sigma_from_basis(m_basis: &[Vec<BigInt>], k: usize, support: &[usize]) -> RationalCone {
    let v = dual_images(m_basis, k);
    let gens: Vec<Vec<BigInt>> = (0..k)
        .filter(|j| !support.contains(j))
        .map(|j| v[j].clone())
        .collect();
    RationalCone::from_generators(m_basis.len(), &gens).expect("dual images have length m")
}

/// The chart cone σ_f in N ⊗ Q for a relevant square-free support.
pub fn chart_cone(ring: &GradedPolyRing, support: &[usize]) -> Result<RationalCone, Error> {
    if !ring.is_relevant_support(support) {
        return Err(Error::IrrelevantSupport);
    }
    let m_basis = lattice::kernel_basis(ring.degree_map().free_matrix());
    let sigma = sigma_from_basis(&m_basis, ring.num_vars(), support);
    assert!(
        sigma.is_simplicial(),
        "chart cones of relevant supports are simplicial"
    );
    Ok(sigma)
}

/// Builds the full spectrum: charts for all relevant square-free supports,
/// the character lattice, dimension, and the exact separatedness verdict.
/// An empty chart list is a legal result (the empty spectrum), not an error.
pub fn build_proj(ring: &GradedPolyRing, limits: &Limits) -> Result<ProjData, Error> {
    let supports = ring.relevant_supports(limits)?;
    let m_basis = lattice::kernel_basis(ring.degree_map().free_matrix());
    let k = ring.num_vars();
    let charts: Vec<Chart> = supports
        .iter()
        .map(|s| {
            let sigma = sigma_from_basis(&m_basis, k, s);
            assert!(
                sigma.is_simplicial(),
                "chart cones of relevant supports are simplicial"
            );
            Chart {
                support: s.clone(),
                degree_cone: ring.cone_of_support(s),
                sigma,
                semigroup: None,
            }
        })
        .collect();
    let dimension = if charts.is_empty() {
        None
    } else {
        Some(m_basis.len())
    };
    let mut data = ProjData {
        ring: ring.clone(),
        m_basis,
        charts,
        dimension,
        separated: true,
        separation_witness: None,
        fan_complete: None,
    };
    let (separated, witness) = is_separated_exact(&data)?;
    data.separated = separated;
    data.separation_witness = witness;
    if separated && !data.charts.is_empty() {
        let fan: Vec<RationalCone> = data.charts.iter().map(|c| c.sigma.clone()).collect();
        data.fan_complete = Some(cones::is_complete_fan(&fan)?);
    }
    Ok(data)
}

/// Exact separatedness of the glued charts. The gluing chart of a pair of
/// supports is the chart of their union, so the spectrum is separated iff
/// for every pair the chart cones intersect exactly in the union's cone and
/// that cone is a face of both. Returns the first offending pair otherwise.
pub fn is_separated_exact(p: &ProjData) -> Result<(bool, Option<(usize, usize)>), Error> {
    let indices: Vec<usize> = (0..p.charts.len()).collect();
    is_separated_exact_on(p, &indices)
}

/// The exact test restricted to a subset of charts.
pub fn is_separated_exact_on(
    p: &ProjData,
    subset: &[usize],
) -> Result<(bool, Option<(usize, usize)>), Error> {
    let by_support: BTreeMap<&[usize], usize> = p
        .charts
        .iter()
        .enumerate()
        .map(|(i, c)| (c.support.as_slice(), i))
        .collect();
    for (a, &i) in subset.iter().enumerate() {
        for &j in subset.iter().skip(a + 1) {
            let union: Vec<usize> = {
                let mut u: Vec<usize> = p.charts[i]
                    .support
                    .iter()
                    .chain(&p.charts[j].support)
                    .cloned()
                    .collect();
                u.sort();
                u.dedup();
                u
            };
            let glue = by_support
                .get(union.as_slice())
                .copied()
                .expect("union of relevant supports is relevant");
            let meet = p.charts[i].sigma.intersect(&p.charts[j].sigma)?;
            let glue_sigma = &p.charts[glue].sigma;
            if meet != *glue_sigma
                || !glue_sigma.is_face_of(&p.charts[i].sigma)?
                || !glue_sigma.is_face_of(&p.charts[j].sigma)?
            {
                return Ok((false, Some((i, j))));
            }
        }
    }
    Ok((true, None))
}

/// Sufficient separatedness criterion for a subset of charts: the degree
/// cones pairwise intersect with nonempty interior. True here implies the
/// exact test on the same subset; the converse can fail.
pub fn is_separated_sufficient(p: &ProjData, subset: &[usize]) -> Result<bool, Error> {
    for (a, &i) in subset.iter().enumerate() {
        for &j in subset.iter().skip(a + 1) {
            if !p.charts[i]
                .degree_cone
                .has_full_dim_intersection(&p.charts[j].degree_cone)?
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All maximal subsets of charts passing the sufficient pairwise test,
/// i.e. maximal cliques of the overlap graph; each is a separated open
/// subset of the spectrum.
pub fn maximal_separated_subcollections(
    p: &ProjData,
    limits: &Limits,
) -> Result<Vec<Vec<usize>>, Error> {
    let n = p.charts.len();
    if n > limits.max_charts {
        return Err(Error::LimitExceeded {
            what: "charts in clique enumeration",
            limit: limits.max_charts,
            needed: n,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let edge = p.charts[i]
                .degree_cone
                .has_full_dim_intersection(&p.charts[j].degree_cone)?;
            adj[i][j] = edge;
            adj[j][i] = edge;
        }
    }
    let mut cliques = Vec::new();
    bron_kerbosch(
        &adj,
        &mut Vec::new(),
        &mut (0..n).collect(),
        &mut Vec::new(),
        &mut cliques,
    );
    for c in &mut cliques {
        c.sort();
    }
    cliques.sort();
    Ok(cliques)
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    p: &mut Vec<usize>,
    x: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let candidates = p.clone();
    for v in candidates {
        r.push(v);
        let mut p2: Vec<usize> = p.iter().cloned().filter(|&u| adj[v][u]).collect();
        let mut x2: Vec<usize> = x.iter().cloned().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r, &mut p2, &mut x2, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// Generators of the degree-zero semigroup of a chart: the monoid
/// σ_f^∨ ∩ M. The lineality space of σ_f^∨ is split off as a lattice and
/// the Hilbert basis of the pointed quotient is lifted back.
pub fn chart_semigroup_generators(
    ring: &GradedPolyRing,
    support: &[usize],
    limits: &Limits,
) -> Result<ChartSemigroup, Error> {
    let sigma = chart_cone(ring, support)?;
    let m_basis = lattice::kernel_basis(ring.degree_map().free_matrix());
    let dual = sigma.dual();

    let mut coords: Vec<Vec<BigInt>> = Vec::new();
    if dual.lineality_basis().is_empty() {
        coords.extend(dual.hilbert_basis(limits.max_hilbert_points)?);
    } else {
        let lin = dual.lineality_basis().to_vec();
        for l in &lin {
            coords.push(l.clone());
            coords.push(l.iter().map(|x| -x).collect());
        }
        // Project to the quotient by the lineality lattice and lift the
        // Hilbert basis back; lifts land in the dual cone automatically
        // because the dual contains its lineality space.
        let (quot, proj) = lattice::cokernel(&IntegerMatrix::from_cols(lin.clone()));
        assert!(quot.torsion().is_empty(), "lineality lattice is saturated");
        let pmat = proj.free_matrix();
        let q_gens: Vec<Vec<BigInt>> = dual.rays().iter().map(|r| pmat.mul_vec(r)).collect();
        let q_cone = RationalCone::from_generators(quot.free_rank(), &q_gens)?;
        assert!(q_cone.is_pointed());
        let hnf = lattice::hermite_basis(lin.clone());
        for h in q_cone.hilbert_basis(limits.max_hilbert_points)? {
            let x0 = lattice::solve_integer(pmat, &h).expect("quotient projection is surjective");
            let x = lattice::coset_reduce(&x0, &hnf);
            debug_assert!(dual.contains(&x));
            coords.push(x);
        }
    }
    coords.sort();
    coords.dedup();

    let basis_matrix = IntegerMatrix::from_cols(m_basis);
    let exponents: Vec<Vec<BigInt>> = coords.iter().map(|c| basis_matrix.mul_vec(c)).collect();
    Ok(ChartSemigroup {
        m_coords: coords,
        exponents,
    })
}

/// The restriction of the grading to a single degree ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayRestriction {
    /// Generators of the monoid of monomials whose degree is a natural
    /// multiple of the ray degree, with the multiple.
    pub generators: Vec<(Monomial, BigInt)>,
    /// The generators of positive multiple, i.e. the charts of the
    /// N-graded subring.
    pub charts: Vec<Monomial>,
    /// Whether the charts with degree on the ray cover the full spectrum:
    /// every relevant support contains a relevant support realized by a
    /// monomial with degree on the ray. When true, the spectrum agrees with
    /// the classical projective spectrum of the subring.
    pub covers: bool,
}

/// Computes the N-graded sub-problem on the monomials with degree in N·d.
pub fn restrict_to_ray(
    ring: &GradedPolyRing,
    d: &DegreeVector,
    limits: &Limits,
) -> Result<RayRestriction, Error> {
    if d.free.len() != ring.free_rank() || d.torsion.len() != ring.group().torsion().len() {
        return Err(Error::GroupMismatch);
    }
    if d.is_zero() {
        return Err(Error::InvalidArgument("ray degree must be nonzero"));
    }
    let k = ring.num_vars();
    let r = ring.free_rank();
    let free = ring.degree_map().free_matrix();

    // Cone in Q^{k+1}: exponents and the multiple are nonnegative, and the
    // free part of the degree equals the multiple of the ray degree.
    let mut ineqs: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..=k {
        let mut e = vec![BigInt::zero(); k + 1];
        e[i] = BigInt::one();
        ineqs.push(e);
    }
    let mut eqs: Vec<Vec<BigInt>> = Vec::new();
    for row in 0..r {
        let mut e: Vec<BigInt> = free.row(row).to_vec();
        e.push(-d.free[row].clone());
        eqs.push(e);
    }
    let cone = RationalCone::from_h_rep(k + 1, &ineqs, &eqs)?;
    assert!(cone.is_pointed());

    let torsion = ring.group().torsion();
    let hb = if torsion.is_empty() {
        cone.hilbert_basis(limits.max_hilbert_points)?
    } else {
        // Restrict to the sublattice where the torsion coordinates of the
        // degree match the multiple of the ray's torsion part.
        let tors_part = ring.degree_map().hom().torsion_part();
        let s = torsion.len();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for i in 0..s {
            let mut row: Vec<BigInt> = tors_part.row(i).to_vec();
            row.push(-d.torsion[i].clone());
            for j in 0..s {
                row.push(if i == j { torsion[i].clone() } else { BigInt::zero() });
            }
            rows.push(row);
        }
        let ker = lattice::kernel_basis(&IntegerMatrix::from_rows(rows));
        let projected: Vec<Vec<BigInt>> = ker.iter().map(|v| v[..k + 1].to_vec()).collect();
        let basis = lattice::hermite_basis(projected);
        assert_eq!(basis.len(), k + 1, "congruence lattice has full rank");
        let basis_matrix = IntegerMatrix::from_cols(basis);
        let pre_ineqs: Vec<Vec<BigInt>> = cone
            .facets()
            .iter()
            .map(|f| basis_matrix.transpose().mul_vec(f))
            .collect();
        let pre_eqs: Vec<Vec<BigInt>> = cone
            .equations()
            .iter()
            .map(|e| basis_matrix.transpose().mul_vec(e))
            .collect();
        let pre = RationalCone::from_h_rep(k + 1, &pre_ineqs, &pre_eqs)?;
        pre.hilbert_basis(limits.max_hilbert_points)?
            .into_iter()
            .map(|y| basis_matrix.mul_vec(&y))
            .collect()
    };

    let mut generators: Vec<(Monomial, BigInt)> = hb
        .into_iter()
        .map(|v| {
            let m = Monomial::new(v[..k].to_vec()).expect("cone forces nonnegative exponents");
            (m, v[k].clone())
        })
        .collect();
    generators.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let charts: Vec<Monomial> = generators
        .iter()
        .filter(|(_, mult)| mult.is_positive())
        .map(|(m, _)| m.clone())
        .collect();

    // Coverage: a support is realizable on the ray when the generator
    // supports inside it exhaust it.
    let relevant = ring.relevant_supports(limits)?;
    let gen_supports: Vec<Vec<usize>> = generators
        .iter()
        .filter(|(m, _)| !m.is_unit())
        .map(|(m, _)| m.support())
        .collect();
    let realizable = |i_set: &[usize]| -> bool {
        let mut union: Vec<usize> = Vec::new();
        for gs in &gen_supports {
            if gs.iter().all(|x| i_set.contains(x)) {
                union.extend(gs.iter().cloned());
            }
        }
        union.sort();
        union.dedup();
        union == i_set
    };
    let realizable_relevant: Vec<&Vec<usize>> =
        relevant.iter().filter(|s| realizable(s)).collect();
    let covers = !relevant.is_empty()
        && relevant.iter().all(|j| {
            realizable_relevant
                .iter()
                .any(|i| i.iter().all(|x| j.contains(x)))
        });

    Ok(RayRestriction {
        generators,
        charts,
        covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::GradedPolyRing;
    use crate::lattice::FgAbelianGroup;

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

    #[test]
    fn standard_z2_is_a_point() {
        let p = build_proj(&ring(2, &[&[1, 0], &[0, 1]]), &lim()).unwrap();
        assert_eq!(p.charts().len(), 1);
        assert_eq!(p.dimension(), Some(0));
        assert!(p.separated());
    }

    #[test]
    fn componentwise_zr_is_a_point() {
        for r in 2..=5 {
            let degrees: Vec<Vec<i64>> = (0..r)
                .map(|i| (0..r).map(|j| if i == j { 1 } else { 0 }).collect())
                .collect();
            let refs: Vec<&[i64]> = degrees.iter().map(|v| v.as_slice()).collect();
            let p = build_proj(&ring(r, &refs), &lim()).unwrap();
            assert_eq!(p.charts().len(), 1);
            assert_eq!(p.dimension(), Some(0));
        }
    }

    #[test]
    fn axis_grading_gives_empty_spectrum() {
        let p = build_proj(&ring(2, &[&[1, 0], &[1, 0]]), &lim()).unwrap();
        assert!(p.is_empty_spectrum());
        assert_eq!(p.dimension(), None);
        assert!(p.separated());
    }

    #[test]
    fn difference_grading_is_doubled_line() {
        let p = build_proj(&ring(1, &[&[1], &[-1]]), &lim()).unwrap();
        assert_eq!(p.charts().len(), 3);
        assert_eq!(p.dimension(), Some(1));
        assert!(!p.separated());
        assert_eq!(p.separation_witness(), Some((0, 1)));
        assert_eq!(p.charts()[0].support, alloc::vec![0]);
        assert_eq!(p.charts()[1].support, alloc::vec![1]);
        // The two one-variable charts carry the same cone: the doubled
        // origin.
        assert_eq!(p.charts()[0].sigma, p.charts()[1].sigma);
    }

    #[test]
    fn total_degree_is_p1() {
        let p = build_proj(&ring(1, &[&[1], &[1]]), &lim()).unwrap();
        assert_eq!(p.charts().len(), 3);
        assert_eq!(p.dimension(), Some(1));
        assert!(p.separated());
        assert_eq!(p.fan_complete(), Some(true));
        let mut rays: Vec<Vec<BigInt>> = p
            .charts()
            .iter()
            .flat_map(|c| c.sigma.rays().to_vec())
            .collect();
        rays.sort();
        rays.dedup();
        assert_eq!(rays, alloc::vec![alloc::vec![bi(-1)], alloc::vec![bi(1)]]);
    }

    #[test]
    fn chart_cones() {
        // Doubled line: both one-variable charts map to the same ray.
        let diff = ring(1, &[&[1], &[-1]]);
        let c0 = chart_cone(&diff, &[0]).unwrap();
        let c1 = chart_cone(&diff, &[1]).unwrap();
        assert_eq!(c0, c1);
        assert_eq!(c0.dimension(), 1);

        // Full support gives the torus chart.
        assert!(chart_cone(&diff, &[0, 1]).unwrap().is_zero_cone());

        // Irrelevant support is rejected.
        assert_eq!(chart_cone(&diff, &[]), Err(Error::IrrelevantSupport));
    }

    #[test]
    fn three_variable_example() {
        let three = ring(2, &[&[1, 0], &[1, 1], &[0, 1]]);
        let p = build_proj(&three, &lim()).unwrap();
        assert_eq!(p.charts().len(), 4);
        assert!(!p.separated());

        // {T1T2, T1T3} is separated, {T1T2, T2T3} is not.
        let i12 = p.chart_index_by_support(&[0, 1]).unwrap();
        let i13 = p.chart_index_by_support(&[0, 2]).unwrap();
        let i23 = p.chart_index_by_support(&[1, 2]).unwrap();
        assert!(is_separated_sufficient(&p, &[i12, i13]).unwrap());
        assert!(!is_separated_sufficient(&p, &[i12, i23]).unwrap());
        assert!(is_separated_sufficient(&p, &[i12]).unwrap());

        let full = p.chart_index_by_support(&[0, 1, 2]).unwrap();
        let cliques = maximal_separated_subcollections(&p, &lim()).unwrap();
        assert_eq!(
            cliques,
            alloc::vec![
                alloc::vec![i12, i13, full],
                alloc::vec![i13, i23, full]
            ]
        );
    }

    #[test]
    fn maximal_cliques_degenerate_cases() {
        let p1 = build_proj(&ring(1, &[&[1], &[1]]), &lim()).unwrap();
        let cliques = maximal_separated_subcollections(&p1, &lim()).unwrap();
        assert_eq!(cliques, alloc::vec![alloc::vec![0, 1, 2]]);

        let empty = build_proj(&ring(2, &[&[1, 0], &[1, 0]]), &lim()).unwrap();
        assert!(maximal_separated_subcollections(&empty, &lim())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn chart_semigroups() {
        // P^1, chart {T1}: the coordinate is T2/T1.
        let total = ring(1, &[&[1], &[1]]);
        let s = chart_semigroup_generators(&total, &[0], &lim()).unwrap();
        assert_eq!(s.exponents, alloc::vec![alloc::vec![bi(-1), bi(1)]]);

        // Doubled line, torus chart {T1,T2}: T1T2 and its inverse.
        let diff = ring(1, &[&[1], &[-1]]);
        let s = chart_semigroup_generators(&diff, &[0, 1], &lim()).unwrap();
        let mut exps = s.exponents.clone();
        exps.sort();
        assert_eq!(
            exps,
            alloc::vec![alloc::vec![bi(-1), bi(-1)], alloc::vec![bi(1), bi(1)]]
        );

        // Weighted grading deg T1 = 1, deg T2 = 2, chart {T2}: T1^2/T2.
        let weighted = ring(1, &[&[1], &[2]]);
        let s = chart_semigroup_generators(&weighted, &[1], &lim()).unwrap();
        assert_eq!(s.exponents, alloc::vec![alloc::vec![bi(2), bi(-1)]]);
    }

    #[test]
    fn ray_restrictions() {
        let lim = lim();
        // Total degree, d = 1: the classical P^1 presentation.
        let total = ring(1, &[&[1], &[1]]);
        let d = DegreeVector {
            free: alloc::vec![bi(1)],
            torsion: Vec::new(),
        };
        let r = restrict_to_ray(&total, &d, &lim).unwrap();
        assert_eq!(r.charts.len(), 2);
        assert!(r.covers);

        // Componentwise Z^2, d = (1,1): generated by T1T2, still a point.
        let std2 = ring(2, &[&[1, 0], &[0, 1]]);
        let d = DegreeVector {
            free: alloc::vec![bi(1), bi(1)],
            torsion: Vec::new(),
        };
        let r = restrict_to_ray(&std2, &d, &lim).unwrap();
        assert_eq!(r.generators.len(), 1);
        assert_eq!(r.generators[0].0.exponents(), &[bi(1), bi(1)]);
        assert!(r.covers);

        // Boundary ray without relevant monomials: hypothesis fails.
        let d = DegreeVector {
            free: alloc::vec![bi(1), bi(0)],
            torsion: Vec::new(),
        };
        let r = restrict_to_ray(&std2, &d, &lim).unwrap();
        assert!(!r.covers);
    }

    #[test]
    fn sufficiency_implies_exact_on_three_variable() {
        let three = ring(2, &[&[1, 0], &[1, 1], &[0, 1]]);
        let p = build_proj(&three, &lim()).unwrap();
        for i in 0..p.charts().len() {
            for j in i + 1..p.charts().len() {
                if is_separated_sufficient(&p, &[i, j]).unwrap() {
                    let (ok, _) = is_separated_exact_on(&p, &[i, j]).unwrap();
                    assert!(ok, "sufficient pair ({i},{j}) must pass the exact test");
                }
            }
        }
    }
}
