//! Exact rational polyhedral cones in Q^n.
//!
//! Cones are kept in a canonical double description: extreme rays modulo the
//! lineality space (lifted orthogonally off it and primitivized), a Hermite
//! basis of the lineality lattice, irredundant facet normals, and a Hermite
//! basis of the span equations. Equality of cones is structural equality of
//! the canonical data, which makes deduplication of fans and chambers a
//! plain set lookup.
//!
//! Dual conversion runs the incremental double-description method: insert
//! one inequality at a time, first shrinking the lineality space, then
//! combining adjacent positive/negative ray pairs. Adjacency is decided by
//! the combinatorial criterion: two extreme rays are adjacent exactly when
//! no third extreme ray is tight on every inequality tight on both.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::lattice::{self, IntegerMatrix};
use crate::linalg;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalCone {
    ambient: usize,
    /// Extreme rays modulo lineality, orthogonal lifts, primitive, sorted.
    rays: Vec<Vec<BigInt>>,
    /// Hermite basis of the lineality lattice (saturated).
    lineality: Vec<Vec<BigInt>>,
    /// Irredundant facet normals within the span, primitive, sorted.
    facets: Vec<Vec<BigInt>>,
    /// Hermite basis of the lattice orthogonal to the span.
    equations: Vec<Vec<BigInt>>,
    dim: usize,
}

/// Output of the double-description pass on a list of inequalities:
/// a basis of the lineality space of `{x : <a,x> >= 0 for all a}` and the
/// extreme rays of the quotient by it.
fn double_description(ambient: usize, ineqs: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut lin: Vec<Vec<BigInt>> = (0..ambient)
        .map(|i| {
            let mut e = vec![BigInt::zero(); ambient];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();

    // Deduplicated primitive inequalities, zero rows dropped.
    let mut system: Vec<Vec<BigInt>> = Vec::new();
    let mut seen = BTreeSet::new();
    for a in ineqs {
        assert_eq!(a.len(), ambient, "inequality has wrong length");
        if let Some(p) = linalg::primitive(a) {
            if seen.insert(p.clone()) {
                system.push(p);
            }
        }
    }

    for step in 0..system.len() {
        let a = system[step].clone();
        if let Some(pos) = lin.iter().position(|l| !linalg::dot(&a, l).is_zero()) {
            // The inequality cuts the lineality space: one basis vector
            // becomes a ray, the rest and all rays project onto a = 0.
            let mut l0 = lin.remove(pos);
            if linalg::dot(&a, &l0).is_negative() {
                for x in &mut l0 {
                    *x = -&*x;
                }
            }
            let al0 = linalg::dot(&a, &l0);
            for l in &mut lin {
                let av = linalg::dot(&a, l);
                *l = linalg::primitive(&linalg::combine(&al0, l, &-av, &l0))
                    .expect("projected lineality vector is nonzero");
            }
            for r in &mut rays {
                let av = linalg::dot(&a, r);
                *r = linalg::primitive(&linalg::combine(&al0, r, &-av, &l0))
                    .expect("projected ray is nonzero");
            }
            rays.push(l0);
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| linalg::dot(&a, r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            continue;
        }
        // Tight sets over the inequalities processed so far.
        let tight: Vec<BTreeSet<usize>> = rays
            .iter()
            .map(|r| {
                (0..step)
                    .filter(|&i| linalg::dot(&system[i], r).is_zero())
                    .collect()
            })
            .collect();
        let adjacent = |p: usize, q: usize| -> bool {
            let common: BTreeSet<usize> = tight[p].intersection(&tight[q]).cloned().collect();
            !rays.iter().enumerate().any(|(i, _)| {
                i != p && i != q && common.iter().all(|j| tight[i].contains(j))
            })
        };
        let mut next: Vec<Vec<BigInt>> = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            if !v.is_negative() {
                next.push(rays[i].clone());
            }
        }
        for p in 0..rays.len() {
            if !vals[p].is_positive() {
                continue;
            }
            for q in 0..rays.len() {
                if !vals[q].is_negative() || !adjacent(p, q) {
                    continue;
                }
                let w = linalg::combine(&vals[p], &rays[q], &-vals[q].clone(), &rays[p]);
                next.push(linalg::primitive(&w).expect("combined ray is nonzero"));
            }
        }
        rays = next;
    }
    (lin, rays)
}

/// Hermite basis of the saturation of the span of `vectors` in Z^n.
fn saturated_basis(ambient: usize, vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let perp = lattice::kernel_basis(&IntegerMatrix::from_rows(vectors.to_vec()));
    if perp.is_empty() {
        return lattice::hermite_basis(IntegerMatrix::identity(ambient).row_vecs());
    }
    let sat = lattice::kernel_basis(&IntegerMatrix::from_rows(perp));
    lattice::hermite_basis(sat)
}

impl RationalCone {
    /// Cone spanned by rational generators; zero vectors are discarded and
    /// the result is canonicalized to extreme rays plus lineality basis.
    pub fn from_rational_generators(
        ambient: usize,
        vectors: &[Vec<BigRational>],
    ) -> Result<Self, Error> {
        let mut ints = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
            if let Some(p) = linalg::rational_to_primitive(v) {
                ints.push(p);
            }
        }
        Ok(Self::build(ambient, ints))
    }

    /// Cone spanned by integer generators.
    pub fn from_generators(ambient: usize, vectors: &[Vec<BigInt>]) -> Result<Self, Error> {
        let mut ints = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
            if let Some(p) = linalg::primitive(v) {
                ints.push(p);
            }
        }
        Ok(Self::build(ambient, ints))
    }

    pub fn zero(ambient: usize) -> Self {
        Self::build(ambient, Vec::new())
    }

    fn build(ambient: usize, gens: Vec<Vec<BigInt>>) -> Self {
        let (lin_dual, facet_dirs) = double_description(ambient, &gens);
        let equations = saturated_basis(ambient, &lin_dual);
        let facets = Self::lift_sorted(&facet_dirs, &lin_dual);
        let mut system = facets.clone();
        for e in &equations {
            system.push(e.clone());
            system.push(e.iter().map(|x| -x).collect());
        }
        let (lin, rays_raw) = double_description(ambient, &system);
        let lineality = saturated_basis(ambient, &lin);
        let rays = Self::lift_sorted(&rays_raw, &lineality);
        let dim = ambient - equations.len();
        RationalCone {
            ambient,
            rays,
            lineality,
            facets,
            equations,
            dim,
        }
    }

    /// Cone `{x : <a,x> >= 0, <e,x> = 0}` from a possibly redundant
    /// H-description.
    pub fn from_h_rep(
        ambient: usize,
        ineqs: &[Vec<BigInt>],
        eqs: &[Vec<BigInt>],
    ) -> Result<Self, Error> {
        for v in ineqs.iter().chain(eqs) {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        let mut system: Vec<Vec<BigInt>> = ineqs.to_vec();
        for e in eqs {
            system.push(e.clone());
            system.push(e.iter().map(|x| -x).collect());
        }
        let (lin, rays_raw) = double_description(ambient, &system);
        let lineality = saturated_basis(ambient, &lin);
        let rays = Self::lift_sorted(&rays_raw, &lineality);
        // Re-derive the irredundant facets from the generators.
        let mut gens = rays.clone();
        for l in &lineality {
            gens.push(l.clone());
            gens.push(l.iter().map(|x| -x).collect());
        }
        let (lin_dual, facet_dirs) = double_description(ambient, &gens);
        let equations = saturated_basis(ambient, &lin_dual);
        let facets = Self::lift_sorted(&facet_dirs, &lin_dual);
        let dim = ambient - equations.len();
        Ok(RationalCone {
            ambient,
            rays,
            lineality,
            facets,
            equations,
            dim,
        })
    }

    fn lift_sorted(vectors: &[Vec<BigInt>], modulo: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let mut out: Vec<Vec<BigInt>> = vectors
            .iter()
            .filter_map(|v| linalg::reduce_mod_span(v, modulo))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the linear span of the cone.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Extreme rays modulo lineality (all extreme rays when pointed).
    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn lineality_basis(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    pub fn facets(&self) -> &[Vec<BigInt>] {
        &self.facets
    }

    pub fn equations(&self) -> &[Vec<BigInt>] {
        &self.equations
    }

    /// Canonical generator list: extreme rays plus both signs of the
    /// lineality basis.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g.sort();
        g
    }

    pub fn is_zero_cone(&self) -> bool {
        self.dim == 0
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Pointed with linearly independent generators.
    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && self.rays.len() == self.dim
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.equations.iter().all(|e| linalg::dot(e, v).is_zero())
            && self.facets.iter().all(|f| !linalg::dot(f, v).is_negative())
    }

    pub fn contains_rational(&self, v: &[BigRational]) -> bool {
        match linalg::rational_to_primitive(v) {
            Some(p) => self.contains(&p),
            None => true, // the origin
        }
    }

    /// Membership in the relative interior: on the span and strictly inside
    /// every facet.
    pub fn relative_interior_contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.equations.iter().all(|e| linalg::dot(e, v).is_zero())
            && self.facets.iter().all(|f| linalg::dot(f, v).is_positive())
    }

    pub fn relative_interior_contains_rational(&self, v: &[BigRational]) -> bool {
        match linalg::rational_to_primitive(v) {
            Some(p) => self.relative_interior_contains(&p),
            None => self.dim == 0,
        }
    }

    pub fn intersect(&self, other: &RationalCone) -> Result<RationalCone, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let ineqs: Vec<Vec<BigInt>> = self.facets.iter().chain(&other.facets).cloned().collect();
        let eqs: Vec<Vec<BigInt>> = self
            .equations
            .iter()
            .chain(&other.equations)
            .cloned()
            .collect();
        Self::from_h_rep(self.ambient, &ineqs, &eqs)
    }

    /// Whether the interior of the intersection is nonempty, i.e. the
    /// intersection has full ambient dimension.
    pub fn has_full_dim_intersection(&self, other: &RationalCone) -> Result<bool, Error> {
        Ok(self.intersect(other)?.dimension() == self.ambient)
    }

    /// Dual cone `{y : <y,x> >= 0 on self}`.
    pub fn dual(&self) -> RationalCone {
        Self::from_h_rep(self.ambient, &self.generators(), &[])
            .expect("dual of a well-formed cone")
    }

    /// Image under an integer linear map given by `matrix` (rows map the
    /// ambient space of `self` into Q^rows).
    pub fn image(&self, matrix: &IntegerMatrix) -> Result<RationalCone, Error> {
        if matrix.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: matrix.cols(),
            });
        }
        let gens: Vec<Vec<BigInt>> = self.generators().iter().map(|g| matrix.mul_vec(g)).collect();
        Self::from_generators(matrix.rows(), &gens)
    }

    /// Smallest face of `self` containing all the given points of the cone.
    fn smallest_face_containing(&self, points: &[Vec<BigInt>]) -> RationalCone {
        let tight: Vec<Vec<BigInt>> = self
            .facets
            .iter()
            .filter(|f| points.iter().all(|p| linalg::dot(f, p).is_zero()))
            .cloned()
            .collect();
        let mut eqs = self.equations.clone();
        eqs.extend(tight);
        Self::from_h_rep(self.ambient, &self.facets, &eqs).expect("face of a well-formed cone")
    }

    /// Whether `self` is a face of `of`, i.e. `of` cut by a supporting
    /// hyperplane (including `of` itself and, for pointed cones, the zero
    /// cone).
    pub fn is_face_of(&self, of: &RationalCone) -> Result<bool, Error> {
        if self.ambient != of.ambient {
            return Err(Error::DimensionMismatch {
                expected: of.ambient,
                got: self.ambient,
            });
        }
        let gens = self.generators();
        if !gens.iter().all(|g| of.contains(g)) {
            return Ok(false);
        }
        Ok(*self == of.smallest_face_containing(&gens))
    }

    /// The facets of `self` as cones (codimension-one faces).
    pub fn facet_cones(&self) -> Vec<RationalCone> {
        self.facets
            .iter()
            .map(|f| {
                let mut eqs = self.equations.clone();
                eqs.push(f.clone());
                Self::from_h_rep(self.ambient, &self.facets, &eqs)
                    .expect("facet of a well-formed cone")
            })
            .collect()
    }

    /// A grading vector strictly positive on the cone minus the origin.
    /// Exists exactly when the cone is pointed.
    fn positive_grading(&self) -> Vec<BigInt> {
        assert!(self.is_pointed());
        let mut lambda = vec![BigInt::zero(); self.ambient];
        for f in &self.facets {
            for (a, b) in lambda.iter_mut().zip(f) {
                *a += b;
            }
        }
        lambda
    }

    /// Unique minimal generating set of the monoid `self ∩ Z^n`.
    ///
    /// Enumerates the lattice points of the fundamental parallelepiped of
    /// each simplex in a pulling triangulation, then removes every candidate
    /// that is a sum of two nonzero monoid elements.
    pub fn hilbert_basis(&self, max_points: usize) -> Result<Vec<Vec<BigInt>>, Error> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        if self.dim == 0 {
            return Ok(Vec::new());
        }
        let mut candidates: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        for simplex in self.triangulate() {
            for r in &simplex {
                candidates.insert(r.clone());
            }
            for p in parallelepiped_points(self.ambient, &simplex, max_points)? {
                candidates.insert(p);
            }
        }
        let lambda = self.positive_grading();
        let mut sorted: Vec<Vec<BigInt>> = candidates.into_iter().collect();
        sorted.sort_by(|a, b| {
            linalg::dot(&lambda, a)
                .cmp(&linalg::dot(&lambda, b))
                .then_with(|| a.cmp(b))
        });
        let mut kept: Vec<Vec<BigInt>> = Vec::new();
        for h in sorted {
            let reducible = kept.iter().any(|k| {
                let rest: Vec<BigInt> = h.iter().zip(k).map(|(a, b)| a - b).collect();
                !linalg::is_zero_vec(&rest) && self.monoid_contains(&rest, &kept, &lambda)
            });
            if !reducible {
                kept.push(h);
            }
        }
        kept.sort();
        Ok(kept)
    }

    /// Membership of `target` in the monoid generated by `gens` inside a
    /// pointed cone, by bounded search over the positive grading.
    fn monoid_contains(&self, target: &[BigInt], gens: &[Vec<BigInt>], lambda: &[BigInt]) -> bool {
        if linalg::is_zero_vec(target) {
            return true;
        }
        if !self.contains(target) {
            return false;
        }
        let deg = linalg::dot(lambda, target);
        for g in gens {
            if linalg::dot(lambda, g) > deg {
                continue;
            }
            let rest: Vec<BigInt> = target.iter().zip(g).map(|(a, b)| a - b).collect();
            if self.monoid_contains(&rest, gens, lambda) {
                return true;
            }
        }
        false
    }

    /// Pulling triangulation into simplicial subcones, returned as lists of
    /// extreme rays.
    fn triangulate(&self) -> Vec<Vec<Vec<BigInt>>> {
        assert!(self.is_pointed());
        if self.rays.len() == self.dim {
            if self.rays.is_empty() {
                return Vec::new();
            }
            return vec![self.rays.clone()];
        }
        let apex = &self.rays[0];
        let mut simplices = Vec::new();
        for f in &self.facets {
            if linalg::dot(f, apex).is_zero() {
                continue;
            }
            let on_facet: Vec<Vec<BigInt>> = self
                .rays
                .iter()
                .filter(|r| linalg::dot(f, r).is_zero())
                .cloned()
                .collect();
            let facet_cone = RationalCone::from_generators(self.ambient, &on_facet)
                .expect("facet rays are well-formed");
            for mut s in facet_cone.triangulate() {
                s.push(apex.clone());
                simplices.push(s);
            }
        }
        simplices
    }
}

/// Lattice points of the half-open parallelepiped spanned by the linearly
/// independent integer vectors `rays`, excluding the origin. Points of
/// `Z^ambient ∩ span(rays)` are enumerated one per residue class modulo the
/// lattice generated by the rays.
fn parallelepiped_points(
    ambient: usize,
    rays: &[Vec<BigInt>],
    max_points: usize,
) -> Result<Vec<Vec<BigInt>>, Error> {
    let d = rays.len();
    let vm = IntegerMatrix::from_cols(rays.to_vec());
    let snf = lattice::smith_normal_form(&vm);
    assert_eq!(snf.rank(), d, "parallelepiped rays must be independent");
    let diag = snf.diagonal();
    let mut index = BigInt::from(1);
    for s in &diag {
        index *= s;
    }
    if index > BigInt::from(max_points) {
        return Err(Error::LimitExceeded {
            what: "hilbert basis parallelepiped points",
            limit: max_points,
            needed: usize::MAX,
        });
    }
    let u_inv = snf.u.inverse_unimodular();
    let ray_rows: Vec<Vec<BigRational>> = (0..ambient)
        .map(|i| (0..d).map(|j| BigRational::from(rays[j][i].clone())).collect())
        .collect();

    let mut points = Vec::new();
    let mut counter = vec![BigInt::zero(); d];
    loop {
        if counter.iter().any(|c| !c.is_zero()) {
            // Representative of this residue class inside span(rays).
            let mut padded = counter.clone();
            padded.resize(ambient, BigInt::zero());
            let y = u_inv.mul_vec(&padded);
            // Shift into the fundamental parallelepiped: y - V floor(t)
            // where V t = y.
            let rhs: Vec<BigRational> = y.iter().map(|x| BigRational::from(x.clone())).collect();
            let t = linalg::solve(&ray_rows, &rhs).expect("representative lies in the span");
            let mut point = y;
            for (j, tj) in t.iter().enumerate() {
                let fl = tj.floor().to_integer();
                if !fl.is_zero() {
                    for (p, rj) in point.iter_mut().zip(&rays[j]) {
                        *p -= &fl * rj;
                    }
                }
            }
            if !linalg::is_zero_vec(&point) {
                points.push(point);
            }
        }
        // Odometer over the diagonal residues.
        let mut k = 0;
        loop {
            if k == d {
                return Ok(points);
            }
            counter[k] += 1;
            if counter[k] < diag[k] {
                break;
            }
            counter[k] = BigInt::zero();
            k += 1;
        }
    }
}

/// Whether the cones pairwise intersect in a common face of each.
pub fn is_fan(cones: &[RationalCone]) -> Result<bool, Error> {
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let t = cones[i].intersect(&cones[j])?;
            if !t.is_face_of(&cones[i])? || !t.is_face_of(&cones[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Completeness of a valid fan: the maximal cones cover the ambient space.
/// Decided by checking that every facet of every full-dimensional cone is
/// covered from the opposite side by another cone of the fan.
pub fn is_complete_fan(cones: &[RationalCone]) -> Result<bool, Error> {
    let Some(first) = cones.first() else {
        return Ok(false);
    };
    let n = first.ambient_dim();
    if n == 0 {
        return Ok(true);
    }
    let maximal: Vec<&RationalCone> = cones.iter().filter(|c| c.dimension() == n).collect();
    if maximal.is_empty() {
        return Ok(false);
    }
    for sigma in &maximal {
        for (f, tau) in sigma.facets().iter().zip(sigma.facet_cones()) {
            let covered = maximal.iter().any(|other| {
                **other != **sigma
                    && tau.generators().iter().all(|g| other.contains(g))
                    && other
                        .generators()
                        .iter()
                        .any(|g| linalg::dot(f, g).is_negative())
            });
            if !covered {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn vecs(vs: &[&[i64]]) -> Vec<Vec<BigInt>> {
        vs.iter().map(|v| v.iter().map(|&x| bi(x)).collect()).collect()
    }

    fn cone(vs: &[&[i64]]) -> RationalCone {
        let n = vs.first().map_or(0, |v| v.len());
        RationalCone::from_generators(n, &vecs(vs)).unwrap()
    }

    #[test]
    fn generators_canonicalized() {
        let c = cone(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(c.rays(), vecs(&[&[0, 1], &[1, 0]]).as_slice());
        assert!(RationalCone::from_generators(2, &[]).unwrap().is_zero_cone());
        let r = cone(&[&[2, 4]]);
        assert_eq!(r.rays(), vecs(&[&[1, 2]]).as_slice());
    }

    #[test]
    fn dimensions() {
        assert_eq!(cone(&[&[1, 0], &[1, 1]]).dimension(), 2);
        assert_eq!(cone(&[&[1, 1]]).dimension(), 1);
        assert_eq!(RationalCone::zero(2).dimension(), 0);
    }

    #[test]
    fn double_description_consistency() {
        let c = cone(&[&[1, 0], &[1, 1], &[0, 1], &[2, 1]]);
        for g in c.generators() {
            assert!(c.contains(&g));
        }
        for f in c.facets() {
            let tight = c.rays().iter().filter(|r| linalg::dot(f, r).is_zero()).count();
            assert!(tight >= c.dimension() - 1);
        }
    }

    #[test]
    fn intersection_examples() {
        // Two-dimensional cones meeting along the shared boundary ray only.
        let a = cone(&[&[1, 0], &[1, 1]]);
        let b = cone(&[&[1, 1], &[0, 1]]);
        let t = a.intersect(&b).unwrap();
        assert_eq!(t, cone(&[&[1, 1]]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        let x = cone(&[&[1, 0]]);
        let y = cone(&[&[0, 1]]);
        assert!(x.intersect(&y).unwrap().is_zero_cone());
    }

    #[test]
    fn full_dim_intersections() {
        let c12 = cone(&[&[1, 0], &[1, 1]]);
        let c23 = cone(&[&[1, 1], &[0, 1]]);
        let c13 = cone(&[&[1, 0], &[0, 1]]);
        assert!(!c12.has_full_dim_intersection(&c23).unwrap());
        assert!(c12.has_full_dim_intersection(&c13).unwrap());
        assert!(c12.has_full_dim_intersection(&c12).unwrap());
    }

    #[test]
    fn relative_interior() {
        let q = cone(&[&[1, 0], &[0, 1]]);
        assert!(q.relative_interior_contains(&[bi(1), bi(1)]));
        assert!(!q.relative_interior_contains(&[bi(1), bi(0)]));
        let r = cone(&[&[1, 1]]);
        assert!(r.relative_interior_contains(&[bi(2), bi(2)]));
        assert!(!r.relative_interior_contains(&[bi(1), bi(0)]));
    }

    #[test]
    fn faces() {
        let q = cone(&[&[1, 0], &[0, 1]]);
        assert!(cone(&[&[1, 0]]).is_face_of(&q).unwrap());
        assert!(!cone(&[&[1, 1]]).is_face_of(&q).unwrap());
        assert!(RationalCone::zero(2).is_face_of(&q).unwrap());
        assert!(q.is_face_of(&q).unwrap());
        // A full-dimensional subcone is not a face.
        let big = cone(&[&[1, 0], &[1, 1]]);
        assert!(!big.is_face_of(&q).unwrap());
    }

    #[test]
    fn lineality_handling() {
        let line = cone(&[&[1, 1], &[-1, -1]]);
        assert!(!line.is_pointed());
        assert_eq!(line.dimension(), 1);
        assert!(line.rays().is_empty());
        assert_eq!(line.lineality_basis().len(), 1);
        assert!(line.relative_interior_contains(&[bi(0), bi(0)]));
        let half = cone(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert!(!half.is_pointed());
        assert_eq!(half.dimension(), 2);
        assert_eq!(half.rays().len(), 1);
        // Same cone from a different generator list.
        let half2 = cone(&[&[2, 0], &[-1, 0], &[1, 5], &[-3, 1]]);
        assert_eq!(half, half2);
    }

    #[test]
    fn duality() {
        let c = cone(&[&[1, 0], &[1, 2]]);
        let d = c.dual();
        for g in c.generators() {
            for h in d.generators() {
                assert!(!linalg::dot(&g, &h).is_negative());
            }
        }
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn hilbert_basis_examples() {
        let q = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(q.hilbert_basis(1 << 20).unwrap(), vecs(&[&[0, 1], &[1, 0]]));
        let c = cone(&[&[1, 0], &[1, 2]]);
        assert_eq!(
            c.hilbert_basis(1 << 20).unwrap(),
            vecs(&[&[1, 0], &[1, 1], &[1, 2]])
        );
        let r = cone(&[&[1, 1]]);
        assert_eq!(r.hilbert_basis(1 << 20).unwrap(), vecs(&[&[1, 1]]));
        let line = cone(&[&[1, 0], &[-1, 0]]);
        assert_eq!(line.hilbert_basis(1 << 20), Err(Error::NotPointed));
    }

    #[test]
    fn fan_checks() {
        let fan = [cone(&[&[1, 0], &[0, 1]]), cone(&[&[0, 1], &[-1, 0]])];
        assert!(is_fan(&fan).unwrap());
        let overlapping = [cone(&[&[1, 0], &[0, 1]]), cone(&[&[1, 1], &[-1, 0]])];
        assert!(!is_fan(&overlapping).unwrap());

        let p1 = [cone(&[&[1]]), cone(&[&[-1]]), RationalCone::zero(1)];
        assert!(is_fan(&p1).unwrap());
        assert!(is_complete_fan(&p1).unwrap());
        assert!(!is_complete_fan(&[cone(&[&[1]])]).unwrap());

        let quadrants = [
            cone(&[&[1, 0], &[0, 1]]),
            cone(&[&[0, 1], &[-1, 0]]),
            cone(&[&[-1, 0], &[0, -1]]),
            cone(&[&[0, -1], &[1, 0]]),
        ];
        assert!(is_complete_fan(&quadrants).unwrap());
        assert!(!is_complete_fan(&quadrants[..3]).unwrap());
    }

    #[test]
    fn image_of_cone() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        let m = IntegerMatrix::from_rows(vecs(&[&[1, 1]]));
        let img = c.image(&m).unwrap();
        assert_eq!(img, RationalCone::from_generators(1, &vecs(&[&[1]])).unwrap());
    }
}
