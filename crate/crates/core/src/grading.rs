//! Gradings of polynomial rings by finitely generated abelian groups.
//!
//! A grading is a degree map sending each variable to a group element; every
//! monomial is then homogeneous. The cone of a monomial is spanned by the
//! free-part degrees of its support variables, and a monomial is relevant
//! exactly when that cone is full-dimensional. Torsion coordinates of
//! degrees are carried along but play no role in relevance: torsion
//! subgroups are finite, so finite index only depends on the free part.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cones::RationalCone;
use crate::error::Error;
use crate::lattice::{FgAbelianGroup, GroupHom, IntegerMatrix};
use crate::linalg;
use crate::Limits;

/// An element of the grading group: free coordinates plus torsion
/// coordinates reduced into the canonical range.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeVector {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl DegreeVector {
    pub fn new(group: &FgAbelianGroup, free: Vec<BigInt>, torsion: Vec<BigInt>) -> Result<Self, Error> {
        if free.len() != group.free_rank() {
            return Err(Error::DimensionMismatch {
                expected: group.free_rank(),
                got: free.len(),
            });
        }
        if torsion.len() != group.torsion().len() {
            return Err(Error::DimensionMismatch {
                expected: group.torsion().len(),
                got: torsion.len(),
            });
        }
        Ok(DegreeVector {
            free,
            torsion: group.reduce_torsion(&torsion),
        })
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.free) && linalg::is_zero_vec(&self.torsion)
    }
}

/// The degree map d: Z^k -> D; column i is deg(T_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMap {
    hom: GroupHom,
}

impl DegreeMap {
    pub fn new(group: &FgAbelianGroup, degrees: Vec<DegreeVector>) -> Result<Self, Error> {
        let k = degrees.len();
        for d in &degrees {
            if d.free.len() != group.free_rank() || d.torsion.len() != group.torsion().len() {
                return Err(Error::GroupMismatch);
            }
        }
        let free_matrix =
            IntegerMatrix::from_fn(group.free_rank(), k, |r, c| degrees[c].free[r].clone());
        let torsion_part =
            IntegerMatrix::from_fn(group.torsion().len(), k, |r, c| degrees[c].torsion[r].clone());
        let hom = GroupHom::from_free_source(group.clone(), free_matrix, torsion_part)?;
        Ok(DegreeMap { hom })
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn num_vars(&self) -> usize {
        self.hom.free_matrix().cols()
    }

    pub fn group(&self) -> &FgAbelianGroup {
        self.hom.target()
    }

    /// deg(T_i).
    pub fn variable_degree(&self, i: usize) -> DegreeVector {
        DegreeVector {
            free: self.hom.free_matrix().col(i),
            torsion: self
                .group()
                .reduce_torsion(&self.hom.torsion_part().col(i)),
        }
    }

    pub fn free_matrix(&self) -> &IntegerMatrix {
        self.hom.free_matrix()
    }

    pub fn apply(&self, exponents: &[BigInt]) -> DegreeVector {
        let (free, torsion) = self.hom.apply(exponents, &[]);
        DegreeVector { free, torsion }
    }
}

/// Monomial given by its exponent vector; all exponents nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<BigInt>,
}

impl Monomial {
    pub fn new(exponents: Vec<BigInt>) -> Result<Self, Error> {
        if exponents.iter().any(Signed::is_negative) {
            return Err(Error::NegativeExponent);
        }
        Ok(Monomial { exponents })
    }

    pub fn unit(k: usize) -> Self {
        Monomial {
            exponents: vec![BigInt::zero(); k],
        }
    }

    /// Square-free monomial with exponent one exactly on `support`.
    pub fn from_support(k: usize, support: &[usize]) -> Self {
        let mut exponents = vec![BigInt::zero(); k];
        for &i in support {
            assert!(i < k, "support index out of range");
            exponents[i] = BigInt::one();
        }
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(Zero::is_zero)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .map(|e| if e.is_zero() { BigInt::zero() } else { BigInt::one() })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, Error> {
        if self.exponents.len() != other.exponents.len() {
            return Err(Error::DimensionMismatch {
                expected: self.exponents.len(),
                got: other.exponents.len(),
            });
        }
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

/// A polynomial ring graded by a finitely generated abelian group through a
/// degree map on the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPolyRing {
    var_names: Vec<String>,
    group: FgAbelianGroup,
    degree_map: DegreeMap,
}

impl GradedPolyRing {
    pub fn new(
        var_names: Vec<String>,
        group: FgAbelianGroup,
        degree_map: DegreeMap,
    ) -> Result<Self, Error> {
        if degree_map.num_vars() != var_names.len() {
            return Err(Error::DimensionMismatch {
                expected: var_names.len(),
                got: degree_map.num_vars(),
            });
        }
        if degree_map.group() != &group {
            return Err(Error::GroupMismatch);
        }
        Ok(GradedPolyRing {
            var_names,
            group,
            degree_map,
        })
    }

    /// Ring with default variable names T1..Tk and the given degrees.
    pub fn with_degrees(group: FgAbelianGroup, degrees: Vec<DegreeVector>) -> Result<Self, Error> {
        let names = (1..=degrees.len())
            .map(|i| {
                let mut s = String::from("T");
                s.push_str(itoa(i).as_str());
                s
            })
            .collect();
        let map = DegreeMap::new(&group, degrees)?;
        GradedPolyRing::new(names, group, map)
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn degree_map(&self) -> &DegreeMap {
        &self.degree_map
    }

    pub fn free_rank(&self) -> usize {
        self.group.free_rank()
    }

    /// Degree of a monomial under the grading.
    pub fn degree_of(&self, m: &Monomial) -> Result<DegreeVector, Error> {
        if m.num_vars() != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                got: m.num_vars(),
            });
        }
        Ok(self.degree_map.apply(m.exponents()))
    }

    /// The cone of a monomial in D ⊗ Q: for a monomial f the homogeneous
    /// divisors of its powers are exactly the monomials supported on
    /// supp(f), so the cone is spanned by the free-part degrees of the
    /// support variables. The unit monomial yields the zero cone.
    pub fn cone_of_monomial(&self, m: &Monomial) -> Result<RationalCone, Error> {
        if m.num_vars() != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                got: m.num_vars(),
            });
        }
        Ok(self.cone_of_support(&m.support()))
    }

    /// Cone spanned by the free-part degrees of the given variables.
    pub fn cone_of_support(&self, support: &[usize]) -> RationalCone {
        let gens: Vec<Vec<BigInt>> = support
            .iter()
            .map(|&i| self.degree_map.free_matrix().col(i))
            .collect();
        RationalCone::from_generators(self.free_rank(), &gens)
            .expect("degree columns have the right length")
    }

    /// Relevance: the cone of the monomial is full-dimensional in D ⊗ R,
    /// equivalently the support degrees span a finite-index subgroup.
    pub fn is_relevant(&self, m: &Monomial) -> Result<bool, Error> {
        if m.num_vars() != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                got: m.num_vars(),
            });
        }
        Ok(self.is_relevant_support(&m.support()))
    }

    pub fn is_relevant_support(&self, support: &[usize]) -> bool {
        let degs: Vec<Vec<BigInt>> = support
            .iter()
            .map(|&i| self.degree_map.free_matrix().col(i))
            .collect();
        linalg::rank(&degs) == self.free_rank()
    }

    /// All relevant square-free monomials, sorted by support size then
    /// lexicographically. These index the distinct charts of the spectrum,
    /// since relevance and the chart depend only on the support.
    pub fn relevant_squarefree_monomials(&self, limits: &Limits) -> Result<Vec<Monomial>, Error> {
        Ok(self
            .relevant_supports(limits)?
            .into_iter()
            .map(|s| Monomial::from_support(self.num_vars(), &s))
            .collect())
    }

    pub fn relevant_supports(&self, limits: &Limits) -> Result<Vec<Vec<usize>>, Error> {
        let k = self.num_vars();
        if k > limits.max_vars {
            return Err(Error::LimitExceeded {
                what: "variables in square-free enumeration",
                limit: limits.max_vars,
                needed: k,
            });
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        for mask in 0u64..(1u64 << k) {
            let support: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            if self.is_relevant_support(&support) {
                out.push(support);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Regrading along a group homomorphism δ out of the grading group: the
    /// new ring is graded by the target of δ with degree map δ ∘ d.
    pub fn regrade(&self, delta: &GroupHom) -> Result<GradedPolyRing, Error> {
        if delta.source() != &self.group {
            return Err(Error::GroupMismatch);
        }
        let hom = delta.compose(self.degree_map.hom())?;
        let degrees: Vec<DegreeVector> = (0..self.num_vars())
            .map(|i| DegreeVector {
                free: hom.free_matrix().col(i),
                torsion: delta.target().reduce_torsion(&hom.torsion_part().col(i)),
            })
            .collect();
        let map = DegreeMap::new(delta.target(), degrees)?;
        GradedPolyRing::new(self.var_names.clone(), delta.target().clone(), map)
    }
}

fn itoa(mut n: usize) -> String {
    if n == 0 {
        return String::from("0");
    }
    let mut digits = Vec::new();
    while n > 0 {
        digits.push(b'0' + (n % 10) as u8);
        n /= 10;
    }
    digits.reverse();
    String::from_utf8(digits).expect("ascii digits")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn free_degrees(vs: &[&[i64]]) -> Vec<DegreeVector> {
        vs.iter()
            .map(|v| DegreeVector {
                free: v.iter().map(|&x| bi(x)).collect(),
                torsion: Vec::new(),
            })
            .collect()
    }

    fn ring(r: usize, degrees: &[&[i64]]) -> GradedPolyRing {
        GradedPolyRing::with_degrees(FgAbelianGroup::free(r), free_degrees(degrees)).unwrap()
    }

    fn mono(es: &[i64]) -> Monomial {
        Monomial::new(es.iter().map(|&x| bi(x)).collect()).unwrap()
    }

    /// k[T1,T2] with the componentwise Z^2-grading.
    fn standard_z2() -> GradedPolyRing {
        ring(2, &[&[1, 0], &[0, 1]])
    }

    /// k[T1,T2,T3] with degrees (1,0), (1,1), (0,1).
    fn three_variable() -> GradedPolyRing {
        ring(2, &[&[1, 0], &[1, 1], &[0, 1]])
    }

    #[test]
    fn degrees_of_monomials() {
        let s = standard_z2();
        let d = s.degree_of(&mono(&[1, 1])).unwrap();
        assert_eq!(d.free, alloc::vec![bi(1), bi(1)]);

        let total = ring(1, &[&[1], &[1]]);
        let d = total.degree_of(&mono(&[2, 1])).unwrap();
        assert_eq!(d.free, alloc::vec![bi(3)]);

        let diff = ring(1, &[&[1], &[-1]]);
        let d = diff.degree_of(&mono(&[1, 1])).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn cones_of_monomials() {
        let three = three_variable();
        let c = three.cone_of_monomial(&mono(&[1, 1, 0])).unwrap();
        assert_eq!(
            c,
            RationalCone::from_generators(
                2,
                &[alloc::vec![bi(1), bi(0)], alloc::vec![bi(1), bi(1)]]
            )
            .unwrap()
        );

        let s = standard_z2();
        assert!(s.cone_of_monomial(&Monomial::unit(2)).unwrap().is_zero_cone());
        let full = s.cone_of_monomial(&mono(&[1, 1])).unwrap();
        assert_eq!(full.dimension(), 2);
    }

    #[test]
    fn relevance_examples() {
        let s = standard_z2();
        // Homogeneous but not relevant.
        assert!(!s.is_relevant(&mono(&[2, 0])).unwrap());
        assert!(s.is_relevant(&mono(&[1, 3])).unwrap());

        // All degrees on one axis of Z^2: nothing is relevant.
        let axis = ring(2, &[&[1, 0], &[1, 0]]);
        for mask in [&[1, 0], &[0, 1], &[1, 1]] {
            assert!(!axis.is_relevant(&mono(mask)).unwrap());
        }
    }

    #[test]
    fn relevant_squarefree_sets() {
        let lim = Limits::default();
        let three = three_variable();
        let rel = three.relevant_squarefree_monomials(&lim).unwrap();
        let expected = alloc::vec![
            mono(&[1, 1, 0]),
            mono(&[1, 0, 1]),
            mono(&[0, 1, 1]),
            mono(&[1, 1, 1]),
        ];
        assert_eq!(rel, expected);

        let s = standard_z2();
        assert_eq!(
            s.relevant_squarefree_monomials(&lim).unwrap(),
            alloc::vec![mono(&[1, 1])]
        );

        let axis = ring(2, &[&[1, 0], &[1, 0]]);
        assert!(axis.relevant_squarefree_monomials(&lim).unwrap().is_empty());
    }

    #[test]
    fn regrading() {
        let s = standard_z2();
        // (a, b) -> a + b turns the point into P^1.
        let total = GroupHom::from_free_source(
            FgAbelianGroup::free(1),
            IntegerMatrix::from_rows(alloc::vec![alloc::vec![bi(1), bi(1)]]),
            IntegerMatrix::zero(0, 2),
        )
        .unwrap();
        let regraded = s.regrade(&total).unwrap();
        assert_eq!(regraded.free_rank(), 1);
        assert!(regraded.is_relevant(&mono(&[1, 0])).unwrap());
        assert!(regraded.is_relevant(&mono(&[0, 1])).unwrap());

        let id = GroupHom::identity(s.group());
        assert_eq!(s.regrade(&id).unwrap(), s);

        // Z^r componentwise regraded by the coordinate sum.
        let r = 4;
        let zr = GradedPolyRing::with_degrees(
            FgAbelianGroup::free(r),
            (0..r)
                .map(|i| DegreeVector {
                    free: (0..r).map(|j| if i == j { bi(1) } else { bi(0) }).collect(),
                    torsion: Vec::new(),
                })
                .collect(),
        )
        .unwrap();
        let sum = GroupHom::from_free_source(
            FgAbelianGroup::free(1),
            IntegerMatrix::from_rows(alloc::vec![alloc::vec![bi(1); r]]),
            IntegerMatrix::zero(0, r),
        )
        .unwrap();
        let proj = zr.regrade(&sum).unwrap();
        for i in 0..r {
            let mut e = alloc::vec![0i64; r];
            e[i] = 1;
            assert!(proj.is_relevant(&mono(&e)).unwrap());
        }
    }

    #[test]
    fn relevance_only_depends_on_support() {
        let three = three_variable();
        let m = mono(&[3, 0, 7]);
        assert_eq!(
            three.is_relevant(&m).unwrap(),
            three.is_relevant(&m.squarefree_part()).unwrap()
        );
    }
}
