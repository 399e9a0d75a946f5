//! Exact integer linear algebra: Smith and Hermite normal forms, kernels,
//! cokernels, and finitely generated abelian groups with homomorphisms.
//!
//! All matrices carry arbitrary-precision entries; intermediate entry swell
//! during normal-form reduction is accepted rather than worked around.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl core::fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r);
        }
        IntegerMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn from_cols(cols: Vec<Vec<BigInt>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntegerMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.at(r, k) * other.at(k, c);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows).map(|r| linalg::dot(self.row(r), v)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn row_add(&mut self, a: usize, b: usize, q: &BigInt) {
        for c in 0..self.cols {
            let t = self.at(b, c) * q;
            *self.at_mut(a, c) += t;
        }
    }

    /// col[a] += q * col[b]
    fn col_add(&mut self, a: usize, b: usize, q: &BigInt) {
        for r in 0..self.rows {
            let t = self.at(r, b) * q;
            *self.at_mut(r, a) += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let t = -self.at(r, c);
            *self.at_mut(r, c) = t;
        }
    }

    /// Inverse of a unimodular matrix. Panics if the matrix is not square
    /// with determinant ±1.
    pub fn inverse_unimodular(&self) -> IntegerMatrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let a: Vec<Vec<num_rational::BigRational>> =
            (0..n).map(|r| linalg::to_rational(self.row(r))).collect();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![num_rational::BigRational::zero(); n];
            e[j] = num_rational::BigRational::one();
            let x = linalg::solve(&a, &e).expect("unimodular matrix is invertible");
            let ints: Vec<BigInt> = x
                .iter()
                .map(|q| {
                    assert!(q.is_integer(), "matrix is not unimodular");
                    q.to_integer()
                })
                .collect();
            cols.push(ints);
        }
        IntegerMatrix::from_cols(cols)
    }
}

/// The triple `U * m * V = S` of a Smith normal form, with `U`, `V`
/// unimodular and `S` diagonal with nonnegative entries in a divisibility
/// chain.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Diagonal of `S`, one entry per `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.at(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries, i.e. the rank of the matrix.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Quotient with remainder of minimal absolute value.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Smith normal form by unimodular row and column operations. Pivoting picks
/// the entry of smallest absolute value in the remaining submatrix, rows
/// before columns.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut s = m.clone();
    let mut u = IntegerMatrix::identity(m.rows());
    let mut v = IntegerMatrix::identity(m.cols());
    let steps = m.rows().min(m.cols());

    let find_pivot = |s: &IntegerMatrix, t: usize| -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..s.rows() {
            for c in t..s.cols() {
                if s.at(r, c).is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((r, c)),
                    Some((br, bc)) => {
                        if s.at(r, c).abs() < s.at(br, bc).abs() {
                            best = Some((r, c));
                        }
                    }
                }
            }
        }
        best
    };

    let mut t = 0;
    while t < steps {
        let Some((pr, pc)) = find_pivot(&s, t) else {
            break;
        };
        s.swap_rows(t, pr);
        u.swap_rows(t, pr);
        s.swap_cols(t, pc);
        v.swap_cols(t, pc);

        // Clear row and column t; the minimal pivot strictly shrinks each
        // time a nonzero remainder survives, so this terminates.
        loop {
            let mut dirty = false;
            for r in t + 1..s.rows() {
                if !s.at(r, t).is_zero() {
                    let q = -div_nearest(s.at(r, t), s.at(t, t));
                    s.row_add(r, t, &q);
                    u.row_add(r, t, &q);
                    if !s.at(r, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for c in t + 1..s.cols() {
                if !s.at(t, c).is_zero() {
                    let q = -div_nearest(s.at(t, c), s.at(t, t));
                    s.col_add(c, t, &q);
                    v.col_add(c, t, &q);
                    if !s.at(t, c).is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
            let (pr, pc) = find_pivot(&s, t).expect("nonzero residue implies a pivot");
            s.swap_rows(t, pr);
            u.swap_rows(t, pr);
            s.swap_cols(t, pc);
            v.swap_cols(t, pc);
        }

        // Enforce the divisibility chain: fold any non-multiple into row t
        // and redo the clearing with a strictly smaller pivot.
        let offender = (t + 1..s.rows())
            .flat_map(|r| (t + 1..s.cols()).map(move |c| (r, c)))
            .find(|&(r, c)| !(s.at(r, c) % s.at(t, t)).is_zero());
        if let Some((r, _)) = offender {
            let one = BigInt::one();
            s.row_add(t, r, &one);
            u.row_add(t, r, &one);
            continue;
        }

        if s.at(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SmithForm { u, s, v }
}

/// A canonical basis for {v : m v = 0} as a sublattice of Z^cols. Empty when
/// the kernel is trivial.
pub fn kernel_basis(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.cols()).map(|j| snf.v.col(j)).collect()
}

/// Row-style Hermite normal form of the lattice generated by `rows`:
/// the unique basis with positive pivots, zeros below, and entries above a
/// pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_basis(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.into_iter().filter(|r| !linalg::is_zero_vec(r)).collect();
    if m.is_empty() {
        return m;
    }
    let cols = m[0].len();
    let mut top = 0;
    for c in 0..cols {
        // Euclid on the entries of column c at or below `top`.
        loop {
            let mut idx: Option<usize> = None;
            for r in top..m.len() {
                if m[r][c].is_zero() {
                    continue;
                }
                match idx {
                    None => idx = Some(r),
                    Some(i) => {
                        if m[r][c].abs() < m[i][c].abs() {
                            idx = Some(r);
                        }
                    }
                }
            }
            let Some(i) = idx else {
                break;
            };
            m.swap(top, i);
            let mut any = false;
            for r in top + 1..m.len() {
                if !m[r][c].is_zero() {
                    let q = div_nearest(&m[r][c], &m[top][c]);
                    for j in 0..cols {
                        let t = &m[top][j] * &q;
                        m[r][j] -= t;
                    }
                    if !m[r][c].is_zero() {
                        any = true;
                    }
                }
            }
            if !any {
                break;
            }
        }
        if top < m.len() && !m[top][c].is_zero() {
            if m[top][c].is_negative() {
                for x in &mut m[top] {
                    *x = -&*x;
                }
            }
            // Reduce the entries above the pivot into [0, pivot).
            for r in 0..top {
                let q = m[r][c].div_floor(&m[top][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &m[top][j] * &q;
                        m[r][j] -= t;
                    }
                }
            }
            top += 1;
            if top == m.len() {
                break;
            }
        }
    }
    m.truncate(top);
    m
}

/// Canonical representative of `v + L` where `L` is the lattice spanned by
/// `hnf` (rows in Hermite form): pivot coordinates are reduced into
/// `[0, pivot)`.
pub fn coset_reduce(v: &[BigInt], hnf: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    for row in hnf {
        let c = row
            .iter()
            .position(|x| !x.is_zero())
            .expect("HNF basis rows are nonzero");
        let q = out[c].div_floor(&row[c]);
        if !q.is_zero() {
            for (o, x) in out.iter_mut().zip(row) {
                *o -= &q * x;
            }
        }
    }
    out
}

/// Solves `m x = b` over the integers. Free coordinates are set to zero.
pub fn solve_integer(m: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len());
    let snf = smith_normal_form(m);
    let c = snf.u.mul_vec(b);
    let diag = snf.diagonal();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !ci.is_zero() {
                return None;
            }
        } else {
            let (q, r) = ci.div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// A finitely generated abelian group `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_s`
/// in invariant-factor form: `d_1 | d_2 | … | d_s`, each `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        let two = BigInt::from(2);
        for w in torsion.windows(2) {
            assert!(
                (&w[1] % &w[0]).is_zero(),
                "invariant factors must form a divisibility chain"
            );
        }
        assert!(torsion.iter().all(|d| d >= &two), "invariant factors must be >= 2");
        FgAbelianGroup { free_rank, torsion }
    }

    pub fn free(free_rank: usize) -> Self {
        FgAbelianGroup {
            free_rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn torsion_order(&self) -> BigInt {
        let mut p = BigInt::one();
        for d in &self.torsion {
            p *= d;
        }
        p
    }

    /// Reduces torsion coordinates into the canonical range `[0, d_i)`.
    pub fn reduce_torsion(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.torsion.len());
        coords
            .iter()
            .zip(&self.torsion)
            .map(|(c, d)| c.mod_floor(d))
            .collect()
    }
}

/// Homomorphism between finitely generated abelian groups, given on the
/// invariant-factor presentations of source and target. `free_matrix` sends
/// free generators to the target free part, `torsion_part` sends free
/// generators into the target torsion coordinates, and `torsion_matrix`
/// sends source torsion generators into the target torsion coordinates
/// (free images of torsion generators are forced to vanish).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    free_matrix: IntegerMatrix,
    torsion_part: IntegerMatrix,
    torsion_matrix: IntegerMatrix,
}

impl GroupHom {
    pub fn new(
        source: FgAbelianGroup,
        target: FgAbelianGroup,
        free_matrix: IntegerMatrix,
        torsion_part: IntegerMatrix,
        torsion_matrix: IntegerMatrix,
    ) -> Result<Self, Error> {
        let dims_ok = free_matrix.rows() == target.free_rank()
            && free_matrix.cols() == source.free_rank()
            && torsion_part.rows() == target.torsion().len()
            && torsion_part.cols() == source.free_rank()
            && torsion_matrix.rows() == target.torsion().len()
            && torsion_matrix.cols() == source.torsion().len();
        if !dims_ok {
            return Err(Error::GroupMismatch);
        }
        // A torsion generator of order d must map to an element killed by d.
        for (j, d) in source.torsion().iter().enumerate() {
            for (i, f) in target.torsion().iter().enumerate() {
                if !((d * torsion_matrix.at(i, j)) % f).is_zero() {
                    return Err(Error::TorsionIllDefined);
                }
            }
        }
        let torsion_part = Self::reduce_rows(&target, torsion_part);
        let torsion_matrix = Self::reduce_rows(&target, torsion_matrix);
        Ok(GroupHom {
            source,
            target,
            free_matrix,
            torsion_part,
            torsion_matrix,
        })
    }

    fn reduce_rows(target: &FgAbelianGroup, m: IntegerMatrix) -> IntegerMatrix {
        IntegerMatrix::from_fn(m.rows(), m.cols(), |r, c| {
            m.at(r, c).mod_floor(&target.torsion()[r])
        })
    }

    /// Hom from a free group given only by the free-part matrix and the
    /// free-to-torsion matrix.
    pub fn from_free_source(
        target: FgAbelianGroup,
        free_matrix: IntegerMatrix,
        torsion_part: IntegerMatrix,
    ) -> Result<Self, Error> {
        let source = FgAbelianGroup::free(free_matrix.cols());
        let torsion_matrix = IntegerMatrix::zero(target.torsion().len(), 0);
        Self::new(source, target, free_matrix, torsion_part, torsion_matrix)
    }

    pub fn identity(group: &FgAbelianGroup) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            free_matrix: IntegerMatrix::identity(group.free_rank()),
            torsion_part: IntegerMatrix::zero(group.torsion().len(), group.free_rank()),
            torsion_matrix: IntegerMatrix::identity(group.torsion().len()),
        }
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn free_matrix(&self) -> &IntegerMatrix {
        &self.free_matrix
    }

    pub fn torsion_part(&self) -> &IntegerMatrix {
        &self.torsion_part
    }

    /// Image of the element with the given free and torsion coordinates.
    pub fn apply(&self, free: &[BigInt], torsion: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
        assert_eq!(free.len(), self.source.free_rank());
        assert_eq!(torsion.len(), self.source.torsion().len());
        let f = self.free_matrix.mul_vec(free);
        let mut t = self.torsion_part.mul_vec(free);
        let tt = self.torsion_matrix.mul_vec(torsion);
        for (a, b) in t.iter_mut().zip(tt) {
            *a += b;
        }
        (f, self.target.reduce_torsion(&t))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom, Error> {
        if inner.target != self.source {
            return Err(Error::GroupMismatch);
        }
        let free = self.free_matrix.mul(&inner.free_matrix);
        let mut tp = self.torsion_part.mul(&inner.free_matrix);
        let extra = self.torsion_matrix.mul(&inner.torsion_part);
        tp = IntegerMatrix::from_fn(tp.rows(), tp.cols(), |r, c| tp.at(r, c) + extra.at(r, c));
        let tm = self.torsion_matrix.mul(&inner.torsion_matrix);
        GroupHom::new(inner.source.clone(), self.target.clone(), free, tp, tm)
    }

    /// Surjectivity onto the free part of the target, decided by the Smith
    /// form of the free matrix.
    pub fn is_surjective_onto_free(&self) -> bool {
        let snf = smith_normal_form(&self.free_matrix);
        let diag = snf.diagonal();
        diag.len() >= self.target.free_rank()
            && diag[..self.target.free_rank()].iter().all(|d| d.is_one())
    }
}

/// The cokernel `Z^rows / im(m)` in invariant-factor form together with the
/// projection homomorphism.
pub fn cokernel(m: &IntegerMatrix) -> (FgAbelianGroup, GroupHom) {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let one = BigInt::one();
    let mut torsion = Vec::new();
    let mut torsion_rows = Vec::new();
    let mut free_rows = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if d.is_zero() {
            free_rows.push(snf.u.row(i).to_vec());
        } else if d > &one {
            torsion.push(d.clone());
            torsion_rows.push(snf.u.row(i).to_vec());
        }
    }
    for i in diag.len()..m.rows() {
        free_rows.push(snf.u.row(i).to_vec());
    }
    let group = FgAbelianGroup::new(free_rows.len(), torsion);
    let free_matrix = IntegerMatrix::from_fn(free_rows.len(), m.rows(), |r, c| free_rows[r][c].clone());
    let torsion_part =
        IntegerMatrix::from_fn(torsion_rows.len(), m.rows(), |r, c| torsion_rows[r][c].clone());
    let proj = GroupHom::from_free_source(group.clone(), free_matrix, torsion_part)
        .expect("projection shapes are consistent");
    (group, proj)
}

/// Whether the subgroup generated by `generators` (in the free-part
/// coordinates of `ambient`) has finite index. Torsion subgroups are always
/// finite, so only the rational span of the free parts matters.
pub fn is_finite_index_subgroup(generators: &[Vec<BigInt>], ambient: &FgAbelianGroup) -> bool {
    for g in generators {
        assert_eq!(g.len(), ambient.free_rank(), "generator has wrong length");
    }
    linalg::rank(generators) == ambient.free_rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn mat(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| bi(x)).collect()).collect())
    }

    fn check_snf(m: &IntegerMatrix) -> SmithForm {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.s, "U m V = S");
        // Diagonal, nonnegative, divisibility chain.
        for r in 0..snf.s.rows() {
            for c in 0..snf.s.cols() {
                if r != c {
                    assert!(snf.s.at(r, c).is_zero());
                }
            }
        }
        let diag = snf.diagonal();
        for d in &diag {
            assert!(!d.is_negative());
        }
        for w in diag.windows(2) {
            if !w[0].is_zero() && !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            }
        }
        // U and V unimodular: integer inverses exist.
        snf.u.inverse_unimodular();
        snf.v.inverse_unimodular();
        snf
    }

    #[test]
    fn snf_example() {
        let m = mat(&[&[2, 4], &[6, 8]]);
        let snf = check_snf(&m);
        assert_eq!(snf.diagonal(), vec![bi(2), bi(4)]);
    }

    #[test]
    fn snf_identity_and_zero() {
        let id = IntegerMatrix::identity(2);
        let snf = check_snf(&id);
        assert_eq!(snf.s, id);

        let z = IntegerMatrix::zero(2, 3);
        let snf = check_snf(&z);
        assert!(snf.s.is_zero());
    }

    #[test]
    fn kernel_examples() {
        // Total degree on two variables.
        let k = kernel_basis(&mat(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        assert!(k[0] == vec![bi(1), bi(-1)] || k[0] == vec![bi(-1), bi(1)]);

        // a - b = 0 over Z.
        let k = kernel_basis(&mat(&[&[1, -1]]));
        assert_eq!(k.len(), 1);
        assert!(k[0] == vec![bi(1), bi(1)] || k[0] == vec![bi(-1), bi(-1)]);

        assert!(kernel_basis(&IntegerMatrix::identity(2)).is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = mat(&[&[2, 4, 6], &[1, 2, 3]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn cokernel_examples() {
        // Columns (1,1) and (1,-1) in Z^2: quotient Z/2.
        let m = IntegerMatrix::from_cols(vec![vec![bi(1), bi(1)], vec![bi(1), bi(-1)]]);
        let (g, proj) = cokernel(&m);
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.torsion(), &[bi(2)]);
        // The projection kills the image.
        for j in 0..m.cols() {
            let (f, t) = proj.apply(&m.col(j), &[]);
            assert!(f.iter().all(Zero::is_zero));
            assert!(t.iter().all(Zero::is_zero));
        }

        let (g, _) = cokernel(&IntegerMatrix::zero(2, 0));
        assert_eq!(g, FgAbelianGroup::free(2));

        let (g, _) = cokernel(&IntegerMatrix::identity(3));
        assert!(g.is_trivial());
    }

    #[test]
    fn finite_index_examples() {
        let z2 = FgAbelianGroup::free(2);
        assert!(is_finite_index_subgroup(
            &[vec![bi(1), bi(0)], vec![bi(1), bi(1)]],
            &z2
        ));
        assert!(!is_finite_index_subgroup(&[vec![bi(1), bi(0)]], &z2));
        assert!(is_finite_index_subgroup(&[], &FgAbelianGroup::trivial()));
    }

    #[test]
    fn hermite_is_canonical() {
        let b1 = hermite_basis(vec![vec![bi(2), bi(1)], vec![bi(0), bi(3)]]);
        let b2 = hermite_basis(vec![vec![bi(2), bi(4)], vec![bi(0), bi(3)], vec![bi(2), bi(1)]]);
        assert_eq!(b1, b2);
        let reduced = coset_reduce(&[bi(7), bi(5)], &b1);
        for row in &b1 {
            let c = row.iter().position(|x| !x.is_zero()).unwrap();
            assert!(reduced[c] >= bi(0) && reduced[c] < row[c]);
        }
    }

    #[test]
    fn solve_integer_works() {
        let m = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve_integer(&m, &[bi(4), bi(9)]), Some(vec![bi(2), bi(3)]));
        assert_eq!(solve_integer(&m, &[bi(1), bi(0)]), None);
    }

    #[test]
    fn hom_torsion_well_defined() {
        let z = FgAbelianGroup::free(0);
        let src = FgAbelianGroup::new(0, vec![bi(2)]);
        let tgt = FgAbelianGroup::new(0, vec![bi(4)]);
        // Z/2 -> Z/4 sending 1 to 2 is fine, to 1 is not.
        assert!(GroupHom::new(
            src.clone(),
            tgt.clone(),
            IntegerMatrix::zero(0, 0),
            IntegerMatrix::zero(1, 0),
            IntegerMatrix::from_rows(vec![vec![bi(2)]]),
        )
        .is_ok());
        assert_eq!(
            GroupHom::new(
                src,
                tgt,
                IntegerMatrix::zero(0, 0),
                IntegerMatrix::zero(1, 0),
                IntegerMatrix::from_rows(vec![vec![bi(1)]]),
            ),
            Err(Error::TorsionIllDefined)
        );
        let _ = z;
    }

    #[test]
    fn surjectivity_check() {
        let tgt = FgAbelianGroup::free(1);
        let onto = GroupHom::from_free_source(
            tgt.clone(),
            mat(&[&[1, 1]]),
            IntegerMatrix::zero(0, 2),
        )
        .unwrap();
        assert!(onto.is_surjective_onto_free());
        let not_onto = GroupHom::from_free_source(
            tgt,
            mat(&[&[2, 4]]),
            IntegerMatrix::zero(0, 2),
        )
        .unwrap();
        assert!(!not_onto.is_surjective_onto_free());
    }
}
