//! Private exact linear algebra helpers over `BigInt` / `BigRational`.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn gcd_all(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the gcd of the coordinates. Returns `None` for the zero
/// vector, otherwise a primitive vector pointing the same way.
pub(crate) fn primitive(v: &[BigInt]) -> Option<Vec<BigInt>> {
    let g = gcd_all(v);
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// Primitive form with the first nonzero coordinate positive. Canonical
/// representative of a line through the origin.
pub(crate) fn primitive_signed(v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut p = primitive(v)?;
    if let Some(first) = p.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut p {
                *x = -&*x;
            }
        }
    }
    Some(p)
}

/// `a*u + b*w` coordinatewise.
pub(crate) fn combine(a: &BigInt, u: &[BigInt], b: &BigInt, w: &[BigInt]) -> Vec<BigInt> {
    u.iter().zip(w).map(|(x, y)| a * x + b * y).collect()
}

pub(crate) fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from(x.clone())).collect()
}

/// Clears denominators and divides by the content; `None` for zero.
pub(crate) fn rational_to_primitive(v: &[BigRational]) -> Option<Vec<BigInt>> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    primitive(&ints)
}

/// Gaussian elimination in place; returns the pivot columns. Rows end up in
/// echelon form with pivots normalized to 1.
pub(crate) fn echelonize(rows: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return pivots;
    }
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] = &rows[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a set of integer vectors over the rationals.
pub(crate) fn rank(vectors: &[Vec<BigInt>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> = vectors.iter().map(|v| to_rational(v)).collect();
    echelonize(&mut rows).len()
}

/// Solves `A x = b` over the rationals where the rows of `a` are the rows of
/// `A`. Returns `None` when the system is inconsistent; free variables are
/// set to zero.
pub(crate) fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelonize(&mut rows);
    if pivots.contains(&cols) {
        return None; // pivot in the augmented column
    }
    let mut x = alloc::vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][cols].clone();
    }
    Some(x)
}

/// Orthogonal projection of `v` onto the span of `basis`, rationally.
pub(crate) fn project_onto_span(v: &[BigInt], basis: &[Vec<BigInt>]) -> Vec<BigRational> {
    let n = v.len();
    if basis.is_empty() {
        return alloc::vec![BigRational::zero(); n];
    }
    // Solve the Gram system G c = B v, projection = B^T c.
    let gram: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|bi| basis.iter().map(|bj| BigRational::from(dot(bi, bj))).collect())
        .collect();
    let rhs: Vec<BigRational> = basis
        .iter()
        .map(|bi| BigRational::from(dot(bi, v)))
        .collect();
    let c = solve(&gram, &rhs).expect("Gram system of a spanning set is consistent");
    let mut out = alloc::vec![BigRational::zero(); n];
    for (ci, bi) in c.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(bi) {
            *o = &*o + ci * BigRational::from(x.clone());
        }
    }
    out
}

/// Canonical primitive representative of `v` modulo the span of `basis`:
/// the orthogonal component, cleared to a primitive integer vector.
/// Returns `None` when `v` lies in the span.
pub(crate) fn reduce_mod_span(v: &[BigInt], basis: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    if basis.is_empty() {
        return primitive(v);
    }
    let proj = project_onto_span(v, basis);
    let residue: Vec<BigRational> = v
        .iter()
        .zip(&proj)
        .map(|(x, p)| BigRational::from(x.clone()) - p)
        .collect();
    rational_to_primitive(&residue)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn primitive_and_sign() {
        assert_eq!(primitive(&[bi(2), bi(4)]), Some(vec![bi(1), bi(2)]));
        assert_eq!(primitive(&[bi(0), bi(0)]), None);
        assert_eq!(
            primitive_signed(&[bi(0), bi(-3), bi(6)]),
            Some(vec![bi(0), bi(1), bi(-2)])
        );
    }

    #[test]
    fn rank_of_vectors() {
        assert_eq!(rank(&[vec![bi(1), bi(0)], vec![bi(1), bi(1)]]), 2);
        assert_eq!(rank(&[vec![bi(2), bi(4)], vec![bi(1), bi(2)]]), 1);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn reduce_mod_span_is_orthogonal() {
        let basis = vec![vec![bi(1), bi(1)]];
        let red = reduce_mod_span(&[bi(1), bi(0)], &basis).unwrap();
        assert_eq!(dot(&red, &basis[0]), bi(0));
        assert!(reduce_mod_span(&[bi(2), bi(2)], &basis).is_none());
    }
}
