//! Exact integer linear algebra: Hermite and Smith normal forms, integer
//! kernels, ranks, and saturation tests.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! floating point and no modular arithmetic in this module.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(rows * cols, entries.len(), "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * other.at(k, c);
                    *out.at_mut(r, c) += add;
                }
            }
        }
        out
    }

    /// Matrix-vector product with an `i64` exponent vector.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c) * BigInt::from(v[c])).sum())
            .collect()
    }

    /// Determinant of a square matrix by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<BigInt>, r: usize, c: usize| m[r * n + c].clone();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                match (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&m, k, k) * at(&m, i, j) - at(&m, i, k) * at(&m, k, j)) / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = at(&m, k, k);
        }
        at(&m, n - 1, n - 1) * BigInt::from(sign)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Stack the given `i64` vectors as rows.
    pub fn from_rows_i64(vectors: &[Vec<i64>], cols: usize) -> Self {
        let mut entries = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols);
            entries.extend(v.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: vectors.len(), cols, entries }
    }
}

/// JSON form of [`IntMatrix`]: arrays of arrays of decimal integer strings.
#[derive(Serialize, Deserialize)]
pub struct IntMatrixJson(pub Vec<Vec<String>>);

impl From<&IntMatrix> for IntMatrixJson {
    fn from(m: &IntMatrix) -> Self {
        IntMatrixJson(
            (0..m.rows)
                .map(|r| (0..m.cols).map(|c| m.at(r, c).to_string()).collect())
                .collect(),
        )
    }
}

impl IntMatrixJson {
    pub fn to_matrix(&self) -> Result<IntMatrix, String> {
        let rows = self.0.len();
        let cols = self.0.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows * cols);
        for row in &self.0 {
            if row.len() != cols {
                return Err("ragged matrix rows".into());
            }
            for s in row {
                entries.push(s.parse::<BigInt>().map_err(|e| e.to_string())?);
            }
        }
        Ok(IntMatrix::new(rows, cols, entries))
    }
}

/// Basis of a sublattice of `Z^ambient_rank`, vectors linearly independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub ambient_rank: usize,
    pub vectors: Vec<Vec<i64>>,
}

/// Row Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U * M = H`.
///
/// Pivoting always reduces by the smallest nonzero absolute value in the
/// pivot column, which keeps intermediate entries modest at this scale.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pivot_row = 0usize;
    for col in 0..h.cols {
        if pivot_row >= h.rows {
            break;
        }
        loop {
            // smallest nonzero |entry| in this column at or below pivot_row
            let mut best: Option<(usize, BigInt)> = None;
            for r in pivot_row..h.rows {
                let v = h.at(r, col).abs();
                if !v.is_zero() && best.as_ref().map_or(true, |(_, b)| v < *b) {
                    best = Some((r, v));
                }
            }
            let Some((r, _)) = best else { break };
            if r != pivot_row {
                swap_rows(&mut h, pivot_row, r);
                swap_rows(&mut u, pivot_row, r);
            }
            let mut reduced_any = false;
            for r2 in pivot_row + 1..h.rows {
                if !h.at(r2, col).is_zero() {
                    let q = div_round(h.at(r2, col), h.at(pivot_row, col));
                    if !q.is_zero() {
                        row_sub(&mut h, r2, pivot_row, &q);
                        row_sub(&mut u, r2, pivot_row, &q);
                    }
                    reduced_any = true;
                }
            }
            if !reduced_any {
                break;
            }
        }
        if h.at(pivot_row, col).is_zero() {
            continue;
        }
        if h.at(pivot_row, col).is_negative() {
            negate_row(&mut h, pivot_row);
            negate_row(&mut u, pivot_row);
        }
        // reduce entries above the pivot into [0, pivot)
        for r in 0..pivot_row {
            let q = h.at(r, col).div_euclid(h.at(pivot_row, col));
            if !q.is_zero() {
                row_sub(&mut h, r, pivot_row, &q);
                row_sub(&mut u, r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

trait DivEuclidBig {
    fn div_euclid(&self, d: &BigInt) -> BigInt;
}
impl DivEuclidBig for BigInt {
    fn div_euclid(&self, d: &BigInt) -> BigInt {
        let (q, r) = num_integer::Integer::div_rem(self, d);
        if r.is_negative() {
            if d.is_positive() {
                q - 1
            } else {
                q + 1
            }
        } else {
            q
        }
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // quotient that minimizes |a - q*b|
    let q = a.div_euclid(b);
    let r = a - &q * b;
    if &r * 2u8 > b.abs() {
        q + if b.is_positive() { 1 } else { -1 }
    } else {
        q
    }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    for c in 0..m.cols {
        let tmp = m.at(a, c).clone();
        *m.at_mut(a, c) = m.at(b, c).clone();
        *m.at_mut(b, c) = tmp;
    }
}

fn row_sub(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for c in 0..m.cols {
        let sub = q * m.at(source, c);
        *m.at_mut(target, c) -= sub;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for c in 0..m.cols {
        let v = -m.at(r, c).clone();
        *m.at_mut(r, c) = v;
    }
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.rows)
        .filter(|&r| (0..h.cols).any(|c| !h.at(r, c).is_zero()))
        .count()
}

/// Basis of the full integer kernel `{v : M v = 0}`.
///
/// The basis is saturated by construction (it comes from a unimodular
/// transform) and canonicalized: each vector's first nonzero entry is
/// positive and the vectors are sorted lexicographically.
pub fn kernel_basis(m: &IntMatrix) -> LatticeBasis {
    let (h, u) = hermite_normal_form(&m.transpose());
    let mut vectors = Vec::new();
    for r in 0..h.rows {
        if (0..h.cols).all(|c| h.at(r, c).is_zero()) {
            let v: Vec<i64> = (0..u.cols)
                .map(|c| {
                    i64::try_from(u.at(r, c)).expect("kernel entry exceeds i64 at desk scale")
                })
                .collect();
            vectors.push(canonical_sign(v));
        }
    }
    vectors.sort();
    LatticeBasis { ambient_rank: m.cols, vectors }
}

fn canonical_sign(v: Vec<i64>) -> Vec<i64> {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => v.into_iter().map(|x| -x).collect(),
        _ => v,
    }
}

/// Smith normal form: returns the diagonal matrix `D` and the nonzero
/// invariant factors `d1 | d2 | ...`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, Vec<BigInt>) {
    let mut a = m.clone();
    let n = a.rows.min(a.cols);
    let mut t = 0usize;
    while t < n {
        // move a smallest nonzero entry of the trailing block to (t, t)
        let mut best: Option<(usize, usize, BigInt)> = None;
        for r in t..a.rows {
            for c in t..a.cols {
                let v = a.at(r, c).abs();
                if !v.is_zero() && best.as_ref().map_or(true, |(_, _, b)| v < *b) {
                    best = Some((r, c, v));
                }
            }
        }
        let Some((r, c, _)) = best else { break };
        if r != t {
            swap_rows(&mut a, t, r);
        }
        if c != t {
            swap_cols(&mut a, t, c);
        }
        // clear row and column t
        let mut dirty = true;
        while dirty {
            dirty = false;
            for r2 in t + 1..a.rows {
                if !a.at(r2, t).is_zero() {
                    let q = div_round(a.at(r2, t), a.at(t, t));
                    row_sub(&mut a, r2, t, &q);
                    if !a.at(r2, t).is_zero() {
                        swap_rows(&mut a, t, r2);
                    }
                    dirty = true;
                }
            }
            for c2 in t + 1..a.cols {
                if !a.at(t, c2).is_zero() {
                    let q = div_round(a.at(t, c2), a.at(t, t));
                    col_sub(&mut a, c2, t, &q);
                    if !a.at(t, c2).is_zero() {
                        swap_cols(&mut a, t, c2);
                    }
                    dirty = true;
                }
            }
        }
        // enforce divisibility of the trailing block by the pivot
        let pivot = a.at(t, t).clone();
        let offender = (t + 1..a.rows)
            .flat_map(|r| (t + 1..a.cols).map(move |c| (r, c)))
            .find(|&(r, c)| !num_integer::Integer::is_multiple_of(a.at(r, c), &pivot));
        if let Some((r, _)) = offender {
            // add offending row to the pivot row and redo this pivot
            for c in 0..a.cols {
                let add = a.at(r, c).clone();
                *a.at_mut(t, c) += add;
            }
            continue;
        }
        if a.at(t, t).is_negative() {
            negate_row(&mut a, t);
        }
        t += 1;
    }
    let factors: Vec<BigInt> = (0..n).map(|i| a.at(i, i).clone()).filter(|d| !d.is_zero()).collect();
    (a, factors)
}

fn col_sub(m: &mut IntMatrix, target: usize, source: usize, q: &BigInt) {
    for r in 0..m.rows {
        let sub = q * m.at(r, source);
        *m.at_mut(r, target) -= sub;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for r in 0..m.rows {
        let tmp = m.at(r, a).clone();
        *m.at_mut(r, a) = m.at(r, b).clone();
        *m.at_mut(r, b) = tmp;
    }
}

/// True iff `Z^ambient / span(B)` is torsion-free, i.e. all invariant
/// factors of the stacked basis matrix are 1.
pub fn is_saturated_sublattice(basis: &LatticeBasis) -> bool {
    assert!(!basis.vectors.is_empty(), "saturation test needs a nonempty basis");
    let m = IntMatrix::from_rows_i64(&basis.vectors, basis.ambient_rank);
    let (_, factors) = smith_normal_form(&m);
    factors.len() == basis.vectors.len() && factors.iter().all(|f| f.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let id = IntMatrix::identity(2);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_zero_matrix() {
        let z = IntMatrix::zero(2, 3);
        let (h, u) = hermite_normal_form(&z);
        assert_eq!(h, z);
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_small_example() {
        let a = m(&[vec![2, 4], vec![1, 3]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h.at(0, 0), &BigInt::from(1));
        assert!(u.is_unimodular());
        assert_eq!(u.mul(&a), h);
    }

    #[test]
    fn kernel_of_four_cycle_incidence() {
        // 4-cycle: vertices 0..3, edges (0,1),(1,2),(2,3),(3,0)
        let a = m(&[
            vec![1, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ]);
        let k = kernel_basis(&a);
        assert_eq!(k.vectors, vec![vec![1, -1, 1, -1]]);
        assert_eq!(rank(&a), 3);
        assert!(is_saturated_sublattice(&k));
    }

    #[test]
    fn kernel_brute_force_oracle_four_cycle() {
        // independent oracle: search integer box [-3,3]^4 for kernel vectors
        let a = m(&[
            vec![1, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ]);
        let mut found = Vec::new();
        for x0 in -3i64..=3 {
            for x1 in -3i64..=3 {
                for x2 in -3i64..=3 {
                    for x3 in -3i64..=3 {
                        let v = [x0, x1, x2, x3];
                        if a.mul_vec(&v).iter().all(|e| e.is_zero()) {
                            found.push(v.to_vec());
                        }
                    }
                }
            }
        }
        // every brute-force solution must be an integer multiple of the basis vector
        let b = &kernel_basis(&a).vectors[0];
        for v in found {
            let scale = v.iter().zip(b).find(|(_, &bb)| bb != 0).map(|(&vv, &bb)| vv / bb);
            let s = scale.unwrap_or(0);
            assert!(v.iter().zip(b).all(|(&vv, &bb)| vv == s * bb), "{v:?} not a multiple");
        }
    }

    #[test]
    fn kernel_of_one_by_two() {
        let a = m(&[vec![2, -4]]);
        let k = kernel_basis(&a);
        assert_eq!(k.vectors, vec![vec![2, 1]]);
        assert!(a.mul_vec(&k.vectors[0]).iter().all(|e| e.is_zero()));
    }

    #[test]
    fn kernel_of_full_rank_square() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        assert!(kernel_basis(&a).vectors.is_empty());
    }

    #[test]
    fn snf_examples() {
        let (_, f) = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(f, vec![BigInt::one(); 3]);
        let (_, f) = smith_normal_form(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(6)]);
        let (_, f) = smith_normal_form(&m(&[vec![2]]));
        assert_eq!(f, vec![BigInt::from(2)]);
    }

    #[test]
    fn snf_minor_gcd_oracle() {
        // product of first k invariant factors = gcd of k x k minors
        let a = m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let (_, f) = smith_normal_form(&a);
        // 1x1 minors gcd
        let g1: BigInt = num_integer::gcd(
            num_integer::gcd(a.at(0, 0).clone(), a.at(0, 1).clone()),
            num_integer::gcd(
                num_integer::gcd(a.at(0, 2).clone(), a.at(1, 0).clone()),
                num_integer::gcd(
                    num_integer::gcd(a.at(1, 1).clone(), a.at(1, 2).clone()),
                    num_integer::gcd(
                        num_integer::gcd(a.at(2, 0).clone(), a.at(2, 1).clone()),
                        a.at(2, 2).clone(),
                    ),
                ),
            ),
        );
        assert_eq!(f[0], g1);
        // 3x3 minor = det
        let prod: BigInt = f.iter().product();
        assert_eq!(prod, a.det().abs());
        // divisibility chain
        for w in f.windows(2) {
            assert!(num_integer::Integer::is_multiple_of(&w[1], &w[0]));
        }
    }

    #[test]
    fn saturation_examples() {
        assert!(is_saturated_sublattice(&LatticeBasis {
            ambient_rank: 4,
            vectors: vec![vec![1, -1, 1, -1]],
        }));
        assert!(!is_saturated_sublattice(&LatticeBasis {
            ambient_rank: 2,
            vectors: vec![vec![2, 0]],
        }));
    }

    #[test]
    fn rank_triangle_incidence() {
        let a = m(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(rank(&a), 3);
        assert_eq!(rank(&IntMatrix::zero(2, 2)), 0);
    }

    #[test]
    fn rank_plus_nullity() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(&a) + kernel_basis(&a).vectors.len(), a.cols);
    }

    #[test]
    fn matrix_json_roundtrip() {
        let a = m(&[vec![1, -2], vec![30, 4]]);
        let j = serde_json::to_string(&IntMatrixJson::from(&a)).unwrap();
        let b: IntMatrixJson = serde_json::from_str(&j).unwrap();
        assert_eq!(b.to_matrix().unwrap(), a);
    }
}
