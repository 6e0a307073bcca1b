use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, MultiLaurentPoly, QLaurent};

/// Coefficient rings admitting a division with remainder, as needed by
/// the Smith normal form routine.
pub trait EuclideanElem: Clone + PartialEq {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    /// Euclidean size used for pivot selection; must be 0 only for zero.
    fn size(&self) -> u64;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_rem(&self, d: &Self) -> (Self, Self);
    /// The unit `u` such that `self / u` is the canonical associate.
    fn canonical_unit(&self) -> Self;
}

impl EuclideanElem for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn size(&self) -> u64 {
        u64::try_from(self.abs()).unwrap_or(u64::MAX)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        // Round-to-nearest keeps remainders small.
        let (mut q, mut r) = num_integer::Integer::div_rem(self, d);
        if r.abs() * 2u8 > d.abs() {
            if (r.is_negative()) == (d.is_negative()) {
                q += 1;
                r -= d;
            } else {
                q -= 1;
                r += d;
            }
        }
        (q, r)
    }
    fn canonical_unit(&self) -> Self {
        if self.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    }
}

impl EuclideanElem for QLaurent {
    fn zero_elem() -> Self {
        QLaurent::zero()
    }
    fn one_elem() -> Self {
        QLaurent::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn size(&self) -> u64 {
        self.span() as u64
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        self.div_rem(d)
    }
    fn canonical_unit(&self) -> Self {
        if self.is_zero() {
            return QLaurent::one();
        }
        let monic = self.monic();
        self.div_exact(&monic).expect("associate division is exact")
    }
}

pub type Matrix<T> = Vec<Vec<T>>;

fn identity<T: EuclideanElem>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one_elem() } else { T::zero_elem() }).collect())
        .collect()
}

pub fn mat_mul<T: EuclideanElem>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let (m, k) = (a.len(), if a.is_empty() { 0 } else { a[0].len() });
    let n = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(k, b.len());
    (0..m)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = T::zero_elem();
                    for l in 0..k {
                        acc = acc.add(&a[i][l].mul(&b[l][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Smith normal form over a Euclidean domain: returns `(d, u, v)` with
/// `u * m * v = diag(d)`, the `d_i` forming a divisibility chain and
/// `u`, `v` invertible (products of elementary operations).
pub struct Snf<T> {
    pub divisors: Vec<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

pub type SnfInt = Snf<BigInt>;
pub type SnfQLaurent = Snf<QLaurent>;

pub fn smith_normal_form<T: EuclideanElem>(m: &Matrix<T>) -> Snf<T> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.clone();
    let mut u = identity::<T>(rows);
    let mut v = identity::<T>(cols);
    let r = rows.min(cols);

    for k in 0..r {
        loop {
            // Pivot: entry of smallest size in the remaining block.
            let mut pivot: Option<(usize, usize, u64)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !a[i][j].is_zero_elem() {
                        let s = a[i][j].size();
                        if pivot.map_or(true, |(_, _, ps)| s < ps) {
                            pivot = Some((i, j, s));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else {
                // Remaining block is zero.
                return finish(a, u, v, r);
            };
            if pi != k {
                a.swap(pi, k);
                u.swap(pi, k);
            }
            if pj != k {
                for row in a.iter_mut() {
                    row.swap(pj, k);
                }
                for row in v.iter_mut() {
                    row.swap(pj, k);
                }
            }
            let mut dirty = false;
            // Clear column k below/above the pivot.
            for i in 0..rows {
                if i == k || a[i][k].is_zero_elem() {
                    continue;
                }
                let (q, _) = a[i][k].div_rem(&a[k][k]);
                if !q.is_zero_elem() {
                    for j in 0..cols {
                        a[i][j] = a[i][j].sub(&q.mul(&a[k][j]));
                    }
                    for j in 0..rows {
                        u[i][j] = u[i][j].sub(&q.mul(&u[k][j]));
                    }
                }
                if !a[i][k].is_zero_elem() {
                    dirty = true;
                }
            }
            if dirty {
                continue; // smaller remainder became the new pivot candidate
            }
            // Clear row k.
            for j in 0..cols {
                if j == k || a[k][j].is_zero_elem() {
                    continue;
                }
                let (q, _) = a[k][j].div_rem(&a[k][k]);
                if !q.is_zero_elem() {
                    for i in 0..rows {
                        let delta = q.mul(&a[i][k]);
                        a[i][j] = a[i][j].sub(&delta);
                    }
                    for i in 0..cols {
                        let vdelta = q.mul(&v[i][k]);
                        v[i][j] = v[i][j].sub(&vdelta);
                    }
                }
                if !a[k][j].is_zero_elem() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let mut fixed = true;
            'outer: for i in k + 1..rows {
                for j in k + 1..cols {
                    let (_, rem) = a[i][j].div_rem(&a[k][k]);
                    if !rem.is_zero_elem() {
                        // Add row i to row k, creating a nonzero entry in
                        // row k reducible against the pivot.
                        for l in 0..cols {
                            a[k][l] = a[k][l].add(&a[i][l]);
                        }
                        for l in 0..rows {
                            u[k][l] = u[k][l].add(&u[i][l]);
                        }
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
    }
    finish(a, u, v, r)
}

fn finish<T: EuclideanElem>(
    mut a: Matrix<T>,
    mut u: Matrix<T>,
    v: Matrix<T>,
    r: usize,
) -> Snf<T> {
    let rows = a.len();
    // Normalize pivots to canonical associates by scaling rows of U.
    for k in 0..r {
        if a[k][k].is_zero_elem() {
            continue;
        }
        let unit = a[k][k].canonical_unit();
        if unit != T::one_elem() {
            let (inv, rem) = T::one_elem().div_rem(&unit);
            debug_assert!(rem.is_zero_elem(), "canonical unit must divide 1");
            let cols = a[k].len();
            for j in 0..cols {
                a[k][j] = inv.mul(&a[k][j]);
            }
            for j in 0..rows {
                u[k][j] = inv.mul(&u[k][j]);
            }
        }
    }
    let divisors = (0..r).map(|k| a[k][k].clone()).collect();
    Snf { divisors, u, v }
}

/// Integer Smith normal form.
pub fn smith_normal_form_int(m: &Matrix<BigInt>) -> SnfInt {
    smith_normal_form(m)
}

/// Smith normal form over the PID Q[t^±1]. Divisors are reported as
/// primitive integer Laurent polynomials (unique associates), in a
/// divisibility chain; `u`, `v` are the rational transforms with
/// `u * m * v = diag(divisors)` up to the recorded rational units.
pub struct LaurentSnf {
    /// Nonzero divisors normalized to primitive integer polynomials;
    /// zeros kept as zeros.
    pub divisors: Vec<LaurentPoly>,
    /// Exact diagonal produced by the transforms (over Q[t^±1]).
    pub diagonal: Vec<QLaurent>,
    pub u: Matrix<QLaurent>,
    pub v: Matrix<QLaurent>,
}

pub fn smith_normal_form_qlaurent(m: &Matrix<LaurentPoly>) -> LaurentSnf {
    let qm: Matrix<QLaurent> = m
        .iter()
        .map(|row| row.iter().map(QLaurent::from_int).collect())
        .collect();
    let snf = smith_normal_form(&qm);
    let divisors = snf
        .divisors
        .iter()
        .map(|d| d.to_primitive_int().unwrap_or_else(LaurentPoly::zero))
        .collect();
    LaurentSnf { divisors, diagonal: snf.divisors, u: snf.u, v: snf.v }
}

/// Basis of the kernel of an integer matrix, as a saturated sublattice
/// of Z^cols (hence also a basis of the kernel over any localization
/// of Z, in particular over Z[1/2]).
pub fn kernel_basis_int(m: &Matrix<BigInt>) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    if cols == 0 {
        return vec![];
    }
    if rows == 0 {
        // Everything is in the kernel.
        return identity::<BigInt>(cols);
    }
    let snf = smith_normal_form_int(m);
    let rank = snf.divisors.iter().filter(|d| !Zero::is_zero(*d)).count();
    // Kernel basis: columns of V beyond the rank.
    (rank..cols)
        .map(|j| (0..cols).map(|i| snf.v[i][j].clone()).collect())
        .collect()
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn det_bigint(mut m: Matrix<BigInt>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Expand a Newton-form interpolation into monomial coefficients.
pub(crate) fn newton_interpolate_pub(points: &[(BigInt, BigInt)]) -> Vec<BigRational> {
    newton_interpolate(points)
}

fn newton_interpolate(points: &[(BigInt, BigInt)]) -> Vec<BigRational> {
    let n = points.len();
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
    let mut dd: Vec<BigRational> =
        points.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
    // Divided differences in place.
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // Expand sum of dd[i] * prod_{j<i} (x - x_j).
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::zero(); n];
    basis[0] = BigRational::one();
    let mut basis_len = 1usize;
    for (i, d) in dd.iter().enumerate() {
        for (c, b) in coeffs.iter_mut().zip(basis.iter()).take(basis_len) {
            *c += d * b;
        }
        if i + 1 < n {
            // basis *= (x - x_i)
            for j in (0..basis_len).rev() {
                let b = basis[j].clone();
                basis[j + 1] += &b;
                basis[j] = -&xs[i] * b;
            }
            basis_len += 1;
        }
    }
    coeffs
}

fn eval_points(count: usize) -> Vec<BigInt> {
    // 0, 1, -1, 2, -2, ...
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        if k == 0 {
            pts.push(BigInt::zero());
        } else {
            pts.push(BigInt::from(k));
            if pts.len() < count {
                pts.push(BigInt::from(-k));
            }
        }
        k += 1;
    }
    pts
}

/// Determinant of a square matrix over Z[t^±1], computed exactly by
/// integer evaluation and interpolation.
pub fn det_laurent(m: &Matrix<LaurentPoly>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    // Shift each row to honest polynomials; the determinant picks up t^shift.
    let mut shift = 0i64;
    let mut rows: Matrix<LaurentPoly> = Vec::with_capacity(n);
    let mut deg_bound = 0i64;
    for row in m {
        let lo = row.iter().filter_map(|p| p.min_exp()).min().unwrap_or(0);
        shift += lo;
        let r: Vec<LaurentPoly> = row.iter().map(|p| p.shifted(-lo)).collect();
        deg_bound += r.iter().filter_map(|p| p.max_exp()).max().unwrap_or(0);
        rows.push(r);
    }
    let npts = (deg_bound + 1) as usize;
    let pts = eval_points(npts);
    let values: Vec<(BigInt, BigInt)> = pts
        .into_iter()
        .map(|x| {
            let im: Matrix<BigInt> =
                rows.iter().map(|r| r.iter().map(|p| p.eval_int(&x)).collect()).collect();
            let d = det_bigint(im);
            (x, d)
        })
        .collect();
    let coeffs = newton_interpolate(&values);
    let poly = LaurentPoly::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| {
        assert!(c.is_integer(), "interpolated determinant must be integral");
        (i as i64, c.to_integer())
    }));
    poly.shifted(shift)
}

/// Determinant of a square matrix over Z[x^±1, y^±1] by interpolation
/// on a grid.
pub fn det_multi(m: &Matrix<MultiLaurentPoly>) -> MultiLaurentPoly {
    let n = m.len();
    if n == 0 {
        return MultiLaurentPoly::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut shift_x = 0i64;
    let mut shift_y = 0i64;
    let mut rows: Matrix<MultiLaurentPoly> = Vec::with_capacity(n);
    let (mut dx, mut dy) = (0i64, 0i64);
    for row in m {
        let lx = row.iter().filter_map(|p| p.min_exp_x()).min().unwrap_or(0);
        let ly = row.iter().filter_map(|p| p.min_exp_y()).min().unwrap_or(0);
        shift_x += lx;
        shift_y += ly;
        let r: Vec<MultiLaurentPoly> = row.iter().map(|p| p.shifted(-lx, -ly)).collect();
        dx += r.iter().filter_map(|p| p.max_exp_x()).max().unwrap_or(0);
        dy += r.iter().filter_map(|p| p.max_exp_y()).max().unwrap_or(0);
        rows.push(r);
    }
    let xs = eval_points((dx + 1) as usize);
    let ys = eval_points((dy + 1) as usize);
    // For each y-point: interpolate det in x.
    let mut per_y: Vec<Vec<BigRational>> = Vec::with_capacity(ys.len());
    for y in &ys {
        let vals: Vec<(BigInt, BigInt)> = xs
            .iter()
            .map(|x| {
                let im: Matrix<BigInt> = rows
                    .iter()
                    .map(|r| r.iter().map(|p| p.eval_int(x, y)).collect())
                    .collect();
                (x.clone(), det_bigint(im))
            })
            .collect();
        per_y.push(newton_interpolate(&vals));
    }
    // For each x-coefficient index: interpolate in y.
    let mut result = MultiLaurentPoly::zero();
    for i in 0..=(dx as usize) {
        let pts: Vec<(BigInt, BigInt)> = ys
            .iter()
            .zip(per_y.iter())
            .map(|(y, coeffs)| {
                let c = coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                assert!(c.is_integer(), "grid interpolation must be integral in x");
                (y.clone(), c.to_integer())
            })
            .collect();
        let ycoeffs = newton_interpolate(&pts);
        for (j, c) in ycoeffs.into_iter().enumerate() {
            assert!(c.is_integer(), "grid interpolation must be integral in y");
            result.add_term(i as i64, j as i64, c.to_integer());
        }
    }
    result.shifted(shift_x, shift_y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn int_snf_diag() {
        let m = vec![vec![bi(2), bi(4), bi(4)], vec![bi(-6), bi(6), bi(12)], vec![bi(10), bi(4), bi(16)]];
        let snf = smith_normal_form_int(&m);
        assert_eq!(snf.divisors, vec![bi(2), bi(2), bi(156)]);
        let umv = mat_mul(&mat_mul(&snf.u, &m), &snf.v);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { snf.divisors[i].clone() } else { bi(0) };
                assert_eq!(umv[i][j], expect);
            }
        }
    }

    #[test]
    fn int_snf_divisor_example() {
        let m = vec![vec![bi(3)]];
        assert_eq!(smith_normal_form_int(&m).divisors, vec![bi(3)]);
        let empty: Matrix<BigInt> = vec![vec![]];
        assert!(smith_normal_form_int(&empty).divisors.is_empty());
    }

    #[test]
    fn int_snf_rectangular_transforms() {
        let m = vec![
            vec![bi(1), bi(-2), bi(1)],
            vec![bi(2), bi(1), bi(-1)],
            vec![bi(0), bi(5), bi(-3)],
            vec![bi(1), bi(0), bi(0)],
        ];
        let snf = smith_normal_form_int(&m);
        let umv = mat_mul(&mat_mul(&snf.u, &m), &snf.v);
        for (i, row) in umv.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let expect = if i == j && i < snf.divisors.len() {
                    snf.divisors[i].clone()
                } else {
                    bi(0)
                };
                assert_eq!(*entry, expect, "at ({i},{j})");
            }
        }
    }

    #[test]
    fn kernel_example() {
        // x + y + z = 0 has a rank-2 kernel.
        let m = vec![vec![bi(1), bi(1), bi(1)]];
        let k = kernel_basis_int(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v.iter().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn det_int() {
        let m = vec![vec![bi(1), bi(2)], vec![bi(3), bi(4)]];
        assert_eq!(det_bigint(m), bi(-2));
        assert_eq!(det_bigint(vec![]), bi(1));
    }

    #[test]
    fn det_laurent_small() {
        // [[0, 2t-1], [t-2, 0]] has determinant -(2t-1)(t-2).
        let m = vec![
            vec![LaurentPoly::zero(), ip("2*t - 1")],
            vec![ip("t - 2"), LaurentPoly::zero()],
        ];
        let d = det_laurent(&m);
        let expect = -&(&ip("2*t - 1") * &ip("t - 2"));
        assert_eq!(d, expect);
    }

    #[test]
    fn det_laurent_with_shifts() {
        let m = vec![
            vec![ip("t^-1"), ip("1")],
            vec![ip("1"), ip("t")],
        ];
        assert!(det_laurent(&m).is_zero());
    }

    #[test]
    fn qlaurent_snf_coprime() {
        // [[0, 2t-1],[t-2, 0]] over Q[t^±1]: divisors 1, (2t-1)(t-2).
        let m = vec![
            vec![LaurentPoly::zero(), ip("2*t - 1")],
            vec![ip("t - 2"), LaurentPoly::zero()],
        ];
        let snf = smith_normal_form_qlaurent(&m);
        assert_eq!(snf.divisors[0], LaurentPoly::one());
        assert_eq!(
            snf.divisors[1],
            (&ip("2*t - 1") * &ip("t - 2")).normalize().unwrap()
        );
        // U·M·V = diag
        let qm: Matrix<QLaurent> =
            m.iter().map(|r| r.iter().map(QLaurent::from_int).collect()).collect();
        let umv = mat_mul(&mat_mul(&snf.u, &qm), &snf.v);
        for i in 0..2 {
            for j in 0..2 {
                if i == j {
                    assert_eq!(umv[i][j], snf.diagonal[i]);
                } else {
                    assert!(umv[i][j].is_zero());
                }
            }
        }
    }

    #[test]
    fn qlaurent_snf_diagonal_with_zero_row() {
        let m = vec![
            vec![ip("t - 1"), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::zero()],
        ];
        let snf = smith_normal_form_qlaurent(&m);
        assert_eq!(snf.divisors[0], ip("t - 1"));
        assert!(snf.divisors[1].is_zero());
    }
}
