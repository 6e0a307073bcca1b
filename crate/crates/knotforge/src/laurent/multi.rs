use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, LaurentPoly};

/// An integer Laurent polynomial in two variables `x`, `y`, used for the
/// two-variable Alexander polynomial of 2-component links.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiLaurentPoly {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl MultiLaurentPoly {
    pub fn zero() -> Self {
        Self { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(ex: i64, ey: i64, c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((ex, ey), c);
        }
        Self { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (ex, ey, c) in terms {
            p.add_term(ex, ey, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, ex: i64, ey: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&(ex, ey)) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&(ex, ey));
                }
            }
            None => {
                self.coeffs.insert((ex, ey), c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True iff `±x^a y^b` (a unit of the Laurent ring).
    pub fn is_monomial_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().next().unwrap().abs().is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_exp_x(&self) -> Option<i64> {
        self.coeffs.keys().map(|&(x, _)| x).min()
    }
    pub fn max_exp_x(&self) -> Option<i64> {
        self.coeffs.keys().map(|&(x, _)| x).max()
    }
    pub fn min_exp_y(&self) -> Option<i64> {
        self.coeffs.keys().map(|&(_, y)| y).min()
    }
    pub fn max_exp_y(&self) -> Option<i64> {
        self.coeffs.keys().map(|&(_, y)| y).max()
    }

    pub fn shifted(&self, kx: i64, ky: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&(x, y), c)| ((x + kx, y + ky), c.clone())).collect(),
        }
    }

    /// Clear the monomial unit: min exponents 0 in both variables, and a
    /// sign making the lexicographically-leading coefficient positive.
    pub fn normalized_or_zero(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let sx = self.min_exp_x().unwrap();
        let sy = self.min_exp_y().unwrap();
        let mut p = self.shifted(-sx, -sy);
        if p.coeffs.iter().next_back().unwrap().1.is_negative() {
            p = -&p;
        }
        p
    }

    /// Substitute `x ↦ y ↦ t` (specialization to one variable).
    pub fn specialize_diagonal(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(&(x, y), c)| (x + y, c.clone())))
    }

    pub fn eval_int(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(ex, ey), c) in &self.coeffs {
            assert!(ex >= 0 && ey >= 0, "integer evaluation needs polynomial form");
            acc += c * x.pow(ex as u32) * y.pow(ey as u32);
        }
        acc
    }

    /// View as a polynomial in `y` with coefficients in Z[x^±1].
    fn coeffs_in_y(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (&(ex, ey), c) in &self.coeffs {
            let entry = out.entry(ey).or_insert_with(LaurentPoly::zero);
            *entry = &*entry + &LaurentPoly::monomial(ex, c.clone());
        }
        out
    }

    fn from_coeffs_in_y(map: BTreeMap<i64, LaurentPoly>) -> Self {
        let mut out = Self::zero();
        for (ey, p) in map {
            for (ex, c) in p.terms() {
                out.add_term(ex, ey, c.clone());
            }
        }
        out
    }

    pub fn from_univariate_x(p: &LaurentPoly) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| (e, 0, c.clone())))
    }

    fn degree_y(&self) -> i64 {
        self.max_exp_y().unwrap_or(0) - self.min_exp_y().unwrap_or(0)
    }

    /// Content with respect to `y`: gcd in Z[x^±1] of the y-coefficients.
    fn content_y(&self) -> LaurentPoly {
        let mut g = LaurentPoly::zero();
        for p in self.coeffs_in_y().values() {
            g = g.gcd(p);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn scale_y_coeffs(&self, f: &LaurentPoly) -> Self {
        let map = self
            .coeffs_in_y()
            .into_iter()
            .map(|(ey, p)| (ey, &p * f))
            .collect();
        Self::from_coeffs_in_y(map)
    }

    fn div_y_coeffs_exact(&self, f: &LaurentPoly) -> Option<Self> {
        let mut map = BTreeMap::new();
        for (ey, p) in self.coeffs_in_y() {
            map.insert(ey, p.div_exact(f)?);
        }
        Some(Self::from_coeffs_in_y(map))
    }

    /// Exact division in Z[x^±1, y^±1]; `None` if not divisible.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Long division in y over the ring Z[x^±1], requiring each
        // leading-coefficient division to be exact.
        let a = self.normalized_monomial_shift();
        let b = d.normalized_monomial_shift();
        let mut rem = a.0;
        let div = b.0;
        let d_deg = div.max_exp_y().unwrap();
        let d_lead_map = div.coeffs_in_y();
        let d_lead = &d_lead_map[&d_deg];
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp_y().unwrap();
            if r_deg < d_deg {
                return None;
            }
            let r_lead = rem.coeffs_in_y().remove(&r_deg).unwrap();
            let q = r_lead.div_exact(d_lead)?;
            let q_term = Self::from_terms(q.terms().map(|(e, c)| (e, r_deg - d_deg, c.clone())));
            rem = &rem - &(&q_term * &div);
            quot = &quot + &q_term;
        }
        Some(quot.shifted(a.1 - b.1, a.2 - b.2))
    }

    fn normalized_monomial_shift(&self) -> (Self, i64, i64) {
        let sx = self.min_exp_x().unwrap_or(0);
        let sy = self.min_exp_y().unwrap_or(0);
        (self.shifted(-sx, -sy), sx, sy)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }
}

/// Pseudo-remainder in `y` over Z[x^±1].
fn pseudo_rem_y(f: &MultiLaurentPoly, g: &MultiLaurentPoly) -> MultiLaurentPoly {
    let df = f.max_exp_y().unwrap();
    let dg = g.max_exp_y().unwrap();
    if df < dg {
        return f.clone();
    }
    let lc_g = g.coeffs_in_y().remove(&dg).unwrap();
    let mut rem = f.scale_y_coeffs(&lc_g.pow((df - dg + 1) as u32));
    while !rem.is_zero() && rem.max_exp_y().unwrap() >= dg {
        let r_deg = rem.max_exp_y().unwrap();
        let r_lead = rem.coeffs_in_y().remove(&r_deg).unwrap();
        let q = r_lead.div_exact(&lc_g).expect("pseudo-remainder division is exact");
        let q_term =
            MultiLaurentPoly::from_terms(q.terms().map(|(e, c)| (e, r_deg - dg, c.clone())));
        rem = &rem - &(&q_term * g);
    }
    rem
}

fn gcd_pair(a: &MultiLaurentPoly, b: &MultiLaurentPoly) -> MultiLaurentPoly {
    if a.is_zero() {
        return b.normalized_or_zero();
    }
    if b.is_zero() {
        return a.normalized_or_zero();
    }
    // Purely univariate-in-x inputs reduce to the Z[x^±1] gcd.
    if a.degree_y() == 0 && b.degree_y() == 0 {
        let pa = LaurentPoly::from_terms(a.terms().map(|((x, _), c)| (x, c.clone())));
        let pb = LaurentPoly::from_terms(b.terms().map(|((x, _), c)| (x, c.clone())));
        return MultiLaurentPoly::from_univariate_x(&pa.gcd(&pb)).normalized_or_zero();
    }
    // Content/primitive-part recursion in y.
    let ca = a.content_y();
    let cb = b.content_y();
    let content_gcd = ca.gcd(&cb);
    let pa = a.div_y_coeffs_exact(&ca).expect("content divides");
    let pb = b.div_y_coeffs_exact(&cb).expect("content divides");
    // Primitive PRS in y. A nonzero remainder of y-degree 0 collapses to
    // ±1 under primitive-part extraction, which terminates the loop with
    // the correct (content-only) gcd.
    let (mut f, mut g) = if pa.degree_y() >= pb.degree_y() {
        (pa.normalized_monomial_shift().0, pb.normalized_monomial_shift().0)
    } else {
        (pb.normalized_monomial_shift().0, pa.normalized_monomial_shift().0)
    };
    while !g.is_zero() {
        let r = pseudo_rem_y(&f, &g);
        f = g;
        g = primitive_wrt_y(&r);
    }
    let prim = primitive_wrt_y(&f);
    (&prim * &MultiLaurentPoly::from_univariate_x(&content_gcd)).normalized_or_zero()
}

fn primitive_wrt_y(p: &MultiLaurentPoly) -> MultiLaurentPoly {
    if p.is_zero() {
        return MultiLaurentPoly::zero();
    }
    let c = p.content_y();
    p.div_y_coeffs_exact(&c).expect("content divides").normalized_or_zero()
}

/// Gcd of a family in Z[x^±1, y^±1], up to monomial units. Errors when
/// every input is zero.
pub fn multivariate_gcd(ps: &[MultiLaurentPoly]) -> Result<MultiLaurentPoly, AlgebraError> {
    if ps.iter().all(|p| p.is_zero()) {
        return Err(AlgebraError::AllZero);
    }
    let mut g = MultiLaurentPoly::zero();
    for p in ps {
        g = gcd_pair(&g, p);
        if g.is_monomial_unit() {
            break;
        }
    }
    Ok(g.normalized_or_zero())
}

impl Add for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn add(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        let mut out = self.clone();
        for (&(x, y), c) in &rhs.coeffs {
            out.add_term(x, y, c.clone());
        }
        out
    }
}

impl Sub for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn sub(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        let mut out = self.clone();
        for (&(x, y), c) in &rhs.coeffs {
            out.add_term(x, y, -c.clone());
        }
        out
    }
}

impl Mul for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn mul(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        let mut out = MultiLaurentPoly::zero();
        for (&(x1, y1), c1) in &self.coeffs {
            for (&(x2, y2), c2) in &rhs.coeffs {
                out.add_term(x1 + x2, y1 + y2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn neg(self) -> MultiLaurentPoly {
        MultiLaurentPoly {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl fmt::Display for MultiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(ex, ey), c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote = false;
            if !mag.is_one() || (ex == 0 && ey == 0) {
                write!(f, "{mag}")?;
                wrote = true;
            }
            for (sym, e) in [("x", ex), ("y", ey)] {
                if e != 0 {
                    if wrote {
                        write!(f, "*")?;
                    }
                    if e == 1 {
                        write!(f, "{sym}")?;
                    } else {
                        write!(f, "{sym}^{e}")?;
                    }
                    wrote = true;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xm1() -> MultiLaurentPoly {
        &MultiLaurentPoly::x() - &MultiLaurentPoly::one()
    }

    fn ym1() -> MultiLaurentPoly {
        &MultiLaurentPoly::y() - &MultiLaurentPoly::one()
    }

    #[test]
    fn gcd_monomials() {
        let a = &MultiLaurentPoly::x() * &MultiLaurentPoly::y();
        let b = &a * &MultiLaurentPoly::x();
        let g = multivariate_gcd(&[a, b]).unwrap();
        assert!(g.is_monomial_unit());
        assert_eq!(g, MultiLaurentPoly::one());
    }

    #[test]
    fn gcd_shared_factor() {
        let yp1 = &MultiLaurentPoly::y() + &MultiLaurentPoly::one();
        let a = &xm1() * &ym1();
        let b = &xm1() * &yp1;
        let g = multivariate_gcd(&[a, b]).unwrap();
        assert_eq!(g, xm1());
    }

    #[test]
    fn gcd_content() {
        let two = MultiLaurentPoly::monomial(0, 0, 2);
        let three = MultiLaurentPoly::monomial(0, 0, 3);
        let a = &two * &xm1();
        let b = &three * &xm1();
        let g = multivariate_gcd(&[a, b]).unwrap();
        assert_eq!(g, xm1());
    }

    #[test]
    fn gcd_all_zero_errors() {
        assert_eq!(
            multivariate_gcd(&[MultiLaurentPoly::zero()]),
            Err(AlgebraError::AllZero)
        );
    }

    #[test]
    fn gcd_divides_inputs() {
        let a = &(&xm1() * &ym1()) * &xm1();
        let b = &xm1() * &(&MultiLaurentPoly::y() + &MultiLaurentPoly::x());
        let g = multivariate_gcd(&[a.clone(), b.clone()]).unwrap();
        assert!(g.divides(&a));
        assert!(g.divides(&b));
    }

    #[test]
    fn div_exact_by_factors() {
        let prod = &xm1() * &ym1();
        assert_eq!(prod.div_exact(&xm1()).unwrap(), ym1());
        let xp1 = &MultiLaurentPoly::x() + &MultiLaurentPoly::one();
        assert!(prod.div_exact(&xp1).is_none());
        // monomials are units and divide everything
        assert!(MultiLaurentPoly::x().divides(&prod));
    }
}
