use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, LaurentPoly};

/// Factor a nonzero integer Laurent polynomial into its content and
/// normalized irreducible factors with multiplicities:
/// `p ≐ content · Π q_i^{e_i}` up to a unit `±t^k`.
///
/// Factor search is evaluation-based (rational roots, then Kronecker
/// interpolation through divisors of sample values), which is adequate
/// at desk scale.
pub fn factor_primitive(p: &LaurentPoly) -> Result<(BigInt, Vec<(LaurentPoly, u32)>), AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let content = p.content();
    let mut rest = p.primitive_part();
    let mut factors: Vec<(LaurentPoly, u32)> = Vec::new();
    let push = |q: LaurentPoly, factors: &mut Vec<(LaurentPoly, u32)>| {
        let q = q.normalize().unwrap();
        for (f, e) in factors.iter_mut() {
            if *f == q {
                *e += 1;
                return;
            }
        }
        factors.push((q, 1));
    };

    // Linear factors via rational roots a/b: b*t - a with b | lead, a | const.
    'roots: loop {
        if rest.span() <= 1 {
            break;
        }
        let shifted = rest.shifted(-rest.min_exp().unwrap());
        let c0 = shifted.coeff(0);
        let lead = shifted.leading_coeff();
        for b in divisors(&lead) {
            for a in signed_divisors(&c0) {
                let cand = LaurentPoly::from_terms([(1i64, b.clone()), (0i64, -a.clone())]);
                if let Some(q) = rest.div_exact(&cand) {
                    push(cand, &mut factors);
                    rest = q.primitive_part();
                    continue 'roots;
                }
            }
        }
        break;
    }

    // Kronecker search for factors of degree >= 2.
    loop {
        let shifted = rest.shifted(-rest.min_exp().unwrap_or(0));
        let deg = shifted.max_exp().unwrap_or(0);
        if deg <= 3 {
            // No rational roots left: degree <= 3 primitives are irreducible.
            break;
        }
        match kronecker_find_factor(&shifted) {
            Some(q) => {
                push(q.clone(), &mut factors);
                rest = rest.div_exact(&q).expect("found factor divides").primitive_part();
            }
            None => break,
        }
    }
    if rest.span() > 1 {
        push(rest.clone(), &mut factors);
    } else if rest.normalize().unwrap() != LaurentPoly::one() {
        // Residual unit content (can only be ±1 after primitive_part).
        debug_assert!(rest.is_monomial_unit());
    }
    factors.sort_by(|a, b| (a.0.span(), a.0.clone()).cmp(&(b.0.span(), b.0.clone())));
    Ok((content, factors))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    for d in divisors(n) {
        out.push(d.clone());
        out.push(-d);
    }
    out
}

/// Search for a nontrivial factor of degree 2..deg/2 of an honest
/// primitive polynomial by Kronecker interpolation.
fn kronecker_find_factor(p: &LaurentPoly) -> Option<LaurentPoly> {
    let deg = p.max_exp().unwrap();
    let max_g = deg / 2;
    for g in 2..=max_g {
        // Sample points 0, 1, -1, 2, ... with nonzero values.
        let mut pts: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
        let mut k = 0i64;
        while pts.len() < (g + 1) as usize {
            let x = BigInt::from(if k == 0 {
                0
            } else if k % 2 == 1 {
                (k + 1) / 2
            } else {
                -(k / 2)
            });
            k += 1;
            let v = p.eval_int(&x);
            if v.is_zero() {
                continue; // rational root already exhausted; skip
            }
            pts.push((x, signed_divisors(&v)));
        }
        // Enumerate divisor tuples; fix the first point's sign freedom by
        // only taking positive divisors there (factors found up to sign).
        let mut idx = vec![0usize; pts.len()];
        let limits: Vec<usize> = pts.iter().map(|(_, ds)| ds.len()).collect();
        'tuples: loop {
            let values: Vec<(BigInt, BigInt)> = pts
                .iter()
                .zip(&idx)
                .map(|((x, ds), &i)| (x.clone(), ds[i].clone()))
                .collect();
            if let Some(cand) = interpolate_integer_poly(&values, g) {
                if cand.span() > 1 {
                    if let Some(_q) = p.div_exact(&cand) {
                        return Some(cand);
                    }
                }
            }
            // advance tuple
            for pos in 0..idx.len() {
                idx[pos] += 1;
                if idx[pos] < limits[pos] {
                    continue 'tuples;
                }
                idx[pos] = 0;
            }
            break;
        }
    }
    None
}

fn interpolate_integer_poly(values: &[(BigInt, BigInt)], deg: i64) -> Option<LaurentPoly> {
    let coeffs = super::matrix::newton_interpolate_pub(values);
    if coeffs.len() as i64 > deg + 1 {
        return None;
    }
    let mut p = LaurentPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return None;
        }
        p = &p + &LaurentPoly::monomial(i as i64, c.to_integer());
    }
    (!p.is_zero()).then_some(p)
}

/// Fox–Milnor search: a factor `f` with `Δ ≐ f(t)·f(t^{-1})` up to units,
/// or `None` when no such factorization exists. Requires `Δ(1) = ±1`.
pub fn fox_milnor_factor(delta: &LaurentPoly) -> Result<Option<LaurentPoly>, AlgebraError> {
    if delta.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let at_one = delta.eval_at_one();
    if !at_one.abs().is_one() {
        return Err(AlgebraError::NotAKnotPolynomial(at_one.to_string()));
    }
    let (_content, factors) = factor_primitive(delta)?;
    // Pair each irreducible with its conjugate under t ↦ 1/t.
    let mut f = LaurentPoly::one();
    let mut remaining: Vec<(LaurentPoly, u32)> = factors;
    while let Some((q, e)) = remaining.pop() {
        let conj = q.involute().normalize().unwrap();
        if conj == q {
            // Self-conjugate: needs even multiplicity.
            if e % 2 != 0 {
                return Ok(None);
            }
            f = &f * &q.pow(e / 2);
        } else {
            match remaining.iter().position(|(p, _)| *p == conj) {
                Some(i) if remaining[i].1 == e => {
                    remaining.remove(i);
                    f = &f * &q.pow(e);
                }
                _ => return Ok(None),
            }
        }
    }
    // Exact verification: Δ ≐ f(t) f(1/t).
    let prod = &f * &f.involute();
    if prod.unit_equal(delta) || prod.unit_equal(&-delta) {
        Ok(Some(f.normalize().unwrap()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn factor_quadratic_with_roots() {
        let (c, fs) = factor_primitive(&p("2 - 5*t + 2*t^2")).unwrap();
        assert_eq!(c, BigInt::one());
        let mut found: Vec<LaurentPoly> = fs.iter().map(|(f, _)| f.clone()).collect();
        found.sort();
        let mut expect = vec![p("2*t - 1"), p("t - 2").normalize().unwrap()];
        expect.sort();
        assert_eq!(found, expect);
        assert!(fs.iter().all(|(_, e)| *e == 1));
    }

    #[test]
    fn factor_irreducible() {
        let (_, fs) = factor_primitive(&p("1 - t + t^2")).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
    }

    #[test]
    fn factor_quartic_product() {
        let quartic = &p("1 - t + t^2") * &p("1 - 3*t + t^2");
        let (_, fs) = factor_primitive(&quartic).unwrap();
        assert_eq!(fs.len(), 2);
        for (f, e) in &fs {
            assert_eq!(*e, 1);
            assert!(quartic.div_exact(f).is_some());
        }
    }

    #[test]
    fn fox_milnor_stevedore() {
        let delta = &p("t - 2") * &p("t^-1 - 2");
        let f = fox_milnor_factor(&delta).unwrap().unwrap();
        assert!(f.symmetric_equal(&p("t - 2")));
        let back = &f * &f.involute();
        assert!(back.unit_equal(&delta) || back.unit_equal(&-&delta));
    }

    #[test]
    fn fox_milnor_trivial() {
        assert_eq!(
            fox_milnor_factor(&LaurentPoly::one()).unwrap(),
            Some(LaurentPoly::one())
        );
    }

    #[test]
    fn fox_milnor_trefoil_fails() {
        assert_eq!(fox_milnor_factor(&p("1 - t + t^2")).unwrap(), None);
    }

    #[test]
    fn fox_milnor_rejects_non_knot_poly() {
        assert!(matches!(
            fox_milnor_factor(&p("t - 3")),
            Err(AlgebraError::NotAKnotPolynomial(_))
        ));
    }

    #[test]
    fn fox_milnor_square_of_symmetric() {
        // (t^2 - 3t + 1)^2 is a square of a self-conjugate irreducible.
        let sym = p("1 - 3*t + t^2");
        let delta = &sym * &sym;
        let f = fox_milnor_factor(&delta).unwrap().unwrap();
        let back = &f * &f.involute();
        assert!(back.unit_equal(&delta) || back.unit_equal(&-&delta));
    }
}
