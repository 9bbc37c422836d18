use num_rational::BigRational;
use num_traits::Zero;

use super::rat::rat;
use super::{is_palindromic, RatPoly};
use crate::error::{Error, Result};

/// A palindromic `P` of degree `2m` together with `Q` such that
/// `P(r) = Q(r + 1/r) · r^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentPair {
    pub p: RatPoly,
    pub q: RatPoly,
    pub m: usize,
}

/// Exact expansion of `Q(r + 1/r) · r^m`, using `(r + 1/r)^i r^m = (r² + 1)^i r^(m−i)`.
pub fn lift_descent(q: &RatPoly, m: usize) -> Result<RatPoly> {
    if q.degree() != Some(m) {
        return Err(Error::InvalidArgument(format!(
            "lift_descent needs deg Q = m; got deg Q = {:?}, m = {m}",
            q.degree()
        )));
    }
    let r2_plus_1 = RatPoly::from_i64(&[1, 0, 1]);
    let mut out = RatPoly::zero();
    for (i, c) in q.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = r2_plus_1.pow(i).shift(m - i).scale(c);
        out = &out + &term;
    }
    Ok(out)
}

/// Recovers `Q` from a palindromic `P` of even degree.
///
/// Writes `P(r)/r^m = p_m + Σ_j p_{m+j} (r^j + r^{−j})` and substitutes
/// `r^j + r^{−j} = D_j(s)`, where `D_0 = 2`, `D_1 = s`, `D_j = s D_{j−1} − D_{j−2}`.
pub fn descend_palindromic(p: &RatPoly) -> Result<DescentPair> {
    let degree = p
        .degree()
        .ok_or_else(|| Error::Domain("zero polynomial has no descent".into()))?;
    if !is_palindromic(p) {
        let c = p.coeffs();
        let i = (0..=degree)
            .find(|&i| c[i] != c[degree - i])
            .expect("non-palindromic has a mismatch");
        return Err(Error::Domain(format!(
            "not palindromic: coefficient of r^{i} is {} but coefficient of r^{} is {}",
            c[i],
            degree - i,
            c[degree - i]
        )));
    }
    if degree % 2 == 1 {
        return Err(Error::Domain(format!(
            "palindromic descent needs even degree, got {degree}"
        )));
    }
    let m = degree / 2;
    let s = RatPoly::x();
    let mut dickson = vec![RatPoly::from_i64(&[2]), s.clone()];
    for j in 2..=m {
        let next = &(&s * &dickson[j - 1]) - &dickson[j - 2];
        dickson.push(next);
    }
    let mut q = RatPoly::new(vec![p.coeff(m)]);
    for (j, d) in dickson.iter().enumerate().take(m + 1).skip(1) {
        q = &q + &d.scale(&p.coeff(m + j));
    }
    Ok(DescentPair {
        p: p.clone(),
        q,
        m,
    })
}

/// `Q(2)` and `Q(−2)` equal `P(1)` and `P(−1)·(−1)^m` for a descent pair; cheap exact spot checks.
pub fn spot_values(pair: &DescentPair) -> [(BigRational, BigRational); 2] {
    let sign = if pair.m.is_multiple_of(2) { rat(1) } else { rat(-1) };
    [
        (pair.p.eval_exact(&rat(1)), pair.q.eval_exact(&rat(2))),
        (pair.p.eval_exact(&rat(-1)) * sign, pair.q.eval_exact(&rat(-2))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::catalog;
    use proptest::prelude::*;

    #[test]
    fn lift_of_s() {
        assert_eq!(
            lift_descent(&RatPoly::x(), 1).unwrap(),
            RatPoly::from_i64(&[1, 0, 1])
        );
    }

    #[test]
    fn lift_of_heptagon_cubic_has_positive_linear_term() {
        let p = lift_descent(&catalog::q7(), 3).unwrap();
        assert_eq!(p, RatPoly::from_i64(&[1, 6, -6, -29, -6, 6, 1]));
        assert_ne!(p, catalog::p7_printed());
    }

    #[test]
    fn lift_of_tridecagon_sextic_matches_printed_p12() {
        let p = lift_descent(&catalog::q13(), 6).unwrap();
        assert_eq!(p, catalog::p12_printed());
        assert_eq!(p.eval_exact(&rat(1)), rat(729));
        assert_eq!(p.eval_exact(&rat(-1)), rat(13));
    }

    #[test]
    fn lift_rejects_degree_mismatch() {
        assert!(matches!(
            lift_descent(&catalog::q7(), 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn descend_recovers_known_pairs() {
        let pair = descend_palindromic(&RatPoly::from_i64(&[1, 0, 1])).unwrap();
        assert_eq!((pair.q, pair.m), (RatPoly::x(), 1));
        let q7 = descend_palindromic(&catalog::p7_corrected()).unwrap();
        assert_eq!(q7.q, catalog::q7());
        let q13 = descend_palindromic(&catalog::p12_printed()).unwrap();
        assert_eq!(q13.q, catalog::q13());
        let spots = spot_values(&q13);
        assert_eq!(spots[0], (rat(729), rat(729)));
        assert_eq!(spots[1], (rat(13), rat(13)));
    }

    #[test]
    fn descend_rejects_printed_sextic() {
        let err = descend_palindromic(&catalog::p7_printed()).unwrap_err();
        match err {
            Error::Domain(msg) => assert!(msg.contains("r^1"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(descend_palindromic(&RatPoly::from_i64(&[1, 1])).is_err());
    }

    proptest! {
        #[test]
        fn descent_round_trip(mut half in proptest::collection::vec(-50i64..50, 1..7), mid in -50i64..50) {
            if half[0] == 0 {
                half[0] = 1;
            }
            let mut coeffs = half.clone();
            coeffs.push(mid);
            coeffs.extend(half.iter().rev());
            let p = RatPoly::from_i64(&coeffs);
            prop_assert!(is_palindromic(&p));
            let pair = descend_palindromic(&p).unwrap();
            prop_assert_eq!(lift_descent(&pair.q, pair.m).unwrap(), p);
        }
    }
}
