//! JSON form of polynomials: an array of coefficient strings, ascending degree.
//! Rational coefficients are `"a/b"`; ℚ(√d) coefficients are `["a/b", "c/d"]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::quad::{QuadNum, QuadPoly};
use super::RatPoly;

/// Always `numerator/denominator`, including integers (`"3/1"`).
pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn rational_from_str(s: &str) -> Result<BigRational, String> {
    let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|e| format!("bad integer {t:?}: {e}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(parse(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let items: Vec<String> = self.coeffs().iter().map(rational_to_string).collect();
        items.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        let coeffs = items
            .iter()
            .map(|s| rational_from_str(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(RatPoly::new(coeffs))
    }
}

/// Serialized ℚ(√13) polynomial. The field is fixed by the wire format.
pub const QUAD_WIRE_DISCRIMINANT: i64 = 13;

impl Serialize for QuadPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let items: Vec<[String; 2]> = self
            .coeffs()
            .iter()
            .map(|c| [rational_to_string(&c.a), rational_to_string(&c.b)])
            .collect();
        items.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<[String; 2]>::deserialize(deserializer)?;
        let coeffs = items
            .iter()
            .map(|[a, b]| {
                Ok(QuadNum::new(
                    rational_from_str(a)?,
                    rational_from_str(b)?,
                    QUAD_WIRE_DISCRIMINANT,
                ))
            })
            .collect::<Result<Vec<_>, String>>()
            .map_err(D::Error::custom)?;
        Ok(QuadPoly::new(coeffs, QUAD_WIRE_DISCRIMINANT))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::catalog;
    use proptest::prelude::*;

    #[test]
    fn rat_poly_wire_format() {
        let json = serde_json::to_string(&catalog::q7()).unwrap();
        assert_eq!(json, r#"["-41/1","-9/1","6/1","1/1"]"#);
        let back: RatPoly = serde_json::from_str(r#"["-41","-9/1","12/2","1"]"#).unwrap();
        assert_eq!(back, catalog::q7());
    }

    #[test]
    fn quad_poly_wire_format() {
        let r = catalog::r13_corrected();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"[["107/2","15/2"],["63/2","21/2"],["6/1","3/1"],["1/1","0/1"]]"#));
        let back: QuadPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn rejects_garbage() {
        assert!(serde_json::from_str::<RatPoly>(r#"["1/0"]"#).is_err());
        assert!(serde_json::from_str::<RatPoly>(r#"["x"]"#).is_err());
    }

    proptest! {
        #[test]
        fn rat_poly_json_round_trip(nums in proptest::collection::vec((-1000i64..1000, 1i64..50), 0..10)) {
            let p = RatPoly::new(nums.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect());
            let json = serde_json::to_string(&p).unwrap();
            let back: RatPoly = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
