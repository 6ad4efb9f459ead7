//! Exact rational scalars and the parameter set (n, r, q, u_1..u_r) that
//! every algebra computation is relative to.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number. All coefficient arithmetic in the crate runs
/// through this type; nothing is ever rounded.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(v)))
    }

    /// Builds num/den exactly; rejects a zero denominator.
    pub fn from_fraction(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::OutOfRange("zero denominator".into()));
        }
        Ok(Scalar(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Multiplicative inverse, or None for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn abs(&self) -> Self {
        if self.0 < BigRational::zero() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_negative(&self) -> bool {
        self.0 < BigRational::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0 $op rhs.0)
            }
        }
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(&self.0 $op &rhs.0)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Div for &Scalar {
    type Output = Scalar;
    /// Division; panics on a zero divisor. Use [`Scalar::inverse`] when the
    /// divisor is not known to be nonzero.
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl fmt::Display for Scalar {
    /// Canonical form: "p" for integers, "p/q" otherwise, with q > 0 and
    /// gcd(p, q) = 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses "p" or "p/q" with an optional leading minus sign.
    fn from_str(s: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.into() };
        let (num_str, den_str) = match s.find('/') {
            Some(idx) => (&s[..idx], Some(&s[idx + 1..])),
            None => (s, None),
        };
        let parse_int = |txt: &str, pos: usize, allow_sign: bool| -> Result<BigInt> {
            let body = match txt.strip_prefix('-') {
                Some(rest) if allow_sign => rest,
                Some(_) => return Err(err(pos, "unexpected sign in denominator")),
                None => txt,
            };
            if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(pos, "expected an integer"));
            }
            txt.parse::<BigInt>()
                .map_err(|_| err(pos, "expected an integer"))
        };
        let numer = parse_int(num_str, 0, true)?;
        match den_str {
            None => Ok(Scalar(BigRational::from_integer(numer))),
            Some(d) => {
                let pos = num_str.len() + 1;
                let denom = parse_int(d, pos, false)?;
                if denom.is_zero() {
                    return Err(err(pos, "zero denominator"));
                }
                Ok(Scalar(BigRational::new(numer, denom)))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// The validated parameter data of one algebra: n strands, r colors, the
/// Hecke parameter q, and pairwise distinct spectral parameters u_1..u_r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterSet {
    n: usize,
    r: usize,
    q: Scalar,
    u: Vec<Scalar>,
}

impl ParameterSet {
    /// Validates and builds a parameter set. Requires n >= 1, r >= 1,
    /// q nonzero, u of length r with pairwise distinct entries.
    pub fn new(n: usize, r: usize, q: Scalar, u: Vec<Scalar>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be at least 1".into()));
        }
        if r == 0 {
            return Err(Error::OutOfRange("r must be at least 1".into()));
        }
        if q.is_zero() {
            return Err(Error::ZeroQ);
        }
        if u.len() != r {
            return Err(Error::BadShape(format!(
                "expected {} u parameters, got {}",
                r,
                u.len()
            )));
        }
        for i in 0..u.len() {
            for j in (i + 1)..u.len() {
                if u[i] == u[j] {
                    return Err(Error::RepeatedU(i + 1, j + 1));
                }
            }
        }
        Ok(ParameterSet { n, r, q, u })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn u(&self) -> &[Scalar] {
        &self.u
    }

    /// The spectral parameter attached to a 1-based color.
    pub fn u_color(&self, c: u8) -> &Scalar {
        &self.u[(c as usize) - 1]
    }

    /// q - q^{-1}, the quadratic defect of the Hecke generators.
    pub fn q_defect(&self) -> Scalar {
        let q_inv = self.q.inverse().expect("q validated nonzero");
        &self.q - &q_inv
    }

    /// The Vandermonde product prod_{i<j} (u_j - u_i); nonzero by validation.
    pub fn delta(&self) -> Scalar {
        let mut acc = Scalar::one();
        for i in 0..self.r {
            for j in (i + 1)..self.r {
                acc = &acc * &(&self.u[j] - &self.u[i]);
            }
        }
        acc
    }

    /// Elementary symmetric polynomial sigma_j(u_1..u_r), 0 <= j <= r.
    pub fn elementary_symmetric(&self, j: usize) -> Result<Scalar> {
        if j > self.r {
            return Err(Error::OutOfRange(format!(
                "sigma_{j} undefined for r = {}",
                self.r
            )));
        }
        let mut e = vec![Scalar::zero(); self.r + 1];
        e[0] = Scalar::one();
        for (m, u) in self.u.iter().enumerate() {
            for d in (1..=(m + 1)).rev() {
                let bump = &e[d - 1] * u;
                e[d] += &bump;
            }
        }
        Ok(e[j].clone())
    }

    /// Complete homogeneous symmetric polynomial h_s(u_1..u_r), s >= 0.
    pub fn complete_homogeneous(&self, s: usize) -> Scalar {
        let mut h = vec![Scalar::zero(); s + 1];
        h[0] = Scalar::one();
        for u in &self.u {
            for d in 1..=s {
                let bump = &h[d - 1] * u;
                h[d] += &bump;
            }
        }
        h[s].clone()
    }

    /// Whether the trace form admits duals: sigma_r = u_1 ... u_r != 0.
    pub fn is_symmetrizing(&self) -> bool {
        self.u.iter().all(|u| !u.is_zero())
    }
}

impl<'de> Deserialize<'de> for ParameterSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            r: usize,
            q: Scalar,
            u: Vec<Scalar>,
        }
        let raw = Raw::deserialize(deserializer)?;
        ParameterSet::new(raw.n, raw.r, raw.q, raw.u).map_err(|e| D::Error::custom(format!("{e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn params(n: usize, r: usize, q: &str, u: &[&str]) -> ParameterSet {
        ParameterSet::new(n, r, s(q), u.iter().map(|t| s(t)).collect()).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["0", "1", "-1", "3/2", "-7/3", "22", "1000000000000000001"] {
            assert_eq!(s(text).to_string(), text);
        }
        // Non-canonical inputs normalize.
        assert_eq!(s("4/6").to_string(), "2/3");
        assert_eq!(s("-0").to_string(), "0");
        assert_eq!(s("5/1").to_string(), "5");
        assert_eq!(s("-4/8").to_string(), "-1/2");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for text in ["", "1/0", "a", "1/", "/2", "1.5", "++3", "1/-2", "- 1", "3 /2"] {
            assert!(text.parse::<Scalar>().is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Scalar::from_fraction(1, 3).unwrap();
        let sum = &(&third + &third) + &third;
        assert!(sum.is_one());
        assert_eq!(s("2/3").pow(3), s("8/27"));
        assert_eq!(s("-5").inverse().unwrap(), s("-1/5"));
        assert!(Scalar::zero().inverse().is_none());
        assert_eq!(&s("7/4") / &s("-1/2"), s("-7/2"));
    }

    /// Oracle: sigma_j enumerated over all j-element subsets.
    fn sigma_by_subsets(u: &[Scalar], j: usize) -> Scalar {
        if j == 0 {
            return Scalar::one();
        }
        let mut total = Scalar::zero();
        for subset in (0..u.len()).combinations(j) {
            let mut prod = Scalar::one();
            for i in subset {
                prod = &prod * &u[i];
            }
            total += &prod;
        }
        total
    }

    /// Oracle: h_s enumerated over all weakly increasing index tuples.
    fn h_by_multisets(u: &[Scalar], s: usize) -> Scalar {
        fn rec(u: &[Scalar], start: usize, left: usize, acc: &Scalar, total: &mut Scalar) {
            if left == 0 {
                *total += acc;
                return;
            }
            for i in start..u.len() {
                rec(u, i, left - 1, &(acc * &u[i]), total);
            }
        }
        let mut total = Scalar::zero();
        rec(u, 0, s, &Scalar::one(), &mut total);
        total
    }

    #[test]
    fn elementary_symmetric_matches_subset_enumeration() {
        let p = params(2, 3, "2", &["1", "2", "3"]);
        for j in 0..=3 {
            assert_eq!(
                p.elementary_symmetric(j).unwrap(),
                sigma_by_subsets(p.u(), j)
            );
        }
        assert_eq!(p.elementary_symmetric(2).unwrap(), s("11"));
        assert_eq!(p.elementary_symmetric(0).unwrap(), Scalar::one());
        assert!(p.elementary_symmetric(4).is_err());

        let p = params(2, 4, "1/3", &["1/2", "-3", "7", "2/5"]);
        for j in 0..=4 {
            assert_eq!(
                p.elementary_symmetric(j).unwrap(),
                sigma_by_subsets(p.u(), j)
            );
        }
    }

    #[test]
    fn complete_homogeneous_matches_multiset_enumeration() {
        let p = params(2, 2, "2", &["1", "-1"]);
        assert_eq!(p.complete_homogeneous(0), s("1"));
        assert_eq!(p.complete_homogeneous(1), s("0"));
        assert_eq!(p.complete_homogeneous(2), s("1"));

        let p = params(2, 3, "2", &["2", "1/3", "-5"]);
        for deg in 0..=5 {
            assert_eq!(p.complete_homogeneous(deg), h_by_multisets(p.u(), deg));
        }
    }

    /// Newton's identity sum_{j=0}^{s} (-1)^j sigma_j h_{s-j} = [s = 0],
    /// with sigma_j = 0 beyond j = r. The two sides use independent
    /// recurrences, so this cross-checks both symmetric-function routines.
    fn check_newton(p: &ParameterSet) {
        for deg in 0..=(2 * p.r()) {
            let mut acc = Scalar::zero();
            for j in 0..=deg.min(p.r()) {
                let term = &p.elementary_symmetric(j).unwrap() * &p.complete_homogeneous(deg - j);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            let expected = if deg == 0 { Scalar::one() } else { Scalar::zero() };
            assert_eq!(acc, expected, "Newton's identity failed at degree {deg}");
        }
    }

    #[test]
    fn newton_identity_on_fixed_parameter_sets() {
        check_newton(&params(2, 3, "5", &["1", "2", "3"]));
        check_newton(&params(3, 4, "1/7", &["1/2", "-3", "7", "2/5"]));
        check_newton(&params(1, 2, "-2/3", &["4", "-1/6"]));
    }

    #[test]
    fn validation_rejects_bad_parameters() {
        let u2 = vec![s("1"), s("-1")];
        assert_eq!(
            ParameterSet::new(2, 2, Scalar::zero(), u2.clone()).unwrap_err(),
            Error::ZeroQ
        );
        assert_eq!(
            ParameterSet::new(2, 2, s("1"), vec![s("3"), s("3")]).unwrap_err(),
            Error::RepeatedU(1, 2)
        );
        assert!(matches!(
            ParameterSet::new(2, 3, s("1"), u2.clone()).unwrap_err(),
            Error::BadShape(_)
        ));
        assert!(matches!(
            ParameterSet::new(0, 2, s("1"), u2.clone()).unwrap_err(),
            Error::OutOfRange(_)
        ));
        assert!(matches!(
            ParameterSet::new(2, 0, s("1"), vec![]).unwrap_err(),
            Error::OutOfRange(_)
        ));
    }

    #[test]
    fn symmetrizing_flag_tracks_zero_u() {
        assert!(params(2, 2, "2", &["1", "-1"]).is_symmetrizing());
        assert!(!params(2, 2, "2", &["0", "1"]).is_symmetrizing());
    }

    #[test]
    fn q_defect_and_delta() {
        let p = params(2, 2, "3/2", &["1", "-1"]);
        assert_eq!(p.q_defect(), s("5/6")); // 3/2 - 2/3
        assert_eq!(p.delta(), s("-2")); // u_2 - u_1
        let p = params(2, 3, "2", &["1", "2", "3"]);
        assert_eq!(p.delta(), s("2")); // (2-1)(3-1)(3-2)
    }

    #[test]
    fn parameter_set_json_round_trip() {
        let p = params(3, 2, "3/2", &["1", "-1"]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"n":3,"r":2,"q":"3/2","u":["1","-1"]}"#);
        let back: ParameterSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        // Deserialization re-validates.
        assert!(serde_json::from_str::<ParameterSet>(r#"{"n":2,"r":2,"q":"0","u":["1","2"]}"#)
            .is_err());
        assert!(serde_json::from_str::<ParameterSet>(r#"{"n":2,"r":2,"q":"1","u":["1","1"]}"#)
            .is_err());
    }

    fn rational() -> impl Strategy<Value = Scalar> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Scalar::from_fraction(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn scalar_string_round_trip(x in rational()) {
            let text = x.to_string();
            prop_assert_eq!(text.parse::<Scalar>().unwrap(), x);
        }

        #[test]
        fn newton_identity_random(u in proptest::collection::vec(rational(), 1..=4)) {
            let distinct = u.iter().all(|a| u.iter().filter(|b| *b == a).count() == 1);
            prop_assume!(distinct);
            let r = u.len();
            let p = ParameterSet::new(1, r, Scalar::one(), u).unwrap();
            for deg in 0..=(2 * r) {
                let mut acc = Scalar::zero();
                for j in 0..=deg.min(r) {
                    let term = &p.elementary_symmetric(j).unwrap()
                        * &p.complete_homogeneous(deg - j);
                    if j % 2 == 0 { acc += &term; } else { acc -= &term; }
                }
                let expected = if deg == 0 { Scalar::one() } else { Scalar::zero() };
                prop_assert_eq!(acc, expected);
            }
        }
    }
}
