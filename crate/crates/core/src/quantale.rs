//! The value quantale all distances live in: the extended nonnegative
//! rationals `[0, inf]` with `+` and truncated subtraction, or a finite
//! chain `{0, step, ..., levels*step}` with truncated addition where the
//! top plays the role of infinity.
//!
//! Everything is exact; there is no floating point anywhere in this crate.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of a value quantale: an exact nonnegative rational, or the
/// distinguished infinity. The derived order is the natural order with
/// `Infinity` on top.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Finite(BigRational),
    Infinity,
}

impl Value {
    pub fn zero() -> Self {
        Value::Finite(BigRational::zero())
    }

    pub fn int(n: u64) -> Self {
        Value::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rat(num: i64, den: i64) -> Self {
        Value::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Value::Finite(r) if r.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Value::Infinity)
    }

    /// Untruncated addition with absorbing infinity.
    pub fn plus(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Infinity, _) | (_, Value::Infinity) => Value::Infinity,
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(r) => write!(f, "{}", r),
            Value::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Value {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Value::Infinity);
        }
        let r = BigRational::from_str(s)
            .map_err(|e| Error::Malformed(format!("bad value {s:?}: {e}")))?;
        if r.is_negative() {
            return Err(Error::Malformed(format!("negative value {s:?}")));
        }
        Ok(Value::Finite(r))
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn rational_from_str(s: &str) -> Result<BigRational> {
    match Value::from_str(s)? {
        Value::Finite(r) => Ok(r),
        Value::Infinity => Err(Error::Malformed("step must be finite".into())),
    }
}

mod rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(
        r: &BigRational,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::rational_from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// Description of the ambient truth-value structure.
///
/// `ExtendedRational` is the exact fragment of `[0, inf]`; `Chain` is the
/// finite model `{0, step, 2*step, ..., levels*step}` whose top element
/// plays the role of infinity, with addition truncated at the top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Quantale {
    ExtendedRational,
    Chain {
        #[serde(with = "rat_string")]
        step: BigRational,
        levels: u32,
    },
}

impl Quantale {
    pub fn rational() -> Self {
        Quantale::ExtendedRational
    }

    pub fn chain(step: Value, levels: u32) -> Result<Self> {
        let step = match step {
            Value::Finite(r) if r.is_positive() => r,
            other => return Err(Error::Malformed(format!("bad chain step {other}"))),
        };
        if levels == 0 {
            return Err(Error::Malformed("chain needs at least one level".into()));
        }
        Ok(Quantale::Chain { step, levels })
    }

    /// The unit-step chain `{0, 1, ..., levels}`.
    pub fn unit_chain(levels: u32) -> Self {
        Quantale::Chain {
            step: BigRational::one(),
            levels,
        }
    }

    pub fn is_chain(&self) -> bool {
        matches!(self, Quantale::Chain { .. })
    }

    /// Least element, the unit of addition.
    pub fn zero(&self) -> Value {
        Value::zero()
    }

    /// Greatest element: infinity, or the chain top that plays its role.
    pub fn top(&self) -> Value {
        match self {
            Quantale::ExtendedRational => Value::Infinity,
            Quantale::Chain { step, levels } => {
                Value::Finite(step * BigRational::from_integer(BigInt::from(*levels)))
            }
        }
    }

    pub fn contains(&self, v: &Value) -> bool {
        match self {
            Quantale::ExtendedRational => true,
            Quantale::Chain { step, levels } => match v {
                Value::Infinity => false,
                Value::Finite(r) => {
                    let q = r / step;
                    q.is_integer()
                        && !q.is_negative()
                        && q.to_integer() <= BigInt::from(*levels)
                }
            },
        }
    }

    fn member<'a>(&self, v: &'a Value) -> Result<&'a Value> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(Error::QuantaleMismatch(format!(
                "value {v} does not live in {self:?}"
            )))
        }
    }

    /// Number of elements of a chain carrier.
    pub fn chain_len(&self) -> Result<usize> {
        match self {
            Quantale::Chain { levels, .. } => Ok(*levels as usize + 1),
            Quantale::ExtendedRational => Err(Error::UnsupportedEnumeration),
        }
    }

    /// The `i`-th chain element, `i * step`.
    pub fn value_of_level(&self, i: usize) -> Result<Value> {
        match self {
            Quantale::Chain { step, levels } if i <= *levels as usize => {
                Ok(Value::Finite(step * BigRational::from_integer(BigInt::from(i))))
            }
            Quantale::Chain { .. } => Err(Error::Malformed(format!("level {i} out of range"))),
            Quantale::ExtendedRational => Err(Error::UnsupportedEnumeration),
        }
    }

    pub fn level_of(&self, v: &Value) -> Result<usize> {
        match self {
            Quantale::Chain { step, .. } => {
                self.member(v)?;
                match v {
                    Value::Finite(r) => Ok((r / step).to_integer().try_into().unwrap()),
                    Value::Infinity => unreachable!(),
                }
            }
            Quantale::ExtendedRational => Err(Error::UnsupportedEnumeration),
        }
    }

    /// All elements of a chain, in natural order.
    pub fn values(&self) -> Result<Vec<Value>> {
        (0..self.chain_len()?).map(|i| self.value_of_level(i)).collect()
    }

    /// `u + v`; infinity is absorbing, chains truncate at the top.
    pub fn add(&self, u: &Value, v: &Value) -> Result<Value> {
        self.member(u)?;
        self.member(v)?;
        let sum = u.plus(v);
        Ok(match self {
            Quantale::ExtendedRational => sum,
            Quantale::Chain { .. } => sum.min(self.top()),
        })
    }

    /// Truncated subtraction `v (-) u`, the residual of addition: the least
    /// `w` with `u + w >= v`. On the rationals `inf (-) u = inf` for finite
    /// `u`, and `inf (-) inf = 0`.
    pub fn minus(&self, v: &Value, u: &Value) -> Result<Value> {
        self.member(v)?;
        self.member(u)?;
        Ok(match (v, u) {
            (_, Value::Infinity) => Value::zero(),
            (Value::Infinity, Value::Finite(_)) => Value::Infinity,
            (Value::Finite(a), Value::Finite(b)) => {
                if a <= b {
                    Value::zero()
                } else {
                    Value::Finite(a - b)
                }
            }
        })
    }

    /// The residuation law `u + v >= w  <=>  v >= w (-) u`, evaluated on one
    /// triple. Must hold identically in every supported quantale.
    pub fn residuation_holds(&self, u: &Value, v: &Value, w: &Value) -> Result<bool> {
        let lhs = self.add(u, v)? >= *w;
        let rhs = *v >= self.minus(w, u)?;
        Ok(lhs == rhs)
    }

    /// Supremum in the natural order; the empty join is `0`.
    pub fn join<'a, I: IntoIterator<Item = &'a Value>>(&self, vs: I) -> Result<Value> {
        let mut acc = self.zero();
        for v in vs {
            self.member(v)?;
            if *v > acc {
                acc = v.clone();
            }
        }
        Ok(acc)
    }

    /// Infimum in the natural order; the empty meet is the top.
    pub fn meet<'a, I: IntoIterator<Item = &'a Value>>(&self, vs: I) -> Result<Value> {
        let mut acc = self.top();
        for v in vs {
            self.member(v)?;
            if *v < acc {
                acc = v.clone();
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q5() -> Quantale {
        Quantale::unit_chain(5)
    }

    #[test]
    fn addition_examples() {
        let q = Quantale::rational();
        assert_eq!(q.add(&Value::int(2), &Value::int(3)).unwrap(), Value::int(5));
        assert_eq!(q.add(&Value::rat(3, 2), &Value::zero()).unwrap(), Value::rat(3, 2));
        // truncation: min(3 + 3, 5) is the chain top
        let c = q5();
        assert_eq!(c.add(&Value::int(3), &Value::int(3)).unwrap(), c.top());
        assert_eq!(c.top(), Value::int(5));
    }

    #[test]
    fn minus_examples() {
        let q = Quantale::rational();
        assert_eq!(q.minus(&Value::int(5), &Value::int(2)).unwrap(), Value::int(3));
        assert_eq!(q.minus(&Value::int(2), &Value::int(5)).unwrap(), Value::zero());
        assert_eq!(q.minus(&Value::Infinity, &Value::int(7)).unwrap(), Value::Infinity);
        // the residual inf { v | inf + v >= inf } is 0
        assert_eq!(q.minus(&Value::Infinity, &Value::Infinity).unwrap(), Value::zero());
        assert_eq!(q.minus(&Value::int(7), &Value::Infinity).unwrap(), Value::zero());
    }

    #[test]
    fn minus_is_the_residual_on_chains() {
        // least w with u + w >= v, found by scanning the carrier
        let c = q5();
        let vals = c.values().unwrap();
        for u in &vals {
            for v in &vals {
                let w = c.minus(v, u).unwrap();
                let least = vals
                    .iter()
                    .find(|w| c.add(u, w).unwrap() >= *v)
                    .expect("some w works");
                assert_eq!(&w, least, "v={v} u={u}");
            }
        }
    }

    #[test]
    fn residuation_exhaustive_on_small_chain() {
        let c = q5();
        let vals = c.values().unwrap();
        let mut count = 0;
        for u in &vals {
            for v in &vals {
                for w in &vals {
                    assert!(c.residuation_holds(u, v, w).unwrap(), "({u},{v},{w})");
                    count += 1;
                }
            }
        }
        assert_eq!(count, 216);
    }

    #[test]
    fn joins_and_meets() {
        let q = Quantale::rational();
        let s = [Value::int(1), Value::int(4), Value::int(2)];
        assert_eq!(q.join(&s).unwrap(), Value::int(4));
        assert_eq!(q.meet(&s).unwrap(), Value::int(1));
        assert_eq!(q.join([]).unwrap(), Value::zero());
        assert_eq!(q.meet([]).unwrap(), Value::Infinity);
        let c = q5();
        assert_eq!(c.meet([]).unwrap(), Value::int(5));
    }

    #[test]
    fn chain_membership_errors() {
        let c = q5();
        let err = c.add(&Value::rat(7, 3), &Value::int(1)).unwrap_err();
        assert!(matches!(err, Error::QuantaleMismatch(_)));
        let err = c.minus(&Value::Infinity, &Value::int(1)).unwrap_err();
        assert!(matches!(err, Error::QuantaleMismatch(_)));
    }

    #[test]
    fn chain_carrier_closed_under_operations() {
        let c = q5();
        let vals = c.values().unwrap();
        for u in &vals {
            for v in &vals {
                assert!(c.contains(&c.add(u, v).unwrap()));
                assert!(c.contains(&c.minus(u, v).unwrap()));
            }
        }
    }

    #[test]
    fn minus_preserves_maxima_and_nonempty_minima() {
        let c = q5();
        let vals = c.values().unwrap();
        for u in &vals {
            for mask in 1u32..(1 << vals.len()) {
                let set: Vec<&Value> =
                    vals.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v).collect();
                let max = set.iter().cloned().max().unwrap();
                let min = set.iter().cloned().min().unwrap();
                let image: Vec<Value> =
                    set.iter().map(|v| c.minus(v, u).unwrap()).collect();
                assert_eq!(c.minus(max, u).unwrap(), image.iter().cloned().max().unwrap());
                assert_eq!(c.minus(min, u).unwrap(), image.iter().cloned().min().unwrap());
            }
        }
    }

    #[test]
    fn value_parsing_round_trip() {
        for s in ["0", "7", "3/2", "inf"] {
            let v: Value = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("14/4".parse::<Value>().unwrap().to_string(), "7/2");
        assert!("-1".parse::<Value>().is_err());
    }

    fn small_value() -> impl Strategy<Value = Value> {
        prop_oneof![
            9 => (0i64..40, 1i64..12).prop_map(|(n, d)| Value::rat(n, d)),
            1 => Just(Value::Infinity),
        ]
    }

    proptest! {
        #[test]
        fn residuation_on_random_rationals(u in small_value(), v in small_value(), w in small_value()) {
            let q = Quantale::rational();
            prop_assert!(q.residuation_holds(&u, &v, &w).unwrap());
        }

        #[test]
        fn addition_monoid_laws(u in small_value(), v in small_value(), w in small_value()) {
            let q = Quantale::rational();
            prop_assert_eq!(q.add(&u, &v).unwrap(), q.add(&v, &u).unwrap());
            prop_assert_eq!(
                q.add(&q.add(&u, &v).unwrap(), &w).unwrap(),
                q.add(&u, &q.add(&v, &w).unwrap()).unwrap()
            );
            prop_assert_eq!(q.add(&u, &Value::zero()).unwrap(), u);
        }

        #[test]
        fn minus_preserves_max_and_min_rationals(
            u in small_value(),
            vs in proptest::collection::vec(small_value(), 1..6),
        ) {
            let q = Quantale::rational();
            let max = vs.iter().max().unwrap();
            let min = vs.iter().min().unwrap();
            let image: Vec<Value> = vs.iter().map(|v| q.minus(v, &u).unwrap()).collect();
            prop_assert_eq!(q.minus(max, &u).unwrap(), image.iter().cloned().max().unwrap());
            prop_assert_eq!(q.minus(min, &u).unwrap(), image.iter().cloned().min().unwrap());
        }
    }
}
