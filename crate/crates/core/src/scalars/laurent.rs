//! Integer Laurent polynomials in `t`, used for graded dimensions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{Map, Value};

/// A finitely supported map from exponents of `t` to integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, 1)
    }

    /// `c * t^k`.
    pub fn monomial(k: i64, c: i64) -> Self {
        let mut l = Laurent::zero();
        l.add_term(k, c);
        l
    }

    pub fn add_term(&mut self, k: i64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(k).or_insert(0);
        *entry = entry.checked_add(c).expect("Laurent coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiply by `t^s`.
    pub fn shift(&self, s: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&k, &c)| (k + s, c)).collect(),
        }
    }

    /// Every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// JSON object `{"k": coeff}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (k, c) in &self.terms {
            m.insert(k.to_string(), Value::from(*c));
        }
        Value::Object(m)
    }
}

/// The bar involution `t -> t^{-1}`.
pub fn laurent_bar(f: &Laurent) -> Laurent {
    Laurent {
        terms: f.terms.iter().map(|(&k, &c)| (-k, c)).collect(),
    }
}

impl fmt::Display for Laurent {
    /// Human readable form such as `t^2 + 1` or `3t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, &c) in self.terms.iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if a != 1 {
                        write!(f, "{}", a)?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", k)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, &c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        &self + &rhs
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&a, &c) in &self.terms {
            for (&b, &d) in &rhs.terms {
                out.add_term(a + b, c.checked_mul(d).expect("Laurent coefficient overflow"));
            }
        }
        out
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bar_examples() {
        let f = Laurent::monomial(2, 1) + Laurent::one();
        assert_eq!(laurent_bar(&f), Laurent::monomial(-2, 1) + Laurent::one());
        assert_eq!(laurent_bar(&Laurent::zero()), Laurent::zero());
        assert_eq!(laurent_bar(&Laurent::monomial(1, 3)), Laurent::monomial(-1, 3));
        assert_eq!(f.to_string(), "t^2 + 1");
        assert_eq!(f.to_json().to_string(), r#"{"0":1,"2":1}"#);
    }

    fn arb() -> impl Strategy<Value = Laurent> {
        proptest::collection::vec((-4i64..5, -3i64..4), 0..5).prop_map(|v| {
            let mut l = Laurent::zero();
            for (k, c) in v {
                l.add_term(k, c);
            }
            l
        })
    }

    proptest! {
        #[test]
        fn bar_is_involutive_ring_morphism(f in arb(), g in arb()) {
            prop_assert_eq!(laurent_bar(&laurent_bar(&f)), f.clone());
            prop_assert_eq!(laurent_bar(&(&f * &g)), &laurent_bar(&f) * &laurent_bar(&g));
            prop_assert_eq!(laurent_bar(&(&f + &g)), &laurent_bar(&f) + &laurent_bar(&g));
        }
    }
}
