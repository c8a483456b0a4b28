//! Classification of a dilation d into the lower-bound regimes for
//! |d·Had ∩ ℤⁿ|, with the certified bound value for each. All logarithms are
//! base 2, so log n = m.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bounds::case1::case1_count_lower_bound;
use crate::bounds::case3::{log2_big, round6};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Case1,
    Case2,
    Case3a,
    Case3b,
    Gap,
    OutOfRange,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Case1 => "case1",
            Regime::Case2 => "case2",
            Regime::Case3a => "case3a",
            Regime::Case3b => "case3b",
            Regime::Gap => "gap",
            Regime::OutOfRange => "out-of-range",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u64,
    pub d: u64,
    pub epsilon: f64,
    pub regime: Regime,
    /// log₂ of the certified lower bound on |d·Had ∩ ℤⁿ|.
    pub bound_log2: f64,
    /// Decimal string; only when an exact count is certified.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact_bound: Option<String>,
    pub notes: Vec<String>,
}

fn log_dim(n: u64) -> Result<u32> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::Domain(format!("n = {n} is not a power of two ≥ 2")));
    }
    Ok(n.trailing_zeros())
}

/// Largest d with d ≤ m^1.5, i.e. d² ≤ m³.
fn case2_max(m: u32) -> u64 {
    (u64::from(m).pow(3)).sqrt()
}

/// Assigns d to a regime; at shared boundaries the lower case wins.
pub fn classify(n: u64, d: u64, eps: f64) -> Result<Regime> {
    let m = log_dim(n)?;
    let nm = u128::from(n) * u128::from(m);
    let (d128, m128) = (u128::from(d), u128::from(m));
    if d128 >= nm {
        return Ok(Regime::OutOfRange);
    }
    if 4 * d128 <= m128 {
        return Ok(Regime::Case1);
    }
    if d128 * d128 <= m128 * m128 * m128 {
        return Ok(Regime::Case2);
    }
    let nm = nm as f64;
    if d as f64 <= nm.powf(0.5 - eps) {
        return Ok(Regime::Case3a);
    }
    if d as f64 >= nm.powf(0.5 + eps) {
        return Ok(Regime::Case3b);
    }
    Ok(Regime::Gap)
}

struct Value {
    log2: f64,
    exact: Option<BigUint>,
    notes: Vec<String>,
}

fn exact_value(x: BigUint, note: String) -> Value {
    Value {
        log2: round6(log2_big(&x)),
        exact: Some(x),
        notes: vec![note],
    }
}

fn regime_value(regime: Regime, n: u64, m: u32, d: u64, eps: f64) -> Result<Value> {
    Ok(match regime {
        Regime::Case1 => {
            let c = case1_count_lower_bound(m, d)?;
            exact_value(
                c.exact,
                format!(
                    "exact count of {d}-element certificate families over dims {:?}",
                    c.admissible
                ),
            )
        }
        Regime::Case2 => {
            let d1 = u64::from(m / 4);
            if d1 == 0 {
                exact_value(
                    BigUint::one(),
                    "floor(log2 n / 4) = 0; only the trivial bound 1 is certified".into(),
                )
            } else {
                let c = case1_count_lower_bound(m, d1)?;
                exact_value(
                    c.exact,
                    format!("monotone reuse of the certificate count at d' = {d1}"),
                )
            }
        }
        Regime::Case3a => {
            let mut notes = vec![
                "log2 of n^(eps·d²/(2 log2 n)) = eps·d²/2; sampling with D = 1, c = d²/(4 log2 n)"
                    .to_string(),
            ];
            let c = (u128::from(d) * u128::from(d)) / (4 * u128::from(m));
            notes.push(format!("integer hypercube parameters: c = {}, D = 1", c.max(1)));
            Value {
                log2: eps * (d as f64) * (d as f64) / 2.0,
                exact: None,
                notes,
            }
        }
        Regime::Case3b => {
            let dd = (d as f64).powf(2.0 * eps) / 4.0;
            let mut notes = vec![format!(
                "log2 of (d^(2 eps)/4)^n = n·log2(d^(2 eps)/4); sampling with c = n, D = d^(2 eps)/4 ≈ {dd:.6}"
            )];
            if dd < 1.0 {
                notes.push("d^(2 eps)/4 < 1, so the bound is vacuous".into());
            }
            Value {
                log2: n as f64 * (2.0 * eps * (d as f64).log2() - 2.0),
                exact: None,
                notes,
            }
        }
        Regime::Gap | Regime::OutOfRange => unreachable!("handled by caller"),
    })
}

/// Regime and certified lower bound for |d·Had ∩ ℤⁿ|.
pub fn theorem1_bound(n: u64, d: u64, eps: f64) -> Result<BoundReport> {
    let m = log_dim(n)?;
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::Domain(format!("epsilon = {eps} outside (0, 1/2)")));
    }
    if d == 0 {
        return Err(Error::Domain("d must be at least 1".into()));
    }
    let regime = classify(n, d, eps)?;
    let value = match regime {
        Regime::OutOfRange => {
            return Err(Error::OutOfRange(format!(
                "d = {d} ≥ n·log2 n = {}",
                u128::from(n) * u128::from(m)
            )))
        }
        Regime::Gap => {
            let nm = (u128::from(n) * u128::from(m)) as f64;
            let mut covered = case2_max(m).max(nm.powf(0.5 - eps).floor() as u64);
            while covered > 1 && classify(n, covered, eps)? == Regime::Gap {
                covered -= 1;
            }
            let inner = classify(n, covered, eps)?;
            let mut v = regime_value(inner, n, m, covered, eps)?;
            v.notes.insert(
                0,
                format!(
                    "d lies between (n log2 n)^(1/2 - eps) and (n log2 n)^(1/2 + eps); \
                     monotone fallback to {inner} at d' = {covered}"
                ),
            );
            v
        }
        r => regime_value(r, n, m, d, eps)?,
    };
    Ok(BoundReport {
        n,
        d,
        epsilon: eps,
        regime,
        bound_log2: value.log2,
        exact_bound: value.exact.map(|x| x.to_string()),
        notes: value.notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_classifications() {
        let n = 1 << 10;
        assert_eq!(classify(n, 2, 0.1).unwrap(), Regime::Case1);
        assert_eq!(classify(n, 40, 0.1).unwrap(), Regime::Case3a);
        assert_eq!(classify(n, 10_000, 0.1).unwrap(), Regime::Case3b);
        assert_eq!(classify(n, 10_240, 0.1).unwrap(), Regime::OutOfRange);
    }

    #[test]
    fn case3a_value() {
        let r = theorem1_bound(1 << 10, 40, 0.1).unwrap();
        assert_eq!(r.regime, Regime::Case3a);
        assert!((r.bound_log2 - 80.0).abs() < 1e-9);
        assert!(r.exact_bound.is_none());
    }

    #[test]
    fn boundaries_pick_lower_case() {
        // m = 16: m/4 = 4 and m^1.5 = 64 are both integers
        let n = 1 << 16;
        assert_eq!(classify(n, 4, 0.1).unwrap(), Regime::Case1);
        assert_eq!(classify(n, 5, 0.1).unwrap(), Regime::Case2);
        assert_eq!(classify(n, 64, 0.1).unwrap(), Regime::Case2);
        assert_eq!(classify(n, 65, 0.1).unwrap(), Regime::Case3a);
    }

    #[test]
    fn gap_falls_back() {
        let n = 1 << 10;
        // (10240)^0.4 ≈ 40.2, (10240)^0.6 ≈ 254.9
        let r = theorem1_bound(n, 100, 0.1).unwrap();
        assert_eq!(r.regime, Regime::Gap);
        let at40 = theorem1_bound(n, 40, 0.1).unwrap();
        assert_eq!(r.bound_log2, at40.bound_log2);
    }

    #[test]
    fn argument_errors() {
        assert!(theorem1_bound(1000, 2, 0.1).is_err());
        assert!(theorem1_bound(1024, 2, 0.5).is_err());
        assert!(theorem1_bound(1024, 0, 0.1).is_err());
        assert!(matches!(
            theorem1_bound(1024, 10_240, 0.1),
            Err(Error::OutOfRange(_))
        ));
    }
}
