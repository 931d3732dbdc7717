//! Closed-form bounds, evaluated exactly at integer parameters.

use serde::{Deserialize, Serialize};

use crate::binomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    pub n: Option<u64>,
    pub r: Option<u64>,
    pub s: Option<u64>,
    pub t: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundInfo {
    pub name: &'static str,
    pub formula: &'static str,
    pub hypotheses: &'static str,
    /// Lower or upper bound on the counted quantity, or an exact value.
    pub kind: &'static str,
}

pub const BOUNDS: &[BoundInfo] = &[
    BoundInfo { name: "ehm", formula: "(s-2)(n-s+2) + C(s-2,2)", hypotheses: "s >= 3, n >= s", kind: "exact edges" },
    BoundInfo { name: "prop1-count", formula: "C(s-2,r) + (n-s+2) C(s-2,r-1)", hypotheses: "s > r >= 2, n >= s", kind: "exact" },
    BoundInfo { name: "dh-2", formula: "2n - 5", hypotheses: "n >= 5", kind: "exact edges" },
    BoundInfo { name: "dh-3", formula: "3n - 15", hypotheses: "n >= 10", kind: "exact edges" },
    BoundInfo { name: "eq2", formula: "n - 2", hypotheses: "n >= 4", kind: "exact" },
    BoundInfo { name: "thm1", formula: "2n - 4", hypotheses: "n >= 14", kind: "lower" },
    BoundInfo { name: "thm2", formula: "2n + 2t - 12", hypotheses: "t >= 4, n >= 2t", kind: "upper" },
    BoundInfo { name: "thm3-slope", formula: "C(s-2,r-1) 2^(r-1)", hypotheses: "s > r >= 3, t >= 2(s-2)+1", kind: "slope" },
    BoundInfo { name: "thm4-slope", formula: "9", hypotheses: "t >= 8", kind: "slope" },
    BoundInfo { name: "prop4", formula: "C(s-2,2)(n-2)", hypotheses: "s > 3, t >= 6 C(s-2,2), n >= 2s-2", kind: "lower" },
    BoundInfo { name: "prop2-w", formula: "2n - 7", hypotheses: "n >= 5", kind: "lower" },
    BoundInfo { name: "lemma3.3", formula: "2n - 4", hypotheses: "n >= 14", kind: "lower" },
    BoundInfo { name: "lemma3.4", formula: "3n - 18", hypotheses: "n >= 12", kind: "lower" },
    BoundInfo { name: "lemma3.5", formula: "2n - 3", hypotheses: "n >= 15", kind: "lower" },
];

pub fn bound_info(name: &str) -> Result<&'static BoundInfo> {
    BOUNDS
        .iter()
        .find(|b| b.name == name)
        .ok_or_else(|| Error::UnknownBound(name.to_string()))
}

pub fn evaluate_bound(name: &str, p: &BoundParams) -> Result<i64> {
    let info = bound_info(name)?;
    let fail = |reason: String| Error::BoundHypothesis {
        name: info.name.to_string(),
        reason,
    };
    let need = |v: Option<u64>, key: &str| v.ok_or_else(|| fail(format!("missing parameter {key}")));
    let check = |ok: bool| if ok { Ok(()) } else { Err(fail(info.hypotheses.to_string())) };
    let linear = |a: i64, c: i64, min_n: u64| -> Result<i64> {
        let n = need(p.n, "n")?;
        check(n >= min_n)?;
        Ok(a * n as i64 + c)
    };
    let b = |n: u64, k: u64| binomial(n, k) as i64;
    match info.name {
        "ehm" => {
            let (n, s) = (need(p.n, "n")?, need(p.s, "s")?);
            check(s >= 3 && n >= s)?;
            Ok((s as i64 - 2) * (n - s + 2) as i64 + b(s - 2, 2))
        }
        "prop1-count" => {
            let (n, r, s) = (need(p.n, "n")?, need(p.r, "r")?, need(p.s, "s")?);
            check(s > r && r >= 2 && n >= s)?;
            Ok(b(s - 2, r) + (n - s + 2) as i64 * b(s - 2, r - 1))
        }
        "dh-2" => linear(2, -5, 5),
        "dh-3" => linear(3, -15, 10),
        "eq2" => linear(1, -2, 4),
        "thm1" | "lemma3.3" => linear(2, -4, 14),
        "lemma3.4" => linear(3, -18, 12),
        "lemma3.5" => linear(2, -3, 15),
        "prop2-w" => linear(2, -7, 5),
        "thm2" => {
            let (n, t) = (need(p.n, "n")?, need(p.t, "t")?);
            check(t >= 4 && n >= 2 * t)?;
            Ok(2 * n as i64 + 2 * t as i64 - 12)
        }
        "thm3-slope" => {
            let (r, s, t) = (need(p.r, "r")?, need(p.s, "s")?, need(p.t, "t")?);
            check(s > r && r >= 3 && t > 2 * (s - 2))?;
            Ok(b(s - 2, r - 1) << (r - 1))
        }
        "thm4-slope" => {
            check(need(p.t, "t")? >= 8)?;
            Ok(9)
        }
        "prop4" => {
            let (n, s, t) = (need(p.n, "n")?, need(p.s, "s")?, need(p.t, "t")?);
            check(s > 3)?;
            let c = b(s - 2, 2);
            check(t as i64 >= 6 * c && n >= 2 * s - 2)?;
            Ok(c * (n as i64 - 2))
        }
        _ => unreachable!("every registered bound is handled"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: Option<u64>, r: Option<u64>, s: Option<u64>, t: Option<u64>) -> BoundParams {
        BoundParams { n, r, s, t }
    }

    #[test]
    fn examples() {
        assert_eq!(evaluate_bound("thm2", &p(Some(14), None, None, Some(4))).unwrap(), 24);
        assert_eq!(evaluate_bound("prop1-count", &p(Some(9), Some(3), Some(5), None)).unwrap(), 19);
        assert_eq!(evaluate_bound("prop1-count", &p(Some(10), Some(3), Some(5), None)).unwrap(), 22);
        assert_eq!(evaluate_bound("lemma3.4", &p(Some(12), None, None, None)).unwrap(), 18);
        assert_eq!(evaluate_bound("ehm", &p(Some(6), None, Some(3), None)).unwrap(), 5);
        assert_eq!(evaluate_bound("thm3-slope", &p(None, Some(3), Some(5), Some(7))).unwrap(), 12);
        assert_eq!(evaluate_bound("thm3-slope", &p(None, Some(4), Some(5), Some(7))).unwrap(), 8);
        assert_eq!(evaluate_bound("prop4", &p(Some(50), None, Some(5), Some(18))).unwrap(), 144);
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(matches!(
            evaluate_bound("thm1", &p(Some(13), None, None, None)),
            Err(Error::BoundHypothesis { .. })
        ));
        assert!(matches!(
            evaluate_bound("thm2", &p(Some(14), None, None, None)),
            Err(Error::BoundHypothesis { .. })
        ));
        assert!(matches!(evaluate_bound("nope", &BoundParams::default()), Err(Error::UnknownBound(_))));
        for info in BOUNDS {
            assert!(bound_info(info.name).is_ok());
        }
    }
}
