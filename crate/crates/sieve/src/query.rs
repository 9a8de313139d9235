//! Everything known about a single `(d, g, r)`.

use rigidity_core::bounds::{brill_noether, embed_dim_cap, euler_normal, max_genus_pi};
use rigidity_core::sieve::{
    in_hypothesis_range, r3_classify, r3_sieve, scan, R3Outcome, R3Witness, ScopeReason,
};
use rigidity_core::{Castelnuovo, CurveClass, GenusBounds, SieveWitness, Verdict};
use serde::{Deserialize, Serialize};

use crate::{Error, SCHEMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryInput {
    pub d: i64,
    pub g: i64,
    pub r: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub rho: i128,
    pub lambda: i128,
    /// Castelnuovo's bound in `P^r`; absent when `d < r`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<i128>,
    /// The finer bounds at `alpha = r`; absent when `d < r + 2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi1: Option<i128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi2: Option<i128>,
    pub embed_cap: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "sieve", rename_all = "snake_case")]
pub enum QueryVerdict {
    General { verdict: Verdict<SieveWitness> },
    /// The space-curve sieve only covers `g >= 5`, `d <= g`; elsewhere the
    /// classification alone speaks.
    SpaceCurves {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        verdict: Option<Verdict<R3Witness>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryReport {
    pub schema: String,
    pub input: QueryInput,
    pub invariants: Invariants,
    pub verdict: QueryVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range_thm41: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r3_outcome: Option<R3Outcome>,
}

pub fn query(d: i64, g: i64, r: i64) -> Result<QueryReport, Error> {
    let class = CurveClass::new(d, g, r)?;
    let profile = Castelnuovo.profile(d, r).ok();
    let invariants = Invariants {
        rho: brill_noether(class),
        lambda: euler_normal(class),
        pi: max_genus_pi(d, r).ok(),
        pi1: profile.map(|p| p.pi1),
        pi2: profile.map(|p| p.pi2),
        embed_cap: embed_dim_cap(d, g),
    };
    let (verdict, range_thm41, r3_outcome) = if r == 3 {
        let verdict = if g == 0 {
            Some(Verdict::OutOfScope { reason: ScopeReason::GenusZero })
        } else if g >= 5 && d <= g {
            Some(r3_sieve(d, g)?)
        } else {
            None
        };
        (QueryVerdict::SpaceCurves { verdict }, None, Some(r3_classify(d, g)))
    } else {
        let verdict = scan(d, g, r)?;
        // the range is only defined for g >= 1
        let range = if g >= 1 { Some(in_hypothesis_range(d, g, r)?) } else { None };
        (QueryVerdict::General { verdict }, range, None)
    };
    Ok(QueryReport {
        schema: SCHEMA.to_string(),
        input: QueryInput { d, g, r },
        invariants,
        verdict,
        range_thm41,
        r3_outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exception_point() {
        let q = query(30, 34, 9).unwrap();
        let QueryVerdict::General { verdict } = &q.verdict else { panic!("{q:?}") };
        assert_eq!(verdict.witnesses().len(), 1);
        assert_eq!(q.range_thm41, Some(false));
        assert_eq!(q.invariants.pi2, Some(34));
    }

    #[test]
    fn space_curves() {
        assert_eq!(query(7, 6, 3).unwrap().r3_outcome, Some(R3Outcome::ExactImage(13)));
        assert_eq!(query(9, 11, 3).unwrap().r3_outcome, Some(R3Outcome::Empty));
        let q = query(7, 6, 3).unwrap();
        assert_eq!(q.verdict, QueryVerdict::SpaceCurves { verdict: None });
    }

    #[test]
    fn invalid_class() {
        assert!(query(0, 3, 4).is_err());
        assert!(query(5, -1, 4).is_err());
    }

    #[test]
    fn genus_zero_is_out_of_scope() {
        let q = query(6, 0, 4).unwrap();
        assert_eq!(q.range_thm41, None);
        let QueryVerdict::General { verdict } = &q.verdict else { panic!("{q:?}") };
        assert_eq!(verdict.label(), "out-of-scope");
    }
}
