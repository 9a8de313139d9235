//! Corrupted bound providers.
//!
//! A verification harness that cannot tell these apart from
//! [`Castelnuovo`](crate::Castelnuovo)
//! is not checking anything. Each mutant changes exactly one formula.

use crate::bounds::{castelnuovo_profile, CastelnuovoProfile, GenusBounds};
use crate::Error;

/// `pi1` one larger than it should be.
#[derive(Debug, Clone, Copy, Default)]
pub struct OffByOnePi1;

impl GenusBounds for OffByOnePi1 {
    fn profile(&self, d: i64, alpha: i64) -> Result<CastelnuovoProfile, Error> {
        let mut p = castelnuovo_profile(d, alpha)?;
        p.pi1 += 1;
        Ok(p)
    }
}

/// The `eps2 = alpha` branch of `mu2` forgotten, so it falls through to 1.
#[derive(Debug, Clone, Copy, Default)]
pub struct DroppedMu2;

impl GenusBounds for DroppedMu2 {
    fn profile(&self, d: i64, alpha: i64) -> Result<CastelnuovoProfile, Error> {
        let mut p = castelnuovo_profile(d, alpha)?;
        if p.mu2 == 2 {
            p.mu2 = 1;
            p.pi2 -= 1;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Castelnuovo;

    #[test]
    fn mutants_differ_where_expected() {
        let real = Castelnuovo.profile(30, 9).unwrap();
        assert_eq!(OffByOnePi1.profile(30, 9).unwrap().pi1, real.pi1 + 1);
        // 29 = 2 * 10 + 9, so eps2 = alpha and mu2 = 2
        assert_eq!(real.mu2, 2);
        let dropped = DroppedMu2.profile(30, 9).unwrap();
        assert_eq!((dropped.mu2, dropped.pi2), (1, real.pi2 - 1));
        assert_eq!(DroppedMu2.profile(31, 9).unwrap(), Castelnuovo.profile(31, 9).unwrap());
    }
}
