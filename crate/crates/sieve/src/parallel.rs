//! Worker pool shared by the sweeps.

use rayon::prelude::*;

use crate::Error;

pub const THREADS_VAR: &str = "RIGIDITY_SIEVE_THREADS";

/// Worker count requested through `RIGIDITY_SIEVE_THREADS`, if any.
pub fn requested_threads() -> Result<Option<usize>, Error> {
    match std::env::var(THREADS_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(raw)) => {
            Err(Error::ThreadCount(raw.to_string_lossy().into_owned()))
        }
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::ThreadCount(raw)),
        },
    }
}

/// Run `f` inside a pool sized by the environment, or the global pool.
pub fn install<R: Send>(f: impl FnOnce() -> R + Send) -> Result<R, Error> {
    match requested_threads()? {
        None => Ok(f()),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
    }
}

/// Evaluate `f` on every item in parallel and concatenate the results in
/// input order, whatever order the workers finish in.
pub fn ordered_flat_map<I, T, F>(items: Vec<I>, f: F) -> Result<Vec<T>, rigidity_core::Error>
where
    I: Send + Sync,
    T: Send,
    F: Fn(&I) -> Result<Vec<T>, rigidity_core::Error> + Sync + Send,
{
    let chunks: Vec<Vec<T>> = items.par_iter().map(&f).collect::<Result<_, _>>()?;
    Ok(chunks.into_iter().flatten().collect())
}
