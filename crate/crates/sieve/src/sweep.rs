//! Tabulate the sieve over every genus up to Castelnuovo's bound.

use std::io::Write;

use rigidity_core::bounds::max_genus_pi;
use rigidity_core::sieve::{in_hypothesis_range, r3_sieve, scan};
use serde::{Deserialize, Serialize};

use crate::parallel::{install, ordered_flat_map};
use crate::{Error, SCHEMA};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOptions {
    pub r: i64,
    pub d_max: i64,
    /// Stop each column at this genus even if Castelnuovo's bound is higher.
    pub g_max: Option<i64>,
    /// Keep only pairs inside the hypothesis range (needs `r >= 4`).
    pub in_range_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RangeFlag {
    #[serde(rename = "in-range")]
    InRange,
    #[serde(rename = "out-of-range")]
    OutOfRange,
    /// No hypothesis range is defined for space curves.
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl RangeFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            RangeFlag::InRange => "in-range",
            RangeFlag::OutOfRange => "out-of-range",
            RangeFlag::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: i64,
    pub g: i64,
    pub r: i64,
    pub verdict: String,
    pub witnesses: usize,
    /// Distinct `alpha` values among the witnesses, increasing.
    pub alpha_list: Vec<i64>,
    pub range_thm41: RangeFlag,
}

/// The JSON form of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub schema: String,
    pub r: i64,
    pub d_max: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_max: Option<i64>,
    pub in_range_only: bool,
    pub rows: Vec<SweepRow>,
}

fn alphas(list: impl Iterator<Item = i64>) -> Vec<i64> {
    let mut out: Vec<i64> = list.collect();
    out.dedup();
    out
}

fn column(opts: &SweepOptions, d: i64) -> Result<Vec<SweepRow>, rigidity_core::Error> {
    let r = opts.r;
    if d < r {
        return Ok(vec![]);
    }
    let mut top = max_genus_pi(d, r)?;
    if let Some(g_max) = opts.g_max {
        top = top.min(g_max as i128);
    }
    let top = top as i64;
    let mut rows = Vec::new();
    if r == 3 {
        for g in d.max(5)..=top {
            let v = r3_sieve(d, g)?;
            rows.push(SweepRow {
                d,
                g,
                r,
                verdict: v.label().to_string(),
                witnesses: v.witnesses().len(),
                alpha_list: alphas(v.witnesses().iter().map(|w| w.alpha)),
                range_thm41: RangeFlag::NotApplicable,
            });
        }
        return Ok(rows);
    }
    for g in 1..=top {
        let in_range = in_hypothesis_range(d, g, r)?;
        if opts.in_range_only && !in_range {
            continue;
        }
        let v = scan(d, g, r)?;
        rows.push(SweepRow {
            d,
            g,
            r,
            verdict: v.label().to_string(),
            witnesses: v.witnesses().len(),
            alpha_list: alphas(v.witnesses().iter().map(|w| w.alpha)),
            range_thm41: if in_range { RangeFlag::InRange } else { RangeFlag::OutOfRange },
        });
    }
    Ok(rows)
}

/// One row per `(d, g)` with `d <= d_max`, sorted by `(d, g)`.
///
/// For `r >= 4` the genus runs over `[1, pi(d,r)]`; for `r = 3` over the
/// domain of the space-curve sieve, `[max(d,5), pi(d,3)]`.
pub fn sweep(opts: &SweepOptions) -> Result<Vec<SweepRow>, Error> {
    if opts.r < 3 {
        return Err(Error::Usage(format!("sweep needs r >= 3, got {}", opts.r)));
    }
    if opts.r == 3 && opts.in_range_only {
        return Err(Error::Usage("--in-range-only needs r >= 4".into()));
    }
    let degrees: Vec<i64> = (1..=opts.d_max).collect();
    Ok(install(|| ordered_flat_map(degrees, |&d| column(opts, d)))??)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["d", "g", "r", "verdict", "witnesses", "alpha_list", "range_thm41"])?;
    for row in rows {
        let alpha_list: Vec<String> = row.alpha_list.iter().map(i64::to_string).collect();
        w.write_record([
            row.d.to_string(),
            row.g.to_string(),
            row.r.to_string(),
            row.verdict.clone(),
            row.witnesses.to_string(),
            alpha_list.join(" "),
            row.range_thm41.as_str().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn document(opts: &SweepOptions, rows: Vec<SweepRow>) -> SweepDocument {
    SweepDocument {
        schema: SCHEMA.to_string(),
        r: opts.r,
        d_max: opts.d_max,
        g_max: opts.g_max,
        in_range_only: opts.in_range_only,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(r: i64, d_max: i64) -> SweepOptions {
        SweepOptions { r, d_max, g_max: None, in_range_only: false }
    }

    #[test]
    fn rows_are_sorted_and_cover_the_genus_range() {
        let rows = sweep(&opts(5, 30)).unwrap();
        let keys: Vec<(i64, i64)> = rows.iter().map(|r| (r.d, r.g)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let expected: i128 = (5..=30).map(|d| max_genus_pi(d, 5).unwrap()).sum();
        assert_eq!(rows.len() as i128, expected);
    }

    #[test]
    fn space_curve_rows() {
        let rows = sweep(&opts(3, 9)).unwrap();
        let survivors: Vec<(i64, i64)> =
            rows.iter().filter(|r| r.verdict == "survivor").map(|r| (r.d, r.g)).collect();
        assert_eq!(survivors, [(8, 8), (8, 9), (9, 9), (9, 10), (9, 11), (9, 12)]);
        assert!(rows.iter().all(|r| r.range_thm41 == RangeFlag::NotApplicable));
    }

    #[test]
    fn in_range_only_is_rejected_for_space_curves() {
        let mut o = opts(3, 9);
        o.in_range_only = true;
        assert!(matches!(sweep(&o), Err(Error::Usage(_))));
    }

    #[test]
    fn csv_header_and_exception_row() {
        let rows = sweep(&opts(9, 40)).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("d,g,r,verdict,witnesses,alpha_list,range_thm41\n"));
        assert!(text.contains("\n30,34,9,survivor,1,9,out-of-range\n"));
    }
}
