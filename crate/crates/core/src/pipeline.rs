//! End-to-end computations combining invariants, constructions and bounds.

use serde::Serialize;

use crate::bounds::{combine, ln_bounds, slicing_bounds, slicing_stats, SlicingData, SlicingStats, TnuInterval};
use crate::bracket::BracketOptions;
use crate::checkerboard::{checkerboard, invariant_report, tb_wx, InvariantError, InvariantReport};
use crate::diagram::PlanarDiagram;
use crate::error::Error;
use crate::moves::family_k2n1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub tb: i64,
    pub tb_mirror: i64,
    pub ln: TnuInterval,
    pub slicing: Option<TnuInterval>,
    pub stats: Option<SlicingStats>,
    pub combined: TnuInterval,
}

/// Bounds from the Thurston-Bennequin numbers of a reduced alternating
/// diagram, intersected with slicing data when given.
pub fn bounds_report(
    d: &PlanarDiagram,
    slicing: Option<&SlicingData>,
    opts: &BracketOptions,
) -> Result<BoundsReport, Error> {
    let report = invariant_report(d, opts)?;
    let (tb, tb_mirror) = match (report.tb, report.tb_mirror) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            let reason = if d.is_alternating() {
                InvariantError::NotReduced
            } else {
                InvariantError::NotAlternating
            };
            return Err(reason.into());
        }
    };
    let ln = ln_bounds(tb, tb_mirror)?;
    let (sl, stats) = match slicing {
        Some(data) => (Some(slicing_bounds(data)?), Some(slicing_stats(data)?)),
        None => (None, None),
    };
    let mut parts = vec![ln.clone()];
    parts.extend(sl.clone());
    let combined = combine(&parts)?;
    Ok(BoundsReport {
        tb,
        tb_mirror,
        ln,
        slicing: sl,
        stats,
        combined,
    })
}

/// One row of the twist-knot family table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub n: usize,
    pub crossings: usize,
    pub w: i64,
    #[serde(rename = "X")]
    pub x: usize,
    #[serde(rename = "Y")]
    pub y: usize,
    pub tb: i64,
    pub neg_tb_mirror: i64,
    pub tnu_lower: i64,
    pub tnu_upper: i64,
    /// `-TB(-K)` minus the best upper bound on `t_nu`.
    pub gap: i64,
}

pub const FAMILY_CSV_HEADER: &str = "n,crossings,w,X,Y,tb,neg_tb_mirror,tnu_lower,tnu_upper,gap";

impl FamilyRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.crossings,
            self.w,
            self.x,
            self.y,
            self.tb,
            self.neg_tb_mirror,
            self.tnu_lower,
            self.tnu_upper,
            self.gap
        )
    }
}

/// Row for the member with `2n + 1` crossings. Changing its top clasp
/// crossing gives an unknot, so the slicing recipe `(1, 0)` applies.
pub fn family_row(n: usize, opts: &BracketOptions) -> Result<FamilyRow, Error> {
    let d = family_k2n1(n)?;
    let c = checkerboard(&d)?;
    let report: InvariantReport = invariant_report(&d, opts)?;
    let tb = report.tb.ok_or(InvariantError::NotAlternating)?;
    let tb_mirror = tb_wx(&d.mirror())?;
    let b = bounds_report(&d, Some(&SlicingData::new(vec![(1, 0)])), opts)?;
    Ok(FamilyRow {
        n,
        crossings: d.crossing_count(),
        w: d.writhe(),
        x: c.x,
        y: c.y,
        tb,
        neg_tb_mirror: -tb_mirror,
        tnu_lower: b.combined.lower,
        tnu_upper: b.combined.upper,
        gap: -tb_mirror - b.combined.upper,
    })
}
