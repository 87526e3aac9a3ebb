use super::MoveError;
use crate::diagram::{PlanarDiagram, RawDiagram};

/// The alternating twist knot with a two-crossing clasp on top of a column
/// of `2n - 1` twist crossings; every crossing is positive.
///
/// Crossings 0 and 1 are the clasp, crossing 0 is the top one. Changing it
/// undoes the clasp and leaves an unknot.
pub fn family_k2n1(n: usize) -> Result<PlanarDiagram, MoveError> {
    if n == 0 {
        return Err(MoveError::InvalidParameter("family index n must be at least 1".into()));
    }
    let m = 2 * n - 1;
    let mut raw = RawDiagram::new();
    // cap over the column: tl (left leg), bm (between clasp crossings), tr (right leg);
    // outer arc: el (from the column's bottom-left), am (dip through the cap), er
    let [tl, bm, tr, el, am, er] = std::array::from_fn(|_| raw.fresh());
    let left: Vec<u32> = (0..m - 1).map(|_| raw.fresh()).collect();
    let right: Vec<u32> = (0..m - 1).map(|_| raw.fresh()).collect();

    raw.push([tl, am, bm, el]);
    raw.push([er, bm, am, tr]);
    for j in 0..m {
        let (nw, ne) = if j == 0 { (tl, tr) } else { (left[j - 1], right[j - 1]) };
        let (sw, se) = if j == m - 1 { (el, er) } else { (left[j], right[j]) };
        raw.push([ne, nw, sw, se]);
    }
    let (d, _) = raw.into_knot()?;
    Ok(d.with_name(format!("K{}", 2 * n + 1)))
}
