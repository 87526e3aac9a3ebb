use std::str::FromStr;

use serde::Serialize;

use super::{full_twist_word, push_braid, MoveError};
use crate::diagram::{DiagramError, PlanarDiagram, Sign};

/// Arc labels met in order by a fiducial arc, and the twist sign.
///
/// The arc starts in a face next to the first label and must pass from face
/// to face across each listed label in turn.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlowupSite {
    pub strands: Vec<u32>,
    pub sign: Sign,
}

impl BlowupSite {
    pub fn new(strands: Vec<u32>, sign: Sign) -> Self {
        BlowupSite { strands, sign }
    }
}

impl FromStr for BlowupSite {
    type Err = MoveError;
    /// Parses a comma-separated label list; the sign defaults to `+1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let strands = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| MoveError::InvalidSite(format!("`{s}` is not a comma-separated list of arc labels")))?;
        Ok(BlowupSite {
            strands,
            sign: Sign::Positive,
        })
    }
}

/// The arc's route: for each strand, whether its head lies on the left of the
/// fiducial arc.
fn route(d: &PlanarDiagram, site: &BlowupSite) -> Result<Vec<bool>, MoveError> {
    let m = d.arc_count() as u32;
    if site.strands.is_empty() {
        return Err(MoveError::InvalidSite("no strands listed".into()));
    }
    let mut seen = std::collections::HashSet::new();
    for &e in &site.strands {
        if e == 0 || e > m {
            return Err(MoveError::InvalidSite(format!("arc {e} does not exist")));
        }
        if !seen.insert(e) {
            return Err(MoveError::InvalidSite(format!("arc {e} listed twice")));
        }
    }
    let fs = d.face_set();
    let ends = d.arc_ends();
    let sides: Vec<(usize, usize)> = site
        .strands
        .iter()
        .map(|&e| d.arc_sides(&fs, ends[e as usize - 1]))
        .collect();
    let walk = |start: usize| -> Option<Vec<bool>> {
        let mut face = start;
        let mut up = Vec::with_capacity(sides.len());
        for &(left, right) in &sides {
            if left == right {
                return None;
            }
            if face == left {
                up.push(true);
                face = right;
            } else if face == right {
                up.push(false);
                face = left;
            } else {
                return None;
            }
        }
        Some(up)
    };
    walk(sides[0].0)
        .or_else(|| walk(sides[0].1))
        .ok_or_else(|| MoveError::InvalidSite("consecutive strands do not share a face".into()))
}

/// Signed count of strands crossing the arc, +1 for those whose head is on
/// its left.
pub fn linking_number(d: &PlanarDiagram, site: &BlowupSite) -> Result<i64, MoveError> {
    Ok(route(d, site)?.iter().map(|&up| if up { 1 } else { -1 }).sum())
}

/// Inserts a full twist `(s_1 ... s_{m-1})^m` of the given sign on the listed
/// strands; a single strand gets one curl of that sign instead.
pub fn blowup(d: &PlanarDiagram, site: &BlowupSite) -> Result<PlanarDiagram, MoveError> {
    let up = route(d, site)?;
    if d.crossing_count() == 0 {
        return Err(MoveError::InvalidSite(
            "the crossingless unknot has no arcs to cut".into(),
        ));
    }
    let ends = d.arc_ends();
    let mut raw = d.to_raw();
    // the box's south side keeps the original labels; the north ends are reattached
    let north_slots: Vec<_> = site
        .strands
        .iter()
        .zip(&up)
        .map(|(&e, &up)| {
            let ends = ends[e as usize - 1];
            if up {
                ends.head
            } else {
                ends.tail
            }
        })
        .collect();
    let top = if site.strands.len() == 1 {
        let (q, p, l) = (site.strands[0], raw.fresh(), raw.fresh());
        raw.push(match site.sign {
            Sign::Positive => [l, l, p, q],
            Sign::Negative => [q, l, l, p],
        });
        vec![p]
    } else {
        push_braid(&mut raw, &site.strands, &full_twist_word(site.strands.len(), site.sign))
    };
    for (slot, id) in north_slots.into_iter().zip(top) {
        raw.set(slot, id);
    }
    let (out, _) = raw.into_knot().map_err(|e| match e {
        DiagramError::NonplanarCode { .. } => MoveError::InvalidSite("insertion is not planar".into()),
        other => MoveError::Diagram(other),
    })?;
    Ok(out)
}
