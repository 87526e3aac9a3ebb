//! Diagram constructions: twisted Whitehead doubles, the twist-knot family,
//! crossing changes and full-twist insertions along a fiducial arc.

mod blowup;
mod double;
mod family;
mod lemma;

use serde::Serialize;
use thiserror::Error;

use crate::bracket::BracketError;
use crate::diagram::{DiagramError, PlanarDiagram, RawDiagram, Sign};

pub use blowup::{blowup, linking_number, BlowupSite};
pub use double::{whitehead_double, whitehead_double_with_layout, CrossingGroup, DoubleLayout, DoubleSpec};
pub use family::family_k2n1;
pub use lemma::{verify_lemma31, verify_lemma31_with, LemmaReport, PolyPair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("crossing {index} is not a positive crossing")]
    NotAPositiveCrossing { index: usize },
    #[error("crossing {index} does not exist (diagram has {count})")]
    CrossingOutOfRange { index: usize, count: usize },
    #[error("invalid blow-up site: {0}")]
    InvalidSite(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{which}: {lhs} != {rhs}")]
    LemmaCheckFailed { which: String, lhs: String, rhs: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

/// Selects a crossing that must currently be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingSelector {
    pub index: usize,
}

impl CrossingSelector {
    pub fn new(index: usize) -> Self {
        CrossingSelector { index }
    }

    pub fn check(&self, d: &PlanarDiagram) -> Result<(), MoveError> {
        let count = d.crossing_count();
        let x = d.crossings().get(self.index).ok_or(MoveError::CrossingOutOfRange {
            index: self.index,
            count,
        })?;
        if x.sign() != Sign::Positive {
            return Err(MoveError::NotAPositiveCrossing { index: self.index });
        }
        Ok(())
    }
}

/// Flips the selected positive crossing to negative.
pub fn change_crossing(d: &PlanarDiagram, sel: CrossingSelector) -> Result<PlanarDiagram, MoveError> {
    sel.check(d)?;
    Ok(d.with_crossing_flipped(sel.index))
}

/// Appends a braid on strands entering at `bottom` and returns the ids at the top.
///
/// Frame: strands run south to north, positions are numbered west to east.
/// Generator `(i, sign)` crosses positions `i` and `i + 1`; a positive
/// generator has the strand from the south-west passing over, so it is a
/// positive crossing when both strands point north.
pub(crate) fn push_braid(raw: &mut RawDiagram, bottom: &[u32], word: &[(usize, Sign)]) -> Vec<u32> {
    let mut pos = bottom.to_vec();
    for &(i, sign) in word {
        let (sw, se) = (pos[i], pos[i + 1]);
        let (nw, ne) = (raw.fresh(), raw.fresh());
        raw.push(match sign {
            Sign::Positive => [se, ne, nw, sw],
            Sign::Negative => [sw, se, ne, nw],
        });
        pos[i] = nw;
        pos[i + 1] = ne;
    }
    pos
}

/// Closure of a braid on `strands` strands. Word entries are `+i` or `-i`
/// for the generator crossing positions `i` and `i + 1` (1-based) with that sign.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<PlanarDiagram, MoveError> {
    if strands == 0 {
        return Err(MoveError::InvalidParameter("a braid needs at least one strand".into()));
    }
    let mut gens = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(MoveError::InvalidParameter(format!(
                "generator {g} on {strands} strands"
            )));
        }
        gens.push((i - 1, if g > 0 { Sign::Positive } else { Sign::Negative }));
    }
    if strands == 1 {
        return Ok(PlanarDiagram::unknot());
    }
    let mut raw = RawDiagram::new();
    let bottom: Vec<u32> = (0..strands).map(|_| raw.fresh()).collect();
    let top = push_braid(&mut raw, &bottom, &gens);
    for (&t, &b) in top.iter().zip(&bottom) {
        if t == b || !raw.replace_id(t, b) {
            return Err(DiagramError::SplitOrLinkInput.into());
        }
    }
    Ok(raw.into_knot()?.0)
}

/// Torus knot `T(p, q)` as the closure of `(s_1 ... s_{p-1})^q`; negative `q` gives the mirror.
pub fn torus_knot(p: usize, q: i32) -> Result<PlanarDiagram, MoveError> {
    let step: Vec<i32> = (1..p as i32).map(|i| i * q.signum()).collect();
    let word: Vec<i32> = (0..q.unsigned_abs()).flat_map(|_| step.iter().copied()).collect();
    braid_closure(p, &word)
}

/// The word `(s_1 s_2 ... s_{m-1})^m` with every generator of sign `sign`.
pub(crate) fn full_twist_word(m: usize, sign: Sign) -> Vec<(usize, Sign)> {
    (0..m)
        .flat_map(|_| (0..m.saturating_sub(1)).map(move |i| (i, sign)))
        .collect()
}
