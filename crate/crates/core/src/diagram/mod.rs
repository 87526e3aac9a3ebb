//! Oriented planar knot diagrams in PD form.
//!
//! A crossing is a 4-tuple of arc labels listed counterclockwise starting at the
//! incoming under-strand, so the under-strand runs from slot 0 to slot 2 and
//! the over-strand joins slots 1 and 3. A crossing is positive when the
//! over-strand enters at slot 3, i.e. when (over, under) is a counterclockwise
//! frame.
//!
//! Faces come from the rotation system: corner `(x, p)` is the wedge between
//! slots `p` and `p + 1` of crossing `x`, and faces are the orbits of the
//! corner successor map.

mod parse;
mod raw;

pub use parse::{parse_diagram_file, parse_dt, parse_line, parse_pd, NamedDiagram};
pub(crate) use raw::RawDiagram;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::unionfind::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed code: {0}")]
    MalformedCode(String),
    #[error("arc label {label} appears {count} times (expected exactly twice)")]
    BadArcMultiplicity { label: u32, count: usize },
    #[error("code is not planar: {faces} faces, expected {expected}")]
    NonplanarCode { faces: usize, expected: usize },
    #[error("code has no planar realization: {0}")]
    UnrealizableCode(String),
    #[error("input is a link or split diagram; only knots are supported")]
    SplitOrLinkInput,
    #[error("diagram too large: {0}")]
    TooLarge(String),
}

/// Serialized as `1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    arcs: [u32; 4],
    sign: Sign,
}

impl Crossing {
    pub fn arcs(&self) -> [u32; 4] {
        self.arcs
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Slot at which the over-strand enters (1 or 3).
    pub fn over_in_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn flipped(&self) -> Crossing {
        let [a, b, c, d] = self.arcs;
        let arcs = match self.sign {
            Sign::Positive => [d, a, b, c],
            Sign::Negative => [b, c, d, a],
        };
        Crossing {
            arcs,
            sign: self.sign.flipped(),
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.arcs;
        write!(f, "X({a},{b},{c},{d})")
    }
}

/// A wedge of a crossing between slot `position` and slot `position + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub crossing: usize,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<Corner>,
}

/// Faces together with the corner-to-face lookup.
#[derive(Debug, Clone)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    corner_face: Vec<[usize; 4]>,
}

impl FaceSet {
    pub fn face_of(&self, corner: Corner) -> usize {
        self.corner_face[corner.crossing][corner.position]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Where an arc label sits: crossing index and slot.
pub type Slot = (usize, usize);

/// Head and tail of an oriented arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcEnds {
    pub tail: Slot,
    pub head: Slot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    name: Option<String>,
}

impl PlanarDiagram {
    /// The zero-crossing unknot.
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            name: Some("unknot".into()),
        }
    }

    /// Validates PD tuples and orients the diagram.
    pub fn from_pd_tuples(tuples: &[[u32; 4]]) -> Result<Self, DiagramError> {
        let n = tuples.len();
        if n == 0 {
            return Ok(PlanarDiagram {
                crossings: Vec::new(),
                name: None,
            });
        }
        let arc_count = 2 * n;
        let mut counts = vec![0usize; arc_count + 1];
        for t in tuples {
            for &l in t {
                if l == 0 || l as usize > arc_count {
                    return Err(DiagramError::BadArcMultiplicity { label: l, count: 1 });
                }
                counts[l as usize] += 1;
            }
        }
        if let Some((label, &count)) = counts.iter().enumerate().skip(1).find(|(_, &c)| c != 2) {
            return Err(DiagramError::BadArcMultiplicity {
                label: label as u32,
                count,
            });
        }
        let heads = orient(tuples)?;
        let mut crossings = Vec::with_capacity(n);
        for (x, t) in tuples.iter().enumerate() {
            if heads[x][2] || !heads[x][0] {
                return Err(DiagramError::MalformedCode(format!(
                    "crossing {} does not start at the incoming under-strand",
                    Crossing {
                        arcs: *t,
                        sign: Sign::Positive
                    }
                )));
            }
            let sign = match (heads[x][1], heads[x][3]) {
                (false, true) => Sign::Positive,
                (true, false) => Sign::Negative,
                _ => unreachable!("orient marks exactly one over slot"),
            };
            crossings.push(Crossing { arcs: *t, sign });
        }
        let d = PlanarDiagram { crossings, name: None };
        d.check_euler()?;
        Ok(d)
    }

    pub(crate) fn from_crossings_unchecked(crossings: Vec<Crossing>) -> Self {
        PlanarDiagram { crossings, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign == Sign::Positive).count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossing_count() - self.positive_count()
    }

    /// Both slots of every arc label, indexed by `label - 1`.
    pub fn occurrences(&self) -> Vec<[Slot; 2]> {
        let mut occ: Vec<Vec<Slot>> = vec![Vec::with_capacity(2); self.arc_count()];
        for (x, c) in self.crossings.iter().enumerate() {
            for (s, &l) in c.arcs.iter().enumerate() {
                occ[l as usize - 1].push((x, s));
            }
        }
        occ.into_iter().map(|v| [v[0], v[1]]).collect()
    }

    /// Tail and head of every arc, indexed by `label - 1`.
    pub fn arc_ends(&self) -> Vec<ArcEnds> {
        self.occurrences()
            .into_iter()
            .map(|[p, q]| {
                if self.is_head(p) {
                    ArcEnds { tail: q, head: p }
                } else {
                    ArcEnds { tail: p, head: q }
                }
            })
            .collect()
    }

    fn is_head(&self, (x, s): Slot) -> bool {
        s == 0 || s == self.crossings[x].over_in_slot()
    }

    fn other_end(occ: &[[Slot; 2]], label: u32, here: Slot) -> Slot {
        let [p, q] = occ[label as usize - 1];
        if p == here {
            q
        } else {
            p
        }
    }

    /// Face enumeration. The zero-crossing unknot has two faces with no corners.
    pub fn face_set(&self) -> FaceSet {
        let n = self.crossings.len();
        if n == 0 {
            return FaceSet {
                faces: vec![Face { corners: Vec::new() }, Face { corners: Vec::new() }],
                corner_face: Vec::new(),
            };
        }
        let occ = self.occurrences();
        let mut corner_face = vec![[usize::MAX; 4]; n];
        let mut faces = Vec::new();
        for x in 0..n {
            for p in 0..4 {
                if corner_face[x][p] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut corners = Vec::new();
                let (mut cx, mut cp) = (x, p);
                while corner_face[cx][cp] == usize::MAX {
                    corner_face[cx][cp] = id;
                    corners.push(Corner {
                        crossing: cx,
                        position: cp,
                    });
                    let out = (cx, (cp + 1) % 4);
                    let label = self.crossings[cx].arcs[out.1];
                    let (nx, ns) = Self::other_end(&occ, label, out);
                    cx = nx;
                    cp = ns;
                }
                faces.push(Face { corners });
            }
        }
        FaceSet { faces, corner_face }
    }

    pub fn faces(&self) -> Vec<Face> {
        self.face_set().faces
    }

    /// Faces to the left and right of an arc, following its orientation.
    pub fn arc_sides(&self, faces: &FaceSet, ends: ArcEnds) -> (usize, usize) {
        let (x, s) = ends.tail;
        let left = faces.face_of(Corner {
            crossing: x,
            position: s,
        });
        let right = faces.face_of(Corner {
            crossing: x,
            position: (s + 3) % 4,
        });
        (left, right)
    }

    fn check_euler(&self) -> Result<(), DiagramError> {
        let faces = self.face_set().len();
        let expected = self.crossings.len() + 2;
        if faces != expected {
            return Err(DiagramError::NonplanarCode { faces, expected });
        }
        Ok(())
    }

    /// Every arc joins an over-passage to an under-passage.
    pub fn is_alternating(&self) -> bool {
        self.occurrences().iter().all(|[(_, s), (_, t)]| (s + t) % 2 == 1)
    }

    /// No face meets the same crossing twice (no nugatory crossings).
    pub fn is_reduced(&self) -> bool {
        self.face_set().faces.iter().all(|f| {
            let mut seen: Vec<usize> = f.corners.iter().map(|c| c.crossing).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return true;
        }
        let mut uf = UnionFind::new(n);
        for [(x, _), (y, _)] in self.occurrences() {
            uf.union(x, y);
        }
        uf.component_count() == 1
    }

    /// Mirror image: every crossing has over and under exchanged.
    pub fn mirror(&self) -> Self {
        PlanarDiagram {
            crossings: self.crossings.iter().map(Crossing::flipped).collect(),
            name: self.name.as_ref().map(|n| format!("mirror({n})")),
        }
    }

    /// Same diagram with the orientation reversed and arcs relabelled along it.
    pub fn reverse(&self) -> Self {
        let m = self.arc_count() as u32;
        let relabel = |l: u32| if m == 0 { l } else { m + 1 - l };
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.arcs;
                Crossing {
                    arcs: [cc, d, a, b].map(relabel),
                    sign: c.sign,
                }
            })
            .collect();
        PlanarDiagram {
            crossings,
            name: self.name.clone(),
        }
    }

    /// Returns the diagram with crossing `index` flipped.
    pub fn with_crossing_flipped(&self, index: usize) -> Self {
        let mut crossings = self.crossings.clone();
        crossings[index] = crossings[index].flipped();
        PlanarDiagram { crossings, name: None }
    }

    /// The raw form used by diagram constructions.
    pub(crate) fn to_raw(&self) -> RawDiagram {
        RawDiagram::from_crossings(self.crossings.iter().map(|c| c.arcs).collect())
    }

    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn pd_tuples(&self) -> Vec<[u32; 4]> {
        self.crossings.iter().map(|c| c.arcs).collect()
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

/// Follows the single component through the tuples and marks, for every slot,
/// whether the arc there enters the crossing.
fn orient(tuples: &[[u32; 4]]) -> Result<Vec<[bool; 4]>, DiagramError> {
    let n = tuples.len();
    let mut occ: Vec<Vec<Slot>> = vec![Vec::with_capacity(2); 2 * n + 1];
    for (x, t) in tuples.iter().enumerate() {
        for (s, &l) in t.iter().enumerate() {
            occ[l as usize].push((x, s));
        }
    }
    let mut heads = vec![[false; 4]; n];
    let start = (0usize, 0usize);
    let mut cur = start;
    let mut steps = 0;
    loop {
        let (x, s) = cur;
        if heads[x][s] {
            break;
        }
        heads[x][s] = true;
        steps += 1;
        let out = (x, (s + 2) % 4);
        let label = tuples[x][out.1] as usize;
        let [p, q] = [occ[label][0], occ[label][1]];
        cur = if p == out { q } else { p };
    }
    if cur != start {
        return Err(DiagramError::MalformedCode("strand orientation is inconsistent".into()));
    }
    if steps != 2 * n {
        return Err(DiagramError::SplitOrLinkInput);
    }
    for (x, h) in heads.iter().enumerate() {
        let over_heads = h[1] as u8 + h[3] as u8;
        let under_heads = h[0] as u8 + h[2] as u8;
        if over_heads != 1 || under_heads != 1 {
            return Err(DiagramError::MalformedCode(format!(
                "crossing {x} is not traversed once along each strand"
            )));
        }
    }
    Ok(heads)
}
