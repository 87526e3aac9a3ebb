use std::collections::HashMap;

use super::{Crossing, DiagramError, PlanarDiagram, Sign, Slot};

/// An unoriented diagram under construction.
///
/// Each crossing lists four edge ids counterclockwise with the under-strand on
/// slots 0 and 2; ids are arbitrary but each must occur exactly twice.
/// [`RawDiagram::into_knot`] orients the result and relabels the edges
/// `1..=2n` along the orientation.
#[derive(Debug, Clone, Default)]
pub(crate) struct RawDiagram {
    crossings: Vec<[u32; 4]>,
    next_id: u32,
}

impl RawDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_crossings(crossings: Vec<[u32; 4]>) -> Self {
        let next_id = crossings.iter().flatten().copied().max().map_or(0, |m| m + 1);
        RawDiagram { crossings, next_id }
    }

    pub fn fresh(&mut self) -> u32 {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    pub fn push(&mut self, ids: [u32; 4]) -> usize {
        for &id in &ids {
            self.next_id = self.next_id.max(id + 1);
        }
        self.crossings.push(ids);
        self.crossings.len() - 1
    }

    pub fn set(&mut self, (x, s): Slot, id: u32) {
        self.next_id = self.next_id.max(id + 1);
        self.crossings[x][s] = id;
    }

    /// Renames the single occurrence of `from` to `to`; returns false if `from` is absent.
    pub fn replace_id(&mut self, from: u32, to: u32) -> bool {
        for ids in &mut self.crossings {
            if let Some(slot) = ids.iter_mut().find(|id| **id == from) {
                *slot = to;
                return true;
            }
        }
        false
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    /// Orients the single component, rotates each crossing so slot 0 is the
    /// incoming under-strand, and relabels edges along the orientation
    /// starting from the edge entering crossing 0.
    pub fn into_knot(self) -> Result<(PlanarDiagram, HashMap<u32, u32>), DiagramError> {
        let n = self.crossings.len();
        if n == 0 {
            return Ok((PlanarDiagram::unknot(), HashMap::new()));
        }
        let mut occ: HashMap<u32, Vec<Slot>> = HashMap::with_capacity(2 * n);
        for (x, ids) in self.crossings.iter().enumerate() {
            for (s, &id) in ids.iter().enumerate() {
                occ.entry(id).or_default().push((x, s));
            }
        }
        if let Some((&label, v)) = occ.iter().find(|(_, v)| v.len() != 2) {
            return Err(DiagramError::BadArcMultiplicity { label, count: v.len() });
        }

        let mut heads = vec![[false; 4]; n];
        let mut relabel: HashMap<u32, u32> = HashMap::with_capacity(2 * n);
        let start = (0usize, 0usize);
        let mut cur = start;
        loop {
            let (x, s) = cur;
            if heads[x][s] {
                break;
            }
            heads[x][s] = true;
            let next_label = relabel.len() as u32 + 1;
            relabel.insert(self.crossings[x][s], next_label);
            let out = (x, (s + 2) % 4);
            let v = &occ[&self.crossings[x][out.1]];
            cur = if v[0] == out { v[1] } else { v[0] };
        }
        if relabel.len() != 2 * n {
            return Err(DiagramError::SplitOrLinkInput);
        }

        let crossings = self
            .crossings
            .iter()
            .zip(&heads)
            .map(|(ids, h)| {
                let (ids, h) = if h[2] {
                    ([ids[2], ids[3], ids[0], ids[1]], [h[2], h[3], h[0], h[1]])
                } else {
                    (*ids, *h)
                };
                let sign = if h[3] { Sign::Positive } else { Sign::Negative };
                Crossing {
                    arcs: ids.map(|id| relabel[&id]),
                    sign,
                }
            })
            .collect();
        let d = PlanarDiagram::from_crossings_unchecked(crossings);
        d.check_euler()?;
        Ok((d, relabel))
    }
}
