//! Bracket by contraction: crossings are absorbed one at a time while a
//! weighted sum over pairings of the open strand ends is maintained.

use std::collections::HashMap;

use super::{BracketError, Smoothing};
use crate::diagram::{PlanarDiagram, Slot};
use crate::poly::{QuarterLaurentPoly, Var};

#[derive(Debug, Clone)]
pub struct TlOptions {
    /// Largest allowed number of open strand ends.
    pub max_width: usize,
    /// Largest allowed number of distinct pairings held at once.
    pub max_states: usize,
}

impl Default for TlOptions {
    fn default() -> Self {
        TlOptions {
            max_width: 40,
            max_states: 2_000_000,
        }
    }
}

/// Open ends are identified by arc occurrence: `2 * (label - 1) + k` for the
/// `k`-th occurrence of the label.
type Pairing = Vec<(u32, u32)>;

pub fn bracket_tl(d: &PlanarDiagram) -> Result<QuarterLaurentPoly, BracketError> {
    bracket_tl_with(d, &TlOptions::default())
}

pub fn bracket_tl_with(d: &PlanarDiagram, opts: &TlOptions) -> Result<QuarterLaurentPoly, BracketError> {
    let n = d.crossing_count();
    if n == 0 {
        return Ok(QuarterLaurentPoly::one(Var::A));
    }
    let occ = d.occurrences();
    let occ_id = |(x, s): Slot| -> u32 {
        let l = d.crossings()[x].arcs()[s];
        let k = u32::from(occ[l as usize - 1][0] != (x, s));
        2 * (l - 1) + k
    };
    let order = contraction_order(d, &occ);

    let delta = QuarterLaurentPoly::delta();
    let delta_pows: Vec<QuarterLaurentPoly> =
        std::iter::successors(Some(QuarterLaurentPoly::one(Var::A)), |p| Some(p * &delta))
            .take(5)
            .collect();

    let mut done = vec![false; n];
    let mut states: HashMap<Pairing, QuarterLaurentPoly> =
        HashMap::from([(Vec::new(), QuarterLaurentPoly::one(Var::A))]);
    let mut partner: HashMap<u32, u32> = HashMap::new();
    for x in order {
        done[x] = true;
        let arcs = d.crossings()[x].arcs();
        let ids: [u32; 4] = std::array::from_fn(|s| occ_id((x, s)));
        let mut closing: Vec<u32> = arcs
            .iter()
            .copied()
            .filter(|&l| occ[l as usize - 1].iter().all(|&(y, _)| done[y]))
            .collect();
        closing.sort_unstable();
        closing.dedup();

        let mut next: HashMap<Pairing, QuarterLaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (pairing, weight) in &states {
            for (smoothing, shift) in [(Smoothing::A, 4), (Smoothing::B, -4)] {
                partner.clear();
                for &(a, b) in pairing {
                    partner.insert(a, b);
                    partner.insert(b, a);
                }
                for (p, q) in smoothing.pairs() {
                    partner.insert(ids[p], ids[q]);
                    partner.insert(ids[q], ids[p]);
                }
                let mut loops = 0;
                for &l in &closing {
                    let (o0, o1) = (2 * (l - 1), 2 * (l - 1) + 1);
                    let p = partner.remove(&o0).expect("open end");
                    let q = partner.remove(&o1).expect("open end");
                    if p == o1 {
                        loops += 1;
                    } else {
                        partner.insert(p, q);
                        partner.insert(q, p);
                    }
                }
                let mut key: Pairing = partner.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect();
                key.sort_unstable();
                if key.len() * 2 > opts.max_width {
                    return Err(BracketError::ResourceExhausted(format!(
                        "{} open ends exceed the width limit {}",
                        key.len() * 2,
                        opts.max_width
                    )));
                }
                let term = if loops == 0 {
                    weight.shifted(shift)
                } else {
                    &weight.shifted(shift) * &delta_pows[loops]
                };
                next.entry(key)
                    .or_insert_with(|| QuarterLaurentPoly::zero(Var::A))
                    .add_assign_unchecked(&term);
            }
        }
        next.retain(|_, w| !w.is_zero());
        if next.len() > opts.max_states {
            return Err(BracketError::ResourceExhausted(format!(
                "{} pairings exceed the state limit {}",
                next.len(),
                opts.max_states
            )));
        }
        states = next;
    }

    let total = match (states.remove(&Vec::new()), states.is_empty()) {
        (Some(p), true) => p,
        (None, true) => QuarterLaurentPoly::zero(Var::A),
        _ => return Err(BracketError::Inconsistent("open ends remain after contraction".into())),
    };
    // every closed state has at least one loop; the bracket counts loops - 1
    total
        .div_exact(&delta)
        .ok_or_else(|| BracketError::Inconsistent("state sum not divisible by the loop value".into()))
}

/// Greedy order: repeatedly take the crossing that leaves the fewest open
/// ends, breaking ties by smallest index.
fn contraction_order(d: &PlanarDiagram, occ: &[[Slot; 2]]) -> Vec<usize> {
    let n = d.crossing_count();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut width: i64 = 0;
    for _ in 0..n {
        let (best, new_width) = (0..n)
            .filter(|&x| !done[x])
            .map(|x| {
                let delta: i64 = d.crossings()[x]
                    .arcs()
                    .iter()
                    .map(|&l| {
                        let [(y0, _), (y1, _)] = occ[l as usize - 1];
                        let other = if y0 == x { y1 } else { y0 };
                        if other == x {
                            0
                        } else if done[other] {
                            -1
                        } else {
                            1
                        }
                    })
                    .sum();
                (x, width + delta)
            })
            .min_by_key(|&(x, w)| (w, x))
            .expect("an unprocessed crossing remains");
        done[best] = true;
        order.push(best);
        width = new_width;
    }
    order
}
