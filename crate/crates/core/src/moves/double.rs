use serde::Serialize;

use super::push_braid;
use crate::diagram::{PlanarDiagram, RawDiagram, Sign};

/// A companion diagram and the twisting parameter of its double.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleSpec {
    pub companion: PlanarDiagram,
    pub k: i64,
}

impl DoubleSpec {
    pub fn new(companion: PlanarDiagram, k: i64) -> Self {
        DoubleSpec { companion, k }
    }

    /// Signed number of full twists in the twist box: `k - w`.
    pub fn box_twists(&self) -> i64 {
        self.k - self.companion.writhe()
    }

    pub fn expected_crossings(&self) -> usize {
        4 * self.companion.crossing_count() + 2 + 2 * self.box_twists().unsigned_abs() as usize
    }
}

/// The four crossings replacing one companion crossing, and the labels of the
/// parallel copies of its four arcs in the doubled diagram.
///
/// With the companion's under-strand drawn south to north (`a` below, `c`
/// above) and `b` to the east, copies of `a` and `c` are indexed `[west, east]`
/// and copies of `b` and `d` are indexed `[south, north]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingGroup {
    /// Doubled crossing indices, ordered south-west, south-east, north-west, north-east.
    pub crossings: [usize; 4],
    pub a: [u32; 2],
    pub b: [u32; 2],
    pub c: [u32; 2],
    pub d: [u32; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleLayout {
    pub groups: Vec<CrossingGroup>,
    pub twist_box: Vec<usize>,
    pub clasp: [usize; 2],
}

pub fn whitehead_double(spec: &DoubleSpec) -> PlanarDiagram {
    whitehead_double_with_layout(spec).0
}

/// Blackboard-framed double with a positive clasp and `k - w` full twists.
///
/// The clasp and twist box sit on arc 1 of the companion (on the single loop
/// of a crossingless unknot); the box comes first along the orientation.
pub fn whitehead_double_with_layout(spec: &DoubleSpec) -> (PlanarDiagram, DoubleLayout) {
    let k = &spec.companion;
    let n = k.crossing_count();
    let mut raw = RawDiagram::new();
    // copy ids of every companion arc: [left, right] of its orientation
    let copies: Vec<[u32; 2]> = (0..k.arc_count().max(1)).map(|_| [raw.fresh(), raw.fresh()]).collect();
    // arc 1 is cut: its copies keep their ids at the tail and get new ids at the head
    let cut_head = if n == 0 { copies[0] } else { [raw.fresh(), raw.fresh()] };
    let ends = k.arc_ends();

    let copy_at = |x: usize, s: usize| -> [u32; 2] {
        let l = k.crossings()[x].arcs()[s];
        if l == 1 && ends[0].head == (x, s) {
            cut_head
        } else {
            copies[l as usize - 1]
        }
    };

    let mut group_ids = Vec::with_capacity(n);
    for (x, c) in k.crossings().iter().enumerate() {
        let [a_l, a_r] = copy_at(x, 0);
        let [c_l, c_r] = copy_at(x, 2);
        let ([b_l, b_r], [d_l, d_r]) = (copy_at(x, 1), copy_at(x, 3));
        let (a, cc) = ([a_l, a_r], [c_l, c_r]);
        let (b, d) = match c.sign() {
            Sign::Positive => ([b_r, b_l], [d_r, d_l]),
            Sign::Negative => ([b_l, b_r], [d_l, d_r]),
        };
        let [v_w, v_e, h_n, h_s] = std::array::from_fn(|_| raw.fresh());
        let sw = raw.push([a[0], h_s, v_w, d[0]]);
        let se = raw.push([a[1], b[0], v_e, h_s]);
        let nw = raw.push([v_w, h_n, cc[0], d[1]]);
        let ne = raw.push([v_e, b[1], cc[1], h_n]);
        group_ids.push(([sw, se, nw, ne], a, b, cc, d));
    }

    let t = spec.box_twists();
    let sign = if t >= 0 { Sign::Positive } else { Sign::Negative };
    let word = vec![(0, sign); 2 * t.unsigned_abs() as usize];
    let box_start = raw.len();
    let [lw, rw]: [u32; 2] = push_braid(&mut raw, &copies[0], &word).try_into().expect("two strands");
    let box_end = raw.len();
    let [le, re] = cut_head;
    let (m1, m2) = (raw.fresh(), raw.fresh());
    let p1 = raw.push([le, lw, m1, m2]);
    let p2 = raw.push([rw, re, m2, m1]);

    let (d, relabel) = raw.into_knot().expect("doubles of planar knot diagrams are planar");
    let map = |ids: [u32; 2]| ids.map(|i| relabel[&i]);
    let groups = group_ids
        .into_iter()
        .map(|(crossings, a, b, c, dd)| CrossingGroup {
            crossings,
            a: map(a),
            b: map(b),
            c: map(c),
            d: map(dd),
        })
        .collect();
    let layout = DoubleLayout {
        groups,
        twist_box: (box_start..box_end).collect(),
        clasp: [p1, p2],
    };
    (d, layout)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{jones, jones_with, BracketOptions, Engine};
    use crate::diagram::parse_pd;
    use crate::moves::family_k2n1;

    fn rh_trefoil() -> PlanarDiagram {
        parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap()
    }

    #[test]
    fn untwisted_double_of_unknot_is_trivial() {
        let d = whitehead_double(&DoubleSpec::new(PlanarDiagram::unknot(), 0));
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(jones(&d).unwrap().to_string(), "1");
    }

    #[test]
    fn negative_twist_double_of_unknot_is_trefoil() {
        let d = whitehead_double(&DoubleSpec::new(PlanarDiagram::unknot(), -1));
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.writhe(), 4);
        assert_eq!(jones(&d).unwrap(), jones(&rh_trefoil()).unwrap());
    }

    #[test]
    fn doubles_of_unknot_match_family() {
        for n in 1..=4 {
            let d = whitehead_double(&DoubleSpec::new(PlanarDiagram::unknot(), -(n as i64)));
            assert_eq!(jones(&d).unwrap(), jones(&family_k2n1(n).unwrap()).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn crossing_counts() {
        for k in [-2, 0, 3, 5] {
            let spec = DoubleSpec::new(rh_trefoil(), k);
            let (d, layout) = whitehead_double_with_layout(&spec);
            assert_eq!(d.crossing_count(), spec.expected_crossings(), "k = {k}");
            assert_eq!(layout.twist_box.len(), 2 * (k - 3).unsigned_abs() as usize);
            assert_eq!(layout.groups.len(), 3);
        }
        assert_eq!(DoubleSpec::new(rh_trefoil(), 3).expected_crossings(), 14);
    }

    #[test]
    fn amphichiral_companion() {
        // the figure-eight is amphichiral, so the two companions are isotopic
        let f8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let opts = BracketOptions::with_engine(Engine::Tl);
        let a = jones_with(&whitehead_double(&DoubleSpec::new(f8.clone(), 1)), &opts).unwrap();
        let b = jones_with(&whitehead_double(&DoubleSpec::new(f8.mirror(), 1)), &opts).unwrap();
        assert_eq!(a, b);
    }
}
