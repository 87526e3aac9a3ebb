//! Exhaustive state sum.

use num_bigint::BigInt;

use super::{loops_with, BracketError};
use crate::diagram::PlanarDiagram;
use crate::par;
use crate::poly::{QuarterInt, QuarterLaurentPoly, Var};
use crate::unionfind::UnionFind;

pub const NAIVE_CROSSING_CAP: usize = 20;

#[derive(Debug, Clone)]
pub struct NaiveOptions {
    pub cap: usize,
    /// Rounded up to a power of two so each shard owns a fixed prefix of the
    /// state bit-vector.
    pub shards: usize,
    /// Ignored without the `parallel` feature.
    pub parallel: bool,
}

impl Default for NaiveOptions {
    fn default() -> Self {
        NaiveOptions {
            cap: NAIVE_CROSSING_CAP,
            shards: par::default_shards(),
            parallel: true,
        }
    }
}

pub fn bracket_naive(d: &PlanarDiagram) -> Result<QuarterLaurentPoly, BracketError> {
    bracket_naive_with(d, &NaiveOptions::default())
}

pub fn bracket_naive_with(d: &PlanarDiagram, opts: &NaiveOptions) -> Result<QuarterLaurentPoly, BracketError> {
    let n = d.crossing_count();
    if n > opts.cap.min(63) {
        return Err(BracketError::TooLarge {
            crossings: n,
            cap: opts.cap.min(63),
        });
    }
    if n == 0 {
        return Ok(QuarterLaurentPoly::one(Var::A));
    }
    // hist[b * stride + loops] counts states with `b` B-smoothings
    let stride = d.arc_count() + 1;
    let size = (n + 1) * stride;
    let total = 1u64 << n;
    let shards = opts.shards.max(1).next_power_of_two().min(total as usize);
    let hist = par::map_reduce_shards(
        total,
        shards,
        opts.parallel,
        |range| {
            let mut h = vec![0u64; size];
            let mut uf = UnionFind::new(d.arc_count());
            for s in range {
                let loops = loops_with(d, &mut uf, |i| s >> i & 1 == 1);
                h[s.count_ones() as usize * stride + loops] += 1;
            }
            h
        },
        |a: Vec<u64>, b: Vec<u64>| {
            if a.is_empty() {
                return b;
            }
            if b.is_empty() {
                return a;
            }
            a.into_iter().zip(b).map(|(x, y)| x + y).collect()
        },
    );

    let delta = QuarterLaurentPoly::delta();
    let mut delta_pows = vec![QuarterLaurentPoly::one(Var::A)];
    let mut out = QuarterLaurentPoly::zero(Var::A);
    for (idx, &count) in hist.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let (b, loops) = (idx / stride, idx % stride);
        if loops == 0 {
            return Err(BracketError::Inconsistent("state with no loops".into()));
        }
        while delta_pows.len() < loops {
            let next = delta_pows.last().expect("nonempty") * &delta;
            delta_pows.push(next);
        }
        let a_minus_b = n as i64 - 2 * b as i64;
        let term = delta_pows[loops - 1].scale_monomial(BigInt::from(count), QuarterInt::from_int(a_minus_b));
        out.add_assign_unchecked(&term);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil_anchor() {
        let d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let b = bracket_naive(&d).unwrap();
        assert_eq!(
            b,
            QuarterLaurentPoly::from_terms(Var::A, [(-28, 1), (-12, -1), (20, -1)])
        );
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(
            bracket_naive(&PlanarDiagram::unknot()).unwrap(),
            QuarterLaurentPoly::one(Var::A)
        );
    }

    #[test]
    fn shard_count_does_not_matter() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let base = bracket_naive_with(
            &d,
            &NaiveOptions {
                shards: 1,
                parallel: false,
                ..Default::default()
            },
        )
        .unwrap();
        for shards in [2, 3, 8, 64] {
            for parallel in [false, true] {
                let o = NaiveOptions {
                    shards,
                    parallel,
                    ..Default::default()
                };
                assert_eq!(bracket_naive_with(&d, &o).unwrap(), base);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let o = NaiveOptions {
            cap: 2,
            ..Default::default()
        };
        assert_eq!(
            bracket_naive_with(&d, &o),
            Err(BracketError::TooLarge { crossings: 3, cap: 2 })
        );
    }
}
