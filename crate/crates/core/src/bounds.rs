//! Integer intervals for the concordance invariant `t_nu`, slicing-number
//! statistics and the torus-knot value of `nu`.
//!
//! `t_nu` is never computed here, only bracketed; every interval records
//! where each endpoint came from.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("empty interval: lower bound {lower} ({lower_source}) exceeds upper bound {upper} ({upper_source})")]
    EmptyInterval {
        lower: i64,
        upper: i64,
        lower_source: String,
        upper_source: String,
    },
    #[error("no data")]
    EmptyData,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("torus knot parameters must be positive, got ({0}, {1})")]
    NonPositive(i64, i64),
    #[error("cannot parse slicing data: {0}")]
    Parse(String),
}

/// One contributed bound and its origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundSource {
    pub lower: i64,
    pub upper: i64,
    pub source: String,
}

/// `lower <= t_nu <= upper`, with the source of each endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TnuInterval {
    pub lower: i64,
    pub upper: i64,
    pub lower_source: String,
    pub upper_source: String,
    pub sources: Vec<BoundSource>,
}

impl TnuInterval {
    pub fn new(lower: i64, upper: i64, source: impl Into<String>) -> Result<Self, BoundsError> {
        let source = source.into();
        if lower > upper {
            return Err(BoundsError::EmptyInterval {
                lower,
                upper,
                lower_source: source.clone(),
                upper_source: source,
            });
        }
        Ok(TnuInterval {
            lower,
            upper,
            lower_source: source.clone(),
            upper_source: source.clone(),
            sources: vec![BoundSource { lower, upper, source }],
        })
    }

    pub fn width(&self) -> i64 {
        self.upper - self.lower
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lower <= v && v <= self.upper
    }

    fn shifted(&self, dl: i64, du: i64, source: &str) -> TnuInterval {
        let (lower, upper) = (self.lower + dl, self.upper + du);
        let mut sources = self.sources.clone();
        sources.push(BoundSource {
            lower,
            upper,
            source: source.to_string(),
        });
        TnuInterval {
            lower,
            upper,
            lower_source: if dl == 0 {
                self.lower_source.clone()
            } else {
                source.to_string()
            },
            upper_source: if du == 0 {
                self.upper_source.clone()
            } else {
                source.to_string()
            },
            sources,
        }
    }
}

impl fmt::Display for TnuInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

pub const SOURCE_TB: &str = "thurston-bennequin";
pub const SOURCE_SLICING: &str = "slicing";
pub const SOURCE_CROSSING_CHANGE: &str = "crossing-change";

/// `[TB(K) + 1, -TB(-K)]`; the strict lower bound tightens because `t_nu` is an integer.
pub fn ln_bounds(tb_k: i64, tb_mirror: i64) -> Result<TnuInterval, BoundsError> {
    TnuInterval::new(tb_k + 1, -tb_mirror, SOURCE_TB)
}

/// Crossing-change recipes `(p, n)` turning a knot into a slice knot:
/// `p` positive-to-negative changes and `n` negative-to-positive ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlicingData {
    pub pairs: Vec<(u64, u64)>,
}

impl SlicingData {
    pub fn new(pairs: Vec<(u64, u64)>) -> Self {
        SlicingData { pairs }
    }
}

impl FromStr for SlicingData {
    type Err = BoundsError;
    /// Parses `p,n;p,n;...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pairs = Vec::new();
        for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (p, n) = item
                .split_once(',')
                .ok_or_else(|| BoundsError::Parse(format!("`{item}` is not `p,n`")))?;
            let num = |t: &str| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| BoundsError::Parse(format!("`{}` is not a nonnegative integer", t.trim())))
            };
            pairs.push((num(p)?, num(n)?));
        }
        if pairs.is_empty() {
            return Err(BoundsError::EmptyData);
        }
        Ok(SlicingData { pairs })
    }
}

/// Intersection over recipes of `[-4n, 4p]`.
pub fn slicing_bounds(data: &SlicingData) -> Result<TnuInterval, BoundsError> {
    let per_pair = data
        .pairs
        .iter()
        .map(|&(p, n)| TnuInterval::new(-4 * n as i64, 4 * p as i64, format!("{SOURCE_SLICING} ({p},{n})")))
        .collect::<Result<Vec<_>, _>>()?;
    combine(&per_pair)
}

/// Interval for `K+` from one for `K-`, where `K+` has a positive crossing
/// whose change gives `K-`.
pub fn crossing_change_propagate(minus: &TnuInterval) -> TnuInterval {
    minus.shifted(0, 4, SOURCE_CROSSING_CHANGE)
}

/// Interval for `K-` from one for `K+`.
pub fn crossing_change_reverse(plus: &TnuInterval) -> TnuInterval {
    plus.shifted(-4, 0, SOURCE_CROSSING_CHANGE)
}

/// Intersection. Ties keep the source of the earlier interval.
pub fn combine(intervals: &[TnuInterval]) -> Result<TnuInterval, BoundsError> {
    let (first, rest) = intervals.split_first().ok_or(BoundsError::EmptyData)?;
    let mut acc = first.clone();
    for iv in rest {
        if iv.lower > acc.lower {
            acc.lower = iv.lower;
            acc.lower_source = iv.lower_source.clone();
        }
        if iv.upper < acc.upper {
            acc.upper = iv.upper;
            acc.upper_source = iv.upper_source.clone();
        }
        acc.sources.extend(iv.sources.iter().cloned());
    }
    if acc.lower > acc.upper {
        return Err(BoundsError::EmptyInterval {
            lower: acc.lower,
            upper: acc.upper,
            lower_source: acc.lower_source,
            upper_source: acc.upper_source,
        });
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SlicingStats {
    pub u_s_plus: u64,
    pub u_s_minus: u64,
    #[serde(rename = "U_s")]
    pub big_u_s: u64,
}

pub fn slicing_stats(data: &SlicingData) -> Result<SlicingStats, BoundsError> {
    let pairs = &data.pairs;
    let min_of = |f: &dyn Fn(&(u64, u64)) -> u64| pairs.iter().map(f).min().ok_or(BoundsError::EmptyData);
    Ok(SlicingStats {
        u_s_plus: min_of(&|&(p, _)| p)?,
        u_s_minus: min_of(&|&(_, n)| n)?,
        big_u_s: min_of(&|&(p, n)| p.max(n))?,
    })
}

/// `nu(T(p, q)) = (p - 1)(q - 1) / 2` for positive coprime `p, q`.
pub fn nu_torus(p: i64, q: i64) -> Result<i64, BoundsError> {
    if p <= 0 || q <= 0 {
        return Err(BoundsError::NonPositive(p, q));
    }
    if p.gcd(&q) != 1 {
        return Err(BoundsError::NotCoprime(p, q));
    }
    Ok((p - 1) * (q - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_examples() {
        assert_eq!(ln_bounds(1, -6).unwrap().to_string(), "[2, 6]");
        assert_eq!(ln_bounds(-1, -1).unwrap().to_string(), "[0, 1]");
        for n in 1..=8 {
            let iv = ln_bounds(1, -2 * n - 4).unwrap();
            assert_eq!((iv.lower, iv.upper), (2, 2 * n + 4));
        }
        assert!(matches!(ln_bounds(3, -2), Err(BoundsError::EmptyInterval { .. })));
    }

    #[test]
    fn slicing_examples() {
        let b = |s: &str| slicing_bounds(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(b("1,0"), "[0, 4]");
        assert_eq!(b("0,0"), "[0, 0]");
        assert_eq!(b("1,0;0,2"), "[0, 0]");
        assert_eq!(b("3,1"), "[-4, 12]");
    }

    #[test]
    fn propagation() {
        let u = TnuInterval::new(0, 0, "slice").unwrap();
        assert_eq!(crossing_change_propagate(&u).to_string(), "[0, 4]");
        let iv = TnuInterval::new(2, 6, "x").unwrap();
        let up = crossing_change_propagate(&iv);
        assert_eq!(up.to_string(), "[2, 10]");
        assert_eq!(up.lower_source, "x");
        assert_eq!(up.upper_source, SOURCE_CROSSING_CHANGE);
        assert_eq!(crossing_change_reverse(&iv).to_string(), "[-2, 6]");
        for p in 0..6u64 {
            let mut iv = u.clone();
            for _ in 0..p {
                iv = crossing_change_propagate(&iv);
            }
            let s = slicing_bounds(&SlicingData::new(vec![(p, 0)])).unwrap();
            assert_eq!((iv.lower, iv.upper), (s.lower, s.upper));
        }
    }

    #[test]
    fn combine_examples() {
        let ln = ln_bounds(1, -8).unwrap();
        let sl = slicing_bounds(&"1,0".parse().unwrap()).unwrap();
        let c = combine(&[ln.clone(), sl]).unwrap();
        assert_eq!(c.to_string(), "[2, 4]");
        assert_eq!(c.lower_source, SOURCE_TB);
        assert!(c.upper_source.starts_with(SOURCE_SLICING));
        assert_eq!(combine(std::slice::from_ref(&ln)).unwrap(), ln);
        let a = TnuInterval::new(0, 1, "a").unwrap();
        let b = TnuInterval::new(2, 3, "b").unwrap();
        match combine(&[a, b]) {
            Err(BoundsError::EmptyInterval {
                lower_source,
                upper_source,
                ..
            }) => {
                assert_eq!((lower_source.as_str(), upper_source.as_str()), ("b", "a"));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(combine(&[]), Err(BoundsError::EmptyData));
    }

    #[test]
    fn stats_examples() {
        let s = |t: &str| slicing_stats(&t.parse().unwrap()).unwrap();
        assert_eq!(
            s("1,0;0,2"),
            SlicingStats {
                u_s_plus: 0,
                u_s_minus: 0,
                big_u_s: 1
            }
        );
        assert_eq!(
            s("0,0"),
            SlicingStats {
                u_s_plus: 0,
                u_s_minus: 0,
                big_u_s: 0
            }
        );
        assert_eq!(
            s("2,3"),
            SlicingStats {
                u_s_plus: 2,
                u_s_minus: 3,
                big_u_s: 3
            }
        );
        assert_eq!(slicing_stats(&SlicingData::new(vec![])), Err(BoundsError::EmptyData));
        assert!(matches!("".parse::<SlicingData>(), Err(BoundsError::EmptyData)));
        assert!(matches!("1,-1".parse::<SlicingData>(), Err(BoundsError::Parse(_))));
    }

    #[test]
    fn torus() {
        assert_eq!(nu_torus(2, 3), Ok(1));
        assert_eq!(nu_torus(1, 7), Ok(0));
        assert_eq!(nu_torus(3, 5), Ok(4));
        assert_eq!(nu_torus(5, 3), Ok(4));
        assert_eq!(nu_torus(4, 6), Err(BoundsError::NotCoprime(4, 6)));
        assert_eq!(nu_torus(0, 3), Err(BoundsError::NonPositive(0, 3)));
    }
}
