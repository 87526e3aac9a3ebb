//! Kauffman bracket, Jones polynomial and the minimum Jones degree.
//!
//! Two engines compute the same bracket: an exhaustive state sum used as the
//! oracle, and a boundary-pairing contraction that scales to the larger
//! doubled diagrams.

mod degree;
mod naive;
mod tl;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::PlanarDiagram;
use crate::poly::{PolyError, QuarterInt, QuarterLaurentPoly};
use crate::unionfind::UnionFind;

pub use degree::{degree_theorem_check, m_formula, DegreeReport};
pub use naive::{bracket_naive, bracket_naive_with, NaiveOptions, NAIVE_CROSSING_CAP};
pub use tl::{bracket_tl, bracket_tl_with, TlOptions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("diagram has {crossings} crossings, above the naive engine cap of {cap}")]
    TooLarge { crossings: usize, cap: usize },
    #[error("contraction exceeded its limits: {0}")]
    ResourceExhausted(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// How a crossing is resolved. The A-smoothing joins the regions swept
/// counterclockwise by the over-strand, i.e. it pairs slots (0,1) and (2,3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    /// The two slot pairs joined by this smoothing.
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(0, 3), (1, 2)],
        }
    }
}

/// A full smoothing of a diagram: bit `i` set means crossing `i` gets the B-smoothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmoothingState {
    pub choices: u64,
    pub loop_count: usize,
}

impl SmoothingState {
    /// Evaluates the state `choices` on `d`. Diagrams above 64 crossings are not supported.
    pub fn evaluate(d: &PlanarDiagram, choices: u64) -> Self {
        assert!(d.crossing_count() <= 64, "state bit-vector holds at most 64 crossings");
        let mut uf = UnionFind::new(d.arc_count().max(1));
        let loop_count = loops_with(d, &mut uf, |i| choices >> i & 1 == 1);
        SmoothingState { choices, loop_count }
    }

    pub fn smoothing(&self, crossing: usize) -> Smoothing {
        if self.choices >> crossing & 1 == 1 {
            Smoothing::B
        } else {
            Smoothing::A
        }
    }

    pub fn a_count(&self, n: usize) -> usize {
        n - (self.choices & mask(n)).count_ones() as usize
    }
}

pub(crate) fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of loops after smoothing crossing `i` with `B` when `is_b(i)`.
/// The 0-crossing unknot has one loop.
pub(crate) fn loops_with(d: &PlanarDiagram, uf: &mut UnionFind, is_b: impl Fn(usize) -> bool) -> usize {
    let m = d.arc_count();
    if m == 0 {
        return 1;
    }
    uf.reset(m);
    for (i, x) in d.crossings().iter().enumerate() {
        let arcs = x.arcs();
        let s = if is_b(i) { Smoothing::B } else { Smoothing::A };
        for (p, q) in s.pairs() {
            uf.union(arcs[p] as usize - 1, arcs[q] as usize - 1);
        }
    }
    uf.component_count()
}

/// Loop count of the smoothing that applies `choose` at every crossing.
pub fn uniform_state_loops(d: &PlanarDiagram, choose: Smoothing) -> usize {
    let mut uf = UnionFind::new(d.arc_count().max(1));
    loops_with(d, &mut uf, |_| choose == Smoothing::B)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Naive,
    Tl,
    /// Naive up to the naive engine's crossing cap, contraction above.
    #[default]
    Auto,
}

impl FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(Engine::Naive),
            "tl" => Ok(Engine::Tl),
            "auto" => Ok(Engine::Auto),
            other => Err(format!("unknown engine `{other}` (expected naive, tl or auto)")),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Naive => "naive",
            Engine::Tl => "tl",
            Engine::Auto => "auto",
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct BracketOptions {
    pub engine: Engine,
    pub naive: NaiveOptions,
    pub tl: TlOptions,
}

impl BracketOptions {
    pub fn with_engine(engine: Engine) -> Self {
        BracketOptions {
            engine,
            ..Default::default()
        }
    }
}

pub fn bracket(d: &PlanarDiagram, opts: &BracketOptions) -> Result<QuarterLaurentPoly, BracketError> {
    match opts.engine {
        Engine::Naive => bracket_naive_with(d, &opts.naive),
        Engine::Tl => bracket_tl_with(d, &opts.tl),
        Engine::Auto if d.crossing_count() <= opts.naive.cap => bracket_naive_with(d, &opts.naive),
        Engine::Auto => bracket_tl_with(d, &opts.tl),
    }
}

/// Jones polynomial in `t` with the default engine.
pub fn jones(d: &PlanarDiagram) -> Result<QuarterLaurentPoly, BracketError> {
    jones_with(d, &BracketOptions::default())
}

pub fn jones_with(d: &PlanarDiagram, opts: &BracketOptions) -> Result<QuarterLaurentPoly, BracketError> {
    jones_from_bracket(&bracket(d, opts)?, d.writhe())
}

pub fn jones_from_bracket(b: &QuarterLaurentPoly, writhe: i64) -> Result<QuarterLaurentPoly, BracketError> {
    let v = b.substitute_a_to_t(writhe)?;
    if !v.has_integer_exponents() {
        return Err(BracketError::Inconsistent(format!(
            "knot Jones polynomial has fractional exponents: {v}"
        )));
    }
    Ok(v)
}

/// Minimum `t`-degree of the Jones polynomial.
pub fn m_invariant(d: &PlanarDiagram) -> Result<QuarterInt, BracketError> {
    m_invariant_with(d, &BracketOptions::default())
}

pub fn m_invariant_with(d: &PlanarDiagram, opts: &BracketOptions) -> Result<QuarterInt, BracketError> {
    Ok(jones_with(d, opts)?.min_degree()?)
}
