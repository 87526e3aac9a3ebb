//! Checkerboard shading, signature and Thurston-Bennequin numbers of
//! alternating diagrams.
//!
//! Shading convention: at every crossing of an alternating diagram the corners
//! 1 and 3 (between slots 1-2 and 3-0, i.e. the regions swept counterclockwise
//! by the over-strand) are shaded. Joining the shaded corners is then the
//! A-smoothing, and the right-handed trefoil gets `X = 2`, `sigma = -2`.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::bracket::{self, BracketError, BracketOptions, Smoothing};
use crate::diagram::{Corner, PlanarDiagram};
use crate::poly::{QuarterInt, QuarterLaurentPoly};
use crate::unionfind::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("diagram is not reduced")]
    NotReduced,
    #[error("diagram is not connected")]
    NotConnected,
    #[error("faces admit no shading in the crossing convention")]
    NotTwoColorable,
    #[error("expected an integer: {0}")]
    NonIntegerResult(String),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckerboardColoring {
    /// Indexed by face id of [`PlanarDiagram::face_set`].
    pub shaded: Vec<bool>,
    /// Number of unshaded faces.
    #[serde(rename = "X")]
    pub x: usize,
    /// Number of shaded faces.
    #[serde(rename = "Y")]
    pub y: usize,
}

impl CheckerboardColoring {
    fn from_shading(shaded: Vec<bool>) -> Self {
        let y = shaded.iter().filter(|&&s| s).count();
        CheckerboardColoring {
            x: shaded.len() - y,
            y,
            shaded,
        }
    }
}

fn is_shaded_corner(position: usize) -> bool {
    position % 2 == 1
}

pub fn checkerboard(d: &PlanarDiagram) -> Result<CheckerboardColoring, InvariantError> {
    if d.crossing_count() == 0 {
        return Ok(CheckerboardColoring::from_shading(vec![false, true]));
    }
    if !d.is_connected() {
        return Err(InvariantError::NotConnected);
    }
    if !d.is_alternating() {
        return Err(InvariantError::NotAlternating);
    }
    let fs = d.face_set();
    let n = d.crossing_count();
    // faces meeting across the arc at slot p+1 of corner (x, p) are adjacent
    let mut adj = vec![Vec::new(); fs.len()];
    for x in 0..n {
        for p in 0..4 {
            let f = fs.face_of(Corner {
                crossing: x,
                position: p,
            });
            let g = fs.face_of(Corner {
                crossing: x,
                position: (p + 1) % 4,
            });
            adj[f].push(g);
            adj[g].push(f);
        }
    }
    let mut colour: Vec<Option<bool>> = vec![None; fs.len()];
    let start = fs.face_of(Corner {
        crossing: 0,
        position: 1,
    });
    colour[start] = Some(true);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        let c = colour[f].expect("coloured");
        for &g in &adj[f] {
            match colour[g] {
                None => {
                    colour[g] = Some(!c);
                    queue.push_back(g);
                }
                Some(cg) if cg == c => return Err(InvariantError::NotTwoColorable),
                Some(_) => {}
            }
        }
    }
    let shaded: Vec<bool> = colour.into_iter().map(|c| c.unwrap_or(false)).collect();
    let consistent = (0..n).all(|x| {
        (0..4).all(|p| {
            shaded[fs.face_of(Corner {
                crossing: x,
                position: p,
            })] == is_shaded_corner(p)
        })
    });
    if !consistent {
        return Err(InvariantError::NotTwoColorable);
    }
    Ok(CheckerboardColoring::from_shading(shaded))
}

/// Loops of the state joining the shaded corners at every crossing.
pub fn s_zero(d: &PlanarDiagram, coloring: &CheckerboardColoring) -> usize {
    let n = d.crossing_count();
    if n == 0 {
        return 1;
    }
    let fs = d.face_set();
    let mut uf = UnionFind::new(d.arc_count());
    for (x, c) in d.crossings().iter().enumerate() {
        let corner1_shaded = coloring.shaded[fs.face_of(Corner {
            crossing: x,
            position: 1,
        })];
        let s = if corner1_shaded { Smoothing::A } else { Smoothing::B };
        let arcs = c.arcs();
        for (p, q) in s.pairs() {
            uf.union(arcs[p] as usize - 1, arcs[q] as usize - 1);
        }
    }
    uf.component_count()
}

/// Checks that `d` is connected, reduced and alternating, and returns its shading.
pub fn require_reduced_alternating(d: &PlanarDiagram) -> Result<CheckerboardColoring, InvariantError> {
    let c = checkerboard(d)?;
    if !d.is_reduced() {
        return Err(InvariantError::NotReduced);
    }
    Ok(c)
}

/// Signature `X - n_+ - 1`, normalised so the right-handed trefoil has -2.
pub fn sigma(d: &PlanarDiagram) -> Result<i64, InvariantError> {
    let c = require_reduced_alternating(d)?;
    Ok(c.x as i64 - d.positive_count() as i64 - 1)
}

/// `w - X`.
pub fn tb_wx(d: &PlanarDiagram) -> Result<i64, InvariantError> {
    let c = require_reduced_alternating(d)?;
    Ok(d.writhe() - c.x as i64)
}

/// `m - sigma/2 - 1`.
pub fn tb_ng(d: &PlanarDiagram) -> Result<i64, InvariantError> {
    tb_ng_with(d, &BracketOptions::default())
}

pub fn tb_ng_with(d: &PlanarDiagram, opts: &BracketOptions) -> Result<i64, InvariantError> {
    let s = sigma(d)?;
    let m = bracket::m_invariant_with(d, opts)?;
    tb_from_m_sigma(m, s)
}

fn tb_from_m_sigma(m: QuarterInt, sigma: i64) -> Result<i64, InvariantError> {
    let m = m
        .to_integer()
        .ok_or_else(|| InvariantError::NonIntegerResult(format!("m = {m}")))?;
    if sigma % 2 != 0 {
        return Err(InvariantError::NonIntegerResult(format!(
            "sigma/2 with sigma = {sigma}"
        )));
    }
    Ok(m - sigma / 2 - 1)
}

/// Everything computed for one diagram. Shading-dependent fields are `None`
/// unless the diagram is reduced and alternating.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub w: i64,
    pub nplus: usize,
    #[serde(rename = "X")]
    pub x: Option<usize>,
    #[serde(rename = "Y")]
    pub y: Option<usize>,
    pub s0: Option<usize>,
    pub sigma: Option<i64>,
    pub m: QuarterInt,
    pub tb: Option<i64>,
    pub tb_mirror: Option<i64>,
    pub jones: QuarterLaurentPoly,
}

/// Computes the report, cross-checking `s_0 = X` and `tb_ng = tb_wx`.
pub fn invariant_report(d: &PlanarDiagram, opts: &BracketOptions) -> Result<InvariantReport, InvariantError> {
    let jones = bracket::jones_with(d, opts)?;
    let m = jones.min_degree().map_err(BracketError::from)?;
    let mut report = InvariantReport {
        n: d.crossing_count(),
        w: d.writhe(),
        nplus: d.positive_count(),
        x: None,
        y: None,
        s0: None,
        sigma: None,
        m,
        tb: None,
        tb_mirror: None,
        jones,
    };
    let coloring = match require_reduced_alternating(d) {
        Ok(c) => c,
        Err(InvariantError::NotAlternating | InvariantError::NotReduced) => return Ok(report),
        Err(e) => return Err(e),
    };
    let s0 = s_zero(d, &coloring);
    if s0 != coloring.x {
        return Err(InvariantError::Bracket(BracketError::Inconsistent(format!(
            "s_0 = {s0} but X = {}",
            coloring.x
        ))));
    }
    let sigma = coloring.x as i64 - d.positive_count() as i64 - 1;
    let tb = d.writhe() - coloring.x as i64;
    let ng = tb_from_m_sigma(m, sigma)?;
    if ng != tb {
        return Err(InvariantError::Bracket(BracketError::Inconsistent(format!(
            "m - sigma/2 - 1 = {ng} but w - X = {tb}"
        ))));
    }
    report.x = Some(coloring.x);
    report.y = Some(coloring.y);
    report.s0 = Some(s0);
    report.sigma = Some(sigma);
    report.tb = Some(tb);
    report.tb_mirror = Some(tb_wx(&d.mirror())?);
    Ok(report)
}
