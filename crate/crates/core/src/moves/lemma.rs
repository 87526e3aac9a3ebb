use serde::Serialize;

use super::{blowup, change_crossing, linking_number, whitehead_double, whitehead_double_with_layout};
use super::{BlowupSite, CrossingSelector, DoubleSpec, MoveError};
use crate::bracket::{jones_with, BracketOptions, Engine};
use crate::diagram::{PlanarDiagram, Sign};
use crate::par;
use crate::poly::QuarterLaurentPoly;

/// Jones polynomials of a blown-up double and of the double it should equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyPair {
    pub blown_up: QuarterLaurentPoly,
    pub expected: QuarterLaurentPoly,
    pub crossings: [usize; 2],
}

impl PolyPair {
    pub fn holds(&self) -> bool {
        self.blown_up == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub crossing: usize,
    pub k: i64,
    pub plus_site: BlowupSite,
    pub plus_linking: i64,
    /// `+1` blow-up of `D+(K+, k)` against `D+(K-, k)`.
    pub plus: PolyPair,
    pub minus_site: BlowupSite,
    pub minus_linking: i64,
    /// `-1` blow-up of `D+(K+, k)` against `D+(K-, k - 4)`.
    pub minus: PolyPair,
}

pub fn verify_lemma31(companion_plus: &PlanarDiagram, sel: CrossingSelector, k: i64) -> Result<LemmaReport, MoveError> {
    verify_lemma31_with(companion_plus, sel, k, &BracketOptions::with_engine(Engine::Tl))
}

/// Checks both blow-up identities at the doubled crossing `sel`.
///
/// The `+1` arc crosses the copies of `a` then `b` around the corner between
/// them; the `-1` arc crosses the copies of `b` then `c`.
pub fn verify_lemma31_with(
    companion_plus: &PlanarDiagram,
    sel: CrossingSelector,
    k: i64,
    opts: &BracketOptions,
) -> Result<LemmaReport, MoveError> {
    sel.check(companion_plus)?;
    let (doubled, layout) = whitehead_double_with_layout(&DoubleSpec::new(companion_plus.clone(), k));
    let g = &layout.groups[sel.index];
    let plus_site = BlowupSite::new(vec![g.a[0], g.a[1], g.b[0], g.b[1]], Sign::Positive);
    let minus_site = BlowupSite::new(vec![g.b[0], g.b[1], g.c[1], g.c[0]], Sign::Negative);
    let plus_linking = linking_number(&doubled, &plus_site)?;
    let minus_linking = linking_number(&doubled, &minus_site)?;
    for (which, l) in [("+1 site", plus_linking), ("-1 site", minus_linking)] {
        if l != 0 {
            return Err(MoveError::LemmaCheckFailed {
                which: format!("{which} linking number"),
                lhs: l.to_string(),
                rhs: "0".into(),
            });
        }
    }
    let minus_companion = change_crossing(companion_plus, sel)?;
    let diagrams = vec![
        blowup(&doubled, &plus_site)?,
        whitehead_double(&DoubleSpec::new(minus_companion.clone(), k)),
        blowup(&doubled, &minus_site)?,
        whitehead_double(&DoubleSpec::new(minus_companion, k - 4)),
    ];
    let counts: Vec<usize> = diagrams.iter().map(PlanarDiagram::crossing_count).collect();
    let polys = par::map_jobs(diagrams, true, |d| jones_with(&d, opts))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let [p0, p1, p2, p3]: [QuarterLaurentPoly; 4] = polys.try_into().expect("four diagrams");
    let report = LemmaReport {
        crossing: sel.index,
        k,
        plus_site,
        plus_linking,
        plus: PolyPair {
            blown_up: p0,
            expected: p1,
            crossings: [counts[0], counts[1]],
        },
        minus_site,
        minus_linking,
        minus: PolyPair {
            blown_up: p2,
            expected: p3,
            crossings: [counts[2], counts[3]],
        },
    };
    for (which, pair) in [("+1 blow-up", &report.plus), ("-1 blow-up", &report.minus)] {
        if !pair.holds() {
            return Err(MoveError::LemmaCheckFailed {
                which: which.into(),
                lhs: pair.blown_up.to_string(),
                rhs: pair.expected.to_string(),
            });
        }
    }
    Ok(report)
}
