//! Degree formulas for reduced alternating diagrams, checked against the
//! computed bracket.

use serde::Serialize;

use super::{bracket, BracketOptions};
use crate::checkerboard::{require_reduced_alternating, CheckerboardColoring, InvariantError};
use crate::diagram::PlanarDiagram;
use crate::poly::QuarterInt;

/// `(3w - n - 2X + 2) / 4`, the minimum Jones degree of a reduced alternating diagram.
pub fn m_formula(d: &PlanarDiagram, coloring: &CheckerboardColoring) -> Result<QuarterInt, InvariantError> {
    require_reduced_alternating(d)?;
    let (w, n, x) = (d.writhe(), d.crossing_count() as i64, coloring.x as i64);
    Ok(QuarterInt::from_numerator(3 * w - n - 2 * x + 2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub max_degree: QuarterInt,
    pub expected_max: i64,
    pub min_degree: QuarterInt,
    pub expected_min: i64,
}

impl DegreeReport {
    pub fn holds(&self) -> bool {
        self.max_degree == QuarterInt::from_int(self.expected_max)
            && self.min_degree == QuarterInt::from_int(self.expected_min)
    }
}

/// Compares the bracket's extreme degrees with `n + 2X - 2` and `-n - 2Y + 2`.
pub fn degree_theorem_check(
    d: &PlanarDiagram,
    coloring: &CheckerboardColoring,
    opts: &BracketOptions,
) -> Result<DegreeReport, InvariantError> {
    require_reduced_alternating(d)?;
    let b = bracket(d, opts)?;
    let n = d.crossing_count() as i64;
    Ok(DegreeReport {
        max_degree: b.max_degree().map_err(super::BracketError::from)?,
        expected_max: n + 2 * coloring.x as i64 - 2,
        min_degree: b.min_degree().map_err(super::BracketError::from)?,
        expected_min: -n - 2 * coloring.y as i64 + 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::m_invariant;
    use crate::checkerboard::checkerboard;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil_degrees() {
        let d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let c = checkerboard(&d).unwrap();
        assert_eq!(m_formula(&d, &c).unwrap(), m_invariant(&d).unwrap());
        let r = degree_theorem_check(&d, &c, &BracketOptions::default()).unwrap();
        assert_eq!((r.expected_max, r.expected_min), (5, -7));
        assert!(r.holds());
    }

    #[test]
    fn unknot_degrees() {
        let u = PlanarDiagram::unknot();
        let c = checkerboard(&u).unwrap();
        assert_eq!(m_formula(&u, &c).unwrap(), QuarterInt::ZERO);
        assert!(degree_theorem_check(&u, &c, &BracketOptions::default())
            .unwrap()
            .holds());
    }
}
