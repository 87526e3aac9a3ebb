//! Named diagrams available without input files.

use crate::diagram::{parse_pd, PlanarDiagram};
use crate::moves::family_k2n1;

pub const RH_TREFOIL_PD: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
pub const LH_TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub const FIGURE_EIGHT_PD: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

/// Names accepted by [`builtin`], for help text.
pub const BUILTIN_NAMES: &[&str] = &["unknot", "trefoil", "trefoil-lh", "figure8", "k<2n+1>"];

/// Looks up `unknot`, `trefoil` (right-handed), `trefoil-lh`, `figure8`, or
/// `k<2n+1>` for the twist-knot family member with `2n + 1` crossings.
pub fn builtin(name: &str) -> Option<PlanarDiagram> {
    let lower = name.trim().to_ascii_lowercase();
    let pd = match lower.as_str() {
        "unknot" => return Some(PlanarDiagram::unknot().with_name("unknot")),
        "trefoil" => RH_TREFOIL_PD,
        "trefoil-lh" => LH_TREFOIL_PD,
        "figure8" => FIGURE_EIGHT_PD,
        other => {
            let c: usize = other.strip_prefix('k')?.parse().ok()?;
            if c < 3 || c.is_multiple_of(2) {
                return None;
            }
            return family_k2n1((c - 1) / 2).ok();
        }
    };
    Some(parse_pd(pd).expect("built-in PD codes are valid").with_name(lower))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        assert_eq!(builtin("trefoil").unwrap().writhe(), 3);
        assert_eq!(builtin("trefoil-lh").unwrap().writhe(), -3);
        assert_eq!(builtin("Figure8").unwrap().crossing_count(), 4);
        assert_eq!(builtin("unknot").unwrap().crossing_count(), 0);
        assert_eq!(builtin("k9").unwrap().crossing_count(), 9);
        for bad in ["k4", "k1", "k", "kx", "granny"] {
            assert!(builtin(bad).is_none(), "{bad}");
        }
    }
}
