//! PD and DT code readers.
//!
//! PD text is a whitespace-separated list of `X(a,b,c,d)` terms. DT text is a
//! whitespace-separated list of signed even integers; a positive entry means
//! the even-numbered passage goes under. Diagram files hold one diagram per
//! line with an optional `name:` prefix, and `#` starts a comment line.

use super::{Crossing, DiagramError, PlanarDiagram, Sign};

/// DT realization searches sign patterns exhaustively; this bounds the search.
pub const DT_CROSSING_CAP: usize = 20;

pub fn parse_pd(text: &str) -> Result<PlanarDiagram, DiagramError> {
    let mut tuples = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        let mut rest = line;
        loop {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let body = rest
                .strip_prefix('X')
                .and_then(|r| r.trim_start().strip_prefix('('))
                .ok_or_else(|| DiagramError::MalformedCode(format!("expected `X(` at `{}`", preview(rest))))?;
            let close = body
                .find(')')
                .ok_or_else(|| DiagramError::MalformedCode("unterminated `X(`".into()))?;
            let nums = body[..close]
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| DiagramError::MalformedCode(format!("bad term `X({})`", &body[..close])))?;
            let tuple: [u32; 4] = nums
                .try_into()
                .map_err(|_| DiagramError::MalformedCode(format!("`X({})` needs 4 labels", &body[..close])))?;
            tuples.push(tuple);
            rest = &body[close + 1..];
        }
    }
    PlanarDiagram::from_pd_tuples(&tuples)
}

fn preview(s: &str) -> &str {
    let end = s.char_indices().nth(12).map_or(s.len(), |(i, _)| i);
    &s[..end]
}

pub fn parse_dt(text: &str) -> Result<PlanarDiagram, DiagramError> {
    let mut entries = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
        if tok.is_empty() {
            continue;
        }
        let v: i64 = tok
            .parse()
            .map_err(|_| DiagramError::MalformedCode(format!("`{tok}` is not an integer")))?;
        if v == 0 || v % 2 != 0 {
            return Err(DiagramError::MalformedCode(format!(
                "DT entry {v} is not a nonzero even integer"
            )));
        }
        entries.push(v);
    }
    let n = entries.len();
    if n == 0 {
        return Ok(PlanarDiagram::unknot());
    }
    let mut seen = vec![false; n];
    for &v in &entries {
        let k = (v.unsigned_abs() / 2) as usize;
        if k > n || seen[k - 1] {
            return Err(DiagramError::MalformedCode(format!(
                "DT entries must be a permutation of 2..={}",
                2 * n
            )));
        }
        seen[k - 1] = true;
    }
    if n > DT_CROSSING_CAP {
        return Err(DiagramError::TooLarge(format!(
            "DT realization is capped at {DT_CROSSING_CAP} crossings"
        )));
    }
    realize_dt(&entries)
}

/// Passages are numbered `1..=2n` along the knot; the arc leaving passage `v`
/// is labelled `v`, so passage `v` is entered by arc `v - 1` (arc `2n` for `v = 1`).
fn realize_dt(entries: &[i64]) -> Result<PlanarDiagram, DiagramError> {
    let n = entries.len();
    let m = 2 * n as u32;
    let arc_in = |v: u32| if v == 1 { m } else { v - 1 };
    // (under passage, over passage) for each crossing
    let passages: Vec<(u32, u32)> = entries
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let odd = 2 * i as u32 + 1;
            let even = a.unsigned_abs() as u32;
            if a > 0 {
                (even, odd)
            } else {
                (odd, even)
            }
        })
        .collect();
    let build = |mask: u64| -> Vec<Crossing> {
        passages
            .iter()
            .enumerate()
            .map(|(i, &(u, o))| {
                let positive = mask & (1 << i) == 0;
                if positive {
                    Crossing {
                        arcs: [arc_in(u), o, u, arc_in(o)],
                        sign: Sign::Positive,
                    }
                } else {
                    Crossing {
                        arcs: [arc_in(u), arc_in(o), u, o],
                        sign: Sign::Negative,
                    }
                }
            })
            .collect()
    };
    // The crossing containing passage 1 is fixed positive; this picks one of the
    // two mirror-image embeddings and with it the chirality convention.
    for mask in (0..(1u64 << n)).step_by(2) {
        let d = PlanarDiagram::from_crossings_unchecked(build(mask));
        if d.face_set().len() == n + 2 {
            return Ok(d);
        }
    }
    Err(DiagramError::UnrealizableCode(
        entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "),
    ))
}

/// A diagram read from a file line, with its optional name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedDiagram {
    pub name: Option<String>,
    pub diagram: PlanarDiagram,
}

/// Parses one `[name:] code` line; codes containing `X` are PD, others DT.
pub fn parse_line(line: &str) -> Result<NamedDiagram, DiagramError> {
    let (name, code) = match line.split_once(':') {
        Some((head, tail)) if !head.contains('(') => (Some(head.trim().to_string()), tail.trim()),
        _ => (None, line.trim()),
    };
    let mut diagram = if code.contains('X') {
        parse_pd(code)?
    } else {
        parse_dt(code)?
    };
    if let Some(n) = &name {
        diagram = diagram.with_name(n.clone());
    }
    Ok(NamedDiagram { name, diagram })
}

/// Parses a diagram file, skipping blank and `#` comment lines.
pub fn parse_diagram_file(text: &str) -> Result<Vec<NamedDiagram>, (usize, DiagramError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_line(l).map_err(|e| (i + 1, e)))
        .collect()
}
