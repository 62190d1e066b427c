//! Browser demo: loop-space homology, fundamental groups and free Lie
//! dimensions, each returning a JSON envelope
//! `{"ok": true, "report": …, "text": …}` or `{"ok": false, "error": …}`.

use cobar::coalgebra::{normalized_chains, DgCoalgebra};
use cobar::corpus;
use cobar::homology::Bounds;
use cobar::report::{free_lie_report, loop_homology_report, pi1_report, Report};
use cobar::simplicial::{minimal_sphere, nerve, GroupTable, SimplicialSet};
use cobar::{Error, Result};
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest bounds accepted from the page, to keep the tab responsive.
const MAX_DEGREE: usize = 8;
const MAX_WORD: usize = 10;
const MAX_ELEMENTS: usize = 24;

fn envelope(r: Result<Report>) -> String {
    let v = match r {
        Ok(r) => json!({ "ok": true, "status": r.status, "report": r.json, "text": r.text }),
        Err(e) => json!({ "ok": false, "error": e.to_string() }),
    };
    v.to_string()
}

/// `sphere:<n>`, `nerve:<group>[:<trunc>]`, or simplicial-set JSON.
fn parse_space(spec: &str) -> Result<SimplicialSet> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        return SimplicialSet::from_json_str(spec);
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let number = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("expected a number, got {s:?}")));
    match parts.as_slice() {
        ["sphere", n] => minimal_sphere(number(n)?),
        ["nerve", g] => nerve(&GroupTable::by_name(g)?, 2),
        ["nerve", g, t] => nerve(&GroupTable::by_name(g)?, number(t)?),
        _ => Err(Error::Parse(format!("unrecognised space {spec:?}; try sphere:2 or nerve:z3"))),
    }
}

/// A corpus name, a space spec, or coalgebra JSON.
fn parse_coalgebra(spec: &str) -> Result<DgCoalgebra> {
    let spec = spec.trim();
    if spec.starts_with('{') && spec.contains("\"basis\"") {
        return DgCoalgebra::from_json_str(spec);
    }
    match corpus::by_name(spec) {
        Ok(c) => Ok(c),
        Err(_) if spec.starts_with('{') || spec.contains(':') => normalized_chains(&parse_space(spec)?),
        Err(e) => Err(e),
    }
}

fn check_bound(name: &str, value: usize, max: usize) -> Result<()> {
    if value == 0 || value > max {
        return Err(Error::BoundTooSmall(format!("{name} must lie in 1..={max} in the browser demo")));
    }
    Ok(())
}

pub fn loop_space_homology_report(input: &str, degree: usize, word: usize) -> Result<Report> {
    check_bound("degree bound", degree, MAX_DEGREE)?;
    check_bound("word bound", word, MAX_WORD)?;
    loop_homology_report(&parse_coalgebra(input)?, Bounds { degree, word, groebner: 8 })
}

pub fn fundamental_group_report(space: &str) -> Result<Report> {
    pi1_report(&parse_space(space)?, Bounds::default(), MAX_ELEMENTS)
}

pub fn free_lie_dimensions_report(degrees: &str, max_degree: usize) -> Result<Report> {
    check_bound("maximal degree", max_degree, 12)?;
    let degrees = degrees
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().ok().filter(|&d| d > 0))
        .collect::<Option<Vec<_>>>()
        .filter(|d| !d.is_empty() && d.len() <= 4)
        .ok_or_else(|| Error::Parse("degrees: one to four positive integers, e.g. \"2, 2\"".into()))?;
    Ok(free_lie_report(&degrees, max_degree))
}

/// Homology of the cobar construction through `degree`.
#[wasm_bindgen]
pub fn loop_space_homology(input: &str, degree: usize, word: usize) -> String {
    envelope(loop_space_homology_report(input, degree, word))
}

/// Fundamental group as the group-like elements of `H₀` of the cobar construction.
#[wasm_bindgen]
pub fn fundamental_group(space: &str) -> String {
    envelope(fundamental_group_report(space))
}

/// Free graded Lie algebra dimensions with the PBW comparison.
#[wasm_bindgen]
pub fn free_lie_dimensions(degrees: &str, max_degree: usize) -> String {
    envelope(free_lie_dimensions_report(degrees, max_degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn sphere_loop_homology() {
        let v = parse(loop_space_homology("sphere:2", 4, 6));
        assert_eq!(v["ok"], true);
        assert_eq!(v["report"]["dims"], json!([1, 1, 1, 1, 1]));
        assert_eq!(parse(loop_space_homology("cp2", 3, 5))["report"]["dims"], json!([1, 1, 0, 0]));
    }

    #[test]
    fn nerve_fundamental_group() {
        let v = parse(fundamental_group("nerve:s3"));
        assert_eq!(v["report"]["grouplike"]["order"], 6);
        assert_eq!(v["status"], "success");
    }

    #[test]
    fn free_lie() {
        let v = parse(free_lie_dimensions("2, 2", 6));
        assert_eq!(v["report"]["dims_by_length"], json!([2, 1, 2, 3, 6, 9]));
    }

    #[test]
    fn errors_are_reported() {
        assert_eq!(parse(fundamental_group("klein bottle"))["ok"], false);
        assert_eq!(parse(loop_space_homology("sphere:2", 50, 6))["ok"], false);
        assert_eq!(parse(free_lie_dimensions("0", 6))["ok"], false);
    }
}
