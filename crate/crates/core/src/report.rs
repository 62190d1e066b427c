//! Deterministic JSON and aligned-text reports shared by the command line
//! and the browser demo.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::coalgebra::{normalized_chains, DgCoalgebra, DgCoalgebraMap, QisVerdict};
use crate::cobar::h0_presentation;
use crate::error::Result;
use crate::homology::{
    antipode_on_grouplikes, cobar_homology, compare_invertibility, omega_qis_check, Bounds, CobarHomologyReport,
    Overall,
};
use crate::lie::{
    free_lie_dims, free_lie_dims_by_length, nogo_witness, pbw_check, witt_formula, LieTable, NogoVerdict,
};
use crate::ncgroebner::GrouplikeVerdict;
use crate::simplicial::{GroupTable, SimplicialSet};

/// How a command should end: plain success, a failed verdict, or a verdict
/// that the bounds could not settle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Success,
    VerdictFail,
    Indeterminate,
}

impl From<Overall> for Status {
    fn from(o: Overall) -> Self {
        match o {
            Overall::Pass => Status::Success,
            Overall::Fail => Status::VerdictFail,
            Overall::Indeterminate => Status::Indeterminate,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub status: Status,
}

impl Report {
    pub fn json_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("reports serialize")
    }
}

/// Largest group-like closure explored before giving up.
pub const DEFAULT_MAX_ELEMENTS: usize = 32;

const KAN_CAVEAT: &str = "this simplicial set need not be Kan: H0 of its cobar construction is a monoid algebra, \
and group-like elements are only guaranteed to be invertible for singular complexes of spaces";

fn line(text: &mut String, label: &str, value: impl std::fmt::Display) {
    let _ = writeln!(text, "{label:<22} {value}");
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Simplex counts per degree and the validation outcome.
pub fn build_summary(s: &SimplicialSet) -> Report {
    let v = s.validate();
    let counts: Vec<usize> = (1..=s.top_degree()).map(|n| s.count(n)).collect();
    let mut text = String::new();
    line(&mut text, "nondegenerate simplices", format!("{counts:?} in degrees 1..={}", s.top_degree()));
    line(&mut text, "truncated", s.is_truncated());
    line(&mut text, "validation", &v);
    let json = json!({
        "counts": counts,
        "dimension_cap": s.dimension_cap(),
        "truncated": s.is_truncated(),
        "valid": v.is_valid(),
        "violations": v.violations,
    });
    Report { json, text, status: if v.is_valid() { Status::Success } else { Status::VerdictFail } }
}

/// Dimensions, axiom checks and cocommutativity of normalized chains.
pub fn chains_summary(c: &DgCoalgebra) -> Report {
    let axioms = c.check_axioms();
    let cocommutative = c.check_cocommutative();
    let mut text = String::new();
    line(&mut text, "reduced chain dims", format!("{:?}", c.dims()));
    line(&mut text, "axioms", &axioms);
    line(
        &mut text,
        "cocommutative",
        match &cocommutative {
            Ok(()) => "yes".to_string(),
            Err(e) => format!("no ({e})"),
        },
    );
    let json = json!({
        "dims": c.dims(),
        "degree_cap": c.degree_cap(),
        "complete": c.is_complete(),
        "axioms_hold": axioms.passed(),
        "axiom_violations": axioms.violations,
        "cocommutative": cocommutative.is_ok(),
    });
    Report { json, text, status: if axioms.passed() { Status::Success } else { Status::VerdictFail } }
}

/// Fundamental group from the group-like elements of `H₀(ΩC)`.
pub fn pi1_report(s: &SimplicialSet, bounds: Bounds, max_elements: usize) -> Result<Report> {
    let c = normalized_chains(s)?;
    let p = h0_presentation(&c)?;
    let a = p.algebra(bounds.groebner);
    let summary = a.summary();
    let dim = a.dimension(bounds.groebner);
    let closure = a.grouplike_closure(max_elements);
    let names = &p.generators;
    let elements: Vec<String> = closure.elements.iter().map(|g| g.format(names)).collect();
    let antipode: Vec<Option<String>> =
        antipode_on_grouplikes(&a, &closure.elements).into_iter().map(|x| x.map(|g| g.format(names))).collect();
    let free = a.groebner_basis().is_empty();
    let (structure, closed, order) = match closure.verdict {
        GrouplikeVerdict::Group(n) => ("group", true, Some(n)),
        GrouplikeVerdict::Monoid(n) => ("monoid", true, Some(n)),
        GrouplikeVerdict::Unbounded { .. } => ("monoid", false, None),
    };
    let invertible = closure.inverses.iter().filter(|x| x.is_some()).count();
    let caveat = (structure != "group").then_some(KAN_CAVEAT);

    let mut text = String::new();
    line(&mut text, "fact", "fundamental group as the group-like elements of H0 of the cobar construction");
    line(&mut text, "generators", join(names));
    if free {
        line(&mut text, "presentation", format!("free on {} generator(s)", names.len()));
    } else {
        line(&mut text, "relations", join(&p.format_relations()));
        line(&mut text, "groebner basis", join(&summary.groebner_basis));
    }
    line(&mut text, "groebner complete", summary.complete);
    line(&mut text, "H0 dimension", dim.verdict);
    let closure_text = match closure.verdict {
        GrouplikeVerdict::Group(1) => "trivial group".to_string(),
        GrouplikeVerdict::Group(n) => format!("group of order {n}"),
        GrouplikeVerdict::Monoid(n) => format!("monoid of order {n} ({invertible} invertible)"),
        GrouplikeVerdict::Unbounded { found, invertible: 1 } => {
            format!("monoid (no inverses found among {found} elements, closure not exhausted)")
        }
        GrouplikeVerdict::Unbounded { found, invertible } => {
            format!("monoid ({invertible} of {found} elements invertible, closure not exhausted)")
        }
    };
    line(&mut text, "group-like closure", &closure_text);
    line(&mut text, "verified group-like", closure.verified);
    if let Some(table) = closure.group_table() {
        let _ = writeln!(text, "elements:");
        for (i, e) in elements.iter().enumerate() {
            let _ = writeln!(text, "  g{i} = {e}");
        }
        let _ = writeln!(text, "multiplication table (row * column):");
        for row in &table {
            let _ = writeln!(text, "  {}", row.iter().map(|j| format!("g{j:<3}")).collect::<String>().trim_end());
        }
    }
    if let Some(c) = caveat {
        line(&mut text, "caveat", c);
    }

    let status = if closure.certified && closed { Status::Success } else { Status::Indeterminate };
    let json = json!({
        "fact": "fundamental group as the group-like elements of H0 of the cobar construction",
        "presentation": summary,
        "free": free,
        "dimension": dim,
        "grouplike": {
            "verdict": closure.verdict,
            "structure": structure,
            "closed": closed,
            "order": order,
            "elements": elements,
            "table": closure.table,
            "inverses": closure.inverses,
            "invertible": invertible,
            "verified": closure.verified,
            "certified": closure.certified,
        },
        "antipode": antipode,
        "caveat": caveat,
        "bounds": bounds,
    });
    Ok(Report { json, text, status })
}

fn homology_text(r: &CobarHomologyReport, text: &mut String) {
    let _ = writeln!(text, "{:>4}  {:>6}  {:<6}  note", "n", "dim", "exact");
    for d in &r.degrees {
        let _ = writeln!(text, "{:>4}  {:>6}  {:<6}  {}", d.n, d.dim, d.exact, d.note.as_deref().unwrap_or(""));
    }
}

/// `H_n(ΩC)` through the degree bound, each value flagged exact or filtered.
pub fn loop_homology_report(c: &DgCoalgebra, bounds: Bounds) -> Result<Report> {
    let r = cobar_homology(c, bounds)?;
    let mut text = String::new();
    line(&mut text, "fact", "loop-space homology as the homology of the cobar construction");
    line(&mut text, "bounds", format!("N={} L={} Dg={}", bounds.degree, bounds.word, bounds.groebner));
    homology_text(&r, &mut text);
    let status = if r.all_exact() { Status::Success } else { Status::Indeterminate };
    let json = json!({
        "fact": "loop-space homology as the homology of the cobar construction",
        "dims": r.dims(),
        "report": r,
    });
    Ok(Report { json, text, status })
}

fn qis_overall(q: &QisVerdict) -> Overall {
    if q.degrees.iter().any(|d| d.exact && !d.iso) {
        Overall::Fail
    } else if q.degrees.iter().all(|d| d.exact && d.iso) {
        Overall::Pass
    } else {
        Overall::Indeterminate
    }
}

/// Plain quasi-isomorphism and Ω-quasi-isomorphism verdicts side by side,
/// with the group-like invertibility comparison of `H₀`.
pub fn compare_report(f: &DgCoalgebraMap, bounds: Bounds, max_elements: usize) -> Result<Report> {
    let qis = f.is_quasi_isomorphism(bounds.degree);
    let qis_overall = qis_overall(&qis);
    let omega = omega_qis_check(f, bounds)?;
    let inv = compare_invertibility(f, bounds, max_elements)?;

    let mut text = String::new();
    line(&mut text, "fact", "Ω-quasi-isomorphisms are quasi-isomorphisms, not conversely");
    line(&mut text, "bounds", format!("N={} L={} Dg={}", bounds.degree, bounds.word, bounds.groebner));
    let _ = writeln!(text, "quasi-isomorphism: {qis_overall}");
    for d in &qis.degrees {
        let _ = writeln!(text, "  H{:<3} {:>4} -> {:<4} iso={:<5} exact={}", d.n, d.dim_src, d.dim_dst, d.iso, d.exact);
    }
    let _ = writeln!(text, "Ω-quasi-isomorphism: {}", omega.overall);
    let _ = writeln!(
        text,
        "  H0   {} -> {} well-defined={} injective={} surjective={} certified={}",
        omega.h0.dim_src,
        omega.h0.dim_dst,
        omega.h0.well_defined,
        omega.h0.injective,
        omega.h0.surjective,
        omega.h0.certified
    );
    for d in &omega.degrees {
        let dims = match (d.dim_src, d.dim_dst) {
            (Some(a), Some(b)) => format!("{a} -> {b}"),
            _ => "-".into(),
        };
        let iso = d.iso.map_or("-".to_string(), |b| b.to_string());
        let _ = writeln!(text, "  H{:<3} {dims} iso={iso} exact={} {}", d.n, d.exact, d.note.as_deref().unwrap_or(""));
    }
    for n in &omega.notes {
        let _ = writeln!(text, "  note: {n}");
    }
    let _ = writeln!(
        text,
        "group-likes: source {} found ({} invertible), target {} found ({} invertible)",
        inv.src_found, inv.src_invertible, inv.dst_found, inv.dst_invertible
    );
    let caveat = (!inv.gained_inverses.is_empty()).then_some(KAN_CAVEAT);
    if !inv.gained_inverses.is_empty() {
        let _ = writeln!(text, "  gain inverses along the map: {}", inv.gained_inverses.join(", "));
        line(&mut text, "caveat", KAN_CAVEAT);
    }
    let json = json!({
        "fact": "Ω-quasi-isomorphisms are quasi-isomorphisms, not conversely",
        "quasi_isomorphism": { "overall": qis_overall, "degrees": qis.degrees },
        "omega_quasi_isomorphism": omega,
        "invertibility": inv,
        "caveat": caveat,
        "bounds": bounds,
    });
    Ok(Report { json, text, status: omega.overall.into() })
}

/// Whether `k[G] ≅ S(H₀(ℒC))` could hold, with the dimension signature.
pub fn nogo_report(c: &DgCoalgebra, group: &GroupTable, bounds: Bounds) -> Result<Report> {
    let w = nogo_witness(c, group.order, bounds.word, bounds.groebner)?;
    let mut text = String::new();
    line(&mut text, "fact", "no functor recovers group algebras from cocommutative coalgebras through Lie models");
    line(&mut text, "group order", w.group_order);
    line(&mut text, "dim H0 of Lie model", format!("{}{}", w.h0_lie, if w.h0_exact { "" } else { " (lower bound)" }));
    line(&mut text, "dim S^k(H0), k=0..", join(&w.symmetric_powers));
    line(&mut text, "cumulative", join(&w.cumulative));
    if let Some(k) = w.exceeds_at {
        line(&mut text, "exceeds |G| at", format!("symmetric power {k}"));
    }
    line(
        &mut text,
        "verdict",
        match w.verdict {
            NogoVerdict::Impossible => "impossible",
            NogoVerdict::Possible => "possible",
        },
    );
    line(&mut text, "reason", &w.reason);
    let status = match (w.verdict, w.certified) {
        (NogoVerdict::Impossible, _) => Status::VerdictFail,
        (NogoVerdict::Possible, true) => Status::Success,
        (NogoVerdict::Possible, false) => Status::Indeterminate,
    };
    let json = json!({
        "fact": "no functor recovers group algebras from cocommutative coalgebras through Lie models",
        "witness": w,
        "bounds": bounds,
    });
    Ok(Report { json, text, status })
}

/// Free graded Lie algebra dimensions with the necklace count (for equal
/// even degrees) and the PBW comparison.
pub fn free_lie_report(degrees: &[usize], max_degree: usize) -> Report {
    let by_degree = free_lie_dims(degrees, max_degree);
    let by_length = free_lie_dims_by_length(degrees, max_degree);
    let uniform_even = !degrees.is_empty() && degrees.iter().all(|&d| d == degrees[0] && d % 2 == 0);
    let necklace: Option<Vec<u64>> =
        uniform_even.then(|| (1..=max_degree as u64).map(|n| witt_formula(degrees.len() as u64, n)).collect());
    let names: Vec<String> = (0..degrees.len()).map(|i| format!("g{i}")).collect();
    let pbw = pbw_check(&LieTable::free(degrees, &names, max_degree), max_degree);

    let mut text = String::new();
    line(&mut text, "generator degrees", join(degrees));
    line(&mut text, "dims by degree 0..", join(&by_degree));
    line(&mut text, "dims by length 1..", join(&by_length));
    if let Some(n) = &necklace {
        line(&mut text, "necklace formula", join(n));
    }
    line(&mut text, "dim S(L) by degree", join(&pbw.symmetric));
    line(&mut text, "dim U(L) by degree", join(&pbw.enveloping));
    line(&mut text, "PBW agrees", pbw.passed());
    let json = json!({
        "degrees": degrees,
        "dims_by_degree": by_degree,
        "dims_by_length": by_length,
        "necklace": necklace,
        "pbw": pbw,
    });
    let ok = pbw.passed() && necklace.as_ref().is_none_or(|n| n.iter().zip(&by_length).all(|(a, b)| *a as usize == *b));
    Report { json, text, status: if ok { Status::Success } else { Status::VerdictFail } }
}
