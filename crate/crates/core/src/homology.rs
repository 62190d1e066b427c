//! Homology of cobar truncations and the two map verdicts: plain
//! quasi-isomorphism and Ω-quasi-isomorphism (`Ωf` a quasi-isomorphism).

use serde::Serialize;

use crate::coalgebra::{DgCoalgebra, DgCoalgebraMap};
use crate::cobar::{cobar, h0_presentation, CobarTruncation, H0Presentation};
use crate::error::{Error, Result};
use crate::linalg::{homology_at, induced_map_on_homology, SubquotientBasis};
use crate::ncgroebner::{DimensionVerdict, FpAlgebra, GrouplikeClosure, MapVerdict};
use crate::poly::Poly;

/// Truncation bounds: cobar degree `N`, word length `L`, Gröbner degree `D_g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    #[serde(rename = "N")]
    pub degree: usize,
    #[serde(rename = "L")]
    pub word: usize,
    #[serde(rename = "Dg")]
    pub groebner: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { degree: 4, word: 8, groebner: 8 }
    }
}

/// Homology of the truncation in degree `n <= N`.
pub fn truncation_homology(t: &CobarTruncation, n: usize) -> SubquotientBasis {
    homology_at(t.differential(n + 1), t.differential(n)).expect("cobar truncation is a complex")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyDegree {
    pub n: usize,
    pub dim: usize,
    /// The value is the homology of `ΩC`, not just of the truncation.
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CobarHomologyReport {
    pub degrees: Vec<HomologyDegree>,
    pub h0_dimension: DimensionVerdict,
    pub bounds: Bounds,
}

impl CobarHomologyReport {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn all_exact(&self) -> bool {
        self.degrees.iter().all(|d| d.exact)
    }
}

/// `H_n(ΩC)` for `n <= N`. Degree 0 always goes through the finite
/// presentation of `H₀`; higher degrees use the word-length truncation and
/// are flagged exact only when the truncation provably loses nothing.
pub fn cobar_homology(c: &DgCoalgebra, bounds: Bounds) -> Result<CobarHomologyReport> {
    let presentation = h0_presentation(c)?;
    let h0 = presentation.algebra(bounds.groebner).dimension(bounds.groebner);
    let mut degrees = vec![match h0.verdict {
        DimensionVerdict::Finite(d) => HomologyDegree { n: 0, dim: d, exact: true, note: None },
        DimensionVerdict::AtLeast(d) => HomologyDegree {
            n: 0,
            dim: d,
            exact: false,
            note: Some(format!("at least {d}; irreducible words per degree {:?}", h0.counts)),
        },
    }];
    if bounds.degree == 0 {
        return Ok(CobarHomologyReport { degrees, h0_dimension: h0.verdict, bounds });
    }
    let t = cobar(c, bounds.degree, bounds.word)?;
    let coarser: Vec<CobarTruncation> = (1..=2)
        .filter(|k| bounds.word > *k)
        .map(|k| cobar(c, bounds.degree, bounds.word - k))
        .collect::<Result<_>>()?;
    for n in 1..=bounds.degree {
        let dim = truncation_homology(&t, n).dimension();
        let exact = t.is_exact(n);
        let note = (!exact).then(|| {
            let previous: Vec<usize> = coarser.iter().map(|s| truncation_homology(s, n).dimension()).collect();
            let stable = previous.iter().all(|&d| d == dim) && previous.len() == 2;
            let reason =
                if c.dim(1) > 0 { "word-length filtered value" } else { "coalgebra truncated too low for this degree" };
            format!("{reason}; values at L-1, L-2: {previous:?} ({})", if stable { "stable" } else { "not stable" })
        });
        degrees.push(HomologyDegree { n, dim, exact, note });
    }
    Ok(CobarHomologyReport { degrees, h0_dimension: h0.verdict, bounds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    Pass,
    Fail,
    Indeterminate,
}

impl std::fmt::Display for Overall {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Overall::Pass => "pass",
            Overall::Fail => "fail",
            Overall::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaDegree {
    pub n: usize,
    pub dim_src: Option<usize>,
    pub dim_dst: Option<usize>,
    pub iso: Option<bool>,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaQisVerdict {
    pub h0: MapVerdict,
    pub degrees: Vec<OmegaDegree>,
    pub overall: Overall,
    pub bounds: Bounds,
    pub notes: Vec<String>,
}

/// Decides whether `Ωf` is a quasi-isomorphism, within bounds.
///
/// `H₀` is compared through the finite presentations; higher degrees through
/// `Ωf` on word-length truncations. A certified `H₀` failure ends the check.
pub fn omega_qis_check(f: &DgCoalgebraMap, bounds: Bounds) -> Result<OmegaQisVerdict> {
    let (s, t) = (f.source(), f.target());
    let ps = h0_presentation(s)?;
    let pt = h0_presentation(t)?;
    let (a, b) = (ps.algebra(bounds.groebner), pt.algebra(bounds.groebner));
    let h0 = a.map_check(&b, &H0Presentation::map_images(f));
    let mut notes = Vec::new();
    let h0_refuted = !h0.well_defined || (h0.certified && !h0.is_iso());
    let h0_certified_iso = h0.certified && h0.is_iso();

    if f.is_isomorphism() {
        notes.push("the map is an isomorphism of dg coalgebras, so Ωf is an isomorphism in every degree".into());
        let degrees = (1..=bounds.degree)
            .map(|n| OmegaDegree { n, dim_src: None, dim_dst: None, iso: Some(true), exact: true, note: None })
            .collect();
        return Ok(OmegaQisVerdict { h0, degrees, overall: Overall::Pass, bounds, notes });
    }
    if h0_refuted {
        notes.push(format!("H₀ already differs (dimensions {} vs {}), higher degrees skipped", h0.dim_src, h0.dim_dst));
        let degrees = (1..=bounds.degree)
            .map(|n| OmegaDegree {
                n,
                dim_src: None,
                dim_dst: None,
                iso: None,
                exact: false,
                note: Some("skipped".into()),
            })
            .collect();
        return Ok(OmegaQisVerdict { h0, degrees, overall: Overall::Fail, bounds, notes });
    }

    let degrees = match (cobar(s, bounds.degree, bounds.word), cobar(t, bounds.degree, bounds.word)) {
        (Ok(ts), Ok(tt)) => higher_degrees(f, &ts, &tt, bounds.degree)?,
        (Err(Error::TruncationTooLarge { degree, words, limit }), _)
        | (_, Err(Error::TruncationTooLarge { degree, words, limit })) => {
            notes.push(format!(
                "cobar truncation too large ({words} words in degree {degree}, limit {limit}); lower the word bound"
            ));
            (1..=bounds.degree)
                .map(|n| OmegaDegree {
                    n,
                    dim_src: None,
                    dim_dst: None,
                    iso: None,
                    exact: false,
                    note: Some("skipped".into()),
                })
                .collect()
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let refuted = degrees.iter().any(|d| d.exact && d.iso == Some(false));
    let certified = h0_certified_iso && degrees.iter().all(|d| d.exact && d.iso == Some(true));
    let overall = if refuted {
        Overall::Fail
    } else if certified {
        Overall::Pass
    } else {
        Overall::Indeterminate
    };
    if !h0.certified {
        notes.push(format!(
            "H₀ comparison is bounded by word-degree {} (surjective up to bound: {}, injective up to bound: {})",
            h0.bound, h0.surjective, h0.injective
        ));
    }
    Ok(OmegaQisVerdict { h0, degrees, overall, bounds, notes })
}

fn higher_degrees(
    f: &DgCoalgebraMap,
    ts: &CobarTruncation,
    tt: &CobarTruncation,
    top: usize,
) -> Result<Vec<OmegaDegree>> {
    let maps: Vec<_> = (0..=top + 1).map(|n| ts.map_matrix(tt, f, n)).collect();
    for n in 1..=top + 1 {
        if tt.differential(n).mul(&maps[n]) != maps[n - 1].mul(ts.differential(n)) {
            return Err(Error::NotChainMap(format!("Ωf does not commute with D in degree {n}")));
        }
    }
    let mut out = Vec::new();
    for n in 1..=top {
        let hs = truncation_homology(ts, n);
        let ht = truncation_homology(tt, n);
        let induced = induced_map_on_homology(&maps[n], &hs, &ht)?;
        let iso = hs.dimension() == ht.dimension() && induced.is_invertible();
        let exact = ts.is_exact(n) && tt.is_exact(n);
        out.push(OmegaDegree {
            n,
            dim_src: Some(hs.dimension()),
            dim_dst: Some(ht.dimension()),
            iso: Some(iso),
            exact,
            note: (!exact).then(|| "word-length filtered".to_string()),
        });
    }
    Ok(out)
}

/// Inverse of each group-like, solved in normal-form coordinates and
/// verified on both sides. `None` marks an element with no inverse.
pub fn antipode_on_grouplikes(a: &FpAlgebra, grouplikes: &[Poly]) -> Vec<Option<Poly>> {
    grouplikes.iter().map(|g| a.two_sided_inverse(g)).collect()
}

/// Invertibility counts of the group-like closures on both sides of a map,
/// with one-sided inverses of the seed images in the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvertibilityComparison {
    pub src_found: usize,
    pub src_invertible: usize,
    pub dst_found: usize,
    pub dst_invertible: usize,
    /// Seeds `1 + x` whose image gains a one-sided inverse in the target
    /// while having none in the source (up to the bound).
    pub gained_inverses: Vec<String>,
}

pub fn compare_invertibility(
    f: &DgCoalgebraMap,
    bounds: Bounds,
    max_elements: usize,
) -> Result<InvertibilityComparison> {
    let ps = h0_presentation(f.source())?;
    let pt = h0_presentation(f.target())?;
    let (a, b) = (ps.algebra(bounds.groebner), pt.algebra(bounds.groebner));
    let (ca, cb) = (a.grouplike_closure(max_elements), b.grouplike_closure(max_elements));
    let images = H0Presentation::map_images(f);
    let mut gained = Vec::new();
    for (l, name) in ps.generators.iter().enumerate() {
        let g = &Poly::one() + &Poly::letter(l as u32);
        let src_has = a.left_inverse(&g).is_some() || a.right_inverse(&g).is_some();
        let img = b.normal_form(&(&Poly::one() + &images[l]));
        let dst_has = b.left_inverse(&img).is_some() || b.right_inverse(&img).is_some();
        if dst_has && !src_has {
            gained.push(format!("1 + {name}"));
        }
    }
    let count = |c: &GrouplikeClosure| c.inverses.iter().filter(|x| x.is_some()).count();
    Ok(InvertibilityComparison {
        src_found: ca.elements.len(),
        src_invertible: count(&ca),
        dst_found: cb.elements.len(),
        dst_invertible: count(&cb),
        gained_inverses: gained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{chains_map, normalized_chains};
    use crate::simplicial::{collapse_map, minimal_sphere, nerve, nerve_map, GroupTable, SimplicialSet};

    #[test]
    fn sphere_loop_homology() {
        let c = normalized_chains(&minimal_sphere(2).unwrap()).unwrap();
        let r = cobar_homology(&c, Bounds { degree: 5, word: 5, groebner: 8 }).unwrap();
        assert_eq!(r.dims(), vec![1; 6]);
        assert!(r.all_exact());
        let c = normalized_chains(&minimal_sphere(3).unwrap()).unwrap();
        let r = cobar_homology(&c, Bounds { degree: 6, word: 6, groebner: 8 }).unwrap();
        assert_eq!(r.dims(), vec![1, 0, 1, 0, 1, 0, 1]);
        assert!(r.all_exact());
    }

    #[test]
    fn point_loop_homology() {
        let c = normalized_chains(&SimplicialSet::point()).unwrap();
        let r = cobar_homology(&c, Bounds { degree: 2, word: 2, groebner: 4 }).unwrap();
        assert_eq!(r.dims(), vec![1, 0, 0]);
        assert!(r.all_exact());
    }

    #[test]
    fn nerve_h0_is_group_algebra_and_higher_degrees_are_filtered() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(2), 3).unwrap()).unwrap();
        let r = cobar_homology(&c, Bounds { degree: 1, word: 4, groebner: 6 }).unwrap();
        assert_eq!(r.degrees[0].dim, 2);
        assert!(r.degrees[0].exact);
        assert!(!r.degrees[1].exact);
        assert!(r.degrees[1].note.is_some());
    }

    #[test]
    fn identity_on_z2_nerve_passes() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(2), 3).unwrap()).unwrap();
        let v = omega_qis_check(&DgCoalgebraMap::identity(&c), Bounds::default()).unwrap();
        assert_eq!(v.overall, Overall::Pass);
        assert!(v.h0.is_iso() && v.h0.certified);
    }

    #[test]
    fn sphere_collapse_fails_in_degree_one() {
        let f = chains_map(&collapse_map(&minimal_sphere(2).unwrap())).unwrap();
        let v = omega_qis_check(&f, Bounds { degree: 3, word: 3, groebner: 4 }).unwrap();
        assert_eq!(v.overall, Overall::Fail);
        let d1 = &v.degrees[0];
        assert_eq!((d1.dim_src, d1.dim_dst, d1.iso, d1.exact), (Some(1), Some(0), Some(false), true));
    }

    #[test]
    fn nerve_inclusion_fails_at_h0() {
        let f = chains_map(&nerve_map(&GroupTable::cyclic(2), &GroupTable::cyclic(4), &[0, 2], 3).unwrap()).unwrap();
        let v = omega_qis_check(&f, Bounds::default()).unwrap();
        assert_eq!(v.overall, Overall::Fail);
        assert_eq!(v.h0.dim_src, DimensionVerdict::Finite(2));
        assert_eq!(v.h0.dim_dst, DimensionVerdict::Finite(4));
        assert!(v.h0.well_defined && v.h0.injective && !v.h0.surjective);
        // rationally both nerves are acyclic, so plain homology cannot tell
        assert!(f.is_quasi_isomorphism(2).all_iso());
    }

    #[test]
    fn antipodes() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(3), 2).unwrap()).unwrap();
        let a = h0_presentation(&c).unwrap().algebra(8);
        let closure = a.grouplike_closure(64);
        let inv = antipode_on_grouplikes(&a, &closure.elements);
        assert!(inv.iter().all(Option::is_some));
        assert_eq!(inv[0].as_ref(), Some(&Poly::one()));
        let free = h0_presentation(&normalized_chains(&minimal_sphere(1).unwrap()).unwrap()).unwrap().algebra(8);
        let g = &Poly::one() + &Poly::letter(0);
        assert_eq!(antipode_on_grouplikes(&free, &[g]), vec![None]);
    }
}
