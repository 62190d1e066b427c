//! The cobar construction on a connected dg coalgebra.
//!
//! `ΩC` is the tensor algebra on letters `s⁻¹c` for the basis of `C̄`, with
//! `|s⁻¹c| = |c| - 1` and the derivation differential
//!
//! ```text
//! D(s⁻¹c) = -s⁻¹∂c + Σ (-1)^{|c'|} s⁻¹c' s⁻¹c''      (Δ̄c = Σ c' ⊗ c'')
//! D(ab)   = D(a) b + (-1)^{|a|} a D(b)
//! ```
//!
//! With this sign the degree-0 relation of the nerve of `Z/2` reads
//! `x.x + 2*x`, so `1 + x` squares to `1` and every `1 + x_g` is group-like
//! for `∇(x) = x⊗1 + 1⊗x + x⊗x`.

use std::collections::HashMap;

use serde::Serialize;

use crate::coalgebra::{sign, BasisId, DgCoalgebra, DgCoalgebraMap};
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseMatrix, SparseVec};
use crate::ncgroebner::FpAlgebra;
use crate::poly::{shifted_grouplike_coproduct, Poly, PolyTensor, Word};

/// Largest number of words allowed in one degree of a truncation.
pub const DEFAULT_WORD_LIMIT: usize = 200_000;

/// The full (untruncated) cobar differential on letters.
#[derive(Clone, Debug)]
pub struct Cobar {
    coalgebra: DgCoalgebra,
    letters: Vec<BasisId>,
    letter_names: Vec<String>,
    letter_degree: Vec<usize>,
    letter_index: HashMap<BasisId, u32>,
    letter_d: Vec<Poly>,
}

impl Cobar {
    pub fn new(c: &DgCoalgebra) -> Self {
        let letters: Vec<BasisId> = c.all_basis().collect();
        let letter_index: HashMap<BasisId, u32> = letters.iter().enumerate().map(|(i, &b)| (b, i as u32)).collect();
        let letter_names = letters.iter().map(|&b| format!("x_{}", c.name(b))).collect();
        let letter_degree = letters.iter().map(|b| b.degree - 1).collect();
        let letter_d = letters
            .iter()
            .map(|&b| {
                let mut p = Poly::zero();
                for (coef, x) in c.boundary_of(b) {
                    p.add_term(vec![letter_index[&x]], -coef);
                }
                for t in c.coproduct_of(b) {
                    p.add_term(vec![letter_index[&t.left], letter_index[&t.right]], sign(t.left.degree) * &t.coef);
                }
                p
            })
            .collect();
        Self { coalgebra: c.clone(), letters, letter_names, letter_degree, letter_index, letter_d }
    }

    pub fn coalgebra(&self) -> &DgCoalgebra {
        &self.coalgebra
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    pub fn letter(&self, b: BasisId) -> u32 {
        self.letter_index[&b]
    }

    pub fn letter_basis(&self, l: u32) -> BasisId {
        self.letters[l as usize]
    }

    pub fn letter_names(&self) -> &[String] {
        &self.letter_names
    }

    pub fn letter_degree(&self, l: u32) -> usize {
        self.letter_degree[l as usize]
    }

    pub fn word_degree(&self, w: &[u32]) -> usize {
        w.iter().map(|&l| self.letter_degree(l)).sum()
    }

    /// `D` of a single letter.
    pub fn letter_differential(&self, l: u32) -> &Poly {
        &self.letter_d[l as usize]
    }

    /// `D` on the full tensor algebra, terms longer than `max_len` dropped.
    pub fn differential_bounded(&self, p: &Poly, max_len: usize) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            let mut prefix_degree = 0;
            for (i, &l) in w.iter().enumerate() {
                let s = sign(prefix_degree) * c;
                for (m, d) in self.letter_d[l as usize].terms() {
                    if w.len() - 1 + m.len() > max_len {
                        continue;
                    }
                    let mut word = w[..i].to_vec();
                    word.extend_from_slice(m);
                    word.extend_from_slice(&w[i + 1..]);
                    out.add_term(word, &s * d);
                }
                prefix_degree += self.letter_degree(l);
            }
        }
        out
    }

    /// `D` on the full tensor algebra.
    pub fn differential(&self, p: &Poly) -> Poly {
        self.differential_bounded(p, usize::MAX)
    }

    /// `Ωf` on a polynomial: letters go to the desuspended image of their
    /// basis element.
    pub fn map_poly(&self, target: &Cobar, f: &DgCoalgebraMap, p: &Poly) -> Poly {
        p.substitute(|l| {
            let b = self.letter_basis(l);
            let mut img = Poly::zero();
            for (i, c) in f.image(b).iter() {
                img.add_term(vec![target.letter(BasisId { degree: b.degree, index: i })], c.clone());
            }
            img
        })
    }
}

/// Quotient of `ΩC` by words with more than `L` letters, through degree
/// `N + 1`. Words longer than `L` span a subcomplex because `D` never
/// shortens a word, so the quotient is again a chain complex.
#[derive(Clone, Debug)]
pub struct CobarTruncation {
    cobar: Cobar,
    degree_bound: usize,
    word_bound: usize,
    bases: Vec<Vec<Word>>,
    index: Vec<HashMap<Word, usize>>,
    /// `differentials[n]`: degree `n` -> degree `n - 1`; entry 0 is `0 x dim_0`.
    differentials: Vec<SparseMatrix>,
    exact: Vec<bool>,
}

/// Builds the truncation with the default per-degree word limit.
pub fn cobar(c: &DgCoalgebra, degree_bound: usize, word_bound: usize) -> Result<CobarTruncation> {
    CobarTruncation::new(c, degree_bound, word_bound, DEFAULT_WORD_LIMIT)
}

impl CobarTruncation {
    pub fn new(c: &DgCoalgebra, degree_bound: usize, word_bound: usize, word_limit: usize) -> Result<Self> {
        if word_bound == 0 {
            return Err(Error::BoundTooSmall("word-length bound must be at least 1".into()));
        }
        let cobar = Cobar::new(c);
        let mut bases = Vec::with_capacity(degree_bound + 2);
        for n in 0..=degree_bound + 1 {
            bases.push(enumerate_words(&cobar, n, word_bound, word_limit)?);
        }
        let index: Vec<HashMap<Word, usize>> =
            bases.iter().map(|b| b.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()).collect();
        let mut differentials = vec![SparseMatrix::zeros(0, bases[0].len())];
        for n in 1..=degree_bound + 1 {
            let cols: Vec<SparseVec> = bases[n]
                .iter()
                .map(|w| {
                    let dw = cobar.differential_bounded(&Poly::word(w.clone()), word_bound);
                    SparseVec::from_pairs(dw.terms().map(|(m, c)| (index[n - 1][m], c.clone())))
                })
                .collect();
            differentials.push(SparseMatrix::from_columns(bases[n - 1].len(), &cols));
        }
        let simply_connected = c.dim(1) == 0;
        let exact = (0..=degree_bound)
            .map(|n| {
                let letters_known = c.is_complete() || c.degree_cap() >= n + 2;
                letters_known && simply_connected && word_bound >= n
            })
            .collect();
        Ok(Self { cobar, degree_bound, word_bound, bases, index, differentials, exact })
    }

    pub fn cobar(&self) -> &Cobar {
        &self.cobar
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn word_bound(&self) -> usize {
        self.word_bound
    }

    /// Words of degree `n` (`n <= N + 1`) in basis order.
    pub fn basis(&self, n: usize) -> &[Word] {
        &self.bases[n]
    }

    pub fn word_index(&self, n: usize, w: &[u32]) -> Option<usize> {
        self.index[n].get(w).copied()
    }

    /// `D: degree n -> degree n - 1` on the truncation.
    pub fn differential(&self, n: usize) -> &SparseMatrix {
        &self.differentials[n]
    }

    /// Whether homology in degree `n` of the truncation equals that of `ΩC`.
    pub fn is_exact(&self, n: usize) -> bool {
        self.exact.get(n).copied().unwrap_or(false)
    }

    pub fn exact_flags(&self) -> &[bool] {
        &self.exact
    }

    pub fn format_word(&self, w: &[u32]) -> String {
        Poly::word(w.to_vec()).format(self.cobar.letter_names())
    }

    /// Matrix of `Ωf` from degree `n` of `self` to degree `n` of `target`.
    pub fn map_matrix(&self, target: &CobarTruncation, f: &DgCoalgebraMap, n: usize) -> SparseMatrix {
        let cols: Vec<SparseVec> = self.bases[n]
            .iter()
            .map(|w| {
                let img = self.cobar.map_poly(&target.cobar, f, &Poly::word(w.clone()));
                SparseVec::from_pairs(img.terms().map(|(m, c)| (target.index[n][m], c.clone())))
            })
            .collect();
        SparseMatrix::from_columns(target.bases[n].len(), &cols)
    }
}

fn enumerate_words(cobar: &Cobar, degree: usize, max_len: usize, limit: usize) -> Result<Vec<Word>> {
    let degrees: Vec<usize> = (0..cobar.letter_count() as u32).map(|l| cobar.letter_degree(l)).collect();
    let min_deg = degrees.iter().copied().min().unwrap_or(0);
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    if degree == 0 {
        out.push(Word::new());
    }
    for len in 1..=max_len {
        if len * min_deg > degree || len * max_deg < degree {
            continue;
        }
        let mut word = Vec::with_capacity(len);
        fill(&degrees, degree, len, min_deg, max_deg, &mut word, &mut out, limit, degree)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    degrees: &[usize],
    remaining: usize,
    slots: usize,
    min_deg: usize,
    max_deg: usize,
    word: &mut Word,
    out: &mut Vec<Word>,
    limit: usize,
    degree: usize,
) -> Result<()> {
    if slots == 0 {
        if remaining == 0 {
            if out.len() >= limit {
                return Err(Error::TruncationTooLarge { degree, words: out.len() + 1, limit });
            }
            out.push(word.clone());
        }
        return Ok(());
    }
    for (l, &d) in degrees.iter().enumerate() {
        if d > remaining {
            continue;
        }
        let rest = remaining - d;
        if (slots - 1) * min_deg > rest || (slots - 1) * max_deg < rest {
            continue;
        }
        word.push(l as u32);
        fill(degrees, rest, slots - 1, min_deg, max_deg, word, out, limit, degree)?;
        word.pop();
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSquaredReport {
    pub letters_checked: usize,
    pub words_checked: usize,
    /// `D` vanishes on every degree-0 letter.
    pub degree0_letters_closed: bool,
    /// First letter or word on which `D²` fails, with the offending value.
    pub failure: Option<String>,
}

impl DSquaredReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.degree0_letters_closed
    }
}

/// Verifies `D² = 0`.
///
/// `D²` is again a derivation, so it vanishes on the whole tensor algebra
/// iff it vanishes on letters; that is checked exactly. The truncation's
/// matrices are also checked word by word (`D_{n-1} D_n = 0`).
pub fn check_d_squared(t: &CobarTruncation) -> DSquaredReport {
    let cobar = t.cobar();
    let names = cobar.letter_names();
    let degree0_letters_closed = (0..cobar.letter_count() as u32)
        .filter(|&l| cobar.letter_degree(l) == 0)
        .all(|l| cobar.letter_differential(l).is_zero());
    let mut report = DSquaredReport { letters_checked: 0, words_checked: 0, degree0_letters_closed, failure: None };
    for l in 0..cobar.letter_count() as u32 {
        report.letters_checked += 1;
        let dd = cobar.differential(cobar.letter_differential(l));
        if !dd.is_zero() {
            report.failure = Some(format!("D²({}) = {}", names[l as usize], dd.format(names)));
            return report;
        }
    }
    for n in 2..=t.degree_bound() + 1 {
        report.words_checked += t.basis(n).len();
        let product = t.differential(n - 1).mul(t.differential(n));
        let first = product.triplets().next().map(|(i, j, _)| (i, j));
        if let Some((i, j)) = first {
            let w = &t.basis(n)[j];
            let target = &t.basis(n - 2)[i];
            report.failure =
                Some(format!("D²({}) has a nonzero coefficient on {}", t.format_word(w), t.format_word(target)));
            return report;
        }
    }
    report
}

/// `H₀(ΩC)` as generators (degree-1 basis) modulo the degree-0 parts of `D`
/// on degree-2 letters. Since `D` vanishes on degree-0 letters these
/// relations generate the whole ideal of degree-0 boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Poly>,
    /// Basis element of `C̄_2` each relation comes from.
    pub sources: Vec<String>,
}

pub fn h0_presentation(c: &DgCoalgebra) -> Result<H0Presentation> {
    if !c.is_complete() && c.degree_cap() < 2 {
        return Err(Error::BoundTooSmall(format!(
            "H₀ needs chains through degree 2, but this coalgebra is truncated at {}",
            c.degree_cap()
        )));
    }
    let cobar = Cobar::new(c);
    let generators: Vec<String> = c.basis(1).map(|b| cobar.letter_names()[cobar.letter(b) as usize].clone()).collect();
    let mut relations = Vec::new();
    let mut sources = Vec::new();
    for b in c.basis(2) {
        // degree-1 letters come after all degree-0 letters, so the ids of
        // degree-0 letters coincide with generator positions
        let d = cobar.letter_differential(cobar.letter(b));
        relations.push(d.filter(|w| w.iter().all(|&l| (l as usize) < generators.len())));
        sources.push(c.name(b).to_string());
    }
    Ok(H0Presentation { generators, relations, sources })
}

impl H0Presentation {
    pub fn algebra(&self, groebner_bound: usize) -> FpAlgebra {
        FpAlgebra::new(self.generators.clone(), self.relations.clone(), groebner_bound)
    }

    /// `∇` on degree-0 cobar elements: each letter `x` is sent to
    /// `x⊗1 + 1⊗x + x⊗x`, extended multiplicatively.
    pub fn coproduct(&self, p: &Poly) -> PolyTensor {
        shifted_grouplike_coproduct(p)
    }

    pub fn format_relations(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.format(&self.generators)).collect()
    }

    /// Generator images of the algebra map induced by a coalgebra map.
    pub fn map_images(f: &DgCoalgebraMap) -> Vec<Poly> {
        f.source()
            .basis(1)
            .map(|b| {
                let mut img = Poly::zero();
                for (i, c) in f.image(b).iter() {
                    img.add_term(vec![i as u32], c.clone());
                }
                img
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generators": self.generators,
            "relations": self.format_relations(),
        })
    }
}

/// The group-like seed `1 + x` for generator `l`.
pub fn seed(l: u32) -> Poly {
    &Poly::one() + &Poly::letter(l)
}

/// `ε` on degree-0 elements: the constant term.
pub fn counit(p: &Poly) -> Rational {
    p.constant_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::normalized_chains;
    use crate::linalg::q;
    use crate::simplicial::{minimal_sphere, nerve, GroupTable, SimplicialSet};

    #[test]
    fn sphere_two_cobar_is_tensor_algebra() {
        let c = normalized_chains(&minimal_sphere(2).unwrap()).unwrap();
        let t = cobar(&c, 5, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(t.basis(n).len(), 1);
            assert!(t.is_exact(n));
        }
        for n in 1..=6 {
            assert!(t.differential(n).is_zero());
        }
    }

    #[test]
    fn point_cobar() {
        let t = cobar(&DgCoalgebra::ground_field(), 3, 3).unwrap();
        assert_eq!(t.basis(0), &[Word::new()]);
        assert!(t.basis(1).is_empty());
    }

    #[test]
    fn z2_relation_sign() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(2), 2).unwrap()).unwrap();
        let cob = Cobar::new(&c);
        let gg = c.lookup("[1|1]").unwrap();
        let d = cob.letter_differential(cob.letter(gg));
        // D(s⁻¹[g|g]) = -2x - x.x
        assert_eq!(d.coeff(&[0]), q(-2));
        assert_eq!(d.coeff(&[0, 0]), q(-1));
        let p = h0_presentation(&c).unwrap();
        assert_eq!(p.generators, vec!["x_[1]".to_string()]);
        assert_eq!(p.format_relations(), vec!["-x_[1].x_[1] - 2*x_[1]".to_string()]);
        let a = p.algebra(8);
        assert_eq!(a.dimension(8).verdict.finite(), Some(2));
        assert!(a.relations_are_coideal());
        let g = seed(0);
        assert_eq!(a.multiply(&g, &g), Poly::one());
    }

    #[test]
    fn circle_presentation_is_free() {
        let c = normalized_chains(&minimal_sphere(1).unwrap()).unwrap();
        let p = h0_presentation(&c).unwrap();
        assert_eq!(p.generators.len(), 1);
        assert!(p.relations.is_empty());
        let c2 = normalized_chains(&minimal_sphere(2).unwrap()).unwrap();
        assert!(h0_presentation(&c2).unwrap().generators.is_empty());
    }

    #[test]
    fn truncated_below_two_is_rejected() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(2), 2).unwrap()).unwrap();
        let (names, d, cop) = c.parts();
        let short = DgCoalgebra::new(names[..2].to_vec(), d[..2].to_vec(), cop[..2].to_vec(), 1, false).unwrap();
        assert!(matches!(h0_presentation(&short), Err(Error::BoundTooSmall(_))));
    }

    #[test]
    fn d_squared_on_nerves() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(3), 3).unwrap()).unwrap();
        let t = cobar(&c, 2, 6).unwrap();
        let r = check_d_squared(&t);
        assert!(r.passed(), "{r:?}");
        assert!(r.words_checked > 0);
        let c = normalized_chains(&nerve(&GroupTable::symmetric3(), 3).unwrap()).unwrap();
        assert!(check_d_squared(&cobar(&c, 2, 3).unwrap()).passed());
    }

    #[test]
    fn flipped_coproduct_sign_breaks_d_squared() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(2), 3).unwrap()).unwrap();
        let (names, d, mut cop) = c.parts();
        cop[3][0][0].coef = -cop[3][0][0].coef.clone();
        let broken = DgCoalgebra::new(names, d, cop, 3, false).unwrap();
        assert!(!check_d_squared(&cobar(&broken, 2, 4).unwrap()).passed());
    }

    #[test]
    fn truncation_is_a_complex() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(2), 4).unwrap()).unwrap();
        let t = cobar(&c, 3, 4).unwrap();
        for n in 2..=4 {
            assert!(t.differential(n - 1).mul(t.differential(n)).is_zero());
        }
        assert!(!t.is_exact(1));
    }

    #[test]
    fn word_limit_is_enforced() {
        let c = normalized_chains(&nerve(&GroupTable::cyclic(3), 2).unwrap()).unwrap();
        assert!(matches!(CobarTruncation::new(&c, 0, 12, 100), Err(Error::TruncationTooLarge { .. })));
    }

    #[test]
    fn point_presentation() {
        let c = normalized_chains(&SimplicialSet::point()).unwrap();
        let p = h0_presentation(&c).unwrap();
        assert!(p.generators.is_empty() && p.relations.is_empty());
    }
}
