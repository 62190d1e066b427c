//! Finitely presented associative algebras over the rationals with
//! degree-bounded noncommutative Gröbner bases (Buchberger-Mora).
//!
//! Monomials are ordered by weighted degree, then length, then
//! lexicographically by generator index. With unit weights this is the
//! usual degree-lexicographic order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::{solve, Rational, RowBasis, SparseMatrix, SparseVec};
use crate::poly::{add_tensor_term, tensor, Poly, PolyTensor, Word};

/// Sort key realizing the monomial order; larger keys are larger monomials.
type Key = (usize, usize, Word);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpAlgebra {
    generators: Vec<String>,
    weights: Vec<usize>,
    relations: Vec<Poly>,
    bound: usize,
    basis: Vec<Poly>,
    tips: Vec<Word>,
    complete: bool,
}

/// Result of counting irreducible words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    /// Irreducible words per degree `0..=d`.
    pub counts: Vec<usize>,
    pub total: usize,
    pub verdict: DimensionVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum DimensionVerdict {
    Finite(usize),
    AtLeast(usize),
}

impl DimensionVerdict {
    pub fn finite(self) -> Option<usize> {
        match self {
            DimensionVerdict::Finite(n) => Some(n),
            DimensionVerdict::AtLeast(_) => None,
        }
    }
}

impl std::fmt::Display for DimensionVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimensionVerdict::Finite(n) => write!(f, "finite({n})"),
            DimensionVerdict::AtLeast(n) => write!(f, "at-least({n})"),
        }
    }
}

impl FpAlgebra {
    /// Gröbner basis with unit generator weights.
    pub fn new(generators: Vec<String>, relations: Vec<Poly>, bound: usize) -> Self {
        let weights = vec![1; generators.len()];
        Self::weighted(generators, weights, relations, bound)
    }

    /// Gröbner basis where generator `i` has degree `weights[i] >= 1`.
    pub fn weighted(generators: Vec<String>, weights: Vec<usize>, relations: Vec<Poly>, bound: usize) -> Self {
        assert_eq!(generators.len(), weights.len());
        assert!(weights.iter().all(|&w| w >= 1), "generator weights must be positive");
        let mut a = Self {
            generators,
            weights,
            relations: relations.clone(),
            bound,
            basis: Vec::new(),
            tips: Vec::new(),
            complete: true,
        };
        a.complete = a.buchberger(relations);
        a
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn groebner_basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn tips(&self) -> &[Word] {
        &self.tips
    }

    /// True when every overlap of the basis reduces to zero, so normal forms
    /// are canonical in all degrees.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn weight(&self, w: &[u32]) -> usize {
        w.iter().map(|&l| self.weights[l as usize]).sum()
    }

    fn key(&self, w: &[u32]) -> Key {
        (self.weight(w), w.len(), w.to_vec())
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    fn leading(&self, p: &Poly) -> Option<(Word, Rational)> {
        p.terms().max_by(|a, b| self.compare(a.0, b.0)).map(|(w, c)| (w.clone(), c.clone()))
    }

    fn monic(&self, p: Poly) -> Option<Poly> {
        let (_, c) = self.leading(&p)?;
        Some(p.scaled(&(Rational::one() / c)))
    }

    fn find_tip(&self, tips: &[Word], w: &[u32]) -> Option<(usize, usize)> {
        for (i, t) in tips.iter().enumerate() {
            if t.len() <= w.len() {
                if let Some(pos) = (0..=w.len() - t.len()).find(|&p| &w[p..p + t.len()] == t.as_slice()) {
                    return Some((i, pos));
                }
            }
        }
        None
    }

    fn reduce_with(&self, basis: &[Poly], tips: &[Word], p: &Poly) -> Poly {
        let mut work: BTreeMap<Key, Rational> = p.terms().map(|(w, c)| (self.key(w), c.clone())).collect();
        let mut out = Poly::zero();
        while let Some((key, c)) = work.pop_last() {
            let w = key.2;
            match self.find_tip(tips, &w) {
                None => out.add_term(w, c),
                Some((i, pos)) => {
                    let (left, right) = (&w[..pos], &w[pos + tips[i].len()..]);
                    for (m, d) in basis[i].terms() {
                        if m == &tips[i] {
                            continue;
                        }
                        let mut word = left.to_vec();
                        word.extend_from_slice(m);
                        word.extend_from_slice(right);
                        let k = self.key(&word);
                        let v = work.entry(k.clone()).or_insert_with(Rational::zero);
                        *v -= &c * d;
                        if v.is_zero() {
                            work.remove(&k);
                        }
                    }
                }
            }
        }
        out
    }

    /// Normal form against the current Gröbner basis.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.reduce_with(&self.basis, &self.tips, p)
    }

    pub fn multiply(&self, a: &Poly, b: &Poly) -> Poly {
        self.normal_form(&(a * b))
    }

    fn set_basis(&mut self, basis: Vec<Poly>) {
        self.tips = basis.iter().map(|g| self.leading(g).expect("nonzero").0).collect();
        self.basis = basis;
    }

    /// Tip-reduces and tail-reduces until the basis is reduced and monic.
    fn interreduce(&self, mut pending: Vec<Poly>) -> Vec<Poly> {
        let mut basis: Vec<Poly> = Vec::new();
        while let Some(p) = pending.pop() {
            let tips: Vec<Word> = basis.iter().map(|g| self.leading(g).unwrap().0).collect();
            let r = self.reduce_with(&basis, &tips, &p);
            let Some(r) = self.monic(r) else { continue };
            let tip = self.leading(&r).unwrap().0;
            // elements whose tip contains the new tip must be reduced again
            let (keep, redo): (Vec<Poly>, Vec<Poly>) = basis.into_iter().partition(|g| {
                let t = self.leading(g).unwrap().0;
                self.find_tip(std::slice::from_ref(&tip), &t).is_none()
            });
            basis = keep;
            basis.push(r);
            pending.extend(redo);
        }
        // tails
        let mut out = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let others: Vec<Poly> = basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let tips: Vec<Word> = others.iter().map(|g| self.leading(g).unwrap().0).collect();
            let (tip, _) = self.leading(&basis[i]).unwrap();
            let tail = basis[i].filter(|w| *w != tip);
            let mut g = self.reduce_with(&others, &tips, &tail);
            g.add_term(tip, Rational::one());
            out.push(g);
        }
        out.sort_by(|a, b| self.compare(&self.leading(a).unwrap().0, &self.leading(b).unwrap().0));
        out
    }

    /// Overlap S-polynomials between `f` and `g` (suffix of tip f = prefix of tip g).
    fn overlaps(&self, f: &Poly, tf: &Word, g: &Poly, tg: &Word) -> Vec<(usize, Poly)> {
        let mut out = Vec::new();
        for k in 1..tf.len().min(tg.len()) {
            if tf[tf.len() - k..] == tg[..k] {
                let right = Poly::word(tg[k..].to_vec());
                let left = Poly::word(tf[..tf.len() - k].to_vec());
                let mut full = tf.clone();
                full.extend_from_slice(&tg[k..]);
                let s = &(f * &right) - &(&left * g);
                out.push((self.weight(&full), s));
            }
        }
        out
    }

    /// Returns whether the basis closed with nothing left above the bound.
    fn buchberger(&mut self, relations: Vec<Poly>) -> bool {
        let mut basis = self.interreduce(relations);
        loop {
            self.set_basis(basis.clone());
            let mut fresh = Vec::new();
            let mut pending_above = false;
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    for (_, s) in self.overlaps(&basis[i], &self.tips[i], &basis[j], &self.tips[j]) {
                        let r = self.normal_form(&s);
                        if r.is_zero() {
                            continue;
                        }
                        let (tip, _) = self.leading(&r).unwrap();
                        if self.weight(&tip) <= self.bound {
                            fresh.push(r);
                        } else {
                            pending_above = true;
                        }
                    }
                }
            }
            if fresh.is_empty() {
                return !pending_above;
            }
            basis.extend(fresh);
            basis = self.interreduce(basis);
        }
    }

    /// All irreducible words of weighted degree `<= d`, grouped by degree.
    pub fn irreducible_words(&self, d: usize) -> Vec<Vec<Word>> {
        let mut by_degree = vec![Vec::new(); d + 1];
        let mut stack = vec![Word::new()];
        while let Some(w) = stack.pop() {
            let wd = self.weight(&w);
            by_degree[wd].push(w.clone());
            for l in 0..self.generators.len() as u32 {
                if wd + self.weights[l as usize] > d {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                // prefixes are irreducible, so only a tip ending here can occur
                let ends_in_tip = self.tips.iter().any(|t| v.ends_with(t));
                if !ends_in_tip {
                    stack.push(v);
                }
            }
        }
        for level in &mut by_degree {
            level.sort_by(|a, b| self.compare(a, b));
        }
        by_degree
    }

    /// Counts irreducible words through weighted degree `d`.
    pub fn dimension(&self, d: usize) -> DimensionReport {
        let words = self.irreducible_words(d);
        let counts: Vec<usize> = words.iter().map(Vec::len).collect();
        let total = counts.iter().sum();
        let max_w = self.weights.iter().copied().max().unwrap_or(1);
        // finite once some word length has no irreducible words at all
        let mut by_length: BTreeMap<usize, usize> = BTreeMap::new();
        for w in words.iter().flatten() {
            *by_length.entry(w.len()).or_default() += 1;
        }
        let empty_length = (1..).take_while(|&l| l * max_w <= d).find(|l| !by_length.contains_key(l));
        let verdict = match (self.complete, empty_length) {
            (true, Some(_)) => DimensionVerdict::Finite(total),
            _ => DimensionVerdict::AtLeast(total),
        };
        DimensionReport { counts, total, verdict }
    }

    /// Coordinates of a normal form in the list `words`.
    fn coordinates(&self, p: &Poly, index: &HashMap<Word, usize>) -> Option<SparseVec> {
        let mut v = SparseVec::new();
        for (w, c) in p.terms() {
            v.add_to(*index.get(w)?, c);
        }
        Some(v)
    }

    /// Group-like closure of the seeds `1 + x_i` under multiplication.
    ///
    /// Every member is checked to satisfy `∇(g) = g ⊗ g` modulo the ideal on
    /// both tensor factors and `ε(g) = 1`, with `∇(x) = x⊗1 + 1⊗x + x⊗x`.
    pub fn grouplike_closure(&self, max_elements: usize) -> GrouplikeClosure {
        let seeds: Vec<Poly> =
            (0..self.generators.len() as u32).map(|l| self.normal_form(&(&Poly::one() + &Poly::letter(l)))).collect();
        let one = self.normal_form(&Poly::one());
        let mut elements = vec![one];
        let mut index: HashMap<Poly, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut bounded = true;
        let mut cursor = 0;
        while cursor < elements.len() {
            for s in &seeds {
                let p = self.multiply(&elements[cursor], s);
                if index.contains_key(&p) {
                    continue;
                }
                if elements.len() >= max_elements {
                    bounded = false;
                    break;
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
            if !bounded {
                break;
            }
            cursor += 1;
        }
        let verified = elements.iter().all(|g| self.is_grouplike(g));
        let n = elements.len();
        let table: Vec<Vec<Option<usize>>> = (0..n)
            .map(|i| (0..n).map(|j| index.get(&self.multiply(&elements[i], &elements[j])).copied()).collect())
            .collect();
        let inverses: Vec<Option<usize>> =
            (0..n).map(|i| (0..n).find(|&j| table[i][j] == Some(0) && table[j][i] == Some(0))).collect();
        let invertible = inverses.iter().filter(|x| x.is_some()).count();
        let closed = bounded && table.iter().flatten().all(Option::is_some);
        let verdict = if !closed {
            GrouplikeVerdict::Unbounded { found: n, invertible }
        } else if invertible == n {
            GrouplikeVerdict::Group(n)
        } else {
            GrouplikeVerdict::Monoid(n)
        };
        GrouplikeClosure { elements, table, inverses, verified, certified: self.complete, verdict }
    }

    /// `∇(g) ≡ g ⊗ g` after normal forms on both factors, and `ε(g) = 1`.
    pub fn is_grouplike(&self, g: &Poly) -> bool {
        if !g.constant_term().is_one() {
            return false;
        }
        let ng = self.normal_form(g);
        self.reduced_coproduct(g) == tensor(&ng, &ng)
    }

    /// `(NF ⊗ NF)∇(p)`, built letter by letter. Normal forms are taken after
    /// every letter, which is legitimate because `∇` is multiplicative and
    /// `I ⊗ T + T ⊗ I` is an ideal of `T ⊗ T`.
    pub fn reduced_coproduct(&self, p: &Poly) -> PolyTensor {
        let mut out = PolyTensor::new();
        let mut cache: HashMap<Word, Poly> = HashMap::new();
        // reduced coproducts of word prefixes, so shared prefixes are expanded once
        let mut prefixes: HashMap<Word, PolyTensor> = HashMap::new();
        prefixes.insert(Word::new(), PolyTensor::from([((Word::new(), Word::new()), Rational::one())]));
        for (w, c) in p.terms() {
            let known = (0..=w.len()).rev().find(|&k| prefixes.contains_key(&w[..k])).expect("empty prefix is known");
            for k in known..w.len() {
                let l = w[k];
                let mut next = PolyTensor::new();
                for ((a, b), coef) in &prefixes[&w[..k]] {
                    let mut al = a.clone();
                    al.push(l);
                    let mut bl = b.clone();
                    bl.push(l);
                    add_tensor_term(&mut next, (al.clone(), b.clone()), coef.clone());
                    add_tensor_term(&mut next, (a.clone(), bl.clone()), coef.clone());
                    add_tensor_term(&mut next, (al, bl), coef.clone());
                }
                let reduced = self.reduce_tensor_cached(&next, &mut cache);
                prefixes.insert(w[..=k].to_vec(), reduced);
            }
            for (key, k) in &prefixes[w] {
                add_tensor_term(&mut out, key.clone(), c * k);
            }
        }
        out
    }

    /// `NF ⊗ NF` applied to an element of the free tensor square.
    pub fn reduce_tensor(&self, t: &PolyTensor) -> PolyTensor {
        self.reduce_tensor_cached(t, &mut HashMap::new())
    }

    fn reduce_tensor_cached(&self, t: &PolyTensor, cache: &mut HashMap<Word, Poly>) -> PolyTensor {
        for (a, b) in t.keys() {
            for w in [a, b] {
                if !cache.contains_key(w) {
                    cache.insert(w.clone(), self.normal_form(&Poly::word(w.clone())));
                }
            }
        }
        let mut out = PolyTensor::new();
        for ((a, b), c) in t {
            for (x, cx) in cache[a].terms() {
                for (y, cy) in cache[b].terms() {
                    add_tensor_term(&mut out, (x.clone(), y.clone()), c * cx * cy);
                }
            }
        }
        out
    }

    /// Checks that `∇` descends: each relation maps into `I ⊗ A + A ⊗ I`.
    pub fn relations_are_coideal(&self) -> bool {
        self.relations.iter().all(|r| self.reduced_coproduct(r).is_empty())
    }

    /// Solves `g · y = 1` (or `y · g = 1` when `!right`) over irreducible
    /// words up to the bound.
    fn solve_unit(&self, g: &Poly, right: bool) -> Option<Poly> {
        let words: Vec<Word> = self.irreducible_words(self.bound).into_iter().flatten().collect();
        let mut index: HashMap<Word, usize> = HashMap::new();
        index.insert(Word::new(), 0);
        let mut columns = Vec::new();
        for w in &words {
            let w = Poly::word(w.clone());
            let image = if right { self.multiply(g, &w) } else { self.multiply(&w, g) };
            for (m, _) in image.terms() {
                let k = index.len();
                index.entry(m.clone()).or_insert(k);
            }
            columns.push(image);
        }
        let cols: Vec<SparseVec> = columns.iter().map(|p| self.coordinates(p, &index).unwrap()).collect();
        let m = SparseMatrix::from_columns(index.len(), &cols);
        let x = solve(&m, &SparseVec::unit(0))?;
        let mut y = Poly::zero();
        for (j, c) in x.iter() {
            y.add_term(words[j].clone(), c.clone());
        }
        Some(self.normal_form(&y))
    }

    /// Some `y` with `g · y = 1`, searched up to the bound.
    pub fn right_inverse(&self, g: &Poly) -> Option<Poly> {
        self.solve_unit(g, true)
    }

    /// Some `y` with `y · g = 1`, searched up to the bound.
    pub fn left_inverse(&self, g: &Poly) -> Option<Poly> {
        self.solve_unit(g, false)
    }

    /// Solves `g · y = 1` over irreducible words up to the bound and verifies
    /// `y · g = 1`.
    pub fn two_sided_inverse(&self, g: &Poly) -> Option<Poly> {
        let y = self.right_inverse(g)?;
        (self.multiply(&y, g) == self.normal_form(&Poly::one())).then_some(y)
    }

    /// Compares `self -> target` given by generator images.
    pub fn map_check(&self, target: &FpAlgebra, images: &[Poly]) -> MapVerdict {
        assert_eq!(images.len(), self.generators.len());
        let apply = |p: &Poly| target.normal_form(&p.substitute(|l| images[l as usize].clone()));
        let violating_relation =
            self.relations.iter().find(|r| !apply(r).is_zero()).map(|r| r.format(&self.generators));
        let d = self.bound.min(target.bound);
        let src_words: Vec<Word> = self.irreducible_words(d).into_iter().flatten().collect();
        let dst_words: Vec<Word> = target.irreducible_words(d).into_iter().flatten().collect();
        let image_vectors: Vec<Poly> = src_words.iter().map(|w| apply(&Poly::word(w.clone()))).collect();
        let mut index: HashMap<Word, usize> = dst_words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        for p in &image_vectors {
            for (w, _) in p.terms() {
                let k = index.len();
                index.entry(w.clone()).or_insert(k);
            }
        }
        let mut span = RowBasis::new();
        for p in &image_vectors {
            span.insert(self.coordinates(p, &index).unwrap());
        }
        let rank = span.rank();
        let surjective = dst_words.iter().all(|w| span.contains(&SparseVec::unit(index[w])));
        let injective = rank == src_words.len();
        let src_dim = self.dimension(d);
        let dst_dim = target.dimension(d);
        let certified = self.complete
            && target.complete
            && src_dim.verdict.finite().is_some()
            && dst_dim.verdict.finite().is_some();
        MapVerdict {
            well_defined: violating_relation.is_none(),
            violating_relation,
            surjective,
            injective,
            dim_src: src_dim.verdict,
            dim_dst: dst_dim.verdict,
            bound: d,
            certified,
        }
    }

    pub fn summary(&self) -> PresentationSummary {
        PresentationSummary {
            generators: self.generators.clone(),
            relations: self.relations.iter().map(|r| r.format(&self.generators)).collect(),
            groebner_basis: self.basis.iter().map(|r| r.format(&self.generators)).collect(),
            bound: self.bound,
            complete: self.complete,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSummary {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub groebner_basis: Vec<String>,
    pub bound: usize,
    pub complete: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "order")]
pub enum GrouplikeVerdict {
    /// Closed under products, every element invertible.
    Group(usize),
    /// Closed under products, some element without an inverse.
    Monoid(usize),
    /// The element budget ran out before the closure stabilized.
    #[serde(rename = "unbounded")]
    Unbounded { found: usize, invertible: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeClosure {
    /// Normal forms; index 0 is the unit.
    pub elements: Vec<Poly>,
    /// `table[i][j]` is the index of `elements[i] * elements[j]` if found.
    pub table: Vec<Vec<Option<usize>>>,
    pub inverses: Vec<Option<usize>>,
    /// Every element passed the group-like test.
    pub verified: bool,
    /// Normal forms were canonical (complete Gröbner basis).
    pub certified: bool,
    pub verdict: GrouplikeVerdict,
}

impl GrouplikeClosure {
    /// The multiplication table when the closure is a group.
    pub fn group_table(&self) -> Option<Vec<Vec<usize>>> {
        match self.verdict {
            GrouplikeVerdict::Group(_) => {
                Some(self.table.iter().map(|r| r.iter().map(|x| x.unwrap()).collect()).collect())
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapVerdict {
    pub well_defined: bool,
    pub violating_relation: Option<String>,
    pub surjective: bool,
    pub injective: bool,
    pub dim_src: DimensionVerdict,
    pub dim_dst: DimensionVerdict,
    pub bound: usize,
    /// Both sides complete and finite, so the answer holds without bounds.
    pub certified: bool,
}

impl MapVerdict {
    pub fn is_iso(&self) -> bool {
        self.well_defined && self.surjective && self.injective
    }
}

/// Commutative relations `x_i x_j - x_j x_i` for `i < j`.
pub fn commutator_relations(n: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            out.push(&Poly::word(vec![j, i]) - &Poly::word(vec![i, j]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn poly(text: &str, names: &[String]) -> Poly {
        Poly::parse(text, names).unwrap()
    }

    #[test]
    fn single_quadratic_relation() {
        let g = gens(&["x"]);
        let a = FpAlgebra::new(g.clone(), vec![poly("x.x - 2*x", &g)], 8);
        assert!(a.is_complete());
        assert_eq!(a.groebner_basis().len(), 1);
        assert_eq!(a.normal_form(&poly("x.x", &g)), poly("2*x", &g));
        assert_eq!(a.normal_form(&poly("x.x.x", &g)), poly("4*x", &g));
        assert_eq!(a.normal_form(&Poly::one()), Poly::one());
        let d = a.dimension(6);
        assert_eq!(d.counts, vec![1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(d.verdict, DimensionVerdict::Finite(2));
    }

    #[test]
    fn free_algebra() {
        let g = gens(&["x"]);
        let a = FpAlgebra::new(g, vec![], 8);
        assert!(a.is_complete());
        let d = a.dimension(5);
        assert_eq!(d.counts, vec![1; 6]);
        assert_eq!(d.verdict, DimensionVerdict::AtLeast(6));
    }

    #[test]
    fn laurent_relations() {
        let g = gens(&["x", "y"]);
        let a = FpAlgebra::new(g.clone(), vec![poly("x.y - 1", &g), poly("y.x - 1", &g)], 8);
        assert!(a.is_complete());
        let d = a.dimension(4);
        assert_eq!(d.counts, vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn commutative_relations_give_binomials() {
        let g = gens(&["a", "b", "c"]);
        let a = FpAlgebra::new(g, commutator_relations(3), 6);
        assert!(a.is_complete());
        // C(d + 2, 2)
        assert_eq!(a.dimension(5).counts, vec![1, 3, 6, 10, 15, 21]);
    }

    #[test]
    fn overlap_completion() {
        // x.y.x = 0 self-overlaps; the basis stays finite here
        let g = gens(&["x", "y"]);
        let a = FpAlgebra::new(g.clone(), vec![poly("x.x - y", &g)], 6);
        // x^3 overlap: x.y = y.x gets added
        assert!(a.tips().contains(&vec![1, 0]) || a.tips().contains(&vec![0, 1]) || a.tips().len() == 1);
        let x3 = a.normal_form(&poly("x.x.x", &g));
        assert_eq!(x3, a.normal_form(&poly("x.y", &g)));
        assert_eq!(a.normal_form(&poly("x.y - y.x", &g)), Poly::zero());
    }

    #[test]
    fn z2_grouplikes() {
        let g = gens(&["x"]);
        let a = FpAlgebra::new(g.clone(), vec![poly("x.x + 2*x", &g)], 8);
        assert!(a.relations_are_coideal());
        let c = a.grouplike_closure(64);
        assert_eq!(c.verdict, GrouplikeVerdict::Group(2));
        assert!(c.verified && c.certified);
        let gx = poly("1 + x", &g);
        assert_eq!(a.two_sided_inverse(&gx), Some(gx));
    }

    #[test]
    fn free_algebra_has_no_inverses() {
        let g = gens(&["x"]);
        let a = FpAlgebra::new(g.clone(), vec![], 8);
        let c = a.grouplike_closure(8);
        assert_eq!(c.verdict, GrouplikeVerdict::Unbounded { found: 8, invertible: 1 });
        assert!(a.two_sided_inverse(&poly("1 + x", &g)).is_none());
        assert_eq!(a.two_sided_inverse(&Poly::one()), Some(Poly::one()));
    }

    #[test]
    fn trivial_algebra() {
        let a = FpAlgebra::new(vec![], vec![], 4);
        assert_eq!(a.grouplike_closure(8).verdict, GrouplikeVerdict::Group(1));
        assert_eq!(a.dimension(4).verdict, DimensionVerdict::Finite(1));
    }

    #[test]
    fn wrong_sign_is_not_a_coideal() {
        let g = gens(&["x"]);
        let a = FpAlgebra::new(g.clone(), vec![poly("x.x - 2*x", &g)], 8);
        assert!(!a.relations_are_coideal());
        let gx = poly("1 + x", &g);
        assert!(a.is_grouplike(&gx));
        assert!(!a.is_grouplike(&a.multiply(&gx, &gx)));
    }

    #[test]
    fn map_checks() {
        let g = gens(&["x"]);
        let a = FpAlgebra::new(g.clone(), vec![poly("x.x - 2*x", &g)], 8);
        let id = a.map_check(&a, &[Poly::letter(0)]);
        assert!(id.is_iso() && id.certified);
        let k = FpAlgebra::new(vec![], vec![], 8);
        let to_k = a.map_check(&k, &[Poly::zero()]);
        assert!(to_k.well_defined && to_k.surjective && !to_k.injective);
        let bad = a.map_check(&k, &[Poly::one()]);
        assert!(!bad.well_defined);
        assert_eq!(bad.violating_relation.as_deref(), Some("x.x - 2*x"));
    }

    #[test]
    fn weighted_order() {
        // e0 of weight 1, e1 of weight 2: e1 > e0.e0? both weight 2, longer wins
        let a = FpAlgebra::weighted(gens(&["u", "w"]), vec![1, 2], vec![], 4);
        assert_eq!(a.compare(&[0, 0], &[1]), Ordering::Greater);
        assert_eq!(a.dimension(3).counts, vec![1, 1, 2, 3]);
    }

    #[test]
    fn stepwise_coproduct_matches_direct_expansion() {
        let g = gens(&["x", "y"]);
        let a = FpAlgebra::new(g.clone(), vec![poly("x.x + 2*x", &g), poly("x.y - y.x", &g)], 6);
        let p = poly("1 + 3*x.y.x - y.y + x.y.y.x", &g);
        let direct = a.reduce_tensor(&crate::poly::shifted_grouplike_coproduct(&p));
        assert_eq!(a.reduced_coproduct(&p), direct);
    }
}
