//! Graded Lie algebras inside tensor algebras: free Lie algebra dimensions,
//! the Lie model `ℒC` of a cocommutative coalgebra, enveloping algebras with
//! their symmetric-algebra (PBW) counts, and the obstruction to realising a
//! finite group algebra as `H₀` of such a model.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::coalgebra::{sign, DgCoalgebra};
use crate::cobar::h0_presentation;
use crate::error::{Error, Result};
use crate::homology::{cobar_homology, Bounds};
use crate::linalg::{express_in_basis, qf, Rational, RowBasis, SparseVec};
use crate::ncgroebner::{DimensionVerdict, FpAlgebra};
use crate::poly::{Poly, Word};

/// Graded commutator `[a, b] = ab - (-1)^{|a||b|} ba` of homogeneous elements.
pub fn bracket(a: &Poly, da: usize, b: &Poly, db: usize) -> Poly {
    let mut out = a * b;
    out.axpy(&-sign(da * db), &(b * a));
    out
}

/// Interns words as coordinates so polynomials become sparse vectors.
#[derive(Default)]
struct WordIndex(HashMap<Word, usize>);

impl WordIndex {
    fn vector(&mut self, p: &Poly) -> SparseVec {
        let mut v = SparseVec::new();
        for (w, c) in p.terms() {
            let next = self.0.len();
            let i = *self.0.entry(w.clone()).or_insert(next);
            v.add_to(i, c);
        }
        v
    }
}

/// A homogeneous Lie element given as a left-normed bracket of generators.
#[derive(Clone, Debug)]
pub struct LieElement {
    pub label: String,
    pub poly: Poly,
    pub degree: usize,
    pub length: usize,
}

/// Basis of the free graded Lie algebra on generators of the given degrees,
/// made of left-normed brackets `[[g_a, g_b], g_c]...`, through bracket
/// length `max_len` and degree `max_degree`.
pub fn free_lie_basis(degrees: &[usize], names: &[String], max_len: usize, max_degree: usize) -> Vec<LieElement> {
    assert_eq!(degrees.len(), names.len());
    let mut index = WordIndex::default();
    let mut out: Vec<LieElement> = Vec::new();
    let mut level: Vec<LieElement> = (0..degrees.len())
        .filter(|&i| degrees[i] <= max_degree)
        .map(|i| LieElement { label: names[i].clone(), poly: Poly::letter(i as u32), degree: degrees[i], length: 1 })
        .collect();
    let mut length = 1;
    while !level.is_empty() && length <= max_len {
        out.extend(level.iter().cloned());
        if length == max_len {
            break;
        }
        let mut span = RowBasis::new();
        let mut next = Vec::new();
        for b in &level {
            for (g, &dg) in degrees.iter().enumerate() {
                if b.degree + dg > max_degree {
                    continue;
                }
                let p = bracket(&b.poly, b.degree, &Poly::letter(g as u32), dg);
                if span.insert(index.vector(&p)) {
                    next.push(LieElement {
                        label: format!("[{},{}]", b.label, names[g]),
                        poly: p,
                        degree: b.degree + dg,
                        length: length + 1,
                    });
                }
            }
        }
        level = next;
        length += 1;
    }
    out
}

fn generator_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

/// Dimensions of the free graded Lie algebra per degree `0..=max_degree`;
/// every generator degree must be positive.
pub fn free_lie_dims(degrees: &[usize], max_degree: usize) -> Vec<usize> {
    assert!(degrees.iter().all(|&d| d >= 1), "generator degrees must be positive");
    let mut dims = vec![0; max_degree + 1];
    for e in free_lie_basis(degrees, &generator_names(degrees.len()), max_degree, max_degree) {
        dims[e.degree] += 1;
    }
    dims
}

/// Dimensions of the free graded Lie algebra per bracket length
/// `1..=max_len` (entry `k - 1` is length `k`).
pub fn free_lie_dims_by_length(degrees: &[usize], max_len: usize) -> Vec<usize> {
    let mut dims = vec![0; max_len];
    for e in free_lie_basis(degrees, &generator_names(degrees.len()), max_len, usize::MAX / 4) {
        dims[e.length - 1] += 1;
    }
    dims
}

/// Necklace count `(1/n) Σ_{d|n} μ(d) r^{n/d}`: the dimension of the length-`n`
/// part of the free Lie algebra on `r` generators of even degree.
pub fn witt_formula(rank: u64, n: u64) -> u64 {
    fn mobius(mut n: u64) -> i64 {
        let mut m = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        if n > 1 {
            m = -m;
        }
        m
    }
    let total: i128 =
        (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| mobius(d) as i128 * (rank as i128).pow((n / d) as u32)).sum();
    (total / n as i128) as u64
}

/// Dimensions of the free graded-commutative algebra `S(V)` per degree
/// `0..=d`, where `dims[e] = dim V_e`. Even degrees contribute
/// `1/(1-t^e)`, odd degrees `1+t^e`; `V_0` must vanish.
pub fn symmetric_dims(dims: &[usize], d: usize) -> Vec<usize> {
    assert!(dims.first().copied().unwrap_or(0) == 0, "degree-0 classes give an infinite symmetric algebra");
    let mut series = vec![0usize; d + 1];
    series[0] = 1;
    for (e, &h) in dims.iter().enumerate().skip(1).take(d) {
        for _ in 0..h {
            if e % 2 == 0 {
                for i in e..=d {
                    series[i] += series[i - e];
                }
            } else {
                for i in (e..=d).rev() {
                    series[i] += series[i - e];
                }
            }
        }
    }
    series
}

/// Dimension of the `k`-th symmetric power of an `h`-dimensional space
/// concentrated in degree 0, saturating at `u128::MAX`.
pub fn symmetric_power_dim(h: usize, k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=k as u128 {
        c = match c.checked_mul(h as u128 + i - 1) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    c
}

/// The Lie model `ℒC`: the free graded Lie algebra on `τx` (one per basis
/// element `x` of `C̄`, degree `|x| - 1`) with
/// `d(τx) = -τ(∂x) - ½ Σ (-1)^{|x'|} [τx', τx'']`.
///
/// Generators use the same numbering as the cobar letters; under
/// `s⁻¹x ↦ -τx` the two differentials agree.
#[derive(Clone, Debug)]
pub struct LieModel {
    names: Vec<String>,
    degrees: Vec<usize>,
    differential: Vec<Poly>,
    has_degree_zero: bool,
    complete: bool,
    cap: usize,
}

impl LieModel {
    /// Fails with the offending basis element if `C` is not cocommutative.
    pub fn new(c: &DgCoalgebra) -> Result<Self> {
        c.check_cocommutative()?;
        let basis: Vec<_> = c.all_basis().collect();
        let letter: HashMap<_, u32> = basis.iter().enumerate().map(|(i, &b)| (b, i as u32)).collect();
        let names = basis.iter().map(|&b| format!("t_{}", c.name(b))).collect();
        let degrees: Vec<usize> = basis.iter().map(|b| b.degree - 1).collect();
        let half = qf(1, 2);
        let differential = basis
            .iter()
            .map(|&b| {
                let mut p = Poly::zero();
                for (coef, x) in c.boundary_of(b) {
                    p.add_term(vec![letter[&x]], -coef);
                }
                for t in c.coproduct_of(b) {
                    let l = Poly::letter(letter[&t.left]);
                    let r = Poly::letter(letter[&t.right]);
                    let br = bracket(&l, t.left.degree - 1, &r, t.right.degree - 1);
                    p.axpy(&(-&half * sign(t.left.degree) * &t.coef), &br);
                }
                p
            })
            .collect();
        Ok(Self {
            names,
            degrees,
            differential,
            has_degree_zero: c.dim(1) > 0,
            complete: c.is_complete(),
            cap: c.degree_cap(),
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn generator_differential(&self, i: usize) -> &Poly {
        &self.differential[i]
    }

    fn word_degree(&self, w: &[u32]) -> usize {
        w.iter().map(|&l| self.degrees[l as usize]).sum()
    }

    /// The differential extended as a derivation, terms longer than
    /// `max_len` dropped.
    pub fn differential_bounded(&self, p: &Poly, max_len: usize) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in p.terms() {
            for i in 0..w.len() {
                let s = sign(self.word_degree(&w[..i])) * c;
                for (m, d) in self.differential[w[i] as usize].terms() {
                    if w.len() - 1 + m.len() > max_len {
                        continue;
                    }
                    let mut word = w[..i].to_vec();
                    word.extend_from_slice(m);
                    word.extend_from_slice(&w[i + 1..]);
                    out.add_term(word, &s * d);
                }
            }
        }
        out
    }

    pub fn differential(&self, p: &Poly) -> Poly {
        self.differential_bounded(p, usize::MAX)
    }

    /// `d² = 0` on every generator (enough, since `d²` is a derivation).
    pub fn check_d_squared(&self) -> Option<String> {
        (0..self.names.len())
            .find(|&i| !self.differential(&self.differential[i]).is_zero())
            .map(|i| self.names[i].clone())
    }

    /// The homology of `ℒC` modulo brackets longer than `max_len`, in
    /// degrees `0..=max_degree`. Exact when there are no degree-0
    /// generators, `max_len > n` and the coalgebra reaches degree `n + 2`;
    /// otherwise the value is a lower bound in degree 0 and a filtered value
    /// above.
    pub fn homology(&self, max_degree: usize, max_len: usize) -> LieHomologyReport {
        let basis = free_lie_basis(&self.degrees, &self.names, max_len, max_degree + 1);
        let mut by_degree: Vec<Vec<&LieElement>> = vec![Vec::new(); max_degree + 2];
        for e in &basis {
            by_degree[e.degree].push(e);
        }
        let mut index = WordIndex::default();
        let ranks: Vec<usize> = (0..=max_degree + 1)
            .map(|n| {
                if n == 0 {
                    return 0;
                }
                let mut span = RowBasis::new();
                for e in &by_degree[n] {
                    span.insert(index.vector(&self.differential_bounded(&e.poly, max_len)));
                }
                span.rank()
            })
            .collect();
        let degrees = (0..=max_degree)
            .map(|n| {
                let exact = !self.has_degree_zero && max_len > n && (self.complete || self.cap >= n + 2);
                LieHomologyDegree { n, dim: by_degree[n].len() - ranks[n] - ranks[n + 1], exact }
            })
            .collect();
        LieHomologyReport { degrees, max_len }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieHomologyDegree {
    pub n: usize,
    pub dim: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieHomologyReport {
    pub degrees: Vec<LieHomologyDegree>,
    pub max_len: usize,
}

impl LieHomologyReport {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }
}

/// A finite-dimensional positively graded Lie algebra given by structure
/// constants on a homogeneous basis. Only brackets `[e_i, e_j]` with `i <= j`
/// are stored; the rest follow from graded antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTable {
    names: Vec<String>,
    degrees: Vec<usize>,
    brackets: BTreeMap<(usize, usize), Vec<(Rational, usize)>>,
}

impl LieTable {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<usize>,
        brackets: BTreeMap<(usize, usize), Vec<(Rational, usize)>>,
    ) -> Result<Self> {
        let n = names.len();
        if degrees.len() != n || degrees.contains(&0) {
            return Err(Error::InvalidCoalgebra("Lie table needs one positive degree per basis element".into()));
        }
        for (&(i, j), terms) in &brackets {
            if i > j || j >= n {
                return Err(Error::InvalidCoalgebra(format!("bracket key ({i},{j}) must satisfy i <= j < {n}")));
            }
            if let Some((_, k)) = terms.iter().find(|(_, k)| *k >= n || degrees[*k] != degrees[i] + degrees[j]) {
                return Err(Error::InvalidCoalgebra(format!(
                    "bracket [{},{}] has a term on basis element {k} of the wrong degree",
                    names[i], names[j]
                )));
            }
        }
        Ok(Self { names, degrees, brackets })
    }

    /// Structure constants of the free graded Lie algebra through `max_degree`.
    pub fn free(degrees: &[usize], names: &[String], max_degree: usize) -> Self {
        assert!(degrees.iter().all(|&d| d >= 1), "generator degrees must be positive");
        let basis = free_lie_basis(degrees, names, max_degree, max_degree);
        let mut index = WordIndex::default();
        let vectors: Vec<SparseVec> = basis.iter().map(|e| index.vector(&e.poly)).collect();
        let mut brackets = BTreeMap::new();
        for e in 1..=max_degree {
            let members: Vec<usize> = (0..basis.len()).filter(|&k| basis[k].degree == e).collect();
            let span: Vec<SparseVec> = members.iter().map(|&k| vectors[k].clone()).collect();
            let mut pairs = Vec::new();
            let mut targets = Vec::new();
            for i in 0..basis.len() {
                for j in i..basis.len() {
                    if basis[i].degree + basis[j].degree == e {
                        pairs.push((i, j));
                        let p = bracket(&basis[i].poly, basis[i].degree, &basis[j].poly, basis[j].degree);
                        targets.push(index.vector(&p));
                    }
                }
            }
            let coords = express_in_basis(&span, &targets).expect("brackets of Lie elements are Lie elements");
            for (pair, v) in pairs.into_iter().zip(coords) {
                let terms: Vec<(Rational, usize)> = v.iter().map(|(k, c)| (c.clone(), members[k])).collect();
                if !terms.is_empty() {
                    brackets.insert(pair, terms);
                }
            }
        }
        Self {
            names: basis.iter().map(|e| e.label.clone()).collect(),
            degrees: basis.iter().map(|e| e.degree).collect(),
            brackets,
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Replaces the bracket `[e_i, e_j]` (`i <= j`).
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: Vec<(Rational, usize)>) {
        self.brackets.insert((i, j), terms);
    }

    /// `[e_i, e_j]` as a linear combination of basis elements.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(Rational, usize)> {
        if i <= j {
            return self.brackets.get(&(i, j)).cloned().unwrap_or_default();
        }
        let s = -sign(self.degrees[i] * self.degrees[j]);
        self.bracket(j, i).into_iter().map(|(c, k)| (&s * c, k)).collect()
    }

    /// Basis dimensions per degree `0..=d`.
    pub fn dims(&self, d: usize) -> Vec<usize> {
        let mut dims = vec![0; d + 1];
        for &e in self.degrees.iter().filter(|&&e| e <= d) {
            dims[e] += 1;
        }
        dims
    }

    fn bracket_vector(&self, terms: &[(Rational, usize)]) -> BTreeMap<usize, Rational> {
        let mut v: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, k) in terms {
            let e = v.entry(*k).or_insert_with(Rational::zero);
            *e += c;
        }
        v.retain(|_, c| !c.is_zero());
        v
    }

    /// The first triple violating the graded Jacobi identity
    /// `(-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]] = 0`.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.names.len();
        let nested = |a: usize, b: usize, c: usize| {
            let bc = self.bracket_vector(&self.bracket(b, c));
            let inner: Vec<(Rational, usize)> = bc
                .iter()
                .flat_map(|(&k, coef)| self.bracket(a, k).into_iter().map(move |(d, m)| (coef * d, m)))
                .collect();
            self.bracket_vector(&inner)
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (da, db, dc) = (self.degrees[a], self.degrees[b], self.degrees[c]);
                    let mut total: Vec<(Rational, usize)> = Vec::new();
                    for (s, v) in [
                        (sign(da * dc), nested(a, b, c)),
                        (sign(db * da), nested(b, c, a)),
                        (sign(dc * db), nested(c, a, b)),
                    ] {
                        total.extend(v.into_iter().map(|(k, x)| (&s * x, k)));
                    }
                    if !self.bracket_vector(&total).is_empty() {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `U(L)` presented by the basis with relations
    /// `e_i e_j - (-1)^{|e_i||e_j|} e_j e_i - [e_i, e_j]`, through degree `d`.
    pub fn enveloping_algebra(&self, d: usize) -> FpAlgebra {
        let n = self.names.len();
        let mut relations = Vec::new();
        for i in 0..n {
            for j in i..n {
                let (di, dj) = (self.degrees[i], self.degrees[j]);
                if di + dj > d || (i == j && di % 2 == 0) {
                    continue;
                }
                let (a, b) = (i as u32, j as u32);
                let mut r = Poly::word(vec![a, b]);
                r.add_term(vec![b, a], -sign(di * dj));
                for (c, k) in self.bracket(i, j) {
                    r.add_term(vec![k as u32], -c);
                }
                relations.push(r);
            }
        }
        FpAlgebra::weighted(self.names.clone(), self.degrees.clone(), relations, d)
    }
}

/// Dimensions of `U(L)` per degree `0..=d`, by Gröbner normal forms.
pub fn enveloping_dims(t: &LieTable, d: usize) -> Vec<usize> {
    t.enveloping_algebra(d).dimension(d).counts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwReport {
    pub lie_dims: Vec<usize>,
    pub symmetric: Vec<usize>,
    pub enveloping: Vec<usize>,
    pub first_mismatch: Option<usize>,
    pub jacobi_violation: Option<(String, String, String)>,
}

impl PbwReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `dim U(L)_n` with `dim S(L)_n` for `n <= d`.
pub fn pbw_check(t: &LieTable, d: usize) -> PbwReport {
    let lie_dims = t.dims(d);
    let symmetric = symmetric_dims(&lie_dims, d);
    let enveloping = enveloping_dims(t, d);
    let first_mismatch = (0..=d).find(|&n| symmetric[n] != enveloping[n]);
    let jacobi_violation =
        t.jacobi_violation().map(|(a, b, c)| (t.names[a].clone(), t.names[b].clone(), t.names[c].clone()));
    PbwReport { lie_dims, symmetric, enveloping, first_mismatch, jacobi_violation }
}

/// One degree of the comparison between `H(ΩC)` and `U(H(ℒC))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnvelopingDegree {
    pub n: usize,
    pub cobar: usize,
    /// `None` when the enveloping side is infinite-dimensional here.
    pub enveloping: Option<usize>,
    pub exact: bool,
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnvelopingComparison {
    pub lie_homology: LieHomologyReport,
    pub degrees: Vec<EnvelopingDegree>,
    /// Irreducible words per length in `H₀(ΩC)` against `dim Sᵏ(H₀(ℒC))`.
    pub h0_growth_cobar: Vec<usize>,
    pub h0_growth_symmetric: Vec<u128>,
    pub passed: bool,
}

/// Compares `H_n(ΩC)` with `U(H(ℒC))_n`, counted through PBW as the
/// graded-symmetric algebra on the Lie homology. Degrees with a finite
/// enveloping side are compared; in degree 0 the growth of `H₀(ΩC)` by word
/// length is compared with the symmetric powers of `H₀(ℒC)`.
pub fn cobar_vs_enveloping(c: &DgCoalgebra, bounds: Bounds) -> Result<EnvelopingComparison> {
    let model = LieModel::new(c)?;
    let lie = model.homology(bounds.degree, bounds.word);
    let h = lie.dims();
    let cobar = cobar_homology(c, bounds)?;
    let growth = h0_presentation(c)?.algebra(bounds.groebner).dimension(bounds.groebner);
    let h0_growth_cobar = growth.counts.clone();
    let h0_growth_symmetric: Vec<u128> = (0..=bounds.groebner).map(|k| symmetric_power_dim(h[0], k)).collect();
    let mut positive = h.clone();
    positive[0] = 0;
    let sym = symmetric_dims(&positive, bounds.degree);
    let mut degrees = Vec::new();
    for cd in &cobar.degrees {
        let n = cd.n;
        let lie_exact = lie.degrees[..=n].iter().all(|d| d.exact);
        let (enveloping, agree) = if n == 0 {
            if h[0] == 0 {
                (Some(1), Some(cd.dim == 1 && matches!(growth.verdict, DimensionVerdict::Finite(1))))
            } else {
                let same = h0_growth_cobar.iter().zip(&h0_growth_symmetric).all(|(a, b)| *a as u128 == *b);
                (None, Some(same && matches!(growth.verdict, DimensionVerdict::AtLeast(_))))
            }
        } else if h[0] > 0 && sym[n] > 0 {
            (None, None)
        } else {
            (Some(sym[n]), Some(sym[n] == cd.dim))
        };
        degrees.push(EnvelopingDegree { n, cobar: cd.dim, enveloping, exact: cd.exact && lie_exact, agree });
    }
    let passed = degrees.iter().all(|d| d.agree != Some(false));
    Ok(EnvelopingComparison { lie_homology: lie, degrees, h0_growth_cobar, h0_growth_symmetric, passed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NogoVerdict {
    Impossible,
    Possible,
}

/// Why `k[G] ≅ S(H₀(ℒC))` cannot hold: `S` of a nonzero degree-0 space is
/// infinite-dimensional, and `S(0) = k` has dimension 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NogoWitness {
    pub group_order: usize,
    /// `dim H₀(ℒC)` modulo long brackets; a nonzero value is certified.
    pub h0_lie: usize,
    pub h0_exact: bool,
    /// `dim Sᵏ(H₀(ℒC))` for `k = 0..`.
    pub symmetric_powers: Vec<u128>,
    pub cumulative: Vec<u128>,
    /// First `k` with `Σ_{j<=k} dim Sʲ > |G|`.
    pub exceeds_at: Option<usize>,
    pub verdict: NogoVerdict,
    pub certified: bool,
    pub reason: String,
}

pub fn nogo_witness(c: &DgCoalgebra, group_order: usize, max_len: usize, max_power: usize) -> Result<NogoWitness> {
    if group_order == 0 {
        return Err(Error::InvalidGroupTable("group order must be positive".into()));
    }
    let model = LieModel::new(c)?;
    let h0 = &model.homology(0, max_len).degrees[0];
    let symmetric_powers: Vec<u128> = (0..=max_power).map(|k| symmetric_power_dim(h0.dim, k)).collect();
    let cumulative: Vec<u128> = symmetric_powers
        .iter()
        .scan(0u128, |acc, &x| {
            *acc = acc.saturating_add(x);
            Some(*acc)
        })
        .collect();
    let exceeds_at = cumulative.iter().position(|&s| s > group_order as u128);
    let (verdict, certified, reason) = if h0.dim > 0 {
        let reason = format!(
            "H0 of the Lie model has dimension {} > 0, so its symmetric algebra is infinite-dimensional while k[G] has dimension {group_order}",
            h0.dim
        );
        (NogoVerdict::Impossible, true, reason)
    } else if group_order > 1 {
        let reason = format!(
            "the symmetric algebra on H0 of the Lie model has dimension 1 (or is infinite) but k[G] has dimension {group_order}"
        );
        (NogoVerdict::Impossible, true, reason)
    } else {
        let reason = "the trivial group matches a vanishing H0 of the Lie model".to_string();
        (NogoVerdict::Possible, h0.exact, reason)
    };
    Ok(NogoWitness {
        group_order,
        h0_lie: h0.dim,
        h0_exact: h0.exact,
        symmetric_powers,
        cumulative,
        exceeds_at,
        verdict,
        certified,
        reason,
    })
}
