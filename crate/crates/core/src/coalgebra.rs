//! Connected dg coalgebras over the rationals and the pointed normalized
//! chains functor with the Alexander-Whitney coproduct.
//!
//! Only the coaugmentation ideal `C̄` (degrees >= 1) is stored. `C_0 = Q`
//! is implicit, and so are counit and coaugmentation.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    format_rational, homology_at, induced_map_on_homology, parse_rational, q, Rational, SparseMatrix, SparseVec,
};
use crate::simplicial::{SimplexRef, SimplicialMap, SimplicialSet};

/// A basis element of `C̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisId {
    pub degree: usize,
    pub index: usize,
}

/// One term `coef * left ⊗ right` of a reduced coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoTerm {
    pub coef: Rational,
    pub left: BasisId,
    pub right: BasisId,
}

/// Element of `C̄ ⊗ C̄` in the tensor basis.
pub type Tensor2 = BTreeMap<(BasisId, BasisId), Rational>;
/// Element of `C̄ ⊗ C̄ ⊗ C̄` in the tensor basis.
pub type Tensor3 = BTreeMap<(BasisId, BasisId, BasisId), Rational>;

pub(crate) fn add_term<K: Ord>(t: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match t.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Connected dg coalgebra, possibly the truncation of an infinite one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgCoalgebra {
    /// `names[n]` for `n >= 1`; `names[0]` is empty.
    names: Vec<Vec<String>>,
    /// `differential[n]: C̄_n -> C̄_{n-1}` for `n >= 2`, columns indexed by
    /// the source basis. Entries 0 and 1 are empty placeholders.
    differential: Vec<SparseMatrix>,
    /// `coproduct[n][k]` is the reduced coproduct of basis element `(n, k)`.
    coproduct: Vec<Vec<Vec<CoTerm>>>,
    degree_cap: usize,
    complete: bool,
}

impl DgCoalgebra {
    /// The ground field, concentrated in degree 0.
    pub fn ground_field() -> Self {
        Self {
            names: vec![Vec::new()],
            differential: vec![SparseMatrix::zeros(0, 0)],
            coproduct: vec![Vec::new()],
            degree_cap: 0,
            complete: true,
        }
    }

    /// Assembles a coalgebra, checking shapes and degrees of every term but
    /// not the axioms; see [`Self::check_axioms`].
    ///
    /// `differential[n]` must be `dim n-1 x dim n` for `n >= 2` (other entries
    /// are ignored). `complete` states that no basis exists above `degree_cap`.
    pub fn new(
        names: Vec<Vec<String>>,
        differential: Vec<SparseMatrix>,
        coproduct: Vec<Vec<Vec<CoTerm>>>,
        degree_cap: usize,
        complete: bool,
    ) -> Result<Self> {
        let mut names = names;
        if names.is_empty() {
            names.push(Vec::new());
        }
        if !names[0].is_empty() {
            return Err(Error::InvalidCoalgebra("degree 0 is the ground field and takes no basis names".into()));
        }
        while names.len() > 1 && names.last().is_some_and(Vec::is_empty) {
            names.pop();
        }
        let top = names.len() - 1;
        if degree_cap < top {
            return Err(Error::InvalidCoalgebra(format!("degree cap {degree_cap} below top degree {top}")));
        }
        let dim = |n: usize| names.get(n).map_or(0, Vec::len);
        let mut diffs = Vec::with_capacity(top + 1);
        for n in 0..=top {
            if n < 2 {
                diffs.push(SparseMatrix::zeros(0, dim(n)));
                continue;
            }
            let m = differential.get(n).cloned().unwrap_or_else(|| SparseMatrix::zeros(dim(n - 1), dim(n)));
            if m.nrows() != dim(n - 1) || m.ncols() != dim(n) {
                return Err(Error::InvalidCoalgebra(format!(
                    "differential in degree {n} is {}x{}, expected {}x{}",
                    m.nrows(),
                    m.ncols(),
                    dim(n - 1),
                    dim(n)
                )));
            }
            diffs.push(m);
        }
        let mut cop = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let level = coproduct.get(n).cloned().unwrap_or_default();
            let level = if level.is_empty() { vec![Vec::new(); dim(n)] } else { level };
            if level.len() != dim(n) {
                return Err(Error::InvalidCoalgebra(format!("coproduct data in degree {n} has the wrong length")));
            }
            for (k, terms) in level.iter().enumerate() {
                for t in terms {
                    let ok = t.left.degree >= 1
                        && t.right.degree >= 1
                        && t.left.degree + t.right.degree == n
                        && t.left.index < dim(t.left.degree)
                        && t.right.index < dim(t.right.degree);
                    if !ok {
                        return Err(Error::InvalidCoalgebra(format!(
                            "coproduct term of {} has bad factors {:?} ⊗ {:?}",
                            names[n][k], t.left, t.right
                        )));
                    }
                }
            }
            cop.push(level);
        }
        let mut seen = std::collections::HashSet::new();
        for name in names.iter().flatten() {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidCoalgebra(format!("duplicate basis name {name:?}")));
            }
        }
        let mut c = Self { names, differential: diffs, coproduct: cop, degree_cap, complete };
        c.normalize_coproduct();
        Ok(c)
    }

    fn normalize_coproduct(&mut self) {
        for level in &mut self.coproduct {
            for terms in level.iter_mut() {
                let mut t = Tensor2::new();
                for term in terms.iter() {
                    add_term(&mut t, (term.left, term.right), term.coef.clone());
                }
                *terms = t.into_iter().map(|((left, right), coef)| CoTerm { coef, left, right }).collect();
            }
        }
    }

    pub fn top_degree(&self) -> usize {
        self.names.len() - 1
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// True when nothing exists above `degree_cap`.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Dimension of `C̄_n` (zero for `n = 0`).
    pub fn dim(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, Vec::len)
    }

    /// Dimension of `C_n`, counting the ground field in degree 0.
    pub fn full_dim(&self, n: usize) -> usize {
        if n == 0 {
            1
        } else {
            self.dim(n)
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        (1..=self.top_degree()).map(|n| self.dim(n)).collect()
    }

    pub fn name(&self, b: BasisId) -> &str {
        &self.names[b.degree][b.index]
    }

    pub fn names(&self, n: usize) -> &[String] {
        self.names.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn basis(&self, n: usize) -> impl Iterator<Item = BasisId> {
        (0..self.dim(n)).map(move |index| BasisId { degree: n, index })
    }

    pub fn all_basis(&self) -> impl Iterator<Item = BasisId> + '_ {
        (1..=self.top_degree()).flat_map(move |n| self.basis(n))
    }

    pub fn lookup(&self, name: &str) -> Option<BasisId> {
        self.all_basis().find(|&b| self.name(b) == name)
    }

    /// `∂: C̄_n -> C̄_{n-1}` (the zero matrix for `n <= 1` and above the top).
    pub fn differential(&self, n: usize) -> SparseMatrix {
        if n >= 2 && n <= self.top_degree() {
            self.differential[n].clone()
        } else {
            SparseMatrix::zeros(self.dim(n.saturating_sub(1)), self.dim(n))
        }
    }

    /// `∂: C_n -> C_{n-1}` including the ground field in degree 0.
    pub fn full_differential(&self, n: usize) -> SparseMatrix {
        if n <= 1 {
            SparseMatrix::zeros(if n == 1 { 1 } else { 0 }, self.full_dim(n))
        } else {
            self.differential(n)
        }
    }

    /// `∂b` as `(coefficient, basis)` pairs.
    pub fn boundary_of(&self, b: BasisId) -> Vec<(Rational, BasisId)> {
        if b.degree < 2 {
            return Vec::new();
        }
        self.differential[b.degree]
            .column(b.index)
            .iter()
            .map(|(i, c)| (c.clone(), BasisId { degree: b.degree - 1, index: i }))
            .collect()
    }

    pub fn coproduct_of(&self, b: BasisId) -> &[CoTerm] {
        &self.coproduct[b.degree][b.index]
    }

    pub fn coproduct_tensor(&self, b: BasisId) -> Tensor2 {
        self.coproduct_of(b).iter().map(|t| ((t.left, t.right), t.coef.clone())).collect()
    }

    /// Raw parts, for building modified copies.
    pub fn parts(&self) -> (Vec<Vec<String>>, Vec<SparseMatrix>, Vec<Vec<Vec<CoTerm>>>) {
        (self.names.clone(), self.differential.clone(), self.coproduct.clone())
    }

    /// Highest degree whose homology is determined by the stored data.
    pub fn exact_homology_through(&self) -> Option<usize> {
        if self.complete {
            None
        } else {
            Some(self.degree_cap.saturating_sub(1))
        }
    }

    pub fn homology_is_exact(&self, n: usize) -> bool {
        self.complete || n < self.degree_cap
    }

    pub fn homology_dim(&self, n: usize) -> usize {
        homology_at(&self.full_differential(n + 1), &self.full_differential(n))
            .expect("differential squares to zero")
            .dimension()
    }

    /// Checks `∂² = 0`, reduced coassociativity and co-Leibniz through the
    /// stored degrees.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut violations = Vec::new();
        for n in 3..=self.top_degree() {
            let prod = self.differential(n - 1).mul(&self.differential(n));
            let first = prod.triplets().next().map(|(_, j, _)| j);
            if let Some(j) = first {
                violations.push(format!("d^2 != 0 on {}", self.names[n][j]));
                break;
            }
        }
        'coassoc: for b in self.all_basis() {
            let (lhs, rhs) = self.coassociativity_sides(b);
            if lhs != rhs {
                violations.push(format!("coassociativity fails on {}", self.name(b)));
                break 'coassoc;
            }
        }
        for b in self.all_basis() {
            let (lhs, rhs) = self.leibniz_sides(b);
            if lhs != rhs {
                violations.push(format!("co-Leibniz fails on {}", self.name(b)));
                break;
            }
        }
        AxiomReport { violations }
    }

    fn coassociativity_sides(&self, b: BasisId) -> (Tensor3, Tensor3) {
        let mut lhs = Tensor3::new();
        let mut rhs = Tensor3::new();
        for t in self.coproduct_of(b) {
            for u in self.coproduct_of(t.left) {
                add_term(&mut lhs, (u.left, u.right, t.right), &t.coef * &u.coef);
            }
            for u in self.coproduct_of(t.right) {
                add_term(&mut rhs, (t.left, u.left, u.right), &t.coef * &u.coef);
            }
        }
        (lhs, rhs)
    }

    fn leibniz_sides(&self, b: BasisId) -> (Tensor2, Tensor2) {
        let mut lhs = Tensor2::new();
        for (c, x) in self.boundary_of(b) {
            for t in self.coproduct_of(x) {
                add_term(&mut lhs, (t.left, t.right), &c * &t.coef);
            }
        }
        let mut rhs = Tensor2::new();
        for t in self.coproduct_of(b) {
            for (c, x) in self.boundary_of(t.left) {
                add_term(&mut rhs, (x, t.right), &c * &t.coef);
            }
            for (c, y) in self.boundary_of(t.right) {
                add_term(&mut rhs, (t.left, y), sign(t.left.degree) * &c * &t.coef);
            }
        }
        (lhs, rhs)
    }

    /// Checks that every reduced coproduct is fixed by the graded twist
    /// `a ⊗ b -> (-1)^{|a||b|} b ⊗ a`; returns the first failing element.
    pub fn check_cocommutative(&self) -> Result<()> {
        for b in self.all_basis() {
            let t = self.coproduct_tensor(b);
            let mut twisted = Tensor2::new();
            for ((l, r), c) in &t {
                add_term(&mut twisted, (*r, *l), sign(l.degree * r.degree) * c);
            }
            if twisted != t {
                return Err(Error::NotCocommutative { witness: self.name(b).to_string() });
            }
        }
        Ok(())
    }

    pub fn is_cocommutative(&self) -> bool {
        self.check_cocommutative().is_ok()
    }

    /// The isomorphic coalgebra whose degree-`n` basis is given by the columns
    /// of `change[n]` (in old coordinates). Missing entries mean identity.
    pub fn change_basis(&self, change: &[SparseMatrix]) -> Result<Self> {
        let top = self.top_degree();
        let p = |n: usize| change.get(n).cloned().unwrap_or_else(|| SparseMatrix::identity(self.dim(n)));
        let mut inverses = vec![SparseMatrix::zeros(0, 0)];
        for n in 1..=top {
            let m = p(n);
            if m.nrows() != self.dim(n) || m.ncols() != self.dim(n) {
                return Err(Error::InvalidCoalgebra(format!("change of basis in degree {n} has the wrong shape")));
            }
            inverses.push(
                m.inverse()
                    .ok_or_else(|| Error::InvalidCoalgebra(format!("change of basis in degree {n} is singular")))?,
            );
        }
        let mut differential = vec![SparseMatrix::zeros(0, 0); top + 1];
        for n in 2..=top {
            differential[n] = inverses[n - 1].mul(&self.differential(n)).mul(&p(n));
        }
        let mut coproduct = vec![Vec::new(); top + 1];
        for n in 1..=top {
            let pn = p(n);
            for k in 0..self.dim(n) {
                let mut old = Tensor2::new();
                for (i, c) in pn.column(k).iter() {
                    for t in self.coproduct_of(BasisId { degree: n, index: i }) {
                        add_term(&mut old, (t.left, t.right), c * &t.coef);
                    }
                }
                let mut new = Tensor2::new();
                for ((l, r), c) in old {
                    for (a, ca) in inverses[l.degree].column(l.index).iter() {
                        for (b, cb) in inverses[r.degree].column(r.index).iter() {
                            let key = (BasisId { degree: l.degree, index: a }, BasisId { degree: r.degree, index: b });
                            add_term(&mut new, key, &c * ca * cb);
                        }
                    }
                }
                coproduct[n].push(new.into_iter().map(|((left, right), coef)| CoTerm { coef, left, right }).collect());
            }
        }
        Self::new(self.names.clone(), differential, coproduct, self.degree_cap, self.complete)
    }

    pub fn to_json(&self) -> CoalgebraJson {
        let mut basis = BTreeMap::new();
        let mut differential = BTreeMap::new();
        let mut coproduct = BTreeMap::new();
        for n in 1..=self.top_degree() {
            basis.insert(n, self.names[n].clone());
            for b in self.basis(n) {
                let d: Vec<(String, String)> =
                    self.boundary_of(b).iter().map(|(c, x)| (format_rational(c), self.name(*x).to_string())).collect();
                if !d.is_empty() {
                    differential.insert(self.name(b).to_string(), d);
                }
                let cp: Vec<(String, String, String)> = self
                    .coproduct_of(b)
                    .iter()
                    .map(|t| (format_rational(&t.coef), self.name(t.left).to_string(), self.name(t.right).to_string()))
                    .collect();
                if !cp.is_empty() {
                    coproduct.insert(self.name(b).to_string(), cp);
                }
            }
        }
        CoalgebraJson { basis, differential, coproduct, degree_cap: Some(self.degree_cap), truncated: !self.complete }
    }

    pub fn from_json(json: &CoalgebraJson) -> Result<Self> {
        let top = json.basis.keys().copied().max().unwrap_or(0);
        let mut names = vec![Vec::new(); top + 1];
        let mut lookup = BTreeMap::new();
        for (&n, list) in &json.basis {
            if n == 0 && !list.is_empty() {
                return Err(Error::InvalidCoalgebra("degree 0 is the ground field and takes no basis names".into()));
            }
            for (k, name) in list.iter().enumerate() {
                lookup.insert(name.clone(), BasisId { degree: n, index: k });
            }
            names[n] = list.clone();
        }
        let find = |name: &str| {
            lookup.get(name).copied().ok_or_else(|| Error::InvalidCoalgebra(format!("unknown basis element {name:?}")))
        };
        let dim = |n: usize| names.get(n).map_or(0, Vec::len);
        let mut triplets: Vec<Vec<(usize, usize, Rational)>> = vec![Vec::new(); top + 1];
        for (src, terms) in &json.differential {
            let s = find(src)?;
            for (c, tgt) in terms {
                let t = find(tgt)?;
                if t.degree + 1 != s.degree {
                    return Err(Error::InvalidCoalgebra(format!(
                        "differential of {src} hits {tgt} of the wrong degree"
                    )));
                }
                triplets[s.degree].push((t.index, s.index, parse_rational(c)?));
            }
        }
        let differential = (0..=top)
            .map(|n| {
                let rows = if n == 0 { 0 } else { dim(n - 1) };
                SparseMatrix::from_triplets(rows, dim(n), std::mem::take(&mut triplets[n]))
            })
            .collect();
        let mut coproduct: Vec<Vec<Vec<CoTerm>>> = (0..=top).map(|n| vec![Vec::new(); dim(n)]).collect();
        for (src, terms) in &json.coproduct {
            let s = find(src)?;
            for (c, l, r) in terms {
                coproduct[s.degree][s.index].push(CoTerm { coef: parse_rational(c)?, left: find(l)?, right: find(r)? });
            }
        }
        let cap = json.degree_cap.unwrap_or(top);
        Self::new(names, differential, coproduct, cap, !json.truncated)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: CoalgebraJson = serde_json::from_str(s)?;
        Self::from_json(&json)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }
}

/// JSON form of a coalgebra:
/// `{"basis": {"2": ["c"]}, "differential": {"c": [["2", "a"]]},
///   "coproduct": {"c": [["1", "a", "a"]]}}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CoalgebraJson {
    pub basis: BTreeMap<usize, Vec<String>>,
    #[serde(default)]
    pub differential: BTreeMap<String, Vec<(String, String)>>,
    #[serde(default)]
    pub coproduct: BTreeMap<String, Vec<(String, String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<usize>,
    #[serde(default)]
    pub truncated: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "all coalgebra axioms hold")
        } else {
            write!(f, "{}", self.violations.join("; "))
        }
    }
}

/// Pointed normalized chains with the reduced Alexander-Whitney coproduct.
pub fn normalized_chains(s: &SimplicialSet) -> Result<DgCoalgebra> {
    let report = s.validate();
    if !report.is_valid() {
        return Err(Error::InvalidSimplicialSet(report.to_string()));
    }
    let top = s.top_degree();
    let names: Vec<Vec<String>> = (0..=top).map(|n| s.names(n).to_vec()).collect();
    let as_basis = |r: &SimplexRef| r.as_nondegenerate().map(|id| BasisId { degree: id.degree, index: id.index });
    let mut differential = vec![SparseMatrix::zeros(0, 0); top + 1];
    let mut coproduct = vec![Vec::new(); top + 1];
    for n in 1..=top {
        let mut triplets = Vec::new();
        for id in s.ids(n) {
            let sigma = SimplexRef::nondegenerate(id);
            if n >= 2 {
                for i in 0..=n {
                    if let Some(f) = as_basis(&s.face(i, &sigma)) {
                        triplets.push((f.index, id.index, sign(i)));
                    }
                }
            }
            let mut terms = Vec::new();
            for p in 1..n {
                let front = as_basis(&s.front_face(&sigma, p));
                let back = as_basis(&s.back_face(&sigma, n - p));
                if let (Some(left), Some(right)) = (front, back) {
                    terms.push(CoTerm { coef: q(1), left, right });
                }
            }
            coproduct[n].push(terms);
        }
        if n >= 2 {
            differential[n] = SparseMatrix::from_triplets(s.count(n - 1), s.count(n), triplets);
        }
    }
    DgCoalgebra::new(names, differential, coproduct, s.dimension_cap(), !s.is_truncated())
}

/// Coalgebra map given by one matrix per degree (`C̄_n -> C̄'_n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgCoalgebraMap {
    source: DgCoalgebra,
    target: DgCoalgebra,
    matrices: Vec<SparseMatrix>,
}

impl DgCoalgebraMap {
    /// Builds a map and checks that it commutes with `∂` and `Δ̄`.
    pub fn new(source: DgCoalgebra, target: DgCoalgebra, matrices: Vec<SparseMatrix>) -> Result<Self> {
        let top = source.top_degree();
        let mut ms = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let m = if n == 0 {
                SparseMatrix::zeros(0, 0)
            } else {
                matrices.get(n).cloned().unwrap_or_else(|| SparseMatrix::zeros(target.dim(n), source.dim(n)))
            };
            if n > 0 && (m.nrows() != target.dim(n) || m.ncols() != source.dim(n)) {
                return Err(Error::NotChainMap(format!("matrix in degree {n} has the wrong shape")));
            }
            ms.push(m);
        }
        let f = Self { source, target, matrices: ms };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for n in 2..=s.top_degree() {
            let lhs = t.differential(n).mul(&self.matrices[n]);
            let rhs = self.matrices[n - 1].mul(&s.differential(n));
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("map does not commute with the differential in degree {n}")));
            }
        }
        for b in s.all_basis() {
            let mut lhs = Tensor2::new();
            for (i, c) in self.matrices[b.degree].column(b.index).iter() {
                for term in t.coproduct_of(BasisId { degree: b.degree, index: i }) {
                    add_term(&mut lhs, (term.left, term.right), c * &term.coef);
                }
            }
            let mut rhs = Tensor2::new();
            for term in s.coproduct_of(b) {
                let fl = self.matrices[term.left.degree].column(term.left.index);
                let fr = self.matrices[term.right.degree].column(term.right.index);
                for (i, a) in fl.iter() {
                    for (j, c) in fr.iter() {
                        let key = (
                            BasisId { degree: term.left.degree, index: i },
                            BasisId { degree: term.right.degree, index: j },
                        );
                        add_term(&mut rhs, key, &term.coef * a * c);
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("map does not commute with the coproduct on {}", s.name(b))));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &DgCoalgebra {
        &self.source
    }

    pub fn target(&self) -> &DgCoalgebra {
        &self.target
    }

    /// `C̄_n -> C̄'_n` (zero above the source's top degree).
    pub fn matrix(&self, n: usize) -> SparseMatrix {
        self.matrices
            .get(n)
            .filter(|_| n >= 1)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(self.target.dim(n), self.source.dim(n)))
    }

    /// `C_n -> C'_n`, the identity on the ground field in degree 0.
    pub fn full_matrix(&self, n: usize) -> SparseMatrix {
        if n == 0 {
            SparseMatrix::identity(1)
        } else {
            self.matrix(n)
        }
    }

    pub fn image(&self, b: BasisId) -> SparseVec {
        self.matrix(b.degree).column(b.index)
    }

    pub fn identity(c: &DgCoalgebra) -> Self {
        let matrices = (0..=c.top_degree()).map(|n| SparseMatrix::identity(c.dim(n))).collect();
        Self { source: c.clone(), target: c.clone(), matrices }
    }

    /// `g ∘ f`
    pub fn compose(f: &Self, g: &Self) -> Result<Self> {
        if f.target != g.source {
            return Err(Error::NotChainMap("maps are not composable".into()));
        }
        let matrices = (0..=f.source.top_degree()).map(|n| g.matrix(n).mul(&f.matrix(n))).collect();
        Self::new(f.source.clone(), g.target.clone(), matrices)
    }

    /// Invertible in every degree, hence an isomorphism of dg coalgebras.
    pub fn is_isomorphism(&self) -> bool {
        let top = self.source.top_degree().max(self.target.top_degree());
        self.source.complete == self.target.complete
            && self.source.degree_cap == self.target.degree_cap
            && (1..=top).all(|n| self.matrix(n).is_invertible())
    }

    /// Compares homology degree by degree through `through`.
    pub fn is_quasi_isomorphism(&self, through: usize) -> QisVerdict {
        let (s, t) = (&self.source, &self.target);
        let mut degrees = Vec::new();
        for n in 0..=through {
            let hs = homology_at(&s.full_differential(n + 1), &s.full_differential(n)).expect("valid differential");
            let ht = homology_at(&t.full_differential(n + 1), &t.full_differential(n)).expect("valid differential");
            let induced = induced_map_on_homology(&self.full_matrix(n), &hs, &ht).expect("chain map");
            let iso = hs.dimension() == ht.dimension() && induced.is_invertible();
            degrees.push(QisDegree {
                n,
                dim_src: hs.dimension(),
                dim_dst: ht.dimension(),
                iso,
                exact: s.homology_is_exact(n) && t.homology_is_exact(n),
            });
        }
        QisVerdict { degrees }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QisDegree {
    pub n: usize,
    pub dim_src: usize,
    pub dim_dst: usize,
    pub iso: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QisVerdict {
    pub degrees: Vec<QisDegree>,
}

impl QisVerdict {
    pub fn failing_degrees(&self) -> Vec<usize> {
        self.degrees.iter().filter(|d| !d.iso).map(|d| d.n).collect()
    }

    pub fn all_iso(&self) -> bool {
        self.degrees.iter().all(|d| d.iso)
    }
}

/// Chains of a simplicial map: nondegenerate images are kept, degenerate ones
/// go to zero.
pub fn chains_map(f: &SimplicialMap) -> Result<DgCoalgebraMap> {
    let src = normalized_chains(f.source())?;
    let dst = normalized_chains(f.target())?;
    let s = f.source();
    let matrices = (0..=s.top_degree())
        .map(|n| {
            let triplets =
                s.ids(n).filter_map(|id| f.image(id).as_nondegenerate().map(|img| (img.index, id.index, q(1))));
            SparseMatrix::from_triplets(dst.dim(n), src.dim(n), triplets)
        })
        .collect();
    DgCoalgebraMap::new(src, dst, matrices)
}
