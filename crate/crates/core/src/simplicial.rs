//! Finite reduced simplicial sets.
//!
//! A reduced simplicial set has exactly one vertex, which stays implicit.
//! Only nondegenerate simplices of degree >= 1 are stored. A face that is
//! degenerate is recorded in Eilenberg-Zilber form: an iterated degeneracy
//! `s_{j_k} ... s_{j_1}` (with `j_k > ... > j_1`) applied to either a
//! nondegenerate simplex or the vertex. Degeneracies are never enumerated;
//! faces of degenerate simplices are computed on demand from the
//! simplicial identities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Position of a nondegenerate simplex: its degree and its index in that
/// degree's ordered list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexId {
    pub degree: usize,
    pub index: usize,
}

/// An arbitrary simplex in normal form: `degeneracies` (outermost first,
/// strictly decreasing) applied to `core`, where `core == None` is the vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub core: Option<SimplexId>,
    pub degeneracies: Vec<usize>,
}

impl SimplexRef {
    pub fn nondegenerate(id: SimplexId) -> Self {
        Self { core: Some(id), degeneracies: Vec::new() }
    }

    /// The unique `degree`-simplex that is a degeneracy of the vertex.
    pub fn basepoint(degree: usize) -> Self {
        Self { core: None, degeneracies: (0..degree).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.core.map_or(0, |c| c.degree) + self.degeneracies.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degeneracies.is_empty() || self.core.is_none()
    }

    /// Non-degenerate simplex this reference names, if it is one.
    pub fn as_nondegenerate(&self) -> Option<SimplexId> {
        if self.degeneracies.is_empty() {
            self.core
        } else {
            None
        }
    }

    /// Applies further degeneracies (outermost first) and renormalizes.
    pub fn degenerate(&self, outer: &[usize]) -> Self {
        let mut seq = outer.to_vec();
        seq.extend_from_slice(&self.degeneracies);
        Self { core: self.core, degeneracies: normalize_degeneracies(seq) }
    }
}

/// Rewrites a word `s_{a_1} s_{a_2} ... s_{a_m}` (outermost first) into the
/// strictly decreasing normal form using `s_i s_j = s_{j+1} s_i` for `i <= j`.
pub fn normalize_degeneracies(mut seq: Vec<usize>) -> Vec<usize> {
    loop {
        let mut changed = false;
        for p in 0..seq.len().saturating_sub(1) {
            let (a, b) = (seq[p], seq[p + 1]);
            if a <= b {
                seq[p] = b + 1;
                seq[p + 1] = a;
                changed = true;
            }
        }
        if !changed {
            return seq;
        }
    }
}

/// A finite reduced simplicial set, possibly a truncation of an infinite one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    /// `names[n]` lists the nondegenerate `n`-simplices; `names[0]` is empty.
    names: Vec<Vec<String>>,
    /// `faces[n][k]` holds the `n + 1` faces of simplex `(n, k)`.
    faces: Vec<Vec<Vec<SimplexRef>>>,
    dimension_cap: usize,
    truncated: bool,
    index: HashMap<String, SimplexId>,
}

impl SimplicialSet {
    /// The one-point simplicial set.
    pub fn point() -> Self {
        Self {
            names: vec![Vec::new()],
            faces: vec![Vec::new()],
            dimension_cap: 0,
            truncated: false,
            index: HashMap::new(),
        }
    }

    /// Assembles a simplicial set from per-degree simplex lists. Checks
    /// structure (face counts, face degrees, unique names, references in
    /// range) but not the simplicial identities; see [`Self::validate`].
    pub fn from_parts(
        simplices: Vec<Vec<(String, Vec<SimplexRef>)>>,
        dimension_cap: Option<usize>,
        truncated: bool,
    ) -> Result<Self> {
        let mut names = vec![Vec::new()];
        let mut faces = vec![Vec::new()];
        let mut index = HashMap::new();
        if simplices.first().is_some_and(|d0| !d0.is_empty()) {
            return Err(Error::InvalidSimplicialSet(
                "reduced simplicial sets have a single implicit vertex; degree 0 must be empty".into(),
            ));
        }
        for (n, level) in simplices.into_iter().enumerate().skip(1) {
            let mut level_names = Vec::with_capacity(level.len());
            let mut level_faces = Vec::with_capacity(level.len());
            for (k, (name, fs)) in level.into_iter().enumerate() {
                if name == "*" || name.is_empty() || name.contains(['(', ')']) {
                    return Err(Error::InvalidSimplicialSet(format!("reserved simplex name {name:?}")));
                }
                if index.insert(name.clone(), SimplexId { degree: n, index: k }).is_some() {
                    return Err(Error::InvalidSimplicialSet(format!("duplicate simplex name {name:?}")));
                }
                if fs.len() != n + 1 {
                    return Err(Error::InvalidSimplicialSet(format!(
                        "simplex {name} of degree {n} has {} faces, expected {}",
                        fs.len(),
                        n + 1
                    )));
                }
                level_names.push(name);
                level_faces.push(fs);
            }
            names.push(level_names);
            faces.push(level_faces);
        }
        while names.len() > 1 && names.last().is_some_and(Vec::is_empty) {
            names.pop();
            faces.pop();
        }
        let top = names.len() - 1;
        let dimension_cap = dimension_cap.unwrap_or(top);
        if dimension_cap < top {
            return Err(Error::InvalidSimplicialSet(format!(
                "dimension cap {dimension_cap} is below the top simplex degree {top}"
            )));
        }
        let s = Self { names, faces, dimension_cap, truncated, index };
        for (n, level) in s.faces.iter().enumerate() {
            for (k, fs) in level.iter().enumerate() {
                for (i, f) in fs.iter().enumerate() {
                    s.check_ref(f)
                        .map_err(|e| Error::InvalidSimplicialSet(format!("face d{i} of {}: {e}", s.names[n][k])))?;
                    if f.degree() + 1 != n {
                        return Err(Error::InvalidSimplicialSet(format!(
                            "face d{i} of {} has degree {}, expected {}",
                            s.names[n][k],
                            f.degree(),
                            n - 1
                        )));
                    }
                }
            }
        }
        Ok(s)
    }

    fn check_ref(&self, r: &SimplexRef) -> std::result::Result<(), String> {
        if let Some(id) = r.core {
            if id.degree == 0 || id.degree >= self.names.len() || id.index >= self.names[id.degree].len() {
                return Err(format!("unknown simplex {id:?}"));
            }
        }
        if normalize_degeneracies(r.degeneracies.clone()) != r.degeneracies {
            return Err("degeneracies not in normal form".into());
        }
        let mut d = r.core.map_or(0, |c| c.degree);
        for &j in r.degeneracies.iter().rev() {
            if j > d {
                return Err(format!("s{j} applied in degree {d}"));
            }
            d += 1;
        }
        Ok(())
    }

    pub fn dimension_cap(&self) -> usize {
        self.dimension_cap
    }

    /// True when simplices above `dimension_cap` exist but were not built.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn top_degree(&self) -> usize {
        self.names.len() - 1
    }

    pub fn count(&self, degree: usize) -> usize {
        self.names.get(degree).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        (1..=self.top_degree()).map(|n| self.count(n)).collect()
    }

    pub fn names(&self, degree: usize) -> &[String] {
        self.names.get(degree).map_or(&[], Vec::as_slice)
    }

    pub fn name(&self, id: SimplexId) -> &str {
        &self.names[id.degree][id.index]
    }

    pub fn lookup(&self, name: &str) -> Option<SimplexId> {
        self.index.get(name).copied()
    }

    pub fn ids(&self, degree: usize) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.count(degree)).map(move |index| SimplexId { degree, index })
    }

    pub fn stored_faces(&self, id: SimplexId) -> &[SimplexRef] {
        &self.faces[id.degree][id.index]
    }

    /// `d_i` of an arbitrary simplex.
    pub fn face(&self, i: usize, r: &SimplexRef) -> SimplexRef {
        let n = r.degree();
        assert!(n >= 1 && i <= n, "face d{i} of a {n}-simplex");
        let mut i = i;
        let mut emitted = Vec::with_capacity(r.degeneracies.len());
        for (k, &j) in r.degeneracies.iter().enumerate() {
            if i < j {
                emitted.push(j - 1);
            } else if i == j || i == j + 1 {
                emitted.extend_from_slice(&r.degeneracies[k + 1..]);
                return SimplexRef { core: r.core, degeneracies: normalize_degeneracies(emitted) };
            } else {
                emitted.push(j);
                i -= 1;
            }
        }
        let core = r.core.expect("the vertex has no faces");
        self.faces[core.degree][core.index][i].degenerate(&emitted)
    }

    /// Front `p`-face: spanned by vertices `0..=p`.
    pub fn front_face(&self, r: &SimplexRef, p: usize) -> SimplexRef {
        let mut cur = r.clone();
        for k in (p + 1..=r.degree()).rev() {
            cur = self.face(k, &cur);
        }
        cur
    }

    /// Back `q`-face: spanned by the last `q + 1` vertices.
    pub fn back_face(&self, r: &SimplexRef, q: usize) -> SimplexRef {
        let mut cur = r.clone();
        for _ in 0..r.degree() - q {
            cur = self.face(0, &cur);
        }
        cur
    }

    /// Checks the simplicial identities `d_i d_j = d_{j-1} d_i` (`i < j`)
    /// on every stored simplex.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for n in 2..=self.top_degree() {
            for id in self.ids(n) {
                let sigma = SimplexRef::nondegenerate(id);
                for j in 1..=n {
                    let dj = self.face(j, &sigma);
                    for i in 0..j {
                        let lhs = self.face(i, &dj);
                        let rhs = self.face(j - 1, &self.face(i, &sigma));
                        if lhs != rhs {
                            violations.push(format!(
                                "{}: d{i} d{j} = {} but d{} d{i} = {}",
                                self.name(id),
                                self.format_ref(&lhs),
                                j - 1,
                                self.format_ref(&rhs)
                            ));
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn format_ref(&self, r: &SimplexRef) -> String {
        if r.core.is_none() {
            return "*".into();
        }
        let core = self.name(r.core.unwrap()).to_string();
        if r.degeneracies.is_empty() {
            return core;
        }
        let prefix: String = r.degeneracies.iter().map(|j| format!("s{j}")).collect();
        format!("{prefix}({core})")
    }

    /// Parses `*`, `name`, or `s2s0(name)` / `s1(*)`.
    pub fn parse_ref(&self, text: &str, degree: usize) -> Result<SimplexRef> {
        let text = text.trim();
        if text == "*" {
            return Ok(SimplexRef::basepoint(degree));
        }
        if let Some(id) = self.lookup(text) {
            return Ok(SimplexRef::nondegenerate(id));
        }
        parse_degenerate_ref(text, degree, |name| self.lookup(name))
    }

    pub fn to_json(&self) -> SimplicialSetJson {
        let mut simplices = BTreeMap::new();
        let mut faces = BTreeMap::new();
        for n in 1..=self.top_degree() {
            simplices.insert(n, self.names[n].clone());
            for id in self.ids(n) {
                let fs = self.stored_faces(id).iter().map(|f| self.format_ref(f)).collect();
                faces.insert(self.name(id).to_string(), fs);
            }
        }
        SimplicialSetJson { simplices, faces, dimension_cap: Some(self.dimension_cap), truncated: self.truncated }
    }

    pub fn from_json(json: &SimplicialSetJson) -> Result<Self> {
        let top = json.simplices.keys().copied().max().unwrap_or(0);
        let mut lookup: HashMap<&str, SimplexId> = HashMap::new();
        for (&n, names) in &json.simplices {
            for (k, name) in names.iter().enumerate() {
                lookup.insert(name.as_str(), SimplexId { degree: n, index: k });
            }
        }
        let mut levels: Vec<Vec<(String, Vec<SimplexRef>)>> = vec![Vec::new(); top + 1];
        if json.simplices.get(&0).is_some_and(|v| !v.is_empty()) {
            return Err(Error::InvalidSimplicialSet(
                "reduced simplicial sets have a single implicit vertex; degree 0 must be empty".into(),
            ));
        }
        for (&n, names) in &json.simplices {
            for name in names {
                let texts = json
                    .faces
                    .get(name)
                    .ok_or_else(|| Error::InvalidSimplicialSet(format!("no faces given for simplex {name}")))?;
                let fs = texts
                    .iter()
                    .map(|t| {
                        let t = t.trim();
                        if t == "*" {
                            Ok(SimplexRef::basepoint(n - 1))
                        } else if let Some(&id) = lookup.get(t) {
                            Ok(SimplexRef::nondegenerate(id))
                        } else {
                            parse_degenerate_ref(t, n - 1, |s| lookup.get(s).copied())
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                levels[n].push((name.clone(), fs));
            }
        }
        for name in json.faces.keys() {
            if !lookup.contains_key(name.as_str()) {
                return Err(Error::InvalidSimplicialSet(format!("faces given for unknown simplex {name}")));
            }
        }
        Self::from_parts(levels, json.dimension_cap, json.truncated)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: SimplicialSetJson = serde_json::from_str(s)?;
        Self::from_json(&json)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }
}

fn parse_degenerate_ref(text: &str, degree: usize, lookup: impl Fn(&str) -> Option<SimplexId>) -> Result<SimplexRef> {
    let bad = || Error::InvalidSimplicialSet(format!("cannot parse simplex reference {text:?}"));
    let open = text.find('(').ok_or_else(bad)?;
    if !text.ends_with(')') {
        return Err(bad());
    }
    let inner = &text[open + 1..text.len() - 1];
    let mut degeneracies = Vec::new();
    for part in text[..open].split('s').skip(1) {
        degeneracies.push(part.parse::<usize>().map_err(|_| bad())?);
    }
    if !text.starts_with('s') || degeneracies.is_empty() {
        return Err(bad());
    }
    let core = if inner == "*" { None } else { Some(lookup(inner).ok_or_else(bad)?) };
    let r = match core {
        None => SimplexRef::basepoint(degree),
        Some(_) => SimplexRef { core, degeneracies: normalize_degeneracies(degeneracies) },
    };
    if r.degree() != degree {
        return Err(Error::InvalidSimplicialSet(format!(
            "reference {text:?} has degree {}, expected {degree}",
            r.degree()
        )));
    }
    Ok(r)
}

/// JSON form: `{"simplices": {"1": ["a"]}, "faces": {"a": ["*", "*"]}}`.
/// `"*"` marks a face degenerate to the basepoint; `"s1s0(a)"` names a
/// degeneracy of a nondegenerate simplex.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SimplicialSetJson {
    pub simplices: BTreeMap<usize, Vec<String>>,
    pub faces: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension_cap: Option<usize>,
    #[serde(default)]
    pub truncated: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// `Δ[n]/∂Δ[n]`: one vertex and a single nondegenerate `n`-simplex.
pub fn minimal_sphere(n: usize) -> Result<SimplicialSet> {
    if n == 0 {
        return Err(Error::InvalidSimplicialSet("the minimal sphere needs n >= 1".into()));
    }
    let mut levels = vec![Vec::new(); n + 1];
    levels[n].push(("sigma".to_string(), vec![SimplexRef::basepoint(n - 1); n + 1]));
    SimplicialSet::from_parts(levels, None, false)
}

/// Finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    /// Checks shape, identity, associativity and inverses exhaustively.
    pub fn new(order: usize, mult: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let g = Self { order, mult, identity };
        g.check()?;
        Ok(g)
    }

    fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidGroupTable(m));
        let n = self.order;
        if n == 0 {
            return bad("order must be positive".into());
        }
        if self.mult.len() != n || self.mult.iter().any(|r| r.len() != n) {
            return bad(format!("table must be {n}x{n}"));
        }
        if self.identity >= n {
            return bad("identity index out of range".into());
        }
        if self.mult.iter().flatten().any(|&x| x >= n) {
            return bad("entry out of range".into());
        }
        for a in 0..n {
            if self.mul(self.identity, a) != a || self.mul(a, self.identity) != a {
                return bad(format!("{} is not a two-sided identity for {a}", self.identity));
            }
            if !(0..n).any(|b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity) {
                return bad(format!("element {a} has no inverse"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == self.identity).expect("validated group")
    }

    pub fn non_identity(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&g| g != self.identity)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self { order: n, mult, identity: 0 }
    }

    /// `a x b`, element `(i, j)` stored at index `i * |b| + j`.
    pub fn product(a: &Self, b: &Self) -> Self {
        let n = a.order * b.order;
        let split = |x: usize| (x / b.order, x % b.order);
        let mult = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let ((xa, xb), (ya, yb)) = (split(x), split(y));
                        a.mul(xa, ya) * b.order + b.mul(xb, yb)
                    })
                    .collect()
            })
            .collect();
        Self { order: n, mult, identity: a.identity * b.order + b.identity }
    }

    /// Dihedral group of order `2n`: rotations `0..n`, reflections `n..2n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let decode = |x: usize| (x / n, x % n);
        let mult = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let ((fx, rx), (fy, ry)) = (decode(x), decode(y));
                        // (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f + g)
                        let r = if fx == 0 { (rx + ry) % n } else { (rx + n - ry) % n };
                        ((fx + fy) % 2) * n + r
                    })
                    .collect()
            })
            .collect();
        Self { order: 2 * n, mult, identity: 0 }
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations(&all_permutations(3))
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // index = 2 * unit + sign, unit in {1, i, j, k}
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            // (result unit, negated)
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let mult = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (u, neg) = unit_mul(x / 2, y / 2);
                        let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
                        2 * u + sign
                    })
                    .collect()
            })
            .collect();
        Self { order: 8, mult, identity: 0 }
    }

    fn from_permutations(perms: &[Vec<usize>]) -> Self {
        let index: HashMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let mult = perms.iter().map(|a| perms.iter().map(|b| index[&compose(a, b)]).collect()).collect();
        let id: Vec<usize> = (0..perms[0].len()).collect();
        Self { order: perms.len(), mult, identity: index[&id] }
    }

    /// Looks up a named group: `z<n>`, `z2xz2` (or `v4`), `z2xz4`, `z2xz2xz2`,
    /// `s3`, `d<n>` (order `2n`), `q8`, `trivial`.
    pub fn by_name(name: &str) -> Result<Self> {
        let lower = name.trim().to_ascii_lowercase();
        let unknown = || Error::InvalidGroupTable(format!("unknown group name {name:?}"));
        if lower == "trivial" || lower == "1" {
            return Ok(Self::trivial());
        }
        if lower == "v4" || lower == "klein" {
            return Ok(Self::product(&Self::cyclic(2), &Self::cyclic(2)));
        }
        if lower == "s3" {
            return Ok(Self::symmetric3());
        }
        if lower == "q8" {
            return Ok(Self::quaternion());
        }
        if lower.contains('x') {
            let mut parts = lower.split('x').map(Self::by_name);
            let first = parts.next().ok_or_else(unknown)??;
            return parts.try_fold(first, |acc, g| Ok(Self::product(&acc, &g?)));
        }
        let parse_n = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1);
        if let Some(n) = lower.strip_prefix('z').and_then(parse_n) {
            return Ok(Self::cyclic(n));
        }
        if let Some(n) = lower.strip_prefix('d').and_then(parse_n) {
            return Ok(Self::dihedral(n));
        }
        Err(unknown())
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let g: GroupTable = serde_json::from_str(s)?;
        g.check()?;
        Ok(g)
    }

    /// Checks that `hom[i]` (an element of `target`) defines a homomorphism.
    pub fn check_homomorphism(&self, target: &GroupTable, hom: &[usize]) -> Result<()> {
        if hom.len() != self.order || hom.iter().any(|&x| x >= target.order) {
            return Err(Error::InvalidGroupTable("homomorphism has the wrong shape".into()));
        }
        for a in 0..self.order {
            for b in 0..self.order {
                if hom[self.mul(a, b)] != target.mul(hom[a], hom[b]) {
                    return Err(Error::InvalidGroupTable(format!("not a homomorphism at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn bar_name(tuple: &[usize]) -> String {
    let parts: Vec<String> = tuple.iter().map(|g| g.to_string()).collect();
    format!("[{}]", parts.join("|"))
}

/// Simplex of a nerve named by a bar tuple, which may contain the identity.
fn nerve_ref(group: &GroupTable, ids: &HashMap<Vec<usize>, SimplexId>, tuple: &[usize]) -> SimplexRef {
    let positions: Vec<usize> = (0..tuple.len()).filter(|&p| tuple[p] == group.identity).collect();
    let core: Vec<usize> = tuple.iter().copied().filter(|&g| g != group.identity).collect();
    if core.is_empty() {
        return SimplexRef::basepoint(tuple.len());
    }
    // inserting the identity at slot p is s_p; the last slot is outermost
    let degeneracies: Vec<usize> = positions.into_iter().rev().collect();
    SimplexRef { core: Some(ids[&core]), degeneracies }
}

fn bar_faces(group: &GroupTable, tuple: &[usize]) -> Vec<Vec<usize>> {
    let n = tuple.len();
    (0..=n)
        .map(|i| {
            if i == 0 {
                tuple[1..].to_vec()
            } else if i == n {
                tuple[..n - 1].to_vec()
            } else {
                let mut t = tuple[..i - 1].to_vec();
                t.push(group.mul(tuple[i - 1], tuple[i]));
                t.extend_from_slice(&tuple[i + 1..]);
                t
            }
        })
        .collect()
}

fn tuples(elements: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                elements.iter().map(move |&g| {
                    let mut u = t.clone();
                    u.push(g);
                    u
                })
            })
            .collect();
    }
    out
}

fn nerve_ids(group: &GroupTable, trunc: usize) -> (Vec<Vec<Vec<usize>>>, HashMap<Vec<usize>, SimplexId>) {
    let elements: Vec<usize> = group.non_identity().collect();
    let mut by_degree = vec![Vec::new()];
    let mut ids = HashMap::new();
    for n in 1..=trunc {
        let level = tuples(&elements, n);
        for (k, t) in level.iter().enumerate() {
            ids.insert(t.clone(), SimplexId { degree: n, index: k });
        }
        by_degree.push(level);
    }
    (by_degree, ids)
}

/// Nerve of a finite group through degree `trunc >= 2`, in bar notation.
pub fn nerve(group: &GroupTable, trunc: usize) -> Result<SimplicialSet> {
    if trunc < 2 {
        return Err(Error::BoundTooSmall("nerve truncation must be at least 2".into()));
    }
    group.check()?;
    if group.order == 1 {
        return Ok(SimplicialSet::point());
    }
    let (by_degree, ids) = nerve_ids(group, trunc);
    let levels = by_degree
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|t| {
                    let faces = bar_faces(group, t).iter().map(|f| nerve_ref(group, &ids, f)).collect();
                    (bar_name(t), faces)
                })
                .collect()
        })
        .collect();
    SimplicialSet::from_parts(levels, Some(trunc), true)
}

/// Map of reduced simplicial sets, given on nondegenerate simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    /// `assignment[n][k]` is the image of simplex `(n, k)`.
    assignment: Vec<Vec<SimplexRef>>,
}

impl SimplicialMap {
    /// Builds a map and checks degrees and commutation with all faces.
    pub fn new(source: SimplicialSet, target: SimplicialSet, assignment: Vec<Vec<SimplexRef>>) -> Result<Self> {
        let f = Self { source, target, assignment };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<()> {
        let s = &self.source;
        if self.assignment.len() < s.top_degree() + 1 {
            return Err(Error::InvalidMap("assignment is missing degrees".into()));
        }
        if s.is_truncated() && self.target.is_truncated() && self.target.dimension_cap() < s.dimension_cap() {
            return Err(Error::InvalidMap("target is truncated below the source".into()));
        }
        for n in 1..=s.top_degree() {
            if self.assignment[n].len() != s.count(n) {
                return Err(Error::InvalidMap(format!("degree {n} assignment has the wrong length")));
            }
            for id in s.ids(n) {
                let img = &self.assignment[n][id.index];
                self.target.check_ref(img).map_err(Error::InvalidMap)?;
                if img.degree() != n {
                    return Err(Error::InvalidMap(format!(
                        "{} is sent to a simplex of degree {}",
                        s.name(id),
                        img.degree()
                    )));
                }
                let sigma = SimplexRef::nondegenerate(id);
                for i in 0..=n {
                    let lhs = self.apply(&s.face(i, &sigma));
                    let rhs = self.target.face(i, img);
                    if lhs != rhs {
                        return Err(Error::InvalidMap(format!(
                            "f(d{i} {}) = {} but d{i} f({}) = {}",
                            s.name(id),
                            self.target.format_ref(&lhs),
                            s.name(id),
                            self.target.format_ref(&rhs)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    pub fn image(&self, id: SimplexId) -> &SimplexRef {
        &self.assignment[id.degree][id.index]
    }

    pub fn apply(&self, r: &SimplexRef) -> SimplexRef {
        match r.core {
            None => SimplexRef::basepoint(r.degree()),
            Some(id) => self.image(id).degenerate(&r.degeneracies),
        }
    }

    pub fn identity(s: &SimplicialSet) -> Self {
        let assignment = (0..=s.top_degree()).map(|n| s.ids(n).map(SimplexRef::nondegenerate).collect()).collect();
        Self { source: s.clone(), target: s.clone(), assignment }
    }

    /// `g ∘ f`
    pub fn compose(f: &Self, g: &Self) -> Result<Self> {
        if f.target != g.source {
            return Err(Error::InvalidMap("maps are not composable".into()));
        }
        let assignment =
            (0..=f.source.top_degree()).map(|n| f.source.ids(n).map(|id| g.apply(f.image(id))).collect()).collect();
        Self::new(f.source.clone(), g.target.clone(), assignment)
    }

    pub fn to_json(&self) -> SimplicialMapJson {
        let mut assignment = BTreeMap::new();
        for n in 1..=self.source.top_degree() {
            for id in self.source.ids(n) {
                assignment.insert(self.source.name(id).to_string(), self.target.format_ref(self.image(id)));
            }
        }
        SimplicialMapJson { source: self.source.to_json(), target: self.target.to_json(), assignment }
    }

    pub fn from_json(json: &SimplicialMapJson) -> Result<Self> {
        let source = SimplicialSet::from_json(&json.source)?;
        let target = SimplicialSet::from_json(&json.target)?;
        let mut assignment = vec![Vec::new(); source.top_degree() + 1];
        for n in 1..=source.top_degree() {
            for id in source.ids(n) {
                let name = source.name(id);
                let text =
                    json.assignment.get(name).ok_or_else(|| Error::InvalidMap(format!("no image given for {name}")))?;
                assignment[n].push(target.parse_ref(text, n)?);
            }
        }
        Self::new(source, target, assignment)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: SimplicialMapJson = serde_json::from_str(s)?;
        Self::from_json(&json)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SimplicialMapJson {
    pub source: SimplicialSetJson,
    pub target: SimplicialSetJson,
    pub assignment: BTreeMap<String, String>,
}

/// The unique map to the point.
pub fn collapse_map(s: &SimplicialSet) -> SimplicialMap {
    let assignment = (0..=s.top_degree()).map(|n| s.ids(n).map(|_| SimplexRef::basepoint(n)).collect()).collect();
    SimplicialMap { source: s.clone(), target: SimplicialSet::point(), assignment }
}

/// Map of nerves induced by a group homomorphism (`hom[g]` in `target`).
pub fn nerve_map(source: &GroupTable, target: &GroupTable, hom: &[usize], trunc: usize) -> Result<SimplicialMap> {
    source.check_homomorphism(target, hom)?;
    let src = nerve(source, trunc)?;
    let dst = nerve(target, trunc)?;
    let (_, dst_ids) = nerve_ids(target, trunc);
    let mut assignment = vec![Vec::new(); src.top_degree() + 1];
    if source.order > 1 {
        let (by_degree, _) = nerve_ids(source, trunc);
        for (n, level) in by_degree.iter().enumerate().skip(1) {
            for t in level {
                let image: Vec<usize> = t.iter().map(|&g| hom[g]).collect();
                assignment[n].push(nerve_ref(target, &dst_ids, &image));
            }
        }
    }
    SimplicialMap::new(src, dst, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degeneracy_normal_form() {
        // s0 s0 = s1 s0
        assert_eq!(normalize_degeneracies(vec![0, 0]), vec![1, 0]);
        assert_eq!(normalize_degeneracies(vec![2, 0]), vec![2, 0]);
        // s0 s1 = s2 s0
        assert_eq!(normalize_degeneracies(vec![0, 1]), vec![2, 0]);
    }

    #[test]
    fn faces_of_degeneracies_follow_identities() {
        let s = minimal_sphere(2).unwrap();
        let sigma = SimplexRef::nondegenerate(SimplexId { degree: 2, index: 0 });
        let deg = sigma.degenerate(&[1]); // s1 sigma, a 3-simplex
        assert_eq!(s.face(1, &deg), sigma);
        assert_eq!(s.face(2, &deg), sigma);
        assert_eq!(s.face(0, &deg), SimplexRef::basepoint(1).degenerate(&[0]));
        assert_eq!(s.face(3, &deg), SimplexRef::basepoint(2));
    }

    #[test]
    fn minimal_spheres() {
        let s2 = minimal_sphere(2).unwrap();
        assert_eq!(s2.counts(), vec![0, 1]);
        assert!(s2.validate().is_valid());
        let s1 = minimal_sphere(1).unwrap();
        assert_eq!(s1.counts(), vec![1]);
        let s3 = minimal_sphere(3).unwrap();
        assert_eq!(s3.count(3), 1);
        assert!(s3.validate().is_valid());
        assert!(minimal_sphere(0).is_err());
    }

    #[test]
    fn nerve_counts() {
        let z2 = nerve(&GroupTable::cyclic(2), 2).unwrap();
        assert_eq!(z2.counts(), vec![1, 1]);
        assert_eq!(z2.names(2), &["[1|1]".to_string()]);
        assert!(z2.validate().is_valid());
        let z3 = nerve(&GroupTable::cyclic(3), 2).unwrap();
        assert_eq!(z3.counts(), vec![2, 4]);
        let trivial = nerve(&GroupTable::trivial(), 3).unwrap();
        assert_eq!(trivial.top_degree(), 0);
        assert!(nerve(&GroupTable::cyclic(2), 1).is_err());
    }

    #[test]
    fn nerve_degenerate_faces_are_not_always_basepoint() {
        let g = GroupTable::cyclic(2);
        let n = nerve(&g, 3).unwrap();
        let ggg = SimplexRef::nondegenerate(n.lookup("[1|1|1]").unwrap());
        // d1 [g|g|g] = [e|g] = s0 [g]
        let d1 = n.face(1, &ggg);
        assert_eq!(n.format_ref(&d1), "s0([1])");
        assert!(n.validate().is_valid());
    }

    #[test]
    fn identity_violation_is_reported() {
        // Two 2-simplices t, u and a 3-simplex whose faces disagree on an edge.
        let json = r#"{
            "simplices": {"1": ["a", "b"], "2": ["t", "u"], "3": ["w"]},
            "faces": {
                "a": ["*", "*"], "b": ["*", "*"],
                "t": ["a", "a", "a"], "u": ["b", "b", "b"],
                "w": ["t", "t", "t", "u"]
            }
        }"#;
        let s = SimplicialSet::from_json_str(json).unwrap();
        let report = s.validate();
        assert!(!report.is_valid());
        assert!(report.violations.iter().all(|v| v.starts_with("w:")));
    }

    #[test]
    fn json_round_trip_preserves_order() {
        let s = nerve(&GroupTable::cyclic(3), 3).unwrap();
        let back = SimplicialSet::from_json_str(&s.to_json_string()).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(SimplicialSet::from_json_str(r#"{"simplices": {"1": ["a"]}, "faces": {}}"#).is_err());
        assert!(SimplicialSet::from_json_str(r#"{"simplices": {"1": ["a"]}, "faces": {"a": ["*"]}}"#).is_err());
        assert!(SimplicialSet::from_json_str(r#"{"simplices": {"0": ["v", "w"]}, "faces": {}}"#).is_err());
        assert!(SimplicialSet::from_json_str(
            r#"{"simplices": {"1": ["a"], "2": ["t"]}, "faces": {"a": ["*","*"], "t": ["a","zz","*"]}}"#
        )
        .is_err());
    }

    #[test]
    fn group_tables() {
        for name in ["z1", "z5", "v4", "s3", "d4", "q8", "z2xz4", "z2xz2xz2"] {
            let g = GroupTable::by_name(name).unwrap();
            g.check().unwrap();
        }
        assert_eq!(GroupTable::by_name("s3").unwrap().order, 6);
        assert_eq!(GroupTable::by_name("d4").unwrap().order, 8);
        assert!(GroupTable::by_name("foo").is_err());
        assert!(GroupTable::new(2, vec![vec![0, 1], vec![1, 1]], 0).is_err());
        // S3 is not abelian, D4 and Q8 are not isomorphic-looking abelian groups
        let s3 = GroupTable::symmetric3();
        assert!((0..6).any(|a| (0..6).any(|b| s3.mul(a, b) != s3.mul(b, a))));
    }

    #[test]
    fn collapse_and_identity_maps() {
        let s2 = minimal_sphere(2).unwrap();
        let c = collapse_map(&s2);
        assert!(c.check().is_ok());
        assert!(c.image(SimplexId { degree: 2, index: 0 }).is_degenerate());
        let p = SimplicialSet::point();
        assert_eq!(collapse_map(&p), SimplicialMap::identity(&p));
        let z2 = nerve(&GroupTable::cyclic(2), 3).unwrap();
        let c = collapse_map(&z2);
        assert!(c.check().is_ok());
        assert!((1..=3).all(|n| z2.ids(n).all(|id| c.image(id).is_degenerate())));
    }

    #[test]
    fn nerve_map_of_inclusion() {
        let z2 = GroupTable::cyclic(2);
        let z4 = GroupTable::cyclic(4);
        let f = nerve_map(&z2, &z4, &[0, 2], 3).unwrap();
        let g = f.source().lookup("[1]").unwrap();
        assert_eq!(f.target().format_ref(f.image(g)), "[2]");
        assert!(nerve_map(&z2, &z4, &[0, 1], 3).is_err());
    }

    #[test]
    fn map_json_round_trip() {
        let f = nerve_map(&GroupTable::cyclic(4), &GroupTable::cyclic(2), &[0, 1, 0, 1], 3).unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(SimplicialMap::from_json_str(&text).unwrap(), f);
    }
}
