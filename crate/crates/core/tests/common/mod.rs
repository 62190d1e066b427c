//! Helpers shared by the integration tests: seeded random coalgebras, an
//! independent dense check of the coalgebra axioms, sign corruptions and a
//! brute-force group isomorphism test.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use cobar::coalgebra::{normalized_chains, BasisId, CoTerm, DgCoalgebra};
use cobar::corpus;
use cobar::linalg::{q, Rational, SparseMatrix};
use cobar::simplicial::{nerve, GroupTable, SimplexId, SimplexRef, SimplicialSet};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A downward-closed subcomplex of a truncated nerve, keeping each
/// nondegenerate simplex of degree `>= 1` with probability `p` before
/// closing under faces.
pub fn random_subcomplex(rng: &mut ChaCha8Rng) -> SimplicialSet {
    let groups = ["z2", "z3", "z4", "v4", "s3"];
    let g = GroupTable::by_name(groups.choose(rng).unwrap()).unwrap();
    let full = nerve(&g, 3).unwrap();
    let mut keep: BTreeSet<SimplexId> = BTreeSet::new();
    let mut stack: Vec<SimplexId> = Vec::new();
    let p = rng.gen_range(0.05..0.35);
    for n in 1..=full.top_degree() {
        for id in full.ids(n) {
            if rng.gen_bool(p) {
                stack.push(id);
            }
        }
    }
    let twos: Vec<SimplexId> = full.ids(2).collect();
    stack.push(*twos.choose(rng).unwrap());
    while let Some(id) = stack.pop() {
        if keep.insert(id) {
            stack.extend(full.stored_faces(id).iter().filter_map(|f| f.core));
        }
    }
    let mut remap: HashMap<SimplexId, SimplexId> = HashMap::new();
    let mut levels: Vec<Vec<(String, Vec<SimplexRef>)>> = vec![Vec::new(); full.top_degree() + 1];
    for id in &keep {
        let new = SimplexId { degree: id.degree, index: levels[id.degree].len() };
        remap.insert(*id, new);
        levels[id.degree].push((full.name(*id).to_string(), Vec::new()));
    }
    for id in &keep {
        let faces = full
            .stored_faces(*id)
            .iter()
            .map(|f| SimplexRef { core: f.core.map(|c| remap[&c]), degeneracies: f.degeneracies.clone() })
            .collect();
        levels[id.degree][remap[id].index].1 = faces;
    }
    SimplicialSet::from_parts(levels, Some(3), true).unwrap()
}

/// Identity plus a few small integer entries above the diagonal.
pub fn unitriangular(rng: &mut ChaCha8Rng, n: usize) -> SparseMatrix {
    let mut triplets = Vec::new();
    for i in 0..n {
        triplets.push((i, i, q(1)));
        for j in i + 1..n {
            if rng.gen_bool(0.3) {
                let v = *[-2i64, -1, 1, 2].choose(rng).unwrap();
                triplets.push((i, j, q(v)));
            }
        }
    }
    SparseMatrix::from_triplets(n, n, triplets)
}

/// Normalized chains of a random nerve subcomplex in a random
/// unitriangular basis.
pub fn random_coalgebra(rng: &mut ChaCha8Rng) -> DgCoalgebra {
    let c = normalized_chains(&random_subcomplex(rng)).unwrap();
    let change: Vec<SparseMatrix> = (0..=c.top_degree()).map(|n| unitriangular(rng, c.dim(n))).collect();
    c.change_basis(&change).unwrap()
}

/// Corpus coalgebras plus chains of a few truncated nerves and spheres.
pub fn named_inputs() -> Vec<(String, DgCoalgebra)> {
    let mut out: Vec<(String, DgCoalgebra)> = corpus::all().into_iter().map(|(n, c)| (n.to_string(), c)).collect();
    for g in ["z2", "z3", "v4"] {
        let s = nerve(&GroupTable::by_name(g).unwrap(), 3).unwrap();
        out.push((format!("nerve-{g}"), normalized_chains(&s).unwrap()));
    }
    out
}

type Dense = HashMap<Vec<BasisId>, Rational>;

fn add(t: &mut Dense, k: Vec<BasisId>, c: Rational) {
    let e = t.entry(k).or_insert_with(Rational::zero);
    *e += c;
}

fn clean(mut t: Dense) -> Dense {
    t.retain(|_, c| !c.is_zero());
    t
}

fn boundary(c: &DgCoalgebra, x: BasisId) -> Vec<(Rational, BasisId)> {
    if x.degree < 2 {
        return Vec::new();
    }
    let m = c.differential(x.degree);
    (0..c.dim(x.degree - 1))
        .map(|i| (m.get(i, x.index), BasisId { degree: x.degree - 1, index: i }))
        .filter(|(v, _)| !v.is_zero())
        .collect()
}

fn cop(c: &DgCoalgebra, x: BasisId) -> Vec<(Rational, BasisId, BasisId)> {
    c.coproduct_of(x).iter().map(|t| (t.coef.clone(), t.left, t.right)).collect()
}

/// `∂² = 0`, coassociativity of `Δ̄` and the co-Leibniz rule, written out
/// term by term without the library's own checks.
pub fn axioms_hold(c: &DgCoalgebra) -> bool {
    for x in c.all_basis() {
        let mut dd = Dense::new();
        for (a, y) in boundary(c, x) {
            for (b, z) in boundary(c, y) {
                add(&mut dd, vec![z], &a * &b);
            }
        }
        if !clean(dd).is_empty() {
            return false;
        }
        let mut left = Dense::new();
        let mut right = Dense::new();
        for (k, l, r) in cop(c, x) {
            for (k2, ll, lr) in cop(c, l) {
                add(&mut left, vec![ll, lr, r], &k * &k2);
            }
            for (k2, rl, rr) in cop(c, r) {
                add(&mut right, vec![l, rl, rr], &k * &k2);
            }
        }
        if clean(left) != clean(right) {
            return false;
        }
        let mut lhs = Dense::new();
        for (a, y) in boundary(c, x) {
            for (k, l, r) in cop(c, y) {
                add(&mut lhs, vec![l, r], &a * &k);
            }
        }
        let mut rhs = Dense::new();
        for (k, l, r) in cop(c, x) {
            for (a, dl) in boundary(c, l) {
                add(&mut rhs, vec![dl, r], &k * &a);
            }
            let s = if l.degree % 2 == 0 { q(1) } else { q(-1) };
            for (a, dr) in boundary(c, r) {
                add(&mut rhs, vec![l, dr], &s * &k * &a);
            }
        }
        if clean(lhs) != clean(rhs) {
            return false;
        }
    }
    true
}

/// Single sign flips of nonzero structure constants of `c`: all of them,
/// or a seeded sample of at most `max` when `rng` is given.
pub fn sign_flips(c: &DgCoalgebra, rng: Option<(&mut ChaCha8Rng, usize)>) -> Vec<(String, DgCoalgebra)> {
    let (names, diffs, coproduct) = c.parts();
    // (degree, entry) for ∂, (degree, element, term) for Δ̄
    let mut sites: Vec<(bool, usize, usize, usize)> = Vec::new();
    for (n, m) in diffs.iter().enumerate() {
        sites.extend((0..m.nnz()).map(|k| (true, n, k, 0)));
    }
    for (n, level) in coproduct.iter().enumerate() {
        for (x, terms) in level.iter().enumerate() {
            sites.extend((0..terms.len()).map(|k| (false, n, x, k)));
        }
    }
    if let Some((rng, max)) = rng {
        sites.shuffle(rng);
        sites.truncate(max);
    }
    let build = |d: Vec<SparseMatrix>, cp: Vec<Vec<Vec<CoTerm>>>| {
        DgCoalgebra::new(names.clone(), d, cp, c.degree_cap(), c.is_complete()).unwrap()
    };
    sites
        .into_iter()
        .map(|(is_diff, n, a, b)| {
            if is_diff {
                let m = &diffs[n];
                let entries: Vec<(usize, usize, Rational)> = m.triplets().map(|(i, j, v)| (i, j, v.clone())).collect();
                let (i, j, _) = entries[a].clone();
                let flipped = entries.into_iter().enumerate().map(|(t, (r, s, v))| (r, s, if t == a { -v } else { v }));
                let mut d = diffs.clone();
                d[n] = SparseMatrix::from_triplets(m.nrows(), m.ncols(), flipped);
                (format!("∂ entry ({i},{j}) in degree {n}"), build(d, coproduct.clone()))
            } else {
                let mut cp = coproduct.clone();
                let t = &mut cp[n][a][b];
                t.coef = -t.coef.clone();
                (format!("Δ̄ term {b} of {}", names[n][a]), build(diffs.clone(), cp))
            }
        })
        .collect()
}

/// Whether a multiplication table (identity at index 0) is isomorphic to
/// the group, by trying every bijection fixing the identity.
pub fn isomorphic(table: &[Vec<usize>], g: &GroupTable) -> bool {
    let n = table.len();
    if n != g.order {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).filter(|&x| x != g.identity).collect();
    fn search(k: usize, perm: &mut Vec<usize>, table: &[Vec<usize>], g: &GroupTable) -> bool {
        if k == perm.len() {
            let phi = |i: usize| if i == 0 { g.identity } else { perm[i - 1] };
            return (0..table.len()).all(|a| (0..table.len()).all(|b| phi(table[a][b]) == g.mul(phi(a), phi(b))));
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if search(k + 1, perm, table, g) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    search(0, &mut perm, table, g)
}

/// Number of Lyndon words of length `n` over `r` letters, by enumeration.
pub fn lyndon_count(r: usize, n: usize) -> usize {
    let mut count = 0;
    let total = r.pow(n as u32);
    for code in 0..total {
        let mut w = Vec::with_capacity(n);
        let mut x = code;
        for _ in 0..n {
            w.push(x % r);
            x /= r;
        }
        if (1..n).all(|i| {
            let rot: Vec<usize> = w[i..].iter().chain(&w[..i]).copied().collect();
            w < rot
        }) {
            count += 1;
        }
    }
    count
}

/// Word counts of a tensor algebra by weighted degree.
pub fn tensor_algebra_dims(weights: &[usize], d: usize) -> Vec<usize> {
    let mut dims = vec![0usize; d + 1];
    dims[0] = 1;
    for n in 1..=d {
        dims[n] = weights.iter().filter(|&&w| w <= n).map(|&w| dims[n - w]).sum();
    }
    dims
}

pub fn tally<T: Ord>(xs: impl IntoIterator<Item = T>) -> BTreeMap<T, usize> {
    let mut m = BTreeMap::new();
    for x in xs {
        *m.entry(x).or_default() += 1;
    }
    m
}
