//! Exact sparse linear algebra over the rationals.
//!
//! Everything here works with [`Rational`] (arbitrary precision, always
//! reduced). Matrices are stored row-wise with no explicit zeros. Row
//! reduction pivots on the leftmost available column, so every result is
//! reproducible bit for bit.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a reduced rational. Panics on `d == 0`.
pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A sparse vector: index -> nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: BTreeMap<usize, Rational>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Self::new();
        v.entries.insert(i, Rational::one());
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut v = Self::new();
        for (i, c) in pairs {
            v.add_to(i, &c);
        }
        v
    }

    pub fn get(&self, i: usize) -> Rational {
        self.entries.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.iter().next().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// `self[i] += c`, dropping the entry if it cancels.
    pub fn add_to(&mut self, i: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(i).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&i);
        }
    }

    /// `self += factor * other`
    pub fn axpy(&mut self, factor: &Rational, other: &SparseVec) {
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_to(i, &(factor * c));
        }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.entries.clear();
            return;
        }
        for c in self.entries.values_mut() {
            *c *= factor;
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (small, large) = if self.nnz() <= other.nnz() { (self, other) } else { (other, self) };
        let mut acc = Rational::zero();
        for (i, c) in small.iter() {
            if let Some(d) = large.entries.get(&i) {
                acc += c * d;
            }
        }
        acc
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }
}

/// Row-major sparse matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.nrows, self.ncols)?;
        for r in &self.rows {
            let cells: Vec<String> = (0..self.ncols).map(|j| format_rational(&r.get(j))).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i] = SparseVec::unit(i);
        }
        m
    }

    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut m = Self::zeros(nrows, ncols);
        for (i, j, c) in triplets {
            assert!(i < nrows && j < ncols, "entry ({i},{j}) outside {nrows}x{ncols}");
            m.rows[i].add_to(j, &c);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let triplets = rows.iter().enumerate().flat_map(|(i, r)| {
            assert_eq!(r.len(), ncols, "ragged dense matrix");
            r.iter().enumerate().map(move |(j, c)| (i, j, c.clone()))
        });
        Self::from_triplets(nrows, ncols, triplets)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        if dense.is_empty() {
            return Self::zeros(0, 0);
        }
        Self::from_dense(&dense)
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(nrows: usize, cols: &[SparseVec]) -> Self {
        let triplets = cols.iter().enumerate().flat_map(|(j, v)| v.iter().map(move |(i, c)| (i, j, c.clone())));
        Self::from_triplets(nrows, cols.len(), triplets)
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            if let Some(m) = r.max_index() {
                assert!(m < ncols, "row entry {m} outside {ncols} columns");
            }
        }
        Self { nrows: rows.len(), ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i].get(j)
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, j, c)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for (i, j, c) in self.triplets() {
            t.rows[j].add_to(i, c);
        }
        t
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().rows
    }

    pub fn column(&self, j: usize) -> SparseVec {
        SparseVec::from_pairs(self.rows.iter().enumerate().map(|(i, r)| (i, r.get(j))))
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(self.rows.iter().enumerate().map(|(i, r)| (i, r.dot(v))))
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, c) in r.iter() {
                    acc.axpy(c, &other.rows[k]);
                }
                acc
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn scaled(&self, factor: &Rational) -> SparseMatrix {
        let mut m = self.clone();
        for r in &mut m.rows {
            r.scale(factor);
        }
        m
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut m = self.clone();
        for (r, o) in m.rows.iter_mut().zip(&other.rows) {
            r.axpy(&-Rational::one(), o);
        }
        m
    }

    /// Reduced row echelon form, pivot columns (ascending) and rank.
    pub fn rref(&self) -> (SparseMatrix, Vec<usize>, usize) {
        let basis = RowBasis::from_rows(self.rows.iter().cloned());
        let (pivots, mut rows) = basis.into_sorted();
        let rank = rows.len();
        rows.resize(self.nrows, SparseVec::new());
        (SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }, pivots, rank)
    }

    pub fn rank(&self) -> usize {
        RowBasis::from_rows(self.rows.iter().cloned()).rank()
    }

    /// A basis of the null space, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let (r, pivots, rank) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        (0..self.ncols)
            .filter(|j| !pivot_set.contains(j))
            .map(|free| {
                let mut v = SparseVec::unit(free);
                for (row, &p) in r.rows[..rank].iter().zip(&pivots) {
                    let c = row.get(free);
                    if !c.is_zero() {
                        v.add_to(p, &-c);
                    }
                }
                v
            })
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows == self.ncols && self.rank() == self.nrows
    }

    /// Two-sided inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<SparseMatrix> {
        let n = self.nrows;
        if n != self.ncols {
            return None;
        }
        let augmented = self.rows.iter().enumerate().map(|(i, r)| {
            let mut v = r.clone();
            v.add_to(n + i, &Rational::one());
            v
        });
        let (pivots, rows) = RowBasis::from_rows(augmented).into_sorted();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let rows = rows
            .into_iter()
            .map(|r| SparseVec::from_pairs(r.iter().filter(|(j, _)| *j >= n).map(|(j, c)| (j - n, c.clone()))))
            .collect();
        Some(SparseMatrix { nrows: n, ncols: n, rows })
    }
}

/// An incrementally built, fully reduced row basis.
///
/// Each stored row has leading coefficient 1 and zeros in every other
/// stored pivot column.
#[derive(Clone, Debug, Default)]
pub struct RowBasis {
    pivots: BTreeMap<usize, SparseVec>,
}

impl RowBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rows<I: IntoIterator<Item = SparseVec>>(rows: I) -> Self {
        let mut b = Self::new();
        for r in rows {
            b.insert(r);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the basis without inserting it.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let hits: Vec<usize> = v.iter().map(|(i, _)| i).filter(|i| self.pivots.contains_key(i)).collect();
        for p in hits {
            let c = v.get(p);
            if !c.is_zero() {
                v.axpy(&-c, &self.pivots[&p]);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Inserts `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((lead, c)) = v.leading() else {
            return false;
        };
        let inv = c.recip();
        v.scale(&inv);
        for row in self.pivots.values_mut() {
            let c = row.get(lead);
            if !c.is_zero() {
                row.axpy(&-c, &v);
            }
        }
        self.pivots.insert(lead, v);
        true
    }

    pub fn into_sorted(self) -> (Vec<usize>, Vec<SparseVec>) {
        self.pivots.into_iter().unzip()
    }
}

/// Writes each target as a combination of `basis` (which must be linearly
/// independent). Returns `None` if some target is outside the span.
pub fn express_in_basis(basis: &[SparseVec], targets: &[SparseVec]) -> Option<Vec<SparseVec>> {
    // Track each reduced row together with the combination of basis
    // vectors producing it, by appending tag coordinates past `offset`.
    let offset = basis.iter().chain(targets).filter_map(SparseVec::max_index).max().map_or(0, |m| m + 1);
    let mut rb = RowBasis::new();
    for (k, b) in basis.iter().enumerate() {
        let mut tagged = b.clone();
        tagged.add_to(offset + k, &Rational::one());
        rb.insert(tagged);
    }
    let mut out = Vec::with_capacity(targets.len());
    for t in targets {
        let r = rb.reduce(t.clone());
        if r.iter().any(|(i, _)| i < offset) {
            return None;
        }
        // t - sum(c_k b_k) has tags -c_k.
        out.push(SparseVec::from_pairs(r.iter().map(|(i, c)| (i - offset, -c.clone()))));
    }
    Some(out)
}

/// Homology of `C_{n+1} --d_in--> C_n --d_out--> C_{n-1}` at `C_n`.
#[derive(Clone, Debug)]
pub struct SubquotientBasis {
    pub ambient_dim: usize,
    pub cycle_basis: Vec<SparseVec>,
    pub boundary_basis: Vec<SparseVec>,
    pub representatives: Vec<SparseVec>,
}

impl SubquotientBasis {
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }
}

/// `ker(d_out) / im(d_in)`. Rejects inputs with `d_out * d_in != 0`.
pub fn homology_at(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<SubquotientBasis> {
    let n = d_out.ncols();
    if d_in.nrows() != n {
        return Err(Error::LinAlg(format!(
            "incoming differential lands in dimension {}, outgoing starts from {}",
            d_in.nrows(),
            n
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::LinAlg("composite of consecutive differentials is nonzero".into()));
    }
    let cycle_basis = d_out.kernel_basis();
    let (_, boundary_basis) = RowBasis::from_rows(d_in.columns()).into_sorted();
    let mut span = RowBasis::from_rows(boundary_basis.iter().cloned());
    let representatives = cycle_basis.iter().filter(|z| span.insert((*z).clone())).cloned().collect();
    Ok(SubquotientBasis { ambient_dim: n, cycle_basis, boundary_basis, representatives })
}

/// Matrix of the map induced by `f` on homology, in the representative
/// bases of `src` and `dst`.
pub fn induced_map_on_homology(
    f: &SparseMatrix,
    src: &SubquotientBasis,
    dst: &SubquotientBasis,
) -> Result<SparseMatrix> {
    if f.ncols() != src.ambient_dim || f.nrows() != dst.ambient_dim {
        return Err(Error::LinAlg(format!(
            "map is {}x{}, homology ambients are {} -> {}",
            f.nrows(),
            f.ncols(),
            src.ambient_dim,
            dst.ambient_dim
        )));
    }
    let cycles = RowBasis::from_rows(dst.cycle_basis.iter().cloned());
    if let Some(z) = src.cycle_basis.iter().find(|z| !cycles.contains(&f.mul_vec(z))) {
        return Err(Error::LinAlg(format!("map sends cycle {z:?} outside the target cycles")));
    }
    let boundaries = RowBasis::from_rows(dst.boundary_basis.iter().cloned());
    if src.boundary_basis.iter().any(|b| !boundaries.contains(&f.mul_vec(b))) {
        return Err(Error::LinAlg("map sends a boundary outside the target boundaries".into()));
    }
    let mut basis = dst.boundary_basis.clone();
    basis.extend(dst.representatives.iter().cloned());
    let images: Vec<SparseVec> = src.representatives.iter().map(|z| f.mul_vec(z)).collect();
    let coords = express_in_basis(&basis, &images)
        .ok_or_else(|| Error::LinAlg("image of a cycle is not a combination of target classes".into()))?;
    let nb = dst.boundary_basis.len();
    let cols: Vec<SparseVec> = coords
        .into_iter()
        .map(|c| SparseVec::from_pairs(c.iter().filter(|(i, _)| *i >= nb).map(|(i, x)| (i - nb, x.clone()))))
        .collect();
    Ok(SparseMatrix::from_columns(dst.dimension(), &cols))
}

/// Solves `m x = b`, returning one solution if the system is consistent.
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let cols = m.columns();
    // Pick an independent subset of columns spanning the column space.
    let mut rb = RowBasis::new();
    let mut chosen = Vec::new();
    let mut chosen_idx = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if rb.insert(c.clone()) {
            chosen.push(c.clone());
            chosen_idx.push(j);
        }
    }
    let coords = express_in_basis(&chosen, std::slice::from_ref(b))?;
    Some(SparseVec::from_pairs(coords[0].iter().map(|(k, c)| (chosen_idx[k], c.clone()))))
}
