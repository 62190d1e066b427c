//! Noncommutative polynomials with rational coefficients.
//!
//! A word is a sequence of letter indices; the empty word is the unit. Text
//! syntax: terms `c*g1.g2.g3` joined by `+` or `-`, where `c` is an optional
//! rational coefficient and `1` names the empty word (`x.x + 2*x`, `1 - 1/2*a.b`).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Rational};

pub type Word = Vec<u32>;

/// Finite linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Word, Rational>,
}

/// Element of `A ⊗ A` for a free algebra `A`, in the basis of word pairs.
pub type PolyTensor = BTreeMap<(Word, Word), Rational>;

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Word::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(Rational::one(), w)
    }

    pub fn letter(l: u32) -> Self {
        Self::word(vec![l])
    }

    pub fn term(c: Rational, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[u32]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// `self += c * w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    /// `self += factor * other`
    pub fn axpy(&mut self, factor: &Rational, other: &Poly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), factor * c);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * factor)).collect() }
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Word) -> bool) -> Poly {
        Poly { terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    /// Applies the algebra map sending letter `l` to `image(l)`.
    pub fn substitute(&self, image: impl Fn(u32) -> Poly) -> Poly {
        let images: BTreeMap<u32, Poly> = self.terms.keys().flatten().map(|&l| (l, image(l))).collect();
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for l in w {
                acc = &acc * &images[l];
            }
            out.axpy(&Rational::one(), &acc);
        }
        out
    }

    /// Parses the text syntax against an ordered list of generator names.
    pub fn parse(text: &str, names: &[String]) -> Result<Poly> {
        let bad = |m: String| Error::Parse(format!("polynomial {text:?}: {m}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty".into()));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for (i, &ch) in bytes.iter().enumerate() {
            if (ch == b'+' || ch == b'-') && i > start {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        let index: BTreeMap<&str, u32> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i as u32)).collect();
        let mut p = Poly::zero();
        for piece in pieces {
            let (negative, body) = match piece.as_bytes()[0] {
                b'+' => (false, &piece[1..]),
                b'-' => (true, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad("dangling sign".into()));
            }
            let (coef, word_text) = match body.split_once('*') {
                Some((c, w)) => (parse_rational(c).map_err(|_| bad(format!("bad coefficient {c:?}")))?, Some(w)),
                None => match parse_rational(body) {
                    Ok(c) => (c, None),
                    Err(_) => (Rational::one(), Some(body)),
                },
            };
            let mut word = Word::new();
            if let Some(wt) = word_text.filter(|w| *w != "1") {
                for letter in wt.split('.') {
                    let l = index.get(letter).ok_or_else(|| bad(format!("unknown generator {letter:?}")))?;
                    word.push(*l);
                }
            }
            p.add_term(word, if negative { -coef } else { coef });
        }
        Ok(p)
    }

    /// Formats with the longest words first (`x.x + 2*x`).
    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Word, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| (b.0.len(), b.0).cmp(&(a.0.len(), a.0)));
        let mut out = String::new();
        for (k, (w, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let word: Vec<&str> = w.iter().map(|&l| names[l as usize].as_str()).collect();
            match (word.is_empty(), magnitude.is_one()) {
                (true, _) => out.push_str(&format_rational(&magnitude)),
                (false, true) => out.push_str(&word.join(".")),
                (false, false) => {
                    out.push_str(&format_rational(&magnitude));
                    out.push('*');
                    out.push_str(&word.join("."));
                }
            }
        }
        out
    }

    pub fn to_json_terms(&self, names: &[String]) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(w, c)| JsonTerm {
                coef: format_rational(c),
                word: w.iter().map(|&l| names[l as usize].clone()).collect(),
            })
            .collect()
    }
}

/// JSON array-of-terms form of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coef: String,
    pub word: Vec<String>,
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.axpy(&Rational::one(), rhs);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.axpy(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scaled(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }
}

/// `∇` on words of a free algebra whose letters are all primitive-plus-
/// group-like shifted, `∇(x) = x⊗1 + 1⊗x + x⊗x`, extended multiplicatively.
pub fn shifted_grouplike_coproduct(p: &Poly) -> PolyTensor {
    let mut out = PolyTensor::new();
    for (w, c) in p.terms() {
        // each letter goes left, right, or both
        let mut partial: Vec<(Word, Word)> = vec![(Word::new(), Word::new())];
        for &l in w {
            let mut next = Vec::with_capacity(partial.len() * 3);
            for (a, b) in partial {
                let mut a1 = a.clone();
                a1.push(l);
                next.push((a1.clone(), b.clone()));
                let mut b1 = b.clone();
                b1.push(l);
                next.push((a.clone(), b1.clone()));
                next.push((a1, b1));
            }
            partial = next;
        }
        for key in partial {
            add_tensor_term(&mut out, key, c.clone());
        }
    }
    out
}

pub fn add_tensor_term(t: &mut PolyTensor, key: (Word, Word), c: Rational) {
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

/// `p ⊗ q` expanded in the word-pair basis.
pub fn tensor(p: &Poly, q: &Poly) -> PolyTensor {
    let mut out = PolyTensor::new();
    for (a, ca) in p.terms() {
        for (b, cb) in q.terms() {
            add_tensor_term(&mut out, (a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qf};

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn parse_and_format() {
        let p = Poly::parse("x.x + 2*x", &names()).unwrap();
        assert_eq!(p.coeff(&[0, 0]), q(1));
        assert_eq!(p.coeff(&[0]), q(2));
        assert_eq!(p.format(&names()), "x.x + 2*x");
        let r = Poly::parse("1 - 1/2*x.y", &names()).unwrap();
        assert_eq!(r.coeff(&[0, 1]), qf(-1, 2));
        assert_eq!(r.constant_term(), q(1));
        assert_eq!(r.format(&names()), "-1/2*x.y + 1");
        assert_eq!(Poly::parse("-x", &names()).unwrap().format(&names()), "-x");
        assert!(Poly::parse("z", &names()).is_err());
        assert!(Poly::parse("", &names()).is_err());
        assert_eq!(Poly::parse("x - x", &names()).unwrap().format(&names()), "0");
    }

    #[test]
    fn product_is_concatenation() {
        let x = Poly::letter(0);
        let one_x = &Poly::one() + &x;
        let sq = &one_x * &one_x;
        assert_eq!(sq.format(&names()), "x.x + 2*x + 1");
    }

    #[test]
    fn substitution_is_multiplicative() {
        let p = Poly::parse("x.y", &names()).unwrap();
        let s = p.substitute(|l| if l == 0 { Poly::letter(1) } else { &Poly::letter(0) + &Poly::one() });
        assert_eq!(s.format(&names()), "y.x + y");
    }

    #[test]
    fn shifted_coproduct_makes_one_plus_x_grouplike() {
        let g = &Poly::one() + &Poly::letter(0);
        let lhs = shifted_grouplike_coproduct(&g);
        // ∇(1) = 1⊗1 is included since the empty word splits as (1, 1)
        assert_eq!(lhs, tensor(&g, &g));
        let g2 = &g * &g;
        assert_eq!(shifted_grouplike_coproduct(&g2), tensor(&g2, &g2));
    }
}
