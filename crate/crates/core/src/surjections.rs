//! Index combinatorics for degeneracy composites: the sets S(n, n-r) of
//! monotone surjections encoded as strictly increasing index tuples, their
//! union S(n), the pointwise partial order, and pairs indexing the two
//! directions of a bisimplicial level.

use std::fmt;

use crate::bisimplicial::{BisimplicialGroupTrunc, Direction};
use crate::error::{Error, Result};
use crate::fingroup::Homomorphism;

/// A monotone surjection `[n] -> [n - r]` in canonical form: the strictly
/// increasing list of indices `i` where the map collapses `i` and `i+1`.
/// Displayed in the reverse order `(i_r,..,i_1)`, with `()` for the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurjectionTuple {
    n: usize,
    indices: Vec<usize>,
}

impl fmt::Debug for SurjectionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self, self.n)
    }
}

impl fmt::Display for SurjectionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.indices.iter().rev().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i)?;
        }
        write!(f, ")")
    }
}

impl SurjectionTuple {
    pub fn empty(n: usize) -> Self {
        SurjectionTuple { n, indices: Vec::new() }
    }

    /// Build from a strictly increasing index list.
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidWord { index: w[1], level: n });
            }
        }
        if let Some(&last) = indices.last() {
            if last + 1 > n {
                return Err(Error::InvalidWord { index: last, level: n });
            }
        }
        Ok(SurjectionTuple { n, indices })
    }

    pub fn source_level(&self) -> usize {
        self.n
    }

    /// `#α`, the number of collapsed indices.
    pub fn count(&self) -> usize {
        self.indices.len()
    }

    /// `b(α) = n - #α`, the target level.
    pub fn target(&self) -> usize {
        self.n - self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Indices in increasing order `i_1 < .. < i_r`.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Evaluate as a function `[n] -> [n - r]`.
    pub fn eval(&self, point: usize) -> usize {
        debug_assert!(point <= self.n);
        point - self.indices.iter().filter(|&&i| i < point).count()
    }

    /// Pointwise order: `self <= other` iff `self(i) >= other(i)` for all i.
    pub fn leq(&self, other: &SurjectionTuple) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LevelMismatch(self.n, other.n));
        }
        Ok((0..=self.n).all(|i| self.eval(i) >= other.eval(i)))
    }

    /// Parse the display syntax, e.g. `"()"`, `"(1,0)"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad tuple syntax: {s}")))?;
        let mut indices: Vec<usize> = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            indices.push(
                part.parse()
                    .map_err(|_| Error::Parse(format!("bad tuple index: {part}")))?,
            );
        }
        indices.reverse(); // display is (i_r,..,i_1)
        SurjectionTuple::new(n, indices)
    }
}

/// All of `S(n)`: one tuple per subset of `{0,..,n-1}`, ordered by size then
/// lexicographically (so the identity `()` comes first).
pub fn enumerate_s(n: usize) -> Vec<SurjectionTuple> {
    let mut out: Vec<SurjectionTuple> = (0u32..(1 << n))
        .map(|mask| {
            let indices: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            SurjectionTuple { n, indices }
        })
        .collect();
    out.sort_by(|a, b| {
        a.count()
            .cmp(&b.count())
            .then_with(|| a.indices.cmp(&b.indices))
    });
    out
}

/// Normal form of a word of collapse generators. The word `[a_1,..,a_k]`
/// denotes the composite applying `a_k` first (at level n) and `a_1` last;
/// adjacent out-of-order pairs are rewritten by the relation
/// `α_a ∘ α_b = α_b ∘ α_{a+1}` (valid for `a >= b`) until the subscripts read
/// strictly increasing left to right.
pub fn canonicalize(word: &[usize], n: usize) -> Result<SurjectionTuple> {
    // validity: the t-th letter from the right acts at level n-(k-t) and needs
    // index <= that level minus one
    let k = word.len();
    if k > n {
        return Err(Error::InvalidWord { index: 0, level: n });
    }
    for (pos, &a) in word.iter().enumerate() {
        // the letter at position pos acts as a map [m+1] -> [m] with m = n-k+pos
        let m = n - k + pos;
        if a > m {
            return Err(Error::InvalidWord { index: a, level: m });
        }
    }
    let mut w: Vec<usize> = word.to_vec();
    loop {
        let mut changed = false;
        for t in 0..w.len().saturating_sub(1) {
            if w[t] >= w[t + 1] {
                let (a, b) = (w[t], w[t + 1]);
                w[t] = b;
                w[t + 1] = a + 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    SurjectionTuple::new(n, w)
}

/// Brute-force oracle: the word evaluated as a function `[n] -> [n-k]`.
pub fn eval_word(word: &[usize], _n: usize, point: usize) -> usize {
    let mut p = point;
    // rightmost letter acts first
    for &a in word.iter().rev() {
        p = if p <= a { p } else { p - 1 };
    }
    p
}

/// A pair of surjection tuples indexing the two directions of a level.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairIndex {
    pub first: SurjectionTuple,
    pub second: SurjectionTuple,
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl fmt::Debug for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PairIndex {
    pub fn new(first: SurjectionTuple, second: SurjectionTuple) -> Self {
        PairIndex { first, second }
    }

    /// Componentwise product order.
    pub fn leq(&self, other: &PairIndex) -> Result<bool> {
        Ok(self.first.leq(&other.first)? && self.second.leq(&other.second)?)
    }

    /// Parse `"((0),(1,0))"`-style syntax at level `(n, m)`.
    pub fn parse(s: &str, n: usize, m: usize) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|u| u.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad pair syntax: {s}")))?;
        // split at the comma separating the two parenthesised tuples
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let split = split.ok_or_else(|| Error::Parse(format!("bad pair syntax: {s}")))?;
        Ok(PairIndex {
            first: SurjectionTuple::parse(&inner[..split], n)?,
            second: SurjectionTuple::parse(&inner[split + 1..], m)?,
        })
    }
}

/// All of `S(n) x S(m)`.
pub fn enumerate_pairs_at(n: usize, m: usize) -> Vec<PairIndex> {
    let mut out = Vec::new();
    for a in enumerate_s(n) {
        for b in enumerate_s(m) {
            out.push(PairIndex::new(a.clone(), b));
        }
    }
    out
}

/// The composed degeneracy `s_α = s_{i_r} ∘ .. ∘ s_{i_1}` of a grid in one
/// direction, starting from level `b(α)` at the given transverse level.
pub fn degeneracy_composite(
    g: &BisimplicialGroupTrunc,
    direction: Direction,
    alpha: &SurjectionTuple,
    transverse: usize,
) -> Result<Homomorphism> {
    let start = alpha.target();
    let start_level = match direction {
        Direction::Horizontal => (start, transverse),
        Direction::Vertical => (transverse, start),
    };
    let mut map = Homomorphism::identity(g.level(start_level)?.clone());
    let mut cur = start;
    for &i in alpha.indices() {
        let at = match direction {
            Direction::Horizontal => (cur, transverse),
            Direction::Vertical => (transverse, cur),
        };
        let s = g.degeneracy(direction, at, i)?;
        map = s.compose(&map);
        cur += 1;
    }
    Ok(map)
}
