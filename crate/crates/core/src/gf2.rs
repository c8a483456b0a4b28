//! Bit-packed linear algebra over F₂^m.
//!
//! A vector of F₂^m is a single `u32` word; bit `i` is the coefficient of the
//! `i`-th standard basis vector. The integer value of the word doubles as the
//! coordinate index of that vector in ℝⁿ with n = 2^m, so the zero vector is
//! coordinate 0.
//!
//! Subspaces are kept in reduced row-echelon form with the *highest* set bit
//! of each basis word as its pivot and the basis sorted by decreasing pivot.
//! Every pivot bit is cleared from all other basis words, which makes the form
//! unique per subspace and lets greedy reduction find the minimal element of
//! a coset.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest supported ambient dimension. Keeps every vector in a `u32` and
/// dense points (2^m coordinates) within desk-scale memory.
pub const MAX_DIM: u32 = 24;

pub(crate) fn check_dim(m: u32) -> Result<()> {
    if (1..=MAX_DIM).contains(&m) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "ambient dimension m = {m} outside 1..={MAX_DIM}"
        )))
    }
}

#[inline]
pub(crate) fn pivot_of(word: u32) -> u32 {
    debug_assert!(word != 0);
    31 - word.leading_zeros()
}

#[inline]
pub(crate) fn parity(word: u32) -> bool {
    word.count_ones() & 1 == 1
}

/// An element of F₂^m.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    bits: u32,
    m: u32,
}

impl Gf2Vector {
    pub fn new(m: u32, bits: u32) -> Result<Self> {
        check_dim(m)?;
        if u64::from(bits) >= 1u64 << m {
            return Err(Error::Domain(format!(
                "word {bits:#b} has bits at or above position {m}"
            )));
        }
        Ok(Self { bits, m })
    }

    pub fn zero(m: u32) -> Result<Self> {
        Self::new(m, 0)
    }

    pub(crate) fn from_raw(m: u32, bits: u32) -> Self {
        debug_assert!(u64::from(bits) < 1u64 << m);
        Self { bits, m }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn m(self) -> u32 {
        self.m
    }

    /// Coordinate index of this vector in ℝ^(2^m).
    pub fn index(self) -> usize {
        self.bits as usize
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Standard dot product, returned as a bit.
    pub fn dot(self, other: Gf2Vector) -> Result<bool> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(parity(self.bits & other.bits))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Gf2Vector) -> Result<Gf2Vector> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(Self::from_raw(self.m, self.bits ^ other.bits))
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Gf2Vector {
    /// Most significant coordinate first, `m` digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.m as usize)
    }
}

/// Free-function form of [`Gf2Vector::dot`].
pub fn dot(a: Gf2Vector, b: Gf2Vector) -> Result<bool> {
    a.dot(b)
}

/// A linear subspace of F₂^m in canonical reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Subspace {
    m: u32,
    basis: Vec<u32>,
}

impl Gf2Subspace {
    pub fn zero(m: u32) -> Result<Self> {
        check_dim(m)?;
        Ok(Self {
            m,
            basis: Vec::new(),
        })
    }

    pub fn full(m: u32) -> Result<Self> {
        check_dim(m)?;
        Ok(Self {
            m,
            basis: (0..m).rev().map(|i| 1u32 << i).collect(),
        })
    }

    /// Builds a subspace from RREF basis words without re-reducing.
    pub(crate) fn from_rref_unchecked(m: u32, basis: Vec<u32>) -> Self {
        debug_assert!(basis.windows(2).all(|w| pivot_of(w[0]) > pivot_of(w[1])));
        Self { m, basis }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    /// Basis words, sorted by decreasing pivot.
    pub fn basis_words(&self) -> &[u32] {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Gf2Vector> {
        self.basis
            .iter()
            .map(|&w| Gf2Vector::from_raw(self.m, w))
            .collect()
    }

    /// Bit mask of the pivot positions.
    pub fn pivot_mask(&self) -> u32 {
        self.basis.iter().fold(0, |acc, &w| acc | (1 << pivot_of(w)))
    }

    /// Greedy reduction by the pivots: clears every pivot bit of `word`.
    /// The result is the minimal element of the coset `word + self`.
    pub(crate) fn reduce_word(&self, mut word: u32) -> u32 {
        for &b in &self.basis {
            if word & (1 << pivot_of(b)) != 0 {
                word ^= b;
            }
        }
        word
    }

    pub fn contains(&self, v: Gf2Vector) -> Result<bool> {
        self.check_same_m(v.m)?;
        Ok(self.reduce_word(v.bits) == 0)
    }

    /// Every element of the subspace, 2^dim of them.
    pub fn elements(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        let count = 1u64 << self.basis.len();
        (0..count).map(move |j| {
            let word = self
                .basis
                .iter()
                .enumerate()
                .filter(|(i, _)| j >> i & 1 == 1)
                .fold(0u32, |acc, (_, &b)| acc ^ b);
            Gf2Vector::from_raw(self.m, word)
        })
    }

    /// W^⊥ = {c : ⟨c, w⟩ = 0 for all w ∈ W}.
    pub fn orthogonal_complement(&self) -> Gf2Subspace {
        // For each free column f, e_f plus the pivots of the basis words that
        // have bit f set is orthogonal to every basis word.
        let pivots = self.pivot_mask();
        let gens: Vec<u32> = (0..self.m)
            .filter(|f| pivots & (1 << f) == 0)
            .map(|f| {
                self.basis
                    .iter()
                    .filter(|&&b| b & (1 << f) != 0)
                    .fold(1u32 << f, |acc, &b| acc | (1 << pivot_of(b)))
            })
            .collect();
        rref_words(self.m, &gens)
    }

    fn check_same_m(&self, m: u32) -> Result<()> {
        if self.m == m {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.m,
                right: m,
            })
        }
    }
}

impl fmt::Debug for Gf2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, &w) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:0width$b}", w, width = self.m as usize)?;
        }
        write!(f, "}} ⊆ F2^{}", self.m)
    }
}

fn rref_words(m: u32, gens: &[u32]) -> Gf2Subspace {
    let mut basis: Vec<u32> = Vec::with_capacity(m as usize);
    for &g in gens {
        let mut x = g;
        for &b in &basis {
            if x & (1 << pivot_of(b)) != 0 {
                x ^= b;
            }
        }
        if x == 0 {
            continue;
        }
        let p = pivot_of(x);
        for b in basis.iter_mut() {
            if *b & (1 << p) != 0 {
                *b ^= x;
            }
        }
        let pos = basis.partition_point(|&b| pivot_of(b) > p);
        basis.insert(pos, x);
    }
    Gf2Subspace { m, basis }
}

/// The canonical RREF basis of the span of `gens`.
pub fn rref_basis(m: u32, gens: &[Gf2Vector]) -> Result<Gf2Subspace> {
    check_dim(m)?;
    if let Some(g) = gens.iter().find(|g| g.m != m) {
        return Err(Error::DimensionMismatch {
            left: m,
            right: g.m,
        });
    }
    let words: Vec<u32> = gens.iter().map(|g| g.bits).collect();
    Ok(rref_words(m, &words))
}

pub fn orthogonal_complement(w: &Gf2Subspace) -> Gf2Subspace {
    w.orthogonal_complement()
}

/// Minimal-integer element of the coset `w + b`.
pub fn coset_canonical_rep(w: &Gf2Subspace, b: Gf2Vector) -> Result<Gf2Vector> {
    w.check_same_m(b.m)?;
    Ok(Gf2Vector::from_raw(w.m, w.reduce_word(b.bits)))
}

/// A coset `W + b` with `b` the minimal element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2AffineSubspace {
    direction: Gf2Subspace,
    rep: Gf2Vector,
}

impl Gf2AffineSubspace {
    pub fn new(direction: Gf2Subspace, b: Gf2Vector) -> Result<Self> {
        let rep = coset_canonical_rep(&direction, b)?;
        Ok(Self { direction, rep })
    }

    pub fn linear(direction: Gf2Subspace) -> Self {
        let rep = Gf2Vector::from_raw(direction.m, 0);
        Self { direction, rep }
    }

    pub fn direction(&self) -> &Gf2Subspace {
        &self.direction
    }

    pub fn rep(&self) -> Gf2Vector {
        self.rep
    }

    pub fn m(&self) -> u32 {
        self.direction.m
    }

    pub fn is_linear(&self) -> bool {
        self.rep.is_zero()
    }

    /// Number of elements, 2^dim.
    pub fn len(&self) -> u64 {
        1u64 << self.direction.dim()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Gf2Vector) -> Result<bool> {
        self.direction.check_same_m(v.m)?;
        Ok(self.direction.reduce_word(v.bits) == self.rep.bits)
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        let rep = self.rep.bits;
        self.direction
            .elements()
            .map(move |w| Gf2Vector::from_raw(w.m, w.bits ^ rep))
    }
}

impl fmt::Debug for Gf2AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {:?}", self.rep, self.direction)
    }
}

/// Gaussian binomial coefficient [m k]₂, the number of k-dimensional
/// subspaces of F₂^m. Exact for any `m`; not limited by [`MAX_DIM`].
pub fn gaussian_binomial(m: u32, k: u32) -> Result<BigUint> {
    if k > m {
        return Err(Error::Domain(format!("k = {k} exceeds m = {m}")));
    }
    let k = k.min(m - k);
    let one = BigUint::one();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= (&one << (m - i)) - &one;
        den *= (&one << (k - i)) - &one;
    }
    Ok(num / den)
}

/// Streams every k-dimensional subspace of F₂^m exactly once, ordered
/// lexicographically on the concatenated RREF basis words.
pub fn enumerate_subspaces(m: u32, k: u32) -> Result<SubspaceIter> {
    check_dim(m)?;
    if k > m {
        return Err(Error::Domain(format!("k = {k} exceeds m = {m}")));
    }
    Ok(SubspaceIter {
        m,
        k: k as usize,
        words: Vec::with_capacity(k as usize),
        started: false,
        finished: false,
    })
}

/// Iterator returned by [`enumerate_subspaces`].
///
/// A depth-first search over basis words. Candidate `i` is accepted only when
/// enough unused positions remain below its pivot to place the remaining
/// pivots, so every accepted prefix extends to at least one full basis.
#[derive(Clone, Debug)]
pub struct SubspaceIter {
    m: u32,
    k: usize,
    words: Vec<u32>,
    started: bool,
    finished: bool,
}

impl SubspaceIter {
    /// Smallest admissible word `>= start` for the next level.
    fn candidate(&self, start: u32) -> Option<u32> {
        let level = self.words.len();
        let still_needed = (self.k - level - 1) as u32;
        let limit: u64 = match self.words.last() {
            Some(&prev) => 1u64 << pivot_of(prev),
            None => 1u64 << self.m,
        };
        let used = self.words.iter().fold(0u32, |acc, &w| acc | w);
        let mut w = u64::from(start.max(1));
        while w < limit {
            let word = w as u32;
            let p = pivot_of(word);
            if p < still_needed || used & (1 << p) != 0 {
                // Nothing with this pivot can work; jump to the next pivot.
                w = (1u64 << (p + 1)).max(1u64 << still_needed);
                continue;
            }
            let below = (1u32 << p) - 1;
            if (!(used | word) & below).count_ones() >= still_needed {
                return Some(word);
            }
            w += 1;
        }
        None
    }

    /// Completes `words` to length k with the smallest choices. Returns false
    /// if the current level has no candidate `>= start`.
    fn fill(&mut self, start: u32) -> bool {
        let Some(first) = self.candidate(start) else {
            return false;
        };
        self.words.push(first);
        while self.words.len() < self.k {
            let next = self
                .candidate(1)
                .expect("admissible prefix always extends");
            self.words.push(next);
        }
        true
    }
}

impl Iterator for SubspaceIter {
    type Item = Gf2Subspace;

    fn next(&mut self) -> Option<Gf2Subspace> {
        if self.finished {
            return None;
        }
        if self.k == 0 {
            self.finished = true;
            return Some(Gf2Subspace::from_rref_unchecked(self.m, Vec::new()));
        }
        if !self.started {
            self.started = true;
            if !self.fill(1) {
                self.finished = true;
                return None;
            }
        } else {
            loop {
                let Some(last) = self.words.pop() else {
                    self.finished = true;
                    return None;
                };
                if last < u32::MAX && self.fill(last + 1) {
                    break;
                }
            }
        }
        Some(Gf2Subspace::from_rref_unchecked(self.m, self.words.clone()))
    }
}

/// Streams every affine subspace of F₂^m exactly once: by dimension, then by
/// direction in [`enumerate_subspaces`] order, then by increasing canonical
/// representative.
pub fn enumerate_affine_subspaces(m: u32) -> Result<impl Iterator<Item = Gf2AffineSubspace>> {
    check_dim(m)?;
    let iter = (0..=m).flat_map(move |k| {
        enumerate_subspaces(m, k)
            .expect("k <= m")
            .flat_map(move |w| coset_reps(&w).map(move |rep| Gf2AffineSubspace {
                direction: w.clone(),
                rep,
            }).collect::<Vec<_>>())
    });
    Ok(iter)
}

/// Canonical representatives of all cosets of `w`: the words with zeros at
/// every pivot, in increasing order.
pub fn coset_reps(w: &Gf2Subspace) -> impl Iterator<Item = Gf2Vector> {
    let m = w.m;
    let pivots = w.pivot_mask();
    let free: Vec<u32> = (0..m).filter(|i| pivots & (1 << i) == 0).collect();
    let count = 1u64 << free.len();
    (0..count).map(move |j| {
        let bits = free
            .iter()
            .enumerate()
            .filter(|(t, _)| j >> t & 1 == 1)
            .fold(0u32, |acc, (_, &pos)| acc | (1 << pos));
        Gf2Vector::from_raw(m, bits)
    })
}

/// Σ_k 2^(m−k)·[m k]₂, the number of affine subspaces of F₂^m.
pub fn affine_subspace_count(m: u32) -> BigUint {
    (0..=m)
        .map(|k| gaussian_binomial(m, k).expect("k <= m") << (m - k))
        .sum()
}
