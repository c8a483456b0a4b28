//! Depth-first enumeration of d·Had ∩ ℤⁿ.
//!
//! Coordinate 0 is fixed to d and coordinates 1..n−1 range over [−d, d] in
//! increasing index order. The search keeps every partial Walsh sum
//! S_b = Σ_{assigned a} (−1)^⟨a,b⟩ v(a) up to date and prunes a node as soon
//! as some S_b + r·d < 0, where r is the number of unassigned coordinates.
//! A complete assignment survives exactly when H·v ≥ 0, i.e. v ∈ d·Had.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::gf2::check_dim;
use crate::hadamard::{sign, LatticePoint};

/// Default cap on the search-tree size estimate ∏(2d+1).
pub const DEFAULT_NODE_BUDGET: u128 = 1 << 40;

/// Upper estimate of the search tree: (2d+1)^(n−1).
pub fn search_cost(m: u32, d: u64) -> BigUint {
    let width = BigUint::from(d) * 2u32 + BigUint::one();
    num_traits::pow(width, (1usize << m) - 1)
}

/// Streams every point of d·Had ∩ ℤⁿ exactly once.
pub fn enumerate_dilate_points(m: u32, d: u64, budget: u128) -> Result<DilatePoints> {
    check_dim(m)?;
    if m > 6 {
        // (2d+1)^(n−1) ≥ 3^127 for every d ≥ 1; only d = 0 is ever feasible.
        if d > 0 {
            return Err(Error::Budget {
                estimated: format!("3^{}", (1u64 << m) - 1),
                budget,
            });
        }
    } else {
        let cost = search_cost(m, d);
        if cost.to_u128().is_none_or(|c| c > budget) {
            return Err(Error::Budget {
                estimated: cost.to_string(),
                budget,
            });
        }
    }
    if i64::try_from(d).is_err() || u128::from(d) * (1u128 << m) >= 1 << 62 {
        return Err(Error::Overflow(format!("d = {d} too large for m = {m}")));
    }
    Ok(DilatePoints::new(m, d, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Start,
    Running,
    Done,
}

/// Iterator returned by [`enumerate_dilate_points`].
#[derive(Clone, Debug)]
pub struct DilatePoints {
    m: u32,
    d: i64,
    coords: Vec<i64>,
    sums: Vec<i64>,
    first_free: usize,
    pos: usize,
    fresh: bool,
    state: State,
}

impl DilatePoints {
    fn new(m: u32, d: u64, first_free: usize) -> Self {
        let n = 1usize << m;
        let d = d as i64;
        let mut coords = vec![0; n];
        coords[0] = d;
        Self {
            m,
            d,
            coords,
            sums: vec![d; n],
            first_free,
            pos: first_free,
            fresh: true,
            state: State::Start,
        }
    }

    /// The sub-stream with coordinate 1 fixed to `value`. The streams for
    /// `value` in [−d, d] partition the full enumeration. No budget check.
    pub(crate) fn with_first_free(m: u32, d: u64, value: i64) -> Self {
        let mut it = Self::new(m, d, 2);
        it.coords[1] = value;
        it.shift(1, value);
        if !it.feasible(1) {
            it.state = State::Done;
        }
        it
    }

    fn n(&self) -> usize {
        self.coords.len()
    }

    fn shift(&mut self, a: usize, delta: i64) {
        for (b, s) in self.sums.iter_mut().enumerate() {
            *s += delta * sign(a, b);
        }
    }

    /// Every Walsh row can still reach zero once the coordinates after
    /// `pos` are filled.
    fn feasible(&self, pos: usize) -> bool {
        let slack = (self.n() - 1 - pos) as i64 * self.d;
        self.sums.iter().all(|&s| s + slack >= 0)
    }

    fn emit(&self) -> LatticePoint {
        LatticePoint::from_raw(self.m, self.coords.clone(), self.d as u64)
    }
}

impl Iterator for DilatePoints {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        match self.state {
            State::Done => return None,
            State::Start => {
                self.state = State::Running;
                if self.first_free >= self.n() {
                    self.state = State::Done;
                    return self.feasible(self.n() - 1).then(|| self.emit());
                }
            }
            State::Running => {}
        }
        loop {
            let pos = self.pos;
            if self.fresh {
                self.fresh = false;
                self.coords[pos] = -self.d;
                self.shift(pos, -self.d);
            } else if self.coords[pos] < self.d {
                self.coords[pos] += 1;
                self.shift(pos, 1);
            } else {
                let old = self.coords[pos];
                self.coords[pos] = 0;
                self.shift(pos, -old);
                if pos == self.first_free {
                    self.state = State::Done;
                    return None;
                }
                self.pos -= 1;
                continue;
            }
            if self.feasible(pos) {
                if pos == self.n() - 1 {
                    return Some(self.emit());
                }
                self.pos += 1;
                self.fresh = true;
            }
        }
    }
}
