//! Monte-Carlo density of d·P₀ inside discrete hypercubes.
//!
//! H_S[D] is the set of points of ℤ^(n−1) supported exactly on S with entries
//! in [−D, D] \ {0}. For a uniform X in H_S[D] and any ±1 vertex v of P₀,
//! Hoeffding gives P(|⟨X, v⟩| > d) ≤ 2·exp(−d²/(2cD)); a union bound over the
//! n vertices shows at least half of H_S[D] lies in d·P₀ once
//! 2cD ≤ d²/(2 log₂ n).

use num_bigint::BigUint;
use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::check_dim;
use crate::hadamard::{dilate_membership, LatticePoint};

const BATCH: u64 = 1024;

/// The discrete hypercube H_S[D] in the projected coordinates 1..n−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeSpec {
    m: u32,
    support: Vec<u32>,
    radius: u64,
}

impl HypercubeSpec {
    pub fn new(m: u32, mut support: Vec<u32>, radius: u64) -> Result<Self> {
        check_dim(m)?;
        let n = 1u64 << m;
        support.sort_unstable();
        support.dedup();
        if support.first() == Some(&0) || support.last().is_some_and(|&s| u64::from(s) >= n) {
            return Err(Error::Domain(format!("support must lie in [1, {n})")));
        }
        if support.is_empty() {
            return Err(Error::Domain("support must be nonempty".into()));
        }
        if radius == 0 || i64::try_from(radius).is_err() {
            return Err(Error::Domain(format!("radius D = {radius} out of range")));
        }
        Ok(Self { m, support, radius })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn c(&self) -> usize {
        self.support.len()
    }

    pub fn radius(&self) -> u64 {
        self.radius
    }

    /// (2D)^c.
    pub fn cell_count(&self) -> BigUint {
        num_traits::pow(BigUint::from(2 * self.radius), self.c())
    }

    /// Whether `x` (n−1 projected coordinates) is a point of this hypercube.
    pub fn contains(&self, x: &[i64]) -> bool {
        let r = self.radius;
        x.len() + 1 == 1usize << self.m
            && x.iter().enumerate().all(|(i, &v)| {
                let on_support = self.support.binary_search(&(i as u32 + 1)).is_ok();
                if on_support {
                    v != 0 && v.unsigned_abs() <= r
                } else {
                    v == 0
                }
            })
    }

    /// One uniform point of H_S[D], as n−1 projected coordinates.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<i64> {
        let mut x = vec![0i64; (1usize << self.m) - 1];
        self.fill(rng, &mut x);
        x
    }

    fn fill<R: Rng + ?Sized>(&self, rng: &mut R, x: &mut [i64]) {
        let r = self.radius as i64;
        for &s in &self.support {
            let u = rng.random_range(0..2 * r);
            x[s as usize - 1] = if u < r { u - r } else { u - r + 1 };
        }
    }
}

/// 2cD ≤ d²/(2 log₂ n), checked in integers as 4·c·D·m ≤ d².
pub fn hoeffding_condition(m: u32, d: u64, c: u64, radius: u64) -> bool {
    let lhs = 4u128
        .checked_mul(u128::from(c))
        .and_then(|x| x.checked_mul(u128::from(radius)))
        .and_then(|x| x.checked_mul(u128::from(m)));
    lhs.is_some_and(|l| l <= u128::from(d) * u128::from(d))
}

/// Union-bound failure probability 2n·exp(−d²/(2cD)).
pub fn hoeffding_bound(n: u64, d: u64, c: u64, radius: u64) -> f64 {
    let d = d as f64;
    2.0 * n as f64 * (-(d * d) / (2.0 * c as f64 * radius as f64)).exp()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityEstimate {
    pub n: u64,
    pub d: u64,
    pub c: u64,
    #[serde(rename = "D")]
    pub radius: u64,
    pub samples: u64,
    pub inside: u64,
    pub fraction: f64,
    /// Present only when the Hoeffding condition holds.
    pub hoeffding_bound: Option<f64>,
    pub condition_holds: bool,
    pub seed: u64,
    #[serde(skip)]
    pub support: Vec<u32>,
}

/// Draws a random support S of size c from [1, n) by partial Fisher–Yates.
pub fn draw_support<R: Rng + ?Sized>(m: u32, c: usize, rng: &mut R) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..1u32 << m).collect();
    for i in 0..c {
        let j = rng.random_range(i..pool.len());
        pool.swap(i, j);
    }
    let mut s = pool[..c].to_vec();
    s.sort_unstable();
    s
}

fn batch_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Samples `samples` uniform points of H_S[D] for a random S of size c and
/// counts how many lie in d·P₀.
///
/// Stream 0 of the seeded generator picks S; batch i of 1024 samples uses
/// stream i+1. The result depends only on the arguments, never on the
/// thread count.
pub fn case3_sample_density(
    m: u32,
    d: u64,
    c: u64,
    radius: u64,
    samples: u64,
    seed: u64,
) -> Result<DensityEstimate> {
    check_dim(m)?;
    let n = 1u64 << m;
    if c == 0 || c >= n {
        return Err(Error::Domain(format!("c = {c} must lie in [1, {n})")));
    }
    if samples == 0 {
        return Err(Error::Domain("samples must be at least 1".into()));
    }
    if i64::try_from(d).is_err() {
        return Err(Error::Domain(format!("d = {d} out of range")));
    }
    let support = draw_support(m, c as usize, &mut batch_rng(seed, 0));
    let spec = HypercubeSpec::new(m, support, radius)?;

    let batches = samples.div_ceil(BATCH);
    let inside: u64 = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = batch_rng(seed, b + 1);
            let size = BATCH.min(samples - b * BATCH);
            let mut coords = vec![0i64; n as usize];
            let mut hits = 0;
            for _ in 0..size {
                coords[0] = d as i64;
                spec.fill(&mut rng, &mut coords[1..]);
                let p = LatticePoint::from_raw(m, coords, d);
                if dilate_membership(&p, d) {
                    hits += 1;
                }
                coords = p.into_coords();
            }
            hits
        })
        .sum();

    let condition_holds = hoeffding_condition(m, d, c, radius);
    Ok(DensityEstimate {
        n,
        d,
        c,
        radius,
        samples,
        inside,
        fraction: inside as f64 / samples as f64,
        hoeffding_bound: condition_holds.then(|| hoeffding_bound(n, d, c, radius)),
        condition_holds,
        seed,
        support: spec.support,
    })
}

/// ½·C(n, c)·(2D)^c with its log₂.
#[derive(Clone, Debug, PartialEq)]
pub struct Case3Bound {
    pub exact: BigUint,
    pub log2: f64,
}

pub(crate) fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (num_traits::ToPrimitive::to_f64(x).unwrap_or(0.0)).log2();
    }
    let shift = bits - 64;
    let top: BigUint = x >> shift;
    num_traits::ToPrimitive::to_f64(&top).unwrap().log2() + shift as f64
}

pub(crate) fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// The sampling lower bound ½·C(n, c)·(2D)^c on |d·Had ∩ ℤⁿ|, valid when the
/// Hoeffding condition holds.
pub fn case3_lower_bound_value(n: u64, d: u64, c: u64, radius: u64) -> Result<Case3Bound> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::Domain(format!("n = {n} is not a power of two ≥ 2")));
    }
    let m = n.trailing_zeros();
    if c == 0 || c > n {
        return Err(Error::Domain(format!("c = {c} must lie in [1, {n}]")));
    }
    if radius == 0 {
        return Err(Error::Domain("D must be at least 1".into()));
    }
    if !hoeffding_condition(m, d, c, radius) {
        return Err(Error::Precondition(format!(
            "2cD ≤ d²/(2 log₂ n) fails: 2cD = {} > {}²/(2·{m}) = {:.6}",
            2 * u128::from(c) * u128::from(radius),
            d,
            (d as f64) * (d as f64) / (2.0 * f64::from(m))
        )));
    }
    let choose = binomial(BigUint::from(n), BigUint::from(c));
    let cube = num_traits::pow(BigUint::from(2 * radius), c as usize);
    let exact = (choose * cube) >> 1u32;
    let log2 = round6(log2_big(&exact));
    Ok(Case3Bound { exact, log2 })
}
