//! The Sylvester Hadamard matrix, its fast transform, and exact membership
//! in the dilates d·Had of the Hadamard simplex.
//!
//! For an integer vector v the product H·v is an integer vector equal to
//! n·t, where t are the barycentric coordinates of v in the vertex basis
//! {h_b}. Since H·H = n·I the coordinates are unique, and v ∈ d·Had exactly
//! when every entry of H·v is nonnegative and Σ t_b = v(0) = d.

use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::gf2::{check_dim, parity, Gf2Vector};

/// An integer point of ℝ^(2^m), coordinates indexed by F₂^m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    m: u32,
    coords: Vec<i64>,
    level: u64,
}

impl LatticePoint {
    /// `level` is the dilation the point is meant for; it is metadata only.
    pub fn new(m: u32, coords: Vec<i64>, level: u64) -> Result<Self> {
        check_dim(m)?;
        let n = 1usize << m;
        if coords.len() != n {
            return Err(Error::Input(format!(
                "expected {n} coordinates for m = {m}, got {}",
                coords.len()
            )));
        }
        if coords.contains(&i64::MIN) {
            return Err(Error::Overflow("coordinate does not fit 63 bits".into()));
        }
        Ok(Self { m, coords, level })
    }

    pub fn zero(m: u32) -> Result<Self> {
        check_dim(m)?;
        Ok(Self {
            m,
            coords: vec![0; 1 << m],
            level: 0,
        })
    }

    /// The point d·e₀, the scaled centroid of Had.
    pub fn centroid(m: u32, d: u64) -> Result<Self> {
        let mut p = Self::zero(m)?;
        p.coords[0] = i64::try_from(d).map_err(|_| Error::Overflow(format!("d = {d}")))?;
        p.level = d;
        Ok(p)
    }

    pub(crate) fn from_raw(m: u32, coords: Vec<i64>, level: u64) -> Self {
        debug_assert_eq!(coords.len(), 1 << m);
        Self { m, coords, level }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn with_level(mut self, level: u64) -> Self {
        self.level = level;
        self
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn get(&self, a: Gf2Vector) -> i64 {
        self.coords[a.index()]
    }

    /// supp(v) as coordinate indices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&a| self.coords[a] != 0).collect()
    }

    /// Coordinate-wise sum; the level of the result is the sum of levels.
    pub fn add(&self, other: &LatticePoint) -> Result<LatticePoint> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| {
                x.checked_add(*y)
                    .filter(|s| *s != i64::MIN)
                    .ok_or_else(|| Error::Overflow("coordinate sum".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            m: self.m,
            coords,
            level: self.level + other.level,
        })
    }
}

/// n·t for the barycentric coordinates t of a point: `scaled[b] = (H v)_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycentricProfile {
    m: u32,
    scaled: Vec<i64>,
}

impl BarycentricProfile {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn scaled(&self) -> &[i64] {
        &self.scaled
    }

    pub fn is_nonnegative(&self) -> bool {
        self.scaled.iter().all(|&s| s >= 0)
    }

    /// T(v): indices of vertices with a nonzero coefficient.
    pub fn vertex_support(&self) -> Vec<usize> {
        (0..self.scaled.len()).filter(|&b| self.scaled[b] != 0).collect()
    }
}

/// H(a, b) = (−1)^⟨a,b⟩.
pub fn hadamard_entry(a: Gf2Vector, b: Gf2Vector) -> Result<i8> {
    Ok(if a.dot(b)? { -1 } else { 1 })
}

#[inline]
pub(crate) fn sign(a: usize, b: usize) -> i64 {
    if parity((a & b) as u32) {
        -1
    } else {
        1
    }
}

/// The column h_b, a vertex of Had.
pub fn hadamard_column(m: u32, b: Gf2Vector) -> Result<LatticePoint> {
    check_dim(m)?;
    if b.m() != m {
        return Err(Error::DimensionMismatch { left: m, right: b.m() });
    }
    let coords = (0..1usize << m).map(|a| sign(a, b.index())).collect();
    Ok(LatticePoint::from_raw(m, coords, 1))
}

fn butterfly<T: Copy + Add<Output = T> + Sub<Output = T>>(data: &mut [T]) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());
    let mut half = 1;
    while half < n {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, t) = (*x + *y, *x - *y);
                *x = s;
                *y = t;
            }
        }
        half <<= 1;
    }
}

/// In-place Walsh–Hadamard transform in natural order: `data ← H·data`.
///
/// The caller guarantees `len · max|data| < 2^62`; [`fwht`] checks it.
pub fn fwht_in_place(data: &mut [i64]) {
    butterfly(data);
}

const TRANSFORM_LIMIT: u128 = 1 << 62;

/// H·v in O(n log n) exact integer butterflies.
pub fn fwht(v: &LatticePoint) -> Result<BarycentricProfile> {
    let max = v.coords.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    if u128::from(max) * v.coords.len() as u128 >= TRANSFORM_LIMIT {
        return Err(Error::Overflow(format!(
            "n·max|v| = {}·{max} reaches 2^62",
            v.coords.len()
        )));
    }
    let mut scaled = v.coords.clone();
    fwht_in_place(&mut scaled);
    Ok(BarycentricProfile { m: v.m, scaled })
}

/// Exact test of v ∈ d·Had.
pub fn dilate_membership(v: &LatticePoint, d: u64) -> bool {
    if u64::try_from(v.coords[0]).ok() != Some(d) {
        return false;
    }
    // d·Had ⊆ [−d, d]^n
    if v.coords.iter().any(|x| x.unsigned_abs() > d) {
        return false;
    }
    if u128::from(d) * (v.coords.len() as u128) < TRANSFORM_LIMIT {
        let mut s = v.coords.clone();
        fwht_in_place(&mut s);
        s.iter().all(|&x| x >= 0)
    } else {
        let mut s: Vec<i128> = v.coords.iter().map(|&x| i128::from(x)).collect();
        butterfly(&mut s);
        s.iter().all(|&x| x >= 0)
    }
}

/// Membership of x ∈ ℤ^(n−1) in d·P₀, where P₀ is Had with coordinate 0
/// deleted. The lift puts d back into coordinate 0.
pub fn projected_membership(x: &[i64], d: u64) -> Result<bool> {
    let n = x.len() + 1;
    if !n.is_power_of_two() || n < 2 {
        return Err(Error::Input(format!(
            "projected point has {} coordinates; expected 2^m − 1",
            x.len()
        )));
    }
    let m = n.trailing_zeros();
    check_dim(m)?;
    let first = i64::try_from(d).map_err(|_| Error::Overflow(format!("d = {d}")))?;
    let mut coords = Vec::with_capacity(n);
    coords.push(first);
    coords.extend_from_slice(x);
    Ok(dilate_membership(&LatticePoint::from_raw(m, coords, d), d))
}
