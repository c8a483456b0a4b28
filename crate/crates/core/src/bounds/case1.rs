//! Certificate families for small dilates.
//!
//! A family is a set of d linear subspaces T₁, …, T_d of F₂^m with pairwise
//! distinct dimensions, each strictly inside (m/2 − d, m/2 + d). Each Tᵢ is
//! the vertex support of the unit point vᵢ, whose barycentric coefficients
//! are 2^(−dim Tᵢ) on Tᵢ. Distinct exponents make every coordinate of
//! Σ t(vᵢ) a distinct binary expansion, so distinct families give distinct
//! sums in d·Had.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf2::{check_dim, enumerate_subspaces, gaussian_binomial, Gf2AffineSubspace, Gf2Subspace, SubspaceIter};
use crate::hadamard::{dilate_membership, LatticePoint};
use crate::lattice::point_from_affine_subspace;

/// Default cap on the number of families an injectivity check may scan.
pub const DEFAULT_FAMILY_BUDGET: u64 = 1 << 22;

/// Dimensions k ∈ [0, m] with m/2 − d < k < m/2 + d.
pub fn admissible_dims(m: u32, d: u64) -> Vec<u32> {
    let (m2, d2) = (u128::from(m), 2 * u128::from(d));
    (0..=m)
        .filter(|&k| {
            let k2 = 2 * u128::from(k);
            k2 + d2 > m2 && k2 < m2 + d2
        })
        .collect()
}

fn check_family_params(m: u32, d: u64) -> Result<Vec<u32>> {
    if d == 0 {
        return Err(Error::Domain("family size d must be at least 1".into()));
    }
    let dims = admissible_dims(m, d);
    if (dims.len() as u64) < d {
        return Err(Error::Infeasible(format!(
            "only {} admissible dimensions in ({}/2 − {d}, {}/2 + {d}) for {d} distinct exponents",
            dims.len(),
            m,
            m
        )));
    }
    Ok(dims)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case1Family {
    pub m: u32,
    pub d: u64,
    /// Vertex supports T(vᵢ), by increasing dimension.
    pub subspaces: Vec<Gf2Subspace>,
    pub points: Vec<LatticePoint>,
    pub sum: LatticePoint,
}

impl Case1Family {
    fn build(m: u32, subspaces: Vec<Gf2Subspace>) -> Result<Self> {
        let d = subspaces.len() as u64;
        let points: Vec<LatticePoint> = subspaces
            .iter()
            .map(|w| point_from_affine_subspace(&Gf2AffineSubspace::linear(w.clone())))
            .collect();
        let mut sum = LatticePoint::zero(m)?;
        for p in &points {
            sum = sum.add(p)?;
        }
        if !dilate_membership(&sum, d) {
            return Err(Error::Consistency(format!(
                "family sum {:?} is not in {d}·Had",
                sum.coords()
            )));
        }
        Ok(Self {
            m,
            d,
            subspaces,
            points,
            sum,
        })
    }

    /// exp(vᵢ) = dim T(vᵢ).
    pub fn exponents(&self) -> Vec<u32> {
        self.subspaces.iter().map(Gf2Subspace::dim).collect()
    }
}

/// Streams certificate families in a fixed order: dimension tuples
/// k₁ < … < k_d lexicographically, then subspaces per dimension in
/// enumeration order, last dimension varying fastest. Stops after `cap`.
pub fn case1_enumerate_families(m: u32, d: u64, cap: u64) -> Result<Case1Families> {
    check_dim(m)?;
    let dims = check_family_params(m, d)?;
    Ok(Case1Families {
        m,
        dims,
        combo: (0..d as usize).collect(),
        iters: Vec::new(),
        current: Vec::new(),
        remaining: cap,
        started: false,
    })
}

/// Iterator returned by [`case1_enumerate_families`].
pub struct Case1Families {
    m: u32,
    dims: Vec<u32>,
    combo: Vec<usize>,
    iters: Vec<SubspaceIter>,
    current: Vec<Gf2Subspace>,
    remaining: u64,
    started: bool,
}

impl Case1Families {
    fn fresh(&self, slot: usize) -> SubspaceIter {
        enumerate_subspaces(self.m, self.dims[self.combo[slot]]).expect("admissible dims <= m")
    }

    /// Positions the odometer at the first family of the current combo.
    fn reset_from(&mut self, slot: usize) {
        self.iters.truncate(slot);
        self.current.truncate(slot);
        for s in slot..self.combo.len() {
            let mut it = self.fresh(s);
            self.current.push(it.next().expect("every dimension has a subspace"));
            self.iters.push(it);
        }
    }

    fn next_combo(&mut self) -> bool {
        let (k, len) = (self.combo.len(), self.dims.len());
        let Some(i) = (0..k).rev().find(|&i| self.combo[i] < len - k + i) else {
            return false;
        };
        self.combo[i] += 1;
        for j in i + 1..k {
            self.combo[j] = self.combo[j - 1] + 1;
        }
        true
    }

    fn advance(&mut self) -> bool {
        for slot in (0..self.combo.len()).rev() {
            if let Some(w) = self.iters[slot].next() {
                self.current[slot] = w;
                self.reset_from(slot + 1);
                return true;
            }
        }
        if self.next_combo() {
            self.reset_from(0);
            true
        } else {
            false
        }
    }
}

impl Iterator for Case1Families {
    type Item = Result<Case1Family>;

    fn next(&mut self) -> Option<Result<Case1Family>> {
        if self.remaining == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.reset_from(0);
        } else if !self.advance() {
            self.remaining = 0;
            return None;
        }
        self.remaining -= 1;
        Some(Case1Family::build(self.m, self.current.clone()))
    }
}

#[derive(Clone, Debug)]
pub struct InjectivityReport {
    pub families: u64,
    pub injective: bool,
    pub collision: Option<(Case1Family, Case1Family)>,
}

/// Enumerates every family and checks that their sums are pairwise distinct.
pub fn case1_verify_injectivity(m: u32, d: u64, budget: u64) -> Result<InjectivityReport> {
    let total = case1_count_lower_bound(m, d)?.exact;
    if total.to_u64().is_none_or(|t| t > budget) {
        return Err(Error::Budget {
            estimated: total.to_string(),
            budget: u128::from(budget),
        });
    }
    let mut seen: HashMap<Vec<i64>, Case1Family> = HashMap::new();
    let mut families = 0u64;
    for fam in case1_enumerate_families(m, d, u64::MAX)? {
        let fam = fam?;
        families += 1;
        if let Some(prev) = seen.get(fam.sum.coords()) {
            return Ok(InjectivityReport {
                families,
                injective: false,
                collision: Some((prev.clone(), fam)),
            });
        }
        seen.insert(fam.sum.coords().to_vec(), fam);
    }
    Ok(InjectivityReport {
        families,
        injective: true,
        collision: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case1Count {
    pub admissible: Vec<u32>,
    /// Σ over d-subsets of admissible dims of ∏ [m kᵢ]₂.
    pub exact: BigUint,
    /// The d consecutive admissible dims centred closest to m/2.
    pub central_dims: Vec<u32>,
    /// log₂ of ∏ 2^(kᵢ(m−kᵢ)) over `central_dims`.
    pub crude_log2: u64,
}

/// Exact number of certificate families, plus the crude per-dimension bound
/// [m k]₂ ≥ 2^(k(m−k)) evaluated at the central choice.
///
/// Works for any m ≥ 1; only Gaussian binomials are evaluated.
pub fn case1_count_lower_bound(m: u32, d: u64) -> Result<Case1Count> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let admissible = check_family_params(m, d)?;
    let d = d as usize;

    // elementary symmetric polynomial e_d of the Gaussian binomials
    let mut e = vec![BigUint::zero(); d + 1];
    e[0] = BigUint::one();
    for &k in &admissible {
        let g = gaussian_binomial(m, k)?;
        for j in (1..=d).rev() {
            let add = &e[j - 1] * &g;
            e[j] += add;
        }
    }

    let windows = admissible.len() - d + 1;
    let start = (0..windows)
        .min_by_key(|&s| {
            let twice_centre = 2 * i64::from(admissible[s]) + d as i64 - 1;
            (twice_centre - i64::from(m)).abs()
        })
        .expect("at least one window");
    let central_dims = admissible[start..start + d].to_vec();
    let crude_log2 = central_dims
        .iter()
        .map(|&k| u64::from(k) * u64::from(m - k))
        .sum();

    Ok(Case1Count {
        admissible,
        exact: e.swap_remove(d),
        central_dims,
        crude_log2,
    })
}
