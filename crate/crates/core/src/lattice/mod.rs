//! Integer points of Had and its dilates.
//!
//! Unit points (d = 1) are in bijection with the affine subspaces of F₂^m:
//! the coset A = W + b corresponds to the uniform average of the vertices
//! {h_c : c ∈ A}, which is the integer point with v(a) = (−1)^⟨a,b⟩ on W^⊥
//! and zero elsewhere. For d ≥ 2 there is no closed form; the depth-first
//! oracle in [`dfs`] is the only exact counter.

pub mod dfs;
pub mod ehrhart;
pub mod io;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{
    affine_subspace_count, check_dim, enumerate_affine_subspaces, rref_basis, Gf2AffineSubspace,
    Gf2Vector,
};
use crate::hadamard::{dilate_membership, fwht, sign, LatticePoint};

pub use dfs::{enumerate_dilate_points, DilatePoints, DEFAULT_NODE_BUDGET};
pub use ehrhart::{ehrhart_from_oracle, ehrhart_interpolate, EhrhartPolynomial};

/// The unit point whose vertex support is `a`.
pub fn point_from_affine_subspace(a: &Gf2AffineSubspace) -> LatticePoint {
    let m = a.m();
    let rep = a.rep().index();
    let mut coords = vec![0i64; 1 << m];
    for c in a.direction().orthogonal_complement().elements() {
        coords[c.index()] = sign(c.index(), rep);
    }
    LatticePoint::from_raw(m, coords, 1)
}

/// Inverse of [`point_from_affine_subspace`]: recovers T(v) from a unit point.
pub fn affine_subspace_from_point(v: &LatticePoint) -> Result<Gf2AffineSubspace> {
    if !dilate_membership(v, 1) {
        return Err(Error::Precondition(
            "point is not an integer point of Had".into(),
        ));
    }
    let m = v.m();
    let profile = fwht(v)?;
    let support = profile.vertex_support();
    let base = support[0];
    let gens: Vec<Gf2Vector> = support
        .iter()
        .map(|&t| Gf2Vector::from_raw(m, (t ^ base) as u32))
        .collect();
    let direction = rref_basis(m, &gens)?;
    if direction.dim() >= 32 || support.len() as u64 != 1u64 << direction.dim() {
        return Err(Error::Consistency(format!(
            "vertex support of size {} is not a coset of a {}-dimensional subspace",
            support.len(),
            direction.dim()
        )));
    }
    let weight = (v.n() / support.len()) as i64;
    if support.iter().any(|&t| profile.scaled()[t] != weight) {
        return Err(Error::Consistency(
            "barycentric coordinates are not uniform on the vertex support".into(),
        ));
    }
    Gf2AffineSubspace::new(direction, Gf2Vector::from_raw(m, base as u32))
}

/// Every integer point of Had, one per affine subspace of F₂^m.
pub fn enumerate_unit_points(m: u32) -> Result<impl Iterator<Item = LatticePoint>> {
    Ok(enumerate_affine_subspaces(m)?.map(|a| point_from_affine_subspace(&a)))
}

/// |Had ∩ ℤⁿ| = Σ_k 2^(m−k)·[m k]₂.
pub fn cor1_count_formula(m: u32) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    Ok(affine_subspace_count(m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    /// Depth-first enumeration of d·Had ∩ ℤⁿ.
    Oracle,
    /// Closed form through the affine-subspace bijection; d = 1 only.
    Bijection,
}

impl FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Self::Oracle),
            "bijection" => Ok(Self::Bijection),
            other => Err(Error::Input(format!("unknown count method `{other}`"))),
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Oracle => "oracle",
            Self::Bijection => "bijection",
        })
    }
}

/// |d·Had ∩ ℤⁿ| by the chosen method.
pub fn count_dilate(m: u32, d: u64, method: CountMethod, budget: u128) -> Result<BigUint> {
    check_dim(m)?;
    match method {
        CountMethod::Bijection if d == 1 => cor1_count_formula(m),
        CountMethod::Bijection => Err(Error::Unsupported(format!(
            "the bijection counts d = 1 only, got d = {d}"
        ))),
        CountMethod::Oracle => {
            // validates the budget before fanning out
            enumerate_dilate_points(m, d, budget)?;
            let di = d as i64;
            let total: u64 = (-di..=di)
                .into_par_iter()
                .map(|x| DilatePoints::with_first_free(m, d, x).count() as u64)
                .sum();
            Ok(BigUint::from(total))
        }
    }
}

/// Checks the closure identity v(a+b) = v(a)·v(b) on every pair of support
/// coordinates. Holds for every integer point of Had.
pub fn support_closure_holds(v: &LatticePoint) -> bool {
    let support = v.support();
    let c = v.coords();
    support
        .iter()
        .all(|&a| support.iter().all(|&b| c[a ^ b] == c[a] * c[b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{Gf2Subspace, Gf2Vector};
    use crate::hadamard::hadamard_column;

    #[test]
    fn bijection_examples() {
        let full = Gf2AffineSubspace::linear(Gf2Subspace::full(3).unwrap());
        assert_eq!(
            point_from_affine_subspace(&full).coords(),
            &[1, 0, 0, 0, 0, 0, 0, 0]
        );
        for b in 0..8 {
            let bv = Gf2Vector::new(3, b).unwrap();
            let single = Gf2AffineSubspace::new(Gf2Subspace::zero(3).unwrap(), bv).unwrap();
            let h = hadamard_column(3, bv).unwrap();
            assert_eq!(point_from_affine_subspace(&single), h);
            assert_eq!(affine_subspace_from_point(&h).unwrap(), single);
        }
        let line = Gf2AffineSubspace::linear(
            rref_basis(2, &[Gf2Vector::new(2, 0b10).unwrap()]).unwrap(),
        );
        let p = point_from_affine_subspace(&line);
        assert_eq!(p.coords(), &[1, 1, 0, 0]);
        assert_eq!(affine_subspace_from_point(&p).unwrap(), line);
        let e0 = LatticePoint::centroid(2, 1).unwrap();
        assert_eq!(
            affine_subspace_from_point(&e0).unwrap(),
            Gf2AffineSubspace::linear(Gf2Subspace::full(2).unwrap())
        );
    }

    #[test]
    fn inverse_rejects_non_members() {
        let v = LatticePoint::new(2, vec![1, 1, 1, 0], 1).unwrap();
        assert!(matches!(
            affine_subspace_from_point(&v),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn unit_points_m1() {
        let mut pts: Vec<Vec<i64>> = enumerate_unit_points(1)
            .unwrap()
            .map(|p| p.into_coords())
            .collect();
        pts.sort();
        assert_eq!(pts, vec![vec![1, -1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn formula_values() {
        let got: Vec<BigUint> = (1..=4).map(|m| cor1_count_formula(m).unwrap()).collect();
        let want: Vec<BigUint> = [3u32, 11, 51, 307].iter().map(|&x| x.into()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn count_methods() {
        let b = DEFAULT_NODE_BUDGET;
        assert_eq!(count_dilate(2, 1, CountMethod::Bijection, b).unwrap(), 11u32.into());
        assert_eq!(count_dilate(3, 1, CountMethod::Oracle, b).unwrap(), 51u32.into());
        assert_eq!(count_dilate(4, 1, CountMethod::Bijection, b).unwrap(), 307u32.into());
        assert!(matches!(
            count_dilate(2, 2, CountMethod::Bijection, b),
            Err(Error::Unsupported(_))
        ));
        for d in 0..5u64 {
            assert_eq!(
                count_dilate(1, d, CountMethod::Oracle, b).unwrap(),
                BigUint::from(2 * d + 1)
            );
        }
    }

    #[test]
    fn closure_identity_detects_violation() {
        let v = LatticePoint::new(2, vec![1, 1, 1, 0], 1).unwrap();
        assert!(!support_closure_holds(&v));
        assert!(enumerate_unit_points(3).unwrap().all(|p| support_closure_holds(&p)));
    }
}
