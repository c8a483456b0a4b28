//! Exact interpolation of the Ehrhart polynomial of Had from oracle counts.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf2::check_dim;
use crate::lattice::{count_dilate, CountMethod};

/// A polynomial in d with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    coeffs: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn evaluate(&self, d: u64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(d));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// The value at `d` when it is a nonnegative integer.
    pub fn count_at(&self, d: u64) -> Option<BigUint> {
        let v = self.evaluate(d);
        if v.is_integer() {
            v.to_integer().to_biguint()
        } else {
            None
        }
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·d")?,
                _ => write!(f, "({c})·d^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Lagrange interpolation through `counts`, which must hold n = 2^m distinct
/// dilation levels including d = 0.
pub fn ehrhart_interpolate(m: u32, counts: &[(u64, BigUint)]) -> Result<EhrhartPolynomial> {
    check_dim(m)?;
    let n = 1usize << m;
    let levels: BTreeSet<u64> = counts.iter().map(|(d, _)| *d).collect();
    if levels.len() != counts.len() {
        return Err(Error::Input("duplicate dilation levels".into()));
    }
    if counts.len() != n {
        return Err(Error::Input(format!(
            "need exactly {n} dilation levels for m = {m}, got {}",
            counts.len()
        )));
    }
    if !levels.contains(&0) {
        return Err(Error::Input("dilation level 0 is required".into()));
    }

    let xs: Vec<BigInt> = counts.iter().map(|(d, _)| BigInt::from(*d)).collect();
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, (_, y)) in counts.iter().enumerate() {
        // basis polynomial ∏_{j≠i} (x − x_j), ascending coefficients
        let mut basis = vec![BigInt::one()];
        let mut denom = BigInt::one();
        for (j, xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigInt::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xj;
            }
            basis = next;
            denom *= &xs[i] - xj;
        }
        let scale = BigRational::new(BigInt::from(y.clone()), denom);
        for (c, b) in coeffs.iter_mut().zip(basis) {
            *c += &scale * BigRational::from_integer(b);
        }
    }
    Ok(EhrhartPolynomial { coeffs })
}

/// Runs the oracle at d = 0..n−1 and interpolates.
pub fn ehrhart_from_oracle(
    m: u32,
    budget: u128,
) -> Result<(EhrhartPolynomial, Vec<(u64, BigUint)>)> {
    check_dim(m)?;
    let n = 1u64 << m;
    let counts = (0..n)
        .map(|d| Ok((d, count_dilate(m, d, CountMethod::Oracle, budget)?)))
        .collect::<Result<Vec<_>>>()?;
    let poly = ehrhart_interpolate(m, &counts)?;
    Ok((poly, counts))
}
