use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ExactError, Rational};

/// Point of projective space with exact coordinates.
///
/// Stored in canonical form: coordinates cleared to coprime integers with the
/// first nonzero coordinate positive. Two points are equal iff their canonical
/// coordinate vectors are identical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<BigInt>,
}

impl ProjPoint {
    pub fn from_rationals(coords: &[Rational]) -> Result<Self, ExactError> {
        Ok(ProjPoint {
            coords: canonical_coords(coords)?,
        })
    }

    pub fn from_integers<I>(coords: I) -> Result<Self, ExactError>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let rationals: Vec<Rational> = coords
            .into_iter()
            .map(|c| Rational::from_int(c.into()))
            .collect();
        Self::from_rationals(&rationals)
    }

    /// Number of homogeneous coordinates (ambient projective dimension + 1).
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn integer_coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn rational_coords(&self) -> Vec<Rational> {
        self.coords.iter().cloned().map(Rational::from_int).collect()
    }

    /// Coordinates permuted by `new_position[i] = old i`; used for coordinate
    /// group actions. `positions[i]` gives the new index of old coordinate `i`.
    pub fn with_permuted_coords(&self, positions: &[usize]) -> Result<Self, ExactError> {
        if positions.len() != self.coords.len() {
            return Err(ExactError::DimensionMismatch {
                expected: self.coords.len(),
                got: positions.len(),
            });
        }
        let mut coords = vec![BigInt::zero(); self.coords.len()];
        for (i, &j) in positions.iter().enumerate() {
            coords[j] = self.coords[i].clone();
        }
        Self::from_integers(coords)
    }
}

/// Canonicalizes a homogeneous coordinate vector: clears denominators,
/// divides by the gcd, and makes the first nonzero coordinate positive.
pub fn canonical_coords(coords: &[Rational]) -> Result<Vec<BigInt>, ExactError> {
    if coords.iter().all(|c| c.is_zero()) {
        return Err(ExactError::ZeroVector);
    }
    let denom_lcm = coords
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in ints.iter_mut() {
        *x = &*x / &gcd;
    }
    let first_nonzero_negative = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    if first_nonzero_negative {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    Ok(ints)
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_clears_denominators_and_signs() {
        let p = ProjPoint::from_rationals(&[
            Rational::new(-1, 2).unwrap(),
            Rational::new(1, 3).unwrap(),
            Rational::zero(),
        ])
        .unwrap();
        assert_eq!(
            p.integer_coords(),
            &[BigInt::from(3), BigInt::from(-2), BigInt::from(0)]
        );
    }

    #[test]
    fn scaled_representatives_are_equal() {
        let p = ProjPoint::from_integers([2i64, -2, 4]).unwrap();
        let q = ProjPoint::from_integers([-1i64, 1, -2]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "(1:-1:2)");
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(
            ProjPoint::from_integers([0i64, 0, 0]),
            Err(ExactError::ZeroVector)
        );
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let raw = [
            Rational::new(6, 4).unwrap(),
            Rational::new(-9, 2).unwrap(),
            Rational::from_int(3),
        ];
        let once = canonical_coords(&raw).unwrap();
        let again = canonical_coords(
            &once
                .iter()
                .cloned()
                .map(Rational::from_int)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(once, again);
    }
}
