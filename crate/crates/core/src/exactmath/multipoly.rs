use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{rank, ExactError, ProjPoint, Rational};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms map exponent vectors to nonzero coefficients; the zero polynomial
/// has no terms. Equality is exact equality of normal forms.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u8>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, value: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], value);
        p
    }

    /// The monomial x_i (0-based variable index).
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable index out of range");
        let mut exps = vec![0u8; vars];
        exps[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(exps, Rational::one());
        p
    }

    /// Builds a polynomial from (coefficient, exponent-vector) pairs.
    pub fn from_terms(
        vars: usize,
        terms: impl IntoIterator<Item = (Rational, Vec<u8>)>,
    ) -> Result<Self, ExactError> {
        let mut p = Self::zero(vars);
        for (coeff, exps) in terms {
            if exps.len() != vars {
                return Err(ExactError::DimensionMismatch {
                    expected: vars,
                    got: exps.len(),
                });
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Maximum total degree, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    /// Some(d) if every term has total degree d (zero polynomial included,
    /// with d arbitrary reported as None).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, exps: Vec<u8>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut p = Self::zero(self.vars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c * factor);
        }
        p
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(self.vars, Rational::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at rational coordinates.
    pub fn eval(&self, coords: &[Rational]) -> Result<Rational, ExactError> {
        if coords.len() != self.vars {
            return Err(ExactError::DimensionMismatch {
                expected: self.vars,
                got: coords.len(),
            });
        }
        let mut acc = Rational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in coords.iter().zip(exps) {
                for _ in 0..e {
                    term = &term * x;
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Exact value at the canonical integer representative of a projective
    /// point. The caller accounts for homogeneity scaling.
    pub fn eval_point(&self, point: &ProjPoint) -> Result<Rational, ExactError> {
        self.eval(&point.rational_coords())
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < self.vars, "variable index out of range");
        let mut p = Self::zero(self.vars);
        for (exps, coeff) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            p.add_term(e, coeff * &Rational::from_int(exps[i] as i64));
        }
        p
    }

    /// Substitutes a homogeneous linear image polynomial for every variable.
    /// All images must share one variable count; that becomes the variable
    /// count of the result.
    pub fn substitute_linear(&self, images: &[MultiPoly]) -> Result<MultiPoly, ExactError> {
        if images.len() != self.vars {
            return Err(ExactError::ArityMismatch {
                expected: self.vars,
                got: images.len(),
            });
        }
        let target_vars = images.first().map(|p| p.vars).unwrap_or(0);
        for image in images {
            if image.vars != target_vars {
                return Err(ExactError::DimensionMismatch {
                    expected: target_vars,
                    got: image.vars,
                });
            }
            if !image.is_zero() && image.homogeneous_degree() != Some(1) {
                return Err(ExactError::NonLinearImage);
            }
        }
        let mut result = MultiPoly::zero(target_vars);
        for (exps, coeff) in &self.terms {
            let mut term = MultiPoly::constant(target_vars, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = &term * &images[i].pow(e as u32);
                }
            }
            result = &result + &term;
        }
        Ok(result)
    }

    /// True iff the two polynomials have identical normal forms, i.e. their
    /// difference is the zero polynomial.
    pub fn identical(&self, other: &MultiPoly) -> bool {
        self == other
    }
}

/// Rank over the rationals of the Jacobian matrix of `system` evaluated at
/// `point`. The point must satisfy every equation of the system.
pub fn jacobian_rank(system: &[MultiPoly], point: &ProjPoint) -> Result<usize, ExactError> {
    let coords = point.rational_coords();
    for p in system {
        if !p.eval(&coords)?.is_zero() {
            return Err(ExactError::PointNotOnVariety);
        }
    }
    let rows: Vec<Vec<Rational>> = system
        .iter()
        .map(|p| {
            (0..p.vars)
                .map(|i| p.partial_derivative(i).eval(&coords))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    Ok(rank(&rows))
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{coeff}")?;
            for (i, &e) in exps.iter().enumerate() {
                if e == 1 {
                    write!(f, "*x{}", i + 1)?;
                } else if e > 1 {
                    write!(f, "*x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Sum of all variables, the degree-1 equation of the ambient system.
pub(crate) fn sum_of_vars(vars: usize) -> MultiPoly {
    (0..vars).fold(MultiPoly::zero(vars), |acc, i| {
        &acc + &MultiPoly::var(vars, i)
    })
}

/// Sum of cubes of all variables.
pub(crate) fn sum_of_cubes(vars: usize) -> MultiPoly {
    (0..vars).fold(MultiPoly::zero(vars), |acc, i| {
        &acc + &MultiPoly::var(vars, i).pow(3)
    })
}

impl MultiPoly {
    /// Convenience constructor for integer-coefficient terms.
    pub fn from_int_terms(
        vars: usize,
        terms: &[(i64, &[u8])],
    ) -> Result<Self, ExactError> {
        Self::from_terms(
            vars,
            terms
                .iter()
                .map(|&(c, e)| (Rational::from_int(c), e.to_vec())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(6, i)
    }

    #[test]
    fn sum_of_cubes_at_segre_node_is_zero() {
        let p = sum_of_cubes(6);
        let node = ProjPoint::from_integers([1i64, 1, 1, -1, -1, -1]).unwrap();
        assert!(p.eval_point(&node).unwrap().is_zero());
    }

    #[test]
    fn eval_single_monomial() {
        let p = sum_of_vars(6);
        let e1 = ProjPoint::from_integers([1i64, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(p.eval_point(&e1).unwrap(), Rational::from_int(1));
    }

    #[test]
    fn eval_five_ones_one_minus() {
        let p = sum_of_cubes(6);
        let pt = ProjPoint::from_integers([1i64, 1, 1, 1, 1, -1]).unwrap();
        assert_eq!(p.eval_point(&pt).unwrap(), Rational::from_int(4));
    }

    #[test]
    fn eval_dimension_mismatch() {
        let p = sum_of_vars(6);
        assert!(matches!(
            p.eval(&[Rational::one()]),
            Err(ExactError::DimensionMismatch { expected: 6, got: 1 })
        ));
    }

    #[test]
    fn pairing_substitution_kills_sum_of_cubes() {
        // x2 <- -x1, x4 <- -x3, x6 <- -x5 maps sum of cubes to zero.
        let images = vec![
            x(0),
            -&x(0),
            x(2),
            -&x(2),
            x(4),
            -&x(4),
        ];
        let restricted = sum_of_cubes(6).substitute_linear(&images).unwrap();
        assert!(restricted.is_zero());
    }

    #[test]
    fn identity_substitution_is_identity() {
        let p = &sum_of_cubes(6) - &sum_of_vars(6);
        let images: Vec<MultiPoly> = (0..6).map(x).collect();
        assert_eq!(p.substitute_linear(&images).unwrap(), p);
    }

    #[test]
    fn eliminating_x3_from_three_cubes() {
        // x1^3 + x2^3 + x3^3 with x3 <- -x1 - x2 expands, by hand, to
        // -3 x1^2 x2 - 3 x1 x2^2.
        let y = |i: usize| MultiPoly::var(3, i);
        let p = &(&y(0).pow(3) + &y(1).pow(3)) + &y(2).pow(3);
        let images = vec![
            MultiPoly::var(2, 0),
            MultiPoly::var(2, 1),
            -&(&MultiPoly::var(2, 0) + &MultiPoly::var(2, 1)),
        ];
        let got = p.substitute_linear(&images).unwrap();
        let expected =
            MultiPoly::from_int_terms(2, &[(-3, &[2, 1]), (-3, &[1, 2])]).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn non_linear_image_rejected() {
        let p = sum_of_vars(6);
        let mut images: Vec<MultiPoly> = (0..6).map(x).collect();
        images[3] = x(3).pow(2);
        assert_eq!(
            p.substitute_linear(&images),
            Err(ExactError::NonLinearImage)
        );
    }

    #[test]
    fn three_plane_factorization_identity() {
        // x1^3 + x2^3 + x3^3 - (x1+x2+x3)^3 = -3 (x1+x2)(x1+x3)(x2+x3).
        // Hand expansion of the left side:
        //   -3 (x1^2 x2 + x1^2 x3 + x2^2 x1 + x2^2 x3 + x3^2 x1 + x3^2 x2)
        //   - 6 x1 x2 x3.
        let y = |i: usize| MultiPoly::var(3, i);
        let sum = &(&y(0) + &y(1)) + &y(2);
        let lhs = &(&(&y(0).pow(3) + &y(1).pow(3)) + &y(2).pow(3)) - &sum.pow(3);
        let rhs = (&(&(&y(0) + &y(1)) * &(&y(0) + &y(2))) * &(&y(1) + &y(2)))
            .scale(&Rational::from_int(-3));
        assert!(lhs.identical(&rhs));
        let hand_expansion = MultiPoly::from_int_terms(
            3,
            &[
                (-3, &[2, 1, 0]),
                (-3, &[2, 0, 1]),
                (-3, &[1, 2, 0]),
                (-3, &[0, 2, 1]),
                (-3, &[1, 0, 2]),
                (-3, &[0, 1, 2]),
                (-6, &[1, 1, 1]),
            ],
        )
        .unwrap();
        assert!(lhs.identical(&hand_expansion));
    }

    #[test]
    fn different_degrees_are_not_identical() {
        assert!(!sum_of_vars(6).identical(&sum_of_cubes(6)));
        let p = sum_of_vars(6);
        assert!(p.identical(&p.clone()));
    }

    #[test]
    fn jacobian_rank_drops_at_node() {
        let system = [sum_of_vars(6), sum_of_cubes(6)];
        let node = ProjPoint::from_integers([1i64, 1, 1, -1, -1, -1]).unwrap();
        assert_eq!(jacobian_rank(&system, &node).unwrap(), 1);
    }

    #[test]
    fn jacobian_rank_generic_point_is_two() {
        let system = [sum_of_vars(6), sum_of_cubes(6)];
        let smooth = ProjPoint::from_integers([1i64, -1, 2, -2, 3, -3]).unwrap();
        assert_eq!(jacobian_rank(&system, &smooth).unwrap(), 2);
    }

    #[test]
    fn jacobian_rank_linear_system() {
        let system = [MultiPoly::var(6, 0)];
        let pt = ProjPoint::from_integers([0i64, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(jacobian_rank(&system, &pt).unwrap(), 1);
    }

    #[test]
    fn jacobian_rank_requires_point_on_variety() {
        let system = [sum_of_vars(6)];
        let off = ProjPoint::from_integers([1i64, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(
            jacobian_rank(&system, &off),
            Err(ExactError::PointNotOnVariety)
        );
    }
}
