use std::fmt;

use super::{kernel_basis, rank, rref, ExactError, ProjPoint, Rational};

/// Linear subspace of projective space, stored as the reduced row-echelon
/// basis of the underlying linear subspace. Two subspaces are equal iff their
/// canonical basis matrices are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl LinearSubspace {
    /// Subspace spanned by the given projective points.
    pub fn spanned_by(points: &[ProjPoint]) -> Result<Self, ExactError> {
        let Some(first) = points.first() else {
            return Err(ExactError::ZeroVector);
        };
        let ambient = first.len();
        let mut rows = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != ambient {
                return Err(ExactError::AmbientMismatch(ambient, p.len()));
            }
            rows.push(p.rational_coords());
        }
        rref(&mut rows);
        Ok(LinearSubspace {
            ambient,
            basis: rows,
        })
    }

    /// Solution set of the homogeneous linear system with the given
    /// coefficient rows.
    pub fn solution_space(equations: &[Vec<Rational>], ambient: usize) -> Result<Self, ExactError> {
        for eq in equations {
            if eq.len() != ambient {
                return Err(ExactError::AmbientMismatch(ambient, eq.len()));
            }
        }
        let mut basis = kernel_basis(equations, ambient);
        rref(&mut basis);
        Ok(LinearSubspace { ambient, basis })
    }

    /// Number of homogeneous coordinates of the ambient projective space.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Projective dimension; -1 denotes the empty subspace.
    pub fn projective_dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn basis_rows(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Canonical basis rows as projective points.
    pub fn basis_points(&self) -> Vec<ProjPoint> {
        self.basis
            .iter()
            .map(|row| ProjPoint::from_rationals(row).expect("basis rows are nonzero"))
            .collect()
    }

    /// The unique point of a zero-dimensional subspace.
    pub fn single_point(&self) -> Option<ProjPoint> {
        if self.basis.len() == 1 {
            Some(ProjPoint::from_rationals(&self.basis[0]).expect("basis row is nonzero"))
        } else {
            None
        }
    }

    pub fn contains(&self, point: &ProjPoint) -> Result<bool, ExactError> {
        if point.len() != self.ambient {
            return Err(ExactError::AmbientMismatch(self.ambient, point.len()));
        }
        let mut rows = self.basis.clone();
        rows.push(point.rational_coords());
        Ok(rank(&rows) == self.basis.len())
    }

    /// Exact intersection, computed by the Zassenhaus block trick.
    pub fn intersection(&self, other: &LinearSubspace) -> Result<LinearSubspace, ExactError> {
        if self.ambient != other.ambient {
            return Err(ExactError::AmbientMismatch(self.ambient, other.ambient));
        }
        let n = self.ambient;
        let mut block = Vec::new();
        for row in &self.basis {
            let mut doubled = row.clone();
            doubled.extend(row.iter().cloned());
            block.push(doubled);
        }
        for row in &other.basis {
            let mut padded = row.clone();
            padded.extend(std::iter::repeat(Rational::zero()).take(n));
            block.push(padded);
        }
        rref(&mut block);
        let mut basis: Vec<Vec<Rational>> = block
            .into_iter()
            .filter(|row| row[..n].iter().all(|x| x.is_zero()))
            .map(|row| row[n..].to_vec())
            .collect();
        rref(&mut basis);
        Ok(LinearSubspace {
            ambient: n,
            basis,
        })
    }
}

impl fmt::Debug for LinearSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearSubspace(dim {}, ", self.projective_dim())?;
        let points = self.basis_points();
        for (i, p) in points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
