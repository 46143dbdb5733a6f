use crate::exactla::MatZ;

use super::IncidenceError;

/// A finite incidence structure `(P, B, F)` held as its 0-1 flag matrix
/// (rows = points, columns = blocks). Flag sets are computed views.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidenceStructure {
    n1: usize,
    n2: usize,
    flags: Vec<bool>,
}

impl IncidenceStructure {
    pub fn from_flag_matrix(n1: usize, n2: usize, flags: Vec<bool>) -> Result<Self, IncidenceError> {
        if n1 == 0 || n2 == 0 {
            return Err(IncidenceError::Empty);
        }
        if flags.len() != n1 * n2 {
            return Err(IncidenceError::Shape {
                expected: n1 * n2,
                found: flags.len(),
            });
        }
        Ok(IncidenceStructure { n1, n2, flags })
    }

    /// Build from the point lists of each block.
    pub fn from_blocks(n1: usize, blocks: &[Vec<usize>]) -> Result<Self, IncidenceError> {
        let n2 = blocks.len();
        if n1 == 0 || n2 == 0 {
            return Err(IncidenceError::Empty);
        }
        let mut flags = vec![false; n1 * n2];
        for (b, pts) in blocks.iter().enumerate() {
            for &x in pts {
                if x >= n1 {
                    return Err(IncidenceError::PointOutOfRange { block: b, point: x, n1 });
                }
                if flags[x * n2 + b] {
                    return Err(IncidenceError::DuplicatePoint { block: b, point: x });
                }
                flags[x * n2 + b] = true;
            }
        }
        Ok(IncidenceStructure { n1, n2, flags })
    }

    /// Number of points `|P|`.
    pub fn n1(&self) -> usize {
        self.n1
    }

    /// Number of blocks `|B|`.
    pub fn n2(&self) -> usize {
        self.n2
    }

    #[inline]
    pub fn is_flag(&self, point: usize, block: usize) -> bool {
        self.flags[point * self.n2 + block]
    }

    /// Blocks through `point`, ascending.
    pub fn blocks_of(&self, point: usize) -> Vec<usize> {
        (0..self.n2).filter(|&b| self.is_flag(point, b)).collect()
    }

    /// Points on `block`, ascending.
    pub fn points_of(&self, block: usize) -> Vec<usize> {
        (0..self.n1).filter(|&x| self.is_flag(x, block)).collect()
    }

    /// `|F(x) ∩ F(y)|`
    pub fn common_blocks(&self, x: usize, y: usize) -> usize {
        (0..self.n2).filter(|&b| self.is_flag(x, b) && self.is_flag(y, b)).count()
    }

    /// `|F⁻¹(Y) ∩ F⁻¹(Z)|`
    pub fn common_points(&self, y: usize, z: usize) -> usize {
        (0..self.n1).filter(|&x| self.is_flag(x, y) && self.is_flag(x, z)).count()
    }

    /// The dual structure `(B, P, Fᵀ)`.
    pub fn dual(&self) -> Self {
        let flags = (0..self.n2)
            .flat_map(|b| (0..self.n1).map(move |x| (b, x)))
            .map(|(b, x)| self.is_flag(x, b))
            .collect();
        IncidenceStructure {
            n1: self.n2,
            n2: self.n1,
            flags,
        }
    }

    /// Copy with the incidence of one (point, block) pair toggled.
    pub fn with_flag_toggled(&self, point: usize, block: usize) -> Self {
        let mut out = self.clone();
        let idx = point * self.n2 + block;
        out.flags[idx] = !out.flags[idx];
        out
    }

    /// The incidence matrix `N` (n1 × n2).
    pub fn incidence_matrix(&self) -> MatZ {
        MatZ::from_fn(self.n1, self.n2, |x, b| i64::from(self.is_flag(x, b)))
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (0..self.n2).map(|b| self.points_of(b)).collect()
    }
}
