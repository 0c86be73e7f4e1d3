use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Uniform collocation grid on the unit torus `(0,1)^d`.
///
/// Nodes sit at `y_j = j/n` componentwise. Spectral coefficients are stored
/// in FFT index order: flat index `i` along an axis corresponds to the integer
/// mode `i` for `i < n/2` and `i - n` otherwise, so the mode set is the
/// symmetric range `[-n/2, n/2)`. Fields expand as
/// `f(y) = sum_k fhat(k) exp(2*pi*i*k.y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellGrid {
    dim: usize,
    n: usize,
}

impl CellGrid {
    /// Build a grid; `d` must be 2 or 3 and `n` even with `n >= 4`.
    pub fn new(dim: usize, n: usize) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::InvalidGrid(format!(
                "dimension must be 2 or 3, got {dim}"
            )));
        }
        if n % 2 != 0 {
            return Err(Error::InvalidGrid(format!(
                "resolution must be even, got {n}"
            )));
        }
        if n < 4 {
            return Err(Error::InvalidGrid(format!(
                "resolution must be >= 4, got {n}"
            )));
        }
        Ok(Self { dim, n })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of nodes (= number of modes).
    #[inline]
    pub fn len(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Integer mode of a flat spectral index, components in `[-n/2, n/2)`.
    #[inline]
    pub fn mode_of(&self, flat: usize) -> [i64; 3] {
        let n = self.n;
        let half = (n / 2) as i64;
        let mut m = [0i64; 3];
        let mut rest = flat;
        for axis in (0..self.dim).rev() {
            let i = (rest % n) as i64;
            rest /= n;
            m[axis] = if i < half { i } else { i - n as i64 };
        }
        m
    }

    /// Flat index of an integer mode (components must lie in `[-n/2, n/2)`).
    #[inline]
    pub fn flat_of_mode(&self, m: [i64; 3]) -> usize {
        let n = self.n as i64;
        let mut flat = 0usize;
        for axis in 0..self.dim {
            let i = m[axis].rem_euclid(n) as usize;
            flat = flat * self.n + i;
        }
        flat
    }

    /// Node coordinate of a flat nodal index.
    #[inline]
    pub fn node_of(&self, flat: usize) -> [f64; 3] {
        let n = self.n;
        let mut y = [0.0; 3];
        let mut rest = flat;
        for axis in (0..self.dim).rev() {
            y[axis] = (rest % n) as f64 / n as f64;
            rest /= n;
        }
        y
    }

    /// Shifted wavevector `2*pi*m + theta` of a flat spectral index.
    #[inline]
    pub fn wavevector(&self, flat: usize, theta: [f64; 3]) -> [f64; 3] {
        let m = self.mode_of(flat);
        let mut w = [0.0; 3];
        for axis in 0..self.dim {
            w[axis] = 2.0 * std::f64::consts::PI * m[axis] as f64 + theta[axis];
        }
        w
    }

    /// Grid with the same dimension, resolution scaled for dealiased products.
    ///
    /// The 3/2 rule is exact for pairwise products of band-limited fields;
    /// `factor_num/factor_den` is kept integral-even.
    pub fn padded(&self, factor_num: usize, factor_den: usize) -> CellGrid {
        let mut np = self.n * factor_num / factor_den;
        if np % 2 != 0 {
            np += 1;
        }
        CellGrid { dim: self.dim, n: np }
    }

    /// Iterate all flat spectral indices together with their modes.
    pub fn modes(&self) -> impl Iterator<Item = (usize, [i64; 3])> + '_ {
        (0..self.len()).map(move |i| (i, self.mode_of(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts() {
        let g = CellGrid::new(2, 8).unwrap();
        assert_eq!(g.len(), 64);
        assert!(g.modes().any(|(_, m)| m == [0, 0, 0]));
        assert_eq!(g.modes().count(), 64);
        let g3 = CellGrid::new(3, 4).unwrap();
        assert_eq!(g3.len(), 64);
    }

    #[test]
    fn grid_rejects_bad_input() {
        let err = CellGrid::new(2, 7).unwrap_err();
        assert!(err.to_string().contains("resolution must be even"));
        assert!(CellGrid::new(1, 8).is_err());
        assert!(CellGrid::new(4, 8).is_err());
        assert!(CellGrid::new(2, 2).is_err());
    }

    #[test]
    fn mode_index_round_trip() {
        let g = CellGrid::new(3, 8).unwrap();
        for flat in 0..g.len() {
            let m = g.mode_of(flat);
            assert_eq!(g.flat_of_mode(m), flat);
            for axis in 0..3 {
                assert!(m[axis] >= -4 && m[axis] < 4);
            }
        }
    }

    #[test]
    fn padded_three_halves() {
        let g = CellGrid::new(2, 8).unwrap();
        assert_eq!(g.padded(3, 2).n(), 12);
        let g = CellGrid::new(2, 10).unwrap();
        assert_eq!(g.padded(3, 2).n(), 16);
    }
}
