//! Multidimensional FFTs with a process-wide plan cache.

use super::grid::CellGrid;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

struct PlanCache {
    forward: HashMap<usize, Arc<dyn Fft<f64>>>,
    inverse: HashMap<usize, Arc<dyn Fft<f64>>>,
}

fn cache() -> &'static Mutex<PlanCache> {
    static CACHE: OnceLock<Mutex<PlanCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(PlanCache {
            forward: HashMap::new(),
            inverse: HashMap::new(),
        })
    })
}

fn plan(len: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    let mut guard = cache().lock().expect("fft plan cache poisoned");
    let map = if forward {
        &mut guard.forward
    } else {
        &mut guard.inverse
    };
    map.entry(len)
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if forward {
                planner.plan_fft_forward(len)
            } else {
                planner.plan_fft_inverse(len)
            }
        })
        .clone()
}

/// FFT along every axis of row-major data of shape `n^dim`, in place.
fn fft_axes(grid: &CellGrid, data: &mut [Complex64], forward: bool) {
    let n = grid.n();
    let dim = grid.dim();
    debug_assert_eq!(data.len(), grid.len());
    let fft = plan(n, forward);
    let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
    let mut line = vec![Complex64::default(); n];
    // Axis `a` has stride n^(dim-1-a) in row-major layout.
    for axis in 0..dim {
        let stride = n.pow((dim - 1 - axis) as u32);
        let lines = grid.len() / n;
        for li in 0..lines {
            // Decompose the line index into the base offset skipping `axis`.
            let block = stride * n;
            let outer = li / stride;
            let inner = li % stride;
            let base = outer * block + inner;
            for k in 0..n {
                line[k] = data[base + k * stride];
            }
            fft.process_with_scratch(&mut line, &mut scratch);
            for k in 0..n {
                data[base + k * stride] = line[k];
            }
        }
    }
}

/// Nodal values -> spectral coefficients (normalized so that the coefficient
/// at mode 0 is the mean value).
pub fn forward(grid: &CellGrid, data: &mut [Complex64]) {
    fft_axes(grid, data, true);
    let scale = 1.0 / grid.len() as f64;
    for v in data.iter_mut() {
        *v *= scale;
    }
}

/// Spectral coefficients -> nodal values.
pub fn inverse(grid: &CellGrid, data: &mut [Complex64]) {
    fft_axes(grid, data, false);
}

/// Embed spectral coefficients of `grid` into the (larger) `target` grid.
pub fn pad_spectrum(grid: &CellGrid, hat: &[Complex64], target: &CellGrid) -> Vec<Complex64> {
    debug_assert!(target.n() >= grid.n());
    let mut out = vec![Complex64::default(); target.len()];
    for (flat, m) in grid.modes() {
        out[target.flat_of_mode(m)] = hat[flat];
    }
    out
}

/// Restrict spectral coefficients of `source` onto the (smaller) `grid`.
pub fn truncate_spectrum(source: &CellGrid, hat: &[Complex64], grid: &CellGrid) -> Vec<Complex64> {
    debug_assert!(source.n() >= grid.n());
    let mut out = vec![Complex64::default(); grid.len()];
    for (flat, m) in grid.modes() {
        out[flat] = hat[source.flat_of_mode(m)];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn forward_of_plane_wave_is_unit_coefficient() {
        let g = CellGrid::new(2, 8).unwrap();
        let mode = [3i64, -2, 0];
        let mut data: Vec<Complex64> = (0..g.len())
            .map(|i| {
                let y = g.node_of(i);
                let phase =
                    2.0 * std::f64::consts::PI * (mode[0] as f64 * y[0] + mode[1] as f64 * y[1]);
                Complex64::new(phase.cos(), phase.sin())
            })
            .collect();
        forward(&g, &mut data);
        for (flat, m) in g.modes() {
            let expect = if m == mode { 1.0 } else { 0.0 };
            assert!(
                (data[flat] - Complex64::new(expect, 0.0)).norm() < 1e-13,
                "mode {m:?}: {}",
                data[flat]
            );
        }
    }

    #[test]
    fn round_trip_identity() {
        let g = CellGrid::new(3, 4).unwrap();
        let orig: Vec<Complex64> = (0..g.len())
            .map(|i| Complex64::new((i as f64 * 0.37).sin(), (i as f64 * 0.11).cos()))
            .collect();
        let mut data = orig.clone();
        forward(&g, &mut data);
        inverse(&g, &mut data);
        let max: f64 = orig
            .iter()
            .zip(&data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(max < 1e-13);
    }

    #[test]
    fn pad_truncate_round_trip() {
        let g = CellGrid::new(2, 8).unwrap();
        let p = g.padded(3, 2);
        let hat: Vec<Complex64> = (0..g.len())
            .map(|i| Complex64::new(i as f64, -(i as f64) * 0.5))
            .collect();
        let padded = pad_spectrum(&g, &hat, &p);
        let back = truncate_spectrum(&p, &padded, &g);
        assert_eq!(hat, back);
    }
}
