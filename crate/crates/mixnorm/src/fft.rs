//! Thin wrapper over rustfft with a process-wide plan cache.
//!
//! Conventions: `inverse` computes values[j] = sum_k buf[k] e^{+2 pi i jk/M}
//! (unnormalized), which is exactly the circle-sampling direction; `forward`
//! is its adjoint with e^{-2 pi i jk/M}. Callers divide by M where needed.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rustfft::{Fft, FftPlanner};

use crate::C64;

enum Dir {
    Forward,
    Inverse,
}

fn plan(len: usize, dir: Dir) -> Arc<dyn Fft<f64>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, bool), Arc<dyn Fft<f64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let fwd = matches!(dir, Dir::Forward);
    let mut guard = cache.lock().unwrap();
    guard
        .entry((len, fwd))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if fwd {
                planner.plan_fft_forward(len)
            } else {
                planner.plan_fft_inverse(len)
            }
        })
        .clone()
}

/// In-place unnormalized DFT with e^{-2 pi i jk/M}.
pub fn forward(buf: &mut [C64]) {
    plan(buf.len(), Dir::Forward).process(buf);
}

/// In-place unnormalized DFT with e^{+2 pi i jk/M}.
pub fn inverse(buf: &mut [C64]) {
    plan(buf.len(), Dir::Inverse).process(buf);
}

/// Smallest power of two >= n.
pub fn next_pow2(n: usize) -> usize {
    n.next_power_of_two()
}
