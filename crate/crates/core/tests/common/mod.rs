#![allow(dead_code)]

use geosep_core::{PointSite, Rect, SCALE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coordinates on a 1/1000 lattice so boundary contacts actually occur.
fn lattice(rng: &mut ChaCha8Rng, side: f64) -> i64 {
    let ticks = (side * 1000.0) as i64;
    rng.random_range(0..=ticks) * (SCALE / 1000)
}

pub fn random_rects(seed: u64, n: usize, side: f64) -> Vec<Rect> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let x = lattice(&mut rng, side);
            let w = rng.random_range(SCALE / 10..=2 * SCALE);
            Rect::new(x, x + w, lattice(&mut rng, side)).unwrap()
        })
        .collect()
}

pub fn random_points(seed: u64, n: usize, side: f64) -> Vec<PointSite> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let x = lattice(&mut rng, side);
            PointSite::new(x, lattice(&mut rng, side))
        })
        .collect()
}
