mod common;

use common::{random_points, random_rects};
use geosep_core::geometry::rect_intersection_graph;
use geosep_core::oracles::{brute_disccover, brute_mis, brute_pierce};
use geosep_core::solvers::{
    disccover_exact, disccover_ptas, mis_exact, mis_ptas, pierce_exact, pierce_ptas, verify_disc_cover,
    verify_piercing,
};
use geosep_core::SolveConfig;

#[test]
fn exact_mis_matches_oracle() {
    let cfg = SolveConfig::default();
    for seed in 0..40 {
        let n = 6 + (seed as usize % 13);
        let rects = random_rects(seed, n, 1.0 + (seed % 4) as f64);
        let opt = brute_mis(&rect_intersection_graph(&rects)).unwrap().size;
        let got = mis_exact(&rects, &cfg).unwrap();
        assert!(got.certified_independent);
        assert_eq!(got.chosen.len(), opt, "seed {seed}");
        let approx = mis_ptas(&rects, &SolveConfig::with_epsilon(0.5)).unwrap();
        assert!(approx.certified_independent);
        assert!(2 * approx.chosen.len() >= opt, "seed {seed}");
    }
}

#[test]
fn exact_pierce_matches_oracle() {
    let cfg = SolveConfig::default();
    for seed in 0..40 {
        let n = 4 + (seed as usize % 11);
        let rects = random_rects(1000 + seed, n, 1.0 + (seed % 4) as f64);
        let opt = brute_pierce(&rects).unwrap().size;
        let got = pierce_exact(&rects, &cfg).unwrap();
        assert!(verify_piercing(&rects, &got.points));
        assert_eq!(got.points.len(), opt, "seed {seed}");
        let approx = pierce_ptas(&rects, &SolveConfig::with_epsilon(0.5)).unwrap();
        assert!(verify_piercing(&rects, &approx.points));
        assert!(2 * approx.points.len() <= 3 * opt, "seed {seed}");
    }
}

#[test]
fn exact_cover_matches_oracle() {
    let cfg = SolveConfig::default();
    for seed in 0..40 {
        let n = 3 + (seed as usize % 8);
        let pts = random_points(2000 + seed, n, 1.0 + (seed % 3) as f64);
        let opt = brute_disccover(&pts).unwrap().size;
        let got = disccover_exact(&pts, &cfg).unwrap();
        assert!(verify_disc_cover(&pts, &got.discs));
        assert_eq!(got.discs.len(), opt, "seed {seed}");
        let approx = disccover_ptas(&pts, &SolveConfig::with_epsilon(0.5)).unwrap();
        assert!(verify_disc_cover(&pts, &approx.discs));
        assert!(2 * approx.discs.len() <= 3 * opt, "seed {seed}");
    }
}
