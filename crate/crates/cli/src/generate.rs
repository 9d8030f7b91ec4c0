//! Seeded instance generators.

use std::collections::BTreeMap;

use geosep_core::{PointSite, Rect, SCALE};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::instance::{InstanceFile, Items, Kind, Meta};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Generator {
    /// Items uniform in a `width x height` box.
    Uniform { width: f64, height: f64 },
    /// Items within `spread` (L-infinity) of one of `clusters` uniform centers.
    Clustered {
        clusters: usize,
        spread: f64,
        width: f64,
        height: f64,
    },
    /// Items spaced `step` apart along a row or a column.
    Chain { vertical: bool, step: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenerateParams {
    pub kind: Kind,
    pub n: usize,
    pub seed: u64,
    pub generator: Generator,
    /// Rectangle widths are uniform in this range.
    pub min_width: f64,
    pub max_width: f64,
    /// Random coordinates are multiples of this.
    pub resolution: f64,
}

impl GenerateParams {
    pub fn new(kind: Kind, n: usize, seed: u64, generator: Generator) -> Self {
        Self {
            kind,
            n,
            seed,
            generator,
            min_width: 0.5,
            max_width: 2.0,
            resolution: 0.001,
        }
    }
}

fn scaled(v: f64) -> i64 {
    (v * SCALE as f64).round() as i64
}

fn check(cond: bool, msg: &str) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Params(msg.into()))
    }
}

pub fn generate(p: &GenerateParams) -> Result<InstanceFile, CliError> {
    check(p.n >= 1, "n must be at least 1")?;
    check(p.resolution > 0.0 && scaled(p.resolution) >= 1, "resolution must be at least 0.000001")?;
    check(p.min_width > 0.0 && p.min_width <= p.max_width, "need 0 < min width <= max width")?;
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), Value::from(p.n));
    if p.kind == Kind::Rects {
        params.insert("min_width".to_string(), Value::from(p.min_width));
        params.insert("max_width".to_string(), Value::from(p.max_width));
    }
    let name = match p.generator {
        Generator::Uniform { width, height } => {
            check(width >= 0.0 && height >= 0.0, "box must have nonnegative sides")?;
            params.insert("width".to_string(), Value::from(width));
            params.insert("height".to_string(), Value::from(height));
            "uniform"
        }
        Generator::Clustered {
            clusters,
            spread,
            width,
            height,
        } => {
            check(clusters >= 1, "need at least one cluster")?;
            check(spread >= 0.0 && width >= 0.0 && height >= 0.0, "spread and box must be nonnegative")?;
            params.insert("clusters".to_string(), Value::from(clusters));
            params.insert("spread".to_string(), Value::from(spread));
            params.insert("width".to_string(), Value::from(width));
            params.insert("height".to_string(), Value::from(height));
            "clustered"
        }
        Generator::Chain { vertical, step } => {
            check(step > 0.0, "chain step must be positive")?;
            params.insert("vertical".to_string(), Value::from(vertical));
            params.insert("step".to_string(), Value::from(step));
            "chain"
        }
    };
    if !matches!(p.generator, Generator::Chain { .. }) {
        params.insert("resolution".to_string(), Value::from(p.resolution));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let res = scaled(p.resolution);
    let mut lattice = |lo: i64, hi: i64| -> i64 {
        let ticks = ((hi - lo) / res).max(0);
        lo + rng.random_range(0..=ticks) * res
    };
    let anchors: Vec<(i64, i64)> = match p.generator {
        Generator::Uniform { width, height } => (0..p.n).map(|_| (lattice(0, scaled(width)), lattice(0, scaled(height)))).collect(),
        Generator::Clustered {
            clusters,
            spread,
            width,
            height,
        } => {
            let centers: Vec<(i64, i64)> = (0..clusters)
                .map(|_| (lattice(0, scaled(width)), lattice(0, scaled(height))))
                .collect();
            let s = scaled(spread);
            (0..p.n)
                .map(|i| {
                    let (cx, cy) = centers[i % clusters];
                    (lattice(cx - s, cx + s), lattice(cy - s, cy + s))
                })
                .collect()
        }
        Generator::Chain { vertical, step } => (0..p.n as i64)
            .map(|i| if vertical { (0, i * scaled(step)) } else { (i * scaled(step), 0) })
            .collect(),
    };
    let items = match p.kind {
        Kind::Points => Items::Points(anchors.into_iter().map(|(x, y)| PointSite::new(x, y)).collect()),
        Kind::Rects => {
            let chain = matches!(p.generator, Generator::Chain { .. });
            let rects = anchors
                .into_iter()
                .map(|(x, y)| {
                    let w = if chain { SCALE } else { lattice(scaled(p.min_width), scaled(p.max_width)) };
                    Rect::new(x, x + w.max(1), y).map_err(|e| CliError::Params(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Items::Rects(rects)
        }
    };
    Ok(InstanceFile {
        meta: Meta {
            seed: p.seed,
            generator: name.to_string(),
            params,
        },
        items,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use geosep_core::geometry::{rect_intersection_graph, unit_distance_graph};

    #[test]
    fn deterministic_under_seed() {
        let p = GenerateParams::new(Kind::Rects, 5, 7, Generator::Uniform { width: 3.0, height: 3.0 });
        assert_eq!(generate(&p).unwrap().to_jsonl(), generate(&p).unwrap().to_jsonl());
        let q = GenerateParams { seed: 8, ..p };
        assert_ne!(generate(&p).unwrap().to_jsonl(), generate(&q).unwrap().to_jsonl());
    }

    #[test]
    fn single_point() {
        let p = GenerateParams::new(Kind::Points, 1, 0, Generator::Uniform { width: 1.0, height: 1.0 });
        assert_eq!(generate(&p).unwrap().len(), 1);
    }

    #[test]
    fn chains_are_paths() {
        for kind in [Kind::Rects, Kind::Points] {
            for vertical in [false, true] {
                let p = GenerateParams::new(kind, 9, 0, Generator::Chain { vertical, step: 0.75 });
                let g = match generate(&p).unwrap().items {
                    Items::Rects(r) => rect_intersection_graph(&r),
                    Items::Points(pts) => unit_distance_graph(&pts),
                };
                assert_eq!(g.edge_count(), 8);
                assert!((0..8).all(|i| g.has_edge(i, i + 1)));
            }
        }
    }

    #[test]
    fn clustered_stays_near_centers() {
        let p = GenerateParams::new(
            Kind::Points,
            40,
            1,
            Generator::Clustered {
                clusters: 4,
                spread: 0.2,
                width: 10.0,
                height: 10.0,
            },
        );
        let Items::Points(pts) = generate(&p).unwrap().items else { panic!() };
        for i in 0..40 {
            let (a, b) = (pts[i % 4], pts[i]);
            assert!((a.x - b.x).abs() <= 2 * SCALE / 5 && (a.y - b.y).abs() <= 2 * SCALE / 5);
        }
    }

    #[test]
    fn invalid_params() {
        let mut p = GenerateParams::new(Kind::Rects, 0, 0, Generator::Uniform { width: 1.0, height: 1.0 });
        assert!(generate(&p).is_err());
        p.n = 3;
        p.min_width = 3.0;
        assert!(generate(&p).is_err());
        let p = GenerateParams::new(Kind::Rects, 3, 0, Generator::Chain { vertical: false, step: 0.0 });
        assert!(generate(&p).is_err());
    }
}
