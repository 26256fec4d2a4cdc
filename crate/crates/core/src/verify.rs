//! Brute-force maximization of `|a2 a4 - a3^2|` over Carathéodory data.
//!
//! Every `p` with positive real part and `p(0) = 1` has
//!
//! ```text
//! 2 c2 = c1^2 + x (4 - c1^2)
//! 4 c3 = c1^3 + 2 (4 - c1^2) c1 x - c1 (4 - c1^2) x^2 + 2 (4 - c1^2)(1 - |x|^2) z
//! ```
//!
//! for some `|x|, |z| <= 1`, and the functional is rotation invariant, so
//! `c1 = c` can be taken in `[0, 2]`. At fixed `(c, x)` the functional is
//! affine in `z` and its modulus peaks on `|z| = 1`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{second_hankel_bound, surface};
use crate::classes::{coefficients_from_c, hankel2, ClassSpec, CoefficientMap};
use crate::error::{Error, Result};

/// Slack for points built from `from_polar`, whose modulus can exceed 1 by
/// an ulp.
const UNIT_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaratheodoryPoint {
    c: f64,
    x: Complex64,
    z: Complex64,
    mu: f64,
}

impl CaratheodoryPoint {
    pub fn new(c: f64, x: Complex64, z: Complex64) -> Result<Self> {
        if !(0.0..=2.0).contains(&c) {
            return Err(Error::OutOfRange {
                name: "c",
                value: c,
                range: "[0, 2]",
            });
        }
        for (name, v) in [("|x|", x.norm()), ("|z|", z.norm())] {
            if v.is_nan() || v > 1.0 + UNIT_SLACK {
                return Err(Error::OutOfRange {
                    name,
                    value: v,
                    range: "[0, 1]",
                });
            }
        }
        Ok(Self {
            c,
            x,
            z,
            mu: x.norm().min(1.0),
        })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn x(&self) -> Complex64 {
        self.x
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// `|x|`.
    pub fn mu(&self) -> f64 {
        self.mu
    }
}

pub fn caratheodory_expand(point: &CaratheodoryPoint) -> (Complex64, Complex64, Complex64) {
    let CaratheodoryPoint { c, x, z, .. } = *point;
    let w = 4.0 - c * c;
    let c2 = (c * c + x * w) / 2.0;
    let c3 = (c.powi(3) + 2.0 * w * c * x - c * w * x * x + 2.0 * w * (1.0 - x.norm_sqr()).max(0.0) * z) / 4.0;
    (Complex64::new(c, 0.0), c2, c3)
}

/// Sample counts for the brute-force search: `n_c` values of `c` on `[0, 2]`,
/// `n_r` rings of radius `0..=1` for `x`, `n_theta` angles for both `x` and `z`.
/// Endpoints `c = 0, 2` and radii `0, 1` are always included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub n_c: usize,
    pub n_r: usize,
    pub n_theta: usize,
}

impl Grid {
    pub const MIN: usize = 8;

    pub fn new(n_c: usize, n_r: usize, n_theta: usize) -> Result<Self> {
        for (name, value) in [("n_c", n_c), ("n_r", n_r), ("n_theta", n_theta)] {
            if value < Self::MIN {
                return Err(Error::GridTooSmall {
                    name,
                    value,
                    min: Self::MIN,
                });
            }
        }
        Ok(Self { n_c, n_r, n_theta })
    }

    /// Halves every spacing. The refined grid contains this one, so the
    /// sup over it can only grow.
    pub fn refined(&self) -> Self {
        Self {
            n_c: 2 * self.n_c - 1,
            n_r: 2 * self.n_r - 1,
            n_theta: 2 * self.n_theta,
        }
    }

    /// Number of points visited by [`empirical_sup`].
    pub fn points(&self) -> usize {
        self.n_c * (1 + (self.n_r - 1) * self.n_theta) * self.n_theta
    }

    fn c(&self, i: usize) -> f64 {
        2.0 * i as f64 / (self.n_c - 1) as f64
    }

    fn radius(&self, j: usize) -> f64 {
        j as f64 / (self.n_r - 1) as f64
    }
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            n_c: 64,
            n_r: 32,
            n_theta: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub empirical_sup: f64,
    pub bound: f64,
    pub argmax: CaratheodoryPoint,
    /// `bound - empirical_sup`.
    pub margin: f64,
    pub grid: Grid,
    pub monotonicity_violations: usize,
}

impl VerificationReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.margin >= -tol && self.monotonicity_violations == 0
    }
}

/// Index of a grid point, ordered so that ties resolve to the first visited.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Best {
    value_sq: f64,
    at: [usize; 4],
}

impl Best {
    fn pick(self, other: Self) -> Self {
        if other.value_sq > self.value_sq
            || (other.value_sq == self.value_sq && other.at < self.at)
        {
            other
        } else {
            self
        }
    }
}

/// Maximum of the functional over `grid`, with the closed-form bound for
/// comparison and a μ-monotonicity check on a 64 x 64 grid.
pub fn empirical_sup(spec: &ClassSpec, grid: Grid) -> Result<VerificationReport> {
    let grid = Grid::new(grid.n_c, grid.n_r, grid.n_theta)?;
    let map = CoefficientMap::new(spec);
    let roots: Vec<Complex64> = (0..grid.n_theta)
        .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / grid.n_theta as f64))
        .collect();

    let best = (0..grid.n_c)
        .into_par_iter()
        .map(|i| slice_max(&map, &grid, &roots, i))
        .reduce_with(Best::pick)
        .expect("grid has at least one slice");

    let [i, j, k, m] = best.at;
    let argmax = CaratheodoryPoint::new(grid.c(i), roots[k] * grid.radius(j), roots[m])?;
    let empirical_sup = best.value_sq.sqrt();
    let bound = second_hankel_bound(spec).bound;
    Ok(VerificationReport {
        empirical_sup,
        bound,
        argmax,
        margin: bound - empirical_sup,
        grid,
        monotonicity_violations: check_mu_monotone(spec, 64, 64)?,
    })
}

/// Best point in the slice `c = grid.c(i)`. With `c` and `x` fixed,
/// `a2 a4 - a3^2 = h0 + h1 z`.
fn slice_max(map: &CoefficientMap, grid: &Grid, roots: &[Complex64], i: usize) -> Best {
    let c = grid.c(i);
    let w = 4.0 - c * c;
    let c1 = Complex64::new(c, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let k5 = map.eval(zero, zero, Complex64::new(1.0, 0.0)).a4;
    let mut best = Best {
        value_sq: -1.0,
        at: [usize::MAX; 4],
    };
    for j in 0..grid.n_r {
        let r = grid.radius(j);
        let angles = if j == 0 { 1 } else { grid.n_theta };
        for (k, root) in roots.iter().enumerate().take(angles) {
            let x = root * r;
            let c2 = (c * c + x * w) / 2.0;
            let fixed = (c.powi(3) + 2.0 * w * c * x - c * w * x * x) / 4.0;
            let slope = w * (1.0 - r * r) / 2.0;
            let at0 = map.eval(c1, c2, fixed);
            let h0 = at0.a2 * at0.a4 - at0.a3 * at0.a3;
            let h1 = at0.a2 * k5 * slope;
            for (m, z) in roots.iter().enumerate() {
                let v = (h0 + h1 * z).norm_sqr();
                if v > best.value_sq {
                    best = Best {
                        value_sq: v,
                        at: [i, j, k, m],
                    };
                }
            }
        }
    }
    best
}

/// Maximum of the functional over explicit points.
pub fn sup_over<'a>(spec: &ClassSpec, points: impl IntoIterator<Item = &'a CaratheodoryPoint>) -> f64 {
    points
        .into_iter()
        .map(|p| {
            let (c1, c2, c3) = caratheodory_expand(p);
            hankel2(&coefficients_from_c(spec, c1, c2, c3))
        })
        .fold(0.0, f64::max)
}

/// Counts strict decreases of the majorant `F(c, μ)` along `μ` on an
/// `n_c x n_mu` grid with `c` strictly inside `(0, 2)`.
pub fn check_mu_monotone(spec: &ClassSpec, n_c: usize, n_mu: usize) -> Result<usize> {
    for (name, value) in [("n_c", n_c), ("n_mu", n_mu)] {
        if value < 2 {
            return Err(Error::GridTooSmall { name, value, min: 2 });
        }
    }
    let mut violations = 0;
    for i in 1..=n_c {
        let c = 2.0 * i as f64 / (n_c + 1) as f64;
        let mut last = surface::f_surface(spec, c, 0.0);
        for j in 1..n_mu {
            let v = surface::f_surface(spec, c, j as f64 / (n_mu - 1) as f64);
            if v < last - 1e-12 * last.abs().max(v.abs()) {
                violations += 1;
            }
            last = v;
        }
    }
    Ok(violations)
}

/// Largest `|c2|` and `|c3|` over `samples` random points drawn uniformly
/// from `[0, 2] x disk x disk`.
pub fn check_caratheodory_bounds(samples: usize, seed: u64) -> Result<(f64, f64)> {
    if samples == 0 {
        return Err(Error::OutOfRange {
            name: "samples",
            value: 0.0,
            range: ">= 1",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let disk = |rng: &mut ChaCha8Rng| {
        Complex64::from_polar(rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))
    };
    let mut max = (0.0f64, 0.0f64);
    for _ in 0..samples {
        let c = rng.gen_range(0.0..=2.0);
        let x = disk(&mut rng);
        let z = disk(&mut rng);
        let (_, c2, c3) = caratheodory_expand(&CaratheodoryPoint::new(c, x, z)?);
        max = (max.0.max(c2.norm()), max.1.max(c3.norm()));
    }
    Ok(max)
}
