//! Closed-form bounds on `|a2 a4 - a3^2|`.
//!
//! For each class the functional reduces to `T |d1 c1 c3 + d2 c1^2 c2 + d3 c2^2 + d4 c1^4|`
//! over Carathéodory coefficients. Substituting the parameterization of `c2, c3`
//! and bounding termwise leaves a quadratic `T (P t^2 + Q t + R)` in `t = c^2`,
//! which is then maximized on `[0, 4]`.

pub mod statement;
pub mod surface;

use std::fmt;

use serde::Serialize;

use crate::classes::{ClassKind, ClassSpec};

/// Which of the three regions of the quadratic maximization applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    /// `Q <= 0`, `P <= -Q/4`: maximum `R` at `t = 0`.
    #[serde(rename = "caseR")]
    CaseR,
    /// `Q >= 0, P >= -Q/8` or `Q <= 0, P >= -Q/4`: maximum `16P + 4Q + R` at `t = 4`.
    #[serde(rename = "case16P4QR")]
    Case16P4QR,
    /// `Q > 0`, `P <= -Q/8`: interior vertex, `(4PR - Q^2)/(4P)`.
    #[serde(rename = "caseVertex")]
    CaseVertex,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::CaseR, Branch::Case16P4QR, Branch::CaseVertex];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::CaseR => "caseR",
            Self::Case16P4QR => "case16P4QR",
            Self::CaseVertex => "caseVertex",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The reduced quadratic `T (P t^2 + Q t + R)` and the weights `d1..d4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadraticProfile {
    #[serde(rename = "P")]
    pub p: f64,
    #[serde(rename = "Q")]
    pub q: f64,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub d: [f64; 4],
}

impl QuadraticProfile {
    /// `T (P t^2 + Q t + R)`.
    pub fn eval(&self, t: f64) -> f64 {
        self.t * ((self.p * t + self.q) * t + self.r)
    }
}

pub fn profile(spec: &ClassSpec) -> QuadraticProfile {
    let phi = spec.phi();
    let (b1, b2s, b3s) = (phi.b1(), phi.b2(), phi.b3());
    let (b2, b3) = (b2s.abs(), b3s.abs());
    match *spec.kind() {
        ClassKind::Starlike => QuadraticProfile {
            p: 0.25 * (-2.0 * b1.powi(3) + 8.0 * b3 - 6.0 * b2 * b2 / b1 - b2 - b1 / 2.0),
            q: 4.0 * (b2 - b1),
            r: 24.0 * b1,
            t: b1 / 96.0,
            d: [
                8.0 * b1,
                2.0 * (b2s - b1),
                -6.0 * b1,
                -b1.powi(3) / 2.0 + b1 / 2.0 - b2s + 2.0 * b3s - 1.5 * b2s * b2s / b1,
            ],
        },
        ClassKind::Convex => QuadraticProfile {
            p: (-b1.powi(3) + b1 * b2 + 6.0 * b3 - 4.0 * b2 * b2 / b1 - b1 * b1 - 4.0 * b2 - 2.0 * b1)
                / 3.0,
            q: 4.0 / 3.0 * (b1 * b1 + 4.0 * b2 - 2.0 * b1),
            r: 64.0 / 3.0 * b1,
            t: b1 / 768.0,
            d: [
                8.0 * b1,
                2.0 / 3.0 * (b1 * b1 - 4.0 * b1 + 4.0 * b2s),
                -16.0 / 3.0 * b1,
                -4.0 / 3.0 * b2s + 2.0 / 3.0 * b1 - b1.powi(3) / 3.0 - b1 * b1 / 3.0
                    + b1 * b2s / 3.0
                    + 2.0 * b3s
                    - 4.0 / 3.0 * b2s * b2s / b1,
            ],
        },
        ClassKind::RGammaTau { gamma, tau } => {
            let p = spec.p().expect("R class has p");
            let ratio = b2 / b1;
            let signed = b2s / b1;
            let a = (b3s / b1 - p * signed * signed).abs();
            QuadraticProfile {
                p: a - (1.0 - p) * (2.0 * ratio + 1.0),
                q: 4.0 * (2.0 * ratio * (1.0 - p) + 1.0 - 2.0 * p),
                r: 16.0 * p,
                t: tau.norm_sqr() * b1 * b1 / (128.0 * (1.0 + gamma) * (1.0 + 3.0 * gamma)),
                d: [
                    4.0,
                    -4.0 * (1.0 - signed + p * (signed - 1.0)),
                    -4.0 * p,
                    1.0 - 2.0 * signed - p * (signed - 1.0).powi(2) + b3s / b1,
                ],
            }
        }
        ClassKind::GAlpha { alpha } => {
            let p = spec.p().expect("G class has p");
            let s = 1.0 + alpha - p;
            let w = alpha * b1 * b1 - b1 + b2s;
            QuadraticProfile {
                p: b1.powi(3) * alpha * (2.0 * alpha - 1.0 - p * alpha)
                    + alpha * b1 * b2 * (3.0 - 2.0 * p)
                    - b1 * b1 * alpha * (3.0 - 2.0 * p)
                    + (alpha + 1.0) * b3
                    - s * (2.0 * b2 + b1)
                    - p * b2 * b2 / b1,
                q: 4.0
                    * (b1 * b1 * alpha * (3.0 - 2.0 * p)
                        + 2.0 * b2 * s
                        + b1 * (1.0 + alpha - 2.0 * p)),
                r: 16.0 * p * b1,
                t: b1 / (128.0 * (1.0 + alpha) * (1.0 + 2.0 * alpha)),
                d: [
                    4.0 * (1.0 + alpha) * b1,
                    2.0 * (-2.0 * (1.0 + alpha) * b1 + 3.0 * alpha * b1 * b1
                        + 2.0 * (1.0 + alpha) * b2s
                        - 2.0 * p * w),
                    -4.0 * p * b1,
                    -3.0 * alpha * b1 * b1
                        + alpha * (2.0 * alpha - 1.0) * b1.powi(3)
                        + b1 * (1.0 + alpha)
                        + 3.0 * alpha * b1 * b2s
                        + (1.0 + alpha) * (b3s - 2.0 * b2s)
                        - p * w * w / b1,
                ],
            }
        }
    }
}

/// The region of the `(P, Q)` plane, first match in the order listed on [`Branch`].
pub fn region(p: f64, q: f64) -> Branch {
    if q <= 0.0 && p <= -q / 4.0 {
        Branch::CaseR
    } else if (q >= 0.0 && p >= -q / 8.0) || (q <= 0.0 && p >= -q / 4.0) {
        Branch::Case16P4QR
    } else {
        Branch::CaseVertex
    }
}

/// `max_{0 <= t <= 4} (P t^2 + Q t + R)` by region analysis.
pub fn quad_max(p: f64, q: f64, r: f64) -> (f64, Branch) {
    let branch = region(p, q);
    let value = match branch {
        Branch::CaseR => r,
        Branch::Case16P4QR => 16.0 * p + 4.0 * q + r,
        Branch::CaseVertex => {
            debug_assert!(p < 0.0, "vertex region needs P < 0, got {p}");
            (4.0 * p * r - q * q) / (4.0 * p)
        }
    };
    (value, branch)
}

/// The same maximum by enumerating `t = 0`, `t = 4` and the critical point.
pub fn robust_quad_max(p: f64, q: f64, r: f64) -> f64 {
    let f = |t: f64| (p * t + q) * t + r;
    let mut best = f(0.0).max(f(4.0));
    if p != 0.0 {
        let t = -q / (2.0 * p);
        if t > 0.0 && t < 4.0 {
            best = best.max(f(t));
        }
    }
    best
}

/// A bound together with how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub spec: ClassSpec,
    pub bound: f64,
    pub branch: Branch,
    pub profile: QuadraticProfile,
    /// The explicit per-class formula for `branch`.
    pub closed_form_value: f64,
}

/// The bound for `spec`. The value comes from [`robust_quad_max`]; the
/// branch label from [`quad_max`].
pub fn second_hankel_bound(spec: &ClassSpec) -> BoundResult {
    let profile = profile(spec);
    let (_, branch) = quad_max(profile.p, profile.q, profile.r);
    let bound = profile.t * robust_quad_max(profile.p, profile.q, profile.r);
    BoundResult {
        spec: spec.clone(),
        bound,
        branch,
        profile,
        closed_form_value: statement::closed_form(spec, branch),
    }
}
