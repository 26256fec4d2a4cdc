//! Each bound written directly in terms of `B1, |B2|, |B3|`, with the
//! hypotheses that select between its three cases.
//!
//! These expressions are independent of the `(P, Q, R)` pipeline and are used
//! to cross-check it. Where the printed form of an expression disagrees with
//! its own derivation, [`closed_form`] and [`hypotheses`] carry the corrected
//! version and the `printed_*` functions keep the original text.

use crate::bounds::Branch;
use crate::classes::{ClassKind, ClassSpec};

/// Sign tests selecting a case.
///
/// Normalized so that for every class: case 1 holds iff `u <= 0` and
/// `x >= 0`; case 2 iff `u >= 0, y >= 0` or `u <= 0, x <= 0`; case 3 iff
/// `u > 0` and `y <= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hypotheses {
    pub u: f64,
    pub x: f64,
    pub y: f64,
}

impl Hypotheses {
    pub fn cases(&self) -> [bool; 3] {
        let Self { u, x, y } = *self;
        [
            u <= 0.0 && x >= 0.0,
            (u >= 0.0 && y >= 0.0) || (u <= 0.0 && x <= 0.0),
            u > 0.0 && y <= 0.0,
        ]
    }

    /// First case that holds.
    pub fn branch(&self) -> Branch {
        let c = self.cases();
        Branch::ALL
            .into_iter()
            .zip(c)
            .find_map(|(b, holds)| holds.then_some(b))
            .expect("the three cases cover the plane")
    }
}

struct Abs {
    b1: f64,
    b2: f64,
    b3: f64,
}

fn abs_coefficients(spec: &ClassSpec) -> Abs {
    let phi = spec.phi();
    Abs {
        b1: phi.b1(),
        b2: phi.b2().abs(),
        b3: phi.b3().abs(),
    }
}

/// `|B1 B3 - p B2^2|` with signed `B2, B3`.
fn r_class_a(spec: &ClassSpec, p: f64) -> f64 {
    let phi = spec.phi();
    (phi.b1() * phi.b3() - p * phi.b2() * phi.b2()).abs()
}

/// The G-class quantity `B1^4 α(2α-1-pα) + α B1^2 |B2| (3-2p) + (α+1) B1 |B3|`.
fn g_class_e(b: &Abs, alpha: f64, p: f64) -> f64 {
    b.b1.powi(4) * alpha * (2.0 * alpha - 1.0 - p * alpha)
        + alpha * b.b1 * b.b1 * b.b2 * (3.0 - 2.0 * p)
        + (alpha + 1.0) * b.b1 * b.b3
}

pub fn hypotheses(spec: &ClassSpec) -> Hypotheses {
    let b = abs_coefficients(spec);
    let Abs { b1, b2, b3 } = b;
    match *spec.kind() {
        ClassKind::Starlike => Hypotheses {
            u: b2 - b1,
            x: 4.0 * b1.powi(4) - 16.0 * b1 * b3 + 12.0 * b2 * b2 - 6.0 * b1 * b2 + 9.0 * b1 * b1,
            y: -(4.0 * b1.powi(4) - 16.0 * b1 * b3 + 12.0 * b2 * b2 - 2.0 * b1 * b2 + 5.0 * b1 * b1),
        },
        ClassKind::Convex => Hypotheses {
            u: b1 * b1 + 4.0 * b2 - 2.0 * b1,
            x: b1.powi(4) - b1 * b1 * b2 - 6.0 * b1 * b3 + 4.0 * b2 * b2 + 4.0 * b1 * b1,
            y: -(2.0 * b1.powi(4) - 2.0 * b1 * b1 * b2 - 12.0 * b1 * b3
                + 8.0 * b2 * b2
                + 4.0 * b1 * b2
                + b1.powi(3)
                + 6.0 * b1 * b1),
        },
        ClassKind::RGammaTau { .. } => {
            let p = spec.p().expect("R class has p");
            let a = r_class_a(spec, p);
            Hypotheses {
                u: 2.0 * b2 * (1.0 - p) + b1 * (1.0 - 2.0 * p),
                x: p * b1 * b1 - a,
                y: 2.0 * a - 2.0 * (1.0 - p) * b1 * b2 - b1 * b1,
            }
        }
        ClassKind::GAlpha { alpha } => {
            let p = spec.p().expect("G class has p");
            let e = g_class_e(&b, alpha, p);
            let s = 1.0 + alpha - p;
            Hypotheses {
                u: b1 * b1 * alpha * (3.0 - 2.0 * p) + 2.0 * b2 * s + b1 * (1.0 + alpha - 2.0 * p),
                x: p * (b1 * b1 + b2 * b2) - e,
                y: 2.0 * e - b1.powi(3) * alpha * (3.0 - 2.0 * p)
                    - 2.0 * s * b1 * b2
                    - (1.0 + alpha) * b1 * b1
                    - 2.0 * p * b2 * b2,
            }
        }
    }
}

/// The hypotheses as printed. Only the R class differs from [`hypotheses`]:
/// its second case reads `2A - 2(1-p)B1|B2| - B1 >= 0` and `A - B1^2 >= 0`
/// with `A = |B1 B3 - p B2^2|`.
pub fn printed_hypotheses(spec: &ClassSpec) -> [bool; 3] {
    let h = hypotheses(spec);
    let mut cases = h.cases();
    if let ClassKind::RGammaTau { .. } = spec.kind() {
        let p = spec.p().expect("R class has p");
        let Abs { b1, b2, .. } = abs_coefficients(spec);
        let a = r_class_a(spec, p);
        cases[1] = (h.u >= 0.0 && 2.0 * a - 2.0 * (1.0 - p) * b1 * b2 - b1 >= 0.0)
            || (h.u <= 0.0 && a - b1 * b1 >= 0.0);
    }
    cases
}

/// The explicit per-class formula for the bound on `branch`.
pub fn closed_form(spec: &ClassSpec, branch: Branch) -> f64 {
    closed_form_impl(spec, branch, false)
}

/// Same as [`closed_form`], with the printed text of the R-class case 3 and
/// G-class cases 2 and 3.
pub fn printed_closed_form(spec: &ClassSpec, branch: Branch) -> f64 {
    closed_form_impl(spec, branch, true)
}

fn closed_form_impl(spec: &ClassSpec, branch: Branch, printed: bool) -> f64 {
    let b = abs_coefficients(spec);
    let Abs { b1, b2, b3 } = b;
    match *spec.kind() {
        ClassKind::Starlike => match branch {
            Branch::CaseR => b1 * b1 / 4.0,
            Branch::Case16P4QR => {
                (-4.0 * b1.powi(4) + 16.0 * b1 * b3 - 12.0 * b2 * b2 + 6.0 * b1 * b2 + 3.0 * b1 * b1)
                    / 48.0
            }
            Branch::CaseVertex => {
                b1 * b1 / 12.0
                    * (12.0 * b1.powi(4) - 48.0 * b1 * b3 + 40.0 * b2 * b2 - 2.0 * b1 * b2
                        + 7.0 * b1 * b1)
                    / (4.0 * b1.powi(4) - 16.0 * b1 * b3 + 12.0 * b2 * b2 + 2.0 * b1 * b2 + b1 * b1)
            }
        },
        ClassKind::Convex => match branch {
            Branch::CaseR => b1 * b1 / 36.0,
            Branch::Case16P4QR => {
                (-b1.powi(4) + b1 * b1 * b2 + 6.0 * b1 * b3 - 4.0 * b2 * b2) / 144.0
            }
            Branch::CaseVertex => {
                b1 * b1 / 576.0
                    * (17.0 * b1.powi(4) - 8.0 * b1 * b1 * b2 - 96.0 * b1 * b3
                        + 80.0 * b2 * b2
                        + 12.0 * b1.powi(3)
                        + 48.0 * b1 * b2
                        + 36.0 * b1 * b1)
                    / (b1.powi(4) - b1 * b1 * b2 - 6.0 * b1 * b3
                        + 4.0 * b2 * b2
                        + b1.powi(3)
                        + 4.0 * b1 * b2
                        + 2.0 * b1 * b1)
            }
        },
        ClassKind::RGammaTau { gamma, tau } => {
            let p = spec.p().expect("R class has p");
            let a = r_class_a(spec, p);
            let tau2 = tau.norm_sqr();
            let k = (1.0 + gamma) * (1.0 + 3.0 * gamma);
            match branch {
                Branch::CaseR => tau2 * b1 * b1 / (9.0 * (1.0 + 2.0 * gamma).powi(2)),
                Branch::Case16P4QR => tau2 * a / (8.0 * k),
                Branch::CaseVertex => {
                    let inner = if printed { b2 * (3.0 - 2.0 * p) + b1 } else { b2 + p * b1 };
                    tau2 * b1 * b1 / (32.0 * k)
                        * (4.0 * p * a
                            - 4.0 * (1.0 - p) * b1 * inner
                            - 4.0 * b2 * b2 * (1.0 - p).powi(2)
                            - b1 * b1 * (1.0 - 2.0 * p).powi(2))
                        / (a - (1.0 - p) * b1 * (2.0 * b2 + b1))
                }
            }
        }
        ClassKind::GAlpha { alpha } => {
            let p = spec.p().expect("G class has p");
            let e = g_class_e(&b, alpha, p);
            let k = (1.0 + alpha) * (1.0 + 2.0 * alpha);
            let s = 1.0 + alpha - p;
            match branch {
                Branch::CaseR => b1 * b1 / (9.0 * (1.0 + alpha).powi(2)),
                Branch::Case16P4QR => {
                    let tail = if printed { p * (b2 * b2 - b1 * b1) } else { -p * b2 * b2 };
                    (e + tail) / (8.0 * k)
                }
                Branch::CaseVertex => {
                    let quarter_q =
                        b1 * b1 * alpha * (3.0 - 2.0 * p) + 2.0 * b2 * s + b1 * (1.0 + alpha - 2.0 * p);
                    let last = if printed { 1.0 } else { b1 };
                    let den = e - b1.powi(3) * alpha * (3.0 - 2.0 * p)
                        - s * b1 * (2.0 * b2 + last)
                        - p * b2 * b2;
                    b1 * b1 / (32.0 * k) * (4.0 * p - quarter_q * quarter_q / den)
                }
            }
        }
    }
}
