//! The four subordination classes and extraction of `a2, a3, a4`.
//!
//! Every class is defined by an operator `L[f]` subordinate to `phi`:
//!
//! | class      | `L[f]`                                   |
//! |------------|------------------------------------------|
//! | starlike   | `z f'/f`                                 |
//! | convex     | `1 + z f''/f'`                           |
//! | R(γ, τ)    | `1 + (f' + γ z f'' - 1)/τ`               |
//! | G(α)       | `(1-α) f' + α (1 + z f''/f')`            |
//!
//! Writing `phi(w(z)) = 1 + ψ1 z + ψ2 z^2 + ψ3 z^3 + ...`, the coefficient of
//! `z^k` in `L[f]` depends only on `a2..a_{k+1}` and is affine in `a_{k+1}`.
//! The relations are triangular, so we recover the coefficients by evaluating
//! the operator on trial series and back-substituting one coefficient at a time.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{TruncatedSeries, WORKING_ORDER};
use crate::targets::PhiCoefficients;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassKind {
    /// Ma-Minda starlike, `z f'/f ≺ phi`.
    Starlike,
    /// Ma-Minda convex, `1 + z f''/f' ≺ phi`.
    Convex,
    /// `1 + (f' + γ z f'' - 1)/τ ≺ phi` with `0 <= γ <= 1`, `τ != 0`.
    RGammaTau { gamma: f64, tau: Complex64 },
    /// `(1-α) f' + α (1 + z f''/f') ≺ phi` with `0 <= α <= 1`.
    GAlpha { alpha: f64 },
}

impl ClassKind {
    pub const NAMES: &'static [&'static str] = &["starlike", "convex", "rgt", "galpha"];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Starlike => "starlike",
            Self::Convex => "convex",
            Self::RGammaTau { .. } => "rgt",
            Self::GAlpha { .. } => "galpha",
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Self::RGammaTau { gamma, tau } => {
                unit_interval("gamma", gamma)?;
                if !(tau.re.is_finite() && tau.im.is_finite()) {
                    return Err(Error::NonFinite { name: "tau" });
                }
                if tau == ZERO {
                    return Err(Error::ZeroTau);
                }
                Ok(())
            }
            Self::GAlpha { alpha } => unit_interval("alpha", alpha),
            _ => Ok(()),
        }
    }

    /// `L[f]` for `f` stored through order `WORKING_ORDER + 1`; the result has
    /// order `WORKING_ORDER`.
    fn apply(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let fp = f.derivative();
        let z_fpp = fp.derivative().shift_up();
        let one = TruncatedSeries::one(fp.order());
        let convex = || -> Result<TruncatedSeries> { one.add(&z_fpp.div(&fp)?) };
        match *self {
            Self::Starlike => fp.div(&f.shift_down()?),
            Self::Convex => convex(),
            Self::RGammaTau { gamma, tau } => {
                let inner = fp
                    .add(&z_fpp.scale(Complex64::new(gamma, 0.0)))?
                    .add_constant(-ONE);
                one.add(&inner.scale(tau.inv()))
            }
            Self::GAlpha { alpha } => fp
                .scale(Complex64::new(1.0 - alpha, 0.0))
                .add(&convex()?.scale(Complex64::new(alpha, 0.0))),
        }
    }
}

fn unit_interval(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            range: "[0, 1]",
        })
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RGammaTau { gamma, tau } => {
                write!(f, "rgt(gamma={gamma}, tau={}{:+}i)", tau.re, tau.im)
            }
            Self::GAlpha { alpha } => write!(f, "galpha(alpha={alpha})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A class together with its target function.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassSpec {
    kind: ClassKind,
    phi: PhiCoefficients,
}

impl ClassSpec {
    pub fn new(kind: ClassKind, phi: PhiCoefficients) -> Result<Self> {
        kind.validate()?;
        Ok(Self { kind, phi })
    }

    pub fn starlike(phi: PhiCoefficients) -> Self {
        Self {
            kind: ClassKind::Starlike,
            phi,
        }
    }

    pub fn convex(phi: PhiCoefficients) -> Self {
        Self {
            kind: ClassKind::Convex,
            phi,
        }
    }

    pub fn r_gamma_tau(gamma: f64, tau: Complex64, phi: PhiCoefficients) -> Result<Self> {
        Self::new(ClassKind::RGammaTau { gamma, tau }, phi)
    }

    pub fn g_alpha(alpha: f64, phi: PhiCoefficients) -> Result<Self> {
        Self::new(ClassKind::GAlpha { alpha }, phi)
    }

    pub fn kind(&self) -> &ClassKind {
        &self.kind
    }

    pub fn phi(&self) -> &PhiCoefficients {
        &self.phi
    }

    /// Same class with a different target.
    pub fn with_phi(&self, phi: PhiCoefficients) -> Self {
        Self {
            kind: self.kind,
            phi,
        }
    }

    /// The constant `p` in the R and G bounds; `None` for the starlike and convex classes.
    ///
    /// R(γ, τ): `p = (8/9)(1+γ)(1+3γ)/(1+2γ)^2`, in `[64/81, 8/9]`.
    /// G(α): `p = (8/9)(1+2α)/(1+α)`, in `[8/9, 4/3]`.
    pub fn p(&self) -> Option<f64> {
        match self.kind {
            ClassKind::RGammaTau { gamma, .. } => Some(
                8.0 / 9.0 * (1.0 + gamma) * (1.0 + 3.0 * gamma) / ((1.0 + 2.0 * gamma).powi(2)),
            ),
            ClassKind::GAlpha { alpha } => Some(8.0 / 9.0 * (1.0 + 2.0 * alpha) / (1.0 + alpha)),
            _ => None,
        }
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    /// Parses a bare class name; R and G parameters default to
    /// `γ = 0, τ = 1` and `α = 0`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "starlike" => Ok(Self::Starlike),
            "convex" => Ok(Self::Convex),
            "rgt" => Ok(Self::RGammaTau {
                gamma: 0.0,
                tau: ONE,
            }),
            "galpha" => Ok(Self::GAlpha { alpha: 0.0 }),
            _ => Err(Error::Config(format!(
                "unknown class `{s}`, expected one of {}",
                Self::NAMES.join(", ")
            ))),
        }
    }
}

/// The coefficients `a2, a3, a4` of `f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientTriple {
    pub a2: Complex64,
    pub a3: Complex64,
    pub a4: Complex64,
}

impl CoefficientTriple {
    pub const ZERO: Self = Self {
        a2: ZERO,
        a3: ZERO,
        a4: ZERO,
    };

    pub fn new(a2: Complex64, a3: Complex64, a4: Complex64) -> Self {
        Self { a2, a3, a4 }
    }

    pub fn real(a2: f64, a3: f64, a4: f64) -> Self {
        Self::new(a2.into(), a3.into(), a4.into())
    }

    /// Coefficients of the rotation `e^{-iθ} f(e^{iθ} z)`.
    pub fn rotate(&self, theta: f64) -> Self {
        let r = |k: f64| Complex64::from_polar(1.0, k * theta);
        Self {
            a2: self.a2 * r(1.0),
            a3: self.a3 * r(2.0),
            a4: self.a4 * r(3.0),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            self.a2 - other.a2,
            self.a3 - other.a3,
            self.a4 - other.a4,
        ]
        .iter()
        .map(|d| d.norm())
        .fold(0.0, f64::max)
    }

    fn series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_complex(&[ZERO, ONE, self.a2, self.a3, self.a4], order)
    }

    fn set(&mut self, k: usize, v: Complex64) {
        match k {
            0 => self.a2 = v,
            1 => self.a3 = v,
            _ => self.a4 = v,
        }
    }
}

/// `phi(w(z))` through `z^3` where `w = (p1 - 1)/(p1 + 1)` and
/// `p1 = 1 + c1 z + c2 z^2 + c3 z^3 + ...`.
fn subordinate_coefficients(
    phi: &PhiCoefficients,
    c1: Complex64,
    c2: Complex64,
    c3: Complex64,
) -> Result<[Complex64; 3]> {
    let n = WORKING_ORDER;
    let p1 = TruncatedSeries::from_complex(&[ONE, c1, c2, c3], n);
    let w = p1.add_constant(-ONE).div(&p1.add_constant(ONE))?;
    let psi = TruncatedSeries::compose(&phi.series(n), &w)?;
    let c = psi.coeffs();
    Ok([c[1], c[2], c[3]])
}

/// Solves `L[f]_k = ψ_k`, `k = 1, 2, 3`, by triangular back-substitution.
fn solve_triangular(kind: &ClassKind, psi: &[Complex64; 3]) -> Result<CoefficientTriple> {
    let order = WORKING_ORDER + 1;
    let mut t = CoefficientTriple::ZERO;
    for (k, &target) in psi.iter().enumerate() {
        t.set(k, ZERO);
        let at_zero = kind.apply(&t.series(order))?.coeffs()[k + 1];
        t.set(k, ONE);
        let at_one = kind.apply(&t.series(order))?.coeffs()[k + 1];
        t.set(k, (target - at_zero) / (at_one - at_zero));
    }
    Ok(t)
}

/// Coefficients of the class member whose Carathéodory function has leading
/// coefficients `c1, c2, c3`.
pub fn coefficients_from_c(
    spec: &ClassSpec,
    c1: Complex64,
    c2: Complex64,
    c3: Complex64,
) -> CoefficientTriple {
    // Both steps only fail on malformed series, which cannot happen here: the
    // divisor p1 + 1 has constant term 2 and w vanishes at the origin.
    let psi = subordinate_coefficients(&spec.phi, c1, c2, c3).expect("well-formed series");
    solve_triangular(&spec.kind, &psi).expect("well-formed series")
}

/// Coefficients of the class member with Schwarz function `w`.
pub fn coefficients_from_schwarz(spec: &ClassSpec, w: &TruncatedSeries) -> Result<CoefficientTriple> {
    if w.coeff(0) != Some(ZERO) {
        return Err(Error::NonzeroInnerConstant);
    }
    if w.order() < 3 {
        return Err(Error::OrderTooLow {
            order: w.order(),
            min: 3,
        });
    }
    let w = w.with_order(3);
    let one = TruncatedSeries::one(3);
    let p1 = one.add(&w)?.div(&one.sub(&w)?)?;
    let c = p1.coeffs();
    Ok(coefficients_from_c(spec, c[1], c[2], c[3]))
}

/// The polynomial map `(c1, c2, c3) -> (a2, a3, a4)` of a fixed class,
/// compiled once so it can be evaluated millions of times.
///
/// By the triangular structure, `a2 = k0 c1`, `a3 = k1 c1^2 + k2 c2` and
/// `a4 = k3 c1^3 + k4 c1 c2 + k5 c3`; the `k` are read off
/// [`coefficients_from_c`] at basis points.
#[derive(Debug, Clone, Copy)]
pub struct CoefficientMap {
    k: [Complex64; 6],
}

impl CoefficientMap {
    pub fn new(spec: &ClassSpec) -> Self {
        let at = |c1: f64, c2: f64, c3: f64| {
            coefficients_from_c(spec, c1.into(), c2.into(), c3.into())
        };
        let e1 = at(1.0, 0.0, 0.0);
        let e2 = at(0.0, 1.0, 0.0);
        let e3 = at(0.0, 0.0, 1.0);
        let e12 = at(1.0, 1.0, 0.0);
        Self {
            k: [e1.a2, e1.a3, e2.a3, e1.a4, e12.a4 - e1.a4 - e2.a4, e3.a4],
        }
    }

    #[inline]
    pub fn eval(&self, c1: Complex64, c2: Complex64, c3: Complex64) -> CoefficientTriple {
        let k = &self.k;
        CoefficientTriple {
            a2: k[0] * c1,
            a3: k[1] * c1 * c1 + k[2] * c2,
            a4: (k[3] * c1 * c1 + k[4] * c2) * c1 + k[5] * c3,
        }
    }
}

/// `|a2 a4 - a3^2|`.
pub fn hankel2(t: &CoefficientTriple) -> f64 {
    (t.a2 * t.a4 - t.a3 * t.a3).norm()
}

/// Determinant of the `q x q` Hankel matrix `[a_{n+i+j}]`, where
/// `coeffs[0]` is `a1 = 1`.
pub fn hankel_generic(coeffs: &[Complex64], q: usize, n: usize) -> Result<Complex64> {
    if q == 0 || n == 0 {
        return Err(Error::OutOfRange {
            name: if q == 0 { "q" } else { "n" },
            value: 0.0,
            range: ">= 1",
        });
    }
    if coeffs.first() != Some(&ONE) {
        return Err(Error::NotNormalized);
    }
    let needed = n + 2 * q - 2;
    if coeffs.len() < needed {
        return Err(Error::InsufficientCoefficients {
            q,
            n,
            needed,
            got: coeffs.len(),
        });
    }
    let mut m: Vec<Vec<Complex64>> = (0..q)
        .map(|i| (0..q).map(|j| coeffs[n + i + j - 1]).collect())
        .collect();
    Ok(determinant(&mut m))
}

/// Gaussian elimination with partial pivoting.
fn determinant(m: &mut [Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    let mut det = ONE;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))
            .unwrap();
        if m[pivot][col] == ZERO {
            return ZERO;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        let (top, below) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in below {
            let factor = row[col] / pivot_row[col];
            for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *v -= factor * p;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::targets::Preset;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn phi(b1: f64, b2: f64, b3: f64) -> PhiCoefficients {
        PhiCoefficients::custom(b1, b2, b3, "t").unwrap()
    }

    fn halfplane() -> PhiCoefficients {
        Preset::HalfPlane.coefficients().unwrap()
    }

    fn all_kinds() -> Vec<ClassKind> {
        vec![
            ClassKind::Starlike,
            ClassKind::Convex,
            ClassKind::RGammaTau {
                gamma: 0.4,
                tau: Complex64::new(0.5, -1.5),
            },
            ClassKind::GAlpha { alpha: 0.3 },
        ]
    }

    /// Closed forms for a2, a3, a4 as printed in the proofs (S, C, R) and as
    /// derived symbolically for G; written out independently of the solver.
    fn printed_coefficients(spec: &ClassSpec, c1: Complex64, c2: Complex64, c3: Complex64) -> CoefficientTriple {
        let (b1, b2, b3) = (spec.phi.b1(), spec.phi.b2(), spec.phi.b3());
        let shared_a4 = (-4.0 * b2 + 2.0 * b1 + b1.powi(3) - 3.0 * b1 * b1 + 3.0 * b1 * b2 + 2.0 * b3)
            * c1.powi(3)
            + 2.0 * (3.0 * b1 * b1 - 4.0 * b1 + 4.0 * b2) * c1 * c2
            + 8.0 * b1 * c3;
        let shared_a3 = (b1 * b1 - b1 + b2) * c1 * c1 + 2.0 * b1 * c2;
        match spec.kind {
            ClassKind::Starlike => CoefficientTriple::new(b1 * c1 / 2.0, shared_a3 / 8.0, shared_a4 / 48.0),
            ClassKind::Convex => CoefficientTriple::new(b1 * c1 / 4.0, shared_a3 / 24.0, shared_a4 / 192.0),
            ClassKind::RGammaTau { gamma: g, tau } => CoefficientTriple::new(
                tau * b1 * c1 / (4.0 * (1.0 + g)),
                tau * b1 / (12.0 * (1.0 + 2.0 * g)) * (2.0 * c2 + c1 * c1 * (b2 / b1 - 1.0)),
                tau / (32.0 * (1.0 + 3.0 * g))
                    * (b1 * (4.0 * c3 - 4.0 * c1 * c2 + c1.powi(3))
                        + 2.0 * b2 * c1 * (2.0 * c2 - c1 * c1)
                        + b3 * c1.powi(3)),
            ),
            ClassKind::GAlpha { alpha: a } => {
                let a3 = (b1 * b1 * a * c1 * c1 - b1 * c1 * c1 + 2.0 * b1 * c2 + b2 * c1 * c1) / (12.0 * (a + 1.0));
                let c13 = c1.powi(3);
                let a4 = (2.0 * b1.powi(3) * a * a * c13 - b1.powi(3) * a * c13 - 3.0 * b1 * b1 * a * c13
                    + 6.0 * b1 * b1 * a * c1 * c2
                    + 3.0 * b1 * b2 * a * c13
                    + b1 * a * c13
                    - 4.0 * b1 * a * c1 * c2
                    + 4.0 * b1 * a * c3
                    + b1 * c13
                    - 4.0 * b1 * c1 * c2
                    + 4.0 * b1 * c3
                    - 2.0 * b2 * a * c13
                    + 4.0 * b2 * a * c1 * c2
                    - 2.0 * b2 * c13
                    + 4.0 * b2 * c1 * c2
                    + b3 * a * c13
                    + b3 * c13)
                    / (32.0 * (a + 1.0) * (2.0 * a + 1.0));
                CoefficientTriple::new(b1 * c1 / 4.0, a3, a4)
            }
        }
    }

    fn random_c(rng: &mut ChaCha8Rng) -> [Complex64; 3] {
        let mut z = || Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        [z(), z(), z()]
    }

    #[test]
    fn koebe_is_starlike_extremal() {
        let spec = ClassSpec::starlike(halfplane());
        let t = coefficients_from_c(&spec, c(2.0), c(2.0), c(2.0));
        assert!(t.max_abs_diff(&CoefficientTriple::real(2.0, 3.0, 4.0)) < 1e-14);
        assert!((hankel2(&t) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn convex_halfplane_extremal() {
        let spec = ClassSpec::convex(halfplane());
        let t = coefficients_from_c(&spec, c(2.0), c(2.0), c(2.0));
        assert!(t.max_abs_diff(&CoefficientTriple::real(1.0, 1.0, 1.0)) < 1e-14);
    }

    #[test]
    fn zero_carathéodory_data_gives_identity() {
        for kind in all_kinds() {
            let spec = ClassSpec::new(kind, phi(0.7, -1.2, 2.4)).unwrap();
            let t = coefficients_from_c(&spec, c(0.0), c(0.0), c(0.0));
            assert_eq!(t.max_abs_diff(&CoefficientTriple::ZERO), 0.0, "{kind}");
        }
    }

    #[test]
    fn solver_matches_printed_closed_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for kind in all_kinds() {
            for _ in 0..200 {
                let spec = ClassSpec::new(
                    kind,
                    phi(rng.gen_range(0.05..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
                )
                .unwrap();
                let [c1, c2, c3] = random_c(&mut rng);
                let got = coefficients_from_c(&spec, c1, c2, c3);
                let want = printed_coefficients(&spec, c1, c2, c3);
                assert!(got.max_abs_diff(&want) < 1e-11, "{kind}: {got:?} vs {want:?}");
            }
        }
    }

    #[test]
    fn g_alpha_matching_relations() {
        // ψ1 = 2a2, ψ2 = 3(1+α)a3 - 4αa2², ψ3 = 4(1+2α)a4 - 18αa2a3 + 8αa2³,
        // with ψ taken from the direct expansion of phi(w) in c1, c2, c3.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = rng.gen_range(0.0..=1.0);
            let (b1, b2, b3) = (rng.gen_range(0.05..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let spec = ClassSpec::g_alpha(a, phi(b1, b2, b3)).unwrap();
            let [c1, c2, c3] = random_c(&mut rng);
            let (w1, w2, w3) = (
                c1 / 2.0,
                c2 / 2.0 - c1 * c1 / 4.0,
                c3 / 2.0 - c1 * c2 / 2.0 + c1.powi(3) / 8.0,
            );
            let psi = [
                b1 * w1,
                b1 * w2 + b2 * w1 * w1,
                b1 * w3 + 2.0 * b2 * w1 * w2 + b3 * w1.powi(3),
            ];
            let t = coefficients_from_c(&spec, c1, c2, c3);
            let lhs = [
                2.0 * t.a2,
                3.0 * (1.0 + a) * t.a3 - 4.0 * a * t.a2 * t.a2,
                4.0 * (1.0 + 2.0 * a) * t.a4 - 18.0 * a * t.a2 * t.a3 + 8.0 * a * t.a2.powi(3),
            ];
            for (l, p) in lhs.iter().zip(&psi) {
                assert!((l - p).norm() < 1e-11);
            }
        }
    }

    #[test]
    fn schwarz_examples() {
        let n = 5;
        let z = TruncatedSeries::variable(n);
        let t = coefficients_from_schwarz(&ClassSpec::starlike(halfplane()), &z).unwrap();
        assert!(t.max_abs_diff(&CoefficientTriple::real(2.0, 3.0, 4.0)) < 1e-14);

        let t = coefficients_from_schwarz(&ClassSpec::convex(halfplane()), &TruncatedSeries::zero(n)).unwrap();
        assert_eq!(t, CoefficientTriple::ZERO);

        // z f'/f = sqrt(1 + z^2) = 1 + z^2/2 - ..., so a2 = 0, 2 a3 = 1/2, a4 = 0.
        let lem = ClassSpec::starlike(Preset::Lemniscate.coefficients().unwrap());
        let z2 = TruncatedSeries::from_real(&[0.0, 0.0, 1.0], n);
        let t = coefficients_from_schwarz(&lem, &z2).unwrap();
        assert!(t.max_abs_diff(&CoefficientTriple::real(0.0, 0.25, 0.0)) < 1e-15);
        assert!((hankel2(&t) - 1.0 / 16.0).abs() < 1e-15);
    }

    #[test]
    fn schwarz_rejects_bad_input() {
        let spec = ClassSpec::starlike(halfplane());
        assert!(matches!(
            coefficients_from_schwarz(&spec, &TruncatedSeries::from_real(&[0.1, 1.0], 4)),
            Err(Error::NonzeroInnerConstant)
        ));
        assert!(matches!(
            coefficients_from_schwarz(&spec, &TruncatedSeries::variable(2)),
            Err(Error::OrderTooLow { .. })
        ));
    }

    #[test]
    fn schwarz_agrees_with_caratheodory_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for kind in all_kinds() {
            for _ in 0..100 {
                let spec = ClassSpec::new(kind, phi(rng.gen_range(0.05..3.0), rng.gen_range(-3.0..3.0), 1.0)).unwrap();
                // sum |w_k| <= 1 keeps w a self-map of the disk.
                let raw: Vec<Complex64> = (0..4)
                    .map(|_| Complex64::from_polar(rng.gen_range(0.0..1.0), rng.gen_range(0.0..6.3)))
                    .collect();
                let total: f64 = raw.iter().map(|v| v.norm()).sum::<f64>() / rng.gen_range(0.3..1.0);
                let mut coeffs = vec![ZERO];
                coeffs.extend(raw.iter().map(|v| v / total));
                let w = TruncatedSeries::new(coeffs).unwrap();
                let via_w = coefficients_from_schwarz(&spec, &w).unwrap();
                let one = TruncatedSeries::one(4);
                let p1 = one.add(&w).unwrap().div(&one.sub(&w).unwrap()).unwrap();
                let pc = p1.coeffs();
                let via_c = printed_coefficients(&spec, pc[1], pc[2], pc[3]);
                assert!(via_w.max_abs_diff(&via_c) < 1e-10);
            }
        }
    }

    #[test]
    fn g_alpha_endpoints_match_convex_and_r_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let f = phi(rng.gen_range(0.05..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let [c1, c2, c3] = random_c(&mut rng);
            let g1 = coefficients_from_c(&ClassSpec::g_alpha(1.0, f.clone()).unwrap(), c1, c2, c3);
            let cv = coefficients_from_c(&ClassSpec::convex(f.clone()), c1, c2, c3);
            assert!(g1.max_abs_diff(&cv) < 1e-12);
            let g0 = coefficients_from_c(&ClassSpec::g_alpha(0.0, f.clone()).unwrap(), c1, c2, c3);
            let r = coefficients_from_c(&ClassSpec::r_gamma_tau(0.0, ONE, f).unwrap(), c1, c2, c3);
            assert!(g0.max_abs_diff(&r) < 1e-12);
        }
    }

    #[test]
    fn tau_scales_coefficients_linearly() {
        let f = phi(1.3, -0.4, 0.9);
        let base = ClassSpec::r_gamma_tau(0.6, ONE, f.clone()).unwrap();
        let (c1, c2, c3) = (Complex64::new(1.2, 0.3), Complex64::new(-0.5, 1.1), Complex64::new(0.8, -0.2));
        let t = coefficients_from_c(&base, c1, c2, c3);
        for lambda in [c(2.0), Complex64::new(0.0, 1.0), Complex64::new(1.0, 1.0)] {
            let scaled = ClassSpec::r_gamma_tau(0.6, lambda, f.clone()).unwrap();
            let s = coefficients_from_c(&scaled, c1, c2, c3);
            let want = CoefficientTriple::new(lambda * t.a2, lambda * t.a3, lambda * t.a4);
            assert!(s.max_abs_diff(&want) < 1e-13);
            let ratio = hankel2(&s) / hankel2(&t);
            assert!((ratio - lambda.norm_sqr()).abs() < 1e-12);
        }
    }

    #[test]
    fn coefficient_map_matches_solver() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for kind in all_kinds() {
            let spec = ClassSpec::new(kind, phi(0.9, 2.1, -1.7)).unwrap();
            let map = CoefficientMap::new(&spec);
            for _ in 0..50 {
                let [c1, c2, c3] = random_c(&mut rng);
                let direct = coefficients_from_c(&spec, c1, c2, c3);
                assert!(map.eval(c1, c2, c3).max_abs_diff(&direct) < 1e-12);
            }
        }
    }

    #[test]
    fn spec_validation() {
        let f = halfplane();
        assert!(matches!(ClassSpec::r_gamma_tau(0.5, ZERO, f.clone()), Err(Error::ZeroTau)));
        assert!(matches!(
            ClassSpec::r_gamma_tau(1.5, ONE, f.clone()),
            Err(Error::OutOfRange { name: "gamma", .. })
        ));
        assert!(matches!(
            ClassSpec::g_alpha(-0.1, f.clone()),
            Err(Error::OutOfRange { name: "alpha", .. })
        ));
        assert_eq!(ClassSpec::starlike(f.clone()).p(), None);
        let r = ClassSpec::r_gamma_tau(0.0, ONE, f.clone()).unwrap();
        assert!((r.p().unwrap() - 8.0 / 9.0).abs() < 1e-15);
        let r1 = ClassSpec::r_gamma_tau(1.0, ONE, f.clone()).unwrap();
        assert!((r1.p().unwrap() - 64.0 / 81.0).abs() < 1e-15);
        let g1 = ClassSpec::g_alpha(1.0, f).unwrap();
        assert!((g1.p().unwrap() - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn p_stays_in_documented_ranges() {
        let f = halfplane();
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            let pr = ClassSpec::r_gamma_tau(x, ONE, f.clone()).unwrap().p().unwrap();
            assert!((64.0 / 81.0 - 1e-15..=8.0 / 9.0 + 1e-15).contains(&pr));
            let pg = ClassSpec::g_alpha(x, f.clone()).unwrap().p().unwrap();
            assert!((8.0 / 9.0 - 1e-15..=4.0 / 3.0 + 1e-15).contains(&pg));
        }
    }

    #[test]
    fn hankel2_examples() {
        assert_eq!(hankel2(&CoefficientTriple::real(2.0, 3.0, 4.0)), 1.0);
        assert_eq!(hankel2(&CoefficientTriple::real(0.0, 0.25, 0.0)), 1.0 / 16.0);
        assert_eq!(hankel2(&CoefficientTriple::ZERO), 0.0);
    }

    #[test]
    fn hankel_generic_examples() {
        let koebe = [c(1.0), c(2.0), c(3.0), c(4.0)];
        assert!((hankel_generic(&koebe, 2, 2).unwrap() - c(-1.0)).norm() < 1e-15);
        for n in 1..=4 {
            assert_eq!(hankel_generic(&koebe, 1, n).unwrap(), koebe[n - 1]);
        }
        let (a2, a3) = (Complex64::new(0.3, -1.0), Complex64::new(2.0, 0.5));
        let fs = hankel_generic(&[ONE, a2, a3], 2, 1).unwrap();
        assert!((fs - (a3 - a2 * a2)).norm() < 1e-15);
        // 3x3 of a_n = n: rows (1,2,3), (2,3,4), (3,4,5) are linearly dependent.
        let five: Vec<Complex64> = (1..=5).map(|k| c(k as f64)).collect();
        assert!(hankel_generic(&five, 3, 1).unwrap().norm() < 1e-13);
    }

    #[test]
    fn hankel_generic_errors() {
        let koebe = [c(1.0), c(2.0), c(3.0)];
        assert!(matches!(
            hankel_generic(&koebe, 2, 2),
            Err(Error::InsufficientCoefficients { needed: 4, got: 3, .. })
        ));
        assert!(matches!(hankel_generic(&[c(2.0), c(1.0)], 1, 1), Err(Error::NotNormalized)));
        assert!(hankel_generic(&koebe, 0, 1).is_err());
    }

    proptest! {
        #[test]
        fn hankel2_is_rotation_invariant(
            parts in prop::collection::vec(-3.0f64..3.0, 6),
        ) {
            let t = CoefficientTriple::new(
                Complex64::new(parts[0], parts[1]),
                Complex64::new(parts[2], parts[3]),
                Complex64::new(parts[4], parts[5]),
            );
            let h = hankel2(&t);
            for k in 0..16 {
                let theta = std::f64::consts::TAU * k as f64 / 16.0;
                let r = hankel2(&t.rotate(theta));
                prop_assert!((r - h).abs() <= 1e-12 * h.max(1.0));
            }
        }
    }
}
