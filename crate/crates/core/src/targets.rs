//! Subordination targets `phi(z) = 1 + B1 z + B2 z^2 + B3 z^3 + ...`.
//!
//! Only the first three Maclaurin coefficients matter for the second Hankel
//! determinant. Presets derive them from the defining function through the
//! series engine rather than from hand-copied constants.

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{elementary, Elementary, TruncatedSeries, WORKING_ORDER};

/// Inputs with `B1` below this are rejected rather than extrapolated.
pub const MIN_B1: f64 = 1e-12;

/// Validated leading coefficients of a target function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiCoefficients {
    #[serde(rename = "B1")]
    b1: f64,
    #[serde(rename = "B2")]
    b2: f64,
    #[serde(rename = "B3")]
    b3: f64,
    label: String,
}

impl PhiCoefficients {
    /// A user-supplied triple. `B1` must be positive and everything finite;
    /// nothing else about `phi` is checked.
    pub fn custom(b1: f64, b2: f64, b3: f64, label: impl Into<String>) -> Result<Self> {
        for (name, v) in [("B1", b1), ("B2", b2), ("B3", b3)] {
            if !v.is_finite() {
                return Err(Error::NonFinite { name });
            }
        }
        if b1 < MIN_B1 {
            return Err(Error::NonPositiveB1 { b1, min: MIN_B1 });
        }
        Ok(Self {
            b1,
            b2,
            b3,
            label: label.into(),
        })
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn b2(&self) -> f64 {
        self.b2
    }

    pub fn b3(&self) -> f64 {
        self.b3
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `1 + B1 z + B2 z^2 + B3 z^3` padded to `order`.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_real(&[1.0, self.b1, self.b2, self.b3], order)
    }

    /// Parses the key-value config document:
    ///
    /// ```toml
    /// B1 = 2.0
    /// B2 = 2.0
    /// B3 = 2.0
    /// label = "halfplane"   # optional
    /// ```
    pub fn from_config_str(text: &str) -> Result<Self> {
        let cfg: PhiConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        Self::custom(
            cfg.b1,
            cfg.b2,
            cfg.b3,
            cfg.label.unwrap_or_else(|| "custom".to_string()),
        )
    }

    pub fn from_config_path(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_config_str(&text)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PhiConfig {
    #[serde(rename = "B1")]
    b1: f64,
    #[serde(rename = "B2")]
    b2: f64,
    #[serde(rename = "B3")]
    b3: f64,
    label: Option<String>,
}

/// The named targets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Preset {
    /// `(1+z)/(1-z)`, starlike/convex functions proper.
    HalfPlane,
    /// `(1+(1-2a)z)/(1-z)`, order `a` in `[0, 1)`.
    OrderAlpha(f64),
    /// `((1+z)/(1-z))^b`, strongly starlike of order `b` in `(0, 1]`.
    StronglyBeta(f64),
    /// `sqrt(1+z)`.
    Lemniscate,
    /// `1 + (2/pi^2) (log((1+sqrt z)/(1-sqrt z)))^2`.
    Parabolic,
    /// `(1+Az)/(1+Bz)` with `-1 <= B < A <= 1`.
    Janowski { a: f64, b: f64 },
}

impl Preset {
    /// Preset syntax accepted by [`FromStr`], for help text.
    pub const SYNTAX: &'static [&'static str] = &[
        "halfplane",
        "order_alpha:<alpha in [0,1)>",
        "strongly_beta:<beta in (0,1]>",
        "lemniscate",
        "parabolic",
        "janowski:<A>,<B>",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::HalfPlane => "halfplane",
            Self::OrderAlpha(_) => "order_alpha",
            Self::StronglyBeta(_) => "strongly_beta",
            Self::Lemniscate => "lemniscate",
            Self::Parabolic => "parabolic",
            Self::Janowski { .. } => "janowski",
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Self::OrderAlpha(a) if !(0.0..1.0).contains(&a) => Err(Error::OutOfRange {
                name: "alpha",
                value: a,
                range: "[0, 1)",
            }),
            Self::StronglyBeta(b) if !(b > 0.0 && b <= 1.0) => Err(Error::OutOfRange {
                name: "beta",
                value: b,
                range: "(0, 1]",
            }),
            Self::Janowski { a, b } if !(-1.0 <= b && b < a && a <= 1.0) => {
                Err(Error::JanowskiOrder { a, b })
            }
            _ => Ok(()),
        }
    }

    /// Maclaurin series of the preset through [`WORKING_ORDER`].
    pub fn series(&self) -> Result<TruncatedSeries> {
        self.validate()?;
        let n = WORKING_ORDER;
        let one = TruncatedSeries::one(n);
        let ratio = |num: f64, den: f64| {
            TruncatedSeries::from_real(&[1.0, num], n).div(&TruncatedSeries::from_real(&[1.0, den], n))
        };
        match *self {
            Self::HalfPlane => ratio(1.0, -1.0),
            Self::OrderAlpha(a) => ratio(1.0 - 2.0 * a, -1.0),
            Self::StronglyBeta(b) => ratio(1.0, -1.0)?.powf(b),
            Self::Lemniscate => elementary(Elementary::Sqrt1p, n),
            Self::Parabolic => {
                // log((1+u)/(1-u)) = u * h(u^2) with h(z) = sum 2 z^k / (2k+1),
                // so the squared log at u = sqrt z is the ordinary series z h(z)^2.
                let coeffs: Vec<f64> = (0..=n).map(|k| 2.0 / (2 * k + 1) as f64).collect();
                let h = TruncatedSeries::from_real(&coeffs, n);
                let sq = h.mul(&h)?.with_order(n - 1).shift_up();
                Ok(one.add(&sq.scale(Complex64::new(2.0 / (PI * PI), 0.0)))?)
            }
            Self::Janowski { a, b } => ratio(a, b),
        }
    }

    /// `(B1, B2, B3)` of the preset. Parameter-free presets are cached.
    pub fn coefficients(&self) -> Result<PhiCoefficients> {
        static HALF_PLANE: OnceLock<PhiCoefficients> = OnceLock::new();
        static LEMNISCATE: OnceLock<PhiCoefficients> = OnceLock::new();
        static PARABOLIC: OnceLock<PhiCoefficients> = OnceLock::new();
        let cache = match self {
            Self::HalfPlane => Some(&HALF_PLANE),
            Self::Lemniscate => Some(&LEMNISCATE),
            Self::Parabolic => Some(&PARABOLIC),
            _ => None,
        };
        if let Some(hit) = cache.and_then(|c| c.get()) {
            return Ok(hit.clone());
        }
        let s = self.series()?;
        let b = |k: usize| s.coeffs()[k].re;
        let phi = PhiCoefficients::custom(b(1), b(2), b(3), self.to_string())?;
        if let Some(c) = cache {
            let _ = c.set(phi.clone());
        }
        Ok(phi)
    }
}

/// Shorthand for [`Preset::coefficients`].
pub fn preset(p: &Preset) -> Result<PhiCoefficients> {
    p.coefficients()
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OrderAlpha(a) => write!(f, "order_alpha:{a}"),
            Self::StronglyBeta(b) => write!(f, "strongly_beta:{b}"),
            Self::Janowski { a, b } => write!(f, "janowski:{a},{b}"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a.trim())),
            None => (s.trim(), None),
        };
        let malformed = |why: &str| Error::MalformedPreset(s.to_string(), why.to_string());
        let number = |a: Option<&str>| -> Result<f64> {
            a.ok_or_else(|| malformed("missing parameter"))?
                .parse()
                .map_err(|_| malformed("parameter is not a number"))
        };
        let no_arg = |p: Preset| match arg {
            None => Ok(p),
            Some(_) => Err(malformed("takes no parameter")),
        };
        let preset = match name {
            "halfplane" => no_arg(Self::HalfPlane)?,
            "lemniscate" => no_arg(Self::Lemniscate)?,
            "parabolic" => no_arg(Self::Parabolic)?,
            "order_alpha" => Self::OrderAlpha(number(arg)?),
            "strongly_beta" => Self::StronglyBeta(number(arg)?),
            "janowski" => {
                let (a, b) = arg
                    .and_then(|a| a.split_once(','))
                    .ok_or_else(|| malformed("expected janowski:A,B"))?;
                Self::Janowski {
                    a: number(Some(a.trim()))?,
                    b: number(Some(b.trim()))?,
                }
            }
            _ => return Err(Error::UnknownPreset(s.to_string())),
        };
        preset.validate()?;
        Ok(preset)
    }
}
