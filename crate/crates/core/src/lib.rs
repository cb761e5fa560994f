//! Pseudo-spectral toolkit for the vanishing-diffusivity limit of the
//! Keller-Segel equations
//!
//! ```text
//! u_t - eps Lap u = -div(u (1 - u) grad S),   S = (1 - Lap)^{-1} u
//! ```
//!
//! on the torus `[-L, L)^d`, together with Littlewood-Paley blocks, Besov
//! norms and a harness that measures the rates separating the parabolic
//! (`eps > 0`) and hyperbolic (`eps = 0`) solution maps on the oscillating
//! data family `u_0^n` with `eps = 2^{-2n}`.
//!
//! * [`spectral`]: grids, fields and exact Fourier multipliers.
//! * [`littlewood_paley`]: dyadic cutoffs, blocks, Besov norms, initial data.
//! * [`keller_segel`]: integrating-factor RK4 solver and the three-part
//!   decomposition `u = u1 + u2 + u3`.
//! * [`experiments`]: rate scenarios E1-E6, log-log fits, CSV/JSON reports.

pub mod experiments;
pub mod keller_segel;
pub mod littlewood_paley;
pub mod spectral;

pub use keller_segel::{Decomposition, SolverConfig, Trajectory};
pub use littlewood_paley::{BesovParams, DataProfile, DyadicFamily};
pub use spectral::{Field, GridSpec};

/// Serde helpers for extended reals: `f64::INFINITY` is written as `"inf"`.
pub(crate) mod ext_real {
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    pub fn format(v: f64) -> String {
        if v.is_infinite() {
            "inf".to_string()
        } else {
            format!("{v}")
        }
    }

    pub fn parse(s: &str) -> Option<f64> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "+inf" => Some(f64::INFINITY),
            other => other.parse().ok(),
        }
    }

    pub fn serialize<S: Serializer>(v: &f64, ser: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() {
            ser.serialize_str("inf")
        } else {
            ser.serialize_f64(*v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<f64, D::Error> {
        struct ExtReal;
        impl Visitor<'_> for ExtReal {
            type Value = f64;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a number or \"inf\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                parse(v).ok_or_else(|| E::custom(format!("not an extended real: {v}")))
            }
        }
        de.deserialize_any(ExtReal)
    }
}
