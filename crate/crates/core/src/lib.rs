//! Monte Carlo simulator for quasi-phase-matched quantum frequency conversion
//! of single-photon streams.
//!
//! The crate models the full measurement chain of an upconversion experiment:
//! a quantum-dot-like single-photon emitter with a spectrally detuned
//! contaminant mode ([`source`]), a narrowband Bragg filter, a periodically
//! poled waveguide that sum-frequency converts the stream with a strong pump,
//! Raman-noise injection, and click detectors with dark counts, jitter and
//! dead time ([`chain`]). Detected time tags are analysed with a
//! Hanbury-Brown–Twiss correlator and least-squares fitters ([`correlator`],
//! [`fit`]).
//!
//! The deterministic optics core ([`sellmeier`], [`qpm`], [`efficiency`]) is
//! generic over the scalar type through [`scalar::Scalar`]; concrete `f64`
//! aliases are re-exported at the crate root. The stochastic event machinery
//! is `f64` throughout (timestamps in ns, wavelengths in nm).
//!
//! Scenario configuration, the pipeline runner and the calibration loop live
//! in [`scenario`]; they are what the `qfcsim` command-line tool drives.

pub mod chain;
pub mod correlator;
pub mod efficiency;
pub mod error;
pub mod fit;
pub mod numeric;
pub mod qpm;
pub mod scalar;
pub mod scenario;
pub mod seed;
pub mod sellmeier;
pub mod source;
pub mod timetag;

pub use error::{Error, Result};

/// Default double-precision instantiations of the generic optics core.
pub type Sellmeier64 = sellmeier::SellmeierModel<f64>;
pub type QpmDesign64 = qpm::QpmDesign<f64>;
pub type DesignPoint64 = qpm::DesignPoint<f64>;
pub type Efficiency64 = efficiency::EfficiencyModel<f64>;
