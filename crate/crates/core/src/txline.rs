//! Ideal lossless transmission lines as ABCD (chain) two-ports.
//!
//! A section of characteristic impedance `z0` and electrical length `θ` has
//!
//! ```text
//! [ cos θ        j·z0·sin θ ]
//! [ j·sin θ/z0   cos θ      ]
//! ```
//!
//! with `θ` scaling linearly with frequency: `θ(f) = θ(f0)·f/f0`.
//!
//! Cascades are ordered from the reference (source) port toward the load.
//! Matching designs list impedances load-adjacent first, so
//! [`quarter_wave_cascade`] reverses them.

use std::io::{self, Write};
use std::ops::Mul;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

/// Lower limit for reported reflection magnitudes.
pub const DB_FLOOR: f64 = -120.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TxLineError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular network: {0}")]
    Singular(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineSection {
    /// Characteristic impedance in ohms.
    pub z0: f64,
    /// Electrical length at the design frequency, in degrees.
    pub length_deg: f64,
}

impl LineSection {
    pub fn new(z0: f64, length_deg: f64) -> Self {
        Self { z0, length_deg }
    }

    pub fn quarter_wave(z0: f64) -> Self {
        Self::new(z0, 90.0)
    }
}

/// Quarter-wave sections in cascade order (reference side first) for
/// impedances listed load-adjacent first.
pub fn quarter_wave_cascade(impedances_load_first: &[f64]) -> Vec<LineSection> {
    impedances_load_first
        .iter()
        .rev()
        .map(|&z| LineSection::quarter_wave(z))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPort {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl TwoPort {
    pub fn identity() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }
}

impl Mul for TwoPort {
    type Output = TwoPort;

    fn mul(self, rhs: TwoPort) -> TwoPort {
        TwoPort {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

/// `(sin, cos)` of an angle in degrees, exact at multiples of 90°.
fn sin_cos_deg(deg: f64) -> (f64, f64) {
    let r = deg.rem_euclid(360.0);
    if r == 0.0 {
        (0.0, 1.0)
    } else if r == 90.0 {
        (1.0, 0.0)
    } else if r == 180.0 {
        (0.0, -1.0)
    } else if r == 270.0 {
        (-1.0, 0.0)
    } else {
        r.to_radians().sin_cos()
    }
}

/// Chain matrix of one lossless section at `frequency`, given its design
/// frequency `f0`.
pub fn line_two_port(section: &LineSection, frequency: f64, f0: f64) -> Result<TwoPort, TxLineError> {
    if !(section.z0 > 0.0 && section.z0.is_finite()) {
        return Err(TxLineError::Domain(format!(
            "characteristic impedance must be positive, got {}",
            section.z0
        )));
    }
    if !(f0 > 0.0 && f0.is_finite()) {
        return Err(TxLineError::Domain(format!("design frequency must be positive, got {f0}")));
    }
    if !(frequency >= 0.0 && frequency.is_finite()) {
        return Err(TxLineError::Domain(format!("frequency must be nonnegative, got {frequency}")));
    }
    if !section.length_deg.is_finite() {
        return Err(TxLineError::Domain("electrical length must be finite".into()));
    }
    // Frequency ratio first so f = f0 gives the design angle exactly.
    let theta = section.length_deg * (frequency / f0);
    let (s, c) = sin_cos_deg(theta);
    let z0 = section.z0;
    Ok(TwoPort {
        a: Complex64::new(c, 0.0),
        b: Complex64::new(0.0, z0 * s),
        c: Complex64::new(0.0, s / z0),
        d: Complex64::new(c, 0.0),
    })
}

/// Product of `ports` in order (reference side first). Empty gives identity.
pub fn cascade<'a, I>(ports: I) -> TwoPort
where
    I: IntoIterator<Item = &'a TwoPort>,
{
    ports
        .into_iter()
        .fold(TwoPort::identity(), |acc, p| acc * *p)
}

/// `Zin = (a·ZL + b) / (c·ZL + d)`.
pub fn input_impedance(port: &TwoPort, z_load: Complex64) -> Result<Complex64, TxLineError> {
    let num = port.a * z_load + port.b;
    let den = port.c * z_load + port.d;
    let scale = (port.a * z_load).norm() + port.b.norm();
    if den.norm() <= 1e-12 * scale || den.norm() == 0.0 {
        return Err(TxLineError::Singular(format!(
            "input impedance denominator {den} vanishes"
        )));
    }
    Ok(num / den)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reflection {
    pub gamma: Complex64,
    /// `20·log10|gamma|`, floored at [`DB_FLOOR`].
    pub magnitude_db: f64,
}

pub fn magnitude_db(gamma: Complex64) -> f64 {
    (20.0 * gamma.norm().log10()).max(DB_FLOOR)
}

/// Reflection coefficient of `z_in` against a real reference impedance.
pub fn reflection(z_in: Complex64, z_ref: f64) -> Result<Reflection, TxLineError> {
    if !(z_ref > 0.0 && z_ref.is_finite()) {
        return Err(TxLineError::Domain(format!(
            "reference impedance must be positive, got {z_ref}"
        )));
    }
    let zr = Complex64::new(z_ref, 0.0);
    let den = z_in + zr;
    if den == Complex64::new(0.0, 0.0) {
        return Err(TxLineError::Singular("input impedance equals -z_ref".into()));
    }
    let gamma = (z_in - zr) / den;
    Ok(Reflection {
        gamma,
        magnitude_db: magnitude_db(gamma),
    })
}

/// Linearly spaced grid from `start` to `stop` inclusive.
pub fn linear_grid(start: f64, stop: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![start],
        n => {
            let step = (stop - start) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { stop } else { start + i as f64 * step })
                .collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub frequency_hz: f64,
    /// `Err` marks a point where the network was singular.
    pub response: Result<Reflection, TxLineError>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepResult {
    pub points: Vec<SweepPoint>,
}

impl SweepResult {
    pub const CSV_HEADER: &'static str = "frequency_hz,gamma_re,gamma_im,gamma_db";

    /// Response at the grid point closest to `frequency`.
    pub fn nearest(&self, frequency: f64) -> Option<&SweepPoint> {
        self.points.iter().min_by(|a, b| {
            (a.frequency_hz - frequency)
                .abs()
                .total_cmp(&(b.frequency_hz - frequency).abs())
        })
    }

    pub fn failed_points(&self) -> usize {
        self.points.iter().filter(|p| p.response.is_err()).count()
    }

    /// Singular points are written with `NaN` values.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{}", Self::CSV_HEADER)?;
        for p in &self.points {
            match &p.response {
                Ok(r) => writeln!(
                    out,
                    "{},{},{},{}",
                    p.frequency_hz, r.gamma.re, r.gamma.im, r.magnitude_db
                )?,
                Err(_) => writeln!(out, "{},NaN,NaN,NaN", p.frequency_hz)?,
            }
        }
        Ok(())
    }
}

/// Reflection seen from the reference port of `sections` (reference side
/// first) terminated in `z_load`, at each frequency in `grid`.
///
/// Singular points are recorded per point; the sweep continues.
pub fn sweep(
    sections: &[LineSection],
    z_load: f64,
    z_ref: f64,
    f0: f64,
    grid: &[f64],
) -> Result<SweepResult, TxLineError> {
    if grid.is_empty() {
        return Err(TxLineError::Domain("frequency grid is empty".into()));
    }
    if let Some(f) = grid.iter().find(|f| !(**f > 0.0 && f.is_finite())) {
        return Err(TxLineError::Domain(format!("grid frequency must be positive, got {f}")));
    }
    if !(z_load > 0.0 && z_load.is_finite()) {
        return Err(TxLineError::Domain(format!("load must be positive, got {z_load}")));
    }
    if !(z_ref > 0.0 && z_ref.is_finite()) {
        return Err(TxLineError::Domain(format!(
            "reference impedance must be positive, got {z_ref}"
        )));
    }
    let load = Complex64::new(z_load, 0.0);
    let mut points = Vec::with_capacity(grid.len());
    for &f in grid {
        let ports = sections
            .iter()
            .map(|s| line_two_port(s, f, f0))
            .collect::<Result<Vec<_>, _>>()?;
        let response = input_impedance(&cascade(&ports), load).and_then(|z| reflection(z, z_ref));
        points.push(SweepPoint {
            frequency_hz: f,
            response,
        });
    }
    Ok(SweepResult { points })
}
