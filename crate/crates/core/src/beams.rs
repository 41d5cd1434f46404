//! Beam parameterization, Bessel-Gauss envelope, power normalization,
//! and the exact Bessel-beam vector potential with derived E and B fields.
//!
//! All quantities are SI internally. The vector potential phasor carries
//! the full space-time phase, physical fields are real parts, and the
//! electric field uses the radiation convention E = -dA/dt.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::constants::{SPEED_OF_LIGHT, VACUUM_PERMEABILITY};
use crate::error::{Error, Result};
use crate::numerics;
use crate::specfun::bessel_j;
use crate::vec3::{CVec3, Vec3};

/// Relative tolerance of the power-normalization quadrature.
const NORM_QUAD_TOL: f64 = 1e-9;

/// Photon helicity eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Helicity {
    Plus,
    Minus,
}

impl Helicity {
    pub fn lambda(self) -> i32 {
        match self {
            Helicity::Plus => 1,
            Helicity::Minus => -1,
        }
    }

    pub fn from_sign(value: i32) -> Result<Self> {
        match value {
            1 => Ok(Helicity::Plus),
            -1 => Ok(Helicity::Minus),
            other => Err(Error::InvalidSpec(format!(
                "helicity must be +1 or -1, got {other}"
            ))),
        }
    }
}

/// Full physical description of a twisted beam.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeamSpec {
    /// Vacuum wavelength (m).
    pub wavelength: f64,
    /// Pitch angle of the plane-wave cone (rad), in (0, pi/2).
    pub pitch_angle: f64,
    /// Total angular momentum per photon in hbar units, m_gamma.
    pub total_am: i32,
    /// Helicity eigenvalue Lambda.
    pub helicity: Helicity,
    /// Gaussian envelope width w0 (m); `None` selects a pure Bessel beam.
    pub envelope_width: Option<f64>,
    /// Time-averaged beam power (W).
    pub power: f64,
}

impl BeamSpec {
    pub fn new(
        wavelength: f64,
        pitch_angle: f64,
        total_am: i32,
        helicity: Helicity,
        envelope_width: Option<f64>,
        power: f64,
    ) -> Result<Self> {
        if !(wavelength.is_finite() && wavelength > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "wavelength must be positive, got {wavelength}"
            )));
        }
        if !(pitch_angle.is_finite() && pitch_angle > 0.0 && pitch_angle < PI / 2.0) {
            return Err(Error::InvalidSpec(format!(
                "pitch angle must lie in (0, pi/2), got {pitch_angle}"
            )));
        }
        if let Some(w0) = envelope_width {
            if !(w0.is_finite() && w0 > 0.0) {
                return Err(Error::InvalidSpec(format!(
                    "envelope width must be positive, got {w0}"
                )));
            }
        }
        if !(power.is_finite() && power > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "power must be positive, got {power}"
            )));
        }
        Ok(Self {
            wavelength,
            pitch_angle,
            total_am,
            helicity,
            envelope_width,
            power,
        })
    }

    pub fn wavenumbers(&self) -> Wavenumbers {
        let k = 2.0 * PI / self.wavelength;
        Wavenumbers {
            k,
            k_z: k * self.pitch_angle.cos(),
            kappa: k * self.pitch_angle.sin(),
            omega: SPEED_OF_LIGHT * k,
        }
    }

    /// Paraxial orbital index, ell = m_gamma - Lambda.
    pub fn oam_index(&self) -> i32 {
        self.total_am - self.helicity.lambda()
    }

    /// Spin projection for the pure circular polarization, sigma_z = Lambda.
    pub fn sigma_z(&self) -> f64 {
        self.helicity.lambda() as f64
    }

    /// Amplitude of the Gaussian factor exp(-rho^2/w0^2), or 1 with no envelope.
    pub fn envelope(&self, rho: f64) -> f64 {
        match self.envelope_width {
            Some(w0) => (-rho * rho / (w0 * w0)).exp(),
            None => 1.0,
        }
    }

    /// d(ln env^2)/drho = -4 rho / w0^2 (0 with no envelope).
    fn envelope_log_deriv(&self, rho: f64) -> f64 {
        match self.envelope_width {
            Some(w0) => -4.0 * rho / (w0 * w0),
            None => 0.0,
        }
    }
}

/// Derived wavenumber geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wavenumbers {
    /// Total wavenumber k = 2 pi / lambda (1/m).
    pub k: f64,
    /// Longitudinal component k cos(theta_k) (1/m).
    pub k_z: f64,
    /// Transverse (conical) component k sin(theta_k) (1/m).
    pub kappa: f64,
    /// Angular frequency ck (rad/s).
    pub omega: f64,
}

/// Vector-potential amplitude fixed by the beam power (V*s/m).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Amplitude {
    pub a0: f64,
}

/// Paraxial mode sample: signed radial profile u and analytic d|u|^2/drho.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeSample {
    /// u = A0 J_ell(kappa rho) exp(-rho^2/w0^2) (signed; V*s/m).
    pub u_mag: f64,
    /// d(|u|^2)/drho (V^2*s^2/m^3).
    pub du2_drho: f64,
}

impl EnvelopeSample {
    pub fn u_sq(&self) -> f64 {
        self.u_mag * self.u_mag
    }
}

pub(crate) fn jn(n: i32, x: f64) -> f64 {
    bessel_j(n, x).expect("internal bessel argument is finite and non-negative")
}

pub(crate) fn jn_prime(n: i32, x: f64) -> f64 {
    0.5 * (jn(n - 1, x) - jn(n + 1, x))
}

/// Bessel-Gauss envelope u and the analytic derivative of its square.
pub fn envelope_u(spec: &BeamSpec, amp: &Amplitude, rho: f64) -> EnvelopeSample {
    let wn = spec.wavenumbers();
    let ell = spec.oam_index();
    let x = wn.kappa * rho;
    let j = jn(ell, x);
    let jp = jn_prime(ell, x);
    let env = spec.envelope(rho);
    let env2 = env * env;
    let u = amp.a0 * j * env;
    let du2 =
        amp.a0 * amp.a0 * env2 * (2.0 * wn.kappa * j * jp + j * j * spec.envelope_log_deriv(rho));
    EnvelopeSample {
        u_mag: u,
        du2_drho: du2,
    }
}

/// Fix A0 so the integrated paraxial Poynting flux equals the beam power:
/// <P> = integral of (omega k A0^2 / 2 mu0) J_ell^2(kappa rho) e^{-2 rho^2/w0^2} 2 pi rho drho.
pub fn normalize_amplitude(spec: &BeamSpec) -> Result<Amplitude> {
    let w0 = spec.envelope_width.ok_or(Error::UnsupportedNormalization)?;
    let wn = spec.wavenumbers();
    let ell = spec.oam_index();
    let radial = numerics::integrate(
        |rho| {
            let j = jn(ell, wn.kappa * rho);
            j * j * (-2.0 * rho * rho / (w0 * w0)).exp() * rho
        },
        0.0,
        6.0 * w0,
        NORM_QUAD_TOL,
    );
    let a0_sq = spec.power * VACUUM_PERMEABILITY / (PI * wn.omega * wn.k * radial);
    Ok(Amplitude { a0: a0_sq.sqrt() })
}

fn eta(lambda: i32) -> CVec3 {
    CVec3::new(
        Complex64::new(-lambda as f64 * FRAC_1_SQRT_2, 0.0),
        Complex64::new(0.0, -FRAC_1_SQRT_2),
        Complex64::ZERO,
    )
}

const ETA_Z: CVec3 = CVec3::new(Complex64::ZERO, Complex64::ZERO, Complex64::new(1.0, 0.0));

/// Exact Bessel-beam vector potential phasor at (rho, phi, z, t).
///
/// Three polarization terms with Bessel orders m_gamma -/0/+ Lambda; the
/// Gaussian envelope, when present, multiplies all three terms.
pub fn vector_potential(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho: f64,
    phi: f64,
    z: f64,
    t: f64,
) -> CVec3 {
    let wn = spec.wavenumbers();
    let m = spec.total_am;
    let lam = spec.helicity.lambda();
    let x = wn.kappa * rho;
    let half = 0.5 * spec.pitch_angle;
    let cos2 = half.cos().powi(2);
    let sin2 = half.sin().powi(2);
    let sin_t = spec.pitch_angle.sin();

    let c_plus = Complex64::from_polar(1.0, -(lam as f64) * phi) * cos2 * jn(m - lam, x);
    let c_zero = Complex64::new(0.0, FRAC_1_SQRT_2 * sin_t) * jn(m, x);
    let c_minus = -Complex64::from_polar(1.0, lam as f64 * phi) * sin2 * jn(m + lam, x);

    let carrier = Complex64::from_polar(1.0, wn.k_z * z - wn.omega * t + m as f64 * phi)
        * Complex64::new(0.0, -(lam as f64))
        * (amp.a0 * spec.envelope(rho));

    (eta(lam).scale(c_plus) + ETA_Z.scale(c_zero) + eta(-lam).scale(c_minus)).scale(carrier)
}

/// Paraxial (single polarization term) potential with the same phase
/// convention as `vector_potential`; used for small-angle cross-checks.
pub fn paraxial_potential(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho: f64,
    phi: f64,
    z: f64,
    t: f64,
) -> CVec3 {
    let wn = spec.wavenumbers();
    let lam = spec.helicity.lambda();
    let ell = spec.oam_index();
    let carrier = Complex64::from_polar(1.0, wn.k * z - wn.omega * t + ell as f64 * phi)
        * Complex64::new(0.0, -(lam as f64))
        * (amp.a0 * spec.envelope(rho) * jn(ell, wn.kappa * rho));
    eta(lam).scale(carrier)
}

pub(crate) fn potential_cartesian(
    spec: &BeamSpec,
    amp: &Amplitude,
    x: f64,
    y: f64,
    z: f64,
    t: f64,
) -> CVec3 {
    vector_potential(spec, amp, x.hypot(y), y.atan2(x), z, t)
}

fn real_potential(spec: &BeamSpec, amp: &Amplitude, x: f64, y: f64, z: f64, t: f64) -> Vec3 {
    potential_cartesian(spec, amp, x, y, z, t).re()
}

/// Jacobian g[i][j] = d A_j / d x_i of the real vector potential, by
/// fourth-order central differences with step h.
pub(crate) fn real_potential_jacobian(
    spec: &BeamSpec,
    amp: &Amplitude,
    x: f64,
    y: f64,
    z: f64,
    t: f64,
    h: f64,
) -> [[f64; 3]; 3] {
    let mut g = [[0.0; 3]; 3];
    for (axis, row) in g.iter_mut().enumerate() {
        let offset = |s: f64| -> Vec3 {
            let (dx, dy, dz) = match axis {
                0 => (s, 0.0, 0.0),
                1 => (0.0, s, 0.0),
                _ => (0.0, 0.0, s),
            };
            real_potential(spec, amp, x + dx, y + dy, z + dz, t)
        };
        let p1 = offset(h);
        let m1 = offset(-h);
        let p2 = offset(2.0 * h);
        let m2 = offset(-2.0 * h);
        row[0] = (8.0 * (p1.x - m1.x) - (p2.x - m2.x)) / (12.0 * h);
        row[1] = (8.0 * (p1.y - m1.y) - (p2.y - m2.y)) / (12.0 * h);
        row[2] = (8.0 * (p1.z - m1.z) - (p2.z - m2.z)) / (12.0 * h);
    }
    g
}

pub(crate) fn curl_from_jacobian(g: &[[f64; 3]; 3]) -> Vec3 {
    Vec3::new(g[1][2] - g[2][1], g[2][0] - g[0][2], g[0][1] - g[1][0])
}

/// Finite-difference step used for curls and gradients.
pub(crate) fn fd_step(spec: &BeamSpec) -> f64 {
    spec.wavelength / 2000.0
}

/// Complex potential phasor with physical E and B at a spacetime point.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSample {
    /// Vector potential phasor (V*s/m).
    pub a_complex: CVec3,
    /// Physical electric field, Re(i omega A) (V/m).
    pub e_field: Vec3,
    /// Physical magnetic field, curl of Re(A) (T).
    pub b_field: Vec3,
}

/// Evaluate E analytically from the phasor and B by finite-difference curl.
pub fn fields(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho: f64,
    phi: f64,
    z: f64,
    t: f64,
) -> Result<FieldSample> {
    let h = fd_step(spec);
    if rho <= h {
        return Err(Error::StepUnderflow { rho, step: h });
    }
    let wn = spec.wavenumbers();
    let a = vector_potential(spec, amp, rho, phi, z, t);
    let e_field = a.scale(Complex64::new(0.0, wn.omega)).re();
    let (x, y) = (rho * phi.cos(), rho * phi.sin());
    let g = real_potential_jacobian(spec, amp, x, y, z, t, h);
    Ok(FieldSample {
        a_complex: a,
        e_field,
        b_field: curl_from_jacobian(&g),
    })
}
