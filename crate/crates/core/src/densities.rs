//! Canonical and Belinfante momentum / angular-momentum densities,
//! superkicks, and the field-based numerical cross-check.
//!
//! Paraxial quantities (J_z, S_z, n_gamma, P_phi, off-axis kick) include the
//! Gaussian envelope; the exact-beam longitudinal momentum uses the pure
//! Bessel profile. Every closed form here is cross-checked against
//! `density_from_fields`, which time-averages eps0 E x B or eps0 E.(grad)A
//! built from the exact vector potential.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::beams::{
    curl_from_jacobian, fd_step, jn, real_potential_jacobian, vector_potential, Amplitude, BeamSpec,
};
use crate::constants::{HBAR, VACUUM_PERMEABILITY, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};
use crate::grid::{linspace, map_grid, map_grid_seq};
use crate::vec3::Vec3;
use num_complex::Complex64;

/// Absolute threshold on the denominator Bessel value below which the
/// Belinfante per-photon kick is reported as a pole. Narrow enough that it
/// only triggers when a zero radius is requested to double precision.
pub const SUPERKICK_POLE_EPS: f64 = 1e-9;

/// Energy-momentum tensor choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorChoice {
    Canonical,
    Belinfante,
}

/// Radial density selected for profile generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Jz,
    Pphi,
    Pz,
    Sz,
    PhotonNumber,
}

impl Quantity {
    /// SI unit string for CSV/JSON output.
    pub fn units(self) -> &'static str {
        match self {
            Quantity::Jz => "N*s/m^2",
            Quantity::Pphi | Quantity::Pz => "kg/(m^2*s)",
            Quantity::Sz => "W/m^2",
            Quantity::PhotonNumber => "1/m^3",
        }
    }

    /// Whether the density differs between the two tensor choices.
    pub fn choice_dependent(self) -> bool {
        matches!(self, Quantity::Jz | Quantity::Pphi | Quantity::Pz)
    }
}

/// Momentum densities available from the field-based oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldQuantity {
    Pz,
    Pphi,
    Jz,
}

/// Radial samples of one density for one tensor choice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityProfile {
    pub rho_grid: Vec<f64>,
    pub values: Vec<f64>,
    pub choice: TensorChoice,
    pub quantity: Quantity,
}

/// Paraxial angular-momentum density, Lz component (N*s/m^2), with the
/// spin projection locked to the helicity.
pub fn jz_density(spec: &BeamSpec, amp: &Amplitude, rho: f64, choice: TensorChoice) -> f64 {
    jz_density_sigma(spec, amp, rho, spec.sigma_z(), choice)
}

/// Paraxial angular-momentum density with an independent spin projection
/// sigma_z in [-1, 1] (the orbital index stays ell = m_gamma - Lambda).
///
/// The Belinfante correction -(sigma/2rho) d(rho^2 |u|^2)/drho is expanded
/// to its regular form sigma(|u|^2 + (rho/2) d|u|^2/drho), finite at rho = 0.
pub fn jz_density_sigma(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho: f64,
    sigma_z: f64,
    choice: TensorChoice,
) -> f64 {
    let wn = spec.wavenumbers();
    let ell = spec.oam_index() as f64;
    let sample = crate::beams::envelope_u(spec, amp, rho);
    let u2 = sample.u_sq();
    let half_eps_omega = 0.5 * VACUUM_PERMITTIVITY * wn.omega;
    match choice {
        TensorChoice::Canonical => half_eps_omega * (ell + sigma_z) * u2,
        TensorChoice::Belinfante => {
            half_eps_omega * (ell * u2 - sigma_z * 0.5 * rho * sample.du2_drho)
        }
    }
}

/// Paraxial Poynting flux z-component (W/m^2); polarization sigma_z = Lambda.
pub fn sz_poynting(spec: &BeamSpec, amp: &Amplitude, rho: f64) -> f64 {
    let wn = spec.wavenumbers();
    let j = jn(spec.oam_index(), wn.kappa * rho);
    let env = spec.envelope(rho);
    wn.omega * wn.k * amp.a0 * amp.a0 / (2.0 * VACUUM_PERMEABILITY) * j * j * env * env
}

/// Azimuthal momentum density (kg/(m^2*s)); both tensor choices carry the
/// envelope as an overall intensity factor.
pub fn pphi_density(spec: &BeamSpec, amp: &Amplitude, rho: f64, choice: TensorChoice) -> f64 {
    let wn = spec.wavenumbers();
    let m = spec.total_am;
    let lam = spec.helicity.lambda();
    let x = wn.kappa * rho;
    let env = spec.envelope(rho);
    let env2 = env * env;
    let scale = 0.5 * VACUUM_PERMITTIVITY * wn.omega * amp.a0 * amp.a0 * env2;
    match choice {
        TensorChoice::Canonical => {
            if rho == 0.0 {
                // J_{m-L}^2 / rho -> 0 for ell != 0, and the ell = 0 mode
                // carries no orbital current
                0.0
            } else {
                let j = jn(m - lam, x);
                scale * (m - lam) as f64 * j * j / rho
            }
        }
        TensorChoice::Belinfante => scale * wn.kappa * jn(m, x) * jn(m - lam, x),
    }
}

/// Photon number density (1/m^3).
pub fn photon_number_density(spec: &BeamSpec, amp: &Amplitude, rho: f64) -> f64 {
    let wn = spec.wavenumbers();
    let j = jn(spec.oam_index(), wn.kappa * rho);
    let env = spec.envelope(rho);
    0.5 * VACUUM_PERMITTIVITY * wn.omega * amp.a0 * amp.a0 / HBAR * j * j * env * env
}

/// Per-photon azimuthal momentum transfer (kg*m/s) at radius rho.
///
/// Canonical: ell hbar / rho. Belinfante: hbar kappa J_m / J_{m-Lambda};
/// the ratio diverges at zeros of the denominator, reported as `Error::Pole`.
pub fn superkick(spec: &BeamSpec, rho: f64, choice: TensorChoice) -> Result<f64> {
    if !(rho.is_finite() && rho > 0.0) {
        return Err(Error::Domain(format!(
            "superkick requires rho > 0, got {rho}"
        )));
    }
    let wn = spec.wavenumbers();
    match choice {
        TensorChoice::Canonical => Ok(spec.oam_index() as f64 * HBAR / rho),
        TensorChoice::Belinfante => {
            let x = wn.kappa * rho;
            let den = jn(spec.oam_index(), x);
            if den.abs() < SUPERKICK_POLE_EPS {
                return Err(Error::Pole { rho });
            }
            Ok(HBAR * wn.kappa * jn(spec.total_am, x) / den)
        }
    }
}

/// Azimuthal kick density for a generic paraxial intensity profile
/// (kg/(m^2*s)), spin projection locked to the helicity.
pub fn offaxis_kick_density(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho: f64,
    choice: TensorChoice,
) -> f64 {
    offaxis_kick_density_sigma(spec, amp, rho, spec.sigma_z(), choice)
}

/// Azimuthal kick density with an independent spin projection sigma.
///
/// Time-averaged like every other density here, so that for a pure Bessel
/// profile with sigma = Lambda it coincides with `pphi_density`.
pub fn offaxis_kick_density_sigma(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho: f64,
    sigma: f64,
    choice: TensorChoice,
) -> f64 {
    let wn = spec.wavenumbers();
    let ell = spec.oam_index() as f64;
    let sample = crate::beams::envelope_u(spec, amp, rho);
    let orbital = if rho > 0.0 {
        0.5 * VACUUM_PERMITTIVITY * wn.omega * ell * sample.u_sq() / rho
    } else {
        // |u|^2/rho -> 0 on the axis for every ell with a nonzero ell factor
        0.0
    };
    match choice {
        TensorChoice::Canonical => orbital,
        TensorChoice::Belinfante => {
            orbital - 0.25 * VACUUM_PERMITTIVITY * wn.omega * sigma * sample.du2_drho
        }
    }
}

/// Longitudinal momentum density of the exact Bessel beam (kg/(m^2*s));
/// the envelope is ignored here, following the exact-beam treatment.
pub fn pz_density(spec: &BeamSpec, amp: &Amplitude, rho: f64, choice: TensorChoice) -> f64 {
    let wn = spec.wavenumbers();
    let m = spec.total_am;
    let lam = spec.helicity.lambda();
    let x = wn.kappa * rho;
    let half = 0.5 * spec.pitch_angle;
    let cos4 = half.cos().powi(4);
    let sin4 = half.sin().powi(4);
    let sin_sq = spec.pitch_angle.sin().powi(2);
    let j_lo = jn(m - lam, x);
    let j_mid = jn(m, x);
    let j_hi = jn(m + lam, x);
    let scale = 0.5 * VACUUM_PERMITTIVITY * wn.omega * amp.a0 * amp.a0;
    match choice {
        TensorChoice::Canonical => {
            scale
                * wn.k_z
                * (cos4 * j_lo * j_lo + sin4 * j_hi * j_hi + 0.5 * sin_sq * j_mid * j_mid)
        }
        TensorChoice::Belinfante => scale * wn.k * (cos4 * j_lo * j_lo - sin4 * j_hi * j_hi),
    }
}

/// Numerical oracle: build E, B, and grad A from the exact vector potential
/// (fourth-order central differences, step lambda/2000), average the chosen
/// momentum density over 64 uniformly spaced times in one optical period,
/// and project.
///
/// Canonical J_z adds the spin term eps0 (E x A)_z to rho times the
/// azimuthal momentum density.
pub fn density_from_fields(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho: f64,
    choice: TensorChoice,
    quantity: FieldQuantity,
) -> Result<f64> {
    let h = fd_step(spec);
    if rho <= h {
        return Err(Error::StepUnderflow { rho, step: h });
    }
    let wn = spec.wavenumbers();
    let phi = 0.3_f64;
    let (x, y, z) = (rho * phi.cos(), rho * phi.sin(), 0.0);
    let phi_hat = Vec3::new(-phi.sin(), phi.cos(), 0.0);
    let period = 2.0 * PI / wn.omega;
    let n_times = 64;

    let mut acc = 0.0;
    for i in 0..n_times {
        let t = i as f64 * period / n_times as f64;
        let phasor = vector_potential(spec, amp, rho, phi, z, t);
        let e = phasor.scale(Complex64::new(0.0, wn.omega)).re();
        let g = real_potential_jacobian(spec, amp, x, y, z, t, h);
        acc += match choice {
            TensorChoice::Belinfante => {
                let b = curl_from_jacobian(&g);
                let exb = e.cross(b);
                match quantity {
                    FieldQuantity::Pz => VACUUM_PERMITTIVITY * exb.z,
                    FieldQuantity::Pphi => VACUUM_PERMITTIVITY * exb.dot(phi_hat),
                    FieldQuantity::Jz => rho * VACUUM_PERMITTIVITY * exb.dot(phi_hat),
                }
            }
            TensorChoice::Canonical => {
                // P_i = eps0 sum_j E^j dA^j/dx_i
                let p = Vec3::new(
                    g[0][0] * e.x + g[0][1] * e.y + g[0][2] * e.z,
                    g[1][0] * e.x + g[1][1] * e.y + g[1][2] * e.z,
                    g[2][0] * e.x + g[2][1] * e.y + g[2][2] * e.z,
                )
                .scale(VACUUM_PERMITTIVITY);
                match quantity {
                    FieldQuantity::Pz => p.z,
                    FieldQuantity::Pphi => p.dot(phi_hat),
                    FieldQuantity::Jz => {
                        let a_real = phasor.re();
                        rho * p.dot(phi_hat) + VACUUM_PERMITTIVITY * e.cross(a_real).z
                    }
                }
            }
        };
    }
    Ok(acc / n_times as f64)
}

fn density_value(
    spec: &BeamSpec,
    amp: &Amplitude,
    quantity: Quantity,
    choice: TensorChoice,
    rho: f64,
) -> f64 {
    match quantity {
        Quantity::Jz => jz_density(spec, amp, rho, choice),
        Quantity::Pphi => pphi_density(spec, amp, rho, choice),
        Quantity::Pz => pz_density(spec, amp, rho, choice),
        Quantity::Sz => sz_poynting(spec, amp, rho),
        Quantity::PhotonNumber => photon_number_density(spec, amp, rho),
    }
}

fn profile_grid(rho_min: f64, rho_max: f64, n_points: usize) -> Result<Vec<f64>> {
    if !(rho_min.is_finite() && rho_max.is_finite()) || rho_min < 0.0 || rho_min >= rho_max {
        return Err(Error::Config(format!(
            "profile grid requires 0 <= rho_min < rho_max, got [{rho_min}, {rho_max}]"
        )));
    }
    if n_points < 2 {
        return Err(Error::Config(format!(
            "profile grid requires n_points >= 2, got {n_points}"
        )));
    }
    Ok(linspace(rho_min, rho_max, n_points))
}

/// Uniform-grid evaluation of a closed-form density. Grid points are
/// evaluated concurrently when the `parallel` feature is enabled; the
/// output is assembled by index and does not depend on evaluation order.
pub fn profile(
    spec: &BeamSpec,
    amp: &Amplitude,
    quantity: Quantity,
    choice: TensorChoice,
    rho_min: f64,
    rho_max: f64,
    n_points: usize,
) -> Result<DensityProfile> {
    let grid = profile_grid(rho_min, rho_max, n_points)?;
    let values = map_grid(&grid, |rho| density_value(spec, amp, quantity, choice, rho));
    Ok(DensityProfile {
        rho_grid: grid,
        values,
        choice,
        quantity,
    })
}

/// Sequential counterpart of `profile`; bitwise-identical output.
pub fn profile_seq(
    spec: &BeamSpec,
    amp: &Amplitude,
    quantity: Quantity,
    choice: TensorChoice,
    rho_min: f64,
    rho_max: f64,
    n_points: usize,
) -> Result<DensityProfile> {
    let grid = profile_grid(rho_min, rho_max, n_points)?;
    let values = map_grid_seq(&grid, |rho| density_value(spec, amp, quantity, choice, rho));
    Ok(DensityProfile {
        rho_grid: grid,
        values,
        choice,
        quantity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beams::{envelope_u, normalize_amplitude, Helicity};
    use crate::constants::SPEED_OF_LIGHT;
    use crate::numerics;
    use crate::specfun::bessel_j_zero;
    use approx::assert_relative_eq;

    fn lcg(state: &mut u64) -> f64 {
        *state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (*state >> 11) as f64 / (1u64 << 53) as f64
    }

    fn beam(m: i32, helicity: Helicity, theta: f64, w0: Option<f64>) -> BeamSpec {
        BeamSpec::new(729e-9, theta, m, helicity, w0, 4e-3).unwrap()
    }

    fn reference_beam() -> (BeamSpec, Amplitude) {
        let spec = beam(2, Helicity::Plus, 0.1, Some(7.29e-6));
        let amp = normalize_amplitude(&spec).unwrap();
        (spec, amp)
    }

    #[test]
    fn canonical_jz_vanishes_for_zero_total_am() {
        // m_gamma = 0, Lambda = +1 -> ell = -1, ell + sigma = 0
        let spec = beam(0, Helicity::Plus, 0.1, Some(7.29e-6));
        let amp = normalize_amplitude(&spec).unwrap();
        for i in 1..40 {
            let rho = i as f64 * 0.3e-6;
            assert_eq!(jz_density(&spec, &amp, rho, TensorChoice::Canonical), 0.0);
        }
    }

    #[test]
    fn canonical_jz_carries_the_sign_of_the_total() {
        // m_gamma = -1, Lambda = +1: ell + sigma = -1, density <= 0 everywhere
        let spec = beam(-1, Helicity::Plus, 0.1, Some(7.29e-6));
        let amp = normalize_amplitude(&spec).unwrap();
        for &rho in &linspace(0.0, 4.0 * spec.envelope_width.unwrap(), 500) {
            assert!(jz_density(&spec, &amp, rho, TensorChoice::Canonical) <= 0.0);
        }
    }

    #[test]
    fn canonical_jz_never_negative_and_belinfante_swirls_backwards() {
        for m in [1, 2] {
            let spec = beam(m, Helicity::Plus, 0.1, Some(7.29e-6));
            let amp = normalize_amplitude(&spec).unwrap();
            let w0 = spec.envelope_width.unwrap();
            let grid = linspace(0.0, 4.0 * w0, 2000);
            let mut any_negative = false;
            for &rho in &grid {
                assert!(jz_density(&spec, &amp, rho, TensorChoice::Canonical) >= 0.0);
                if jz_density(&spec, &amp, rho, TensorChoice::Belinfante) < 0.0 {
                    any_negative = true;
                }
            }
            assert!(
                any_negative,
                "m_gamma = {m} should counter-rotate somewhere"
            );
        }
    }

    #[test]
    fn first_belinfante_sign_change_sits_on_the_mode_zero() {
        // the sign flip of the Belinfante density lands on the first zero
        // of J_ell, where the intensity minimum is crossed
        for (m, zero_order) in [(1, 0), (2, 1)] {
            let spec = beam(m, Helicity::Plus, 0.1, Some(7.29e-6));
            let amp = normalize_amplitude(&spec).unwrap();
            let wn = spec.wavenumbers();
            let f = |rho: f64| jz_density(&spec, &amp, rho, TensorChoice::Belinfante);
            let grid = linspace(1e-9, 4.0 * spec.envelope_width.unwrap(), 4000);
            let mut bracket = None;
            for pair in grid.windows(2) {
                if f(pair[0]).signum() != f(pair[1]).signum() {
                    bracket = Some((pair[0], pair[1]));
                    break;
                }
            }
            let (lo, hi) = bracket.expect("sign change exists");
            let root = numerics::bisect(f, lo, hi, 1e-12);
            let expected = bessel_j_zero(zero_order, 1) / wn.kappa;
            assert_relative_eq!(root, expected, max_relative = 1e-6);
            // density is genuinely negative just past the flip
            assert!(f(root * 1.02) < 0.0);
        }
    }

    #[test]
    fn belinfante_minus_canonical_is_the_total_derivative_term() {
        let (spec, amp) = reference_beam();
        let wn = spec.wavenumbers();
        let mut state = 3u64;
        for _ in 0..40 {
            let rho = 0.05e-6 + 25e-6 * lcg(&mut state);
            let diff = jz_density(&spec, &amp, rho, TensorChoice::Belinfante)
                - jz_density(&spec, &amp, rho, TensorChoice::Canonical);
            let sample = envelope_u(&spec, &amp, rho);
            // -(eps0 omega sigma / 4 rho) d(rho^2 |u|^2)/drho, regular form
            let expected = -0.5
                * VACUUM_PERMITTIVITY
                * wn.omega
                * spec.sigma_z()
                * (sample.u_sq() + 0.5 * rho * sample.du2_drho);
            assert_relative_eq!(diff, expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn pure_bessel_belinfante_jz_is_radius_times_pphi() {
        // two independent Bessel routes: (J_ell, J_ell') in the derivative
        // form vs (J_m, J_ell) in the product form
        let spec = beam(2, Helicity::Plus, 0.3, None);
        let amp = Amplitude { a0: 3e-10 };
        let mut state = 31u64;
        for _ in 0..40 {
            let rho = 0.1e-6 + 15e-6 * lcg(&mut state);
            let jz = jz_density(&spec, &amp, rho, TensorChoice::Belinfante);
            let product = rho * pphi_density(&spec, &amp, rho, TensorChoice::Belinfante);
            let scale = jz_density(&spec, &amp, rho, TensorChoice::Canonical).abs();
            assert!(
                (jz - product).abs() <= 1e-12 * scale.max(1e-300),
                "rho {rho:.4e}: {jz:.6e} vs {product:.6e}"
            );
        }
    }

    #[test]
    fn envelope_correction_between_jz_and_rho_pphi() {
        // with the Gaussian on, the derivative form exceeds the product form
        // by (eps0 omega / 2) sigma (2 rho^2 / w0^2) |u|^2
        let (spec, amp) = reference_beam();
        let wn = spec.wavenumbers();
        let w0 = spec.envelope_width.unwrap();
        let mut state = 37u64;
        for _ in 0..40 {
            let rho = 0.1e-6 + 20e-6 * lcg(&mut state);
            let jz = jz_density(&spec, &amp, rho, TensorChoice::Belinfante);
            let product = rho * pphi_density(&spec, &amp, rho, TensorChoice::Belinfante);
            let u2 = envelope_u(&spec, &amp, rho).u_sq();
            let correction = 0.5
                * VACUUM_PERMITTIVITY
                * wn.omega
                * spec.sigma_z()
                * (2.0 * rho * rho / (w0 * w0))
                * u2;
            let scale = jz_density(&spec, &amp, rho, TensorChoice::Canonical)
                .abs()
                .max(1e-300);
            assert!(
                (jz - product - correction).abs() <= 1e-12 * scale,
                "rho {rho:.4e}"
            );
        }
    }

    #[test]
    fn jz_is_regular_on_the_axis() {
        // ell = 0 beam: the Belinfante correction limit is sigma |u(0)|^2
        let spec = beam(1, Helicity::Plus, 0.1, Some(7.29e-6));
        let amp = normalize_amplitude(&spec).unwrap();
        let wn = spec.wavenumbers();
        let u0 = envelope_u(&spec, &amp, 0.0).u_sq();
        let on_axis = jz_density(&spec, &amp, 0.0, TensorChoice::Belinfante);
        // (l + s)|u|^2 - s|u|^2 = 0 for l = 0, s = 1
        assert_eq!(on_axis, 0.0);
        let canonical = jz_density(&spec, &amp, 0.0, TensorChoice::Canonical);
        assert_relative_eq!(
            canonical,
            0.5 * VACUUM_PERMITTIVITY * wn.omega * u0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn sz_vanishes_at_mode_zeros_and_carries_the_envelope() {
        let (spec, amp) = reference_beam();
        let wn = spec.wavenumbers();
        let rho_zero = bessel_j_zero(1, 1) / wn.kappa;
        let peak = sz_poynting(&spec, &amp, 2e-6);
        assert!(sz_poynting(&spec, &amp, rho_zero).abs() < 1e-28 * peak.abs().max(1.0));

        // at rho = w0 the enveloped value is e^-2 times the bare Bessel value
        let w0 = spec.envelope_width.unwrap();
        let bare = beam(2, Helicity::Plus, 0.1, None);
        let ratio = sz_poynting(&spec, &amp, w0) / sz_poynting(&bare, &amp, w0);
        assert_relative_eq!(ratio, (-2.0f64).exp(), max_relative = 1e-12);
    }

    #[test]
    fn sz_integrates_back_to_the_beam_power() {
        let (spec, amp) = reference_beam();
        let w0 = spec.envelope_width.unwrap();
        let total = numerics::integrate(
            |rho| sz_poynting(&spec, &amp, rho) * 2.0 * PI * rho,
            0.0,
            6.0 * w0,
            1e-10,
        );
        assert_relative_eq!(total, 4e-3, max_relative = 1e-8);
    }

    #[test]
    fn canonical_pphi_vanishes_for_pure_spin_modes() {
        // m_gamma = Lambda -> ell = 0
        let spec = beam(1, Helicity::Plus, 0.1, Some(7.29e-6));
        let amp = normalize_amplitude(&spec).unwrap();
        for i in 0..30 {
            let rho = i as f64 * 0.4e-6;
            assert_eq!(pphi_density(&spec, &amp, rho, TensorChoice::Canonical), 0.0);
        }
    }

    #[test]
    fn belinfante_pphi_vanishes_where_j_m_does_but_canonical_does_not() {
        let (spec, amp) = reference_beam();
        let wn = spec.wavenumbers();
        // first zero of J_2 (x = 5.136) lies between J_1 zeros 3.832 and 7.016
        let rho = bessel_j_zero(2, 1) / wn.kappa;
        let bel = pphi_density(&spec, &amp, rho, TensorChoice::Belinfante);
        let can = pphi_density(&spec, &amp, rho, TensorChoice::Canonical);
        assert!(can > 0.0);
        assert!(bel.abs() < 1e-12 * can);
    }

    #[test]
    fn pphi_per_photon_is_the_canonical_superkick() {
        let (spec, amp) = reference_beam();
        let ell = spec.oam_index() as f64;
        let mut state = 17u64;
        for _ in 0..30 {
            let rho = 0.1e-6 + 20e-6 * lcg(&mut state);
            let ratio = pphi_density(&spec, &amp, rho, TensorChoice::Canonical)
                / photon_number_density(&spec, &amp, rho);
            assert_relative_eq!(ratio, ell * HBAR / rho, max_relative = 1e-12);
        }
    }

    #[test]
    fn photon_number_is_energy_flux_per_photon() {
        let (spec, amp) = reference_beam();
        let wn = spec.wavenumbers();
        let mut state = 29u64;
        for _ in 0..30 {
            let rho = 0.1e-6 + 20e-6 * lcg(&mut state);
            let n = photon_number_density(&spec, &amp, rho);
            let s = sz_poynting(&spec, &amp, rho);
            if s > 0.0 {
                assert_relative_eq!(
                    n,
                    s / (HBAR * wn.omega * SPEED_OF_LIGHT),
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn photon_number_scales_linearly_with_power() {
        let spec1 = beam(2, Helicity::Plus, 0.1, Some(7.29e-6));
        let mut spec2 = spec1.clone();
        spec2.power = 8e-3;
        let a1 = normalize_amplitude(&spec1).unwrap();
        let a2 = normalize_amplitude(&spec2).unwrap();
        let ratio =
            photon_number_density(&spec2, &a2, 2e-6) / photon_number_density(&spec1, &a1, 2e-6);
        assert_relative_eq!(ratio, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn canonical_superkick_values() {
        let (spec, _) = reference_beam(); // ell = 1
        let kick = superkick(&spec, 1e-6, TensorChoice::Canonical).unwrap();
        assert_relative_eq!(kick, HBAR / 1e-6, max_relative = 1e-15);
        // the quoted magnitude: 1.0546e-28 kg*m/s
        assert!((kick - 1.0546e-28).abs() / 1.0546e-28 < 1e-4);

        let spin_only = beam(1, Helicity::Plus, 0.1, Some(7.29e-6)); // ell = 0
        for i in 1..20 {
            let rho = i as f64 * 0.5e-6;
            assert_eq!(
                superkick(&spin_only, rho, TensorChoice::Canonical).unwrap(),
                0.0
            );
        }
    }

    #[test]
    fn canonical_superkick_exact_at_random_radii() {
        let (spec, _) = reference_beam();
        let ell = spec.oam_index() as f64;
        let mut state = 5u64;
        for _ in 0..100 {
            let rho = 1e-8 + 40e-6 * lcg(&mut state);
            let kick = superkick(&spec, rho, TensorChoice::Canonical).unwrap();
            assert_relative_eq!(kick * rho, ell * HBAR, max_relative = 1e-15);
        }
    }

    #[test]
    fn belinfante_superkick_small_argument_limit() {
        // J_2/J_1 -> x/4, so the kick tends to hbar kappa (kappa rho)/4;
        // leading-order series oracle: (x/2)^2/2! over (x/2)/1!
        let (spec, _) = reference_beam();
        let wn = spec.wavenumbers();
        let rho = 1e-4 / wn.kappa;
        let kick = superkick(&spec, rho, TensorChoice::Belinfante).unwrap();
        let x = wn.kappa * rho;
        let oracle = HBAR * wn.kappa * (0.5 * x).powi(2) / 2.0 / (0.5 * x);
        assert_relative_eq!(kick, oracle, max_relative = 1e-6);
    }

    #[test]
    fn belinfante_superkick_pole_and_divergence() {
        let (spec, _) = reference_beam();
        let wn = spec.wavenumbers();
        let rho_zero = bessel_j_zero(1, 1) / wn.kappa;
        assert!(matches!(
            superkick(&spec, rho_zero, TensorChoice::Belinfante),
            Err(Error::Pole { .. })
        ));
        // just off the pole the kick is huge but finite
        let near = superkick(&spec, rho_zero + 1e-3 * 729e-9, TensorChoice::Belinfante).unwrap();
        assert!(near.is_finite());
        assert!(near.abs() > 1e3 * HBAR * wn.kappa);
    }

    #[test]
    fn superkick_requires_positive_radius() {
        let (spec, _) = reference_beam();
        assert!(superkick(&spec, 0.0, TensorChoice::Canonical).is_err());
        assert!(superkick(&spec, -1e-6, TensorChoice::Belinfante).is_err());
    }

    #[test]
    fn offaxis_choices_agree_at_intensity_maxima() {
        let (spec, amp) = reference_beam();
        let f = |rho: f64| envelope_u(&spec, &amp, rho).du2_drho;
        // bracket the first few interior maxima of |u|^2
        let grid = linspace(0.2e-6, 15e-6, 3000);
        let mut maxima = Vec::new();
        for pair in grid.windows(2) {
            if f(pair[0]) > 0.0 && f(pair[1]) <= 0.0 {
                maxima.push(numerics::bisect(f, pair[0], pair[1], 1e-14));
            }
        }
        assert!(!maxima.is_empty());
        for rho in maxima {
            let can = offaxis_kick_density(&spec, &amp, rho, TensorChoice::Canonical);
            let bel = offaxis_kick_density(&spec, &amp, rho, TensorChoice::Belinfante);
            assert_relative_eq!(can, bel, max_relative = 1e-9);
        }
    }

    #[test]
    fn offaxis_choices_coincide_for_unpolarized_mix() {
        let (spec, amp) = reference_beam();
        for i in 1..50 {
            let rho = i as f64 * 0.3e-6;
            let can = offaxis_kick_density_sigma(&spec, &amp, rho, 0.0, TensorChoice::Canonical);
            let bel = offaxis_kick_density_sigma(&spec, &amp, rho, 0.0, TensorChoice::Belinfante);
            assert_eq!(can, bel);
        }
    }

    #[test]
    fn offaxis_reduces_to_pphi_for_pure_bessel() {
        let spec = beam(2, Helicity::Plus, 0.1, None);
        let amp = Amplitude { a0: 2.5e-10 };
        let mut state = 23u64;
        for _ in 0..30 {
            let rho = 0.2e-6 + 20e-6 * lcg(&mut state);
            for choice in [TensorChoice::Canonical, TensorChoice::Belinfante] {
                let kick = offaxis_kick_density(&spec, &amp, rho, choice);
                let pphi = pphi_density(&spec, &amp, rho, choice);
                assert_relative_eq!(kick, pphi, max_relative = 1e-11);
            }
        }
    }

    #[test]
    fn canonical_pz_is_never_negative() {
        for (m, hel, theta) in [
            (2, Helicity::Plus, 0.5),
            (1, Helicity::Plus, 0.3),
            (1, Helicity::Minus, 0.8),
            (3, Helicity::Minus, 0.2),
        ] {
            let spec = beam(m, hel, theta, None);
            let amp = Amplitude { a0: 1e-10 };
            for &rho in &linspace(0.0, 20e-6, 5000) {
                assert!(pz_density(&spec, &amp, rho, TensorChoice::Canonical) >= 0.0);
            }
        }
    }

    #[test]
    fn belinfante_pz_at_mode_zero_is_the_negative_remainder() {
        let spec = beam(2, Helicity::Plus, 0.5, None);
        let amp = Amplitude { a0: 1e-10 };
        let wn = spec.wavenumbers();
        let rho = bessel_j_zero(1, 1) / wn.kappa;
        let bel = pz_density(&spec, &amp, rho, TensorChoice::Belinfante);
        let sin4 = (0.25f64).sin().powi(4);
        let j3 = jn(3, wn.kappa * rho);
        let expected =
            -0.5 * VACUUM_PERMITTIVITY * wn.omega * wn.k * amp.a0 * amp.a0 * sin4 * j3 * j3;
        assert_relative_eq!(bel, expected, max_relative = 1e-10);
        assert!(bel < 0.0);
    }

    #[test]
    fn pz_choices_agree_paraxially_at_intensity_maxima() {
        let spec = beam(2, Helicity::Plus, 0.01, None);
        let amp = Amplitude { a0: 1e-10 };
        let wn = spec.wavenumbers();
        // first two maxima of J_1^2
        for x_peak in [1.8412, 5.3314] {
            let rho = x_peak / wn.kappa;
            let can = pz_density(&spec, &amp, rho, TensorChoice::Canonical);
            let bel = pz_density(&spec, &amp, rho, TensorChoice::Belinfante);
            assert!((can - bel).abs() / can <= 1e-3);
        }
    }

    #[test]
    fn field_oracle_matches_exact_pz_closed_forms() {
        let spec = beam(2, Helicity::Plus, 0.2, None);
        let amp = Amplitude { a0: 2e-10 };
        for rho in [0.8e-6, 2.1e-6, 4.4e-6] {
            let num_bel = density_from_fields(
                &spec,
                &amp,
                rho,
                TensorChoice::Belinfante,
                FieldQuantity::Pz,
            )
            .unwrap();
            let num_can =
                density_from_fields(&spec, &amp, rho, TensorChoice::Canonical, FieldQuantity::Pz)
                    .unwrap();
            assert_relative_eq!(
                num_bel,
                pz_density(&spec, &amp, rho, TensorChoice::Belinfante),
                max_relative = 1e-6
            );
            assert_relative_eq!(
                num_can,
                pz_density(&spec, &amp, rho, TensorChoice::Canonical),
                max_relative = 1e-4
            );
        }
    }

    #[test]
    fn field_oracle_matches_paraxial_pphi_away_from_zeros() {
        let spec = beam(2, Helicity::Plus, 0.01, None);
        let amp = Amplitude { a0: 1e-10 };
        let wn = spec.wavenumbers();
        for x in [1.0, 2.0, 5.0] {
            let rho = x / wn.kappa;
            let num = density_from_fields(
                &spec,
                &amp,
                rho,
                TensorChoice::Canonical,
                FieldQuantity::Pphi,
            )
            .unwrap();
            let closed = pphi_density(&spec, &amp, rho, TensorChoice::Canonical);
            assert_relative_eq!(num, closed, max_relative = 1e-4);

            let num_bel = density_from_fields(
                &spec,
                &amp,
                rho,
                TensorChoice::Belinfante,
                FieldQuantity::Pphi,
            )
            .unwrap();
            let closed_bel = pphi_density(&spec, &amp, rho, TensorChoice::Belinfante);
            assert_relative_eq!(num_bel, closed_bel, max_relative = 1e-4);
        }
    }

    #[test]
    fn field_oracle_matches_paraxial_jz() {
        // theta = 0.05 in the outer lobes, where the paraxial error stays
        // below the 1e-3 target
        let spec = beam(2, Helicity::Plus, 0.05, None);
        let amp = Amplitude { a0: 1e-10 };
        for rho in [4.8e-6, 5.2e-6, 5.6e-6] {
            let num =
                density_from_fields(&spec, &amp, rho, TensorChoice::Canonical, FieldQuantity::Jz)
                    .unwrap();
            let closed = jz_density(&spec, &amp, rho, TensorChoice::Canonical);
            assert_relative_eq!(num, closed, max_relative = 1e-3);
        }
    }

    #[test]
    fn field_oracle_respects_the_step_limit() {
        let spec = beam(2, Helicity::Plus, 0.2, None);
        let amp = Amplitude { a0: 1e-10 };
        assert!(matches!(
            density_from_fields(
                &spec,
                &amp,
                1e-11,
                TensorChoice::Canonical,
                FieldQuantity::Pz
            ),
            Err(Error::StepUnderflow { .. })
        ));
    }

    #[test]
    fn integral_equality_and_per_photon_total() {
        let (spec, amp) = reference_beam();
        let w0 = spec.envelope_width.unwrap();
        let total = |choice: TensorChoice| {
            numerics::integrate(
                |rho| jz_density(&spec, &amp, rho, choice) * 2.0 * PI * rho,
                0.0,
                6.0 * w0,
                1e-9,
            )
        };
        let can = total(TensorChoice::Canonical);
        let bel = total(TensorChoice::Belinfante);
        assert_relative_eq!(can, bel, max_relative = 1e-6);

        let photons = numerics::integrate(
            |rho| photon_number_density(&spec, &amp, rho) * 2.0 * PI * rho,
            0.0,
            6.0 * w0,
            1e-9,
        );
        assert_relative_eq!(can / photons, 2.0 * HBAR, max_relative = 1e-9);
    }

    #[test]
    fn profile_generation_and_validation() {
        let (spec, amp) = reference_beam();
        let p = profile(
            &spec,
            &amp,
            Quantity::Jz,
            TensorChoice::Belinfante,
            0.0,
            2e-5,
            256,
        )
        .unwrap();
        assert_eq!(p.rho_grid.len(), 256);
        assert_eq!(p.values.len(), 256);
        assert_eq!(p.rho_grid[0], 0.0);
        assert_eq!(*p.rho_grid.last().unwrap(), 2e-5);
        // spot check against the direct call
        let mid = 128;
        assert_eq!(
            p.values[mid],
            jz_density(&spec, &amp, p.rho_grid[mid], TensorChoice::Belinfante)
        );

        // near-degenerate two-point grid is legal
        let tiny = profile(
            &spec,
            &amp,
            Quantity::Sz,
            TensorChoice::Canonical,
            1e-6,
            1.0000001e-6,
            2,
        )
        .unwrap();
        assert_eq!(tiny.values.len(), 2);

        assert!(profile(
            &spec,
            &amp,
            Quantity::Jz,
            TensorChoice::Canonical,
            0.0,
            1e-6,
            1
        )
        .is_err());
        assert!(profile(
            &spec,
            &amp,
            Quantity::Jz,
            TensorChoice::Canonical,
            2e-6,
            1e-6,
            8
        )
        .is_err());
        assert!(profile(
            &spec,
            &amp,
            Quantity::Jz,
            TensorChoice::Canonical,
            -1e-6,
            1e-6,
            8
        )
        .is_err());
    }

    #[test]
    fn parallel_profile_is_bitwise_equal_to_sequential() {
        let (spec, amp) = reference_beam();
        for quantity in [Quantity::Jz, Quantity::Pphi, Quantity::Pz, Quantity::Sz] {
            let a = profile(
                &spec,
                &amp,
                quantity,
                TensorChoice::Belinfante,
                0.0,
                3e-5,
                1001,
            )
            .unwrap();
            let b = profile_seq(
                &spec,
                &amp,
                quantity,
                TensorChoice::Belinfante,
                0.0,
                3e-5,
                1001,
            )
            .unwrap();
            assert_eq!(a.values, b.values);
            assert_eq!(a.rho_grid, b.rho_grid);
        }
    }
}
