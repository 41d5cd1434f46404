//! Mechanical observables: hollow-cylinder torques and spin-up, the two-ion
//! rotor, off-axis particle revolution, and longitudinal radiation forces
//! with tractor-region detection.

use serde::Serialize;
use std::f64::consts::PI;

use crate::beams::{Amplitude, BeamSpec};
use crate::constants::SPEED_OF_LIGHT;
use crate::densities::{
    jz_density, offaxis_kick_density, pphi_density, pz_density, superkick, TensorChoice,
};
use crate::error::{Error, Result};
use crate::grid::{linspace, map_grid};
use crate::numerics;

/// Hollow cylinder coaxial with the beam.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CylinderSpec {
    /// Mean radius rho (m).
    pub mean_radius: f64,
    /// Wall thickness delta rho (m).
    pub wall_thickness: f64,
    /// Length along the beam axis (m).
    pub length: f64,
    /// Mass density of the shell material (kg/m^3).
    pub mass_density: f64,
}

impl CylinderSpec {
    pub fn new(
        mean_radius: f64,
        wall_thickness: f64,
        length: f64,
        mass_density: f64,
    ) -> Result<Self> {
        for (name, v) in [
            ("mean_radius", mean_radius),
            ("wall_thickness", wall_thickness),
            ("length", length),
            ("mass_density", mass_density),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidSpec(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if wall_thickness >= 2.0 * mean_radius {
            return Err(Error::InvalidSpec(format!(
                "wall thickness {wall_thickness} must be smaller than the diameter {}",
                2.0 * mean_radius
            )));
        }
        Ok(Self {
            mean_radius,
            wall_thickness,
            length,
            mass_density,
        })
    }
}

/// Two-ion rotor driven by one azimuthal kick per excited-state lifetime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RotorSpec {
    /// Ion mass (kg).
    pub ion_mass: f64,
    /// Arm radius: distance of each ion from the rotor center (m).
    pub arm_radius: f64,
    /// Excited-state lifetime T (s).
    pub excited_lifetime: f64,
}

impl RotorSpec {
    pub fn new(ion_mass: f64, arm_radius: f64, excited_lifetime: f64) -> Result<Self> {
        for (name, v) in [
            ("ion_mass", ion_mass),
            ("arm_radius", arm_radius),
            ("excited_lifetime", excited_lifetime),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidSpec(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(Self {
            ion_mass,
            arm_radius,
            excited_lifetime,
        })
    }
}

/// Small absorbing test particle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParticleSpec {
    /// Absorption cross section (m^2).
    pub cross_section: f64,
    /// Linear drag coefficient (N*s/m), for terminal-velocity revolution.
    pub drag_coefficient: Option<f64>,
}

impl ParticleSpec {
    pub fn new(cross_section: f64, drag_coefficient: Option<f64>) -> Result<Self> {
        if !(cross_section.is_finite() && cross_section > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "cross section must be positive, got {cross_section}"
            )));
        }
        if let Some(g) = drag_coefficient {
            if !(g.is_finite() && g > 0.0) {
                return Err(Error::InvalidSpec(format!(
                    "drag coefficient must be positive, got {g}"
                )));
            }
        }
        Ok(Self {
            cross_section,
            drag_coefficient,
        })
    }
}

/// Fixed unit strings used by scenario outputs.
pub mod units {
    pub const NEWTON_METER: &str = "N*m";
    pub const RAD_PER_S2: &str = "rad/s^2";
    pub const HERTZ: &str = "Hz";
    pub const NEWTON: &str = "N";
    pub const KG_M2: &str = "kg*m^2";
    pub const RAD_PER_S: &str = "rad/s";
}

/// Named scalar output of a mechanics scenario.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioResult {
    pub name: String,
    pub value: f64,
    pub units: &'static str,
    pub tensor_choice: TensorChoice,
}

impl ScenarioResult {
    pub fn new(name: &str, value: f64, units: &'static str, choice: TensorChoice) -> Self {
        Self {
            name: name.to_string(),
            value,
            units,
            tensor_choice: choice,
        }
    }
}

/// Angular momentum density entering the absorbed-torque formula.
///
/// Canonical: the paraxial density with orbital and spin parts. Belinfante:
/// radius times the azimuthal momentum density, which is the definition of
/// the symmetric-tensor angular momentum (no explicit spin term).
fn absorbed_jz(spec: &BeamSpec, amp: &Amplitude, rho: f64, choice: TensorChoice) -> f64 {
    match choice {
        TensorChoice::Canonical => jz_density(spec, amp, rho, TensorChoice::Canonical),
        TensorChoice::Belinfante => rho * pphi_density(spec, amp, rho, TensorChoice::Belinfante),
    }
}

/// Torque on the front face from full absorption, thin-wall form:
/// tau = (2 pi rho delta rho) c <Jz> at the mean radius (N*m).
pub fn cylinder_torque(
    spec: &BeamSpec,
    amp: &Amplitude,
    cyl: &CylinderSpec,
    choice: TensorChoice,
) -> f64 {
    let area = 2.0 * PI * cyl.mean_radius * cyl.wall_thickness;
    area * SPEED_OF_LIGHT * absorbed_jz(spec, amp, cyl.mean_radius, choice)
}

/// Torque with the annulus integrated instead of the thin-wall evaluation.
pub fn cylinder_torque_annular(
    spec: &BeamSpec,
    amp: &Amplitude,
    cyl: &CylinderSpec,
    choice: TensorChoice,
) -> f64 {
    let lo = cyl.mean_radius - 0.5 * cyl.wall_thickness;
    let hi = cyl.mean_radius + 0.5 * cyl.wall_thickness;
    SPEED_OF_LIGHT
        * numerics::integrate(
            |rho| absorbed_jz(spec, amp, rho, choice) * 2.0 * PI * rho,
            lo.max(0.0),
            hi,
            1e-10,
        )
}

/// I = M rho^2 = 2 pi rho_m rho^3 delta rho L (kg*m^2).
pub fn cylinder_moment_of_inertia(cyl: &CylinderSpec) -> f64 {
    2.0 * PI * cyl.mass_density * cyl.mean_radius.powi(3) * cyl.wall_thickness * cyl.length
}

/// Free-space angular acceleration alpha = tau / I (rad/s^2).
pub fn cylinder_angular_acceleration(
    spec: &BeamSpec,
    amp: &Amplitude,
    cyl: &CylinderSpec,
    choice: TensorChoice,
) -> f64 {
    cylinder_torque(spec, amp, cyl, choice) / cylinder_moment_of_inertia(cyl)
}

/// Terminal rotation frequency in a viscous medium (Hz): the light torque
/// balances the rotating-cylinder drag tau_drag = 4 pi eta rho^2 L Omega.
pub fn cylinder_terminal_frequency(
    spec: &BeamSpec,
    amp: &Amplitude,
    cyl: &CylinderSpec,
    viscosity: f64,
    choice: TensorChoice,
) -> f64 {
    let tau = cylinder_torque(spec, amp, cyl, choice);
    let omega = tau / (4.0 * PI * viscosity * cyl.mean_radius.powi(2) * cyl.length);
    omega / (2.0 * PI)
}

/// Rotor spin-up from one superkick per lifetime:
/// alpha = <p_phi> / (M rho T) (rad/s^2).
pub fn rotor_angular_acceleration(
    spec: &BeamSpec,
    rotor: &RotorSpec,
    choice: TensorChoice,
) -> Result<f64> {
    let kick = superkick(spec, rotor.arm_radius, choice)?;
    Ok(kick / (rotor.ion_mass * rotor.arm_radius * rotor.excited_lifetime))
}

/// Revolution rate of an off-axis particle (rad/s). Either an explicit
/// calibration constant maps the kick density to a rate, or the particle's
/// drag coefficient sets the terminal rate sigma c p_phi / (gamma_d rho).
pub fn revolution_frequency(
    spec: &BeamSpec,
    amp: &Amplitude,
    particle: &ParticleSpec,
    rho: f64,
    choice: TensorChoice,
    calibration: Option<f64>,
) -> Result<f64> {
    let kick = offaxis_kick_density(spec, amp, rho, choice);
    if let Some(cal) = calibration {
        if !(cal.is_finite() && cal > 0.0) {
            return Err(Error::Config(format!(
                "calibration constant must be positive, got {cal}"
            )));
        }
        return Ok(cal * kick);
    }
    if let Some(gamma_d) = particle.drag_coefficient {
        if rho <= 0.0 {
            return Err(Error::Domain(format!(
                "drag-balance revolution requires rho > 0, got {rho}"
            )));
        }
        return Ok(particle.cross_section * SPEED_OF_LIGHT * kick / (gamma_d * rho));
    }
    Err(Error::Config(
        "revolution frequency needs a calibration constant or a particle drag coefficient".into(),
    ))
}

/// Longitudinal radiation force on a fully absorbing particle,
/// F_z = sigma c <P_z> (N).
pub fn longitudinal_force(
    spec: &BeamSpec,
    amp: &Amplitude,
    particle: &ParticleSpec,
    rho: f64,
    choice: TensorChoice,
) -> f64 {
    particle.cross_section * SPEED_OF_LIGHT * pz_density(spec, amp, rho, choice)
}

/// Maximal radius intervals in [0, rho_max] where the longitudinal momentum
/// density of the given tensor choice is negative. Endpoints are refined by
/// bisection to 1e-4 relative.
pub fn negative_pz_regions(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho_max: f64,
    n_scan: usize,
    choice: TensorChoice,
) -> Result<Vec<(f64, f64)>> {
    if !(rho_max.is_finite() && rho_max > 0.0) {
        return Err(Error::Config(format!(
            "scan radius must be positive, got {rho_max}"
        )));
    }
    if n_scan < 1000 {
        return Err(Error::Config(format!(
            "tractor scan needs n_scan >= 1000, got {n_scan}"
        )));
    }
    let grid = linspace(0.0, rho_max, n_scan + 1);
    let values = map_grid(&grid, |rho| pz_density(spec, amp, rho, choice));
    let f = |rho: f64| pz_density(spec, amp, rho, choice);

    let mut regions = Vec::new();
    let mut i = 0;
    while i < values.len() {
        if values[i] < 0.0 {
            let mut j = i;
            while j < values.len() && values[j] < 0.0 {
                j += 1;
            }
            let lo = if i == 0 {
                grid[0]
            } else {
                numerics::bisect(f, grid[i - 1], grid[i], 1e-4)
            };
            let hi = if j == values.len() {
                *grid.last().unwrap()
            } else {
                numerics::bisect(f, grid[j - 1], grid[j], 1e-4)
            };
            regions.push((lo, hi));
            i = j;
        } else {
            i += 1;
        }
    }
    Ok(regions)
}

/// Tractor regions: where the Belinfante radiation force pulls back
/// toward the source.
pub fn tractor_regions(
    spec: &BeamSpec,
    amp: &Amplitude,
    rho_max: f64,
    n_scan: usize,
) -> Result<Vec<(f64, f64)>> {
    negative_pz_regions(spec, amp, rho_max, n_scan, TensorChoice::Belinfante)
}
