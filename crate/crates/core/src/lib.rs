//! Twisted-photon beam densities and the mechanical observables that
//! distinguish the canonical from the symmetric (Belinfante) form of the
//! electromagnetic momentum.
//!
//! The crate evaluates Bessel and Bessel-Gauss beams, the canonical and
//! Belinfante linear- and angular-momentum densities, per-photon superkicks,
//! and the torques, accelerations, forces, and tractor regions they imply
//! for small absorbing test objects. Closed forms are backed by a
//! field-level numerical oracle built from the exact vector potential.
//!
//! Radial sweeps run data-parallel under the default `parallel` feature and
//! fall back to sequential evaluation without it; results are identical
//! either way.

pub mod beams;
pub mod constants;
pub mod densities;
pub mod error;
pub mod grid;
pub mod mechanics;
pub mod numerics;
pub mod specfun;
pub mod vec3;

pub use beams::{
    envelope_u, fields, normalize_amplitude, paraxial_potential, vector_potential, Amplitude,
    BeamSpec, EnvelopeSample, FieldSample, Helicity, Wavenumbers,
};
pub use densities::{
    density_from_fields, jz_density, jz_density_sigma, offaxis_kick_density,
    offaxis_kick_density_sigma, photon_number_density, pphi_density, profile, profile_seq,
    pz_density, superkick, sz_poynting, DensityProfile, FieldQuantity, Quantity, TensorChoice,
};
pub use error::{Error, Result};
pub use mechanics::{
    cylinder_angular_acceleration, cylinder_moment_of_inertia, cylinder_terminal_frequency,
    cylinder_torque, cylinder_torque_annular, longitudinal_force, negative_pz_regions,
    revolution_frequency, rotor_angular_acceleration, tractor_regions, CylinderSpec, ParticleSpec,
    RotorSpec, ScenarioResult,
};
pub use specfun::{bessel_j, bessel_j_prime, bessel_j_zero};
