//! Physical constants (SI, CODATA 2018) and fixed material parameters.

/// Speed of light in vacuum (m/s, exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Vacuum permeability mu_0 (N/A^2).
pub const VACUUM_PERMEABILITY: f64 = 1.256_637_062_12e-6;

/// Vacuum permittivity eps_0 (F/m).
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Reduced Planck constant (J*s).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Unified atomic mass unit (kg).
pub const ATOMIC_MASS_KG: f64 = 1.660_539_07e-27;

/// Electron mass (kg).
pub const ELECTRON_MASS_KG: f64 = 9.109_383_701_5e-31;

/// Mass of a singly ionized 40Ca atom: 39.9625909 u minus one electron mass (kg).
pub const CA40_ION_MASS_KG: f64 = 39.962_590_9 * ATOMIC_MASS_KG - ELECTRON_MASS_KG;

/// Lifetime of the Ca+ 4p_{3/2} state (s).
pub const CA_4P32_LIFETIME_S: f64 = 6.924e-9;

/// Lifetime of the Ca+ 4p_{1/2} state (s).
pub const CA_4P12_LIFETIME_S: f64 = 7.098e-9;

/// Dynamic viscosity of kerosine (N*s/m^2).
pub const KEROSINE_VISCOSITY: f64 = 1.64e-3;

/// Default test-cylinder mass density: twice the density of water (kg/m^3).
pub const DEFAULT_MASS_DENSITY: f64 = 2000.0;
