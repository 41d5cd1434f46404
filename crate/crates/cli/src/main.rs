//! Command-line front end: density profiles, the reference reproduction
//! table, and the mechanics scenarios, emitted as deterministic CSV/JSON.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 numeric-domain
//! error (for example a Belinfante pole radius requested exactly).

mod config;
mod output;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

use twistkick::constants::{CA40_ION_MASS_KG, KEROSINE_VISCOSITY, SPEED_OF_LIGHT};
use twistkick::grid::{linspace, map_grid};
use twistkick::mechanics::units;
use twistkick::{
    cylinder_moment_of_inertia, cylinder_terminal_frequency, cylinder_torque,
    cylinder_torque_annular, jz_density_sigma, longitudinal_force, negative_pz_regions,
    normalize_amplitude, offaxis_kick_density_sigma, photon_number_density, pphi_density,
    pz_density, rotor_angular_acceleration, sz_poynting, Amplitude, CylinderSpec, ParticleSpec,
    Quantity, RotorSpec, ScenarioResult, TensorChoice,
};

use config::{load_beam_config, parse_area, parse_length, parse_time, BeamOverrides, ResolvedBeam};
use output::{
    check_target, fmt_sig, profile_csv, profile_json, scenario_csv, scenario_json, write_output,
};

#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Numeric(String),
}

impl From<twistkick::Error> for AppError {
    fn from(e: twistkick::Error) -> Self {
        match e {
            twistkick::Error::Config(_) | twistkick::Error::InvalidSpec(_) => {
                AppError::Usage(e.to_string())
            }
            other => AppError::Numeric(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "twistkick",
    version,
    about = "Twisted-photon momentum densities and the torques, kicks, and forces they exert",
    after_help = "Lengths accept unit suffixes (nm, um, mm, m) plus 'Xlambda'; powers accept W, mW, uW, kW."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BeamArgs {
    /// Vacuum wavelength (length suffix), default 729nm
    #[arg(long)]
    wavelength: Option<String>,
    /// Pitch angle theta_k in radians, default 0.1
    #[arg(long)]
    theta: Option<f64>,
    /// Total angular momentum per photon in hbar units, default 2
    #[arg(long, allow_negative_numbers = true)]
    mgamma: Option<i32>,
    /// Spin projection sigma_z in [-1, 1], default 1
    #[arg(long, allow_negative_numbers = true)]
    sigma: Option<f64>,
    /// Helicity eigenvalue +1 or -1 (inferred from sigma when omitted)
    #[arg(long, allow_negative_numbers = true)]
    helicity: Option<i32>,
    /// Gaussian envelope width ('10lambda', '7.29um', or 'none'), default 10lambda
    #[arg(long)]
    w0: Option<String>,
    /// Time-averaged beam power, default 4mW
    #[arg(long)]
    power: Option<String>,
    /// Flat JSON beam config; flags override file fields
    #[arg(long, value_name = "FILE")]
    beam_config: Option<PathBuf>,
}

impl BeamArgs {
    fn resolve(&self) -> Result<ResolvedBeam, AppError> {
        let file = match &self.beam_config {
            Some(path) => load_beam_config(path)?,
            None => BeamOverrides::default(),
        };
        let flags = BeamOverrides {
            wavelength: self.wavelength.clone(),
            pitch_angle: self.theta,
            m_gamma: self.mgamma,
            helicity: self.helicity,
            sigma_z: self.sigma,
            envelope_width: self.w0.clone(),
            power: self.power.clone(),
        };
        config::resolve_beam(flags, file)
    }
}

#[derive(Args)]
struct GridArgs {
    /// Lower grid radius (length suffix or 'Xlambda')
    #[arg(long, default_value = "0m")]
    rho_min: String,
    /// Upper grid radius (length suffix or 'Xlambda')
    #[arg(long, default_value = "40lambda")]
    rho_max: String,
    /// Number of uniformly spaced samples (>= 2)
    #[arg(long, default_value_t = 2000)]
    n_points: usize,
}

impl GridArgs {
    fn resolve(&self, lambda: f64) -> Result<Vec<f64>, AppError> {
        let lo = parse_length(&self.rho_min, Some(lambda), "rho_min")?;
        let hi = parse_length(&self.rho_max, Some(lambda), "rho_max")?;
        if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo >= hi {
            return Err(AppError::Usage(format!(
                "grid requires 0 <= rho_min < rho_max, got [{lo}, {hi}]"
            )));
        }
        if self.n_points < 2 {
            return Err(AppError::Usage(format!(
                "grid requires n_points >= 2, got {}",
                self.n_points
            )));
        }
        Ok(linspace(lo, hi, self.n_points))
    }
}

#[derive(Args)]
struct OutArgs {
    /// Output file, '-' for stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChoiceArg {
    Canonical,
    Belinfante,
    Both,
}

impl ChoiceArg {
    fn wants(self, choice: TensorChoice) -> bool {
        match self {
            ChoiceArg::Both => true,
            ChoiceArg::Canonical => choice == TensorChoice::Canonical,
            ChoiceArg::Belinfante => choice == TensorChoice::Belinfante,
        }
    }
}

use output::choice_label as choice_name;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuantityArg {
    Jz,
    Pphi,
    Pz,
    Sz,
    PhotonNumber,
}

impl QuantityArg {
    fn core(self) -> Quantity {
        match self {
            QuantityArg::Jz => Quantity::Jz,
            QuantityArg::Pphi => Quantity::Pphi,
            QuantityArg::Pz => Quantity::Pz,
            QuantityArg::Sz => Quantity::Sz,
            QuantityArg::PhotonNumber => Quantity::PhotonNumber,
        }
    }

    fn units(self) -> &'static str {
        self.core().units()
    }

    fn name(self) -> &'static str {
        match self {
            QuantityArg::Jz => "jz",
            QuantityArg::Pphi => "pphi",
            QuantityArg::Pz => "pz",
            QuantityArg::Sz => "sz",
            QuantityArg::PhotonNumber => "photon_number",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Radial profile of a density for one or both tensor choices
    Profile {
        #[command(flatten)]
        beam: BeamArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Density to tabulate
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        #[arg(long, value_enum, default_value_t = ChoiceArg::Both)]
        choice: ChoiceArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Reproduction table for the reference cylinder scenario
    PaperTable {
        #[command(flatten)]
        beam: BeamArgs,
        #[arg(long, value_enum, default_value_t = ChoiceArg::Both)]
        choice: ChoiceArg,
        /// Viscosity for the terminal-frequency rows (N*s/m^2)
        #[arg(long, default_value_t = KEROSINE_VISCOSITY)]
        eta: f64,
    },
    /// Torque, moment of inertia, spin-up, and terminal frequency of a hollow cylinder
    Cylinder {
        #[command(flatten)]
        beam: BeamArgs,
        /// Mean cylinder radius
        #[arg(long, default_value = "2um")]
        rho: String,
        /// Wall thickness
        #[arg(long, default_value = "0.5um")]
        thickness: String,
        /// Cylinder length
        #[arg(long, default_value = "2um")]
        length: String,
        /// Shell mass density (kg/m^3)
        #[arg(long, default_value_t = 2000.0)]
        mass_density: f64,
        /// Viscosity (N*s/m^2); adds terminal-frequency rows
        #[arg(long)]
        eta: Option<f64>,
        /// Integrate the annulus instead of the thin-wall evaluation
        #[arg(long)]
        annular: bool,
        #[arg(long, value_enum, default_value_t = ChoiceArg::Both)]
        choice: ChoiceArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Angular acceleration of a two-ion rotor from one kick per lifetime
    Rotor {
        #[command(flatten)]
        beam: BeamArgs,
        /// Rotor arm radius
        #[arg(long, default_value = "1um")]
        rho: String,
        /// Ion mass in kg (default: singly ionized 40Ca)
        #[arg(long)]
        ion_mass: Option<f64>,
        /// Excited-state lifetime (time suffix), default 6.924ns
        #[arg(long, default_value = "6.924ns")]
        lifetime: String,
        #[arg(long, value_enum, default_value_t = ChoiceArg::Both)]
        choice: ChoiceArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Revolution-rate profile for a small particle off-axis in the beam
    Offaxis {
        #[command(flatten)]
        beam: BeamArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Calibration constant mapping kick density to rad/s
        #[arg(long)]
        calibration: Option<f64>,
        /// Linear drag coefficient (N*s/m) for terminal revolution
        #[arg(long)]
        gamma_d: Option<f64>,
        /// Particle absorption cross section (area suffix)
        #[arg(long, default_value = "1um2")]
        cross_section: String,
        #[arg(long, value_enum, default_value_t = ChoiceArg::Both)]
        choice: ChoiceArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Longitudinal radiation-force profile on an absorbing particle
    Pressure {
        #[command(flatten)]
        beam: BeamArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Particle absorption cross section (area suffix)
        #[arg(long, default_value = "1um2")]
        cross_section: String,
        #[arg(long, value_enum, default_value_t = ChoiceArg::Both)]
        choice: ChoiceArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Radius intervals where the longitudinal force pulls toward the source
    Tractor {
        #[command(flatten)]
        beam: BeamArgs,
        /// Scan limit (length suffix or 'Xlambda')
        #[arg(long, default_value = "12lambda")]
        rho_max: String,
        /// Scan resolution (>= 1000)
        #[arg(long, default_value_t = 20_000)]
        n_scan: usize,
        /// Particle absorption cross section (area suffix)
        #[arg(long, default_value = "1um2")]
        cross_section: String,
        /// Tensor choice to scan (canonical is a diagnostic; it never pulls)
        #[arg(long, value_enum, default_value_t = ScanChoice::Belinfante)]
        choice: ScanChoice,
        /// Output format
        #[arg(long, value_enum, default_value_t = TractorFormat::Text)]
        format: TractorFormat,
        /// Output file, '-' for stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanChoice {
    Canonical,
    Belinfante,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TractorFormat {
    Text,
    Json,
}

impl From<ScanChoice> for TensorChoice {
    fn from(c: ScanChoice) -> TensorChoice {
        match c {
            ScanChoice::Canonical => TensorChoice::Canonical,
            ScanChoice::Belinfante => TensorChoice::Belinfante,
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            let _ = e.print();
            return if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                0
            } else {
                1
            };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(AppError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn require_pure(beam: &ResolvedBeam, what: &str) -> Result<(), AppError> {
    if beam.is_pure_polarization() {
        Ok(())
    } else {
        Err(AppError::Numeric(format!(
            "unsupported configuration: {what} requires pure circular polarization (sigma_z = +-1), got sigma_z = {}",
            beam.sigma
        )))
    }
}

fn normalized(beam: &ResolvedBeam) -> Result<Amplitude, AppError> {
    normalize_amplitude(&beam.spec).map_err(AppError::from)
}

fn profile_values(
    beam: &ResolvedBeam,
    amp: &Amplitude,
    quantity: QuantityArg,
    choice: TensorChoice,
    grid: &[f64],
) -> Result<Vec<f64>, AppError> {
    if quantity != QuantityArg::Jz {
        require_pure(beam, quantity.name())?;
    }
    let spec = &beam.spec;
    let sigma = beam.sigma;
    Ok(match quantity {
        QuantityArg::Jz => map_grid(grid, |r| jz_density_sigma(spec, amp, r, sigma, choice)),
        QuantityArg::Pphi => map_grid(grid, |r| pphi_density(spec, amp, r, choice)),
        QuantityArg::Pz => map_grid(grid, |r| pz_density(spec, amp, r, choice)),
        QuantityArg::Sz => map_grid(grid, |r| sz_poynting(spec, amp, r)),
        QuantityArg::PhotonNumber => map_grid(grid, |r| photon_number_density(spec, amp, r)),
    })
}

#[allow(clippy::too_many_arguments)]
fn emit_profile(
    beam: &ResolvedBeam,
    command: &str,
    quantity_name: &str,
    units_str: &'static str,
    grid: Vec<f64>,
    canonical: Option<Vec<f64>>,
    belinfante: Option<Vec<f64>>,
    out: &OutArgs,
) -> Result<(), AppError> {
    check_target(out.out.as_ref())?;
    let text = match out.format {
        Format::Csv => profile_csv(
            &grid,
            canonical.as_deref(),
            belinfante.as_deref(),
            units_str,
        ),
        Format::Json => profile_json(
            beam.config_json(),
            command,
            quantity_name,
            units_str,
            &grid,
            canonical.as_deref(),
            belinfante.as_deref(),
        ),
    };
    write_output(out.out.as_ref(), &text)
}

fn emit_scenario(
    beam: &ResolvedBeam,
    command: &str,
    rows: Vec<ScenarioResult>,
    out: &OutArgs,
) -> Result<(), AppError> {
    check_target(out.out.as_ref())?;
    let text = match out.format {
        Format::Csv => scenario_csv(&rows),
        Format::Json => scenario_json(beam.config_json(), command, &rows),
    };
    write_output(out.out.as_ref(), &text)
}

fn dispatch(command: Command) -> Result<(), AppError> {
    match command {
        Command::Profile {
            beam,
            grid,
            quantity,
            choice,
            out,
        } => {
            let beam = beam.resolve()?;
            let amp = normalized(&beam)?;
            let rho = grid.resolve(beam.spec.wavelength)?;
            let canonical = choice
                .wants(TensorChoice::Canonical)
                .then(|| profile_values(&beam, &amp, quantity, TensorChoice::Canonical, &rho))
                .transpose()?;
            let belinfante = choice
                .wants(TensorChoice::Belinfante)
                .then(|| profile_values(&beam, &amp, quantity, TensorChoice::Belinfante, &rho))
                .transpose()?;
            emit_profile(
                &beam,
                "profile",
                quantity.name(),
                quantity.units(),
                rho,
                canonical,
                belinfante,
                &out,
            )
        }

        Command::PaperTable { beam, choice, eta } => {
            let beam = beam.resolve()?;
            require_pure(&beam, "the cylinder scenario")?;
            if !(eta.is_finite() && eta > 0.0) {
                return Err(AppError::Usage(format!(
                    "viscosity must be positive, got {eta}"
                )));
            }
            let amp = normalized(&beam)?;
            let cyl = CylinderSpec::new(2e-6, 0.5e-6, 2e-6, 2000.0)?;
            // reference values scale linearly with power and inversely with
            // viscosity; keep the targets meaningful off the defaults
            let power_scale = beam.spec.power / 4e-3;
            let eta_scale = KEROSINE_VISCOSITY / eta;

            println!(
                "{:<22}{:<13}{:<28}{:<28}status",
                "quantity", "choice", "value", "target"
            );
            for tensor in [TensorChoice::Canonical, TensorChoice::Belinfante] {
                if !choice.wants(tensor) {
                    continue;
                }
                let target = match tensor {
                    TensorChoice::Canonical => 5.5e6,
                    TensorChoice::Belinfante => 2.3e6,
                } * power_scale;
                let alpha =
                    twistkick::cylinder_angular_acceleration(&beam.spec, &amp, &cyl, tensor);
                print_table_row("alpha_rad_per_s2", tensor, alpha, target);

                let f_target = match tensor {
                    TensorChoice::Canonical => 0.55,
                    TensorChoice::Belinfante => 0.23,
                } * power_scale
                    * eta_scale;
                let f = cylinder_terminal_frequency(&beam.spec, &amp, &cyl, eta, tensor);
                print_table_row("f_terminal_hz", tensor, f, f_target);
            }
            Ok(())
        }

        Command::Cylinder {
            beam,
            rho,
            thickness,
            length,
            mass_density,
            eta,
            annular,
            choice,
            out,
        } => {
            let beam = beam.resolve()?;
            require_pure(&beam, "the cylinder scenario")?;
            let amp = normalized(&beam)?;
            let lambda = beam.spec.wavelength;
            let cyl = CylinderSpec::new(
                parse_length(&rho, Some(lambda), "rho")?,
                parse_length(&thickness, Some(lambda), "thickness")?,
                parse_length(&length, Some(lambda), "length")?,
                mass_density,
            )?;
            let inertia = cylinder_moment_of_inertia(&cyl);
            let mut rows: Vec<ScenarioResult> = Vec::new();
            for tensor in [TensorChoice::Canonical, TensorChoice::Belinfante] {
                if !choice.wants(tensor) {
                    continue;
                }
                let tau = if annular {
                    cylinder_torque_annular(&beam.spec, &amp, &cyl, tensor)
                } else {
                    cylinder_torque(&beam.spec, &amp, &cyl, tensor)
                };
                rows.push(ScenarioResult::new(
                    "torque",
                    tau,
                    units::NEWTON_METER,
                    tensor,
                ));
                rows.push(ScenarioResult::new(
                    "moment_of_inertia",
                    inertia,
                    units::KG_M2,
                    tensor,
                ));
                rows.push(ScenarioResult::new(
                    "alpha",
                    tau / inertia,
                    units::RAD_PER_S2,
                    tensor,
                ));
                if let Some(eta) = eta {
                    if !(eta.is_finite() && eta > 0.0) {
                        return Err(AppError::Usage(format!(
                            "viscosity must be positive, got {eta}"
                        )));
                    }
                    let f = cylinder_terminal_frequency(&beam.spec, &amp, &cyl, eta, tensor);
                    rows.push(ScenarioResult::new("f_terminal", f, units::HERTZ, tensor));
                }
            }
            emit_scenario(&beam, "cylinder", rows, &out)
        }

        Command::Rotor {
            beam,
            rho,
            ion_mass,
            lifetime,
            choice,
            out,
        } => {
            let beam = beam.resolve()?;
            require_pure(&beam, "the rotor scenario")?;
            let rotor = RotorSpec::new(
                ion_mass.unwrap_or(CA40_ION_MASS_KG),
                parse_length(&rho, Some(beam.spec.wavelength), "rho")?,
                parse_time(&lifetime)?,
            )?;
            let mut rows: Vec<ScenarioResult> = Vec::new();
            for tensor in [TensorChoice::Canonical, TensorChoice::Belinfante] {
                if !choice.wants(tensor) {
                    continue;
                }
                let alpha = rotor_angular_acceleration(&beam.spec, &rotor, tensor)?;
                rows.push(ScenarioResult::new(
                    "alpha",
                    alpha,
                    units::RAD_PER_S2,
                    tensor,
                ));
            }
            emit_scenario(&beam, "rotor", rows, &out)
        }

        Command::Offaxis {
            beam,
            grid,
            calibration,
            gamma_d,
            cross_section,
            choice,
            out,
        } => {
            let beam = beam.resolve()?;
            let amp = normalized(&beam)?;
            let rho = grid.resolve(beam.spec.wavelength)?;
            let sigma_area = parse_area(&cross_section)?;
            if let Some(cal) = calibration {
                if !(cal.is_finite() && cal > 0.0) {
                    return Err(AppError::Usage(format!(
                        "calibration constant must be positive, got {cal}"
                    )));
                }
            } else if gamma_d.is_none() {
                return Err(AppError::Usage(
                    "offaxis needs --calibration or --gamma-d (the normalization is experiment-specific)"
                        .into(),
                ));
            }
            let rate = |r: f64, tensor: TensorChoice| {
                let kick = offaxis_kick_density_sigma(&beam.spec, &amp, r, beam.sigma, tensor);
                match (calibration, gamma_d) {
                    (Some(cal), _) => cal * kick,
                    (None, Some(g)) => {
                        if r > 0.0 {
                            sigma_area * SPEED_OF_LIGHT * kick / (g * r)
                        } else {
                            0.0
                        }
                    }
                    (None, None) => unreachable!(),
                }
            };
            let canonical = choice
                .wants(TensorChoice::Canonical)
                .then(|| map_grid(&rho, |r| rate(r, TensorChoice::Canonical)));
            let belinfante = choice
                .wants(TensorChoice::Belinfante)
                .then(|| map_grid(&rho, |r| rate(r, TensorChoice::Belinfante)));
            emit_profile(
                &beam,
                "offaxis",
                "omega_revolution",
                units::RAD_PER_S,
                rho,
                canonical,
                belinfante,
                &out,
            )
        }

        Command::Pressure {
            beam,
            grid,
            cross_section,
            choice,
            out,
        } => {
            let beam = beam.resolve()?;
            require_pure(&beam, "the radiation-pressure profile")?;
            let amp = normalized(&beam)?;
            let rho = grid.resolve(beam.spec.wavelength)?;
            let particle = ParticleSpec::new(parse_area(&cross_section)?, None)?;
            let force = |r: f64, tensor: TensorChoice| {
                longitudinal_force(&beam.spec, &amp, &particle, r, tensor)
            };
            let canonical = choice
                .wants(TensorChoice::Canonical)
                .then(|| map_grid(&rho, |r| force(r, TensorChoice::Canonical)));
            let belinfante = choice
                .wants(TensorChoice::Belinfante)
                .then(|| map_grid(&rho, |r| force(r, TensorChoice::Belinfante)));
            emit_profile(
                &beam,
                "pressure",
                "f_z",
                units::NEWTON,
                rho,
                canonical,
                belinfante,
                &out,
            )
        }

        Command::Tractor {
            beam,
            rho_max,
            n_scan,
            cross_section,
            choice,
            format,
            out,
        } => {
            let beam = beam.resolve()?;
            require_pure(&beam, "the tractor scan")?;
            let amp = normalized(&beam)?;
            let limit = parse_length(&rho_max, Some(beam.spec.wavelength), "rho_max")?;
            let particle = ParticleSpec::new(parse_area(&cross_section)?, None)?;
            let tensor: TensorChoice = choice.into();
            let regions = negative_pz_regions(&beam.spec, &amp, limit, n_scan, tensor)?;

            check_target(out.as_ref())?;
            let text = if format == TractorFormat::Json {
                let entries: Vec<serde_json::Value> = regions
                    .iter()
                    .map(|&(lo, hi)| {
                        let mid = 0.5 * (lo + hi);
                        serde_json::json!({
                            "rho_lo_m": lo,
                            "rho_hi_m": hi,
                            "f_z_mid_n": longitudinal_force(&beam.spec, &amp, &particle, mid, tensor),
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "command": "tractor",
                    "config": beam.config_json(),
                    "tensor_choice": choice_name(tensor),
                    "regions": entries,
                });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&doc).expect("serializes")
                )
            } else if regions.is_empty() {
                "no negative-force regions\n".to_string()
            } else {
                let mut lines = String::new();
                for (lo, hi) in &regions {
                    let mid = 0.5 * (lo + hi);
                    let f = longitudinal_force(&beam.spec, &amp, &particle, mid, tensor);
                    lines.push_str(&format!(
                        "[{}, {}] m  F_z(mid) = {} N\n",
                        fmt_sig(*lo),
                        fmt_sig(*hi),
                        fmt_sig(f)
                    ));
                }
                lines
            };
            write_output(out.as_ref(), &text)
        }
    }
}

fn print_table_row(name: &str, tensor: TensorChoice, value: f64, target: f64) {
    let status = if (value - target).abs() <= 0.10 * target.abs() {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "{:<22}{:<13}{:<28}{:<28}{}",
        name,
        choice_name(tensor),
        fmt_sig(value),
        fmt_sig(target),
        status
    );
}
