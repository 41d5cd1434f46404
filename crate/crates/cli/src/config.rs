//! Unit-suffixed value parsing and beam configuration resolution.
//!
//! Beam parameters come from three layers with increasing precedence:
//! built-in reference defaults, a flat JSON config file (`--beam-config`), and
//! command-line flags. Lengths accept m/mm/um/nm/pm plus `lambda` (relative
//! to the resolved wavelength); powers accept W/mW/uW/kW; times accept
//! s/ms/us/ns/ps; areas accept m2/um2/nm2 (with or without a caret).

use serde_json::Value;
use std::path::Path;

use twistkick::{BeamSpec, Helicity};

use crate::AppError;

fn split_suffix<'a>(input: &'a str, suffixes: &[(&'static str, i32)]) -> (&'a str, i32) {
    let trimmed = input.trim();
    let mut best: Option<(&str, i32, usize)> = None;
    for &(suffix, exp) in suffixes {
        if let Some(head) = trimmed.strip_suffix(suffix) {
            if best.is_none_or(|(_, _, len)| suffix.len() > len) {
                best = Some((head, exp, suffix.len()));
            }
        }
    }
    match best {
        Some((head, exp, _)) => (head, exp),
        None => (trimmed, 0),
    }
}

/// Parse a number with a power-of-ten unit suffix. The unit exponent is
/// folded into the decimal text so the value goes through one correctly
/// rounded string-to-double conversion ("729nm" parses exactly as 729e-9).
fn parse_suffixed(
    input: &str,
    suffixes: &[(&'static str, i32)],
    what: &str,
) -> Result<f64, AppError> {
    let (head, unit_exp) = split_suffix(input, suffixes);
    let head = head.trim();
    let bad = || AppError::Usage(format!("cannot parse {what} value '{input}'"));
    let (mantissa, head_exp) = match head.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (head, 0),
    };
    if mantissa.is_empty() || mantissa.parse::<f64>().is_err() {
        return Err(bad());
    }
    format!("{mantissa}e{}", head_exp + unit_exp)
        .parse()
        .map_err(|_| bad())
}

/// Length with optional unit suffix; `lambda` is resolved against the
/// supplied wavelength when one is available.
pub fn parse_length(input: &str, lambda: Option<f64>, what: &str) -> Result<f64, AppError> {
    const UNITS: &[(&str, i32)] = &[
        ("pm", -12),
        ("nm", -9),
        ("um", -6),
        ("\u{00b5}m", -6),
        ("\u{03bc}m", -6),
        ("mm", -3),
        ("m", 0),
    ];
    let trimmed = input.trim();
    if let Some(head) = trimmed.strip_suffix("lambda") {
        let lambda = lambda.ok_or_else(|| {
            AppError::Usage(format!(
                "'{input}': lambda-relative {what} needs a wavelength"
            ))
        })?;
        let magnitude: f64 = head
            .trim()
            .parse()
            .map_err(|_| AppError::Usage(format!("cannot parse {what} value '{input}'")))?;
        return Ok(magnitude * lambda);
    }
    parse_suffixed(trimmed, UNITS, what)
}

pub fn parse_power(input: &str) -> Result<f64, AppError> {
    const UNITS: &[(&str, i32)] = &[
        ("uW", -6),
        ("\u{00b5}W", -6),
        ("mW", -3),
        ("kW", 3),
        ("W", 0),
    ];
    parse_suffixed(input, UNITS, "power")
}

pub fn parse_time(input: &str) -> Result<f64, AppError> {
    const UNITS: &[(&str, i32)] = &[
        ("ps", -12),
        ("ns", -9),
        ("us", -6),
        ("\u{00b5}s", -6),
        ("ms", -3),
        ("s", 0),
    ];
    parse_suffixed(input, UNITS, "time")
}

pub fn parse_area(input: &str) -> Result<f64, AppError> {
    const UNITS: &[(&str, i32)] = &[
        ("nm^2", -18),
        ("nm2", -18),
        ("um^2", -12),
        ("um2", -12),
        ("m^2", 0),
        ("m2", 0),
    ];
    parse_suffixed(input, UNITS, "area")
}

/// Beam parameters after merging defaults, config file, and flags.
#[derive(Debug, Clone)]
pub struct ResolvedBeam {
    pub spec: BeamSpec,
    /// Spin projection sigma_z; equals the helicity for pure polarization
    /// but may be overridden in [-1, 1] for the angular-momentum and
    /// off-axis kick profiles.
    pub sigma: f64,
}

impl ResolvedBeam {
    pub fn is_pure_polarization(&self) -> bool {
        (self.sigma - self.spec.sigma_z()).abs() < 1e-12
    }

    /// Resolved beam parameters as a flat JSON object (SI numbers), suitable
    /// for byte-exact re-ingestion through `--beam-config`.
    pub fn config_json(&self) -> Value {
        let envelope = match self.spec.envelope_width {
            Some(w0) => Value::from(w0),
            None => Value::from("none"),
        };
        serde_json::json!({
            "wavelength": self.spec.wavelength,
            "pitch_angle": self.spec.pitch_angle,
            "m_gamma": self.spec.total_am,
            "helicity": self.spec.helicity.lambda(),
            "sigma_z": self.sigma,
            "envelope_width": envelope,
            "power": self.spec.power,
        })
    }
}

/// Raw beam fields in their pre-resolution form.
#[derive(Debug, Clone, Default)]
pub struct BeamOverrides {
    pub wavelength: Option<String>,
    pub pitch_angle: Option<f64>,
    pub m_gamma: Option<i32>,
    pub helicity: Option<i32>,
    pub sigma_z: Option<f64>,
    pub envelope_width: Option<String>,
    pub power: Option<String>,
}

const CONFIG_KEYS: &[&str] = &[
    "wavelength",
    "pitch_angle",
    "m_gamma",
    "helicity",
    "sigma_z",
    "envelope_width",
    "power",
];

fn value_to_string(value: &Value, key: &str) -> Result<String, AppError> {
    match value {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(AppError::Usage(format!(
            "config key '{key}' must be a string or number, got {other}"
        ))),
    }
}

fn value_to_f64(value: &Value, key: &str) -> Result<f64, AppError> {
    value
        .as_f64()
        .ok_or_else(|| AppError::Usage(format!("config key '{key}' must be a number")))
}

/// Load a flat beam config. A profile/scenario JSON output is also accepted;
/// its embedded `config` object is used. Unknown keys are rejected.
pub fn load_beam_config(path: &Path) -> Result<BeamOverrides, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let root: Value = serde_json::from_str(&text)
        .map_err(|e| AppError::Usage(format!("{} is not valid JSON: {e}", path.display())))?;
    let object = match &root {
        Value::Object(map) if map.contains_key("config") => map["config"].clone(),
        other => other.clone(),
    };
    let map = object.as_object().ok_or_else(|| {
        AppError::Usage(format!("{}: config must be a JSON object", path.display()))
    })?;

    for key in map.keys() {
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(AppError::Usage(format!(
                "{}: unknown config key '{key}'",
                path.display()
            )));
        }
    }

    let mut out = BeamOverrides::default();
    if let Some(v) = map.get("wavelength") {
        out.wavelength = Some(value_to_string(v, "wavelength")?);
    }
    if let Some(v) = map.get("pitch_angle") {
        out.pitch_angle = Some(value_to_f64(v, "pitch_angle")?);
    }
    if let Some(v) = map.get("m_gamma") {
        let m = v
            .as_i64()
            .ok_or_else(|| AppError::Usage("config key 'm_gamma' must be an integer".into()))?;
        out.m_gamma = Some(m as i32);
    }
    if let Some(v) = map.get("helicity") {
        let h = v
            .as_i64()
            .ok_or_else(|| AppError::Usage("config key 'helicity' must be +1 or -1".into()))?;
        out.helicity = Some(h as i32);
    }
    if let Some(v) = map.get("sigma_z") {
        out.sigma_z = Some(value_to_f64(v, "sigma_z")?);
    }
    if let Some(v) = map.get("envelope_width") {
        out.envelope_width = Some(value_to_string(v, "envelope_width")?);
    }
    if let Some(v) = map.get("power") {
        out.power = Some(value_to_string(v, "power")?);
    }
    Ok(out)
}

/// Merge flags over file values over the reference defaults and build the beam.
pub fn resolve_beam(flags: BeamOverrides, file: BeamOverrides) -> Result<ResolvedBeam, AppError> {
    let wavelength_text = flags
        .wavelength
        .or(file.wavelength)
        .unwrap_or_else(|| "729nm".into());
    let wavelength = parse_length(&wavelength_text, None, "wavelength")?;

    let pitch_angle = flags.pitch_angle.or(file.pitch_angle).unwrap_or(0.1);
    let m_gamma = flags.m_gamma.or(file.m_gamma).unwrap_or(2);
    let sigma = flags.sigma_z.or(file.sigma_z).unwrap_or(1.0);
    if !(-1.0..=1.0).contains(&sigma) {
        return Err(AppError::Usage(format!(
            "sigma_z must lie in [-1, 1], got {sigma}"
        )));
    }

    let helicity_sign = match flags.helicity.or(file.helicity) {
        Some(h) => h,
        None if sigma == -1.0 => -1,
        None => 1,
    };
    let helicity = Helicity::from_sign(helicity_sign).map_err(AppError::from)?;

    let envelope_text = flags
        .envelope_width
        .or(file.envelope_width)
        .unwrap_or_else(|| "10lambda".into());
    let envelope_width = if envelope_text.trim().eq_ignore_ascii_case("none") {
        None
    } else {
        Some(parse_length(
            &envelope_text,
            Some(wavelength),
            "envelope width",
        )?)
    };

    let power_text = flags.power.or(file.power).unwrap_or_else(|| "4mW".into());
    let power = parse_power(&power_text)?;

    let spec = BeamSpec::new(
        wavelength,
        pitch_angle,
        m_gamma,
        helicity,
        envelope_width,
        power,
    )
    .map_err(AppError::from)?;
    Ok(ResolvedBeam { spec, sigma })
}
