//! Deterministic table and JSON emission.
//!
//! Every numeric cell is printed with 17 significant digits in scientific
//! notation, so parsing the text back yields the identical f64.

use serde_json::Value;
use std::io::Write;
use std::path::{Path, PathBuf};

use twistkick::{ScenarioResult, TensorChoice};

use crate::AppError;

/// 17 significant digits, scientific notation.
pub fn fmt_sig(value: f64) -> String {
    format!("{value:.16e}")
}

/// Write to a file, or stdout when the target is `-`.
pub fn write_output(target: Option<&PathBuf>, content: &str) -> Result<(), AppError> {
    match target {
        Some(path) if path.as_os_str() != "-" => std::fs::write(path, content)
            .map_err(|e| AppError::Usage(format!("cannot write {}: {e}", path.display()))),
        _ => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| AppError::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Frozen profile table header.
pub const PROFILE_HEADER: &str = "rho_m,value_canonical,value_belinfante,units";

/// Profile rows as CSV with the frozen column order.
pub fn profile_csv(
    rho: &[f64],
    canonical: Option<&[f64]>,
    belinfante: Option<&[f64]>,
    units: &str,
) -> String {
    let mut out = String::with_capacity(rho.len() * 64);
    out.push_str(PROFILE_HEADER);
    out.push('\n');
    for (i, &r) in rho.iter().enumerate() {
        let can = canonical.map_or(String::new(), |v| fmt_sig(v[i]));
        let bel = belinfante.map_or(String::new(), |v| fmt_sig(v[i]));
        out.push_str(&format!("{},{can},{bel},{units}\n", fmt_sig(r)));
    }
    out
}

/// Profile rows as JSON with the beam config embedded for round-trips.
pub fn profile_json(
    config: Value,
    command: &str,
    quantity: &str,
    units: &str,
    rho: &[f64],
    canonical: Option<&[f64]>,
    belinfante: Option<&[f64]>,
) -> String {
    let rows: Vec<Value> = rho
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let can = canonical.map_or(Value::Null, |v| Value::from(v[i]));
            let bel = belinfante.map_or(Value::Null, |v| Value::from(v[i]));
            Value::Array(vec![Value::from(r), can, bel])
        })
        .collect();
    let doc = serde_json::json!({
        "command": command,
        "config": config,
        "quantity": quantity,
        "units": units,
        "columns": ["rho_m", "value_canonical", "value_belinfante"],
        "rows": rows,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("static document serializes");
    text.push('\n');
    text
}

/// Scenario results as CSV.
pub fn scenario_csv(rows: &[ScenarioResult]) -> String {
    let mut out = String::from("name,choice,value,units\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.name,
            choice_label(row.tensor_choice),
            fmt_sig(row.value),
            row.units
        ));
    }
    out
}

/// Scenario results as JSON.
pub fn scenario_json(config: Value, command: &str, rows: &[ScenarioResult]) -> String {
    let doc = serde_json::json!({
        "command": command,
        "config": config,
        "results": rows,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("static document serializes");
    text.push('\n');
    text
}

pub fn choice_label(choice: TensorChoice) -> &'static str {
    match choice {
        TensorChoice::Canonical => "canonical",
        TensorChoice::Belinfante => "belinfante",
    }
}

/// Check the output path is writable up front so failures exit cleanly.
pub fn check_target(target: Option<&PathBuf>) -> Result<(), AppError> {
    if let Some(path) = target {
        if path.as_os_str() != "-" {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() && !Path::new(parent).exists() {
                    return Err(AppError::Usage(format!(
                        "output directory {} does not exist",
                        parent.display()
                    )));
                }
            }
        }
    }
    Ok(())
}
