//! Report payloads, shared between human-readable and `--json` output.
//!
//! JSON reports are plain serde structs with a fixed field order, so
//! identical inputs and flags produce byte-identical output (modulo the
//! version field tracking the crate version).

use serde::Serialize;

use ncdepth_core::ChannelVerdict;

use crate::schema::ChannelFile;

pub const TOOL: &str = "ncdepth";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct StateReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub input: String,
    pub tol: f64,
    pub modes: usize,
    pub depth: f64,
    pub classical: bool,
}

#[derive(Serialize)]
pub struct VerdictReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub input: String,
    pub tol: f64,
    pub scheme: String,
    pub modes: usize,
    pub cp: bool,
    pub cp_min_eig: f64,
    pub nb: Option<bool>,
    pub qpn_classical: Option<bool>,
    pub depth: Option<f64>,
    pub classical: Option<bool>,
}

/// Verdict fields alone, embedded by [`AnalyzeReport`].
#[derive(Serialize)]
pub struct VerdictBody {
    pub cp: bool,
    pub cp_min_eig: f64,
    pub nb: Option<bool>,
    pub qpn_classical: Option<bool>,
    pub depth: Option<f64>,
}

/// `canonical`/`compose` output under `--analyze --json`: the channel it
/// produced plus its diagnosis.
#[derive(Serialize)]
pub struct AnalyzeReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub input: String,
    pub tol: f64,
    pub channel: ChannelFile,
    pub verdict: VerdictBody,
}

#[derive(Serialize)]
pub struct FockReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub input: String,
    pub eps: f64,
    pub grid_points: usize,
    pub r_max: f64,
    pub negativity_tol: f64,
    pub depth: f64,
    pub classical: bool,
}

#[derive(Serialize)]
pub struct Table1Row {
    pub channel: &'static str,
    pub kappa: Option<f64>,
    pub depth: f64,
    pub expected: f64,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Table1Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub tol: f64,
    pub rows: Vec<Table1Row>,
    pub pass: bool,
}

pub fn print_verdict_human(v: &ChannelVerdict, scheme: &str, classical: Option<bool>) {
    println!("cp: {} (min eig of V+iOmega = {:.6e})", v.cp, v.cp_min_eig);
    match (v.nb, v.qpn_classical, v.depth) {
        (Some(nb), Some(qpn), Some(depth)) => {
            println!("nb (output-classical): {nb}");
            println!("qpn-classical (coherent-input classical): {qpn}");
            println!("depth: {depth}");
        }
        _ => println!("classicality verdicts unavailable for a non-CP pair"),
    }
    if let Some(c) = classical {
        println!(
            "verdict [{scheme}]: {}",
            if c { "classical" } else { "nonclassical" }
        );
    }
}
