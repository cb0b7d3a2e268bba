//! Subcommand implementations. Each returns the process exit code:
//! 0 classical/success, 1 nonclassical/mismatch, 2 parse error,
//! 3 physics-invalid input, 4 dimension mismatch.

use std::fs;
use std::path::{Path, PathBuf};

use ncdepth_core::{
    depth_bisection, CanonicalKind, FockDiagonalState, GaussianChannel, RadialGrid,
};

use crate::report::{
    print_verdict_human, AnalyzeReport, FockReport, StateReport, Table1Report, Table1Row,
    VerdictBody, VerdictReport, TOOL, VERSION,
};
use crate::schema::{load_json, physics_error, ChannelFile, ChannelInput, ProbsFile, StateFile};
use crate::{CliError, Kind, Scheme};

/// Match tolerance for the canonical-depth table; part of the command's
/// contract, independent of `--tol`.
const TABLE1_TOL: f64 = 1e-9;

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

pub fn state(path: &Path, json: bool, tol: f64) -> Result<u8, CliError> {
    let file: StateFile = load_json(path)?;
    let state = file.to_state()?;
    let depth = state.depth();
    let classical = state.is_classical_tol(tol);
    if json {
        println!(
            "{}",
            to_json(&StateReport {
                tool: TOOL,
                version: VERSION,
                input: path.display().to_string(),
                tol,
                modes: state.modes(),
                depth,
                classical,
            })
        );
    } else {
        println!(
            "depth {}, {}",
            depth,
            if classical { "classical" } else { "nonclassical" }
        );
    }
    Ok(0)
}

pub fn channel(path: &Path, scheme: Scheme, json: bool, tol: f64) -> Result<u8, CliError> {
    let file: ChannelFile = load_json(path)?;
    let candidate = file.to_candidate()?;
    let verdict = candidate.classify_tol(tol);
    let classical = match scheme {
        Scheme::Pon => verdict.nb,
        Scheme::Qpn => verdict.qpn_classical,
    };
    if json {
        println!(
            "{}",
            to_json(&VerdictReport {
                tool: TOOL,
                version: VERSION,
                input: path.display().to_string(),
                tol,
                scheme: scheme.name().to_string(),
                modes: candidate.modes(),
                cp: verdict.cp,
                cp_min_eig: verdict.cp_min_eig,
                nb: verdict.nb,
                qpn_classical: verdict.qpn_classical,
                depth: verdict.depth,
                classical,
            })
        );
    } else {
        print_verdict_human(&verdict, scheme.name(), classical);
    }
    if !verdict.cp {
        eprintln!(
            "channel is not completely positive: min eig of V(X,Y) + iOmega = {:.6e}",
            verdict.cp_min_eig
        );
        return Ok(3);
    }
    Ok(if classical.expect("CP channel has verdicts") {
        0
    } else {
        1
    })
}

/// Shared tail of `canonical` and `compose`: dump the channel JSON (stdout or
/// `--out`), optionally followed by the verdict.
fn emit_channel(
    ch: &GaussianChannel,
    input: String,
    out: Option<&PathBuf>,
    analyze: bool,
    json: bool,
    tol: f64,
) -> Result<u8, CliError> {
    let file = ChannelFile::from_channel(ch);
    let dump = to_json(&file);
    if let Some(out) = out {
        fs::write(out, format!("{dump}\n"))
            .map_err(|e| CliError::Parse(format!("{}: {e}", out.display())))?;
    }
    if !analyze {
        if out.is_none() {
            println!("{dump}");
        }
        return Ok(0);
    }
    let verdict = ch.classify_tol(tol);
    if json {
        println!(
            "{}",
            to_json(&AnalyzeReport {
                tool: TOOL,
                version: VERSION,
                input,
                tol,
                channel: file,
                verdict: VerdictBody {
                    cp: verdict.cp,
                    cp_min_eig: verdict.cp_min_eig,
                    nb: verdict.nb,
                    qpn_classical: verdict.qpn_classical,
                    depth: verdict.depth,
                },
            })
        );
    } else {
        if out.is_none() {
            println!("{dump}");
        }
        print_verdict_human(&verdict, "pon", verdict.nb);
    }
    Ok(0)
}

pub fn canonical(
    kind: Kind,
    kappa: Option<f64>,
    out: Option<&PathBuf>,
    analyze: bool,
    json: bool,
    tol: f64,
) -> Result<u8, CliError> {
    let core_kind = match kind {
        Kind::Attenuator => CanonicalKind::Attenuator,
        Kind::Amplifier => CanonicalKind::Amplifier,
        Kind::PhaseConjugation => CanonicalKind::PhaseConjugation,
        Kind::Singular => CanonicalKind::Singular,
    };
    let kappa = match (kind, kappa) {
        (Kind::Singular, k) => k.unwrap_or(0.0),
        (_, Some(k)) => k,
        (_, None) => {
            return Err(CliError::Parse(format!(
                "channel kind `{}` needs a kappa argument",
                kind.name()
            )))
        }
    };
    let ch = GaussianChannel::canonical(core_kind, kappa)
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let input = format!("canonical:{}:{kappa}", kind.name());
    emit_channel(&ch, input, out, analyze, json, tol)
}

pub fn table1(json: bool) -> Result<u8, CliError> {
    let mut rows: Vec<Table1Row> = Vec::new();
    let mut push = |channel: &'static str, kind: CanonicalKind, kappa: Option<f64>, expected: f64| {
        let ch = GaussianChannel::canonical(kind, kappa.unwrap_or(0.0)).expect("in range");
        let depth = ch.depth().expect("canonical channels are CP");
        rows.push(Table1Row {
            channel,
            kappa,
            depth,
            expected,
            pass: (depth - expected).abs() <= TABLE1_TOL,
        });
    };
    for kappa in [0.0, 0.25, 0.5, 0.75, 1.0] {
        push("attenuator", CanonicalKind::Attenuator, Some(kappa), 2.0 * kappa * kappa);
    }
    for kappa in [1.5, 2.0, 5.0] {
        push("amplifier", CanonicalKind::Amplifier, Some(kappa), 2.0);
    }
    for kappa in [0.5, 1.0, 2.0] {
        push("phase-conjugation", CanonicalKind::PhaseConjugation, Some(kappa), 0.0);
    }
    push("singular", CanonicalKind::Singular, None, 0.0);

    let pass = rows.iter().all(|r| r.pass);
    if json {
        println!(
            "{}",
            to_json(&Table1Report {
                tool: TOOL,
                version: VERSION,
                tol: TABLE1_TOL,
                rows,
                pass,
            })
        );
    } else {
        println!(
            "{:<20} {:>6}  {:>13}  {:>13}  status",
            "channel", "kappa", "depth", "expected"
        );
        for r in &rows {
            let kappa = r
                .kappa
                .map(|k| format!("{k:.2}"))
                .unwrap_or_else(|| "-".to_string());
            println!(
                "{:<20} {:>6}  {:>13.9}  {:>13.9}  {}",
                r.channel,
                kappa,
                r.depth,
                r.expected,
                if r.pass { "ok" } else { "MISMATCH" }
            );
        }
        let ok = rows.iter().filter(|r| r.pass).count();
        println!(
            "table1: {} ({ok}/{} rows within {TABLE1_TOL:.0e})",
            if pass { "PASS" } else { "FAIL" },
            rows.len()
        );
    }
    Ok(if pass { 0 } else { 1 })
}

pub fn fock_depth(
    path: Option<&PathBuf>,
    probs: Option<&str>,
    eps: f64,
    grid_points: usize,
    r_max: Option<f64>,
    json: bool,
) -> Result<u8, CliError> {
    let (raw, input) = match (path, probs) {
        (Some(p), None) => (load_json::<ProbsFile>(p)?.probs, p.display().to_string()),
        (None, Some(s)) => {
            let parsed: Result<Vec<f64>, _> =
                s.split(',').map(|t| t.trim().parse::<f64>()).collect();
            let parsed =
                parsed.map_err(|e| CliError::Parse(format!("--probs `{s}`: {e}")))?;
            (parsed, format!("probs:{s}"))
        }
        _ => {
            return Err(CliError::Parse(
                "provide exactly one of a probabilities file or --probs".to_string(),
            ))
        }
    };
    let state =
        FockDiagonalState::new(raw).map_err(|e| CliError::Parse(e.to_string()))?;
    let r_max =
        r_max.unwrap_or_else(|| 2.0 * ((state.cutoff() + 1) as f64).sqrt() + 4.0);
    let grid = RadialGrid::new(r_max, grid_points)
        .map_err(|e| CliError::Parse(e.to_string()))?;
    let depth =
        depth_bisection(&state, &grid, eps).map_err(|e| CliError::Parse(e.to_string()))?;
    let classical = depth == 0.0;
    if json {
        println!(
            "{}",
            to_json(&FockReport {
                tool: TOOL,
                version: VERSION,
                input,
                eps,
                grid_points,
                r_max,
                negativity_tol: 1e-10,
                depth,
                classical,
            })
        );
    } else {
        println!(
            "depth {}, {}",
            depth,
            if classical { "classical" } else { "nonclassical" }
        );
    }
    Ok(0)
}

pub fn compose(
    second: &Path,
    first: &Path,
    out: Option<&PathBuf>,
    analyze: bool,
    json: bool,
    tol: f64,
) -> Result<u8, CliError> {
    let ch2 = load_json::<ChannelInput>(second)?.to_channel()?;
    let ch1 = load_json::<ChannelInput>(first)?.to_channel()?;
    let composed = ch2.compose(&ch1).map_err(physics_error)?;
    let input = format!("compose:{}:{}", second.display(), first.display());
    emit_channel(&composed, input, out, analyze, json, tol)
}
