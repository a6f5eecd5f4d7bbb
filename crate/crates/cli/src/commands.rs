use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use realizer::matrix::rank_exact;
use realizer::sample::random_transfer_matrix;
use realizer::structure::{controllability_matrix, controllable_space, observability_matrix, observable_space};
use realizer::sweep::case_rng;
use realizer::{
    impulse_response, kalman_decompose, minimal_realization, realize_mimo, transfer_matrix, verify_realization,
    KalmanDecomposition, Matrix, StateSpace, TransferMatrix, VerifyReport,
};

use crate::input::{read_state, read_state_file, read_transfer, CliError};
use crate::{Command, Format, SimulateArgs, VerifyArgs};

pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout }
    }
}

/// Structural summary printed by `analyze`.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct Analysis {
    pub states: usize,
    pub inputs: usize,
    pub outputs: usize,
    pub controllable: bool,
    pub observable: bool,
    #[serde(rename = "rank_Mc")]
    pub rank_mc: usize,
    #[serde(rename = "rank_Mo")]
    pub rank_mo: usize,
    pub dim_controllable: usize,
    pub dim_observable: usize,
    /// (controllable unobservable, controllable observable,
    /// uncontrollable unobservable, uncontrollable observable)
    pub kalman_dims: [usize; 4],
    pub minimal_states: usize,
}

/// Compact JSON with keys sorted, newline-terminated.
fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable");
    let mut out = serde_json::to_string(&value).expect("serializable");
    out.push('\n');
    out
}

fn state_text(ss: &StateSpace) -> String {
    let mut out = String::new();
    writeln!(out, "n = {}, inputs = {}, outputs = {}", ss.states(), ss.inputs(), ss.outputs()).unwrap();
    for (name, m) in [("A", ss.a()), ("B", ss.b()), ("C", ss.c())] {
        writeln!(out, "{name} =").unwrap();
        out.push_str(&matrix_text(m));
    }
    out
}

fn matrix_text(m: &Matrix) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("  ({}x{})\n", m.rows(), m.cols());
    }
    m.to_string().lines().map(|l| format!("  {l}\n")).collect()
}

fn emit_state(ss: &StateSpace, format: Option<Format>) -> String {
    match format.unwrap_or(Format::Json) {
        Format::Json => to_json(ss),
        Format::Text => state_text(ss),
    }
}

fn emit_transfer(g: &TransferMatrix, format: Option<Format>) -> String {
    match format.unwrap_or(Format::Text) {
        Format::Json => to_json(g),
        Format::Text => format!("{g}\n"),
    }
}

pub fn analyze(ss: &StateSpace) -> Analysis {
    let kd = kalman_decompose(ss);
    let (a, b, c, d) = kd.dims();
    let rank_mc = rank_exact(&controllability_matrix(ss));
    let rank_mo = rank_exact(&observability_matrix(ss));
    Analysis {
        states: ss.states(),
        inputs: ss.inputs(),
        outputs: ss.outputs(),
        controllable: rank_mc == ss.states(),
        observable: rank_mo == ss.states(),
        rank_mc,
        rank_mo,
        dim_controllable: controllable_space(ss).dim(),
        dim_observable: observable_space(ss).dim(),
        kalman_dims: [a, b, c, d],
        minimal_states: b,
    }
}

fn analysis_text(a: &Analysis) -> String {
    let mut out = String::new();
    writeln!(out, "states: {} (inputs {}, outputs {})", a.states, a.inputs, a.outputs).unwrap();
    writeln!(out, "controllable: {} (rank Mc = {})", a.controllable, a.rank_mc).unwrap();
    writeln!(out, "observable: {} (rank Mo = {})", a.observable, a.rank_mo).unwrap();
    let [q, co, uu, uo] = a.kalman_dims;
    writeln!(
        out,
        "groups: controllable/unobservable {q}, controllable/observable {co}, uncontrollable/unobservable {uu}, uncontrollable/observable {uo}"
    )
    .unwrap();
    writeln!(out, "minimal states: {}", a.minimal_states).unwrap();
    out
}

fn decomposition_text(kd: &KalmanDecomposition) -> String {
    let mut out = String::from("T =\n");
    out.push_str(&matrix_text(&kd.t));
    out.push_str(&state_text(&kd.transformed));
    let g = &kd.groups;
    for (name, idx) in [
        ("controllable/unobservable", &g.controllable_unobservable),
        ("controllable/observable", &g.controllable_observable),
        ("uncontrollable/unobservable", &g.uncontrollable_unobservable),
        ("uncontrollable/observable", &g.uncontrollable_observable),
    ] {
        writeln!(out, "{name}: {idx:?}").unwrap();
    }
    out
}

fn verify_text(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    let multiple = reports.len() > 1;
    for (k, report) in reports.iter().enumerate() {
        if multiple {
            writeln!(out, "case {}:", k + 1).unwrap();
        }
        for e in &report.entries {
            if e.ok {
                writeln!(out, "entry ({}, {}): {} ok", e.row, e.col, e.expected).unwrap();
            } else {
                writeln!(
                    out,
                    "entry ({}, {}): MISMATCH expected {}, realized {}, minimal {}",
                    e.row, e.col, e.expected, e.realized, e.minimal
                )
                .unwrap();
            }
        }
        writeln!(out, "states: {}, minimal states: {}", report.states, report.minimal_states).unwrap();
    }
    let entries: usize = reports.iter().map(|r| r.entries.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    if failed == 0 {
        writeln!(out, "verified {entries} entries").unwrap();
    } else {
        writeln!(out, "{failed} of {entries} entries failed").unwrap();
    }
    out
}

fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let reports = match args.seed {
        Some(seed) => (0..args.count)
            .map(|i| {
                let g = random_transfer_matrix(&mut case_rng(seed, i), 3, 3, 4);
                verify_realization(&g, None)
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => {
            let g = read_transfer(&args.source)?;
            let state = args.state.as_deref().map(read_state_file).transpose()?;
            vec![verify_realization(&g, state.as_ref())?]
        }
    };
    let passed = reports.iter().all(|r| r.passed);
    let stdout = match args.source.format.unwrap_or(Format::Text) {
        Format::Text => verify_text(&reports),
        Format::Json if reports.len() == 1 => to_json(&reports[0]),
        Format::Json => to_json(&reports),
    };
    Ok(Outcome { code: if passed { 0 } else { 1 }, stdout })
}

fn simulate(args: &SimulateArgs) -> Result<Outcome, CliError> {
    let ss = read_state(&args.source)?;
    if args.channel == 0 || args.channel > ss.inputs() {
        return Err(CliError {
            code: 3,
            message: format!("--channel must be between 1 and {}, got {}", ss.inputs(), args.channel),
        });
    }
    if !(args.dt > 0.0 && args.t_end > args.dt) {
        return Err(CliError::input(format!("need t_end > dt > 0, got t_end = {}, dt = {}", args.t_end, args.dt)));
    }
    let record = impulse_response(&ss, args.channel - 1, args.t_end, args.dt)?;
    Ok(Outcome::ok(record.to_csv()))
}

pub fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Realize(src) => {
            let g = read_transfer(&src)?;
            Ok(Outcome::ok(emit_state(&realize_mimo(&g)?, src.format)))
        }
        Command::Transfer(src) => {
            let ss = read_state(&src)?;
            Ok(Outcome::ok(emit_transfer(&transfer_matrix(&ss), src.format)))
        }
        Command::Analyze(src) => {
            let analysis = analyze(&read_state(&src)?);
            Ok(Outcome::ok(match src.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&analysis),
                Format::Text => analysis_text(&analysis),
            }))
        }
        Command::Decompose(src) => {
            let kd = kalman_decompose(&read_state(&src)?);
            Ok(Outcome::ok(match src.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&kd),
                Format::Text => decomposition_text(&kd),
            }))
        }
        Command::Minimize(src) => {
            let ss = read_state(&src)?;
            Ok(Outcome::ok(emit_state(&minimal_realization(&ss), src.format)))
        }
        Command::Verify(args) => verify(&args),
        Command::Simulate(args) => simulate(&args),
    }
}
