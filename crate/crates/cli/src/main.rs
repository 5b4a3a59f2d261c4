mod args;
mod commands;
mod error;
mod values;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate(a) => commands::generate_cmd(a),
        Command::Analyze(a) => commands::analyze_cmd(a),
        Command::Table2(a) => commands::table2_cmd(a),
        Command::SweepP(a) => commands::sweep_p_cmd(a),
        Command::SweepDelta(a) => commands::sweep_delta_cmd(a),
        Command::Grid(a) => commands::grid_cmd(a),
        Command::Trajectory(a) => commands::trajectory_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
