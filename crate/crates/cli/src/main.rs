use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use qx_cli::args::{Cli, Command};
use qx_core::DataStore;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let store = match DataStore::discover(cli.data_dir.as_deref()) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    if let Command::Serve { host, port } = &cli.command {
        let rt = match tokio::runtime::Runtime::new() {
            Ok(rt) => rt,
            Err(e) => return fail(&e),
        };
        return match rt.block_on(qx_cli::http::serve(store, host, *port)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(&e),
        };
    }
    match qx_cli::execute(&store, &cli.command, cli.format.as_deref()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &dyn std::fmt::Display) -> ExitCode {
    let msg = e.to_string();
    eprintln!("error: {}", msg.lines().next().unwrap_or_default());
    ExitCode::FAILURE
}
