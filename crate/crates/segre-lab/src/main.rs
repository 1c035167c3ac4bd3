use std::process::ExitCode;

fn main() -> ExitCode {
    segre_lab::run_cli()
}
