use std::process::ExitCode;

fn main() -> ExitCode {
    monomat_cli::main_with_args(std::env::args_os())
}
