use std::process::ExitCode;

fn main() -> ExitCode {
    rabi_qes::cli::run()
}
