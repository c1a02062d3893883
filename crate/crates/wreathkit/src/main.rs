use std::process::ExitCode;

fn main() -> ExitCode {
    wreathkit::cli::main()
}
