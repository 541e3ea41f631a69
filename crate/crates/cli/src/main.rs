use std::io;

fn main() {
    let code = d2kit_cli::run_args(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
