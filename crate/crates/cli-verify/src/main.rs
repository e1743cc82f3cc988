use std::io::{stderr, stdout};

fn main() {
    let code = cli_verify::run(std::env::args_os().collect(), &mut stdout(), &mut stderr());
    std::process::exit(code);
}
