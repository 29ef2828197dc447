use std::io::Write;

fn main() {
    let out = descent_forge::cli::run(std::env::args_os());
    let _ = writeln!(std::io::stdout(), "{}", out.output);
    std::process::exit(out.status);
}
