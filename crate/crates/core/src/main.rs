use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let outcome = maxalg::cli::run(&args);
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    if !outcome.stdout.is_empty() {
        let _ = writeln!(std::io::stdout().lock(), "{}", outcome.stdout);
    }
    if !outcome.stderr.is_empty() {
        let _ = writeln!(std::io::stderr().lock(), "{}", outcome.stderr);
    }
    std::process::exit(outcome.code);
}
