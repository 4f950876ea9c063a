use clap::Parser;

use tgon::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli.command);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    if !outcome.stderr.is_empty() && !outcome.stderr.ends_with('\n') {
        eprintln!();
    }
    std::process::exit(outcome.code);
}
