use clap::Parser;

use bricklab::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
