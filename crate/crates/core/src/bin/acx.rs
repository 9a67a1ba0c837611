use std::io::Write;

use acx::cli::{run, Cli};
use clap::Parser;

fn main() {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("ACX_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let out = run(&cli);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
