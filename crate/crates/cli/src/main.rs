use std::process::ExitCode;

use clap::Parser;

use monoid_forge_cli::{run, Cli};

fn configure_threads() {
    let Ok(value) = std::env::var("MONOID_FORGE_THREADS") else {
        return;
    };
    match value.trim().parse::<usize>() {
        Ok(threads) if threads > 0 => {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
        _ => eprintln!("warning: ignoring MONOID_FORGE_THREADS={value}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli.command) {
        Ok(outcome) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.report).expect("serializable")
                );
            } else {
                println!("{}", outcome.text);
            }
            if outcome.violations {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
