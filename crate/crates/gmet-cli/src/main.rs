//! Command-line front end: verification reports, identity suites,
//! horizon atlases and construction checks, all byte-deterministic for
//! a fixed configuration.

#![allow(clippy::needless_range_loop)]

mod args;
mod construct;
mod horizons;
mod json;
mod report;
mod svg;

use args::{parse_args, CliError, Format};

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&argv));
}

fn run(argv: &[String]) -> i32 {
    let config = match parse_args(argv) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("gmet: {}", e.message());
            return e.exit_code();
        }
    };
    let result = match config.command.as_str() {
        "verify" => report::run_verify(&config).map(|out| emit(&config, out)),
        "identities" => report::run_identities(&config).map(|out| emit(&config, out)),
        "construct" => construct::run_construct(&config).map(|out| emit(&config, out)),
        "horizons" => horizons::run_horizons(&config).map(|out| emit_horizons(&config, out)),
        _ => unreachable!("parse_args validated the command"),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("gmet: {}", e.message());
            e.exit_code()
        }
    }
}

fn emit(config: &args::AuditConfig, out: report::CommandOutput) -> i32 {
    if config.format == Format::Csv || config.format == Format::Svg {
        eprintln!("gmet: {} emits JSON; --format ignored", config.command);
    }
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out.report) {
                eprintln!("gmet: cannot write `{path}`: {e}");
                return CliError::Config(String::new()).exit_code();
            }
            for line in &out.summary {
                println!("{line}");
            }
            println!(
                "{}: {} (report: {path})",
                config.command,
                if out.pass { "PASS" } else { "FAIL" }
            );
        }
        None => print!("{}", out.report),
    }
    i32::from(!out.pass)
}

fn emit_horizons(config: &args::AuditConfig, out: horizons::HorizonOutput) -> i32 {
    for (path, content) in &out.files {
        if let Err(e) = std::fs::write(path, content) {
            eprintln!("gmet: cannot write `{path}`: {e}");
            return 2;
        }
        println!("wrote {path}");
    }
    if !out.report.is_empty() {
        match &config.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &out.report) {
                    eprintln!("gmet: cannot write `{path}`: {e}");
                    return 2;
                }
                for line in &out.summary {
                    println!("{line}");
                }
                println!("horizons: wrote {path}");
            }
            None => print!("{}", out.report),
        }
    }
    0
}
