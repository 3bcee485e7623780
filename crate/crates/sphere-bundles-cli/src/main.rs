//! Binary entry point: parse arguments, execute, render, exit.
//!
//! All decision logic lives in the library crate; this file only chooses
//! where bytes go.  Text-mode errors land on stderr, everything else on
//! stdout, and JSON mode always emits the full report object on stdout so
//! scripted callers can rely on a single parseable document per run.  A
//! closed pipe (e.g. `sphere-bundles classes 16 | head`) ends delivery
//! quietly without disturbing the exit code of the computation itself.

use std::io::{self, ErrorKind, Write};

use clap::Parser;
use sphere_bundles_cli::{execute, render_text, Cli, FormatArg, Payload};

/// Write a line to `sink`; a broken pipe is not an error, anything else is.
fn deliver(sink: &mut dyn Write, text: &str) -> io::Result<()> {
    match writeln!(sink, "{text}") {
        Err(err) if err.kind() == ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn main() {
    let cli = Cli::parse();
    let (report, code) = execute(&cli);

    if cli.verbose > 0 {
        let echo = format!(
            "# {} {}",
            report.command.name,
            serde_json::Value::Object(report.command.args.clone())
        );
        let _ = deliver(&mut io::stderr().lock(), &echo);
    }

    let outcome = match cli.format {
        FormatArg::Json => {
            let rendered =
                serde_json::to_string_pretty(&report).expect("reports always serialize");
            deliver(&mut io::stdout().lock(), &rendered)
        }
        FormatArg::Text => {
            let rendered = render_text(&report);
            if matches!(report.payload, Payload::Error(_)) {
                deliver(&mut io::stderr().lock(), &rendered)
            } else {
                deliver(&mut io::stdout().lock(), &rendered)
            }
        }
    };

    if let Err(err) = outcome {
        let _ = deliver(&mut io::stderr().lock(), &format!("error: cannot write report: {err}"));
        std::process::exit(sphere_bundles_cli::exit_code::ERROR);
    }
    std::process::exit(code);
}
