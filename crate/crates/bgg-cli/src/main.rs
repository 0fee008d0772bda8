use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = bgg_cli::Cli::parse();
    let out_path = cli.out.clone();
    match bgg_cli::execute(cli) {
        Ok(output) => {
            match out_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, output) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => {
                    let mut stdout = std::io::stdout().lock();
                    let _ = stdout.write_all(output.as_bytes());
                }
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(bgg_cli::exit_code(&err))
        }
    }
}
