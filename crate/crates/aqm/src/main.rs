use std::io::{self, IsTerminal};
use std::process::ExitCode;

use aqm::cli::{self, Cli, Console, Format};
use aqm::render::Style;
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let color = cli.format == Format::Text
        && std::env::var_os("AQM_NO_COLOR").is_none()
        && stdout.is_terminal();
    let mut out = stdout.lock();
    let mut err = io::stderr().lock();
    let mut console = Console {
        out: &mut out,
        err: &mut err,
        style: Style { color },
    };
    ExitCode::from(cli::run(cli, &mut console))
}
