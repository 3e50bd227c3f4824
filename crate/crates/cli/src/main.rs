use clap::Parser;
use gldim_lab::{main_with, Cli};

fn main() {
    // clap exits with code 2 on usage errors
    let cli = Cli::parse();
    std::process::exit(main_with(&cli));
}
