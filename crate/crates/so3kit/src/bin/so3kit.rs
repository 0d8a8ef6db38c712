use clap::Parser;

fn main() {
    let cli = so3kit::cli::Cli::parse();
    std::process::exit(so3kit::cli::run(cli));
}
