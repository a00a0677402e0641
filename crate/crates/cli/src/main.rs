use clap::Parser;

fn main() {
    let cli = ellrot_cli::args::Cli::parse();
    std::process::exit(ellrot_cli::main_with(cli));
}
