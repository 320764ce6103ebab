use clap::Parser;

fn main() {
    let cli = fano_schubert::cli::Cli::parse();
    std::process::exit(fano_schubert::cli::run(cli));
}
