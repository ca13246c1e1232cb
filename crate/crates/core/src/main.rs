use clap::Parser;

fn main() {
    let cli = genschur::cli::Cli::parse();
    std::process::exit(genschur::cli::main_with(cli));
}
