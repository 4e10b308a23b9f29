use clap::Parser;

fn main() {
    let cli = bkpvc_cli::Cli::parse();
    std::process::exit(bkpvc_cli::run(cli));
}
