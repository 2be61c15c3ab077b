use clap::Parser;

fn main() {
    env_logger::init();
    let cli = fps_cli::Cli::parse();
    std::process::exit(fps_cli::run(cli));
}
