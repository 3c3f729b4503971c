use clap::Parser;

fn main() {
    let cli = broomex::cli::Cli::parse();
    if let Err(e) = broomex::cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
