use clap::Parser;

fn main() {
    let status = twofun_cli::main_with(twofun_cli::Cli::parse());
    std::process::exit(status as i32);
}
