fn main() {
    eprintln!("CLI not yet wired up");
    std::process::exit(2);
}
