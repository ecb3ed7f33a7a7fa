fn main() {
    let stdout = std::io::stdout();
    let code = birkhoff::cli::main_with(std::env::args_os(), &mut stdout.lock());
    std::process::exit(code);
}
