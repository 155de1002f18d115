use std::io;

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let code = hermitia_cli::run_command(&argv, &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
