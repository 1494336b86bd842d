use std::io::Write;

fn main() {
    let out = sconsist::cli::run_args(std::env::args_os());
    if out.code == sconsist::cli::EXIT_INPUT || out.code == sconsist::cli::EXIT_RESOURCE {
        eprint!("{}", out.output);
    } else {
        print!("{}", out.output);
        std::io::stdout().flush().ok();
    }
    std::process::exit(out.code);
}
