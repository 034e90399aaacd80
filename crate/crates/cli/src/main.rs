use std::io::Write;

fn main() {
    let out = gcr_cli::run(std::env::args_os());
    if out.code == gcr_cli::exit::USAGE {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
