use std::io::{IsTerminal, Read};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdin = String::new();
    let io = std::io::stdin();
    if !io.is_terminal() {
        if let Err(e) = io.lock().read_to_string(&mut stdin) {
            eprintln!("error: cannot read standard input: {e}");
            std::process::exit(2);
        }
    }
    let out = hooktab::cli::run(&args, &stdin);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
