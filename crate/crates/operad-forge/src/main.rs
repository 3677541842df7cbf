use std::io::Write;

fn main() {
    let out = operad_forge::cli::run_args(std::env::args_os().skip(1));
    if out.code == 2 {
        eprint!("{}", out.output);
    } else {
        print!("{}", out.output);
        let _ = std::io::stdout().flush();
    }
    std::process::exit(out.code);
}
