use std::process::ExitCode;

fn main() -> ExitCode {
    let out = series_euclid::cli::run(std::env::args_os());
    if out.code == 1 {
        eprintln!("{}", out.output);
    } else {
        println!("{}", out.output);
    }
    ExitCode::from(out.code as u8)
}
