use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let result = lex_core::report::run(args.iter().map(String::as_str));
    print!("{}", result.output);
    ExitCode::from(result.exit_code as u8)
}
