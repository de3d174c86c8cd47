fn main() {
    // Belt and braces for the no-panic contract: a bug shows up as a
    // structured internal error with exit code 2, not an abort.
    let outcome = std::panic::catch_unwind(|| ybacc_cli::run_from(std::env::args_os()));
    let out = outcome.unwrap_or_else(|_| ybacc_cli::Output {
        stdout: ybacc_cli::CliError::internal("unexpected internal failure").document(),
        code: 2,
    });
    println!("{}", out.stdout);
    std::process::exit(out.code);
}
