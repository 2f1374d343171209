fn main() {
    let (code, output) = finite_spectra::cli::run(std::env::args_os());
    if code == finite_spectra::cli::EXIT_OK || code == finite_spectra::cli::EXIT_ASSERTION {
        print!("{output}");
    } else {
        eprint!("{output}");
    }
    std::process::exit(code);
}
