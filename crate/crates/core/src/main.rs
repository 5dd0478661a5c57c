use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("YL_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(0) => {}
            Ok(n) => {
                if let Err(e) = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                {
                    eprintln!("error: YL_THREADS: {e}");
                    return ExitCode::from(2);
                }
            }
            Err(_) => {
                eprintln!("error: YL_THREADS must be a non-negative integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    let code = young_lattice::cli::run(
        std::env::args_os(),
        &mut stdout().lock(),
        &mut stderr().lock(),
    );
    ExitCode::from(code as u8)
}
