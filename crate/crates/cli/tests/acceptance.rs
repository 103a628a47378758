//! One pass/fail line per acceptance criterion. Set `TAMECM_SEED` to change
//! the seed; exits non-zero when any criterion fails.

use tamecm_cli::acceptance::run_all;

fn main() {
    let seed = std::env::var("TAMECM_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    println!("acceptance suite, seed {seed}");
    let reports = run_all(seed);
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", reports.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
