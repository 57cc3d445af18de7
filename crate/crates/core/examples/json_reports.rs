//! Driving the command-line front end in-process and reading its JSON.

use qhopf::cli::execute;
use qhopf::VerificationReport;

fn main() {
    let inv = execute([
        "qhopf", "verify", "--suite", "all", "--family", "modified", "--n", "1", "--q", "2",
        "--json",
    ]);
    for line in inv.stdout.lines() {
        let r: VerificationReport = serde_json::from_str(line).expect("report");
        println!(
            "{:<18} pass={} residual={:.3e}",
            r.check, r.pass, r.residual
        );
    }
    println!("exit code {}", inv.exit_code);
}
