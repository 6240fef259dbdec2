// Driving the command-line front end in-process and reading its JSON or CSV reports.

use zalcman::cli;
use zalcman::report::Report;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let out = cli::run(["zalcman", "bounds", "--class", "nw", "--lambda", "1,4/3", "--n", "2:4", "--format", "csv"]);
    print!("{}", out.stdout);
    assert_eq!(out.code, 0);

    let out = cli::run(["zalcman", "optimize", "--class", "hull-convex", "--lambda", "1", "--n", "3", "--seed", "7"]);
    let report: Report = serde_json::from_str(&out.stdout)?;
    let row = &report.rows[0];
    println!(
        "optimize: value {:.12}, bound {:?}, gap {:?}, exit code {}",
        row.value, row.bound, row.gap, out.code
    );

    let out = cli::run(["zalcman", "optimize", "--class", "nw", "--lambda", "2", "--n", "3"]);
    println!("out of range: exit code {} — {}", out.code, out.stderr.trim());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("reports example");
}
