//! Run every verification driver on one shape and print the reports.

use hooktab::{verify, CheckId, EnumBounds, Partition};

fn main() {
    let lambda = Partition::new(vec![2, 1]).unwrap();
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    for check in CheckId::ALL {
        let report = verify(check, &lambda, EnumBounds::new(3, 2), jobs);
        println!(
            "{:<18} {:>6} instances  {}  ({} ms)",
            check.name(),
            report.instances_checked,
            if report.passed { "ok" } else { "FAILED" },
            report.elapsed_ms
        );
    }
}
