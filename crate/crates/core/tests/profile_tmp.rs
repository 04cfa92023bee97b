use matroid_hopf::checks::all_checks;
use matroid_hopf::corpus;
use std::time::Instant;

#[test]
#[ignore]
fn profile_hopf_checks() {
    let cases = corpus::builtin(10);
    for check in all_checks() {
        let start = Instant::now();
        let report = check.run(&cases, 10);
        println!(
            "{:35} {:6} cases  {:?}",
            report.name,
            report.cases,
            start.elapsed()
        );
    }
}
