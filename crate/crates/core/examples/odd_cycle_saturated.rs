// Regular C_{2a+3}-saturated circulants from super sum sets.
//
//     cargo run --release --example odd_cycle_saturated

use satforge::constructions::c_odd_cycle;
use satforge::graph::io::to_graph6;

pub fn run_example() -> satforge::Result<()> {
    for (alpha, k) in [(1, 1), (1, 2), (2, 1), (1, 4)] {
        let c = c_odd_cycle(alpha, k)?;
        let report = c.verify()?;
        println!(
            "alpha={alpha} k={k}: n={} degree={:?} {} -> {}",
            report.n, report.degree, report.target, report.verdict
        );
        assert!(c.claim_holds(&report));
    }
    let c = c_odd_cycle(1, 1)?;
    println!("graph6 of the 17-vertex member: {}", to_graph6(&c.graph));
    Ok(())
}

#[allow(dead_code)]
fn main() -> satforge::Result<()> {
    run_example()
}
