// Regular K_s-saturated graphs: g3, h4, gprime, the K5 joins and the
// recursive large-clique family.
//
//     cargo run --release --example clique_families

use satforge::constructions::{g3, gprime, h4, k5_family, large_clique_family, CliquePart, Construction};

fn show(c: &Construction) -> satforge::Result<()> {
    let report = c.verify()?;
    println!(
        "{:<40} n={:<3} degree={:<3} {} {}",
        c.spec.to_string(),
        report.n,
        report.degree.map_or("-".into(), |d| d.to_string()),
        report.target,
        report.verdict
    );
    assert!(c.claim_holds(&report));
    Ok(())
}

pub fn run_example() -> satforge::Result<()> {
    show(&g3(3, 1)?)?;
    show(&g3(5, 2)?)?;
    show(&g3(7, 0)?)?;
    show(&h4(3)?)?;
    let gp = gprime(9)?;
    println!("gprime note: {}", gp.spec.note.as_deref().unwrap_or(""));
    show(&gp)?;
    show(&k5_family(42)?)?;
    show(&k5_family(59)?)?;
    show(&large_clique_family(2, 7, 4, CliquePart::Odd)?)?;
    show(&large_clique_family(2, 7, 2, CliquePart::Even)?)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> satforge::Result<()> {
    run_example()
}
