// Construction specs: parse an expression, replay it, and round-trip JSON.
//
//     cargo run --example spec_replay -- "join(g3(7,0),empty(15))"

use satforge::saturation::{verify_construction, Target};
use satforge::ConstructionSpec;

fn run(expr: &str) -> satforge::Result<()> {
    let spec: ConstructionSpec = expr.parse()?;
    let json = serde_json::to_string_pretty(&spec)?;
    println!("{json}");
    let back: ConstructionSpec = serde_json::from_str(&json)?;
    assert_eq!(back, spec);
    let g = spec.build()?;
    println!("{spec}: {} vertices, {} edges, regular {:?}", g.order(), g.edge_count(), g.regular_degree());
    let report = verify_construction(&spec, Target::Clique(4))?;
    println!("K4 verdict: {}", report.verdict);
    Ok(())
}

pub fn run_example() -> satforge::Result<()> {
    run("join(g3(7,0),empty(15))")
}

#[allow(dead_code)]
fn main() -> satforge::Result<()> {
    match std::env::args().nth(1) {
        Some(expr) => run(&expr),
        None => run_example(),
    }
}
