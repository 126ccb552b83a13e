// K4-saturated circulant bases and blow-ups for orders divisible by 5.
// Bases go to a throwaway in-memory store unless a directory is given.
//
//     cargo run --release --example k4_bases -- data/bases

use satforge::constructions::k4_family;
use satforge::search::{seed_bases, BaseStore, SearchOptions};

fn run(store: &BaseStore) -> satforge::Result<()> {
    let gaps = seed_bases(store, [14, 15, 20, 25], 4, &SearchOptions::default())?;
    for (n, exhausted) in &gaps {
        println!("no K4-saturated circulant on {n} vertices (search exhausted: {exhausted})");
    }
    println!("stored base orders: {:?}", store.orders(4)?);
    for n in [36, 39, 50, 75, 100] {
        let c = k4_family(n, store)?;
        let report = c.verify()?;
        println!("k4({n}) = {}: degree {:?}, {}", c.spec, report.degree, report.verdict);
        assert!(c.claim_holds(&report));
    }
    Ok(())
}

pub fn run_example() -> satforge::Result<()> {
    run(&BaseStore::in_memory())
}

#[allow(dead_code)]
fn main() -> satforge::Result<()> {
    match std::env::args().nth(1) {
        Some(dir) => run(&BaseStore::open(dir)),
        None => run_example(),
    }
}
