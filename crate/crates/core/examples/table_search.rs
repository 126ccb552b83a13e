// Searching symmetric sets for C5-saturated circulants and reproducing the
// odd-order table. Pass `--full` to search the exceptional orders without
// an orbit cap.
//
//     cargo run --release --example table_search -- --full

use satforge::search::{find_cycle_sets, reproduce_table, SearchMode, SearchOptions, TableOptions};

fn run(full: bool) -> satforge::Result<()> {
    let first = find_cycle_sets(21, 4, &SearchOptions::default())?;
    println!("least hit for n=21: {:?} after {} candidates", first.hits[0].set, first.nodes_expanded);

    let empty = find_cycle_sets(19, 4, &SearchOptions::default().mode(SearchMode::CertifyEmpty))?;
    println!("n=19 certified empty: {}", empty.certified_empty());

    let opts = TableOptions { certify_cap: if full { None } else { Some(4) }, ..TableOptions::default() };
    let report = reproduce_table(&opts)?;
    print!("{}", report.render()?);
    Ok(())
}

pub fn run_example() -> satforge::Result<()> {
    run(false)
}

#[allow(dead_code)]
fn main() -> satforge::Result<()> {
    run(std::env::args().any(|a| a == "--full"))
}
