// graph6, DOT and edge-list JSON, plus verification of a parsed graph.
//
//     cargo run --example graph_formats

use satforge::graph::io::{from_graph6, parse_any, render, to_dot, to_graph6, to_json, GraphFormat};
use satforge::graph::{empty_graph, join, petersen};
use satforge::saturation::{check, Target};

pub fn run_example() -> satforge::Result<()> {
    let p = petersen();
    let g6 = to_graph6(&p);
    println!("Petersen graph6: {g6}");
    assert_eq!(from_graph6(&g6)?, p);
    println!("{}", to_json(&p));

    let k33 = join(&empty_graph(3), &empty_graph(3));
    print!("{}", to_dot(&k33, "K33"));
    let parsed = parse_any(&render(&k33, GraphFormat::Json))?;
    let v = check(&parsed, Target::Cycle(5))?;
    println!("K33 parsed back from JSON is {} for {}", v.verdict, v.target);

    for target in [Target::Clique(3), Target::Clique(4)] {
        let v = check(&parse_any(&g6)?, target)?;
        println!("Petersen {target}: {} {:?}", v.verdict, v.certificate);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> satforge::Result<()> {
    run_example()
}
