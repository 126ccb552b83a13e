// Sumsets, restricted sumsets and the circulant cycle hypotheses in Z_n.
//
//     cargo run --example sumsets

use satforge::group_sets::{
    check_construction_hypotheses, is_complete_sum_free, restricted_sumset, restricted_walk, sumset, super_sum_set,
    SymmetricSet,
};

pub fn run_example() -> satforge::Result<()> {
    let s: SymmetricSet = "17: 1,3,14,16".parse()?;
    for k in 1..=4 {
        println!("{k}S = {:?}", sumset(&s, k)?.to_vec());
    }
    let r4 = restricted_sumset(&s, 4)?;
    println!("R_4(S) = {:?}", r4.to_vec());
    if let Some(walk) = restricted_walk(&s, 4, 5) {
        println!("5 as a self-avoiding 4-step sum: {walk:?}");
    }

    let report = check_construction_hypotheses(&s, 4)?;
    println!("hypotheses for k = 4 hold: {}", report.holds());
    assert!(report.holds());

    let bad: SymmetricSet = "17: 1,2,15,16".parse()?;
    let report = check_construction_hypotheses(&bad, 4)?;
    println!("{bad}: zero sum {:?}, uncovered {:?}", report.zero_sum, report.uncovered);

    let scsf = SymmetricSet::new(17, 6..=11)?;
    println!("{scsf} complete sum-free: {}", is_complete_sum_free(&scsf));

    for alpha in 1..=2 {
        let set = super_sum_set(alpha, 1)?;
        let ok = check_construction_hypotheses(&set, 2 * alpha + 2)?.holds();
        println!("super sum set alpha={alpha}, k=1: {set} (hypotheses {ok})");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> satforge::Result<()> {
    run_example()
}
