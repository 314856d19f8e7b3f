// Ray shooting: the multidegree from maximal chains of flats, for any n.

use mdisc::tropical::{generic_weight, tropical_run, RayShooter, TropicalOptions};
use mdisc::{build_cayley, PointConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // c_i0 + c_i1 x^{d_i} + c_i2 y^{d_i} + c_i3 z^{d_i}
    let d = [1, 2, 3];
    let sys = build_cayley(d.iter().map(|&k| PointConfig::simplex_vertices(3, k)).collect())?;

    let shooter = RayShooter::new(&sys)?;
    println!("{} chains, {} can meet the ray", shooter.chains().len(), shooter.active_chains());
    let w = generic_weight(sys.m(), 7);
    let shot = shooter.shoot(&w.w)?;
    println!("w = {:?}", shot.weight);
    println!("{} nonzero contributions", shot.contributions.len());
    println!("block degrees {:?}", shot.block_degrees.iter().map(|b| b.to_string()).collect::<Vec<_>>());

    let run = tropical_run(&sys, &TropicalOptions::default())?;
    println!("{} over {} seeds", run.degree, run.runs.len());
    assert_eq!(run.degree.cycle_i64(), vec![18, 12, 10]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
