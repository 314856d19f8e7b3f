// Gale duality and the lattice of flats of the dual matroid.

use mdisc::matroid::{dual_rank_from_primal, gale_dual, members, DualMatroid};
use mdisc::{build_cayley, PointConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sys = build_cayley(vec![PointConfig::unit_square(), PointConfig::unit_square()])?;
    let gale = gale_dual(sys.matrix())?;
    println!("Gale dual, corank {}:\n{}", gale.corank(), gale.beta());

    let mat = DualMatroid::new(&gale);
    println!("rank {}, {} bases, uniform: {}", mat.rank(), mat.bases().len(), mat.is_uniform());
    for k in 1..mat.rank() {
        println!("rank {k} flats: {:?}", mat.flats_of_rank(k));
    }
    let chains = mat.maximal_chains();
    println!("{} maximal chains, e.g. {}", chains.len(), chains[0]);

    // ranks agree with the primal formula
    for mask in 0..(1u64 << sys.m()) {
        assert_eq!(mat.rank_of(mask), dual_rank_from_primal(sys.matrix(), mask), "{:?}", members(mask));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
