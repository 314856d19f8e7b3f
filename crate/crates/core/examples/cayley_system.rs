// The Cayley matrix of a system, its lattice index and Plücker vector.

use mdisc::{build_cayley, plucker, PointConfig};
use num_traits::Zero;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // c0 + c1 x^2 + c2 y^2 and c0 - c1 x^2 - c2 y^2 up to signs of exponents
    let sys = build_cayley(vec![
        PointConfig::simplex_vertices(2, 2).with_label("f"),
        PointConfig::simplex_vertices(2, -2).with_label("g"),
    ])?;
    println!("{sys}");
    println!("m = {}, d = {}, i(A) = {}", sys.m(), sys.d(), sys.lattice_index());
    assert_eq!(sys.lattice_index(), &4.into());

    let p = plucker(&sys);
    let nonzero = p.iter().filter(|(_, v)| !v.is_zero()).count();
    println!("{nonzero} nonzero Plücker coordinates, gcd {}", p.gcd());
    assert_eq!(p.gcd(), *sys.lattice_index());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
