// Deciding whether a system has a discriminant hypersurface at all.

use mdisc::tropical::is_defective;
use mdisc::{build_cayley, LatticePoint, PointConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let quadrics = build_cayley(vec![
        PointConfig::from_pairs(&[(0, 0), (1, 0), (2, 0)]),
        PointConfig::from_pairs(&[(0, 0), (0, 1), (0, 2)]),
    ])?;
    let v = is_defective(&quadrics, 0, 5)?;
    println!("x-quadric and y-quadric: defective = {} ({:?})", v.defective, v.method);
    assert!(v.defective);

    for p in 1..=3 {
        let t = PointConfig::simplex_vertices(2, p);
        let shifted = t.translate(&LatticePoint::from_i64(&[3, -1]));
        let sys = build_cayley(vec![t.clone(), shifted])?;
        let neg = build_cayley(vec![t, PointConfig::simplex_vertices(2, -p)])?;
        println!(
            "p = {p}: translate defective = {}, negative defective = {}",
            is_defective(&sys, 0, 5)?.defective,
            is_defective(&neg, 0, 5)?.defective
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
