// Closed-form bidegree of a discriminant of two plane curves, with the
// upper bound and the strongly parallel edges that feed into it.

use mdisc::planar::{bidegree_upper_bound, planar_bidegree, strongly_parallel_pairs, vertex_multiplicity_sum};
use mdisc::{LatticePoint, PointConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a1 = PointConfig::unit_square();
    let a2 = PointConfig::from_pairs(&[(0, 0), (1, 3), (-1, 2), (0, 1), (0, 2)]);

    let pairs = strongly_parallel_pairs(&a1, &a2)?;
    println!("{} strongly parallel edge pairs", pairs.len());
    println!(
        "vertex multiplicities: {} on A1, {} on A2",
        vertex_multiplicity_sum(&a1, &a2),
        vertex_multiplicity_sum(&a2, &a1)
    );

    let deg = planar_bidegree(&a1, &a2)?;
    println!("{deg}");
    assert_eq!(deg.cycle_i64(), vec![12, 8]);

    let report = bidegree_upper_bound(&a1, &a2)?;
    println!("bound ({}, {}), tight: {:?}", report.bound[0], report.bound[1], report.equality);

    // one point fewer, one less in the second degree
    let a2 = a2.without(&LatticePoint::from_i64(&[0, 1])).unwrap();
    let deg = planar_bidegree(&a1, &a2)?;
    println!("without (0,1): {deg}");
    assert_eq!(deg.cycle_i64(), vec![12, 7]);

    for d in 2..=3 {
        let deg = planar_bidegree(&PointConfig::dense_triangle(2), &PointConfig::dense_triangle(d))?;
        println!("tact invariant of a conic and a degree {d} curve: {deg}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
