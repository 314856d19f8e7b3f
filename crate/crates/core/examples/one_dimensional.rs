// A plane curve against a segment: the three cases for parallel edges.

use mdisc::planar::{one_dim_degree, OneDimCase};
use mdisc::PointConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let triangle = PointConfig::dense_triangle(2);
    let cases = [
        ("no parallel edge", PointConfig::from_pairs(&[(0, 0), (1, 1), (2, 2)])),
        ("one parallel edge", PointConfig::from_pairs(&[(0, 0), (1, 0)])),
        (
            "two parallel edges",
            PointConfig::from_pairs(&[(0, 0), (1, 0), (0, 1), (1, 1)]),
        ),
    ];
    for (name, segment) in &cases[..2] {
        let r = one_dim_degree(&triangle, segment)?;
        println!("{name}: δ2 = {}, {:?}, defective = {}", r.delta2, r.case, r.defective);
    }
    let square = &cases[2].1;
    let segment = PointConfig::from_pairs(&[(0, 0), (1, 0)]);
    let r = one_dim_degree(square, &segment)?;
    println!("{}: δ2 = {}, {:?}, defective = {}", cases[2].0, r.delta2, r.case, r.defective);
    assert_eq!(r.case, OneDimCase::TwoParallelEdges);
    assert!(r.defective);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
