// Convex hulls, normalized areas and mixed volumes of lattice polygons.
//
// ```bash
// cargo run --example lattice_polygons
// ```

use mdisc::lattice::{boundary_lattice_points, convex_hull, lattice_points, minkowski_sum, mixed_volume2, normalized_area};
use mdisc::LatticePoint;

fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
    v.iter().map(|&(x, y)| LatticePoint::from_i64(&[x, y])).collect()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let square = convex_hull(&pts(&[(0, 0), (1, 0), (0, 1), (1, 1)]));
    let triangle = convex_hull(&pts(&[(0, 0), (1, 3), (-1, 2)]));

    let sum = minkowski_sum(&square, &triangle);
    println!("square + triangle has {} vertices", sum.vertices().len());
    println!("2·area(square)   = {}", normalized_area(&square));
    println!("2·area(triangle) = {}", normalized_area(&triangle));
    println!("mixed volume     = {}", mixed_volume2(&square, &triangle));

    // Pick: 2A = 2I + B - 2
    let b = boundary_lattice_points(&triangle);
    let all = lattice_points(&triangle).len();
    let interior = all as i64 - i64::try_from(&b)?;
    println!("triangle: {interior} interior, {b} boundary lattice points");
    assert_eq!(normalized_area(&triangle), 2 * interior + b - 2);
    assert_eq!(mixed_volume2(&square, &triangle), 5.into());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
