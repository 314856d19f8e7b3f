// Tropical matroid strata and degree formulas linear in Plücker coordinates.

use mdisc::cli::trinomial_system;
use mdisc::strata::{fingerprint, fit_degree_formula, same_stratum};
use mdisc::tropical::tropical_degree;
use mdisc::{build_cayley, plucker, PointConfig};

fn sparse(d1: i64, d2: i64) -> Result<mdisc::CayleySystem, mdisc::Error> {
    build_cayley(vec![PointConfig::simplex_vertices(2, d1), PointConfig::simplex_vertices(2, d2)])
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let base = fingerprint(&sparse(3, 2)?)?;
    for (d1, d2) in [(5, 2), (4, 1), (3, -2), (4, -1)] {
        let f = fingerprint(&sparse(d1, d2)?)?;
        println!("({d1},{d2}) same stratum as (3,2): {}", same_stratum(&base, &f));
    }

    let mut samples = Vec::new();
    for (p, q, r) in [(2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)] {
        let sys = build_cayley(trinomial_system(p, q, r))?;
        let deg = tropical_degree(&sys, 0)?;
        println!("trinomials ({p},{q},{r}): {deg}");
        samples.push((sys, deg));
    }
    let held = build_cayley(trinomial_system(2, 3, 7))?;
    let held_deg = tropical_degree(&held, 0)?;
    for block in 0..3 {
        let formula = fit_degree_formula(&samples, block, Some((&held, &held_deg)))?;
        println!("block {} degree = {formula}", block + 1);
        assert_eq!(formula.evaluate(&plucker(&held)), held_deg.cycle[block].clone().into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
