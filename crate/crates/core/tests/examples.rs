mod cayley_system {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cayley_system.rs"));
}

mod command_line {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

mod defectiveness {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/defectiveness.rs"));
}

mod lattice_polygons {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattice_polygons.rs"));
}

mod matroid_chains {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/matroid_chains.rs"));
}

mod one_dimensional {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/one_dimensional.rs"));
}

mod planar_degree {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/planar_degree.rs"));
}

mod strata_fit {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/strata_fit.rs"));
}

mod tropical_degree {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tropical_degree.rs"));
}

#[test]
fn cayley_system_runs() {
    cayley_system::run_example().expect("cayley_system should run");
}

#[test]
fn command_line_runs() {
    command_line::run_example().expect("command_line should run");
}

#[test]
fn defectiveness_runs() {
    defectiveness::run_example().expect("defectiveness should run");
}

#[test]
fn lattice_polygons_runs() {
    lattice_polygons::run_example().expect("lattice_polygons should run");
}

#[test]
fn matroid_chains_runs() {
    matroid_chains::run_example().expect("matroid_chains should run");
}

#[test]
fn one_dimensional_runs() {
    one_dimensional::run_example().expect("one_dimensional should run");
}

#[test]
fn planar_degree_runs() {
    planar_degree::run_example().expect("planar_degree should run");
}

#[test]
fn strata_fit_runs() {
    strata_fit::run_example().expect("strata_fit should run");
}

#[test]
fn tropical_degree_runs() {
    tropical_degree::run_example().expect("tropical_degree should run");
}
