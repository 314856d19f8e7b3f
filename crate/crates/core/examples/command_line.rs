// Driving the `mdisc` front end from code: write an input file, run a job.

use mdisc::cli::{run, to_json, Format, JobSpec, Method};
use mdisc::PointConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("mdisc-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let file = dir.join("hyperdet.json");
    let configs = vec![PointConfig::unit_square(), PointConfig::unit_square()];
    std::fs::write(&file, to_json(&configs).to_string())?;

    let out = run(&JobSpec::Degree {
        method: Method::Both,
        seed: 0,
        force: false,
        format: Format::Json,
        file: file.clone(),
    });
    print!("{}", out.stdout);
    assert_eq!(out.code, 0);

    let out = run(&JobSpec::Examples {
        list: false,
        run: Some("square-triangle".into()),
    });
    print!("{}", out.stdout);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
