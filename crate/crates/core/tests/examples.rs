//! Every program under examples/ runs to completion.

#[allow(dead_code)]
#[path = "../examples/candidates.rs"]
mod candidates;

#[test]
fn candidates_runs() {
    candidates::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/quartic_walls.rs"]
mod quartic_walls;

#[test]
fn quartic_walls_runs() {
    quartic_walls::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/cubic_walls.rs"]
mod cubic_walls;

#[test]
fn cubic_walls_runs() {
    cubic_walls::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/binary_stability.rs"]
mod binary_stability;

#[test]
fn binary_stability_runs() {
    binary_stability::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/centroid.rs"]
mod centroid;

#[test]
fn centroid_runs() {
    centroid::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/beta_demo.rs"]
mod beta_demo;

#[test]
fn beta_demo_runs() {
    beta_demo::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/s_values.rs"]
mod s_values;

#[test]
fn s_values_runs() {
    s_values::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/kwalls_atlas.rs"]
mod kwalls_atlas;

#[test]
fn kwalls_atlas_runs() {
    kwalls_atlas::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/gorenstein.rs"]
mod gorenstein;

#[test]
fn gorenstein_runs() {
    gorenstein::run_example().unwrap();
}
