//! Regenerates the JSON fixtures under `fixtures/` at the repository root.

use std::path::PathBuf;

use peiffer::crossed::mapping_cone;
use peiffer::descriptor::{
    crossed_module_to_file, crossed_square_to_file, grid_to_file, simplicial_to_file,
    two_crossed_to_file, write_fixture, Fixture,
};
use peiffer::fixtures;

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("fixtures"));
    std::fs::create_dir_all(&dir).expect("fixture directory");

    let write = |name: &str, fixture: Fixture| {
        let path = dir.join(name);
        write_fixture(&path, &fixture).expect("write fixture");
        println!("wrote {}", path.display());
    };

    write(
        "constant_s3_grid.json",
        Fixture::Bisimplicial(grid_to_file(&fixtures::constant_s3_grid())),
    );
    write(
        "external_product_grid.json",
        Fixture::Bisimplicial(grid_to_file(&fixtures::external_product_grid())),
    );
    write(
        "d4_normal_pair_grid.json",
        Fixture::Bisimplicial(grid_to_file(
            &fixtures::d4_normal_pair_grid().expect("dihedral grid"),
        )),
    );
    write(
        "nerve_c3_s3.json",
        Fixture::Simplicial(simplicial_to_file(&fixtures::nerve_c3_s3(3))),
    );
    write(
        "c3_s3_crossed_module.json",
        Fixture::CrossedModule(crossed_module_to_file(&fixtures::c3_s3_crossed_module())),
    );
    write(
        "d4_normal_pair_square.json",
        Fixture::CrossedSquare(crossed_square_to_file(&fixtures::d4_normal_pair_square())),
    );
    write(
        "d4_mapping_cone.json",
        Fixture::TwoCrossedModule(two_crossed_to_file(
            &mapping_cone(&fixtures::d4_normal_pair_square()).expect("cone"),
        )),
    );
}
