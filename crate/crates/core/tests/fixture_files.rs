use std::path::PathBuf;

use lefcon::cli::parse_workspace;
use lefcon::fixtures;
use lefcon::simplicial::Homology;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Shipped files equal the generated documents. Set `LEFCON_REGENERATE=1` to rewrite them.
#[test]
fn shipped_files_match_generated_documents() {
    let regenerate = std::env::var_os("LEFCON_REGENERATE").is_some();
    for (name, doc) in fixtures::workspace_files() {
        let path = fixture_dir().join(name);
        let text = doc.to_text();
        if regenerate {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(on_disk, text, "{name} is stale; rerun with LEFCON_REGENERATE=1");
    }
}

#[test]
fn every_file_parses_and_round_trips() {
    for (name, doc) in fixtures::workspace_files() {
        let ws = parse_workspace(&doc.to_text()).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(ws.document(), &doc, "{name}");
        let again = parse_workspace(&ws.document().to_text()).unwrap();
        assert_eq!(again.document(), ws.document(), "{name}");
    }
}

#[test]
fn parsed_objects_match_library_fixtures() {
    let files: std::collections::HashMap<_, _> = fixtures::workspace_files().into_iter().collect();
    let load = |name: &str| parse_workspace(&files[name].to_text()).unwrap();

    let circles = load("circles.lef");
    assert_eq!(circles.pair("tri").unwrap().pair, fixtures::circle(3));
    assert_eq!(circles.map("hex_cover").unwrap().map, fixtures::hexagon_double_cover());
    assert_eq!(
        circles.system("doubling").unwrap().map(),
        fixtures::doubling_system().map()
    );

    let arm = load("robot_arm2.lef");
    assert_eq!(arm.system("arm").unwrap().map(), fixtures::robot_arm(2).map());
    assert_eq!(arm.complex("torus").unwrap(), fixtures::circle_power(2).total());

    let cyl = load("cylinder.lef");
    assert_eq!(cyl.pair("cylinder").unwrap().pair, fixtures::cylinder());
    assert_eq!(
        Homology::compute(&cyl.pair("cylinder").unwrap().pair).betti_numbers(),
        vec![0, 1, 1]
    );
    let mobius = load("mobius.lef");
    assert_eq!(mobius.pair("mobius").unwrap().pair, fixtures::mobius_band());
}

#[test]
fn readme_workspace_example_parses() {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    let start = readme.find("```text\n").expect("example block") + "```text\n".len();
    let end = start + readme[start..].find("```").unwrap();
    let ws = parse_workspace(&readme[start..end]).unwrap();
    assert!(ws.system("rotate").is_some());
    assert_eq!(
        Homology::compute(&ws.pair("cylinder").unwrap().pair).betti_numbers(),
        vec![0, 1, 1]
    );
}
