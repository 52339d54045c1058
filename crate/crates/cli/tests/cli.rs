use std::path::PathBuf;
use std::process::{Command, Output};

fn okamoto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_okamoto")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes_in_budget() {
    let t = std::time::Instant::now();
    let o = okamoto(&["verify", "all"]);
    assert!(t.elapsed().as_secs() < 60);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    for s in ["algebra", "associahedron", "cluster", "convolution", "painleve"] {
        assert!(text.contains(&format!("{s}: pass")), "{text}");
    }
}

#[test]
fn json_report_is_deterministic_and_ordered() {
    let a = okamoto(&["verify", "all", "--json", "--no-time"]);
    let b = okamoto(&["verify", "all", "--json", "--no-time", "--sequential"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["algebra", "associahedron", "cluster", "convolution", "painleve"]);
    let painleve = &v[4]["checks"];
    assert!(painleve.as_array().unwrap().iter().any(|c| c["id"] == "tildeN-entrywise" && c["pass"] == true));
}

#[test]
fn associahedron_reports_the_census() {
    let o = okamoto(&["verify", "associahedron", "--json", "--no-time", "--verbose"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ids: Vec<&str> = v[0]["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    for id in ["vertices", "edges", "decagons", "tetragons", "cycle-count"] {
        assert!(ids.contains(&id), "{id}");
    }
}

#[test]
fn perturbed_corner_fails_with_witness() {
    let o = okamoto(&["verify", "all", "--perturb-corner"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("tildeN-entrywise"), "{err}");
    assert!(err.contains("entry"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(okamoto(&["verify", "geometry"]).status.code(), Some(2));
    assert_eq!(okamoto(&["mutate"]).status.code(), Some(2));
    assert_eq!(okamoto(&["mutate", "--word", "Q"]).status.code(), Some(2));
    assert_eq!(okamoto(&["convolve", "--tuple", "/nonexistent", "--param", "2"]).status.code(), Some(2));
}

#[test]
fn mutate_gives_the_changed_chart() {
    let o = okamoto(&["mutate", "--word", "O,B,G,O,sigma_O"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("chart_zchange.txt"));
}

#[test]
fn mutate_reads_a_seed_file() {
    let seed = data("triangle_seed.json");
    let o = okamoto(&["mutate", "--seed", &seed, "--word", "a", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coords"][0], "1/Z_a");
    // mutating twice at the same vertex returns the input chart
    let o = okamoto(&["mutate", "--seed", &seed, "--word", "b,b"]);
    assert_eq!(stdout(&o).lines().take(3).collect::<Vec<_>>(), ["a = Z_a", "b = Z_b", "c = Z_c"]);
}

#[test]
fn exports_match_golden_files() {
    for (kind, file) in [
        ("stokes", "stokes.txt"),
        ("census", "census.json"),
        ("flip-graph-dot", "flip_graph.dot"),
        ("flip-graph-json", "flip_graph.json"),
        ("chart", "chart_zchange.txt"),
    ] {
        let o = okamoto(&["export", kind]);
        assert_eq!(o.status.code(), Some(0), "{kind}");
        assert_eq!(stdout(&o), golden(file), "{kind}");
    }
    assert_eq!(stdout(&okamoto(&["stokes", "--emit"])), golden("stokes.txt"));
    let dot = stdout(&okamoto(&["assoc", "--emit", "dot"]));
    let nodes = dot.lines().filter(|l| l.trim_start().starts_with('v') && l.contains('[') && !l.contains("--")).count();
    assert_eq!(nodes, 84);
}

#[test]
fn golden_dir_can_be_overridden() {
    let dir = std::env::temp_dir().join(format!("okamoto-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("chart_zchange.txt"), "O1 = 0\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_okamoto"))
        .args(["verify", "cluster"])
        .env("OKAMOTO_SEED_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("golden-chart-zchange"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn stats_and_stokes_checks() {
    let o = okamoto(&["assoc", "--stats"]);
    assert!(stdout(&o).contains("vertices: 84"));
    let o = okamoto(&["stokes"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("stokes-entrywise"));
}

#[test]
fn convolve_numeric_pairs() {
    let o = okamoto(&["convolve", "--tuple", &data("pair.json"), "--param", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let size = v["output"]["size"].as_u64().unwrap();
    assert_eq!(size as usize + v["quotient_dim"].as_u64().unwrap() as usize, 4);
    let o = okamoto(&["convolve", "--tuple", &data("residues.json"), "--param", "1/2", "--additive"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("dim K"));
    // multiplicative convolution refuses an additive tuple
    let o = okamoto(&["convolve", "--tuple", &data("residues.json"), "--param", "2"]);
    assert_eq!(o.status.code(), Some(2));
}
