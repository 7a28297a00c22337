use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use hendry_core::graph6;
use hendry_core::structure::is_induced_path;
use hendry_core::LabeledGraph;
use serde_json::Value;

const C6: &str = "EhEG";
const C4: &str = "Cl";
const SUN3: &str = "E}Y_";
const P30: &str = "]hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G";

struct Out {
    code: i32,
    json: Value,
    stderr: String,
}

fn hendry(args: &[&str], env: &[(&str, &str)]) -> Out {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hendry"));
    cmd.args(args).env_remove("HENDRY_SUBSET_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    Out {
        code: out.status.code().expect("exited"),
        json: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests").join(name);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_g6(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, format!("{text}\n")).unwrap();
    p.display().to_string()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs").join(name);
    let schema: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_report(v: &Value) {
    let validator = schema("report.schema.json");
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{v:#}");
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name} in {report:#}"))
}

fn ids(v: &Value) -> Vec<usize> {
    v["ids"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect()
}

fn names(v: &Value) -> Vec<String> {
    v["names"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

fn generated_hk3(dir: &Path) -> (String, LabeledGraph) {
    let prefix = dir.join("hk3");
    let out = hendry(
        &[
            "generate",
            "hk",
            "--k",
            "3",
            "--sizes",
            "3,3,3,3,3",
            "--out",
            prefix.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    let g6 = prefix.with_extension("g6");
    let g = graph6::decode(&fs::read_to_string(&g6).unwrap()).unwrap();
    (g6.display().to_string(), g)
}

#[test]
fn generate_writes_graph_and_sidecar() {
    let dir = scratch("generate");
    let prefix = dir.join("hk3");
    let out = hendry(
        &[
            "generate",
            "hk",
            "--k",
            "3",
            "--sizes",
            "3,3,3,3,3",
            "--out",
            prefix.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(out.code, 0);
    assert_eq!(out.json["n"], 15);
    assert_eq!(out.json["heavy_edges"], 5);
    let side: Value = serde_json::from_str(&fs::read_to_string(prefix.with_extension("json")).unwrap()).unwrap();
    assert_eq!(side["n"], 15);
    assert!(side["roles"].as_array().unwrap().iter().any(|r| r == "z"));
    let g = graph6::decode(&fs::read_to_string(prefix.with_extension("g6")).unwrap()).unwrap();
    assert_eq!(g.edge_count() as u64, out.json["m"].as_u64().unwrap());

    let out = hendry(
        &[
            "generate",
            "dn",
            "--n",
            "20",
            "--out",
            dir.join("dn20").to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(out.code, 0);
    // C(8, 2) + 37
    assert_eq!(out.json["m"], 28 + 37);
}

#[test]
fn usage_errors_exit_two() {
    let dir = scratch("usage");
    let gk = dir.join("gk");
    assert_eq!(
        hendry(&["generate", "gk", "--k", "0", "--out", gk.to_str().unwrap()], &[]).code,
        2
    );
    assert_eq!(hendry(&["generate", "petersen"], &[]).code, 2);
    assert_eq!(hendry(&["generate", "hk", "--k", "3", "--sizes", "3,3"], &[]).code, 2);
    let c6 = write_g6(&dir, "c6.g6", C6);
    assert_eq!(hendry(&["check", &c6], &[]).code, 2);
    assert_eq!(hendry(&["check", "/nonexistent/graph.g6", "--chordal"], &[]).code, 2);
    let out = hendry(&["certify", "--mode", "lemma:no-such-claim"], &[]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("known ids"));
    assert_eq!(
        hendry(
            &["certify", "--family", "hk", "--k", "3", "--mode", "s-extendibility"],
            &[]
        )
        .code,
        2
    );
}

#[test]
fn check_pasted_family_from_file() {
    let dir = scratch("check-hk");
    let (path, g) = generated_hk3(&dir);
    let out = hendry(
        &["check", &path, "--chordal", "--strongly-chordal", "--hamiltonian"],
        &[],
    );
    assert_eq!(out.code, 0, "{:#}", out.json);
    assert_report(&out.json);
    let listed: Vec<&str> = out.json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(listed, ["chordal", "hamiltonian", "strongly_chordal"]);
    // the sidecar roles come back with the file
    let cycle = &check(&out.json, "hamiltonian")["certificate"]["cycle"];
    assert_eq!(ids(cycle).len(), 15);
    assert!(names(cycle).contains(&"z".to_string()));
    let seq = ids(cycle);
    for i in 0..seq.len() {
        assert!(g.has_edge(seq[i], seq[(i + 1) % seq.len()]));
    }
}

#[test]
fn failing_checks_carry_witnesses() {
    let dir = scratch("witnesses");
    let c6 = write_g6(&dir, "c6.g6", C6);
    let out = hendry(&["check", &c6, "--chordal"], &[]);
    assert_eq!(out.code, 1);
    assert_report(&out.json);
    assert_eq!(
        ids(&check(&out.json, "chordal")["certificate"]["induced_cycle"]).len(),
        6
    );

    let sun = write_g6(&dir, "sun.g6", SUN3);
    let out = hendry(&["check", &sun, "--chordal", "--strongly-chordal"], &[]);
    assert_eq!(out.code, 1);
    assert_report(&out.json);
    assert_eq!(check(&out.json, "chordal")["status"], "pass");
    let stuck = ids(&check(&out.json, "strongly_chordal")["certificate"]["no_simple_vertex"]);
    assert_eq!(stuck, vec![0, 1, 2, 3, 4, 5]);

    let (path, g) = generated_hk3(&dir);
    let out = hendry(
        &[
            "check",
            &path,
            "--induced-path",
            "--pt",
            "9",
            "--bull-free",
            "--min-connectivity",
            "3",
        ],
        &[],
    );
    assert_eq!(out.code, 1);
    assert_report(&out.json);
    let path9 = ids(&check(&out.json, "pt_free")["certificate"]["induced_path"]);
    assert_eq!(path9.len(), 9);
    assert!(is_induced_path(&g, &path9));

    let bull = ids(&check(&out.json, "bull_free")["certificate"]["bull"]);
    let mut degrees: Vec<usize> = bull
        .iter()
        .map(|&a| bull.iter().filter(|&&b| g.has_edge(a, b)).count())
        .collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 1, 2, 3, 3]);

    let conn = &check(&out.json, "connectivity")["certificate"];
    assert_eq!(conn["kappa"], 2);
    let cut = ids(&conn["cut"]);
    let rest = g.all_vertices().difference(&g.vertex_set(cut));
    assert!(!g.is_connected_within(&rest));
}

#[test]
fn caps_exit_three() {
    let dir = scratch("caps");
    let p30 = write_g6(&dir, "p30.g6", P30);
    let out = hendry(&["check", &p30, "--hamiltonian"], &[]);
    assert_eq!(out.code, 3);
    assert_report(&out.json);
    assert_eq!(check(&out.json, "hamiltonian")["status"], "cap_exceeded");

    let (path, _) = generated_hk3(&dir);
    let out = hendry(
        &["check", &path, "--hamiltonian", "--chordal"],
        &[("HENDRY_SUBSET_CAP", "10")],
    );
    assert_eq!(out.code, 3);
    assert_eq!(check(&out.json, "chordal")["status"], "pass");
    let out = hendry(
        &["certify", &path, "--mode", "extendibility"],
        &[("HENDRY_SUBSET_CAP", "12")],
    );
    assert_eq!(out.code, 3);
}

#[test]
fn extendibility_witness_replays_through_check() {
    let dir = scratch("replay");
    let out = hendry(
        &[
            "certify",
            "--family",
            "hk",
            "--k",
            "3",
            "--sizes",
            "3,3,3,3,3",
            "--mode",
            "extendibility",
        ],
        &[],
    );
    assert_eq!(out.code, 1);
    assert_report(&out.json);
    let cert = &check(&out.json, "cycle_extendible")["certificate"];
    let mut omitted = names(&cert["omitted"]);
    omitted.sort();
    assert_eq!(omitted, ["v3", "z"]);

    let (path, _) = generated_hk3(&dir);
    let witness: Vec<String> = ids(&cert["witness"]).iter().map(usize::to_string).collect();
    let out = hendry(&["check", &path, "--cyclable-set", &witness.join(",")], &[]);
    assert_eq!(out.code, 0);
    let replay = &check(&out.json, "cyclable_set")["certificate"];
    assert!(ids(&replay["one_vertex_extensions"]).is_empty());
    assert_eq!(ids(&replay["cycle"]).len(), 13);
}

#[test]
fn s_extendibility_of_subdivided_family() {
    let out = hendry(
        &[
            "certify",
            "--family",
            "hkm",
            "--k",
            "3",
            "--m",
            "3",
            "--mode",
            "s-extendibility",
            "--set",
            "1,2",
        ],
        &[],
    );
    assert_eq!(out.code, 1);
    assert_report(&out.json);
    let c = check(&out.json, "s_cycle_extendible");
    assert_eq!(c["verdict"], false);
    assert!(!ids(&c["certificate"]["witness"]).is_empty());
}

#[test]
fn lemma_modes() {
    let out = hendry(&["certify", "--mode", "lemma:heavy-miss-one", "--k", "3"], &[]);
    assert_eq!(out.code, 0, "{:#}", out.json);
    assert_report(&out.json);
    for name in [
        "k3.base.without_z",
        "k3.base.without_vk",
        "k3.chord.without_z",
        "k3.chord.without_vk",
    ] {
        assert_eq!(check(&out.json, name)["certificate"]["heavy_cycles"], 0);
    }
    for (lemma, code) in [
        ("base-simple-order", 0),
        ("heavy-hamiltonian", 0),
        ("long-heavy-cycle", 0),
        ("counterexample", 0),
        ("chord-variant", 0),
        ("s-extension", 0),
        ("subtree-models", 0),
    ] {
        let out = hendry(&["certify", "--mode", &format!("lemma:{lemma}")], &[]);
        assert_eq!(out.code, code, "{lemma}: {:#}", out.json);
        assert_report(&out.json);
    }
    let out = hendry(&["certify", "--mode", "lemma:blowup", "--k", "4"], &[]);
    assert_eq!(out.code, 0, "{:#}", out.json);
    assert_eq!(check(&out.json, "k4.connectivity_is_k")["certificate"]["kappa"], 4);
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: Value| {
        for c in v["checks"].as_array_mut().unwrap() {
            c["elapsed_ms"] = Value::Null;
        }
        v
    };
    let args = ["certify", "--family", "hplus", "--k", "3", "--mode", "extendibility"];
    assert_eq!(strip(hendry(&args, &[]).json), strip(hendry(&args, &[]).json));
}

#[test]
fn models() {
    let validator = schema("model.schema.json");
    let out = hendry(&["model", "--family", "hk", "--k", "3", "--verify"], &[]);
    assert_eq!(out.code, 0);
    assert!(validator.is_valid(&out.json));
    assert_eq!(out.json["method"], "explicit");
    assert_eq!(out.json["stats"]["leaves"], 5);
    assert_eq!(out.json["stats"]["branch_vertices"], 3);
    assert_eq!(out.json["verified"], true);

    let out = hendry(&["model", "--family", "jk", "--k", "3", "--x-order", "6"], &[]);
    assert_eq!(out.code, 0);
    assert!(validator.is_valid(&out.json));
    assert_eq!(out.json["stats"]["leaves"], 6);
    assert_eq!(out.json["stats"]["branch_vertices"], 4);

    let dir = scratch("models");
    let (path, g) = generated_hk3(&dir);
    let out = hendry(&["model", &path, "--verify"], &[]);
    assert_eq!(out.code, 0);
    assert!(validator.is_valid(&out.json));
    assert_eq!(out.json["method"], "clique_tree");
    assert_eq!(out.json["model"]["assign"].as_object().unwrap().len(), g.n());

    let c4 = write_g6(&dir, "c4.g6", C4);
    let out = hendry(&["model", &c4], &[]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not chordal"));
}
