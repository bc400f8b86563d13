use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wheelkit")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wheelkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn query_shapes() {
    let k5 = file("k5.g6", "D~{\n");
    let o = bin(&["color", path(&k5)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["colorable"], false);
    assert!(v["assignment"].is_null());

    let v = json(&bin(&["k5", path(&k5)]));
    assert_eq!(v["branch"].as_array().unwrap().len(), 5);
    assert_eq!(v["paths"].as_array().unwrap().len(), 10);

    let c5 = file("c5.el", "5\n0 1\n1 2\n2 3\n3 4\n4 0\nS: 0 2 4\n");
    let v = json(&bin(&["planar", path(&c5)]));
    assert_eq!(v["planar"], true);
    assert_eq!(v["faces"].as_array().unwrap().len(), 2);
    assert_eq!(json(&bin(&["disc-planar", "--ordered", path(&c5)]))["disc_planar"], true);
    let v = json(&bin(&["good-wheel", path(&c5)]));
    assert_eq!(v["found"], false);
}

#[test]
fn catalog_and_trichotomy() {
    let dump = bin(&["catalog", "dump", "--format", "graph6"]);
    assert_eq!(String::from_utf8(dump.stdout).unwrap().lines().count(), 6);
    let list = json(&bin(&["catalog", "list"]));
    assert_eq!(list.as_array().unwrap().len(), 6);

    let x1 = "u v\nu t1\nu t2\nu t3\nv t3\nv t4\nv t5\nv t1\nS: t1 t2 t3 t4 t5\n";
    let m = file("x1.txt", x1);
    assert_eq!(json(&bin(&["catalog", "match", path(&m)]))["member"], "X1");

    let host = file("host.txt", &format!("{x1}t1 t2\nt2 t3\nt3 t4\nt4 t5\nt5 t1\no t1\no t2\no t3\no t4\no t5\n"));
    let o = bin(&["trichotomy", path(&host), "--cut", "t1,t2,t3,t4,t5", "--inside", "u"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"]["verdict"], "CATALOG");
    assert_eq!(v["verdict"]["member"], "X1");
    let seps = json(&bin(&["separations", "-k", "5", "--planar-side", path(&host)]));
    assert!(seps["count"].as_u64().unwrap() > 0);
}

#[test]
fn verify_and_out() {
    let out = std::env::temp_dir().join(format!("wheelkit-report-{}.json", std::process::id()));
    let o = bin(&["verify", "catalog-no-good-wheel", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["instances"], 6);

    let conf = file("c.conf", "seed = 5\ninstances = 10\n");
    let v = json(&bin(&["verify", "planar-no-k5", "--config", path(&conf)]));
    assert_eq!(v["config"]["seed"], "5");
    assert_eq!(v["instances"], 10);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "no-such-experiment"]).status.code(), Some(2));
    assert_eq!(bin(&["separations", "-k", "3", "x"]).status.code(), Some(2));
    let bad = file("bad.conf", "colour = 3\n");
    assert_eq!(bin(&["verify", "planar-no-k5", "--config", path(&bad)]).status.code(), Some(2));
    assert_eq!(bin(&["color", "/nonexistent/graph"]).status.code(), Some(2));
}

#[test]
fn counterexample_exits_1() {
    // a side carrying none of the three outcomes: a 5-cycle inside a 5-cut
    let side = "c1 c2\nc2 c3\nc3 c4\nc4 c5\nc5 c1\nc1 t1\nc2 t2\nc3 t3\nc4 t4\nc5 t5\n";
    let outside = "t1 t2\nt2 t3\nt3 t4\nt4 t5\nt5 t1\no t1\no t2\no t3\no t4\no t5\n";
    let host = file("none.txt", &format!("{side}{outside}"));
    let o = bin(&["trichotomy", path(&host), "--cut", "t1,t2,t3,t4,t5", "--inside", "c1"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(json(&o)["verdict"]["verdict"], "NONE");
}

#[test]
fn generation_and_lifting() {
    let v = json(&bin(&["gen", "-n", "6", "-s", "5", "--filter", "independent", "--count"]));
    assert_eq!(v["count"], 7);
    let rules = json(&bin(&["lift", "--list"]));
    assert_eq!(rules.as_array().unwrap().len(), 12);
}
