use std::process::{Command, Output};

use serde_json::Value;

fn gkspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn query_examples() {
    let out = gkspec(&["query", "L45+(q=9)", "t"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["value"], 23);
    assert_eq!(v["sources"]["agree"], true);

    let v = json(&gkspec(&["query", "O-(n=30,q=4)", "zeta"]));
    assert_eq!(v["value"]["t"], 23);
    assert_eq!(
        v["value"]["T_offsets"],
        serde_json::json!(["t-2", "t-3", "t-5"])
    );
    assert_eq!(v["sources"]["agree"], true);

    assert_eq!(
        json(&gkspec(&["query", "S(n=28,q=3)", "pexp"]))["value"],
        81
    );

    let v = json(&gkspec(&["query", "S56(3)", "cocliques"]));
    assert_eq!(v["sources"]["agree"], true);
    assert!(v["value"]["t_p"].as_u64().unwrap() < 22);

    let out = gkspec(&["query", "O(n=28,q=5)", "bigk"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rank floor"));
    let v = json(&gkspec(&["query", "O(n=29,q=5)", "bigk"]));
    assert!(v["value"]["bound"].as_str().unwrap().len() > 10);
    let v = json(&gkspec(&["query", "L45-(q=4)", "graph"]));
    assert!(v["value"]["vertices"].as_array().unwrap().len() > 20);
}

#[test]
fn eliminate_examples() {
    let out = gkspec(&["eliminate", "O-(n=30,q=3)", "O-(n=30,u=2)"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["outcome"], "eliminated");
    assert_eq!(v["pattern"], "tplneq4");
    assert_eq!(v["verified"], true);

    let v = json(&gkspec(&["eliminate", "S(n=29,q=5)", "S(n=30,u=2)"]));
    assert_eq!(v["pattern"], "class-mismatch");

    let out = gkspec(&["eliminate", "L45+(q=4)", "--scan"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["candidates"].as_u64().unwrap() > 0);
    assert_eq!(v["candidates"], v["eliminated"]);
}

#[test]
fn input_errors_exit_with_two() {
    let out = gkspec(&["eliminate", "L40+(q=4)", "--scan"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n ≥ 45"), "{}", stderr(&out));

    let out = gkspec(&["query", "L45(q=6)", "t"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("expected L45+(q=9)"));

    let out = gkspec(&["eliminate", "L45+(q=4)", "L46+(q=2)"]);
    assert_eq!(out.status.code(), Some(2));

    for bad in [
        &["verify"][..],
        &["verify", "--check", "cocliques", "--qs", "6"],
        &["verify", "--check", "nonsense"],
        &[
            "verify",
            "--check",
            "cocliques",
            "--nmin",
            "40",
            "--nmax",
            "30",
        ],
        &["eliminate", "L45+(q=4)"],
        &["frobnicate"],
    ] {
        assert_eq!(gkspec(bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn verify_examples() {
    let out = gkspec(&[
        "verify",
        "--lemma",
        "zsigmondy",
        "--amax",
        "50",
        "--imax",
        "50",
    ]);
    assert!(out.status.success());
    let r = &lines(&out)[0];
    assert_eq!(r["status"], "pass");
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);
    assert_eq!(r["grid"]["cases"], 4900);

    let out = gkspec(&["verify", "--check", "interval-prime", "--nmax", "2000"]);
    assert!(out.status.success());

    let out = gkspec(&[
        "verify",
        "--check",
        "cocliques,zeta",
        "--families",
        "S,O-",
        "--qs",
        "3",
        "--nmin",
        "5",
        "--nmax",
        "34",
    ]);
    assert!(out.status.success());
    let reports = lines(&out);
    assert_eq!(reports.len(), 2);
    let clamped = reports[0]["grid"]["clamped"].as_array().unwrap();
    assert_eq!(clamped.len(), 2);
    assert_eq!(clamped[0]["floor"], 13);
    assert_eq!(reports[1]["grid"]["clamped"][1]["floor"], 30);
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "verify",
        "--check",
        "cocliques,cover-adjacency,eta-count",
        "--families",
        "L,O+",
        "--qs",
        "2,3",
        "--nmax",
        "40",
        "--no-timing",
        "--bmax",
        "60",
    ];
    let one = |w: &str| {
        let mut a = args.to_vec();
        a.extend(["--workers", w]);
        gkspec(&a).stdout
    };
    let first = one("1");
    assert_eq!(first, one("1"));
    assert_eq!(first, one("3"));
    assert!(!String::from_utf8_lossy(&first).contains("wall_ms"));
}

#[test]
fn config_file_supplies_flags() {
    let path = std::env::temp_dir().join(format!("gkspec-{}.conf", std::process::id()));
    std::fs::write(
        &path,
        "# small grid\ncheck = gpd-totient\namax = 5\nimax = 12\nno-timing = true\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let out = gkspec(&["--config", p, "verify"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let r = &lines(&out)[0];
    assert_eq!(r["check"], "gpd-totient");
    assert_eq!(r["grid"]["params"]["amax"], 5);
    assert!(r.get("wall_ms").is_none());

    let out = gkspec(&["verify", "--config", p, "--amax", "7"]);
    assert_eq!(lines(&out)[0]["grid"]["params"]["amax"], 7);

    std::fs::write(&path, "amax 5\n").unwrap();
    assert_eq!(gkspec(&["verify", "--config", p]).status.code(), Some(2));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn export_formats() {
    let out = gkspec(&["export", "S(n=13,q=3)"]);
    assert!(out.status.success());
    let dot = String::from_utf8_lossy(&out.stdout);
    assert!(dot.starts_with("graph nonadjacency_"));
    assert!(dot.contains("v26 [label=\"26\""));

    let v = json(&gkspec(&["export", "S(n=13,q=3)", "--format", "json"]));
    let edges = dot.lines().filter(|l| l.contains("--")).count();
    assert_eq!(v["nonadjacent"].as_array().unwrap().len(), edges);
}
