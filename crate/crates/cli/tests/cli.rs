use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gapless-hecke"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(
        run(&["expand", "--lambda", "1,2"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["expand", "--lambda", "x"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["expand", "--lambda", "2,1", "--m", "9"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"], None).status.code(), Some(2));
    assert_eq!(run(&["source"], Some("[[2,1]]")).status.code(), Some(2));
    assert_eq!(run(&["source"], Some("not json")).status.code(), Some(2));
}

#[test]
fn source_sink_read_bal() {
    let t = r#"{"shape":[2,1,1],"rows":[[1,3],[2],[4]]}"#;
    assert_eq!(stdout(&run(&["source"], Some(t))), "1 2\n3\n4\n");
    assert_eq!(stdout(&run(&["sink"], Some(t))), "1 4\n2\n3\n");
    assert_eq!(stdout(&run(&["read"], Some(t))), "3124\n");
    assert_eq!(stdout(&run(&["bal"], Some(t))), "(2,1,1)\n");
    let json = stdout(&run(&["source", "--format", "json"], Some(t)));
    assert_eq!(json.trim(), r#"{"shape":[2,1,1],"rows":[[1,2],[3],[4]]}"#);
}

#[test]
fn iglt_json_round_trips() {
    let out = run(&["iglt", "--lambda", "2,2", "--format", "json"], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 3);
    for item in list {
        let t: gapless_hecke::Iglt = serde_json::from_value(item.clone()).unwrap();
        assert_eq!(serde_json::to_value(&t).unwrap(), *item);
    }
}

#[test]
fn text_output_is_deterministic() {
    let a = run(&["classes", "--lambda", "3,2,1", "--m", "5"], None);
    let b = run(&["classes", "--lambda", "3,2,1", "--m", "5"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dot_output() {
    let out = stdout(&run(
        &["iglt", "--lambda", "2,1,1", "--m", "4", "--format", "dot"],
        None,
    ));
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches(" -> ").count(), 3 * 3);
    assert_eq!(
        run(&["expand", "--lambda", "2", "--format", "dot"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("gapless-hecke-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("u.txt");
    let out = run(
        &["expand", "--lambda", "2,2", "--out", path.to_str().unwrap()],
        None,
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "U = F(1,1,1) + F(2,2) + F(1,2,1)\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_and_schur2_pass() {
    let out = run(&["verify", "--n-max", "5"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("n=5:"));
    let json = run(
        &[
            "verify",
            "--n-max",
            "3",
            "--suite",
            "structure",
            "--format",
            "json",
        ],
        None,
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    let s2 = run(&["schur2", "--n-max", "6"], None);
    assert_eq!(s2.status.code(), Some(0));
    assert!(stdout(&s2).lines().all(|l| l.starts_with("PASS")));
    assert_eq!(
        run(&["schur2", "--lambda", "2,1,1"], None).status.code(),
        Some(2)
    );
}
