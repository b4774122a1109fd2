use std::io::Write;
use std::process::{Command, Stdio};

fn hooktab(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hooktab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_code_matrix() {
    let hvt = "1|1|1|3^5 / 2|2+4 / 3|5+7^6 / 4";
    let matrix: &[(&[&str], &str, i32)] = &[
        (&["validate"], hvt, 0),
        (&["validate"], "2|1", 1),
        (&["validate"], "1|0", 2),
        (&["validate", "--family", "mixed"], ".|b3", 0),
        (&["uncrowd", "--word", "LLAA"], hvt, 0),
        (&["uncrowd", "--word", "LXA"], hvt, 2),
        (&["uncrowd"], hvt, 2),
        (&["shuffle"], "a1 / a1", 1),
        (&["shuffle"], "a1|b1", 0),
        (&["switch", "--all", "--seed", "3"], "a1|b1", 0),
        (&["ggjdt"], ".|.|a2 / .|a1|b1 / b2", 0),
        (&["enum", "--family", "exq", "--outer", "3,3,1", "--inner", "2,1"], "", 0),
        (&["enum", "--family", "hvt", "--lambda", "2,x", "--n", "2"], "", 2),
        (&["enum", "--family", "hvt", "--lambda", "1"], "", 2),
        (&["verify", "--check", "shuffle_theorem", "--lambda", "2,1", "--n", "3", "--excess", "2"], "", 0),
        (&["verify", "--check", "bogus"], "", 2),
        (&["identity", "--lambda", "1", "--n", "2", "--excess", "1"], "", 0),
        (&["identity", "--lambda", "1", "--n", "2", "--excess", "1", "--det"], "", 0),
        (&["identity", "--lambda", "1,1,1", "--n", "2", "--excess", "1", "--det"], "", 2),
        (&[], "", 2),
        (&["--help"], "", 0),
    ];
    for (args, stdin, code) in matrix {
        let (got, _, err) = hooktab(args, stdin);
        assert_eq!(got, *code, "hooktab {args:?} < {stdin:?}: {err}");
    }
}

#[test]
fn errors_go_to_stderr() {
    let (code, out, err) = hooktab(&["validate"], "1|0");
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 1, column 3"), "{err}");
}

#[test]
fn verify_prints_a_versioned_report() {
    let (code, out, _) = hooktab(&["verify", "--check", "commute_lemma", "--lambda", "1", "--n", "2", "--excess", "1"], "");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["check_id"], "commute_lemma");
    assert_eq!(v["passed"], true);
}
