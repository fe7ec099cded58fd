use std::process::{Command, Output};

use qmc_cli::emit::parse_bfile;

fn qmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmc"))
        .args(args)
        .env_remove("QMC_ORACLE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let o = qmc(&["seq", "invertible", "--q", "2", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1 6 168 20160 9999360\n");
    assert_eq!(stdout(&qmc(&["seq", "nilpotent", "--q", "2", "--max-n", "0"])), "1\n");
    assert_eq!(stdout(&qmc(&["limit", "invertible", "--q", "3", "--digits", "5"])), "0.56012\n");
    assert_eq!(stdout(&qmc(&["limit", "invertible", "--q", "2"])), "0.28878\n");
}

#[test]
fn bfile_output() {
    let o = qmc(&["seq", "invertible", "--q", "2", "--max-n", "3", "--format", "bfile"]);
    assert_eq!(stdout(&o), "0 1\n1 1\n2 6\n3 168\n");
    let o = qmc(&["seq", "lin_derangement", "--q", "2", "--max-n", "6", "--format", "bfile"]);
    let text = stdout(&o);
    assert!(text.starts_with("2 2\n"));
    let terms = parse_bfile(&text).unwrap();
    let again: String = terms.iter().map(|t| format!("{} {}\n", t.index, t.value)).collect();
    assert_eq!(again, text);
    let o = qmc(&["seq", "invertible", "--q", "2", "--min-n", "4", "--max-n", "3", "--format", "bfile"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
}

#[test]
fn json_is_stable() {
    let args = ["seq", "semisimple", "--q", "2", "--min-n", "1", "--max-n", "7", "--format", "json"];
    let a = stdout(&qmc(&args));
    let b = stdout(&qmc(&args));
    assert_eq!(a, b);
    assert!(a.starts_with("{\"sequence\":\"semisimple\",\"q\":2,\"k\":null,\"offset\":1,\"oeis\":null,\"values\":["));
    assert!(a.ends_with("\"195647202043778\"]}\n"));
    let power = stdout(&qmc(&["seq", "power_identity", "--q", "3", "--k", "8", "--max-n", "2", "--format", "json"]));
    assert_eq!(
        power,
        "{\"sequence\":\"power_identity\",\"q\":3,\"k\":8,\"offset\":0,\"oeis\":\"A053853\",\"values\":[\"1\",\"2\",\"32\"]}\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["seq", "invertible", "--q", "6"],
        vec!["seq", "nope", "--q", "2"],
        vec!["seq", "power_identity", "--q", "2"],
        vec!["seq", "cyclic", "--q", "2", "--max-n", "8", "--order", "4"],
        vec!["limit", "invertible", "--q", "2", "--digits", "0"],
        vec!["table", "invertible", "--q", "2"],
    ] {
        let o = qmc(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = qmc(&["seq", "invertible", "--q", "6"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--q"));
}

#[test]
fn oracle_budget_flag_beats_environment() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_qmc"));
        cmd.args(["seq", "min_centralizer", "--q", "3", "--max-n", "2"]);
        match env {
            Some(v) => cmd.env("QMC_ORACLE_BUDGET", v),
            None => cmd.env_remove("QMC_ORACLE_BUDGET"),
        };
        if let Some(f) = flag {
            cmd.args(["--oracle-budget", f]);
        }
        cmd.output().unwrap()
    };
    assert_eq!(stdout(&run(None, None)), "2 4\n");
    assert_eq!(run(Some("10"), None).status.code(), Some(2));
    assert_eq!(stdout(&run(Some("10"), Some("100"))), "2 4\n");
    assert_eq!(run(None, Some("10")).status.code(), Some(2));
}

#[test]
fn triangles() {
    let o = qmc(&["table", "rank_row", "--q", "2", "--max-n", "3"]);
    assert_eq!(stdout(&o), "1\n1 1\n1 9 6\n1 49 294 168\n");
    let o = qmc(&["seq", "qstirling_row", "--q", "2", "--max-n", "4", "--k", "3"]);
    assert_eq!(stdout(&o), "1680\n");
}

#[test]
fn jobs_do_not_change_results() {
    let one = stdout(&qmc(&["seq", "max_class", "--q", "2", "--max-n", "3", "--jobs", "1"]));
    let four = stdout(&qmc(&["seq", "max_class", "--q", "2", "--max-n", "3", "--jobs", "4"]));
    assert_eq!(one, "1 3 56\n");
    assert_eq!(one, four);
}

#[test]
fn verify_passes_with_errata_and_strict_fails() {
    let o = qmc(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("ERRATUM"));
    assert!(text.ends_with("verify: ok\n"));
    let strict = qmc(&["verify", "--strict"]);
    assert_eq!(strict.status.code(), Some(1));
}
