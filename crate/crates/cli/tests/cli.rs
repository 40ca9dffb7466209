use std::process::{Command, Output};

fn kgroth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgroth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kgroth(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn expand_examples() {
    assert_eq!(
        stdout(&["expand", "--to", "s", "h2"]),
        r#"{"basis":"s","terms":[{"coeff":"1","partition":[2]}]}"#
    );
    assert_eq!(
        stdout(&["expand", "--to", "s", "g[1,1]"]),
        r#"{"basis":"s","terms":[{"coeff":"1","partition":[1]},{"coeff":"1","partition":[1,1]}]}"#
    );
    assert_eq!(
        stdout(&["expand", "--to", "G", "--cap", "3", "g[]-G[1]"]),
        stdout(&["expand", "--to", "G", "--cap", "3", "1-G[1]"])
    );
}

#[test]
fn apply_examples() {
    assert_eq!(
        stdout(&["apply", "--op", "I", "g[2,1]"]),
        r#"{"basis":"g","terms":[{"coeff":"1","partition":[]},{"coeff":"1","partition":[1]},{"coeff":"1","partition":[2]},{"coeff":"1","partition":[1,1]},{"coeff":"1","partition":[2,1]}]}"#
    );
    assert_eq!(
        stdout(&["apply", "--op", "Iinv", "g[1]"]),
        r#"{"basis":"g","terms":[{"coeff":"-1","partition":[]},{"coeff":"1","partition":[1]}]}"#
    );
    assert_eq!(
        stdout(&["apply", "--op", "Hperp", "--t", "0", "s[2,1]"]),
        r#"{"basis":"s","terms":[{"coeff":"1","partition":[2,1]}]}"#
    );
    assert_eq!(
        stdout(&["apply", "--op", "Gperp", "--mu", "[1]", "g[3,2,1]"]),
        stdout(&["expand", "--to", "g", "g[3,2,1]/[1]"])
    );
}

#[test]
fn inner_examples() {
    assert_eq!(
        stdout(&["inner", "--series", "H", "--t", "t", "g[3,1]"]),
        r#"{"value":"t^3"}"#
    );
    assert_eq!(
        stdout(&["inner", "--series", "E", "--t", "-1", "g[]"]),
        r#"{"value":"1"}"#
    );
    assert_eq!(
        stdout(&["inner", "--series", "G", "--lambda", "[1]", "g[1]"]),
        r#"{"value":"1"}"#
    );
}

#[test]
fn constants_output() {
    assert_eq!(
        stdout(&[
            "constants",
            "--kind",
            "d",
            "--lambda",
            "[1]",
            "--mu",
            "[1]",
            "--nu",
            "[1]"
        ]),
        r#"{"kind":"d","lambda":[1],"mu":[1],"nu":[1],"value":-1}"#
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        kgroth(&["expand", "--to", "s", "s[1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kgroth(&["apply", "--op", "Gperp", "g[1]"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kgroth(&["verify", "--suite", "no-such-suite"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kgroth(&["apply", "--op", "J", "g[1]"]).status.code(),
        Some(2)
    );
    assert_eq!(
        kgroth(&["verify", "--suite", "counterexamples"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn verify_is_deterministic_and_order_stable() {
    let args = ["verify", "--suite", "i-skew", "--max-size", "5"];
    let serial = stdout(&args);
    assert_eq!(serial, stdout(&args));
    let mut parallel = args.to_vec();
    parallel.push("--parallel");
    assert_eq!(serial, stdout(&parallel));
    assert!(serial.lines().all(|l| !l.contains("\"fail\"")));
    assert!(!serial.contains("seconds"));
}

#[test]
fn verify_list_names_every_suite() {
    let listing = stdout(&["verify", "--list"]);
    for name in [
        "i-equals-one",
        "i-skew",
        "counterexamples",
        "skew-pieri",
        "hopf-axioms",
        "incidence",
    ] {
        assert!(
            listing.contains(&format!("\"suite\":\"{name}\"")),
            "{name} missing"
        );
    }
    assert_eq!(listing.lines().count(), kgroth_cli::suites::all().len());
}

#[test]
fn timing_is_opt_in() {
    let out = stdout(&[
        "verify",
        "--suite",
        "g-top-term",
        "--max-size",
        "3",
        "--timing",
    ]);
    assert!(out.lines().last().unwrap().contains("\"seconds\""));
}
