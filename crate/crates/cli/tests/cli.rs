use std::process::Command as Process;

use clap::Parser;
use gorenstein_kit::schema::*;
use gorenstein_kit::{run, Cli, Context, Outcome};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn invoke(args: &[&str]) -> Outcome {
    let mut argv = vec!["gorenstein-kit"];
    argv.extend_from_slice(args);
    run(
        &Cli::try_parse_from(argv).expect("arguments parse"),
        &Context::default(),
    )
}

fn json<T: DeserializeOwned + Serialize + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let mut argv = args.to_vec();
    argv.push("--json");
    let out = invoke(&argv);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.ends_with('\n'));
    let doc: T = serde_json::from_str(&out.stdout).expect("output matches the schema");
    let again: T = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(again, doc);
    doc
}

#[test]
fn table_passes_and_exits_zero() {
    let doc: TableJson = json(&["table"]);
    assert_eq!(doc.schema, "gorenstein-kit.table.v1");
    assert!(doc.all_pass);
    let a: Vec<i64> = doc.rows.iter().map(|r| r.computed_shift_a).collect();
    assert_eq!(a, vec![-6, -10, -10, -14, 2, -10, -22, 2, 2, -22, 2, 2]);
    let text = invoke(&["table"]).stdout;
    assert_eq!(text.matches("PASS").count(), 12);
}

#[test]
fn shift_of_bundled_taf_d15() {
    let doc: ShiftJson = json(&["shift", "builtin:taf_d15"]);
    assert_eq!((doc.formula, doc.stanley, doc.agree), (2, Some(2), true));
}

#[test]
fn hilbert_of_one_generator_is_geometric() {
    let doc: HilbertJson = json(&["hilbert", "builtin:ku", "--max-degree", "6"]);
    let values: Vec<&str> = doc.coefficients.iter().map(|c| c.value.as_str()).collect();
    assert_eq!(values, ["1", "0", "1", "0", "1", "0", "1"]);
    assert_eq!(doc.series.denominator_degrees, vec![2]);
    assert_eq!(doc.warning, None);
}

#[test]
fn duality_of_taf_d6() {
    let doc: DualityJson = json(&["duality", "builtin:taf_d6", "--max-degree", "10"]);
    assert_eq!(doc.shift_a, 2);
    assert_eq!(doc.splitting, "ParityDisjoint");
    assert_eq!(doc.cech_dual_part.label, "Σ^{3} r_*^∨");
    assert_eq!((doc.anderson_display_shift, doc.anderson_shift), (3, -3));
    assert_eq!(doc.local_cohomology.module.shift, 4);
    assert_eq!(doc.cech_dual_part.coefficients.len(), 21);
}

#[test]
fn molien_twists() {
    let plain: MolienJson = json(&[
        "molien",
        "builtin:tmf2",
        "builtin:tmf2_s3",
        "--max-degree",
        "68",
    ]);
    let digits: String = plain
        .coefficients
        .iter()
        .step_by(4)
        .map(|c| c.value.as_str())
        .collect();
    assert_eq!(digits, "101111212222323333");
    assert_eq!(plain.polynomial_degrees, Some(vec![8, 12]));
    assert_eq!(plain.pseudoreflection_count, 3);

    let det: MolienJson = json(&[
        "molien",
        "builtin:tmf2",
        "builtin:tmf2_s3",
        "--twist",
        "det",
    ]);
    assert_eq!(
        det.coefficients.iter().position(|c| c.value != "0"),
        Some(12)
    );

    let v: MolienJson = json(&[
        "molien",
        "builtin:tmf2",
        "builtin:tmf2_s3",
        "--twist",
        "V",
        "--max-degree",
        "8",
    ]);
    let firsts: Vec<&str> = v
        .coefficients
        .iter()
        .step_by(4)
        .map(|c| c.value.as_str())
        .collect();
    assert_eq!(firsts, ["0", "1", "1"]);
}

#[test]
fn sympow_and_invgen() {
    let doc: SympowJson = json(&["sympow", "builtin:tmf2", "builtin:tmf2_s3", "--n", "5"]);
    let rows: Vec<Vec<u64>> = doc.rows.into_iter().map(|r| r.multiplicities).collect();
    assert_eq!(
        rows,
        vec![
            vec![1, 0, 0],
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![1, 1, 1],
            vec![1, 0, 2],
            vec![1, 1, 2]
        ]
    );

    let doc: InvgenJson = json(&["invgen", "builtin:tmf2", "builtin:tmf2_s3", "--degree", "8"]);
    assert_eq!(doc.dimension, 1);
    assert_eq!(doc.basis[0].display, "x^2 + x*y + y^2");
}

#[test]
fn descent_reports() {
    let ku: DescentJson = json(&["descent", "builtin:ku", "builtin:ku_c2"]);
    let p = ku.prediction.expect("polynomial regime");
    assert_eq!(
        (
            ku.base_shift_a,
            p.solomon_b,
            p.descended_gorenstein_shift,
            p.descended_anderson_shift
        ),
        (-3, -2, -5, -4)
    );
    assert!(p.solomon_verified && p.cross_check);

    let taf: DescentJson = json(&["descent", "builtin:taf_d6", "builtin:taf_d6_beta"]);
    assert!(taf.prediction.is_none());
    assert!(taf.note.unwrap().contains("out of the stated regime"));
}

#[test]
fn errors_name_their_origin() {
    let out = invoke(&["shift", "builtin:nope"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("UnknownFixture"));

    let out = invoke(&["molien", "builtin:ku", "builtin:tmf2_s3"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("BlockMismatch"));

    let out = invoke(&[
        "molien",
        "builtin:tmf2",
        "builtin:tmf2_s3",
        "--twist",
        "sparkle",
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("InvalidCharacterTable"));

    let dir = std::env::temp_dir().join("gorenstein-kit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.ring.toml");
    std::fs::write(
        &bad,
        "[ring]\nname = \"r\"\n[[generator]]\nsymbol = \"x\"\ndegree = -2\n",
    )
    .unwrap();
    let out = invoke(&["hilbert", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.contains("ParseError at line 5"),
        "{}",
        out.stderr
    );

    let point = dir.join("point.ring.toml");
    std::fs::write(
        &point,
        "[ring]\nname = \"point\"\n[[generator]]\nsymbol = \"x\"\ndegree = 2\n[[relation]]\nsymbol = \"f\"\ndegree = 4\n",
    )
    .unwrap();
    let out = invoke(&["duality", point.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("ZeroDimensional"));
}

#[test]
fn files_and_builtins_agree() {
    let dir = std::env::temp_dir().join("gorenstein-kit-cli-files");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tmf2.ring.toml");
    std::fs::write(&path, gorenstein_core::dataset::ring_text("tmf2").unwrap()).unwrap();
    let from_file = invoke(&["hilbert", path.to_str().unwrap(), "--json"]);
    let builtin = invoke(&["hilbert", "builtin:tmf2", "--json"]);
    assert_eq!(from_file, builtin);
}

#[test]
fn binary_honours_order_cap() {
    let bin = env!("CARGO_BIN_EXE_gorenstein-kit");
    let capped = Process::new(bin)
        .args(["molien", "builtin:tmf2", "builtin:tmf2_s3"])
        .env("GORENSTEIN_KIT_MAX_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("OrderCapExceeded"));

    let ok = Process::new(bin)
        .args(["table", "--json"])
        .env_remove("GORENSTEIN_KIT_MAX_ORDER")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let doc: TableJson = serde_json::from_slice(&ok.stdout).unwrap();
    assert!(doc.all_pass);

    let bad = Process::new(bin)
        .arg("table")
        .env("GORENSTEIN_KIT_MAX_ORDER", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
