use std::collections::HashSet;
use std::path::PathBuf;

use serde_json::Value;
use stacky_cli::expr::{parse_poly, LowerError, ParseError};
use stacky_cli::ringspec::{parse_ringspec, RingSpecError};
use stacky_cli::{run, CliError};
use stacky_core::exactnum::ExactError;
use stacky_core::grading::{GradingError, TypicalCondition};
use stacky_core::invariants::{catalog_ring, CatalogFamily, InvariantsError};
use stacky_core::locus::LocusError;
use stacky_core::polyalg::PolyError;
use stacky_core::symmetry::{GroupSpec, SymmetryError};

fn rings_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../rings")
}

fn ring(name: &str) -> String {
    rings_dir()
        .join(format!("{name}.ring"))
        .display()
        .to_string()
}

fn cli(args: &[&str]) -> (i32, Value) {
    let r = run(std::iter::once("stacky").chain(args.iter().copied()));
    (r.exit_code, r.json)
}

fn error_code(v: &Value) -> &str {
    v["error"]["code"].as_str().unwrap()
}

#[test]
fn decompose_quintic() {
    let (code, v) = cli(&["decompose", &ring("quintic")]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "verified");
    let r = &v["result"];
    assert_eq!(r["coarse_weights"], serde_json::json!([1, 2, 3]));
    assert_eq!(r["gerbe_index"], 2);
    assert_eq!(r["root"]["order"], 2);
    assert_eq!(r["root"]["canonical_degree"], 9);
    assert_eq!(r["reconstruction_matches"], true);
}

#[test]
fn rigidify_and_chart() {
    let (code, v) = cli(&["rigidify", &ring("cubic-surface")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["gerbe_index"], 4);
    let (code, v) = cli(&["chart", &ring("quintic"), "I18"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order"], 18);
    let (code, v) = cli(&["chart", &ring("quintic"), "J"]);
    assert_eq!((code, error_code(&v)), (2, "grading.unknown-generator"));
}

#[test]
fn stabilizer_of_x5_plus_y5() {
    let (code, v) = cli(&["stabilizer", "x^5+y^5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["maximal"], serde_json::json!(["D5"]));
    let cert = &v["result"]["certificates"][0];
    assert_eq!(cert["group"], "D5");
    assert_eq!(cert["scalars"].as_array().unwrap().len(), 2);
}

#[test]
fn ground_forms_and_klein() {
    let (code, v) = cli(&["ground-forms", "O"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["nu"], serde_json::json!([4, 3, 2]));
    let (code, v) = cli(&["klein", "D3", "1", "0", "0", "--", "-1:2", "1:sqrt2"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "verified");
    assert_eq!(v["result"]["degree"], 15);
    let (code, v) = cli(&["ground-forms", "C4"]);
    assert_eq!((code, error_code(&v)), (2, "symmetry.no-ground-forms"));
}

#[test]
fn locus_and_catalog() {
    for fam in ["quintic", "sextic"] {
        let (code, v) = cli(&["locus", fam]);
        assert_eq!(code, 0, "{fam}");
        assert_eq!(v["result"]["audit"]["ok"], true);
    }
    let (code, v) = cli(&["catalog", "sextic"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"]["ring"]["weights"],
        serde_json::json!([2, 4, 6, 10, 15])
    );
}

#[test]
fn error_paths_and_exit_codes() {
    let (code, v) = cli(&["stabilizer", ""]);
    assert_eq!((code, error_code(&v)), (2, "syntax"));
    let (code, v) = cli(&["stabilizer", "x*z"]);
    assert_eq!((code, error_code(&v)), (2, "unknown-identifier"));
    let (code, v) = cli(&["stabilizer", "x^2*y^2"]);
    assert_eq!((code, error_code(&v)), (2, "symmetry.infinite-stabilizer"));
    let (code, v) = cli(&["stabilizer", "x^5+y^5", "--nmax", "200"]);
    assert_eq!((code, error_code(&v)), (3, "exact.order-bound"));
    let (code, v) = cli(&["decompose", "/nonexistent/file.ring"]);
    assert_eq!((code, error_code(&v)), (2, "io"));
    let (code, v) = cli(&["decompose", &ring("quartic")]);
    assert_eq!((code, error_code(&v)), (2, "grading.shape"));
    let (code, v) = cli(&["frobnicate"]);
    assert_eq!((code, error_code(&v)), (2, "usage"));
    let (code, v) = cli(&["klein", "T", "0", "0", "0", "1"]);
    assert_eq!((code, error_code(&v)), (2, "bad-parameter"));
    let (code, v) = cli(&["catalog", "septic"]);
    assert_eq!((code, error_code(&v)), (2, "invariants.unknown-family"));

    let dir = std::env::temp_dir().join(format!("stacky-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.ring");
    std::fs::write(&bad, "x 1\n").unwrap();
    let (code, v) = cli(&["rigidify", bad.to_str().unwrap()]);
    assert_eq!((code, error_code(&v)), (2, "ringspec.missing-colon"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn markdown_is_rendered_from_json() {
    let r = run([
        "stacky",
        "--format",
        "markdown",
        "rigidify",
        &ring("quintic"),
    ]);
    assert_eq!(r.output(), r.markdown);
    assert_eq!(r.markdown, stacky_cli::render::markdown(&r.json));
    assert!(r.markdown.contains("**gerbe_index**: 2"));
    let j = run(["stacky", "rigidify", &ring("quintic")]);
    assert_eq!(serde_json::from_str::<Value>(&j.output()).unwrap(), r.json);
}

#[test]
fn shipped_rings_match_catalog() {
    for fam in CatalogFamily::ALL {
        let text = std::fs::read_to_string(ring(fam.name())).unwrap();
        let cat = catalog_ring(fam).unwrap().ring;
        assert_eq!(text, cat.to_ringspec(), "{fam}");
        assert!(parse_ringspec(&text).unwrap().is_isomorphic(&cat));
    }
}

#[test]
fn error_codes_are_distinct() {
    let parse = |t: &str| parse_poly(t).unwrap_err();
    let poly = [
        PolyError::VariableMismatch {
            expected: 1,
            found: 2,
        },
        PolyError::Arity {
            expected: 1,
            found: 2,
        },
        PolyError::NonPositiveWeight,
        PolyError::ZeroForm,
        PolyError::NotBinary(3),
        PolyError::NotHomogeneous,
    ];
    let exact = [
        ExactError::DivisionByZero,
        ExactError::IncompatibleOrder { from: 3, to: 4 },
        ExactError::ZeroOrder,
        ExactError::OrderBound {
            order: 200,
            bound: 120,
        },
    ];
    let grading = || {
        let mut g = vec![
            GradingError::IndivisibleWeight {
                generator: "x".into(),
                weight: 3,
                n: 2,
            },
            GradingError::CommonFactor {
                r: 2,
                n: 2,
                common: 2,
            },
            GradingError::EmptyPresentation,
            GradingError::Arity {
                expected: 1,
                found: 2,
            },
            GradingError::DuplicateGenerator("x".into()),
            GradingError::UnknownGenerator("x".into()),
            GradingError::InhomogeneousRelation,
            GradingError::InhomogeneousSection,
            GradingError::ZeroFactor,
            GradingError::NotTypical(TypicalCondition::HcfDividesLastWeight { d: 2, last: 4 }),
            GradingError::NotTypical(TypicalCondition::ReducedWeightsNotWellFormed(vec![2, 2])),
            GradingError::NotTypical(TypicalCondition::HcfDoesNotDivideTwiceLast { d: 4, last: 3 }),
            GradingError::Shape("s".into()),
        ];
        g.extend(poly.iter().cloned().map(GradingError::Poly));
        g
    };
    let mut errors: Vec<CliError> = vec![
        CliError::Usage("u".into()),
        CliError::Io {
            path: "p".into(),
            message: "m".into(),
        },
        CliError::BadParameter("p".into()),
        CliError::Parse(parse("")),
        CliError::Lower(LowerError::UnknownIdentifier("z".into())),
        CliError::Lower(LowerError::InvalidZeta(0)),
        CliError::Lower(LowerError::NotAForm(PolyError::NotHomogeneous)),
        CliError::Lower(LowerError::NotConstant("x".into())),
        CliError::RingSpec(RingSpecError::MissingColon { line: 1 }),
        CliError::RingSpec(RingSpecError::BadWeight {
            line: 1,
            text: "0".into(),
        }),
        CliError::RingSpec(RingSpecError::BadField { line: 1 }),
        CliError::RingSpec(RingSpecError::BadOpaque { line: 1 }),
        CliError::RingSpec(RingSpecError::Repeated {
            line: 1,
            key: "field",
        }),
        CliError::RingSpec(RingSpecError::NoGenerators),
        CliError::RingSpec(RingSpecError::Syntax {
            line: 1,
            source: parse(""),
        }),
        CliError::RingSpec(RingSpecError::Lower {
            line: 1,
            source: LowerError::UnknownIdentifier("z".into()),
        }),
        CliError::RingSpec(RingSpecError::OpaqueShape { line: 1 }),
        CliError::Locus(LocusError::Inhomogeneous(vec![1])),
        CliError::Locus(LocusError::WeightMismatch {
            expected: 1,
            found: 2,
        }),
        CliError::Locus(LocusError::ZeroPoint),
        CliError::Invariants(InvariantsError::UnknownFamily("f".into())),
        CliError::Invariants(InvariantsError::WrongDegree {
            expected: 4,
            found: 5,
        }),
        CliError::Invariants(InvariantsError::OrderTooLarge { r: 1, d: 2, e: 3 }),
        CliError::Invariants(InvariantsError::NotStable),
        CliError::Invariants(InvariantsError::BothZero),
        CliError::Invariants(InvariantsError::UnderDetermined("u".into())),
        CliError::Invariants(InvariantsError::Recipe("r".into())),
        CliError::Symmetry(SymmetryError::SizeBound {
            group: GroupSpec::I,
            limit: 1,
        }),
        CliError::Symmetry(SymmetryError::InfiniteStabilizer { distinct: 2 }),
        CliError::Symmetry(SymmetryError::NoGroundForms(GroupSpec::C(2))),
        CliError::Symmetry(SymmetryError::ZeroParameter(0)),
        CliError::Symmetry(SymmetryError::UnknownCase("c".into())),
        CliError::Symmetry(SymmetryError::ParameterCount {
            expected: 1,
            found: 2,
        }),
        CliError::Symmetry(SymmetryError::InvalidGroup("g".into())),
        CliError::Symmetry(SymmetryError::NotUnimodular),
    ];
    errors.extend(
        exact
            .iter()
            .cloned()
            .map(|e| CliError::Symmetry(SymmetryError::Exact(e))),
    );
    errors.extend(grading().into_iter().map(CliError::Grading));
    let mut seen = HashSet::new();
    for e in &errors {
        assert!(seen.insert(e.code()), "duplicate code {}", e.code());
    }
    // Wrapped errors report the code of what they wrap.
    for g in grading() {
        let code = CliError::Grading(g.clone()).code();
        assert_eq!(
            CliError::RingSpec(RingSpecError::Grading(g.clone())).code(),
            code
        );
        assert_eq!(
            CliError::Invariants(InvariantsError::Grading(g)).code(),
            code
        );
    }
    for p in poly {
        let code = CliError::Grading(GradingError::Poly(p.clone())).code();
        assert_eq!(
            CliError::Symmetry(SymmetryError::Poly(p.clone())).code(),
            code
        );
        assert_eq!(CliError::Locus(LocusError::Poly(p)).code(), code);
    }
    let _: ParseError = parse("(");
}

#[test]
fn verify_all_is_deterministic_and_green() {
    let a = run(["stacky", "verify-all", "--seed", "7"]);
    let b = run(["stacky", "verify-all", "--seed", "7"]);
    assert_eq!(a.json_text(), b.json_text());
    assert_eq!(a.exit_code, 0, "{}", a.markdown);
    assert_eq!(a.json["status"], "verified");
    assert_eq!(a.json["result"]["criteria"].as_array().unwrap().len(), 10);
    for line in a.json["result"]["summary"].as_array().unwrap() {
        println!("{}", line.as_str().unwrap());
    }
}
