use twisted_double::expr::parse_expression;
use twisted_double::instances::{InstanceBuilder, InstanceConfig, InstanceRegistry, LoadedInstance, MatrixSpec};
use twisted_double::Error;

fn load(json: &str) -> LoadedInstance {
    InstanceRegistry::default().build_json(json).unwrap()
}

fn config_error(json: &str) -> String {
    match InstanceRegistry::default().build_json(json) {
        Err(Error::Config(msg)) => msg,
        other => panic!("expected a config error, got {other:?}"),
    }
}

#[test]
fn default_registry_knows_three_kinds() {
    assert_eq!(InstanceRegistry::default().kinds(), ["lattice", "qheis", "weyl"]);
    assert!(InstanceRegistry::empty().kinds().is_empty());
}

#[test]
fn configs_select_builders_by_type() {
    let w = load(r#"{"type": "weyl"}"#);
    assert_eq!((w.kind(), w.name()), ("weyl", "weyl"));
    assert!(w.context().is_double());

    let q = load(r#"{"type": "qheis", "name": "a2", "cartan": "A2", "working_degree": 4}"#);
    assert_eq!((q.kind(), q.name()), ("qheis", "a2"));
    assert_eq!(q.pairing().plus().rank(), 1);

    let q = load(r#"{"type": "qheis", "cartan": [[2, -1], [-1, 2]]}"#);
    assert_eq!(q.name(), "qheis");

    let l = load(r#"{"type": "lattice", "form": [[0]]}"#);
    assert!(!l.context().is_double());
}

#[test]
fn named_matrices_resolve() {
    let a2 = MatrixSpec::Named("A2".into()).resolve().unwrap();
    assert_eq!(a2.rows(), vec![vec![2, -1], vec![-1, 2]]);
    let d4 = MatrixSpec::Named("D4_affine".into()).resolve().unwrap();
    assert_eq!(d4.colors(), 5);
    assert_eq!(d4.determinant(), 0.into());
    let a3 = MatrixSpec::Named("A3_affine".into()).resolve().unwrap();
    assert_eq!(a3.rows()[0], vec![2, -1, 0, -1]);
    assert!(MatrixSpec::Named("E9".into()).resolve().is_err());
}

#[test]
fn malformed_configs_are_rejected() {
    let msg = config_error(r#"{"type": "weyl", "colour": 2}"#);
    assert!(msg.contains("colour"), "{msg}");
    let msg = config_error(r#"{"type": "sl2"}"#);
    assert!(msg.contains("unknown instance type") && msg.contains("weyl"), "{msg}");
    let msg = config_error(r#"{"type": "weyl", "cartan": "A2"}"#);
    assert!(msg.contains("\"cartan\""), "{msg}");
    let msg = config_error(r#"{"type": "lattice", "form": [[1]], "working_degree": 3}"#);
    assert!(msg.contains("working_degree"), "{msg}");
    let msg = config_error(r#"{"type": "qheis"}"#);
    assert!(msg.contains("needs the field \"cartan\""), "{msg}");
    assert!(InstanceConfig::from_json("{").is_err());
    assert!(matches!(
        InstanceRegistry::default().build_json(r#"{"type": "qheis", "cartan": [[2, 1], [0, 2]]}"#),
        Err(Error::NotSquare { .. }) | Err(Error::Config(_))
    ));
}

#[test]
fn singular_quantum_form_is_refused() {
    let r = InstanceRegistry::default().build_json(r#"{"type": "qheis", "cartan": [[0]]}"#);
    assert_eq!(r.unwrap_err(), Error::SingularForm { k: 1 });
}

#[test]
fn shifts_keep_the_pair_compatible() {
    let w = load(r#"{"type": "weyl", "shift": {"alpha": [[2]], "beta": [[1]]}}"#);
    let reports = w.verify(3).unwrap();
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
    // An α-only shift leaves the double's structure constants unchanged; β does not.
    let plain = load(r#"{"type": "weyl"}"#);
    let alpha = load(r#"{"type": "weyl", "shift": {"alpha": [[2]]}}"#);
    let src = "d^2*x^3 + q*x*d";
    let eval = |i: &LoadedInstance| {
        parse_expression(src)
            .unwrap()
            .evaluate(i.engine(), i.generators())
            .unwrap()
    };
    assert_eq!(eval(&alpha), eval(&plain));
    assert_ne!(eval(&w), eval(&plain));
    assert!(matches!(
        InstanceRegistry::default().build_json(r#"{"type": "weyl", "shift": {"alpha": [[1, 0], [0, 1]]}}"#),
        Err(Error::RankMismatch { expected: 1, found: 2 })
    ));
    assert!(InstanceRegistry::default()
        .build_json(r#"{"type": "weyl", "shift": {"gamma": [[1]]}}"#)
        .is_err());
}

#[test]
fn custom_builders_can_be_registered() {
    struct Alias;
    impl InstanceBuilder for Alias {
        fn kind(&self) -> &'static str {
            "plane"
        }
        fn build(&self, config: &InstanceConfig) -> twisted_double::Result<LoadedInstance> {
            let mut inner = config.clone();
            inner.kind = "lattice".into();
            inner.form = Some(MatrixSpec::Rows(vec![vec![1, 0], vec![0, 1]]));
            InstanceRegistry::default().build(&inner)
        }
    }
    let mut reg = InstanceRegistry::default();
    reg.register(Box::new(Alias));
    assert_eq!(reg.kinds(), ["lattice", "plane", "qheis", "weyl"]);
    let l = reg.build_json(r#"{"type": "plane"}"#).unwrap();
    assert_eq!(l.pairing().plus().basis(1).len(), 2);
}

#[test]
fn verify_runs_every_check() {
    let w = load(r#"{"type": "weyl"}"#);
    let reports = w.verify(4).unwrap();
    assert_eq!(reports.len(), 7);
    assert!(reports.iter().all(|r| r.passed() && r.instance == "weyl"));

    let l = load(r#"{"type": "lattice", "name": "zero", "form": [[0, 0], [0, 0]]}"#);
    let reports = l.verify(2).unwrap();
    assert_eq!(reports.len(), 5);
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.check.clone())
        .collect();
    assert_eq!(failed.len(), 1, "{failed:?}");
}

#[test]
fn normal_forms_parse_back_to_themselves() {
    let cases = [
        (
            r#"{"type": "weyl"}"#,
            vec!["d*x", "d^3*x^2 - q^-1*x*d", "(d + x)^3", "(1 + q)/(1 - q)*d*x"],
        ),
        (
            r#"{"type": "qheis", "cartan": "A2", "working_degree": 4}"#,
            vec![
                "p'[2,1]*p[2,2]",
                "h'[2,1]*h[2,2]",
                "p'[1,1]*p[1,1]*p[1,2]",
                "h[1,1]*p[1,2]/2",
            ],
        ),
        (
            r#"{"type": "lattice", "form": [[1, 1], [1, 1]]}"#,
            vec!["p'[2,1]*p[2,2]*p[1,1]"],
        ),
    ];
    for (json, exprs) in cases {
        let inst = load(json);
        let e = inst.engine();
        for src in exprs {
            let v = parse_expression(src).unwrap().evaluate(e, inst.generators()).unwrap();
            let text = e.format(&v);
            let back = parse_expression(&text)
                .unwrap_or_else(|err| panic!("{text}: {err}"))
                .evaluate(e, inst.generators())
                .unwrap();
            assert_eq!(back, v, "{src} -> {text}");
            assert_eq!(e.format(&back), text);
        }
    }
}
