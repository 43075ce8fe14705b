use super::*;
use crate::formula::parse;
use crate::partition::Partition;

fn f(text: &str) -> Formula {
    parse(text).unwrap()
}

fn run(text: &str) -> ProverOutcome {
    prove(&f(text), ProverConfig::default())
}

fn blocks(o: &ProverOutcome, atom: &str) -> Vec<Vec<String>> {
    match o {
        ProverOutcome::Countermodel { assignment, .. } => assignment.get(atom).unwrap().block_labels(),
        other => panic!("expected a countermodel, got {}", other.verdict()),
    }
}

fn labels(bs: &[&[&str]]) -> Vec<Vec<String>> {
    bs.iter().map(|b| b.iter().map(|s| s.to_string()).collect()).collect()
}

#[test]
fn closed_examples() {
    for text in [
        "(s /\\ (s => p)) => p",
        "p => (s => p)",
        "(s /\\ (s => p)) => (s /\\ p)",
        "(s => p) \\/ ((s => p) => p)",
        "~s \\/ ~~s",
        "(s | t) | (s /\\ t)",
        "1",
        "s => s",
    ] {
        let o = run(text);
        assert!(o.is_proved(), "{text}: {}", o.verdict());
        verify_outcome(&f(text), &o).unwrap();
    }
}

#[test]
fn peirce_countermodel() {
    let o = run("((s => p) => s) => s");
    assert_eq!(blocks(&o, "s"), labels(&[&["u0", "u1"], &["u2"]]));
    assert_eq!(blocks(&o, "p"), labels(&[&["u0", "u1", "u2"]]));
    verify_outcome(&f("((s => p) => s) => s"), &o).unwrap();
}

#[test]
fn accumulation_open_branch() {
    let text = "s => ((s => p) => (s /\\ p))";
    let o = run(text);
    assert_eq!(blocks(&o, "s"), labels(&[&["u0", "u2"], &["u1"]]));
    assert_eq!(blocks(&o, "p"), labels(&[&["u0"], &["u1", "u2"]]));
    verify_outcome(&f(text), &o).unwrap();
}

#[test]
fn non_subset_tautology_stays_on_base_pair() {
    let o = run("s \\/ p");
    match &o {
        ProverOutcome::Countermodel { assignment, pair } => {
            assert_eq!(assignment.universe().len(), 2);
            assert_eq!(pair, &("u0".to_string(), "u1".to_string()));
        }
        other => panic!("{}", other.verdict()),
    }
    assert!(run("0").is_countermodel());
}

#[test]
fn trace_replays_and_names_rules() {
    let o = run("(s /\\ (s => p)) => p");
    let ProverOutcome::Proved(trace) = &o else { panic!() };
    trace.replay().unwrap();
    assert_eq!(trace.steps[0].rule, Rule::Root);
    assert!(trace.steps.iter().any(|s| s.rule == Rule::FImp));
    assert!(trace.steps.iter().any(|s| s.rule == Rule::Close));
    let mut broken = trace.clone();
    let last = broken.steps.len() - 1;
    broken.steps[last].premises.push(broken.statements.len() + 5);
    assert!(broken.replay().is_err());
}

#[test]
fn fabricated_countermodel_is_rejected() {
    let u = Universe::with_prefix("u", 2).unwrap();
    let a = Assignment::new(&u)
        .with("s", Partition::top(&u))
        .unwrap()
        .with("p", Partition::top(&u))
        .unwrap();
    let bad = ProverOutcome::Countermodel {
        assignment: a,
        pair: ("u0".into(), "u1".into()),
    };
    assert!(matches!(
        verify_outcome(&f("(s /\\ (s => p)) => p"), &bad),
        Err(Error::VerificationFailed(_))
    ));
}

#[test]
fn bounds_give_unknown() {
    let o = prove(
        &f("(s /\\ (s => p)) => (s /\\ p)"),
        ProverConfig::default().with_max_steps(5),
    );
    assert_eq!(o, ProverOutcome::Unknown(UnknownReason::MaxSteps));
    let o = prove(&f("p => (s => p)"), ProverConfig::default().with_max_elements(2));
    assert_eq!(o, ProverOutcome::Unknown(UnknownReason::MaxElements));
}

#[test]
fn outcome_json() {
    let o = run("((s => p) => s) => s");
    let v = o.to_json(false);
    assert_eq!(v["verdict"], "countermodel");
    assert_eq!(v["pair"], serde_json::json!(["u0", "u1"]));
    assert_eq!(v["schema"], crate::SCHEMA);
    let p = run("s => s").to_json(true);
    assert_eq!(p["verdict"], "proved");
    assert_eq!(p["trace"][0]["rule"], "root");
    let u = ProverOutcome::Unknown(UnknownReason::MaxElements).to_json(false);
    assert_eq!(u["reason"], "max_elements");
}

#[test]
fn extract_model_from_devil_stage() {
    let u = Universe::new(["0", "1", "2", "3", "4"]).unwrap();
    let (s, t) = (f("s"), f("t"));
    let mut b = Branch::new(&u);
    for (x, y) in [("0", "2"), ("2", "4"), ("0", "4")] {
        b.add(x, y, Sign::F, s.clone()).unwrap();
    }
    for (x, y) in [("1", "2"), ("3", "4")] {
        b.add(x, y, Sign::F, t.clone()).unwrap();
    }
    for (x, y) in [("0", "1"), ("0", "3")] {
        b.add(x, y, Sign::T, s.clone()).unwrap();
        b.add(x, y, Sign::T, t.clone()).unwrap();
    }
    let a = extract_model(&b).unwrap();
    assert_eq!(
        a.get("s").unwrap().block_labels(),
        labels(&[&["0", "2", "4"], &["1"], &["3"]])
    );
    assert_eq!(
        a.get("t").unwrap().block_labels(),
        labels(&[&["0"], &["1", "2"], &["3", "4"]])
    );
}

#[test]
fn extract_model_errors() {
    let u = Universe::with_prefix("u", 3).unwrap();
    let s = f("s");
    let closed = Branch::new(&u)
        .with("u0", "u1", Sign::T, s.clone())
        .unwrap()
        .with("u1", "u0", Sign::F, s.clone())
        .unwrap();
    assert_eq!(extract_model(&closed), Err(Error::BranchClosed));
    let gap = Branch::new(&u)
        .with("u0", "u1", Sign::F, s.clone())
        .unwrap()
        .with("u1", "u2", Sign::F, s.clone())
        .unwrap();
    assert_eq!(extract_model(&gap), Err(Error::BranchIncomplete));
    let undecomposed = Branch::new(&u).with("u0", "u1", Sign::T, f("s \\/ p")).unwrap();
    assert!(!undecomposed.is_complete());
    let empty = Branch::new(&u).with("u0", "u1", Sign::T, s.clone()).unwrap();
    assert!(extract_model(&empty).unwrap().get("s").unwrap().is_top());
    assert!(Branch::new(&u).add("u0", "u1", Sign::T, f("~s")).is_err());
}

#[test]
fn probe_follows_a_model() {
    let u = Universe::with_prefix("u", 3).unwrap();
    let s = Partition::new(&u, &[vec!["u0", "u1"], vec!["u2"]]).unwrap();
    let a = Assignment::new(&u)
        .with("s", s)
        .unwrap()
        .with("p", Partition::bottom(&u))
        .unwrap();
    let r = probe(&f("((s => p) => s) => s"), &a, (0, 1), ProverConfig::default()).unwrap();
    assert_eq!(r.end, "open");
    assert!(probe(&f("s"), &a, (0, 2), ProverConfig::default()).is_err());
}

#[test]
fn pruning_does_not_change_verdicts() {
    for text in [
        "(s => p) \\/ ((s => p) => p)",
        "((s => p) => s) => s",
        "~s \\/ ~~s",
        "(s /\\ (s => p)) => (s /\\ p)",
    ] {
        let on = run(text).verdict();
        let off = prove(&f(text), ProverConfig::default().without_pruning()).verdict();
        assert_eq!(on, off, "{text}");
    }
}
