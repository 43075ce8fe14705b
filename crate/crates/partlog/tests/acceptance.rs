//! Acceptance criteria 1 to 14. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails. Time limits are wall-clock bounds on the
//! criterion as a whole.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use partlog::formula::{
    cnf_of, dnf_dual_of, double_pi_neg_transform, dualize, godel_transform, parse, single_pi_neg_transform, Formula,
    OpCode, Pi, SIGMA, TAU,
};
use partlog::ops::{self, BoolOpTable};
use partlog::semantics::corpus::{filtered, formulas, random_partition, rng, FormulaGen};
use partlog::semantics::identities::Identity;
use partlog::semantics::{
    b_pi_cardinality, boolean_core, check_partition_tautology, check_weak, chi, eval, eval_dual, omega,
    omega_countermodel, Assignment, CheckResult,
};
use partlog::tableau::{extract_model, prove, verify_outcome, Branch, ProverConfig, ProverOutcome, Sign};
use partlog::{enumerate_partitions, Partition, Universe};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- independent oracle: partitions as indit matrices ----

type Matrix = Vec<Vec<bool>>;

fn indit(p: &Partition) -> Matrix {
    let n = p.universe().len();
    (0..n)
        .map(|i| (0..n).map(|j| p.rgs()[i] == p.rgs()[j]).collect())
        .collect()
}

fn not(m: &Matrix) -> Matrix {
    m.iter().map(|r| r.iter().map(|b| !b).collect()).collect()
}

fn zip(a: &Matrix, b: &Matrix, f: impl Fn(bool, bool) -> bool) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(&p, &q)| f(p, q)).collect())
        .collect()
}

/// Reflexive, symmetric, transitive closure (Floyd-Warshall).
fn closure(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut c = m.clone();
    for i in 0..n {
        c[i][i] = true;
        for j in 0..n {
            if m[i][j] {
                c[j][i] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if c[i][k] && c[k][j] {
                    c[i][j] = true;
                }
            }
        }
    }
    c
}

/// The partition whose dits are the interior of `dits`.
fn from_dits(u: &Universe, dits: &Matrix) -> Partition {
    let eq = closure(&not(dits));
    Partition::from_keys(u, (0..u.len()).map(|i| (0..u.len()).find(|&j| eq[i][j]).unwrap()))
}

fn o_join(s: &Partition, t: &Partition) -> Partition {
    from_dits(s.universe(), &zip(&not(&indit(s)), &not(&indit(t)), |a, b| a || b))
}

fn o_meet(s: &Partition, t: &Partition) -> Partition {
    from_dits(s.universe(), &zip(&not(&indit(s)), &not(&indit(t)), |a, b| a && b))
}

fn o_implies(s: &Partition, t: &Partition) -> Partition {
    from_dits(s.universe(), &zip(&indit(s), &not(&indit(t)), |a, b| a || b))
}

fn o_nand(s: &Partition, t: &Partition) -> Partition {
    from_dits(s.universe(), &zip(&indit(s), &indit(t), |a, b| a || b))
}

/// Components of the pairs where `table` is false on the dit signs.
fn o_graph(table: BoolOpTable, s: &Partition, t: &Partition) -> Partition {
    let arcs = zip(&not(&indit(s)), &not(&indit(t)), |a, b| !table.eval(a, b));
    let eq = closure(&arcs);
    let u = s.universe();
    Partition::from_keys(u, (0..u.len()).map(|i| (0..u.len()).find(|&j| eq[i][j]).unwrap()))
}

fn bool_value(f: &Formula, v: &BTreeMap<String, bool>) -> bool {
    match f {
        Formula::Atom(a) => v[a],
        Formula::Zero => false,
        Formula::One => true,
        Formula::Join(a, b) => bool_value(a, v) || bool_value(b, v),
        Formula::Meet(a, b) => bool_value(a, v) && bool_value(b, v),
        Formula::Impl(a, b) => !bool_value(a, v) || bool_value(b, v),
        Formula::Nand(a, b) => !(bool_value(a, v) && bool_value(b, v)),
        other => bool_value(&other.desugar(), v),
    }
}

fn truth_table_tautology(f: &Formula) -> bool {
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    (0u32..1 << atoms.len()).all(|mask| {
        let v = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), mask >> i & 1 == 1))
            .collect();
        bool_value(f, &v)
    })
}

// ---- helpers ----

fn u(labels: &[&str]) -> Universe {
    Universe::new(labels.iter().copied()).unwrap()
}

fn part(u: &Universe, blocks: &[&[&str]]) -> Partition {
    Partition::new(u, blocks).unwrap()
}

fn all(n: usize) -> Vec<Partition> {
    enumerate_partitions(&Universe::range(n).unwrap()).collect()
}

fn f(text: &str) -> Formula {
    parse(text).unwrap()
}

fn pair_assignment(s: &Partition, t: &Partition) -> Assignment {
    Assignment::new(s.universe())
        .with(SIGMA, s.clone())
        .unwrap()
        .with(TAU, t.clone())
        .unwrap()
}

fn for_assignments(ps: &[Partition], atoms: &[String], mut visit: impl FnMut(&Assignment) -> Check) -> Check {
    let k = atoms.len() as u32;
    for code in 0..ps.len().pow(k) {
        let mut a = Assignment::new(ps[0].universe());
        let mut c = code;
        for name in atoms {
            a.bind(name.clone(), ps[c % ps.len()].clone()).unwrap();
            c /= ps.len();
        }
        visit(&a)?;
    }
    Ok(())
}

// ---- criteria ----

fn c1_worked_examples() -> Check {
    let abcde = u(&["a", "b", "c", "d", "e"]);
    let s = part(&abcde, &[&["a", "b", "c"], &["d", "e"]]);
    let p = part(&abcde, &[&["a", "b"], &["c", "d", "e"]]);
    let meet = ops::meet(&s, &p).unwrap();
    ensure(meet.is_bottom(), || format!("meet = {meet}"))?;
    let imp = ops::implies(&s, &p).unwrap();
    ensure(imp == part(&abcde, &[&["a"], &["b"], &["c", "d", "e"]]), || {
        format!("implies = {imp}")
    })?;
    let nand = ops::nand(&s, &p).unwrap();
    ensure(nand == part(&abcde, &[&["a", "b", "d", "e"], &["c"]]), || {
        format!("nand = {nand}")
    })?;
    let people = u(&["Tom", "John", "Jim"]);
    let alpha = part(&people, &[&["Tom"], &["John", "Jim"]]);
    let omega = part(&people, &[&["Tom", "Jim"], &["John"]]);
    ensure(ops::meet(&alpha, &omega).unwrap().is_bottom(), || "α∧ω ≠ 0".into())?;
    let an = ops::nand(&alpha, &omega).unwrap();
    ensure(an == part(&people, &[&["Tom", "John"], &["Jim"]]), || {
        format!("α|ω = {an}")
    })
}

fn c2_normal_form_tables() -> Check {
    let ps = all(4);
    for op in OpCode::ALL.into_iter().filter(|&op| op != OpCode::One) {
        let cnf = cnf_of(op);
        for s in &ps {
            for t in &ps {
                let got = eval(&cnf, &pair_assignment(s, t)).unwrap();
                let want = ops::graph_op(op.table(), s, t).unwrap();
                ensure(got == want && want == o_graph(op.table(), s, t), || {
                    format!("CNF {op:?} at {s}, {t}")
                })?;
            }
        }
    }
    let ps = all(3);
    for op in OpCode::ALL {
        let dnf = dnf_dual_of(op);
        let dual = op.table().de_morgan_dual();
        for s in &ps {
            for t in &ps {
                let got = eval_dual(&dnf, &pair_assignment(s, t)).unwrap();
                let want = o_graph(dual, s, t).indit();
                ensure(got == want, || format!("DNF {op:?} at {s}, {t}"))?;
            }
        }
    }
    Ok(())
}

fn c3_common_dits() -> Check {
    let ps = all(5);
    ensure(ps.len() == 52, || format!("{} partitions of 5", ps.len()))?;
    for s in ps.iter().filter(|p| !p.is_bottom()) {
        for t in ps.iter().filter(|p| !p.is_bottom()) {
            let shared = zip(&not(&indit(s)), &not(&indit(t)), |a, b| a && b);
            ensure(shared.iter().flatten().any(|&b| b), || {
                format!("{s} and {t} share no dit")
            })?;
        }
    }
    Ok(())
}

fn c4_implication() -> Check {
    for n in 2..=4 {
        let ps = all(n);
        for s in &ps {
            for p in &ps {
                let imp = ops::implies(s, p).unwrap();
                ensure(imp == o_implies(s, p), || format!("σ⇒π at {s}, {p}: {imp}"))?;
                for tau in &ps {
                    let dits = |x: &Partition| not(&indit(x));
                    let common = zip(&dits(tau), &dits(s), |a, b| a && b);
                    let within = zip(&common, &dits(p), |c, d| !c || d).iter().flatten().all(|&b| b);
                    let below = ops::refines(tau, &imp).unwrap();
                    ensure(within == below, || format!("adjunction at τ={tau}, σ={s}, π={p}"))?;
                }
            }
        }
    }
    Ok(())
}

fn c5_chain_lengths() -> Check {
    for n in 2..=5 {
        let ps = all(n);
        for s in &ps {
            for t in &ps {
                let imp = ops::implies_indit_capped(s, t, 2).unwrap();
                ensure(imp == o_implies(s, t).indit(), || {
                    format!("implication chains at {s}, {t}")
                })?;
                let nand = ops::nand_indit_capped(s, t, 4).unwrap();
                ensure(nand == o_nand(s, t).indit(), || format!("nand chains at {s}, {t}"))?;
            }
        }
    }
    Ok(())
}

fn c6_duality() -> Check {
    let ps = all(3);
    let gen = FormulaGen::new(4, &["s", "p", "t"]);
    for phi in formulas(6, 200, &gen) {
        let d = dualize(&phi).map_err(|e| format!("{phi}: {e}"))?;
        let atoms: Vec<String> = phi.atoms().into_iter().collect();
        for_assignments(&ps, &atoms, |a| {
            let want = eval(&phi, a).unwrap().indit();
            ensure(eval_dual(&d, a).unwrap() == want, || {
                format!("{phi} under {:?}", a.bindings())
            })
        })?;
    }
    Ok(())
}

fn c7_classifications() -> Check {
    let proved = [
        "(s /\\ (s => p)) => p",
        "~s \\/ ~~s",
        "(s /\\ (s => p)) => (s /\\ p)",
        "(s | t) | (s /\\ t)",
    ];
    for text in proved {
        let phi = f(text);
        let r = check_partition_tautology(&phi, 4).unwrap();
        ensure(r == CheckResult::TautologyUpTo(4), || {
            format!("{text}: {}", r.to_json())
        })?;
        let o = prove(&phi, ProverConfig::default());
        ensure(o.is_proved(), || format!("{text}: prover says {}", o.verdict()))?;
        verify_outcome(&phi, &o).map_err(|e| format!("{text}: {e}"))?;
    }
    for text in [
        "((s => p) => s) => s",
        "s => (p => (s /\\ p))",
        "((p \\/ s) /\\ (p \\/ t)) => (p \\/ (s /\\ t))",
    ] {
        let r = check_partition_tautology(&f(text), 3).unwrap();
        ensure(r.is_countermodel(), || format!("{text}: no countermodel at |U| ≤ 3"))?;
    }
    let em = f("s \\/ ~s");
    ensure(check_weak(&em, 4).unwrap() == CheckResult::WeakTautologyUpTo(4), || {
        "σ∨¬σ weak".into()
    })?;
    ensure(check_partition_tautology(&em, 4).unwrap().is_countermodel(), || {
        "σ∨¬σ strict".into()
    })?;
    let acc = check_weak(&f("s => (p => (s /\\ p))"), 3).unwrap();
    ensure(acc.is_countermodel(), || "accumulation passes the weak check".into())
}

fn c8_omega_2() -> Check {
    let w = omega(2).unwrap();
    let atoms: Vec<String> = w.atoms().into_iter().collect();
    ensure(atoms.len() == 3, || format!("ω_2 has atoms {atoms:?}"))?;
    let mut count = 0;
    for_assignments(&all(2), &atoms, |a| {
        count += 1;
        ensure(eval(&w, a).unwrap().is_top(), || {
            format!("ω_2 under {:?}", a.bindings())
        })
    })?;
    ensure(count == 8, || format!("{count} assignments"))?;
    let a = omega_countermodel(2).unwrap();
    ensure(a.universe().len() == 3, || "model size".into())?;
    ensure(eval(&w, &a).unwrap().is_bottom(), || {
        "ω_2 is not 0 on the π_i model".into()
    })
}

/// Whether some bijection of the universe maps each binding of `a` onto
/// the same binding of `b` and the root pair onto itself.
fn isomorphic(a: &Assignment, b: &Assignment, root: (usize, usize)) -> bool {
    let n = a.universe().len();
    if n != b.universe().len() || a.bindings().keys().ne(b.bindings().keys()) {
        return false;
    }
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        perms(n - 1)
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |k| {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    q
                })
            })
            .collect()
    }
    perms(n).into_iter().any(|m| {
        let fixes_root = (m[root.0] == root.0 && m[root.1] == root.1) || (m[root.0] == root.1 && m[root.1] == root.0);
        fixes_root
            && a.bindings().iter().all(|(k, p)| {
                let q = &b.bindings()[k];
                (0..n).all(|i| (0..n).all(|j| p.same_block(i, j) == q.same_block(m[i], m[j])))
            })
    })
}

fn c9_countermodels_verify() -> Check {
    let mut corpus: Vec<Formula> = [
        "((s => p) => s) => s",
        "s => (p => (s /\\ p))",
        "((p \\/ s) /\\ (p \\/ t)) => (p \\/ (s /\\ t))",
        "s \\/ ~s",
        "~~((s /\\ t) \\/ (s | t))",
    ]
    .iter()
    .map(|t| f(t))
    .collect();
    corpus.extend(formulas(9, 100, &FormulaGen::new(3, &["s", "p", "t"])));
    let mut seen = 0;
    for phi in &corpus {
        let o = prove(phi, ProverConfig::default());
        if o.is_countermodel() {
            seen += 1;
            verify_outcome(phi, &o).map_err(|e| format!("{phi}: {e}"))?;
        }
    }
    ensure(seen >= 50, || format!("only {seen} countermodels in the corpus"))?;
    let o = prove(&f("((s => p) => s) => s"), ProverConfig::default());
    let ProverOutcome::Countermodel { assignment, pair } = o else {
        return Err(format!("Peirce: {}", o.verdict()));
    };
    ensure(pair == ("u0".into(), "u1".into()), || format!("root pair {pair:?}"))?;
    let named = u(&["u0", "u1", "a"]);
    let expected = Assignment::new(&named)
        .with("s", part(&named, &[&["u0", "u1"], &["a"]]))
        .unwrap()
        .with("p", Partition::bottom(&named))
        .unwrap();
    ensure(isomorphic(&assignment, &expected, (0, 1)), || {
        format!("Peirce model {}", assignment.to_json())
    })
}

fn c10_devil_model() -> Check {
    let five = u(&["0", "1", "2", "3", "4"]);
    let s = part(&five, &[&["0", "2", "4"], &["1"], &["3"]]);
    let t = part(&five, &[&["0"], &["1", "2"], &["3", "4"]]);
    ensure(
        ops::meet(&s, &t).unwrap().is_bottom() && o_meet(&s, &t).is_bottom(),
        || "σ∧τ ≠ 0".into(),
    )?;
    ensure(
        ops::nand(&s, &t).unwrap().is_bottom() && o_nand(&s, &t).is_bottom(),
        || "σ|τ ≠ 0".into(),
    )?;
    let mut b = Branch::new(&five);
    for (x, y) in [("0", "2"), ("2", "4"), ("0", "4")] {
        b.add(x, y, Sign::F, f("s")).unwrap();
    }
    for (x, y) in [("1", "2"), ("3", "4")] {
        b.add(x, y, Sign::F, f("t")).unwrap();
    }
    let m = extract_model(&b).map_err(|e| e.to_string())?;
    ensure(m.get("s") == Some(&s) && m.get("t") == Some(&t), || {
        format!("extracted {}", m.to_json())
    })
}

fn c11_transforms() -> Check {
    let gen = FormulaGen::new(3, &["s", "p", "t"]).without_nand();
    let pi = Pi::Atom("q".into());
    let nn = |x: Formula| pi.neg(pi.neg(x));
    let tautologies = filtered(11, 50, &gen, true);
    for phi in &tautologies {
        ensure(truth_table_tautology(phi), || {
            format!("{phi} is not a truth-table tautology")
        })?;
        let routes = [
            ("single-π", single_pi_neg_transform(phi, &pi).unwrap()),
            ("double-π", double_pi_neg_transform(phi, &pi).unwrap()),
            ("¬¬Gödel", nn(godel_transform(phi, &pi).unwrap())),
        ];
        for (name, g) in routes {
            let r = check_partition_tautology(&g, 4).unwrap();
            ensure(!r.is_countermodel(), || format!("{name} of {phi}: {}", r.to_json()))?;
        }
    }
    for phi in filtered(11, 20, &gen, false) {
        ensure(!truth_table_tautology(&phi), || {
            format!("{phi} is a truth-table tautology")
        })?;
        let g = nn(godel_transform(&phi, &pi).unwrap());
        ensure(check_partition_tautology(&g, 3).unwrap().is_countermodel(), || {
            format!("{phi}: no countermodel")
        })?;
    }
    Ok(())
}

/// The identities evaluated with the oracle operations.
fn oracle_identity(id: Identity, a: &[&Partition]) -> bool {
    let p = *a.last().unwrap();
    let neg = |x: &Partition| o_implies(x, p);
    let cob = |x: &Partition| o_join(x, &neg(x));
    let lits = |s: &Partition, t: &Partition| {
        let (ns, nt) = (neg(s), neg(t));
        let (nns, nnt) = (neg(&ns), neg(&nt));
        [
            (nns.clone(), nnt.clone()),
            (nns, nt.clone()),
            (ns.clone(), nnt),
            (ns, nt),
        ]
    };
    match id {
        Identity::Ore => {
            let (phi, ns, nt) = (a[0], neg(a[1]), neg(a[2]));
            o_join(phi, &o_meet(&ns, &nt)) == o_meet(&o_join(phi, &ns), &o_join(phi, &nt))
        }
        Identity::DualOre => {
            let (phi, ns, nt) = (o_join(a[0], p), neg(a[1]), neg(a[2]));
            o_meet(&phi, &o_join(&ns, &nt)) == o_join(&o_meet(&phi, &ns), &o_meet(&phi, &nt))
        }
        Identity::BoundaryCore => o_meet(&cob(a[0]), &neg(&neg(a[0]))) == o_join(a[0], p),
        Identity::CoLeibniz => {
            let (s, t) = (a[0], a[1]);
            cob(&o_join(s, t)) == o_meet(&o_join(&cob(s), t), &o_join(s, &cob(t)))
        }
        Identity::CnfDecomposition => {
            let phi = o_join(a[0], p);
            let rhs = lits(a[1], a[2])
                .iter()
                .map(|(x, y)| o_join(&o_join(x, y), &phi))
                .reduce(|x, y| o_meet(&x, &y));
            rhs == Some(phi)
        }
        Identity::DnfDecomposition => {
            let phi = o_join(a[0], p);
            let rhs = lits(a[1], a[2])
                .iter()
                .map(|(x, y)| o_meet(&o_meet(x, y), &phi))
                .reduce(|x, y| o_join(&x, &y));
            rhs == Some(phi)
        }
    }
}

fn c12_identity_suite() -> Check {
    let ps = all(4);
    let five = Universe::range(5).unwrap();
    let mut r = rng(12);
    for id in Identity::ALL {
        let k = id.arity();
        for code in 0..ps.len().pow(k as u32) {
            let args: Vec<&Partition> = (0..k).map(|i| &ps[code / ps.len().pow(i as u32) % ps.len()]).collect();
            ensure(id.holds(&args).unwrap(), || format!("{} at {args:?}", id.name()))?;
            ensure(oracle_identity(id, &args), || {
                format!("{} (oracle) at {args:?}", id.name())
            })?;
        }
        for _ in 0..500 {
            let sample: Vec<Partition> = (0..k).map(|_| random_partition(&mut r, &five)).collect();
            let args: Vec<&Partition> = sample.iter().collect();
            ensure(id.holds(&args).unwrap(), || format!("{} at {args:?}", id.name()))?;
            ensure(oracle_identity(id, &args), || {
                format!("{} (oracle) at {args:?}", id.name())
            })?;
        }
    }
    Ok(())
}

fn c13_boolean_core() -> Check {
    for p in all(4) {
        let core = boolean_core(&p).unwrap();
        let ns = p.blocks().iter().filter(|b| b.len() > 1).count();
        let singles = p.blocks().iter().filter(|b| b.len() == 1).count();
        ensure(core.len() == 1 << ns, || format!("|B| at {p}"))?;
        for x in &core {
            let bx = chi(x, &p).unwrap();
            let flipped: Vec<bool> = bx.iter().map(|b| !b).collect();
            ensure(chi(&o_implies(x, &p), &p).unwrap() == flipped, || {
                format!("flip at {x}, {p}")
            })?;
            for y in &core {
                let by = chi(y, &p).unwrap();
                let bits = |g: fn(bool, bool) -> bool| bx.iter().zip(&by).map(|(&a, &b)| g(a, b)).collect::<Vec<_>>();
                ensure(chi(&o_meet(x, y), &p).unwrap() == bits(|a, b| a && b), || {
                    format!("∧ at {x}, {y}")
                })?;
                ensure(chi(&o_join(x, y), &p).unwrap() == bits(|a, b| a || b), || {
                    format!("∨ at {x}, {y}")
                })?;
                ensure(chi(&o_implies(x, y), &p).unwrap() == bits(|a, b| !a || b), || {
                    format!("⇒ at {x}, {y}")
                })?;
            }
        }
        let unions = (0u32..16)
            .filter(|mask| (0..4).all(|i| (0..4).all(|j| !p.same_block(i, j) || (mask >> i & 1) == (mask >> j & 1))))
            .count() as u128;
        let formula = (1u128 << ns) * (1u128 << singles);
        ensure(unions == formula && b_pi_cardinality(&p) == formula, || {
            format!("|B(π)| at {p}: {unions}")
        })?;
    }
    Ok(())
}

fn c14_reduction() -> Check {
    let two = Universe::range(2).unwrap();
    let bit = |b: bool| {
        if b {
            Partition::top(&two)
        } else {
            Partition::bottom(&two)
        }
    };
    let named: [(
        &str,
        BoolOpTable,
        fn(&Partition, &Partition) -> partlog::Result<Partition>,
    ); 4] = [
        ("join", BoolOpTable::JOIN, ops::join),
        ("meet", BoolOpTable::MEET, ops::meet),
        ("implies", BoolOpTable::IMPLIES, ops::implies),
        ("nand", BoolOpTable::NAND, ops::nand),
    ];
    for (name, table, op) in named {
        for a in [true, false] {
            for b in [true, false] {
                let want = match name {
                    "join" => a || b,
                    "meet" => a && b,
                    "implies" => !a || b,
                    _ => !(a && b),
                };
                ensure(table.eval(a, b) == want, || format!("{name} table at ({a}, {b})"))?;
                ensure(op(&bit(a), &bit(b)).unwrap() == bit(want), || {
                    format!("{name} on Π(2) at ({a}, {b})")
                })?;
            }
        }
    }
    for table in BoolOpTable::all() {
        for a in [true, false] {
            for b in [true, false] {
                let v = ops::graph_op(table, &bit(a), &bit(b)).unwrap();
                ensure(v == bit(table.eval(a, b)), || {
                    format!("{table:?} on Π(2) at ({a}, {b})")
                })?;
            }
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

const CRITERIA: [Criterion; 14] = [
    Criterion {
        id: 1,
        name: "worked examples",
        limit: secs(1),
        run: c1_worked_examples,
    },
    Criterion {
        id: 2,
        name: "CNF and DNF dual tables",
        limit: secs(10),
        run: c2_normal_form_tables,
    },
    Criterion {
        id: 3,
        name: "common dits on |U| = 5",
        limit: secs(5),
        run: c3_common_dits,
    },
    Criterion {
        id: 4,
        name: "implication equivalence and adjunction",
        limit: None,
        run: c4_implication,
    },
    Criterion {
        id: 5,
        name: "chain-length caps",
        limit: None,
        run: c5_chain_lengths,
    },
    Criterion {
        id: 6,
        name: "duality on 200 formulas",
        limit: secs(60),
        run: c6_duality,
    },
    Criterion {
        id: 7,
        name: "tautology classifications",
        limit: None,
        run: c7_classifications,
    },
    Criterion {
        id: 8,
        name: "omega_2",
        limit: None,
        run: c8_omega_2,
    },
    Criterion {
        id: 9,
        name: "tableau countermodels verify",
        limit: None,
        run: c9_countermodels_verify,
    },
    Criterion {
        id: 10,
        name: "Devil's tableau model",
        limit: None,
        run: c10_devil_model,
    },
    Criterion {
        id: 11,
        name: "transforms",
        limit: None,
        run: c11_transforms,
    },
    Criterion {
        id: 12,
        name: "identity suite",
        limit: secs(60),
        run: c12_identity_suite,
    },
    Criterion {
        id: 13,
        name: "Boolean core",
        limit: None,
        run: c13_boolean_core,
    },
    Criterion {
        id: 14,
        name: "reduction to Π(2)",
        limit: None,
        run: c14_reduction,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(()), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            (r, _) => r,
        };
        let limit = c.limit.map_or("none".to_string(), |l| format!("{} s", l.as_secs()));
        match result {
            Ok(()) => println!(
                "criterion {:>2} PASS  {} ({} ms, limit {limit})",
                c.id,
                c.name,
                elapsed.as_millis()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL  {} ({} ms, limit {limit}): {why}",
                    c.id,
                    c.name,
                    elapsed.as_millis()
                );
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
