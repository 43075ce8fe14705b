use super::engine::{Action, Alt, Key, Recorder, State, Table};
use super::{ProverConfig, Sign};
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::partition::Partition;
use crate::semantics::{eval, Assignment};

/// How a guided run ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    /// `"open"`, `"max_elements"`, `"max_steps"` or `"saturated"`.
    pub end: &'static str,
    pub elements: usize,
    pub statements: usize,
}

struct Guide<'a> {
    values: Vec<Partition>,
    map: Vec<usize>,
    table: &'a Table,
}

impl Guide<'_> {
    fn holds(&self, k: Key, map: &[usize]) -> bool {
        let same = self.values[k.fid].same_block(map[k.i], map[k.j]);
        (k.sign == Sign::F) == same
    }

    /// Images for the fresh elements of `alt` under which all of its
    /// statements hold in the model.
    fn place(&self, alt: &Alt, n: usize) -> Option<Vec<usize>> {
        let size = self.values[0].universe().len();
        let mut map = self.map.clone();
        map.truncate(n);
        fn go(g: &Guide, alt: &Alt, n: usize, size: usize, map: &mut Vec<usize>) -> bool {
            let placed = map.len();
            let ready = |k: &Key| k.i.max(k.j) < placed;
            if !alt.adds.iter().filter(|k| ready(k)).all(|&k| g.holds(k, map)) {
                return false;
            }
            if placed == n + alt.fresh {
                return true;
            }
            for w in 0..size {
                map.push(w);
                if go(g, alt, n, size, map) {
                    return true;
                }
                map.pop();
            }
            false
        }
        go(self, alt, n, size, &mut map).then_some(map)
    }
}

/// Runs the tableau for `(pair):F f` along the single branch that stays
/// true in `model`, where `model` leaves `pair` undistinguished. Fresh
/// elements are mapped to model elements. Every rule must keep at least
/// one alternative satisfied; a violation is reported as an error naming
/// the statement and the rule that produced it.
pub fn probe(f: &Formula, model: &Assignment, pair: (usize, usize), cfg: ProverConfig) -> Result<ProbeReport> {
    let root = f.desugar();
    let value = eval(&root, model)?;
    if !value.same_block(pair.0, pair.1) {
        return Err(Error::VerificationFailed(
            "the model distinguishes the root pair".into(),
        ));
    }
    let table = Table::new(&root);
    let atoms: Vec<Partition> = table
        .atoms
        .iter()
        .map(|a| model.get(a).cloned().ok_or_else(|| Error::UnboundAtom(a.clone())))
        .collect::<Result<_>>()?;
    let mut guide = Guide {
        values: table.values(model.universe(), &atoms),
        map: vec![pair.0, pair.1],
        table: &table,
    };
    let mut rec = Recorder::new(cfg.max_steps);
    let mut st = State::new(&table, cfg.max_elements, cfg.prune);
    st.branch = rec.open_branch(None, true);
    st.add_root(&table, &mut rec);
    loop {
        let action = st.run(&table, &mut rec);
        for k in st.keys() {
            if !guide.holds(k, &guide.map) {
                let id = st.id(k).expect("present");
                let rule = rec
                    .steps
                    .iter()
                    .find(|s| s.conclusions.contains(&id))
                    .map_or("?", |s| s.rule.name());
                return Err(Error::VerificationFailed(format!(
                    "{rule} produced (u{},u{}):{}{} which the model falsifies",
                    k.i, k.j, k.sign, guide.table.formulas[k.fid]
                )));
            }
        }
        let report = |end| ProbeReport {
            end,
            elements: st.n,
            statements: st.count,
        };
        match action {
            Action::Closed => {
                return Err(Error::VerificationFailed(
                    "a branch satisfied by the model closed".into(),
                ))
            }
            Action::Open(_) => return Ok(report("open")),
            Action::MaxSteps => return Ok(report("max_steps")),
            Action::Saturated => return Ok(report("saturated")),
            Action::Split(alts) => {
                let choice = alts.iter().find_map(|a| guide.place(a, st.n).map(|m| (a, m)));
                let Some((alt, map)) = choice else {
                    let rule = alts.first().map_or("?", |a| a.rule.name());
                    return Err(Error::VerificationFailed(format!(
                        "no alternative of {rule} holds in the model"
                    )));
                };
                if st.n + alt.fresh > cfg.max_elements {
                    return Ok(report("max_elements"));
                }
                guide.map = map;
                let alt = alt.clone();
                st.apply(&table, &mut rec, &alt);
            }
        }
    }
}
