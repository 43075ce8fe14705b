use std::collections::{HashMap, VecDeque};

use super::{Rule, Sign};
use crate::formula::Formula;
use crate::ops;
use crate::partition::{Partition, Universe};

/// Back-chain alternatives offered per element-introducing statement.
pub(crate) const BACK_CAP: usize = 16;
/// Mixed (existing and fresh element) chain alternatives per statement.
pub(crate) const MIXED_CAP: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Kind {
    Atom(usize),
    Zero,
    One,
    Join(usize, usize),
    Meet(usize, usize),
    Impl(usize, usize),
    Nand(usize, usize),
}

/// The interned subformulas of a desugared root.
pub(crate) struct Table {
    pub formulas: Vec<Formula>,
    pub kinds: Vec<Kind>,
    pub atoms: Vec<String>,
    pub root: usize,
}

impl Table {
    pub fn new(root: &Formula) -> Table {
        let formulas = root.subformulas();
        let index: HashMap<&Formula, usize> = formulas.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut atoms = Vec::new();
        let kinds = formulas
            .iter()
            .map(|f| match f {
                Formula::Atom(n) => {
                    atoms.push(n.clone());
                    Kind::Atom(atoms.len() - 1)
                }
                Formula::Zero => Kind::Zero,
                Formula::One => Kind::One,
                Formula::Join(a, b) => Kind::Join(index[&**a], index[&**b]),
                Formula::Meet(a, b) => Kind::Meet(index[&**a], index[&**b]),
                Formula::Impl(a, b) => Kind::Impl(index[&**a], index[&**b]),
                Formula::Nand(a, b) => Kind::Nand(index[&**a], index[&**b]),
                other => panic!("tableau formulas are desugared, found {}", other.op_name()),
            })
            .collect();
        Table {
            root: formulas.len() - 1,
            formulas,
            kinds,
            atoms,
        }
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    /// Value of every subformula, given one partition per atom.
    pub fn values(&self, universe: &Universe, atoms: &[Partition]) -> Vec<Partition> {
        let mut vals: Vec<Partition> = Vec::with_capacity(self.len());
        for k in &self.kinds {
            let v = match *k {
                Kind::Atom(a) => atoms[a].clone(),
                Kind::Zero => Partition::bottom(universe),
                Kind::One => Partition::top(universe),
                Kind::Join(a, b) => ops::join_unchecked(&vals[a], &vals[b]),
                Kind::Meet(a, b) => ops::meet_unchecked(&vals[a], &vals[b]),
                Kind::Impl(a, b) => ops::implies_unchecked(&vals[a], &vals[b]),
                Kind::Nand(a, b) => ops::nand_unchecked(&vals[a], &vals[b]),
            };
            vals.push(v);
        }
        vals
    }

    fn atom_fids(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&f| matches!(self.kinds[f], Kind::Atom(_)))
            .collect()
    }
}

/// A signed statement about an unordered pair, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Key {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
    pub fid: usize,
}

pub(crate) fn key(i: usize, j: usize, sign: Sign, fid: usize) -> Key {
    assert_ne!(i, j, "statements are about distinct elements");
    Key {
        i: i.min(j),
        j: i.max(j),
        sign,
        fid,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum KeyState {
    Holds,
    Clashes,
    Free,
}

#[derive(Clone, Copy, Debug)]
enum Local {
    Split(Key),
    Anti(Key, usize),
}

/// One way to continue a branch.
#[derive(Clone, Debug)]
pub(crate) struct Alt {
    pub rule: Rule,
    pub target: Option<usize>,
    pub premises: Vec<usize>,
    /// Elements `>= n` (the size before applying) are fresh.
    pub adds: Vec<Key>,
    pub fresh: usize,
    pub essential: bool,
}

pub(crate) enum Action {
    Closed,
    Open(Vec<Partition>),
    Split(Vec<Alt>),
    MaxSteps,
    Saturated,
}

#[derive(Clone, Debug)]
pub(crate) struct StmtRec {
    pub branch: usize,
    pub key: Key,
}

#[derive(Clone, Debug)]
pub(crate) struct StepRec {
    pub rule: Rule,
    pub branch: usize,
    pub target: Option<usize>,
    pub premises: Vec<usize>,
    pub conclusions: Vec<usize>,
    pub new_elements: Vec<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct BranchRec {
    pub parent: Option<usize>,
    pub essential: bool,
    pub start: usize,
    pub closed: bool,
}

/// Global log shared by all branches of one proof attempt.
pub(crate) struct Recorder {
    pub stmts: Vec<StmtRec>,
    pub steps: Vec<StepRec>,
    pub branches: Vec<BranchRec>,
    pub steps_taken: usize,
    pub max_steps: usize,
}

impl Recorder {
    pub fn new(max_steps: usize) -> Self {
        Recorder {
            stmts: Vec::new(),
            steps: Vec::new(),
            branches: Vec::new(),
            steps_taken: 0,
            max_steps,
        }
    }

    pub fn open_branch(&mut self, parent: Option<usize>, essential: bool) -> usize {
        self.branches.push(BranchRec {
            parent,
            essential,
            start: self.stmts.len(),
            closed: false,
        });
        self.branches.len() - 1
    }

    fn step(&mut self, step: StepRec) {
        self.steps_taken += 1;
        self.steps.push(step);
    }

    fn exhausted(&self) -> bool {
        self.steps_taken >= self.max_steps
    }
}

/// The state of one branch.
#[derive(Clone)]
pub(crate) struct State {
    pub n: usize,
    cap: usize,
    nf: usize,
    pub branch: usize,
    pub closed: bool,
    /// Bit 0: T, bit 1: F.
    marks: Vec<u8>,
    ids: Vec<u32>,
    /// F-class representative per formula and element.
    class: Vec<usize>,
    q0: VecDeque<Key>,
    q1: VecDeque<Local>,
    q2: VecDeque<Key>,
    deferred: Vec<Local>,
    anti: Vec<Key>,
    pub count: usize,
    checked_at: Option<usize>,
    chain_bound: usize,
    prune: bool,
}

const NONE: u32 = u32::MAX;

fn bit(sign: Sign) -> u8 {
    match sign {
        Sign::T => 1,
        Sign::F => 2,
    }
}

impl State {
    pub fn new(t: &Table, cap: usize, prune: bool) -> State {
        let nf = t.len();
        State {
            n: 2,
            cap,
            nf,
            branch: 0,
            closed: false,
            marks: vec![0; nf * cap * cap],
            ids: vec![NONE; nf * cap * cap * 2],
            class: (0..nf).flat_map(|_| 0..cap).collect(),
            q0: VecDeque::new(),
            q1: VecDeque::new(),
            q2: VecDeque::new(),
            deferred: Vec::new(),
            anti: Vec::new(),
            count: 0,
            checked_at: None,
            chain_bound: nf,
            prune,
        }
    }

    fn slot(&self, fid: usize, i: usize, j: usize) -> usize {
        (fid * self.cap + i) * self.cap + j
    }

    pub fn has(&self, k: Key) -> bool {
        self.marks[self.slot(k.fid, k.i, k.j)] & bit(k.sign) != 0
    }

    pub fn id(&self, k: Key) -> Option<usize> {
        let v = self.ids[self.slot(k.fid, k.i, k.j) * 2 + (k.sign == Sign::F) as usize];
        (v != NONE).then_some(v as usize)
    }

    fn class_of(&self, fid: usize, x: usize) -> usize {
        self.class[fid * self.cap + x]
    }

    pub fn key_state(&self, t: &Table, k: Key) -> KeyState {
        let trivial = match (t.kinds[k.fid], k.sign) {
            (Kind::Zero, Sign::F) | (Kind::One, Sign::T) => Some(KeyState::Holds),
            (Kind::Zero, Sign::T) | (Kind::One, Sign::F) => Some(KeyState::Clashes),
            _ => None,
        };
        if let Some(s) = trivial {
            return s;
        }
        if k.i >= self.n || k.j >= self.n {
            return KeyState::Free;
        }
        if self.has(k) {
            KeyState::Holds
        } else if self.has(Key {
            sign: k.sign.flip(),
            ..k
        }) {
            KeyState::Clashes
        } else {
            KeyState::Free
        }
    }

    fn alt_state(&self, t: &Table, adds: &[Key]) -> KeyState {
        let states: Vec<KeyState> = adds.iter().map(|&k| self.key_state(t, k)).collect();
        if states.contains(&KeyState::Clashes) {
            KeyState::Clashes
        } else if states.iter().all(|&s| s == KeyState::Holds) {
            KeyState::Holds
        } else {
            KeyState::Free
        }
    }

    /// Statement ids that make `k` clash, if any exist as statements.
    fn clash_witness(&self, t: &Table, k: Key) -> Option<usize> {
        match t.kinds[k.fid] {
            Kind::Zero | Kind::One => None,
            _ if k.i < self.n && k.j < self.n => self.id(Key {
                sign: k.sign.flip(),
                ..k
            }),
            _ => None,
        }
    }

    pub fn add_root(&mut self, t: &Table, rec: &mut Recorder) {
        let root = key(0, 1, Sign::F, t.root);
        self.conclude(t, rec, Rule::Root, None, vec![], vec![root], vec![], true);
    }

    /// Adds statements as the conclusion of one rule application, then
    /// propagates transitivity and enqueues follow-up rules.
    #[allow(clippy::too_many_arguments)]
    fn conclude(
        &mut self,
        t: &Table,
        rec: &mut Recorder,
        rule: Rule,
        target: Option<usize>,
        premises: Vec<usize>,
        keys: Vec<Key>,
        new_elements: Vec<usize>,
        keep_trivial: bool,
    ) {
        let mut fresh = Vec::new();
        for k in keys {
            let trivial = matches!((t.kinds[k.fid], k.sign), (Kind::Zero, Sign::F) | (Kind::One, Sign::T));
            if (trivial && !keep_trivial) || self.has(k) {
                continue;
            }
            fresh.push((k, self.record(rec, k)));
        }
        rec.step(StepRec {
            rule,
            branch: self.branch,
            target,
            premises,
            conclusions: fresh.iter().map(|&(_, id)| id).collect(),
            new_elements,
        });
        for &(k, id) in &fresh {
            if self.check_clash(t, rec, k, id) {
                return;
            }
        }
        for &(k, id) in &fresh {
            if k.sign == Sign::F {
                self.transitivity(t, rec, k, id);
                if self.closed {
                    return;
                }
            }
        }
        for &(k, _) in &fresh {
            self.enqueue(t, k);
        }
    }

    fn record(&mut self, rec: &mut Recorder, k: Key) -> usize {
        let slot = self.slot(k.fid, k.i, k.j);
        self.marks[slot] |= bit(k.sign);
        let id = rec.stmts.len();
        rec.stmts.push(StmtRec {
            branch: self.branch,
            key: k,
        });
        self.ids[slot * 2 + (k.sign == Sign::F) as usize] = id as u32;
        self.count += 1;
        id
    }

    fn check_clash(&mut self, t: &Table, rec: &mut Recorder, k: Key, id: usize) -> bool {
        let premises = match (t.kinds[k.fid], k.sign) {
            (Kind::Zero, Sign::T) | (Kind::One, Sign::F) => vec![id],
            _ => match self.id(Key {
                sign: k.sign.flip(),
                ..k
            }) {
                Some(other) => vec![other, id],
                None => return false,
            },
        };
        self.close(rec, Rule::Close, premises);
        true
    }

    fn close(&mut self, rec: &mut Recorder, rule: Rule, premises: Vec<usize>) {
        rec.step(StepRec {
            rule,
            branch: self.branch,
            target: None,
            premises,
            conclusions: vec![],
            new_elements: vec![],
        });
        self.closed = true;
    }

    /// Merges the F-classes of `k` and materializes every implied F statement.
    fn transitivity(&mut self, t: &Table, rec: &mut Recorder, k: Key, id: usize) {
        let (ca, cb) = (self.class_of(k.fid, k.i), self.class_of(k.fid, k.j));
        if ca == cb {
            return;
        }
        let a: Vec<usize> = (0..self.n).filter(|&x| self.class_of(k.fid, x) == ca).collect();
        let b: Vec<usize> = (0..self.n).filter(|&x| self.class_of(k.fid, x) == cb).collect();
        let rep = ca.min(cb);
        for &x in a.iter().chain(&b) {
            self.class[k.fid * self.cap + x] = rep;
        }
        // a side holds k.i, b side holds k.j.
        let (a, b, ei, ej) = if a.contains(&k.i) {
            (a, b, k.i, k.j)
        } else {
            (b, a, k.j, k.i)
        };
        for &x in &a {
            for &y in &b {
                if (x, y) == (ei, ej) {
                    continue;
                }
                let mut premises = Vec::with_capacity(3);
                if x != ei {
                    premises.push(self.id(key(x, ei, Sign::F, k.fid)).expect("class is an F-clique"));
                }
                premises.push(id);
                if y != ej {
                    premises.push(self.id(key(ej, y, Sign::F, k.fid)).expect("class is an F-clique"));
                }
                let d = key(x, y, Sign::F, k.fid);
                let did = self.record(rec, d);
                rec.step(StepRec {
                    rule: Rule::FTrans,
                    branch: self.branch,
                    target: None,
                    premises,
                    conclusions: vec![did],
                    new_elements: vec![],
                });
                if self.check_clash(t, rec, d, did) {
                    return;
                }
            }
        }
    }

    fn enqueue(&mut self, t: &Table, k: Key) {
        match (t.kinds[k.fid], k.sign) {
            (Kind::Join(..), Sign::F) | (Kind::Meet(..), Sign::T) => self.q0.push_back(k),
            (Kind::Join(..), Sign::T) => self.q1.push_back(Local::Split(k)),
            (Kind::Impl(..) | Kind::Nand(..), Sign::T) => self.q1.push_back(Local::Split(k)),
            (Kind::Meet(..) | Kind::Impl(..) | Kind::Nand(..), Sign::F) => self.q2.push_back(k),
            _ => {}
        }
        if k.sign == Sign::T && matches!(t.kinds[k.fid], Kind::Meet(..) | Kind::Impl(..) | Kind::Nand(..)) {
            self.anti.push(k);
            for a in 0..self.n {
                if a != k.i && a != k.j {
                    self.q1.push_back(Local::Anti(k, a));
                }
            }
        }
    }

    fn add_elements(&mut self, m: usize) -> Vec<usize> {
        let new: Vec<usize> = (self.n..self.n + m).collect();
        self.n += m;
        for &e in &new {
            for idx in 0..self.anti.len() {
                let k = self.anti[idx];
                self.q1.push_back(Local::Anti(k, e));
            }
        }
        new
    }

    pub fn apply(&mut self, t: &Table, rec: &mut Recorder, alt: &Alt) {
        let new = self.add_elements(alt.fresh);
        self.conclude(
            t,
            rec,
            alt.rule,
            alt.target,
            alt.premises.clone(),
            alt.adds.clone(),
            new,
            false,
        );
    }

    fn local_alts(&self, t: &Table, item: Local) -> (Rule, Key, [Vec<Key>; 2]) {
        match item {
            Local::Split(k) => {
                let (i, j) = (k.i, k.j);
                match t.kinds[k.fid] {
                    Kind::Join(a, b) => (Rule::TOr, k, [vec![key(i, j, Sign::T, a)], vec![key(i, j, Sign::T, b)]]),
                    Kind::Impl(a, b) => (
                        Rule::TImp,
                        k,
                        [vec![key(i, j, Sign::F, a)], vec![key(i, j, Sign::T, b)]],
                    ),
                    Kind::Nand(a, b) => (
                        Rule::TNand,
                        k,
                        [vec![key(i, j, Sign::F, a)], vec![key(i, j, Sign::F, b)]],
                    ),
                    other => unreachable!("no local split for {other:?}"),
                }
            }
            Local::Anti(k, a) => (
                Rule::TAntiTrans,
                k,
                [vec![key(k.i, a, Sign::T, k.fid)], vec![key(a, k.j, Sign::T, k.fid)]],
            ),
        }
    }

    /// Resolves a local item: `Ok(None)` if done (skipped, applied or
    /// closed), `Ok(Some(alts))` if both sides are open.
    fn resolve(&mut self, t: &Table, rec: &mut Recorder, item: Local) -> Option<Vec<Alt>> {
        let (rule, target, sides) = self.local_alts(t, item);
        let tid = self.id(target).expect("target statement exists");
        let states: Vec<KeyState> = sides.iter().map(|s| self.alt_state(t, s)).collect();
        if states.contains(&KeyState::Holds) {
            return None;
        }
        let viable: Vec<usize> = (0..2).filter(|&s| states[s] == KeyState::Free).collect();
        match viable.as_slice() {
            [] => {
                let mut premises = vec![tid];
                for side in &sides {
                    premises.extend(side.iter().filter_map(|&k| self.clash_witness(t, k)).take(1));
                }
                self.close(rec, Rule::Close, premises);
                None
            }
            [s] => {
                let adds = sides[*s].clone();
                self.conclude(t, rec, rule, Some(tid), vec![tid], adds, vec![], false);
                None
            }
            _ => Some(
                sides
                    .into_iter()
                    .map(|adds| Alt {
                        rule,
                        target: Some(tid),
                        premises: vec![tid],
                        adds,
                        fresh: 0,
                        essential: true,
                    })
                    .collect(),
            ),
        }
    }

    fn deterministic(&mut self, t: &Table, rec: &mut Recorder, k: Key) {
        let tid = self.id(k).expect("target statement exists");
        let (rule, adds) = match t.kinds[k.fid] {
            Kind::Join(a, b) => (Rule::FOr, vec![key(k.i, k.j, Sign::F, a), key(k.i, k.j, Sign::F, b)]),
            Kind::Meet(a, b) => (Rule::TAnd, vec![key(k.i, k.j, Sign::T, a), key(k.i, k.j, Sign::T, b)]),
            other => unreachable!("no deterministic rule for {other:?}"),
        };
        if self.alt_state(t, &adds) == KeyState::Holds {
            return;
        }
        self.conclude(t, rec, rule, Some(tid), vec![tid], adds, vec![], false);
    }

    /// Runs deterministic work until the branch closes, opens, or needs a split.
    pub fn run(&mut self, t: &Table, rec: &mut Recorder) -> Action {
        loop {
            if self.closed {
                return Action::Closed;
            }
            if rec.exhausted() {
                return Action::MaxSteps;
            }
            if let Some(k) = self.q0.pop_front() {
                self.deterministic(t, rec, k);
                continue;
            }
            if let Some(item) = self.q1.pop_front() {
                if let Some(alts) = self.resolve(t, rec, item) {
                    match item {
                        Local::Anti(..) => self.deferred.push(item),
                        Local::Split(_) => return Action::Split(alts),
                    }
                }
                continue;
            }
            if self.settle_deferred(t, rec) {
                continue;
            }
            if self.prune && self.branch_closing_lemma(t, rec) {
                return Action::Closed;
            }
            if self.checked_at != Some(self.count) {
                self.checked_at = Some(self.count);
                if let Some(model) = self.falsifying_model(t) {
                    return Action::Open(model);
                }
            }
            if !self.deferred.is_empty() {
                let item = self.deferred.remove(0);
                if let Some(alts) = self.resolve(t, rec, item) {
                    return Action::Split(alts);
                }
                continue;
            }
            if let Some(k) = self.next_chain_item(t) {
                if self.witnessed(t, k) {
                    continue;
                }
                let alts = self.chain_alts(t, k);
                if alts.is_empty() {
                    let tid = self.id(k).expect("target statement exists");
                    self.close(rec, Rule::Close, vec![tid]);
                    return Action::Closed;
                }
                return Action::Split(alts);
            }
            return Action::Saturated;
        }
    }

    /// The pending element-introducing statement with the shortest chain
    /// bound, first come first served within a bound.
    fn next_chain_item(&mut self, t: &Table) -> Option<Key> {
        let pos = (0..self.q2.len()).min_by_key(|&p| self.max_links(t, self.q2[p].fid))?;
        self.q2.remove(pos)
    }

    /// Re-resolves deferred items; returns whether any added statements.
    fn settle_deferred(&mut self, t: &Table, rec: &mut Recorder) -> bool {
        let before = self.count;
        let mut keep = Vec::new();
        for item in std::mem::take(&mut self.deferred) {
            if self.closed {
                break;
            }
            let (_, _, sides) = self.local_alts(t, item);
            if sides.iter().all(|s| self.alt_state(t, s) == KeyState::Free) {
                keep.push(item);
            } else {
                self.resolve(t, rec, item);
            }
        }
        self.deferred = keep;
        self.closed || self.count != before
    }

    /// Principal use of the branch-closing lemma: `Tσ,Fπ` on one link and
    /// `T(σ⇒π),Fπ` on another link of the same `Fπ` class.
    fn branch_closing_lemma(&mut self, t: &Table, rec: &mut Recorder) -> bool {
        for fid in 0..self.nf {
            let Kind::Impl(s, p) = t.kinds[fid] else { continue };
            for (x, y) in self.pairs() {
                let (imp, fp) = (key(x, y, Sign::T, fid), key(x, y, Sign::F, p));
                if !(self.has(imp) && self.has(fp)) {
                    continue;
                }
                let c = self.class_of(p, x);
                let hit = self.pairs().into_iter().find(|&(a, b)| {
                    self.class_of(p, a) == c && self.has(key(a, b, Sign::T, s)) && self.has(key(a, b, Sign::F, p))
                });
                if let Some((a, b)) = hit {
                    let premises = [imp, fp, key(a, b, Sign::T, s), key(a, b, Sign::F, p)]
                        .iter()
                        .map(|&k| self.id(k).expect("present"))
                        .collect();
                    self.close(rec, Rule::BranchClosingLemma, premises);
                    return true;
                }
            }
        }
        false
    }

    /// Every statement on the branch.
    pub fn keys(&self) -> Vec<Key> {
        let mut out = Vec::new();
        for fid in 0..self.nf {
            for (i, j) in self.pairs() {
                for sign in [Sign::T, Sign::F] {
                    let k = key(i, j, sign, fid);
                    if self.has(k) {
                        out.push(k);
                    }
                }
            }
        }
        out
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).collect()
    }

    /// Atom partitions from the F-classes, if they already refute the root.
    fn falsifying_model(&self, t: &Table) -> Option<Vec<Partition>> {
        let model = self.atom_model(t);
        let u = Universe::with_prefix("u", self.n).expect("at least two elements");
        let vals = t.values(&u, &model);
        vals[t.root].same_block(0, 1).then_some(model)
    }

    pub fn atom_model(&self, t: &Table) -> Vec<Partition> {
        let u = Universe::with_prefix("u", self.n).expect("at least two elements");
        let mut model = vec![Partition::top(&u); t.atoms.len()];
        for fid in t.atom_fids() {
            let Kind::Atom(a) = t.kinds[fid] else { unreachable!() };
            model[a] = Partition::from_keys(&u, (0..self.n).map(|x| self.class_of(fid, x)));
        }
        model
    }

    /// Statements required on one link of a falsifying chain.
    fn link(t: &Table, fid: usize, x: usize, y: usize, label: usize) -> Vec<Key> {
        match t.kinds[fid] {
            Kind::Impl(a, b) => vec![key(x, y, Sign::T, a), key(x, y, Sign::F, b)],
            Kind::Nand(a, b) => vec![key(x, y, Sign::T, a), key(x, y, Sign::T, b)],
            Kind::Meet(a, b) => vec![key(x, y, Sign::F, if label == 0 { a } else { b })],
            other => unreachable!("no chain rule for {other:?}"),
        }
    }

    fn max_links(&self, t: &Table, fid: usize) -> usize {
        match t.kinds[fid] {
            Kind::Impl(..) => 2,
            Kind::Nand(..) => 4,
            _ => self.chain_bound.max(2),
        }
    }

    /// Whether a chain of existing links already witnesses the F statement.
    fn witnessed(&self, t: &Table, k: Key) -> bool {
        let holds = |x: usize, y: usize| {
            let labels: &[usize] = if matches!(t.kinds[k.fid], Kind::Meet(..)) {
                &[0, 1]
            } else {
                &[0]
            };
            labels.iter().any(|&l| {
                Self::link(t, k.fid, x, y, l)
                    .iter()
                    .all(|&q| self.key_state(t, q) == KeyState::Holds)
            })
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![k.i];
        seen[k.i] = true;
        while let Some(x) = stack.pop() {
            if x == k.j {
                return true;
            }
            for y in 0..self.n {
                if !seen[y] && x != y && holds(x, y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    fn chain_alts(&self, t: &Table, k: Key) -> Vec<Alt> {
        let tid = self.id(k).expect("target statement exists");
        let rule = match t.kinds[k.fid] {
            Kind::Meet(..) => Rule::FAnd,
            Kind::Impl(..) => Rule::FImp,
            _ => Rule::FNand,
        };
        let patterns: &[usize] = if rule == Rule::FAnd { &[0, 1] } else { &[0] };
        let links = self.max_links(t, k.fid);
        let build = |inner: &[usize], pattern: usize| -> Vec<Key> {
            let nodes: Vec<usize> = std::iter::once(k.i).chain(inner.iter().copied()).chain([k.j]).collect();
            nodes
                .windows(2)
                .enumerate()
                .flat_map(|(pos, w)| Self::link(t, k.fid, w[0], w[1], (pattern + pos) % 2))
                .collect()
        };
        let alt = |adds: Vec<Key>, fresh: usize, essential: bool| Alt {
            rule,
            target: Some(tid),
            premises: vec![tid],
            adds,
            fresh,
            essential,
        };
        let mut out = Vec::new();
        for &p in patterns {
            let adds = build(&[], p);
            if self.alt_state(t, &adds) != KeyState::Clashes {
                out.push(alt(adds, 0, true));
            }
        }
        let existing: Vec<usize> = (0..self.n).filter(|&x| x != k.i && x != k.j).collect();
        let mut back = 0;
        'back: for m in 1..links {
            for inner in sequences(&existing, m) {
                for &p in patterns {
                    let adds = build(&inner, p);
                    if self.alt_state(t, &adds) == KeyState::Free {
                        out.push(alt(adds, 0, false));
                        back += 1;
                        if back == BACK_CAP {
                            break 'back;
                        }
                    }
                }
            }
        }
        let mut mixed = 0;
        'mixed: for m in 2..links {
            for fresh in 1..m {
                if self.n + fresh > self.cap {
                    break;
                }
                for shape in mixed_shapes(&existing, m, fresh, self.n) {
                    for &p in patterns {
                        let adds = build(&shape, p);
                        if self.alt_state(t, &adds) == KeyState::Free {
                            out.push(alt(adds, fresh, false));
                            mixed += 1;
                            if mixed == MIXED_CAP {
                                break 'mixed;
                            }
                        }
                    }
                }
            }
        }
        for m in 1..links {
            let inner: Vec<usize> = (self.n..self.n + m).collect();
            for &p in patterns {
                let adds = build(&inner, p);
                if self.alt_state(t, &adds) != KeyState::Clashes {
                    out.push(alt(adds, m, true));
                }
            }
        }
        out
    }
}

/// All sequences of `m` distinct items, in lexicographic order.
fn sequences(items: &[usize], m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(items: &[usize], m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for &x in items {
            if !cur.contains(&x) {
                cur.push(x);
                go(items, m, cur, out);
                cur.pop();
            }
        }
    }
    if m <= items.len() {
        go(items, m, &mut cur, &mut out);
    }
    out
}

/// Chains of `m` inner nodes with exactly `fresh` new elements (numbered from
/// `n` in order of appearance) and the rest distinct existing elements.
fn mixed_shapes(existing: &[usize], m: usize, fresh: usize, n: usize) -> Vec<Vec<usize>> {
    let olds = m - fresh;
    if olds == 0 || olds > existing.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize != fresh {
            continue;
        }
        for old in sequences(existing, olds) {
            let (mut next_new, mut next_old) = (n, old.iter());
            let shape = (0..m)
                .map(|pos| {
                    if mask >> pos & 1 == 1 {
                        next_new += 1;
                        next_new - 1
                    } else {
                        *next_old.next().expect("enough old nodes")
                    }
                })
                .collect();
            out.push(shape);
        }
    }
    out
}
