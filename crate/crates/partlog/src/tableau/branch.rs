use std::collections::{BTreeMap, BTreeSet};

use super::Sign;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::partition::{Partition, Universe};
use crate::semantics::Assignment;

/// A signed statement about an unordered pair of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Statement {
    pub pair: (usize, usize),
    pub sign: Sign,
    pub formula: Formula,
}

/// A hand-built tableau branch: a universe of elements and a set of signed
/// statements, deduplicated modulo pair symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    universe: Universe,
    statements: BTreeSet<Statement>,
}

impl Branch {
    pub fn new(universe: &Universe) -> Self {
        Branch {
            universe: universe.clone(),
            statements: BTreeSet::new(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn statements(&self) -> impl Iterator<Item = &Statement> {
        self.statements.iter()
    }

    /// Adds `(a,b):sign f` by element labels.
    pub fn add(&mut self, a: &str, b: &str, sign: Sign, f: Formula) -> Result<()> {
        let idx = |l: &str| {
            self.universe
                .index_of(l)
                .ok_or_else(|| Error::UnknownElement(l.to_string()))
        };
        let (i, j) = (idx(a)?, idx(b)?);
        self.add_index(i, j, sign, f)
    }

    /// # Panics
    /// If `i == j` or an index is outside the universe.
    pub fn add_index(&mut self, i: usize, j: usize, sign: Sign, f: Formula) -> Result<()> {
        assert!(i != j && i.max(j) < self.universe.len(), "bad pair ({i}, {j})");
        if let Some(op) = f.first_derived() {
            return Err(Error::NotDesugared(op));
        }
        self.statements.insert(Statement {
            pair: (i.min(j), i.max(j)),
            sign,
            formula: f,
        });
        Ok(())
    }

    pub fn with(mut self, a: &str, b: &str, sign: Sign, f: Formula) -> Result<Self> {
        self.add(a, b, sign, f)?;
        Ok(self)
    }

    fn holds(&self, i: usize, j: usize, sign: Sign, f: &Formula) -> bool {
        match (f, sign) {
            (Formula::Zero, Sign::F) | (Formula::One, Sign::T) => true,
            _ => self.statements.contains(&Statement {
                pair: (i.min(j), i.max(j)),
                sign,
                formula: f.clone(),
            }),
        }
    }

    /// Some pair carries both `Tφ` and `Fφ`, or `T0`, or `F1`.
    pub fn is_closed(&self) -> bool {
        self.statements.iter().any(|s| {
            matches!((&s.formula, s.sign), (Formula::Zero, Sign::T) | (Formula::One, Sign::F))
                || (s.sign == Sign::T && self.holds(s.pair.0, s.pair.1, Sign::F, &s.formula))
        })
    }

    /// Whether `i` reaches `j` through links satisfying `link`.
    fn connected(&self, i: usize, j: usize, link: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.universe.len();
        let mut seen = vec![false; n];
        let mut stack = vec![i];
        seen[i] = true;
        while let Some(x) = stack.pop() {
            if x == j {
                return true;
            }
            for y in 0..n {
                if !seen[y] && link(x, y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Rule applications the branch still lacks, described in words. A
    /// branch is complete when this is empty.
    pub fn pending(&self) -> Vec<String> {
        let n = self.universe.len();
        let label = |i: usize| self.universe.label(i).to_string();
        let mut out = Vec::new();
        for s in &self.statements {
            let (i, j) = s.pair;
            let at = format!("({},{}):{}{}", label(i), label(j), s.sign, s.formula);
            let h = |sign, f: &Formula| self.holds(i, j, sign, f);
            let ok = match (&s.formula, s.sign) {
                (Formula::Join(a, b), Sign::T) => h(Sign::T, a) || h(Sign::T, b),
                (Formula::Join(a, b), Sign::F) => h(Sign::F, a) && h(Sign::F, b),
                (Formula::Meet(a, b), Sign::T) => h(Sign::T, a) && h(Sign::T, b),
                (Formula::Impl(a, b), Sign::T) => h(Sign::F, a) || h(Sign::T, b),
                (Formula::Nand(a, b), Sign::T) => h(Sign::F, a) || h(Sign::F, b),
                (Formula::Meet(a, b), Sign::F) => self.connected(i, j, |x, y| {
                    x != y && (self.holds(x, y, Sign::F, a) || self.holds(x, y, Sign::F, b))
                }),
                (Formula::Impl(a, b), Sign::F) => self.connected(i, j, |x, y| {
                    x != y && self.holds(x, y, Sign::T, a) && self.holds(x, y, Sign::F, b)
                }),
                (Formula::Nand(a, b), Sign::F) => self.connected(i, j, |x, y| {
                    x != y && self.holds(x, y, Sign::T, a) && self.holds(x, y, Sign::T, b)
                }),
                _ => true,
            };
            if !ok {
                out.push(format!("{at} is not decomposed"));
            }
            let anti =
                s.sign == Sign::T && matches!(s.formula, Formula::Meet(..) | Formula::Impl(..) | Formula::Nand(..));
            if anti {
                for x in (0..n).filter(|&x| x != i && x != j) {
                    if !self.holds(i, x, Sign::T, &s.formula) && !self.holds(x, j, Sign::T, &s.formula) {
                        out.push(format!("{at} needs T-anti-transitivity through {}", label(x)));
                    }
                }
            }
            if s.sign == Sign::F {
                for x in (0..n).filter(|&x| x != i && x != j) {
                    for (a, b) in [(i, j), (j, i)] {
                        if self.holds(b, x, Sign::F, &s.formula) && !self.holds(a, x, Sign::F, &s.formula) {
                            out.push(format!(
                                "({},{}):F{} follows by F-transitivity",
                                label(a),
                                label(x),
                                s.formula
                            ));
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn is_complete(&self) -> bool {
        self.pending().is_empty()
    }

    fn atoms(&self) -> BTreeSet<String> {
        self.statements.iter().flat_map(|s| s.formula.atoms()).collect()
    }
}

/// The model of a complete open branch: for each atom, the blocks are the
/// connected components of its atomic F-statements.
pub fn extract_model(b: &Branch) -> Result<Assignment> {
    if b.is_closed() {
        return Err(Error::BranchClosed);
    }
    if !b.is_complete() {
        return Err(Error::BranchIncomplete);
    }
    let u = &b.universe;
    let mut links: BTreeMap<String, Vec<(usize, usize)>> = b.atoms().into_iter().map(|a| (a, vec![])).collect();
    for s in &b.statements {
        if let (Formula::Atom(name), Sign::F) = (&s.formula, s.sign) {
            links.get_mut(name).expect("collected atom").push(s.pair);
        }
    }
    let mut a = Assignment::new(u);
    for (name, pairs) in links {
        let mut comp: Vec<usize> = (0..u.len()).collect();
        fn find(c: &mut Vec<usize>, x: usize) -> usize {
            if c[x] != x {
                let r = find(c, c[x]);
                c[x] = r;
            }
            c[x]
        }
        for (x, y) in pairs {
            let (rx, ry) = (find(&mut comp, x), find(&mut comp, y));
            comp[rx.max(ry)] = rx.min(ry);
        }
        let keys: Vec<usize> = (0..u.len()).map(|x| find(&mut comp, x)).collect();
        a.bind(name, Partition::from_keys(u, keys))?;
    }
    Ok(a)
}
