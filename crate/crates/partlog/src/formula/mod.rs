//! Formulas, their concrete syntax, dualization and syntactic transforms.

mod dual;
mod parse;
mod print;
mod tables;
mod transform;

use std::collections::{BTreeSet, HashSet};

use serde_json::{json, Value};

pub use dual::{dualize, dualize_back, DualFormula};
pub use parse::parse;
pub use tables::{cnf_of, dnf_dual_of, OpCode, SIGMA, TAU};
pub use transform::{double_pi_neg_transform, godel_transform, single_pi_neg_transform, Pi};

/// A formula over atoms, the constants 0 and 1 and the four primitive
/// connectives. The derived connectives (`Not` to `Diff`) only occur before
/// [`Formula::desugar`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Zero,
    One,
    Join(Box<Formula>, Box<Formula>),
    Meet(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
    Nand(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Equiv(Box<Formula>, Box<Formula>),
    Inequiv(Box<Formula>, Box<Formula>),
    Nor(Box<Formula>, Box<Formula>),
    /// `Diff(s, t)` is `t − s`, desugared to `t ∧ ¬s`.
    Diff(Box<Formula>, Box<Formula>),
}

use Formula::*;

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Atom(name.into())
    }

    pub fn join(a: Formula, b: Formula) -> Self {
        Join(Box::new(a), Box::new(b))
    }

    pub fn meet(a: Formula, b: Formula) -> Self {
        Meet(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Impl(Box::new(a), Box::new(b))
    }

    pub fn nand(a: Formula, b: Formula) -> Self {
        Nand(Box::new(a), Box::new(b))
    }

    pub fn not(a: Formula) -> Self {
        Not(Box::new(a))
    }

    pub fn equiv(a: Formula, b: Formula) -> Self {
        Equiv(Box::new(a), Box::new(b))
    }

    pub fn inequiv(a: Formula, b: Formula) -> Self {
        Inequiv(Box::new(a), Box::new(b))
    }

    pub fn nor(a: Formula, b: Formula) -> Self {
        Nor(Box::new(a), Box::new(b))
    }

    pub fn diff(a: Formula, b: Formula) -> Self {
        Diff(Box::new(a), Box::new(b))
    }

    /// `a ⇒ 0`, the primitive form of negation.
    pub fn neg(a: Formula) -> Self {
        Self::implies(a, Zero)
    }

    /// `a ⇒ p`.
    pub fn pi_neg(a: Formula, p: Formula) -> Self {
        Self::implies(a, p)
    }

    /// Direct children, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Atom(_) | Zero | One => vec![],
            Not(a) => vec![a],
            Join(a, b)
            | Meet(a, b)
            | Impl(a, b)
            | Nand(a, b)
            | Equiv(a, b)
            | Inequiv(a, b)
            | Nor(a, b)
            | Diff(a, b) => vec![a, b],
        }
    }

    /// Name of the node's connective, as used in the JSON form.
    pub fn op_name(&self) -> &'static str {
        match self {
            Atom(_) => "atom",
            Zero => "zero",
            One => "one",
            Join(..) => "join",
            Meet(..) => "meet",
            Impl(..) => "impl",
            Nand(..) => "nand",
            Not(..) => "not",
            Equiv(..) => "equiv",
            Inequiv(..) => "inequiv",
            Nor(..) => "nor",
            Diff(..) => "diff",
        }
    }

    pub fn is_derived(&self) -> bool {
        matches!(self, Not(_) | Equiv(..) | Inequiv(..) | Nor(..) | Diff(..))
    }

    /// Rewrites the derived connectives into the primitives.
    pub fn desugar(&self) -> Formula {
        let d = |f: &Formula| f.desugar();
        match self {
            Atom(_) | Zero | One => self.clone(),
            Join(a, b) => Self::join(d(a), d(b)),
            Meet(a, b) => Self::meet(d(a), d(b)),
            Impl(a, b) => Self::implies(d(a), d(b)),
            Nand(a, b) => Self::nand(d(a), d(b)),
            Not(a) => Self::neg(d(a)),
            Equiv(a, b) => Self::meet(Self::implies(d(a), d(b)), Self::implies(d(b), d(a))),
            Inequiv(a, b) => Self::meet(Self::join(d(a), d(b)), Self::nand(d(a), d(b))),
            Nor(a, b) => Self::meet(Self::neg(d(a)), Self::neg(d(b))),
            Diff(a, b) => Self::meet(d(b), Self::neg(d(a))),
        }
    }

    /// True when no derived connective occurs.
    pub fn is_desugared(&self) -> bool {
        self.first_derived().is_none()
    }

    pub(crate) fn first_derived(&self) -> Option<&'static str> {
        if self.is_derived() {
            return Some(self.op_name());
        }
        self.children().into_iter().find_map(Formula::first_derived)
    }

    pub fn contains_nand(&self) -> bool {
        matches!(self, Nand(..)) || self.children().into_iter().any(Formula::contains_nand)
    }

    /// Atom names in sorted order.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        if let Atom(n) = self {
            out.insert(n.clone());
        }
        for c in self.children() {
            c.collect_atoms(out);
        }
    }

    /// Node count.
    pub fn complexity(&self) -> usize {
        1 + self.children().into_iter().map(Formula::complexity).sum::<usize>()
    }

    /// Distinct subformulas in post-order (children before parents, left first).
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.collect_subformulas(&mut seen, &mut out);
        out
    }

    fn collect_subformulas<'a>(&'a self, seen: &mut HashSet<&'a Formula>, out: &mut Vec<Formula>) {
        for c in self.children() {
            c.collect_subformulas(seen, out);
        }
        if seen.insert(self) {
            out.push(self.clone());
        }
    }

    /// Nested `{"op": ..., "args": [...]}` form; atoms carry their name as the single argument.
    pub fn to_json(&self) -> Value {
        match self {
            Atom(n) => json!({"op": "atom", "args": [n]}),
            _ => json!({
                "op": self.op_name(),
                "args": self.children().into_iter().map(Formula::to_json).collect::<Vec<_>>(),
            }),
        }
    }

    /// Substitutes formulas for atoms.
    pub fn substitute(&self, f: &impl Fn(&str) -> Option<Formula>) -> Formula {
        let s = |x: &Formula| Box::new(x.substitute(f));
        match self {
            Atom(n) => f(n).unwrap_or_else(|| self.clone()),
            Zero | One => self.clone(),
            Join(a, b) => Join(s(a), s(b)),
            Meet(a, b) => Meet(s(a), s(b)),
            Impl(a, b) => Impl(s(a), s(b)),
            Nand(a, b) => Nand(s(a), s(b)),
            Not(a) => Not(s(a)),
            Equiv(a, b) => Equiv(s(a), s(b)),
            Inequiv(a, b) => Inequiv(s(a), s(b)),
            Nor(a, b) => Nor(s(a), s(b)),
            Diff(a, b) => Diff(s(a), s(b)),
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// True for names matching `[a-z][a-zA-Z0-9_]*`.
pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> Formula {
        parse(text).unwrap()
    }

    #[test]
    fn desugar_rules() {
        let (a, b) = (Formula::atom("a"), Formula::atom("b"));
        assert_eq!(
            Formula::equiv(a.clone(), b.clone()).desugar(),
            Formula::meet(
                Formula::implies(a.clone(), b.clone()),
                Formula::implies(b.clone(), a.clone())
            )
        );
        assert_eq!(
            Formula::nor(a.clone(), b.clone()).desugar(),
            Formula::meet(Formula::neg(a.clone()), Formula::neg(b.clone()))
        );
        assert_eq!(
            Formula::inequiv(a.clone(), b.clone()).desugar(),
            Formula::meet(Formula::join(a.clone(), b.clone()), Formula::nand(a.clone(), b.clone()))
        );
        assert_eq!(
            Formula::diff(a.clone(), b.clone()).desugar(),
            Formula::meet(b.clone(), Formula::neg(a.clone()))
        );
        assert_eq!(Formula::not(Zero).desugar(), Formula::implies(Zero, Zero));
    }

    #[test]
    fn desugar_is_idempotent_and_complete() {
        let g = f("~(a <=> b) <~> nor(a, diff(b, ~c))");
        let once = g.desugar();
        assert!(once.is_desugared());
        assert_eq!(once.desugar(), once);
        assert!(!g.is_desugared());
    }

    #[test]
    fn subformulas_and_complexity() {
        assert_eq!(f("s").subformulas(), vec![Formula::atom("s")]);
        assert_eq!(f("s").complexity(), 1);
        let imp = f("s => p");
        assert_eq!(imp.subformulas(), vec![f("s"), f("p"), imp.clone()]);
        assert_eq!(imp.complexity(), 3);
        let mp = f("(s /\\ (s => p)) => p");
        assert_eq!(mp.complexity(), 7);
        assert_eq!(
            mp.subformulas(),
            vec![f("s"), f("p"), f("s => p"), f("s /\\ (s => p)"), mp.clone()]
        );
    }

    #[test]
    fn json_shape() {
        assert_eq!(
            f("s => 0").to_json(),
            json!({"op": "impl", "args": [{"op": "atom", "args": ["s"]}, {"op": "zero", "args": []}]})
        );
    }

    #[test]
    fn atom_names() {
        assert!(is_atom_name("s"));
        assert!(is_atom_name("pi_2X"));
        assert!(!is_atom_name("Pi"));
        assert!(!is_atom_name("1s"));
        assert!(!is_atom_name(""));
    }
}
