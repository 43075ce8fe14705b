use std::collections::HashMap;

use super::Assignment;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::ops;
use crate::partition::{enumerate_partitions, Partition, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Instr {
    Atom(usize),
    Zero,
    One,
    Join,
    Meet,
    Impl,
    Nand,
}

/// A desugared formula compiled to postfix code over numbered atoms.
#[derive(Clone, Debug)]
pub struct Program {
    code: Vec<Instr>,
    atoms: usize,
}

impl Program {
    /// Atom `atoms[i]` becomes slot `i`.
    pub fn compile(f: &Formula, atoms: &[String]) -> Result<Program> {
        let mut code = Vec::new();
        emit(f, atoms, &mut code)?;
        Ok(Program {
            code,
            atoms: atoms.len(),
        })
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    /// Evaluates with the partition operations directly.
    pub fn eval(&self, universe: &Universe, env: &[&Partition]) -> Partition {
        let mut stack: Vec<Partition> = Vec::with_capacity(8);
        for ins in &self.code {
            let v = match ins {
                Instr::Atom(i) => env[*i].clone(),
                Instr::Zero => Partition::bottom(universe),
                Instr::One => Partition::top(universe),
                bin => {
                    let b = stack.pop().expect("well-formed program");
                    let a = stack.pop().expect("well-formed program");
                    match bin {
                        Instr::Join => ops::join_unchecked(&a, &b),
                        Instr::Meet => ops::meet_unchecked(&a, &b),
                        Instr::Impl => ops::implies_unchecked(&a, &b),
                        _ => ops::nand_unchecked(&a, &b),
                    }
                }
            };
            stack.push(v);
        }
        stack.pop().expect("well-formed program")
    }
}

fn emit(f: &Formula, atoms: &[String], out: &mut Vec<Instr>) -> Result<()> {
    let bin = |a: &Formula, b: &Formula, ins: Instr, out: &mut Vec<Instr>| -> Result<()> {
        emit(a, atoms, out)?;
        emit(b, atoms, out)?;
        out.push(ins);
        Ok(())
    };
    match f {
        Formula::Atom(n) => {
            let i = atoms
                .iter()
                .position(|a| a == n)
                .ok_or_else(|| Error::UnboundAtom(n.clone()))?;
            out.push(Instr::Atom(i));
        }
        Formula::Zero => out.push(Instr::Zero),
        Formula::One => out.push(Instr::One),
        Formula::Join(a, b) => bin(a, b, Instr::Join, out)?,
        Formula::Meet(a, b) => bin(a, b, Instr::Meet, out)?,
        Formula::Impl(a, b) => bin(a, b, Instr::Impl, out)?,
        Formula::Nand(a, b) => bin(a, b, Instr::Nand, out)?,
        other => return Err(Error::NotDesugared(other.op_name())),
    }
    Ok(())
}

/// Universes with at most this many partitions get precomputed operation tables.
const TABLE_LIMIT: usize = 203;

struct Tables {
    join: Vec<u32>,
    meet: Vec<u32>,
    implies: Vec<u32>,
    nand: Vec<u32>,
}

/// All partitions of one universe, indexed in restricted-growth order, with
/// operation tables on small universes for fast exhaustive evaluation.
pub struct PartitionSpace {
    universe: Universe,
    parts: Vec<Partition>,
    index: HashMap<Vec<u32>, u32>,
    tables: Option<Tables>,
}

impl PartitionSpace {
    pub fn new(universe: &Universe) -> Self {
        let parts: Vec<Partition> = enumerate_partitions(universe).collect();
        let index = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.rgs().to_vec(), i as u32))
            .collect();
        let mut space = PartitionSpace {
            universe: universe.clone(),
            parts,
            index,
            tables: None,
        };
        if space.parts.len() <= TABLE_LIMIT {
            let table = |op: fn(&Partition, &Partition) -> Partition| -> Vec<u32> {
                let ps = &space.parts;
                ps.iter()
                    .flat_map(|a| ps.iter().map(move |b| (a, b)))
                    .map(|(a, b)| space.index[op(a, b).rgs()])
                    .collect()
            };
            let tables = Tables {
                join: table(ops::join_unchecked),
                meet: table(ops::meet_unchecked),
                implies: table(ops::implies_unchecked),
                nand: table(ops::nand_unchecked),
            };
            space.tables = Some(tables);
        }
        space
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.parts[i]
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p.rgs()).map(|&i| i as usize)
    }

    /// Evaluates a program on partition indices.
    pub fn eval_index(&self, prog: &Program, env: &[usize]) -> usize {
        let Some(t) = &self.tables else {
            let parts: Vec<&Partition> = env.iter().map(|&i| &self.parts[i]).collect();
            let v = prog.eval(&self.universe, &parts);
            return self.index[v.rgs()] as usize;
        };
        let n = self.parts.len();
        let mut stack: Vec<u32> = Vec::with_capacity(8);
        for ins in &prog.code {
            let v = match ins {
                Instr::Atom(i) => env[*i] as u32,
                Instr::Zero => 0,
                Instr::One => (n - 1) as u32,
                bin => {
                    let b = stack.pop().expect("well-formed program") as usize;
                    let a = stack.pop().expect("well-formed program") as usize;
                    let table = match bin {
                        Instr::Join => &t.join,
                        Instr::Meet => &t.meet,
                        Instr::Impl => &t.implies,
                        _ => &t.nand,
                    };
                    table[a * n + b]
                }
            };
            stack.push(v);
        }
        stack.pop().expect("well-formed program") as usize
    }

    /// Visits every tuple of `k` partition indices, last position fastest,
    /// until `visit` returns false. Returns whether the walk completed.
    pub fn for_each_tuple(&self, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
        let n = self.parts.len();
        let mut choice = vec![0usize; k];
        loop {
            if !visit(&choice) {
                return false;
            }
            let Some(pos) = (0..k).rev().find(|&i| choice[i] + 1 < n) else {
                return true;
            };
            choice[pos] += 1;
            choice[pos + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }

    /// The first assignment (in tuple order) whose value satisfies `bad`.
    pub fn find(&self, prog: &Program, bad: impl Fn(&Partition) -> bool) -> Option<(Vec<usize>, Partition)> {
        let is_bad: Vec<bool> = self.parts.iter().map(bad).collect();
        let mut found = None;
        self.for_each_tuple(prog.atoms, |choice| {
            let v = self.eval_index(prog, choice);
            if is_bad[v] {
                found = Some((choice.to_vec(), self.parts[v].clone()));
                false
            } else {
                true
            }
        });
        found
    }

    pub fn assignment(&self, atoms: &[String], choice: &[usize]) -> Assignment {
        let mut a = Assignment::new(&self.universe);
        for (name, &i) in atoms.iter().zip(choice) {
            a.bind(name.clone(), self.parts[i].clone()).expect("same universe");
        }
        a
    }
}
