use super::Assignment;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::partition::{bell, Partition, Universe};

/// Largest `n` for which `ω_n` is built (`B_5 = 52`, giving 1378 disjuncts).
const MAX_OMEGA_N: usize = 5;

fn omega_atoms(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::UniverseTooSmall(n));
    }
    if n > MAX_OMEGA_N {
        return Err(Error::TooLarge(format!("omega({n}) needs {} atoms", bell(n) + 1)));
    }
    Ok(bell(n) as usize + 1)
}

/// `ω_n`: the join of `p_i ≡ p_j` over `0 ≤ i < j ≤ B_n`. By pigeonhole two of
/// the `B_n + 1` atoms coincide on any universe of size at most `n`.
pub fn omega(n: usize) -> Result<Formula> {
    let k = omega_atoms(n)?;
    let p = |i: usize| Formula::atom(format!("p{i}"));
    let terms = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    Ok(terms
        .map(|(i, j)| Formula::equiv(p(i), p(j)))
        .reduce(Formula::join)
        .expect("at least three atoms"))
}

/// The assignment on `U = {0, ..., B_n}` with `p_i = {{i}, U∖{i}}`, where
/// `ω_n` evaluates to 0.
pub fn omega_countermodel(n: usize) -> Result<Assignment> {
    let k = omega_atoms(n)?;
    let u = Universe::range(k)?;
    let mut a = Assignment::new(&u);
    for i in 0..k {
        let p = Partition::from_keys(&u, (0..k).map(|e| e == i));
        a.bind(format!("p{i}"), p)?;
    }
    Ok(a)
}
