//! Text form with the fewest parentheses the parser needs.

use std::fmt;

use super::Formula;
use Formula::*;

fn prec(f: &Formula) -> u8 {
    match f {
        Equiv(..) | Inequiv(..) => 1,
        Impl(..) => 2,
        Nand(..) => 3,
        Join(..) => 4,
        Meet(..) => 5,
        Not(..) => 6,
        Atom(_) | Zero | One | Nor(..) | Diff(..) => 7,
    }
}

fn child(out: &mut fmt::Formatter<'_>, f: &Formula, paren: bool) -> fmt::Result {
    if paren {
        write!(out, "({f})")
    } else {
        write!(out, "{f}")
    }
}

fn infix(
    out: &mut fmt::Formatter<'_>,
    a: &Formula,
    sym: &str,
    b: &Formula,
    level: u8,
    right_assoc: bool,
) -> fmt::Result {
    let (pa, pb) = (prec(a), prec(b));
    let (left_paren, right_paren) = if right_assoc {
        (pa <= level, pb < level)
    } else {
        (pa < level, pb <= level)
    };
    child(out, a, left_paren)?;
    write!(out, " {sym} ")?;
    child(out, b, right_paren)
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = prec(self);
        match self {
            Atom(n) => out.write_str(n),
            Zero => out.write_str("0"),
            One => out.write_str("1"),
            Not(a) => {
                out.write_str("~")?;
                child(out, a, prec(a) < level)
            }
            Nor(a, b) => write!(out, "nor({a}, {b})"),
            Diff(a, b) => write!(out, "diff({a}, {b})"),
            Equiv(a, b) => infix(out, a, "<=>", b, level, false),
            Inequiv(a, b) => infix(out, a, "<~>", b, level, false),
            Impl(a, b) => infix(out, a, "=>", b, level, true),
            Nand(a, b) => infix(out, a, "|", b, level, false),
            Join(a, b) => infix(out, a, "\\/", b, level, false),
            Meet(a, b) => infix(out, a, "/\\", b, level, false),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

impl Formula {
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}
