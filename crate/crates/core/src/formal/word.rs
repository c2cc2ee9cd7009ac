use std::fmt;
use std::str::FromStr;

use crate::algebra::{Basis, Param};

use super::scalar::{Indeterminate, ScalarPoly};
use super::FormalError;

/// A first-level formal symbol: a basis vector or a table parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Basis(Basis),
    Param(Param),
}

impl Symbol {
    pub const ALL: [Symbol; 9] = [
        Symbol::Basis(Basis::E),
        Symbol::Basis(Basis::F),
        Symbol::Basis(Basis::G),
        Symbol::Param(Param::A),
        Symbol::Param(Param::B),
        Symbol::Param(Param::C),
        Symbol::Param(Param::D),
        Symbol::Param(Param::E),
        Symbol::Param(Param::F),
    ];

    pub fn name(self) -> char {
        match self {
            Symbol::Basis(b) => b.name(),
            Symbol::Param(p) => p.name(),
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.name() == c)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A formal symbol or the ordered formal product of two symbols. Products of
/// two basis vectors never appear: they reduce through the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormalWord {
    Single(Symbol),
    Pair(Symbol, Symbol),
}

impl FormalWord {
    /// `Pair(s, t)` unless both are basis vectors.
    pub fn pair(s: Symbol, t: Symbol) -> Option<FormalWord> {
        match (s, t) {
            (Symbol::Basis(_), Symbol::Basis(_)) => None,
            _ => Some(FormalWord::Pair(s, t)),
        }
    }

    pub fn is_single(&self) -> bool {
        matches!(self, FormalWord::Single(_))
    }

    /// Every word that can occur in the expansions of `(xy)^2` and `x^2 y^2`:
    /// nine singles and 72 pairs.
    pub fn all() -> Vec<FormalWord> {
        let mut out: Vec<_> = Symbol::ALL.into_iter().map(FormalWord::Single).collect();
        for s in Symbol::ALL {
            for t in Symbol::ALL {
                out.extend(FormalWord::pair(s, t));
            }
        }
        out
    }
}

/// Formal product of two symbols, reducing basis-basis products through the
/// multiplication table: `ee = ie`, `ef = A`, ..., `gg = kg`.
pub fn symbol_product(s: Symbol, t: Symbol) -> (ScalarPoly, FormalWord) {
    match (s, t) {
        (Symbol::Basis(x), Symbol::Basis(y)) if x == y => {
            let bit = [Indeterminate::I, Indeterminate::J, Indeterminate::K][x.index()];
            (ScalarPoly::var(bit), FormalWord::Single(s))
        }
        (Symbol::Basis(x), Symbol::Basis(y)) => {
            let p = Param::of_pair(x, y).expect("distinct basis vectors");
            (ScalarPoly::one(), FormalWord::Single(Symbol::Param(p)))
        }
        _ => (ScalarPoly::one(), FormalWord::Pair(s, t)),
    }
}

impl fmt::Display for FormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormalWord::Single(s) => write!(f, "{s}"),
            FormalWord::Pair(s, t) if s == t => write!(f, "{s}^2"),
            FormalWord::Pair(s, t) => write!(f, "{s}{t}"),
        }
    }
}

impl FromStr for FormalWord {
    type Err = FormalError;

    /// Accepts `e`, `A`, `eA`, `AB`, `AA` and `A^2`.
    fn from_str(s: &str) -> Result<Self, FormalError> {
        let unknown = || FormalError::UnknownWord(s.to_string());
        let chars: Vec<char> = s.trim().chars().collect();
        let sym = |c: char| Symbol::from_char(c).ok_or_else(unknown);
        match chars.as_slice() {
            [x] => Ok(FormalWord::Single(sym(*x)?)),
            [x, y] => FormalWord::pair(sym(*x)?, sym(*y)?).ok_or_else(unknown),
            [x, '^', '2'] => {
                let x = sym(*x)?;
                FormalWord::pair(x, x).ok_or_else(unknown)
            }
            _ => Err(unknown()),
        }
    }
}
