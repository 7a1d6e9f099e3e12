use std::fmt;

use crate::error::{Error, Result};

/// A gate from the Clifford gate set. `CZ` and `Swap` are symmetric and are
/// kept with their qubits in ascending order; use [`Gate::cz`] and
/// [`Gate::swap`] to build them.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    H(usize),
    S(usize),
    Sdg(usize),
    X(usize),
    Y(usize),
    Z(usize),
    /// Control, target.
    CX(usize, usize),
    CZ(usize, usize),
    Swap(usize, usize),
}

impl Gate {
    pub fn cz(a: usize, b: usize) -> Self {
        Gate::CZ(a.min(b), a.max(b))
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate::Swap(a.min(b), a.max(b))
    }

    /// Qubits the gate acts on; the second slot is `None` for single-qubit gates.
    pub fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::H(q) | Gate::S(q) | Gate::Sdg(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => {
                (q, None)
            }
            Gate::CX(a, b) | Gate::CZ(a, b) | Gate::Swap(a, b) => (a, Some(b)),
        }
    }

    pub fn acts_on(&self, q: usize) -> bool {
        let (a, b) = self.qubits();
        a == q || b == Some(q)
    }

    pub fn shares_qubit(&self, other: &Gate) -> bool {
        let (a, b) = other.qubits();
        self.acts_on(a) || b.is_some_and(|b| self.acts_on(b))
    }

    pub fn is_two_qubit(&self) -> bool {
        self.qubits().1.is_some()
    }

    pub fn is_pauli(&self) -> bool {
        matches!(self, Gate::X(_) | Gate::Y(_) | Gate::Z(_))
    }

    /// Diagonal in the computational basis.
    pub fn is_diagonal(&self) -> bool {
        matches!(self, Gate::S(_) | Gate::Sdg(_) | Gate::Z(_) | Gate::CZ(..))
    }

    pub fn inverse(&self) -> Gate {
        match *self {
            Gate::S(q) => Gate::Sdg(q),
            Gate::Sdg(q) => Gate::S(q),
            g => g,
        }
    }

    /// Relabels qubits through `map`, renormalizing symmetric gates.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Gate {
        match *self {
            Gate::H(q) => Gate::H(map(q)),
            Gate::S(q) => Gate::S(map(q)),
            Gate::Sdg(q) => Gate::Sdg(map(q)),
            Gate::X(q) => Gate::X(map(q)),
            Gate::Y(q) => Gate::Y(map(q)),
            Gate::Z(q) => Gate::Z(map(q)),
            Gate::CX(c, t) => Gate::CX(map(c), map(t)),
            Gate::CZ(a, b) => Gate::cz(map(a), map(b)),
            Gate::Swap(a, b) => Gate::swap(map(a), map(b)),
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let (a, b) = self.qubits();
        for q in std::iter::once(a).chain(b) {
            if q >= n {
                return Err(Error::QubitOutOfRange { index: q, n });
            }
        }
        if b == Some(a) {
            return Err(Error::RepeatedQubit(a));
        }
        Ok(())
    }

    pub fn mnemonic(&self) -> &'static str {
        match self {
            Gate::H(_) => "h",
            Gate::S(_) => "s",
            Gate::Sdg(_) => "sdg",
            Gate::X(_) => "x",
            Gate::Y(_) => "y",
            Gate::Z(_) => "z",
            Gate::CX(..) => "cx",
            Gate::CZ(..) => "cz",
            Gate::Swap(..) => "swap",
        }
    }

    /// Commutation under the rewriting rules: disjoint supports, equal gates,
    /// mutually diagonal gates, and CX pairs sharing only controls or only targets.
    /// Also covers Z on a CX control and X on a CX target.
    pub fn commutes_with(&self, other: &Gate) -> bool {
        if !self.shares_qubit(other) || self == other {
            return true;
        }
        if self.is_diagonal() && other.is_diagonal() {
            return true;
        }
        match (*self, *other) {
            (Gate::CX(c1, t1), Gate::CX(c2, t2)) => c1 != t2 && t1 != c2,
            (Gate::CX(c, _), g) | (g, Gate::CX(c, _)) if g.is_diagonal() && !g.is_two_qubit() => {
                g.qubits().0 == c
            }
            (Gate::CX(_, t), Gate::X(q)) | (Gate::X(q), Gate::CX(_, t)) => q == t,
            _ => false,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qubits() {
            (a, None) => write!(f, "{} {}", self.mnemonic(), a),
            (a, Some(b)) => write!(f, "{} {} {}", self.mnemonic(), a, b),
        }
    }
}
