//! Bit-packed n-qubit Pauli operators with exact phase tracking.
//!
//! An operator is stored as `i^phase · ∏_j X_j^{x_j} Z_j^{z_j}`, with the X
//! factor written before the Z factor on every qubit. Under this convention
//! `Y = i·XZ`, so a Hermitian operator has `phase ≡ |x ∧ z| (mod 2)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gate::Gate;

const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase: u8,
}

/// Single-qubit factor, ignoring phase.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli1 {
    I,
    X,
    Y,
    Z,
}

impl Pauli1 {
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli1::I => (false, false),
            Pauli1::X => (true, false),
            Pauli1::Y => (true, true),
            Pauli1::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli1::I,
            (true, false) => Pauli1::X,
            (true, true) => Pauli1::Y,
            (false, true) => Pauli1::Z,
        }
    }
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        let w = words_for(n);
        PauliOperator { n, x: vec![0; w], z: vec![0; w], phase: 0 }
    }

    /// Hermitian single-qubit Pauli with a `+` sign.
    pub fn single(n: usize, q: usize, p: Pauli1) -> Self {
        let mut op = Self::identity(n);
        op.set(q, p);
        op
    }

    pub fn x_on(n: usize, q: usize) -> Self {
        Self::single(n, q, Pauli1::X)
    }

    pub fn z_on(n: usize, q: usize) -> Self {
        Self::single(n, q, Pauli1::Z)
    }

    pub fn y_on(n: usize, q: usize) -> Self {
        Self::single(n, q, Pauli1::Y)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn set_phase_exp(&mut self, phase: u8) {
        self.phase = phase & 3;
    }

    pub(crate) fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub(crate) fn z_words(&self) -> &[u64] {
        &self.z
    }

    #[inline]
    pub fn x_bit(&self, q: usize) -> bool {
        (self.x[q / WORD] >> (q % WORD)) & 1 == 1
    }

    #[inline]
    pub fn z_bit(&self, q: usize) -> bool {
        (self.z[q / WORD] >> (q % WORD)) & 1 == 1
    }

    #[inline]
    fn put(v: &mut [u64], q: usize, b: bool) {
        let m = 1u64 << (q % WORD);
        if b {
            v[q / WORD] |= m;
        } else {
            v[q / WORD] &= !m;
        }
    }

    pub fn get(&self, q: usize) -> Pauli1 {
        Pauli1::from_bits(self.x_bit(q), self.z_bit(q))
    }

    /// Overwrites the factor on `q` with the Hermitian single-qubit Pauli `p`,
    /// keeping the overall sign.
    pub fn set(&mut self, q: usize, p: Pauli1) {
        let had_y = self.x_bit(q) && self.z_bit(q);
        let (x, z) = p.bits();
        Self::put(&mut self.x, q, x);
        Self::put(&mut self.z, q, z);
        let has_y = x && z;
        self.phase = (self.phase + has_y as u8 + 3 * had_y as u8) & 3;
    }

    fn y_count(&self) -> u32 {
        self.x.iter().zip(&self.z).map(|(a, b)| (a & b).count_ones()).sum()
    }

    pub fn is_hermitian(&self) -> bool {
        (self.phase as u32 + self.y_count()).is_multiple_of(2)
    }

    /// Sign of a Hermitian operator written with Y factors: `false` for `+`.
    pub fn is_negative(&self) -> bool {
        debug_assert!(self.is_hermitian());
        (self.phase as u32 + 4 - self.y_count() % 4) % 4 == 2
    }

    pub fn negate(&mut self) {
        self.phase = (self.phase + 2) & 3;
    }

    /// Number of qubits with non-identity action.
    pub fn weight(&self) -> usize {
        self.x.iter().zip(&self.z).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.iter().chain(&self.z).all(|w| *w == 0)
    }

    /// Equality of the X/Z bit patterns, ignoring phase.
    pub fn same_support_bits(&self, other: &Self) -> bool {
        self.x == other.x && self.z == other.z
    }

    /// Symplectic inner product is one.
    pub fn anticommutes(&self, other: &Self) -> bool {
        let mut acc = 0u32;
        for i in 0..self.x.len() {
            acc ^= ((self.x[i] & other.z[i]) ^ (self.z[i] & other.x[i])).count_ones();
        }
        acc & 1 == 1
    }

    /// Operator product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.mul_assign_right(other);
        out
    }

    /// `self ← self · other`.
    pub fn mul_assign_right(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        // Moving Z^{z1} past X^{x2} costs (-1)^{z1·x2}.
        let mut swaps = 0u32;
        for i in 0..self.x.len() {
            swaps += (self.z[i] & other.x[i]).count_ones();
            self.x[i] ^= other.x[i];
            self.z[i] ^= other.z[i];
        }
        self.phase = ((self.phase as u32 + other.phase as u32 + 2 * swaps) & 3) as u8;
    }

    /// Conjugation by a single gate: `self ← G·self·G†`.
    pub fn apply_gate(&mut self, g: &Gate) {
        let bump = |p: &mut u8, k: bool, by: u8| {
            if k {
                *p = (*p + by) & 3;
            }
        };
        match *g {
            Gate::H(q) => {
                let (x, z) = (self.x_bit(q), self.z_bit(q));
                bump(&mut self.phase, x && z, 2);
                Self::put(&mut self.x, q, z);
                Self::put(&mut self.z, q, x);
            }
            Gate::S(q) => {
                let x = self.x_bit(q);
                bump(&mut self.phase, x, 1);
                let z = self.z_bit(q);
                Self::put(&mut self.z, q, z ^ x);
            }
            Gate::Sdg(q) => {
                let x = self.x_bit(q);
                bump(&mut self.phase, x, 3);
                let z = self.z_bit(q);
                Self::put(&mut self.z, q, z ^ x);
            }
            Gate::X(q) => {
                let z = self.z_bit(q);
                bump(&mut self.phase, z, 2);
            }
            Gate::Z(q) => {
                let x = self.x_bit(q);
                bump(&mut self.phase, x, 2);
            }
            Gate::Y(q) => {
                let k = self.x_bit(q) ^ self.z_bit(q);
                bump(&mut self.phase, k, 2);
            }
            Gate::CX(c, t) => {
                let xt = self.x_bit(t) ^ self.x_bit(c);
                let zc = self.z_bit(c) ^ self.z_bit(t);
                Self::put(&mut self.x, t, xt);
                Self::put(&mut self.z, c, zc);
            }
            Gate::CZ(a, b) => {
                let (xa, xb) = (self.x_bit(a), self.x_bit(b));
                bump(&mut self.phase, xa && xb, 2);
                let za = self.z_bit(a) ^ xb;
                let zb = self.z_bit(b) ^ xa;
                Self::put(&mut self.z, a, za);
                Self::put(&mut self.z, b, zb);
            }
            Gate::Swap(a, b) => {
                let (xa, za) = (self.x_bit(a), self.z_bit(a));
                let (xb, zb) = (self.x_bit(b), self.z_bit(b));
                Self::put(&mut self.x, a, xb);
                Self::put(&mut self.z, a, zb);
                Self::put(&mut self.x, b, xa);
                Self::put(&mut self.z, b, za);
            }
        }
    }

    /// Restriction to `qubits` (in the given order) as a smaller operator.
    /// The phase is carried over unchanged.
    pub fn restrict(&self, qubits: &[usize]) -> PauliOperator {
        let mut out = PauliOperator::identity(qubits.len());
        for (i, &q) in qubits.iter().enumerate() {
            Self::put(&mut out.x, i, self.x_bit(q));
            Self::put(&mut out.z, i, self.z_bit(q));
        }
        out.phase = self.phase;
        out
    }

    /// Embeds a `k`-qubit operator into `n` qubits, local qubit `i` landing on `qubits[i]`.
    pub fn embed(&self, n: usize, qubits: &[usize]) -> PauliOperator {
        let mut out = PauliOperator::identity(n);
        for (i, &q) in qubits.iter().enumerate() {
            Self::put(&mut out.x, q, self.x_bit(i));
            Self::put(&mut out.z, q, self.z_bit(i));
        }
        out.phase = self.phase;
        out
    }

    /// Gates realizing this operator up to global phase.
    pub fn to_gates(&self) -> Vec<Gate> {
        (0..self.n)
            .filter_map(|q| match self.get(q) {
                Pauli1::I => None,
                Pauli1::X => Some(Gate::X(q)),
                Pauli1::Y => Some(Gate::Y(q)),
                Pauli1::Z => Some(Gate::Z(q)),
            })
            .collect()
    }

    /// Coefficient in front of the Y-form letter string, as a power of `i`.
    fn letter_phase(&self) -> u8 {
        ((self.phase as u32 + 4 - self.y_count() % 4) % 4) as u8
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = ["+", "+i", "-", "-i"][self.letter_phase() as usize];
        write!(f, "{sign}")?;
        for q in 0..self.n {
            let c = match self.get(q) {
                Pauli1::I => 'I',
                Pauli1::X => 'X',
                Pauli1::Y => 'Y',
                Pauli1::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Parses strings such as `XIZ`, `-YY` or `+iXZ`; qubit 0 is leftmost.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse { line: 1, msg: msg.to_string() };
        let (coef, letters) = if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else {
            (0, s)
        };
        if letters.is_empty() {
            return Err(bad("empty pauli string"));
        }
        let mut op = PauliOperator::identity(letters.len());
        for (q, c) in letters.chars().enumerate() {
            let p = match c {
                'I' | '_' => Pauli1::I,
                'X' => Pauli1::X,
                'Y' => Pauli1::Y,
                'Z' => Pauli1::Z,
                _ => return Err(bad("unknown pauli letter")),
            };
            op.set(q, p);
        }
        op.phase = (op.phase + coef) & 3;
        Ok(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn y_convention() {
        let y = PauliOperator::y_on(1, 0);
        assert_eq!(y.phase_exp(), 1);
        assert!(y.is_hermitian());
        assert!(!y.is_negative());
        let xz = p("X").mul(&p("Z"));
        assert_eq!(xz.to_string(), "-iY");
        assert!(!xz.is_hermitian());
    }

    #[test]
    fn anticommutation_and_weight() {
        assert!(p("X").anticommutes(&p("Z")));
        assert!(!p("XX").anticommutes(&p("ZZ")));
        assert_eq!(p("XIY").weight(), 2);
    }

    #[test]
    fn display_round_trip() {
        for s in ["+XYZ", "-YIY", "+iZZ", "-iXY"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn push_rules() {
        let mut x = p("X");
        x.apply_gate(&Gate::H(0));
        assert_eq!(x, p("Z"));
        let mut y = p("Y");
        y.apply_gate(&Gate::H(0));
        assert_eq!(y, p("-Y"));
        let mut y = p("Y");
        y.apply_gate(&Gate::S(0));
        assert_eq!(y, p("-X"));
        let mut x = p("X");
        x.apply_gate(&Gate::S(0));
        assert_eq!(x, p("Y"));
        let mut xi = p("XI");
        xi.apply_gate(&Gate::CX(0, 1));
        assert_eq!(xi, p("XX"));
        let mut iz = p("IZ");
        iz.apply_gate(&Gate::CX(0, 1));
        assert_eq!(iz, p("ZZ"));
        let mut xx = p("XX");
        xx.apply_gate(&Gate::cz(0, 1));
        assert_eq!(xx, p("YY"));
    }

    #[test]
    fn wide_operators_cross_word_boundaries() {
        let n = 130;
        let mut a = PauliOperator::x_on(n, 127);
        a.apply_gate(&Gate::CX(127, 64));
        assert!(a.x_bit(64) && a.x_bit(127));
        assert_eq!(a.weight(), 2);
        assert!(a.anticommutes(&PauliOperator::z_on(n, 64)));
    }
}
