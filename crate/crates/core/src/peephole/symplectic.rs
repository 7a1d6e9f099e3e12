//! Elements of the binary symplectic group on up to three qubits, packed into
//! a `u64`.
//!
//! An element on `k` qubits is stored as `2k` rows of `2k` bits: row `j < k`
//! is the image of `X_j`, row `k + j` the image of `Z_j`. Within a row the low
//! `k` bits are the x part and the next `k` bits the z part. Signs are not
//! represented.

use crate::gate::Gate;
use crate::pauli::{Pauli1, PauliOperator};
use crate::tableau::CliffordTableau;

pub type Symp = u64;

/// Generators of the group: H and S on each qubit, CX on each ordered pair.
/// All are involutions at the symplectic level.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SympGen {
    H(u8),
    S(u8),
    CX(u8, u8),
}

impl SympGen {
    pub fn to_gate(self) -> Gate {
        match self {
            SympGen::H(q) => Gate::H(q as usize),
            SympGen::S(q) => Gate::S(q as usize),
            SympGen::CX(c, t) => Gate::CX(c as usize, t as usize),
        }
    }

    pub fn is_local(self) -> bool {
        !matches!(self, SympGen::CX(..))
    }
}

/// Generator list for `k` qubits, in a fixed order used for witness codes.
pub fn generators(k: usize) -> Vec<SympGen> {
    let mut g = Vec::new();
    for q in 0..k as u8 {
        g.push(SympGen::H(q));
        g.push(SympGen::S(q));
    }
    for c in 0..k as u8 {
        for t in 0..k as u8 {
            if c != t {
                g.push(SympGen::CX(c, t));
            }
        }
    }
    g
}

#[inline]
fn row_mask(k: usize) -> u64 {
    (1u64 << (2 * k)) - 1
}

#[inline]
pub fn row(v: Symp, k: usize, r: usize) -> u64 {
    (v >> (r * 2 * k)) & row_mask(k)
}

#[inline]
fn with_row(v: Symp, k: usize, r: usize, value: u64) -> Symp {
    let shift = r * 2 * k;
    (v & !(row_mask(k) << shift)) | (value << shift)
}

pub fn identity(k: usize) -> Symp {
    (0..2 * k).fold(0, |v, r| with_row(v, k, r, 1 << r))
}

/// Conjugates one Pauli (as a `2k`-bit vector) by a gate.
#[inline]
pub fn gate_on_bits(p: u64, k: usize, g: SympGen) -> u64 {
    let bit = |p: u64, i: usize| (p >> i) & 1;
    match g {
        SympGen::H(q) => {
            let (q, zq) = (q as usize, q as usize + k);
            let (x, z) = (bit(p, q), bit(p, zq));
            let cleared = p & !(1 << q) & !(1 << zq);
            cleared | (z << q) | (x << zq)
        }
        SympGen::S(q) => {
            let q = q as usize;
            p ^ (bit(p, q) << (q + k))
        }
        SympGen::CX(c, t) => {
            let (c, t) = (c as usize, t as usize);
            p ^ (bit(p, c) << t) ^ (bit(p, t + k) << (c + k))
        }
    }
}

/// `g ∘ v`: apply `v`, then the gate.
#[inline]
pub fn apply_gen(v: Symp, k: usize, g: SympGen) -> Symp {
    (0..2 * k).fold(0, |acc, r| acc | gate_on_bits(row(v, k, r), k, g) << (r * 2 * k))
}

/// Image of the Pauli bit vector `p` under `v`.
#[inline]
pub fn image(v: Symp, k: usize, p: u64) -> u64 {
    let mut out = 0;
    let mut bits = p;
    while bits != 0 {
        let r = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out ^= row(v, k, r);
    }
    out
}

/// "Apply `a`, then `b`", i.e. `b ∘ a`.
pub fn then(a: Symp, b: Symp, k: usize) -> Symp {
    (0..2 * k).fold(0, |acc, r| acc | image(b, k, row(a, k, r)) << (r * 2 * k))
}

/// Symplectic form of two Pauli bit vectors: 1 iff they anticommute.
#[inline]
pub fn omega(p: u64, q: u64, k: usize) -> u32 {
    let lo = (1u64 << k) - 1;
    let x = |v: u64| v & lo;
    let z = |v: u64| (v >> k) & lo;
    ((x(p) & z(q)).count_ones() + (z(p) & x(q)).count_ones()) & 1
}

pub fn inverse(v: Symp, k: usize) -> Symp {
    let mut out = 0;
    for r in 0..2 * k {
        let e = 1u64 << r;
        let mut pre = 0;
        for j in 0..k {
            pre |= (omega(e, row(v, k, k + j), k) as u64) << j;
            pre |= (omega(e, row(v, k, j), k) as u64) << (k + j);
        }
        out |= pre << (r * 2 * k);
    }
    out
}

pub fn is_symplectic(v: Symp, k: usize) -> bool {
    (0..2 * k).all(|a| {
        (0..2 * k).all(|b| {
            let expect = (a + k == b || b + k == a) as u32;
            omega(row(v, k, a), row(v, k, b), k) == expect
        })
    })
}

/// Bit vector of a Pauli on `k` qubits (phase dropped).
pub fn pauli_bits(p: &PauliOperator) -> u64 {
    let k = p.num_qubits();
    (0..k).fold(0, |acc, j| acc | (p.x_bit(j) as u64) << j | (p.z_bit(j) as u64) << (k + j))
}

/// Number of qubits a Pauli bit vector acts on.
#[inline]
pub fn weight(p: u64, k: usize) -> u32 {
    let lo = (1u64 << k) - 1;
    ((p | (p >> k)) & lo).count_ones()
}

pub fn from_tableau(t: &CliffordTableau) -> Symp {
    let k = t.num_qubits();
    t.rows().iter().enumerate().fold(0, |acc, (r, p)| acc | pauli_bits(p) << (r * 2 * k))
}

/// Unsigned Pauli operator on `k` qubits from a bit vector.
pub fn bits_to_pauli(p: u64, k: usize) -> PauliOperator {
    let mut out = PauliOperator::identity(k);
    for j in 0..k {
        out.set(j, Pauli1::from_bits((p >> j) & 1 == 1, (p >> (k + j)) & 1 == 1));
    }
    out
}
