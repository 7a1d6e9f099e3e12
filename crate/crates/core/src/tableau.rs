//! Clifford unitaries as stabilizer tableaus: the images of `X_j` and `Z_j`
//! under conjugation, each a signed Hermitian Pauli operator. Global phase is
//! not represented.

use std::fmt;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::pauli::PauliOperator;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliffordTableau {
    n: usize,
    /// `rows[j]` is the image of `X_j`, `rows[n + j]` the image of `Z_j`.
    rows: Vec<PauliOperator>,
}

impl CliffordTableau {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|j| PauliOperator::x_on(n, j))
            .chain((0..n).map(|j| PauliOperator::z_on(n, j)))
            .collect();
        CliffordTableau { n, rows }
    }

    /// Builds a tableau from the images of `X_0..X_{n-1}` followed by those of
    /// `Z_0..Z_{n-1}`, rejecting anything that is not a valid Clifford.
    pub fn from_rows(rows: Vec<PauliOperator>) -> Result<Self> {
        if !rows.len().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(rows.len(), rows.len() + 1));
        }
        let n = rows.len() / 2;
        if let Some(bad) = rows.iter().find(|r| r.num_qubits() != n) {
            return Err(Error::DimensionMismatch(n, bad.num_qubits()));
        }
        let t = CliffordTableau { n, rows };
        if !t.is_symplectic() || !t.rows.iter().all(PauliOperator::is_hermitian) {
            return Err(Error::Config("rows do not form a Clifford tableau".into()));
        }
        Ok(t)
    }

    pub fn from_circuit(c: &Circuit) -> Result<Self> {
        let mut t = Self::identity(c.num_qubits());
        for g in c.gates() {
            g.validate(c.num_qubits())?;
            t.apply_gate(g);
        }
        Ok(t)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[PauliOperator] {
        &self.rows
    }

    pub fn x_image(&self, j: usize) -> &PauliOperator {
        &self.rows[j]
    }

    pub fn z_image(&self, j: usize) -> &PauliOperator {
        &self.rows[self.n + j]
    }

    /// Appends a gate: the tableau becomes that of `G·U`.
    pub fn apply_gate(&mut self, g: &Gate) {
        for r in &mut self.rows {
            r.apply_gate(g);
        }
    }

    pub fn apply_circuit(&mut self, c: &Circuit) {
        for g in c.gates() {
            self.apply_gate(g);
        }
    }

    /// Prepends a gate: the tableau becomes that of `U·G`.
    pub fn prepend_gate(&mut self, g: &Gate) {
        let (a, b) = g.qubits();
        let support: Vec<usize> = std::iter::once(a).chain(b).collect();
        let updates: Vec<(usize, PauliOperator)> = support
            .iter()
            .flat_map(|&q| [(q, PauliOperator::x_on(self.n, q)), (self.n + q, PauliOperator::z_on(self.n, q))])
            .map(|(slot, mut p)| {
                p.apply_gate(g);
                (slot, self.conjugate(&p))
            })
            .collect();
        for (slot, row) in updates {
            self.rows[slot] = row;
        }
    }

    /// `U·p·U†`.
    pub fn conjugate(&self, p: &PauliOperator) -> PauliOperator {
        debug_assert_eq!(p.num_qubits(), self.n);
        let mut out = PauliOperator::identity(self.n);
        out.set_phase_exp(p.phase_exp());
        for (w, (&xw, &zw)) in p.x_words().iter().zip(p.z_words()).enumerate() {
            let mut bits = xw | zw;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let j = w * 64 + b;
                if (xw >> b) & 1 == 1 {
                    out.mul_assign_right(&self.rows[j]);
                }
                if (zw >> b) & 1 == 1 {
                    out.mul_assign_right(&self.rows[self.n + j]);
                }
            }
        }
        out
    }

    /// Tableau of "apply `self`, then `then`".
    pub fn then(&self, then: &CliffordTableau) -> CliffordTableau {
        debug_assert_eq!(self.n, then.n);
        CliffordTableau { n: self.n, rows: self.rows.iter().map(|r| then.conjugate(r)).collect() }
    }

    pub fn inverse(&self) -> CliffordTableau {
        let n = self.n;
        let mut rows = Vec::with_capacity(2 * n);
        for z_half in [false, true] {
            for j in 0..n {
                // Coefficients follow from the symplectic form: the inverse image of
                // X_j has X_i iff row Z_i has z on j, and Z_i iff row X_i has z on j.
                let bit = |r: &PauliOperator| if z_half { r.x_bit(j) } else { r.z_bit(j) };
                let mut q = PauliOperator::identity(n);
                for i in 0..n {
                    let xi = bit(&self.rows[n + i]);
                    let zi = bit(&self.rows[i]);
                    q.set(i, crate::pauli::Pauli1::from_bits(xi, zi));
                }
                let target = if z_half { PauliOperator::z_on(n, j) } else { PauliOperator::x_on(n, j) };
                let img = self.conjugate(&q);
                debug_assert!(img.same_support_bits(&target));
                if img != target {
                    q.negate();
                }
                rows.push(q);
            }
        }
        CliffordTableau { n, rows }
    }

    pub fn is_symplectic(&self) -> bool {
        let n = self.n;
        (0..2 * n).all(|a| {
            (a + 1..2 * n).all(|b| {
                let expect = a + n == b;
                self.rows[a].anticommutes(&self.rows[b]) == expect
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Identity up to signs, i.e. a Pauli operator.
    pub fn is_pauli(&self) -> bool {
        self.rows.iter().zip(Self::identity(self.n).rows).all(|(r, e)| r.same_support_bits(&e))
    }

    /// Reorders qubits: local qubit `i` of the result is qubit `qubits[i]` here.
    /// Only meaningful when the tableau acts within `qubits`.
    pub fn restrict(&self, qubits: &[usize]) -> CliffordTableau {
        let k = qubits.len();
        let rows = qubits
            .iter()
            .map(|&q| self.rows[q].restrict(qubits))
            .chain(qubits.iter().map(|&q| self.rows[self.n + q].restrict(qubits)))
            .collect();
        CliffordTableau { n: k, rows }
    }
}

impl fmt::Display for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.n {
            writeln!(f, "X{j} -> {}", self.rows[j])?;
        }
        for j in 0..self.n {
            writeln!(f, "Z{j} -> {}", self.rows[self.n + j])?;
        }
        Ok(())
    }
}

/// Equality of unitaries up to global phase.
pub fn tableaus_equal(a: &CliffordTableau, b: &CliffordTableau) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(a.n, b.n));
    }
    Ok(a.rows == b.rows)
}

pub fn circuit_to_tableau(c: &Circuit) -> Result<CliffordTableau> {
    CliffordTableau::from_circuit(c)
}

/// Whether two circuits implement the same unitary up to global phase.
pub fn circuits_equivalent(a: &Circuit, b: &Circuit) -> Result<bool> {
    tableaus_equal(&CliffordTableau::from_circuit(a)?, &CliffordTableau::from_circuit(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circ(s: &str) -> Circuit {
        s.parse().unwrap()
    }

    #[test]
    fn empty_circuit_is_identity() {
        assert!(CliffordTableau::from_circuit(&Circuit::new(3)).unwrap().is_identity());
    }

    #[test]
    fn pauli_tableaus() {
        let t = CliffordTableau::from_circuit(&circ("qubits 2
x 0
z 1")).unwrap();
        assert!(t.is_pauli() && !t.is_identity());
        assert!(!CliffordTableau::from_circuit(&circ("qubits 2
h 0")).unwrap().is_pauli());
    }

    #[test]
    fn cz_from_cx_and_hadamards() {
        let cz = CliffordTableau::from_circuit(&circ("qubits 2\ncz 0 1")).unwrap();
        let a = CliffordTableau::from_circuit(&circ("qubits 2\nh 1\ncx 0 1\nh 1")).unwrap();
        let b = CliffordTableau::from_circuit(&circ("qubits 2\nh 0\ncx 1 0\nh 0")).unwrap();
        assert!(tableaus_equal(&cz, &a).unwrap());
        assert!(tableaus_equal(&cz, &b).unwrap());
    }

    #[test]
    fn shshsh_is_identity() {
        let t = CliffordTableau::from_circuit(&circ("qubits 1\ns 0\nh 0\ns 0\nh 0\ns 0\nh 0")).unwrap();
        assert!(t.is_identity());
    }

    #[test]
    fn equality_examples() {
        let id = CliffordTableau::identity(2);
        assert!(tableaus_equal(&id, &id).unwrap());
        let x = CliffordTableau::from_circuit(&circ("qubits 2\nx 0")).unwrap();
        assert!(!tableaus_equal(&x, &id).unwrap());
        let cxcx = CliffordTableau::from_circuit(&circ("qubits 2\ncx 0 1\ncx 0 1")).unwrap();
        assert!(tableaus_equal(&cxcx, &id).unwrap());
        assert!(tableaus_equal(&id, &CliffordTableau::identity(3)).is_err());
    }

    #[test]
    fn inverse_and_prepend() {
        let c = circ("qubits 3\nh 0\ncx 0 2\ns 1\ncz 1 2\ny 2\nsdg 0\nswap 0 1\nx 1");
        let t = CliffordTableau::from_circuit(&c).unwrap();
        let inv = CliffordTableau::from_circuit(&c.inverse()).unwrap();
        assert_eq!(t.inverse(), inv);
        assert!(t.then(&inv).is_identity());
        let mut p = CliffordTableau::identity(3);
        for g in c.gates().iter().rev() {
            p.prepend_gate(g);
        }
        assert_eq!(p, t);
    }

    #[test]
    fn restrict_reorders() {
        let t = CliffordTableau::from_circuit(&circ("qubits 4\ncx 3 1")).unwrap();
        let r = t.restrict(&[1, 3]);
        let expect = CliffordTableau::from_circuit(&circ("qubits 2\ncx 1 0")).unwrap();
        assert_eq!(r, expect);
    }
}
