//! Exact minimal CX counts for Cliffords on at most three qubits.

use crate::error::{Error, Result};
use crate::peephole::{shared_table, symplectic as sp};
use crate::tableau::CliffordTableau;

/// Minimal number of CX gates over circuits of H, S and CX (Paulis free)
/// implementing `t`.
pub fn optimal_oracle(t: &CliffordTableau) -> Result<usize> {
    match t.num_qubits() {
        0 | 1 => Ok(0),
        k @ (2 | 3) => Ok(shared_table(k)?.cost(sp::from_tableau(t)) as usize),
        k => Err(Error::OracleTooLarge(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> CliffordTableau {
        CliffordTableau::from_circuit(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn known_costs() {
        assert_eq!(optimal_oracle(&CliffordTableau::identity(3)).unwrap(), 0);
        assert_eq!(optimal_oracle(&tab("qubits 2\ncx 0 1")).unwrap(), 1);
        assert_eq!(optimal_oracle(&tab("qubits 2\nswap 0 1")).unwrap(), 3);
        assert_eq!(optimal_oracle(&tab("qubits 1\nh 0")).unwrap(), 0);
        assert_eq!(optimal_oracle(&CliffordTableau::identity(4)), Err(Error::OracleTooLarge(4)));
    }
}
