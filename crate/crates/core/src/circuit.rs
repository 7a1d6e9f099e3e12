//! Gate lists and the newline-delimited text format.
//!
//! ```text
//! # comment
//! qubits 3
//! h 0
//! cx 0 1
//! cz 2 1
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::pauli::PauliOperator;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Circuit { n, gates: Vec::new() }
    }

    pub fn from_gates(n: usize, gates: Vec<Gate>) -> Result<Self> {
        for g in &gates {
            g.validate(n)?;
        }
        Ok(Circuit { n, gates })
    }

    /// Skips validation; callers guarantee indices are in range.
    pub(crate) fn from_gates_unchecked(n: usize, gates: Vec<Gate>) -> Self {
        debug_assert!(gates.iter().all(|g| g.validate(n).is_ok()));
        Circuit { n, gates }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn into_gates(self) -> Vec<Gate> {
        self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: Gate) -> Result<()> {
        g.validate(self.n)?;
        self.gates.push(g);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, g: Gate) {
        debug_assert!(g.validate(self.n).is_ok());
        self.gates.push(g);
    }

    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    /// Two-qubit gate count with CX and CZ as one and any SWAP as three.
    pub fn two_qubit_count(&self) -> usize {
        self.gates
            .iter()
            .map(|g| match g {
                Gate::CX(..) | Gate::CZ(..) => 1,
                Gate::Swap(..) => 3,
                _ => 0,
            })
            .sum()
    }

    /// CX and CZ gates only; SWAPs are treated as relabelings.
    pub fn cx_count(&self) -> usize {
        self.gates.iter().filter(|g| matches!(g, Gate::CX(..) | Gate::CZ(..))).count()
    }

    pub fn single_qubit_count(&self) -> usize {
        self.gates.iter().filter(|g| !g.is_two_qubit()).count()
    }

    /// Circuit for the inverse unitary.
    pub fn inverse(&self) -> Circuit {
        Circuit { n: self.n, gates: self.gates.iter().rev().map(Gate::inverse).collect() }
    }

    /// `G·p·G†` where `G` is this circuit's unitary.
    pub fn conjugate_pauli(&self, p: &PauliOperator) -> Result<PauliOperator> {
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch(self.n, p.num_qubits()));
        }
        let mut out = p.clone();
        for g in &self.gates {
            g.validate(self.n)?;
            out.apply_gate(g);
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.n)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut circuit: Option<Circuit> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |msg: String| Error::Parse { line, msg };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut parts = content.split_whitespace();
            let op = parts.next().unwrap_or_default();
            let args = parts
                .map(|a| a.parse::<usize>().map_err(|_| err(format!("bad qubit index '{a}'"))))
                .collect::<Result<Vec<_>>>()?;
            let Some(c) = circuit.as_mut() else {
                if op != "qubits" || args.len() != 1 {
                    return Err(err("expected header 'qubits N'".into()));
                }
                circuit = Some(Circuit::new(args[0]));
                continue;
            };
            let arity = |k: usize| {
                if args.len() == k {
                    Ok(())
                } else {
                    Err(err(format!("'{op}' takes {k} qubit index(es), got {}", args.len())))
                }
            };
            let gate = match op {
                "h" | "s" | "sdg" | "x" | "y" | "z" => {
                    arity(1)?;
                    let q = args[0];
                    match op {
                        "h" => Gate::H(q),
                        "s" => Gate::S(q),
                        "sdg" => Gate::Sdg(q),
                        "x" => Gate::X(q),
                        "y" => Gate::Y(q),
                        _ => Gate::Z(q),
                    }
                }
                "cx" => {
                    arity(2)?;
                    Gate::CX(args[0], args[1])
                }
                "cz" => {
                    arity(2)?;
                    Gate::cz(args[0], args[1])
                }
                "swap" => {
                    arity(2)?;
                    Gate::swap(args[0], args[1])
                }
                "qubits" => return Err(err("duplicate header".into())),
                other => return Err(err(format!("unknown gate '{other}'"))),
            };
            c.push(gate).map_err(|e| err(e.to_string()))?;
        }
        circuit.ok_or(Error::Parse { line: 0, msg: "missing 'qubits N' header".into() })
    }
}
