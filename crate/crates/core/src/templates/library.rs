//! Identity circuits used as rewrite rules.

use std::sync::OnceLock;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::tableau::CliffordTableau;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub id: char,
    /// Abstract wires `0..wires`.
    pub wires: usize,
    pub gates: Vec<Gate>,
}

impl Template {
    /// Fails unless the gates multiply to the identity up to global phase.
    pub fn new(id: char, wires: usize, gates: Vec<Gate>) -> Result<Self> {
        let c = Circuit::from_gates(wires, gates)
            .map_err(|e| Error::InvalidTemplate(format!("template {id}: {e}")))?;
        if !CliffordTableau::from_circuit(&c)?.is_identity() {
            return Err(Error::InvalidTemplate(format!("template {id} is not the identity")));
        }
        Ok(Template { id, wires, gates: c.into_gates() })
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn to_circuit(&self) -> Circuit {
        Circuit::from_gates_unchecked(self.wires, self.gates.clone())
    }

    /// The template read backwards with every gate inverted; also the identity.
    pub fn inverse(&self) -> Template {
        Template { id: self.id, wires: self.wires, gates: self.to_circuit().inverse().into_gates() }
    }
}

fn raw_templates() -> Vec<(char, usize, Vec<Gate>)> {
    use Gate::*;
    let cz = Gate::cz;
    vec![
        ('a', 2, vec![cz(0, 1), cz(0, 1)]),
        (
            'b',
            2,
            vec![cz(0, 1), H(1), cz(0, 1), S(0), H(1), Sdg(1), H(1), cz(0, 1), H(1), S(1)],
        ),
        ('c', 1, vec![H(0), H(0)]),
        (
            'd',
            2,
            vec![H(1), cz(0, 1), H(0), H(1), cz(0, 1), H(0), H(1), cz(0, 1), H(1), Gate::swap(0, 1)],
        ),
        (
            'e',
            3,
            vec![H(1), cz(0, 1), H(1), cz(1, 2), H(1), cz(0, 1), H(1), cz(1, 2), cz(0, 2)],
        ),
        ('f', 1, vec![S(0), H(0), S(0), H(0), S(0), H(0)]),
        ('g', 1, vec![S(0), S(0), Z(0)]),
        (
            'h',
            2,
            vec![S(0), S(1), H(1), cz(0, 1), H(1), Sdg(1), H(1), cz(0, 1), H(1), cz(0, 1)],
        ),
    ]
}

/// The eight built-in templates, validated once.
///
/// # Panics
/// If any built-in template fails validation.
pub fn builtin_templates() -> &'static [Template] {
    static TEMPLATES: OnceLock<Vec<Template>> = OnceLock::new();
    TEMPLATES.get_or_init(|| {
        raw_templates()
            .into_iter()
            .map(|(id, w, g)| Template::new(id, w, g).unwrap_or_else(|e| panic!("{e}")))
            .collect()
    })
}

/// Validates a template list, reporting the first failure.
pub fn validate_templates(raw: &[(char, usize, Vec<Gate>)]) -> Result<Vec<Template>> {
    raw.iter().map(|(id, w, g)| Template::new(*id, *w, g.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_are_identities() {
        let ts = validate_templates(&raw_templates()).unwrap();
        assert_eq!(ts.len(), 8);
        let ids: String = ts.iter().map(|t| t.id).collect();
        assert_eq!(ids, "abcdefgh");
        for t in &ts {
            assert!(CliffordTableau::from_circuit(&t.inverse().to_circuit()).unwrap().is_identity());
        }
    }

    #[test]
    fn broken_template_is_rejected() {
        let r = Template::new('x', 1, vec![Gate::S(0), Gate::S(0)]);
        assert!(matches!(r, Err(Error::InvalidTemplate(_))));
    }
}
