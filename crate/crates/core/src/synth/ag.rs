//! Baseline synthesis by column-wise Gaussian elimination of the tableau, in
//! the style of the Aaronson-Gottesman canonical form. Used only as a point
//! of comparison for benchmark tables.

use crate::circuit::Circuit;
use crate::gate::Gate;
use crate::tableau::CliffordTableau;

/// Compiles `t` qubit by qubit: bring the image of `X_i` to `X_i`, then the
/// image of `Z_i` to `Z_i`, using CX for X-part elimination and CZ for
/// Z-part elimination. Row swaps are realized with three CX gates.
pub fn ag_canonical(t: &CliffordTableau) -> Circuit {
    let n = t.num_qubits();
    let mut w = t.clone();
    let mut applied: Vec<Gate> = Vec::new();
    let mut emit = |w: &mut CliffordTableau, g: Gate| {
        w.apply_gate(&g);
        applied.push(g);
    };
    let swap = |w: &mut CliffordTableau, emit: &mut dyn FnMut(&mut CliffordTableau, Gate), a: usize, b: usize| {
        for g in [Gate::CX(a, b), Gate::CX(b, a), Gate::CX(a, b)] {
            emit(w, g);
        }
    };

    for i in 0..n {
        // Pivot: some qubit j >= i where the X_i image has an x bit, else a z bit.
        let row = w.x_image(i).clone();
        let j = (i..n).find(|&j| row.x_bit(j)).or_else(|| (i..n).find(|&j| row.z_bit(j)));
        let j = j.expect("image of X_i acts on remaining qubits");
        if !row.x_bit(j) {
            emit(&mut w, Gate::H(j));
        }
        if j != i {
            swap(&mut w, &mut emit, i, j);
        }
        clear_row(&mut w, &mut emit, i, i, n);

        // The image of Z_i now anticommutes with X_i only on qubit i.
        emit(&mut w, Gate::H(i));
        clear_row(&mut w, &mut emit, n + i, i, n);
        emit(&mut w, Gate::H(i));
    }
    for i in 0..n {
        match (w.x_image(i).is_negative(), w.z_image(i).is_negative()) {
            (false, false) => {}
            (true, false) => emit(&mut w, Gate::Z(i)),
            (false, true) => emit(&mut w, Gate::X(i)),
            (true, true) => emit(&mut w, Gate::Y(i)),
        }
    }
    debug_assert!(w.is_identity());
    Circuit::from_gates_unchecked(n, applied).inverse()
}

/// Reduces row `r` (which has an x bit on `i`) to `±X_i` with gates that fix
/// every already-reduced row.
fn clear_row(
    w: &mut CliffordTableau,
    emit: &mut dyn FnMut(&mut CliffordTableau, Gate),
    r: usize,
    i: usize,
    n: usize,
) {
    for j in i + 1..n {
        if w.rows()[r].x_bit(j) {
            emit(w, Gate::CX(i, j));
        }
    }
    for j in i + 1..n {
        if w.rows()[r].z_bit(j) {
            emit(w, Gate::cz(i, j));
        }
    }
    if w.rows()[r].z_bit(i) {
        emit(w, Gate::S(i));
    }
}
