//! Published reference values, stored as data and only ever compared against.

use crate::grading::Sdim;
use crate::qsuper::SuperAlgebra;
use crate::repmod::{GModule, ModuleKind};

/// `(chi is zero, chi is nilpotent, l1 as a residue)` for antidiagonal
/// weights with residue components; `None` when the weights rule out every
/// target weight.
fn residue_point(m: &GModule) -> Option<(bool, bool, u32)> {
    let f = m.field();
    let lam = m.lam();
    if super::h1_vanishes_by_weights(f, &lam) {
        return None;
    }
    let chi = m.pchar();
    let l1 = f.as_prime(&lam.l1)?;
    Some((chi.is_zero_in(f), chi.is_nilpotent_in(f), l1))
}

/// Published `H^0` of a Verma module.
pub fn expected_h0(m: &GModule) -> Option<Sdim> {
    if m.kind() != ModuleKind::Verma {
        return None;
    }
    Some(match residue_point(m) {
        Some((true, _, 0)) => Sdim::new(0, 1),
        _ => Sdim::ZERO,
    })
}

/// Published `H^1` of a Verma module or of its simple quotient.
pub fn expected_h1(m: &GModule) -> Option<Sdim> {
    let p = m.field().p();
    let point = residue_point(m);
    match m.kind() {
        ModuleKind::Verma => Some(match point {
            Some((true, _, 0)) => Sdim::new(1, 1),
            _ => Sdim::ZERO,
        }),
        ModuleKind::Simple => Some(match point {
            Some((true, _, 0)) => Sdim::new(2, 2),
            Some((true, _, 1)) => Sdim::new(0, 1),
            Some((true, _, l1)) if l1 == p - 1 => Sdim::new(2, 0),
            _ => Sdim::ZERO,
        }),
        _ => None,
    }
}

/// Published superdimension of the weight-derivation space of a simple
/// module; reference data only.
pub fn claimed_der0_sdim(m: &GModule) -> Option<Sdim> {
    if m.kind() != ModuleKind::Simple {
        return None;
    }
    let p = m.field().p();
    Some(match residue_point(m) {
        Some((true, _, 0)) => Sdim::new(2, 2),
        Some((true, _, 1)) => Sdim::new(1, 2),
        Some((true, _, l1)) if l1 == p - 1 => Sdim::new(2, 0),
        Some((true, _, _)) => Sdim::new(1, 1),
        Some((_, true, _)) => Sdim::new(1, 1),
        _ => Sdim::ZERO,
    })
}

/// Published target-weight superdimensions, ordered as
/// [`crate::repmod::TARGET_WEIGHTS`].
pub fn expected_target_weights(m: &GModule) -> Option<[Sdim; 3]> {
    let p = m.field().p();
    let zero = Sdim::ZERO;
    let one = Sdim::new(1, 1);
    let Some((chi_zero, chi_nil, l1)) = residue_point(m) else {
        return Some([zero; 3]);
    };
    match m.kind() {
        ModuleKind::Verma if l1 == 0 => Some([one; 3]),
        ModuleKind::Verma => Some([Sdim::new(2, 2); 3]),
        ModuleKind::Simple if chi_zero => Some(match l1 {
            0 => [Sdim::new(1, 0), zero, zero],
            1 => [one; 3],
            l if l == p - 1 => [zero, one, one],
            l if l <= (p - 1) / 2 => [one; 3],
            _ => [zero; 3],
        }),
        ModuleKind::Simple if chi_nil => Some([one; 3]),
        _ => None,
    }
}

/// `H^1` with coefficients in a module on which everything acts by zero:
/// parity-preserving and parity-reversing maps out of the abelianization.
pub fn trivial_h1_oracle(alg: &SuperAlgebra, module: Sdim) -> Sdim {
    let a = alg.abelianization_sdim();
    Sdim::new(
        a.even * module.even + a.odd * module.odd,
        a.even * module.odd + a.odd * module.even,
    )
}

/// The oracle value for `m`, if every action on `m` is zero.
pub fn trivial_oracle(m: &GModule) -> Option<Sdim> {
    m.actions()
        .iter()
        .all(|a| a.is_zero())
        .then(|| trivial_h1_oracle(m.alg(), m.sdim()))
}
