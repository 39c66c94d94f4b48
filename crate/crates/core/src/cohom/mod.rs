//! Zeroth and first cohomology of the algebra with coefficients in a module.
//!
//! A 1-cochain of a module of dimension `n` is stored flat: the coordinate
//! `i` of its value on basis element `x` sits at index `x * n + i`.

mod cochain;
mod expect;
mod method;
#[cfg(test)]
mod tests;

use serde::Serialize;

use crate::exactla::{Matrix, Subspace, SubspaceJson};
use crate::ff::{Fe, Field};
use crate::grading::{Parity, Sdim};
use crate::repmod::{GModule, ModuleJson, Weight};

pub use cochain::{
    are_cohomologous, classify_cochain, derivation_violation, named_cochains, Classification,
    Cocycle,
};
pub use expect::{
    claimed_der0_sdim, expected_h0, expected_h1, expected_target_weights, trivial_h1_oracle,
    trivial_oracle,
};
pub use method::{compute_h1, h1_method, h1_methods, H1Data, H1Method, H1Outcome};

/// `H^0`: the invariants, with their parity split.
pub fn h0(m: &GModule) -> (Sdim, Subspace) {
    let parts: Vec<&Matrix> = m.actions().iter().collect();
    let inv = Matrix::vstack(&parts).kernel();
    (graded_sdim(m, &inv), inv)
}

/// Superdimension of a graded subspace of `m`, read off its pivots.
fn graded_sdim(m: &GModule, s: &Subspace) -> Sdim {
    let mut out = Sdim::ZERO;
    for &c in s.pivots() {
        let q = m.parities()[c];
        out.set(q, out.get(q) + 1);
    }
    out
}

fn sign(f: &Field, negate: bool, v: &Fe) -> Fe {
    if negate {
        f.neg(v)
    } else {
        *v
    }
}

/// Unknowns `(x, i)` of a cochain of the given parity, optionally restricted
/// to weight-preserving maps.
fn unknowns(m: &GModule, parity: Parity, weight_only: bool) -> Vec<(usize, usize)> {
    let alg = m.alg();
    let f = m.field();
    let mut out = Vec::new();
    for x in 0..alg.dim() {
        let target = alg.parity(x) + parity;
        let (w1, w2) = alg.weight(x);
        let wt = (f.from_int(w1), f.from_int(w2));
        for i in 0..m.dim() {
            if m.parities()[i] == target && (!weight_only || m.weights()[i] == wt) {
                out.push((x, i));
            }
        }
    }
    out
}

/// Pairs `(x, y)` with `x <= y` on which the derivation identity is imposed;
/// the diagonal only for odd `x`.
fn equation_pairs(m: &GModule) -> Vec<(usize, usize)> {
    let alg = m.alg();
    let mut out = Vec::new();
    for x in 0..alg.dim() {
        for y in x..alg.dim() {
            if x == y && !alg.parity(x).is_odd() {
                continue;
            }
            out.push((x, y));
        }
    }
    out
}

/// Solution space of
/// `phi([x,y]) = (-1)^{|phi||x|} x phi(y) - (-1)^{|y|(|phi|+|x|)} y phi(x)`
/// over the given unknowns, embedded in the flat cochain space.
fn derivation_kernel(m: &GModule, parity: Parity, vars: &[(usize, usize)]) -> Subspace {
    let alg = m.alg();
    let f = m.field();
    let n = m.dim();
    let total = alg.dim() * n;
    if vars.is_empty() {
        return Subspace::zero(f, total);
    }
    let mut col = vec![usize::MAX; total];
    for (c, &(x, i)) in vars.iter().enumerate() {
        col[x * n + i] = c;
    }
    let mut rows: Vec<Vec<Fe>> = Vec::new();
    for (x, y) in equation_pairs(m) {
        let s1 = parity.sign_flip(alg.parity(x));
        let s2 = alg.parity(y).sign_flip(parity + alg.parity(x));
        let bracket = alg.bracket_basis(x, y);
        let ax = m.action(x);
        let ay = m.action(y);
        for i in 0..n {
            let mut row = vec![Fe::ZERO; vars.len()];
            for (z, c) in bracket.iter().enumerate() {
                if !c.is_zero() && col[z * n + i] != usize::MAX {
                    let t = &mut row[col[z * n + i]];
                    *t = f.add(t, c);
                }
            }
            for k in 0..n {
                let a = ax.get(i, k);
                if !a.is_zero() && col[y * n + k] != usize::MAX {
                    let t = &mut row[col[y * n + k]];
                    *t = f.sub(t, &sign(f, s1, &a));
                }
                let b = ay.get(i, k);
                if !b.is_zero() && col[x * n + k] != usize::MAX {
                    let t = &mut row[col[x * n + k]];
                    *t = f.add(t, &sign(f, s2, &b));
                }
            }
            if row.iter().any(|e| !e.is_zero()) {
                rows.push(row);
            }
        }
    }
    let sol = Matrix::from_rows(f, vars.len(), &rows).kernel();
    let embedded = sol
        .basis()
        .iter()
        .map(|v| {
            let mut full = vec![Fe::ZERO; total];
            for (c, e) in v.iter().enumerate() {
                let (x, i) = vars[c];
                full[x * n + i] = *e;
            }
            full
        })
        .collect();
    Subspace::span(f, total, embedded)
}

/// All derivations of the given parity.
pub fn der_space(m: &GModule, parity: Parity) -> Subspace {
    derivation_kernel(m, parity, &unknowns(m, parity, false))
}

/// Weight-derivations: derivations mapping each root space into the
/// module's weight space of the same weight.
pub fn der0_space(m: &GModule, parity: Parity) -> Subspace {
    derivation_kernel(m, parity, &unknowns(m, parity, true))
}

/// `D_v(x) = (-1)^{|x||v|} x v` for homogeneous `v` of parity `parity`.
pub fn inner_derivation(m: &GModule, v: &[Fe], parity: Parity) -> Vec<Fe> {
    let alg = m.alg();
    let f = m.field();
    let mut out = Vec::with_capacity(alg.dim() * m.dim());
    for x in 0..alg.dim() {
        let negate = alg.parity(x).sign_flip(parity);
        out.extend(m.action(x).mul_vec(v).iter().map(|e| sign(f, negate, e)));
    }
    out
}

/// Inner derivations `D_v` with `v` of the given parity.
pub fn ider_space(m: &GModule, parity: Parity) -> Subspace {
    let f = m.field();
    let vs = m
        .indices_with_parity(parity)
        .into_iter()
        .map(|i| inner_derivation(m, &crate::exactla::unit(f, m.dim(), i), parity))
        .collect();
    Subspace::span(f, m.alg().dim() * m.dim(), vs)
}

/// Whether the weights alone force `H^0` and `H^1` to vanish for `Z_chi(lam)`
/// and all its quotients: no weight of the module is a weight of the algebra.
pub fn h1_vanishes_by_weights(field: &Field, lam: &Weight) -> bool {
    !field.add(&lam.l1, &lam.l2).is_zero() || field.as_prime(&lam.l1).is_none()
}

#[derive(Clone, Debug, Serialize)]
pub struct ParityPair<T> {
    pub even: T,
    pub odd: T,
}

impl ParityPair<SubspaceJson> {
    fn of(s: &[Subspace; 2]) -> Self {
        ParityPair {
            even: s[0].to_json(),
            odd: s[1].to_json(),
        }
    }
}

/// Outcome of the structural identities on one module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub ider_in_der: bool,
    pub ider_plus_h0_is_module: bool,
    pub der_is_der0_plus_ider: bool,
    pub cartan_values_invariant: bool,
}

impl Structure {
    pub fn all(&self) -> bool {
        self.ider_in_der
            && self.ider_plus_h0_is_module
            && self.der_is_der0_plus_ider
            && self.cartan_values_invariant
    }
}

/// Checks the structural identities given the full and weight runs.
pub fn structure(
    m: &GModule,
    h0_space: &Subspace,
    h0_sdim: Sdim,
    outcome: &H1Outcome,
) -> Option<Structure> {
    let der = &outcome.run("full")?.cocycles;
    let der0 = &outcome.run("weight")?.cocycles;
    let ider = &outcome.ider;
    let n = m.dim();
    let mut ider_sdim = Sdim::ZERO;
    for q in Parity::BOTH {
        ider_sdim.set(q, ider[q.bit() as usize].dim());
    }
    let cartans: Vec<usize> = (0..m.alg().dim())
        .filter(|&x| !m.alg().parity(x).is_odd() && m.alg().weight(x) == (0, 0))
        .collect();
    let mut s = Structure {
        ider_in_der: true,
        ider_plus_h0_is_module: ider_sdim + h0_sdim == m.sdim(),
        der_is_der0_plus_ider: true,
        cartan_values_invariant: true,
    };
    for q in 0..2 {
        s.ider_in_der &= der[q].contains_space(&ider[q]);
        s.der_is_der0_plus_ider &= der0[q].sum(&ider[q]) == der[q];
        for v in der0[q].basis() {
            for &h in &cartans {
                s.cartan_values_invariant &= h0_space.contains(&v[h * n..(h + 1) * n]);
            }
        }
    }
    Some(s)
}

/// Everything computed for one module, in certificate form.
#[derive(Clone, Debug, Serialize)]
pub struct CohomReport {
    pub module: ModuleJson,
    pub method: Option<String>,
    pub h0_sdim: Option<Sdim>,
    pub h1_sdim: Option<Sdim>,
    pub der_sdim: Option<Sdim>,
    pub der0_sdim: Option<Sdim>,
    pub ider_sdim: Option<Sdim>,
    pub h0_basis: Option<SubspaceJson>,
    pub der_basis: Option<ParityPair<SubspaceJson>>,
    pub der0_basis: Option<ParityPair<SubspaceJson>>,
    pub ider_basis: Option<ParityPair<SubspaceJson>>,
    pub structure: Option<Structure>,
    pub paper_expected_h0: Option<Sdim>,
    pub paper_expected: Option<Sdim>,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Computes `H^0` and/or `H^1` of `m` and compares with the stored tables.
pub fn cohomology(
    m: &GModule,
    want_h0: bool,
    h1_method_name: Option<&str>,
) -> crate::Result<CohomReport> {
    let (h0_sdim, h0_space) = h0(m);
    let outcome = h1_method_name.map(|name| compute_h1(m, name)).transpose()?;
    let structure = outcome
        .as_ref()
        .and_then(|o| structure(m, &h0_space, h0_sdim, o));
    let pick = |name: &str| outcome.as_ref().and_then(|o| o.run(name));
    let sdim_of = |s: &[Subspace; 2]| Sdim::new(s[0].dim(), s[1].dim());

    let paper_expected_h0 = if want_h0 { expected_h0(m) } else { None };
    let paper_expected = outcome.as_ref().and_then(|_| expected_h1(m));
    let h1_sdim = outcome.as_ref().map(|o| o.h1);
    let matches = paper_expected_h0.map_or(true, |e| e == h0_sdim)
        && paper_expected.map_or(true, |e| Some(e) == h1_sdim);
    Ok(CohomReport {
        module: m.to_json(),
        method: h1_method_name.map(str::to_string),
        h0_sdim: want_h0.then_some(h0_sdim),
        h1_sdim,
        der_sdim: pick("full").map(|r| sdim_of(&r.cocycles)),
        der0_sdim: pick("weight").map(|r| sdim_of(&r.cocycles)),
        ider_sdim: outcome.as_ref().map(|o| sdim_of(&o.ider)),
        h0_basis: want_h0.then(|| h0_space.to_json()),
        der_basis: pick("full").map(|r| ParityPair::of(&r.cocycles)),
        der0_basis: pick("weight").map(|r| ParityPair::of(&r.cocycles)),
        ider_basis: outcome.as_ref().map(|o| ParityPair::of(&o.ider)),
        structure,
        paper_expected_h0,
        paper_expected,
        matches,
    })
}
