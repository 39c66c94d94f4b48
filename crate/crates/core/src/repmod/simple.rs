//! Submodules, spinning, and the two routes to the simple quotient.

use std::sync::Arc;

use super::{build_verma, BasisLabel, GModule, ModuleKind, PChar, VermaCase, Weight};
use crate::error::{Error, Result};
use crate::exactla::{unit, Subspace};
use crate::ff::Fe;
use crate::qsuper::SuperAlgebra;

pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Projective points allowed per weight component; `QCOH_BUDGET` overrides.
pub fn default_budget() -> u128 {
    std::env::var("QCOH_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Smallest action-closed subspace containing `seed`.
pub fn spin(m: &GModule, seed: &[Vec<Fe>]) -> Subspace {
    let mut s = Subspace::zero(m.field(), m.dim());
    let mut queue = Vec::new();
    for v in seed {
        if s.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for a in m.actions() {
            let w = a.mul_vec(&v);
            if s.insert(&w) {
                queue.push(w);
            }
        }
    }
    s
}

/// First `(generator, basis index)` whose image leaves `sub`.
pub(crate) fn closure_violation(m: &GModule, sub: &Subspace) -> Option<(usize, usize)> {
    for (x, a) in m.actions().iter().enumerate() {
        for (i, v) in sub.basis().iter().enumerate() {
            if !sub.contains(&a.mul_vec(v)) {
                return Some((x, i));
            }
        }
    }
    None
}

fn projective_count(order: u64, d: usize) -> u128 {
    let q = order as u128;
    (0..d).fold(0u128, |acc, _| acc.saturating_mul(q).saturating_add(1))
}

/// Calls `visit` on one representative of every line in the span of the
/// given coordinates, stopping early if it returns `false`.
fn for_each_projective_point(
    m: &GModule,
    coords: &[usize],
    mut visit: impl FnMut(Vec<Fe>) -> Result<bool>,
) -> Result<()> {
    let f = m.field();
    let q = f.order();
    let d = coords.len();
    for lead in 0..d {
        let free = d - lead - 1;
        let count = q.checked_pow(free as u32).expect("checked against budget");
        for idx in 0..count {
            let mut v = vec![Fe::ZERO; m.dim()];
            v[coords[lead]] = f.one();
            let mut rest = idx;
            for &c in &coords[lead + 1..] {
                v[c] = f.element(rest % q);
                rest /= q;
            }
            if !visit(v)? {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn check_budget(m: &GModule, w: &(Fe, Fe), parity: crate::Parity, d: usize, budget: u128) -> Result<()> {
    let points = projective_count(m.field().order(), d);
    if points > budget {
        return Err(Error::BudgetExceeded {
            component: format!("{} parity {}", m.render_weight(w), parity),
            points,
            budget,
        });
    }
    Ok(())
}

/// Sum of all submodules missing the highest-weight vector (basis vector 0),
/// found by spinning every homogeneous weight vector. The quotient is then
/// checked to be simple.
pub fn maximal_submodule(m: &GModule, budget: u128) -> Result<Subspace> {
    let f = m.field().clone();
    let n = m.dim();
    let top = unit(&f, n, 0);
    let comps = m.components();
    for (w, par, idx) in &comps {
        check_budget(m, w, *par, idx.len(), budget)?;
    }
    let mut kernel = Subspace::zero(&f, n);
    for (_, _, idx) in &comps {
        for_each_projective_point(m, idx, |v| {
            if !kernel.contains(&v) {
                let s = spin(m, &[v]);
                if !s.contains(&top) {
                    for b in s.basis() {
                        kernel.insert(b);
                    }
                }
            }
            Ok(true)
        })?;
    }
    if let Some((x, i)) = closure_violation(m, &kernel) {
        return Err(Error::NotActionClosed(
            "maximal submodule".into(),
            m.alg().name(x).to_string(),
            i,
        ));
    }
    if kernel.contains(&top) {
        return Err(Error::Invalid("maximal submodule contains the top vector".into()));
    }
    let q = m.quotient(&kernel, ModuleKind::Simple)?;
    verify_simple(&q, budget)?;
    Ok(kernel)
}

/// Every nonzero homogeneous weight vector generates the whole module.
pub fn verify_simple(m: &GModule, budget: u128) -> Result<()> {
    let comps = m.components();
    for (w, par, idx) in &comps {
        check_budget(m, w, *par, idx.len(), budget)?;
    }
    let f = m.field();
    for (_, _, idx) in &comps {
        for_each_projective_point(m, idx, |v| {
            if spin(m, std::slice::from_ref(&v)).dim() != m.dim() {
                let desc = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| format!("{}*{}", f.render(c), m.labels()[i]))
                    .collect::<Vec<_>>()
                    .join(" + ");
                return Err(Error::NotSimple(desc));
            }
            Ok(true)
        })?;
    }
    Ok(())
}

/// The three explicitly listed submodules of an antidiagonal Verma module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropSubmodule {
    /// `chi = 0`, `l1` a nonzero residue.
    ZeroCharacter,
    /// `chi` nilpotent, `l1` a nonzero residue.
    NilpotentCharacter,
    /// `chi = 0`, `l = 0`.
    ZeroWeight,
}

impl PropSubmodule {
    pub fn tag(&self) -> &'static str {
        match self {
            PropSubmodule::ZeroCharacter => "chi-zero",
            PropSubmodule::NilpotentCharacter => "chi-nilpotent",
            PropSubmodule::ZeroWeight => "weight-zero",
        }
    }
}

/// Span of the listed basis, verified to be action-closed.
pub fn prop_submodule(m: &GModule, which: PropSubmodule) -> Result<Subspace> {
    let f = m.field().clone();
    let p = f.p() as i64;
    let fail = |reason: &str| Error::SubmoduleHypothesis {
        which: which.tag().into(),
        reason: reason.into(),
    };
    if m.kind() != ModuleKind::Verma {
        return Err(fail("not a Verma module"));
    }
    let lam = m.lam();
    let l1 = f.as_prime(&lam.l1).ok_or_else(|| fail("l1 is not a residue"))? as i64;
    if !f.add(&lam.l1, &lam.l2).is_zero() {
        return Err(fail("weight is not of the form (l1, -l1)"));
    }
    let chi = m.pchar();
    let zero_chi = chi.is_zero_in(&f);
    let nilpotent = chi.is_nilpotent_in(&f);
    match which {
        PropSubmodule::ZeroCharacter if !(zero_chi && l1 != 0) => {
            return Err(fail("needs chi = 0 and l1 != 0"))
        }
        PropSubmodule::NilpotentCharacter if !(nilpotent && l1 != 0) => {
            return Err(fail("needs nilpotent chi and l1 != 0"))
        }
        PropSubmodule::ZeroWeight if !(zero_chi && l1 == 0) => {
            return Err(fail("needs chi = 0 and l = 0"))
        }
        _ => {}
    }
    let lab = |a: i64, j: u8, k: u8| {
        m.vector_of(&BasisLabel::round(a.rem_euclid(p) as u32, j, k))
            .expect("label in basis")
    };
    let l1e = f.from_int(l1);
    let mixed = |b: i64| {
        let x = lab(b + 1, 0, 1);
        let y = lab(b, 1, 0);
        x.iter()
            .zip(&y)
            .map(|(s, t)| f.sub(s, &f.mul(&l1e, t)))
            .collect::<Vec<_>>()
    };
    let mut vs = Vec::new();
    match which {
        PropSubmodule::ZeroCharacter => {
            let u = (2 * l1).rem_euclid(p);
            for a in 0..p {
                vs.push(lab(a, 1, 1));
            }
            for c in u + 1..p {
                vs.push(lab(c, 0, 0));
                vs.push(lab(c, 0, 1));
                vs.push(lab(c, 1, 0));
            }
            for b in 0..u {
                vs.push(mixed(b));
            }
            vs.push(lab(u, 1, 0));
        }
        PropSubmodule::NilpotentCharacter => {
            for a in 0..p {
                vs.push(lab(a, 1, 1));
                vs.push(mixed(a));
            }
        }
        PropSubmodule::ZeroWeight => {
            for a in 1..p {
                vs.push(lab(a, 0, 0));
                vs.push(lab(a, 1, 0));
            }
            vs.push(lab(0, 1, 0));
        }
    }
    let sub = Subspace::span(&f, m.dim(), vs);
    if let Some((x, i)) = closure_violation(m, &sub) {
        return Err(Error::NotActionClosed(
            which.tag().into(),
            m.alg().name(x).to_string(),
            i,
        ));
    }
    Ok(sub)
}

/// A way of finding the maximal submodule of a Verma module.
pub trait QuotientRoute: Send + Sync {
    fn name(&self) -> &'static str;
    fn kernel(&self, z: &GModule, budget: u128) -> Result<Subspace>;
}

struct PropositionRoute;

impl QuotientRoute for PropositionRoute {
    fn name(&self) -> &'static str {
        "proposition"
    }

    fn kernel(&self, z: &GModule, _budget: u128) -> Result<Subspace> {
        let f = z.field();
        let chi = z.pchar();
        let in_prime = f.as_prime(&z.lam().l1).is_some();
        let unsupported = || {
            Error::UnsupportedRoute(format!(
                "no listed submodule for chi = {chi}, weight {}",
                z.lam().render(f)
            ))
        };
        match z.case() {
            Some(VermaCase::Antidiagonal) if in_prime && chi.is_zero_in(f) => {
                prop_submodule(z, PropSubmodule::ZeroCharacter)
            }
            Some(VermaCase::Antidiagonal) if in_prime && chi.is_nilpotent_in(f) => {
                prop_submodule(z, PropSubmodule::NilpotentCharacter)
            }
            Some(VermaCase::ZeroWeight) if chi.is_zero_in(f) => {
                prop_submodule(z, PropSubmodule::ZeroWeight)
            }
            Some(VermaCase::ZeroWeight) if chi.is_nilpotent_in(f) => {
                Ok(Subspace::zero(f, z.dim()))
            }
            _ => Err(unsupported()),
        }
    }
}

struct GenericRoute;

impl QuotientRoute for GenericRoute {
    fn name(&self) -> &'static str {
        "generic"
    }

    fn kernel(&self, z: &GModule, budget: u128) -> Result<Subspace> {
        maximal_submodule(z, budget)
    }
}

pub fn quotient_routes() -> Vec<Box<dyn QuotientRoute>> {
    vec![Box::new(PropositionRoute), Box::new(GenericRoute)]
}

pub fn quotient_route(name: &str) -> Result<Box<dyn QuotientRoute>> {
    let mut routes = quotient_routes();
    let known = routes.iter().map(|r| r.name()).collect::<Vec<_>>().join(", ");
    match routes.iter().position(|r| r.name() == name) {
        Some(i) => Ok(routes.swap_remove(i)),
        None => Err(Error::UnknownStrategy {
            kind: "quotient route",
            name: name.into(),
            known: format!("{known}, both"),
        }),
    }
}

/// Simple quotient of `Z_chi(lam)`. `route` is a registered route name or
/// `both`, which requires the routes to find the same kernel.
pub fn simple_module(
    alg: &Arc<SuperAlgebra>,
    chi: &PChar,
    lam: &Weight,
    route: &str,
    budget: u128,
) -> Result<GModule> {
    let z = build_verma(alg, chi, lam)?;
    let kernel = if route == "both" {
        let mut found: Option<(&'static str, Subspace)> = None;
        for r in quotient_routes() {
            let k = r.kernel(&z, budget)?;
            if let Some((name, prev)) = &found {
                if *prev != k {
                    return Err(Error::RouteDisagreement(format!(
                        "{name} gives dim {}, {} gives dim {}",
                        prev.dim(),
                        r.name(),
                        k.dim()
                    )));
                }
            } else {
                found = Some((r.name(), k));
            }
        }
        found.expect("at least one route").1
    } else {
        quotient_route(route)?.kernel(&z, budget)?
    };
    z.quotient(&kernel, ModuleKind::Simple)
}
