use serde::Serialize;

use super::{inner_derivation, sign};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::ff::Fe;
use crate::grading::Parity;
use crate::qsuper::gen;
use crate::repmod::{BasisLabel, GModule, ModuleKind};

/// A homogeneous linear map from the algebra to a module, given by its
/// values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    parity: Parity,
    values: Vec<Vec<Fe>>,
}

impl Cocycle {
    /// Rejects values outside the parity component `|x| + parity`.
    pub fn new(m: &GModule, parity: Parity, values: Vec<Vec<Fe>>) -> Result<Self> {
        let alg = m.alg();
        if values.len() != alg.dim() || values.iter().any(|v| v.len() != m.dim()) {
            return Err(Error::Dimension(format!(
                "cochain needs {} values of length {}",
                alg.dim(),
                m.dim()
            )));
        }
        for (x, v) in values.iter().enumerate() {
            let target = alg.parity(x) + parity;
            if v.iter().zip(m.parities()).any(|(e, q)| !e.is_zero() && *q != target) {
                return Err(Error::CochainParity(alg.name(x).into()));
            }
        }
        Ok(Cocycle { parity, values })
    }

    pub fn zero(m: &GModule, parity: Parity) -> Self {
        Cocycle {
            parity,
            values: vec![vec![Fe::ZERO; m.dim()]; m.alg().dim()],
        }
    }

    /// Builds a cochain from `(generator, coefficient, label)` terms, labels
    /// read through [`GModule::vector_of`].
    pub fn from_terms(
        m: &GModule,
        parity: Parity,
        terms: &[(usize, i64, BasisLabel)],
    ) -> Result<Self> {
        let f = m.field();
        let mut values = Cocycle::zero(m, parity).values;
        for (x, c, label) in terms {
            let v = m
                .vector_of(label)
                .ok_or_else(|| Error::Invalid(format!("no basis vector {label}")))?;
            let c = f.from_int(*c);
            for (t, e) in values[*x].iter_mut().zip(v) {
                *t = f.add(t, &f.mul(&c, &e));
            }
        }
        Cocycle::new(m, parity, values)
    }

    /// `D_v` for homogeneous `v`.
    pub fn inner(m: &GModule, v: &[Fe], parity: Parity) -> Self {
        let n = m.dim();
        let flat = inner_derivation(m, v, parity);
        Cocycle {
            parity,
            values: flat.chunks(n.max(1)).map(<[Fe]>::to_vec).take(m.alg().dim()).collect(),
        }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn values(&self) -> &[Vec<Fe>] {
        &self.values
    }

    pub fn flat(&self) -> Vec<Fe> {
        self.values.concat()
    }

    pub fn sub(&self, m: &GModule, other: &Cocycle) -> Result<Cocycle> {
        if self.parity != other.parity {
            return Err(Error::Invalid("cochains of different parity".into()));
        }
        let f = m.field();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect())
            .collect();
        Ok(Cocycle {
            parity: self.parity,
            values,
        })
    }
}

/// First ordered pair `(x, y)` on which the derivation identity fails.
pub fn derivation_violation(m: &GModule, c: &Cocycle) -> Option<(usize, usize)> {
    let alg = m.alg();
    let f = m.field();
    let q = c.parity;
    for x in 0..alg.dim() {
        for y in 0..alg.dim() {
            let mut lhs = vec![Fe::ZERO; m.dim()];
            for (z, k) in alg.bracket_basis(x, y).iter().enumerate() {
                if !k.is_zero() {
                    for (t, e) in lhs.iter_mut().zip(&c.values[z]) {
                        *t = f.add(t, &f.mul(k, e));
                    }
                }
            }
            let s1 = q.sign_flip(alg.parity(x));
            let s2 = alg.parity(y).sign_flip(q + alg.parity(x));
            let a = m.action(x).mul_vec(&c.values[y]);
            let b = m.action(y).mul_vec(&c.values[x]);
            let rhs: Vec<Fe> = a
                .iter()
                .zip(&b)
                .map(|(u, v)| f.sub(&sign(f, s1, u), &sign(f, s2, v)))
                .collect();
            if lhs != rhs {
                return Some((x, y));
            }
        }
    }
    None
}

fn is_inner(m: &GModule, c: &Cocycle) -> bool {
    let f = m.field();
    let idx = m.indices_with_parity(c.parity);
    let target = c.flat();
    if idx.is_empty() {
        return target.iter().all(|e| e.is_zero());
    }
    let mut a = Matrix::zeros(f, target.len(), idx.len());
    for (col, &i) in idx.iter().enumerate() {
        let d = inner_derivation(m, &crate::exactla::unit(f, m.dim(), i), c.parity);
        for (r, e) in d.iter().enumerate() {
            a.set(r, col, *e);
        }
    }
    a.solve(&target).is_some()
}

fn is_weight_map(m: &GModule, c: &Cocycle) -> bool {
    let alg = m.alg();
    let f = m.field();
    (0..alg.dim()).all(|x| {
        let (w1, w2) = alg.weight(x);
        let wt = (f.from_int(w1), f.from_int(w2));
        c.values[x]
            .iter()
            .zip(m.weights())
            .all(|(e, w)| e.is_zero() || *w == wt)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_derivation: bool,
    pub is_inner: bool,
    pub is_weight_map: bool,
    /// First generator pair breaking the derivation identity.
    pub failing_pair: Option<(String, String)>,
}

pub fn classify_cochain(m: &GModule, c: &Cocycle) -> Classification {
    let bad = derivation_violation(m, c);
    Classification {
        is_derivation: bad.is_none(),
        is_inner: is_inner(m, c),
        is_weight_map: is_weight_map(m, c),
        failing_pair: bad.map(|(x, y)| (m.alg().name(x).into(), m.alg().name(y).into())),
    }
}

/// Whether `a - b` is inner.
pub fn are_cohomologous(m: &GModule, a: &Cocycle, b: &Cocycle) -> Result<bool> {
    Ok(is_inner(m, &a.sub(m, b)?))
}

/// The explicitly written cochains that apply to `m`: two on the Verma
/// module of weight zero and character zero, and several on simple
/// quotients at residue antidiagonal weights with character zero.
pub fn named_cochains(m: &GModule) -> Result<Vec<(String, Cocycle)>> {
    use gen::*;
    let f = m.field();
    let p = f.p() as i64;
    let chi = m.pchar();
    let lam = m.lam();
    let l1 = match (chi.is_zero_in(f), f.as_prime(&lam.l1)) {
        (true, Some(l1)) if f.add(&lam.l1, &lam.l2).is_zero() => l1 as i64,
        _ => return Ok(Vec::new()),
    };
    let r = |a: i64, j: u8, k: u8| BasisLabel::round(a.rem_euclid(p) as u32, j, k);
    let even = Parity::Even;
    let odd = Parity::Odd;
    let mut out: Vec<(&str, Parity, Vec<(usize, i64, BasisLabel)>)> = Vec::new();
    match (m.kind(), l1) {
        (ModuleKind::Verma, 0) => {
            out.push((
                "phi",
                even,
                vec![(ODD_CARTAN1, 1, r(p - 1, 1, 0)), (ODD_CARTAN2, 1, r(p - 1, 1, 0))],
            ));
            out.push((
                "psi",
                odd,
                vec![
                    (ODD_CARTAN1, -1, r(0, 0, 0)),
                    (ODD_CARTAN2, -1, r(0, 0, 0)),
                    (LOWER, 1, r(0, 1, 0)),
                ],
            ));
        }
        (ModuleKind::Simple, 0) => {
            out.push(("phi1", even, vec![(CARTAN1, 1, r(0, 0, 0))]));
            out.push(("phi2", even, vec![(CARTAN2, 1, r(0, 0, 0))]));
            out.push(("psi1", odd, vec![(ODD_CARTAN1, 1, r(0, 0, 0))]));
            out.push(("psi2", odd, vec![(ODD_CARTAN2, 1, r(0, 0, 0))]));
        }
        (ModuleKind::Simple, 1) => {
            out.push((
                "psi3",
                odd,
                vec![
                    (ODD_RAISE, -2, r(0, 0, 0)),
                    (ODD_LOWER, 2, r(2, 0, 0)),
                    (ODD_CARTAN1, 1, r(1, 0, 0)),
                    (ODD_CARTAN2, -1, r(1, 0, 0)),
                ],
            ));
        }
        (ModuleKind::Simple, l) if l == p - 1 => {
            out.push(("phi3", even, vec![(LOWER, -1, r(0, 0, 0)), (ODD_LOWER, 1, r(0, 0, 1))]));
            out.push(("phi4", even, vec![(RAISE, 1, r(p - 2, 0, 0)), (ODD_RAISE, 1, r(p - 3, 1, 0))]));
        }
        _ => {}
    }
    out.into_iter()
        .map(|(name, q, terms)| Ok((name.to_string(), Cocycle::from_terms(m, q, &terms)?)))
        .collect()
}
