//! Baby Verma modules from the explicit action tables.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{BasisLabel, GModule, ModuleKind, PChar, Weight};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::ff::{square_roots, Fe, Field};
use crate::qsuper::{gen::*, SuperAlgebra};

/// Which action table applies to a highest weight `(l1, l2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VermaCase {
    /// `l1 = 0 != l2`, square-bracket labels.
    FirstVanishing,
    /// `l2 = 0 != l1`.
    SecondVanishing,
    /// `l1, l2` nonzero and `l1 != -l2`; needs `mu` with `mu^2 = -l1/l2`.
    Generic,
    /// `l2 = -l1 != 0`.
    Antidiagonal,
    /// `l = 0`, half-size basis.
    ZeroWeight,
}

impl VermaCase {
    pub fn id(&self) -> &'static str {
        match self {
            VermaCase::FirstVanishing => "first-vanishing",
            VermaCase::SecondVanishing => "second-vanishing",
            VermaCase::Generic => "generic",
            VermaCase::Antidiagonal => "antidiagonal",
            VermaCase::ZeroWeight => "zero-weight",
        }
    }
}

pub fn verma_case(field: &Field, lam: &Weight) -> VermaCase {
    if field.add(&lam.l1, &lam.l2).is_zero() {
        if lam.l1.is_zero() {
            VermaCase::ZeroWeight
        } else {
            VermaCase::Antidiagonal
        }
    } else if lam.l1.is_zero() {
        VermaCase::FirstVanishing
    } else if lam.l2.is_zero() {
        VermaCase::SecondVanishing
    } else {
        VermaCase::Generic
    }
}

/// Accumulates table entries into action matrices, remembering which
/// formula wrote to which generator.
struct Table<'a> {
    f: &'a Field,
    p: u32,
    index: HashMap<(u32, u8, u8), usize>,
    actions: Vec<Matrix>,
    formulas: Vec<Vec<&'static str>>,
    current: &'static str,
}

impl Table<'_> {
    fn put(&mut self, x: usize, src: (u32, u8, u8), tgt: (i64, u8, u8), c: Fe) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let a = tgt.0.rem_euclid(self.p as i64) as u32;
        let (Some(&s), Some(&t)) = (self.index.get(&src), self.index.get(&(a, tgt.1, tgt.2))) else {
            return Err(Error::Invalid(format!(
                "table {} sends {:?} outside the basis ({:?})",
                self.current, src, tgt
            )));
        };
        self.actions[x].add_to(t, s, &c);
        if !self.formulas[x].contains(&self.current) {
            self.formulas[x].push(self.current);
        }
        Ok(())
    }

    fn int(&self, n: i64) -> Fe {
        self.f.from_int(n)
    }

    /// `f` and the lowering part of `H_i(a,1,k)`: `(a+1, j, k)`, wrapping to
    /// `chi(f)^p (0, j, k)`.
    fn shift(&self, a: u32, cfp: &Fe) -> (i64, Fe) {
        if a + 1 == self.p {
            (0, *cfp)
        } else {
            (a as i64 + 1, self.f.one())
        }
    }
}

fn sign(i: i64) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn build_verma(alg: &Arc<SuperAlgebra>, chi: &PChar, lam: &Weight) -> Result<GModule> {
    build_verma_with_mu(alg, chi, lam, None)
}

/// As [`build_verma`], with an explicit choice of `mu` for the generic table
/// (the default is the lexicographically smaller square root).
pub fn build_verma_with_mu(
    alg: &Arc<SuperAlgebra>,
    chi: &PChar,
    lam: &Weight,
    mu: Option<Fe>,
) -> Result<GModule> {
    let f = alg.field();
    let p = f.p();
    if !lam.in_lambda_chi(f, chi) {
        return Err(Error::WeightNotAllowed(f.render(&lam.l1), f.render(&lam.l2)));
    }
    let case = verma_case(f, lam);
    let mu = match case {
        VermaCase::Generic => {
            let ratio = f.neg(&f.div(&lam.l1, &lam.l2).expect("l2 nonzero"));
            let roots = square_roots(f, &ratio);
            match mu {
                Some(m) if roots.contains(&m) => Some(m),
                Some(m) => {
                    return Err(Error::Invalid(format!(
                        "{} is not a square root of {}",
                        f.render(&m),
                        f.render(&ratio)
                    )))
                }
                None => Some(*roots.first().ok_or_else(|| Error::MissingMu(f.render(&ratio)))?),
            }
        }
        _ => None,
    };

    let half = case == VermaCase::ZeroWeight;
    let mut labels = Vec::new();
    for a in 0..p {
        for j in 0..2u8 {
            for k in 0..(if half { 1 } else { 2u8 }) {
                labels.push(if case == VermaCase::FirstVanishing {
                    BasisLabel::square(a, j, k)
                } else {
                    BasisLabel::round(a, j, k)
                });
            }
        }
    }
    let n = labels.len();
    let index = labels
        .iter()
        .enumerate()
        .map(|(i, l)| ((l.a, l.j, l.k), i))
        .collect();
    let mut t = Table {
        f,
        p,
        index,
        actions: vec![Matrix::zeros(f, n, n); 8],
        formulas: vec![Vec::new(); 8],
        current: "",
    };
    let cfp = f.pow(&chi.f_val(f), p as u64);
    let (l1, l2) = (lam.l1, lam.l2);

    let weights: Vec<(Fe, Fe)> = labels
        .iter()
        .map(|l| {
            let s = f.from_u64((l.a + l.j as u32) as u64);
            (f.sub(&l1, &s), f.add(&l2, &s))
        })
        .collect();

    for (i, l) in labels.iter().enumerate() {
        let s = (l.a, l.j, l.k);
        let (a, j, k) = (l.a as i64, l.j, l.k);

        t.current = "cartan";
        t.put(CARTAN1, s, (a, j, k), weights[i].0)?;
        t.put(CARTAN2, s, (a, j, k), weights[i].1)?;

        t.current = "F";
        if j == 0 {
            t.put(ODD_LOWER, s, (a, 1, k), f.one())?;
        }
        t.current = "f";
        let (na, c) = t.shift(l.a, &cfp);
        t.put(LOWER, s, (na, j, k), c)?;

        match case {
            VermaCase::FirstVanishing => first_vanishing(&mut t, s, &l2, &cfp)?,
            VermaCase::SecondVanishing => second_vanishing(&mut t, s, &l1, &cfp)?,
            VermaCase::Generic => generic(&mut t, s, &l1, &l2, &mu.expect("mu chosen"), &cfp)?,
            VermaCase::Antidiagonal => antidiagonal(&mut t, s, &l1, &cfp)?,
            VermaCase::ZeroWeight => {
                t.current = "e(a,j,0) zero weight";
                let c = -a * (a - sign(j as i64));
                t.put(RAISE, s, (a - 1, j, 0), t.int(c))?;
                for i in 1..=2i64 {
                    let h = ODD_CARTAN1 + (i as usize - 1);
                    if j == 1 {
                        t.current = "H_i(a,1,0) zero weight";
                        let (na, c) = t.shift(l.a, &cfp);
                        t.put(h, s, (na, 0, 0), c)?;
                    } else {
                        t.current = "H_i(a,0,0) zero weight";
                        t.put(h, s, (a - 1, 1, 0), t.int(sign(i) * a))?;
                    }
                }
                t.current = "E(a,j,0) zero weight";
                if j == 0 {
                    t.put(ODD_RAISE, s, (a - 2, 1, 0), t.int(-a * (a - 1)))?;
                }
            }
        }
    }

    let parities = labels.iter().map(|l| l.parity()).collect();
    let mut m = GModule::from_parts(
        alg,
        labels,
        parities,
        weights,
        t.actions.clone(),
        *chi,
        *lam,
        ModuleKind::Verma,
    );
    m.case = Some(case);
    m.mu = mu;
    m.validate_grading()?;
    if let Some((x, y)) = m.module_axiom_violation() {
        let formula = format!(
            "{} [{}: {}] [{}: {}]",
            case.id(),
            alg.name(x),
            t.formulas[x].join(", "),
            alg.name(y),
            t.formulas[y].join(", ")
        );
        return Err(Error::ModuleAxiom {
            x: alg.name(x).to_string(),
            y: alg.name(y).to_string(),
            formula,
        });
    }
    Ok(m)
}

fn first_vanishing(t: &mut Table, s: (u32, u8, u8), l2: &Fe, cfp: &Fe) -> Result<()> {
    let f = t.f;
    let (a, j, k) = (s.0 as i64, s.1, s.2);
    let ai = t.int(a);
    let dk = 1 - k;
    // delta_{k=0} + l2 delta_{k=1}
    let lk = if k == 0 { f.one() } else { *l2 };
    if j == 0 {
        t.current = "H_i[a,0,k]";
        for i in 1..=2i64 {
            let h = ODD_CARTAN1 + (i as usize - 1);
            t.put(h, s, (a - 1, 1, k), t.int(sign(i) * a))?;
            if i == 2 {
                t.put(h, s, (a, 0, dk), lk)?;
            }
        }
        t.current = "E[a,0,k]";
        t.put(ODD_RAISE, s, (a - 1, 0, dk), f.neg(&f.mul(&ai, &lk)))?;
        t.put(ODD_RAISE, s, (a - 2, 1, k), t.int(-a * (a - 1)))?;
    } else {
        t.current = "E[a,1,k]";
        t.put(ODD_RAISE, s, (a - 1, 1, dk), f.mul(&ai, &lk))?;
        t.put(ODD_RAISE, s, (a, 0, k), *l2)?;
        t.current = "H_i[a,1,k]";
        for i in 1..=2i64 {
            let h = ODD_CARTAN1 + (i as usize - 1);
            let (na, c) = t.shift(s.0, cfp);
            t.put(h, s, (na, 0, k), c)?;
            if i == 2 {
                t.put(h, s, (a, 1, dk), f.neg(&lk))?;
            }
        }
    }
    t.current = "e[a,j,k]";
    // -a (a - (-1)^j + l2)
    let inner = f.add(&t.int(a - sign(j as i64)), l2);
    t.put(RAISE, s, (a - 1, j, k), f.neg(&f.mul(&ai, &inner)))?;
    if (j, k) == (1, 0) {
        t.put(RAISE, s, (a, 0, 1), t.int(-1))?;
    }
    if (j, k) == (1, 1) {
        t.put(RAISE, s, (a, 0, 0), f.neg(l2))?;
    }
    Ok(())
}

fn second_vanishing(t: &mut Table, s: (u32, u8, u8), l1: &Fe, cfp: &Fe) -> Result<()> {
    let f = t.f;
    let (a, j, k) = (s.0 as i64, s.1, s.2);
    let ai = t.int(a);
    let dk = 1 - k;
    let lk = if k == 0 { f.one() } else { *l1 };
    if j == 0 {
        t.current = "H_i(a,0,k)";
        for i in 1..=2i64 {
            let h = ODD_CARTAN1 + (i as usize - 1);
            t.put(h, s, (a - 1, 1, k), t.int(sign(i) * a))?;
            if i == 1 {
                t.put(h, s, (a, 0, dk), lk)?;
            }
        }
        t.current = "E(a,0,k)";
        t.put(ODD_RAISE, s, (a - 1, 0, dk), f.mul(&ai, &lk))?;
        t.put(ODD_RAISE, s, (a - 2, 1, k), t.int(-a * (a - 1)))?;
    } else {
        t.current = "E(a,1,k)";
        t.put(ODD_RAISE, s, (a - 1, 1, dk), f.neg(&f.mul(&ai, &lk)))?;
        t.put(ODD_RAISE, s, (a, 0, k), *l1)?;
        t.current = "H_i(a,1,k)";
        for i in 1..=2i64 {
            let h = ODD_CARTAN1 + (i as usize - 1);
            let (na, c) = t.shift(s.0, cfp);
            t.put(h, s, (na, 0, k), c)?;
            if i == 1 {
                t.put(h, s, (a, 1, dk), f.neg(&lk))?;
            }
        }
    }
    t.current = "e(a,j,k)";
    // a (l1 - a + (-1)^j)
    let inner = f.add(l1, &t.int(sign(j as i64) - a));
    t.put(RAISE, s, (a - 1, j, k), f.mul(&ai, &inner))?;
    if (j, k) == (1, 0) {
        t.put(RAISE, s, (a, 0, 1), f.one())?;
    }
    if (j, k) == (1, 1) {
        t.put(RAISE, s, (a, 0, 0), *l1)?;
    }
    Ok(())
}

fn generic(t: &mut Table, s: (u32, u8, u8), l1: &Fe, l2: &Fe, mu: &Fe, cfp: &Fe) -> Result<()> {
    let f = t.f;
    let (a, j, k) = (s.0 as i64, s.1, s.2);
    let ai = t.int(a);
    let dk = 1 - k;
    let mu_inv = f.inv(mu).expect("mu nonzero");
    let mu_l2 = f.mul(mu, l2);
    // delta_{k=0} (1 + mu^-1) + delta_{k=1} (l1 + mu l2)
    let mk = if k == 0 {
        f.add(&f.one(), &mu_inv)
    } else {
        f.add(l1, &mu_l2)
    };
    let first = if k == 0 { f.one() } else { *l1 };
    let second = if k == 0 { mu_inv } else { mu_l2 };
    if j == 1 {
        t.current = "E(a,1,k) generic";
        t.put(ODD_RAISE, s, (a - 1, 1, dk), f.neg(&f.mul(&ai, &mk)))?;
        t.put(ODD_RAISE, s, (a, 0, k), f.add(l1, l2))?;
        t.current = "H_i(a,1,k) generic";
        for i in 1..=2i64 {
            let h = ODD_CARTAN1 + (i as usize - 1);
            let (na, c) = t.shift(s.0, cfp);
            t.put(h, s, (na, 0, k), c)?;
            if i == 1 {
                t.put(h, s, (a, 1, dk), f.neg(&first))?;
            } else {
                t.put(h, s, (a, 1, dk), second)?;
            }
        }
    } else {
        t.current = "E(a,0,k) generic";
        t.put(ODD_RAISE, s, (a - 1, 0, dk), f.mul(&ai, &mk))?;
        t.put(ODD_RAISE, s, (a - 2, 1, k), t.int(-a * (a - 1)))?;
        t.current = "H_i(a,0,k) generic";
        for i in 1..=2i64 {
            let h = ODD_CARTAN1 + (i as usize - 1);
            t.put(h, s, (a - 1, 1, k), t.int(sign(i) * a))?;
            if i == 1 {
                t.put(h, s, (a, 0, dk), first)?;
            } else {
                t.put(h, s, (a, 0, dk), f.neg(&second))?;
            }
        }
    }
    t.current = "e(a,j,k) generic";
    if (j, k) == (1, 1) {
        t.put(RAISE, s, (a, 0, 0), f.add(l1, &mu_l2))?;
    }
    if (j, k) == (1, 0) {
        t.put(RAISE, s, (a, 0, 1), f.add(&f.one(), &mu_inv))?;
    }
    // a (l1 - l2 - a + (-1)^j)
    let inner = f.add(&f.sub(l1, l2), &t.int(sign(j as i64) - a));
    t.put(RAISE, s, (a - 1, j, k), f.mul(&ai, &inner))?;
    Ok(())
}

fn antidiagonal(t: &mut Table, s: (u32, u8, u8), l1: &Fe, cfp: &Fe) -> Result<()> {
    let f = t.f;
    let (a, j, k) = (s.0 as i64, s.1, s.2);
    let ai = t.int(a);
    let dk = 1 - k;
    t.current = "e(a,j,k) antidiagonal";
    // a (2 l1 - a + (-1)^j)
    let inner = f.add(&f.scale_int(l1, 2), &t.int(sign(j as i64) - a));
    t.put(RAISE, s, (a - 1, j, k), f.mul(&ai, &inner))?;
    if (j, k) == (1, 0) {
        t.put(RAISE, s, (a, 0, 1), t.int(2))?;
    }
    for i in 1..=2i64 {
        let h = ODD_CARTAN1 + (i as usize - 1);
        if j == 1 {
            t.current = "H_i(a,1,k) antidiagonal";
            let c = if k == 0 { t.int(sign(i)) } else { f.neg(l1) };
            t.put(h, s, (a, 1, dk), c)?;
            let (na, c) = t.shift(s.0, cfp);
            t.put(h, s, (na, 0, k), c)?;
        } else {
            t.current = "H_i(a,0,k) antidiagonal";
            let c = if k == 0 { t.int(sign(i + 1)) } else { *l1 };
            t.put(h, s, (a, 0, dk), c)?;
            t.put(h, s, (a - 1, 1, k), t.int(sign(i) * a))?;
        }
    }
    t.current = "E(a,j,k) antidiagonal";
    if (j, k) != (1, 1) {
        if k == 0 {
            t.put(ODD_RAISE, s, (a - 1, j, 1), t.int(sign(j as i64) * 2 * a))?;
        }
        if j == 0 {
            t.put(ODD_RAISE, s, (a - 2, 1, k), t.int(-a * (a - 1)))?;
        }
    }
    Ok(())
}
