//! Closed-form action on the simple quotient of an antidiagonal Verma module
//! with residue weight, compared entrywise with the induced matrices.

use serde::Serialize;

use super::{BasisLabel, GModule, VermaCase};
use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::qsuper::gen::*;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaMismatch {
    pub formula: &'static str,
    pub generator: String,
    pub source: BasisLabel,
    pub expected: Vec<Vec<u32>>,
    pub computed: Vec<Vec<u32>>,
}

type Terms = Vec<(i64, (i64, u8, u8))>;

fn d(b: bool) -> i64 {
    b as i64
}

/// Checks every printed closed-form entry on the printed quotient basis.
/// Requires `l` to be the simple quotient of an antidiagonal Verma module
/// with nonzero residue `l1` and zero or nilpotent `chi`.
pub fn check_simple_formulas(l: &GModule) -> Result<Vec<FormulaMismatch>> {
    let f = l.field().clone();
    let p = f.p() as i64;
    let bad = |why: &str| Error::Invalid(format!("closed-form check needs {why}"));
    if l.case() != Some(VermaCase::Antidiagonal) || l.quotient_data().is_none() {
        return Err(bad("a quotient of an antidiagonal Verma module"));
    }
    let l1 = f.as_prime(&l.lam().l1).ok_or_else(|| bad("a residue weight"))? as i64;
    let chi = l.pchar();
    let zero = chi.is_zero_in(&f);
    if !zero && !chi.is_nilpotent_in(&f) {
        return Err(bad("a zero or nilpotent p-character"));
    }
    let nz = d(!zero);
    let z = d(zero);
    // chi(f)^p
    let cfp = nz;
    let u = (2 * l1).rem_euclid(p);

    let mut sources: Vec<(i64, u8)> = Vec::new();
    if zero {
        sources.extend((0..=u).map(|a| (a, 0)));
        sources.extend((0..u).map(|a| (a, 1)));
    } else {
        for a in 0..p {
            sources.push((a, 0));
            sources.push((a, 1));
        }
    }

    let mut checks: Vec<(&'static str, usize, (i64, u8, u8), Terms)> = Vec::new();
    for i in 1..=2i64 {
        let h = ODD_CARTAN1 + (i as usize - 1);
        checks.push(("H(0,0,1)", h, (0, 0, 1), vec![(l1, (0, 0, 0))]));
    }
    for &(a, j) in &sources {
        let s = (a, j, 0u8);
        let sj = if j == 0 { 1 } else { -1 };

        let c = d(j == 0) * (z * d(a <= u - 1) + nz);
        checks.push(("F(a,j,0)", ODD_LOWER, s, vec![(c, (a, 1, 0))]));

        for i in 1..=2i64 {
            let h = ODD_CARTAN1 + (i as usize - 1);
            let si = if i % 2 == 0 { 1 } else { -1 };
            if j == 1 {
                let c1 = (z * d(a <= u - 1) + nz) * d(a != p - 1);
                let c2 = nz * d(a == p - 1) * cfp;
                checks.push(("H(a,1,0)", h, s, vec![(c1, (a + 1, 0, 0)), (c2, (0, 0, 0))]));
            } else {
                let c1 = (z * d((1..=u).contains(&a)) + nz) * si * (a - l1);
                let c2 = d(a == 0 && zero) * -si;
                checks.push(("H(a,0,0)", h, s, vec![(c1, (a - 1, 1, 0)), (c2, (0, 0, 1))]));
            }
        }

        let c1 = d(j == 0) * (z * d((2..=u).contains(&a)) + nz) * a * (2 * l1 - a + 1);
        let c2 = d(j == 0 && zero && a == 1) * 2;
        checks.push(("E(a,j,0)", ODD_RAISE, s, vec![(c1, (a - 2, 1, 0)), (c2, (0, 0, 1))]));

        let c1 = d(a != p - 1) * (z * d(a < u - 1) + d(j == 0) * z * d(a == u - 1));
        let c2 = nz * d(a != p - 1);
        let c3 = d(a == p - 1) * nz * cfp;
        checks.push((
            "f(a,j,0)",
            LOWER,
            s,
            vec![(c1, (a + 1, j, 0)), (c2, (a + 1, j, 0)), (c3, (0, 0, 0))],
        ));

        let base = a * (2 * l1 - a + sj);
        let c1 = base * (d(zero && a == u) + nz);
        let c2 = base * z * d(a <= u - 1);
        let c3 = d(zero && j == 1) * 2 * d(a != 0) * l1;
        let c4 = d(zero && j == 1) * 2 * d(a == 0);
        let c5 = 2 * nz * l1;
        checks.push((
            "e(a,j,0)",
            RAISE,
            s,
            vec![
                (c1, (a - 1, j, 0)),
                (c2, (a - 1, j, 0)),
                (c3, (a - 1, 1, 0)),
                (c4, (0, 0, 1)),
                (c5, (a - 1, 1, 0)),
            ],
        ));
    }

    let vec_of = |(a, j, k): (i64, u8, u8)| -> Vec<Fe> {
        l.vector_of(&BasisLabel::round(a.rem_euclid(p) as u32, j, k))
            .expect("label of the parent basis")
    };
    let mut out = Vec::new();
    for (formula, x, src, terms) in checks {
        let mut expected = vec![Fe::ZERO; l.dim()];
        for (c, lab) in terms {
            if c.rem_euclid(p) == 0 {
                continue;
            }
            let c = f.from_int(c);
            for (e, v) in expected.iter_mut().zip(vec_of(lab)) {
                *e = f.add(e, &f.mul(&c, &v));
            }
        }
        let computed = l.action(x).mul_vec(&vec_of(src));
        if computed != expected {
            out.push(FormulaMismatch {
                formula,
                generator: l.alg().name(x).to_string(),
                source: BasisLabel::round(src.0 as u32, src.1, src.2),
                expected: expected.iter().map(|e| f.coeffs(e)).collect(),
                computed: computed.iter().map(|e| f.coeffs(e)).collect(),
            });
        }
    }
    Ok(out)
}
