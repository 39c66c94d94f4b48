//! Parsing of p-characters and weights, and enumeration of grid points.

use std::collections::BTreeMap;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use qcoh_core::ff::make_extension;
use qcoh_core::repmod::{field_for_lambda_set, field_for_prime_weight, PChar, Weight};
use qcoh_core::{build_q2, Fe, Field, SuperAlgebra};

/// One `(chi, lambda)` pair together with the field it is computed over.
#[derive(Clone)]
pub struct Point {
    pub p: u32,
    pub chi: PChar,
    pub field: Field,
    pub alg: Arc<SuperAlgebra>,
    pub lam: Weight,
}

impl Point {
    pub fn lambda_text(&self) -> (String, String) {
        (self.field.render(&self.lam.l1), self.field.render(&self.lam.l2))
    }

    pub fn label(&self) -> String {
        let (a, b) = self.lambda_text();
        format!("({a},{b})")
    }

    /// File-name-safe tag.
    pub fn slug(&self) -> String {
        let (a, b) = self.lambda_text();
        let raw = format!("{}-{a}_{b}", self.chi);
        raw.chars()
            .map(|c| match c {
                'a'..='z' | '0'..='9' | '-' | '_' => c,
                _ => '.',
            })
            .collect()
    }

    fn key(&self) -> (PChar, Vec<u32>, Vec<u32>) {
        let trimmed = |e: &Fe| {
            let mut c = self.field.coeffs(e);
            while c.len() > 1 && c.last() == Some(&0) {
                c.pop();
            }
            c
        };
        (self.chi, trimmed(&self.lam.l1), trimmed(&self.lam.l2))
    }
}

/// Splits a list like `zero,semisimple:1,0,mixed:1`: bare integers continue
/// the parameters of the previous entry.
pub fn parse_chi_list(s: &str) -> Result<Vec<PChar>> {
    let mut items: Vec<String> = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let numeric = tok.trim_start_matches('-').chars().all(|c| c.is_ascii_digit());
        match items.last_mut() {
            Some(prev) if numeric && prev.contains(':') => {
                prev.push(',');
                prev.push_str(tok);
            }
            _ => items.push(tok.to_string()),
        }
    }
    items
        .iter()
        .map(|t| t.parse::<PChar>().map_err(anyhow::Error::from))
        .collect()
}

fn algebra_cache() -> impl FnMut(&Field) -> Result<Arc<SuperAlgebra>> {
    let mut cache: BTreeMap<usize, Arc<SuperAlgebra>> = BTreeMap::new();
    move |f: &Field| {
        if let Some(a) = cache.get(&f.degree()) {
            return Ok(a.clone());
        }
        let a = Arc::new(build_q2(f)?);
        cache.insert(f.degree(), a.clone());
        Ok(a)
    }
}

/// All of `Lambda_chi` for each character, in (character, l1, l2) order.
/// Residue weights each get the smallest field their table needs; other
/// characters share one field for the whole set.
pub fn grid(p: u32, chis: &[PChar]) -> Result<Vec<Point>> {
    let mut alg_for = algebra_cache();
    let mut out = Vec::new();
    for &chi in chis {
        chi.validate(p)?;
        if chi.needs_artin_schreier(p) {
            let (field, lams) = field_for_lambda_set(p, &chi)?;
            let alg = alg_for(&field)?;
            for lam in lams {
                out.push(Point { p, chi, field: field.clone(), alg: alg.clone(), lam });
            }
        } else {
            for l1 in 0..p as i64 {
                for l2 in 0..p as i64 {
                    let (field, lam) = field_for_prime_weight(p, &chi, l1, l2)?;
                    let alg = alg_for(&field)?;
                    out.push(Point { p, chi, field, alg, lam });
                }
            }
        }
    }
    out.sort_by_key(Point::key);
    Ok(out)
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_component(field: &Field, s: &str) -> Result<Fe> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let coeffs = inner
            .split(';')
            .map(|c| c.trim().parse::<i64>().with_context(|| format!("bad coefficient `{c}`")))
            .collect::<Result<Vec<_>>>()?;
        Ok(field.from_coeffs(&coeffs)?)
    } else {
        let n: i64 = s.parse().with_context(|| format!("bad weight component `{s}`"))?;
        Ok(field.from_int(n))
    }
}

/// A single explicit weight `L1,L2`; components are residues or coefficient
/// vectors `[c0;c1;...]` over the field the character needs.
pub fn explicit_point(p: u32, chi: PChar, spec: &str) -> Result<Point> {
    chi.validate(p)?;
    let parts = split_top_level(spec);
    let [a, b] = parts.as_slice() else {
        bail!("weight must have two components, got `{spec}`");
    };
    let mut alg_for = algebra_cache();
    let (field, lam) = if chi.needs_artin_schreier(p) {
        let field = field_for_lambda_set(p, &chi)?.0;
        let lam = Weight::new(parse_component(&field, a)?, parse_component(&field, b)?);
        (field, lam)
    } else {
        let fp = make_extension(p, 1)?;
        let residue = |s: &str| -> Result<i64> {
            let e = parse_component(&fp, s)?;
            Ok(fp.as_prime(&e).expect("prime field element") as i64)
        };
        field_for_prime_weight(p, &chi, residue(a)?, residue(b)?)?
    };
    if !lam.in_lambda_chi(&field, &chi) {
        return Err(anyhow!(
            "weight {} is not in Lambda_chi for chi = {chi}",
            lam.render(&field)
        ));
    }
    let alg = alg_for(&field)?;
    Ok(Point { p, chi, field, alg, lam })
}

/// `auto` or an explicit weight.
pub fn points_for(p: u32, chi: PChar, lambda: &str) -> Result<Vec<Point>> {
    if lambda.trim() == "auto" {
        grid(p, &[chi])
    } else {
        Ok(vec![explicit_point(p, chi, lambda)?])
    }
}
