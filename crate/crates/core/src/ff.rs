//! Finite fields `F_p` and `F_{p^k}` with dense coefficient representation.
//!
//! A [`Field`] is a cheap, shareable handle to an immutable context (the
//! characteristic, the degree and the monic defining polynomial). Elements
//! ([`Fe`]) are plain `Copy` data; all arithmetic goes through the handle.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;

/// A field element: coefficients of the residue-class polynomial, constant
/// term first. Coefficients at positions `>= k` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe([u32; MAX_DEGREE]);

impl Fe {
    pub const ZERO: Fe = Fe([0; MAX_DEGREE]);

    pub fn coeff(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&c| c != 0).unwrap_or(0);
        if last == 0 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "{:?}", &self.0[..=last])
        }
    }
}

/// Serializable field header: `{"p":3,"k":6,"poly":[c0,c1,...,1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    pub p: u32,
    pub k: usize,
    pub poly: Vec<u32>,
}

#[derive(Debug)]
struct FieldCtx {
    p: u32,
    k: usize,
    /// Monic defining polynomial, length k + 1, constant term first.
    poly: Vec<u32>,
    order: u64,
}

#[derive(Clone)]
pub struct Field(Arc<FieldCtx>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.poly == other.0.poly)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.0.p, self.0.k, self.0.poly)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Build `F_{p^k}` whose defining polynomial is the lexicographically least
/// monic irreducible of degree `k` (coefficients compared constant term
/// first). For `k = 1` the polynomial is `x`.
pub fn make_extension(p: u32, k: usize) -> Result<Field> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::BadCharacteristic(p as u64));
    }
    if k == 0 || k > MAX_DEGREE {
        return Err(Error::BadDegree { k, max: MAX_DEGREE });
    }
    let order = (p as u64)
        .checked_pow(k as u32)
        .ok_or(Error::FieldTooLarge { p, k })?;
    let poly = if k == 1 {
        vec![0, 1]
    } else {
        least_irreducible(p, k)
    };
    Ok(Field(Arc::new(FieldCtx { p, k, poly, order })))
}

fn least_irreducible(p: u32, k: usize) -> Vec<u32> {
    let total = (p as u64).pow(k as u32);
    for n in 0..total {
        let mut f = vec![0u32; k + 1];
        f[k] = 1;
        let mut rest = n;
        for i in (0..k).rev() {
            f[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

impl Field {
    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.poly
    }

    pub fn describe(&self) -> FieldDescription {
        FieldDescription {
            p: self.0.p,
            k: self.0.k,
            poly: self.0.poly.clone(),
        }
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> Fe {
        let mut e = Fe::ZERO;
        e.0[0] = (n % self.0.p as u64) as u32;
        e
    }

    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.0.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    /// Element with the given coefficients, constant term first. Shorter
    /// vectors are padded with zeros.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Fe> {
        if coeffs.len() > self.0.k {
            return Err(Error::CoefficientLength {
                got: coeffs.len(),
                k: self.0.k,
            });
        }
        let p = self.0.p as i64;
        let mut e = Fe::ZERO;
        for (slot, &c) in e.0.iter_mut().zip(coeffs) {
            *slot = c.rem_euclid(p) as u32;
        }
        Ok(e)
    }

    pub fn coeffs(&self, a: &Fe) -> Vec<u32> {
        a.0[..self.0.k].to_vec()
    }

    /// The element whose base-p digits (least significant first) are its
    /// coefficients. Bijective on `0..order`.
    pub fn element(&self, mut index: u64) -> Fe {
        let p = self.0.p as u64;
        let mut e = Fe::ZERO;
        for slot in e.0.iter_mut().take(self.0.k) {
            *slot = (index % p) as u32;
            index /= p;
        }
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.0.order).map(move |i| self.element(i))
    }

    /// The generator of `F_{p^k}` over `F_p` (the class of x).
    pub fn generator(&self) -> Fe {
        if self.0.k == 1 {
            // x = 0 modulo the convention polynomial x
            return Fe::ZERO;
        }
        let mut e = Fe::ZERO;
        e.0[1] = 1;
        e
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        let mut e = Fe::ZERO;
        for slot in e.0.iter_mut().take(self.0.k) {
            *slot = rng.gen_range(0..self.0.p);
        }
        e
    }

    /// `Some(c)` if `a` lies in the prime field.
    pub fn as_prime(&self, a: &Fe) -> Option<u32> {
        if a.0[1..].iter().all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }

    pub fn is_one(&self, a: &Fe) -> bool {
        a.0[0] == 1 && a.0[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.0.p;
        let mut r = Fe::ZERO;
        for i in 0..self.0.k {
            let s = a.0[i] + b.0[i];
            r.0[i] = if s >= p { s - p } else { s };
        }
        r
    }

    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.0.p;
        let mut r = Fe::ZERO;
        for i in 0..self.0.k {
            r.0[i] = if a.0[i] >= b.0[i] {
                a.0[i] - b.0[i]
            } else {
                a.0[i] + p - b.0[i]
            };
        }
        r
    }

    pub fn neg(&self, a: &Fe) -> Fe {
        self.sub(&Fe::ZERO, a)
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.0.p as u64;
        let k = self.0.k;
        if k == 1 {
            let mut r = Fe::ZERO;
            r.0[0] = ((a.0[0] as u64 * b.0[0] as u64) % p) as u32;
            return r;
        }
        let mut t = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..k {
                t[i + j] = (t[i + j] + a.0[i] as u64 * b.0[j] as u64) % p;
            }
        }
        let f = &self.0.poly;
        for d in (k..2 * k - 1).rev() {
            let c = t[d];
            if c == 0 {
                continue;
            }
            t[d] = 0;
            // x^d = x^(d-k) * x^k and x^k = -(f_0 + ... + f_{k-1} x^{k-1})
            for (j, &fj) in f.iter().enumerate().take(k) {
                let idx = d - k + j;
                t[idx] = (t[idx] + (p - (c * fj as u64) % p)) % p;
            }
        }
        let mut r = Fe::ZERO;
        for i in 0..k {
            r.0[i] = t[i] as u32;
        }
        r
    }

    pub fn scale_int(&self, a: &Fe, n: i64) -> Fe {
        self.mul(a, &self.from_int(n))
    }

    pub fn pow(&self, a: &Fe, mut e: u64) -> Fe {
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn frobenius(&self, a: &Fe) -> Fe {
        self.pow(a, self.0.p as u64)
    }

    pub fn inv(&self, a: &Fe) -> Option<Fe> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, self.0.order - 2))
        }
    }

    pub fn div(&self, a: &Fe, b: &Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Integer-style rendering used in labels and reports: a bare residue for
    /// prime-field elements, a coefficient list otherwise.
    pub fn render(&self, a: &Fe) -> String {
        match self.as_prime(a) {
            Some(c) => c.to_string(),
            None => {
                let parts: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
                format!("[{}]", parts.join(";"))
            }
        }
    }

    /// Matrix of the F_p-linear map `x -> x^p - x` in the monomial basis
    /// (column i is the image of x^i).
    fn artin_schreier_matrix(&self) -> Vec<Vec<u32>> {
        let k = self.0.k;
        let mut m = vec![vec![0u32; k]; k];
        for i in 0..k {
            let mut xi = Fe::ZERO;
            xi.0[i] = 1;
            let img = self.sub(&self.frobenius(&xi), &xi);
            for (r, row) in m.iter_mut().enumerate() {
                row[i] = img.0[r];
            }
        }
        m
    }
}

/// All `x` with `x^p - x = c`, sorted. Either empty or exactly `p` roots,
/// which differ pairwise by elements of `F_p`.
pub fn artin_schreier_roots(field: &Field, c: &Fe) -> Vec<Fe> {
    let p = field.p();
    let k = field.degree();
    let m = field.artin_schreier_matrix();
    let rhs: Vec<u32> = (0..k).map(|i| c.coeff(i)).collect();
    let Some(particular) = poly::solve_mod_p(&m, &rhs, p) else {
        return Vec::new();
    };
    let x0 = field.from_coeffs(&particular.iter().map(|&v| v as i64).collect::<Vec<_>>())
        .expect("solution has k coordinates");
    let mut roots: Vec<Fe> = (0..p as u64)
        .map(|t| field.add(&x0, &field.from_u64(t)))
        .collect();
    roots.sort();
    roots
}

/// Square roots of `s`: `{0}` for zero, `{r, -r}` for a nonzero square,
/// empty otherwise. Sorted.
pub fn square_roots(field: &Field, s: &Fe) -> Vec<Fe> {
    if s.is_zero() {
        return vec![Fe::ZERO];
    }
    let q = field.order();
    if !field.is_one(&field.pow(s, (q - 1) / 2)) {
        return Vec::new();
    }
    let r = if q % 4 == 3 {
        field.pow(s, (q + 1) / 4)
    } else {
        tonelli_shanks(field, s)
    };
    assert_eq!(field.mul(&r, &r), *s, "square root failed verification");
    let mut out = vec![r, field.neg(&r)];
    out.sort();
    out
}

fn tonelli_shanks(field: &Field, s: &Fe) -> Fe {
    let q = field.order();
    let mut m = q - 1;
    let mut e = 0u32;
    while m % 2 == 0 {
        m /= 2;
        e += 1;
    }
    let z = (1..q)
        .map(|i| field.element(i))
        .find(|z| !field.is_one(&field.pow(z, (q - 1) / 2)))
        .expect("odd field has a non-residue");
    let mut c = field.pow(&z, m);
    let mut x = field.pow(s, (m + 1) / 2);
    let mut t = field.pow(s, m);
    let mut ord = e;
    while !field.is_one(&t) {
        let mut i = 0;
        let mut t2 = t;
        while !field.is_one(&t2) {
            t2 = field.mul(&t2, &t2);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(ord - i - 1) {
            b = field.mul(&b, &b);
        }
        x = field.mul(&x, &b);
        c = field.mul(&b, &b);
        t = field.mul(&t, &c);
        ord = i;
    }
    x
}

/// Dense polynomials over F_p, constant term first. Only what field
/// construction and root finding need.
mod poly {
    fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }

    fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        let f = trim(f.to_vec());
        let df = f.len() - 1;
        let pp = p as u64;
        let lead_inv = inv_mod(f[df], p) as u64;
        let mut a: Vec<u64> = a.iter().map(|&v| v as u64).collect();
        for da in (df..a.len()).rev() {
            let c = a[da] * lead_inv % pp;
            if c == 0 {
                continue;
            }
            for (j, &fj) in f.iter().enumerate() {
                let idx = da - df + j;
                a[idx] = (a[idx] + pp - c * fj as u64 % pp) % pp;
            }
        }
        a.truncate(df.max(1));
        trim(a.into_iter().map(|v| v as u32).collect())
    }

    fn mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        let mut t = vec![0u64; a.len() + b.len()];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                t[i + j] = (t[i + j] + ai as u64 * bj as u64) % p as u64;
            }
        }
        rem(&t.into_iter().map(|v| v as u32).collect::<Vec<_>>(), f, p)
    }

    fn pow_mod(a: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut base = rem(a, f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, f, p);
            }
            base = mul_mod(&base, &base, f, p);
            e >>= 1;
        }
        acc
    }

    fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !(b.len() == 1 && b[0] == 0) {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Distinct-degree test: `f` of degree k is irreducible iff
    /// gcd(x^(p^d) - x, f) = 1 for every d <= k/2.
    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let k = f.len() - 1;
        let x = vec![0u32, 1];
        let mut frob = x.clone();
        for _ in 1..=k / 2 {
            frob = pow_mod(&frob, p as u64, f, p);
            let mut h = frob.clone();
            h.resize(h.len().max(2), 0);
            h[1] = (h[1] + p - 1) % p;
            let g = gcd(f, &trim(h), p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }

    /// Solve `m x = rhs` over F_p; `None` if inconsistent. Free variables
    /// are set to zero.
    pub(super) fn solve_mod_p(m: &[Vec<u32>], rhs: &[u32], p: u32) -> Option<Vec<u32>> {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let pp = p as u64;
        let mut a: Vec<Vec<u64>> = m
            .iter()
            .zip(rhs)
            .map(|(row, &r)| row.iter().map(|&v| v as u64).chain([r as u64]).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
                continue;
            };
            a.swap(r, pr);
            let inv = inv_mod(a[r][c] as u32, p) as u64;
            for v in a[r].iter_mut() {
                *v = *v * inv % pp;
            }
            for i in 0..rows {
                if i != r && a[i][c] != 0 {
                    let factor = a[i][c];
                    for j in 0..=cols {
                        a[i][j] = (a[i][j] + pp - factor * a[r][j] % pp) % pp;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        if a[r..].iter().any(|row| row[cols] != 0) {
            return None;
        }
        let mut x = vec![0u32; cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = a[i][cols] as u32;
        }
        Some(x)
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn irreducibility_small_cases() {
            // x^2 + 1 over F_3 is irreducible, x^2 + 2 = (x+1)(x+2) is not
            assert!(is_irreducible(&[1, 0, 1], 3));
            assert!(!is_irreducible(&[2, 0, 1], 3));
            // x^3 - x - 1 is the Artin-Schreier polynomial over F_3
            assert!(is_irreducible(&[2, 2, 0, 1], 3));
            // x^4 + 1 = (x^2+x+2)(x^2+2x+2) over F_3
            assert!(!is_irreducible(&[1, 0, 0, 0, 1], 3));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_force_irreducible_quadratic(p: u32) -> Vec<u32> {
        for c0 in 0..p {
            for c1 in 0..p {
                let has_root =
                    (0..p).any(|x| (x * x + c1 * x + c0) % p == 0);
                if !has_root {
                    return vec![c0, c1, 1];
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn prime_field_is_mod_p() {
        let f = make_extension(3, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 3);
        let two = f.from_u64(2);
        assert_eq!(f.mul(&two, &two), f.one());
        assert_eq!(f.add(&two, &two), f.one());
    }

    #[test]
    fn least_quadratic_matches_scan() {
        for p in [3, 5, 7, 11] {
            let f = make_extension(p, 2).unwrap();
            assert_eq!(f.modulus(), brute_force_irreducible_quadratic(p).as_slice());
        }
        assert_eq!(make_extension(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn degree_ten_over_f5_is_irreducible() {
        let f = make_extension(5, 10).unwrap();
        let modulus = f.modulus().to_vec();
        assert!(poly::is_irreducible(&modulus, 5));
        // the class of x has degree exactly 10: x^(5^d) != x for d | 10, d < 10
        let x = f.generator();
        for d in [1u32, 2, 5] {
            let xd = f.pow(&x, 5u64.pow(d));
            assert_ne!(xd, x, "x^(5^{d}) = x");
        }
        assert_eq!(f.pow(&x, 5u64.pow(10)), x);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(make_extension(2, 1), Err(Error::BadCharacteristic(2))));
        assert!(matches!(make_extension(9, 1), Err(Error::BadCharacteristic(9))));
        assert!(matches!(make_extension(3, 0), Err(Error::BadDegree { .. })));
        assert!(make_extension(1, 1).is_err());
    }

    #[test]
    fn determinism() {
        let a = make_extension(7, 4).unwrap();
        let b = make_extension(7, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a, b);
    }

    #[test]
    fn artin_schreier_prime_field() {
        let f = make_extension(5, 1).unwrap();
        let roots = artin_schreier_roots(&f, &f.zero());
        assert_eq!(roots, (0..5).map(|i| f.from_u64(i)).collect::<Vec<_>>());
        let f3 = make_extension(3, 1).unwrap();
        // exhaustive: x^3 - x = 0 for all x in F_3
        for x in f3.elements() {
            assert!(f3.sub(&f3.frobenius(&x), &x).is_zero());
        }
        assert!(artin_schreier_roots(&f3, &f3.one()).is_empty());
    }

    #[test]
    fn artin_schreier_in_f27() {
        let f = make_extension(3, 3).unwrap();
        let c = f.one();
        let roots = artin_schreier_roots(&f, &c);
        assert_eq!(roots.len(), 3);
        let brute: Vec<Fe> = f
            .elements()
            .filter(|x| f.sub(&f.frobenius(x), x) == c)
            .collect();
        let mut brute = brute;
        brute.sort();
        assert_eq!(roots, brute);
        for a in &roots {
            for b in &roots {
                assert!(f.as_prime(&f.sub(a, b)).is_some());
            }
        }
    }

    #[test]
    fn square_roots_examples() {
        let f3 = make_extension(3, 1).unwrap();
        assert_eq!(square_roots(&f3, &f3.zero()), vec![Fe::ZERO]);
        assert!(square_roots(&f3, &f3.from_int(-1)).is_empty());

        let f9 = make_extension(3, 2).unwrap();
        let minus_one = f9.from_int(-1);
        let roots = square_roots(&f9, &minus_one);
        let brute: Vec<Fe> = f9.elements().filter(|r| f9.mul(r, r) == minus_one).collect();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots, brute);

        let f7 = make_extension(7, 1).unwrap();
        assert_eq!(
            square_roots(&f7, &f7.from_u64(4)),
            vec![f7.from_u64(2), f7.from_u64(5)]
        );
    }

    #[test]
    fn tonelli_shanks_path() {
        // q = 25 and q = 13 are 1 mod 4, so the exponent shortcut does not apply
        for (p, k) in [(5, 2), (13, 1), (3, 4), (17, 1)] {
            let f = make_extension(p, k).unwrap();
            let mut squares = 0;
            for s in f.elements() {
                let roots = square_roots(&f, &s);
                for r in &roots {
                    assert_eq!(f.mul(r, r), s);
                }
                if !s.is_zero() && !roots.is_empty() {
                    squares += 1;
                }
            }
            assert_eq!(squares as u64, (f.order() - 1) / 2);
        }
    }

    #[test]
    fn field_axioms_on_random_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, k) in [(3, 1), (3, 6), (5, 10), (7, 2), (7, 7)] {
            let f = make_extension(p, k).unwrap();
            for _ in 0..1000 {
                let a = f.random(&mut rng);
                let b = f.random(&mut rng);
                let c = f.random(&mut rng);
                assert_eq!(
                    f.mul(&a, &f.add(&b, &c)),
                    f.add(&f.mul(&a, &b), &f.mul(&a, &c))
                );
                assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
                assert!(f.add(&a, &f.neg(&a)).is_zero());
                if let Some(ai) = f.inv(&a) {
                    assert!(f.is_one(&f.mul(&a, &ai)));
                }
                assert_eq!(
                    f.frobenius(&f.add(&a, &b)),
                    f.add(&f.frobenius(&a), &f.frobenius(&b))
                );
                assert_eq!(
                    f.frobenius(&f.mul(&a, &b)),
                    f.mul(&f.frobenius(&a), &f.frobenius(&b))
                );
            }
        }
    }
}
