//! Lie superalgebras given by structure constants, and q(2) built from its
//! 4x4 matrix realization.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::ff::{Fe, Field, FieldDescription};
use crate::grading::{Parity, Sdim};

/// Positions of the q(2) generators in the fixed basis order
/// `[h1, h2, e, f, H1, H2, E, F]`.
pub mod gen {
    pub const CARTAN1: usize = 0;
    pub const CARTAN2: usize = 1;
    pub const RAISE: usize = 2;
    pub const LOWER: usize = 3;
    pub const ODD_CARTAN1: usize = 4;
    pub const ODD_CARTAN2: usize = 5;
    pub const ODD_RAISE: usize = 6;
    pub const ODD_LOWER: usize = 7;

    pub const NAMES: [&str; 8] = ["h1", "h2", "e", "f", "H1", "H2", "E", "F"];

    pub fn index(name: &str) -> Option<usize> {
        NAMES.iter().position(|n| *n == name)
    }
}

pub type WeightLabel = (i64, i64);

#[derive(Clone)]
pub struct SuperAlgebra {
    field: Field,
    names: Vec<String>,
    parities: Vec<Parity>,
    weights: Vec<WeightLabel>,
    // structure[x][y] = coordinates of [x_x, x_y]
    structure: Vec<Vec<Vec<Fe>>>,
    matrices: Option<Vec<Matrix>>,
    p_map: Vec<Option<Vec<Fe>>>,
}

impl std::fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SuperAlgebra({:?} over {:?})", self.names, self.field)
    }
}

fn unit_matrix(field: &Field, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(field, 4, 4);
    m.set(i - 1, j - 1, field.one());
    m
}

fn q2_matrices(field: &Field) -> Vec<Matrix> {
    let u = |a: usize, b: usize, c: usize, d: usize| {
        unit_matrix(field, a, b).add(&unit_matrix(field, c, d))
    };
    vec![
        u(1, 1, 3, 3),
        u(2, 2, 4, 4),
        u(1, 2, 3, 4),
        u(2, 1, 4, 3),
        u(1, 3, 3, 1),
        u(2, 4, 4, 2),
        u(1, 4, 3, 2),
        u(2, 3, 4, 1),
    ]
}

fn supercommutator(a: &Matrix, pa: Parity, b: &Matrix, pb: Parity) -> Matrix {
    let ab = a.mul(b);
    let ba = b.mul(a);
    if pa.sign_flip(pb) {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    }
}

/// Coordinates of a matrix in the span of `basis`, if it lies there.
fn expand(field: &Field, basis: &[Matrix], m: &Matrix) -> Option<Vec<Fe>> {
    let n = m.rows() * m.cols();
    let mut coeffs = Matrix::zeros(field, n, basis.len());
    for (c, b) in basis.iter().enumerate() {
        for r in 0..b.rows() {
            for s in 0..b.cols() {
                coeffs.set(r * b.cols() + s, c, b.get(r, s));
            }
        }
    }
    let target: Vec<Fe> = (0..m.rows())
        .flat_map(|r| (0..m.cols()).map(move |s| (r, s)))
        .map(|(r, s)| m.get(r, s))
        .collect();
    coeffs.solve(&target)
}

pub fn build_q2(field: &Field) -> Result<SuperAlgebra> {
    let mats = q2_matrices(field);
    let parities = [0u8, 0, 0, 0, 1, 1, 1, 1].map(Parity::from_bit).to_vec();
    let names: Vec<String> = gen::NAMES.iter().map(|s| s.to_string()).collect();
    let mut structure = vec![vec![Vec::new(); 8]; 8];
    for x in 0..8 {
        for y in 0..8 {
            let br = supercommutator(&mats[x], parities[x], &mats[y], parities[y]);
            structure[x][y] = expand(field, &mats, &br).ok_or_else(|| Error::BracketOutsideSpan {
                x: names[x].clone(),
                y: names[y].clone(),
            })?;
        }
    }
    let p = field.p() as u64;
    let mut p_map = vec![None; 8];
    for x in 0..8 {
        if parities[x] == Parity::Even {
            let pw = mats[x].pow(p);
            p_map[x] = Some(expand(field, &mats, &pw).ok_or_else(|| {
                Error::Invalid(format!("p-th power of {} leaves the algebra", names[x]))
            })?);
        }
    }
    let weights = vec![(0, 0), (0, 0), (1, -1), (-1, 1), (0, 0), (0, 0), (1, -1), (-1, 1)];
    Ok(SuperAlgebra {
        field: field.clone(),
        names,
        parities,
        weights,
        structure,
        matrices: Some(mats),
        p_map,
    })
}

impl SuperAlgebra {
    /// An algebra given directly by structure constants; nothing is
    /// validated. Used for toy algebras in tests.
    pub fn from_structure_constants(
        field: &Field,
        names: Vec<String>,
        parities: Vec<Parity>,
        weights: Vec<WeightLabel>,
        structure: Vec<Vec<Vec<Fe>>>,
    ) -> Self {
        let n = names.len();
        assert!(parities.len() == n && weights.len() == n && structure.len() == n);
        SuperAlgebra {
            field: field.clone(),
            names,
            parities,
            weights,
            structure,
            matrices: None,
            p_map: vec![None; n],
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn weight(&self, i: usize) -> WeightLabel {
        self.weights[i]
    }

    pub fn weights(&self) -> &[WeightLabel] {
        &self.weights
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Fe] {
        &self.structure[i][j]
    }

    pub fn set_structure_constant(&mut self, x: usize, y: usize, z: usize, v: Fe) {
        self.structure[x][y][z] = v;
    }

    pub fn matrices(&self) -> Option<&[Matrix]> {
        self.matrices.as_deref()
    }

    /// Bilinear extension of the bracket to coordinate vectors. Inputs need
    /// not be homogeneous; each basis pair contributes its own sign.
    pub fn bracket(&self, x: &[Fe], y: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec![Fe::ZERO; n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = f.mul(&x[i], &y[j]);
                for (z, s) in self.structure[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[z] = f.add(&out[z], &f.mul(&c, s));
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<Fe> {
        crate::exactla::unit(&self.field, self.dim(), i)
    }

    /// First pair violating `c[y][x] = -(-1)^{|x||y|} c[x][y]`.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        let f = &self.field;
        for x in 0..self.dim() {
            for y in 0..self.dim() {
                let flip = self.parities[x].sign_flip(self.parities[y]);
                let ok = self.structure[x][y].iter().zip(&self.structure[y][x]).all(|(a, b)| {
                    let expected = if flip { *a } else { f.neg(a) };
                    expected == *b
                });
                if !ok {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// First ordered triple violating
    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0`.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let f = &self.field;
        let n = self.dim();
        let signed = |v: Vec<Fe>, a: Parity, b: Parity| -> Vec<Fe> {
            if a.sign_flip(b) {
                v.iter().map(|c| f.neg(c)).collect()
            } else {
                v
            }
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (px, py, pz) = (self.parities[x], self.parities[y], self.parities[z]);
                    let t1 = signed(self.bracket(&self.unit(x), &self.structure[y][z]), px, pz);
                    let t2 = signed(self.bracket(&self.unit(y), &self.structure[z][x]), py, px);
                    let t3 = signed(self.bracket(&self.unit(z), &self.structure[x][y]), pz, py);
                    let zero = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .all(|((a, b), c)| f.add(&f.add(a, b), c).is_zero());
                    if !zero {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn validate_super_jacobi(&self) -> Result<()> {
        match self.jacobi_violation() {
            None => Ok(()),
            Some((x, y, z)) => Err(Error::Jacobi(
                self.names[x].clone(),
                self.names[y].clone(),
                self.names[z].clone(),
            )),
        }
    }

    /// `[g_a, g_b] ⊆ g_{a+b}` on basis pairs.
    pub fn weight_violation(&self) -> Option<(usize, usize)> {
        for x in 0..self.dim() {
            for y in 0..self.dim() {
                let (a, b) = (self.weights[x], self.weights[y]);
                let target = (a.0 + b.0, a.1 + b.1);
                let bad = self.structure[x][y]
                    .iter()
                    .enumerate()
                    .any(|(z, c)| !c.is_zero() && self.weights[z] != target);
                if bad {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Image of an even element under the p-map, via the matrix realization.
    pub fn p_power(&self, x: &[Fe]) -> Result<Vec<Fe>> {
        let mats = self
            .matrices
            .as_ref()
            .ok_or_else(|| Error::Invalid("p-map needs a matrix realization".into()))?;
        let odd_part = x
            .iter()
            .zip(&self.parities)
            .any(|(c, p)| p.is_odd() && !c.is_zero());
        if odd_part {
            return Err(Error::Invalid("p-map is defined on the even part only".into()));
        }
        let f = &self.field;
        let mut m = Matrix::zeros(f, 4, 4);
        for (c, b) in x.iter().zip(mats) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        let pw = m.pow(f.p() as u64);
        expand(f, mats, &pw).ok_or_else(|| Error::Invalid("p-th power leaves the algebra".into()))
    }

    pub fn p_map_basis(&self, i: usize) -> Option<&[Fe]> {
        self.p_map[i].as_deref()
    }

    /// Matrix of `ad x` in the algebra basis (column j = `[x, x_j]`).
    pub fn ad(&self, x: &[Fe]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            let col = self.bracket(x, &self.unit(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// First even basis element with `ad(x^[p]) != ad(x)^p`.
    pub fn restrictedness_violation(&self) -> Option<usize> {
        let p = self.field.p() as u64;
        (0..self.dim()).find(|&x| match &self.p_map[x] {
            Some(px) => self.ad(px) != self.ad(&self.unit(x)).pow(p),
            None => false,
        })
    }

    /// Superdimension of `g/[g,g]`.
    pub fn abelianization_sdim(&self) -> Sdim {
        let n = self.dim();
        let mut out = Sdim::ZERO;
        for parity in Parity::BOTH {
            let mut vs = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    if self.parities[x] + self.parities[y] == parity {
                        vs.push(self.structure[x][y].clone());
                    }
                }
            }
            let derived = Subspace::span(&self.field, n, vs).dim();
            let count = self.parities.iter().filter(|&&p| p == parity).count();
            out.set(parity, count - derived);
        }
        out
    }

    /// The subalgebra spanned by the given basis elements, if the span is
    /// closed under the bracket.
    pub fn subalgebra(&self, indices: &[usize]) -> Result<SuperAlgebra> {
        let mut structure = Vec::with_capacity(indices.len());
        for &x in indices {
            let mut row = Vec::with_capacity(indices.len());
            for &y in indices {
                let full = &self.structure[x][y];
                let outside = full
                    .iter()
                    .enumerate()
                    .any(|(z, c)| !c.is_zero() && !indices.contains(&z));
                if outside {
                    return Err(Error::BracketOutsideSpan {
                        x: self.names[x].clone(),
                        y: self.names[y].clone(),
                    });
                }
                row.push(indices.iter().map(|&z| full[z]).collect());
            }
            structure.push(row);
        }
        Ok(SuperAlgebra::from_structure_constants(
            &self.field,
            indices.iter().map(|&i| self.names[i].clone()).collect(),
            indices.iter().map(|&i| self.parities[i]).collect(),
            indices.iter().map(|&i| self.weights[i]).collect(),
            structure,
        ))
    }

    pub fn to_json(&self) -> AlgebraJson {
        let f = &self.field;
        let mut brackets = Vec::new();
        for x in 0..self.dim() {
            for y in 0..self.dim() {
                let terms: Vec<(String, Vec<u32>)> = self.structure[x][y]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(z, c)| (self.names[z].clone(), f.coeffs(c)))
                    .collect();
                if !terms.is_empty() {
                    brackets.push(BracketJson {
                        x: self.names[x].clone(),
                        y: self.names[y].clone(),
                        terms,
                    });
                }
            }
        }
        let p_map = (0..self.dim())
            .filter_map(|x| {
                self.p_map[x].as_ref().map(|v| {
                    let terms = v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(z, c)| (self.names[z].clone(), f.coeffs(c)))
                        .collect();
                    (self.names[x].clone(), terms)
                })
            })
            .collect();
        AlgebraJson {
            field: f.describe(),
            basis: self.names.clone(),
            parities: self.parities.iter().map(|p| p.bit()).collect(),
            weights: self.weights.clone(),
            brackets,
            p_map,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BracketJson {
    pub x: String,
    pub y: String,
    pub terms: Vec<(String, Vec<u32>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraJson {
    pub field: FieldDescription,
    pub basis: Vec<String>,
    pub parities: Vec<u8>,
    pub weights: Vec<WeightLabel>,
    pub brackets: Vec<BracketJson>,
    pub p_map: Vec<(String, Vec<(String, Vec<u32>)>)>,
}

#[cfg(test)]
mod tests {
    use super::gen::*;
    use super::*;
    use crate::ff::make_extension;

    fn combo(f: &Field, terms: &[(usize, i64)]) -> Vec<Fe> {
        let mut v = vec![Fe::ZERO; 8];
        for &(i, c) in terms {
            v[i] = f.add(&v[i], &f.from_int(c));
        }
        v
    }

    #[test]
    fn printed_brackets() {
        for p in [3, 5, 7] {
            let f = make_extension(p, 1).unwrap();
            let g = build_q2(&f).unwrap();
            let br = |x, y| g.bracket_basis(x, y).to_vec();
            assert_eq!(br(RAISE, LOWER), combo(&f, &[(CARTAN1, 1), (CARTAN2, -1)]));
            assert_eq!(br(ODD_RAISE, ODD_LOWER), combo(&f, &[(CARTAN1, 1), (CARTAN2, 1)]));
            assert_eq!(br(ODD_CARTAN1, ODD_CARTAN1), combo(&f, &[(CARTAN1, 2)]));
            assert_eq!(br(ODD_CARTAN2, ODD_CARTAN2), combo(&f, &[(CARTAN2, 2)]));
            assert_eq!(br(CARTAN1, CARTAN2), combo(&f, &[]));
            assert_eq!(
                br(LOWER, ODD_RAISE),
                combo(&f, &[(ODD_CARTAN2, 1), (ODD_CARTAN1, -1)])
            );
        }
    }

    #[test]
    fn p_map_values() {
        let f = make_extension(5, 1).unwrap();
        let g = build_q2(&f).unwrap();
        assert_eq!(g.p_map_basis(CARTAN1).unwrap(), g.unit(CARTAN1).as_slice());
        assert_eq!(g.p_map_basis(CARTAN2).unwrap(), g.unit(CARTAN2).as_slice());
        assert!(g.p_map_basis(RAISE).unwrap().iter().all(Fe::is_zero));
        assert!(g.p_map_basis(LOWER).unwrap().iter().all(Fe::is_zero));
        assert!(g.p_map_basis(ODD_CARTAN1).is_none());
    }

    #[test]
    fn jacobi_and_structure_checks() {
        for p in [3, 5, 7] {
            let f = make_extension(p, 1).unwrap();
            let g = build_q2(&f).unwrap();
            assert!(g.validate_super_jacobi().is_ok());
            assert_eq!(g.skew_violation(), None);
            assert_eq!(g.weight_violation(), None);
            assert_eq!(g.restrictedness_violation(), None);
        }
    }

    #[test]
    fn mutated_constant_breaks_jacobi() {
        let f = make_extension(3, 1).unwrap();
        let mut g = build_q2(&f).unwrap();
        let old = g.bracket_basis(CARTAN1, RAISE)[RAISE];
        g.set_structure_constant(CARTAN1, RAISE, RAISE, f.add(&old, &f.one()));
        assert!(matches!(g.validate_super_jacobi(), Err(Error::Jacobi(..))));
    }

    #[test]
    fn abelianizations() {
        let f = make_extension(5, 1).unwrap();
        let g = build_q2(&f).unwrap();
        assert_eq!(g.abelianization_sdim(), Sdim::new(0, 1));

        let gl2 = g.subalgebra(&[CARTAN1, CARTAN2, RAISE, LOWER]).unwrap();
        assert_eq!(gl2.abelianization_sdim(), Sdim::new(1, 0));
        assert!(gl2.validate_super_jacobi().is_ok());

        let abelian = SuperAlgebra::from_structure_constants(
            &f,
            vec!["a".into(), "b".into()],
            vec![Parity::Even, Parity::Even],
            vec![(0, 0), (0, 0)],
            vec![vec![vec![Fe::ZERO; 2]; 2]; 2],
        );
        assert_eq!(abelian.abelianization_sdim(), Sdim::new(2, 0));
    }

    #[test]
    fn non_closed_subalgebra_rejected() {
        let f = make_extension(3, 1).unwrap();
        let g = build_q2(&f).unwrap();
        assert!(g.subalgebra(&[RAISE, LOWER]).is_err());
    }

    #[test]
    fn random_even_p_map_over_extension() {
        let f = make_extension(3, 2).unwrap();
        let g = build_q2(&f).unwrap();
        let x = f.generator();
        let v = vec![x, f.one(), x, Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ZERO];
        let px = g.p_power(&v).unwrap();
        // ad(x^[p]) = ad(x)^p holds for every even element of a restricted algebra
        assert_eq!(g.ad(&px), g.ad(&v).pow(3));
    }
}
