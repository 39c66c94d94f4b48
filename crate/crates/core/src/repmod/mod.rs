//! Modules over q(2): p-characters, baby Verma modules built from explicit
//! action tables, and their simple quotients.

mod formulas;
mod simple;
mod verma;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{unit, Matrix, Subspace};
use crate::ff::{artin_schreier_roots, make_extension, square_roots, Fe, Field, FieldDescription};
use crate::grading::{Parity, Sdim};
use crate::qsuper::{gen, SuperAlgebra, WeightLabel};

pub use formulas::{check_simple_formulas, FormulaMismatch};
pub use simple::{
    default_budget, maximal_submodule, DEFAULT_BUDGET, prop_submodule, quotient_route, quotient_routes,
    simple_module, spin, verify_simple, PropSubmodule, QuotientRoute,
};
pub use verma::{build_verma, build_verma_with_mu, verma_case, VermaCase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChiKind {
    Zero,
    Nilpotent,
    Semisimple,
    Mixed,
}

/// A p-character up to conjugacy: `chi(e) = 0`, `chi(f)` is 0 or 1, and the
/// Cartan values are small integers read in the prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PChar {
    kind: ChiKind,
    a: i64,
    b: i64,
}

impl PChar {
    pub fn zero() -> Self {
        PChar { kind: ChiKind::Zero, a: 0, b: 0 }
    }

    pub fn nilpotent() -> Self {
        PChar { kind: ChiKind::Nilpotent, a: 0, b: 0 }
    }

    pub fn semisimple(a: i64, b: i64) -> Self {
        PChar { kind: ChiKind::Semisimple, a, b }
    }

    pub fn mixed(a: i64) -> Self {
        PChar { kind: ChiKind::Mixed, a, b: a }
    }

    pub fn kind(&self) -> ChiKind {
        self.kind
    }

    /// Checks the representative's constraints in characteristic `p`.
    pub fn validate(&self, p: u32) -> Result<()> {
        let p = p as i64;
        if self.kind == ChiKind::Mixed && self.a.rem_euclid(p) == 0 {
            return Err(Error::Invalid(format!(
                "mixed p-character needs a nonzero Cartan value mod {p}"
            )));
        }
        Ok(())
    }

    pub fn f_val(&self, field: &Field) -> Fe {
        match self.kind {
            ChiKind::Nilpotent | ChiKind::Mixed => field.one(),
            _ => Fe::ZERO,
        }
    }

    pub fn h_vals(&self, field: &Field) -> (Fe, Fe) {
        (field.from_int(self.a), field.from_int(self.b))
    }

    /// True when every value vanishes (including `semisimple:0,0`).
    pub fn is_zero_in(&self, field: &Field) -> bool {
        let (a, b) = self.h_vals(field);
        self.f_val(field).is_zero() && a.is_zero() && b.is_zero()
    }

    pub fn is_nilpotent_in(&self, field: &Field) -> bool {
        let (a, b) = self.h_vals(field);
        !self.f_val(field).is_zero() && a.is_zero() && b.is_zero()
    }

    /// Whether the Cartan values force weights outside the prime field.
    pub fn needs_artin_schreier(&self, p: u32) -> bool {
        let p = p as i64;
        self.a.rem_euclid(p) != 0 || self.b.rem_euclid(p) != 0
    }

    /// `chi(x)` for an even element given in algebra coordinates.
    pub fn eval(&self, field: &Field, x: &[Fe]) -> Fe {
        let (a, b) = self.h_vals(field);
        let fv = self.f_val(field);
        let terms = [
            field.mul(&a, &x[gen::CARTAN1]),
            field.mul(&b, &x[gen::CARTAN2]),
            field.mul(&fv, &x[gen::LOWER]),
        ];
        terms.iter().fold(Fe::ZERO, |acc, t| field.add(&acc, t))
    }

    pub fn params(&self) -> String {
        match self.kind {
            ChiKind::Zero | ChiKind::Nilpotent => String::new(),
            ChiKind::Semisimple => format!("{},{}", self.a, self.b),
            ChiKind::Mixed => format!("{}", self.a),
        }
    }
}

impl fmt::Display for PChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ChiKind::Zero => f.write_str("zero"),
            ChiKind::Nilpotent => f.write_str("nilpotent"),
            ChiKind::Semisimple => write!(f, "semisimple:{},{}", self.a, self.b),
            ChiKind::Mixed => write!(f, "mixed:{}", self.a),
        }
    }
}

impl FromStr for PChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, params) = match s.split_once(':') {
            Some((h, p)) => (h, Some(p)),
            None => (s, None),
        };
        let nums = |p: &str| -> Result<Vec<i64>> {
            p.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Invalid(format!("bad p-character parameter `{t}`")))
                })
                .collect()
        };
        match (head, params) {
            ("0" | "zero", None) => Ok(PChar::zero()),
            ("nilpotent", None) => Ok(PChar::nilpotent()),
            ("semisimple", Some(p)) => match nums(p)?.as_slice() {
                [a, b] => Ok(PChar::semisimple(*a, *b)),
                _ => Err(Error::Invalid("semisimple takes two parameters a,b".into())),
            },
            ("mixed", Some(p)) => match nums(p)?.as_slice() {
                [a] => Ok(PChar::mixed(*a)),
                _ => Err(Error::Invalid("mixed takes one parameter".into())),
            },
            _ => Err(Error::Invalid(format!("unknown p-character `{s}`"))),
        }
    }
}

/// A highest weight `(l1, l2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub l1: Fe,
    pub l2: Fe,
}

impl Weight {
    pub fn new(l1: Fe, l2: Fe) -> Self {
        Weight { l1, l2 }
    }

    pub fn from_ints(field: &Field, l1: i64, l2: i64) -> Self {
        Weight::new(field.from_int(l1), field.from_int(l2))
    }

    pub fn is_zero(&self) -> bool {
        self.l1.is_zero() && self.l2.is_zero()
    }

    pub fn render(&self, field: &Field) -> String {
        format!("({},{})", field.render(&self.l1), field.render(&self.l2))
    }

    /// Both components in the prime field, as residues.
    pub fn as_prime(&self, field: &Field) -> Option<(u32, u32)> {
        Some((field.as_prime(&self.l1)?, field.as_prime(&self.l2)?))
    }

    pub fn in_lambda_chi(&self, field: &Field, chi: &PChar) -> bool {
        let p = field.p() as u64;
        let (a, b) = chi.h_vals(field);
        let ok = |l: &Fe, c: &Fe| field.sub(&field.pow(l, p), l) == field.pow(c, p);
        ok(&self.l1, &a) && ok(&self.l2, &b)
    }
}

/// All of `Lambda_chi` inside `field`, sorted.
pub fn lambda_set(chi: &PChar, field: &Field) -> Vec<Weight> {
    let p = field.p() as u64;
    let (a, b) = chi.h_vals(field);
    let r1 = artin_schreier_roots(field, &field.pow(&a, p));
    let r2 = artin_schreier_roots(field, &field.pow(&b, p));
    let mut out = Vec::with_capacity(r1.len() * r2.len());
    for x in &r1 {
        for y in &r2 {
            out.push(Weight::new(*x, *y));
        }
    }
    out
}

/// Whether the table for `lam` needs a square root of `-l1/l2` that `field`
/// lacks.
pub fn needs_larger_field_for_mu(field: &Field, lam: &Weight) -> bool {
    match verma_case(field, lam) {
        VermaCase::Generic => {
            let ratio = field.neg(&field.div(&lam.l1, &lam.l2).expect("l2 nonzero"));
            square_roots(field, &ratio).is_empty()
        }
        _ => false,
    }
}

/// The smallest field (per the sizing rule: degree `p` if Artin-Schreier
/// roots are needed, doubled if some weight needs `mu`) for the whole of
/// `Lambda_chi`, together with that set.
pub fn field_for_lambda_set(p: u32, chi: &PChar) -> Result<(Field, Vec<Weight>)> {
    chi.validate(p)?;
    let k = if chi.needs_artin_schreier(p) { p as usize } else { 1 };
    let field = make_extension(p, k)?;
    let lams = lambda_set(chi, &field);
    if lams.iter().any(|l| needs_larger_field_for_mu(&field, l)) {
        let field = make_extension(p, 2 * k)?;
        let lams = lambda_set(chi, &field);
        return Ok((field, lams));
    }
    Ok((field, lams))
}

/// Field for a single weight with prime-field components.
pub fn field_for_prime_weight(p: u32, chi: &PChar, l1: i64, l2: i64) -> Result<(Field, Weight)> {
    chi.validate(p)?;
    let k = if chi.needs_artin_schreier(p) { p as usize } else { 1 };
    let field = make_extension(p, k)?;
    let lam = Weight::from_ints(&field, l1, l2);
    if needs_larger_field_for_mu(&field, &lam) {
        let field = make_extension(p, 2 * k)?;
        let lam = Weight::from_ints(&field, l1, l2);
        return Ok((field, lam));
    }
    Ok((field, lam))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelStyle {
    /// `(a,j,k) = f^a F^j H1^k v`
    Round,
    /// `[a,j,k] = f^a F^j H2^k v`
    Square,
    /// Basis vectors of modules without a PBW labelling.
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub a: u32,
    pub j: u8,
    pub k: u8,
    pub style: LabelStyle,
}

impl BasisLabel {
    pub fn round(a: u32, j: u8, k: u8) -> Self {
        BasisLabel { a, j, k, style: LabelStyle::Round }
    }

    pub fn square(a: u32, j: u8, k: u8) -> Self {
        BasisLabel { a, j, k, style: LabelStyle::Square }
    }

    pub fn plain(i: u32) -> Self {
        BasisLabel { a: i, j: 0, k: 0, style: LabelStyle::Plain }
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.j + self.k)
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.style {
            LabelStyle::Round => write!(f, "({},{},{})", self.a, self.j, self.k),
            LabelStyle::Square => write!(f, "[{},{},{}]", self.a, self.j, self.k),
            LabelStyle::Plain => write!(f, "v{}", self.a),
        }
    }
}

impl Serialize for BasisLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Verma,
    Simple,
    Quotient,
    Trivial,
}

/// How a quotient module sits under its parent.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub parent_labels: Vec<BasisLabel>,
    pub kernel: Subspace,
    /// `dim x parent_dim`, maps parent coordinates to quotient coordinates.
    pub projection: Matrix,
}

/// A finite-dimensional module: one action matrix per algebra basis element
/// plus parity and weight data per basis vector.
#[derive(Clone, Debug)]
pub struct GModule {
    alg: Arc<SuperAlgebra>,
    labels: Vec<BasisLabel>,
    parities: Vec<Parity>,
    weights: Vec<(Fe, Fe)>,
    actions: Vec<Matrix>,
    pchar: PChar,
    lam: Weight,
    kind: ModuleKind,
    case: Option<VermaCase>,
    mu: Option<Fe>,
    quotient: Option<QuotientData>,
}

impl GModule {
    /// A module with every action zero.
    pub fn trivial(alg: &Arc<SuperAlgebra>, sdim: Sdim) -> Self {
        let f = alg.field();
        let n = sdim.total();
        let parities: Vec<Parity> = (0..n)
            .map(|i| if i < sdim.even { Parity::Even } else { Parity::Odd })
            .collect();
        GModule {
            alg: alg.clone(),
            labels: (0..n as u32).map(BasisLabel::plain).collect(),
            parities,
            weights: vec![(Fe::ZERO, Fe::ZERO); n],
            actions: vec![Matrix::zeros(f, n, n); alg.dim()],
            pchar: PChar::zero(),
            lam: Weight::new(Fe::ZERO, Fe::ZERO),
            kind: ModuleKind::Trivial,
            case: None,
            mu: None,
            quotient: None,
        }
    }

    /// Raw constructor; callers are expected to run the validators.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        alg: &Arc<SuperAlgebra>,
        labels: Vec<BasisLabel>,
        parities: Vec<Parity>,
        weights: Vec<(Fe, Fe)>,
        actions: Vec<Matrix>,
        pchar: PChar,
        lam: Weight,
        kind: ModuleKind,
    ) -> Self {
        GModule {
            alg: alg.clone(),
            labels,
            parities,
            weights,
            actions,
            pchar,
            lam,
            kind,
            case: None,
            mu: None,
            quotient: None,
        }
    }

    pub fn alg(&self) -> &Arc<SuperAlgebra> {
        &self.alg
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn sdim(&self) -> Sdim {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        Sdim::new(self.dim() - odd, odd)
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn weights(&self) -> &[(Fe, Fe)] {
        &self.weights
    }

    pub fn action(&self, x: usize) -> &Matrix {
        &self.actions[x]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn pchar(&self) -> PChar {
        self.pchar
    }

    pub fn lam(&self) -> Weight {
        self.lam
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn case(&self) -> Option<VermaCase> {
        self.case
    }

    pub fn mu(&self) -> Option<Fe> {
        self.mu
    }

    pub fn quotient_data(&self) -> Option<&QuotientData> {
        self.quotient.as_ref()
    }

    pub fn with_kind(mut self, kind: ModuleKind) -> Self {
        self.kind = kind;
        self
    }

    /// Coordinates of the basis vector with this label; for a quotient the
    /// label may be any label of the parent, and its image is returned.
    pub fn vector_of(&self, label: &BasisLabel) -> Option<Vec<Fe>> {
        if let Some(i) = self.labels.iter().position(|l| l == label) {
            return Some(unit(self.field(), self.dim(), i));
        }
        let q = self.quotient.as_ref()?;
        let i = q.parent_labels.iter().position(|l| l == label)?;
        Some(q.projection.column(i))
    }

    /// `x . v` for an algebra coordinate vector `x`.
    pub fn act(&self, x: &[Fe], v: &[Fe]) -> Vec<Fe> {
        let f = self.field();
        let mut out = vec![Fe::ZERO; self.dim()];
        for (c, a) in x.iter().zip(&self.actions) {
            if c.is_zero() {
                continue;
            }
            for (o, w) in out.iter_mut().zip(a.mul_vec(v)) {
                *o = f.add(o, &f.mul(c, &w));
            }
        }
        out
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action_of(&self, x: &[Fe]) -> Matrix {
        let f = self.field();
        let mut m = Matrix::zeros(f, self.dim(), self.dim());
        for (c, a) in x.iter().zip(&self.actions) {
            if !c.is_zero() {
                m = m.add(&a.scale(c));
            }
        }
        m
    }

    pub fn indices_with_parity(&self, parity: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i] == parity).collect()
    }

    /// Module weight shifted by an algebra weight label.
    pub fn shifted(&self, w: &(Fe, Fe), by: WeightLabel) -> (Fe, Fe) {
        let f = self.field();
        (
            f.add(&w.0, &f.from_int(by.0)),
            f.add(&w.1, &f.from_int(by.1)),
        )
    }

    /// Basis indices grouped by (weight, parity), in sorted key order.
    pub fn components(&self) -> Vec<((Fe, Fe), Parity, Vec<usize>)> {
        let mut map: BTreeMap<((Fe, Fe), Parity), Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim() {
            map.entry((self.weights[i], self.parities[i])).or_default().push(i);
        }
        map.into_iter().map(|((w, p), v)| (w, p, v)).collect()
    }

    pub fn render_weight(&self, w: &(Fe, Fe)) -> String {
        let f = self.field();
        format!("({},{})", f.render(&w.0), f.render(&w.1))
    }

    /// First generator pair violating `A_[x,y] = A_x A_y - (-1)^{|x||y|} A_y A_x`.
    pub fn module_axiom_violation(&self) -> Option<(usize, usize)> {
        let n = self.alg.dim();
        for x in 0..n {
            for y in 0..n {
                let lhs = self.action_of(self.alg.bracket_basis(x, y));
                let xy = self.actions[x].mul(&self.actions[y]);
                let yx = self.actions[y].mul(&self.actions[x]);
                let rhs = if self.alg.parity(x).sign_flip(self.alg.parity(y)) {
                    xy.add(&yx)
                } else {
                    xy.sub(&yx)
                };
                if lhs != rhs {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Checks that each action maps the `(w, s)` component into
    /// `(w + wt(x), s + |x|)`.
    pub fn validate_grading(&self) -> Result<()> {
        for x in 0..self.alg.dim() {
            let a = &self.actions[x];
            for src in 0..self.dim() {
                let want_w = self.shifted(&self.weights[src], self.alg.weight(x));
                let want_p = self.parities[src] + self.alg.parity(x);
                for tgt in 0..self.dim() {
                    if a.get(tgt, src).is_zero() {
                        continue;
                    }
                    if self.parities[tgt] != want_p {
                        return Err(Error::Grading(
                            "parity".into(),
                            format!("{} on {}", self.alg.name(x), self.labels[src]),
                        ));
                    }
                    if self.weights[tgt] != want_w {
                        return Err(Error::Grading(
                            "weight".into(),
                            format!("{} on {}", self.alg.name(x), self.labels[src]),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `A_x^p - A_{x^[p]} - chi(x)^p Id = 0` for the even basis elements and
    /// 20 pseudo-random even combinations.
    pub fn validate_p_character(&self) -> Result<()> {
        let f = self.field();
        let p = f.p() as u64;
        let even: Vec<usize> = (0..self.alg.dim())
            .filter(|&i| !self.alg.parity(i).is_odd())
            .collect();
        let mut samples: Vec<Vec<Fe>> = even.iter().map(|&i| self.alg.unit(i)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_c4a7);
        for _ in 0..20 {
            let mut x = vec![Fe::ZERO; self.alg.dim()];
            for &i in &even {
                x[i] = f.random(&mut rng);
            }
            samples.push(x);
        }
        let id = Matrix::identity(f, self.dim());
        for x in &samples {
            let xp = self.alg.p_power(x)?;
            let chi = f.pow(&self.pchar.eval(f, x), p);
            let lhs = self
                .action_of(x)
                .pow(p)
                .sub(&self.action_of(&xp))
                .sub(&id.scale(&chi));
            if !lhs.is_zero() {
                let desc = x
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| format!("{}*{}", f.render(c), self.alg.name(i)))
                    .collect::<Vec<_>>()
                    .join(" + ");
                return Err(Error::PCharacter(desc));
            }
        }
        Ok(())
    }

    /// Quotient by an action-closed subspace, with lex-least labels as
    /// coset representatives.
    pub fn quotient(&self, kernel: &Subspace, kind: ModuleKind) -> Result<GModule> {
        if kernel.ambient() != self.dim() {
            return Err(Error::Dimension(format!(
                "submodule of ambient {} in module of dim {}",
                kernel.ambient(),
                self.dim()
            )));
        }
        if let Some((x, i)) = simple::closure_violation(self, kernel) {
            return Err(Error::NotActionClosed(
                "quotient kernel".into(),
                self.alg.name(x).to_string(),
                i,
            ));
        }
        let f = self.field();
        let reps = kernel.lex_least_complement();
        let proj = kernel.quotient_projection();
        let r = reps.len();
        let mut incl = Matrix::zeros(f, self.dim(), r);
        for (c, &i) in reps.iter().enumerate() {
            incl.set(i, c, f.one());
        }
        let actions = self.actions.iter().map(|a| proj.mul(a).mul(&incl)).collect();
        Ok(GModule {
            alg: self.alg.clone(),
            labels: reps.iter().map(|&i| self.labels[i]).collect(),
            parities: reps.iter().map(|&i| self.parities[i]).collect(),
            weights: reps.iter().map(|&i| self.weights[i]).collect(),
            actions,
            pchar: self.pchar,
            lam: self.lam,
            kind,
            case: self.case,
            mu: self.mu,
            quotient: Some(QuotientData {
                parent_labels: self.labels.clone(),
                kernel: kernel.clone(),
                projection: proj,
            }),
        })
    }

    pub fn to_json(&self) -> ModuleJson {
        let f = self.field();
        let fc = |e: &Fe| f.coeffs(e);
        ModuleJson {
            field: f.describe(),
            kind: self.kind,
            chi: self.pchar.to_string(),
            lambda: [fc(&self.lam.l1), fc(&self.lam.l2)],
            case: self.case.map(|c| c.id().to_string()),
            mu: self.mu.as_ref().map(fc),
            labels: self.labels.clone(),
            parities: self.parities.iter().map(|p| p.bit()).collect(),
            weights: self.weights.iter().map(|(a, b)| [fc(a), fc(b)]).collect(),
            actions: (0..self.alg.dim())
                .map(|x| {
                    let a = &self.actions[x];
                    let rows = (0..a.rows()).map(|r| a.row(r).iter().map(fc).collect()).collect();
                    (self.alg.name(x).to_string(), rows)
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleJson {
    pub field: FieldDescription,
    pub kind: ModuleKind,
    pub chi: String,
    pub lambda: [Vec<u32>; 2],
    pub case: Option<String>,
    pub mu: Option<Vec<u32>>,
    pub labels: Vec<BasisLabel>,
    pub parities: Vec<u8>,
    pub weights: Vec<[Vec<u32>; 2]>,
    pub actions: Vec<(String, Vec<Vec<Vec<u32>>>)>,
}

/// The three weights of the algebra: `0`, `(1,-1)`, `(-1,1)`.
pub const TARGET_WEIGHTS: [WeightLabel; 3] = [(0, 0), (1, -1), (-1, 1)];

/// Parity-split dimensions of the module's weight spaces at the target
/// weights, in the order of [`TARGET_WEIGHTS`].
pub fn target_weight_spaces(m: &GModule) -> [Sdim; 3] {
    let f = m.field();
    let mut out = [Sdim::ZERO; 3];
    for (slot, (w1, w2)) in out.iter_mut().zip(TARGET_WEIGHTS) {
        let w = (f.from_int(w1), f.from_int(w2));
        for i in 0..m.dim() {
            if m.weights()[i] == w {
                let p = m.parities()[i];
                slot.set(p, slot.get(p) + 1);
            }
        }
    }
    out
}
