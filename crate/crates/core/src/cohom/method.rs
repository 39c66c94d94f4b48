use super::{der0_space, der_space, ider_space};
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::grading::{Parity, Sdim};
use crate::repmod::GModule;

/// One run of an `H^1` method. `cocycles` is the space the method solves
/// for, `coboundaries` its intersection with the inner derivations.
#[derive(Clone, Debug)]
pub struct H1Data {
    pub method: &'static str,
    pub h1: Sdim,
    pub cocycles: [Subspace; 2],
    pub coboundaries: Sdim,
}

pub trait H1Method: Send + Sync {
    fn name(&self) -> &'static str;
    fn compute(&self, m: &GModule, ider: &[Subspace; 2]) -> H1Data;
}

fn run(
    name: &'static str,
    m: &GModule,
    ider: &[Subspace; 2],
    solve: fn(&GModule, Parity) -> Subspace,
) -> H1Data {
    let cocycles = Parity::BOTH.map(|q| solve(m, q));
    let mut h1 = Sdim::ZERO;
    let mut coboundaries = Sdim::ZERO;
    for q in Parity::BOTH {
        let i = q.bit() as usize;
        let b = cocycles[i].intersect(&ider[i]).dim();
        coboundaries.set(q, b);
        h1.set(q, cocycles[i].dim() - b);
    }
    H1Data {
        method: name,
        h1,
        cocycles,
        coboundaries,
    }
}

/// All derivations modulo inner ones.
struct Full;

impl H1Method for Full {
    fn name(&self) -> &'static str {
        "full"
    }

    fn compute(&self, m: &GModule, ider: &[Subspace; 2]) -> H1Data {
        run(self.name(), m, ider, der_space)
    }
}

/// Weight-derivations modulo the inner ones among them.
struct WeightRestricted;

impl H1Method for WeightRestricted {
    fn name(&self) -> &'static str {
        "weight"
    }

    fn compute(&self, m: &GModule, ider: &[Subspace; 2]) -> H1Data {
        run(self.name(), m, ider, der0_space)
    }
}

pub fn h1_methods() -> Vec<Box<dyn H1Method>> {
    vec![Box::new(Full), Box::new(WeightRestricted)]
}

pub fn h1_method(name: &str) -> Result<Box<dyn H1Method>> {
    let mut all = h1_methods();
    let known = all.iter().map(|m| m.name()).collect::<Vec<_>>().join(", ");
    match all.iter().position(|m| m.name() == name) {
        Some(i) => Ok(all.swap_remove(i)),
        None => Err(Error::UnknownStrategy {
            kind: "H1 method",
            name: name.into(),
            known: format!("{known}, both"),
        }),
    }
}

#[derive(Clone, Debug)]
pub struct H1Outcome {
    pub h1: Sdim,
    pub ider: [Subspace; 2],
    pub runs: Vec<H1Data>,
}

impl H1Outcome {
    pub fn run(&self, name: &str) -> Option<&H1Data> {
        self.runs.iter().find(|r| r.method == name)
    }
}

/// Runs one registered method, or every method for `both`, in which case
/// all results must agree.
pub fn compute_h1(m: &GModule, method: &str) -> Result<H1Outcome> {
    let methods = if method == "both" {
        h1_methods()
    } else {
        vec![h1_method(method)?]
    };
    let ider = Parity::BOTH.map(|q| ider_space(m, q));
    let runs: Vec<H1Data> = methods.iter().map(|x| x.compute(m, &ider)).collect();
    let first = &runs[0];
    if let Some(other) = runs.iter().find(|r| r.h1 != first.h1) {
        return Err(Error::MethodDisagreement {
            first: first.method.into(),
            second: other.method.into(),
            a: first.h1,
            b: other.h1,
        });
    }
    Ok(H1Outcome {
        h1: first.h1,
        ider,
        runs,
    })
}
