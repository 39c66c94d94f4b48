//! One test per acceptance criterion. Each writes a single PASS/FAIL line
//! straight to stderr, bypassing output capture, before asserting.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use qcoh_cli::grid::{grid, parse_chi_list, Point};
use qcoh_cli::record::{build_module, ModuleChoice};
use qcoh_cli::verify::{build_simple, verify_rows, Status, Theorem};
use qcoh_core::cohom::{
    classify_cochain, cohomology, expected_target_weights, h0, named_cochains, trivial_oracle,
    Cocycle, Structure,
};
use qcoh_core::repmod::{BasisLabel, PChar, VermaCase, DEFAULT_BUDGET};
use qcoh_core::{build_q2, Fe, Parity, Sdim};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u32; 3] = [3, 5, 7];

const ALGEBRA_LIMIT: Duration = Duration::from_secs(1);
const MODULE_LIMIT: Duration = Duration::from_secs(300);
const VERMA_H1_LIMIT: Duration = Duration::from_secs(600);

const RANDOM_INNER_PER_MODULE: usize = 50;

fn verdict(id: u32, what: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    let line = format!("{tag} criterion {id:>2} {what}: {detail}\n");
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(ok, "criterion {id} ({what}) failed: {detail}");
}

fn base_chis() -> Vec<PChar> {
    vec![PChar::zero(), PChar::nilpotent()]
}

/// Outcome of the full pipeline on one module.
struct Inst {
    p: u32,
    chi: PChar,
    l: (u32, u32),
    kind: ModuleChoice,
    h0: Sdim,
    h0_has_top: bool,
    /// `Err` when the two H1 methods disagree or the build fails.
    h1: Result<Sdim, String>,
    table: Option<Sdim>,
    structure: Option<Structure>,
    oracle: Option<Sdim>,
}

struct Sweep {
    insts: Vec<Inst>,
    verma_time: Duration,
}

fn points(p: u32) -> Vec<Point> {
    grid(p, &base_chis()).expect("grid")
}

fn run_one(pt: &Point, kind: ModuleChoice) -> Inst {
    let l = pt.lam.as_prime(&pt.field).expect("residue weight");
    let m = match kind {
        ModuleChoice::Verma => build_module(pt, kind, "generic", DEFAULT_BUDGET),
        ModuleChoice::Simple => build_simple(pt, DEFAULT_BUDGET),
    };
    let mut inst = Inst {
        p: pt.p,
        chi: pt.chi,
        l,
        kind,
        h0: Sdim::ZERO,
        h0_has_top: false,
        h1: Err("not computed".into()),
        table: None,
        structure: None,
        oracle: None,
    };
    let m = match m {
        Ok(m) => m,
        Err(e) => {
            inst.h1 = Err(format!("{e:#}"));
            return inst;
        }
    };
    let (s, space) = h0(&m);
    inst.h0 = s;
    inst.h0_has_top = m
        .vector_of(&BasisLabel::round(pt.p - 1, 1, 0))
        .is_some_and(|v| space.contains(&v));
    inst.oracle = trivial_oracle(&m);
    match cohomology(&m, true, Some("both")) {
        Ok(r) => {
            inst.h1 = Ok(r.h1_sdim.expect("h1 requested"));
            inst.table = r.paper_expected;
            inst.structure = r.structure;
        }
        Err(e) => inst.h1 = Err(e.to_string()),
    }
    inst
}

fn sweep() -> &'static Sweep {
    static CELL: OnceLock<Sweep> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut insts = Vec::new();
        let start = Instant::now();
        for p in PRIMES {
            for pt in points(p) {
                insts.push(run_one(&pt, ModuleChoice::Verma));
            }
        }
        let verma_time = start.elapsed();
        for p in PRIMES {
            for pt in points(p) {
                insts.push(run_one(&pt, ModuleChoice::Simple));
            }
        }
        Sweep { insts, verma_time }
    })
}

fn name(i: &Inst) -> String {
    format!("p={} {} ({},{}) {}", i.p, i.chi, i.l.0, i.l.1, i.kind.name())
}

fn summarize(bad: &[String]) -> String {
    match bad.len() {
        0 => "all instances agree".into(),
        n if n <= 6 => bad.join("; "),
        n => format!("{n} disagreements, first: {}", bad[..6].join("; ")),
    }
}

#[test]
fn c01_algebra_soundness() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for p in PRIMES {
        let f = qcoh_core::ff::make_extension(p, 1).unwrap();
        let alg = build_q2(&f).unwrap();
        if let Err(e) = alg.validate_super_jacobi() {
            bad.push(format!("p={p}: {e}"));
        }
        if let Some((x, y)) = alg.weight_violation() {
            bad.push(format!("p={p}: weights fail on ({x},{y})"));
        }
    }
    let t = start.elapsed();
    let ok = bad.is_empty() && t < ALGEBRA_LIMIT;
    verdict(1, "algebra soundness", ok, &format!("{} in {t:.2?} (limit {ALGEBRA_LIMIT:?})", summarize(&bad)));
}

#[test]
fn c02_module_soundness() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut cases = std::collections::BTreeSet::new();
    let mut generic_over_extension = false;
    let mut count = 0;
    for p in PRIMES {
        for pt in points(p) {
            let z = match build_module(&pt, ModuleChoice::Verma, "generic", DEFAULT_BUDGET) {
                Ok(z) => z,
                Err(e) => {
                    bad.push(format!("p={p} {} {}: {e:#}", pt.chi, pt.label()));
                    continue;
                }
            };
            count += 1;
            if let Some((x, y)) = z.module_axiom_violation() {
                bad.push(format!("p={p} {} {}: axiom ({x},{y})", pt.chi, pt.label()));
            }
            if let Err(e) = z.validate_p_character() {
                bad.push(format!("p={p} {} {}: {e}", pt.chi, pt.label()));
            }
            let case = z.case().expect("Verma case");
            if case == VermaCase::Generic && pt.field.degree() == 2 {
                generic_over_extension = true;
            }
            cases.insert(case);
        }
    }
    let t = start.elapsed();
    let four = [
        VermaCase::FirstVanishing,
        VermaCase::SecondVanishing,
        VermaCase::Generic,
        VermaCase::Antidiagonal,
    ]
    .iter()
    .all(|c| cases.contains(c));
    let ok = bad.is_empty() && four && generic_over_extension && t < MODULE_LIMIT;
    verdict(
        2,
        "module soundness",
        ok,
        &format!(
            "{count} modules, {}, cases {cases:?}, generic case over F_p^2 seen: {generic_over_extension}, {t:.2?} (limit {MODULE_LIMIT:?})",
            summarize(&bad)
        ),
    );
}

#[test]
fn c03_verma_invariants() {
    let mut bad = Vec::new();
    let mut n = 0;
    for i in sweep().insts.iter().filter(|i| i.kind == ModuleChoice::Verma) {
        n += 1;
        let special = i.chi == PChar::zero() && i.l == (0, 0);
        let want = if special { Sdim::new(0, 1) } else { Sdim::ZERO };
        if i.h0 != want || (special && !i.h0_has_top) {
            bad.push(format!("{}: H0 {}", name(i), i.h0));
        }
    }
    let extra = parse_chi_list("semisimple:1,0,semisimple:1,1,mixed:1").unwrap();
    let pts = grid(3, &extra).unwrap();
    for pt in &pts {
        n += 1;
        let z = build_module(pt, ModuleChoice::Verma, "generic", DEFAULT_BUDGET).unwrap();
        let s = h0(&z).0;
        if s != Sdim::ZERO {
            bad.push(format!("p=3 {} {}: H0 {s}", pt.chi, pt.label()));
        }
    }
    verdict(3, "H0 of baby Verma modules", bad.is_empty(), &format!("{n} modules, {}", summarize(&bad)));
}

#[test]
fn c04_verma_h1() {
    let s = sweep();
    let mut bad = Vec::new();
    for i in s.insts.iter().filter(|i| i.kind == ModuleChoice::Verma) {
        let want = if i.chi == PChar::zero() && i.l == (0, 0) {
            Sdim::new(1, 1)
        } else {
            Sdim::ZERO
        };
        match &i.h1 {
            Ok(h) if *h == want => {}
            Ok(h) => bad.push(format!("{}: H1 {h}, table {want}", name(i))),
            Err(e) => bad.push(format!("{}: {e}", name(i))),
        }
    }
    let ok = bad.is_empty() && s.verma_time < VERMA_H1_LIMIT;
    verdict(
        4,
        "H1 of baby Verma modules, both methods",
        ok,
        &format!("{}; {:.2?} (limit {VERMA_H1_LIMIT:?})", summarize(&bad), s.verma_time),
    );
}

#[test]
fn c05_listed_submodules() {
    let mut bad = Vec::new();
    let mut n = 0;
    for p in [3u32, 5] {
        let rows = verify_rows(Theorem::Prop41, &points(p), DEFAULT_BUDGET);
        for r in rows {
            n += 1;
            if r.status != Status::Match {
                bad.push(format!("p={p} {} {}: {:?} {:?}", r.chi, r.lambda, r.cells, r.notes));
            }
        }
    }
    verdict(5, "listed submodules and quotient dimensions", bad.is_empty() && n > 0, &format!("{n} rows, {}", summarize(&bad)));
}

#[test]
fn c06_target_weights() {
    let mut bad = Vec::new();
    let mut n = 0;
    let mut zero_branch = 0;
    for p in [5u32, 7] {
        let pts = points(p);
        for r in verify_rows(Theorem::Lemmas, &pts, DEFAULT_BUDGET) {
            n += 1;
            if r.status != Status::Match {
                bad.push(format!("p={p} {} {} {}: {:?}", r.chi, r.lambda, r.module, r.cells));
            }
        }
        for pt in &pts {
            let (l1, l2) = pt.lam.as_prime(&pt.field).unwrap();
            let in_range = (p + 1) / 2 <= l1 && l1 <= p - 2 && (l1 + l2) % p == 0;
            if pt.chi == PChar::zero() && in_range {
                let l = build_simple(pt, DEFAULT_BUDGET).unwrap();
                if expected_target_weights(&l) == Some([Sdim::ZERO; 3])
                    && qcoh_core::repmod::target_weight_spaces(&l) == [Sdim::ZERO; 3]
                {
                    zero_branch += 1;
                } else {
                    bad.push(format!("p={p} {}: all-zero branch not reproduced", pt.label()));
                }
            }
        }
    }
    let ok = bad.is_empty() && zero_branch > 0;
    verdict(6, "target-weight superdimensions", ok, &format!("{n} rows, all-zero branch hit {zero_branch} times, {}", summarize(&bad)));
}

#[test]
fn c07_simple_h1() {
    let mut bad = Vec::new();
    let mut n = 0;
    for i in sweep().insts.iter().filter(|i| i.kind == ModuleChoice::Simple) {
        if i.chi == PChar::zero() && i.l == (0, 0) {
            continue;
        }
        n += 1;
        let p = i.p;
        let want = match (i.chi == PChar::zero(), i.l) {
            (true, (1, b)) if b == p - 1 => Sdim::new(0, 1),
            (true, (a, 1)) if a == p - 1 => Sdim::new(2, 0),
            _ => Sdim::ZERO,
        };
        match &i.h1 {
            Ok(h) if *h == want => {}
            Ok(h) => bad.push(format!("{}: H1 {h}, table {want}", name(i))),
            Err(e) => bad.push(format!("{}: {e}", name(i))),
        }
    }
    verdict(7, "H1 of simple modules", bad.is_empty(), &format!("{n} modules, {}", summarize(&bad)));
}

#[test]
fn c08_trivial_quotient_oracle() {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for i in sweep().insts.iter().filter(|i| {
        i.kind == ModuleChoice::Simple && i.chi == PChar::zero() && i.l == (0, 0)
    }) {
        match (&i.h1, i.oracle) {
            (Ok(h), Some(o)) if *h == o => {
                seen.push(format!("p={} solver {h} = oracle {o} (table {})", i.p, i.table.map_or("-".into(), |t| t.to_string())))
            }
            (h, o) => bad.push(format!("p={}: solver {h:?}, oracle {o:?}", i.p)),
        }
    }
    let ok = bad.is_empty() && seen.len() == PRIMES.len();
    let detail = if ok { seen.join("; ") } else { summarize(&bad) };
    verdict(8, "solver against trivial-module oracle", ok, &detail);
}

fn random_homogeneous(m: &qcoh_core::repmod::GModule, q: Parity, rng: &mut ChaCha8Rng) -> Vec<Fe> {
    let f = m.field();
    let mut v = vec![Fe::ZERO; m.dim()];
    for i in m.indices_with_parity(q) {
        v[i] = f.element(rng.gen_range(0..f.order()));
    }
    v
}

#[test]
fn c09_named_cochains() {
    let mut bad = Vec::new();
    let mut recorded = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut modules = 0;
    for p in PRIMES {
        for pt in points(p) {
            let (l1, l2) = pt.lam.as_prime(&pt.field).unwrap();
            let zero = pt.chi == PChar::zero();
            let z = build_module(&pt, ModuleChoice::Verma, "generic", DEFAULT_BUDGET).unwrap();
            if zero && (l1, l2) == (0, 0) {
                let named = named_cochains(&z).unwrap();
                if named.len() != 2 {
                    bad.push(format!("p={p}: {} named maps on the zero Verma module", named.len()));
                }
                for (n, c) in &named {
                    let cl = classify_cochain(&z, c);
                    if !(cl.is_derivation && !cl.is_inner && cl.is_weight_map) {
                        bad.push(format!("p={p} {n}: {cl:?}"));
                    }
                }
            }
            let special = zero && (l1 + l2) % p == 0 && [0, 1, p - 1].contains(&l1);
            let mut mods = vec![z];
            if p <= 5 || special {
                mods.push(build_simple(&pt, DEFAULT_BUDGET).unwrap());
            }
            for m in &mods {
                if m.kind() == qcoh_core::repmod::ModuleKind::Simple && special {
                    let named = named_cochains(m).unwrap();
                    if named.is_empty() {
                        bad.push(format!("p={p} {}: no named maps", pt.label()));
                    }
                    for (n, c) in named {
                        let cl = classify_cochain(m, &c);
                        recorded.push(format!(
                            "p={p} {n} der={} inner={}",
                            cl.is_derivation, cl.is_inner
                        ));
                    }
                }
                if p > 5 {
                    continue;
                }
                modules += 1;
                for k in 0..RANDOM_INNER_PER_MODULE {
                    let q = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
                    let v = random_homogeneous(m, q, &mut rng);
                    let cl = classify_cochain(m, &Cocycle::inner(m, &v, q));
                    if !(cl.is_derivation && cl.is_inner) {
                        bad.push(format!("p={p} {} {}: D_v {cl:?}", pt.chi, pt.label()));
                        break;
                    }
                }
            }
        }
    }
    let ok = bad.is_empty() && !recorded.is_empty();
    verdict(
        9,
        "named and inner cochains",
        ok,
        &format!(
            "{modules} modules x {RANDOM_INNER_PER_MODULE} inner maps, {} named-map classifications recorded, {}",
            recorded.len(),
            summarize(&bad)
        ),
    );
}

#[test]
fn c10_structure() {
    let mut bad = Vec::new();
    let insts = &sweep().insts;
    for i in insts {
        match i.structure {
            Some(s) if s.all() => {}
            s => bad.push(format!("{}: {s:?} {:?}", name(i), i.h1.as_ref().err())),
        }
    }
    verdict(10, "structural identities", bad.is_empty(), &format!("{} modules, {}", insts.len(), summarize(&bad)));
}

fn scratch_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("qcoh-acceptance-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn c11_determinism() {
    let dir = scratch_dir("det");
    let run = |k: u32| -> (Vec<u8>, Vec<u8>) {
        let out = dir.join(format!("run{k}.json"));
        let o = Command::new(env!("CARGO_BIN_EXE_qcoh"))
            .args(["verify", "--theorem", "1", "--p", "5", "--out"])
            .arg(&out)
            .arg("--certs")
            .arg(dir.join("certs"))
            .output()
            .unwrap();
        (o.stdout, std::fs::read(&out).unwrap_or_default())
    };
    let a = run(1);
    let b = run(2);
    let ok = !a.0.is_empty() && !a.1.is_empty() && a == b;
    let _ = std::fs::remove_dir_all(&dir);
    verdict(
        11,
        "deterministic reports",
        ok,
        &format!("stdout {} bytes, report {} bytes, identical: {}", a.0.len(), a.1.len(), a == b),
    );
}
