//! The property registry: every structural claim about ordered and
//! alternative (co)chains as an executable check with a report entry.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alt_chain::{
    alt_chain_complex_with, boundary_with, canonical_tuples, canonicalize, check_presentation,
    class_boundary_with, face_class_compat_with, AltChain, AltChainClass, AltPresentation,
    CanonicalizeFn,
};
use crate::chain::Chain;
use crate::cochain::{
    alt_cup, alternative_maker, coboundary, is_alternative, nonlinear_residual, random_alternative,
    split, AltBasis, Rational, RationalCochain,
};
use crate::complex::{enumerate_generators, GeneratorIndex, Limits, SimplicialComplex};
use crate::corpus::full_simplex;
use crate::error::{Error, Result};
use crate::homology::{
    alternative_coboundaries, cohomology_rational, full_coboundaries, homology_free,
    homology_presented, ordered_boundaries, simplicial_boundaries, verify_cohomology_splitting,
};
use crate::homotopy::{
    induced_maps_agree_alternative, induced_maps_agree_ordered, pull_back, pullbacks_agree,
    CombinatorialHomotopy, SimplicialMap,
};
use crate::linalg::{rational_rank, AbelianGroup};
use crate::permutation::{enumerate_group, inversion_sign, Permutation};

/// Version tag of the JSON report.
pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Registry ids and the statement each one checks, in report order.
pub const REGISTRY: [(&str, &str); 21] = [
    (
        "sign-identity",
        "ε(s) = (-1)^(i - s(i)) ε(s_i) for every s in S_(n+1) and every i",
    ),
    (
        "face-action",
        "∂ act(s, g) = Σ_i (-1)^i act(s_i, face(g, s(i)))",
    ),
    (
        "group-laws",
        "composition is associative, has inverses, and ε is multiplicative",
    ),
    (
        "projector",
        "A(α) is alternative, A∘A = A, and A is the identity on alternative cochains",
    ),
    (
        "splitting",
        "C^n = C_A^n ⊕ Ker A, with rank A = dim C_A^n and α = A(α) + (α - A(α))",
    ),
    (
        "alt-cup-commutativity",
        "β ⌣_A α = (-1)^(pq) α ⌣_A β for alternative α, β",
    ),
    (
        "alt-cup-associativity",
        "(α ⌣_A β) ⌣_A γ = α ⌣_A (β ⌣_A γ) for alternative α, β, γ",
    ),
    (
        "alt-cup-leibniz",
        "δ(α ⌣_A β) = δα ⌣_A β + (-1)^p α ⌣_A δβ for alternative α, β",
    ),
    (
        "coboundary-preserves-alternative",
        "δ maps C_A^n into C_A^(n+1)",
    ),
    ("coboundary-commutes-with-A", "A δ = δ A on every cochain"),
    ("naturality", "f* A = A f* for simplicial maps f"),
    (
        "alt-chain-complex",
        "∂∂ = 0 on the alternative chain quotient, free and torsion parts",
    ),
    (
        "torsion-boundary",
        "a torsion class has a boundary with zero free part; repeated faces cancel in pairs",
    ),
    (
        "face-class-compat",
        "[act(s, face(g, i))] = ε(s)[face(g, i)] and ∂[act(s, g)] = ε(s) ∂[g]",
    ),
    ("degree-zero", "C_A^0 = C^0, H_A^0 = H^0 and H_A0 = H_0"),
    (
        "homology-isomorphism",
        "H_An ≅ H_n (ordered) ≅ H_n (simplicial) over ℤ",
    ),
    (
        "cohomology-splitting",
        "A induces an isomorphism H^n ≅ H_A^n over ℚ",
    ),
    (
        "duality",
        "dim C_A^n = number of free generators of C_An, and rank H_A^n = free rank H_An",
    ),
    (
        "prism-identity",
        "∂P + P∂ = g_# - f_# on ordered chains and on the alternative quotient",
    ),
    (
        "homotopy-invariance",
        "contiguous maps induce equal maps on H, H_A and H_A^*",
    ),
    (
        "nonlinear-residual",
        "α ⌣_A δα vanishes for closed α and matches a direct permutation sum",
    ),
];

/// Implementations the suites exercise, replaceable to check that the suites
/// notice broken kernels.
#[derive(Clone, Copy)]
pub struct Kernels {
    pub induced_face_perm: fn(&Permutation, usize) -> Result<Permutation>,
    pub canonicalize: CanonicalizeFn,
}

impl Default for Kernels {
    fn default() -> Self {
        Kernels {
            induced_face_perm: Permutation::induced_face_perm,
            canonicalize,
        }
    }
}

/// Run parameters.
#[derive(Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Randomized cases per complex and suite.
    pub cases: usize,
    /// Cochain checks run in degrees below `limits.degree_cap`.
    pub limits: Limits,
    /// Homology comparisons run in degrees below this cap.
    pub homology_degree_cap: usize,
    pub kernels: Kernels,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            cases: 200,
            limits: Limits::default(),
            homology_degree_cap: 3,
            kernels: Kernels::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub id: String,
    pub statement: String,
    pub complexes: Vec<String>,
    pub exhaustive_cases: u64,
    pub random_cases: u64,
    pub passed: bool,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunMetadata {
    pub seed: u64,
    pub cases: usize,
    pub degree_cap: usize,
    pub homology_degree_cap: usize,
    pub generator_budget: usize,
    pub permutation_cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub format_version: u32,
    pub metadata: RunMetadata,
    pub complexes: Vec<String>,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn entry(&self, id: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn first_failure(&self) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| !e.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let m = &self.metadata;
        let _ = writeln!(
            out,
            "seed={} cases={} degree_cap={} homology_degree_cap={} complexes={}",
            m.seed,
            m.cases,
            m.degree_cap,
            m.homology_degree_cap,
            self.complexes.join(",")
        );
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{} {:<34} exhaustive={} random={} failures={}",
                if e.passed { "PASS" } else { "FAIL" },
                e.id,
                e.exhaustive_cases,
                e.random_cases,
                e.failures
            );
        }
        let failed = self.entries.iter().filter(|e| !e.passed).count();
        let _ = writeln!(
            out,
            "{} of {} properties hold",
            self.entries.len() - failed,
            self.entries.len()
        );
        out
    }
}

/// Running totals for one suite; keeps the first counterexample.
#[derive(Default)]
struct Tally {
    exhaustive: u64,
    random: u64,
    failures: u64,
    counterexample: Option<Value>,
}

impl Tally {
    fn exhaustive(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.exhaustive += 1;
        self.record(ok, witness);
    }

    fn random(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.random += 1;
        self.record(ok, witness);
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    /// Counts an evaluation error as a failure with the error as witness.
    fn guard<T>(
        &mut self,
        r: Result<T>,
        exhaustive: bool,
        context: impl FnOnce() -> Value,
    ) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                let witness = || {
                    let mut w = context();
                    w["error"] = json!(e.to_string());
                    w
                };
                if exhaustive {
                    self.exhaustive(false, witness);
                } else {
                    self.random(false, witness);
                }
                None
            }
        }
    }
}

/// A suite returns its tally and the labels of what it ran on.
type Suite = fn(&Ctx, usize) -> Result<(Tally, Vec<String>)>;

struct Named<'a> {
    name: String,
    complex: &'a SimplicialComplex,
}

struct Ctx<'a> {
    complexes: Vec<Named<'a>>,
    config: VerifyConfig,
}

impl Ctx<'_> {
    fn limits(&self) -> Limits {
        self.config.limits
    }

    /// Highest degree of cochains whose coboundary stays within the cap.
    fn top(&self) -> usize {
        self.config.limits.degree_cap.saturating_sub(1)
    }

    fn homology_limits(&self) -> Limits {
        self.config
            .limits
            .with_degree_cap(self.config.homology_degree_cap)
    }

    fn rng(&self, suite: usize, complex: usize) -> ChaCha8Rng {
        let stream = (suite as u64) << 32 | complex as u64;
        ChaCha8Rng::seed_from_u64(self.config.seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    fn index(&self, complex: &SimplicialComplex, cap: usize) -> Result<GeneratorIndex> {
        enumerate_generators(complex, cap, self.config.limits.generator_budget)
    }
}

fn cochain_json(alpha: &RationalCochain) -> Value {
    serde_json::to_value(alpha.to_file()).expect("cochain serializes")
}

fn q(v: &Rational) -> String {
    crate::cochain::format_rational(v)
}

/// First generator where two cochains differ.
fn difference_witness(lhs: &RationalCochain, rhs: &RationalCochain) -> Value {
    match lhs.sub(rhs) {
        Ok(d) => match d.iter().next() {
            Some((g, _)) => json!({
                "generator": g,
                "lhs": q(&lhs.get(g)),
                "rhs": q(&rhs.get(g)),
            }),
            None => json!(null),
        },
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn random_cochain(index: &GeneratorIndex, n: usize, rng: &mut ChaCha8Rng) -> RationalCochain {
    let values = index.generators(n).iter().filter_map(|g| {
        if rng.gen_bool(0.3) {
            let v = rng.gen_range(-3i64..=3);
            Some((g.clone(), Rational::from_integer(BigInt::from(v))))
        } else {
            None
        }
    });
    RationalCochain::from_values(n, values.collect::<Vec<_>>()).expect("degrees agree")
}

/// Runs every registered suite on `complexes`.
pub fn run_verification(
    complexes: &[SimplicialComplex],
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    run_selected(complexes, config, &[])
}

/// Runs the suites named in `ids` (all of them when `ids` is empty), keeping
/// registry order.
pub fn run_selected(
    complexes: &[SimplicialComplex],
    config: &VerifyConfig,
    ids: &[&str],
) -> Result<VerificationReport> {
    if let Some(bad) = ids
        .iter()
        .find(|id| !REGISTRY.iter().any(|(r, _)| r == *id))
    {
        return Err(Error::Malformed(format!("unknown property id {bad}")));
    }
    let ctx = Ctx {
        complexes: complexes
            .iter()
            .enumerate()
            .map(|(i, k)| Named {
                name: k
                    .name()
                    .map_or_else(|| format!("complex{i}"), str::to_string),
                complex: k,
            })
            .collect(),
        config: *config,
    };
    let suites: [Suite; 21] = [
        sign_identity,
        face_action,
        group_laws,
        projector,
        splitting,
        commutativity,
        associativity,
        leibniz,
        preserves_alternative,
        commutes_with_a,
        naturality,
        alt_chain_complex_suite,
        torsion_boundary,
        face_class_compat_suite,
        degree_zero,
        homology_isomorphism,
        cohomology_splitting,
        duality,
        prism_identity,
        homotopy_invariance,
        residual,
    ];
    let mut entries = Vec::with_capacity(REGISTRY.len());
    for (k, ((id, statement), suite)) in REGISTRY.iter().zip(suites).enumerate() {
        if !ids.is_empty() && !ids.contains(id) {
            continue;
        }
        let (tally, used) = suite(&ctx, k)?;
        entries.push(ReportEntry {
            id: id.to_string(),
            statement: statement.to_string(),
            complexes: used,
            exhaustive_cases: tally.exhaustive,
            random_cases: tally.random,
            passed: tally.failures == 0,
            failures: tally.failures,
            counterexample: tally.counterexample,
        });
    }
    let limits = config.limits;
    Ok(VerificationReport {
        format_version: REPORT_FORMAT_VERSION,
        metadata: RunMetadata {
            seed: config.seed,
            cases: config.cases,
            degree_cap: limits.degree_cap,
            homology_degree_cap: config.homology_degree_cap,
            generator_budget: limits.generator_budget,
            permutation_cap: limits.permutation_cap,
        },
        complexes: ctx.complexes.iter().map(|c| c.name.clone()).collect(),
        entries,
    })
}

fn all_names(ctx: &Ctx) -> Vec<String> {
    ctx.complexes.iter().map(|c| c.name.clone()).collect()
}

fn sign_identity(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let face = ctx.config.kernels.induced_face_perm;
    for n in 0..=ctx.config.limits.degree_cap {
        for s in enumerate_group(n + 1, ctx.config.limits.permutation_cap)? {
            for i in 0..=n {
                let witness = || json!({ "s": s, "i": i });
                let Some(si) = t.guard(face(s, i), true, witness) else {
                    continue;
                };
                let parity = (i + s.apply(i)) % 2;
                let expected = if parity == 0 { si.sign() } else { -si.sign() };
                let ok = s.sign() == expected && si.sign() == inversion_sign(si.images());
                t.exhaustive(ok, || json!({ "s": s, "i": i, "s_i": si, "sign_s": s.sign(), "sign_s_i": si.sign() }));
            }
        }
    }
    Ok((t, Vec::new()))
}

fn face_action(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let face_perm = ctx.config.kernels.induced_face_perm;
    for named in &ctx.complexes {
        let index = ctx.index(named.complex, ctx.top())?;
        for n in 1..=ctx.top() {
            let group = enumerate_group(n + 1, ctx.config.limits.permutation_cap)?;
            for g in index.generators(n) {
                for s in group {
                    let lhs = Chain::generator(s.act(g)?).boundary();
                    let mut rhs = Chain::zero(n - 1);
                    let mut bad = None;
                    for i in 0..=n {
                        let si = match face_perm(s, i) {
                            Ok(si) => si,
                            Err(e) => {
                                bad = Some(e.to_string());
                                break;
                            }
                        };
                        match si.act(&g.face(s.apply(i))?) {
                            Ok(h) => rhs.add_term(h, if i % 2 == 0 { 1 } else { -1 }),
                            Err(e) => {
                                bad = Some(e.to_string());
                                break;
                            }
                        }
                    }
                    t.exhaustive(bad.is_none() && lhs == rhs, || {
                        json!({
                            "complex": named.name,
                            "generator": g,
                            "s": s,
                            "lhs": format!("{lhs:?}"),
                            "rhs": format!("{rhs:?}"),
                            "error": bad,
                        })
                    });
                }
            }
        }
    }
    Ok((t, all_names(ctx)))
}

fn group_laws(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    for k in 1..=4.min(ctx.config.limits.permutation_cap) {
        let group = enumerate_group(k, ctx.config.limits.permutation_cap)?;
        for a in group {
            let inv = a.compose(&a.inverse())?;
            t.exhaustive(inv.is_identity(), || json!({ "a": a }));
            for b in group {
                let ab = a.compose(b)?;
                t.exhaustive(
                    ab.sign() == a.sign() * b.sign() && ab.sign() == inversion_sign(ab.images()),
                    || json!({ "a": a, "b": b }),
                );
                for c in group {
                    let ok = ab.compose(c)? == a.compose(&b.compose(c)?)?;
                    t.exhaustive(ok, || json!({ "a": a, "b": b, "c": c }));
                }
            }
        }
    }
    Ok((t, Vec::new()))
}

fn projector(ctx: &Ctx, suite: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    let check = |t: &mut Tally,
                 alpha: &RationalCochain,
                 exhaustive: bool,
                 name: &str|
     -> Result<()> {
        let a = alternative_maker(alpha, &limits)?;
        let ok = is_alternative(&a, &limits)? && alternative_maker(&a, &limits)? == a;
        let witness =
            || json!({ "complex": name, "alpha": cochain_json(alpha), "image": cochain_json(&a) });
        if exhaustive {
            t.exhaustive(ok, witness);
        } else {
            t.random(ok, witness);
        }
        Ok(())
    };
    for (c, named) in ctx.complexes.iter().enumerate() {
        let index = ctx.index(named.complex, ctx.top())?;
        for n in 0..=ctx.top() {
            for g in index.generators(n) {
                check(
                    &mut t,
                    &RationalCochain::indicator(g.clone()),
                    true,
                    &named.name,
                )?;
            }
            let basis = AltBasis::new(named.complex, n);
            for i in 0..basis.dimension() {
                let phi = basis.basis_cochain(i);
                let ok = alternative_maker(&phi, &limits)? == phi;
                t.exhaustive(
                    ok,
                    || json!({ "complex": named.name, "alternative": cochain_json(&phi) }),
                );
            }
        }
        let mut rng = ctx.rng(suite, c);
        for _ in 0..ctx.config.cases {
            let n = rng.gen_range(0..=ctx.top());
            let alpha = random_cochain(&index, n, &mut rng);
            check(&mut t, &alpha, false, &named.name)?;
        }
    }
    Ok((t, all_names(ctx)))
}

fn splitting(ctx: &Ctx, suite: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    for (c, named) in ctx.complexes.iter().enumerate() {
        let index = ctx.index(named.complex, ctx.top())?;
        for n in 0..=ctx.top() {
            let gens = index.generators(n);
            let mut columns = Vec::with_capacity(gens.len());
            for g in gens {
                let a = alternative_maker(&RationalCochain::indicator(g.clone()), &limits)?;
                columns.push(gens.iter().map(|h| a.get(h)).collect::<Vec<_>>());
            }
            let rank = rational_rank(gens.len(), &columns);
            let basis = AltBasis::new(named.complex, n);
            let total = named.complex.generator_count(n);
            let ok = rank == basis.dimension()
                && gens.len() - rank == basis.complement_dimension()
                && BigInt::from(gens.len()) == total;
            t.exhaustive(ok, || {
                json!({
                    "complex": named.name,
                    "degree": n,
                    "dim_cochains": gens.len(),
                    "rank_A": rank,
                    "dim_alternative": basis.dimension(),
                    "dim_kernel": basis.complement_dimension(),
                })
            });
        }
        let mut rng = ctx.rng(suite, c);
        for _ in 0..ctx.config.cases {
            let n = rng.gen_range(0..=ctx.top());
            let alpha = random_cochain(&index, n, &mut rng);
            let (alt, ker) = split(&alpha, &limits)?;
            let ok = alt.add(&ker)? == alpha
                && alternative_maker(&ker, &limits)?.is_zero()
                && is_alternative(&alt, &limits)?;
            t.random(
                ok,
                || json!({ "complex": named.name, "alpha": cochain_json(&alpha) }),
            );
        }
    }
    Ok((t, all_names(ctx)))
}

/// Degrees `(p, q)` with `p, q ≤ 1` and `p + q` within the cap.
fn low_pairs(cap: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..=1 {
        for q in 0..=1 {
            if p + q <= cap {
                out.push((p, q));
            }
        }
    }
    out
}

fn basis_cochains(complex: &SimplicialComplex, n: usize) -> Vec<RationalCochain> {
    let basis = AltBasis::new(complex, n);
    (0..basis.dimension())
        .map(|i| basis.basis_cochain(i))
        .collect()
}

fn sign_power(e: usize) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn commutativity(ctx: &Ctx, suite: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    let cap = limits.degree_cap;
    let check = |t: &mut Tally,
                 k: &Named,
                 a: &RationalCochain,
                 b: &RationalCochain,
                 exhaustive: bool|
     -> Result<()> {
        let (p, q) = (a.degree(), b.degree());
        let lhs = alt_cup(k.complex, b, a, &limits)?;
        let rhs = alt_cup(k.complex, a, b, &limits)?.scale(&sign_power(p * q));
        let witness = || {
            json!({
                "complex": k.name, "alpha": cochain_json(a), "beta": cochain_json(b),
                "witness": difference_witness(&lhs, &rhs),
            })
        };
        if exhaustive {
            t.exhaustive(lhs == rhs, witness);
        } else {
            t.random(lhs == rhs, witness);
        }
        Ok(())
    };
    for (c, named) in ctx.complexes.iter().enumerate() {
        for (p, q) in low_pairs(cap) {
            let bp = basis_cochains(named.complex, p);
            let bq = basis_cochains(named.complex, q);
            for a in &bp {
                for b in &bq {
                    check(&mut t, named, a, b, true)?;
                }
            }
        }
        let mut rng = ctx.rng(suite, c);
        for _ in 0..ctx.config.cases {
            let p = rng.gen_range(0..=2.min(cap));
            let q = rng.gen_range(0..=(cap - p).min(2));
            let a = random_alternative(named.complex, p, 3, &mut rng);
            let b = random_alternative(named.complex, q, 3, &mut rng);
            check(&mut t, named, &a, &b, false)?;
        }
    }
    Ok((t, all_names(ctx)))
}

fn associativity(ctx: &Ctx, suite: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    let cap = limits.degree_cap;
    let check = |t: &mut Tally,
                 k: &Named,
                 a: &RationalCochain,
                 b: &RationalCochain,
                 g: &RationalCochain,
                 exhaustive: bool|
     -> Result<()> {
        let lhs = alt_cup(k.complex, &alt_cup(k.complex, a, b, &limits)?, g, &limits)?;
        let rhs = alt_cup(k.complex, a, &alt_cup(k.complex, b, g, &limits)?, &limits)?;
        let witness = || {
            json!({
                "complex": k.name,
                "degrees": [a.degree(), b.degree(), g.degree()],
                "alpha": cochain_json(a), "beta": cochain_json(b), "gamma": cochain_json(g),
                "witness": difference_witness(&lhs, &rhs),
            })
        };
        if exhaustive {
            t.exhaustive(lhs == rhs, witness);
        } else {
            t.random(lhs == rhs, witness);
        }
        Ok(())
    };
    for (c, named) in ctx.complexes.iter().enumerate() {
        let bases: Vec<Vec<RationalCochain>> =
            (0..=1).map(|n| basis_cochains(named.complex, n)).collect();
        for p in 0..=1 {
            for q in 0..=1 {
                for r in 0..=1 {
                    if p + q + r > cap {
                        continue;
                    }
                    for a in &bases[p] {
                        for b in &bases[q] {
                            for g in &bases[r] {
                                check(&mut t, named, a, b, g, true)?;
                            }
                        }
                    }
                }
            }
        }
        let mut rng = ctx.rng(suite, c);
        for _ in 0..ctx.config.cases {
            let p = rng.gen_range(0..=1.min(cap));
            let q = rng.gen_range(0..=1.min(cap - p));
            let r = rng.gen_range(0..=1.min(cap - p - q));
            let a = random_alternative(named.complex, p, 3, &mut rng);
            let b = random_alternative(named.complex, q, 3, &mut rng);
            let g = random_alternative(named.complex, r, 3, &mut rng);
            check(&mut t, named, &a, &b, &g, false)?;
        }
    }
    Ok((t, all_names(ctx)))
}

fn leibniz(ctx: &Ctx, suite: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    let cap = limits.degree_cap;
    let check = |t: &mut Tally,
                 k: &Named,
                 a: &RationalCochain,
                 b: &RationalCochain,
                 exhaustive: bool|
     -> Result<()> {
        let p = a.degree();
        let lhs = coboundary(k.complex, &alt_cup(k.complex, a, b, &limits)?, &limits)?;
        let da = coboundary(k.complex, a, &limits)?;
        let db = coboundary(k.complex, b, &limits)?;
        let rhs = alt_cup(k.complex, &da, b, &limits)?
            .add(&alt_cup(k.complex, a, &db, &limits)?.scale(&sign_power(p)))?;
        let witness = || {
            json!({
                "complex": k.name, "alpha": cochain_json(a), "beta": cochain_json(b),
                "witness": difference_witness(&lhs, &rhs),
            })
        };
        if exhaustive {
            t.exhaustive(lhs == rhs, witness);
        } else {
            t.random(lhs == rhs, witness);
        }
        Ok(())
    };
    for (c, named) in ctx.complexes.iter().enumerate() {
        for (p, q) in low_pairs(cap.saturating_sub(1)) {
            let bp = basis_cochains(named.complex, p);
            let bq = basis_cochains(named.complex, q);
            for a in &bp {
                for b in &bq {
                    check(&mut t, named, a, b, true)?;
                }
            }
        }
        let mut rng = ctx.rng(suite, c);
        for _ in 0..ctx.config.cases {
            let room = cap.saturating_sub(1);
            let p = rng.gen_range(0..=room.min(2));
            let q = rng.gen_range(0..=(room - p).min(2));
            let a = random_alternative(named.complex, p, 3, &mut rng);
            let b = random_alternative(named.complex, q, 3, &mut rng);
            check(&mut t, named, &a, &b, false)?;
        }
    }
    Ok((t, all_names(ctx)))
}

fn preserves_alternative(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    for named in &ctx.complexes {
        for n in 0..=ctx.top() {
            for phi in basis_cochains(named.complex, n) {
                let d = coboundary(named.complex, &phi, &limits)?;
                let ok = is_alternative(&d, &limits)?;
                t.exhaustive(
                    ok,
                    || json!({ "complex": named.name, "alpha": cochain_json(&phi) }),
                );
            }
        }
    }
    Ok((t, all_names(ctx)))
}

fn commutes_with_a(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    for named in &ctx.complexes {
        let index = ctx.index(named.complex, ctx.top())?;
        for n in 0..=ctx.top() {
            for g in index.generators(n) {
                let e = RationalCochain::indicator(g.clone());
                let lhs = alternative_maker(&coboundary(named.complex, &e, &limits)?, &limits)?;
                let rhs = coboundary(named.complex, &alternative_maker(&e, &limits)?, &limits)?;
                t.exhaustive(lhs == rhs, || {
                    json!({
                        "complex": named.name, "alpha": cochain_json(&e),
                        "witness": difference_witness(&lhs, &rhs),
                    })
                });
            }
        }
    }
    Ok((t, all_names(ctx)))
}

fn naturality(ctx: &Ctx, suite: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    let top = ctx.top().min(3);
    let target = full_simplex(3);
    let target_index = ctx.index(&target, top)?;
    for (c, named) in ctx.complexes.iter().enumerate() {
        let k = named.complex;
        let check = |t: &mut Tally,
                     f: &SimplicialMap,
                     alpha: &RationalCochain,
                     exhaustive: bool|
         -> Result<()> {
            let lhs = pull_back(f, k, &alternative_maker(alpha, &limits)?, &limits)?;
            let rhs = alternative_maker(&pull_back(f, k, alpha, &limits)?, &limits)?;
            let witness = || {
                json!({
                    "complex": named.name, "map": f.assignment(), "alpha": cochain_json(alpha),
                    "witness": difference_witness(&lhs, &rhs),
                })
            };
            if exhaustive {
                t.exhaustive(lhs == rhs, witness);
            } else {
                t.random(lhs == rhs, witness);
            }
            Ok(())
        };
        // identity and a constant map against every indicator of low degree
        let index = ctx.index(k, top.min(2))?;
        let maps = [
            SimplicialMap::identity(k),
            SimplicialMap::constant(k, k, 0)?,
        ];
        for f in &maps {
            for n in 0..=top.min(2) {
                for g in index.generators(n) {
                    check(&mut t, f, &RationalCochain::indicator(g.clone()), true)?;
                }
            }
        }
        // random vertex assignments into the full 3-simplex
        let mut rng = ctx.rng(suite, c);
        for _ in 0..ctx.config.cases {
            let assignment: Vec<usize> =
                (0..k.vertex_count()).map(|_| rng.gen_range(0..4)).collect();
            let f = SimplicialMap::new(k, &target, assignment)?;
            let n = rng.gen_range(0..=top);
            let alpha = random_cochain(&target_index, n, &mut rng);
            check(&mut t, &f, &alpha, false)?;
        }
    }
    Ok((t, all_names(ctx)))
}

fn classes(complex: &SimplicialComplex, n: usize) -> Vec<AltChainClass> {
    canonical_tuples(complex, n)
        .into_iter()
        .map(AltChainClass::from_sorted)
        .collect()
}

fn alt_chain_complex_suite(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let canon = ctx.config.kernels.canonicalize;
    let cap = ctx.config.limits.degree_cap;
    for named in &ctx.complexes {
        for n in 2..=cap {
            for class in classes(named.complex, n) {
                let c = AltChain::from_class(&class, 1);
                let witness = || json!({ "complex": named.name, "class": class });
                let Some(d) = t.guard(boundary_with(&c, canon), true, witness) else {
                    continue;
                };
                let Some(dd) = t.guard(boundary_with(&d, canon), true, witness) else {
                    continue;
                };
                t.exhaustive(dd.is_zero(), || {
                    json!({ "complex": named.name, "class": class, "boundary_of_boundary": format!("{dd:?}") })
                });
            }
        }
        let presented = alt_chain_complex_with(named.complex, &ctx.config.limits, canon)
            .and_then(|p| check_presentation(&p));
        let ok = presented.is_ok();
        t.exhaustive(
            ok,
            || json!({ "complex": named.name, "error": presented.err().map(|e| e.to_string()) }),
        );
    }
    Ok((t, all_names(ctx)))
}

fn torsion_boundary(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let canon = ctx.config.kernels.canonicalize;
    for named in &ctx.complexes {
        for n in 1..=ctx.config.limits.degree_cap {
            for class in classes(named.complex, n)
                .into_iter()
                .filter(|c| c.is_torsion())
            {
                let d = class_boundary_with(&class, canon);
                t.exhaustive(d.free_part().is_empty(), || {
                    json!({ "complex": named.name, "class": class, "boundary": format!("{d:?}") })
                });
                // equal adjacent entries give equal faces entering with opposite signs
                let rep = class.representative();
                for j in 0..n {
                    if class.tuple()[j] == class.tuple()[j + 1] {
                        let ok = rep.face(j)? == rep.face(j + 1)?;
                        t.exhaustive(
                            ok,
                            || json!({ "complex": named.name, "class": class, "position": j }),
                        );
                    }
                }
            }
        }
    }
    // the surviving face of (a, a, b) is the torsion class (a, a)
    let aab = AltChainClass::from_sorted(vec![0, 0, 1]);
    let d = class_boundary_with(&aab, canon);
    let expected = AltChain::from_class(&AltChainClass::from_sorted(vec![0, 0]), 1);
    t.exhaustive(
        d == expected,
        || json!({ "class": aab, "boundary": format!("{d:?}") }),
    );
    Ok((t, all_names(ctx)))
}

fn face_class_compat_suite(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let canon = ctx.config.kernels.canonicalize;
    let pcap = ctx.config.limits.permutation_cap;
    for named in &ctx.complexes {
        let index = ctx.index(named.complex, ctx.top())?;
        for n in 1..=ctx.top() {
            let face_group = enumerate_group(n, pcap)?;
            let group = enumerate_group(n + 1, pcap)?;
            for g in index.generators(n) {
                for s in face_group {
                    for i in 0..=n {
                        let ok = face_class_compat_with(g, s, i, canon)?;
                        t.exhaustive(
                            ok,
                            || json!({ "complex": named.name, "generator": g, "s": s, "i": i }),
                        );
                    }
                }
                let base = AltChain::from_chain_with(&Chain::generator(g.clone()), canon);
                let witness = || json!({ "complex": named.name, "generator": g });
                let Some(db) = t.guard(boundary_with(&base, canon), true, witness) else {
                    continue;
                };
                for s in group {
                    let moved = AltChain::from_chain_with(&Chain::generator(s.act(g)?), canon);
                    let witness = || json!({ "complex": named.name, "generator": g, "s": s });
                    let Some(dm) = t.guard(boundary_with(&moved, canon), true, witness) else {
                        continue;
                    };
                    let ok = dm == db.scale(s.sign() as i64);
                    t.exhaustive(ok, || {
                        json!({
                            "complex": named.name, "generator": g, "s": s,
                            "moved_boundary": format!("{dm:?}"), "boundary": format!("{db:?}"),
                        })
                    });
                }
            }
        }
    }
    Ok((t, all_names(ctx)))
}

fn degree_zero(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits().with_degree_cap(1);
    for named in &ctx.complexes {
        let k = named.complex;
        let index = ctx.index(k, 1)?;
        for g in index.generators(0) {
            let ok = is_alternative(&RationalCochain::indicator(g.clone()), &limits)?;
            t.exhaustive(ok, || json!({ "complex": named.name, "generator": g }));
        }
        let full = cohomology_rational(&full_coboundaries(k, &index, &limits)?)?;
        let alt = cohomology_rational(&alternative_coboundaries(k, 1, &limits)?)?;
        let components = k.component_count();
        t.exhaustive(full[0] == components && alt[0] == components, || {
            json!({ "complex": named.name, "full": full[0], "alternative": alt[0], "components": components })
        });
        let Some((_, ha)) = present_homology(
            &mut t,
            &named.name,
            k,
            &limits,
            ctx.config.kernels.canonicalize,
        ) else {
            continue;
        };
        let (_, d) = ordered_boundaries(k, &limits)?;
        let h = homology_free(&d)?;
        let ok = ha[0] == h[0] && h[0] == AbelianGroup::free(components);
        t.exhaustive(ok, || {
            json!({ "complex": named.name, "alternative": ha[0].to_string(), "ordered": h[0].to_string() })
        });
    }
    Ok((t, all_names(ctx)))
}

/// Presentation and presented homology, with failures counted against `t`.
fn present_homology(
    t: &mut Tally,
    name: &str,
    complex: &SimplicialComplex,
    limits: &Limits,
    canon: CanonicalizeFn,
) -> Option<(AltPresentation, Vec<AbelianGroup>)> {
    let r = alt_chain_complex_with(complex, limits, canon)
        .and_then(|p| homology_presented(&p).map(|h| (p, h)));
    t.guard(r, true, || json!({ "complex": name }))
}

fn group_strings(groups: &[AbelianGroup]) -> Vec<String> {
    groups.iter().map(ToString::to_string).collect()
}

fn homology_isomorphism(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.homology_limits();
    for named in &ctx.complexes {
        let k = named.complex;
        let Some((presented, ha)) = present_homology(
            &mut t,
            &named.name,
            k,
            &limits,
            ctx.config.kernels.canonicalize,
        ) else {
            continue;
        };
        let (_, d) = ordered_boundaries(k, &limits)?;
        let h = homology_free(&d)?;
        let hs = homology_free(&simplicial_boundaries(k, limits.degree_cap))?;
        for n in 0..ha.len() {
            t.exhaustive(ha[n] == h[n] && h[n] == hs[n], || {
                json!({
                    "complex": named.name, "degree": n,
                    "alternative": group_strings(&ha), "ordered": group_strings(&h), "simplicial": group_strings(&hs),
                })
            });
        }
        // Euler characteristic: when the cap exceeds the dimension the free
        // generators are the simplices and the alternating sums must agree
        if limits.degree_cap > k.dimension() {
            let chi_cells: i64 = presented
                .degrees
                .iter()
                .map(|d| {
                    let c = d.free_generators.len() as i64;
                    if d.degree % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum();
            let chi_betti: i64 = ha
                .iter()
                .enumerate()
                .map(|(n, g)| {
                    if n % 2 == 0 {
                        g.free_rank as i64
                    } else {
                        -(g.free_rank as i64)
                    }
                })
                .sum();
            t.exhaustive(
                chi_cells == chi_betti,
                || json!({ "complex": named.name, "cells": chi_cells, "betti": chi_betti }),
            );
        }
    }
    Ok((t, all_names(ctx)))
}

fn cohomology_splitting(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.homology_limits();
    for named in &ctx.complexes {
        for n in 0..=2.min(limits.degree_cap.saturating_sub(1)) {
            let r = verify_cohomology_splitting(named.complex, n, &limits)?;
            let ok = r.is_isomorphism() && r.full_rank == r.alternative_rank;
            t.exhaustive(ok, || {
                let mut w = serde_json::to_value(&r).expect("report serializes");
                w["complex"] = json!(named.name);
                w
            });
        }
    }
    Ok((t, all_names(ctx)))
}

fn duality(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.homology_limits();
    for named in &ctx.complexes {
        let k = named.complex;
        let Some((presented, ha)) = present_homology(
            &mut t,
            &named.name,
            k,
            &limits,
            ctx.config.kernels.canonicalize,
        ) else {
            continue;
        };
        for d in &presented.degrees {
            let dim = AltBasis::new(k, d.degree).dimension();
            t.exhaustive(dim == d.free_generators.len(), || {
                json!({ "complex": named.name, "degree": d.degree, "alternative_cochains": dim, "free_generators": d.free_generators.len() })
            });
        }
        let betti = cohomology_rational(&alternative_coboundaries(k, limits.degree_cap, &limits)?)?;
        for n in 0..ha.len() {
            t.exhaustive(betti[n] == ha[n].free_rank, || {
                json!({ "complex": named.name, "degree": n, "cohomology_rank": betti[n], "homology": ha[n].to_string() })
            });
        }
    }
    Ok((t, all_names(ctx)))
}

/// Contiguous pairs exercised by the homotopy suites: the identity on every
/// complex, two constant maps to the ends of an edge, and the cone
/// contractions of the full 2- and 3-simplex.
fn homotopy_fixtures(ctx: &Ctx) -> Result<Vec<(String, SimplicialComplex, CombinatorialHomotopy)>> {
    let mut out = Vec::new();
    for named in &ctx.complexes {
        let k = named.complex;
        let id = SimplicialMap::identity(k);
        out.push((
            format!("{}:identity", named.name),
            k.clone(),
            CombinatorialHomotopy::new(k, k, id.clone(), id)?,
        ));
        if let Some(edge) = k.simplices_of_dim(1).next() {
            let f = SimplicialMap::constant(k, k, edge[0])?;
            let g = SimplicialMap::constant(k, k, edge[1])?;
            out.push((
                format!("{}:constant{}-{}", named.name, edge[0], edge[1]),
                k.clone(),
                CombinatorialHomotopy::new(k, k, f, g)?,
            ));
        }
    }
    for dim in [2, 3] {
        let k = full_simplex(dim);
        let f = SimplicialMap::constant(&k, &k, 0)?;
        let g = SimplicialMap::identity(&k);
        out.push((
            format!("simplex{dim}:cone"),
            k.clone(),
            CombinatorialHomotopy::new(&k, &k, f, g)?,
        ));
    }
    Ok(out)
}

fn prism_identity(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let canon = ctx.config.kernels.canonicalize;
    let pcap = ctx.config.limits.permutation_cap;
    let fixtures = homotopy_fixtures(ctx)?;
    for (name, k, h) in &fixtures {
        let index = ctx.index(k, ctx.top())?;
        for n in 0..=ctx.top() {
            for g in index.generators(n) {
                let defect = h.identity_defect(&Chain::generator(g.clone()));
                t.exhaustive(
                    defect.is_zero(),
                    || json!({ "homotopy": name, "generator": g, "defect": format!("{defect:?}") }),
                );
            }
            for class in classes(k, n) {
                let c = AltChain::from_class(&class, 1);
                let witness = || json!({ "homotopy": name, "class": class });
                let Some(defect) = t.guard(h.alt_identity_defect_with(&c, canon), true, witness)
                else {
                    continue;
                };
                t.exhaustive(
                    defect.is_zero(),
                    || json!({ "homotopy": name, "class": class, "defect": format!("{defect:?}") }),
                );
            }
        }
        // coset well-definedness on reorderings
        for n in 0..=ctx.top().min(2) {
            let group = enumerate_group(n + 1, pcap)?;
            for g in index.generators(n) {
                let base = h.prism_alt_with(
                    &AltChain::from_chain_with(&Chain::generator(g.clone()), canon),
                    canon,
                );
                for s in group {
                    let moved = AltChain::from_chain_with(&Chain::generator(s.act(g)?), canon);
                    let p = h.prism_alt_with(&moved, canon);
                    t.exhaustive(
                        p == base.scale(s.sign() as i64),
                        || json!({ "homotopy": name, "generator": g, "s": s }),
                    );
                }
            }
        }
    }
    Ok((t, fixtures.into_iter().map(|(n, _, _)| n).collect()))
}

fn homotopy_invariance(ctx: &Ctx, _: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.homology_limits();
    let fixtures = homotopy_fixtures(ctx)?;
    for (name, k, h) in &fixtures {
        let ordered = induced_maps_agree_ordered(h, k, k, &limits)?;
        t.exhaustive(
            ordered,
            || json!({ "homotopy": name, "homology": "ordered" }),
        );
        let Some((p, _)) =
            present_homology(&mut t, name, k, &limits, ctx.config.kernels.canonicalize)
        else {
            continue;
        };
        let agree = induced_maps_agree_alternative(h, &p, &p);
        let Some(alternative) = t.guard(agree, true, || json!({ "homotopy": name })) else {
            continue;
        };
        t.exhaustive(
            alternative,
            || json!({ "homotopy": name, "homology": "alternative" }),
        );
        let cohomology = pullbacks_agree(h, k, k, &limits)?;
        t.exhaustive(
            cohomology,
            || json!({ "homotopy": name, "homology": "alternative cohomology" }),
        );
    }
    Ok((t, fixtures.into_iter().map(|(n, _, _)| n).collect()))
}

/// `A(α ⌣ δα)` evaluated generator by generator from the defining permutation sum.
fn residual_oracle(
    complex: &SimplicialComplex,
    alpha: &RationalCochain,
    limits: &Limits,
) -> Result<RationalCochain> {
    let p = alpha.degree();
    let n = 2 * p + 1;
    let d = coboundary(complex, alpha, limits)?;
    let index = enumerate_generators(complex, n, limits.generator_budget)?;
    let group = enumerate_group(n + 1, limits.permutation_cap)?;
    let factorial: BigInt = (1..=n + 1).map(BigInt::from).product();
    let mut values = Vec::new();
    for g in index.generators(n) {
        let mut sum = Rational::zero();
        for s in group {
            let h = s.act(g)?;
            let front = alpha.get(&h.front(p));
            if front.is_zero() {
                continue;
            }
            let term = front * d.get(&h.back(p));
            if s.sign() > 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        if !sum.is_zero() {
            values.push((
                g.clone(),
                sum / BigRational::from_integer(factorial.clone()),
            ));
        }
    }
    RationalCochain::from_values(n, values)
}

fn residual(ctx: &Ctx, suite: usize) -> Result<(Tally, Vec<String>)> {
    let mut t = Tally::default();
    let limits = ctx.limits();
    let cap = limits.degree_cap;
    for (c, named) in ctx.complexes.iter().enumerate() {
        let k = named.complex;
        // closed inputs: constants, and coboundaries of vertex indicators
        let index = ctx.index(k, 0)?;
        let one = RationalCochain::from_values(
            0,
            index
                .generators(0)
                .iter()
                .map(|g| (g.clone(), Rational::one())),
        )?;
        let mut closed = vec![one];
        if cap >= 3 {
            for phi in basis_cochains(k, 0) {
                closed.push(coboundary(k, &phi, &limits)?);
            }
        }
        for alpha in &closed {
            let r = nonlinear_residual(k, alpha, &limits)?;
            t.exhaustive(
                r.is_zero(),
                || json!({ "complex": named.name, "alpha": cochain_json(alpha) }),
            );
        }
        let mut rng = ctx.rng(suite, c);
        let max_p = if cap >= 3 { 1 } else { 0 };
        for _ in 0..ctx.config.cases.min(50) {
            let p = rng.gen_range(0..=max_p);
            let alpha = random_alternative(k, p, 3, &mut rng);
            let r = nonlinear_residual(k, &alpha, &limits)?;
            let oracle = residual_oracle(k, &alpha, &limits)?;
            t.random(r == oracle, || {
                json!({
                    "complex": named.name, "alpha": cochain_json(&alpha),
                    "witness": difference_witness(&r, &oracle),
                })
            });
        }
    }
    Ok((t, all_names(ctx)))
}
