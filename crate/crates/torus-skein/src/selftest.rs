//! Seeded randomized self-test: every algebraic law the library relies on,
//! exercised end to end with reproducible inputs. Reports are a pure
//! function of (seed, cases, max_index, mode).

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{multiply_basis, CurveIndex, SimpleElement, SkeinElement};
use crate::error::SkeinError;
use crate::quotient::{
    commutator_witness, elements_approx_eq, phi_map, reduce_mod_commutators, verify_certificate,
    ALL_CLASSES,
};
use crate::scalar::{LaurentPoly, Scalar, ScalarContext, ScalarMode};

const AGREEMENT_DEFAULT_T: Complex64 = Complex64 { re: 0.7, im: 0.3 };
const NUMERIC_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct SelfTestConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_index: i64,
    pub mode: ScalarMode,
    /// Specialization point for numeric mode; also used by the
    /// numeric/exact agreement suite when present.
    pub t: Option<Complex64>,
}

impl SelfTestConfig {
    pub fn exact(seed: u64, cases: usize, max_index: i64) -> Self {
        assert!(cases >= 1 && max_index >= 1);
        Self {
            seed,
            cases,
            max_index,
            mode: ScalarMode::Exact,
            t: None,
        }
    }

    pub fn numeric(seed: u64, cases: usize, max_index: i64, t: Complex64) -> Self {
        assert!(cases >= 1 && max_index >= 1);
        Self {
            seed,
            cases,
            max_index,
            mode: ScalarMode::Numeric,
            t: Some(t),
        }
    }

    fn ctx(&self) -> ScalarContext {
        match self.mode {
            ScalarMode::Exact => ScalarContext::exact(),
            ScalarMode::Numeric => ScalarContext::numeric(self.t.unwrap()).unwrap(),
        }
    }

    fn agreement_t(&self) -> Complex64 {
        self.t.unwrap_or(AGREEMENT_DEFAULT_T)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfTestReport {
    pub seed: u64,
    pub cases: usize,
    pub max_index: i64,
    pub mode: ScalarMode,
    pub suites: Vec<SuiteResult>,
}

impl SelfTestReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(|s| s.failures == 0)
    }

    pub fn to_value(&self) -> Value {
        json!({
            "seed": self.seed,
            "cases": self.cases,
            "max_index": self.max_index,
            "mode": match self.mode { ScalarMode::Exact => "exact", ScalarMode::Numeric => "numeric" },
            "suites": self.suites.iter().map(|s| json!({
                "name": s.name,
                "cases": s.cases,
                "failures": s.failures,
            })).collect::<Vec<_>>(),
            "ok": self.ok(),
        })
    }
}

impl fmt::Display for SelfTestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "selftest seed={} cases={} max-index={} mode={}",
            self.seed,
            self.cases,
            self.max_index,
            match self.mode {
                ScalarMode::Exact => "exact",
                ScalarMode::Numeric => "numeric",
            }
        )?;
        for s in &self.suites {
            writeln!(
                f,
                "  {:<24} {} cases, {} failures [{}]",
                s.name,
                s.cases,
                s.failures,
                if s.failures == 0 { "ok" } else { "FAIL" }
            )?;
        }
        write!(f, "result: {}", if self.ok() { "ok" } else { "FAIL" })
    }
}

type MultiplyFn =
    dyn Fn(&SkeinElement, &SkeinElement, &ScalarContext) -> Result<SkeinElement, SkeinError>;

pub fn run_selftest(cfg: &SelfTestConfig) -> SelfTestReport {
    let standard_multiply: Box<MultiplyFn> = Box::new(|a, b, ctx| a.multiply(b, ctx));
    run_selftest_with(cfg, &standard_multiply)
}

/// Same as [`run_selftest`] but with a pluggable product, so that a
/// corrupted multiplication is observably caught by the suites.
pub fn run_selftest_with(cfg: &SelfTestConfig, multiply: &MultiplyFn) -> SelfTestReport {
    let suites = vec![
        associativity(cfg, multiply),
        sign_independence(cfg),
        trace_symmetry(cfg, multiply),
        kernel_containment(cfg, multiply),
        witness_soundness(cfg),
        certificate_round_trip(cfg),
        chebyshev_round_trip(cfg),
        numeric_exact_agreement(cfg),
    ];
    SelfTestReport {
        seed: cfg.seed,
        cases: cfg.cases,
        max_index: cfg.max_index,
        mode: cfg.mode,
        suites,
    }
}

fn rng_for(cfg: &SelfTestConfig, suite_index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        cfg.seed
            .wrapping_mul(0x9e3779b97f4a7c15)
            .wrapping_add(suite_index),
    )
}

fn rand_index(rng: &mut ChaCha8Rng, max_index: i64) -> CurveIndex {
    CurveIndex::new(
        rng.gen_range(-max_index..=max_index),
        rng.gen_range(-max_index..=max_index),
    )
}

fn rand_coeff(rng: &mut ChaCha8Rng, ctx: &ScalarContext) -> Scalar {
    match ctx.mode() {
        ScalarMode::Exact => {
            let terms = rng.gen_range(1..=2);
            let mut p = LaurentPoly::zero();
            for _ in 0..terms {
                let c = loop {
                    let c = rng.gen_range(-9i64..=9);
                    if c != 0 {
                        break c;
                    }
                };
                p.add_term(rng.gen_range(-3i64..=3), c.into());
            }
            if p.is_zero() {
                p = LaurentPoly::one();
            }
            Scalar::from(p)
        }
        ScalarMode::Numeric => Scalar::Numeric(Complex64::new(
            rng.gen_range(-9i32..=9) as f64,
            rng.gen_range(-9i32..=9) as f64,
        )),
    }
}

fn rand_element(
    rng: &mut ChaCha8Rng,
    ctx: &ScalarContext,
    max_terms: usize,
    max_index: i64,
) -> SkeinElement {
    let mut e = SkeinElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let idx = rand_index(rng, max_index);
        let c = rand_coeff(rng, ctx);
        let _ = e.add_term(idx, c, ctx);
    }
    e
}

fn equal(ctx: &ScalarContext, a: &SkeinElement, b: &SkeinElement) -> bool {
    match ctx.mode() {
        ScalarMode::Exact => a == b,
        ScalarMode::Numeric => elements_approx_eq(a, b, NUMERIC_TOLERANCE),
    }
}

fn associativity(cfg: &SelfTestConfig, multiply: &MultiplyFn) -> SuiteResult {
    let ctx = cfg.ctx();
    let mut rng = rng_for(cfg, 0);
    let mut failures = 0;
    for _ in 0..cfg.cases {
        let a = rand_element(&mut rng, &ctx, 3, cfg.max_index);
        let b = rand_element(&mut rng, &ctx, 3, cfg.max_index);
        let c = rand_element(&mut rng, &ctx, 3, cfg.max_index);
        let ok = (|| -> Result<bool, SkeinError> {
            let ab_c = multiply(&multiply(&a, &b, &ctx)?, &c, &ctx)?;
            let a_bc = multiply(&a, &multiply(&b, &c, &ctx)?, &ctx)?;
            Ok(equal(&ctx, &ab_c, &a_bc))
        })()
        .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    SuiteResult {
        name: "associativity",
        cases: cfg.cases,
        failures,
    }
}

/// The basis product applied to raw (non-canonical) sign representatives
/// must give the same element for all four sign choices, and agree with
/// the canonical product.
fn sign_independence(cfg: &SelfTestConfig) -> SuiteResult {
    let ctx = cfg.ctx();
    let mut rng = rng_for(cfg, 1);
    let mut failures = 0;
    for _ in 0..cfg.cases {
        let (p, q) = (
            rng.gen_range(-cfg.max_index..=cfg.max_index),
            rng.gen_range(-cfg.max_index..=cfg.max_index),
        );
        let (r, s) = (
            rng.gen_range(-cfg.max_index..=cfg.max_index),
            rng.gen_range(-cfg.max_index..=cfg.max_index),
        );
        let ok = (|| -> Result<bool, SkeinError> {
            let reference = raw_product(p, q, r, s, &ctx)?;
            for (sp, sq) in [(p, q), (-p, -q)] {
                for (sr, ss) in [(r, s), (-r, -s)] {
                    if !equal(&ctx, &raw_product(sp, sq, sr, ss, &ctx)?, &reference) {
                        return Ok(false);
                    }
                }
            }
            let canonical = multiply_basis(CurveIndex::new(p, q), CurveIndex::new(r, s), &ctx)?;
            Ok(equal(&ctx, &canonical, &reference))
        })()
        .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    SuiteResult {
        name: "sign-independence",
        cases: cfg.cases,
        failures,
    }
}

/// Product-to-sum applied verbatim to raw integer pairs, canonicalizing
/// only the output indices.
pub(crate) fn raw_product(
    p: i64,
    q: i64,
    r: i64,
    s: i64,
    ctx: &ScalarContext,
) -> Result<SkeinElement, SkeinError> {
    if p == 0 && q == 0 {
        return Ok(SkeinElement::basis(CurveIndex::new(r, s), ctx));
    }
    if r == 0 && s == 0 {
        return Ok(SkeinElement::basis(CurveIndex::new(p, q), ctx));
    }
    let d = p * s - q * r;
    let mut out = SkeinElement::zero();
    for (exp, u, v) in [(d, p + r, q + s), (-d, p - r, q - s)] {
        let idx = CurveIndex::new(u, v);
        let mut coeff = ctx.monomial(exp);
        if idx.is_zero() {
            coeff = ctx.add(&coeff, &coeff)?;
        }
        out.add_term(idx, coeff, ctx)?;
    }
    Ok(out)
}

fn trace_symmetry(cfg: &SelfTestConfig, multiply: &MultiplyFn) -> SuiteResult {
    let ctx = cfg.ctx();
    let mut rng = rng_for(cfg, 2);
    let mut failures = 0;
    for _ in 0..cfg.cases {
        let a = rand_element(&mut rng, &ctx, 5, cfg.max_index);
        let b = rand_element(&mut rng, &ctx, 5, cfg.max_index);
        let ok = (|| -> Result<bool, SkeinError> {
            let ab = phi_map(&multiply(&a, &b, &ctx)?, &ctx)?;
            let ba = phi_map(&multiply(&b, &a, &ctx)?, &ctx)?;
            Ok(ALL_CLASSES
                .iter()
                .all(|c| scalar_close(ab.component(*c), ba.component(*c), ctx.mode())))
        })()
        .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    SuiteResult {
        name: "trace-symmetry",
        cases: cfg.cases,
        failures,
    }
}

fn kernel_containment(cfg: &SelfTestConfig, multiply: &MultiplyFn) -> SuiteResult {
    let ctx = cfg.ctx();
    let mut rng = rng_for(cfg, 3);
    let mut failures = 0;
    for _ in 0..cfg.cases {
        let a = rand_element(&mut rng, &ctx, 5, cfg.max_index);
        let b = rand_element(&mut rng, &ctx, 5, cfg.max_index);
        let ok = (|| -> Result<bool, SkeinError> {
            let ab = multiply(&a, &b, &ctx)?;
            let ba = multiply(&b, &a, &ctx)?;
            let v = phi_map(&ab.sub(&ba, &ctx)?, &ctx)?;
            match ctx.mode() {
                ScalarMode::Exact => Ok(ALL_CLASSES.iter().all(|c| v.component(*c).is_zero())),
                ScalarMode::Numeric => {
                    // The class sums cancel catastrophically, so judge the
                    // residue against the magnitude of what was summed.
                    let scale = element_magnitude(&ab).max(element_magnitude(&ba)).max(1.0);
                    Ok(ALL_CLASSES.iter().all(|c| {
                        v.component(*c)
                            .as_numeric()
                            .map(|z| z.norm())
                            .unwrap_or(f64::MAX)
                            <= NUMERIC_TOLERANCE * scale
                    }))
                }
            }
        })()
        .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    SuiteResult {
        name: "kernel-containment",
        cases: cfg.cases,
        failures,
    }
}

fn element_magnitude(e: &SkeinElement) -> f64 {
    e.terms()
        .filter_map(|(_, s)| s.as_numeric().map(|z| z.norm()))
        .fold(0.0, f64::max)
}

fn witness_soundness(cfg: &SelfTestConfig) -> SuiteResult {
    let ctx = cfg.ctx();
    let mut rng = rng_for(cfg, 4);
    let mut failures = 0;
    for _ in 0..cfg.cases {
        let (x, y, z, w) = random_witness_quadruple(&mut rng, cfg.max_index.max(2));
        let ok = (|| -> Result<bool, SkeinError> {
            let wit = commutator_witness(x, y, z, w, &ctx)?;
            let expanded = wit.expand(&ctx)?;
            let mut target = SkeinElement::basis(CurveIndex::new(x, y), &ctx);
            target = target.sub(&SkeinElement::basis(CurveIndex::new(z, w), &ctx), &ctx)?;
            Ok(equal(&ctx, &expanded, &target))
        })()
        .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    SuiteResult {
        name: "witness-soundness",
        cases: cfg.cases,
        failures,
    }
}

pub(crate) fn random_witness_quadruple(rng: &mut ChaCha8Rng, max: i64) -> (i64, i64, i64, i64) {
    loop {
        let x = rng.gen_range(-max..=max);
        let y = rng.gen_range(-max..=max);
        let z = rng.gen_range(-max..=max);
        let w = rng.gen_range(-max..=max);
        if (x + z) % 2 == 0 && (y + w) % 2 == 0 && x * w - y * z != 0 {
            return (x, y, z, w);
        }
    }
}

fn certificate_round_trip(cfg: &SelfTestConfig) -> SuiteResult {
    let ctx = cfg.ctx();
    let mut rng = rng_for(cfg, 5);
    let mut failures = 0;
    for _ in 0..cfg.cases {
        let e = rand_element(&mut rng, &ctx, 5, cfg.max_index);
        let ok = (|| -> Result<bool, SkeinError> {
            let cert = reduce_mod_commutators(&e, &ctx)?;
            if !verify_certificate(&e, &cert, &ctx)? {
                return Ok(false);
            }
            let ve = phi_map(&e, &ctx)?;
            Ok(ALL_CLASSES
                .iter()
                .all(|c| scalar_close(ve.component(*c), cert.residual.component(*c), ctx.mode())))
        })()
        .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    SuiteResult {
        name: "certificate-round-trip",
        cases: cfg.cases,
        failures,
    }
}

fn chebyshev_round_trip(cfg: &SelfTestConfig) -> SuiteResult {
    let ctx = cfg.ctx();
    let mut rng = rng_for(cfg, 6);
    let mut failures = 0;
    for _ in 0..cfg.cases {
        let idx = loop {
            let c = rand_index(&mut rng, cfg.max_index);
            if !c.is_zero() {
                break c;
            }
        };
        let ok = (|| -> Result<bool, SkeinError> {
            // T -> simple -> T on a single basis curve
            let e = SkeinElement::basis(idx, &ctx);
            if !equal(&ctx, &e.to_simple(&ctx)?.to_t(&ctx)?, &e) {
                return Ok(false);
            }
            // simple -> T -> simple on a single parallel-copy term
            let (_, prim) = idx.gcd_split()?;
            let n = rng.gen_range(1..=8);
            let mut s = SimpleElement::zero();
            s.add_term(prim, n, ctx.one(), &ctx)?;
            let back = s.to_t(&ctx)?.to_simple(&ctx)?;
            Ok(match ctx.mode() {
                ScalarMode::Exact => back == s,
                ScalarMode::Numeric => equal(&ctx, &back.to_t(&ctx)?, &s.to_t(&ctx)?),
            })
        })()
        .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    SuiteResult {
        name: "chebyshev-round-trip",
        cases: cfg.cases,
        failures,
    }
}

/// Exact products evaluated at t0 agree with the same product computed
/// numerically from the start.
fn numeric_exact_agreement(cfg: &SelfTestConfig) -> SuiteResult {
    let exact = ScalarContext::exact();
    let t0 = cfg.agreement_t();
    let numeric = match ScalarContext::numeric(t0) {
        Ok(c) => c,
        Err(_) => {
            return SuiteResult {
                name: "numeric-exact-agreement",
                cases: cfg.cases,
                failures: cfg.cases,
            }
        }
    };
    let mut rng = rng_for(cfg, 7);
    let mut failures = 0;
    for _ in 0..cfg.cases {
        let a = rand_element(&mut rng, &exact, 3, cfg.max_index);
        let b = rand_element(&mut rng, &exact, 3, cfg.max_index);
        let ok = (|| -> Result<bool, SkeinError> {
            let exact_product = a.multiply(&b, &exact)?;
            let an = a.specialize(&numeric)?;
            let bn = b.specialize(&numeric)?;
            let numeric_product = an.multiply(&bn, &numeric)?;
            Ok(elements_approx_eq(
                &exact_product.specialize(&numeric)?,
                &numeric_product,
                NUMERIC_TOLERANCE,
            ))
        })()
        .unwrap_or(false);
        if !ok {
            failures += 1;
        }
    }
    SuiteResult {
        name: "numeric-exact-agreement",
        cases: cfg.cases,
        failures,
    }
}

fn scalar_close(a: &Scalar, b: &Scalar, mode: ScalarMode) -> bool {
    match mode {
        ScalarMode::Exact => a == b,
        ScalarMode::Numeric => {
            let (Some(x), Some(y)) = (a.as_numeric(), b.as_numeric()) else {
                return false;
            };
            (x - y).norm() <= NUMERIC_TOLERANCE * x.norm().max(y.norm()).max(1.0)
        }
    }
}
