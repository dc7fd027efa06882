//! Seeded verification suites for the equivalence theorems.
//!
//! Every suite draws its corpus from a ChaCha8 stream keyed by the
//! configured seed xor a per-suite salt, so results are reproducible and
//! independent of suite execution order.  All checks are exact; any witness
//! fails the suite and is reported as a rendered string.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::extension::{
    basis_gauge_limit, builtin, integral_equation_upper_bound, integrally_closed_probe,
    isometry_check, min_poly, spectral_norm_ext, ClosureWitness, UniPoly,
};
use crate::ideal::MonomialIdeal;
use crate::logvalue::LogValue;
use crate::poly::Polynomial;
use crate::rees::{in_closure_of_power, rees_valuations, samuel, samuel_bruteforce};
use crate::ring_class::{
    classify, rank_one_probe, shilov_boundary, valuative_probe, BiMonomial,
    BivariateLocalOracle, DvrOracle, ProbeOutcome, SemigroupOracle, ShilovClass, TPower,
};
use crate::scalar::{rat, rat_int, ExtRat};
use crate::seminorm::{gauge, is_boundary, spectral_limit, spectral_rees, GaugeMonoid, TateData};
use crate::star::{
    coarsest_check, divisor, divisor_add, divisor_inf, divisor_neg, divisor_sup, divisor_zero,
    star_axioms_check, wass_t_ideal_check, FractionalMonomialIdeal, StarOp,
};
use crate::{Verdict, DEFAULT_NAMES};

/// Bounds and the seed for the randomized suites.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Corpus size per suite.
    pub corpus: usize,
    /// Maximal number of variables.
    pub max_vars: usize,
    /// Maximal generator exponent per variable.
    pub max_exp: i64,
    /// Cutoff for doubling-limit brackets.
    pub limit_cutoff: u32,
    /// Bound for the valuative probes.
    pub probe_bound: u32,
    /// RNG seed.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            corpus: 50,
            max_vars: 3,
            max_exp: 6,
            limit_cutoff: 64,
            probe_bound: 20,
            seed: 7,
        }
    }
}

/// The individual suites, in canonical order.
pub const SUITES: [&str; 7] = [
    "samuel-closure",
    "boundary",
    "gauge",
    "star",
    "divisor-group",
    "shilov-cross-route",
    "extensions",
];

/// Outcome of one suite: the number of exact checks performed and the
/// rendered witnesses of any failures.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    /// Suite name.
    pub suite: String,
    /// Number of exact checks performed.
    pub checks: u64,
    /// Rendered counterexamples; empty on success.
    pub witnesses: Vec<String>,
}

impl SuiteReport {
    /// True when no witness was found.
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Runs one suite by name, or all of them for `"all"`.
pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    match name {
        "samuel-closure" => Ok(vec![samuel_closure_suite(config)?]),
        "boundary" => Ok(vec![boundary_suite(config)?]),
        "gauge" => Ok(vec![gauge_suite(config)?]),
        "star" => Ok(vec![star_suite(config)?]),
        "divisor-group" => Ok(vec![divisor_group_suite(config)?]),
        "shilov-cross-route" => Ok(vec![shilov_cross_route_suite(config)?]),
        "extensions" => Ok(vec![extensions_suite(config)?]),
        "all" => {
            let mut reports = Vec::with_capacity(SUITES.len());
            for suite in SUITES {
                reports.extend(run_suite(suite, config)?);
            }
            Ok(reports)
        }
        _ => Err(Error::invalid(format!(
            "unknown suite {name:?}; available: {}, all",
            SUITES.join(", ")
        ))),
    }
}

/// FNV-1a hash of the suite name, used to salt the seed so suites draw
/// independent streams.
fn suite_salt(name: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn suite_rng(config: &VerifyConfig, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(config.seed ^ suite_salt(name))
}

fn names(vars: usize) -> Vec<&'static str> {
    DEFAULT_NAMES[..vars].to_vec()
}

/// A random nonzero exponent vector with entries in `0..=max_exp`.
fn random_nonzero_exponent(rng: &mut ChaCha8Rng, vars: usize, max_exp: i64) -> ExponentVector {
    loop {
        let e = ExponentVector::new((0..vars).map(|_| rng.gen_range(0..=max_exp)).collect());
        if !e.is_zero() {
            return e;
        }
    }
}

/// A random proper nonzero monomial ideal: one to four nonzero generators.
fn random_proper_ideal(rng: &mut ChaCha8Rng, vars: usize, max_exp: i64) -> MonomialIdeal {
    let count = rng.gen_range(1..=4);
    let gens = (0..count).map(|_| random_nonzero_exponent(rng, vars, max_exp)).collect();
    MonomialIdeal::new(vars, gens).expect("dimensions agree")
}

/// A random polynomial with one to three terms and small nonzero integer
/// coefficients.
fn random_polynomial(rng: &mut ChaCha8Rng, vars: usize, max_exp: i64) -> Polynomial {
    let count = rng.gen_range(1..=3);
    let terms = (0..count)
        .map(|_| {
            let e = ExponentVector::new((0..vars).map(|_| rng.gen_range(0..=max_exp)).collect());
            let c = loop {
                let c = rng.gen_range(-3..=3i64);
                if c != 0 {
                    break c;
                }
            };
            (e, rat_int(c))
        })
        .collect();
    Polynomial::from_terms(vars, terms)
}

/// A random pseudo-uniformizer with total degree in `1..=total_cap`.
fn random_tate_data(rng: &mut ChaCha8Rng, max_vars: usize, total_cap: i64) -> TateData {
    let vars = rng.gen_range(1..=max_vars);
    loop {
        let omega =
            ExponentVector::new((0..vars).map(|_| rng.gen_range(0..=total_cap)).collect());
        let total = omega.total_degree();
        if total >= 1 && total <= total_cap {
            return TateData::new(vars, omega).expect("valid dimensions");
        }
    }
}

/// A deterministic corpus of pseudo-uniformizers, for checks that live
/// outside the named suites.
pub fn omega_corpus(seed: u64, count: usize, max_vars: usize, total_cap: i64) -> Vec<TateData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ suite_salt("omega-corpus"));
    (0..count).map(|_| random_tate_data(&mut rng, max_vars, total_cap)).collect()
}

/// A random fractional ideal over `data`: a shifted ideal with one crafted
/// generator supported inside `supp(a)` guaranteeing openness.
fn random_fractional(
    rng: &mut ChaCha8Rng,
    data: &TateData,
    max_exp: i64,
) -> FractionalMonomialIdeal {
    let supp = data.support();
    let open_gen = ExponentVector::new(
        (0..data.vars)
            .map(|i| if supp.contains(&i) { rng.gen_range(0..=max_exp) } else { 0 })
            .collect(),
    );
    let extra = rng.gen_range(0..=2);
    let mut gens = vec![open_gen];
    for _ in 0..extra {
        gens.push(ExponentVector::new(
            (0..data.vars).map(|_| rng.gen_range(0..=max_exp)).collect(),
        ));
    }
    let shift = rng.gen_range(-2..=2);
    let ideal = MonomialIdeal::new(data.vars, gens).expect("dimensions agree");
    FractionalMonomialIdeal::new(data, shift, ideal).expect("openness is crafted")
}

/// Samuel/closure equivalence and bracket realization: membership in the
/// closure of `Iⁿ` must match `ν̄_I(f) ≥ n`, and for monomial `f` the
/// brute-force bracket must close exactly at some `m ≤ 60`.
fn samuel_closure_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(config, "samuel-closure");
    let mut checks = 0u64;
    let mut witnesses = Vec::new();
    for _ in 0..config.corpus {
        let vars = rng.gen_range(1..=config.max_vars);
        let ideal = random_proper_ideal(&mut rng, vars, config.max_exp);
        for _ in 0..10 {
            let f = random_polynomial(&mut rng, vars, config.max_exp);
            let value = samuel(&ideal, &f)?;
            for n in 1..=3u32 {
                let lhs = in_closure_of_power(&ideal, &f, n)?;
                let rhs = value >= ExtRat::from_int(i64::from(n));
                checks += 1;
                if lhs != rhs {
                    witnesses.push(format!(
                        "closure/Samuel disagree at I = {}, f = {}, n = {n}: membership {lhs}, value {value:?}",
                        ideal.to_text(&names(vars)),
                        f.to_text(&names(vars)),
                    ));
                }
            }
        }
        let monomial = Polynomial::monomial(
            vars,
            random_nonzero_exponent(&mut rng, vars, config.max_exp),
            rat_int(1),
        );
        // The bracket budget is fixed at sixty powers by the contract.
        let bracket = samuel_bruteforce(&ideal, &monomial, 60)?;
        checks += 1;
        if !bracket.is_closed() {
            witnesses.push(format!(
                "bracket stays open at I = {}, f = {}: lower {:?} < upper {:?}",
                ideal.to_text(&names(vars)),
                monomial.to_text(&names(vars)),
                bracket.lower,
                bracket.upper,
            ));
        }
    }
    Ok(SuiteReport { suite: "samuel-closure".into(), checks, witnesses })
}

/// A 200-monomial corpus for boundary checking: for every coordinate of
/// `supp(a)` one crafted monomial that exposes dropping the corresponding
/// valuation, padded with random monomials (Laurent exponents allowed on
/// `supp(a)`).
pub fn boundary_corpus(data: &TateData, rng: &mut ChaCha8Rng, max_exp: i64) -> Vec<Polynomial> {
    let supp = data.support();
    let mut corpus: Vec<Polynomial> = supp
        .iter()
        .map(|&skip| {
            ExponentVector::new(
                (0..data.vars)
                    .map(|i| {
                        if i != skip && supp.contains(&i) {
                            3 * data.omega.entries[i]
                        } else {
                            0
                        }
                    })
                    .collect(),
            )
        })
        .map(|e| Polynomial::monomial(data.vars, e, rat_int(1)))
        .collect();
    while corpus.len() < 200 {
        let e = ExponentVector::new(
            (0..data.vars)
                .map(|i| {
                    let low = if supp.contains(&i) { -2 } else { 0 };
                    rng.gen_range(low..=max_exp)
                })
                .collect(),
        );
        corpus.push(Polynomial::monomial(data.vars, e, rat_int(1)));
    }
    corpus
}

/// Runs the boundary check for one pseudo-uniformizer on a fresh seeded
/// corpus at levels one through three.
pub fn boundary_check_instance(data: &TateData, seed: u64) -> Result<Verdict<(Polynomial, i64)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ suite_salt("boundary-instance"));
    let corpus = boundary_corpus(data, &mut rng, 6);
    is_boundary(data, &data.boundary_valuations(), &corpus, &[1, 2, 3])
}

/// Boundary minimality: the Rees set passes `is_boundary` on a 200-monomial
/// corpus, and dropping any single valuation produces a witness.
fn boundary_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(config, "boundary");
    let mut checks = 0u64;
    let mut witnesses = Vec::new();
    let levels = [1i64, 2, 3];
    for _ in 0..config.corpus {
        let data = random_tate_data(&mut rng, config.max_vars, 4);
        let corpus = boundary_corpus(&data, &mut rng, config.max_exp);
        let full = data.boundary_valuations();
        checks += 1;
        match is_boundary(&data, &full, &corpus, &levels)? {
            Verdict::Pass => {}
            Verdict::Witness((f, n)) => witnesses.push(format!(
                "Rees set rejected for omega = {}: f = {}, n = {n}",
                data.omega.format_monomial(&names(data.vars)),
                f.to_text(&names(data.vars)),
            )),
        }
        if full.len() >= 2 {
            for drop in 0..full.len() {
                let reduced: Vec<_> = full
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, v)| v.clone())
                    .collect();
                checks += 1;
                if is_boundary(&data, &reduced, &corpus, &levels)?.passed() {
                    witnesses.push(format!(
                        "dropping valuation {drop} of omega = {} was not detected",
                        data.omega.format_monomial(&names(data.vars)),
                    ));
                }
            }
        }
    }
    Ok(SuiteReport { suite: "boundary".into(), checks, witnesses })
}

/// Gauge agreement: the ring-monomial gauge equals the Rees spectral
/// seminorm on the full exponent box `0..=8` per variable, with exact
/// power scaling for `k ∈ {2, 3, 5}`.
fn gauge_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(config, "gauge");
    let mut checks = 0u64;
    let mut witnesses = Vec::new();
    for _ in 0..config.corpus {
        let data = random_tate_data(&mut rng, config.max_vars, 4);
        let monoid = GaugeMonoid::RingMonomials;
        let mut box_walker = vec![0i64; data.vars];
        loop {
            let b = ExponentVector::new(box_walker.clone());
            let g = gauge(&data, &monoid, &b)?;
            let s = spectral_rees(&data, &Polynomial::monomial(data.vars, b.clone(), rat_int(1)))?;
            checks += 1;
            if g != s {
                witnesses.push(format!(
                    "gauge {} != spectral {} at b = {}, omega = {}",
                    g,
                    s,
                    b.format_monomial(&names(data.vars)),
                    data.omega.format_monomial(&names(data.vars)),
                ));
            }
            for k in [2i64, 3, 5] {
                let scaled = gauge(&data, &monoid, &b.scale(k))?;
                checks += 1;
                if scaled != g.pow(k) {
                    witnesses.push(format!(
                        "gauge power scaling fails at b = {}, k = {k}, omega = {}",
                        b.format_monomial(&names(data.vars)),
                        data.omega.format_monomial(&names(data.vars)),
                    ));
                }
            }
            // Odometer over the box.
            let mut idx = 0;
            loop {
                if idx == box_walker.len() {
                    break;
                }
                box_walker[idx] += 1;
                if box_walker[idx] <= 8 {
                    break;
                }
                box_walker[idx] = 0;
                idx += 1;
            }
            if idx == box_walker.len() {
                break;
            }
        }
        // The doubling power limit brackets the same value via the plain
        // adic route; it need not close, but it must stay sound.
        for _ in 0..2 {
            let f = random_polynomial(&mut rng, data.vars, config.max_exp);
            let bracket = spectral_limit(&data, &f, config.limit_cutoff)?;
            let s = spectral_rees(&data, &f)?;
            checks += 1;
            if bracket.lower != s
                || bracket.upper < bracket.lower
                || (bracket.is_closed() && bracket.upper != bracket.lower)
            {
                witnesses.push(format!(
                    "power-limit bracket unsound at f = {}, omega = {}",
                    f.to_text(&names(data.vars)),
                    data.omega.format_monomial(&names(data.vars)),
                ));
            }
        }
    }
    Ok(SuiteReport { suite: "gauge".into(), checks, witnesses })
}

/// Star-operation axioms: the v-closure satisfies all four axioms plus
/// strictness, every registered operation stays below the v-closure, and
/// weakly associated primes are t-ideals.
fn star_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(config, "star");
    let mut checks = 0u64;
    let mut witnesses = Vec::new();
    let groups = (config.corpus / 10).max(1);
    for _ in 0..groups {
        let data = random_tate_data(&mut rng, config.max_vars, 4);
        let corpus: Vec<_> =
            (0..10).map(|_| random_fractional(&mut rng, &data, 4)).collect();
        checks += 1;
        if let Verdict::Witness(w) = star_axioms_check(&data, StarOp::VClosure, &corpus)? {
            witnesses.push(format!(
                "v-closure fails axiom {} on {} (omega = {})",
                w.axiom,
                w.first.to_text(&names(data.vars)),
                data.omega.format_monomial(&names(data.vars)),
            ));
        }
        for op in StarOp::REGISTERED {
            checks += 1;
            if let Verdict::Witness(i) = coarsest_check(&data, op, &corpus)? {
                witnesses.push(format!(
                    "{op} exceeds the v-closure on {} (omega = {})",
                    i.to_text(&names(data.vars)),
                    data.omega.format_monomial(&names(data.vars)),
                ));
            }
        }
    }
    for _ in 0..20 {
        let data = random_tate_data(&mut rng, config.max_vars, 4);
        checks += 1;
        if let Verdict::Witness(p) = wass_t_ideal_check(&data)? {
            witnesses.push(format!(
                "prime {} is not a t-ideal for omega = {}",
                p.to_text(&names(data.vars)),
                data.omega.format_monomial(&names(data.vars)),
            ));
        }
    }
    Ok(SuiteReport { suite: "star".into(), checks, witnesses })
}

/// Divisor-group laws: `div I + div(A:I) = div A`, the absorption laws, and
/// the modular identity `d₁ + d₂ = sup + inf`.
fn divisor_group_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(config, "divisor-group");
    let mut checks = 0u64;
    let mut witnesses = Vec::new();
    let groups = (config.corpus / 10).max(1);
    for _ in 0..groups {
        let data = random_tate_data(&mut rng, config.max_vars, 4);
        let zero = divisor_zero(&data);
        let corpus: Vec<_> =
            (0..10).map(|_| random_fractional(&mut rng, &data, 4)).collect();
        let divisors: Vec<_> =
            corpus.iter().map(|i| divisor(&data, i)).collect::<Result<_>>()?;
        for (i, d) in divisors.iter().enumerate() {
            let neg = divisor_neg(&data, d)?;
            checks += 1;
            if divisor_add(&data, d, &neg)? != zero {
                witnesses.push(format!(
                    "div I + div(A:I) misses zero at {} (omega = {})",
                    corpus[i].to_text(&names(data.vars)),
                    data.omega.format_monomial(&names(data.vars)),
                ));
            }
        }
        for pair in divisors.windows(2) {
            let (d1, d2) = (&pair[0], &pair[1]);
            let sup = divisor_sup(&data, d1, d2)?;
            let inf = divisor_inf(&data, d1, d2)?;
            checks += 1;
            if divisor_sup(&data, d1, &divisor_inf(&data, d1, d2)?)? != *d1
                || divisor_inf(&data, d1, &divisor_sup(&data, d1, d2)?)? != *d1
            {
                witnesses.push(format!(
                    "absorption law fails (omega = {})",
                    data.omega.format_monomial(&names(data.vars)),
                ));
            }
            checks += 1;
            if divisor_add(&data, d1, d2)? != divisor_add(&data, &sup, &inf)? {
                witnesses.push(format!(
                    "modular law fails (omega = {})",
                    data.omega.format_monomial(&names(data.vars)),
                ));
            }
        }
    }
    Ok(SuiteReport { suite: "divisor-group".into(), checks, witnesses })
}

/// Cross-route equality of the Shilov boundary with the Rees valuations,
/// the strongly-Shilov classification, and the three probe freezes.
fn shilov_cross_route_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(config, "shilov-cross-route");
    let mut checks = 0u64;
    let mut witnesses = Vec::new();
    for _ in 0..config.corpus {
        let data = random_tate_data(&mut rng, config.max_vars, 4);
        let shilov = shilov_boundary(&data)?;
        let rees = rees_valuations(&data.omega_ideal())?;
        checks += 1;
        if shilov != rees {
            witnesses.push(format!(
                "routes disagree for omega = {}: shilov {shilov:?}, rees {rees:?}",
                data.omega.format_monomial(&names(data.vars)),
            ));
        }
        checks += 1;
        if classify(&data)?.class != ShilovClass::Strongly {
            witnesses.push(format!(
                "classification is not strongly Shilov for omega = {}",
                data.omega.format_monomial(&names(data.vars)),
            ));
        }
    }
    let bound = config.probe_bound;
    checks += 1;
    if !valuative_probe(&DvrOracle, bound).is_valuative() || !rank_one_probe(&DvrOracle, bound) {
        witnesses.push("the DVR oracle failed the valuative probe".into());
    }
    checks += 1;
    let bivariate = valuative_probe(&BivariateLocalOracle, bound);
    if bivariate != (ProbeOutcome::Witness { f: BiMonomial { i: 0, j: 1 }, n: 1 }) {
        witnesses.push(format!("bivariate probe returned {bivariate:?}"));
    }
    checks += 1;
    if rank_one_probe(&BivariateLocalOracle, bound) {
        witnesses.push("the bivariate oracle passed the rank-one probe".into());
    }
    checks += 1;
    let semi = SemigroupOracle::new(&[2, 3])?;
    let semi_outcome = valuative_probe(&semi, bound);
    if semi_outcome != (ProbeOutcome::Witness { f: TPower(3), n: 1 }) {
        witnesses.push(format!("semigroup probe returned {semi_outcome:?}"));
    }
    checks += 1;
    if rank_one_probe(&semi, bound) {
        witnesses.push("the semigroup oracle passed the rank-one probe".into());
    }
    Ok(SuiteReport { suite: "shilov-cross-route".into(), checks, witnesses })
}

/// A random univariate polynomial of degree at most four with small integer
/// coefficients.
fn random_unipoly(rng: &mut ChaCha8Rng) -> UniPoly {
    let degree = rng.gen_range(0..=4usize);
    UniPoly::new((0..=degree).map(|_| rat_int(rng.gen_range(-3..=3i64))).collect())
}

/// Extension formulas: frozen spectral values with bracket agreement at
/// `m ≤ 4`, isometric embedding of the base, domination of padded integral
/// equations, and the cusp negative control.
fn extensions_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(config, "extensions");
    let mut checks = 0u64;
    let mut witnesses = Vec::new();
    let expectations = [
        ("sqrt-x", LogValue::from_rational_exponent(rat(1, 2))),
        ("sqrt-x-plus-1", LogValue::one()),
    ];
    for (name, expected) in &expectations {
        let ext = builtin(name)?;
        let y = ext.basis_element(1);
        let formula = spectral_norm_ext(&ext, &y)?;
        let bracket = basis_gauge_limit(&ext, &y, 4)?;
        checks += 1;
        if formula != *expected
            || bracket.lower != *expected
            || bracket.upper != *expected
            || bracket.m_star.is_none_or(|m| m > 4)
        {
            witnesses.push(format!(
                "{name}: formula {formula}, bracket [{}, {}] at m* {:?}",
                bracket.lower, bracket.upper, bracket.m_star,
            ));
        }
        let corpus: Vec<UniPoly> = (0..20).map(|_| random_unipoly(&mut rng)).collect();
        checks += 1;
        if let Verdict::Witness(a) = isometry_check(&ext, &corpus)? {
            witnesses.push(format!("{name}: isometry fails at a = {}", a.to_text()));
        }
        // Padded equations: multiply the minimal polynomial by (T − g).
        let p = min_poly(&ext, &y)?;
        let spectral = spectral_norm_ext(&ext, &y)?;
        for _ in 0..10 {
            let g = random_unipoly(&mut rng);
            let mut product = vec![UniPoly::zero(); p.coeffs.len() + 1];
            for (k, c) in p.coeffs.iter().enumerate() {
                product[k] = &product[k] - &(c * &g);
                product[k + 1] = &product[k + 1] + c;
            }
            let degree = product.len() - 1;
            let lower_coeffs: Vec<UniPoly> =
                (1..=degree).map(|i| product[degree - i].clone()).collect();
            let bound = integral_equation_upper_bound(&ext, &y, &lower_coeffs)?;
            checks += 1;
            if bound < spectral {
                witnesses.push(format!(
                    "{name}: padded equation with g = {} gives {bound} below {spectral}",
                    g.to_text(),
                ));
            }
        }
    }
    let cusp = builtin("cusp")?;
    checks += 1;
    if spectral_norm_ext(&cusp, &cusp.basis_element(1)).is_ok() {
        witnesses.push("the cusp accepted the spectral formula".into());
    }
    checks += 1;
    let probe = integrally_closed_probe(&cusp)?;
    if probe != Some(ClosureWitness { basis: "y".into(), power: 1 }) {
        witnesses.push(format!("the cusp probe returned {probe:?}"));
    }
    Ok(SuiteReport { suite: "extensions".into(), checks, witnesses })
}
