//! Property suite over the named library and grammar-generated random models.
//!
//! Each property is evaluated per complex (or per pair of library complexes)
//! and a violation records the property name together with the serialized
//! offending complex.

use std::fmt;

use serde::Serialize;

use crate::builders::random_model;
use crate::complex::{mirror, tensor, validate, CfkComplex};
use crate::filtration::{check_cable_filtration_is_algebraic, hook_step_level, meridian_filtration};
use crate::format::serialize;
use crate::invariants::{a1_algebraic, a1_surgery, connect_sum_rules, epsilon, tau};
use crate::library;
use crate::region::Region;

pub const VALID: &str = "valid";
pub const MIRROR_INVOLUTION: &str = "mirror_involution";
pub const TAU_BOUNDED: &str = "tau_bounded_by_genus";
pub const A1_BOUNDED: &str = "a1_bounded_by_genus";
pub const SIGN_A1_EPSILON: &str = "sign_a1_equals_epsilon";
pub const A1_MIRROR: &str = "a1_mirror_antisymmetry";
pub const EPSILON_ZERO_TAU_ZERO: &str = "epsilon_zero_implies_tau_zero";
pub const SURGERY_EQUALS_ALGEBRAIC: &str = "a1_surgery_equals_a1_algebraic";
pub const CABLE_FILTRATION: &str = "cable_filtration_is_algebraic";
pub const SUM_WITH_MIRROR: &str = "a1_of_sum_with_mirror_is_zero";
pub const SUM_RULE: &str = "connect_sum_rule";
pub const TENSOR_SYMMETRIC: &str = "invariants_symmetric_under_tensor_swap";
pub const TENSOR_VALID: &str = "tensor_valid";
pub const MERIDIAN_FORMULA: &str = "meridian_filtration_formula";
pub const HOOK_CONSISTENT: &str = "hook_level_matches_meridian_filtration";

/// Extra `n` offsets above `2g` used for the surgery route.
pub const SURGERY_OFFSETS: [i64; 4] = [1, 2, 3, 5];

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub property: &'static str,
    pub complex: String,
    pub detail: String,
    pub serialized: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FAIL {} on `{}`: {}", self.property, self.complex, self.detail)?;
        write!(f, "{}", self.serialized)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub complexes: usize,
    pub pairs: usize,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} complexes, {} pairs, {} checks, {} violations: {}",
            self.complexes,
            self.pairs,
            self.checks,
            self.violations.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Random models use seeds `0..seeds`.
    pub seeds: u64,
    /// Maximum number of tensor factors in a random model.
    pub random_size: usize,
    /// Additional complexes, checked for validity first.
    pub extra: Vec<CfkComplex>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seeds: 200, random_size: 2, extra: Vec::new() }
    }
}

struct Run {
    report: SuiteReport,
}

impl Run {
    fn check(&mut self, property: &'static str, c: &CfkComplex, ok: Result<(), String>) {
        self.report.checks += 1;
        if let Err(detail) = ok {
            self.report.violations.push(Violation {
                property,
                complex: c.name().to_string(),
                detail,
                serialized: serialize(c),
            });
        }
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(left: T, right: T, what: &str) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left:?} != {right:?}"))
    }
}

fn single(run: &mut Run, c: &CfkComplex) {
    run.report.complexes += 1;
    let report = validate(c);
    run.check(VALID, c, if report.is_valid() { Ok(()) } else { Err(report.failures().join("; ")) });
    if !report.is_valid() {
        return;
    }
    let g = c.genus_bound();
    run.check(MIRROR_INVOLUTION, c, expect_eq(mirror(&mirror(c)).isomorphic_by_ids(c), true, "mirror twice"));

    let (t, e, a) = match (tau(c), epsilon(c), a1_algebraic(c)) {
        (Ok(t), Ok(e), Ok(a)) => (t, e, a),
        (t, e, a) => {
            let err = [t.err(), e.err(), a.err()].into_iter().flatten().next().unwrap();
            run.check(SIGN_A1_EPSILON, c, Err(format!("invariants not computable: {err}")));
            return;
        }
    };
    run.check(TAU_BOUNDED, c, if t.abs() <= g { Ok(()) } else { Err(format!("tau = {t}, g = {g}")) });
    run.check(A1_BOUNDED, c, if a.abs() <= g { Ok(()) } else { Err(format!("a1 = {a}, g = {g}")) });
    run.check(SIGN_A1_EPSILON, c, expect_eq(a.signum(), i64::from(e), "sgn(a1) vs epsilon"));
    run.check(
        EPSILON_ZERO_TAU_ZERO,
        c,
        if e != 0 || t == 0 { Ok(()) } else { Err(format!("epsilon = 0 but tau = {t}")) },
    );
    let am = a1_algebraic(&mirror(c)).map_err(|err| err.to_string());
    run.check(A1_MIRROR, c, am.and_then(|am| expect_eq(am, -a, "a1(mirror)")));
    for off in SURGERY_OFFSETS {
        let n = 2 * g + off;
        let s = a1_surgery(c, n).map_err(|err| err.to_string());
        run.check(SURGERY_EQUALS_ALGEBRAIC, c, s.and_then(|s| expect_eq(s, a, &format!("n = {n}"))));
    }
    for m in -g..=g {
        let r = check_cable_filtration_is_algebraic(c, m, 2 * g + 1).map_err(|err| err.to_string());
        run.check(CABLE_FILTRATION, c, r.and_then(|ok| expect_eq(ok, true, &format!("m = {m}"))));
    }
}

fn sum_with_mirror(run: &mut Run, c: &CfkComplex) {
    let s = tensor(c, &mirror(c));
    let a = a1_algebraic(&s).map_err(|err| err.to_string());
    run.check(SUM_WITH_MIRROR, &s, a.and_then(|a| expect_eq(a, 0, "a1(C # -C)")));
}

fn pair(run: &mut Run, c1: &CfkComplex, c2: &CfkComplex) {
    run.report.pairs += 1;
    let t12 = tensor(c1, c2);
    let t21 = tensor(c2, c1);
    let v = validate(&t12);
    run.check(TENSOR_VALID, &t12, if v.is_valid() { Ok(()) } else { Err(v.failures().join("; ")) });
    let inv = |c: &CfkComplex| -> Result<(i64, i8, i64), String> {
        Ok((
            tau(c).map_err(|e| e.to_string())?,
            epsilon(c).map_err(|e| e.to_string())?,
            a1_algebraic(c).map_err(|e| e.to_string())?,
        ))
    };
    let swap = inv(&t12).and_then(|x| inv(&t21).and_then(|y| expect_eq(x, y, "(tau, epsilon, a1)")));
    run.check(TENSOR_SYMMETRIC, &t12, swap);
    let rule = connect_sum_rules(c1, c2).map_err(|e| e.to_string()).and_then(|r| match r.matches() {
        Some(false) => Err(format!(
            "a1 = {}, {} -> rule `{}` predicts {:?}, computed {}",
            r.a1_first, r.a1_second, r.rule, r.predicted, r.a1_sum
        )),
        _ => Ok(()),
    });
    run.check(SUM_RULE, &t12, rule);
}

/// Checks the filtration formulas over a window of parameters; violations
/// are attributed to a placeholder complex name.
fn formulas(run: &mut Run) {
    let placeholder = crate::builders::unknot().with_name("<formula window>");
    let mut bad = Vec::new();
    let mut bad_hook = Vec::new();
    for n in 1..=6 {
        for m in -10..=10 {
            for i in -10..=10 {
                let mut prev: Option<(i64, i64)> = None;
                for j in -10..=10 {
                    let l = match meridian_filtration(i, j, m, n) {
                        Ok(l) => l,
                        Err(e) => {
                            bad.push(format!("({i},{j},{m},{n}): {e}"));
                            continue;
                        }
                    };
                    let gap = l.first - l.second;
                    if !(0..=n).contains(&gap) || l.first < i || l.second < i {
                        bad.push(format!("({i},{j},{m},{n}) -> [{}, {}]", l.first, l.second));
                    }
                    if let Some((f, s)) = prev {
                        if l.first < f || l.second < s {
                            bad.push(format!("not monotone in j at ({i},{j},{m},{n})"));
                        }
                    }
                    prev = Some((l.first, l.second));
                    if (Region::Hook { m }).contains(i, j) {
                        // the top point [0, m] of the hook has level [0, 0]
                        match hook_step_level(i, j, m, n) {
                            Ok(step) if step.0 == l.second && l.first == 0 => {}
                            other => bad_hook.push(format!(
                                "hook ({i},{j},{m},{n}): {other:?} vs [{}, {}]",
                                l.first, l.second
                            )),
                        }
                    }
                }
            }
        }
    }
    for (property, defects) in [(MERIDIAN_FORMULA, bad), (HOOK_CONSISTENT, bad_hook)] {
        let detail = defects.into_iter().take(5).collect::<Vec<_>>().join("; ");
        run.check(property, &placeholder, if detail.is_empty() { Ok(()) } else { Err(detail) });
    }
}

/// Runs every property over the library, random models `0..seeds`, and the
/// extra complexes.
pub fn run(config: &SuiteConfig) -> SuiteReport {
    let mut run = Run { report: SuiteReport::default() };
    formulas(&mut run);

    let lib = library::all();
    for c in lib.iter().chain(&config.extra) {
        single(&mut run, c);
    }
    for c in &lib {
        sum_with_mirror(&mut run, c);
    }
    for (k, c1) in lib.iter().enumerate() {
        for c2 in &lib[k..] {
            pair(&mut run, c1, c2);
        }
    }
    for seed in 0..config.seeds {
        single(&mut run, &random_model(seed, config.random_size));
        sum_with_mirror(&mut run, &random_model(seed, 1));
    }
    run.report
}
