//! Acceptance criteria, one PASS/FAIL line each. Exact integer comparisons
//! throughout: the tolerance is zero.

use std::collections::HashMap;
use std::process::ExitCode;

use cfk_core::builders::{
    cable_exponents, conway_model, random_model, staircase, thin_model, torus_knot_exponents, unit_box,
    unknot, with_boxes, AlexanderExponents,
};
use cfk_core::complex::{mirror, tensor, validate, CfkComplex};
use cfk_core::filtration::{check_cable_filtration_is_algebraic, meridian_filtration};
use cfk_core::invariants::{a1_algebraic, a1_surgery, connect_sum_rules, epsilon, tau, SumRule};
use cfk_core::library;

const RANDOM_MODELS: u64 = 240;

struct Criterion {
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn new() -> Self {
        Self { failures: Vec::new(), checks: 0 }
    }

    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, what: impl Into<String>, got: T, want: T) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{}: got {got:?}, want {want:?}", what.into()));
        }
    }

    fn report(self, id: u32, title: &str) -> bool {
        let ok = self.failures.is_empty();
        println!(
            "criterion {id}: {title}: {} ({} checks{})",
            if ok { "PASS" } else { "FAIL" },
            self.checks,
            if ok { String::new() } else { format!("; {}", self.failures.join(" | ")) }
        );
        ok
    }
}

// Integer polynomial oracle, coefficients indexed by exponent.

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic divisor.
fn poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut q = vec![0; num.len() - dl + 1];
    for k in (0..q.len()).rev() {
        let c = rem[k + dl - 1];
        q[k] = c;
        for (t, d) in den.iter().enumerate() {
            rem[k + t] -= c * d;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact division");
    q
}

fn t_pow_minus_one(n: usize) -> Vec<i64> {
    let mut v = vec![0; n + 1];
    v[0] = -1;
    v[n] = 1;
    v
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, unnormalized.
fn torus_poly(p: usize, q: usize) -> Vec<i64> {
    let num = poly_mul(&t_pow_minus_one(p * q), &t_pow_minus_one(1));
    poly_div(&num, &poly_mul(&t_pow_minus_one(p), &t_pow_minus_one(q)))
}

fn substitute(a: &[i64], p: usize) -> Vec<i64> {
    let mut out = vec![0; (a.len() - 1) * p + 1];
    for (k, c) in a.iter().enumerate() {
        out[k * p] = *c;
    }
    out
}

/// Symmetrized exponents, descending, with the signs of their coefficients.
fn exponents(poly: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let deg = poly.len() as i64 - 1;
    assert!(deg % 2 == 0);
    let terms: Vec<(i64, i64)> = poly
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| **c != 0)
        .map(|(k, c)| (k as i64 - deg / 2, *c))
        .collect();
    (terms.iter().map(|t| t.0).collect(), terms.iter().map(|t| t.1).collect())
}

/// Oracle for the meridian-cable filtration: `[max(i, j-m), max(i, j-m-n)]`.
fn filtration_oracle(i: i64, j: i64, m: i64, n: i64) -> (i64, i64) {
    (i.max(j - m), i.max(j - m - n))
}

/// `∂²` by brute force over the generators: counts every two-step path mod 2.
fn d_squared_is_zero(c: &CfkComplex) -> bool {
    let diff = c.differential();
    let mut out: HashMap<&str, Vec<(&str, u32)>> = HashMap::new();
    for e in &diff {
        out.entry(e.from.as_str()).or_default().push((e.to.as_str(), e.upower));
    }
    for g in c.generators() {
        let mut count: HashMap<(&str, u32), u32> = HashMap::new();
        for (y, k1) in out.get(g.id.as_str()).into_iter().flatten() {
            for (z, k2) in out.get(y).into_iter().flatten() {
                *count.entry((z, k1 + k2)).or_default() += 1;
            }
        }
        if count.values().any(|n| n % 2 == 1) {
            return false;
        }
    }
    true
}

fn lib(name: &str) -> CfkComplex {
    library::knot(name).unwrap()
}

fn criterion_1() -> bool {
    let mut c = Criterion::new();
    let m2325 = lib("-T(2,3;2,5)");
    let t29 = lib("T(2,9)");
    let t45 = lib("T(4,5)");
    c.expect("a1(T(2,9))", a1_algebraic(&t29), Ok(1));
    c.expect("a1(-T(2,3;2,5))", a1_algebraic(&m2325), Ok(-1));
    c.expect("a1(-T(2,3;2,5) # T(2,9))", a1_algebraic(&tensor(&m2325, &t29)), Ok(-1));
    c.expect("a1(T(4,5) # -T(2,3;2,5))", a1_algebraic(&tensor(&t45, &m2325)), Ok(2));
    c.expect("a1(Conway)", a1_algebraic(&conway_model()), Ok(0));
    for t in -3..=3 {
        for boxes in 0..=2 {
            c.expect(format!("a1(thin({t}, {boxes}))"), a1_algebraic(&thin_model(t, boxes)), Ok(t.signum()));
        }
    }

    let mut cases: Vec<(String, Vec<i64>, Vec<i64>, AlexanderExponents)> = Vec::new();
    let torus = [(2, 3), (2, 5), (2, 7), (2, 9), (2, 11), (2, 13), (3, 4), (3, 5), (4, 5)];
    for (p, q) in torus {
        let (e, s) = exponents(&torus_poly(p, q));
        cases.push((format!("T({p},{q})"), e, s, torus_knot_exponents(p as i64, q as i64).unwrap()));
    }
    let (e, s) = exponents(&poly_mul(&substitute(&torus_poly(2, 3), 2), &torus_poly(2, 5)));
    let base = torus_knot_exponents(2, 3).unwrap();
    cases.push(("T(2,3;2,5)".into(), e, s, cable_exponents(&base, 2, 5).unwrap()));
    for (name, oracle, signs, built) in cases {
        let alternating: Vec<i64> = (0..signs.len()).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect();
        c.expect(format!("{name} coefficients alternate"), signs, alternating);
        c.expect(format!("{name} exponents"), built.as_slice().to_vec(), oracle.clone());
        let k = staircase(&built);
        c.expect(format!("tau({name})"), tau(&k), Ok(oracle[0]));
        c.expect(format!("a1({name})"), a1_algebraic(&k), Ok(oracle[0] - oracle[1]));
    }
    c.report(1, "published a1 values and staircase law")
}

fn random_models() -> impl Iterator<Item = CfkComplex> {
    (0..RANDOM_MODELS).map(|s| random_model(s, 2))
}

fn criterion_2() -> bool {
    let mut c = Criterion::new();
    for k in library::all().into_iter().chain(random_models()) {
        let g = k.genus_bound();
        let a = a1_algebraic(&k);
        for n in [2 * g + 1, 2 * g + 3] {
            c.expect(format!("{} n = {n}", k.name()), a1_surgery(&k, n), a.clone());
        }
    }
    c.report(
        2,
        &format!("surgery a1 = algebraic a1 on library + {RANDOM_MODELS} random, n in {{2g+1, 2g+3}}"),
    )
}

fn criterion_3() -> bool {
    let mut c = Criterion::new();
    for n in 1..=6 {
        for m in -10..=10 {
            for i in -10..=10 {
                let mut prev = None;
                for j in -10..=10 {
                    let got = meridian_filtration(i, j, m, n).map(|l| (l.first, l.second));
                    let want = filtration_oracle(i, j, m, n);
                    c.expect(format!("({i},{j},{m},{n})"), got.clone(), Ok(want));
                    let Ok((first, second)) = got else { continue };
                    c.expect(format!("gap ({i},{j},{m},{n})"), (0..=n).contains(&(first - second)), true);
                    if let Some((f, s)) = prev {
                        c.expect(format!("monotone ({i},{j},{m},{n})"), first >= f && second >= s, true);
                    }
                    prev = Some((first, second));
                }
            }
        }
    }
    c.expect("n = 0 rejected", meridian_filtration(0, 0, 0, 0).is_err(), true);
    c.report(3, "meridian filtration formula on |i|,|j|,|m| <= 10, 1 <= n <= 6")
}

fn criterion_4() -> bool {
    let mut c = Criterion::new();
    for k in library::all() {
        let g = k.genus_bound();
        for m in -g..=g {
            c.expect(
                format!("{} m = {m}", k.name()),
                check_cable_filtration_is_algebraic(&k, m, 2 * g + 1),
                Ok(true),
            );
        }
    }
    c.report(4, "cable filtration equals i-filtration on every library complex, |m| <= g, n = 2g+1")
}

fn criterion_5() -> bool {
    let mut c = Criterion::new();
    let lib = library::all();

    let mut constructions: Vec<CfkComplex> = lib.clone();
    constructions.extend(random_models().take(40));
    constructions.push(with_boxes(unknot(), [unit_box()]));
    for a in &lib {
        for b in &lib {
            if a.len() * b.len() <= 81 {
                constructions.push(tensor(a, b));
            }
        }
    }
    let t23 = lib[1].clone();
    constructions.push(tensor(&tensor(&t23, &lib[3]), &mirror(&t23)));
    constructions.push(tensor(&t23, &tensor(&t23, &t23)));
    for k in &constructions {
        c.expect(format!("d^2 = 0 on {}", k.name()), d_squared_is_zero(k), true);
        c.expect(format!("valid {}", k.name()), validate(k).is_valid(), true);
        c.expect(format!("mirror involution on {}", k.name()), mirror(&mirror(k)).isomorphic_by_ids(k), true);
    }

    let structural: Vec<CfkComplex> = lib.iter().cloned().chain(random_models().take(80)).collect();
    for k in &structural {
        let a = a1_algebraic(k).unwrap();
        let e = epsilon(k).unwrap();
        let t = tau(k).unwrap();
        c.expect(format!("a1(-K) on {}", k.name()), a1_algebraic(&mirror(k)), Ok(-a));
        c.expect(format!("sgn(a1) = eps on {}", k.name()), a.signum(), i64::from(e));
        if e == 0 {
            c.expect(format!("eps = 0 => tau = 0 on {}", k.name()), t, 0);
        }
    }
    for k in lib.iter().cloned().chain((0..40).map(|s| random_model(s, 1))) {
        c.expect(format!("a1(K # -K) on {}", k.name()), a1_algebraic(&tensor(&k, &mirror(&k))), Ok(0));
    }

    let mut predicted = 0;
    for (x, a) in lib.iter().enumerate() {
        for b in &lib[x..] {
            let r = connect_sum_rules(a, b).unwrap();
            if r.rule == SumRule::Indeterminate {
                continue;
            }
            predicted += 1;
            c.expect(
                format!("rule `{}` on {} # {}", r.rule, a.name(), b.name()),
                Some(r.a1_sum),
                r.predicted,
            );
        }
    }
    c.expect("library pairs with a prediction", predicted > 0, true);
    c.report(5, "structural properties")
}

fn main() -> ExitCode {
    let results = [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5()];
    println!(
        "criterion 6: full-strength geometric claims: NOT CHECKED (not desk-reproducible; covered by criteria 2-5)"
    );
    if results.iter().all(|&ok| ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
