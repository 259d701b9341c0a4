//! Concordance invariants τ, ε and a₁.
//!
//! Everything is computed from maps between realized subquotients of the
//! vertical slice `C{i=0}`, the hook `C{max(i, j-τ)=0}` (large positive
//! surgery in slot τ) and the L-hook `C{min(i, j-τ)=0}` (large negative surgery).
//!
//! a₁ has two independent routes. [`a1_algebraic`] clips the hook or L-hook by
//! region. [`a1_surgery`] instead attaches the step levels of the meridian-cable
//! filtration to the surgery complex and truncates by level; the two agree
//! because that filtration coincides with the `i`-filtration in slot τ.

use std::fmt;

use serde::Serialize;

use crate::complex::{tensor, CfkComplex, LatticePoint};
use crate::error::InvariantError;
use crate::filtration::{hook_step_level, lhook_step_level};
use crate::region::{quotient_then_include, realize, ChainMap, Region};

fn require_vertical_rank(c: &CfkComplex) -> Result<(), InvariantError> {
    match c.vertical_homology_dim() {
        1 => Ok(()),
        d => Err(InvariantError::VerticalRank(d)),
    }
}

/// Least `s` for which `C{i=0, j<=s}` carries the generator of `H(C{i=0})`.
pub fn tau(c: &CfkComplex) -> Result<i64, InvariantError> {
    require_vertical_rank(c)?;
    let g = c.genus_bound();
    let slice = realize(c, Region::VerticalSlice { i: 0 })?;
    for s in (-g - 1)..=(g + 1) {
        let sub = realize(c, Region::VerticalClipped { i: 0, s })?;
        let inclusion = ChainMap::by_point_identity(sub, slice.clone(), |_| false)?;
        if !inclusion.is_trivial() {
            return Ok(s);
        }
    }
    Err(InvariantError::SearchExhausted { what: "tau", lo: -g - 1, hi: g + 1 })
}

/// `F_s : C{i=0} -> C{min(i, j-s)=0}`, quotienting by `C{i=0, j<s}`.
pub fn f_map(c: &CfkComplex, s: i64) -> Result<ChainMap, InvariantError> {
    Ok(quotient_then_include(
        c,
        Region::VerticalSlice { i: 0 },
        Region::VerticalClipped { i: 0, s: s - 1 },
        Region::LHook { m: s },
    )?)
}

/// `G_s : C{max(i, j-s)=0} -> C{i=0}`, quotienting by `C{i<0, j=s}`.
pub fn g_map(c: &CfkComplex, s: i64) -> Result<ChainMap, InvariantError> {
    Ok(quotient_then_include(
        c,
        Region::Hook { m: s },
        Region::Row { j: s, i_max: -1 },
        Region::VerticalSlice { i: 0 },
    )?)
}

/// `F_{s,τ} : C{i=0} -> C{min(i, j-τ)=0, i<=s}`.
pub fn f_clipped(c: &CfkComplex, s: i64, tau: i64) -> Result<ChainMap, InvariantError> {
    Ok(quotient_then_include(
        c,
        Region::VerticalSlice { i: 0 },
        Region::VerticalClipped { i: 0, s: tau - 1 },
        Region::LHookClipped { m: tau, s },
    )?)
}

/// `G_{-s,τ} : C{max(i, j-τ)=0, i>=-s} -> C{i=0}`.
pub fn g_clipped(c: &CfkComplex, s: i64, tau: i64) -> Result<ChainMap, InvariantError> {
    Ok(quotient_then_include(
        c,
        Region::HookClipped { m: tau, s },
        Region::Row { j: tau, i_max: -1 },
        Region::VerticalSlice { i: 0 },
    )?)
}

/// +1 if `F_τ` is trivial on homology, -1 if `G_τ` is, 0 if neither.
pub fn epsilon(c: &CfkComplex) -> Result<i8, InvariantError> {
    let t = tau(c)?;
    epsilon_at(c, t)
}

fn epsilon_at(c: &CfkComplex, tau: i64) -> Result<i8, InvariantError> {
    let f_trivial = f_map(c, tau)?.is_trivial();
    let g_trivial = g_map(c, tau)?.is_trivial();
    match (f_trivial, g_trivial) {
        (true, true) => Err(InvariantError::BothTrivial),
        (true, false) => Ok(1),
        (false, true) => Ok(-1),
        (false, false) => Ok(0),
    }
}

fn search_hi(c: &CfkComplex) -> i64 {
    2 * c.genus_bound() + 2
}

/// a₁ from clipped hooks: the least `s` with `F_{s,τ}` trivial when ε = 1, and
/// `-s` for the least `s` with `G_{-s,τ}` trivial when ε = -1.
pub fn a1_algebraic(c: &CfkComplex) -> Result<i64, InvariantError> {
    let t = tau(c)?;
    a1_algebraic_at(c, t, epsilon_at(c, t)?)
}

fn a1_algebraic_at(c: &CfkComplex, tau: i64, eps: i8) -> Result<i64, InvariantError> {
    let hi = search_hi(c);
    match eps {
        0 => Ok(0),
        1 => {
            for s in 0..=hi {
                if f_clipped(c, s, tau)?.is_trivial() {
                    return Ok(s);
                }
            }
            Err(InvariantError::SearchExhausted { what: "a1 (F_{s,tau})", lo: 0, hi })
        }
        _ => {
            for s in 0..=hi {
                if g_clipped(c, s, tau)?.is_trivial() {
                    return Ok(-s);
                }
            }
            Err(InvariantError::SearchExhausted { what: "a1 (G_{-s,tau})", lo: 0, hi })
        }
    }
}

/// a₁ from the meridian-cable filtration on the surgery complexes in slot τ.
///
/// ε = -1: the hook modulo its filtration level `top - 1 - m`, mapped to
/// `C{i=0}` by killing everything below the top level; a₁ = -m for the least
/// `m` making this trivial on homology. ε = 1: `C{i=0}` mapped into the level
/// `bottom + m` of the L-hook; a₁ is the least such `m`.
pub fn a1_surgery(c: &CfkComplex, n: i64) -> Result<i64, InvariantError> {
    let g = c.genus_bound();
    if n <= 2 * g {
        return Err(InvariantError::Hypothesis(format!("n = {n} must exceed 2g = {}", 2 * g)));
    }
    let t = tau(c)?;
    let eps = epsilon_at(c, t)?;
    let hi = search_hi(c);
    let slice = realize(c, Region::VerticalSlice { i: 0 })?;
    match eps {
        0 => Ok(0),
        -1 => {
            let hook = realize(c, Region::Hook { m: t })?;
            let levels = hook
                .basis()
                .iter()
                .map(|p| hook_step_level(p.i, p.j, t, n).map(|l| l.0))
                .collect::<Result<Vec<_>, _>>()?;
            let hook = hook.with_filtration(levels);
            for m in 0..=hi {
                let quotient = hook.quotient_by_sublevel(-1 - m)?;
                let levels = quotient.filtration().unwrap_or_default();
                let killed = |p: &LatticePoint| quotient.index_of(p).is_some_and(|k| levels[k] < 0);
                let map = ChainMap::by_point_identity(quotient.clone(), slice.clone(), killed)?;
                if map.is_trivial() {
                    return Ok(-m);
                }
            }
            Err(InvariantError::SearchExhausted { what: "a1 surgery (hook)", lo: 0, hi })
        }
        _ => {
            let lhook = realize(c, Region::LHook { m: t })?;
            let levels = lhook
                .basis()
                .iter()
                .map(|p| lhook_step_level(p.i, p.j, t, n))
                .collect::<Result<Vec<_>, _>>()?;
            let lhook = lhook.with_filtration(levels);
            for m in 0..=hi {
                let sub = lhook.sublevel(m)?;
                let map = ChainMap::by_point_identity(slice.clone(), sub, |p| lhook.index_of(p).is_none())?;
                if map.is_trivial() {
                    return Ok(m);
                }
            }
            Err(InvariantError::SearchExhausted { what: "a1 surgery (L-hook)", lo: 0, hi })
        }
    }
}

/// Homology dimensions of the regions the invariants are read from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyDims {
    pub vertical: usize,
    pub hook_tau: usize,
    pub lhook_tau: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub generators: usize,
    pub tau: i64,
    pub epsilon: i8,
    pub a1: i64,
    pub a1_surgery: i64,
    pub surgery_n: i64,
    pub genus_bound: i64,
    pub homology: HomologyDims,
}

impl InvariantReport {
    pub fn compute(c: &CfkComplex) -> Result<Self, InvariantError> {
        Self::compute_with_n(c, 2 * c.genus_bound() + 1)
    }

    pub fn compute_with_n(c: &CfkComplex, n: i64) -> Result<Self, InvariantError> {
        let t = tau(c)?;
        let eps = epsilon_at(c, t)?;
        let a1 = a1_algebraic_at(c, t, eps)?;
        let a1_s = a1_surgery(c, n)?;
        let dim = |r| realize(c, r).map(|x| x.homology().dim());
        Ok(Self {
            name: c.name().to_string(),
            generators: c.len(),
            tau: t,
            epsilon: eps,
            a1,
            a1_surgery: a1_s,
            surgery_n: n,
            genus_bound: c.genus_bound(),
            homology: HomologyDims {
                vertical: dim(Region::VerticalSlice { i: 0 })?,
                hook_tau: dim(Region::Hook { m: t })?,
                lhook_tau: dim(Region::LHook { m: t })?,
            },
        })
    }

    /// Aligned `key = value` table.
    pub fn table(&self) -> String {
        let rows: Vec<(&str, String)> = vec![
            ("knot", self.name.clone()),
            ("generators", self.generators.to_string()),
            ("genus_bound", self.genus_bound.to_string()),
            ("tau", self.tau.to_string()),
            ("epsilon", self.epsilon.to_string()),
            ("a1", self.a1.to_string()),
            ("a1_surgery", format!("{} (n = {})", self.a1_surgery, self.surgery_n)),
            ("dim H(C{i=0})", self.homology.vertical.to_string()),
            ("dim H(hook_tau)", self.homology.hook_tau.to_string()),
            ("dim H(lhook_tau)", self.homology.lhook_tau.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:>width$} = {v}\n")).collect()
    }
}

/// Which connected-sum rule applies to a pair of a₁ values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumRule {
    /// One summand has a₁ = 0 and is neutral.
    Neutral,
    /// Both positive: the minimum.
    BothPositive,
    /// Both negative: the maximum.
    BothNegative,
    /// Opposite signs, negative sum: the maximum.
    OppositeNegativeSum,
    /// Opposite signs, positive sum: the minimum.
    OppositePositiveSum,
    /// Opposite signs summing to zero: no prediction.
    Indeterminate,
}

impl fmt::Display for SumRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SumRule::Neutral => "a1 = 0 summand is neutral",
            SumRule::BothPositive => "both positive: min",
            SumRule::BothNegative => "both negative: max",
            SumRule::OppositeNegativeSum => "opposite signs, sum < 0: max",
            SumRule::OppositePositiveSum => "opposite signs, sum > 0: min",
            SumRule::Indeterminate => "opposite signs, sum = 0: no prediction",
        };
        f.write_str(s)
    }
}

/// Predicted a₁ of a connected sum from the summands' values.
pub fn predict_sum(a: i64, b: i64) -> (SumRule, Option<i64>) {
    match (a.signum(), b.signum()) {
        (0, _) => (SumRule::Neutral, Some(b)),
        (_, 0) => (SumRule::Neutral, Some(a)),
        (1, 1) => (SumRule::BothPositive, Some(a.min(b))),
        (-1, -1) => (SumRule::BothNegative, Some(a.max(b))),
        _ if a + b < 0 => (SumRule::OppositeNegativeSum, Some(a.max(b))),
        _ if a + b > 0 => (SumRule::OppositePositiveSum, Some(a.min(b))),
        _ => (SumRule::Indeterminate, None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectSumReport {
    pub a1_first: i64,
    pub a1_second: i64,
    pub a1_sum: i64,
    pub rule: SumRule,
    pub predicted: Option<i64>,
}

impl ConnectSumReport {
    /// `None` when the rule makes no prediction.
    pub fn matches(&self) -> Option<bool> {
        self.predicted.map(|p| p == self.a1_sum)
    }
}

/// Evaluates a₁ on both summands and on their tensor product, and compares
/// with the connected-sum rule that applies.
pub fn connect_sum_rules(c1: &CfkComplex, c2: &CfkComplex) -> Result<ConnectSumReport, InvariantError> {
    let a = a1_algebraic(c1)?;
    let b = a1_algebraic(c2)?;
    let sum = a1_algebraic(&tensor(c1, c2))?;
    let (rule, predicted) = predict_sum(a, b);
    Ok(ConnectSumReport { a1_first: a, a1_second: b, a1_sum: sum, rule, predicted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{conway_model, staircase, unit_box, unknot, AlexanderExponents};
    use crate::complex::{direct_sum, mirror};

    fn trefoil() -> CfkComplex {
        staircase(&AlexanderExponents::new(vec![1, 0, -1]).unwrap())
    }

    #[test]
    fn unknot_invariants() {
        let u = unknot();
        assert_eq!(tau(&u).unwrap(), 0);
        assert_eq!(epsilon(&u).unwrap(), 0);
        assert_eq!(a1_algebraic(&u).unwrap(), 0);
        assert_eq!(a1_surgery(&u, 1).unwrap(), 0);
    }

    #[test]
    fn trefoils() {
        let t = trefoil();
        assert_eq!(tau(&t).unwrap(), 1);
        assert_eq!(epsilon(&t).unwrap(), 1);
        assert_eq!(a1_algebraic(&t).unwrap(), 1);
        assert_eq!(a1_surgery(&t, 3).unwrap(), 1);
        let m = mirror(&t);
        assert_eq!(tau(&m).unwrap(), -1);
        assert_eq!(epsilon(&m).unwrap(), -1);
        assert!(g_map(&m, -1).unwrap().is_trivial());
        assert_eq!(a1_algebraic(&m).unwrap(), -1);
        assert_eq!(a1_surgery(&m, 3).unwrap(), -1);
    }

    #[test]
    fn surgery_route_needs_large_n() {
        assert!(matches!(a1_surgery(&trefoil(), 2), Err(InvariantError::Hypothesis(_))));
    }

    #[test]
    fn boxes_do_not_change_invariants() {
        let t = trefoil();
        let tb = direct_sum(&t, &unit_box()).unwrap();
        assert_eq!(tau(&tb).unwrap(), 1);
        assert_eq!(a1_algebraic(&tb).unwrap(), 1);
    }

    #[test]
    fn conway_invariants_vanish() {
        let c = conway_model();
        assert_eq!(tau(&c).unwrap(), 0);
        assert_eq!(epsilon(&c).unwrap(), 0);
        assert_eq!(a1_algebraic(&c).unwrap(), 0);
    }

    #[test]
    fn box_alone_is_rejected() {
        assert_eq!(tau(&unit_box()), Err(InvariantError::VerticalRank(0)));
    }

    #[test]
    fn sum_rules() {
        assert_eq!(predict_sum(1, 1), (SumRule::BothPositive, Some(1)));
        assert_eq!(predict_sum(2, 3), (SumRule::BothPositive, Some(2)));
        assert_eq!(predict_sum(-2, -3), (SumRule::BothNegative, Some(-2)));
        assert_eq!(predict_sum(1, -3), (SumRule::OppositeNegativeSum, Some(1)));
        assert_eq!(predict_sum(3, -1), (SumRule::OppositePositiveSum, Some(-1)));
        assert_eq!(predict_sum(-1, 1), (SumRule::Indeterminate, None));
        assert_eq!(predict_sum(0, -4), (SumRule::Neutral, Some(-4)));
    }

    #[test]
    fn report_table_mentions_a1() {
        let r = InvariantReport::compute(&trefoil()).unwrap();
        assert!(r.table().contains("  a1 = 1\n"));
        assert_eq!(r.homology.vertical, 1);
    }
}
