//! Filtrations induced on large-surgery complexes by the `(n, 1)` cable of the
//! meridian.
//!
//! In spin^c slot `m`, the surgery complex is identified with the hook
//! `C{max(i, j - m) = 0}` and its `n`-cable filtration has `n + 1` steps: the
//! `i = 0` column sits at the top level and the arm `{j = m, i < 0}` descends
//! one level per column until it bottoms out `n` levels down.

use serde::Serialize;

use crate::complex::CfkComplex;
use crate::error::InvariantError;
use crate::region::Region;

/// A ℤ⊕ℤ filtration level `[first, second]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BiFiltrationLevel {
    pub first: i64,
    pub second: i64,
}

/// Offset of a hook point's filtration level from the top level: `0` is the
/// top, `-n` the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepLevel(pub i64);

fn check_n(n: i64) -> Result<(), InvariantError> {
    if n < 1 {
        return Err(InvariantError::BadN(n));
    }
    Ok(())
}

/// Filtration level of `[x, i, j]` viewed in the surgered manifold with the
/// meridian cable `μ_n`, spin^c slot `m`.
pub fn meridian_filtration(i: i64, j: i64, m: i64, n: i64) -> Result<BiFiltrationLevel, InvariantError> {
    check_n(n)?;
    let level = if j <= m + i {
        BiFiltrationLevel { first: i, second: i }
    } else if j - m - i < n {
        let k = j - m - i;
        BiFiltrationLevel { first: j - m, second: j - m - k }
    } else {
        BiFiltrationLevel { first: j - m, second: j - m - n }
    };
    Ok(level)
}

/// Step level of a point of the hook `C{max(i, j - m) = 0}`.
pub fn hook_step_level(i: i64, j: i64, m: i64, n: i64) -> Result<StepLevel, InvariantError> {
    check_n(n)?;
    if !(Region::Hook { m }).contains(i, j) {
        return Err(InvariantError::Hypothesis(format!("({i}, {j}) is not in the hook at m = {m}")));
    }
    Ok(StepLevel(if i == 0 {
        0
    } else if i > -n {
        i
    } else {
        -n
    }))
}

/// Step level, counted up from the bottom, of a point of the negative-surgery
/// complex `C{min(i, j - m) = 0}`: the `i = 0` column is the bottom level and
/// the arm `{j = m, i > 0}` climbs one level per column up to `n`.
pub fn lhook_step_level(i: i64, j: i64, m: i64, n: i64) -> Result<i64, InvariantError> {
    check_n(n)?;
    if !(Region::LHook { m }).contains(i, j) {
        return Err(InvariantError::Hypothesis(format!("({i}, {j}) is not in the L-hook at m = {m}")));
    }
    Ok(i.min(n))
}

/// For `|m| <= g` and `n > 2g`, checks that every occupied point of the hook
/// sits at step level equal to its `i` coordinate, i.e. the cable filtration
/// agrees with the algebraic `i`-filtration.
pub fn check_cable_filtration_is_algebraic(c: &CfkComplex, m: i64, n: i64) -> Result<bool, InvariantError> {
    let g = c.genus_bound();
    if m.abs() > g || n <= 2 * g {
        return Err(InvariantError::Hypothesis(format!(
            "need |m| <= g and n > 2g (m = {m}, n = {n}, g = {g})"
        )));
    }
    let hook = Region::Hook { m };
    for gen in c.generators() {
        if let Some(i) = hook.column_for(gen.alexander) {
            if hook_step_level(i, i + gen.alexander, m, n)? != StepLevel(i) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(first: i64, second: i64) -> BiFiltrationLevel {
        BiFiltrationLevel { first, second }
    }

    #[test]
    fn three_cases() {
        assert_eq!(meridian_filtration(0, 0, 0, 3).unwrap(), lvl(0, 0));
        assert_eq!(meridian_filtration(0, 2, 0, 3).unwrap(), lvl(2, 0));
        assert_eq!(meridian_filtration(0, 5, 0, 3).unwrap(), lvl(5, 2));
        assert_eq!(meridian_filtration(0, 0, 0, 0), Err(InvariantError::BadN(0)));
    }

    #[test]
    fn hook_levels() {
        assert_eq!(hook_step_level(0, -1, 0, 3).unwrap(), StepLevel(0));
        assert_eq!(hook_step_level(-2, 1, 1, 3).unwrap(), StepLevel(-2));
        assert_eq!(hook_step_level(-5, 1, 1, 3).unwrap(), StepLevel(-3));
        assert!(hook_step_level(-1, 0, 1, 3).is_err());
    }

    #[test]
    fn lhook_levels() {
        assert_eq!(lhook_step_level(0, 4, 1, 3).unwrap(), 0);
        assert_eq!(lhook_step_level(2, 1, 1, 3).unwrap(), 2);
        assert_eq!(lhook_step_level(7, 1, 1, 3).unwrap(), 3);
        assert!(lhook_step_level(0, 0, 1, 3).is_err());
    }

    #[test]
    fn coincidence_on_trefoil() {
        let t =
            crate::builders::staircase(&crate::builders::AlexanderExponents::new(vec![1, 0, -1]).unwrap());
        assert!(check_cable_filtration_is_algebraic(&t, 0, 3).unwrap());
        assert!(check_cable_filtration_is_algebraic(&t, 1, 3).unwrap());
        assert!(check_cable_filtration_is_algebraic(&t, 2, 3).is_err());
        assert!(check_cable_filtration_is_algebraic(&t, 0, 2).is_err());
    }
}
