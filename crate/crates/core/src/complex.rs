//! The ℤ⊕ℤ-filtered chain complex model.
//!
//! A [`CfkComplex`] is stored as a finitely generated complex over `F[U, U^-1]`:
//! one node per generator and one [`DiffEntry`] per nonzero term `U^k · y` of
//! `∂x`. The lattice point `[x, i, j]` stands for `U^-i · x`, so `j = i + A(x)`
//! and an entry `x -> y` with power `k` sends `[x, i, j]` to
//! `[y, i - k, i - k + A(y)]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::ComplexError;
use crate::f2::{F2Matrix, Homology};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: String,
    pub alexander: i64,
    pub maslov: Option<i64>,
}

impl Generator {
    pub fn new(id: impl Into<String>, alexander: i64, maslov: Option<i64>) -> Self {
        Self { id: id.into(), alexander, maslov }
    }
}

/// `∂(from)` contains `U^upower · to`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffEntry {
    pub from: String,
    pub to: String,
    pub upower: u32,
}

impl DiffEntry {
    pub fn new(from: impl Into<String>, to: impl Into<String>, upower: u32) -> Self {
        Self { from: from.into(), to: to.into(), upower }
    }
}

/// A differential entry with generator ids resolved to indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub upower: u32,
}

/// `[gen, i, j]` with `j - i = A(gen)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub gen: String,
    pub i: i64,
    pub j: i64,
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.gen, self.i, self.j)
    }
}

/// A finitely generated filtered complex. Structural well-formedness (unique
/// ids, resolvable entries, non-negative powers) is enforced on construction;
/// the algebraic axioms are checked by [`validate`].
#[derive(Clone, Debug)]
pub struct CfkComplex {
    name: String,
    generators: Vec<Generator>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
}

impl PartialEq for CfkComplex {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.generators == other.generators && self.edges == other.edges
    }
}

impl Eq for CfkComplex {}

impl CfkComplex {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Generator>,
        differential: Vec<DiffEntry>,
    ) -> Result<Self, ComplexError> {
        let raw = differential.into_iter().map(|e| (e.from, e.to, i64::from(e.upower))).collect();
        Self::from_raw(name.into(), generators, raw)
    }

    /// Builds from entries whose powers have not yet been range-checked.
    pub(crate) fn from_raw(
        name: String,
        generators: Vec<Generator>,
        differential: Vec<(String, String, i64)>,
    ) -> Result<Self, ComplexError> {
        let mut index = HashMap::with_capacity(generators.len());
        for (k, g) in generators.iter().enumerate() {
            if g.id.is_empty() {
                return Err(ComplexError::EmptyId(k));
            }
            if index.insert(g.id.clone(), k).is_some() {
                return Err(ComplexError::DuplicateId(g.id.clone()));
            }
        }
        let with_maslov = generators.iter().filter(|g| g.maslov.is_some()).count();
        if with_maslov != 0 && with_maslov != generators.len() {
            let odd = generators
                .iter()
                .find(|g| g.maslov.is_none())
                .expect("some generator lacks a Maslov grading");
            return Err(ComplexError::PartialMaslov(odd.id.clone()));
        }

        let mut edges = Vec::with_capacity(differential.len());
        let mut seen = std::collections::HashSet::new();
        for (entry, (from, to, upower)) in differential.into_iter().enumerate() {
            let lookup = |id: &String| {
                index.get(id).copied().ok_or_else(|| ComplexError::UnknownGenerator { entry, id: id.clone() })
            };
            let (f, t) = (lookup(&from)?, lookup(&to)?);
            let upower = u32::try_from(upower).map_err(|_| ComplexError::NegativeUPower { entry, upower })?;
            if f == t {
                return Err(ComplexError::SelfLoop { entry, id: from });
            }
            let edge = Edge { from: f, to: t, upower };
            if !seen.insert(edge) {
                return Err(ComplexError::DuplicateEntry { entry, from, to, upower });
            }
            edges.push(edge);
        }
        Ok(Self { name, generators, edges, index })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn generator(&self, idx: usize) -> &Generator {
        &self.generators[idx]
    }

    pub fn has_maslov(&self) -> bool {
        self.generators.first().is_some_and(|g| g.maslov.is_some())
    }

    pub fn differential(&self) -> Vec<DiffEntry> {
        self.edges
            .iter()
            .map(|e| DiffEntry::new(&self.generators[e.from].id, &self.generators[e.to].id, e.upower))
            .collect()
    }

    /// Genus proxy: the largest `|A(x)|`.
    pub fn genus_bound(&self) -> i64 {
        self.generators.iter().map(|g| g.alexander.abs()).max().unwrap_or(0)
    }

    pub fn point(&self, idx: usize, i: i64) -> LatticePoint {
        let g = &self.generators[idx];
        LatticePoint { gen: g.id.clone(), i, j: i + g.alexander }
    }

    /// Boundary matrix of the differential restricted to `U^0` entries, on the
    /// generators in complex order.
    pub fn vertical_boundary(&self) -> F2Matrix {
        let mut d = F2Matrix::zeros(self.len(), self.len());
        for e in self.edges.iter().filter(|e| e.upower == 0) {
            d.flip(e.to, e.from);
        }
        d
    }

    pub fn vertical_homology_dim(&self) -> usize {
        Homology::compute(&self.vertical_boundary()).dim()
    }

    /// Homology of the differential restricted to entries that preserve the
    /// `j` level, i.e. `A(to) = A(from) + upower`.
    pub fn horizontal_homology_dim(&self) -> usize {
        let mut d = F2Matrix::zeros(self.len(), self.len());
        for e in &self.edges {
            let (a_from, a_to) = (self.generators[e.from].alexander, self.generators[e.to].alexander);
            if a_to == a_from + i64::from(e.upower) {
                d.flip(e.to, e.from);
            }
        }
        Homology::compute(&d).dim()
    }

    /// Isomorphism by identity of ids: same generators (with gradings) and the
    /// same multiset of entries, irrespective of order and name.
    pub fn isomorphic_by_ids(&self, other: &CfkComplex) -> bool {
        let gens = |c: &CfkComplex| {
            let mut v: Vec<_> = c.generators.iter().map(|g| (g.id.clone(), g.alexander, g.maslov)).collect();
            v.sort();
            v
        };
        let mut d1 = self.differential();
        let mut d2 = other.differential();
        d1.sort();
        d2.sort();
        gens(self) == gens(other) && d1 == d2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(Vec<String>),
    Warn(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// Outcome of [`validate`]: one entry per axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    /// Warnings do not count as failures.
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.status, CheckStatus::Fail(_)))
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter_map(|c| match &c.status {
                CheckStatus::Fail(msgs) => Some(format!("{}: {}", c.name, msgs.join(", "))),
                _ => None,
            })
            .collect()
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| matches!(c.status, CheckStatus::Fail(_))).map(|c| c.name).collect()
    }

    pub fn check(&self, name: &str) -> Option<&CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.status)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.status {
                CheckStatus::Pass => writeln!(f, "{:<20} pass", c.name)?,
                CheckStatus::Fail(m) => writeln!(f, "{:<20} FAIL  {}", c.name, m.join("; "))?,
                CheckStatus::Warn(m) => writeln!(f, "{:<20} warn  {}", c.name, m.join("; "))?,
            }
        }
        Ok(())
    }
}

pub const CHECK_FILTRATION: &str = "filtration";
pub const CHECK_MASLOV: &str = "maslov";
pub const CHECK_D_SQUARED: &str = "d_squared_zero";
pub const CHECK_VERTICAL: &str = "vertical_homology";
pub const CHECK_SYMMETRY: &str = "alexander_symmetry";

fn status(failures: Vec<String>) -> CheckStatus {
    if failures.is_empty() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail(failures)
    }
}

/// Checks the filtered-complex axioms.
pub fn validate(c: &CfkComplex) -> ValidationReport {
    let gens = c.generators();
    let describe =
        |k: usize, e: &Edge| format!("entry #{k} {} -> {} (U^{})", gens[e.from].id, gens[e.to].id, e.upower);

    let filtration = c
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| gens[e.to].alexander > gens[e.from].alexander + i64::from(e.upower))
        .map(|(k, e)| format!("{} raises j", describe(k, e)))
        .collect();

    let maslov = if c.has_maslov() {
        c.edges()
            .iter()
            .enumerate()
            .filter_map(|(k, e)| {
                let (mf, mt) = (gens[e.from].maslov?, gens[e.to].maslov?);
                let want = mf - 1 + 2 * i64::from(e.upower);
                (mt != want).then(|| format!("{}: M(to) = {mt}, expected {want}", describe(k, e)))
            })
            .collect()
    } else {
        Vec::new()
    };

    let dv = c.vertical_boundary();
    let vertical_status = if !dv.compose(&dv).is_zero() {
        CheckStatus::Fail(vec!["U^0 part of the differential does not square to zero".to_string()])
    } else {
        match Homology::compute(&dv).dim() {
            1 => CheckStatus::Pass,
            d => CheckStatus::Fail(vec![format!("dimension {d}, expected 1")]),
        }
    };

    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for g in gens {
        *counts.entry(g.alexander).or_default() += 1;
    }
    let asym: Vec<String> = counts
        .iter()
        .filter(|(a, n)| counts.get(&-**a).copied().unwrap_or(0) != **n)
        .map(|(a, n)| {
            format!("{n} generator(s) at A = {a}, {} at A = {}", counts.get(&-a).copied().unwrap_or(0), -a)
        })
        .collect();
    let symmetry = if asym.is_empty() { CheckStatus::Pass } else { CheckStatus::Warn(asym) };

    ValidationReport {
        checks: vec![
            Check { name: CHECK_FILTRATION, status: status(filtration) },
            Check { name: CHECK_MASLOV, status: status(maslov) },
            Check { name: CHECK_D_SQUARED, status: status(d_squared_defects(c)) },
            Check { name: CHECK_VERTICAL, status: vertical_status },
            Check { name: CHECK_SYMMETRY, status: symmetry },
        ],
    }
}

/// Terms `U^k · z` of `∂²x` with odd coefficient, composed symbolically.
fn d_squared_defects(c: &CfkComplex) -> Vec<String> {
    let mut out_edges: Vec<Vec<&Edge>> = vec![Vec::new(); c.len()];
    for e in c.edges() {
        out_edges[e.from].push(e);
    }
    let mut defects = Vec::new();
    for (x, first) in out_edges.iter().enumerate() {
        let mut terms: BTreeMap<(usize, u32), u32> = BTreeMap::new();
        for e1 in first {
            for e2 in &out_edges[e1.to] {
                *terms.entry((e2.to, e1.upower + e2.upower)).or_default() += 1;
            }
        }
        for ((z, k), n) in terms {
            if n % 2 == 1 {
                defects.push(format!("d^2({}) contains U^{k}*{}", c.generator(x).id, c.generator(z).id));
            }
        }
    }
    defects
}

/// The dual complex: entries reversed, Alexander and Maslov gradings negated.
pub fn mirror(c: &CfkComplex) -> CfkComplex {
    let generators = c
        .generators()
        .iter()
        .map(|g| Generator { id: g.id.clone(), alexander: -g.alexander, maslov: g.maslov.map(|m| -m) })
        .collect();
    let edges = c.edges().iter().map(|e| Edge { from: e.to, to: e.from, upower: e.upower }).collect();
    CfkComplex { name: mirror_name(c.name()), generators, edges, index: c.index.clone() }
}

fn mirror_name(name: &str) -> String {
    match name.strip_prefix('-') {
        Some(rest) => rest.to_string(),
        None => format!("-{name}"),
    }
}

fn pair_id(a: &str, b: &str) -> String {
    let wrap = |s: &str| {
        if s.contains(['.', '(', ')']) {
            format!("({s})")
        } else {
            s.to_string()
        }
    };
    format!("{}.{}", wrap(a), wrap(b))
}

/// Tensor product over `F[U, U^-1]`, modelling the connected sum.
///
/// The generator `x ⊗ y` gets id `x.y` (compound ids are parenthesised).
/// Gradings add and `∂(x ⊗ y) = ∂x ⊗ y + x ⊗ ∂y`.
pub fn tensor(c1: &CfkComplex, c2: &CfkComplex) -> CfkComplex {
    let (n1, n2) = (c1.len(), c2.len());
    let at = |a: usize, b: usize| a * n2 + b;
    let mut generators = Vec::with_capacity(n1 * n2);
    for x in c1.generators() {
        for y in c2.generators() {
            generators.push(Generator {
                id: pair_id(&x.id, &y.id),
                alexander: x.alexander + y.alexander,
                maslov: x.maslov.zip(y.maslov).map(|(a, b)| a + b),
            });
        }
    }
    // Accumulate mod 2 so that coincident terms cancel.
    let mut terms: BTreeMap<Edge, bool> = BTreeMap::new();
    let mut add = |e: Edge| {
        let slot = terms.entry(e).or_insert(false);
        *slot = !*slot;
    };
    for e in c1.edges() {
        for b in 0..n2 {
            add(Edge { from: at(e.from, b), to: at(e.to, b), upower: e.upower });
        }
    }
    for e in c2.edges() {
        for a in 0..n1 {
            add(Edge { from: at(a, e.from), to: at(a, e.to), upower: e.upower });
        }
    }
    let edges: Vec<Edge> = terms.into_iter().filter(|(_, odd)| *odd).map(|(e, _)| e).collect();
    let index: HashMap<String, usize> =
        generators.iter().enumerate().map(|(k, g)| (g.id.clone(), k)).collect();
    assert_eq!(index.len(), generators.len(), "tensor produced colliding generator ids");
    CfkComplex { name: format!("{} # {}", c1.name(), c2.name()), generators, edges, index }
}

/// Disjoint union. Exactly one summand may carry vertical homology, so the
/// result keeps a one-dimensional vertical homology.
pub fn direct_sum(c1: &CfkComplex, c2: &CfkComplex) -> Result<CfkComplex, ComplexError> {
    let (v1, v2) = (c1.vertical_homology_dim(), c2.vertical_homology_dim());
    if v1 + v2 != 1 {
        return Err(ComplexError::DirectSumRank(v1, v2));
    }
    direct_sum_unchecked(c1, c2)
}

/// Disjoint union without the vertical-homology condition. Used to attach
/// acyclic summands to one another before joining a unit summand.
pub fn direct_sum_unchecked(c1: &CfkComplex, c2: &CfkComplex) -> Result<CfkComplex, ComplexError> {
    let mut generators = c1.generators().to_vec();
    generators.extend_from_slice(c2.generators());
    let mut differential = c1.differential();
    differential.extend(c2.differential());
    CfkComplex::new(format!("{} + {}", c1.name(), c2.name()), generators, differential)
}
