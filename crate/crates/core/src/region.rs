//! Subquotient regions of the lattice, their realizations as finite complexes
//! over the two-element field, and the chain maps between them.

use std::collections::HashMap;
use std::fmt;

use crate::complex::{CfkComplex, LatticePoint};
use crate::error::RegionError;
use crate::f2::{BitVec, F2Matrix, Homology};

/// The closed list of lattice regions. Each kind is a difference of two
/// down-closed sets (or an intersection of such with a half plane), so the
/// differential restricts to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `{i = i0}`
    VerticalSlice { i: i64 },
    /// `{i = i0, j <= s}`
    VerticalClipped { i: i64, s: i64 },
    /// `{max(i, j - m) = 0}`
    Hook { m: i64 },
    /// `{max(i, j - m) = 0, i >= -s}`
    HookClipped { m: i64, s: i64 },
    /// `{min(i, j - m) = 0}`
    LHook { m: i64 },
    /// `{min(i, j - m) = 0, i <= s}`
    LHookClipped { m: i64, s: i64 },
    /// `{j = j0, i <= i_max}`; only used as the kernel of a quotient.
    Row { j: i64, i_max: i64 },
}

impl Region {
    pub fn contains(&self, i: i64, j: i64) -> bool {
        match *self {
            Region::VerticalSlice { i: i0 } => i == i0,
            Region::VerticalClipped { i: i0, s } => i == i0 && j <= s,
            Region::Hook { m } => i.max(j - m) == 0,
            Region::HookClipped { m, s } => i.max(j - m) == 0 && i >= -s,
            Region::LHook { m } => i.min(j - m) == 0,
            Region::LHookClipped { m, s } => i.min(j - m) == 0 && i <= s,
            Region::Row { j: j0, i_max } => j == j0 && i <= i_max,
        }
    }

    /// The unique `i` with `[x, i, i + alexander]` in the region, if any.
    /// Every kind meets each diagonal `j - i = A` at most once.
    pub fn column_for(&self, alexander: i64) -> Option<i64> {
        let i = match *self {
            Region::VerticalSlice { i } | Region::VerticalClipped { i, .. } => i,
            Region::Hook { m } | Region::HookClipped { m, .. } => {
                if alexander <= m {
                    0
                } else {
                    m - alexander
                }
            }
            Region::LHook { m } | Region::LHookClipped { m, .. } => {
                if alexander >= m {
                    0
                } else {
                    m - alexander
                }
            }
            Region::Row { j, .. } => j - alexander,
        };
        self.contains(i, i + alexander).then_some(i)
    }
}

/// `j - m` with the sign folded in.
fn j_minus(m: i64) -> String {
    match m {
        0 => "j".to_string(),
        m if m > 0 => format!("j-{m}"),
        m => format!("j+{}", -m),
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Region::VerticalSlice { i } => write!(f, "C{{i={i}}}"),
            Region::VerticalClipped { i, s } => write!(f, "C{{i={i}, j<={s}}}"),
            Region::Hook { m } => write!(f, "C{{max(i,{})=0}}", j_minus(m)),
            Region::HookClipped { m, s } => write!(f, "C{{max(i,{})=0, i>={}}}", j_minus(m), -s),
            Region::LHook { m } => write!(f, "C{{min(i,{})=0}}", j_minus(m)),
            Region::LHookClipped { m, s } => write!(f, "C{{min(i,{})=0, i<={s}}}", j_minus(m)),
            Region::Row { j, i_max } => write!(f, "C{{j={j}, i<={i_max}}}"),
        }
    }
}

/// A finite chain complex over the two-element field whose basis consists of
/// lattice points.
#[derive(Clone, Debug)]
pub struct F2Complex {
    basis: Vec<LatticePoint>,
    boundary: F2Matrix,
    filtration: Option<Vec<i64>>,
    grading: Option<Vec<i64>>,
    index: HashMap<(String, i64), usize>,
}

impl F2Complex {
    pub fn new(basis: Vec<LatticePoint>, boundary: F2Matrix) -> Result<Self, RegionError> {
        assert_eq!(boundary.ncols(), basis.len());
        assert_eq!(boundary.nrows(), basis.len());
        if !boundary.compose(&boundary).is_zero() {
            return Err(RegionError::NotComplex);
        }
        let index = basis.iter().enumerate().map(|(k, p)| ((p.gen.clone(), p.i), k)).collect();
        Ok(Self { basis, boundary, filtration: None, grading: None, index })
    }

    /// Attaches an integer filtration level to each basis element.
    pub fn with_filtration(mut self, levels: Vec<i64>) -> Self {
        assert_eq!(levels.len(), self.basis.len());
        self.filtration = Some(levels);
        self
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        assert_eq!(grading.len(), self.basis.len());
        self.grading = Some(grading);
        self
    }

    pub fn basis(&self) -> &[LatticePoint] {
        &self.basis
    }

    pub fn boundary(&self) -> &F2Matrix {
        &self.boundary
    }

    pub fn filtration(&self) -> Option<&[i64]> {
        self.filtration.as_deref()
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.index.get(&(p.gen.clone(), p.i)).copied()
    }

    pub fn homology(&self) -> Homology {
        Homology::compute(&self.boundary)
    }

    /// Restriction to the basis elements selected by `keep`, with the induced
    /// boundary. Correct for sub- and quotient complexes; anything else is
    /// rejected if the restricted boundary fails to square to zero.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Result<F2Complex, RegionError> {
        let kept: Vec<usize> = (0..self.len()).filter(|&k| keep(k)).collect();
        let new_index: HashMap<usize, usize> = kept.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let cols = kept
            .iter()
            .map(|&o| {
                BitVec::from_indices(
                    kept.len(),
                    self.boundary.column(o).ones().filter_map(|r| new_index.get(&r).copied()),
                )
            })
            .collect();
        let boundary = F2Matrix::from_columns(kept.len(), cols);
        let mut out = F2Complex::new(kept.iter().map(|&k| self.basis[k].clone()).collect(), boundary)?;
        if let Some(f) = &self.filtration {
            out.filtration = Some(kept.iter().map(|&k| f[k]).collect());
        }
        if let Some(g) = &self.grading {
            out.grading = Some(kept.iter().map(|&k| g[k]).collect());
        }
        Ok(out)
    }

    /// The subcomplex of elements with filtration level `<= level`.
    pub fn sublevel(&self, level: i64) -> Result<F2Complex, RegionError> {
        let f = self.filtration.as_ref().expect("sublevel needs a filtration");
        let sub = self.restrict(|k| f[k] <= level)?;
        // closed under the boundary
        for (k, col) in self.boundary.columns().iter().enumerate() {
            if f[k] <= level && col.ones().any(|r| f[r] > level) {
                return Err(RegionError::KillNotSubcomplex {
                    gen: self.basis[k].gen.clone(),
                    i: self.basis[k].i,
                    j: self.basis[k].j,
                });
            }
        }
        Ok(sub)
    }

    /// The quotient by the sublevel complex at `level`.
    pub fn quotient_by_sublevel(&self, level: i64) -> Result<F2Complex, RegionError> {
        let f = self.filtration.as_ref().expect("quotient needs a filtration");
        self.sublevel(level)?;
        self.restrict(|k| f[k] > level)
    }

    /// Σ (-1)^grading over the basis.
    pub fn euler_characteristic(&self) -> Option<i64> {
        self.grading.as_ref().map(|g| g.iter().map(|d| if d.rem_euclid(2) == 0 { 1 } else { -1 }).sum())
    }

    /// Homology dimension in each grading.
    pub fn graded_homology_dims(&self) -> Option<Vec<(i64, usize)>> {
        let g = self.grading.as_ref()?;
        let mut degrees: Vec<i64> = g.clone();
        degrees.sort_unstable();
        degrees.dedup();
        let rank_from = |d: i64| {
            let cols: Vec<BitVec> =
                (0..self.len()).filter(|&k| g[k] == d).map(|k| self.boundary.column(k).clone()).collect();
            F2Matrix::from_columns(self.len(), cols).rank()
        };
        Some(
            degrees
                .into_iter()
                .map(|d| {
                    let n = g.iter().filter(|&&x| x == d).count();
                    (d, n - rank_from(d) - rank_from(d + 1))
                })
                .collect(),
        )
    }

    /// Plain-text listing of the basis and the boundary.
    pub fn listing(&self) -> String {
        let mut out = String::new();
        for (k, p) in self.basis.iter().enumerate() {
            let targets: Vec<String> =
                self.boundary.column(k).ones().map(|r| self.basis[r].to_string()).collect();
            let level = self.filtration.as_ref().map(|f| format!("  level {}", f[k])).unwrap_or_default();
            let d = if targets.is_empty() { "0".to_string() } else { targets.join(" + ") };
            out.push_str(&format!("{p}{level}  d = {d}\n"));
        }
        out
    }
}

/// Realizes the region as a finite complex: all lattice points of `c` inside
/// it, with the boundary entries whose endpoints both lie inside.
pub fn realize(c: &CfkComplex, region: Region) -> Result<F2Complex, RegionError> {
    let columns: Vec<Option<i64>> = c.generators().iter().map(|g| region.column_for(g.alexander)).collect();
    let mut slot = vec![None; c.len()];
    let mut basis = Vec::new();
    for (g, col) in columns.iter().enumerate() {
        if let Some(i) = col {
            slot[g] = Some(basis.len());
            basis.push(c.point(g, *i));
        }
    }
    let mut boundary = F2Matrix::zeros(basis.len(), basis.len());
    for e in c.edges() {
        let (Some(i_from), Some(i_to)) = (columns[e.from], columns[e.to]) else { continue };
        if i_to == i_from - i64::from(e.upower) {
            boundary.flip(slot[e.to].unwrap(), slot[e.from].unwrap());
        }
    }
    let grading = c.has_maslov().then(|| {
        basis
            .iter()
            .map(|p| {
                let g = c.generator(c.index_of(&p.gen).unwrap());
                g.maslov.unwrap() + 2 * p.i
            })
            .collect()
    });
    let out = F2Complex::new(basis, boundary)?;
    Ok(match grading {
        Some(g) => out.with_grading(g),
        None => out,
    })
}

/// A chain map between realized complexes.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: F2Complex,
    target: F2Complex,
    matrix: F2Matrix,
}

impl ChainMap {
    pub fn new(source: F2Complex, target: F2Complex, matrix: F2Matrix) -> Result<Self, RegionError> {
        assert_eq!(matrix.ncols(), source.len());
        assert_eq!(matrix.nrows(), target.len());
        if target.boundary().compose(&matrix) != matrix.compose(source.boundary()) {
            return Err(RegionError::NotChainMap);
        }
        Ok(Self { source, target, matrix })
    }

    /// Quotients `source` by the points selected by `kill`, then includes the
    /// surviving points identically into `target`.
    pub fn by_point_identity(
        source: F2Complex,
        target: F2Complex,
        kill: impl Fn(&LatticePoint) -> bool,
    ) -> Result<Self, RegionError> {
        let killed: Vec<bool> = source.basis().iter().map(&kill).collect();
        for (k, col) in source.boundary().columns().iter().enumerate() {
            if killed[k] && col.ones().any(|r| !killed[r]) {
                let p = &source.basis()[k];
                return Err(RegionError::KillNotSubcomplex { gen: p.gen.clone(), i: p.i, j: p.j });
            }
        }
        let mut matrix = F2Matrix::zeros(target.len(), source.len());
        for (k, p) in source.basis().iter().enumerate() {
            if killed[k] {
                continue;
            }
            let t = target.index_of(p).ok_or_else(|| RegionError::SurvivorOutsideTarget {
                gen: p.gen.clone(),
                i: p.i,
                j: p.j,
            })?;
            matrix.set(t, k, true);
        }
        Self::new(source, target, matrix)
    }

    pub fn source(&self) -> &F2Complex {
        &self.source
    }

    pub fn target(&self) -> &F2Complex {
        &self.target
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.matrix
    }

    /// Matrix of the induced map in the representative bases of the source and
    /// target homology.
    pub fn induced_on_homology(&self) -> F2Matrix {
        let hs = self.source.homology();
        let ht = self.target.homology();
        let cols = hs
            .representatives()
            .iter()
            .map(|z| ht.coordinates(&self.matrix.apply(z)).expect("chain maps send cycles to cycles"))
            .collect();
        F2Matrix::from_columns(ht.dim(), cols)
    }

    /// Whether the induced map on homology is zero (vacuously so when the
    /// source homology vanishes).
    pub fn is_trivial(&self) -> bool {
        let ht = self.target.homology();
        self.source.homology().representatives().iter().all(|z| ht.is_boundary(&self.matrix.apply(z)))
    }
}

/// `source -> source / kill -> target`, all three given as regions of `c`.
pub fn quotient_then_include(
    c: &CfkComplex,
    source: Region,
    kill: Region,
    target: Region,
) -> Result<ChainMap, RegionError> {
    ChainMap::by_point_identity(realize(c, source)?, realize(c, target)?, |p| kill.contains(p.i, p.j))
}
