//! Finite truncated simplicial sets, simplicial maps and sub-objects.
//!
//! Cells are addressed by `(level, index)`; each level carries its own
//! namespace of string identifiers used for documents and witnesses.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::axioms::AxiomReport;
use crate::delta::{DeltaError, MonotoneMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SSetError {
    #[error("level {level}: {message}")]
    Shape { level: usize, message: String },
    #[error("simplicial identity {identity} fails at level {level} on cell `{cell}`")]
    Identity {
        identity: String,
        level: usize,
        cell: String,
    },
    #[error("operator needs level {needed} but the truncation cap is {cap}")]
    BeyondCap { needed: usize, cap: usize },
    #[error("degeneracy is only defined for cells of positive dimension")]
    VertexDegeneracy,
    #[error("no cell `{name}` at level {level}")]
    UnknownCell { level: usize, name: String },
    #[error("truncation caps differ: {source_cap} vs {target_cap}")]
    CapMismatch { source_cap: usize, target_cap: usize },
    #[error("map component at level {level}: {message}")]
    MapShape { level: usize, message: String },
    #[error("map does not commute with {operator} at level {level} on cell `{cell}`")]
    NotSimplicial {
        operator: String,
        level: usize,
        cell: String,
    },
    #[error("selection is not closed under {operator} at level {level}: `{cell}`")]
    NotClosed {
        operator: String,
        level: usize,
        cell: String,
    },
    #[error(transparent)]
    Delta(#[from] DeltaError),
}

/// Where a simplicial set came from; drives Möbius certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Raw,
    /// Nerve of a poset or category with no nondegenerate simplex above
    /// dimension `chain_bound`.
    Nerve { chain_bound: usize },
}

/// Raw face and degeneracy tables.
///
/// `faces[n][i][x]` is `d_i x` for `x ∈ X_n` (`faces[0]` is empty);
/// `degeneracies[n][i][x]` is `s_i x` for `x ∈ X_n`, `n < cap`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SSetTables {
    pub cap: usize,
    pub names: Vec<Vec<String>>,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

/// A violated simplicial identity with its witnessing cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation {
    pub identity: String,
    pub level: usize,
    pub cell: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at level {} on `{}`: `{}` ≠ `{}`",
            self.identity, self.level, self.cell, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<IdentityViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite simplicial set truncated at dimension `cap`.
#[derive(Clone, Debug)]
pub struct TruncatedSSet {
    tables: SSetTables,
    index: Vec<HashMap<String, usize>>,
    provenance: Provenance,
    /// Verdicts of the four decomposition conditions, filled on first use.
    condition_reports: [OnceLock<AxiomReport>; 4],
}

impl PartialEq for TruncatedSSet {
    fn eq(&self, other: &Self) -> bool {
        self.tables == other.tables
    }
}

impl Eq for TruncatedSSet {}

impl TruncatedSSet {
    /// Builds and validates; any violated identity is an error.
    pub fn new(tables: SSetTables) -> Result<Self, SSetError> {
        let x = Self::new_unchecked(tables)?;
        if let Some(v) = x.validate().violations.into_iter().next() {
            return Err(SSetError::Identity {
                identity: v.identity,
                level: v.level,
                cell: v.cell,
            });
        }
        Ok(x)
    }

    /// Checks table shapes only. Use [`TruncatedSSet::validate`] to report
    /// identity violations.
    pub fn new_unchecked(tables: SSetTables) -> Result<Self, SSetError> {
        let cap = tables.cap;
        let shape = |level: usize, message: String| Err(SSetError::Shape { level, message });
        if tables.names.len() != cap + 1 {
            return shape(
                tables.names.len(),
                format!("expected {} levels for cap {cap}", cap + 1),
            );
        }
        let mut index = Vec::with_capacity(cap + 1);
        for (level, names) in tables.names.iter().enumerate() {
            let mut map = HashMap::with_capacity(names.len());
            for (i, name) in names.iter().enumerate() {
                if map.insert(name.clone(), i).is_some() {
                    return shape(level, format!("duplicate cell `{name}`"));
                }
            }
            index.push(map);
        }
        if tables.faces.len() != cap + 1 {
            return shape(0, format!("expected {} face levels", cap + 1));
        }
        if tables.degeneracies.len() != cap {
            return shape(0, format!("expected {cap} degeneracy levels"));
        }
        for n in 0..=cap {
            let expected = if n == 0 { 0 } else { n + 1 };
            if tables.faces[n].len() != expected {
                return shape(n, format!("expected {expected} face maps"));
            }
            for (i, table) in tables.faces[n].iter().enumerate() {
                check_table(&tables.names, n, n - 1, table, &format!("d_{i}"))?;
            }
        }
        for n in 0..cap {
            if tables.degeneracies[n].len() != n + 1 {
                return shape(n, format!("expected {} degeneracy maps", n + 1));
            }
            for (i, table) in tables.degeneracies[n].iter().enumerate() {
                check_table(&tables.names, n, n + 1, table, &format!("s_{i}"))?;
            }
        }
        Ok(Self {
            tables,
            index,
            provenance: Provenance::Raw,
            condition_reports: Default::default(),
        })
    }

    pub(crate) fn condition_report(&self, condition: usize) -> &OnceLock<AxiomReport> {
        &self.condition_reports[condition - 1]
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// The empty simplicial set.
    pub fn empty(cap: usize) -> Self {
        let tables = SSetTables {
            cap,
            names: vec![Vec::new(); cap + 1],
            faces: (0..=cap)
                .map(|n| if n == 0 { Vec::new() } else { vec![Vec::new(); n + 1] })
                .collect(),
            degeneracies: (0..cap).map(|n| vec![Vec::new(); n + 1]).collect(),
        };
        Self::new(tables).expect("empty tables are valid")
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn tables(&self) -> &SSetTables {
        &self.tables
    }

    pub fn cap(&self) -> usize {
        self.tables.cap
    }

    pub fn level_len(&self, n: usize) -> usize {
        self.tables.names.get(n).map_or(0, Vec::len)
    }

    pub fn names(&self, n: usize) -> &[String] {
        &self.tables.names[n]
    }

    pub fn name(&self, n: usize, cell: usize) -> &str {
        &self.tables.names[n][cell]
    }

    pub fn lookup(&self, n: usize, name: &str) -> Result<usize, SSetError> {
        self.index
            .get(n)
            .and_then(|m| m.get(name))
            .copied()
            .ok_or_else(|| SSetError::UnknownCell {
                level: n,
                name: name.to_string(),
            })
    }

    pub fn face(&self, n: usize, i: usize, cell: usize) -> usize {
        self.tables.faces[n][i][cell]
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        &self.tables.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize, cell: usize) -> usize {
        self.tables.degeneracies[n][i][cell]
    }

    pub fn degeneracy_table(&self, n: usize, i: usize) -> &[usize] {
        &self.tables.degeneracies[n][i]
    }

    fn require(&self, level: usize) -> Result<(), SSetError> {
        if level > self.cap() {
            return Err(SSetError::BeyondCap {
                needed: level,
                cap: self.cap(),
            });
        }
        Ok(())
    }

    /// Exhaustive check of the simplicial identities within the cap.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let cap = self.cap();
        let mut record = |identity: String, level: usize, cell: usize, lhs: (usize, usize), rhs: (usize, usize)| {
            violations.push(IdentityViolation {
                identity,
                level,
                cell: self.name(level, cell).to_string(),
                lhs: self.name(lhs.0, lhs.1).to_string(),
                rhs: self.name(rhs.0, rhs.1).to_string(),
            });
        };
        for n in 0..=cap {
            // d_i d_j = d_{j-1} d_i for i < j, on X_n
            if n >= 2 {
                for j in 1..=n {
                    for i in 0..j {
                        for x in 0..self.level_len(n) {
                            let lhs = self.face(n - 1, i, self.face(n, j, x));
                            let rhs = self.face(n - 1, j - 1, self.face(n, i, x));
                            if lhs != rhs {
                                record(
                                    format!("d_{i} d_{j} = d_{} d_{i}", j - 1),
                                    n,
                                    x,
                                    (n - 2, lhs),
                                    (n - 2, rhs),
                                );
                            }
                        }
                    }
                }
            }
            // d_i s_j on X_n
            if n < cap {
                for j in 0..=n {
                    for i in 0..=n + 1 {
                        for x in 0..self.level_len(n) {
                            let lhs = self.face(n + 1, i, self.degeneracy(n, j, x));
                            let (identity, rhs) = if i < j {
                                (
                                    format!("d_{i} s_{j} = s_{} d_{i}", j - 1),
                                    self.degeneracy(n - 1, j - 1, self.face(n, i, x)),
                                )
                            } else if i == j || i == j + 1 {
                                (format!("d_{i} s_{j} = id"), x)
                            } else {
                                (
                                    format!("d_{i} s_{j} = s_{j} d_{}", i - 1),
                                    self.degeneracy(n - 1, j, self.face(n, i - 1, x)),
                                )
                            };
                            if lhs != rhs {
                                record(identity, n, x, (n, lhs), (n, rhs));
                            }
                        }
                    }
                }
            }
            // s_i s_j = s_{j+1} s_i for i <= j, on X_n
            if n + 2 <= cap {
                for j in 0..=n {
                    for i in 0..=j {
                        for x in 0..self.level_len(n) {
                            let lhs = self.degeneracy(n + 1, i, self.degeneracy(n, j, x));
                            let rhs = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x));
                            if lhs != rhs {
                                record(
                                    format!("s_{i} s_{j} = s_{} s_{i}", j + 1),
                                    n,
                                    x,
                                    (n + 2, lhs),
                                    (n + 2, rhs),
                                );
                            }
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Applies `X(φ) : X_n → X_m` to one cell, for `φ : [m] → [n]`. Faces
    /// are taken before degeneracies so no intermediate level exceeds the cap.
    pub fn act_on(&self, phi: &MonotoneMap, cell: usize) -> Result<usize, SSetError> {
        self.require(phi.source())?;
        self.require(phi.target())?;
        let (surjection, injection) = phi.epi_mono_factor();
        let mut level = phi.target();
        let mut x = cell;
        for j in injection.missing_values().into_iter().rev() {
            x = self.face(level, j, x);
            level -= 1;
        }
        for j in surjection.repeated_positions() {
            x = self.degeneracy(level, j, x);
            level += 1;
        }
        Ok(x)
    }

    /// The whole function `X(φ) : X_n → X_m` as a table.
    pub fn act(&self, phi: &MonotoneMap) -> Result<Vec<usize>, SSetError> {
        self.require(phi.source())?;
        self.require(phi.target())?;
        (0..self.level_len(phi.target()))
            .map(|x| self.act_on(phi, x))
            .collect()
    }

    pub fn vertex(&self, n: usize, cell: usize, j: usize) -> usize {
        let mut level = n;
        let mut x = cell;
        // delete every vertex above j, then every vertex below it
        while level > j {
            x = self.face(level, level, x);
            level -= 1;
        }
        while level > 0 {
            x = self.face(level, 0, x);
            level -= 1;
        }
        x
    }

    pub fn vertices(&self, n: usize, cell: usize) -> Vec<usize> {
        (0..=n).map(|j| self.vertex(n, cell, j)).collect()
    }

    /// The principal edges `ρ_1^*, …, ρ_n^*` of an `n`-cell.
    pub fn spine(&self, n: usize, cell: usize) -> Vec<usize> {
        (1..=n)
            .map(|i| {
                let edge = MonotoneMap::new(n, vec![i - 1, i]).expect("principal edge");
                self.act_on(&edge, cell).expect("within cap")
            })
            .collect()
    }

    /// Image under the unique active map `[1] → [n]`; `s_0` on vertices.
    pub fn long_edge(&self, n: usize, cell: usize) -> Result<usize, SSetError> {
        self.require(n.max(1))?;
        self.act_on(&MonotoneMap::long_edge(n), cell)
    }

    /// `cell = s_i d_i cell` for some `i < n`.
    pub fn is_degenerate(&self, n: usize, cell: usize) -> Result<bool, SSetError> {
        if n == 0 {
            return Err(SSetError::VertexDegeneracy);
        }
        self.require(n)?;
        Ok((0..n).any(|i| self.degeneracy(n - 1, i, self.face(n, i, cell)) == cell))
    }

    /// Nondegeneracy flags for every cell of `X_n` (vertices are nondegenerate).
    pub fn nondegenerate_flags(&self, n: usize) -> Vec<bool> {
        (0..self.level_len(n))
            .map(|x| n == 0 || !self.is_degenerate(n, x).expect("level within cap"))
            .collect()
    }

    /// Restriction to levels `0..=cap`.
    pub fn truncate(&self, cap: usize) -> Result<Self, SSetError> {
        self.require(cap)?;
        let t = &self.tables;
        let tables = SSetTables {
            cap,
            names: t.names[..=cap].to_vec(),
            faces: t.faces[..=cap].to_vec(),
            degeneracies: t.degeneracies[..cap].to_vec(),
        };
        Ok(Self::new_unchecked(tables)?.with_provenance(self.provenance))
    }
}

fn check_table(
    names: &[Vec<String>],
    from: usize,
    to: usize,
    table: &[usize],
    operator: &str,
) -> Result<(), SSetError> {
    if table.len() != names[from].len() {
        return Err(SSetError::Shape {
            level: from,
            message: format!(
                "{operator} table has {} entries for {} cells",
                table.len(),
                names[from].len()
            ),
        });
    }
    if let Some((x, &y)) = table.iter().enumerate().find(|(_, &y)| y >= names[to].len()) {
        return Err(SSetError::Shape {
            level: from,
            message: format!(
                "{operator} of `{}` points to index {y}, but level {to} has {} cells",
                names[from][x],
                names[to].len()
            ),
        });
    }
    Ok(())
}

/// A levelwise map commuting with all faces and degeneracies.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Arc<TruncatedSSet>,
    target: Arc<TruncatedSSet>,
    components: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(
        source: Arc<TruncatedSSet>,
        target: Arc<TruncatedSSet>,
        components: Vec<Vec<usize>>,
    ) -> Result<Self, SSetError> {
        if source.cap() != target.cap() {
            return Err(SSetError::CapMismatch {
                source_cap: source.cap(),
                target_cap: target.cap(),
            });
        }
        let cap = source.cap();
        if components.len() != cap + 1 {
            return Err(SSetError::MapShape {
                level: components.len(),
                message: format!("expected {} components", cap + 1),
            });
        }
        for (n, f) in components.iter().enumerate() {
            if f.len() != source.level_len(n) {
                return Err(SSetError::MapShape {
                    level: n,
                    message: format!("{} entries for {} cells", f.len(), source.level_len(n)),
                });
            }
            if let Some(&y) = f.iter().find(|&&y| y >= target.level_len(n)) {
                return Err(SSetError::MapShape {
                    level: n,
                    message: format!("value {y} outside target level"),
                });
            }
        }
        for n in 0..=cap {
            for x in 0..source.level_len(n) {
                let fx = components[n][x];
                let fail = |operator: String| SSetError::NotSimplicial {
                    operator,
                    level: n,
                    cell: source.name(n, x).to_string(),
                };
                if n > 0 {
                    for i in 0..=n {
                        if components[n - 1][source.face(n, i, x)] != target.face(n, i, fx) {
                            return Err(fail(format!("d_{i}")));
                        }
                    }
                }
                if n < cap {
                    for i in 0..=n {
                        if components[n + 1][source.degeneracy(n, i, x)]
                            != target.degeneracy(n, i, fx)
                        {
                            return Err(fail(format!("s_{i}")));
                        }
                    }
                }
            }
        }
        Ok(Self {
            source,
            target,
            components,
        })
    }

    pub fn identity(x: Arc<TruncatedSSet>) -> Self {
        let components = (0..=x.cap()).map(|n| (0..x.level_len(n)).collect()).collect();
        Self {
            source: x.clone(),
            target: x,
            components,
        }
    }

    pub fn source(&self) -> &Arc<TruncatedSSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<TruncatedSSet> {
        &self.target
    }

    pub fn component(&self, n: usize) -> &[usize] {
        &self.components[n]
    }

    pub fn apply(&self, n: usize, cell: usize) -> usize {
        self.components[n][cell]
    }

    /// Injectivity of the vertex component.
    pub fn is_mono_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.level_len(0)];
        self.components[0].iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_bijective_on_objects(&self) -> bool {
        self.is_mono_on_objects() && self.source.level_len(0) == self.target.level_len(0)
    }
}

/// A levelwise subset of an ambient simplicial set, closed under all
/// structure maps, together with the induced simplicial set.
#[derive(Clone, Debug)]
pub struct SubSSet {
    ambient: Arc<TruncatedSSet>,
    selected: Vec<Vec<usize>>,
    local: Vec<HashMap<usize, usize>>,
    space: Arc<TruncatedSSet>,
}

impl SubSSet {
    pub fn new(ambient: Arc<TruncatedSSet>, mut selected: Vec<Vec<usize>>) -> Result<Self, SSetError> {
        let cap = ambient.cap();
        if selected.len() != cap + 1 {
            return Err(SSetError::Shape {
                level: selected.len(),
                message: format!("selection needs {} levels", cap + 1),
            });
        }
        for (n, cells) in selected.iter_mut().enumerate() {
            cells.sort_unstable();
            cells.dedup();
            if let Some(&x) = cells.iter().find(|&&x| x >= ambient.level_len(n)) {
                return Err(SSetError::Shape {
                    level: n,
                    message: format!("selected index {x} out of range"),
                });
            }
        }
        let local: Vec<HashMap<usize, usize>> = selected
            .iter()
            .map(|cells| cells.iter().enumerate().map(|(i, &x)| (x, i)).collect())
            .collect();
        let not_closed = |operator: String, level: usize, x: usize| SSetError::NotClosed {
            operator,
            level,
            cell: ambient.name(level, x).to_string(),
        };
        let mut tables = SSetTables {
            cap,
            names: selected
                .iter()
                .enumerate()
                .map(|(n, cells)| cells.iter().map(|&x| ambient.name(n, x).to_string()).collect())
                .collect(),
            faces: Vec::with_capacity(cap + 1),
            degeneracies: Vec::with_capacity(cap),
        };
        for n in 0..=cap {
            let mut faces = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    let table = selected[n]
                        .iter()
                        .map(|&x| {
                            local[n - 1]
                                .get(&ambient.face(n, i, x))
                                .copied()
                                .ok_or_else(|| not_closed(format!("d_{i}"), n, x))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    faces.push(table);
                }
            }
            tables.faces.push(faces);
            if n < cap {
                let mut degens = Vec::with_capacity(n + 1);
                for i in 0..=n {
                    let table = selected[n]
                        .iter()
                        .map(|&x| {
                            local[n + 1]
                                .get(&ambient.degeneracy(n, i, x))
                                .copied()
                                .ok_or_else(|| not_closed(format!("s_{i}"), n, x))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    degens.push(table);
                }
                tables.degeneracies.push(degens);
            }
        }
        // a closed subset of a valid simplicial set inherits the identities
        let space = TruncatedSSet::new_unchecked(tables)?.with_provenance(ambient.provenance());
        Ok(Self {
            ambient,
            selected,
            local,
            space: Arc::new(space),
        })
    }

    pub fn whole(ambient: Arc<TruncatedSSet>) -> Self {
        let selected = (0..=ambient.cap())
            .map(|n| (0..ambient.level_len(n)).collect())
            .collect();
        Self::new(ambient, selected).expect("the whole set is closed")
    }

    pub fn empty(ambient: Arc<TruncatedSSet>) -> Self {
        let selected = vec![Vec::new(); ambient.cap() + 1];
        Self::new(ambient, selected).expect("the empty set is closed")
    }

    pub fn ambient(&self) -> &Arc<TruncatedSSet> {
        &self.ambient
    }

    /// The induced simplicial set, with cells named as in the ambient.
    pub fn space(&self) -> &Arc<TruncatedSSet> {
        &self.space
    }

    /// Ambient indices of the selected cells at level `n`, ascending.
    pub fn selected(&self, n: usize) -> &[usize] {
        &self.selected[n]
    }

    pub fn contains(&self, n: usize, ambient_cell: usize) -> bool {
        self.local[n].contains_key(&ambient_cell)
    }

    pub fn local_index(&self, n: usize, ambient_cell: usize) -> Option<usize> {
        self.local[n].get(&ambient_cell).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.selected[0].is_empty()
    }

    pub fn inclusion(&self) -> SimplicialMap {
        SimplicialMap {
            source: self.space.clone(),
            target: self.ambient.clone(),
            components: self.selected.clone(),
        }
    }

    /// Same selection, level by level.
    pub fn same_cells(&self, other: &SubSSet) -> bool {
        self.selected == other.selected
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::{nerve, Poset};

    fn chain(n: usize) -> Arc<TruncatedSSet> {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<(String, String)> = (1..n)
            .map(|i| ((i - 1).to_string(), i.to_string()))
            .collect();
        let p = Poset::from_covers(names, &covers).unwrap();
        Arc::new(nerve(&p, None).unwrap())
    }

    fn cell(x: &TruncatedSSet, n: usize, name: &str) -> usize {
        x.lookup(n, name).unwrap()
    }

    #[test]
    fn nerve_is_valid_and_corruption_is_detected() {
        let x = chain(3);
        let x = x.truncate(3).unwrap();
        assert!(x.validate().is_valid());

        let mut tables = x.tables().clone();
        let sigma = cell(&x, 2, "(0,1,2)");
        tables.faces[2][2][sigma] = cell(&x, 1, "(1,2)");
        let corrupted = TruncatedSSet::new_unchecked(tables.clone()).unwrap();
        let report = corrupted.validate();
        assert!(!report.is_valid());
        let first = &report.violations[0];
        assert_eq!(first.identity, "d_0 d_2 = d_1 d_0");
        assert_eq!(first.cell, "(0,1,2)");
        assert!(matches!(
            TruncatedSSet::new(tables),
            Err(SSetError::Identity { .. })
        ));
    }

    #[test]
    fn empty_set_is_valid() {
        assert!(TruncatedSSet::empty(3).validate().is_valid());
    }

    #[test]
    fn shape_errors() {
        let mut tables = chain(2).tables().clone();
        tables.faces[1][0].pop();
        assert!(matches!(
            TruncatedSSet::new_unchecked(tables),
            Err(SSetError::Shape { level: 1, .. })
        ));
        let mut tables = chain(2).tables().clone();
        tables.names[1][1] = tables.names[1][0].clone();
        assert!(TruncatedSSet::new_unchecked(tables).is_err());
    }

    #[test]
    fn act_examples() {
        let x = chain(3);
        let id = MonotoneMap::identity(2);
        assert_eq!(x.act(&id).unwrap(), (0..x.level_len(2)).collect::<Vec<_>>());

        let d1 = MonotoneMap::coface(2, 1).unwrap();
        let sigma = cell(&x, 2, "(0,1,2)");
        assert_eq!(x.name(1, x.act_on(&d1, sigma).unwrap()), "(0,2)");

        let s0 = MonotoneMap::codegeneracy(0, 0).unwrap();
        let v = cell(&x, 0, "(1)");
        assert_eq!(x.name(1, x.act_on(&s0, v).unwrap()), "(1,1)");

        let too_big = MonotoneMap::identity(x.cap() + 1);
        assert!(matches!(x.act(&too_big), Err(SSetError::BeyondCap { .. })));
    }

    #[test]
    fn act_is_functorial() {
        let x = chain(3);
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    for phi in MonotoneMap::all(a, b) {
                        for psi in MonotoneMap::all(b, c) {
                            let composite = x.act(&psi.compose(&phi).unwrap()).unwrap();
                            let psi_star = x.act(&psi).unwrap();
                            let phi_star = x.act(&phi).unwrap();
                            for cell in 0..x.level_len(c) {
                                assert_eq!(composite[cell], phi_star[psi_star[cell]]);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degeneracy_examples() {
        let x = chain(3);
        for v in 0..x.level_len(0) {
            assert!(x.is_degenerate(1, x.degeneracy(0, 0, v)).unwrap());
        }
        assert!(!x.is_degenerate(2, cell(&x, 2, "(0,1,2)")).unwrap());
        let y = chain(2);
        assert!(y.is_degenerate(2, cell(&y, 2, "(0,0,1)")).unwrap());
        assert_eq!(x.is_degenerate(0, 0), Err(SSetError::VertexDegeneracy));
    }

    #[test]
    fn long_edge_examples() {
        let x = chain(3);
        let e = cell(&x, 1, "(0,2)");
        assert_eq!(x.long_edge(1, e).unwrap(), e);
        assert_eq!(x.long_edge(2, cell(&x, 2, "(0,1,2)")).unwrap(), e);
        let v = cell(&x, 0, "(2)");
        assert_eq!(x.long_edge(0, v).unwrap(), x.degeneracy(0, 0, v));
    }

    #[test]
    fn vertices_and_spine() {
        let x = chain(3);
        let sigma = cell(&x, 2, "(0,1,2)");
        let names: Vec<&str> = x.vertices(2, sigma).iter().map(|&v| x.name(0, v)).collect();
        assert_eq!(names, ["(0)", "(1)", "(2)"]);
        let spine: Vec<&str> = x.spine(2, sigma).iter().map(|&e| x.name(1, e)).collect();
        assert_eq!(spine, ["(0,1)", "(1,2)"]);
    }

    #[test]
    fn simplicial_map_checks() {
        let x = chain(2);
        let id = SimplicialMap::identity(x.clone());
        assert!(id.is_mono_on_objects());
        let mut components: Vec<Vec<usize>> =
            (0..=x.cap()).map(|n| (0..x.level_len(n)).collect()).collect();
        components[1].swap(0, 1);
        assert!(matches!(
            SimplicialMap::new(x.clone(), x.clone(), components),
            Err(SSetError::NotSimplicial { .. })
        ));
        let y = Arc::new(x.truncate(1).unwrap());
        assert!(matches!(
            SimplicialMap::new(y, x, vec![]),
            Err(SSetError::CapMismatch { .. })
        ));
    }

    #[test]
    fn sub_sset_closure() {
        let x = chain(3);
        let sub = SubSSet::whole(x.clone());
        assert_eq!(**sub.space(), *x);
        assert!(sub.inclusion().is_mono_on_objects());
        assert!(SubSSet::empty(x.clone()).space().validate().is_valid());
        // the edge (0,1) without its vertices is not closed
        let mut selected = vec![Vec::new(); x.cap() + 1];
        selected[1].push(cell(&x, 1, "(0,1)"));
        assert!(matches!(
            SubSSet::new(x, selected),
            Err(SSetError::NotClosed { .. })
        ));
    }
}
