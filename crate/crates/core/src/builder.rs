//! Builds a truncated simplicial set from its nondegenerate cells.
//!
//! Every cell is stored in Eilenberg–Zilber form `σ^* y` with `σ` a
//! surjection and `y` nondegenerate, so only the faces of nondegenerate
//! cells have to be supplied. Degenerate cells are named `s1s0(y)`, listing
//! the degeneracy operators outermost first.

use std::collections::HashMap;

use crate::delta::MonotoneMap;
use crate::sset::{SSetError, SSetTables, TruncatedSSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Ez {
    surjection: Vec<usize>,
    dim: usize,
    cell: usize,
}

#[derive(Clone, Debug)]
struct Generator {
    name: String,
    faces: Vec<Ez>,
}

#[derive(Clone, Debug)]
pub struct SSetBuilder {
    cap: usize,
    generators: Vec<Vec<Generator>>,
    levels: Vec<Vec<Ez>>,
    lookup: Vec<HashMap<String, usize>>,
}

impl SSetBuilder {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            generators: vec![Vec::new(); cap + 1],
            levels: Vec::new(),
            lookup: Vec::new(),
        }
    }

    /// Adds a nondegenerate vertex.
    pub fn vertex(&mut self, name: &str) -> Result<&mut Self, SSetError> {
        self.cell(name, &[])
    }

    /// Adds a nondegenerate cell of dimension `faces.len() - 1` (or a vertex
    /// when `faces` is empty). Faces name existing cells, degenerate ones
    /// included. Cells must be added in order of dimension.
    pub fn cell(&mut self, name: &str, faces: &[&str]) -> Result<&mut Self, SSetError> {
        let dim = faces.len().saturating_sub(1);
        if dim > self.cap || (faces.len() == 1) {
            return Err(SSetError::Shape {
                level: dim,
                message: format!("cell `{name}` needs 0 or at least 2 faces within the cap"),
            });
        }
        if self.generators[dim + 1..].iter().any(|g| !g.is_empty()) {
            return Err(SSetError::Shape {
                level: dim,
                message: format!("cell `{name}` added after a higher-dimensional cell"),
            });
        }
        self.materialize(dim.saturating_sub(1));
        let faces = faces
            .iter()
            .map(|face| {
                let index = *self.lookup[dim - 1]
                    .get(*face)
                    .ok_or_else(|| SSetError::UnknownCell {
                        level: dim - 1,
                        name: face.to_string(),
                    })?;
                Ok(self.levels[dim - 1][index].clone())
            })
            .collect::<Result<Vec<_>, SSetError>>()?;
        self.generators[dim].push(Generator {
            name: name.to_string(),
            faces,
        });
        self.levels.truncate(dim);
        self.lookup.truncate(dim);
        Ok(self)
    }

    fn ez_name(&self, ez: &Ez) -> String {
        let base = &self.generators[ez.dim][ez.cell].name;
        let surjection = MonotoneMap::new(ez.dim, ez.surjection.clone()).expect("valid");
        if surjection.is_identity() {
            return base.clone();
        }
        let ops: String = surjection
            .repeated_positions()
            .iter()
            .rev()
            .map(|j| format!("s{j}"))
            .collect();
        format!("{ops}({base})")
    }

    /// Enumerates levels `0..=top`.
    fn materialize(&mut self, top: usize) {
        while self.levels.len() <= top {
            let n = self.levels.len();
            let mut cells = Vec::new();
            for k in 0..=n {
                let surjections: Vec<MonotoneMap> = MonotoneMap::all(n, k)
                    .into_iter()
                    .filter(MonotoneMap::is_surjective)
                    .collect();
                for cell in 0..self.generators[k].len() {
                    for s in &surjections {
                        cells.push(Ez {
                            surjection: s.values().to_vec(),
                            dim: k,
                            cell,
                        });
                    }
                }
            }
            let lookup = cells
                .iter()
                .enumerate()
                .map(|(i, ez)| (self.ez_name(ez), i))
                .collect();
            self.levels.push(cells);
            self.lookup.push(lookup);
        }
    }

    /// `φ^*(σ^* y)` in normal form.
    fn act(&self, phi: &MonotoneMap, ez: &Ez) -> Ez {
        let sigma = MonotoneMap::new(ez.dim, ez.surjection.clone()).expect("valid");
        let psi = sigma.compose(phi).expect("composable");
        let (surjection, injection) = psi.epi_mono_factor();
        let missing = injection.missing_values();
        let Some(&j) = missing.last() else {
            return Ez {
                surjection: surjection.values().to_vec(),
                dim: ez.dim,
                cell: ez.cell,
            };
        };
        // injection = δ^j ∘ rest
        let rest = MonotoneMap::new(
            ez.dim - 1,
            injection
                .values()
                .iter()
                .map(|&v| if v > j { v - 1 } else { v })
                .collect(),
        )
        .expect("valid");
        let next = rest.compose(&surjection).expect("composable");
        self.act(&next, &self.generators[ez.dim][ez.cell].faces[j])
    }

    fn tables(&mut self) -> SSetTables {
        self.materialize(self.cap);
        let cap = self.cap;
        let index: Vec<HashMap<&Ez, usize>> = self
            .levels
            .iter()
            .map(|cells| cells.iter().enumerate().map(|(i, ez)| (ez, i)).collect())
            .collect();
        let mut tables = SSetTables {
            cap,
            names: self
                .levels
                .iter()
                .map(|cells| cells.iter().map(|ez| self.ez_name(ez)).collect())
                .collect(),
            faces: Vec::with_capacity(cap + 1),
            degeneracies: Vec::with_capacity(cap),
        };
        for n in 0..=cap {
            let mut faces = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    let delta = MonotoneMap::coface(n, i).expect("coface");
                    faces.push(
                        self.levels[n]
                            .iter()
                            .map(|ez| index[n - 1][&self.act(&delta, ez)])
                            .collect(),
                    );
                }
            }
            tables.faces.push(faces);
            if n < cap {
                let mut degens = Vec::with_capacity(n + 1);
                for i in 0..=n {
                    let s = MonotoneMap::codegeneracy(n, i).expect("codegeneracy");
                    degens.push(
                        self.levels[n]
                            .iter()
                            .map(|ez| index[n + 1][&self.act(&s, ez)])
                            .collect(),
                    );
                }
                tables.degeneracies.push(degens);
            }
        }
        tables
    }

    /// Builds and checks all simplicial identities.
    pub fn build(&mut self) -> Result<TruncatedSSet, SSetError> {
        TruncatedSSet::new(self.tables())
    }

    /// Builds without identity checks, for corrupt-and-detect harnesses.
    pub fn build_unchecked(&mut self) -> Result<TruncatedSSet, SSetError> {
        TruncatedSSet::new_unchecked(self.tables())
    }
}
