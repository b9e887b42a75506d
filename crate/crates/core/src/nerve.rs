//! Nerves of finite posets and finite categories.

use std::collections::HashMap;

use thiserror::Error;

use crate::sset::{Provenance, SSetError, SSetTables, SimplicialMap, TruncatedSSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NerveError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("order relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("order relation is not transitive: `{0}` ≤ `{1}` ≤ `{2}`")]
    NotTransitive(String, String, String),
    #[error("cap {0} is below 2")]
    CapTooSmall(usize),
    #[error("category: {0}")]
    Category(String),
    #[error(transparent)]
    SSet(#[from] SSetError),
}

/// A finite poset with its order relation as a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

fn index_names(names: &[String]) -> Result<HashMap<&str, usize>, NerveError> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(NerveError::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

fn resolve_pairs(
    index: &HashMap<&str, usize>,
    pairs: &[(String, String)],
) -> Result<Vec<(usize, usize)>, NerveError> {
    let get = |name: &String| {
        index
            .get(name.as_str())
            .copied()
            .ok_or_else(|| NerveError::UnknownElement(name.clone()))
    };
    pairs.iter().map(|(a, b)| Ok((get(a)?, get(b)?))).collect()
}

impl Poset {
    /// Reflexive-transitive closure of the given cover pairs `a < b`.
    pub fn from_covers(names: Vec<String>, covers: &[(String, String)]) -> Result<Self, NerveError> {
        let index = index_names(&names)?;
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in resolve_pairs(&index, covers)? {
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(NerveError::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }
        Ok(Self { names, leq })
    }

    /// The full relation `a ≤ b`, verified to be a partial order.
    pub fn from_order(names: Vec<String>, pairs: &[(String, String)]) -> Result<Self, NerveError> {
        let index = index_names(&names)?;
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (a, b) in resolve_pairs(&index, pairs)? {
            leq[a][b] = true;
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(NerveError::NotReflexive(names[i].clone()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(NerveError::Cycle(names[i].clone(), names[j].clone()));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(NerveError::NotTransitive(
                            names[i].clone(),
                            names[j].clone(),
                            names[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self { names, leq })
    }

    /// Builds directly from a relation matrix already known to be an order.
    pub fn from_matrix(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, NerveError> {
        let pairs: Vec<(String, String)> = (0..names.len())
            .flat_map(|i| (0..names.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| leq[i][j])
            .map(|(i, j)| (names[i].clone(), names[j].clone()))
            .collect();
        Self::from_order(names, &pairs)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Pairs `a < b` with nothing strictly between, in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Number of edges in a longest strict chain.
    pub fn chain_bound(&self) -> usize {
        let order = self.linear_extension();
        let mut longest = vec![0usize; self.len()];
        for (pos, &b) in order.iter().enumerate() {
            for &a in &order[..pos] {
                if self.lt(a, b) {
                    longest[b] = longest[b].max(longest[a] + 1);
                }
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Elements sorted so that `a < b` implies `a` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&b| (0..self.len()).filter(|&a| self.lt(a, b)).count());
        order
    }
}

fn chain_name(names: &[String], chain: &[usize]) -> String {
    let parts: Vec<&str> = chain.iter().map(|&i| names[i].as_str()).collect();
    format!("({})", parts.join(","))
}

/// Default truncation for a poset nerve: one above the longest chain.
pub fn default_cap(p: &Poset) -> usize {
    (p.chain_bound() + 1).max(2)
}

/// The nerve of `p`: `n`-cells are weakly increasing chains `x_0 ≤ … ≤ x_n`,
/// named like `(a,b,c)`. Defaults to [`default_cap`].
pub fn nerve(p: &Poset, cap: Option<usize>) -> Result<TruncatedSSet, NerveError> {
    let cap = cap.unwrap_or_else(|| default_cap(p));
    if cap < 2 {
        return Err(NerveError::CapTooSmall(cap));
    }
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..p.len()).map(|x| vec![x]).collect()];
    for n in 1..=cap {
        let mut next = Vec::new();
        for chain in &levels[n - 1] {
            let last = *chain.last().expect("nonempty chain");
            for y in 0..p.len() {
                if p.leq(last, y) {
                    let mut c = chain.clone();
                    c.push(y);
                    next.push(c);
                }
            }
        }
        levels.push(next);
    }
    let tables = chain_tables(
        &levels,
        |c| chain_name(p.names(), c),
        |_, c, i| {
            let mut d = c.to_vec();
            d.remove(i);
            d
        },
        |_, c, i| {
            let mut s = c.to_vec();
            s.insert(i, c[i]);
            s
        },
    )?;
    Ok(TruncatedSSet::new_unchecked(tables)?.with_provenance(Provenance::Nerve {
        chain_bound: p.chain_bound(),
    }))
}

/// Shared table assembly for nerves whose cells are keyed by sequences.
fn chain_tables<F, D, S>(
    levels: &[Vec<Vec<usize>>],
    name: F,
    face: D,
    degeneracy: S,
) -> Result<SSetTables, SSetError>
where
    F: Fn(&[usize]) -> String,
    D: Fn(usize, &[usize], usize) -> Vec<usize>,
    S: Fn(usize, &[usize], usize) -> Vec<usize>,
{
    let cap = levels.len() - 1;
    let lookup: Vec<HashMap<&[usize], usize>> = levels
        .iter()
        .map(|cells| cells.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect())
        .collect();
    let mut tables = SSetTables {
        cap,
        names: levels
            .iter()
            .map(|cells| cells.iter().map(|c| name(c)).collect())
            .collect(),
        faces: Vec::with_capacity(cap + 1),
        degeneracies: Vec::with_capacity(cap),
    };
    for n in 0..=cap {
        let faces = if n == 0 {
            Vec::new()
        } else {
            (0..=n)
                .map(|i| {
                    levels[n]
                        .iter()
                        .map(|c| lookup[n - 1][face(n, c, i).as_slice()])
                        .collect()
                })
                .collect()
        };
        tables.faces.push(faces);
        if n < cap {
            tables.degeneracies.push(
                (0..=n)
                    .map(|i| {
                        levels[n]
                            .iter()
                            .map(|c| lookup[n + 1][degeneracy(n, c, i).as_slice()])
                            .collect()
                    })
                    .collect(),
            );
        }
    }
    Ok(tables)
}

/// A finite category given by its composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Category {
    objects: Vec<String>,
    morphisms: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    identity: Vec<usize>,
    /// `compose[g][f]` is `g ∘ f` when `target(f) = source(g)`.
    compose: Vec<Vec<Option<usize>>>,
}

/// Morphism `(name, source, target)`.
pub type MorphismSpec = (String, String, String);

impl Category {
    /// `composition` lists triples `(g, f, h)` meaning `g ∘ f = h`; every
    /// composable pair must appear exactly once.
    pub fn new(
        objects: Vec<String>,
        morphisms: &[MorphismSpec],
        identities: &[(String, String)],
        composition: &[(String, String, String)],
    ) -> Result<Self, NerveError> {
        let err = |m: String| NerveError::Category(m);
        let obj_index = index_names(&objects)?;
        let names: Vec<String> = morphisms.iter().map(|m| m.0.clone()).collect();
        let mor_index = index_names(&names)?;
        let obj = |name: &str| {
            obj_index
                .get(name)
                .copied()
                .ok_or_else(|| NerveError::UnknownElement(name.to_string()))
        };
        let mor = |name: &str| {
            mor_index
                .get(name)
                .copied()
                .ok_or_else(|| NerveError::UnknownElement(name.to_string()))
        };
        let mut source = Vec::with_capacity(names.len());
        let mut target = Vec::with_capacity(names.len());
        for (_, s, t) in morphisms {
            source.push(obj(s)?);
            target.push(obj(t)?);
        }
        let mut identity = vec![usize::MAX; objects.len()];
        for (o, m) in identities {
            let (o, m) = (obj(o)?, mor(m)?);
            if source[m] != o || target[m] != o {
                return Err(err(format!("identity `{}` is not an endomorphism of `{}`", names[m], objects[o])));
            }
            identity[o] = m;
        }
        if let Some(o) = identity.iter().position(|&m| m == usize::MAX) {
            return Err(err(format!("object `{}` has no identity", objects[o])));
        }
        let n = names.len();
        let mut compose = vec![vec![None; n]; n];
        for (g, f, h) in composition {
            let (g, f, h) = (mor(g)?, mor(f)?, mor(h)?);
            if target[f] != source[g] {
                return Err(err(format!("`{}` ∘ `{}` is not composable", names[g], names[f])));
            }
            if source[h] != source[f] || target[h] != target[g] {
                return Err(err(format!("`{}` ∘ `{}` = `{}` has the wrong endpoints", names[g], names[f], names[h])));
            }
            if compose[g][f].replace(h).is_some() {
                return Err(err(format!("`{}` ∘ `{}` is listed twice", names[g], names[f])));
            }
        }
        for g in 0..n {
            for f in 0..n {
                if target[f] == source[g] && compose[g][f].is_none() {
                    return Err(err(format!("composition table misses `{}` ∘ `{}`", names[g], names[f])));
                }
            }
        }
        let c = Self {
            objects,
            morphisms: names,
            source,
            target,
            identity,
            compose,
        };
        c.check_laws()?;
        Ok(c)
    }

    fn check_laws(&self) -> Result<(), NerveError> {
        let n = self.morphisms.len();
        for f in 0..n {
            let left = self.compose[self.identity[self.target[f]]][f];
            let right = self.compose[f][self.identity[self.source[f]]];
            if left != Some(f) || right != Some(f) {
                return Err(NerveError::Category(format!(
                    "unit law fails for `{}`",
                    self.morphisms[f]
                )));
            }
        }
        for f in 0..n {
            for g in 0..n {
                let Some(gf) = self.compose[g][f] else { continue };
                for h in 0..n {
                    let Some(hg) = self.compose[h][g] else { continue };
                    if self.compose[h][gf] != self.compose[hg][f] {
                        return Err(NerveError::Category(format!(
                            "associativity fails for `{}`, `{}`, `{}`",
                            self.morphisms[h], self.morphisms[g], self.morphisms[f]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// A poset viewed as a category; the morphism `a ≤ b` is named `a≤b`.
    pub fn from_poset(p: &Poset) -> Self {
        let n = p.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if p.leq(a, b) {
                    index.insert((a, b), morphisms.len());
                    morphisms.push((a, b));
                }
            }
        }
        let m = morphisms.len();
        let mut compose = vec![vec![None; m]; m];
        for (f, &(a, b)) in morphisms.iter().enumerate() {
            for (g, &(b2, c)) in morphisms.iter().enumerate() {
                if b == b2 {
                    compose[g][f] = Some(index[&(a, c)]);
                }
            }
        }
        Self {
            objects: p.names().to_vec(),
            morphisms: morphisms
                .iter()
                .map(|&(a, b)| format!("{}≤{}", p.name(a), p.name(b)))
                .collect(),
            source: morphisms.iter().map(|m| m.0).collect(),
            target: morphisms.iter().map(|m| m.1).collect(),
            identity: (0..n).map(|a| index[&(a, a)]).collect(),
            compose,
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[String] {
        &self.morphisms
    }

    pub fn source(&self, f: usize) -> usize {
        self.source[f]
    }

    pub fn target(&self, f: usize) -> usize {
        self.target[f]
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identity[object]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.source[f]] == f
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }
}

/// Result of [`nerve_category`]: the nerve plus the fate of the declared bound.
#[derive(Clone, Debug)]
pub struct CategoryNerve {
    pub space: TruncatedSSet,
    /// `Some(true)` when the declared bound was verified at the cap.
    pub bound_verified: Option<bool>,
}

/// Nerve of a finite category. Level 0 cells are objects named `(x)`,
/// level `n ≥ 1` cells are composable strings named `[f;g;…]`, listed in
/// diagrammatic order. A declared chain bound `b` is accepted as proof of the
/// Möbius condition when level `b + 1` is within the cap and has no
/// nondegenerate cell.
pub fn nerve_category(
    c: &Category,
    cap: usize,
    declared_bound: Option<usize>,
) -> Result<CategoryNerve, NerveError> {
    if cap < 2 {
        return Err(NerveError::CapTooSmall(cap));
    }
    let objects: Vec<Vec<usize>> = (0..c.objects.len()).map(|o| vec![o]).collect();
    let mut levels = vec![objects];
    levels.push((0..c.morphisms.len()).map(|f| vec![f]).collect());
    for n in 2..=cap {
        let mut next = Vec::new();
        for chain in &levels[n - 1] {
            let last = *chain.last().expect("nonempty chain");
            for g in 0..c.morphisms.len() {
                if c.source[g] == c.target[last] {
                    let mut s = chain.clone();
                    s.push(g);
                    next.push(s);
                }
            }
        }
        levels.push(next);
    }
    let name = |seq: &[usize]| -> String {
        let parts: Vec<&str> = seq.iter().map(|&f| c.morphisms[f].as_str()).collect();
        format!("[{}]", parts.join(";"))
    };
    let face = |n: usize, seq: &[usize], i: usize| -> Vec<usize> {
        if n == 1 {
            return vec![if i == 0 { c.target[seq[0]] } else { c.source[seq[0]] }];
        }
        let mut d = seq.to_vec();
        if i == 0 {
            d.remove(0);
        } else if i == n {
            d.pop();
        } else {
            let composite = c.compose[seq[i]][seq[i - 1]].expect("composable");
            d.splice(i - 1..=i, [composite]);
        }
        d
    };
    let degeneracy = |n: usize, seq: &[usize], i: usize| -> Vec<usize> {
        if n == 0 {
            return vec![c.identity[seq[0]]];
        }
        let object = if i < seq.len() {
            c.source[seq[i]]
        } else {
            c.target[seq[i - 1]]
        };
        let mut s = seq.to_vec();
        s.insert(i, c.identity[object]);
        s
    };
    let mut tables = chain_tables(&levels, name, face, degeneracy)?;
    for (o, obj_name) in c.objects.iter().enumerate() {
        tables.names[0][o] = format!("({obj_name})");
    }
    let space = TruncatedSSet::new_unchecked(tables)?;
    let bound_verified = declared_bound.map(|b| {
        b < cap && space.nondegenerate_flags(b + 1).iter().all(|&nd| !nd)
    });
    let space = match (declared_bound, bound_verified) {
        (Some(b), Some(true)) => space.with_provenance(Provenance::Nerve { chain_bound: b }),
        _ => space,
    };
    Ok(CategoryNerve {
        space,
        bound_verified,
    })
}

/// Checks that `map` is a levelwise bijection; used for renaming comparisons.
pub fn is_isomorphism(map: &SimplicialMap) -> bool {
    (0..=map.source().cap()).all(|n| {
        let mut seen = vec![false; map.target().level_len(n)];
        map.source().level_len(n) == map.target().level_len(n)
            && map
                .component(n)
                .iter()
                .all(|&y| !std::mem::replace(&mut seen[y], true))
    })
}
