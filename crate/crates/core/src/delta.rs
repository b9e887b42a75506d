//! The simplex category: monotone maps between finite ordinals, the
//! active/inert factorization system, epi-mono factorization, principal
//! edges and reduced covers.
//!
//! A map `[m] → [n]` is stored as its value sequence. Composition is written
//! `g.compose(&f)` for `g ∘ f` (apply `f` first).

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeltaError {
    #[error("a monotone map needs at least one value")]
    Empty,
    #[error("value {value} at position {position} exceeds target arity {target}")]
    OutOfRange {
        position: usize,
        value: usize,
        target: usize,
    },
    #[error("values decrease at position {position}")]
    NotMonotone { position: usize },
    #[error("cannot compose: inner map lands in [{inner_target}], outer map starts at [{outer_source}]")]
    NotComposable {
        inner_target: usize,
        outer_source: usize,
    },
    #[error("principal edge index {index} out of range 1..={arity}")]
    PrincipalEdgeIndex { index: usize, arity: usize },
    #[error("generator index {index} out of range for [{arity}]")]
    GeneratorIndex { index: usize, arity: usize },
    #[error("map {0} is not active")]
    NotActive(MonotoneMap),
    #[error("map {0} is not inert")]
    NotInert(MonotoneMap),
    #[error("maps {0} and {1} do not share a source")]
    SourceMismatch(MonotoneMap, MonotoneMap),
    #[error("invalid reduced cover: {0}")]
    InvalidCover(String),
}

/// Classification of a monotone map against the active/inert system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Active,
    Inert,
    Both,
    Neither,
}

/// An arrow `[m] → [n]` of the simplex category.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    target: usize,
    values: Vec<usize>,
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "):[{}]→[{}]", self.source(), self.target)
    }
}

impl MonotoneMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self, DeltaError> {
        if values.is_empty() {
            return Err(DeltaError::Empty);
        }
        for (position, &value) in values.iter().enumerate() {
            if value > target {
                return Err(DeltaError::OutOfRange {
                    position,
                    value,
                    target,
                });
            }
            if position > 0 && values[position - 1] > value {
                return Err(DeltaError::NotMonotone { position });
            }
        }
        Ok(Self { target, values })
    }

    fn from_parts(target: usize, values: Vec<usize>) -> Self {
        debug_assert!(Self::new(target, values.clone()).is_ok());
        Self { target, values }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_parts(n, (0..=n).collect())
    }

    /// The coface `d^i : [n-1] → [n]` skipping the value `i`.
    pub fn coface(n: usize, i: usize) -> Result<Self, DeltaError> {
        if n == 0 || i > n {
            return Err(DeltaError::GeneratorIndex { index: i, arity: n });
        }
        Ok(Self::from_parts(
            n,
            (0..n).map(|j| if j < i { j } else { j + 1 }).collect(),
        ))
    }

    /// The codegeneracy `s^i : [n+1] → [n]` hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Result<Self, DeltaError> {
        if i > n {
            return Err(DeltaError::GeneratorIndex { index: i, arity: n });
        }
        Ok(Self::from_parts(
            n,
            (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect(),
        ))
    }

    /// The vertex inclusion `[0] → [n]` picking `j`.
    pub fn vertex(n: usize, j: usize) -> Result<Self, DeltaError> {
        Self::new(n, vec![j])
    }

    /// The unique active map `[1] → [n]`.
    pub fn long_edge(n: usize) -> Self {
        Self::from_parts(n, vec![0, n])
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonotoneMap) -> Result<MonotoneMap, DeltaError> {
        if inner.target != self.source() {
            return Err(DeltaError::NotComposable {
                inner_target: inner.target,
                outer_source: self.source(),
            });
        }
        Ok(Self::from_parts(
            self.target,
            inner.values.iter().map(|&v| self.values[v]).collect(),
        ))
    }

    pub fn is_active(&self) -> bool {
        self.values[0] == 0 && self.values[self.source()] == self.target
    }

    pub fn is_inert(&self) -> bool {
        self.values.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[1] > w[0])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && self.values[self.source()] == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.source() && self.is_inert()
    }

    pub fn classify(&self) -> MapKind {
        match (self.is_active(), self.is_inert()) {
            (true, true) => MapKind::Both,
            (true, false) => MapKind::Active,
            (false, true) => MapKind::Inert,
            (false, false) => MapKind::Neither,
        }
    }

    /// The unique factorization `self = inert ∘ active`.
    pub fn factor_active_inert(&self) -> ActiveInertFactorization {
        let offset = self.values[0];
        let span = self.values[self.source()] - offset;
        ActiveInertFactorization {
            active: Self::from_parts(span, self.values.iter().map(|v| v - offset).collect()),
            inert: Self::from_parts(self.target, (offset..=offset + span).collect()),
        }
    }

    /// The factorization `self = injection ∘ surjection` through the image.
    pub fn epi_mono_factor(&self) -> (MonotoneMap, MonotoneMap) {
        let mut image = self.values.clone();
        image.dedup();
        let mut position = 0;
        let surjection = self
            .values
            .iter()
            .map(|v| {
                while image[position] != *v {
                    position += 1;
                }
                position
            })
            .collect();
        let middle = image.len() - 1;
        (
            Self::from_parts(middle, surjection),
            Self::from_parts(self.target, image),
        )
    }

    /// Values of `[n]` not in the image, ascending.
    pub fn missing_values(&self) -> Vec<usize> {
        (0..=self.target)
            .filter(|v| self.values.binary_search(v).is_err())
            .collect()
    }

    /// Positions `j` with `values[j] == values[j + 1]`, ascending.
    pub fn repeated_positions(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == w[1])
            .map(|(j, _)| j)
            .collect()
    }

    /// The join `self ∨ other` of two active maps: `[m + m'] → [n + n']`,
    /// running `self` on the first block and `other` on the second.
    pub fn join(&self, other: &MonotoneMap) -> Result<MonotoneMap, DeltaError> {
        for map in [self, other] {
            if !map.is_active() {
                return Err(DeltaError::NotActive(map.clone()));
            }
        }
        let mut values = self.values.clone();
        values.extend(other.values[1..].iter().map(|v| v + self.target));
        Ok(Self::from_parts(self.target + other.target, values))
    }

    /// Every monotone map `[m] → [n]`, in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<MonotoneMap> {
        fn extend(
            m: usize,
            n: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<MonotoneMap>,
        ) {
            if prefix.len() == m + 1 {
                out.push(MonotoneMap::from_parts(n, prefix.clone()));
                return;
            }
            let start = prefix.last().copied().unwrap_or(0);
            for v in start..=n {
                prefix.push(v);
                extend(m, n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(m, n, &mut Vec::with_capacity(m + 1), &mut out);
        out
    }

    pub fn all_active(m: usize, n: usize) -> Vec<MonotoneMap> {
        Self::all(m, n).into_iter().filter(Self::is_active).collect()
    }

    /// Active injections `[k] → [n]`; for `k = 0` only the identity of `[0]`.
    pub fn active_injections(k: usize, n: usize) -> Vec<MonotoneMap> {
        if k > n || (k == 0 && n > 0) {
            return Vec::new();
        }
        Self::all(k, n)
            .into_iter()
            .filter(|f| f.is_active() && f.is_injective())
            .collect()
    }

    /// Inert maps `[k] → [n]`, ordered by offset.
    pub fn inert_maps(k: usize, n: usize) -> Vec<MonotoneMap> {
        if k > n {
            return Vec::new();
        }
        (0..=n - k)
            .map(|offset| Self::from_parts(n, (offset..=offset + k).collect()))
            .collect()
    }
}

/// `factored = inert ∘ active`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveInertFactorization {
    pub active: MonotoneMap,
    pub inert: MonotoneMap,
}

/// The inert map `ρ_i : [1] → [k]` picking the principal edge `(i-1, i)`.
pub fn principal_edge(i: usize, k: usize) -> Result<MonotoneMap, DeltaError> {
    if i == 0 || i > k {
        return Err(DeltaError::PrincipalEdgeIndex { index: i, arity: k });
    }
    MonotoneMap::new(k, vec![i - 1, i])
}

/// A reduced cover of `[k]` by inert charts, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedCover {
    arity: usize,
    charts: Vec<MonotoneMap>,
}

impl ReducedCover {
    pub fn new(arity: usize, charts: Vec<MonotoneMap>) -> Result<Self, DeltaError> {
        let invalid = |msg: String| Err(DeltaError::InvalidCover(msg));
        if arity == 0 {
            return invalid("[0] has no reduced cover".into());
        }
        if charts.is_empty() {
            return invalid("no charts".into());
        }
        let mut next_start = 0;
        for (i, chart) in charts.iter().enumerate() {
            if chart.target() != arity {
                return invalid(format!("chart {i} does not land in [{arity}]"));
            }
            if !chart.is_inert() {
                return invalid(format!("chart {i} ({chart}) is not inert"));
            }
            if chart.source() == 0 {
                return invalid(format!("chart {i} has arity 0"));
            }
            if chart.at(0) != next_start {
                return invalid(format!(
                    "chart {i} starts at {} but the previous chart ends at {next_start}",
                    chart.at(0)
                ));
            }
            next_start = chart.at(chart.source());
        }
        if next_start != arity {
            return invalid(format!("charts stop at {next_start}, short of {arity}"));
        }
        Ok(Self { arity, charts })
    }

    /// The cover by chart arities `k_1, …, k_m` laid end to end.
    pub fn from_arities(arity: usize, parts: &[usize]) -> Result<Self, DeltaError> {
        let mut start = 0;
        let mut charts = Vec::with_capacity(parts.len());
        for &part in parts {
            if start + part > arity {
                return Err(DeltaError::InvalidCover(format!(
                    "arities {parts:?} exceed [{arity}]"
                )));
            }
            charts.push(MonotoneMap::new(arity, (start..=start + part).collect())?);
            start += part;
        }
        Self::new(arity, charts)
    }

    /// The cover `(ρ_1, …, ρ_k)` by principal edges.
    pub fn principal(arity: usize) -> Result<Self, DeltaError> {
        Self::from_arities(arity, &vec![1; arity])
    }

    /// All reduced covers of `[k]`, one per composition of `k`.
    pub fn all(arity: usize) -> Vec<ReducedCover> {
        fn compositions(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(prefix.clone());
                return;
            }
            for part in 1..=rest {
                prefix.push(part);
                compositions(rest - part, prefix, out);
                prefix.pop();
            }
        }
        if arity == 0 {
            return Vec::new();
        }
        let mut parts = Vec::new();
        compositions(arity, &mut Vec::new(), &mut parts);
        parts
            .iter()
            .map(|p| Self::from_arities(arity, p).expect("compositions give valid covers"))
            .collect()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn charts(&self) -> &[MonotoneMap] {
        &self.charts
    }

    pub fn chart_arities(&self) -> Vec<usize> {
        self.charts.iter().map(MonotoneMap::source).collect()
    }

    /// The active map `β : [m] → [k]` with `β(i) = τ_{i+1}(0)`.
    pub fn beta(&self) -> MonotoneMap {
        let mut values: Vec<usize> = self.charts.iter().map(|c| c.at(0)).collect();
        values.push(self.arity);
        MonotoneMap::from_parts(self.arity, values)
    }
}

/// Factor `α ∘ τ_i` for each chart of `cover`, giving the active pieces
/// `α_i : [k_i] → [n_i]` and the inert charts `γ_i : [n_i] → [n]`.
pub fn cover_chart_factorization(
    alpha: &MonotoneMap,
    cover: &ReducedCover,
) -> Result<Vec<ActiveInertFactorization>, DeltaError> {
    if !alpha.is_active() {
        return Err(DeltaError::NotActive(alpha.clone()));
    }
    if cover.arity() != alpha.source() {
        return Err(DeltaError::InvalidCover(format!(
            "cover of [{}] does not match the source [{}] of {alpha}",
            cover.arity(),
            alpha.source()
        )));
    }
    cover
        .charts()
        .iter()
        .map(|chart| Ok(alpha.compose(chart)?.factor_active_inert()))
        .collect()
}

/// Pushout of an active map and an inert map out of a common `[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveInertPushout {
    pub apex: usize,
    /// Active leg out of the inert map's target.
    pub active_leg: MonotoneMap,
    /// Inert leg out of the active map's target.
    pub inert_leg: MonotoneMap,
}

/// Pushout of `[n] ←active− [k] −inert→ [l]`; the inert map's offset is
/// carried across the active map's endpoint displacement.
pub fn pushout_active_inert(
    active: &MonotoneMap,
    inert: &MonotoneMap,
) -> Result<ActiveInertPushout, DeltaError> {
    if !active.is_active() {
        return Err(DeltaError::NotActive(active.clone()));
    }
    if !inert.is_inert() {
        return Err(DeltaError::NotInert(inert.clone()));
    }
    if active.source() != inert.source() {
        return Err(DeltaError::SourceMismatch(active.clone(), inert.clone()));
    }
    let k = active.source();
    let n = active.target();
    let l = inert.target();
    let offset = inert.at(0);
    let apex = l - k + n;
    let inert_leg = MonotoneMap::from_parts(apex, (offset..=offset + n).collect());
    let active_leg = MonotoneMap::from_parts(
        apex,
        (0..=l)
            .map(|i| {
                if i <= offset {
                    i
                } else if i <= offset + k {
                    offset + active.at(i - offset)
                } else {
                    i - k + n
                }
            })
            .collect(),
    );
    Ok(ActiveInertPushout {
        apex,
        active_leg,
        inert_leg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(target: usize, values: &[usize]) -> MonotoneMap {
        MonotoneMap::new(target, values.to_vec()).unwrap()
    }

    #[test]
    fn rejects_malformed_maps() {
        assert_eq!(MonotoneMap::new(2, vec![]), Err(DeltaError::Empty));
        assert!(matches!(
            MonotoneMap::new(1, vec![0, 2]),
            Err(DeltaError::OutOfRange { position: 1, .. })
        ));
        assert!(matches!(
            MonotoneMap::new(2, vec![1, 0]),
            Err(DeltaError::NotMonotone { position: 1 })
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(MonotoneMap::identity(2).classify(), MapKind::Both);
        assert_eq!(map(2, &[0, 2]).classify(), MapKind::Active);
        assert_eq!(map(2, &[1, 2]).classify(), MapKind::Inert);
        assert_eq!(map(3, &[1, 3]).classify(), MapKind::Neither);
        assert_eq!(MonotoneMap::coface(2, 1).unwrap(), map(2, &[0, 2]));
        assert_eq!(MonotoneMap::coface(2, 0).unwrap(), map(2, &[1, 2]));
    }

    #[test]
    fn factor_examples() {
        let f = map(2, &[1, 2]).factor_active_inert();
        assert_eq!(f.active, MonotoneMap::identity(1));
        assert_eq!(f.inert, MonotoneMap::coface(2, 0).unwrap());

        let f = map(2, &[0, 2]).factor_active_inert();
        assert_eq!(f.active, MonotoneMap::coface(2, 1).unwrap());
        assert_eq!(f.inert, MonotoneMap::identity(2));

        let f = map(2, &[1, 1]).factor_active_inert();
        assert_eq!(f.active, MonotoneMap::codegeneracy(0, 0).unwrap());
        assert_eq!(f.inert, MonotoneMap::vertex(2, 1).unwrap());
    }

    #[test]
    fn principal_edge_examples() {
        assert_eq!(principal_edge(1, 1).unwrap(), MonotoneMap::identity(1));
        assert_eq!(principal_edge(1, 2).unwrap(), map(2, &[0, 1]));
        assert_eq!(principal_edge(3, 3).unwrap(), map(3, &[2, 3]));
        assert!(principal_edge(0, 2).is_err());
        assert!(principal_edge(3, 2).is_err());
    }

    #[test]
    fn epi_mono_examples() {
        let id = MonotoneMap::identity(3);
        assert_eq!(id.epi_mono_factor(), (id.clone(), id));
        let s0 = MonotoneMap::codegeneracy(0, 0).unwrap();
        assert_eq!(s0.epi_mono_factor(), (s0.clone(), MonotoneMap::identity(0)));
        let (surj, inj) = map(2, &[1, 1]).epi_mono_factor();
        assert_eq!(surj, s0);
        assert_eq!(inj, MonotoneMap::vertex(2, 1).unwrap());
    }

    #[test]
    fn epi_mono_exhaustive() {
        for m in 0..=5 {
            for n in 0..=5 {
                for f in MonotoneMap::all(m, n) {
                    let (surj, inj) = f.epi_mono_factor();
                    assert!(surj.is_surjective(), "{f}");
                    assert!(inj.is_injective(), "{f}");
                    assert!(surj.target() <= m.min(n));
                    assert_eq!(inj.compose(&surj).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn cover_chart_examples() {
        let id2 = MonotoneMap::identity(2);
        let parts = cover_chart_factorization(&id2, &ReducedCover::principal(2).unwrap()).unwrap();
        assert_eq!(parts.len(), 2);
        for (i, part) in parts.iter().enumerate() {
            assert_eq!(part.active, MonotoneMap::identity(1));
            assert_eq!(part.inert, principal_edge(i + 1, 2).unwrap());
        }

        let d1 = map(2, &[0, 2]);
        let parts = cover_chart_factorization(&d1, &ReducedCover::principal(1).unwrap()).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].active, d1);
        assert_eq!(parts[0].inert, MonotoneMap::identity(2));

        let alpha = map(3, &[0, 1, 3]);
        let parts = cover_chart_factorization(&alpha, &ReducedCover::principal(2).unwrap()).unwrap();
        assert_eq!(parts[0].active, MonotoneMap::identity(1));
        assert_eq!(parts[0].inert, map(3, &[0, 1]));
        assert_eq!(parts[1].active, MonotoneMap::coface(2, 1).unwrap());
        assert_eq!(parts[1].inert, map(3, &[1, 2, 3]));

        assert!(matches!(
            cover_chart_factorization(&map(3, &[1, 3]), &ReducedCover::principal(1).unwrap()),
            Err(DeltaError::NotActive(_))
        ));
    }

    #[test]
    fn reduced_cover_validation() {
        assert!(ReducedCover::new(2, vec![map(2, &[0, 1]), map(2, &[1, 2])]).is_ok());
        // edge (0,1) hit twice
        assert!(ReducedCover::new(2, vec![map(2, &[0, 1]), map(2, &[0, 1, 2])]).is_err());
        // a copy of [0]
        assert!(ReducedCover::new(2, vec![map(2, &[0, 1, 2]), map(2, &[2])]).is_err());
        // not surjective
        assert!(ReducedCover::new(2, vec![map(2, &[0, 1])]).is_err());
        assert!(ReducedCover::new(0, vec![]).is_err());
        // 2^(k-1) compositions
        for k in 1..=6 {
            assert_eq!(ReducedCover::all(k).len(), 1 << (k - 1));
        }
        let cover = ReducedCover::from_arities(5, &[2, 1, 2]).unwrap();
        assert_eq!(cover.beta(), map(5, &[0, 2, 3, 5]));
        assert!(cover.beta().is_active());
    }

    #[test]
    fn active_inert_factorization_is_a_section_of_composition() {
        for m in 0..=6 {
            for n in 0..=6 {
                for f in MonotoneMap::all(m, n) {
                    let parts = f.factor_active_inert();
                    assert!(parts.active.is_active(), "{f}");
                    assert!(parts.inert.is_inert(), "{f}");
                    assert_eq!(parts.inert.compose(&parts.active).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn active_inert_factorization_is_unique() {
        for m in 0..=4 {
            for n in 0..=4 {
                for f in MonotoneMap::all(m, n) {
                    let mut count = 0;
                    for mid in 0..=n {
                        for a in MonotoneMap::all_active(m, mid) {
                            for i in MonotoneMap::inert_maps(mid, n) {
                                if i.compose(&a).unwrap() == f {
                                    count += 1;
                                }
                            }
                        }
                    }
                    assert_eq!(count, 1, "{f}");
                }
            }
        }
    }

    #[test]
    fn active_inert_pushouts_are_pushouts() {
        for k in 0..=4 {
            for n in k..=4 {
                for a in MonotoneMap::all_active(k, n) {
                    for l in k..=4 {
                        for b in MonotoneMap::inert_maps(k, l) {
                            let po = pushout_active_inert(&a, &b).unwrap();
                            assert!(po.active_leg.is_active());
                            assert!(po.inert_leg.is_inert());
                            assert_eq!(
                                po.active_leg.compose(&b).unwrap(),
                                po.inert_leg.compose(&a).unwrap()
                            );
                            check_universal(&a, &b, &po);
                        }
                    }
                }
            }
        }
    }

    /// Every cocone into `[t]` factors through the apex in exactly one way.
    fn check_universal(a: &MonotoneMap, b: &MonotoneMap, po: &ActiveInertPushout) {
        use std::collections::HashMap;
        for t in 0..=3 {
            let mut hits: HashMap<(MonotoneMap, MonotoneMap), usize> = HashMap::new();
            for u in MonotoneMap::all(po.apex, t) {
                let g = u.compose(&po.active_leg).unwrap();
                let h = u.compose(&po.inert_leg).unwrap();
                *hits.entry((g, h)).or_default() += 1;
            }
            for g in MonotoneMap::all(b.target(), t) {
                for h in MonotoneMap::all(a.target(), t) {
                    if g.compose(b).unwrap() == h.compose(a).unwrap() {
                        let count = hits.get(&(g.clone(), h.clone())).copied().unwrap_or(0);
                        assert_eq!(count, 1, "cocone {g} {h} over {a}, {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn principal_cover_reproduces_join_decomposition() {
        for k in 1..=5 {
            for n in 0..=6 {
                for alpha in MonotoneMap::all_active(k, n) {
                    let parts =
                        cover_chart_factorization(&alpha, &ReducedCover::principal(k).unwrap())
                            .unwrap();
                    let joined = parts
                        .iter()
                        .map(|p| p.active.clone())
                        .reduce(|acc, next| acc.join(&next).unwrap())
                        .unwrap();
                    assert_eq!(joined, alpha);
                    // the γ_i are jointly surjective, and a reduced cover when α is injective
                    let mut covered = vec![false; n + 1];
                    for p in &parts {
                        for &v in p.inert.values() {
                            covered[v] = true;
                        }
                    }
                    assert!(covered.iter().all(|&c| c));
                    if alpha.is_injective() {
                        let gammas = parts.iter().map(|p| p.inert.clone()).collect();
                        assert!(ReducedCover::new(n, gammas).is_ok(), "{alpha}");
                    }
                }
            }
        }
    }

    #[test]
    fn general_cover_charts_join_to_alpha() {
        for k in 1..=4 {
            for n in k..=5 {
                for alpha in MonotoneMap::active_injections(k, n) {
                    for cover in ReducedCover::all(k) {
                        let parts = cover_chart_factorization(&alpha, &cover).unwrap();
                        let joined = parts
                            .iter()
                            .map(|p| p.active.clone())
                            .reduce(|acc, next| acc.join(&next).unwrap())
                            .unwrap();
                        assert_eq!(joined, alpha);
                        let gammas = parts.iter().map(|p| p.inert.clone()).collect();
                        assert!(ReducedCover::new(n, gammas).is_ok());
                    }
                }
            }
        }
    }
}
