//! Decomposition-space conditions, completeness, map properties, and the
//! full hull, convex hull and complement constructions.
//!
//! Every verdict is a finite pullback test over all instances that fit
//! below the truncation cap, so a pass means "up to cap N".

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use thiserror::Error;

use crate::delta::{cover_chart_factorization, principal_edge, pushout_active_inert, MonotoneMap, ReducedCover};
use crate::pullback::{ProductSquare, PullbackVerdict, SquareError};
use crate::sset::{SSetError, SimplicialMap, SubSSet, TruncatedSSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("cap {cap} is below the required {needed}")]
    CapTooSmall { cap: usize, needed: usize },
    #[error("input is not a decomposition space: {0}")]
    NotDecomposition(String),
    #[error("input is not complete: s_0 identifies `{0}` and `{1}`")]
    NotComplete(String, String),
    #[error("`{0}` is not a vertex")]
    UnknownVertex(String),
    #[error("one-step convex hull grew on a second pass (new vertex `{0}`)")]
    Stabilization(String),
    #[error("convex hull fails the convexity check: {0}")]
    NotConvex(String),
    #[error("complement fails {0}")]
    Complement(String),
    #[error("sub-object belongs to a different ambient simplicial set")]
    ForeignSubObject,
    #[error("last vertex of `{0}` is not in K")]
    LastVertexOutside(String),
    #[error("vertices of `{cell}` in K are not a final segment ({positions:?}); K is not convex")]
    NonUniqueIndex { cell: String, positions: Vec<usize> },
    #[error(transparent)]
    Square(#[from] SquareError),
    #[error(transparent)]
    SSet(#[from] SSetError),
}

/// The four equivalent formulations of the decomposition-space axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// Generating active-inert squares with outer face maps.
    ActiveInert = 1,
    /// Inert maps against active injections.
    InertActiveInjection = 2,
    /// Special reduced-cover squares.
    SpecialCover = 3,
    /// General reduced-cover squares.
    GeneralCover = 4,
}

impl Condition {
    pub const ALL: [Condition; 4] = [
        Condition::ActiveInert,
        Condition::InertActiveInjection,
        Condition::SpecialCover,
        Condition::GeneralCover,
    ];

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.get((n as usize).checked_sub(1)?).copied()
    }

    pub fn number(self) -> u8 {
        self as u8
    }
}

/// A square in one simplicial set built from simplicial operators:
///
/// ```text
///   X_p ──right──→ X_r
///    │              │ right_to_base_i
///  left_i           ↓
///    ↓  left_to_base_i
///  ∏ X_{n_i} ────→ ∏ X_{b_i}
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSpec {
    pub label: String,
    pub corner: usize,
    pub right: MonotoneMap,
    pub left: Vec<MonotoneMap>,
    pub right_to_base: Vec<MonotoneMap>,
    pub left_to_base: Vec<MonotoneMap>,
}

impl fmt::Display for SquareSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |maps: &[MonotoneMap]| {
            maps.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
        };
        write!(
            f,
            "{} [X_{} → X_{} via {}; left {}; base {} / {}]",
            self.label,
            self.corner,
            self.right.source(),
            self.right,
            list(&self.left),
            list(&self.right_to_base),
            list(&self.left_to_base)
        )
    }
}

/// Memoized operator tables for one simplicial set.
pub(crate) struct Acts<'a> {
    x: &'a TruncatedSSet,
    cache: RefCell<HashMap<MonotoneMap, Rc<Vec<usize>>>>,
}

impl<'a> Acts<'a> {
    pub(crate) fn new(x: &'a TruncatedSSet) -> Self {
        Self {
            x,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub(crate) fn get(&self, phi: &MonotoneMap) -> Result<Rc<Vec<usize>>, SSetError> {
        if let Some(t) = self.cache.borrow().get(phi) {
            return Ok(t.clone());
        }
        let table = Rc::new(self.x.act(phi)?);
        self.cache.borrow_mut().insert(phi.clone(), table.clone());
        Ok(table)
    }
}

fn flatten(tables: &[Rc<Vec<usize>>], len: usize) -> Vec<usize> {
    let k = tables.len();
    let mut out = vec![0; len * k];
    for (i, t) in tables.iter().enumerate() {
        for (cell, &v) in t.iter().enumerate() {
            out[cell * k + i] = v;
        }
    }
    out
}

impl SquareSpec {
    /// Re-runs the pullback test on `x`.
    pub fn evaluate(&self, x: &TruncatedSSet) -> Result<PullbackVerdict, AxiomError> {
        self.evaluate_with(&Acts::new(x))
    }

    pub(crate) fn evaluate_with(&self, acts: &Acts<'_>) -> Result<PullbackVerdict, AxiomError> {
        let x = acts.x;
        let left: Vec<_> = self.left.iter().map(|m| acts.get(m)).collect::<Result<_, _>>()?;
        let rtb: Vec<_> = self.right_to_base.iter().map(|m| acts.get(m)).collect::<Result<_, _>>()?;
        let ltb: Vec<_> = self.left_to_base.iter().map(|m| acts.get(m)).collect::<Result<_, _>>()?;
        let square = ProductSquare {
            corner_len: x.level_len(self.corner),
            right_len: x.level_len(self.right.source()),
            corner_to_right: acts.get(&self.right)?.to_vec(),
            corner_to_factors: flatten(&left, x.level_len(self.corner)),
            right_to_base: flatten(&rtb, x.level_len(self.right.source())),
            factor_maps: ltb.iter().map(|t| t.as_slice()).collect(),
            filter: None,
        };
        Ok(square.check()?)
    }

    /// Human-readable rendering of a failing verdict.
    pub fn describe(&self, x: &TruncatedSSet, verdict: &PullbackVerdict) -> String {
        match verdict {
            PullbackVerdict::Pullback => "pullback".to_string(),
            PullbackVerdict::Collision { first, second } => format!(
                "cells `{}` and `{}` of X_{} have the same image",
                x.name(self.corner, *first),
                x.name(self.corner, *second),
                self.corner
            ),
            PullbackVerdict::MissingPreimage { right, factors } => {
                let parts: Vec<String> = factors
                    .iter()
                    .zip(&self.left)
                    .map(|(&c, m)| format!("`{}`", x.name(m.source(), c)))
                    .collect();
                format!(
                    "no cell of X_{} over (`{}`; {})",
                    self.corner,
                    x.name(self.right.source(), *right),
                    parts.join(", ")
                )
            }
        }
    }
}

/// A failing square with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFailure {
    pub square: SquareSpec,
    pub verdict: PullbackVerdict,
    pub witness: String,
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub check: String,
    pub cap: usize,
    pub passed: bool,
    pub squares_checked: usize,
    pub failure: Option<SquareFailure>,
    /// Extra failure detail for checks that are not square families.
    pub note: Option<String>,
}

impl AxiomReport {
    pub fn horizon(&self) -> String {
        format!("up to cap {}", self.cap)
    }
}

fn face(n: usize, i: usize) -> MonotoneMap {
    MonotoneMap::coface(n, i).expect("coface index in range")
}

/// All squares of one condition that fit below the cap, in a fixed order.
pub fn condition_squares(cap: usize, condition: Condition) -> Vec<SquareSpec> {
    let mut out = Vec::new();
    match condition {
        Condition::ActiveInert => {
            for n in 2..cap {
                for i in 1..n {
                    out.push(SquareSpec {
                        label: format!("(d_{}, d_⊥) at n={n}, i={i}", 1 + i),
                        corner: n + 1,
                        right: face(n + 1, 0),
                        left: vec![face(n + 1, 1 + i)],
                        right_to_base: vec![face(n, i)],
                        left_to_base: vec![face(n, 0)],
                    });
                    out.push(SquareSpec {
                        label: format!("(d_{i}, d_⊤) at n={n}, i={i}"),
                        corner: n + 1,
                        right: face(n + 1, n + 1),
                        left: vec![face(n + 1, i)],
                        right_to_base: vec![face(n, i)],
                        left_to_base: vec![face(n, n)],
                    });
                }
            }
        }
        Condition::InertActiveInjection => {
            for n in 0..=cap {
                for k in 0..=n {
                    for alpha in MonotoneMap::active_injections(k, n) {
                        for l in k..=cap {
                            if l - k + n > cap {
                                continue;
                            }
                            for b in MonotoneMap::inert_maps(k, l) {
                                let po = pushout_active_inert(&alpha, &b).expect("active and inert");
                                out.push(SquareSpec {
                                    label: format!("inert {b} against active {alpha}"),
                                    corner: po.apex,
                                    right: po.active_leg,
                                    left: vec![po.inert_leg],
                                    right_to_base: vec![b.clone()],
                                    left_to_base: vec![alpha.clone()],
                                });
                            }
                        }
                    }
                }
            }
        }
        Condition::SpecialCover | Condition::GeneralCover => {
            for n in 1..=cap {
                for k in 1..=n {
                    for alpha in MonotoneMap::active_injections(k, n) {
                        let covers = if condition == Condition::SpecialCover {
                            vec![ReducedCover::principal(k).expect("k ≥ 1")]
                        } else {
                            ReducedCover::all(k)
                        };
                        for cover in covers {
                            let pieces = cover_chart_factorization(&alpha, &cover).expect("active");
                            out.push(SquareSpec {
                                label: format!(
                                    "{} cover {:?} under {alpha}",
                                    if condition == Condition::SpecialCover { "special" } else { "general" },
                                    cover.chart_arities()
                                ),
                                corner: n,
                                right: alpha.clone(),
                                left: pieces.iter().map(|p| p.inert.clone()).collect(),
                                right_to_base: cover.charts().to_vec(),
                                left_to_base: pieces.iter().map(|p| p.active.clone()).collect(),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

fn run_squares(
    x: &TruncatedSSet,
    check: String,
    squares: Vec<SquareSpec>,
) -> Result<AxiomReport, AxiomError> {
    let acts = Acts::new(x);
    let mut checked = 0;
    for square in squares {
        checked += 1;
        let verdict = square.evaluate_with(&acts)?;
        if !verdict.is_pullback() {
            let witness = square.describe(x, &verdict);
            return Ok(AxiomReport {
                check,
                cap: x.cap(),
                passed: false,
                squares_checked: checked,
                failure: Some(SquareFailure {
                    square,
                    verdict,
                    witness,
                }),
                note: None,
            });
        }
    }
    Ok(AxiomReport {
        check,
        cap: x.cap(),
        passed: true,
        squares_checked: checked,
        failure: None,
        note: None,
    })
}

/// Checks one formulation of the decomposition-space axiom exhaustively
/// below the cap, stopping at the first failing square.
pub fn check_decomposition(x: &TruncatedSSet, condition: Condition) -> Result<AxiomReport, AxiomError> {
    if x.cap() < 2 {
        return Err(AxiomError::CapTooSmall { cap: x.cap(), needed: 2 });
    }
    let slot = x.condition_report(condition.number() as usize);
    if let Some(report) = slot.get() {
        return Ok(report.clone());
    }
    let report = run_squares(
        x,
        format!("decomposition condition {}", condition.number()),
        condition_squares(x.cap(), condition),
    )?;
    Ok(slot.get_or_init(|| report).clone())
}

/// All four conditions pass.
pub fn is_decomposition_space(x: &TruncatedSSet) -> Result<bool, AxiomError> {
    for c in Condition::ALL {
        if !check_decomposition(x, c)?.passed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `s_0 : X_0 → X_1` is injective.
pub fn is_complete(x: &TruncatedSSet) -> Result<AxiomReport, AxiomError> {
    if x.cap() < 1 {
        return Err(AxiomError::CapTooSmall { cap: x.cap(), needed: 1 });
    }
    let s0 = x.degeneracy_table(0, 0);
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut note = None;
    for (v, &e) in s0.iter().enumerate() {
        if let Some(&u) = seen.get(&e) {
            note = Some(format!(
                "s_0 sends `{}` and `{}` to `{}`",
                x.name(0, u),
                x.name(0, v),
                x.name(1, e)
            ));
            break;
        }
        seen.insert(e, v);
    }
    Ok(AxiomReport {
        check: "complete".to_string(),
        cap: x.cap(),
        passed: note.is_none(),
        squares_checked: 1,
        failure: None,
        note,
    })
}

/// The Segal condition `X_n ≅ X_1 ×_{X_0} ⋯ ×_{X_0} X_1` for `2 ≤ n ≤ cap`.
/// For simplicial sets this is the characterization of nerves of categories.
pub fn is_segal(x: &TruncatedSSet) -> Result<AxiomReport, AxiomError> {
    let acts = Acts::new(x);
    let composable = |t: &[usize]| t.windows(2).all(|w| x.face(1, 0, w[0]) == x.face(1, 1, w[1]));
    let to_point = vec![0usize; x.level_len(1)];
    let mut checked = 0;
    for n in 2..=x.cap() {
        checked += 1;
        let edges: Vec<_> = (1..=n)
            .map(|i| acts.get(&principal_edge(i, n).expect("index in range")))
            .collect::<Result<_, _>>()?;
        let square = ProductSquare {
            corner_len: x.level_len(n),
            right_len: 1,
            corner_to_right: vec![0; x.level_len(n)],
            corner_to_factors: flatten(&edges, x.level_len(n)),
            right_to_base: vec![0; n],
            factor_maps: vec![to_point.as_slice(); n],
            filter: Some(&composable),
        };
        let verdict = square.check()?;
        if !verdict.is_pullback() {
            let note = match &verdict {
                PullbackVerdict::Collision { first, second } => format!(
                    "`{}` and `{}` share a spine",
                    x.name(n, *first),
                    x.name(n, *second)
                ),
                PullbackVerdict::MissingPreimage { factors, .. } => format!(
                    "no {n}-cell with spine ({})",
                    factors.iter().map(|&e| x.name(1, e)).collect::<Vec<_>>().join(", ")
                ),
                PullbackVerdict::Pullback => unreachable!(),
            };
            return Ok(AxiomReport {
                check: "segal".to_string(),
                cap: x.cap(),
                passed: false,
                squares_checked: checked,
                failure: None,
                note: Some(note),
            });
        }
    }
    Ok(AxiomReport {
        check: "segal".to_string(),
        cap: x.cap(),
        passed: true,
        squares_checked: checked,
        failure: None,
        note: None,
    })
}

/// The naturality square of a simplicial map along operators `legs`:
///
/// ```text
///   Y_p ──f──→ X_p
///    │          │
///  legs        legs
///    ↓          ↓
///  ∏ Y_{n_i} ─f─→ ∏ X_{n_i}
/// ```
///
/// optionally restricting `∏ Y_1` to composable strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSquare {
    pub label: String,
    pub corner: usize,
    pub legs: Vec<MonotoneMap>,
    pub composable_only: bool,
}

impl MapSquare {
    pub fn evaluate(&self, f: &SimplicialMap) -> Result<PullbackVerdict, AxiomError> {
        self.evaluate_with(f, &Acts::new(f.source()), &Acts::new(f.target()))
    }

    fn evaluate_with(
        &self,
        f: &SimplicialMap,
        ys: &Acts<'_>,
        xs: &Acts<'_>,
    ) -> Result<PullbackVerdict, AxiomError> {
        let y = f.source();
        let p = self.corner;
        let left: Vec<_> = self.legs.iter().map(|m| ys.get(m)).collect::<Result<_, _>>()?;
        let base: Vec<_> = self.legs.iter().map(|m| xs.get(m)).collect::<Result<_, _>>()?;
        let composable = |t: &[usize]| t.windows(2).all(|w| y.face(1, 0, w[0]) == y.face(1, 1, w[1]));
        let square = ProductSquare {
            corner_len: y.level_len(p),
            right_len: f.target().level_len(p),
            corner_to_right: f.component(p).to_vec(),
            corner_to_factors: flatten(&left, y.level_len(p)),
            right_to_base: flatten(&base, f.target().level_len(p)),
            factor_maps: self.legs.iter().map(|m| f.component(m.source())).collect(),
            filter: if self.composable_only { Some(&composable) } else { None },
        };
        Ok(square.check()?)
    }

    pub fn describe(&self, f: &SimplicialMap, verdict: &PullbackVerdict) -> String {
        let (y, x) = (f.source(), f.target());
        match verdict {
            PullbackVerdict::Pullback => "pullback".to_string(),
            PullbackVerdict::Collision { first, second } => format!(
                "`{}` and `{}` in Y_{} have the same image",
                y.name(self.corner, *first),
                y.name(self.corner, *second),
                self.corner
            ),
            PullbackVerdict::MissingPreimage { right, factors } => {
                let parts: Vec<String> = factors
                    .iter()
                    .zip(&self.legs)
                    .map(|(&c, m)| format!("`{}`", y.name(m.source(), c)))
                    .collect();
                format!(
                    "`{}` in X_{} with Y-data ({}) has no preimage",
                    x.name(self.corner, *right),
                    self.corner,
                    parts.join(", ")
                )
            }
        }
    }
}

/// One property of a map, with a witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Flag {
    fn pass() -> Self {
        Self { holds: true, witness: None }
    }

    fn fail(witness: String) -> Self {
        Self { holds: false, witness: Some(witness) }
    }

    fn and(a: &Flag, b: &Flag) -> Self {
        match (a.holds, b.holds) {
            (true, true) => Self::pass(),
            (false, _) => a.clone(),
            _ => b.clone(),
        }
    }
}

/// How culf, ikeo and semi-ikeo were decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Both sides are decomposition spaces: single-square criteria.
    Shortcut,
    /// Full definitions over every instance below the cap.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapClassification {
    pub route: Route,
    pub culf: Flag,
    pub fully_faithful: Flag,
    pub mono_on_objects: Flag,
    pub full_inclusion: Flag,
    pub conservative: Flag,
    pub relatively_segal: Flag,
    pub ikeo: Flag,
    pub semi_ikeo: Flag,
    pub convex: Flag,
}

impl MapClassification {
    /// `(name, flag)` pairs in a stable order.
    pub fn flags(&self) -> [(&'static str, &Flag); 9] {
        [
            ("culf", &self.culf),
            ("fully_faithful", &self.fully_faithful),
            ("mono_on_objects", &self.mono_on_objects),
            ("full_inclusion", &self.full_inclusion),
            ("conservative", &self.conservative),
            ("relatively_segal", &self.relatively_segal),
            ("ikeo", &self.ikeo),
            ("semi_ikeo", &self.semi_ikeo),
            ("convex", &self.convex),
        ]
    }
}

fn run_map_squares(
    f: &SimplicialMap,
    property: &str,
    squares: impl IntoIterator<Item = MapSquare>,
    ys: &Acts<'_>,
    xs: &Acts<'_>,
) -> Result<Flag, AxiomError> {
    for square in squares {
        let verdict = square.evaluate_with(f, ys, xs)?;
        if !verdict.is_pullback() {
            return Ok(Flag::fail(format!(
                "{property}: {} is not a pullback; {}",
                square.label,
                square.describe(f, &verdict)
            )));
        }
    }
    Ok(Flag::pass())
}

fn chart_legs(alpha: &MonotoneMap) -> Vec<MonotoneMap> {
    if alpha.source() == 0 {
        return Vec::new();
    }
    let cover = ReducedCover::principal(alpha.source()).expect("k ≥ 1");
    cover_chart_factorization(alpha, &cover)
        .expect("active")
        .into_iter()
        .map(|p| p.inert)
        .collect()
}

fn two_square() -> MapSquare {
    MapSquare {
        label: "(d_2, d_0) square".to_string(),
        corner: 2,
        legs: vec![principal_edge(1, 2).expect("ρ_1"), principal_edge(2, 2).expect("ρ_2")],
        composable_only: false,
    }
}

/// Classifies a simplicial map. The shortcut criteria are used only when
/// both sides pass every decomposition condition.
pub fn classify_map(f: &SimplicialMap) -> Result<MapClassification, AxiomError> {
    let (y, x) = (f.source(), f.target());
    let cap = x.cap();
    let both_decomposition =
        cap >= 2 && is_decomposition_space(y)? && is_decomposition_space(x)?;
    let route = if both_decomposition { Route::Shortcut } else { Route::Full };
    let (ys, xs) = (Acts::new(y), Acts::new(x));

    let culf = if both_decomposition {
        let square = MapSquare {
            label: "d_1 square".to_string(),
            corner: 2,
            legs: vec![face(2, 1)],
            composable_only: false,
        };
        run_map_squares(f, "culf", [square], &ys, &xs)?
    } else {
        let squares = (0..=cap).flat_map(|n| {
            (0..=n).flat_map(move |k| {
                MonotoneMap::all_active(k, n).into_iter().map(move |alpha| MapSquare {
                    label: format!("active {alpha}"),
                    corner: n,
                    legs: vec![alpha],
                    composable_only: false,
                })
            })
        });
        run_map_squares(f, "culf", squares, &ys, &xs)?
    };

    let fully_faithful = run_map_squares(
        f,
        "fully faithful",
        (1..=cap).map(|n| MapSquare {
            label: format!("vertex square at n={n}"),
            corner: n,
            legs: (0..=n).map(|j| MonotoneMap::vertex(n, j).expect("vertex")).collect(),
            composable_only: false,
        }),
        &ys,
        &xs,
    )?;

    let mono_on_objects = if f.is_mono_on_objects() {
        Flag::pass()
    } else {
        let mut seen = HashMap::new();
        let mut witness = String::new();
        for (v, &w) in f.component(0).iter().enumerate() {
            if let Some(&u) = seen.get(&w) {
                witness = format!(
                    "mono on objects: `{}` and `{}` both map to `{}`",
                    y.name(0, u),
                    y.name(0, v),
                    x.name(0, w)
                );
                break;
            }
            seen.insert(w, v);
        }
        Flag::fail(witness)
    };

    let conservative = run_map_squares(
        f,
        "conservative",
        (0..cap).flat_map(|n| {
            (0..=n).map(move |i| MapSquare {
                label: format!("s_{i} at n={n}"),
                corner: n,
                legs: vec![MonotoneMap::codegeneracy(n, i).expect("codegeneracy")],
                composable_only: false,
            })
        }),
        &ys,
        &xs,
    )?;

    let relatively_segal = run_map_squares(
        f,
        "relatively Segal",
        (2..=cap).map(|n| MapSquare {
            label: format!("spine square at n={n}"),
            corner: n,
            legs: (1..=n).map(|i| principal_edge(i, n).expect("edge")).collect(),
            composable_only: true,
        }),
        &ys,
        &xs,
    )?;

    let (ikeo, semi_ikeo) = if both_decomposition {
        let zero = MapSquare {
            label: "0-square".to_string(),
            corner: 0,
            legs: Vec::new(),
            composable_only: false,
        };
        let two = run_map_squares(f, "semi-ikeo", [two_square()], &ys, &xs)?;
        let zero = run_map_squares(f, "ikeo", [zero], &ys, &xs)?;
        let ikeo = match (zero.holds, two.holds) {
            (true, true) => Flag::pass(),
            (false, _) => zero,
            _ => Flag::fail(two.witness.clone().unwrap_or_default().replacen("semi-ikeo", "ikeo", 1)),
        };
        (ikeo, two)
    } else {
        let ikeo_squares = (0..=cap).flat_map(|n| {
            (0..=n).flat_map(move |k| {
                MonotoneMap::all_active(k, n).into_iter().map(move |alpha| MapSquare {
                    label: format!("charts of {alpha}"),
                    corner: n,
                    legs: chart_legs(&alpha),
                    composable_only: false,
                })
            })
        });
        let semi_squares = (1..=cap).flat_map(|n| {
            (1..=n).flat_map(move |k| {
                MonotoneMap::active_injections(k, n).into_iter().map(move |alpha| MapSquare {
                    label: format!("charts of {alpha}"),
                    corner: n,
                    legs: chart_legs(&alpha),
                    composable_only: false,
                })
            })
        });
        (
            run_map_squares(f, "ikeo", ikeo_squares, &ys, &xs)?,
            run_map_squares(f, "semi-ikeo", semi_squares, &ys, &xs)?,
        )
    };

    let full_inclusion = Flag::and(&fully_faithful, &mono_on_objects);
    let convex = Flag::and(&full_inclusion, &culf);
    Ok(MapClassification {
        route,
        culf,
        fully_faithful,
        mono_on_objects,
        full_inclusion,
        conservative,
        relatively_segal,
        ikeo,
        semi_ikeo,
        convex,
    })
}

/// Resolves vertex names to indices; a bare element name `a` also matches
/// the nerve vertex `(a)`.
pub fn vertex_indices(x: &TruncatedSSet, names: &[String]) -> Result<Vec<usize>, AxiomError> {
    names
        .iter()
        .map(|n| {
            x.lookup(0, n)
                .or_else(|_| x.lookup(0, &format!("({n})")))
                .map_err(|_| AxiomError::UnknownVertex(n.clone()))
        })
        .collect()
}

/// Cells all of whose vertices lie in `vertices`.
pub fn full_hull(x: &Arc<TruncatedSSet>, vertices: &[usize]) -> Result<SubSSet, AxiomError> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= x.level_len(0)) {
        return Err(AxiomError::UnknownVertex(v.to_string()));
    }
    let inside: BTreeSet<usize> = vertices.iter().copied().collect();
    let selected = (0..=x.cap())
        .map(|n| {
            (0..x.level_len(n))
                .filter(|&c| x.vertices(n, c).iter().all(|v| inside.contains(v)))
                .collect()
        })
        .collect();
    Ok(SubSSet::new(x.clone(), selected)?)
}

/// All four conditions plus completeness.
pub fn require_complete_decomposition(x: &TruncatedSSet) -> Result<(), AxiomError> {
    for c in Condition::ALL {
        let report = check_decomposition(x, c)?;
        if let Some(failure) = report.failure {
            return Err(AxiomError::NotDecomposition(format!(
                "condition {}: {}",
                c.number(),
                failure.witness
            )));
        }
    }
    let s0 = x.degeneracy_table(0, 0);
    for u in 0..s0.len() {
        for v in u + 1..s0.len() {
            if s0[u] == s0[v] {
                return Err(AxiomError::NotComplete(x.name(0, u).into(), x.name(0, v).into()));
            }
        }
    }
    Ok(())
}

fn one_step(x: &TruncatedSSet, seeds: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = seeds.clone();
    for n in 1..=x.cap() {
        for c in 0..x.level_len(n) {
            let vs = x.vertices(n, c);
            if seeds.contains(&vs[0]) && seeds.contains(&vs[n]) {
                out.extend(vs);
            }
        }
    }
    out
}

/// The convex hull of `seeds`: one closure step (vertices of cells whose
/// first and last vertices are seeds), then the full hull. Verifies that a
/// second step adds nothing and that the result is convex.
pub fn convex_hull(x: &Arc<TruncatedSSet>, seeds: &[usize]) -> Result<SubSSet, AxiomError> {
    require_complete_decomposition(x)?;
    if let Some(&v) = seeds.iter().find(|&&v| v >= x.level_len(0)) {
        return Err(AxiomError::UnknownVertex(v.to_string()));
    }
    let seeds: BTreeSet<usize> = seeds.iter().copied().collect();
    let closed = one_step(x, &seeds);
    let again = one_step(x, &closed);
    if let Some(&extra) = again.difference(&closed).next() {
        return Err(AxiomError::Stabilization(x.name(0, extra).to_string()));
    }
    let hull = full_hull(x, &closed.into_iter().collect::<Vec<_>>())?;
    let class = classify_map(&hull.inclusion())?;
    if !class.convex.holds {
        return Err(AxiomError::NotConvex(class.convex.witness.unwrap_or_default()));
    }
    Ok(hull)
}

/// Full hull on the vertices outside `k`. When `x` is a complete
/// decomposition space the result is re-checked to be one as well.
pub fn complement(x: &Arc<TruncatedSSet>, k: &SubSSet) -> Result<SubSSet, AxiomError> {
    if !Arc::ptr_eq(k.ambient(), x) && **k.ambient() != **x {
        return Err(AxiomError::ForeignSubObject);
    }
    let outside: Vec<usize> = (0..x.level_len(0)).filter(|&v| !k.contains(0, v)).collect();
    let c = full_hull(x, &outside)?;
    if x.cap() >= 2 && require_complete_decomposition(x).is_ok() {
        require_complete_decomposition(c.space())
            .map_err(|e| AxiomError::Complement(e.to_string()))?;
    }
    Ok(c)
}

/// For a convex `k` and an `n`-cell whose last vertex is in `k`, the unique
/// `j` with vertices `j..=n` in `k` and vertices `0..j` outside it.
pub fn convex_index(
    x: &TruncatedSSet,
    k: &SubSSet,
    n: usize,
    cell: usize,
) -> Result<usize, AxiomError> {
    let vs = x.vertices(n, cell);
    if !k.contains(0, vs[n]) {
        return Err(AxiomError::LastVertexOutside(x.name(n, cell).to_string()));
    }
    let positions: Vec<usize> = (0..=n).filter(|&i| k.contains(0, vs[i])).collect();
    let j = positions[0];
    let tail = MonotoneMap::new(n, (j..=n).collect()).expect("inert");
    let tail_cell = x.act_on(&tail, cell)?;
    if positions.len() != n + 1 - j || !k.contains(n - j, tail_cell) {
        return Err(AxiomError::NonUniqueIndex {
            cell: x.name(n, cell).to_string(),
            positions,
        });
    }
    Ok(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn nerves_pass_every_condition() {
        for x in [fixtures::chain(3), fixtures::b2(), fixtures::point(3)] {
            for c in Condition::ALL {
                let r = check_decomposition(&x, c).unwrap();
                assert!(r.passed, "{:?} {:?}", c, r.failure);
                assert_eq!(r.horizon(), format!("up to cap {}", x.cap()));
            }
            assert!(is_complete(&x).unwrap().passed);
            assert!(is_segal(&x).unwrap().passed);
        }
    }

    #[test]
    fn cap_below_two_is_rejected() {
        let x = fixtures::chain(2).truncate(1).unwrap();
        assert!(matches!(
            check_decomposition(&x, Condition::ActiveInert),
            Err(AxiomError::CapTooSmall { .. })
        ));
    }

    #[test]
    fn duplicate_composite_fails_all_conditions() {
        let x = fixtures::not_decomposition();
        for c in Condition::ALL {
            let r = check_decomposition(&x, c).unwrap();
            assert!(!r.passed, "condition {c:?} passed");
            let failure = r.failure.unwrap();
            assert_eq!(failure.square.evaluate(&x).unwrap(), failure.verdict);
        }
        let first = check_decomposition(&x, Condition::ActiveInert).unwrap().failure.unwrap();
        assert_eq!(first.square.corner, 3);
    }

    #[test]
    fn completeness_examples() {
        assert!(is_complete(&fixtures::b2()).unwrap().passed);
        assert!(is_complete(&TruncatedSSet::empty(2)).unwrap().passed);
        let bad = is_complete(&fixtures::not_complete()).unwrap();
        assert!(!bad.passed && bad.note.is_some());
    }

    fn named(x: &TruncatedSSet, names: &[&str]) -> Vec<usize> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vertex_indices(x, &names).unwrap()
    }

    #[test]
    fn paper_non_examples() {
        let d2 = Arc::new(fixtures::simplex(2));
        let d02 = full_hull(&d2, &named(&d2, &["(0)", "(2)"])).unwrap();
        let c = classify_map(&d02.inclusion()).unwrap();
        assert!(!c.culf.holds && !c.convex.holds);
        assert!(c.full_inclusion.holds);

        let d1 = Arc::new(fixtures::simplex(1));
        let vertices = SubSSet::new(d1.clone(), {
            let mut sel = vec![Vec::new(); d1.cap() + 1];
            for (n, level) in sel.iter_mut().enumerate() {
                *level = (0..d1.level_len(n))
                    .filter(|&c| n == 0 || d1.is_degenerate(n, c).unwrap() && {
                        let vs = d1.vertices(n, c);
                        vs.iter().all(|&v| v == vs[0])
                    })
                    .collect();
            }
            sel
        })
        .unwrap();
        let c = classify_map(&vertices.inclusion()).unwrap();
        assert!(c.culf.holds);
        assert!(!c.fully_faithful.holds && !c.convex.holds);
    }

    #[test]
    fn identity_has_every_property() {
        let x = Arc::new(fixtures::b2());
        let c = classify_map(&SimplicialMap::identity(x)).unwrap();
        for (name, flag) in c.flags() {
            assert!(flag.holds, "{name}");
        }
    }

    #[test]
    fn hull_examples() {
        let x = Arc::new(fixtures::b2());
        let all = full_hull(&x, &(0..4).collect::<Vec<_>>()).unwrap();
        assert_eq!(**all.space(), *x);
        assert!(full_hull(&x, &[]).unwrap().is_empty());
        let chain = full_hull(&x, &named(&x, &["0", "a", "1"])).unwrap();
        assert_eq!(chain.space().level_len(0), 3);
        assert!(chain.space().names(2).contains(&"(0,a,1)".to_string()));

        let top = convex_hull(&x, &named(&x, &["0", "1"])).unwrap();
        assert_eq!(top.selected(0).len(), 4);
        let a = convex_hull(&x, &named(&x, &["a"])).unwrap();
        assert_eq!(a.space().names(0), ["(a)"]);

        let k = convex_hull(&x, &named(&x, &["a"])).unwrap();
        let rest = complement(&x, &k).unwrap();
        assert_eq!(rest.space().names(0), ["(0)", "(b)", "(1)"]);
        assert!(complement(&x, &SubSSet::empty(x.clone())).unwrap().same_cells(&SubSSet::whole(x.clone())));
        assert!(complement(&x, &SubSSet::whole(x.clone())).unwrap().is_empty());
    }

    #[test]
    fn convex_index_examples() {
        let x = Arc::new(fixtures::b2());
        let k = convex_hull(&x, &named(&x, &["a", "1"])).unwrap();
        let sigma = x.lookup(2, "(0,a,1)").unwrap();
        assert_eq!(convex_index(&x, &k, 2, sigma).unwrap(), 1);
        let inside = x.lookup(1, "(a,1)").unwrap();
        assert_eq!(convex_index(&x, &k, 1, inside).unwrap(), 0);
        let edge = x.lookup(1, "(0,1)").unwrap();
        assert_eq!(convex_index(&x, &k, 1, edge).unwrap(), 1);
        let outside = x.lookup(1, "(0,b)").unwrap();
        assert!(convex_index(&x, &k, 1, outside).is_err());
    }
}
