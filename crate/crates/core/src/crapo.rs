//! The Crapo complementation formula for a convex sub-decomposition space
//! `K ⊂ X`, with every intermediate lemma checked on its own.
//!
//! All functionals live on `X_1`; those of `K` and of the complement
//! `X∖K` are pushed forward along the inclusions.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::axioms::{classify_map, complement, full_hull, require_complete_decomposition, AxiomError};
use crate::incidence::{pushforward, Functional, Incidence, IncidenceError};
use crate::nerve::{nerve, Poset};
use crate::sset::{SubSSet, TruncatedSSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrapoError {
    #[error("Crapo checks need cap ≥ 2, found {0}")]
    CapTooSmall(usize),
    #[error("K is not convex: {0}")]
    NotConvex(String),
    #[error("the complement inclusion is not full: {0}")]
    ComplementNotFull(String),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
    #[error("not a lattice: {0}")]
    NotLattice(String),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
}

/// One identity between functionals, compared edge by edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub label: String,
    pub passed: bool,
    /// `(edge, lhs, rhs)` at the first differing edge.
    pub failure: Option<(String, BigRational, BigRational)>,
}

impl RowCheck {
    pub fn compare(alg: &Incidence, label: impl Into<String>, lhs: &Functional, rhs: &Functional) -> Self {
        let failure = lhs
            .first_difference(rhs)
            .map(|e| (alg.edge_name(e).to_string(), lhs.get(e).clone(), rhs.get(e).clone()));
        Self {
            label: label.into(),
            passed: failure.is_none(),
            failure,
        }
    }
}

/// One line of the signed formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRow {
    pub edge: String,
    pub mu_x: BigRational,
    pub mu_complement: BigRational,
    /// `(μ * ζ^K * μ)(edge)`.
    pub correction: BigRational,
}

impl EdgeRow {
    pub fn holds(&self) -> bool {
        self.mu_x == &self.mu_complement + &self.correction
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrapoOutcome {
    pub edges: Vec<EdgeRow>,
    pub signed: RowCheck,
    pub sign_free: Vec<RowCheck>,
    pub propositions: Vec<RowCheck>,
    pub lemmas: Vec<RowCheck>,
    /// The Möbius certificate only holds relative to the truncation.
    pub truncation_relative: bool,
}

impl CrapoOutcome {
    pub fn passed(&self) -> bool {
        self.signed.passed
            && self.edges.iter().all(EdgeRow::holds)
            && self.sign_free.iter().all(|r| r.passed)
            && self.propositions.iter().all(|r| r.passed)
            && self.lemmas.iter().all(|r| r.passed)
    }

    pub fn all_checks(&self) -> impl Iterator<Item = &RowCheck> {
        std::iter::once(&self.signed)
            .chain(&self.sign_free)
            .chain(&self.propositions)
            .chain(&self.lemmas)
    }
}

/// `K ⊂ X` with its complement and all counting functionals on `X_1`.
pub struct CrapoContext {
    k: SubSSet,
    complement: SubSSet,
    x_alg: Incidence,
    k_alg: Incidence,
    c_alg: Incidence,
    phi_x: Vec<Functional>,
    phi_k: Vec<Functional>,
    phi_c: Vec<Functional>,
    phi_notin: Vec<Functional>,
    phi_meet: Vec<Functional>,
}

impl CrapoContext {
    /// Checks that `X` is a complete decomposition space, `K` is convex and
    /// `X∖K ⊂ X` is a full inclusion, then tabulates `Φ` for all parts.
    pub fn new(x: Arc<TruncatedSSet>, k: SubSSet) -> Result<Self, CrapoError> {
        let cap = x.cap();
        if cap < 2 {
            return Err(CrapoError::CapTooSmall(cap));
        }
        if !Arc::ptr_eq(k.ambient(), &x) && **k.ambient() != *x {
            return Err(AxiomError::ForeignSubObject.into());
        }
        require_complete_decomposition(&x)?;
        let class = classify_map(&k.inclusion())?;
        if !class.convex.holds {
            return Err(CrapoError::NotConvex(class.convex.witness.unwrap_or_default()));
        }
        let complement = complement(&x, &k)?;
        let c_class = classify_map(&complement.inclusion())?;
        if !c_class.full_inclusion.holds {
            return Err(CrapoError::ComplementNotFull(c_class.full_inclusion.witness.unwrap_or_default()));
        }

        let x_alg = Incidence::new(x.clone());
        let k_alg = Incidence::new(k.space().clone());
        let c_alg = Incidence::new(complement.space().clone());
        let phi_x = x_alg.phi_table()?.to_vec();
        let push = |sub: &SubSSet, alg: &Incidence| -> Result<Vec<Functional>, IncidenceError> {
            let inclusion = sub.inclusion();
            alg.phi_table()?
                .iter()
                .map(|f| pushforward(&inclusion, alg, &x_alg, f))
                .collect()
        };
        let phi_k = push(&k, &k_alg)?;
        let phi_c = push(&complement, &c_alg)?;

        let nondegenerate_edge = x.nondegenerate_flags(1);
        let mut phi_notin = Vec::with_capacity(cap + 1);
        let mut phi_meet = Vec::with_capacity(cap + 1);
        for n in 0..=cap {
            phi_notin.push(x_alg.count_nondegenerate(n, |c| {
                n == 0
                    || x.spine(n, c)
                        .iter()
                        .all(|&e| nondegenerate_edge[e] && !k.contains(1, e))
            })?);
            phi_meet.push(x_alg.count_nondegenerate(n, |c| {
                x.vertices(n, c).iter().any(|&v| k.contains(0, v))
            })?);
        }

        let ctx = Self {
            k,
            complement,
            x_alg,
            k_alg,
            c_alg,
            phi_x,
            phi_k,
            phi_c,
            phi_notin,
            phi_meet,
        };
        if ctx.phi_notin[0] != ctx.phi_x[0] {
            return Err(CrapoError::Invariant("Φ^∉_0 differs from Φ_0".into()));
        }
        for n in 0..=cap {
            if ctx.phi_x[n] != &ctx.phi_c[n] + &ctx.phi_meet[n] {
                return Err(CrapoError::Invariant(format!("Φ_{n} ≠ Φ^(X∖K)_{n} + Φ^∩_{n}")));
            }
        }
        Ok(ctx)
    }

    pub fn cap(&self) -> usize {
        self.phi_x.len() - 1
    }

    pub fn space(&self) -> &Arc<TruncatedSSet> {
        self.x_alg.space()
    }

    pub fn k(&self) -> &SubSSet {
        &self.k
    }

    pub fn complement(&self) -> &SubSSet {
        &self.complement
    }

    pub fn algebra(&self) -> &Incidence {
        &self.x_alg
    }

    /// `Φ_n` of `X`.
    pub fn phi(&self, n: usize) -> &Functional {
        &self.phi_x[n]
    }

    /// `Φ_n` of `K`, pushed forward.
    pub fn phi_k(&self, n: usize) -> &Functional {
        &self.phi_k[n]
    }

    /// `Φ_n` of `X∖K`, pushed forward.
    pub fn phi_complement(&self, n: usize) -> &Functional {
        &self.phi_c[n]
    }

    /// Nondegenerate `n`-cells whose principal edges are nondegenerate and
    /// outside `K_1`.
    pub fn phi_notin(&self, n: usize) -> &Functional {
        &self.phi_notin[n]
    }

    /// Nondegenerate `n`-cells with at least one vertex in `K`.
    pub fn phi_meet(&self, n: usize) -> &Functional {
        &self.phi_meet[n]
    }

    fn conv(&self, f: &Functional, g: &Functional) -> Result<Functional, CrapoError> {
        Ok(self.x_alg.convolve(f, g)?)
    }

    fn conv3(&self, f: &Functional, g: &Functional, h: &Functional) -> Result<Functional, CrapoError> {
        Ok(self.x_alg.convolve3(f, g, h)?)
    }

    fn sum(&self, terms: impl IntoIterator<Item = Functional>) -> Functional {
        terms.into_iter().fold(self.x_alg.zero(), |acc, t| &acc + &t)
    }

    fn signed(&self, table: &[Functional]) -> Functional {
        self.sum(table.iter().enumerate().map(|(n, f)| if n % 2 == 0 { f.clone() } else { -f }))
    }

    fn parity(&self, table: &[Functional], odd: bool) -> Functional {
        self.sum(table.iter().enumerate().filter(|(n, _)| (n % 2 == 1) == odd).map(|(_, f)| f.clone()))
    }

    fn row(&self, label: impl Into<String>, lhs: &Functional, rhs: &Functional) -> RowCheck {
        RowCheck::compare(&self.x_alg, label, lhs, rhs)
    }

    /// `Φ^∩_n = Σ_{p+m+q=n} Φ^∉_p * Φ^K_m * Φ^∉_q`.
    pub fn check_meet_lemma(&self, n: usize) -> Result<RowCheck, CrapoError> {
        let mut rhs = self.x_alg.zero();
        for p in 0..=n {
            for m in 0..=n - p {
                let q = n - p - m;
                rhs = &rhs + &self.conv3(&self.phi_notin[p], &self.phi_k[m], &self.phi_notin[q])?;
            }
        }
        Ok(self.row(format!("meet lemma n={n}"), &self.phi_meet[n], &rhs))
    }

    /// `Φ_s * Φ^K_0 = Σ_{p+i=s} Φ^∉_p * Φ^K_i`.
    pub fn check_s_lemma(&self, s: usize) -> Result<RowCheck, CrapoError> {
        let lhs = self.conv(&self.phi_x[s], &self.phi_k[0])?;
        let mut rhs = self.x_alg.zero();
        for p in 0..=s {
            rhs = &rhs + &self.conv(&self.phi_notin[p], &self.phi_k[s - p])?;
        }
        Ok(self.row(format!("S lemma s={s}"), &lhs, &rhs))
    }

    /// `Φ^K_0 * Φ_t = Σ_{j+q=t} Φ^K_j * Φ^∉_q`.
    pub fn check_t_lemma(&self, t: usize) -> Result<RowCheck, CrapoError> {
        let lhs = self.conv(&self.phi_k[0], &self.phi_x[t])?;
        let mut rhs = self.x_alg.zero();
        for j in 0..=t {
            rhs = &rhs + &self.conv(&self.phi_k[j], &self.phi_notin[t - j])?;
        }
        Ok(self.row(format!("T lemma t={t}"), &lhs, &rhs))
    }

    /// `Φ^∩_n + Σ_{s+1+t=n} Φ_s*Φ^K_1*Φ_t = Σ_{s+t=n} Φ_s*Φ^K_0*Φ_t`,
    /// directly and by replaying the K-lemma inside every `(p, q)` sandwich.
    pub fn check_key_lemma(&self, n: usize) -> Result<Vec<RowCheck>, CrapoError> {
        let mut lhs = self.phi_meet[n].clone();
        for s in 0..n {
            lhs = &lhs + &self.conv3(&self.phi_x[s], &self.phi_k[1], &self.phi_x[n - 1 - s])?;
        }
        let mut rhs = self.x_alg.zero();
        for s in 0..=n {
            rhs = &rhs + &self.conv3(&self.phi_x[s], &self.phi_k[0], &self.phi_x[n - s])?;
        }
        let mut out = vec![self.row(format!("key lemma n={n}"), &lhs, &rhs)];

        let mut replay_lhs = self.x_alg.zero();
        let mut replay_rhs = self.x_alg.zero();
        for p in 0..=n {
            for q in 0..=n - p {
                let m = n - p - q;
                let (inner_lhs, inner_rhs) = k_lemma_sides(&self.x_alg, &self.phi_k, m)?;
                let sandwich = |f: &Functional| self.conv3(&self.phi_notin[p], f, &self.phi_notin[q]);
                replay_lhs = &replay_lhs + &sandwich(&inner_lhs)?;
                replay_rhs = &replay_rhs + &sandwich(&inner_rhs)?;
            }
        }
        out.push(self.row(format!("key lemma replay n={n}"), &replay_lhs, &replay_rhs));
        out.push(self.row(format!("key lemma replay matches direct n={n}"), &replay_lhs, &lhs));
        Ok(out)
    }

    /// Every check in dependency order, then the formula itself.
    pub fn check_crapo(&self) -> Result<CrapoOutcome, CrapoError> {
        let cap = self.cap();
        let cert = self.x_alg.certify_finiteness()?;
        let mu = self.x_alg.moebius(&cert)?;
        let c_cert = self.c_alg.certify_finiteness()?;
        let mu_c = pushforward(
            &self.complement.inclusion(),
            &self.c_alg,
            &self.x_alg,
            &self.c_alg.moebius(&c_cert)?,
        )?;
        let zeta_k = &self.phi_k[0] + &self.phi_k[1];
        let correction = self.conv3(&mu, &zeta_k, &mu)?;
        let edges = (0..self.x_alg.edge_count())
            .map(|e| EdgeRow {
                edge: self.x_alg.edge_name(e).to_string(),
                mu_x: mu.get(e).clone(),
                mu_complement: mu_c.get(e).clone(),
                correction: correction.get(e).clone(),
            })
            .collect();
        let signed = self.row("μ = μ^(X∖K) + μ*ζ^K*μ", &mu, &(&mu_c + &correction));

        let (even, odd) = (self.parity(&self.phi_x, false), self.parity(&self.phi_x, true));
        let (even_c, odd_c) = (self.parity(&self.phi_c, false), self.parity(&self.phi_c, true));
        let (k0, k1) = (&self.phi_k[0], &self.phi_k[1]);
        let sign_free = vec![
            self.row(
                "Φe + Φe*Φ1K*Φo + Φo*Φ1K*Φe = Φe^(X∖K) + Φe*Φ0K*Φe + Φo*Φ0K*Φo",
                &self.sum([even.clone(), self.conv3(&even, k1, &odd)?, self.conv3(&odd, k1, &even)?]),
                &self.sum([even_c, self.conv3(&even, k0, &even)?, self.conv3(&odd, k0, &odd)?]),
            ),
            self.row(
                "Φo^(X∖K) + Φe*Φ0K*Φo + Φo*Φ0K*Φe = Φo + Φe*Φ1K*Φe + Φo*Φ1K*Φo",
                &self.sum([odd_c, self.conv3(&even, k0, &odd)?, self.conv3(&odd, k0, &even)?]),
                &self.sum([odd.clone(), self.conv3(&even, k1, &even)?, self.conv3(&odd, k1, &odd)?]),
            ),
        ];

        let mut propositions = k_propositions(&self.k_alg)?;
        let mu_k = self.signed(&self.phi_k);
        let mu_notin = self.signed(&self.phi_notin);
        let mu_meet = self.signed(&self.phi_meet);
        propositions.push(self.row("μ^∩ = μ^∉*μ^K*μ^∉", &mu_meet, &self.conv3(&mu_notin, &mu_k, &mu_notin)?));
        propositions.push(self.row("μ^∉*μ^K = μ*Φ0K", &self.conv(&mu_notin, &mu_k)?, &self.conv(&mu, k0)?));
        propositions.push(self.row("μ^K*μ^∉ = Φ0K*μ", &self.conv(&mu_k, &mu_notin)?, &self.conv(k0, &mu)?));

        let mut lemmas = Vec::new();
        for m in 0..=cap {
            lemmas.extend(check_k_lemma(&self.k_alg, m)?);
        }
        for n in 0..=cap {
            lemmas.push(self.check_meet_lemma(n)?);
            lemmas.push(self.check_s_lemma(n)?);
            lemmas.push(self.check_t_lemma(n)?);
            lemmas.extend(self.check_key_lemma(n)?);
        }
        lemmas.push(self.row("Φ^∉_0 = Φ_0", &self.phi_notin[0], &self.phi_x[0]));
        for n in 0..=cap {
            lemmas.push(self.row(
                format!("Φ_{n} = Φ^(X∖K)_{n} + Φ^∩_{n}"),
                &self.phi_x[n],
                &(&self.phi_c[n] + &self.phi_meet[n]),
            ));
        }

        Ok(CrapoOutcome {
            edges,
            signed,
            sign_free,
            propositions,
            lemmas,
            truncation_relative: cert.is_truncation_relative(),
        })
    }
}

/// Both sides of `Φ_m + Σ_j Φ_j*Φ_1*Φ_{m-j-1} = Σ_k Φ_k*Φ_{m-k}`, with `Φ`
/// taken from `table`.
fn k_lemma_sides(alg: &Incidence, table: &[Functional], m: usize) -> Result<(Functional, Functional), IncidenceError> {
    let mut lhs = table[m].clone();
    for j in 0..m {
        lhs = &lhs + &alg.convolve3(&table[j], &table[1], &table[m - j - 1])?;
    }
    let mut rhs = alg.zero();
    for k in 0..=m {
        rhs = &rhs + &alg.convolve(&table[k], &table[m - k])?;
    }
    Ok((lhs, rhs))
}

/// The K-lemma at level `m` in `alg`: the summed identity, then termwise
/// against `Φ_0*Φ_m, Φ_{j+1}*Φ_{m-j-1}`, then against the shifted matching
/// `Φ_j*Φ_{m-j}, Φ_m*Φ_0`.
pub fn check_k_lemma(alg: &Incidence, m: usize) -> Result<Vec<RowCheck>, CrapoError> {
    let table = alg.phi_table()?;
    if m >= table.len() {
        return Err(IncidenceError::BeyondCap { level: m, cap: table.len() - 1 }.into());
    }
    let (lhs, rhs) = k_lemma_sides(alg, table, m)?;
    let mut out = vec![RowCheck::compare(alg, format!("K lemma m={m}"), &lhs, &rhs)];

    let first = RowCheck::compare(alg, format!("K lemma m={m} Φ_m ↔ Φ_0*Φ_m"), &table[m], &alg.convolve(&table[0], &table[m])?);
    let variant = RowCheck::compare(alg, format!("K lemma m={m} Φ_m ↔ Φ_m*Φ_0"), &table[m], &alg.convolve(&table[m], &table[0])?);
    out.push(first);
    out.push(variant);
    for j in 0..m {
        let triple = alg.convolve3(&table[j], &table[1], &table[m - j - 1])?;
        out.push(RowCheck::compare(
            alg,
            format!("K lemma m={m} j={j} ↔ k={}", j + 1),
            &triple,
            &alg.convolve(&table[j + 1], &table[m - j - 1])?,
        ));
        out.push(RowCheck::compare(
            alg,
            format!("K lemma m={m} j={j} ↔ k={j}"),
            &triple,
            &alg.convolve(&table[j], &table[m - j])?,
        ));
    }
    Ok(out)
}

/// `μ = μ*ζ*μ` inside `K`, and its even and odd sign-free rows.
fn k_propositions(alg: &Incidence) -> Result<Vec<RowCheck>, CrapoError> {
    let table = alg.phi_table()?;
    let even = alg.phi_parity(false)?;
    let odd = alg.phi_parity(true)?;
    let mu = &even - &odd;
    let zeta = alg.zeta();
    let add = |a: &Functional, b: &Functional| a + b;
    let (p0, p1) = match table {
        [p0, p1, ..] => (p0, p1),
        _ => return Err(CrapoError::CapTooSmall(table.len().saturating_sub(1))),
    };
    let c3 = |a: &Functional, b: &Functional, c: &Functional| alg.convolve3(a, b, c);
    let lift = |check: RowCheck| RowCheck {
        label: format!("in K: {}", check.label),
        ..check
    };
    Ok(vec![
        lift(RowCheck::compare(alg, "μ = μ*ζ*μ", &mu, &c3(&mu, &zeta, &mu)?)),
        lift(RowCheck::compare(
            alg,
            "Φe + Φe*Φ1*Φo + Φo*Φ1*Φe = Φe*Φ0*Φe + Φo*Φ0*Φo",
            &add(&add(&even, &c3(&even, p1, &odd)?), &c3(&odd, p1, &even)?),
            &add(&c3(&even, p0, &even)?, &c3(&odd, p0, &odd)?),
        )),
        lift(RowCheck::compare(
            alg,
            "Φo + Φe*Φ1*Φe + Φo*Φ1*Φo = Φe*Φ0*Φo + Φo*Φ0*Φe",
            &add(&add(&odd, &c3(&even, p1, &even)?), &c3(&odd, p1, &odd)?),
            &add(&c3(&even, p0, &odd)?, &c3(&odd, p0, &even)?),
        )),
    ])
}

/// Least upper bound, if unique.
pub fn join(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let uppers: Vec<usize> = (0..p.len()).filter(|&c| p.leq(a, c) && p.leq(b, c)).collect();
    uppers.iter().copied().find(|&c| uppers.iter().all(|&d| p.leq(c, d)))
}

/// Greatest lower bound, if unique.
pub fn meet(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let lowers: Vec<usize> = (0..p.len()).filter(|&c| p.leq(c, a) && p.leq(c, b)).collect();
    lowers.iter().copied().find(|&c| lowers.iter().all(|&d| p.leq(d, c)))
}

/// `(0̂, 1̂)` after checking that all meets and joins exist.
pub fn lattice_bounds(p: &Poset) -> Result<(usize, usize), CrapoError> {
    if p.is_empty() {
        return Err(CrapoError::NotLattice("empty poset".into()));
    }
    for a in 0..p.len() {
        for b in 0..p.len() {
            if join(p, a, b).is_none() {
                return Err(CrapoError::NotLattice(format!("no join of `{}` and `{}`", p.name(a), p.name(b))));
            }
            if meet(p, a, b).is_none() {
                return Err(CrapoError::NotLattice(format!("no meet of `{}` and `{}`", p.name(a), p.name(b))));
            }
        }
    }
    let bottom = (0..p.len()).find(|&a| (0..p.len()).all(|b| p.leq(a, b))).expect("lattice has 0̂");
    let top = (0..p.len()).find(|&a| (0..p.len()).all(|b| p.leq(b, a))).expect("lattice has 1̂");
    Ok((bottom, top))
}

/// `y` with `x ∧ y = 0̂` and `x ∨ y = 1̂`.
pub fn complements(p: &Poset, x: usize) -> Result<Vec<usize>, CrapoError> {
    let (bottom, top) = lattice_bounds(p)?;
    Ok((0..p.len())
        .filter(|&y| meet(p, x, y) == Some(bottom) && join(p, x, y) == Some(top))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeOutcome {
    pub complements: Vec<String>,
    /// `μ(0̂, 1̂)`.
    pub mu_bottom_top: BigRational,
    /// `μ^(X∖K)(0̂, 1̂)` for `K = x^⊥`; zero when `0̂` or `1̂` is in `K`.
    pub mu_without_k: BigRational,
    /// `Σ_{y ≤ z in K} μ(0̂, y) μ(z, 1̂)`.
    pub complement_sum: BigRational,
    pub outcome: CrapoOutcome,
}

impl LatticeOutcome {
    pub fn passed(&self) -> bool {
        self.outcome.passed()
            && self.mu_without_k.is_zero()
            && self.mu_bottom_top == self.complement_sum
    }
}

/// The classical complementation theorem for `x` in a finite lattice,
/// obtained from the general formula with `K` spanned by the complements.
pub fn lattice_crapo(p: &Poset, x: &str, cap: Option<usize>) -> Result<LatticeOutcome, CrapoError> {
    let xi = p
        .index(x)
        .ok_or_else(|| AxiomError::UnknownVertex(x.to_string()))?;
    let (bottom, top) = lattice_bounds(p)?;
    let comps = complements(p, xi)?;
    let space = Arc::new(nerve(p, cap).map_err(|e| CrapoError::NotLattice(e.to_string()))?);
    let vertex = |a: usize| space.lookup(0, &format!("({})", p.name(a)));
    let k_vertices = comps.iter().map(|&a| vertex(a)).collect::<Result<Vec<_>, _>>().map_err(AxiomError::from)?;
    let k = full_hull(&space, &k_vertices)?;
    let ctx = CrapoContext::new(space.clone(), k)?;
    let outcome = ctx.check_crapo()?;
    let edge = |a: usize, b: usize| {
        space
            .lookup(1, &format!("({},{})", p.name(a), p.name(b)))
            .expect("comparable pair is an edge")
    };
    let row = &outcome.edges[edge(bottom, top)];
    let mu = |a: usize, b: usize| outcome.edges[edge(a, b)].mu_x.clone();
    let mut sum = BigRational::zero();
    for &y in &comps {
        for &z in &comps {
            if p.leq(y, z) {
                sum += mu(bottom, y) * mu(z, top);
            }
        }
    }
    Ok(LatticeOutcome {
        complements: comps.iter().map(|&a| p.name(a).to_string()).collect(),
        mu_bottom_top: row.mu_x.clone(),
        mu_without_k: row.mu_complement.clone(),
        complement_sum: sum,
        outcome,
    })
}
