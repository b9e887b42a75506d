//! The incidence algebra of a finite simplicial set, evaluated at the level
//! of cardinalities: functionals on `X_1` with exact rational values.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::sset::{Provenance, SSetError, SimplicialMap, TruncatedSSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IncidenceError {
    #[error("convolution needs cap ≥ 2, found {0}")]
    CapTooSmall(usize),
    #[error("the simplicial set is not complete: `{0}` and `{1}` share s_0")]
    NotComplete(String, String),
    #[error("level {level} is beyond the cap {cap}")]
    BeyondCap { level: usize, cap: usize },
    #[error("functionals live on different simplicial sets")]
    BaseMismatch,
    #[error("functional has {found} values but X_1 has {expected} cells")]
    Length { found: usize, expected: usize },
    #[error("Möbius certificate denied: {0}")]
    CertificateDenied(String),
    #[error("map does not match the given incidence algebras")]
    MapMismatch,
    #[error(transparent)]
    SSet(#[from] SSetError),
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A rational-valued function on the 1-cells of one simplicial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    base: u64,
    values: Vec<BigRational>,
}

impl Functional {
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn get(&self, edge: usize) -> &BigRational {
        &self.values[edge]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    /// Edges with nonzero value.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| !self.values[e].is_zero()).collect()
    }

    pub fn scale(&self, factor: &BigRational) -> Functional {
        Functional {
            base: self.base,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// First edge where `self` and `other` differ.
    pub fn first_difference(&self, other: &Functional) -> Option<usize> {
        assert_eq!(self.base, other.base, "functionals on different bases");
        (0..self.len()).find(|&e| self.values[e] != other.values[e])
    }

    fn zip(&self, other: &Functional, op: impl Fn(&BigRational, &BigRational) -> BigRational) -> Functional {
        assert_eq!(self.base, other.base, "functionals on different bases");
        Functional {
            base: self.base,
            values: self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect(),
        }
    }
}

impl Add for &Functional {
    type Output = Functional;
    fn add(self, rhs: &Functional) -> Functional {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Functional {
    type Output = Functional;
    fn sub(self, rhs: &Functional) -> Functional {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &Functional {
    type Output = Functional;
    fn neg(self) -> Functional {
        Functional {
            base: self.base,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

/// Renders an exact rational as `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Why the Möbius condition holds, or why it was refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoebiusReason {
    /// Nerve with no nondegenerate simplex above `bound`; `bound < cap`.
    ChainBound { bound: usize },
    /// Raw input with `Φ_cap ≡ 0`: valid only relative to the truncation.
    TruncationRelative { cap: usize },
    /// `Φ_cap` is nonzero on `edge`.
    Denied { edge: String, count: BigInt },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessCertificate {
    pub locally_finite: bool,
    /// Per edge, the largest dimension of an effective cell with that long edge.
    pub lengths: Vec<usize>,
    pub moebius_ok: bool,
    pub reason: MoebiusReason,
}

impl FinitenessCertificate {
    pub fn is_truncation_relative(&self) -> bool {
        matches!(self.reason, MoebiusReason::TruncationRelative { .. })
    }
}

/// Outcome of the inversion identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionReport {
    pub passed: bool,
    pub identities_checked: Vec<&'static str>,
    /// `(identity, edge, lhs, rhs)` at the first failure.
    pub failure: Option<(String, String, BigRational, BigRational)>,
}

/// Convolution data for one simplicial set.
#[derive(Debug)]
pub struct Incidence {
    x: Arc<TruncatedSSet>,
    id: u64,
    /// `(d_2 σ, d_0 σ, d_1 σ)` for every 2-cell `σ`.
    triangles: Vec<(usize, usize, usize)>,
    phis: OnceLock<Vec<Functional>>,
}

impl Incidence {
    pub fn new(x: Arc<TruncatedSSet>) -> Self {
        let triangles = if x.cap() >= 2 {
            (0..x.level_len(2))
                .map(|s| (x.face(2, 2, s), x.face(2, 0, s), x.face(2, 1, s)))
                .collect()
        } else {
            Vec::new()
        };
        Self {
            x,
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            triangles,
            phis: OnceLock::new(),
        }
    }

    pub fn space(&self) -> &Arc<TruncatedSSet> {
        &self.x
    }

    pub fn edge_count(&self) -> usize {
        self.x.level_len(1)
    }

    pub fn edge_name(&self, e: usize) -> &str {
        self.x.name(1, e)
    }

    pub fn from_values(&self, values: Vec<BigRational>) -> Result<Functional, IncidenceError> {
        if values.len() != self.edge_count() {
            return Err(IncidenceError::Length {
                found: values.len(),
                expected: self.edge_count(),
            });
        }
        Ok(Functional { base: self.id, values })
    }

    pub fn from_integers(&self, values: &[i64]) -> Result<Functional, IncidenceError> {
        self.from_values(values.iter().map(|&v| int(v)).collect())
    }

    pub fn zero(&self) -> Functional {
        Functional {
            base: self.id,
            values: vec![BigRational::zero(); self.edge_count()],
        }
    }

    fn owns(&self, f: &Functional) -> Result<(), IncidenceError> {
        if f.base != self.id {
            return Err(IncidenceError::BaseMismatch);
        }
        Ok(())
    }

    /// Constant 1 on `X_1`.
    pub fn zeta(&self) -> Functional {
        Functional {
            base: self.id,
            values: vec![BigRational::one(); self.edge_count()],
        }
    }

    fn require_complete(&self) -> Result<(), IncidenceError> {
        if self.x.cap() == 0 {
            return Ok(());
        }
        let s0 = self.x.degeneracy_table(0, 0);
        let mut owner = vec![usize::MAX; self.edge_count()];
        for (v, &e) in s0.iter().enumerate() {
            if owner[e] != usize::MAX {
                return Err(IncidenceError::NotComplete(
                    self.x.name(0, owner[e]).into(),
                    self.x.name(0, v).into(),
                ));
            }
            owner[e] = v;
        }
        Ok(())
    }

    /// Indicator of the degenerate edges.
    pub fn epsilon(&self) -> Result<Functional, IncidenceError> {
        self.phi(0)
    }

    /// Counts cells of `X_n` accepted by `keep`, by long edge. `keep` sees
    /// the cell index; only nondegenerate cells are offered.
    pub fn count_nondegenerate(
        &self,
        n: usize,
        mut keep: impl FnMut(usize) -> bool,
    ) -> Result<Functional, IncidenceError> {
        self.require_complete()?;
        if n > self.x.cap() || self.x.cap() == 0 {
            return Err(IncidenceError::BeyondCap { level: n, cap: self.x.cap() });
        }
        let mut values = vec![BigRational::zero(); self.edge_count()];
        let flags = self.x.nondegenerate_flags(n);
        for (c, nondegenerate) in flags.into_iter().enumerate() {
            if nondegenerate && keep(c) {
                values[self.x.long_edge(n, c)?] += BigRational::one();
            }
        }
        Ok(Functional { base: self.id, values })
    }

    /// `Φ_n`: nondegenerate `n`-cells counted by long edge.
    pub fn phi(&self, n: usize) -> Result<Functional, IncidenceError> {
        if let Some(table) = self.phis.get() {
            if let Some(f) = table.get(n) {
                return Ok(f.clone());
            }
        }
        self.count_nondegenerate(n, |_| true)
    }

    /// `Φ_0, …, Φ_cap`, computed once.
    pub fn phi_table(&self) -> Result<&[Functional], IncidenceError> {
        if self.phis.get().is_none() {
            let table = (0..=self.x.cap())
                .map(|n| self.count_nondegenerate(n, |_| true))
                .collect::<Result<Vec<_>, _>>()?;
            let _ = self.phis.set(table);
        }
        Ok(self.phis.get().expect("initialized"))
    }

    /// `Σ Φ_n` over even (or odd) `n ≤ cap`.
    pub fn phi_parity(&self, odd: bool) -> Result<Functional, IncidenceError> {
        let mut acc = self.zero();
        for (n, f) in self.phi_table()?.iter().enumerate() {
            if (n % 2 == 1) == odd {
                acc = &acc + f;
            }
        }
        Ok(acc)
    }

    /// `(F * G)(f) = Σ_{d_1 σ = f} F(d_2 σ) G(d_0 σ)`.
    pub fn convolve(&self, f: &Functional, g: &Functional) -> Result<Functional, IncidenceError> {
        self.owns(f)?;
        self.owns(g)?;
        if self.x.cap() < 2 {
            return Err(IncidenceError::CapTooSmall(self.x.cap()));
        }
        let mut values = vec![BigRational::zero(); self.edge_count()];
        for &(front, back, long) in &self.triangles {
            let (a, b) = (&f.values[front], &g.values[back]);
            if !a.is_zero() && !b.is_zero() {
                values[long] += a * b;
            }
        }
        Ok(Functional { base: self.id, values })
    }

    /// `(F * G) * H`.
    pub fn convolve3(&self, f: &Functional, g: &Functional, h: &Functional) -> Result<Functional, IncidenceError> {
        self.convolve(&self.convolve(f, g)?, h)
    }

    /// Effective-cell lengths and the Möbius condition.
    pub fn certify_finiteness(&self) -> Result<FinitenessCertificate, IncidenceError> {
        self.require_complete()?;
        let x = &self.x;
        let cap = x.cap();
        let mut lengths = vec![0usize; self.edge_count()];
        let degenerate_edge: Vec<bool> = if cap >= 1 {
            x.nondegenerate_flags(1).iter().map(|nd| !nd).collect()
        } else {
            Vec::new()
        };
        for n in 1..=cap {
            for c in 0..x.level_len(n) {
                if x.spine(n, c).iter().all(|&e| !degenerate_edge[e]) {
                    let long = x.long_edge(n, c)?;
                    lengths[long] = lengths[long].max(n);
                }
            }
        }
        let top = self.phi(cap)?;
        let reason = match top.support().first() {
            Some(&edge) => MoebiusReason::Denied {
                edge: self.edge_name(edge).to_string(),
                count: top.values[edge].to_integer(),
            },
            None => match x.provenance() {
                Provenance::Nerve { chain_bound } if chain_bound < cap => {
                    MoebiusReason::ChainBound { bound: chain_bound }
                }
                _ => MoebiusReason::TruncationRelative { cap },
            },
        };
        Ok(FinitenessCertificate {
            locally_finite: true,
            lengths,
            moebius_ok: !matches!(reason, MoebiusReason::Denied { .. }),
            reason,
        })
    }

    fn require_certificate(&self, cert: &FinitenessCertificate) -> Result<(), IncidenceError> {
        if !cert.moebius_ok {
            return Err(IncidenceError::CertificateDenied(match &cert.reason {
                MoebiusReason::Denied { edge, count } => {
                    format!("Φ_{} is {count} on `{edge}`", self.x.cap())
                }
                other => format!("{other:?}"),
            }));
        }
        if cert.lengths.len() != self.edge_count() {
            return Err(IncidenceError::CertificateDenied("certificate is for another simplicial set".into()));
        }
        Ok(())
    }

    /// `μ = Σ_{n ≤ cap} (-1)^n Φ_n`.
    pub fn moebius(&self, cert: &FinitenessCertificate) -> Result<Functional, IncidenceError> {
        self.require_certificate(cert)?;
        Ok(&self.phi_parity(false)? - &self.phi_parity(true)?)
    }

    /// `μ*ζ = ε = ζ*μ`, plus both sign-free forms
    /// `Φ_even*ζ = ε + Φ_odd*ζ` and `ζ*Φ_even = ε + ζ*Φ_odd`.
    pub fn check_inversion(&self, cert: &FinitenessCertificate) -> Result<InversionReport, IncidenceError> {
        let mu = self.moebius(cert)?;
        let zeta = self.zeta();
        let eps = self.epsilon()?;
        let even = self.phi_parity(false)?;
        let odd = self.phi_parity(true)?;
        let identities: Vec<(&'static str, Functional, Functional)> = vec![
            ("μ*ζ = ε", self.convolve(&mu, &zeta)?, eps.clone()),
            ("ζ*μ = ε", self.convolve(&zeta, &mu)?, eps.clone()),
            (
                "Φ_even*ζ = ε + Φ_odd*ζ",
                self.convolve(&even, &zeta)?,
                &eps + &self.convolve(&odd, &zeta)?,
            ),
            (
                "ζ*Φ_even = ε + ζ*Φ_odd",
                self.convolve(&zeta, &even)?,
                &eps + &self.convolve(&zeta, &odd)?,
            ),
        ];
        let names = identities.iter().map(|(n, _, _)| *n).collect();
        for (name, lhs, rhs) in &identities {
            if let Some(e) = lhs.first_difference(rhs) {
                return Ok(InversionReport {
                    passed: false,
                    identities_checked: names,
                    failure: Some((
                        name.to_string(),
                        self.edge_name(e).to_string(),
                        lhs.values[e].clone(),
                        rhs.values[e].clone(),
                    )),
                });
            }
        }
        Ok(InversionReport {
            passed: true,
            identities_checked: names,
            failure: None,
        })
    }
}

/// `(u_! F)(x) = Σ_{u(y) = x} F(y)`.
pub fn pushforward(
    u: &SimplicialMap,
    from: &Incidence,
    to: &Incidence,
    f: &Functional,
) -> Result<Functional, IncidenceError> {
    from.owns(f)?;
    let same = |a: &Arc<TruncatedSSet>, b: &Arc<TruncatedSSet>| Arc::ptr_eq(a, b) || **a == **b;
    if !same(u.source(), from.space()) || !same(u.target(), to.space()) {
        return Err(IncidenceError::MapMismatch);
    }
    let mut out = to.zero();
    if u.source().cap() == 0 {
        return Ok(out);
    }
    for (y, value) in f.values.iter().enumerate() {
        out.values[u.apply(1, y)] += value;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn alg(x: crate::sset::TruncatedSSet) -> Incidence {
        Incidence::new(Arc::new(x))
    }

    fn at(a: &Incidence, f: &Functional, edge: &str) -> BigRational {
        f.get(a.space().lookup(1, edge).unwrap()).clone()
    }

    #[test]
    fn zeta_and_epsilon() {
        let a = alg(fixtures::chain(2));
        assert_eq!(a.zeta().values(), vec![int(1); 3]);
        let eps = a.epsilon().unwrap();
        assert_eq!(at(&a, &eps, "(0,0)"), int(1));
        assert_eq!(at(&a, &eps, "(1,1)"), int(1));
        assert_eq!(at(&a, &eps, "(0,1)"), int(0));
        let empty = alg(crate::sset::TruncatedSSet::empty(2));
        assert!(empty.zeta().is_empty() && empty.epsilon().unwrap().is_empty());
    }

    #[test]
    fn phi_examples() {
        let a = alg(fixtures::chain(3));
        assert_eq!(at(&a, &a.phi(2).unwrap(), "(0,2)"), int(1));
        assert_eq!(at(&a, &a.phi(1).unwrap(), "(0,2)"), int(1));
        assert_eq!(at(&a, &a.phi(0).unwrap(), "(0,2)"), int(0));
        let b = alg(fixtures::b2());
        assert_eq!(at(&b, &b.phi(2).unwrap(), "(0,1)"), int(2));
        assert_eq!(b.phi(0).unwrap(), b.epsilon().unwrap());
        assert!(matches!(b.phi(9), Err(IncidenceError::BeyondCap { .. })));
    }

    #[test]
    fn convolution_examples() {
        let b = alg(fixtures::b2());
        let eps = b.epsilon().unwrap();
        for f in [b.zeta(), b.phi(1).unwrap()] {
            assert_eq!(b.convolve(&eps, &f).unwrap(), f);
            assert_eq!(b.convolve(&f, &eps).unwrap(), f);
        }
        assert!(b.convolve(&b.zero(), &b.zeta()).unwrap().is_zero());
        let c = alg(fixtures::chain(3));
        let p1 = c.phi(1).unwrap();
        assert_eq!(c.convolve(&p1, &p1).unwrap(), c.phi(2).unwrap());
        assert_eq!(b.convolve(&c.zeta(), &b.zeta()), Err(IncidenceError::BaseMismatch));
    }

    #[test]
    fn moebius_examples() {
        let a = alg(fixtures::chain(2));
        let mu = a.moebius(&a.certify_finiteness().unwrap()).unwrap();
        assert_eq!(at(&a, &mu, "(0,1)"), int(-1));
        assert_eq!(at(&a, &mu, "(0,0)"), int(1));
        let c = alg(fixtures::chain(3));
        let mu = c.moebius(&c.certify_finiteness().unwrap()).unwrap();
        assert_eq!(at(&c, &mu, "(0,2)"), int(0));
        let b = alg(fixtures::b2());
        let mu = b.moebius(&b.certify_finiteness().unwrap()).unwrap();
        assert_eq!(at(&b, &mu, "(0,1)"), int(1));
    }

    #[test]
    fn inversion_on_b2() {
        let b = alg(fixtures::b2());
        let cert = b.certify_finiteness().unwrap();
        assert!(b.check_inversion(&cert).unwrap().passed);
        let lhs = b.convolve(&b.phi_parity(false).unwrap(), &b.zeta()).unwrap();
        assert_eq!(at(&b, &lhs, "(0,1)"), int(3));
        let empty = alg(crate::sset::TruncatedSSet::empty(2));
        let cert = empty.certify_finiteness().unwrap();
        assert!(empty.check_inversion(&cert).unwrap().passed);
    }

    #[test]
    fn certificates() {
        let c = alg(crate::nerve::nerve(&fixtures::chain_poset(3), Some(3)).unwrap());
        let cert = c.certify_finiteness().unwrap();
        assert!(cert.moebius_ok);
        assert_eq!(cert.reason, MoebiusReason::ChainBound { bound: 2 });
        let e02 = c.space().lookup(1, "(0,2)").unwrap();
        assert_eq!(cert.lengths[e02], 2);
        for v in 0..3 {
            assert_eq!(cert.lengths[c.space().degeneracy(0, 0, v)], 0);
        }
        let raw = alg(fixtures::raw_triangle());
        let cert = raw.certify_finiteness().unwrap();
        assert!(!cert.moebius_ok);
        assert!(matches!(&cert.reason, MoebiusReason::Denied { edge, .. } if edge == "(0,2)"));
        assert!(matches!(raw.moebius(&cert), Err(IncidenceError::CertificateDenied(_))));
        let incomplete = alg(fixtures::not_complete());
        assert!(matches!(incomplete.certify_finiteness(), Err(IncidenceError::NotComplete(..))));
    }

    #[test]
    fn pushforward_examples() {
        let x = Arc::new(fixtures::b2());
        let a = Incidence::new(x.clone());
        let id = SimplicialMap::identity(x.clone());
        let f = a.phi(1).unwrap();
        assert_eq!(pushforward(&id, &a, &a, &f).unwrap(), f);

        let names = vec!["a".to_string()];
        let k = crate::axioms::full_hull(&x, &crate::axioms::vertex_indices(&x, &names).unwrap()).unwrap();
        let ka = Incidence::new(k.space().clone());
        let pushed = pushforward(&k.inclusion(), &ka, &a, &ka.epsilon().unwrap()).unwrap();
        let sa = x.degeneracy(0, 0, x.lookup(0, "(a)").unwrap());
        assert_eq!(pushed.support(), vec![sa]);
        assert_ne!(pushed, a.epsilon().unwrap());
    }
}
