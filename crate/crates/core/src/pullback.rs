//! Pullback squares of finite sets.
//!
//! Sets are `0..len` and maps are value tables. A square
//!
//! ```text
//!   P ──→ A
//!   │     │
//!   ↓     ↓
//!   B ──→ C
//! ```
//!
//! is a pullback when the canonical map `P → A ×_C B` is a bijection.
//! [`ProductSquare`] handles the common case where `B → C` is a product of
//! maps `B_i → C_i`, optionally restricted to tuples satisfying a predicate,
//! without materializing the product.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SquareError {
    #[error("square does not commute at corner element {corner}")]
    NotCommuting { corner: usize },
    #[error("map table `{map}` has length {found}, expected {expected}")]
    TableLength {
        map: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("map `{map}` sends {element} to {value}, outside a set of size {size}")]
    ValueOutOfRange {
        map: &'static str,
        element: usize,
        value: usize,
        size: usize,
    },
}

/// Result of a pullback test, with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PullbackVerdict {
    Pullback,
    /// Two corner elements with the same image in the fiber product.
    Collision { first: usize, second: usize },
    /// A fiber-product element `(right, factors)` with no preimage.
    MissingPreimage { right: usize, factors: Vec<usize> },
}

impl PullbackVerdict {
    pub fn is_pullback(&self) -> bool {
        matches!(self, PullbackVerdict::Pullback)
    }
}

/// A square of plain finite sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    pub corner_len: usize,
    pub right_len: usize,
    pub left_len: usize,
    pub base_len: usize,
    /// `P → A`
    pub corner_to_right: Vec<usize>,
    /// `P → B`
    pub corner_to_left: Vec<usize>,
    /// `A → C`
    pub right_to_base: Vec<usize>,
    /// `B → C`
    pub left_to_base: Vec<usize>,
}

fn check_table(
    map: &'static str,
    table: &[usize],
    expected: usize,
    codomain: usize,
) -> Result<(), SquareError> {
    if table.len() != expected {
        return Err(SquareError::TableLength {
            map,
            found: table.len(),
            expected,
        });
    }
    if let Some((element, &value)) = table.iter().enumerate().find(|(_, &v)| v >= codomain) {
        return Err(SquareError::ValueOutOfRange {
            map,
            element,
            value,
            size: codomain,
        });
    }
    Ok(())
}

/// Pullback test for a plain square. Witness factors have length one.
pub fn is_pullback(sq: &Square) -> Result<PullbackVerdict, SquareError> {
    check_table("P→A", &sq.corner_to_right, sq.corner_len, sq.right_len)?;
    check_table("P→B", &sq.corner_to_left, sq.corner_len, sq.left_len)?;
    check_table("A→C", &sq.right_to_base, sq.right_len, sq.base_len)?;
    check_table("B→C", &sq.left_to_base, sq.left_len, sq.base_len)?;
    ProductSquare {
        corner_len: sq.corner_len,
        right_len: sq.right_len,
        corner_to_right: sq.corner_to_right.clone(),
        corner_to_factors: sq.corner_to_left.clone(),
        right_to_base: sq.right_to_base.clone(),
        factor_maps: vec![&sq.left_to_base],
        filter: None,
    }
    .check()
}

/// Elements `(a, b)` of `A ×_C B`, ordered by `a` then `b`.
pub fn fiber_product(right_to_base: &[usize], left_to_base: &[usize]) -> Vec<(usize, usize)> {
    let mut by_value: HashMap<usize, Vec<usize>> = HashMap::new();
    for (b, &c) in left_to_base.iter().enumerate() {
        by_value.entry(c).or_default().push(b);
    }
    let mut out = Vec::new();
    for (a, c) in right_to_base.iter().enumerate() {
        if let Some(bs) = by_value.get(c) {
            out.extend(bs.iter().map(|&b| (a, b)));
        }
    }
    out
}

/// Tuple predicate restricting the left-hand product.
pub type TupleFilter<'a> = &'a dyn Fn(&[usize]) -> bool;

/// A square whose left-hand side is a product `∏ B_i → ∏ C_i` of maps.
///
/// Tables are flat with stride `arity = factor_maps.len()`:
/// `corner_to_factors[p * arity + i]` is the `i`-th component of `p`, and
/// `right_to_base[a * arity + i]` the `i`-th component of `a`'s image.
pub struct ProductSquare<'a> {
    pub corner_len: usize,
    pub right_len: usize,
    pub corner_to_right: Vec<usize>,
    pub corner_to_factors: Vec<usize>,
    pub right_to_base: Vec<usize>,
    pub factor_maps: Vec<&'a [usize]>,
    pub filter: Option<TupleFilter<'a>>,
}

impl ProductSquare<'_> {
    pub fn arity(&self) -> usize {
        self.factor_maps.len()
    }

    pub fn check(&self) -> Result<PullbackVerdict, SquareError> {
        let k = self.arity();
        for p in 0..self.corner_len {
            let a = self.corner_to_right[p];
            for i in 0..k {
                let b = self.corner_to_factors[p * k + i];
                if self.factor_maps[i][b] != self.right_to_base[a * k + i] {
                    return Err(SquareError::NotCommuting { corner: p });
                }
            }
        }

        let mut images: HashMap<(usize, &[usize]), usize> = HashMap::with_capacity(self.corner_len);
        for p in 0..self.corner_len {
            let key = (
                self.corner_to_right[p],
                &self.corner_to_factors[p * k..(p + 1) * k],
            );
            if let Some(&first) = images.get(&key) {
                return Ok(PullbackVerdict::Collision { first, second: p });
            }
            images.insert(key, p);
        }

        let fibers: Vec<HashMap<usize, Vec<usize>>> = self
            .factor_maps
            .iter()
            .map(|map| {
                let mut fiber: HashMap<usize, Vec<usize>> = HashMap::new();
                for (b, &c) in map.iter().enumerate() {
                    fiber.entry(c).or_default().push(b);
                }
                fiber
            })
            .collect();
        let empty = Vec::new();
        let mut tuple = vec![0; k];
        for a in 0..self.right_len {
            let choices: Vec<&Vec<usize>> = (0..k)
                .map(|i| fibers[i].get(&self.right_to_base[a * k + i]).unwrap_or(&empty))
                .collect();
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut cursor = vec![0; k];
            loop {
                for i in 0..k {
                    tuple[i] = choices[i][cursor[i]];
                }
                let member = self.filter.is_none_or(|f| f(&tuple));
                if member && !images.contains_key(&(a, tuple.as_slice())) {
                    return Ok(PullbackVerdict::MissingPreimage {
                        right: a,
                        factors: tuple,
                    });
                }
                // odometer over the product of fibers
                let mut exhausted = true;
                let mut i = k;
                while i > 0 {
                    i -= 1;
                    cursor[i] += 1;
                    if cursor[i] < choices[i].len() {
                        exhausted = false;
                        break;
                    }
                    cursor[i] = 0;
                }
                if exhausted {
                    break;
                }
            }
        }
        Ok(PullbackVerdict::Pullback)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(
        sizes: (usize, usize, usize, usize),
        pa: &[usize],
        pb: &[usize],
        ac: &[usize],
        bc: &[usize],
    ) -> Square {
        Square {
            corner_len: sizes.0,
            right_len: sizes.1,
            left_len: sizes.2,
            base_len: sizes.3,
            corner_to_right: pa.to_vec(),
            corner_to_left: pb.to_vec(),
            right_to_base: ac.to_vec(),
            left_to_base: bc.to_vec(),
        }
    }

    #[test]
    fn identity_square_is_pullback() {
        // P = A, B = C, horizontal maps identities
        let sq = square((3, 3, 2, 2), &[0, 1, 2], &[0, 1, 1], &[0, 1, 1], &[0, 1]);
        assert_eq!(is_pullback(&sq).unwrap(), PullbackVerdict::Pullback);
    }

    #[test]
    fn disjoint_points_have_empty_fiber_product() {
        let sq = square((0, 1, 1, 2), &[], &[], &[0], &[1]);
        assert_eq!(is_pullback(&sq).unwrap(), PullbackVerdict::Pullback);
    }

    #[test]
    fn empty_corner_over_points_fails() {
        let sq = square((0, 1, 1, 1), &[], &[], &[0], &[0]);
        assert_eq!(
            is_pullback(&sq).unwrap(),
            PullbackVerdict::MissingPreimage {
                right: 0,
                factors: vec![0]
            }
        );
    }

    #[test]
    fn collision_is_reported() {
        let sq = square((2, 1, 1, 1), &[0, 0], &[0, 0], &[0], &[0]);
        assert_eq!(
            is_pullback(&sq).unwrap(),
            PullbackVerdict::Collision { first: 0, second: 1 }
        );
    }

    #[test]
    fn non_commuting_square_is_an_error() {
        let sq = square((1, 1, 1, 2), &[0], &[0], &[0], &[1]);
        assert_eq!(is_pullback(&sq), Err(SquareError::NotCommuting { corner: 0 }));
    }

    #[test]
    fn bad_tables_are_rejected() {
        let sq = square((1, 1, 1, 1), &[0, 0], &[0], &[0], &[0]);
        assert!(matches!(is_pullback(&sq), Err(SquareError::TableLength { .. })));
        let sq = square((1, 1, 1, 1), &[3], &[0], &[0], &[0]);
        assert!(matches!(is_pullback(&sq), Err(SquareError::ValueOutOfRange { .. })));
    }

    #[test]
    fn product_square_with_filter() {
        // P = composable pairs in {e0: x→y, e1: y→z}; A = {*}; the filtered product
        // of two copies of the edge set over the point.
        let to_point = [0usize, 0];
        let sources = [0usize, 1];
        let targets = [1usize, 2];
        let composable = |t: &[usize]| targets[t[0]] == sources[t[1]];
        let sq = ProductSquare {
            corner_len: 1,
            right_len: 1,
            corner_to_right: vec![0],
            corner_to_factors: vec![0, 1],
            right_to_base: vec![0, 0],
            factor_maps: vec![&to_point, &to_point],
            filter: Some(&composable),
        };
        assert_eq!(sq.check().unwrap(), PullbackVerdict::Pullback);
        let unfiltered = ProductSquare { filter: None, ..sq };
        assert!(matches!(
            unfiltered.check().unwrap(),
            PullbackVerdict::MissingPreimage { .. }
        ));
    }

    #[test]
    fn fiber_product_enumeration() {
        assert_eq!(
            fiber_product(&[0, 1, 0], &[1, 0]),
            vec![(0, 1), (1, 0), (2, 1)]
        );
    }
}
