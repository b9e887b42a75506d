//! Small named simplicial sets used by tests, the CLI and the docs.

use crate::builder::SSetBuilder;
use crate::nerve::{nerve, Category, Poset};
use crate::sset::{SSetTables, TruncatedSSet};

fn strings(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Poset from element names and cover pairs.
pub fn poset(names: &[&str], covers: &[(&str, &str)]) -> Poset {
    let covers: Vec<(String, String)> = covers
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    Poset::from_covers(strings(names), &covers).expect("fixture poset is acyclic")
}

/// The chain `0 < 1 < … < n-1`.
pub fn chain_poset(n: usize) -> Poset {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> = (1..n).map(|i| (names[i - 1].clone(), names[i].clone())).collect();
    Poset::from_covers(names, &covers).expect("chain")
}

/// The Boolean lattice `B₂`: `0 < a, b < 1`.
pub fn b2_poset() -> Poset {
    poset(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
}

pub fn chain(n: usize) -> TruncatedSSet {
    nerve(&chain_poset(n), None).expect("chain nerve")
}

/// `Δⁿ` as the nerve of `[n]`.
pub fn simplex(n: usize) -> TruncatedSSet {
    chain(n + 1)
}

pub fn b2() -> TruncatedSSet {
    nerve(&b2_poset(), None).expect("B₂ nerve")
}

/// The terminal simplicial set.
pub fn point(cap: usize) -> TruncatedSSet {
    nerve(&chain_poset(1), Some(cap)).expect("point")
}

/// `k` isolated points.
pub fn discrete(k: usize) -> TruncatedSSet {
    let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
    nerve(&Poset::from_covers(names, &[]).expect("antichain"), None).expect("discrete")
}

/// Adds the `dim`-cells of the full simplex on `vertices`, named like nerve
/// chains.
fn add_simplex_level(b: &mut SSetBuilder, vertices: &[&str], dim: usize) {
    let name = |s: &[usize]| {
        format!("({})", s.iter().map(|&i| vertices[i]).collect::<Vec<_>>().join(","))
    };
    for subset in subsets(vertices.len(), dim + 1) {
        let faces: Vec<String> = if dim == 0 {
            Vec::new()
        } else {
            (0..=dim)
                .map(|i| {
                    let mut f = subset.clone();
                    f.remove(i);
                    name(&f)
                })
                .collect()
        };
        let faces: Vec<&str> = faces.iter().map(String::as_str).collect();
        b.cell(&name(&subset), &faces).expect("simplex cell");
    }
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == size {
            out.push(acc.clone());
            return;
        }
        for i in start..n {
            acc.push(i);
            go(i + 1, n, size, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// The nerve of `0 < 1 < 2 < 3` with a second 2-cell `(0,1,2)'` carrying
/// the same faces as `(0,1,2)`. The pair `((0,1,2)', (0,2,3))` glued along
/// `(0,2)` has no 3-cell, so the duplicate composite breaks the pullbacks.
pub fn not_decomposition() -> TruncatedSSet {
    let mut b = SSetBuilder::new(3);
    let vs = ["0", "1", "2", "3"];
    for dim in 0..=3 {
        add_simplex_level(&mut b, &vs, dim);
        if dim == 2 {
            b.cell("(0,1,2)'", &["(1,2)", "(0,2)", "(0,1)"]).expect("duplicate");
        }
    }
    b.build().expect("valid simplicial set")
}

/// Two triangles `(0,1,2)` and `(0,2,3)` sharing the edge `(0,2)`, no 3-cell.
pub fn quadrilateral() -> TruncatedSSet {
    let mut b = SSetBuilder::new(3);
    for v in ["(0)", "(1)", "(2)", "(3)"] {
        b.vertex(v).expect("vertex");
    }
    for (e, t, s) in [
        ("(0,1)", "(1)", "(0)"),
        ("(0,2)", "(2)", "(0)"),
        ("(0,3)", "(3)", "(0)"),
        ("(1,2)", "(2)", "(1)"),
        ("(2,3)", "(3)", "(2)"),
    ] {
        b.cell(e, &[t, s]).expect("edge");
    }
    b.cell("(0,1,2)", &["(1,2)", "(0,2)", "(0,1)"]).expect("triangle");
    b.cell("(0,2,3)", &["(2,3)", "(0,3)", "(0,2)"]).expect("triangle");
    b.build().expect("valid simplicial set")
}

/// The boundary of the 3-simplex at cap 3.
pub fn hollow_tetrahedron() -> TruncatedSSet {
    let mut b = SSetBuilder::new(3);
    for dim in 0..=2 {
        add_simplex_level(&mut b, &["0", "1", "2", "3"], dim);
    }
    b.build().expect("valid simplicial set")
}

/// `Δ²` built by hand at cap 2: raw provenance with a nondegenerate top cell.
pub fn raw_triangle() -> TruncatedSSet {
    let mut b = SSetBuilder::new(2);
    for dim in 0..=2 {
        add_simplex_level(&mut b, &["0", "1", "2"], dim);
    }
    b.build().expect("valid simplicial set")
}

/// Two vertices sent by `s_0` to the same edge. No simplicial set does
/// this, so the tables skip the identity check.
pub fn not_complete() -> TruncatedSSet {
    let tables = SSetTables {
        cap: 1,
        names: vec![strings(&["x", "y"]), strings(&["e"])],
        faces: vec![Vec::new(), vec![vec![0], vec![0]]],
        degeneracies: vec![vec![vec![0, 0]]],
    };
    TruncatedSSet::new_unchecked(tables).expect("well-shaped tables")
}

/// The group `Z/2` as a one-object category.
pub fn cyclic_group_two() -> Category {
    let morphisms = [
        ("e".to_string(), "*".to_string(), "*".to_string()),
        ("g".to_string(), "*".to_string(), "*".to_string()),
    ];
    let composition = [
        ("e", "e", "e"),
        ("e", "g", "g"),
        ("g", "e", "g"),
        ("g", "g", "e"),
    ]
    .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()));
    Category::new(
        strings(&["*"]),
        &morphisms,
        &[("*".to_string(), "e".to_string())],
        &composition,
    )
    .expect("Z/2 is a category")
}

/// Every named fixture that is a finite simplicial set, with its name.
pub fn corpus() -> Vec<(&'static str, TruncatedSSet)> {
    vec![
        ("chain2", chain(2)),
        ("chain3", chain(3)),
        ("chain4", chain(4)),
        ("b2", b2()),
        ("point", point(3)),
        ("discrete2", discrete(2)),
        ("empty", TruncatedSSet::empty(3)),
        ("not_decomposition", not_decomposition()),
        ("quadrilateral", quadrilateral()),
        ("hollow_tetrahedron", hollow_tetrahedron()),
    ]
}

/// The engineered fixtures that are not decomposition spaces.
pub fn negative_corpus() -> Vec<(&'static str, TruncatedSSet)> {
    vec![
        ("not_decomposition", not_decomposition()),
        ("quadrilateral", quadrilateral()),
        ("hollow_tetrahedron", hollow_tetrahedron()),
    ]
}
