//! Kashiwara operators on proper Young walls via the signature rule.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::wall::{Column, Model, Wall};

/// How often a column can lose (`removable`) or gain (`admissible`) an
/// `i`-block in succession while staying a proper wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColumnMark {
    pub removable: u8,
    pub admissible: u8,
}

impl ColumnMark {
    pub fn symbol(self) -> &'static str {
        match (self.removable, self.admissible) {
            (0, 0) => "·",
            (2, 0) => "--",
            (1, 0) => "-",
            (1, 1) => "-+",
            (0, 1) => "+",
            (0, 2) => "++",
            _ => "?",
        }
    }
}

fn step(model: &Model, w: &Wall, k: usize, i: u32, add: bool) -> Option<Wall> {
    let col = w.column(k);
    let opts = if add { model.additions(k, col) } else { model.removals(k, col) };
    opts.into_iter()
        .filter(|&(c, _)| c == i)
        .map(|(_, nc): (u32, Column)| w.with_column(k, nc))
        .find(|nw| model.is_valid_near(nw, k))
}

pub fn classify_column(model: &Model, w: &Wall, k: usize, i: u32) -> ColumnMark {
    let count = |add: bool| {
        let mut cur = w.clone();
        let mut n = 0u8;
        while n < 2 {
            match step(model, &cur, k, i, add) {
                Some(next) => {
                    cur = next;
                    n += 1;
                }
                None => break,
            }
        }
        n
    };
    ColumnMark { removable: count(false), admissible: count(true) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureResult {
    /// Signs with their columns, leftmost column first, before cancelling.
    pub raw: Vec<(char, usize)>,
    /// The word left after cancelling `+-` pairs, always of the form `-…-+…+`.
    pub word: String,
    pub epsilon: usize,
    pub phi: usize,
    /// Column holding the rightmost surviving `-`.
    pub e_column: Option<usize>,
    /// Column holding the leftmost surviving `+`.
    pub f_column: Option<usize>,
}

pub fn signature(model: &Model, w: &Wall, i: u32) -> SignatureResult {
    let mut raw = Vec::new();
    for k in (1..=w.columns.len() + 1).rev() {
        let mark = classify_column(model, w, k, i);
        raw.extend(std::iter::repeat_n(('-', k), mark.removable as usize));
        raw.extend(std::iter::repeat_n(('+', k), mark.admissible as usize));
    }
    let mut minus: Vec<usize> = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for &(s, k) in &raw {
        if s == '+' {
            plus.push(k);
        } else if plus.pop().is_none() {
            minus.push(k);
        }
    }
    let word = "-".repeat(minus.len()) + &"+".repeat(plus.len());
    SignatureResult {
        e_column: minus.last().copied(),
        f_column: plus.first().copied(),
        epsilon: minus.len(),
        phi: plus.len(),
        word,
        raw,
    }
}

pub fn e_op(model: &Model, w: &Wall, i: u32) -> Option<Wall> {
    let k = signature(model, w, i).e_column?;
    step(model, w, k, i, false)
}

pub fn f_op(model: &Model, w: &Wall, i: u32) -> Option<Wall> {
    let k = signature(model, w, i).f_column?;
    step(model, w, k, i, true)
}

pub fn epsilon(model: &Model, w: &Wall, i: u32) -> usize {
    signature(model, w, i).epsilon
}

pub fn phi(model: &Model, w: &Wall, i: u32) -> usize {
    signature(model, w, i).phi
}

pub fn colors(model: &Model) -> std::ops::RangeInclusive<u32> {
    0..=model.data().top
}

pub fn is_highest(model: &Model, w: &Wall) -> bool {
    colors(model).all(|i| epsilon(model, w, i) == 0)
}

/// Highest weight walls among the oracle output for contents `≤ bound`.
pub fn highest_walls(model: &Model, bound: &crate::affine::Content) -> Vec<Wall> {
    model.enumerate_below(bound).into_iter().filter(|w| is_highest(model, w)).collect()
}

#[derive(Clone, Debug, Default)]
pub struct CrystalGraph {
    pub vertices: Vec<Wall>,
    pub edges: Vec<(usize, u32, usize)>,
}

impl CrystalGraph {
    pub fn index_of(&self, w: &Wall) -> Option<usize> {
        self.vertices.iter().position(|v| v == w)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (idx, v) in self.vertices.iter().enumerate() {
            let label = v.to_json().to_string().replace('"', "\\\"");
            let _ = writeln!(s, "  v{idx} [label=\"{label}\"];");
        }
        for &(a, i, b) in &self.edges {
            let _ = writeln!(s, "  v{a} -> v{b} [label=\"{i}\"];");
        }
        s.push_str("}\n");
        s
    }
}

/// Closure of the ground state under all `f̃_i` for `depth` steps.
pub fn crystal_graph(model: &Model, depth: usize) -> CrystalGraph {
    crystal_graph_from(model, Wall::empty(), depth)
}

pub fn crystal_graph_from(model: &Model, start: Wall, depth: usize) -> CrystalGraph {
    let mut g = CrystalGraph::default();
    let mut index: BTreeMap<Wall, usize> = BTreeMap::new();
    index.insert(start.clone(), 0);
    g.vertices.push(start);
    let mut layer = vec![0usize];
    for _ in 0..depth {
        let mut next = Vec::new();
        for &v in &layer {
            for i in colors(model) {
                if let Some(w) = f_op(model, &g.vertices[v], i) {
                    let id = match index.get(&w) {
                        Some(&id) => id,
                        None => {
                            let id = g.vertices.len();
                            index.insert(w.clone(), id);
                            g.vertices.push(w);
                            next.push(id);
                            id
                        }
                    };
                    g.edges.push((v, i, id));
                }
            }
        }
        layer = next;
    }
    g
}
