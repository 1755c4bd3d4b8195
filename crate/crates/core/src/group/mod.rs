//! Finite groups given by explicit multiplication tables, finite presentations,
//! and the bindings between the two.

mod catalog;
mod presentation;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub use catalog::{catalog, make_group, CatalogEntry, GroupFamily};
pub use presentation::{bind_presentation, evaluate_word, Letter, MarkedGroup, Presentation, Word};

/// A finite group on the element indices `0..order`.
///
/// Products are looked up in a dense table; `mul(a, b)` is the index of `a·b`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
    family: Option<GroupFamily>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, deriving the identity and
    /// inverses. All group axioms are checked exhaustively.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::input("a group needs at least one element"));
        }
        let mut mul = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::input(format!(
                    "table row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            mul.extend_from_slice(row);
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= order) {
            return Err(Error::input(format!("table entry {bad} out of range")));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| mul[e * order + g] == g && mul[g * order + e] == g))
            .ok_or_else(|| Error::input("table has no two-sided identity"))?;
        let mut inv = vec![usize::MAX; order];
        for (g, slot) in inv.iter_mut().enumerate() {
            if let Some(h) = (0..order).find(|&h| mul[g * order + h] == identity) {
                *slot = h;
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != order {
                return Err(Error::input("label count differs from group order"));
            }
        }
        let group = FiniteGroup {
            order,
            mul,
            identity,
            inv,
            labels,
            family: None,
        };
        group.verify()?;
        Ok(group)
    }

    /// Builds the group generated by the given permutations (images of `0..degree`).
    ///
    /// Elements are numbered in breadth-first order from the identity, multiplying on the
    /// right by each generator in turn, so the identity is index 0 and, when the
    /// generators are distinct and nontrivial, generator `k` is index `k + 1`.
    /// Composition is `(p·q)(i) = p(q(i))`.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Self> {
        let elements = permutation_closure(generators)?;
        let index: HashMap<&[usize], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let table = elements
            .iter()
            .map(|p| {
                elements
                    .iter()
                    .map(|q| index[compose(p, q).as_slice()])
                    .collect()
            })
            .collect();
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(table, Some(labels))
    }

    pub(crate) fn with_family(mut self, family: GroupFamily) -> Self {
        self.family = Some(family);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn family(&self) -> Option<GroupFamily> {
        self.family
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(labels) => labels[g].clone(),
            None => format!("g{g}"),
        }
    }

    /// Rows of the multiplication table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Order of the element `g`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Exhaustive check of the group axioms: Latin-square rows and columns,
    /// two-sided identity and inverses, and associativity over all triples.
    pub fn verify(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                seen[self.mul(a, b)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::input(format!("row {a} is not a permutation")));
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                seen[self.mul(b, a)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::input(format!("column {a} is not a permutation")));
            }
        }
        for g in 0..n {
            if self.mul(self.identity, g) != g || self.mul(g, self.identity) != g {
                return Err(Error::input("identity is not two-sided"));
            }
            let h = self.inv[g];
            if h >= n || self.mul(g, h) != self.identity || self.mul(h, g) != self.identity {
                return Err(Error::input(format!("element {g} has no two-sided inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::input(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Elements of the subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        let mut queue = vec![self.identity];
        inside[self.identity] = true;
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &g in gens {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if !inside[y] {
                        inside[y] = true;
                        queue.push(y);
                    }
                }
            }
            i += 1;
        }
        queue
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Some(family) => write!(f, "{family}"),
            None => write!(f, "group of order {}", self.order),
        }
    }
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

/// All products of the given permutations, breadth-first from the identity.
pub fn permutation_closure(generators: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let degree = generators.first().map_or(1, |g| g.len());
    for g in generators {
        let mut hit = vec![false; degree];
        if g.len() != degree {
            return Err(Error::input("permutations of different degrees"));
        }
        for &x in g {
            if x >= degree || hit[x] {
                return Err(Error::input("generator is not a permutation"));
            }
            hit[x] = true;
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in generators {
            let y = compose(&elements[i], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    Ok(elements)
}

/// Cycle notation with points numbered from 1, `()` for the identity.
fn cycle_notation(p: &[usize]) -> String {
    let mut done = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if done[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !done[x] {
            done[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
