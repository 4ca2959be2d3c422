//! Bounded-effort fundamental group triviality check.
//!
//! The edge-path group of a complex is presented with one generator per
//! edge outside a spanning tree of the 1-skeleton and one relator per
//! triangle. Tietze eliminations then try to empty the presentation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::homology::{reduced_homology, HomologyProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pi1Status {
    Trivial,
    Nontrivial,
    Unknown,
}

impl std::fmt::Display for Pi1Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Pi1Status::Trivial => "trivial",
            Pi1Status::Nontrivial => "nontrivial",
            Pi1Status::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TietzeBudget {
    pub max_steps: usize,
    pub max_relator_len: usize,
}

impl Default for TietzeBudget {
    fn default() -> Self {
        TietzeBudget {
            max_steps: 10_000,
            max_relator_len: 64,
        }
    }
}

/// Letters are `±(g + 1)` for generator `g`.
pub type Word = Vec<i32>;

/// A finitely presented group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

/// Edge-path presentations, one per connected component of the 1-skeleton.
pub fn edge_path_presentations(complex: &SimplicialComplex) -> Vec<Presentation> {
    let n = complex.universe();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    // Kruskal-style spanning forest over edges in lexicographic order.
    let edges = complex.faces(1);
    let mut tree = vec![false; edges.len()];
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
        if a != b {
            parent[a.max(b)] = a.min(b);
            tree[i] = true;
        }
    }
    let mut roots: Vec<usize> = complex.faces(0).iter().map(|v| find(&mut parent, v[0])).collect();
    roots.sort_unstable();
    roots.dedup();
    let component_of = |parent: &mut [usize], v: usize| {
        let r = find(parent, v);
        roots.binary_search(&r).expect("root listed")
    };
    let mut pres = vec![Presentation::default(); roots.len()];
    // Generator index for each non-tree edge, local to its component.
    let mut gen_of = vec![None; edges.len()];
    for (i, e) in edges.iter().enumerate() {
        if !tree[i] {
            let c = component_of(&mut parent, e[0]);
            gen_of[i] = Some(pres[c].generators as i32 + 1);
            pres[c].generators += 1;
        }
    }
    let letter = |a: usize, b: usize| -> Option<i32> {
        let idx = complex.index_of(&[a, b]).expect("edge of triangle");
        gen_of[idx]
    };
    for t in complex.faces(2) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let word: Word = [letter(a, b), letter(b, c), letter(a, c).map(|g| -g)]
            .into_iter()
            .flatten()
            .collect();
        let comp = component_of(&mut parent, a);
        pres[comp].relators.push(word);
    }
    pres
}

fn free_reduce(word: &mut Word) {
    let mut out: Word = Vec::with_capacity(word.len());
    for &x in word.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    // Cyclic reduction.
    let mut start = 0;
    let mut end = out.len();
    while end - start >= 2 && out[start] == -out[end - 1] {
        start += 1;
        end -= 1;
    }
    *word = out[start..end].to_vec();
}

fn inverse(word: &[i32]) -> Word {
    word.iter().rev().map(|x| -x).collect()
}

/// Outcome of simplifying one presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Simplified {
    /// All generators eliminated.
    Trivial,
    /// Generators remain with no relators: a nontrivial free group.
    Free,
    /// Budget exhausted or no elimination applies.
    Stuck,
}

/// Substitutes `g -> image` into every relator except `skip`; `None` when a
/// rewritten relator would exceed the length cap.
fn substitute(relators: &[Word], skip: usize, g: i32, image: &[i32], cap: usize) -> Option<Vec<Word>> {
    let image_inv = inverse(image);
    let mut out = Vec::with_capacity(relators.len().saturating_sub(1));
    for (j, rel) in relators.iter().enumerate() {
        if j == skip {
            continue;
        }
        let mut w = Word::with_capacity(rel.len());
        for &y in rel {
            if y == g {
                w.extend_from_slice(image);
            } else if y == -g {
                w.extend_from_slice(&image_inv);
            } else {
                w.push(y);
            }
        }
        free_reduce(&mut w);
        if w.len() > cap {
            return None;
        }
        out.push(w);
    }
    Some(out)
}

/// Solves `rel = 1` for the letter at `pos`: `u g v = 1` gives
/// `g = u^-1 v^-1`, and `u g^-1 v = 1` gives `g = v u`.
fn solve_for(rel: &[i32], pos: usize) -> Word {
    if rel[pos] > 0 {
        let mut w = inverse(&rel[..pos]);
        w.extend(inverse(&rel[pos + 1..]));
        w
    } else {
        let mut w = rel[pos + 1..].to_vec();
        w.extend_from_slice(&rel[..pos]);
        w
    }
}

/// Repeatedly eliminates a generator occurring exactly once in some relator,
/// shortest relators first.
pub fn simplify(mut pres: Presentation, budget: &TietzeBudget) -> Simplified {
    let mut live: BTreeSet<i32> = (1..=pres.generators as i32).collect();
    let mut steps = 0;
    loop {
        for r in &mut pres.relators {
            free_reduce(r);
        }
        pres.relators.retain(|r| !r.is_empty());
        pres.relators.sort();
        pres.relators.dedup();
        pres.relators.sort_by_key(Vec::len);
        if live.is_empty() {
            return Simplified::Trivial;
        }
        if pres.relators.is_empty() {
            return Simplified::Free;
        }
        if steps > budget.max_steps {
            return Simplified::Stuck;
        }
        let next = pres.relators.iter().enumerate().find_map(|(ri, rel)| {
            rel.iter().enumerate().find_map(|(pos, &x)| {
                let g = x.abs();
                if rel.iter().filter(|y| y.abs() == g).count() != 1 {
                    return None;
                }
                let image = solve_for(rel, pos);
                substitute(&pres.relators, ri, g, &image, budget.max_relator_len).map(|rest| (g, rest))
            })
        });
        let Some((g, rest)) = next else {
            return Simplified::Stuck;
        };
        steps += 1 + rest.len();
        pres.relators = rest;
        live.remove(&g);
    }
}

/// `π1` status given an already computed homology profile.
pub fn pi1_status_with(complex: &SimplicialComplex, profile: &HomologyProfile, budget: &TietzeBudget) -> Pi1Status {
    if complex.is_empty() {
        return Pi1Status::Unknown;
    }
    if profile.betti(1) > 0 || !profile.group(1).torsion.is_empty() {
        return Pi1Status::Nontrivial;
    }
    let mut any_unknown = false;
    let presentations = edge_path_presentations(complex);
    let components = presentations.len();
    for pres in presentations {
        match simplify(pres, budget) {
            Simplified::Trivial => {}
            Simplified::Free => return Pi1Status::Nontrivial,
            Simplified::Stuck => any_unknown = true,
        }
    }
    if any_unknown || components != 1 {
        Pi1Status::Unknown
    } else {
        Pi1Status::Trivial
    }
}

pub fn pi1_status(complex: &SimplicialComplex, budget: &TietzeBudget) -> Pi1Status {
    pi1_status_with(complex, &reduced_homology(complex), budget)
}
