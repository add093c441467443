//! The nerve of a finite category: level `k` is the set of composable
//! `k`-chains, faces compose or drop outer arrows, degeneracies insert
//! identities.

use std::collections::HashMap;
use std::hash::Hash;

use crate::monoidal::{ComputableCategory, FiniteCategory};

use super::sset::TruncatedSimplicialSet;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Chain<O, M> {
    pub start: O,
    pub arrows: Vec<M>,
}

pub struct Nerve<C: FiniteCategory> {
    pub sset: TruncatedSimplicialSet,
    pub chains: Vec<Vec<Chain<C::Obj, C::Mor>>>,
    index: Vec<HashMap<Chain<C::Obj, C::Mor>, usize>>,
}

impl<C: FiniteCategory> Nerve<C> {
    pub fn index_of(&self, k: usize, chain: &Chain<C::Obj, C::Mor>) -> Option<usize> {
        self.index[k].get(chain).copied()
    }
}

pub fn nerve<C: FiniteCategory>(cat: &C, dim: usize) -> Nerve<C> {
    let objects = cat.objects();
    let mut chains: Vec<Vec<Chain<C::Obj, C::Mor>>> = Vec::with_capacity(dim + 1);
    chains.push(
        objects
            .iter()
            .map(|o| Chain {
                start: o.clone(),
                arrows: vec![],
            })
            .collect(),
    );
    for k in 1..=dim {
        let mut level = Vec::new();
        for prefix in &chains[k - 1] {
            let end = prefix
                .arrows
                .last()
                .map(|m| cat.cod(m))
                .unwrap_or_else(|| prefix.start.clone());
            for next_obj in &objects {
                for arrow in cat.enumerate_hom(&end, next_obj) {
                    let mut arrows = prefix.arrows.clone();
                    arrows.push(arrow);
                    level.push(Chain {
                        start: prefix.start.clone(),
                        arrows,
                    });
                }
            }
        }
        chains.push(level);
    }
    let index: Vec<HashMap<_, usize>> = chains
        .iter()
        .map(|level| {
            level
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), i))
                .collect()
        })
        .collect();
    let cards: Vec<usize> = chains.iter().map(Vec::len).collect();
    let mut faces = vec![vec![]];
    for k in 1..=dim {
        let mut level = Vec::with_capacity(k + 1);
        for i in 0..=k {
            level.push(
                chains[k]
                    .iter()
                    .map(|c| {
                        let dropped = chain_face(cat, c, i);
                        index[k - 1][&dropped]
                    })
                    .collect(),
            );
        }
        faces.push(level);
    }
    let mut degens = Vec::new();
    for k in 0..dim {
        let mut level = Vec::with_capacity(k + 1);
        for i in 0..=k {
            level.push(
                chains[k]
                    .iter()
                    .map(|c| {
                        let extended = chain_degeneracy(cat, c, i);
                        index[k + 1][&extended]
                    })
                    .collect(),
            );
        }
        degens.push(level);
    }
    if degens.is_empty() {
        degens.push(vec![]);
    }
    let labels = chains
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|c| {
                    if c.arrows.is_empty() {
                        format!("{}", c.start)
                    } else {
                        let arrows: Vec<String> =
                            c.arrows.iter().map(|m| format!("{m}")).collect();
                        format!("{}: {}", c.start, arrows.join(" · "))
                    }
                })
                .collect()
        })
        .collect();
    let sset = TruncatedSimplicialSet::new(dim, cards, faces, degens, labels)
        .expect("nerve construction yields a valid simplicial set");
    Nerve {
        sset,
        chains,
        index,
    }
}

/// The `i`-th face of a chain: drop the first arrow, compose at an inner
/// vertex, or drop the last arrow.
pub fn chain_face<C: ComputableCategory>(
    cat: &C,
    chain: &Chain<C::Obj, C::Mor>,
    i: usize,
) -> Chain<C::Obj, C::Mor> {
    let k = chain.arrows.len();
    assert!(i <= k && k >= 1);
    if i == 0 {
        Chain {
            start: cat.cod(&chain.arrows[0]),
            arrows: chain.arrows[1..].to_vec(),
        }
    } else if i == k {
        Chain {
            start: chain.start.clone(),
            arrows: chain.arrows[..k - 1].to_vec(),
        }
    } else {
        let mut arrows = Vec::with_capacity(k - 1);
        arrows.extend_from_slice(&chain.arrows[..i - 1]);
        arrows.push(
            cat.compose(&chain.arrows[i], &chain.arrows[i - 1])
                .expect("chains are composable"),
        );
        arrows.extend_from_slice(&chain.arrows[i + 1..]);
        Chain {
            start: chain.start.clone(),
            arrows,
        }
    }
}

/// The `i`-th degeneracy: insert an identity at vertex `i`.
pub fn chain_degeneracy<C: ComputableCategory>(
    cat: &C,
    chain: &Chain<C::Obj, C::Mor>,
    i: usize,
) -> Chain<C::Obj, C::Mor> {
    let vertex = if i == 0 {
        chain.start.clone()
    } else {
        cat.cod(&chain.arrows[i - 1])
    };
    let mut arrows = chain.arrows.clone();
    arrows.insert(i, cat.identity(&vertex));
    Chain {
        start: chain.start.clone(),
        arrows,
    }
}
