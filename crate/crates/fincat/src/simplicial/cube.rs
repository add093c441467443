//! The coherent cubes: for each `n`, the simplicial category on objects
//! `0..n` whose mapping space from `i` to `j` is the nerve of the poset
//! `P_{i,j}` of subsets of `{i,…,j}` containing both endpoints, with
//! composition given by union of subsets. The cosimplicial structure sends
//! a monotone map `ω` to the functor taking a subset to its image.

use std::collections::HashMap;

use super::scat::SimplicialCategory;
use super::sset::{SimplicialMap, TruncatedSimplicialSet};

/// Subsets are bitmasks over `0..=n`.
type Mask = u32;

pub struct CoherentCube {
    pub n: usize,
    pub dim: usize,
    pub cat: SimplicialCategory,
    /// `posets[i][j]`: the subsets of `P_{i,j}`, sorted, for `i ≤ j`.
    posets: Vec<Vec<Vec<Mask>>>,
    /// `chains[i][j][k]`: the weakly increasing `(k+1)`-chains of subset
    /// indices, aligned with the mapping-space simplices.
    chains: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
    chain_index: Vec<Vec<Vec<HashMap<Vec<usize>, usize>>>>,
}

/// All subsets of `{i,…,j}` containing `i` and `j`, sorted ascending.
pub fn endpoint_subsets(i: usize, j: usize) -> Vec<Mask> {
    assert!(i <= j);
    let interior: Vec<usize> = ((i + 1)..j).collect();
    let base: Mask = (1 << i) | (1 << j);
    let mut out = Vec::with_capacity(1 << interior.len());
    for bits in 0..(1u32 << interior.len()) {
        let mut mask = base;
        for (pos, &elt) in interior.iter().enumerate() {
            if (bits >> pos) & 1 == 1 {
                mask |= 1 << elt;
            }
        }
        out.push(mask);
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn subset_leq(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

impl CoherentCube {
    pub fn new(n: usize, dim: usize) -> Self {
        let objects = n + 1;
        let mut posets = vec![vec![Vec::new(); objects]; objects];
        let mut chains = vec![vec![Vec::new(); objects]; objects];
        let mut chain_index: Vec<Vec<Vec<HashMap<Vec<usize>, usize>>>> =
            vec![vec![Vec::new(); objects]; objects];
        let mut maps: Vec<Vec<TruncatedSimplicialSet>> = Vec::with_capacity(objects);
        for i in 0..objects {
            let mut row = Vec::with_capacity(objects);
            for j in 0..objects {
                if i > j {
                    row.push(TruncatedSimplicialSet::constant(dim, 0, vec![]));
                    chains[i][j] = vec![vec![]; dim + 1];
                    chain_index[i][j] = vec![HashMap::new(); dim + 1];
                    continue;
                }
                let subsets = endpoint_subsets(i, j);
                // Level k: weakly increasing chains (by inclusion) of k+1
                // subset indices.
                let mut levels: Vec<Vec<Vec<usize>>> = Vec::with_capacity(dim + 1);
                levels.push((0..subsets.len()).map(|s| vec![s]).collect());
                for _ in 1..=dim {
                    let prev = levels.last().unwrap();
                    let mut next = Vec::new();
                    for chain in prev {
                        let last = *chain.last().unwrap();
                        for (s, &mask) in subsets.iter().enumerate() {
                            if subset_leq(subsets[last], mask) {
                                let mut extended = chain.clone();
                                extended.push(s);
                                next.push(extended);
                            }
                        }
                    }
                    levels.push(next);
                }
                let index: Vec<HashMap<Vec<usize>, usize>> = levels
                    .iter()
                    .map(|level| {
                        level
                            .iter()
                            .enumerate()
                            .map(|(idx, c)| (c.clone(), idx))
                            .collect()
                    })
                    .collect();
                let cards: Vec<usize> = levels.iter().map(Vec::len).collect();
                let mut faces = vec![vec![]];
                for k in 1..=dim {
                    let mut level_tables = Vec::with_capacity(k + 1);
                    for f in 0..=k {
                        level_tables.push(
                            levels[k]
                                .iter()
                                .map(|c| {
                                    let mut shorter = c.clone();
                                    shorter.remove(f);
                                    index[k - 1][&shorter]
                                })
                                .collect(),
                        );
                    }
                    faces.push(level_tables);
                }
                let mut degens = Vec::new();
                for k in 0..dim {
                    let mut level_tables = Vec::with_capacity(k + 1);
                    for s in 0..=k {
                        level_tables.push(
                            levels[k]
                                .iter()
                                .map(|c| {
                                    let mut longer = c.clone();
                                    longer.insert(s, c[s]);
                                    index[k + 1][&longer]
                                })
                                .collect(),
                        );
                    }
                    degens.push(level_tables);
                }
                if degens.is_empty() {
                    degens.push(vec![]);
                }
                let labels = levels
                    .iter()
                    .map(|level| {
                        level
                            .iter()
                            .map(|c| {
                                let names: Vec<String> = c
                                    .iter()
                                    .map(|&s| format!("{:b}", subsets[s]))
                                    .collect();
                                names.join("⊆")
                            })
                            .collect()
                    })
                    .collect();
                row.push(
                    TruncatedSimplicialSet::new(dim, cards, faces, degens, labels)
                        .expect("poset nerves are valid"),
                );
                posets[i][j] = subsets;
                chains[i][j] = levels;
                chain_index[i][j] = index;
            }
            maps.push(row);
        }
        // Composition: union of subsets, pointwise on chains.
        let mut comp = vec![vec![vec![vec![]; objects]; objects]; objects];
        #[allow(clippy::needless_range_loop)]
        for a in 0..objects {
            for b in 0..objects {
                for c in 0..objects {
                    let mut by_level = Vec::with_capacity(dim + 1);
                    for k in 0..=dim {
                        let g_chains = &chains[b][c][k];
                        let f_chains = &chains[a][b][k];
                        let mut table = vec![vec![0usize; f_chains.len()]; g_chains.len()];
                        if a <= b && b <= c {
                            for (gi, g) in g_chains.iter().enumerate() {
                                for (fi, f) in f_chains.iter().enumerate() {
                                    let union_chain: Vec<usize> = g
                                        .iter()
                                        .zip(f)
                                        .map(|(&gs, &fs)| {
                                            let mask =
                                                posets[b][c][gs] | posets[a][b][fs];
                                            posets[a][c]
                                                .iter()
                                                .position(|&m| m == mask)
                                                .expect("unions stay in the poset")
                                        })
                                        .collect();
                                    table[gi][fi] = chain_index[a][c][k][&union_chain];
                                }
                            }
                        }
                        by_level.push(table);
                    }
                    comp[a][b][c] = by_level;
                }
            }
        }
        // Identity of i: the singleton subset {i} (the only element of
        // P_{i,i}).
        let ids = vec![0usize; objects];
        let labels = (0..objects).map(|i| i.to_string()).collect();
        let cat = SimplicialCategory::new(dim, labels, maps, comp, ids)
            .expect("coherent cubes are valid simplicial categories");
        CoherentCube {
            n,
            dim,
            cat,
            posets,
            chains,
            chain_index,
        }
    }

    pub fn poset_size(&self, i: usize, j: usize) -> usize {
        self.posets[i][j].len()
    }

    /// The functor `𝔠[ω] : 𝔠[Δ^k] → 𝔠[Δ^n]` of a monotone map `ω`:
    /// objects by `ω`, subsets by image. Returns the object map and the
    /// per-pair simplicial maps, indexed like the source cube.
    pub fn cosimplicial_map(
        source: &CoherentCube,
        target: &CoherentCube,
        omega: &[usize],
    ) -> CubeFunctor {
        assert_eq!(omega.len(), source.n + 1);
        assert!(omega.windows(2).all(|w| w[0] <= w[1]), "ω must be monotone");
        assert!(omega.iter().all(|&v| v <= target.n));
        let dim = source.dim.min(target.dim);
        let mut hom = Vec::with_capacity(source.n + 1);
        for i in 0..=source.n {
            let mut row = Vec::with_capacity(source.n + 1);
            for j in 0..=source.n {
                if i > j {
                    row.push(SimplicialMap {
                        levels: vec![vec![]; dim + 1],
                    });
                    continue;
                }
                let (ti, tj) = (omega[i], omega[j]);
                let image_of = |mask: Mask| -> Mask {
                    let mut out: Mask = 0;
                    for bit in 0..=source.n {
                        if (mask >> bit) & 1 == 1 {
                            out |= 1 << omega[bit];
                        }
                    }
                    out
                };
                let levels = (0..=dim)
                    .map(|k| {
                        source.chains[i][j][k]
                            .iter()
                            .map(|chain| {
                                let image_chain: Vec<usize> = chain
                                    .iter()
                                    .map(|&s| {
                                        let mask = image_of(source.posets[i][j][s]);
                                        target.posets[ti][tj]
                                            .iter()
                                            .position(|&m| m == mask)
                                            .expect("images keep their endpoints")
                                    })
                                    .collect();
                                target.chain_index[ti][tj][k][&image_chain]
                            })
                            .collect()
                    })
                    .collect();
                row.push(SimplicialMap { levels });
            }
            hom.push(row);
        }
        CubeFunctor {
            obj: omega.to_vec(),
            hom,
        }
    }
}

/// A functor between coherent cubes, stored as an object map and per-pair
/// simplicial maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeFunctor {
    pub obj: Vec<usize>,
    pub hom: Vec<Vec<SimplicialMap>>,
}
