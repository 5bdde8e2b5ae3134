//! Instance generators.
//!
//! Random instances are reproducible across platforms and across independent
//! implementations: the generator is PCG XSL RR 128/64 (`Pcg64`) started from
//! `state = seed`, `stream = PCG_DEFAULT_STREAM`; bounded integers come from
//! rejection sampling on `next_u64`; the edge set is an m-subset of the
//! lexicographic ranks `0..C(n, s)` drawn with Floyd's algorithm.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand_core::Rng;
use rand_pcg::Pcg64;

use crate::error::Error;
use crate::hypergraph::Hypergraph;

/// Increment constant used by `rand_pcg` for its default stream.
pub const PCG_DEFAULT_STREAM: u128 = 0x0a02_bdbf_7bb3_c0a7_ac28_fa16_a64a_bf96;

/// `C(n, k)`, `None` on u128 overflow.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

pub fn pcg(seed: u64) -> Pcg64 {
    Pcg64::new(u128::from(seed), PCG_DEFAULT_STREAM)
}

/// Generator for the `stream`-th member of a seeded family (`state = seed`,
/// PCG stream selector `stream`).
pub fn pcg_stream(seed: u64, stream: u64) -> Pcg64 {
    Pcg64::new(u128::from(seed), u128::from(stream))
}

/// Uniform integer in `0..bound` by rejection sampling. `bound` must be positive.
pub fn below<R: Rng + ?Sized>(rng: &mut R, bound: u64) -> u64 {
    assert!(bound > 0, "empty range");
    // Largest multiple of `bound` that fits; draws at or above it are rejected.
    let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
    loop {
        let x = rng.next_u64();
        if x <= zone {
            return x % bound;
        }
    }
}

/// Uniform integer in `lo..=hi`.
pub fn in_range<R: Rng + ?Sized>(rng: &mut R, lo: u64, hi: u64) -> u64 {
    assert!(lo <= hi);
    if hi - lo == u64::MAX {
        return rng.next_u64();
    }
    lo + below(rng, hi - lo + 1)
}

/// The complete s-uniform hypergraph: every s-subset of `0..n` is an edge.
pub fn gen_complete(n: usize, s: usize) -> Result<Hypergraph, Error> {
    if s < 2 {
        return Err(Error::Uniformity(s));
    }
    if s > n {
        return Err(Error::UniformityExceedsOrder { n, s });
    }
    let mut edges = Vec::new();
    let mut comb: Vec<usize> = (0..s).collect();
    loop {
        edges.push(comb.clone());
        // Advance to the next combination in lexicographic order.
        let Some(i) = (0..s).rev().find(|&i| comb[i] < n - s + i) else {
            break;
        };
        comb[i] += 1;
        for j in i + 1..s {
            comb[j] = comb[j - 1] + 1;
        }
    }
    Ok(Hypergraph::from_sorted_edges(n, s, edges))
}

/// The s-subset of `0..n` with lexicographic rank `rank`.
pub fn unrank_combination(n: usize, s: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(s);
    let mut next = 0;
    for slot in 0..s {
        let remaining = s - slot - 1;
        let mut c = next;
        loop {
            let count = binomial(n - c - 1, remaining).expect("rank space checked by caller");
            if rank < count {
                break;
            }
            rank -= count;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    out
}

/// `m` distinct s-subsets of `0..n`, uniformly without replacement.
pub fn gen_random_uniform(n: usize, m: u64, s: usize, seed: u64) -> Result<Hypergraph, Error> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if s < 2 {
        return Err(Error::Uniformity(s));
    }
    if s > n {
        return Err(Error::UniformityExceedsOrder { n, s });
    }
    let total = binomial(n, s).ok_or(Error::IndexSpaceTooLarge { n, s })?;
    if u128::from(m) > total {
        return Err(Error::TooManyEdges {
            n,
            s,
            m,
            available: total,
        });
    }
    let total = u64::try_from(total).map_err(|_| Error::IndexSpaceTooLarge { n, s })?;
    let mut rng = pcg(seed);
    let mut chosen = BTreeSet::new();
    for j in total - m..total {
        let t = below(&mut rng, j + 1);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    // Ranks ascend, so the edges come out in lexicographic order.
    let edges = chosen
        .into_iter()
        .map(|r| unrank_combination(n, s, u128::from(r)))
        .collect();
    Ok(Hypergraph::from_sorted_edges(n, s, edges))
}
