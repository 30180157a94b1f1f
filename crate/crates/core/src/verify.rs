//! The end-to-end verification suite run by `cutsets verify-paper`.
//!
//! Each criterion is an exhaustive or seeded-random check with a fixed time
//! budget; a criterion passes only if every check holds and it finishes
//! within budget.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    extract_antichain, extract_chain, is_cutset, is_minimal_cutset, is_nontrivial,
    largest_antichain_in_family, longest_chain_in_family,
};
use crate::constructions::{
    block_antichain, dense_subset, is_intersection_closed, lower_set, ordinal_chain,
    separating_pair_cutset, separator_count, tree_chain_family, BlockPartition, TreeUniverse,
};
use crate::error::{capacity, Result};
use crate::lattice::{enumerate_maximal_chains, Chain, Family, GroundSize, SubsetMask};
use crate::oracle::{
    count_cutsets_by_inclusion_exclusion, is_cutset_by_chains, largest_antichain_size_by_subsets,
    longest_chain_size_by_subsets,
};
use crate::survey::{census, dsw_check, MAX_SURVEY_GROUND};

pub const SEED: u64 = 0x00C7_5E75;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    /// All checks held (ignoring time).
    pub correct: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.correct && self.elapsed <= self.budget
    }
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] criterion {} {}: {} ({:.3} s, budget {} s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )
    }
}

/// Outcome of a criterion body: `Err` carries the first failing check.
type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(
    id: usize,
    name: &'static str,
    budget_secs: u64,
    body: impl FnOnce() -> Check,
) -> CriterionResult {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (correct, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult {
        id,
        name,
        correct,
        detail,
        elapsed,
        budget: Duration::from_secs(budget_secs),
    }
}

fn g(n: usize) -> GroundSize {
    GroundSize::new(n).expect("small ground")
}

fn e2s(e: crate::Error) -> String {
    e.to_string()
}

/// Ordinal chains are saturated maximal chains through their set.
pub fn ordinal_chain_suite() -> CriterionResult {
    timed(1, "ordinal-chain", 1, || {
        let mut cases = 0;
        for n in 0..=5 {
            for a in g(n).subsets() {
                let c = ordinal_chain(a);
                ensure(c.is_saturated_maximal() && c.len() == n + 1, || {
                    format!("chain for {a} over n={n} is not saturated: {c:?}")
                })?;
                ensure(c.contains(a), || format!("chain for {a} misses it"))?;
                let extendable = g(n)
                    .subsets()
                    .filter(|t| !c.contains(*t))
                    .find(|t| c.sets().iter().all(|s| s.is_comparable(*t)));
                ensure(extendable.is_none(), || {
                    format!(
                        "chain for {a} over n={n} extends by {}",
                        extendable.unwrap()
                    )
                })?;
                cases += 1;
            }
        }
        Ok(format!("{cases} sets over n<=5"))
    })
}

/// The two-point cutset is non-trivial, a cutset, and minimal.
pub fn pair_cutset_suite() -> CriterionResult {
    timed(2, "pair-cutset", 5, || {
        let mut cases = 0;
        for n in 2..=5 {
            for x in 0..n {
                for y in (0..n).filter(|&y| y != x) {
                    let f = separating_pair_cutset(x, y, g(n)).map_err(e2s)?;
                    let tag = format!("(x={x}, y={y}, n={n})");
                    ensure(is_nontrivial(&f), || format!("{tag} is trivial"))?;
                    ensure(is_cutset_by_chains(&f).map_err(e2s)?, || {
                        format!("{tag} misses a maximal chain")
                    })?;
                    ensure(is_cutset(&f).map_err(e2s)?, || {
                        format!("{tag}: reachability disagrees")
                    })?;
                    ensure(is_minimal_cutset(&f).map_err(e2s)?, || {
                        format!("{tag} not minimal")
                    })?;
                    for &m in &f {
                        ensure(!is_cutset_by_chains(&f.without(m)).map_err(e2s)?, || {
                            format!("{tag} stays a cutset without {m}")
                        })?;
                    }
                    cases += 1;
                }
            }
        }
        Ok(format!(
            "{cases} pairs over n in 2..=5, brute-force confirmed"
        ))
    })
}

/// Random family over `P(n)` with each subset present with probability 1/2.
fn random_family(rng: &mut impl Rng, n: GroundSize) -> Family {
    let code: u64 = rng.gen::<u64>() & ((1u64 << (1 << n.get())) - 1);
    crate::survey::family_from_code(n, code)
}

/// Reachability agrees with chain enumeration.
pub fn cutset_oracle_suite() -> CriterionResult {
    timed(3, "cutset-oracle", 10, || {
        let check = |f: &Family| -> std::result::Result<(), String> {
            let fast = is_cutset(f).map_err(e2s)?;
            let slow = is_cutset_by_chains(f).map_err(e2s)?;
            ensure(fast == slow, || {
                format!("disagreement on {f:?}: dp={fast}, brute={slow}")
            })
        };
        for code in 0u64..256 {
            check(&crate::survey::family_from_code(g(3), code))?;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for n in [4, 5] {
            for _ in 0..10_000 {
                check(&random_family(&mut rng, g(n)))?;
            }
        }
        Ok("256 families at n=3, 10000 each at n=4,5; 0 disagreements".into())
    })
}

/// Every non-trivial cutset contains a maximal antichain.
pub fn maximal_antichain_suite(max_n: usize) -> Result<CriterionResult> {
    capacity("survey ground size", max_n, MAX_SURVEY_GROUND)?;
    Ok(timed(4, "maximal-antichain-census", 60, || {
        let r2 = census(g(2), false).map_err(e2s)?;
        let ie = count_cutsets_by_inclusion_exclusion(g(2)).map_err(e2s)?;
        ensure(r2.cutsets == 13 && ie == 13, || {
            format!(
                "n=2 cutsets: census {} / inclusion-exclusion {ie}, expected 13",
                r2.cutsets
            )
        })?;
        ensure(r2.nontrivial_cutsets == 1, || {
            format!(
                "n=2 non-trivial cutsets: {}, expected 1",
                r2.nontrivial_cutsets
            )
        })?;
        for n in 0..=max_n {
            ensure(dsw_check(g(n)).map_err(e2s)?, || {
                format!("failure at n={n}")
            })?;
        }
        Ok(format!(
            "n=2: 13 cutsets, 1 non-trivial; no failures for n<={max_n}"
        ))
    }))
}

/// Block antichains have the right size and separation.
pub fn block_antichain_suite() -> CriterionResult {
    timed(5, "block-antichain", 1, || {
        for p in 1..=3 {
            for q in 1..=3 {
                for s in 1..=2 {
                    let part = BlockPartition::new(p, q, s).map_err(e2s)?;
                    let fam = block_antichain(&part);
                    let tag = format!("(p={p}, q={q}, s={s})");
                    ensure(fam.len() == q.pow(p as u32), || {
                        format!("{tag}: {} members", fam.len())
                    })?;
                    ensure(fam.is_antichain(), || format!("{tag}: not an antichain"))?;
                    for &a in &fam {
                        for &b in fam.iter().filter(|&&b| b != a) {
                            ensure(a.difference(b).len() >= s, || {
                                format!("{tag}: |{a} − {b}| < {s}")
                            })?;
                        }
                    }
                }
            }
        }
        Ok("p,q<=3, s<=2".into())
    })
}

/// Tree order axioms, monotone lower sets, separator law, chain length.
pub fn tree_order_suite() -> CriterionResult {
    timed(6, "tree-order", 2, || {
        for k in 1..=3 {
            for depth in 0..=3 {
                let u = TreeUniverse::new(k, depth).map_err(e2s)?;
                let elems = u.elements();
                for a in &elems {
                    for b in &elems {
                        let ab = a.cmp(b);
                        ensure(ab == b.cmp(a).reverse(), || {
                            format!("antisymmetry fails for {a}, {b}")
                        })?;
                        ensure((ab == Ordering::Equal) == (a == b), || {
                            format!("equality fails for {a}, {b}")
                        })?;
                        for c in &elems {
                            if ab == Ordering::Less && b < c {
                                ensure(a < c, || {
                                    format!("transitivity fails for {a} < {b} < {c}")
                                })?;
                            }
                        }
                    }
                }
                if depth == 0 {
                    continue;
                }
                let partials = u.partials();
                let leaves = u.leaves();
                for f1 in &leaves {
                    for f2 in leaves.iter().filter(|f2| f1 < *f2) {
                        let c1 = lower_set(&partials, f1).map_err(e2s)?;
                        let c2 = lower_set(&partials, f2).map_err(e2s)?;
                        ensure(c1.is_subset(c2), || {
                            format!("lower sets not monotone at {f1} < {f2}")
                        })?;
                        let count = separator_count(&u, f1, f2).map_err(e2s)?;
                        let agree = f1.digits()[..depth - 1] == f2.digits()[..depth - 1];
                        ensure((count == 0) == agree, || {
                            format!("separator law fails for {f1}, {f2}: count {count}")
                        })?;
                    }
                }
                if k >= 2 {
                    let tc = tree_chain_family(k, depth).map_err(e2s)?;
                    ensure(tc.chain.len() == k.pow(depth as u32 - 1), || {
                        format!(
                            "k={k}, depth={depth}: {} distinct lower sets",
                            tc.chain.len()
                        )
                    })?;
                }
            }
        }
        Ok("k<=3, depth<=3".into())
    })
}

/// The chain and antichain extraction pipeline on its reference inputs.
pub fn extraction_suite() -> CriterionResult {
    timed(7, "extraction", 1, || {
        let n3 = g(3);
        let c3 = separating_pair_cutset(0, 1, n3).map_err(e2s)?;
        let through = ordinal_chain(SubsetMask::from_elements(n3, [2]).map_err(e2s)?);
        let source = Chain::new(n3, through.sets()[..3].to_vec()).map_err(e2s)?;
        let got = extract_chain(&c3, &source).map_err(e2s)?;
        let want = Chain::new(
            n3,
            vec![
                SubsetMask::new(0b001, n3).unwrap(),
                SubsetMask::new(0b101, n3).unwrap(),
            ],
        )
        .map_err(e2s)?;
        ensure(got.chain == want, || {
            format!("chain extraction gave {:?}", got.chain)
        })?;

        let n4 = g(4);
        let c4 = separating_pair_cutset(0, 1, n4).map_err(e2s)?;
        let blocks = block_antichain(&BlockPartition::new(2, 2, 1).map_err(e2s)?);
        let got = extract_antichain(&c4, &blocks).map_err(e2s)?;
        ensure(got.antichain == blocks, || {
            format!("antichain extraction gave {:?}", got.antichain)
        })?;
        Ok("chain {0} < {0,2}; antichain = source (4 sets)".into())
    })
}

/// Smallest-containing-member maps of maximal chains.
pub fn dense_subset_suite() -> CriterionResult {
    timed(8, "dense-subset", 5, || {
        let mut chains = 0;
        for n in 0..=5 {
            for m in enumerate_maximal_chains(g(n)).map_err(e2s)? {
                let mut image = dense_subset(&m);
                ensure(image.len() == n, || {
                    format!("{m:?}: image has {} sets", image.len())
                })?;
                image.sort_by_key(|s| s.len());
                let without_empty: Vec<SubsetMask> = m.sets().skip(1).collect();
                ensure(image == without_empty, || {
                    format!("{m:?}: image differs from chain")
                })?;
                let sets: Vec<SubsetMask> = m.sets().collect();
                ensure(is_intersection_closed(&sets), || {
                    format!("{m:?} not intersection-closed")
                })?;
                chains += 1;
            }
        }
        Ok(format!("{chains} maximal chains over n<=5"))
    })
}

/// Random family over `P(n)`, `n <= 6`, with at most `max_len` members.
fn random_small_family(rng: &mut impl Rng, max_len: usize) -> Family {
    let n = g(rng.gen_range(0..=6));
    let space = 1usize << n.get();
    let len = rng.gen_range(0..=max_len.min(space));
    let picks = sample(rng, space, len);
    Family::from_bits(n, picks.iter().map(|i| i as u64)).expect("in range")
}

/// Matching-based width and longest-path height agree with subset search.
pub fn width_height_suite() -> CriterionResult {
    timed(9, "dilworth-mirsky", 30, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
        for _ in 0..500 {
            let f = random_small_family(&mut rng, 15);
            let anti = largest_antichain_in_family(&f).map_err(e2s)?;
            let chain = longest_chain_in_family(&f).map_err(e2s)?;
            let want_anti = largest_antichain_size_by_subsets(&f).map_err(e2s)?;
            let want_chain = longest_chain_size_by_subsets(&f).map_err(e2s)?;
            ensure(
                anti.len() == want_anti && anti.is_antichain() && anti.is_subfamily_of(&f),
                || format!("antichain {anti:?} vs size {want_anti} for {f:?}"),
            )?;
            ensure(
                chain.len() == want_chain && chain.sets().iter().all(|s| f.contains(*s)),
                || format!("chain {chain:?} vs length {want_chain} for {f:?}"),
            )?;
        }
        Ok("500 random families, 0 disagreements".into())
    })
}

/// Runs all nine criteria. `max_survey_n` bounds the census criterion.
pub fn run_suite(max_survey_n: usize) -> Result<Vec<CriterionResult>> {
    Ok(vec![
        ordinal_chain_suite(),
        pair_cutset_suite(),
        cutset_oracle_suite(),
        maximal_antichain_suite(max_survey_n)?,
        block_antichain_suite(),
        tree_order_suite(),
        extraction_suite(),
        dense_subset_suite(),
        width_height_suite(),
    ])
}
