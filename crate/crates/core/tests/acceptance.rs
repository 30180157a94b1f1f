//! Acceptance criteria. Each test prints one PASS/FAIL line and checks the
//! library against oracles written here, independent of the library's own
//! brute-force module.
//!
//! The lines go straight to the stderr handle, so they show up even when the
//! harness captures output: `cargo test -p cutsets --test acceptance`.

use std::io::Write;
use std::time::{Duration, Instant};

use cutsets::analysis::{
    extract_antichain, extract_chain, is_cutset, is_minimal_cutset, is_nontrivial,
    largest_antichain_in_family, longest_chain_in_family,
};
use cutsets::constructions::{
    block_antichain, dense_subset, lower_set, ordinal_chain, separating_pair_cutset,
    separator_count, tree_chain_family, BlockPartition, TreeUniverse,
};
use cutsets::survey::{census, dsw_check};
use cutsets::{enumerate_maximal_chains, Chain, Family, GroundSize, SubsetMask};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn run(id: usize, name: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let (ok, detail) = match &outcome {
        Ok(d) => (in_time, d.clone()),
        Err(d) => (false, d.clone()),
    };
    let _ = writeln!(
        std::io::stderr(),
        "[{}] criterion {id} {name}: {detail} ({:.3} s, budget {:.0} s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(outcome.is_ok(), "criterion {id} failed: {detail}");
    assert!(
        in_time,
        "criterion {id} exceeded {budget:?}: took {elapsed:?}"
    );
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(n: usize) -> GroundSize {
    GroundSize::new(n).unwrap()
}

fn bits_of(f: &Family) -> Vec<u64> {
    f.iter().map(|m| m.bits()).collect()
}

// ---------------------------------------------------------------------------
// Test-local oracles
// ---------------------------------------------------------------------------

/// All maximal chains of P(n) as lists of bit patterns, via recursive
/// extension from the empty set.
fn all_chains(n: usize) -> Vec<Vec<u64>> {
    fn extend(n: usize, path: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let last = *path.last().unwrap();
        if last.count_ones() as usize == n {
            out.push(path.clone());
            return;
        }
        for x in 0..n {
            if last >> x & 1 == 0 {
                path.push(last | 1 << x);
                extend(n, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut vec![0], &mut out);
    out
}

fn meets_all(chains: &[Vec<u64>], members: &[u64]) -> bool {
    chains.iter().all(|c| c.iter().any(|s| members.contains(s)))
}

fn comparable(a: u64, b: u64) -> bool {
    a & b == a || a & b == b
}

/// Largest antichain and longest chain sizes by scanning every subfamily.
fn subfamily_extremes(members: &[u64]) -> (usize, usize) {
    let k = members.len();
    let mut anti = 0;
    let mut chain = 0;
    for pick in 0u32..(1 << k) {
        let chosen: Vec<u64> = (0..k)
            .filter(|i| pick >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        let pairs = chosen
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| chosen[i + 1..].iter().map(move |&b| (a, b)));
        let (mut all_comp, mut none_comp) = (true, true);
        for (a, b) in pairs {
            if comparable(a, b) {
                none_comp = false;
            } else {
                all_comp = false;
            }
        }
        if none_comp {
            anti = anti.max(chosen.len());
        }
        if all_comp {
            chain = chain.max(chosen.len());
        }
    }
    (anti, chain)
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_ordinal_chain() {
    run(1, "ordinal-chain", Duration::from_secs(1), || {
        let mut cases = 0;
        for n in 0..=5 {
            let full = (1u64 << n) - 1;
            for a in 0..=full {
                let set = SubsetMask::new(a, g(n)).unwrap();
                let c = ordinal_chain(set);
                let sets: Vec<u64> = c.sets().iter().map(|s| s.bits()).collect();
                check(sets.len() == n + 1, || {
                    format!("n={n}, A={a:#b}: {} sets", sets.len())
                })?;
                check(sets[0] == 0 && *sets.last().unwrap() == full, || {
                    format!("n={n}, A={a:#b}: endpoints {sets:?}")
                })?;
                check(
                    sets.windows(2)
                        .all(|w| w[0] & w[1] == w[0] && w[1].count_ones() == w[0].count_ones() + 1),
                    || format!("n={n}, A={a:#b}: not saturated {sets:?}"),
                )?;
                check(sets.contains(&a), || {
                    format!("n={n}: chain misses A={a:#b}")
                })?;
                for t in (0..=full).filter(|t| !sets.contains(t)) {
                    check(!sets.iter().all(|&s| comparable(s, t)), || {
                        format!("n={n}, A={a:#b}: {t:#b} is comparable to the whole chain")
                    })?;
                }
                cases += 1;
            }
        }
        check(cases == 1 + 2 + 4 + 8 + 16 + 32, || {
            format!("{cases} cases")
        })?;
        Ok(format!("{cases} sets over n<=5"))
    });
}

#[test]
fn criterion_2_pair_cutset() {
    run(2, "pair-cutset", Duration::from_secs(5), || {
        let mut pairs = 0;
        for n in 2..=5 {
            let chains = all_chains(n);
            check(chains.len() == (1..=n).product::<usize>(), || {
                format!("n={n}: chain count")
            })?;
            for x in 0..n {
                for y in (0..n).filter(|&y| y != x) {
                    let f = separating_pair_cutset(x, y, g(n)).unwrap();
                    let members = bits_of(&f);
                    let tag = format!("x={x}, y={y}, n={n}");
                    let expected: Vec<u64> = (0..1u64 << n)
                        .filter(|s| (s >> x & 1) + (s >> y & 1) == 1)
                        .collect();
                    check(members == expected, || format!("{tag}: wrong members"))?;
                    check(is_nontrivial(&f), || format!("{tag}: trivial"))?;
                    check(meets_all(&chains, &members), || {
                        format!("{tag}: brute force says not a cutset")
                    })?;
                    check(is_cutset(&f).unwrap(), || {
                        format!("{tag}: reachability says not a cutset")
                    })?;
                    check(is_minimal_cutset(&f).unwrap(), || {
                        format!("{tag}: not minimal")
                    })?;
                    for (i, s) in members.iter().enumerate() {
                        let mut rest = members.clone();
                        rest.remove(i);
                        check(!meets_all(&chains, &rest), || {
                            format!("{tag}: {s:#b} is redundant")
                        })?;
                    }
                    pairs += 1;
                }
            }
        }
        Ok(format!("{pairs} pairs, brute force over n! chains"))
    });
}

#[test]
fn criterion_3_cutset_oracle() {
    run(3, "cutset-oracle", Duration::from_secs(10), || {
        let mut disagreements = 0;
        let mut tally = |n: usize, code: u64, chains: &[Vec<u64>]| {
            let members: Vec<u64> = (0..1u64 << n).filter(|s| code >> s & 1 == 1).collect();
            let f = Family::from_bits(g(n), members.iter().copied()).unwrap();
            if is_cutset(&f).unwrap() != meets_all(chains, &members) {
                disagreements += 1;
            }
        };
        let c3 = all_chains(3);
        for code in 0u64..256 {
            tally(3, code, &c3);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
        for n in [4usize, 5] {
            let chains = all_chains(n);
            let mask = (1u64 << (1 << n)) - 1;
            for _ in 0..10_000 {
                tally(n, rng.gen::<u64>() & mask, &chains);
            }
        }
        check(disagreements == 0, || {
            format!("{disagreements} disagreements")
        })?;
        Ok("256 + 2 x 10000 families, 0 disagreements".into())
    });
}

#[test]
fn criterion_4_maximal_antichain_census() {
    run(
        4,
        "maximal-antichain-census",
        Duration::from_secs(60),
        || {
            // Inclusion–exclusion over the two maximal chains {∅,{0},X}, {∅,{1},X}
            // of P(2): families avoiding a chain avoid 3 of the 4 subsets.
            let ie = 16 - 2 - 2 + 1;
            let r = census(g(2), false).unwrap();
            check(r.cutsets == ie && ie == 13, || {
                format!("n=2 cutsets {}", r.cutsets)
            })?;
            check(r.nontrivial_cutsets == 1, || {
                format!("n=2 non-trivial {}", r.nontrivial_cutsets)
            })?;
            for n in 0..=4 {
                check(dsw_check(g(n)).unwrap(), || {
                    format!("a non-trivial cutset at n={n} has no maximal antichain")
                })?;
            }
            Ok("census(2): 13 cutsets, 1 non-trivial; dsw_check true for n=0..4".into())
        },
    );
}

#[test]
fn criterion_5_block_antichain() {
    run(5, "block-antichain", Duration::from_secs(1), || {
        for p in 1..=3usize {
            for q in 1..=3usize {
                for s in 1..=2usize {
                    let part = BlockPartition::new(p, q, s).unwrap();
                    let members = bits_of(&block_antichain(&part));
                    let tag = format!("p={p}, q={q}, s={s}");
                    check(members.len() == q.pow(p as u32), || {
                        format!("{tag}: {} members", members.len())
                    })?;
                    for &a in &members {
                        check(a.count_ones() as usize == p * s, || {
                            format!("{tag}: member size")
                        })?;
                        for &b in members.iter().filter(|&&b| b != a) {
                            check(!comparable(a, b), || {
                                format!("{tag}: {a:#b} and {b:#b} comparable")
                            })?;
                            check((a & !b).count_ones() as usize >= s, || {
                                format!("{tag}: small difference")
                            })?;
                        }
                    }
                }
            }
        }
        Ok("p,q<=3, s<=2".into())
    });
}

#[test]
fn criterion_6_tree_order() {
    run(6, "tree-order", Duration::from_secs(2), || {
        for k in 1..=3usize {
            for depth in 0..=3usize {
                let u = TreeUniverse::new(k, depth).unwrap();
                let elems = u.elements();
                // Totality, antisymmetry, transitivity, plus agreement with
                // the standard sequence order (prefix first, then digits).
                for a in &elems {
                    for b in &elems {
                        check(a.cmp(b) == a.digits().cmp(b.digits()), || {
                            format!("{a} vs {b}")
                        })?;
                        let lt = a < b;
                        let gt = b < a;
                        let eq = a == b;
                        check([lt, gt, eq].iter().filter(|&&x| x).count() == 1, || {
                            format!("trichotomy fails for {a}, {b}")
                        })?;
                        for c in &elems {
                            if a < b && b < c {
                                check(a < c, || format!("transitivity {a} {b} {c}"))?;
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
                    for f2 in &leaves {
                        if f1 > f2 {
                            continue;
                        }
                        let c1 = lower_set(&partials, f1).unwrap();
                        let c2 = lower_set(&partials, f2).unwrap();
                        check(c1.is_subset(c2), || {
                            format!("lower sets of {f1} <= {f2} not nested")
                        })?;
                        if f1 == f2 {
                            continue;
                        }
                        let scan = partials.iter().filter(|d| f1 < *d && *d < f2).count();
                        let count = separator_count(&u, f1, f2).unwrap();
                        check(scan == count, || format!("separator count for {f1}, {f2}"))?;
                        let agree = f1.digits()[..depth - 1] == f2.digits()[..depth - 1];
                        check((count == 0) == agree, || {
                            format!("separator law for {f1}, {f2}")
                        })?;
                    }
                }
                if k >= 2 {
                    let tc = tree_chain_family(k, depth).unwrap();
                    let expected = k.pow(depth as u32 - 1);
                    check(tc.chain.len() == expected, || {
                        format!(
                            "k={k}, depth={depth}: {} distinct, expected {expected}",
                            tc.chain.len()
                        )
                    })?;
                    check(tc.collapsed + tc.chain.len() == leaves.len(), || {
                        "collapse count".into()
                    })?;
                }
            }
        }
        Ok("k<=3, depth<=3".into())
    });
}

#[test]
fn criterion_7_extraction() {
    run(7, "extraction", Duration::from_secs(1), || {
        let n3 = g(3);
        let cut3 = separating_pair_cutset(0, 1, n3).unwrap();
        let two = SubsetMask::from_elements(n3, [2]).unwrap();
        let truncated = Chain::new(n3, ordinal_chain(two).sets()[..3].to_vec()).unwrap();
        check(
            truncated
                .sets()
                .iter()
                .map(|s| s.bits())
                .collect::<Vec<_>>()
                == vec![0b000, 0b100, 0b101],
            || format!("truncated source {truncated:?}"),
        )?;
        let chain = extract_chain(&cut3, &truncated).unwrap().chain;
        let got: Vec<u64> = chain.sets().iter().map(|s| s.bits()).collect();
        check(got == vec![0b001, 0b101], || {
            format!("chain extraction gave {chain:?}")
        })?;

        let n4 = g(4);
        let cut4 = separating_pair_cutset(0, 1, n4).unwrap();
        let source = block_antichain(&BlockPartition::new(2, 2, 1).unwrap());
        check(
            bits_of(&source) == vec![0b0101, 0b0110, 0b1001, 0b1010],
            || "source".into(),
        )?;
        let anti = extract_antichain(&cut4, &source).unwrap().antichain;
        check(anti == source, || {
            format!("antichain extraction gave {anti:?}")
        })?;
        Ok("{0} < {0,2}; 4-set source returned unchanged".into())
    });
}

#[test]
fn criterion_8_dense_subset() {
    run(8, "dense-subset", Duration::from_secs(5), || {
        let mut count = 0;
        for n in 0..=5 {
            for m in enumerate_maximal_chains(g(n)).unwrap() {
                let sets: Vec<u64> = m.sets().map(|s| s.bits()).collect();
                let image: Vec<u64> = dense_subset(&m).iter().map(|s| s.bits()).collect();
                check(image.len() == n, || {
                    format!("{m:?}: image size {}", image.len())
                })?;
                for (x, &mx) in image.iter().enumerate() {
                    let smallest = sets
                        .iter()
                        .copied()
                        .filter(|s| s >> x & 1 == 1)
                        .min_by_key(|s| s.count_ones());
                    check(Some(mx) == smallest, || format!("{m:?}: M({x})"))?;
                }
                let mut sorted = image.clone();
                sorted.sort_by_key(|s| s.count_ones());
                check(sorted[..] == sets[1..], || {
                    format!("{m:?}: image is not the chain minus ∅")
                })?;
                for &a in &sets {
                    for &b in &sets {
                        check(sets.contains(&(a & b)), || {
                            format!("{m:?} not closed under ∩")
                        })?;
                    }
                }
                count += 1;
            }
        }
        check(count == 1 + 1 + 2 + 6 + 24 + 120, || {
            format!("{count} chains")
        })?;
        Ok(format!("{count} maximal chains over n<=5"))
    });
}

#[test]
fn criterion_9_dilworth_mirsky() {
    run(9, "dilworth-mirsky", Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let mut disagreements = Vec::new();
        for _ in 0..500 {
            let n = rng.gen_range(0..=6usize);
            let space = 1usize << n;
            let len = rng.gen_range(0..=15.min(space));
            let members: Vec<u64> = sample(&mut rng, space, len)
                .iter()
                .map(|i| i as u64)
                .collect();
            let f = Family::from_bits(g(n), members.iter().copied()).unwrap();
            let (want_anti, want_chain) = subfamily_extremes(&bits_of(&f));
            let anti = largest_antichain_in_family(&f).unwrap();
            let chain = longest_chain_in_family(&f).unwrap();
            let anti_ok =
                anti.len() == want_anti && anti.is_antichain() && anti.is_subfamily_of(&f);
            let chain_ok = chain.len() == want_chain && chain.sets().iter().all(|s| f.contains(*s));
            if !(anti_ok && chain_ok) {
                disagreements.push(format!("{f:?}"));
            }
        }
        check(disagreements.is_empty(), || {
            format!("disagreements: {disagreements:?}")
        })?;
        Ok("500 random families, 0 disagreements".into())
    });
}

#[test]
fn built_in_suite_passes() {
    for r in cutsets::verify::run_suite(4).unwrap() {
        let _ = writeln!(std::io::stderr(), "built-in {r}");
        assert!(r.passed(), "{r}");
    }
}
