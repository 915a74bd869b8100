use serde::{Deserialize, Serialize};

use rayon::prelude::*;

use crate::error::Error;
use crate::partition::Partition;
use crate::perm::{
    block_action, group_order_small, is_transitive, pair_block_system, standard_regular, AcceptAll,
    BlockSystem, InvolutionTree, Permutation, DEFAULT_ORDER_CAP,
};
use crate::search::case::{CaseId, SearchCase};
use crate::search::complete::{assemble, completion_pairs, OrbitMerger};
use crate::search::graph::GraphFilter;

/// A canonical `g1` with a transitive completion, and what the group looks like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub case: CaseId,
    pub g1: Permutation,
    pub g2: Permutation,
    pub g3: Permutation,
    pub g4: Permutation,
    pub g5: Permutation,
    pub product_type: Partition,
    /// A system of pairs preserved by `<g1, g2, g3, g4>`, if one exists.
    pub blocks: Option<BlockSystem>,
    /// Order of the group induced on the pairs by `g1, g2, g3`.
    pub block_action_order: Option<usize>,
    /// Number of transitive `(g3, g4, g5)` for this `g1`; the first is shown.
    pub transitive_completions: usize,
    /// Whether `<g1, g2>` alone is transitive.
    pub g1_g2_transitive: bool,
}

/// JSON form: permutations in 1-based cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub case: CaseId,
    pub g1: String,
    pub g2: String,
    pub g3: String,
    pub g4: String,
    pub g5: String,
    pub product_type: Partition,
    pub blocks: Option<BlockSystem>,
    pub block_action_order: Option<usize>,
    pub transitive: bool,
    #[serde(default)]
    pub g1_g2_transitive: bool,
}

impl Solution {
    pub fn generators(&self) -> [&Permutation; 5] {
        [&self.g1, &self.g2, &self.g3, &self.g4, &self.g5]
    }

    pub fn to_record(&self) -> SolutionRecord {
        SolutionRecord {
            case: self.case,
            g1: self.g1.to_string(),
            g2: self.g2.to_string(),
            g3: self.g3.to_string(),
            g4: self.g4.to_string(),
            g5: self.g5.to_string(),
            product_type: self.product_type.clone(),
            blocks: self.blocks.clone(),
            block_action_order: self.block_action_order,
            transitive: true,
            g1_g2_transitive: self.g1_g2_transitive,
        }
    }
}

/// What a search visited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Complete involutions reached.
    pub leaves: u64,
    /// Leaves whose product type is allowed.
    pub allowed_leaves: u64,
    /// Prefixes cut by the component test.
    pub pruned: u64,
    /// `(g3, g4, g5)` found, transitive or not.
    pub completions: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.leaves += o.leaves;
        self.allowed_leaves += o.allowed_leaves;
        self.pruned += o.pruned;
        self.completions += o.completions;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub workers: usize,
    /// Disable the component test (every canonical involution reaches the
    /// product-type check).
    pub prune: bool,
    /// Depth of the prefixes handed to workers.
    pub split_depth: usize,
    /// Keep only `g1` for which `<g1, g2>` is already transitive.
    pub g1_g2_transitive_only: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            workers: 1,
            prune: true,
            split_depth: 2,
            g1_g2_transitive_only: false,
        }
    }
}

/// Builds the record for a leaf, or `None` if no completion is transitive.
fn solve_leaf(
    case: &SearchCase,
    g2: &Permutation,
    pairs: &[(usize, usize)],
    g1_g2_transitive_only: bool,
    stats: &mut SearchStats,
) -> Result<Option<Solution>, Error> {
    let n = case.degree;
    let g1 = Permutation::from_pairs(n, pairs)?;
    let p = g1.product(g2)?;
    let product_type = p.cycle_type();
    if !case.allowed_product_types.contains(&product_type) {
        return Ok(None);
    }
    stats.allowed_leaves += 1;
    let completions = completion_pairs(p.images(), &case.g3_type);
    stats.completions += completions.len() as u64;
    if completions.is_empty() {
        return Ok(None);
    }
    let merger = OrbitMerger::new(g1.images(), g2.images());
    let g1_g2_transitive = merger.orbit_count() == 1;
    if g1_g2_transitive_only && !g1_g2_transitive {
        return Ok(None);
    }
    // g4 = g5 would make g1 g2 g3 = 1; such tuples are not counted.
    let mut transitive = completions
        .iter()
        .filter(|&&(g5, g4)| g5 != g4 && merger.transitive_with(g5, g4));
    let Some(&(t5, t4)) = transitive.next() else {
        return Ok(None);
    };
    let count = 1 + transitive.count();
    let (g3, g4, g5) = assemble(&p, t5, t4);
    let gens = [g1.clone(), g2.clone(), g3.clone(), g4.clone()];
    let blocks = pair_block_system(&gens)?;
    let block_action_order = match &blocks {
        Some(bs) => group_order_small(&block_action(&gens[..3], bs)?, DEFAULT_ORDER_CAP)?,
        None => None,
    };
    Ok(Some(Solution {
        case: case.id,
        g1,
        g2: g2.clone(),
        g3,
        g4,
        g5,
        product_type,
        blocks,
        block_action_order,
        transitive_completions: count,
        g1_g2_transitive,
    }))
}

fn walk_prefix(
    case: &SearchCase,
    g2: &Permutation,
    prefix: &[(usize, usize)],
    opts: &RunOptions,
) -> Result<(Vec<Solution>, SearchStats), Error> {
    let mut tree = InvolutionTree::new(case.degree);
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    let mut err = None;
    let mut emit = |pairs: &[(usize, usize)]| {
        stats.leaves += 1;
        if err.is_some() {
            return;
        }
        match solve_leaf(case, g2, pairs, opts.g1_g2_transitive_only, &mut stats) {
            Ok(Some(s)) => found.push(s),
            Ok(None) => {}
            Err(e) => err = Some(e),
        }
    };
    if opts.prune {
        let mut filter = GraphFilter::new(g2, &case.allowed_product_types)
            .ok_or_else(|| Error::InvalidArgument("degree too large for the component filter".into()))?;
        if tree.replay(prefix, &mut filter) {
            tree.walk(&mut filter, &mut emit);
        }
        stats.pruned += filter.rejected;
    } else {
        tree.replay(prefix, &mut AcceptAll);
        tree.walk(&mut AcceptAll, &mut emit);
    }
    match err {
        Some(e) => Err(e),
        None => Ok((found, stats)),
    }
}

/// Enumerates the canonical `g1` of the case that admit a transitive
/// completion, sorted by their pair sequence.
pub fn run_case(id: CaseId, opts: RunOptions) -> Result<(Vec<Solution>, SearchStats), Error> {
    if opts.workers == 0 {
        return Err(Error::InvalidArgument("workers must be positive".into()));
    }
    let case = SearchCase::new(id);
    let g2 = standard_regular(case.degree, 3);
    let mut split_stats = SearchStats::default();
    let prefixes = {
        let mut tree = InvolutionTree::new(case.degree);
        if opts.prune {
            let mut filter = GraphFilter::new(&g2, &case.allowed_product_types)
                .ok_or_else(|| Error::InvalidArgument("degree too large for the component filter".into()))?;
            let ps = tree.prefixes(opts.split_depth, &mut filter);
            split_stats.pruned = filter.rejected;
            ps
        } else {
            tree.prefixes(opts.split_depth, &mut AcceptAll)
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let parts: Vec<Result<(Vec<Solution>, SearchStats), Error>> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| walk_prefix(&case, &g2, prefix, &opts))
            .collect()
    });
    let mut solutions = Vec::new();
    let mut stats = split_stats;
    for part in parts {
        let (s, st) = part?;
        solutions.extend(s);
        stats += st;
    }
    solutions.sort_by_key(|s| s.g1.pairs());
    Ok((solutions, stats))
}

/// One failed check in [`verify_solution`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub case: CaseId,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Re-checks a record from scratch: cycle types, the product identity,
/// transitivity, the pair system and the group it induces.
pub fn verify_solution(record: &SolutionRecord) -> Result<VerificationReport, Error> {
    let case = SearchCase::new(record.case);
    let n = case.degree;
    let parse = |s: &str| Permutation::parse_cycles(n, s);
    let (g1, g2, g3, g4, g5) = (
        parse(&record.g1)?,
        parse(&record.g2)?,
        parse(&record.g3)?,
        parse(&record.g4)?,
        parse(&record.g5)?,
    );
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    check(g1.cycle_type() == case.g1_type, "g1 type");
    check(g2.cycle_type() == case.g2_type, "g2 type");
    check(g3.cycle_type() == case.g3_type, "g3 type");
    check(g4.cycle_type() == case.tail_type, "g4 type");
    check(g5.cycle_type() == case.tail_type, "g5 type");
    let p = g1.product(&g2)?;
    check(p.cycle_type() == record.product_type, "product type matches record");
    check(case.allowed_product_types.contains(&p.cycle_type()), "product type allowed");
    let g123 = p.product(&g3)?;
    check(g123.product(&g4)? == g5, "g1 g2 g3 g4 = g5");
    let gens = [g1.clone(), g2.clone(), g3.clone(), g4.clone()];
    let transitive = is_transitive(&gens)?;
    check(transitive && record.transitive, "transitive");
    check(g4 != g5, "g4 differs from g5");
    let g1_g2_transitive = is_transitive(&gens[..2])?;
    check(g1_g2_transitive == record.g1_g2_transitive, "<g1, g2> transitivity matches record");
    match &record.blocks {
        None => check(false, "pair system present"),
        Some(bs) => {
            check(bs.degree() == n && bs.block_size() == 2, "pairs cover all points");
            check(gens.iter().all(|g| bs.preserved_by(g)), "pairs preserved");
            check(bs.fixes_every_block(&g4), "g4 fixes every pair");
            check(bs.fixes_every_block(&g123), "g1 g2 g3 fixes every pair");
            if gens.iter().all(|g| bs.preserved_by(g)) {
                let act = block_action(&gens[..3], bs)?;
                let prod = Permutation::product_all(act.iter())?;
                check(prod.is_identity(), "induced g1 g2 g3 = 1");
                let order = group_order_small(&act, DEFAULT_ORDER_CAP)?;
                check(order == record.block_action_order, "block action order matches record");
                check(order == Some(bs.num_blocks()), "induced group regular");
                check(is_transitive(&act)?, "induced group transitive");
                check(order == Some(record.case.expected_block_order()), "induced order for the case");
            }
        }
    }
    Ok(VerificationReport {
        case: record.case,
        failures,
    })
}
