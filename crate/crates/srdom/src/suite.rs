//! Batch checks binding the known gamma values and labelings to solver and
//! verifier evidence, with one machine-readable record per claim.
//!
//! Checks are deterministic: random corpora come from a seeded generator
//! recorded in the report, and the final record list is sorted by claim id
//! and instance. Claims whose exact confirmation would need optimizing
//! over graphs beyond solver reach are reported as skipped-scale rather
//! than silently weakened.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::families::{
    construct_c3_join_cycle, construct_fan, construct_friendship, construct_join_cycles_22,
    construct_join_cycles_23, construct_join_cycles_33, construct_join_cycles_weight4,
    construct_wheel, cycle_residue2_pattern, gamma_formula, Construction,
};
use crate::graph::{FamilySpec, Graph};
use crate::graph6::write_graph6;
use crate::records::format_labels;
use crate::solver::{enumerate_labelings, solve_exact, SolveOptions};
use crate::srdf::closed_sum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Confirmed,
    Refuted,
    SkippedScale,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Confirmed => "confirmed",
            CheckStatus::Refuted => "refuted",
            CheckStatus::SkippedScale => "skipped-scale",
        }
    }
}

/// Outcome of checking one claim on one instance (or one seeded batch).
#[derive(Debug, Clone)]
pub struct ClaimCheck {
    pub claim_id: String,
    pub instance: String,
    pub status: CheckStatus,
    pub evidence: String,
}

impl ClaimCheck {
    pub fn to_line(&self) -> String {
        format!(
            "record=claim id={} instance={} status={} evidence={}",
            self.claim_id,
            self.instance,
            self.status.as_str(),
            self.evidence
        )
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Seed for every random corpus in the suite.
    pub seed: u64,
    /// Largest graph order (or cycle length, for the exhaustive
    /// weight-one checks) attempted; larger instances are skipped-scale.
    pub max_order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1729,
            max_order: 16,
        }
    }
}

fn solve_gamma(g: &Graph) -> i32 {
    solve_exact(g, &SolveOptions::default())
        .expect("suite solves nonempty graphs")
        .gamma
}

fn confirm(claim_id: &str, instance: String, ok: bool, evidence: String) -> ClaimCheck {
    ClaimCheck {
        claim_id: claim_id.to_string(),
        instance,
        status: if ok {
            CheckStatus::Confirmed
        } else {
            CheckStatus::Refuted
        },
        evidence,
    }
}

fn skipped(claim_id: &str, instance: String, evidence: String) -> ClaimCheck {
    ClaimCheck {
        claim_id: claim_id.to_string(),
        instance,
        status: CheckStatus::SkippedScale,
        evidence,
    }
}

fn formula_claim_id(spec: &FamilySpec) -> &'static str {
    match spec {
        FamilySpec::Path { .. } => "path-gamma",
        FamilySpec::Cycle { .. } => "cycle-gamma",
        FamilySpec::Complete { .. } => "complete-gamma",
        FamilySpec::Empty { .. } => "empty-gamma",
        FamilySpec::MatchingCopies { .. } => "matching-gamma",
        FamilySpec::Wheel { .. } => "wheel-gamma",
        FamilySpec::Fan { .. } => "fan-gamma",
        FamilySpec::Friendship { .. } => "friendship-gamma",
        FamilySpec::JoinOfCycles { m: 3, .. } => "join-c3-gamma",
        FamilySpec::JoinOfCycles { .. } => "join-cycles-gamma",
    }
}

/// Compares solver output against the closed-form gamma for one family
/// member; skipped-scale above the configured order.
pub fn check_formula(spec: FamilySpec, cfg: &SuiteConfig) -> ClaimCheck {
    let claim_id = formula_claim_id(&spec);
    let instance = spec.to_string();
    if spec.order() > cfg.max_order {
        return skipped(claim_id, instance, format!("order={}", spec.order()));
    }
    let Some(expected) = gamma_formula(&spec) else {
        return skipped(claim_id, instance, "no-closed-form".to_string());
    };
    let g = spec.generate().expect("suite parameters are in range");
    let gamma = solve_gamma(&g);
    confirm(
        claim_id,
        instance,
        gamma == expected,
        format!("solver={gamma},formula={expected}"),
    )
}

/// Solver-vs-formula checks over every family with a known closed form.
pub fn check_formulas(cfg: &SuiteConfig) -> Vec<ClaimCheck> {
    let mut out = Vec::new();
    for n in 3..=13 {
        out.push(check_formula(FamilySpec::Cycle { n }, cfg));
    }
    for n in 1..=13 {
        out.push(check_formula(FamilySpec::Path { n }, cfg));
    }
    for n in 1..=9 {
        out.push(check_formula(FamilySpec::Complete { n }, cfg));
    }
    for n in 1..=8 {
        out.push(check_formula(FamilySpec::Empty { n }, cfg));
    }
    for n in 3..=12 {
        out.push(check_formula(FamilySpec::Wheel { n }, cfg));
    }
    for n in 1..=12 {
        out.push(check_formula(FamilySpec::Fan { n }, cfg));
    }
    for m in 1..=5 {
        out.push(check_formula(FamilySpec::Friendship { m }, cfg));
    }
    for n in [3, 6, 9, 12] {
        out.push(check_formula(FamilySpec::JoinOfCycles { m: 3, n }, cfg));
    }
    sort_checks(&mut out);
    out
}

fn construction_instance(
    claim_id: &str,
    instance: String,
    built: Result<Construction, crate::families::ConstructionError>,
    expected_weight: i32,
) -> ClaimCheck {
    match built {
        Ok(c) => confirm(
            claim_id,
            instance,
            c.claimed_weight == expected_weight,
            format!(
                "weight={},claimed={}",
                c.labeling.weight(),
                c.claimed_weight
            ),
        ),
        Err(err) => confirm(
            claim_id,
            instance,
            false,
            format!("error={}", err.to_string().replace(' ', "_")),
        ),
    }
}

/// Verifier-gated construction checks at scales beyond exact solving.
/// The construction itself is confirmed; the matching exact lower bounds
/// at 26+ vertices are reported skipped-scale.
pub fn check_constructions(cfg: &SuiteConfig) -> Vec<ClaimCheck> {
    let mut out = Vec::new();
    for m in 3..=40 {
        for n in 3..=40 {
            out.push(construction_instance(
                "join-cycles-upper-4",
                format!("m={m},n={n}"),
                construct_join_cycles_weight4(m, n),
                4,
            ));
        }
    }
    let residue2: Vec<usize> = (13..=98).filter(|v| v % 3 == 2).collect();
    let other: Vec<usize> = (13..=98).filter(|v| v % 3 != 2).collect();
    for &m in &residue2 {
        for &n in &residue2 {
            out.push(construction_instance(
                "join-cycles-2-2",
                format!("m={m},n={n}"),
                construct_join_cycles_22(m, n),
                2,
            ));
        }
    }
    for &m in &residue2 {
        for &n in &other {
            out.push(construction_instance(
                "join-cycles-2-x",
                format!("m={m},n={n}"),
                construct_join_cycles_23(m, n),
                3,
            ));
        }
    }
    for &m in &other {
        for &n in &other {
            out.push(construction_instance(
                "join-cycles-x-x",
                format!("m={m},n={n}"),
                construct_join_cycles_33(m, n),
                3,
            ));
        }
    }
    for n in (3..=99).filter(|n| n % 3 == 0) {
        out.push(construction_instance(
            "join-c3-construction",
            format!("n={n}"),
            construct_c3_join_cycle(n),
            1,
        ));
    }
    for n in 3..=500 {
        out.push(construction_instance(
            "wheel-construction",
            format!("n={n}"),
            construct_wheel(n),
            if n == 4 { 2 } else { 1 },
        ));
    }
    for n in 1..=500 {
        out.push(construction_instance(
            "fan-construction",
            format!("n={n}"),
            construct_fan(n),
            if n == 2 || n == 4 { 2 } else { 1 },
        ));
    }
    for m in 1..=200 {
        out.push(construction_instance(
            "friendship-construction",
            format!("m={m}"),
            construct_friendship(m),
            2,
        ));
    }
    // The exact values behind the three residue regimes need optimizing
    // over 26+ vertex joins, far beyond cfg.max_order.
    for claim in [
        "join-cycles-2-2-exact",
        "join-cycles-2-x-exact",
        "join-cycles-x-x-exact",
    ] {
        out.push(skipped(
            claim,
            "13<=m,n<=98".to_string(),
            format!("order>max-order={}", cfg.max_order),
        ));
    }
    sort_checks(&mut out);
    out
}

/// Exhaustive check of weight-one cycle labelings.
///
/// For cycle lengths not congruent to 2 mod 3 the claim is that every
/// weight-one labeling has some closed sum below zero; for lengths
/// congruent to 2 mod 3 the claim is the boundary witness, a weight-one
/// labeling whose closed sums are all nonnegative.
pub fn check_negative_neighbour(n: usize, cfg: &SuiteConfig) -> ClaimCheck {
    let instance = format!("n={n}");
    if n > cfg.max_order {
        return skipped(
            "weight1-cycle-forces-negative-closed-sum",
            instance,
            format!("3^{n}-labelings-exceed-max-order={}", cfg.max_order),
        );
    }
    let g = FamilySpec::Cycle { n }
        .generate()
        .expect("cycle length is at least 3");
    if n % 3 == 2 {
        // boundary: the residue-2 pattern has weight 1 and closed sums in
        // {0, 3}
        let pattern = cycle_residue2_pattern(n);
        let sums: Vec<i32> = (0..n).map(|v| closed_sum(&g, &pattern, v)).collect();
        let ok = pattern.weight() == 1 && sums.iter().all(|&s| s >= 0);
        return confirm(
            "weight1-cycle-nonnegative-witness",
            instance,
            ok,
            format!(
                "labels={},min-closed-sum={}",
                format_labels(&pattern),
                sums.iter().min().unwrap()
            ),
        );
    }
    let mut counterexample = None;
    let mut checked = 0u64;
    enumerate_labelings(
        &g,
        |f| f.weight() == 1,
        |f| {
            checked += 1;
            if counterexample.is_none() && (0..n).all(|v| closed_sum(&g, f, v) >= 0) {
                counterexample = Some(f.clone());
            }
        },
    );
    match counterexample {
        None => confirm(
            "weight1-cycle-forces-negative-closed-sum",
            instance,
            true,
            format!("weight1-labelings={checked},all-negative=true"),
        ),
        Some(f) => confirm(
            "weight1-cycle-forces-negative-closed-sum",
            instance,
            false,
            format!("counterexample-labels={}", format_labels(&f)),
        ),
    }
}

/// The default exhaustive batch: cycle lengths 13 through 16.
pub fn check_negative_neighbour_suite(cfg: &SuiteConfig) -> Vec<ClaimCheck> {
    let mut out: Vec<ClaimCheck> = (13..=16)
        .map(|n| check_negative_neighbour(n, cfg))
        .collect();
    sort_checks(&mut out);
    out
}

/// Graphs of order 6 with gamma exactly 0, used to exercise the zero-gamma
/// branch of the join-with-K1 bound. Each is re-checked by the solver at
/// run time.
const ZERO_GAMMA_GRAPHS: &[&[(usize, usize)]] = &[
    // double star: two adjacent centers, two leaves each
    &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)],
    // two-page book plus a pendant on each spine vertex
    &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 5)],
    // caterpillar: P_4 with one leg on each middle vertex
    &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)],
    // star with one subdivided ray
    &[(0, 5), (1, 4), (2, 5), (3, 5), (4, 5)],
    &[(0, 4), (1, 2), (2, 3), (2, 4), (2, 5), (3, 4)],
];

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("random edges are in range")
}

fn refute_evidence(g: &Graph, detail: String) -> String {
    format!(
        "graph={},{}",
        write_graph6(g).unwrap_or_else(|_| "?".to_string()),
        detail
    )
}

/// Bound checks from the structural results: the universal-vertex bound,
/// the join-with-K1 bound, join subadditivity, the small-scale exact
/// bounds for joins of cycles, and witness side-sum data recorded in place
/// of the out-of-reach side-positivity claim.
pub fn check_structural(cfg: &SuiteConfig) -> Vec<ClaimCheck> {
    let mut out = Vec::new();
    let densities = [0.2, 0.35, 0.5, 0.65, 0.8];

    // universal vertex forces gamma >= 1
    {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut violation = None;
        let mut min_gamma = i32::MAX;
        for i in 0..100 {
            let base = random_graph(&mut rng, 1 + i % 6, densities[i % densities.len()]);
            let g = Graph::from_edges(1, []).unwrap().join(&base);
            debug_assert_eq!(g.has_universal_vertex(), Some(true));
            let gamma = solve_gamma(&g);
            min_gamma = min_gamma.min(gamma);
            if gamma < 1 && violation.is_none() {
                violation = Some(refute_evidence(&g, format!("gamma={gamma}")));
            }
        }
        out.push(match violation {
            None => confirm(
                "universal-vertex-lower-bound",
                format!("count=100,seed={}", cfg.seed),
                true,
                format!("min-gamma={min_gamma},violations=0"),
            ),
            Some(evidence) => confirm(
                "universal-vertex-lower-bound",
                format!("count=100,seed={}", cfg.seed),
                false,
                evidence,
            ),
        });
    }

    // gamma(G v K1) >= 1, with equality whenever gamma(G) = 0
    {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
        let mut graphs: Vec<Graph> = ZERO_GAMMA_GRAPHS
            .iter()
            .map(|edges| Graph::from_edges(6, edges.iter().copied()).unwrap())
            .collect();
        for i in 0..45 {
            graphs.push(random_graph(
                &mut rng,
                1 + i % 6,
                densities[i % densities.len()],
            ));
        }
        let mut zeros = 0;
        let mut violation = None;
        for g in &graphs {
            let gamma_g = solve_gamma(g);
            let joined = g.join(&Graph::from_edges(1, []).unwrap());
            let gamma_joined = solve_gamma(&joined);
            if gamma_g == 0 {
                zeros += 1;
            }
            let ok = gamma_joined >= 1 && (gamma_g != 0 || gamma_joined == 1);
            if !ok && violation.is_none() {
                violation = Some(refute_evidence(
                    g,
                    format!("gamma={gamma_g},joined-gamma={gamma_joined}"),
                ));
            }
        }
        let instance = format!("count={},seed={}", graphs.len(), cfg.seed.wrapping_add(1));
        out.push(match violation {
            None => confirm(
                "join-k1-lower-bound",
                instance,
                true,
                format!("zero-gamma-instances={zeros},violations=0"),
            ),
            Some(evidence) => confirm("join-k1-lower-bound", instance, false, evidence),
        });
    }

    // gamma(G v H) <= gamma(G) + gamma(H) for nonnegative gammas
    {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
        let mut violation = None;
        let mut pairs = 0;
        let mut attempts = 0;
        while pairs < 50 && attempts < 5000 {
            attempts += 1;
            let order_g = 1 + rng.gen_range(0..4);
            let order_h = 1 + rng.gen_range(0..4);
            let g = random_graph(&mut rng, order_g, densities[attempts % 5]);
            let h = random_graph(&mut rng, order_h, densities[(attempts + 2) % 5]);
            let (gamma_g, gamma_h) = (solve_gamma(&g), solve_gamma(&h));
            if gamma_g < 0 || gamma_h < 0 {
                continue;
            }
            pairs += 1;
            let joined = g.join(&h);
            let gamma_joined = solve_gamma(&joined);
            if gamma_joined > gamma_g + gamma_h && violation.is_none() {
                violation = Some(refute_evidence(
                    &joined,
                    format!("gamma-g={gamma_g},gamma-h={gamma_h},gamma-join={gamma_joined}"),
                ));
            }
        }
        let instance = format!("pairs={pairs},seed={}", cfg.seed.wrapping_add(2));
        out.push(match violation {
            None => confirm(
                "join-subadditivity",
                instance,
                true,
                "violations=0".to_string(),
            ),
            Some(evidence) => confirm("join-subadditivity", instance, false, evidence),
        });
    }

    // small joins of cycles stay within the proven window [1, 4]
    {
        let mut evidence = String::new();
        let mut ok = true;
        for m in 3..=6 {
            for n in 3..=6 {
                let g = FamilySpec::JoinOfCycles { m, n }.generate().unwrap();
                let gamma = solve_gamma(&g);
                if !(1..=4).contains(&gamma) {
                    ok = false;
                }
                if !evidence.is_empty() {
                    evidence.push(';');
                }
                evidence.push_str(&format!("g({m},{n})={gamma}"));
            }
        }
        out.push(confirm(
            "join-cycles-window-small",
            "3<=m,n<=6".to_string(),
            ok,
            evidence,
        ));
    }

    // side sums of optimal witnesses at reduced scale, recorded as data:
    // the side-positivity claim itself quantifies over all labelings of
    // 26+ vertex joins and stays out of reach
    {
        let mut data = String::new();
        for m in 3..=6 {
            for n in 3..=6 {
                let g = FamilySpec::JoinOfCycles { m, n }.generate().unwrap();
                let result = solve_exact(&g, &SolveOptions::default()).unwrap();
                let first: i32 = (0..m).map(|v| result.witness.get(v).value()).sum();
                let second: i32 = (m..m + n).map(|v| result.witness.get(v).value()).sum();
                if !data.is_empty() {
                    data.push(';');
                }
                data.push_str(&format!("({m},{n})={first}/{second}"));
            }
        }
        out.push(skipped(
            "join-cycles-side-positivity",
            "m,n>=13".to_string(),
            format!("reduced-scale-witness-side-sums:{data}"),
        ));
    }

    sort_checks(&mut out);
    out
}

/// Runs every suite and returns the combined, sorted report.
pub fn run_all(cfg: &SuiteConfig) -> Vec<ClaimCheck> {
    let mut out = check_formulas(cfg);
    out.extend(check_constructions(cfg));
    out.extend(check_negative_neighbour_suite(cfg));
    out.extend(check_structural(cfg));
    sort_checks(&mut out);
    out
}

/// Deterministic report order: claim id, then instance.
pub fn sort_checks(checks: &mut [ClaimCheck]) {
    checks.sort_by(|a, b| {
        a.claim_id
            .cmp(&b.claim_id)
            .then_with(|| a.instance.cmp(&b.instance))
    });
}
