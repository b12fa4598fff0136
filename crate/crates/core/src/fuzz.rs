//! Random diagrams and invariance campaigns.
//!
//! Every case draws its own generator from `(seed, case index)`, so a case
//! can be replayed alone and cases can run in any order.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{
    braid_closure, to_json, BraidLetter, Color, ColoredDiagram, Move, MoveKind, Sign,
};
use crate::par::Exec;
use crate::poly::SkeinValue;
use crate::skein::Evaluator;

pub const DEFAULT_SEED: u64 = 42;

const PALETTE: [&str; 6] = ["red", "green", "blue", "amber", "cyan", "plum"];

/// Limits for [`random_diagram`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub max_crossings: usize,
    pub max_components: usize,
    pub max_colors: usize,
    pub max_strands: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            max_crossings: 8,
            max_components: 3,
            max_colors: 3,
            max_strands: 4,
        }
    }
}

pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// Closure of a random braid word with randomly colored components.
pub fn random_diagram<R: Rng>(rng: &mut R, p: GenParams) -> ColoredDiagram {
    loop {
        let strands = rng.gen_range(1..=p.max_strands.max(1));
        let len = if strands > 1 {
            rng.gen_range(0..=p.max_crossings)
        } else {
            0
        };
        let word: Vec<BraidLetter> = (0..len)
            .map(|_| {
                let sign = if rng.gen_bool(0.5) {
                    Sign::Pos
                } else {
                    Sign::Neg
                };
                BraidLetter::new(rng.gen_range(1..strands as i64), sign)
            })
            .collect();
        let plain = braid_closure(&word, &vec![Color::from(PALETTE[0]); strands])
            .expect("monochrome closure");
        let n = plain.component_count();
        if n > p.max_components {
            continue;
        }
        let colors: Vec<Color> = (0..n)
            .map(|_| Color::from(PALETTE[rng.gen_range(0..p.max_colors.clamp(1, PALETTE.len()))]))
            .collect();
        return plain
            .with_coloration(&colors)
            .expect("one color per component");
    }
}

/// Random base point on every crossing-bearing component, traversed in the
/// given order of canonical component indices.
pub fn with_random_bases<R: Rng>(
    rng: &mut R,
    d: &ColoredDiagram,
    order: &[usize],
) -> ColoredDiagram {
    let bases: Vec<u32> = d
        .components()
        .iter()
        .filter(|c| !c.is_free_loop())
        .map(|c| *c.edges.choose(rng).expect("edge"))
        .collect();
    d.with_order(order, Some(&bases)).expect("valid order")
}

/// Renames the colors through a random injection into fresh names.
pub fn random_color_bijection<R: Rng>(rng: &mut R, d: &ColoredDiagram) -> ColoredDiagram {
    let old: Vec<Color> = d.colors().into_iter().collect();
    let mut fresh: Vec<Color> = (0..old.len()).map(|i| Color(format!("z{i}"))).collect();
    fresh.shuffle(rng);
    d.map_colors(|c| fresh[old.iter().position(|o| o == c).expect("known color")].clone())
}

/// A random move among R1, R2 and R3: first a kind among the applicable
/// ones, then a site of that kind.
pub fn random_move<R: Rng>(rng: &mut R, d: &ColoredDiagram, kinds: &[MoveKind]) -> Option<Move> {
    let moves = d.applicable_moves();
    let present: BTreeSet<MoveKind> = moves
        .iter()
        .map(Move::kind)
        .filter(|k| kinds.contains(k))
        .collect();
    let kinds: Vec<MoveKind> = present.into_iter().collect();
    let kind = *kinds.choose(rng)?;
    let of_kind: Vec<&Move> = moves.iter().filter(|m| m.kind() == kind).collect();
    of_kind.choose(rng).map(|m| (*m).clone())
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// The quantity a campaign checks for invariance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Statistic {
    #[default]
    F,
    /// `F * w^crossings`, which is not an invariant; a negative control.
    CrossingWeighted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    pub max_crossings: usize,
    pub cases: usize,
    pub seed: u64,
    pub statistic: Statistic,
    pub exec: Exec,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            max_crossings: 8,
            cases: 200,
            seed: DEFAULT_SEED,
            statistic: Statistic::F,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub case: usize,
    pub transform: String,
    pub before: ColoredDiagram,
    pub after: ColoredDiagram,
    pub value_before: SkeinValue,
    pub value_after: SkeinValue,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "counterexample in case {}: {}",
            self.case, self.transform
        )?;
        writeln!(f, "  before: {}", to_json(&self.before))?;
        writeln!(f, "  after:  {}", to_json(&self.after))?;
        writeln!(f, "  value before: {}", self.value_before)?;
        write!(f, "  value after:  {}", self.value_after)
    }
}

#[derive(Debug, Clone)]
pub struct FuzzReport {
    pub cases: usize,
    pub passed: usize,
    /// Sub-checks run across all cases.
    pub comparisons: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl FuzzReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.cases
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} invariance checks passed", self.passed, self.cases)?;
        if let Some(c) = self.counterexamples.first() {
            write!(f, "\n{c}")?;
        }
        Ok(())
    }
}

struct CaseOutcome {
    comparisons: usize,
    failure: Option<Counterexample>,
}

fn statistic(ev: &mut Evaluator, stat: Statistic, d: &ColoredDiagram) -> SkeinValue {
    let f = ev.evaluate(d);
    match stat {
        Statistic::F => f,
        Statistic::CrossingWeighted => {
            &f * &SkeinValue::monomial(1, 0, d.crossing_count() as i32, 0)
        }
    }
}

/// One case: a random diagram, then a random R-move, every component order
/// with random base points, and a random color bijection.
fn run_case(cfg: &FuzzConfig, case: usize) -> CaseOutcome {
    let mut rng = case_rng(cfg.seed, case as u64);
    let params = GenParams {
        max_crossings: cfg.max_crossings,
        ..GenParams::default()
    };
    let d = random_diagram(&mut rng, params);
    let mut ev = Evaluator::new();
    let base = statistic(&mut ev, cfg.statistic, &d);
    let mut comparisons = 0;

    let mut variants: Vec<(String, ColoredDiagram)> = Vec::new();
    if let Some(mv) = random_move(
        &mut rng,
        &d,
        &[
            MoveKind::R1Add,
            MoveKind::R1Remove,
            MoveKind::R2Add,
            MoveKind::R2Remove,
            MoveKind::R3,
        ],
    ) {
        let moved = d.reidemeister(&mv).expect("enumerated moves apply");
        variants.push((format!("{mv:?}"), moved));
    }
    let crossing_comps = d.base_points().len();
    for perm in permutations(crossing_comps) {
        let v = with_random_bases(&mut rng, &d, &perm);
        variants.push((
            format!("order {:?}, base points {:?}", perm, v.base_points()),
            v,
        ));
    }
    variants.push((
        "color bijection".to_string(),
        random_color_bijection(&mut rng, &d),
    ));

    for (transform, after) in variants {
        comparisons += 1;
        let v = statistic(&mut ev, cfg.statistic, &after);
        if v != base {
            return CaseOutcome {
                comparisons,
                failure: Some(Counterexample {
                    case,
                    transform,
                    before: d,
                    after,
                    value_before: base,
                    value_after: v,
                }),
            };
        }
    }
    CaseOutcome {
        comparisons,
        failure: None,
    }
}

pub fn run_fuzz(cfg: &FuzzConfig) -> FuzzReport {
    let outcomes = cfg.exec.map_range(cfg.cases, |i| run_case(cfg, i));
    let passed = outcomes.iter().filter(|o| o.failure.is_none()).count();
    FuzzReport {
        cases: cfg.cases,
        passed,
        comparisons: outcomes.iter().map(|o| o.comparisons).sum(),
        counterexamples: outcomes.into_iter().filter_map(|o| o.failure).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_respects_limits() {
        let mut rng = case_rng(7, 0);
        for _ in 0..200 {
            let d = random_diagram(&mut rng, GenParams::default());
            assert!(d.crossing_count() <= 8);
            assert!(d.component_count() <= 3);
            assert!(d.color_count() <= 3);
            assert!(d.is_planar());
        }
    }

    #[test]
    fn cases_are_reproducible() {
        let a = random_diagram(&mut case_rng(3, 11), GenParams::default());
        let b = random_diagram(&mut case_rng(3, 11), GenParams::default());
        assert_eq!(a, b);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn unlinks_pass_trivially() {
        let r = run_fuzz(&FuzzConfig {
            max_crossings: 0,
            cases: 10,
            seed: 1,
            ..FuzzConfig::default()
        });
        assert_eq!(r.to_string(), "10/10 invariance checks passed");
    }

    #[test]
    fn small_campaign_passes() {
        let r = run_fuzz(&FuzzConfig {
            max_crossings: 5,
            cases: 20,
            ..FuzzConfig::default()
        });
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn faulty_statistic_is_caught() {
        let r = run_fuzz(&FuzzConfig {
            max_crossings: 4,
            cases: 20,
            statistic: Statistic::CrossingWeighted,
            ..FuzzConfig::default()
        });
        assert!(!r.all_passed());
        assert!(r.to_string().contains("counterexample in case"));
    }
}
