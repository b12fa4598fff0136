//! Evaluation of the invariant F by skein recursion.
//!
//! A diagram is traversed component by component from its base points. A
//! crossing first met on its over strand is *deciding*: switching every
//! deciding crossing gives an ascending diagram, which is an unlink. The
//! recursion resolves the first deciding crossing with the relations below
//! and bottoms out at the unlink value `y^(n-c) / (w*x)^(n-1)`.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::diagram::{
    Color, ColoredDiagram, ComponentPartition, CrossingId, DiagramError, Level, Port, Sign,
};
use crate::par::Exec;
use crate::poly::{make_y, LaurentPoly, Monomial, SkeinValue};

pub const DEFAULT_COLORATION_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("invalid unlink shape: n = {n}, c = {c}")]
    BadShape { n: usize, c: usize },
    #[error("{found} components exceed the limit of {limit}")]
    TooManyComponents { found: usize, limit: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanStep {
    pub crossing: CrossingId,
    pub sign: Sign,
    pub same_color: bool,
}

/// Deciding crossings in first-encounter order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecidingPlan {
    pub steps: Vec<PlanStep>,
}

impl DecidingPlan {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn crossings(&self) -> Vec<CrossingId> {
        self.steps.iter().map(|s| s.crossing.clone()).collect()
    }
}

pub fn deciding_plan(d: &ColoredDiagram) -> DecidingPlan {
    let mut seen = vec![false; d.crossing_count()];
    let mut steps = Vec::new();
    let crossings = d.crossings();
    let topo = d.topology();
    for &base in d.base_points() {
        for e in d.walk(base) {
            let (ci, level) = topo.head[&e];
            if !seen[ci] {
                seen[ci] = true;
                if level == Level::Over {
                    let c = &crossings[ci];
                    steps.push(PlanStep {
                        crossing: c.id.clone(),
                        sign: c.sign,
                        same_color: d.edge_color(c.under_in) == d.edge_color(c.over_in),
                    });
                }
            }
        }
    }
    DecidingPlan { steps }
}

/// `n` components carrying `c` distinct colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnlinkShape {
    n: usize,
    c: usize,
}

impl UnlinkShape {
    pub fn new(n: usize, c: usize) -> Result<Self, SkeinError> {
        if c == 0 || c > n {
            return Err(SkeinError::BadShape { n, c });
        }
        Ok(UnlinkShape { n, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }
}

pub fn unlink_value(shape: UnlinkShape) -> SkeinValue {
    let k = (shape.n - 1) as i32;
    let y = make_y().pow((shape.n - shape.c) as u32);
    &y * &SkeinValue::monomial(1, -k, -k, 0)
}

/// Deliberate defects used by the negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Resolves negative monochrome crossings with the positive-crossing
    /// coefficients.
    MonochromeSign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalStats {
    pub calls: u64,
    pub memo_hits: u64,
}

/// Recursive evaluator with an optional memo table keyed by [`memo_key`].
#[derive(Debug, Clone)]
pub struct Evaluator {
    memo: Option<HashMap<Vec<u8>, SkeinValue>>,
    fault: Fault,
    stats: EvalStats,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new()
    }
}

fn sv(terms: &[(i64, i32, i32, i32)]) -> SkeinValue {
    SkeinValue::from_poly(LaurentPoly::from_terms(
        terms
            .iter()
            .map(|&(c, ex, ew, et)| (Monomial::new(ex, ew, et), c)),
    ))
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator {
            memo: Some(HashMap::new()),
            fault: Fault::None,
            stats: EvalStats::default(),
        }
    }

    pub fn without_memo() -> Self {
        Evaluator {
            memo: None,
            ..Self::new()
        }
    }

    pub fn with_fault(mut self, fault: Fault) -> Self {
        self.fault = fault;
        self
    }

    pub fn stats(&self) -> EvalStats {
        self.stats
    }

    pub fn evaluate(&mut self, d: &ColoredDiagram) -> SkeinValue {
        self.stats.calls += 1;
        let key = self.memo.as_ref().map(|_| memo_key(d));
        if let (Some(m), Some(k)) = (&self.memo, &key) {
            if let Some(v) = m.get(k) {
                self.stats.memo_hits += 1;
                return v.clone();
            }
        }
        let v = self.resolve(d);
        assert!(
            v.is_normalized(),
            "skein value left the (1-t)^k form: {v:?}"
        );
        if let (Some(m), Some(k)) = (&mut self.memo, key) {
            m.insert(k, v.clone());
        }
        v
    }

    fn resolve(&mut self, d: &ColoredDiagram) -> SkeinValue {
        let plan = deciding_plan(d);
        let Some(step) = plan.steps.first() else {
            let shape =
                UnlinkShape::new(d.component_count(), d.color_count()).expect("nonempty diagram");
            return unlink_value(shape);
        };
        let id = &step.crossing;
        let s = d.switch(id).expect("planned crossing exists");
        let r = d.smooth(id).expect("planned crossing exists");
        let mut sign = step.sign;
        if self.fault == Fault::MonochromeSign && step.same_color {
            sign = Sign::Pos;
        }
        let fs = self.evaluate(&s);
        let fr = self.evaluate(&r);
        match (step.same_color, sign) {
            (true, Sign::Pos) => {
                &(&sv(&[(1, 0, 2, 1)]) * &fs) + &(&sv(&[(1, 0, 1, 1), (-1, 0, 1, 0)]) * &fr)
            }
            (true, Sign::Neg) => {
                &(&sv(&[(1, 0, -2, -1)]) * &fs) + &(&sv(&[(1, 0, -1, -1), (-1, 0, -1, 0)]) * &fr)
            }
            (false, sign) => {
                let (a, b) = d.strand_colors(id).expect("planned crossing exists");
                let st = s.merge_colors(&a, &b).expect("strand colors exist");
                let fst = self.evaluate(&st);
                let (w2, t1, wt1) = match sign {
                    Sign::Pos => (
                        sv(&[(1, 0, 2, 0)]),
                        sv(&[(1, 0, 0, 1), (-1, 0, 0, 0)]),
                        sv(&[(1, 0, 1, 1), (-1, 0, 1, 0)]),
                    ),
                    Sign::Neg => (
                        sv(&[(1, 0, -2, 0)]),
                        sv(&[(1, 0, 0, -1), (-1, 0, 0, 0)]),
                        sv(&[(1, 0, -1, -1), (-1, 0, -1, 0)]),
                    ),
                };
                &(&w2 * &(&fs + &(&t1 * &fst))) + &(&wt1 * &fr)
            }
        }
    }
}

/// F of a diagram with a fresh memo table.
pub fn evaluate_f(d: &ColoredDiagram) -> SkeinValue {
    Evaluator::new().evaluate(d)
}

/// F under every coloration class of the components, ordered by partition
/// rank and then lexicographically.
pub fn all_colorations_f(
    d: &ColoredDiagram,
    limit: usize,
    exec: Exec,
) -> Result<Vec<(ComponentPartition, SkeinValue)>, SkeinError> {
    let n = d.component_count();
    if n > limit {
        return Err(SkeinError::TooManyComponents { found: n, limit });
    }
    let mut parts = ComponentPartition::enumerate(n);
    parts.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cmp(b)));
    let colored: Vec<ColoredDiagram> = parts
        .iter()
        .map(|p| {
            let colors: Vec<Color> = p
                .labels()
                .into_iter()
                .map(|l| Color(format!("k{l}")))
                .collect();
            d.with_coloration(&colors)
        })
        .collect::<Result<_, _>>()?;
    let values = exec.map(&colored, evaluate_f);
    Ok(parts.into_iter().zip(values).collect())
}

/// Serialization of the evaluation subproblem: edges renumbered along the
/// traversal, colors relabeled by first appearance, crossings sorted. Crossing
/// and color names do not enter the key.
pub fn memo_key(d: &ColoredDiagram) -> Vec<u8> {
    let mut edge_label: HashMap<u32, u32> = HashMap::new();
    let mut color_label: BTreeMap<Color, u32> = BTreeMap::new();
    let mut out: Vec<u8> = Vec::new();
    let push = |out: &mut Vec<u8>, v: u32| out.extend_from_slice(&v.to_le_bytes());

    let label_color = |c: &Color, labels: &mut BTreeMap<Color, u32>| -> u32 {
        let next = labels.len() as u32;
        *labels.entry(c.clone()).or_insert(next)
    };

    push(&mut out, d.base_points().len() as u32);
    for &base in d.base_points() {
        let walk = d.walk(base);
        let color = d.edge_color(base).expect("colored edge");
        let cl = label_color(color, &mut color_label);
        push(&mut out, walk.len() as u32);
        push(&mut out, cl);
        for e in walk {
            let next = edge_label.len() as u32;
            edge_label.insert(e, next);
        }
    }
    let mut rows: Vec<[u32; 5]> = d
        .crossings()
        .iter()
        .map(|c| {
            [
                (c.sign == Sign::Pos) as u32,
                edge_label[&c.port(Port::UnderIn)],
                edge_label[&c.port(Port::UnderOut)],
                edge_label[&c.port(Port::OverIn)],
                edge_label[&c.port(Port::OverOut)],
            ]
        })
        .collect();
    rows.sort();
    push(&mut out, rows.len() as u32);
    for row in rows {
        for v in row {
            push(&mut out, v);
        }
    }
    let mut loops: Vec<u32> = d
        .free_loops()
        .iter()
        .map(|c| label_color(c, &mut color_label))
        .collect();
    loops.sort();
    push(&mut out, loops.len() as u32);
    for l in loops {
        push(&mut out, l);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid_word, Crossing};

    fn hopf(a: &str, b: &str) -> ColoredDiagram {
        ColoredDiagram::new(
            vec![
                Crossing::new("c1", Sign::Neg, [1, 2, 3, 4]),
                Crossing::new("c2", Sign::Neg, [4, 3, 2, 1]),
            ],
            vec![a.into(), b.into()],
            vec![],
        )
        .unwrap()
    }

    fn braid(w: &str, colors: &[&str]) -> ColoredDiagram {
        let cs: Vec<Color> = colors.iter().map(|c| Color::from(*c)).collect();
        braid_closure(&parse_braid_word(w).unwrap(), &cs).unwrap()
    }

    #[test]
    fn hopf_plan() {
        let plan = deciding_plan(&hopf("a", "b"));
        assert_eq!(plan.crossings(), vec![CrossingId::from("c2")]);
        assert_eq!(plan.steps[0].sign, Sign::Neg);
        assert!(!plan.steps[0].same_color);
        assert!(deciding_plan(&ColoredDiagram::unknot("a".into())).is_empty());
        let ascending = hopf("a", "b").switch(&"c2".into()).unwrap();
        assert!(deciding_plan(&ascending).is_empty());
    }

    #[test]
    fn unlink_values() {
        assert_eq!(
            unlink_value(UnlinkShape::new(1, 1).unwrap()),
            SkeinValue::one()
        );
        assert_eq!(
            unlink_value(UnlinkShape::new(3, 3).unwrap()).to_string(),
            "1 / (w^2*x^2)"
        );
        let y_over_wx = &make_y() * &SkeinValue::monomial(1, -1, -1, 0);
        assert_eq!(unlink_value(UnlinkShape::new(2, 1).unwrap()), y_over_wx);
        assert!(UnlinkShape::new(2, 3).is_err());
        assert!(UnlinkShape::new(2, 0).is_err());
    }

    #[test]
    fn hopf_values() {
        assert_eq!(
            evaluate_f(&hopf("a", "b")).to_string(),
            "(w^2*x + t - x) / (w^3*x*t)"
        );
        assert_eq!(
            evaluate_f(&hopf("a", "a")).to_string(),
            "(w^2*t^2 - w^2*t + w^2 - 1) / ((1-t)*w^3*t)"
        );
    }

    #[test]
    fn trefoils() {
        let left = braid("s1^-1 s1^-1 s1^-1", &["a", "a"]);
        let f = evaluate_f(&left);
        let expected = sv(&[(1, 0, -2, 0), (1, 0, -2, -2), (-1, 0, -4, -2)]);
        assert_eq!(f, expected);
        let right = evaluate_f(&left.mirror());
        assert_eq!(right, f.invert_w_t());
    }

    #[test]
    fn kink_is_trivial() {
        for sign in [Sign::Pos, Sign::Neg] {
            for ports in [[1, 2, 2, 1], [2, 1, 1, 2]] {
                let d = ColoredDiagram::new(
                    vec![Crossing::new("k", sign, ports)],
                    vec!["a".into()],
                    vec![],
                )
                .unwrap();
                assert_eq!(evaluate_f(&d), SkeinValue::one());
            }
        }
    }

    #[test]
    fn memo_agrees_with_plain_recursion() {
        let d = braid("s1 s1 s2^-1 s2^-1 s1 s2 s2 s1", &["a", "b", "c"]);
        let mut plain = Evaluator::without_memo();
        let mut memo = Evaluator::new();
        assert_eq!(plain.evaluate(&d), memo.evaluate(&d));
        assert_eq!(plain.stats().memo_hits, 0);
    }

    #[test]
    fn memo_keys() {
        let d = hopf("a", "b");
        assert_eq!(memo_key(&d), memo_key(&d));
        assert_ne!(memo_key(&hopf("a", "b")), memo_key(&hopf("a", "a")));
        assert_eq!(memo_key(&hopf("p", "q")), memo_key(&hopf("u", "v")));
    }

    #[test]
    fn colorations() {
        let rows = all_colorations_f(&hopf("a", "b"), 8, Exec::Sequential).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].0.to_string(), "{1}{2}");
        assert_eq!(rows[0].1, evaluate_f(&hopf("a", "b")));
        assert_eq!(rows[1].1, evaluate_f(&hopf("a", "a")));
        let unlink = ColoredDiagram::unlink(["a".into(), "b".into()]);
        let rows = all_colorations_f(&unlink, 8, Exec::Parallel).unwrap();
        assert_eq!(rows[0].1.to_string(), "1 / (w*x)");
        assert_eq!(rows[1].1, unlink_value(UnlinkShape::new(2, 1).unwrap()));
        let many = ColoredDiagram::unlink((0..9).map(|i| Color(i.to_string())));
        assert!(matches!(
            all_colorations_f(&many, 8, Exec::Sequential),
            Err(SkeinError::TooManyComponents { .. })
        ));
    }

    #[test]
    fn fault_changes_monochrome_hopf() {
        let mut bad = Evaluator::new().with_fault(Fault::MonochromeSign);
        assert_ne!(bad.evaluate(&hopf("a", "a")), evaluate_f(&hopf("a", "a")));
    }
}
