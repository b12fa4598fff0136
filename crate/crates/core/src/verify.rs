//! Step-by-step reproduction of the two-component worked example.
//!
//! `K` has deciding crossings `I` (positive, two colors) and `II`
//! (negative). Resolving `I` gives `K1 = switch`, `K2 = switch + merge`,
//! `K3 = smooth`; resolving `II` in `K1`, `K2`, `K3` gives the rest.

use std::fmt;

use crate::diagram::ColoredDiagram;
use crate::fixtures;
use crate::poly::SkeinValue;
use crate::skein::{deciding_plan, Evaluator, Fault};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: SkeinValue,
    /// Evaluated diagrams with their values; all must equal `expected`.
    pub actual: Vec<(String, SkeinValue)>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.actual.iter().all(|(_, v)| *v == self.expected)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS {} = {}", self.name, self.expected);
        }
        write!(f, "FAIL {}: expected {}", self.name, self.expected)?;
        for (label, v) in &self.actual {
            if *v != self.expected {
                write!(f, "; got {label} = {v}")?;
            }
        }
        Ok(())
    }
}

/// The diagrams `K, K1, ..., K8` of the worked example.
pub struct WorkedExample {
    pub k: ColoredDiagram,
    pub parts: [ColoredDiagram; 8],
}

pub fn worked_example_tree() -> WorkedExample {
    let k = fixtures::worked_example();
    let (one, two) = (fixtures::crossing_one(), fixtures::crossing_two());
    let (a, b) = k.strand_colors(&one).expect("crossing I");
    let k1 = k.switch(&one).expect("crossing I");
    let k2 = k1.merge_colors(&a, &b).expect("strand colors");
    let k3 = k
        .smooth(&one)
        .expect("crossing I")
        .with_base_points(&[fixtures::WORKED_EXAMPLE_SMOOTHED_BASE])
        .expect("base point on the smoothed diagram");
    let (c, d) = k1.strand_colors(&two).expect("crossing II");
    let k4 = k1.switch(&two).expect("crossing II");
    let k5 = k4.merge_colors(&c, &d).expect("strand colors");
    let k6 = k1.smooth(&two).expect("crossing II");
    let k7 = k3.switch(&two).expect("crossing II");
    let k8 = k3.smooth(&two).expect("crossing II");
    WorkedExample {
        k,
        parts: [k1, k2, k3, k4, k5, k6, k7, k8],
    }
}

/// Runs the seven checks. `fault` injects a defect into the evaluator.
pub fn verify_worked_example(fault: Fault) -> Vec<Check> {
    let tree = worked_example_tree();
    let mut ev = Evaluator::new().with_fault(fault);
    let mut f = |i: usize| {
        let d = if i == 0 { &tree.k } else { &tree.parts[i - 1] };
        let label = if i == 0 {
            "F(K)".to_string()
        } else {
            format!("F(K{i})")
        };
        (label, ev.evaluate(d))
    };
    let check = |name: &str, expected: SkeinValue, actual: Vec<(String, SkeinValue)>| Check {
        name: name.to_string(),
        expected,
        actual,
    };
    vec![
        check("F(K1)", fixtures::hopf_two_colors_value(), vec![f(1)]),
        check(
            "F(K2) = F(K8)",
            fixtures::hopf_one_color_value(),
            vec![f(2), f(8)],
        ),
        check("F(K3)", fixtures::left_trefoil_value(), vec![f(3)]),
        check("F(K4)", fixtures::inverse_wx(), vec![f(4)]),
        check("F(K5)", fixtures::y_over_wx(), vec![f(5)]),
        check("F(K6) = F(K7)", SkeinValue::one(), vec![f(6), f(7)]),
        check("F(K)", fixtures::worked_example_value(), vec![f(0)]),
    ]
}

/// Structural facts of the example: the deciding crossings of `K` and of
/// `K1`, `K2`, `K3`, and that `K4`, `K5` are ascending.
pub fn worked_example_plans() -> Vec<(String, Vec<String>)> {
    let tree = worked_example_tree();
    let names = |d: &ColoredDiagram| {
        deciding_plan(d)
            .crossings()
            .into_iter()
            .map(|c| c.0)
            .collect::<Vec<_>>()
    };
    let mut out = vec![("K".to_string(), names(&tree.k))];
    for (i, d) in tree.parts.iter().enumerate().take(5) {
        out.push((format!("K{}", i + 1), names(d)));
    }
    out
}
