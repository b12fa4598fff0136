//! Reference diagrams and values.

use crate::diagram::{
    braid_closure, parse_braid_word, parse_diagram, Color, ColoredDiagram, Crossing, CrossingId,
    Sign,
};
use crate::poly::{make_y, LaurentPoly, Monomial, SkeinValue};

/// Two negative crossings linking components `{1,2}` and `{3,4}`.
pub fn negative_hopf(a: &str, b: &str) -> ColoredDiagram {
    ColoredDiagram::new(
        vec![
            Crossing::new("c1", Sign::Neg, [1, 2, 3, 4]),
            Crossing::new("c2", Sign::Neg, [4, 3, 2, 1]),
        ],
        vec![a.into(), b.into()],
        vec![],
    )
    .expect("valid fixture")
}

pub fn braid(word: &str, colors: &[&str]) -> ColoredDiagram {
    let colors: Vec<Color> = colors.iter().map(|c| Color::from(*c)).collect();
    braid_closure(&parse_braid_word(word).expect("valid word"), &colors).expect("valid fixture")
}

/// Closure of `s1^-3`: three negative crossings.
pub fn left_trefoil() -> ColoredDiagram {
    braid("s1^-1 s1^-1 s1^-1", &["a", "a"])
}

pub fn right_trefoil() -> ColoredDiagram {
    braid("s1 s1 s1", &["a", "a"])
}

pub fn figure_eight() -> ColoredDiagram {
    braid("s1 s2^-1 s1 s2^-1", &["a", "a", "a"])
}

/// The two-component worked example: a Whitehead link diagram with
/// components colored `a` and `b`, ordered and based so that its deciding
/// crossings are `I` (positive) and then `II` (negative).
pub const WORKED_EXAMPLE_JSON: &str = r#"{"crossings":[
  {"id":"II","sign":-1,"under_in":2,"under_out":5,"over_in":3,"over_out":4},
  {"id":"c2","sign":-1,"under_in":4,"under_out":7,"over_in":5,"over_out":6},
  {"id":"I","sign":1,"under_in":6,"under_out":8,"over_in":1,"over_out":9},
  {"id":"c4","sign":-1,"under_in":9,"under_out":3,"over_in":7,"over_out":10},
  {"id":"c5","sign":1,"under_in":10,"under_out":1,"over_in":8,"over_out":2}],
 "free_loops":[],"colors":["a","b"],"order":[0,1],"base_points":[10,8]}"#;

/// Base point on the smoothed diagram at which `II` is the only deciding
/// crossing.
pub const WORKED_EXAMPLE_SMOOTHED_BASE: u32 = 6;

pub fn worked_example() -> ColoredDiagram {
    parse_diagram(WORKED_EXAMPLE_JSON).expect("valid fixture")
}

pub fn crossing_one() -> CrossingId {
    CrossingId::from("I")
}

pub fn crossing_two() -> CrossingId {
    CrossingId::from("II")
}

fn value(terms: &[(i64, i32, i32, i32)], denom_pow: u32) -> SkeinValue {
    SkeinValue::new(
        LaurentPoly::from_terms(
            terms
                .iter()
                .map(|&(c, ex, ew, et)| (Monomial::new(ex, ew, et), c)),
        ),
        denom_pow,
    )
}

/// `(w^2*x + t - x) / (w^3*x*t)`
pub fn hopf_two_colors_value() -> SkeinValue {
    value(&[(1, 0, -1, -1), (1, -1, -3, 0), (-1, 0, -3, -1)], 0)
}

/// `(w^2*t^2 - w^2*t + w^2 - 1) / (w^3*t*(1-t))`
pub fn hopf_one_color_value() -> SkeinValue {
    value(
        &[
            (1, 0, -1, 1),
            (-1, 0, -1, 0),
            (1, 0, -1, -1),
            (-1, 0, -3, -1),
        ],
        1,
    )
}

/// `(w^2*t^2 + w^2 - 1) / (w^4*t^2)`
pub fn left_trefoil_value() -> SkeinValue {
    value(&[(1, 0, -2, 0), (1, 0, -2, -2), (-1, 0, -4, -2)], 0)
}

/// `1 / (w*x)`
pub fn inverse_wx() -> SkeinValue {
    value(&[(1, -1, -1, 0)], 0)
}

/// `y / (w*x)`
pub fn y_over_wx() -> SkeinValue {
    &make_y() * &inverse_wx()
}

/// `[w^4(x t^2 - x t^3) + w^2(t^2 + x t - x - x t^2 + x t^3) + x - x t] / (w^3 x t^2)`
pub fn worked_example_value() -> SkeinValue {
    let num = [
        (1, 1, 4, 2),
        (-1, 1, 4, 3),
        (1, 0, 2, 2),
        (1, 1, 2, 1),
        (-1, 1, 2, 0),
        (-1, 1, 2, 2),
        (1, 1, 2, 3),
        (1, 1, 0, 0),
        (-1, 1, 0, 1),
    ];
    let shifted: Vec<_> = num
        .iter()
        .map(|&(c, ex, ew, et)| (c, ex - 1, ew - 3, et - 2))
        .collect();
    value(&shifted, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_planar() {
        for d in [
            negative_hopf("a", "b"),
            left_trefoil(),
            right_trefoil(),
            figure_eight(),
            worked_example(),
        ] {
            assert!(d.is_planar());
        }
    }

    #[test]
    fn worked_example_shape() {
        let k = worked_example();
        assert_eq!(k.component_count(), 2);
        assert_eq!(k.color_count(), 2);
        assert_eq!(k.crossing_count(), 5);
        let b = braid("s2^-1 s2^-1 s1 s2^-1 s1", &["a", "a", "a"])
            .with_coloration(&["a".into(), "b".into()])
            .unwrap();
        let shape = |d: &ColoredDiagram| {
            d.crossings()
                .iter()
                .map(|c| (c.sign, c.edges()))
                .collect::<Vec<_>>()
        };
        assert_eq!(shape(&k), shape(&b));
        assert_eq!(k.base_points(), &[10, 8]);
    }

    #[test]
    fn rendered_values() {
        assert_eq!(
            hopf_two_colors_value().to_string(),
            "(w^2*x + t - x) / (w^3*x*t)"
        );
        assert_eq!(
            hopf_one_color_value().to_string(),
            "(w^2*t^2 - w^2*t + w^2 - 1) / ((1-t)*w^3*t)"
        );
        assert_eq!(
            left_trefoil_value().to_string(),
            "(w^2*t^2 + w^2 - 1) / (w^4*t^2)"
        );
    }
}
