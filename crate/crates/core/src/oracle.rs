//! Kauffman bracket and Jones polynomial by brute-force state sum.
//!
//! This path shares only the diagram model with the skein engine.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::diagram::{ColoredDiagram, Sign};
use crate::par::Exec;
use crate::poly::UniPoly;

/// HOMFLY parameters under which F of a monochrome link is the HOMFLY
/// polynomial `P(l, m)`. Taking `w = sqrt(t)` turns `P` into the Jones
/// polynomial, which is what the tests compare.
pub const HOMFLY_L: &str = "i/(w*sqrt(t))";
pub const HOMFLY_M: &str = "i*(1/sqrt(t) - sqrt(t))";

pub const MAX_BRACKET_CROSSINGS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("bracket exponent {0} does not give an integral power of s")]
    HalfIntegral(i32),
    #[error("{0} crossings is too many for a state sum")]
    TooLarge(usize),
}

/// Laurent polynomial in A.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BracketValue {
    terms: BTreeMap<i32, BigInt>,
}

impl BracketValue {
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut b = BracketValue::default();
        for (e, c) in terms {
            b.add(e, BigInt::from(c));
        }
        b
    }

    pub fn terms(&self) -> &BTreeMap<i32, BigInt> {
        &self.terms
    }

    fn add(&mut self, e: i32, c: BigInt) {
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn mul(&self, o: &BracketValue) -> BracketValue {
        let mut out = BracketValue::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                out.add(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for BracketValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = UniPoly::from_terms('A', self.terms.iter().map(|(e, c)| (*e, c.clone())));
        write!(f, "{p}")
    }
}

pub fn writhe(d: &ColoredDiagram) -> i32 {
    d.crossings().iter().map(|c| c.sign.value()).sum()
}

/// Loop count of one state. Bit `i` of `state` selects the B-smoothing at
/// crossing `i`.
fn loops(d: &ColoredDiagram, index: &BTreeMap<u32, usize>, state: u64) -> usize {
    let n = index.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut join = |a: u32, b: u32| {
        let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for (i, c) in d.crossings().iter().enumerate() {
        let b_smoothing = state >> i & 1 == 1;
        // the A-smoothing of a positive crossing follows the orientation
        let oriented = (c.sign == Sign::Pos) != b_smoothing;
        if oriented {
            join(c.under_in, c.over_out);
            join(c.over_in, c.under_out);
        } else {
            join(c.under_in, c.over_in);
            join(c.under_out, c.over_out);
        }
    }
    let roots = (0..n).filter(|&i| find(&mut parent, i) == i).count();
    roots + d.free_loops().len()
}

pub fn kauffman_bracket(d: &ColoredDiagram, exec: Exec) -> Result<BracketValue, OracleError> {
    let n = d.crossing_count();
    if n > MAX_BRACKET_CROSSINGS {
        return Err(OracleError::TooLarge(n));
    }
    let index: BTreeMap<u32, usize> = d.edges().enumerate().map(|(i, e)| (e, i)).collect();
    // histogram of (A-exponent, loop count) over all states
    let hist = exec
        .fold_chunks(
            1u64 << n,
            1 << 10,
            |range| {
                let mut h: BTreeMap<(i32, usize), u64> = BTreeMap::new();
                for state in range {
                    let b = state.count_ones() as i32;
                    *h.entry((n as i32 - 2 * b, loops(d, &index, state)))
                        .or_default() += 1;
                }
                h
            },
            |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            },
        )
        .unwrap_or_default();

    let delta = BracketValue::from_terms([(2, -1), (-2, -1)]);
    let mut powers = vec![BracketValue::from_terms([(0, 1)])];
    let mut out = BracketValue::default();
    for ((e, l), count) in hist {
        while powers.len() < l {
            let next = powers.last().unwrap().mul(&delta);
            powers.push(next);
        }
        for (pe, pc) in powers[l - 1].terms() {
            out.add(e + pe, pc * BigInt::from(count));
        }
    }
    Ok(out)
}

/// Jones polynomial in `s = t^(1/2)`, from `(-A^3)^(-writhe) * <D>` with
/// `A = s^(-1/2)`.
pub fn jones(d: &ColoredDiagram, exec: Exec) -> Result<UniPoly, OracleError> {
    let bracket = kauffman_bracket(d, exec)?;
    let w = writhe(d);
    let sign = if w % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let mut out = UniPoly::zero('s');
    for (e, c) in bracket.terms() {
        let a = e - 3 * w;
        if a % 2 != 0 {
            return Err(OracleError::HalfIntegral(a));
        }
        out.add_term(-a / 2, c * &sign);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid_word, Color, Crossing};

    fn hopf() -> ColoredDiagram {
        ColoredDiagram::new(
            vec![
                Crossing::new("c1", Sign::Neg, [1, 2, 3, 4]),
                Crossing::new("c2", Sign::Neg, [4, 3, 2, 1]),
            ],
            vec!["a".into(), "a".into()],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn brackets() {
        let unknot = ColoredDiagram::unknot("a".into());
        assert_eq!(
            kauffman_bracket(&unknot, Exec::Sequential)
                .unwrap()
                .to_string(),
            "1"
        );
        let kink = ColoredDiagram::new(
            vec![Crossing::new("k", Sign::Pos, [1, 2, 2, 1])],
            vec!["a".into()],
            vec![],
        )
        .unwrap();
        assert_eq!(
            kauffman_bracket(&kink, Exec::Sequential)
                .unwrap()
                .to_string(),
            "-A^3"
        );
        assert_eq!(
            kauffman_bracket(&hopf(), Exec::Parallel)
                .unwrap()
                .to_string(),
            "-A^4 - A^-4"
        );
        let two = ColoredDiagram::unlink(["a".into(), "b".into()]);
        assert_eq!(
            kauffman_bracket(&two, Exec::Sequential)
                .unwrap()
                .to_string(),
            "-A^2 - A^-2"
        );
    }

    #[test]
    fn writhes() {
        assert_eq!(writhe(&hopf()), -2);
        assert_eq!(writhe(&ColoredDiagram::unknot("a".into())), 0);
    }

    #[test]
    fn jones_polynomials() {
        assert_eq!(
            jones(&ColoredDiagram::unknot("a".into()), Exec::Sequential)
                .unwrap()
                .to_string(),
            "1"
        );
        assert_eq!(
            jones(&hopf(), Exec::Sequential).unwrap().to_string(),
            "-s^-1 - s^-5"
        );
        let cs = vec![Color::from("a"); 2];
        let left = braid_closure(&parse_braid_word("s1^-1 s1^-1 s1^-1").unwrap(), &cs).unwrap();
        assert_eq!(writhe(&left), -3);
        assert_eq!(
            jones(&left, Exec::Sequential).unwrap().to_string(),
            "s^-2 + s^-6 - s^-8"
        );
        assert_eq!(
            jones(&left.mirror(), Exec::Sequential).unwrap().to_string(),
            "-s^8 + s^6 + s^2"
        );
        let fig8 = braid_closure(
            &parse_braid_word("s1 s2^-1 s1 s2^-1").unwrap(),
            &vec![Color::from("a"); 3],
        )
        .unwrap();
        assert_eq!(
            jones(&fig8, Exec::Parallel).unwrap().to_string(),
            "s^4 - s^2 + 1 - s^-2 + s^-4"
        );
    }
}
