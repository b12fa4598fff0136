use std::collections::BTreeMap;

use super::{Color, ColoredDiagram, Crossing, DiagramError, EdgeId, Sign};

/// `σ_index^{±1}`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: i64,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn new(index: i64, sign: Sign) -> Self {
        BraidLetter { index, sign }
    }
}

/// Parses words like `"s1^-1 s2 s1^-1"`; separators may be spaces or commas.
/// A bare signed integer (`"-1"`, `"2"`) is also accepted.
pub fn parse_braid_word(text: &str) -> Result<Vec<BraidLetter>, DiagramError> {
    let bad = |t: &str| DiagramError::BadBraidWord(t.to_string());
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|tok| {
            if let Ok(v) = tok.parse::<i64>() {
                if v == 0 {
                    return Err(bad(tok));
                }
                let sign = if v > 0 { Sign::Pos } else { Sign::Neg };
                return Ok(BraidLetter::new(v.abs(), sign));
            }
            let body = tok.strip_prefix(['s', 'σ']).ok_or_else(|| bad(tok))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let index: i64 = idx.parse().map_err(|_| bad(tok))?;
            let sign = match exp {
                "1" | "+1" => Sign::Pos,
                "-1" => Sign::Neg,
                _ => return Err(bad(tok)),
            };
            Ok(BraidLetter::new(index, sign))
        })
        .collect()
}

/// Trace closure of a braid word; `strand_colors[p]` colors the strand
/// starting at position `p` (0-based) at the bottom of the braid.
///
/// Strands run upward. `σ_i` carries the strand at position `i` over to
/// position `i + 1` (a positive crossing); `σ_i^{-1}` carries it under.
pub fn braid_closure(
    word: &[BraidLetter],
    strand_colors: &[Color],
) -> Result<ColoredDiagram, DiagramError> {
    let n = strand_colors.len();
    if n == 0 {
        return Err(DiagramError::Empty);
    }
    for l in word {
        if l.index < 1 || l.index as usize >= n {
            return Err(DiagramError::GeneratorOutOfRange {
                index: l.index,
                strands: n,
            });
        }
    }

    // last generator touching each position closes the strand back onto the
    // initial edge of that position
    let mut last: BTreeMap<usize, usize> = BTreeMap::new();
    for (k, l) in word.iter().enumerate() {
        let i = l.index as usize - 1;
        last.insert(i, k);
        last.insert(i + 1, k);
    }

    let initial: Vec<EdgeId> = (1..=n as EdgeId).collect();
    let mut cur = initial.clone();
    let mut color_at: Vec<Color> = strand_colors.to_vec();
    let mut next_edge = n as EdgeId + 1;
    let mut edge_colors = BTreeMap::new();
    let mut crossings = Vec::with_capacity(word.len());

    for (k, l) in word.iter().enumerate() {
        let i = l.index as usize - 1;
        let mut out_edge = |pos: usize| {
            if last[&pos] == k {
                initial[pos]
            } else {
                next_edge += 1;
                next_edge - 1
            }
        };
        let left_out = out_edge(i);
        let right_out = out_edge(i + 1);
        let (left_in, right_in) = (cur[i], cur[i + 1]);
        // the strand from the left moves to the right and vice versa
        let ports = match l.sign {
            Sign::Pos => [right_in, left_out, left_in, right_out],
            Sign::Neg => [left_in, right_out, right_in, left_out],
        };
        crossings.push(Crossing::new(format!("c{}", k + 1), l.sign, ports));
        edge_colors.insert(left_in, color_at[i].clone());
        edge_colors.insert(right_in, color_at[i + 1].clone());
        color_at.swap(i, i + 1);
        cur[i] = left_out;
        cur[i + 1] = right_out;
    }

    let mut free_loops = Vec::new();
    for p in 0..n {
        if color_at[p] != strand_colors[p] {
            return Err(DiagramError::InconsistentStrandColors(
                color_at[p].clone(),
                strand_colors[p].clone(),
            ));
        }
        if !last.contains_key(&p) {
            free_loops.push(strand_colors[p].clone());
        }
    }
    let d = ColoredDiagram::from_parts(crossings, edge_colors, free_loops, Vec::new());
    d.validate()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(s: &str) -> Vec<Color> {
        s.split(',').map(|c| Color(c.into())).collect()
    }

    #[test]
    fn parses_words() {
        let w = parse_braid_word("s1^-1 s2, s1^+1 -2").unwrap();
        assert_eq!(
            w,
            vec![
                BraidLetter::new(1, Sign::Neg),
                BraidLetter::new(2, Sign::Pos),
                BraidLetter::new(1, Sign::Pos),
                BraidLetter::new(2, Sign::Neg)
            ]
        );
        assert!(parse_braid_word("q1").is_err());
        assert!(parse_braid_word("s1^2").is_err());
    }

    #[test]
    fn hopf_closure() {
        let d = braid_closure(&parse_braid_word("s1^-1 s1^-1").unwrap(), &cols("a,b")).unwrap();
        assert_eq!(d.components().len(), 2);
        assert_eq!(d.color_count(), 2);
        assert!(d.crossings().iter().all(|c| c.sign == Sign::Neg));
        assert!(d.is_planar());
    }

    #[test]
    fn trefoil_closure() {
        let d = braid_closure(
            &parse_braid_word("s1^-1 s1^-1 s1^-1").unwrap(),
            &cols("a,a"),
        )
        .unwrap();
        assert_eq!(d.components().len(), 1);
        assert_eq!(d.writhe(), -3);
        assert!(d.is_planar());
        assert!(braid_closure(
            &parse_braid_word("s1^-1 s1^-1 s1^-1").unwrap(),
            &cols("a,b")
        )
        .is_err());
    }

    #[test]
    fn empty_word_is_unknot() {
        let d = braid_closure(&[], &cols("a")).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), &cols("a")[..]);
    }

    #[test]
    fn generator_range_checked() {
        let r = braid_closure(&parse_braid_word("s2").unwrap(), &cols("a,a"));
        assert!(matches!(
            r,
            Err(DiagramError::GeneratorOutOfRange {
                index: 2,
                strands: 2
            })
        ));
    }

    #[test]
    fn three_strand_closures_are_planar() {
        for w in [
            "s1 s2^-1 s1 s2^-1",
            "s1 s2 s1",
            "s2 s1 s2",
            "s1^-1 s2 s2 s1 s2^-1",
        ] {
            let word = parse_braid_word(w).unwrap();
            let d = braid_closure(&word, &cols("a,a,a")).unwrap();
            assert!(d.is_planar(), "{w}");
        }
    }
}
