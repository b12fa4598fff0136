use std::collections::BTreeMap;
use std::fmt;

use super::{Color, DiagramError};

/// Color of each component, indexed by canonical component index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloration {
    colors: Vec<Color>,
}

impl Coloration {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloration { colors }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Colors renamed `0, 1, 2, ...` by first appearance.
    pub fn canonical(&self) -> Vec<usize> {
        let mut seen: BTreeMap<&Color, usize> = BTreeMap::new();
        self.colors
            .iter()
            .map(|c| {
                let next = seen.len();
                *seen.entry(c).or_insert(next)
            })
            .collect()
    }

    /// Two colorations are equivalent when they induce the same partition.
    pub fn equivalent(&self, other: &Coloration) -> Result<bool, DiagramError> {
        if self.len() != other.len() {
            return Err(DiagramError::DomainMismatch(self.len(), other.len()));
        }
        Ok(self.canonical() == other.canonical())
    }

    pub fn partition(&self) -> ComponentPartition {
        ComponentPartition::from_labels(&self.canonical())
    }
}

/// Set partition of the component indices; blocks are sorted and ordered by
/// their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentPartition {
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn from_labels<L: Ord + Clone>(labels: &[L]) -> Self {
        let mut by_label: BTreeMap<L, Vec<usize>> = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            by_label.entry(l.clone()).or_default().push(i);
        }
        let mut blocks: Vec<Vec<usize>> = by_label.into_values().collect();
        blocks.sort();
        ComponentPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Rank in the partition lattice: elements minus blocks.
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum::<usize>() - self.blocks.len()
    }

    /// Block label of every element.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.blocks.iter().map(Vec::len).sum();
        let mut out = vec![0; n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                out[i] = b;
            }
        }
        out
    }

    /// All set partitions of `0..n`, via restricted growth strings.
    pub fn enumerate(n: usize) -> Vec<ComponentPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<ComponentPartition>) {
            if i == rgs.len() {
                out.push(ComponentPartition::from_labels(rgs));
                return;
            }
            for v in 0..=max + 1 {
                rgs[i] = v;
                rec(i + 1, max.max(v), rgs, out);
            }
        }
        if n == 0 {
            return vec![ComponentPartition { blocks: Vec::new() }];
        }
        rgs[0] = 0;
        rec(1, 0, &mut rgs, &mut out);
        out
    }
}

/// `{1 2}{3}` with 1-based elements.
impl fmt::Display for ComponentPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let inner: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{{{}}}", inner.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(s: &str) -> Coloration {
        Coloration::new(s.split(',').map(|c| Color(c.into())).collect())
    }

    #[test]
    fn equivalence() {
        assert!(col("a,b,a").equivalent(&col("x,y,x")).unwrap());
        assert!(!col("a,b,a").equivalent(&col("x,x,y")).unwrap());
        assert_eq!(col("q,p,q").canonical(), vec![0, 1, 0]);
        assert!(col("a,b").equivalent(&col("a")).is_err());
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, b) in bell.iter().enumerate() {
            assert_eq!(ComponentPartition::enumerate(n).len(), *b, "n = {n}");
        }
    }

    #[test]
    fn partition_display_and_rank() {
        let p = col("a,b,a").partition();
        assert_eq!(p.to_string(), "{1 3}{2}");
        assert_eq!(p.rank(), 1);
        assert_eq!(p.labels(), vec![0, 1, 0]);
    }
}
