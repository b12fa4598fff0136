//! Local edits: switching, smoothing, recoloring and the structural
//! combinators. Every edit returns a new diagram.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Color, ColoredDiagram, Crossing, CrossingId, DiagramError, EdgeId, Port, UnionFind};

/// How the strands of a removed crossing are reconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Junction {
    /// Each strand passes straight through (`in -> out` on the same level).
    Through,
    /// Oriented smoothing: `under_in -> over_out`, `over_in -> under_out`.
    Oriented,
}

impl ColoredDiagram {
    /// Changes the crossing `id` from over to under (and flips its sign).
    pub fn switch(&self, id: &CrossingId) -> Result<ColoredDiagram, DiagramError> {
        let i = self.crossing_index(id)?;
        let mut d = self.clone();
        switch_in_place(&mut d.crossings[i]);
        Ok(d)
    }

    /// Recolors every component colored `a` or `b` with `min(a, b)`.
    pub fn merge_colors(&self, a: &Color, b: &Color) -> Result<ColoredDiagram, DiagramError> {
        let present = self.colors();
        for c in [a, b] {
            if !present.contains(c) {
                return Err(DiagramError::UnknownColor(c.clone()));
            }
        }
        if a == b {
            return Ok(self.clone());
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        Ok(self.map_colors(|c| if c == drop { keep.clone() } else { c.clone() }))
    }

    /// Colors of the under and over strands at a crossing.
    pub fn strand_colors(&self, id: &CrossingId) -> Result<(Color, Color), DiagramError> {
        let c = &self.crossings[self.crossing_index(id)?];
        Ok((
            self.edge_colors[&c.under_in].clone(),
            self.edge_colors[&c.over_in].clone(),
        ))
    }

    /// Oriented smoothing at `id`, merging the two strand colors.
    pub fn smooth(&self, id: &CrossingId) -> Result<ColoredDiagram, DiagramError> {
        let i = self.crossing_index(id)?;
        let (a, b) = self.strand_colors(id)?;
        let merged = self.merge_colors(&a, &b)?;
        Ok(merged.splice(&[(i, Junction::Oriented)]))
    }

    /// Deletes the listed crossings and joins the edge ends according to each
    /// junction. Edge classes that lose all their crossings become free loops.
    pub(crate) fn splice(&self, removed: &[(usize, Junction)]) -> ColoredDiagram {
        let ids: Vec<EdgeId> = self.edge_colors.keys().copied().collect();
        let index: HashMap<EdgeId, usize> = ids.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut uf = UnionFind::new(ids.len());
        for &(ci, j) in removed {
            let c = &self.crossings[ci];
            let pairs = match j {
                Junction::Through => [(c.under_in, c.under_out), (c.over_in, c.over_out)],
                Junction::Oriented => [(c.under_in, c.over_out), (c.over_in, c.under_out)],
            };
            for (a, b) in pairs {
                uf.union(index[&a], index[&b]);
            }
        }
        // ids are sorted, so the root of each class is its minimal edge
        let mut rep = |e: EdgeId| ids[uf.find(index[&e])];

        let gone: BTreeSet<usize> = removed.iter().map(|(i, _)| *i).collect();
        let mut crossings = Vec::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if gone.contains(&i) {
                continue;
            }
            let mut c = c.clone();
            for p in [Port::UnderIn, Port::UnderOut, Port::OverIn, Port::OverOut] {
                let e = c.port(p);
                *c.port_mut(p) = rep(e);
            }
            crossings.push(c);
        }
        let used: BTreeSet<EdgeId> = crossings.iter().flat_map(|c| c.edges()).collect();
        let mut edge_colors = BTreeMap::new();
        let mut free_loops = self.free_loops.clone();
        let mut classes = BTreeSet::new();
        for &e in &ids {
            let r = rep(e);
            if !classes.insert(r) {
                continue;
            }
            let color = self.edge_colors[&r].clone();
            if used.contains(&r) {
                edge_colors.insert(r, color);
            } else {
                free_loops.push(color);
            }
        }
        let order = self.order.iter().map(|&e| rep(e)).collect();
        ColoredDiagram::from_parts(crossings, edge_colors, free_loops, order)
    }

    /// Reverses the orientation of every component.
    pub fn reverse_all(&self) -> ColoredDiagram {
        let mut d = self.clone();
        for c in &mut d.crossings {
            std::mem::swap(&mut c.under_in, &mut c.under_out);
            std::mem::swap(&mut c.over_in, &mut c.over_out);
        }
        d
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> ColoredDiagram {
        let mut d = self.clone();
        for c in &mut d.crossings {
            switch_in_place(c);
        }
        d
    }

    /// Places `other` beside `self`. Edge ids and crossing ids of `other` are
    /// shifted or renamed to stay distinct, and its colors are renamed into a
    /// namespace disjoint from the colors of `self`.
    pub fn disjoint_union(&self, other: &ColoredDiagram) -> ColoredDiagram {
        self.disjoint_union_with_map(other).0
    }

    pub(crate) fn disjoint_union_with_map(
        &self,
        other: &ColoredDiagram,
    ) -> (ColoredDiagram, BTreeMap<Color, Color>, EdgeId) {
        let offset = self.max_edge();
        let mine = self.colors();
        let theirs = other.colors();
        let mut used: BTreeSet<Color> = mine.union(&theirs).cloned().collect();
        let mut rename = BTreeMap::new();
        for c in &theirs {
            let fresh = if !mine.contains(c) {
                c.clone()
            } else {
                let mut name = c.0.clone();
                loop {
                    name.push('\'');
                    let cand = Color(name.clone());
                    if !used.contains(&cand) {
                        break cand;
                    }
                }
            };
            used.insert(fresh.clone());
            rename.insert(c.clone(), fresh);
        }

        let ids: BTreeSet<CrossingId> = self.crossings.iter().map(|c| c.id.clone()).collect();
        let mut taken = ids.clone();
        let mut d = self.clone();
        for c in &other.crossings {
            let mut c = c.clone();
            for p in [Port::UnderIn, Port::UnderOut, Port::OverIn, Port::OverOut] {
                *c.port_mut(p) += offset;
            }
            while taken.contains(&c.id) {
                c.id.0.push('\'');
            }
            taken.insert(c.id.clone());
            d.crossings.push(c);
        }
        for (e, col) in &other.edge_colors {
            d.edge_colors.insert(e + offset, rename[col].clone());
        }
        d.free_loops
            .extend(other.free_loops.iter().map(|c| rename[c].clone()));
        d.order.extend(other.order.iter().map(|e| e + offset));
        (d, rename, offset)
    }

    /// Connected sum along component `comp1` of `self` and `comp2` of
    /// `other` (canonical component indices). The joined component gets one
    /// color: the two color classes are merged.
    pub fn connected_sum(
        &self,
        comp1: usize,
        other: &ColoredDiagram,
        comp2: usize,
    ) -> Result<ColoredDiagram, DiagramError> {
        let c1 = self
            .components()
            .get(comp1)
            .cloned()
            .ok_or(DiagramError::UnknownComponent(comp1))?;
        let c2 = other
            .components()
            .get(comp2)
            .cloned()
            .ok_or(DiagramError::UnknownComponent(comp2))?;
        let (union, rename, offset) = self.disjoint_union_with_map(other);
        let color2 = rename[&c2.color].clone();
        let mut d = union.merge_colors(&c1.color, &color2)?;

        match (c1.edges.first(), c2.edges.first()) {
            (_, None) => {
                // summing with a circle: drop that circle
                let free_idx = comp2
                    - other
                        .components()
                        .iter()
                        .filter(|c| !c.is_free_loop())
                        .count();
                d.free_loops.remove(self.free_loops.len() + free_idx);
            }
            (None, Some(_)) => {
                let free_idx = comp1
                    - self
                        .components()
                        .iter()
                        .filter(|c| !c.is_free_loop())
                        .count();
                d.free_loops.remove(free_idx);
            }
            (Some(&e1), Some(&e2)) => {
                let e2 = e2 + offset;
                let topo = d.topology();
                let (h1, l1) = topo.head[&e1];
                let (h2, l2) = topo.head[&e2];
                // e1 now runs tail(e1) -> head(e2), e2 runs tail(e2) -> head(e1)
                *d.crossings[h1].port_mut(Port::input(l1)) = e2;
                *d.crossings[h2].port_mut(Port::input(l2)) = e1;
                d.repair_order();
            }
        }
        Ok(d)
    }
}

fn switch_in_place(c: &mut Crossing) {
    std::mem::swap(&mut c.under_in, &mut c.over_in);
    std::mem::swap(&mut c.under_out, &mut c.over_out);
    c.sign = c.sign.flip();
}
