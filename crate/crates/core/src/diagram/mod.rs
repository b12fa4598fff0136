//! Oriented colored link diagrams.
//!
//! A diagram is a list of crossings whose four ports (under/over, in/out) name
//! oriented edges, plus zero-crossing circles ("free loops"). Every edge is the
//! outgoing port of exactly one crossing and the incoming port of exactly one
//! crossing, so following `under_in -> under_out` and `over_in -> over_out`
//! through crossings traces closed components.
//!
//! The sign of a crossing fixes the cyclic order of its ports in the plane, so
//! the diagram also carries a rotation system; [`ColoredDiagram::faces`] and
//! [`ColoredDiagram::is_planar`] use it.

mod braid;
mod coloring;
mod edit;
mod json;
mod moves;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use braid::{braid_closure, parse_braid_word, BraidLetter};
pub use coloring::{Coloration, ComponentPartition};
pub use json::{parse_diagram, to_json};
pub use moves::{ArcRef, ArcSide, Move, MoveKind};

pub type EdgeId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingId(pub String);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for CrossingId {
    fn from(s: &str) -> Self {
        CrossingId(s.to_string())
    }
}

/// Color names are totally ordered; merging two colors keeps the smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(pub String);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Color {
    fn from(s: &str) -> Self {
        Color(s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// Which of the two strands at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Under,
    Over,
}

/// One of the four ports of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Port {
    UnderIn,
    UnderOut,
    OverIn,
    OverOut,
}

impl Port {
    pub fn level(self) -> Level {
        match self {
            Port::UnderIn | Port::UnderOut => Level::Under,
            Port::OverIn | Port::OverOut => Level::Over,
        }
    }

    pub fn is_out(self) -> bool {
        matches!(self, Port::UnderOut | Port::OverOut)
    }

    pub fn input(level: Level) -> Port {
        match level {
            Level::Under => Port::UnderIn,
            Level::Over => Port::OverIn,
        }
    }

    pub fn output(level: Level) -> Port {
        match level {
            Level::Under => Port::UnderOut,
            Level::Over => Port::OverOut,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: CrossingId,
    pub sign: Sign,
    pub under_in: EdgeId,
    pub under_out: EdgeId,
    pub over_in: EdgeId,
    pub over_out: EdgeId,
}

impl Crossing {
    pub fn new(id: impl Into<String>, sign: Sign, ports: [EdgeId; 4]) -> Self {
        let [under_in, under_out, over_in, over_out] = ports;
        Crossing {
            id: CrossingId(id.into()),
            sign,
            under_in,
            under_out,
            over_in,
            over_out,
        }
    }

    pub fn port(&self, p: Port) -> EdgeId {
        match p {
            Port::UnderIn => self.under_in,
            Port::UnderOut => self.under_out,
            Port::OverIn => self.over_in,
            Port::OverOut => self.over_out,
        }
    }

    pub fn port_mut(&mut self, p: Port) -> &mut EdgeId {
        match p {
            Port::UnderIn => &mut self.under_in,
            Port::UnderOut => &mut self.under_out,
            Port::OverIn => &mut self.over_in,
            Port::OverOut => &mut self.over_out,
        }
    }

    /// Ports in counterclockwise order, starting at `under_in`.
    pub fn ccw_ports(&self) -> [Port; 4] {
        match self.sign {
            Sign::Pos => [Port::UnderIn, Port::OverOut, Port::UnderOut, Port::OverIn],
            Sign::Neg => [Port::UnderIn, Port::OverIn, Port::UnderOut, Port::OverOut],
        }
    }

    pub fn edges(&self) -> [EdgeId; 4] {
        [self.under_in, self.under_out, self.over_in, self.over_out]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed diagram document: {0}")]
    Malformed(String),
    #[error("edge {edge} is used {as_in} time(s) as an incoming port and {as_out} time(s) as an outgoing port")]
    EdgeUse {
        edge: EdgeId,
        as_in: usize,
        as_out: usize,
    },
    #[error("crossing {0} has colliding ports")]
    PortCollision(CrossingId),
    #[error("duplicate crossing id {0}")]
    DuplicateCrossing(CrossingId),
    #[error("expected {expected} colors, got {found}")]
    ColorCount { expected: usize, found: usize },
    #[error("component through edge {0} carries more than one color")]
    MixedComponent(EdgeId),
    #[error("edge {0} has no color")]
    Uncolored(EdgeId),
    #[error("unknown crossing {0}")]
    UnknownCrossing(CrossingId),
    #[error("unknown color {0}")]
    UnknownColor(Color),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("invalid component order: {0}")]
    BadOrder(String),
    #[error("diagram has no components")]
    Empty,
    #[error("braid generator {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i64, strands: usize },
    #[error("strands closing into one component carry different colors ({0} vs {1})")]
    InconsistentStrandColors(Color, Color),
    #[error("malformed braid word: {0}")]
    BadBraidWord(String),
    #[error("move not applicable: {0}")]
    InapplicableMove(String),
    #[error("colorations cover different component sets ({0} vs {1})")]
    DomainMismatch(usize, usize),
}

/// A component as a closed walk. Free loops have no edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub edges: Vec<EdgeId>,
    pub color: Color,
}

impl Component {
    pub fn is_free_loop(&self) -> bool {
        self.edges.is_empty()
    }
}

/// One side of a face boundary: the edge and whether the face lies on the
/// edge's left (with respect to the edge orientation).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSide {
    pub edge: EdgeId,
    pub left: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub sides: Vec<FaceSide>,
    /// Crossing indices visited along the boundary, aligned with `sides`: the
    /// walk along `sides[i]` ends at `corners[i]`.
    pub corners: Vec<usize>,
}

/// Where each edge starts and ends.
#[derive(Debug, Clone)]
pub(crate) struct Topology {
    pub head: HashMap<EdgeId, (usize, Level)>,
    pub tail: HashMap<EdgeId, (usize, Level)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDiagram {
    crossings: Vec<Crossing>,
    edge_colors: BTreeMap<EdgeId, Color>,
    free_loops: Vec<Color>,
    /// Base-point edge of each crossing-bearing component, in traversal order.
    order: Vec<EdgeId>,
}

impl ColoredDiagram {
    /// Builds and validates a diagram. `colors` gives one color per
    /// crossing-bearing component in canonical order (ascending minimal edge).
    /// Component order and base points take their default values.
    pub fn new(
        crossings: Vec<Crossing>,
        colors: Vec<Color>,
        free_loops: Vec<Color>,
    ) -> Result<Self, DiagramError> {
        let comps = Self::trace_components(&crossings)?;
        if comps.len() != colors.len() {
            return Err(DiagramError::ColorCount {
                expected: comps.len(),
                found: colors.len(),
            });
        }
        let mut edge_colors = BTreeMap::new();
        for (edges, color) in comps.iter().zip(colors) {
            for e in edges {
                edge_colors.insert(*e, color.clone());
            }
        }
        let d = ColoredDiagram {
            crossings,
            edge_colors,
            free_loops,
            order: Vec::new(),
        }
        .with_default_order();
        d.validate()?;
        Ok(d)
    }

    /// Internal constructor from per-edge colors; repairs the order.
    pub(crate) fn from_parts(
        crossings: Vec<Crossing>,
        edge_colors: BTreeMap<EdgeId, Color>,
        free_loops: Vec<Color>,
        order: Vec<EdgeId>,
    ) -> Self {
        let mut d = ColoredDiagram {
            crossings,
            edge_colors,
            free_loops,
            order,
        };
        d.repair_order();
        d
    }

    pub fn unlink(colors: impl IntoIterator<Item = Color>) -> Self {
        ColoredDiagram {
            crossings: Vec::new(),
            edge_colors: BTreeMap::new(),
            free_loops: colors.into_iter().collect(),
            order: Vec::new(),
        }
    }

    pub fn unknot(color: Color) -> Self {
        Self::unlink([color])
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossing(&self, id: &CrossingId) -> Option<&Crossing> {
        self.crossings.iter().find(|c| &c.id == id)
    }

    pub(crate) fn crossing_index(&self, id: &CrossingId) -> Result<usize, DiagramError> {
        self.crossings
            .iter()
            .position(|c| &c.id == id)
            .ok_or_else(|| DiagramError::UnknownCrossing(id.clone()))
    }

    pub fn free_loops(&self) -> &[Color] {
        &self.free_loops
    }

    pub fn edge_color(&self, e: EdgeId) -> Option<&Color> {
        self.edge_colors.get(&e)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_colors.keys().copied()
    }

    pub fn max_edge(&self) -> EdgeId {
        self.edge_colors.keys().next_back().copied().unwrap_or(0)
    }

    /// Base-point edges of the crossing-bearing components, in traversal order.
    pub fn base_points(&self) -> &[EdgeId] {
        &self.order
    }

    pub fn component_count(&self) -> usize {
        self.order.len() + self.free_loops.len()
    }

    /// Colors present on some component.
    pub fn colors(&self) -> BTreeSet<Color> {
        self.edge_colors
            .values()
            .chain(self.free_loops.iter())
            .cloned()
            .collect()
    }

    pub fn color_count(&self) -> usize {
        self.colors().len()
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub(crate) fn topology(&self) -> Topology {
        topology_of(&self.crossings)
    }

    /// Closed walks of edges through the crossings, each starting at its
    /// minimal edge, sorted by that edge.
    fn trace_components(crossings: &[Crossing]) -> Result<Vec<Vec<EdgeId>>, DiagramError> {
        check_ports(crossings)?;
        let topo = topology_of(crossings);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let all: BTreeSet<EdgeId> = topo.head.keys().copied().collect();
        for &start in &all {
            if seen.contains(&start) {
                continue;
            }
            let walk = walk_from(crossings, &topo, start);
            seen.extend(walk.iter().copied());
            out.push(walk);
        }
        Ok(out)
    }

    /// Components in canonical order: crossing-bearing ones by ascending
    /// minimal edge, then free loops in list order.
    pub fn components(&self) -> Vec<Component> {
        let topo = self.topology();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.edge_colors.keys() {
            if seen.contains(&start) {
                continue;
            }
            let walk = walk_from(&self.crossings, &topo, start);
            seen.extend(walk.iter().copied());
            out.push(Component {
                color: self.edge_colors[&start].clone(),
                edges: walk,
            });
        }
        out.extend(self.free_loops.iter().map(|c| Component {
            edges: Vec::new(),
            color: c.clone(),
        }));
        out
    }

    /// Maps every edge to the canonical index of its component.
    pub fn edge_components(&self) -> HashMap<EdgeId, usize> {
        let mut m = HashMap::new();
        for (i, comp) in self.components().iter().enumerate() {
            for e in &comp.edges {
                m.insert(*e, i);
            }
        }
        m
    }

    /// Canonical component indices in traversal order (free loops last).
    pub fn component_order(&self) -> Vec<usize> {
        let ec = self.edge_components();
        let crossing_comps = self.order.len();
        self.order
            .iter()
            .map(|e| ec[e])
            .chain(crossing_comps..crossing_comps + self.free_loops.len())
            .collect()
    }

    /// Edges of the component through `base`, walked from `base`.
    pub fn walk(&self, base: EdgeId) -> Vec<EdgeId> {
        walk_from(&self.crossings, &self.topology(), base)
    }

    fn with_default_order(mut self) -> Self {
        self.order.clear();
        self.repair_order();
        self
    }

    /// Keeps the first base point listed for each component, drops stale ones
    /// and appends missing components by ascending minimal edge.
    fn repair_order(&mut self) {
        let ec = self.edge_components();
        let mut taken = BTreeSet::new();
        let mut order = Vec::new();
        for e in &self.order {
            if let Some(&c) = ec.get(e) {
                if taken.insert(c) {
                    order.push(*e);
                }
            }
        }
        for comp in self.components() {
            if let Some(&first) = comp.edges.first() {
                if taken.insert(ec[&first]) {
                    order.push(first);
                }
            }
        }
        self.order = order;
    }

    /// Replaces the traversal order. `order` lists canonical component indices
    /// (all components, free loops included, or only the crossing-bearing
    /// ones); `base_points`, when given, has one edge per crossing-bearing
    /// component in canonical index order.
    pub fn with_order(
        &self,
        order: &[usize],
        base_points: Option<&[EdgeId]>,
    ) -> Result<Self, DiagramError> {
        let comps = self.components();
        let crossing_comps = comps.iter().filter(|c| !c.is_free_loop()).count();
        let sorted: BTreeSet<usize> = order.iter().copied().collect();
        let full = sorted.len() == order.len() && sorted.iter().copied().eq(0..comps.len());
        let partial = sorted.len() == order.len() && sorted.iter().copied().eq(0..crossing_comps);
        if !full && !partial {
            return Err(DiagramError::BadOrder(format!(
                "{order:?} is not a permutation of the components"
            )));
        }
        let bases: Vec<EdgeId> = match base_points {
            None => comps
                .iter()
                .take(crossing_comps)
                .map(|c| c.edges[0])
                .collect(),
            Some(b) => {
                if b.len() != crossing_comps {
                    return Err(DiagramError::BadOrder(format!(
                        "{} base points for {crossing_comps} components",
                        b.len()
                    )));
                }
                for (i, e) in b.iter().enumerate() {
                    if !comps[i].edges.contains(e) {
                        return Err(DiagramError::BadOrder(format!(
                            "base point {e} is not on component {i}"
                        )));
                    }
                }
                b.to_vec()
            }
        };
        let mut d = self.clone();
        d.order = order
            .iter()
            .filter(|&&i| i < crossing_comps)
            .map(|&i| bases[i])
            .collect();
        Ok(d)
    }

    /// Sets the traversal order directly from base-point edges, one per
    /// crossing-bearing component.
    pub fn with_base_points(&self, bases: &[EdgeId]) -> Result<Self, DiagramError> {
        let ec = self.edge_components();
        let mut seen = BTreeSet::new();
        for e in bases {
            let c = ec
                .get(e)
                .ok_or_else(|| DiagramError::BadOrder(format!("unknown edge {e}")))?;
            if !seen.insert(*c) {
                return Err(DiagramError::BadOrder(format!(
                    "two base points on component {c}"
                )));
            }
        }
        if seen.len() != self.order.len() {
            return Err(DiagramError::BadOrder(
                "every component needs a base point".into(),
            ));
        }
        let mut d = self.clone();
        d.order = bases.to_vec();
        Ok(d)
    }

    pub fn coloration(&self) -> Coloration {
        Coloration::new(self.components().into_iter().map(|c| c.color).collect())
    }

    /// Recolors components; `colors` is indexed by canonical component index.
    pub fn with_coloration(&self, colors: &[Color]) -> Result<Self, DiagramError> {
        let comps = self.components();
        if comps.len() != colors.len() {
            return Err(DiagramError::ColorCount {
                expected: comps.len(),
                found: colors.len(),
            });
        }
        let mut d = self.clone();
        let mut free = Vec::new();
        for (comp, color) in comps.iter().zip(colors) {
            if comp.is_free_loop() {
                free.push(color.clone());
            }
            for e in &comp.edges {
                d.edge_colors.insert(*e, color.clone());
            }
        }
        d.free_loops = free;
        Ok(d)
    }

    /// Renames colors through `f`. `f` should be injective to preserve the
    /// coloration class.
    pub fn map_colors(&self, f: impl Fn(&Color) -> Color) -> Self {
        let mut d = self.clone();
        for c in d.edge_colors.values_mut() {
            *c = f(c);
        }
        for c in d.free_loops.iter_mut() {
            *c = f(c);
        }
        d
    }

    /// Checks the structural invariants: port usage, one color per component,
    /// and a complete traversal order.
    pub fn validate(&self) -> Result<(), DiagramError> {
        if self.component_count() == 0 {
            return Err(DiagramError::Empty);
        }
        let comps = Self::trace_components(&self.crossings)?;
        for walk in &comps {
            let first = self
                .edge_colors
                .get(&walk[0])
                .ok_or(DiagramError::Uncolored(walk[0]))?;
            for e in walk {
                match self.edge_colors.get(e) {
                    None => return Err(DiagramError::Uncolored(*e)),
                    Some(c) if c != first => return Err(DiagramError::MixedComponent(*e)),
                    _ => {}
                }
            }
        }
        let edge_total: usize = comps.iter().map(Vec::len).sum();
        if edge_total != self.edge_colors.len() {
            return Err(DiagramError::Malformed(
                "colors given for edges not in the diagram".into(),
            ));
        }
        let ec = self.edge_components();
        let mut seen = BTreeSet::new();
        for e in &self.order {
            let c = ec
                .get(e)
                .ok_or_else(|| DiagramError::BadOrder(format!("unknown base point {e}")))?;
            if !seen.insert(*c) {
                return Err(DiagramError::BadOrder(format!(
                    "component {c} listed twice"
                )));
            }
        }
        if seen.len() != comps.len() {
            return Err(DiagramError::BadOrder(
                "order does not cover every component".into(),
            ));
        }
        Ok(())
    }

    /// Faces of the underlying 4-valent map, each traced with the face on the
    /// left of the walking direction.
    pub fn faces(&self) -> Vec<Face> {
        let topo = self.topology();
        let mut visited: BTreeSet<(usize, Port)> = BTreeSet::new();
        let mut faces = Vec::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for p in c.ccw_ports() {
                if visited.contains(&(ci, p)) {
                    continue;
                }
                let mut face = Face {
                    sides: Vec::new(),
                    corners: Vec::new(),
                };
                let (mut cur_c, mut cur_p) = (ci, p);
                while visited.insert((cur_c, cur_p)) {
                    let cr = &self.crossings[cur_c];
                    let e = cr.port(cur_p);
                    let forward = cur_p.is_out();
                    let (nc, level) = if forward {
                        topo.head[&e]
                    } else {
                        topo.tail[&e]
                    };
                    let arrive = if forward {
                        Port::input(level)
                    } else {
                        Port::output(level)
                    };
                    face.sides.push(FaceSide {
                        edge: e,
                        left: forward,
                    });
                    face.corners.push(nc);
                    // turn clockwise: previous port in ccw order
                    let ring = self.crossings[nc].ccw_ports();
                    let k = ring
                        .iter()
                        .position(|q| *q == arrive)
                        .expect("port on ring");
                    cur_c = nc;
                    cur_p = ring[(k + 3) % 4];
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler check: each connected piece of the crossing graph must satisfy
    /// `V - E + F = 2`.
    pub fn is_planar(&self) -> bool {
        if self.crossings.is_empty() {
            return true;
        }
        let n = self.crossings.len();
        let topo = self.topology();
        let mut uf = UnionFind::new(n);
        for (e, (h, _)) in &topo.head {
            uf.union(*h, topo.tail[e].0);
        }
        let pieces = (0..n).filter(|&i| uf.find(i) == i).count();
        self.faces().len() == n + 2 * pieces
    }
}

/// Disjoint-set forest over `0..n`.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Unions two sets; the smaller index becomes the root.
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

fn check_ports(crossings: &[Crossing]) -> Result<(), DiagramError> {
    let mut ids = BTreeSet::new();
    let mut uses: BTreeMap<EdgeId, (usize, usize)> = BTreeMap::new();
    for c in crossings {
        if !ids.insert(&c.id) {
            return Err(DiagramError::DuplicateCrossing(c.id.clone()));
        }
        if c.under_in == c.under_out || c.over_in == c.over_out {
            return Err(DiagramError::PortCollision(c.id.clone()));
        }
        uses.entry(c.under_in).or_default().0 += 1;
        uses.entry(c.over_in).or_default().0 += 1;
        uses.entry(c.under_out).or_default().1 += 1;
        uses.entry(c.over_out).or_default().1 += 1;
    }
    // overused edges are reported before missing ends
    let bad = uses
        .iter()
        .find(|(_, (i, o))| *i > 1 || *o > 1)
        .or_else(|| uses.iter().find(|(_, (i, o))| *i != 1 || *o != 1));
    if let Some((&edge, &(as_in, as_out))) = bad {
        return Err(DiagramError::EdgeUse {
            edge,
            as_in,
            as_out,
        });
    }
    Ok(())
}

pub(crate) fn topology_of(crossings: &[Crossing]) -> Topology {
    let mut head = HashMap::new();
    let mut tail = HashMap::new();
    for (i, c) in crossings.iter().enumerate() {
        head.insert(c.under_in, (i, Level::Under));
        head.insert(c.over_in, (i, Level::Over));
        tail.insert(c.under_out, (i, Level::Under));
        tail.insert(c.over_out, (i, Level::Over));
    }
    Topology { head, tail }
}

pub(crate) fn walk_from(crossings: &[Crossing], topo: &Topology, start: EdgeId) -> Vec<EdgeId> {
    let mut walk = vec![start];
    let mut e = start;
    loop {
        let (ci, level) = topo.head[&e];
        e = crossings[ci].port(Port::output(level));
        if e == start {
            return walk;
        }
        walk.push(e);
    }
}
