//! Reidemeister moves on the combinatorial diagram.
//!
//! Sites are read off the faces of the rotation system so that every move is
//! realizable in the plane; the result of each move is checked with
//! [`ColoredDiagram::is_planar`].

use std::collections::{BTreeMap, BTreeSet};

use super::edit::Junction;
use super::{
    ColoredDiagram, Crossing, CrossingId, DiagramError, EdgeId, FaceSide, Level, Port, Sign,
};

/// A strand segment without crossings on it: an edge, or a free loop by its
/// index in [`ColoredDiagram::free_loops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcRef {
    Edge(EdgeId),
    FreeLoop(usize),
}

/// An arc together with the side (relative to its orientation) facing the
/// region where a move happens. For free loops either side is realizable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcSide {
    pub arc: ArcRef,
    pub left: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// Adds a curl on `arc`. `over_first` says whether the strand passes the new
    /// crossing on top the first time.
    R1Add {
        arc: ArcRef,
        sign: Sign,
        over_first: bool,
    },
    R1Remove {
        crossing: CrossingId,
    },
    /// Pushes a finger of `over` across a face and over `under`.
    R2Add {
        over: ArcSide,
        under: ArcSide,
    },
    /// Folds one arc over itself across the face on `side`. With `over_first`
    /// the earlier part of the arc is the finger.
    R2Fold {
        side: ArcSide,
        over_first: bool,
    },
    R2Remove {
        first: CrossingId,
        second: CrossingId,
    },
    /// Slides a strand across the crossing opposite to it in a triangular face.
    R3 {
        crossings: [CrossingId; 3],
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Add { .. } => MoveKind::R1Add,
            Move::R1Remove { .. } => MoveKind::R1Remove,
            Move::R2Add { .. } | Move::R2Fold { .. } => MoveKind::R2Add,
            Move::R2Remove { .. } => MoveKind::R2Remove,
            Move::R3 { .. } => MoveKind::R3,
        }
    }

    /// Change in crossing count.
    pub fn crossing_delta(&self) -> i32 {
        match self.kind() {
            MoveKind::R1Add => 1,
            MoveKind::R1Remove => -1,
            MoveKind::R2Add => 2,
            MoveKind::R2Remove => -2,
            MoveKind::R3 => 0,
        }
    }
}

fn inapplicable(msg: impl Into<String>) -> DiagramError {
    DiagramError::InapplicableMove(msg.into())
}

/// Splits an arc into `pieces` consecutive edges. Returns the piece ids (the
/// first keeps the original id; for a free loop the last piece wraps to the
/// first) and records colors and base points.
struct Splitter<'a> {
    d: &'a mut ColoredDiagram,
    next: EdgeId,
    dropped_loops: BTreeSet<usize>,
}

impl<'a> Splitter<'a> {
    fn new(d: &'a mut ColoredDiagram) -> Self {
        let next = d.max_edge() + 1;
        Splitter {
            d,
            next,
            dropped_loops: BTreeSet::new(),
        }
    }

    fn fresh(&mut self) -> EdgeId {
        self.next += 1;
        self.next - 1
    }

    /// Returns `pieces + 1` edge ids `e_0 .. e_pieces`, where the arc runs
    /// `e_0 -> x_1 -> e_1 -> ... -> x_pieces -> e_pieces`. The head port of the
    /// original edge is moved onto `e_pieces`.
    fn split(&mut self, arc: ArcRef, pieces: usize) -> Result<Vec<EdgeId>, DiagramError> {
        match arc {
            ArcRef::Edge(e) => {
                let color = self
                    .d
                    .edge_colors
                    .get(&e)
                    .cloned()
                    .ok_or_else(|| inapplicable(format!("no edge {e}")))?;
                let mut ids = vec![e];
                for _ in 0..pieces {
                    ids.push(self.fresh());
                }
                let last = *ids.last().unwrap();
                let (h, level) = self.d.topology().head[&e];
                *self.d.crossings[h].port_mut(Port::input(level)) = last;
                for id in &ids {
                    self.d.edge_colors.insert(*id, color.clone());
                }
                Ok(ids)
            }
            ArcRef::FreeLoop(i) => {
                let color = self
                    .d
                    .free_loops
                    .get(i)
                    .cloned()
                    .ok_or_else(|| inapplicable(format!("no free loop {i}")))?;
                if !self.dropped_loops.insert(i) {
                    return Err(inapplicable("free loop used twice"));
                }
                let mut ids: Vec<EdgeId> = (0..pieces).map(|_| self.fresh()).collect();
                ids.push(ids[0]);
                for id in &ids {
                    self.d.edge_colors.insert(*id, color.clone());
                }
                self.d.order.push(ids[0]);
                Ok(ids)
            }
        }
    }

    fn finish(self) {
        let kept: Vec<_> = self
            .d
            .free_loops
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.dropped_loops.contains(i))
            .map(|(_, c)| c.clone())
            .collect();
        self.d.free_loops = kept;
    }
}

impl ColoredDiagram {
    pub fn reidemeister(&self, mv: &Move) -> Result<ColoredDiagram, DiagramError> {
        let out = match mv {
            Move::R1Add {
                arc,
                sign,
                over_first,
            } => self.r1_add(*arc, *sign, *over_first)?,
            Move::R1Remove { crossing } => self.r1_remove(crossing)?,
            Move::R2Add { over, under } => self.r2_add(*over, *under)?,
            Move::R2Fold { side, over_first } => self.r2_fold(*side, *over_first)?,
            Move::R2Remove { first, second } => self.r2_remove(first, second)?,
            Move::R3 { crossings } => self.r3(crossings)?,
        };
        if !out.is_planar() {
            return Err(inapplicable(format!(
                "{mv:?} would leave a non-planar diagram"
            )));
        }
        out.validate()?;
        Ok(out)
    }

    fn fresh_crossing_id(&self, taken: &BTreeSet<String>) -> CrossingId {
        let mut n = self.crossings.len() + 1;
        loop {
            let id = format!("r{n}");
            if !taken.contains(&id) {
                return CrossingId(id);
            }
            n += 1;
        }
    }

    fn crossing_names(&self) -> BTreeSet<String> {
        self.crossings.iter().map(|c| c.id.0.clone()).collect()
    }

    fn r1_add(
        &self,
        arc: ArcRef,
        sign: Sign,
        over_first: bool,
    ) -> Result<ColoredDiagram, DiagramError> {
        let mut names = self.crossing_names();
        let id = self.fresh_crossing_id(&names);
        names.insert(id.0.clone());
        let mut d = self.clone();
        let mut sp = Splitter::new(&mut d);
        let ids = sp.split(arc, 2)?;
        sp.finish();
        let (a, loop_edge, b) = (ids[0], ids[1], ids[2]);
        let ports = if over_first {
            [loop_edge, b, a, loop_edge]
        } else {
            [a, loop_edge, loop_edge, b]
        };
        d.crossings.push(Crossing {
            id,
            sign,
            under_in: ports[0],
            under_out: ports[1],
            over_in: ports[2],
            over_out: ports[3],
        });
        d.repair_order();
        Ok(d)
    }

    fn r1_remove(&self, id: &CrossingId) -> Result<ColoredDiagram, DiagramError> {
        let i = self.crossing_index(id)?;
        let c = &self.crossings[i];
        if c.under_out != c.over_in && c.over_out != c.under_in {
            return Err(inapplicable(format!("{id} is not a curl")));
        }
        Ok(self.splice(&[(i, Junction::Through)]))
    }

    fn r2_add(&self, over: ArcSide, under: ArcSide) -> Result<ColoredDiagram, DiagramError> {
        if over.arc == under.arc {
            return Err(inapplicable("R2 needs two different arcs"));
        }
        if let (ArcRef::Edge(e), ArcRef::Edge(f)) = (over.arc, under.arc) {
            let a = FaceSide {
                edge: e,
                left: over.left,
            };
            let b = FaceSide {
                edge: f,
                left: under.left,
            };
            if !self
                .faces()
                .iter()
                .any(|fc| fc.sides.contains(&a) && fc.sides.contains(&b))
            {
                return Err(inapplicable(format!(
                    "edges {e} and {f} do not share a face on those sides"
                )));
            }
        }
        let mut names = self.crossing_names();
        let k1 = self.fresh_crossing_id(&names);
        names.insert(k1.0.clone());
        let k2 = {
            let mut probe = self.clone();
            probe
                .crossings
                .push(Crossing::new(k1.0.clone(), Sign::Pos, [0, 0, 0, 0]));
            probe.fresh_crossing_id(&names)
        };

        let mut d = self.clone();
        let mut sp = Splitter::new(&mut d);
        let e = sp.split(over.arc, 2)?;
        let f = sp.split(under.arc, 2)?;
        sp.finish();

        // Along the over arc the finger meets k1 then k2. The under arc meets
        // k1 first iff the two arcs face the region from opposite sides; the
        // crossing met first by the over arc has sign +1 iff the region is on
        // the left of the under arc.
        let f_meets_k1_first = over.left != under.left;
        let s1 = if under.left { Sign::Pos } else { Sign::Neg };
        let (u1, u2) = if f_meets_k1_first {
            ((f[0], f[1]), (f[1], f[2]))
        } else {
            ((f[1], f[2]), (f[0], f[1]))
        };
        d.crossings.push(Crossing {
            id: k1,
            sign: s1,
            under_in: u1.0,
            under_out: u1.1,
            over_in: e[0],
            over_out: e[1],
        });
        d.crossings.push(Crossing {
            id: k2,
            sign: s1.flip(),
            under_in: u2.0,
            under_out: u2.1,
            over_in: e[1],
            over_out: e[2],
        });
        d.repair_order();
        Ok(d)
    }

    fn r2_fold(&self, side: ArcSide, over_first: bool) -> Result<ColoredDiagram, DiagramError> {
        let mut names = self.crossing_names();
        let k1 = self.fresh_crossing_id(&names);
        names.insert(k1.0.clone());
        let k2 = {
            let mut probe = self.clone();
            probe
                .crossings
                .push(Crossing::new(k1.0.clone(), Sign::Pos, [0, 0, 0, 0]));
            probe.fresh_crossing_id(&names)
        };
        let mut d = self.clone();
        let mut sp = Splitter::new(&mut d);
        let e = sp.split(side.arc, 4)?;
        sp.finish();

        // Both parts face the region from the same side, so the under part
        // meets k2 before k1.
        let s1 = if side.left { Sign::Pos } else { Sign::Neg };
        let ((o1, o2), (u1, u2)) = if over_first {
            ((0, 1), (3, 2))
        } else {
            ((2, 3), (1, 0))
        };
        let passes = |i: usize| (e[i], e[i + 1]);
        let (ov1, ov2, un1, un2) = (passes(o1), passes(o2), passes(u1), passes(u2));
        d.crossings.push(Crossing {
            id: k1,
            sign: s1,
            under_in: un1.0,
            under_out: un1.1,
            over_in: ov1.0,
            over_out: ov1.1,
        });
        d.crossings.push(Crossing {
            id: k2,
            sign: s1.flip(),
            under_in: un2.0,
            under_out: un2.1,
            over_in: ov2.0,
            over_out: ov2.1,
        });
        d.repair_order();
        Ok(d)
    }

    fn r2_remove(
        &self,
        first: &CrossingId,
        second: &CrossingId,
    ) -> Result<ColoredDiagram, DiagramError> {
        let (i, j) = (self.crossing_index(first)?, self.crossing_index(second)?);
        if i == j || !self.is_r2_pair(i, j) {
            return Err(inapplicable(format!(
                "{first}, {second} do not bound a removable bigon"
            )));
        }
        Ok(self.splice(&[(i, Junction::Through), (j, Junction::Through)]))
    }

    /// True when crossings `i`, `j` bound a bigon face whose one side passes
    /// over at both corners and the other passes under at both.
    fn is_r2_pair(&self, i: usize, j: usize) -> bool {
        if self.crossings[i].sign == self.crossings[j].sign {
            return false;
        }
        let topo = self.topology();
        self.faces().iter().any(|f| {
            if f.sides.len() != 2 {
                return false;
            }
            let corners: BTreeSet<usize> = f.corners.iter().copied().collect();
            if corners != BTreeSet::from([i, j]) {
                return false;
            }
            let levels: Vec<(Level, Level)> = f
                .sides
                .iter()
                .map(|s| (topo.tail[&s.edge].1, topo.head[&s.edge].1))
                .collect();
            levels.contains(&(Level::Over, Level::Over))
                && levels.contains(&(Level::Under, Level::Under))
        })
    }

    fn r3(&self, ids: &[CrossingId; 3]) -> Result<ColoredDiagram, DiagramError> {
        let idx: Vec<usize> = ids
            .iter()
            .map(|id| self.crossing_index(id))
            .collect::<Result<_, _>>()?;
        let want: BTreeSet<usize> = idx.iter().copied().collect();
        if want.len() != 3 {
            return Err(inapplicable("R3 needs three distinct crossings"));
        }
        let topo = self.topology();
        let face = self
            .faces()
            .into_iter()
            .find(|f| {
                self.is_r3_face(f, &topo)
                    && f.corners.iter().copied().collect::<BTreeSet<_>>() == want
            })
            .ok_or_else(|| {
                inapplicable("no triangular face with a strand passing over both corners")
            })?;

        let mut updates: BTreeMap<(usize, Port), EdgeId> = BTreeMap::new();
        for side in &face.sides {
            let e = side.edge;
            let (t, lt) = topo.tail[&e];
            let (h, lh) = topo.head[&e];
            let in_edge = self.crossings[t].port(Port::input(lt));
            let out_edge = self.crossings[h].port(Port::output(lh));
            updates.insert((h, Port::input(lh)), in_edge);
            updates.insert((h, Port::output(lh)), e);
            updates.insert((t, Port::input(lt)), e);
            updates.insert((t, Port::output(lt)), out_edge);
        }
        let mut d = self.clone();
        for ((ci, p), e) in updates {
            *d.crossings[ci].port_mut(p) = e;
        }
        d.repair_order();
        Ok(d)
    }

    fn is_r3_face(&self, f: &super::Face, topo: &super::Topology) -> bool {
        if f.sides.len() != 3 {
            return false;
        }
        let corners: BTreeSet<usize> = f.corners.iter().copied().collect();
        let edges: BTreeSet<EdgeId> = f.sides.iter().map(|s| s.edge).collect();
        corners.len() == 3
            && edges.len() == 3
            && f.sides
                .iter()
                .any(|s| topo.tail[&s.edge].1 == Level::Over && topo.head[&s.edge].1 == Level::Over)
    }

    /// Every move applicable to this diagram, with all parameter choices.
    pub fn applicable_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        let arcs: Vec<ArcRef> = self
            .edge_colors
            .keys()
            .map(|e| ArcRef::Edge(*e))
            .chain((0..self.free_loops.len()).map(ArcRef::FreeLoop))
            .collect();
        for &arc in &arcs {
            for sign in [Sign::Pos, Sign::Neg] {
                for over_first in [false, true] {
                    out.push(Move::R1Add {
                        arc,
                        sign,
                        over_first,
                    });
                }
            }
        }
        for &arc in &arcs {
            for left in [false, true] {
                for over_first in [false, true] {
                    out.push(Move::R2Fold {
                        side: ArcSide { arc, left },
                        over_first,
                    });
                }
            }
        }
        for c in &self.crossings {
            if c.under_out == c.over_in || c.over_out == c.under_in {
                out.push(Move::R1Remove {
                    crossing: c.id.clone(),
                });
            }
        }

        let faces = self.faces();
        let mut pairs = BTreeSet::new();
        for f in &faces {
            for a in &f.sides {
                for b in &f.sides {
                    if a.edge != b.edge {
                        pairs.insert((
                            ArcSide {
                                arc: ArcRef::Edge(a.edge),
                                left: a.left,
                            },
                            ArcSide {
                                arc: ArcRef::Edge(b.edge),
                                left: b.left,
                            },
                        ));
                    }
                }
            }
        }
        for l in 0..self.free_loops.len() {
            for &arc in &arcs {
                if arc == ArcRef::FreeLoop(l) {
                    continue;
                }
                for la in [false, true] {
                    for lb in [false, true] {
                        let a = ArcSide { arc, left: la };
                        let b = ArcSide {
                            arc: ArcRef::FreeLoop(l),
                            left: lb,
                        };
                        pairs.insert((a, b));
                        pairs.insert((b, a));
                    }
                }
            }
        }
        out.extend(
            pairs
                .into_iter()
                .map(|(over, under)| Move::R2Add { over, under }),
        );

        let topo = self.topology();
        let mut seen = BTreeSet::new();
        for f in &faces {
            if f.sides.len() == 2 {
                let (i, j) = (
                    f.corners[0].min(f.corners[1]),
                    f.corners[0].max(f.corners[1]),
                );
                if i != j && self.is_r2_pair(i, j) && seen.insert((i, j)) {
                    out.push(Move::R2Remove {
                        first: self.crossings[i].id.clone(),
                        second: self.crossings[j].id.clone(),
                    });
                }
            }
            if self.is_r3_face(f, &topo) {
                let mut c = f.corners.clone();
                c.sort();
                if seen.insert((c[0], usize::MAX - c[1] - c[2])) {
                    out.push(Move::R3 {
                        crossings: [
                            self.crossings[c[0]].id.clone(),
                            self.crossings[c[1]].id.clone(),
                            self.crossings[c[2]].id.clone(),
                        ],
                    });
                }
            }
        }
        out
    }
}
