//! JSON diagram documents.
//!
//! ```json
//! {"crossings":[{"id":"c1","sign":-1,"under_in":1,"under_out":2,"over_in":3,"over_out":4}],
//!  "free_loops":["a"], "colors":["a","b"], "order":[1,0], "base_points":[2,4]}
//! ```
//!
//! `colors` lists the crossing-bearing components in canonical order, and may
//! continue with the free loops (which must then repeat `free_loops`).
//! `base_points` has one edge per crossing-bearing component.

use serde::{Deserialize, Serialize};

use super::{Color, ColoredDiagram, Crossing, CrossingId, DiagramError, EdgeId, Sign};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossingDoc {
    id: String,
    sign: i64,
    under_in: EdgeId,
    under_out: EdgeId,
    over_in: EdgeId,
    over_out: EdgeId,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    crossings: Vec<CrossingDoc>,
    #[serde(default)]
    free_loops: Vec<String>,
    #[serde(default)]
    colors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base_points: Option<Vec<EdgeId>>,
}

pub fn parse_diagram(text: &str) -> Result<ColoredDiagram, DiagramError> {
    let doc: DiagramDoc =
        serde_json::from_str(text).map_err(|e| DiagramError::Malformed(e.to_string()))?;
    let crossings = doc
        .crossings
        .into_iter()
        .map(|c| {
            let sign = Sign::from_value(c.sign).ok_or_else(|| {
                DiagramError::Malformed(format!("crossing {}: sign must be 1 or -1", c.id))
            })?;
            Ok(Crossing {
                id: CrossingId(c.id),
                sign,
                under_in: c.under_in,
                under_out: c.under_out,
                over_in: c.over_in,
                over_out: c.over_out,
            })
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    let free_loops: Vec<Color> = doc.free_loops.into_iter().map(Color).collect();
    let mut colors: Vec<Color> = doc.colors.into_iter().map(Color).collect();

    let crossing_comps = ColoredDiagram::trace_components(&crossings)?.len();
    if colors.len() == crossing_comps + free_loops.len() && !free_loops.is_empty() {
        if colors[crossing_comps..] != free_loops[..] {
            return Err(DiagramError::Malformed(
                "colors of free loops disagree with free_loops".into(),
            ));
        }
        colors.truncate(crossing_comps);
    }
    if colors.len() != crossing_comps {
        return Err(DiagramError::ColorCount {
            expected: crossing_comps + free_loops.len(),
            found: colors.len(),
        });
    }
    let d = ColoredDiagram::new(crossings, colors, free_loops)?;
    match (doc.order, doc.base_points) {
        (None, None) => Ok(d),
        (order, bases) => {
            let order = order.unwrap_or_else(|| (0..d.component_count()).collect());
            d.with_order(&order, bases.as_deref())
        }
    }
}

/// Serializes with the full color list (free loops included), the component
/// order and the base points.
pub fn to_json(d: &ColoredDiagram) -> String {
    let doc = DiagramDoc {
        crossings: d
            .crossings()
            .iter()
            .map(|c| CrossingDoc {
                id: c.id.0.clone(),
                sign: c.sign.value() as i64,
                under_in: c.under_in,
                under_out: c.under_out,
                over_in: c.over_in,
                over_out: c.over_out,
            })
            .collect(),
        free_loops: d.free_loops().iter().map(|c| c.0.clone()).collect(),
        colors: d.components().into_iter().map(|c| c.color.0).collect(),
        order: Some(d.component_order()),
        base_points: Some(canonical_bases(d)),
    };
    serde_json::to_string(&doc).expect("diagram documents always serialize")
}

/// Base points indexed by canonical component index.
fn canonical_bases(d: &ColoredDiagram) -> Vec<EdgeId> {
    let ec = d.edge_components();
    let mut out: Vec<(usize, EdgeId)> = d.base_points().iter().map(|e| (ec[e], *e)).collect();
    out.sort();
    out.into_iter().map(|(_, e)| e).collect()
}
