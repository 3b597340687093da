//! Pipeline selection. A graph is drawn with the basic slopes when that
//! pipeline applies. Otherwise each cubic component has its
//! triangle-free core drawn by the matching pipeline with slopes
//! `{vertical, 1, −1, c}`, and its contracted triangles are expanded inside
//! that set. All four-slope components share one value of `c`.

use std::fmt;

use thiserror::Error;

use crate::coords::{ExactCoord, Rat};
use crate::cubic::{draw_cubic_basic, draw_cubic_with_core, max_y, min_y, shift};
use crate::drawing::Drawing;
use crate::graph::Graph;
use crate::matching::draw_four_slopes_with;
use crate::slope::{Slope, SlopeSet};
use crate::verify::verify_drawing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Slopes 0, 1, −1 and vertical.
    Basic,
    /// Slopes 1, −1, vertical and one `c > 1`, possibly with the basic ones
    /// on other components.
    Four,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Basic => "basic",
            Mode::Four => "four",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutoError {
    #[error("no drawing found: {0}")]
    Failed(String),
}

/// Draws any graph and reports which pipeline was
/// used. The result has passed [`verify_drawing`].
pub fn draw_auto(g: &Graph) -> Result<(Drawing, Mode), AutoError> {
    if let Ok(d) = draw_cubic_basic(g) {
        return Ok((d, Mode::Basic));
    }
    let comps = g.components();
    let parts: Vec<Graph> = comps.iter().map(|c| g.induced(c)).collect();
    let mut drawings = parts.iter().map(|h| draw_component(h, None)).collect::<Result<Vec<_>, _>>()?;

    // Redraw with the largest c if the components disagree on it.
    let cs: Vec<Rat> = drawings.iter().filter_map(steep_slope).collect();
    if let Some(c) = cs.iter().max().filter(|c| cs.iter().any(|o| o != *c)) {
        for (h, d) in parts.iter().zip(drawings.iter_mut()) {
            if steep_slope(d).is_some() {
                *d = draw_component(h, Some(c))?;
            }
        }
    }

    let mut points = vec![crate::coords::Point::ints(0, 0); g.n()];
    let mut slopes = SlopeSet::default();
    let mut top: Option<ExactCoord> = None;
    for (comp, mut d) in comps.iter().zip(drawings) {
        if let Some(t) = &top {
            let dy = &(t - &min_y(&d.points)) + &ExactCoord::int(1);
            shift(&mut d.points, &ExactCoord::zero(), &dy);
        }
        top = Some(max_y(&d.points));
        slopes = slopes.union(&d.slopes);
        for (l, p) in d.points.into_iter().enumerate() {
            points[comp[l]] = p;
        }
    }
    verify_drawing(g, &points, &slopes).map_err(|v| AutoError::Failed(format!("assembled drawing rejected: {v}")))?;
    let mode = if slopes == SlopeSet::basic() { Mode::Basic } else { Mode::Four };
    Ok((Drawing::new(points, slopes), mode))
}

fn draw_component(h: &Graph, c: Option<&Rat>) -> Result<Drawing, AutoError> {
    if let Ok(d) = draw_cubic_basic(h) {
        return Ok(d);
    }
    let core = |k: &Graph| draw_four_slopes_with(k, c.cloned()).ok();
    draw_cubic_with_core(h, &core).map_err(|f| AutoError::Failed(f.reason))
}

/// The slope `c > 1` of a four-slope drawing.
fn steep_slope(d: &Drawing) -> Option<Rat> {
    d.slopes.iter().find_map(|s| match s {
        Slope::Tangent(t) if *t > Rat::from_integer(1.into()) => Some(t.clone()),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::draw_cubic_basic;
    use crate::io::parse_graph6_lines;

    /// Replaces vertex `v` by a triangle.
    fn truncate(g: &Graph, v: usize) -> Graph {
        let n = g.n();
        let nb = g.neighbors(v).to_vec();
        let mut edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(a, b)| a != v && b != v).collect();
        edges.extend([(v, nb[0]), (n, nb[1]), (n + 1, nb[2]), (v, n), (n, n + 1), (v, n + 1)]);
        Graph::new(n + 2, &edges).unwrap()
    }

    fn hard_cores() -> Vec<Graph> {
        let text = include_str!("../data/corpus/cubic_10.g6");
        parse_graph6_lines(text).unwrap().into_iter().filter(|g| draw_cubic_basic(g).is_err()).collect()
    }

    #[test]
    fn basic_when_possible() {
        let (d, mode) = draw_auto(&crate::graph::named::heawood()).unwrap();
        assert_eq!(mode, Mode::Basic);
        assert_eq!(d.slopes, SlopeSet::basic());
    }

    #[test]
    fn hard_cores_get_four_slopes() {
        let cores = hard_cores();
        assert!(!cores.is_empty());
        for g in &cores {
            let (d, mode) = draw_auto(g).unwrap();
            assert_eq!(mode, Mode::Four);
            assert_eq!(d.slopes.len(), 4);
        }
    }

    #[test]
    fn triangles_around_a_hard_core() {
        for g in hard_cores() {
            let mut h = truncate(&g, 0);
            h = truncate(&h, h.n() - 1);
            let (d, _) = draw_auto(&h).unwrap();
            assert!(d.slopes.len() <= 4);
            verify_drawing(&h, &d.points, &d.slopes).unwrap();
        }
    }

    #[test]
    fn expansion_inside_the_four_slopes() {
        for g in hard_cores() {
            let h = truncate(&truncate(&g, 0), 5);
            let (core, rec) = crate::graph::contract_triangle(&h).unwrap();
            let (core2, rec2) = crate::graph::contract_triangle(&core).unwrap();
            let d = crate::matching::draw_four_slopes(&core2).unwrap();
            let d = crate::cubic::expand_triangle(&core2, &d, &rec2).unwrap();
            let d = crate::cubic::expand_triangle(&core, &d, &rec).unwrap();
            assert_eq!(d.slopes.len(), 4);
            assert!(steep_slope(&d).is_some());
            verify_drawing(&h, &d.points, &d.slopes).unwrap();
        }
    }

    #[test]
    fn components_share_c() {
        let cores = hard_cores();
        let (a, b) = (&cores[0], &cores[cores.len() - 1]);
        let mut edges = a.edges().to_vec();
        edges.extend(b.edges().iter().map(|&(u, v)| (u + a.n(), v + a.n())));
        edges.extend([(20, 21), (21, 22)]);
        let g = Graph::new(a.n() + b.n() + 3, &edges).unwrap();
        let (d, mode) = draw_auto(&g).unwrap();
        assert_eq!(mode, Mode::Four);
        // The path component brings the horizontal slope along.
        assert!(d.slopes.len() <= 5);
        let one = Rat::from_integer(1.into());
        assert_eq!(d.slopes.iter().filter(|s| matches!(s, Slope::Tangent(t) if *t > one)).count(), 1);
    }
}
