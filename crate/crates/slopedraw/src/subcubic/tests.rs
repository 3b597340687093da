use super::*;
use crate::graph::named;
use crate::verify::verify_drawing;

fn draw(g: &Graph) -> Drawing {
    let xs = XAssignment::fresh(g);
    let d = embed_subcubic(g, &xs).unwrap_or_else(|e| panic!("{e} on {:?}", g.edges()));
    let px = xs.coords(g.n());
    assert_eq!(check_low_degree_conditions(g, &d.points, &px), Ok(()));
    assert_eq!(check_support(&d.points, &xs.basis()), Ok(()));
    d
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).unwrap()
}

#[test]
fn single_edge_is_horizontal() {
    let d = draw(&named::path(2));
    assert_eq!(d.points[0].y, d.points[1].y);
    assert_eq!(d.points[0].x, ExactCoord::xi(1));
}

#[test]
fn paths_and_pendants() {
    draw(&named::path(4));
    draw(&graph(4, &[(0, 1), (0, 2), (0, 3)]));
    draw(&graph(6, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]));
}

#[test]
fn theta_shapes() {
    draw(&graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]));
    draw(&graph(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]));
    draw(&graph(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]));
    draw(&graph(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]));
    draw(&graph(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)]));
}

#[test]
fn cycles_with_chords_and_handles() {
    // K_{2,3}
    draw(&graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]));
    // Two triangles joined by a path of length two.
    draw(&graph(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]));
    // A cube with one edge removed.
    let cube = named::lcf(8, &[3, -3], 4);
    let (a, b) = cube.edges()[0];
    let edges: Vec<_> = cube.edges().iter().copied().filter(|&e| e != (a, b)).collect();
    draw(&graph(8, &edges));
}

#[test]
fn cycle_shape() {
    let xs = [ExactCoord::xi(1), ExactCoord::xi(2), ExactCoord::xi(3)];
    let pts = embed_cycle(&xs);
    let g = named::cycle(4);
    assert!(verify_drawing(&g, &pts, &crate::slope::SlopeSet::basic()).is_ok());
    for (p, x) in pts[1..].iter().zip(&xs) {
        assert_eq!(&p.x, x);
    }
    let top = &pts[0].y;
    assert!(pts[1..].iter().all(|p| crate::coords::compare(&p.y, top).is_le()));
}

#[test]
fn two_triangles_joined_by_an_edge() {
    let (c1, c2) = embed_two_cycles_with_edge(
        &[ExactCoord::xi(1), ExactCoord::xi(2)],
        &[ExactCoord::xi(3), ExactCoord::xi(4)],
    );
    let g = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]);
    let pts: Vec<Point> = c1.into_iter().chain(c2).collect();
    assert!(verify_drawing(&g, &pts, &crate::slope::SlopeSet::basic()).is_ok());
    assert_ne!(pts[0].x, pts[3].x);
}

#[test]
fn preconditions() {
    let xs = XAssignment::fresh(&named::cycle(5));
    assert!(matches!(embed_subcubic(&named::cycle(5), &xs), Err(EmbedError::Precondition(_))));
    let k4 = named::complete4();
    assert!(matches!(embed_subcubic(&k4, &XAssignment::fresh(&k4)), Err(EmbedError::Precondition(_))));
}
