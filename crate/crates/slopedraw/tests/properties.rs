use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use slopedraw::auto::draw_auto;
use slopedraw::coords::{compare, rat, segment_slope_class, ExactCoord, Point, Rat};
use slopedraw::cubic::draw_cubic_basic;
use slopedraw::drawing::Drawing;
use slopedraw::gen::{
    random_bridgeless_triangle_free_cubic, random_cubic, random_linear_system, random_subcubic,
};
use slopedraw::graph::{
    contract_triangle, find_isomorphism, find_suitable_mcut, girth_cycle, is_suitable_mcut, moore_bound,
    perfect_matching, Graph,
};
use slopedraw::io::{drawing_from_json, drawing_to_json};
use slopedraw::matching::draw_four_slopes;
use slopedraw::slope::{slope_of, Slope, SlopeSet};
use slopedraw::solver::{solve_equal_ratios, LinearFormSystem};
use slopedraw::subcubic::{embed_cycle, embed_subcubic, XAssignment};
use slopedraw::verify::{check_low_degree_conditions, check_support, slope_set_is_good, verify_drawing};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coord() -> impl Strategy<Value = ExactCoord> {
    prop::collection::vec((0u32..4, -20i64..=20, 1i64..=6), 0..4)
        .prop_map(|ts| ExactCoord::from_terms(ts.into_iter().map(|(i, n, d)| (i, rat(n, d)))))
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

/// Relabels `g` and its points by `perm`.
fn permuted(g: &Graph, pts: &[Point], perm: &[usize]) -> (Graph, Vec<Point>) {
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    edges.reverse();
    let mut out = vec![Point::ints(0, 0); pts.len()];
    for (v, p) in pts.iter().enumerate() {
        out[perm[v]] = p.clone();
    }
    (Graph::new(g.n(), &edges).unwrap(), out)
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng(seed));
    perm
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn short_cycle_within_moore_bound(half in 2usize..30, seed: u64) {
        let g = random_cubic(2 * half, &mut rng(seed));
        let c = girth_cycle(&g).unwrap();
        prop_assert!(c.len() <= moore_bound(g.n()));
        for i in 0..c.len() {
            prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn matching_covers_each_vertex_once(half in 3usize..30, seed: u64) {
        let g = random_bridgeless_triangle_free_cubic(2 * half, &mut rng(seed));
        let m = perfect_matching(&g).unwrap();
        let mut hit = vec![0; g.n()];
        for e in m {
            let (u, v) = g.edge(e);
            hit[u] += 1;
            hit[v] += 1;
        }
        prop_assert!(hit.iter().all(|&h| h == 1));
    }

    #[test]
    fn triangle_contraction_round_trip(half in 3usize..20, seed: u64) {
        let g = random_cubic(2 * half, &mut rng(seed));
        if let Ok((h, rec)) = contract_triangle(&g) {
            let back = Graph::new(g.n(), &rec.expand_edges(&h)).unwrap();
            prop_assert!(find_isomorphism(&back, &g).is_some());
            prop_assert_eq!(h.n() + 2, g.n());
        }
    }

    #[test]
    fn mcut_invariants_hold(half in 9usize..20, seed: u64) {
        let g = random_bridgeless_triangle_free_cubic(2 * half, &mut rng(seed));
        if let Ok(mc) = find_suitable_mcut(&g) {
            prop_assert!(is_suitable_mcut(&g, &mc));
        }
    }

    #[test]
    fn compare_agrees_with_floats(a in coord(), b in coord()) {
        let (fa, fb) = (a.approx(), b.approx());
        if (fa - fb).abs() > 1e-6 * (1.0 + fa.abs().max(fb.abs())) {
            prop_assert_eq!(compare(&a, &b), fa.partial_cmp(&fb).unwrap());
        }
        prop_assert_eq!(compare(&a, &b), compare(&b, &a).reverse());
        prop_assert_eq!(compare(&a, &a), std::cmp::Ordering::Equal);
    }

    #[test]
    fn slope_class_ignores_translation_and_scale(p in point(), q in point(), shift in point(), k in 1i64..50, d in 1i64..7) {
        let moved = |r: &Point| r.translate(&shift.x, &shift.y);
        let t = rat(k, d);
        let scaled = |r: &Point| Point::new(r.x.scale(&t), r.y.scale(&t));
        // `Other` carries the difference vector, so compare variants only.
        let class = |a: &Point, b: &Point| segment_slope_class(a, b).map(|c| std::mem::discriminant(&c));
        let base = class(&p, &q);
        prop_assert_eq!(&base, &class(&moved(&p), &moved(&q)));
        prop_assert_eq!(&base, &class(&scaled(&p), &scaled(&q)));
    }

    #[test]
    fn closed_polygon_identity(len in 2usize..12, first in 1u32..5) {
        let xs: Vec<ExactCoord> = (0..len as u32).map(|i| ExactCoord::xi(first + i)).collect();
        let pts = embed_cycle(&xs);
        // Slopes around the polygon, as λ ∈ {0, 1, −1}.
        let k = pts.len();
        let mut sum = ExactCoord::zero();
        for i in 0..k {
            let (p, q) = (&pts[i], &pts[(i + 1) % k]);
            let lambda = match slope_of(p, q) {
                Some(Slope::Tangent(t)) if t.is_zero() => 0,
                Some(Slope::Tangent(t)) if t.is_one() => 1,
                Some(Slope::Tangent(t)) if t == -Rat::one() => -1,
                other => return Err(TestCaseError::fail(format!("edge {i} has slope {other:?}"))),
            };
            sum = &sum + &(&q.x - &p.x).scale(&rat(lambda, 1));
        }
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn subcubic_postconditions(n in 2usize..40, seed: u64) {
        let g = random_subcubic(n, &mut rng(seed));
        let xs = XAssignment::fresh(&g);
        let d = embed_subcubic(&g, &xs).unwrap();
        prop_assert_eq!(check_low_degree_conditions(&g, &d.points, &xs.coords(g.n())), Ok(()));
        prop_assert_eq!(check_support(&d.points, &xs.basis()), Ok(()));
    }

    #[test]
    fn basic_drawings_verify(half in 2usize..16, seed: u64) {
        let g = random_cubic(2 * half, &mut rng(seed));
        if let Ok(d) = draw_cubic_basic(&g) {
            prop_assert_eq!(&d.slopes, &SlopeSet::basic());
            prop_assert!(verify_drawing(&g, &d.points, &d.slopes).is_ok());
        }
    }

    #[test]
    fn auto_uses_at_most_four_slopes(half in 2usize..14, seed: u64) {
        let g = random_cubic(2 * half, &mut rng(seed));
        let (d, _) = draw_auto(&g).unwrap();
        prop_assert!(d.slopes.len() <= 4);
        prop_assert!(verify_drawing(&g, &d.points, &d.slopes).is_ok());
    }

    #[test]
    fn four_slope_drawings(half in 3usize..14, seed: u64) {
        let g = random_bridgeless_triangle_free_cubic(2 * half, &mut rng(seed));
        let d = draw_four_slopes(&g).unwrap();
        let steep: Vec<&Rat> = d.slopes.iter().filter_map(|s| match s {
            Slope::Tangent(t) if *t > Rat::one() => Some(t),
            _ => None,
        }).collect();
        prop_assert_eq!(steep.len(), 1);
        prop_assert_eq!(&d.slopes, &SlopeSet::matching(steep[0]));
    }

    #[test]
    fn half_turn_keeps_a_drawing_valid(half in 2usize..12, seed: u64) {
        let g = random_cubic(2 * half, &mut rng(seed));
        let (d, _) = draw_auto(&g).unwrap();
        let turned: Vec<Point> = d.points.iter().map(|p| Point::new(-&p.x, -&p.y)).collect();
        prop_assert!(verify_drawing(&g, &turned, &d.slopes).is_ok());
    }

    #[test]
    fn verdict_ignores_labelling(half in 2usize..10, seed: u64, nudge in 0usize..20) {
        let g = random_cubic(2 * half, &mut rng(seed));
        let (mut d, _) = draw_auto(&g).unwrap();
        // Move one vertex onto another's point now and then to get a failing case.
        if nudge < 10 {
            let (a, b) = (nudge % g.n(), (nudge + 1) % g.n());
            d.points[a] = d.points[b].clone();
        }
        let perm = shuffled(g.n(), seed);
        let (h, pts) = permuted(&g, &d.points, &perm);
        prop_assert_eq!(verify_drawing(&g, &d.points, &d.slopes).is_ok(), verify_drawing(&h, &pts, &d.slopes).is_ok());
    }

    #[test]
    fn json_round_trip(half in 2usize..12, seed: u64, tamper: bool) {
        let g = random_cubic(2 * half, &mut rng(seed));
        let (mut d, mode) = draw_auto(&g).unwrap();
        if tamper {
            d.points[0] = Point::new(&d.points[0].x + &ExactCoord::from_rat(rat(1, 7)), d.points[0].y.clone());
        }
        let text = drawing_to_json(&g, &d, mode.as_str()).to_string();
        let (h, back, m) = drawing_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(m.as_str(), mode.as_str());
        prop_assert_eq!(verify_drawing(&g, &d.points, &d.slopes), verify_drawing(&h, &back.points, &back.slopes));
    }

    #[test]
    fn exact_residuals(n in 1usize..20, seed: u64) {
        let sys = random_linear_system(n, &mut rng(seed));
        let sol = solve_equal_ratios(&sys, None).unwrap();
        for i in 0..n {
            prop_assert_eq!(&sol.common_value * &sol.x[i] - sys.eval(i, &sol.x), Rat::zero());
            prop_assert!(sol.x[i] > Rat::zero());
        }
    }

    #[test]
    fn scaling(n in 1usize..12, seed: u64, k in 1i64..9, d in 1i64..5) {
        let sys = random_linear_system(n, &mut rng(seed));
        let t = rat(k, d);
        let sol = solve_equal_ratios(&sys, None).unwrap();
        // Scaling the constants scales x.
        let lifted = LinearFormSystem::new(
            sys.constants().iter().map(|c| c * &t).collect(),
            sys.matrix().to_vec(),
        ).unwrap();
        let up = solve_equal_ratios(&lifted, Some(sol.common_value.clone())).unwrap();
        for i in 0..n {
            prop_assert_eq!(&up.x[i], &(&sol.x[i] * &t));
        }
        // Scaling every coefficient scales the common value and keeps x.
        let whole = solve_equal_ratios(&sys.scaled(&t), Some(&sol.common_value * &t)).unwrap();
        prop_assert_eq!(&whole.x, &sol.x);
        prop_assert_eq!(whole.common_value, &sol.common_value * &t);
    }

    #[test]
    fn good_sets_survive_affine_maps(m in prop::array::uniform4(-6i64..=6), s in prop::array::uniform4(-5i64..=5)) {
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        // A good set built as the image of the basic directions under `s`.
        prop_assume!(s[0] * s[3] - s[1] * s[2] != 0);
        let map = |a: &[i64; 4], x: &Rat, y: &Rat| (rat(a[0], 1) * x + rat(a[1], 1) * y, rat(a[2], 1) * x + rat(a[3], 1) * y);
        let dirs = [(1, 0), (0, 1), (1, 1), (1, -1)];
        let set: Vec<Slope> = dirs.iter().map(|&(x, y)| {
            let (u, v) = map(&s, &rat(x, 1), &rat(y, 1));
            Slope::from_direction(&u, &v)
        }).collect();
        let set: [Slope; 4] = set.try_into().unwrap();
        let w = slope_set_is_good(&set).unwrap().expect("image of the basic set");
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        prop_assert!(verify_drawing(&k4, &w.k4_points, &SlopeSet::new(set.iter().cloned())).is_ok());

        let moved: Vec<Point> = w.k4_points.iter().map(|p| {
            let (x, y) = map(&m, &p.x.as_rat().unwrap(), &p.y.as_rat().unwrap());
            Point::new(ExactCoord::from_rat(x + rat(3, 1)), ExactCoord::from_rat(y - rat(1, 2)))
        }).collect();
        let mapped: BTreeSet<Slope> = set.iter().map(|sl| {
            let (dx, dy) = sl.direction();
            let (u, v) = map(&m, &dx, &dy);
            Slope::from_direction(&u, &v)
        }).collect();
        prop_assert!(verify_drawing(&k4, &moved, &SlopeSet::new(mapped)).is_ok());
    }
}

/// Rotating by π/4 sends a line of slope `t` to slope `(t + 1)/(1 − t)`.
fn quarter_turn(s: &Slope) -> Slope {
    match s {
        Slope::Vertical => Slope::Tangent(-Rat::one()),
        Slope::Tangent(t) if t.is_one() => Slope::Vertical,
        Slope::Tangent(t) => Slope::Tangent((t + Rat::one()) / (Rat::one() - t)),
    }
}

#[test]
fn eighth_turns_preserve_the_basic_set() {
    let mut set = SlopeSet::basic();
    for _ in 0..8 {
        set = SlopeSet::new(set.iter().map(quarter_turn));
        assert_eq!(set, SlopeSet::basic());
    }
}

#[test]
fn drawing_equality_is_exact() {
    let a = Drawing::new(vec![Point::ints(0, 0)], SlopeSet::basic());
    let b = Drawing::new(vec![Point::new(ExactCoord::from_rat(rat(0, 3)), ExactCoord::zero())], SlopeSet::basic());
    assert_eq!(a, b);
}
