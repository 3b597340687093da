use num_traits::Zero;
use thiserror::Error;

use crate::coords::{ExactCoord, Point, Rat};
use crate::slope::Slope;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeSetError {
    #[error("slope set contains a repeated slope")]
    DuplicateSlopes,
}

/// Evidence that a four-slope set is an affine image of the basic slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodSetWitness {
    /// Indices into the input: the two side slopes, then the two diagonals.
    pub sides: [usize; 2],
    pub diagonals: [usize; 2],
    /// Linear map sending E to the first side and N to the second; the unit
    /// square's diagonals go to the diagonal slopes.
    pub linear_map: [[Rat; 2]; 2],
    /// Parallelogram with both diagonals: a K₄ drawing using exactly `s`.
    /// Vertex order is (0,0), (1,0), (1,1), (0,1) under the map.
    pub k4_points: [Point; 4],
}

fn det(a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Whether `s` is an affine image of `{E, N, NE, NW}`: true exactly when
/// some pairing of the four directions, viewed as points of the projective
/// line, has cross-ratio −1.
pub fn slope_set_is_good(s: &[Slope; 4]) -> Result<Option<GoodSetWitness>, SlopeSetError> {
    for i in 0..4 {
        for j in i + 1..4 {
            if s[i] == s[j] {
                return Err(SlopeSetError::DuplicateSlopes);
            }
        }
    }
    let d: Vec<(Rat, Rat)> = s.iter().map(Slope::direction).collect();
    for (a, b, c, e) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        // (a, b; c, e) = −1  ⇔  det(a,c)·det(b,e) + det(a,e)·det(b,c) = 0
        let harmonic = det(&d[a], &d[c]) * det(&d[b], &d[e]) + det(&d[a], &d[e]) * det(&d[b], &d[c]);
        if harmonic.is_zero() {
            return Ok(Some(witness(&d, [a, b], [c, e])));
        }
    }
    Ok(None)
}

fn witness(d: &[(Rat, Rat)], sides: [usize; 2], diagonals: [usize; 2]) -> GoodSetWitness {
    let (a, b, c) = (&d[sides[0]], &d[sides[1]], &d[diagonals[0]]);
    // α·a + β·b is parallel to c.
    let alpha = det(b, c);
    let beta = -det(a, c);
    let u = (&a.0 * &alpha, &a.1 * &alpha);
    let w = (&b.0 * &beta, &b.1 * &beta);
    let pt = |x: Rat, y: Rat| Point::new(ExactCoord::from_rat(x), ExactCoord::from_rat(y));
    let k4_points = [
        pt(Rat::zero(), Rat::zero()),
        pt(u.0.clone(), u.1.clone()),
        pt(&u.0 + &w.0, &u.1 + &w.1),
        pt(w.0.clone(), w.1.clone()),
    ];
    GoodSetWitness { sides, diagonals, linear_map: [[u.0, w.0], [u.1, w.1]], k4_points }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::slope::{tangent, SlopeSet};
    use crate::verify::verify_drawing;

    fn check(s: [Slope; 4]) -> bool {
        match slope_set_is_good(&s).unwrap() {
            Some(w) => {
                let set = SlopeSet::new(s.iter().cloned());
                assert_eq!(verify_drawing(&named::complete4(), &w.k4_points, &set), Ok(()));
                true
            }
            None => false,
        }
    }

    #[test]
    fn basic_and_scaled() {
        assert!(check([tangent(0, 1), Slope::Vertical, tangent(1, 1), tangent(-1, 1)]));
        assert!(check([tangent(0, 1), Slope::Vertical, tangent(2, 1), tangent(-2, 1)]));
    }

    #[test]
    fn not_harmonic() {
        assert!(!check([tangent(0, 1), Slope::Vertical, tangent(2, 1), tangent(1, 2)]));
    }

    #[test]
    fn duplicates_rejected() {
        let s = [tangent(0, 1), tangent(0, 1), tangent(2, 1), tangent(1, 2)];
        assert_eq!(slope_set_is_good(&s), Err(SlopeSetError::DuplicateSlopes));
    }
}
