use super::{DiagForm, Point, UGraph};
use crate::error::{Error, Result};
use crate::exact::{int, Scalar};

/// Unit-distance graph on explicit points: `i ~ j` iff `q(p_j - p_i) = 1`
/// exactly. All pairs are tested.
pub fn build_exact_graph<S: Scalar>(points: &[Point<S>], form: &DiagForm) -> Result<UGraph> {
    if let Some(first) = points.first() {
        for p in points {
            if p.field() != first.field() {
                return Err(Error::MixedScalars(
                    first.field().to_string(),
                    p.field().to_string(),
                ));
            }
            if p.dim() != form.dim() {
                return Err(Error::Dimension {
                    expected: form.dim(),
                    got: p.dim(),
                });
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if is_unit_pair(&points[i], &points[j], form)? {
                edges.push((i, j));
            }
        }
    }
    let labels = points.iter().map(ToString::to_string).collect();
    UGraph::from_edges(points.len(), edges)?.with_labels(labels)
}

/// `q(b - a) == 1`.
pub fn is_unit_pair<S: Scalar>(a: &Point<S>, b: &Point<S>, form: &DiagForm) -> Result<bool> {
    Ok(form.eval(b.sub(a)?.coords())?.is_one())
}

/// `((1 - t²)/(1 + t²), 2t/(1 + t²))` on the Euclidean unit circle.
pub fn circle_param<S: Scalar>(t: &S) -> Result<Point<S>> {
    let one = t.one_like();
    let t2 = t.square();
    let den = one.clone() + t2.clone();
    let inv = den.try_inv().ok_or(Error::CircleSingular)?;
    let x = (one - t2) * inv.clone();
    let y = t.mul_int(2) * inv;
    Point::new(vec![x, y])
}

/// 2×2 matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2<S> {
    pub rows: [[S; 2]; 2],
}

impl<S: Scalar> Mat2<S> {
    pub fn det(&self) -> S {
        let [[a, b], [c, d]] = &self.rows;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn apply(&self, p: &Point<S>) -> Result<Point<S>> {
        let [x, y] = p.coords() else {
            return Err(Error::Dimension {
                expected: 2,
                got: p.dim(),
            });
        };
        let row = |r: &[S; 2]| r[0].clone() * x.clone() + r[1].clone() * y.clone();
        Point::new(vec![row(&self.rows[0]), row(&self.rows[1])])
    }

    /// Inverse of a rotation: its transpose.
    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.rows.clone();
        Mat2 {
            rows: [[a, c], [b, d]],
        }
    }
}

/// The rotation `[[v1, v2], [-v2, v1]]`, which fixes `x1² + x2²` and sends
/// `v` to `(1, 0)`.
pub fn rotate_to_e1<S: Scalar>(v: &Point<S>) -> Result<Mat2<S>> {
    let [v1, v2] = v.coords() else {
        return Err(Error::Dimension {
            expected: 2,
            got: v.dim(),
        });
    };
    if !DiagForm::euclidean(2).eval(v.coords())?.is_one() {
        return Err(Error::NotUnit);
    }
    Ok(Mat2 {
        rows: [[v1.clone(), v2.clone()], [-v2.clone(), v1.clone()]],
    })
}

/// Embeds integer coordinates into the field of `like`.
pub fn lift_point<S: Scalar>(like: &S, coords: &[i64]) -> Point<S> {
    Point::new(coords.iter().map(|&c| like.lift_rat(int(c))).collect()).expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, FieldDesc, QuadElem, Rat};

    fn qp(s: &str, m: i64) -> Point<QuadElem> {
        Point::parse(s, FieldDesc::Quad(m)).unwrap()
    }

    #[test]
    fn triangle_and_lorentz_square() {
        let pts = vec![qp("0; 0", 3), qp("1; 0", 3), qp("1/2; 1/2*sqrt(3)", 3)];
        let g = build_exact_graph(&pts, &DiagForm::euclidean(2)).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);

        let r = |a, b, c, d| Point::new(vec![rat(a, b), rat(c, d)]).unwrap();
        let pts = vec![r(0, 1, 0, 1), r(1, 1, 0, 1), r(9, 4, 3, 4), r(5, 4, 3, 4)];
        let g = build_exact_graph(&pts, &DiagForm::lorentzian()).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_mixed_input() {
        let pts = vec![qp("0; 0", 3), qp("1; 0", 7)];
        assert!(build_exact_graph(&pts, &DiagForm::euclidean(2)).is_err());
        let pts = vec![qp("0; 0", 3)];
        assert!(build_exact_graph(&pts, &DiagForm::euclidean(3)).is_err());
    }

    #[test]
    fn circle_points() {
        let p = circle_param(&rat(1, 2)).unwrap();
        assert_eq!(p.coords(), &[rat(3, 5), rat(4, 5)]);
        assert_eq!(
            circle_param(&Rat::from_integer(0.into())).unwrap().coords(),
            &[int(1), int(0)]
        );
        let s3 = QuadElem::sqrt_m(3).unwrap();
        assert_eq!(circle_param(&s3).unwrap(), qp("-1/2; 1/2*sqrt(3)", 3));
        // 1 + (√-1)^2 = 0
        assert_eq!(
            circle_param(&QuadElem::sqrt_m(-1).unwrap()),
            Err(Error::CircleSingular)
        );
    }

    #[test]
    fn rotations() {
        let v = Point::new(vec![rat(3, 5), rat(4, 5)]).unwrap();
        let m = rotate_to_e1(&v).unwrap();
        assert_eq!(m.rows, [[rat(3, 5), rat(4, 5)], [rat(-4, 5), rat(3, 5)]]);
        assert_eq!(m.apply(&v).unwrap().coords(), &[int(1), int(0)]);
        assert_eq!(m.det(), int(1));
        assert_eq!(m.transpose().apply(&m.apply(&v).unwrap()).unwrap(), v);
        let e2 = Point::new(vec![int(0), int(1)]).unwrap();
        assert_eq!(
            rotate_to_e1(&e2).unwrap().rows,
            [[int(0), int(1)], [int(-1), int(0)]]
        );
        let e1 = Point::new(vec![int(1), int(0)]).unwrap();
        assert_eq!(
            rotate_to_e1(&e1).unwrap().rows,
            [[int(1), int(0)], [int(0), int(1)]]
        );
        assert_eq!(
            rotate_to_e1(&Point::new(vec![int(1), int(1)]).unwrap()),
            Err(Error::NotUnit)
        );
    }
}
