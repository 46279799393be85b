use serde::Serialize;

use super::{PrimeSpec, Reducible};
use crate::error::{Error, Result};
use crate::exact::HalfVal;
use crate::geometry::{build_exact_graph, fp_index, fp_label, DiagForm, Point, UGraph};

/// Reduces an integral point coordinatewise into `F_p^d`.
pub fn reduce_point<S: Reducible>(x: &Point<S>, spec: &PrimeSpec) -> Result<Vec<u64>> {
    spec.expect_field(x.field())?;
    x.coords()
        .iter()
        .enumerate()
        .map(|(index, c)| {
            let v = c.valuation_at(spec)?;
            if v < HalfVal::ZERO {
                return Err(Error::NotIntegral {
                    index,
                    valuation: v.to_string(),
                });
            }
            c.residue(spec)
        })
        .collect()
}

/// For a Euclidean unit pair, whether every coordinate of `x′ - x` has
/// valuation at least the spec's edge floor (`0`, or `-½` on the half
/// lattice).
pub fn edge_integrality_check<S: Reducible>(
    x: &Point<S>,
    x2: &Point<S>,
    spec: &PrimeSpec,
) -> Result<bool> {
    let delta = x2.sub(x)?;
    let q = DiagForm::euclidean(delta.dim()).eval(delta.coords())?;
    if !q.is_one() {
        return Err(Error::NotUnitDistance);
    }
    let floor = HalfVal::from_doubled(spec.edge_floor_doubled());
    for c in delta.coords() {
        if c.valuation_at(spec)? < floor {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of pushing a point set through the residue map.
#[derive(Debug, Clone, Serialize)]
pub struct HomReport {
    pub spec: PrimeSpec,
    /// Residue of each input point.
    pub images: Vec<Vec<u64>>,
    /// Index of each image in `Γ(F_p^d)`'s lexicographic order.
    pub target_index: Vec<usize>,
    /// Unit-distance pairs of the input, `(i, j)` with `i < j`.
    pub source_edges: Vec<(usize, usize)>,
    /// Source edges whose images are not adjacent in `Γ(F_p^d, q)`.
    pub violations: Vec<(usize, usize)>,
    /// Subgraph of `Γ(F_p^d, q)` spanned by the image vertices and the
    /// images of source edges; vertices ordered by first appearance.
    #[serde(skip)]
    pub image: UGraph,
    /// Position of each input point among the image vertices.
    pub vertex_map: Vec<usize>,
}

impl HomReport {
    pub fn is_homomorphism(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Reduces every point, then checks that each unit-distance pair maps to
/// a pair with `q(Δ) ≡ 1 (mod p)`.
pub fn reduce_graph_hom<S: Reducible>(
    points: &[Point<S>],
    spec: &PrimeSpec,
    form: &DiagForm,
) -> Result<HomReport> {
    let p = spec.p;
    let images = points
        .iter()
        .map(|x| reduce_point(x, spec))
        .collect::<Result<Vec<_>>>()?;
    let source = build_exact_graph(points, form)?;
    let target_index: Vec<usize> = images.iter().map(|v| fp_index(v, p)).collect();

    let mut distinct: Vec<usize> = Vec::new();
    let mut labels = Vec::new();
    let vertex_map: Vec<usize> = target_index
        .iter()
        .zip(&images)
        .map(|(&t, v)| match distinct.iter().position(|&d| d == t) {
            Some(i) => i,
            None => {
                distinct.push(t);
                labels.push(fp_label(v));
                distinct.len() - 1
            }
        })
        .collect();

    let mut violations = Vec::new();
    let mut image_edges = Vec::new();
    for &(i, j) in source.edges() {
        let delta: Vec<u64> = images[j]
            .iter()
            .zip(&images[i])
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        if form.eval_fp(&delta, p) == 1 % p && vertex_map[i] != vertex_map[j] {
            image_edges.push((vertex_map[i], vertex_map[j]));
        } else {
            violations.push((i, j));
        }
    }
    let image = UGraph::from_edges(distinct.len(), image_edges)?.with_labels(labels)?;
    Ok(HomReport {
        spec: *spec,
        images,
        target_index,
        source_edges: source.edges().to_vec(),
        violations,
        image,
        vertex_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, BiQuadElem, FieldDesc, QuadElem, Rat};

    fn quad_pt(m: i64, s: &str) -> Point<QuadElem> {
        Point::parse(s, FieldDesc::Quad(m)).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let split = PrimeSpec::split(7, 3, Some(2)).unwrap();
        assert_eq!(
            reduce_point(&quad_pt(7, "1/8; 3/8*sqrt(7)"), &split).unwrap(),
            [2, 0]
        );
        let ram = PrimeSpec::ramified(3, 3, false).unwrap();
        assert_eq!(
            reduce_point(&quad_pt(3, "1/2; 1/2*sqrt(3)"), &ram).unwrap(),
            [2, 0]
        );
        let bq = PrimeSpec::biquad_ramified(3, 11, 11, Some(5)).unwrap();
        let p4: Point<BiQuadElem> =
            Point::parse("5/6; 1/6*sqrt(11)", FieldDesc::BiQuad(3, 11)).unwrap();
        assert_eq!(reduce_point(&p4, &bq).unwrap(), [10, 0]);
    }

    #[test]
    fn non_integral_coordinate_is_named() {
        let ram = PrimeSpec::ramified(3, 3, false).unwrap();
        let err = reduce_point(&quad_pt(3, "1; 1/3"), &ram).unwrap_err();
        match err {
            Error::NotIntegral { index, valuation } => {
                assert_eq!(index, 1);
                assert_eq!(valuation, "-1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn edge_integrality_examples() {
        let q = PrimeSpec::mod_square(2).unwrap();
        let o = Point::new(vec![int(0), int(0)]).unwrap();
        let d = Point::new(vec![rat(3, 5), rat(4, 5)]).unwrap();
        assert!(edge_integrality_check(&o, &d, &q).unwrap());
        let not_unit = Point::new(vec![rat(1, 2), Rat::from_integer(0.into())]).unwrap();
        assert!(matches!(
            edge_integrality_check(&o, &not_unit, &q),
            Err(Error::NotUnitDistance)
        ));
        let s2 = PrimeSpec::ramified(2, 2, true).unwrap();
        let o2 = quad_pt(2, "0; 0");
        let diag = quad_pt(2, "1/2*sqrt(2); 1/2*sqrt(2)");
        assert!(edge_integrality_check(&o2, &diag, &s2).unwrap());
        let strict = PrimeSpec::ramified(2, 2, false).unwrap();
        assert!(!edge_integrality_check(&o2, &diag, &strict).unwrap());
    }

    #[test]
    fn triangle_maps_to_f3_triangle() {
        let pts: Vec<_> = ["0; 0", "1; 0", "1/2; 1/2*sqrt(3)"]
            .iter()
            .map(|s| quad_pt(3, s))
            .collect();
        let spec = PrimeSpec::ramified(3, 3, false).unwrap();
        let r = reduce_graph_hom(&pts, &spec, &DiagForm::euclidean(2)).unwrap();
        assert!(r.is_homomorphism());
        assert_eq!(r.images, [vec![0, 0], vec![1, 0], vec![2, 0]]);
        assert_eq!(r.image.m(), 3);
    }
}
