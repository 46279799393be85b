use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{PrimeSpec, Reducible};
use crate::catalog::F11_TABLE;
use crate::error::{Error, Result};
use crate::exact::{BiQuadElem, FieldDesc, QuadElem, Rat};
use crate::geometry::Point;

/// The shipped coloring oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OracleId {
    Q2Color,
    Sqrt2_2Color,
    Sqrt3_3Color,
    Sqrt7_3Color,
    SqrtNeg5_3Color,
    Biquad5Color,
}

impl OracleId {
    pub const ALL: [OracleId; 6] = [
        OracleId::Q2Color,
        OracleId::Sqrt2_2Color,
        OracleId::Sqrt3_3Color,
        OracleId::Sqrt7_3Color,
        OracleId::SqrtNeg5_3Color,
        OracleId::Biquad5Color,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OracleId::Q2Color => "Q2COLOR",
            OracleId::Sqrt2_2Color => "SQRT2_2COLOR",
            OracleId::Sqrt3_3Color => "SQRT3_3COLOR",
            OracleId::Sqrt7_3Color => "SQRT7_3COLOR",
            OracleId::SqrtNeg5_3Color => "SQRTNEG5_3COLOR",
            OracleId::Biquad5Color => "BIQUAD_5COLOR",
        }
    }

    fn short(self) -> &'static str {
        match self {
            OracleId::Q2Color => "q2",
            OracleId::Sqrt2_2Color => "sqrt2",
            OracleId::Sqrt3_3Color => "sqrt3",
            OracleId::Sqrt7_3Color => "sqrt7",
            OracleId::SqrtNeg5_3Color => "sqrtneg5",
            OracleId::Biquad5Color => "biquad",
        }
    }

    /// Number of colors.
    pub fn k(self) -> usize {
        match self {
            OracleId::Q2Color | OracleId::Sqrt2_2Color => 2,
            OracleId::Biquad5Color => 5,
            _ => 3,
        }
    }

    pub fn spec(self) -> PrimeSpec {
        match self {
            OracleId::Q2Color => PrimeSpec::mod_square(2),
            OracleId::Sqrt2_2Color => PrimeSpec::ramified(2, 2, true),
            OracleId::Sqrt3_3Color => PrimeSpec::ramified(3, 3, false),
            OracleId::Sqrt7_3Color => PrimeSpec::split(7, 3, Some(2)),
            OracleId::SqrtNeg5_3Color => PrimeSpec::split(-5, 3, Some(2)),
            OracleId::Biquad5Color => PrimeSpec::biquad_ramified(3, 11, 11, Some(5)),
        }
        .expect("built-in specs are valid")
    }

    pub fn field(self) -> FieldDesc {
        self.spec().field
    }
}

impl fmt::Display for OracleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OracleId {
    type Err = Error;

    /// Accepts the full name or the short form (`q2`, `sqrt2`, `sqrt3`,
    /// `sqrt7`, `sqrtneg5`, `biquad`), case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        OracleId::ALL
            .into_iter()
            .find(|id| s.eq_ignore_ascii_case(id.name()) || s.eq_ignore_ascii_case(id.short()))
            .ok_or_else(|| Error::UnknownName(format!("oracle '{s}'")))
    }
}

/// Everything the oracle computed on the way to a color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleTrace {
    pub oracle: OracleId,
    pub color: usize,
    /// Componentwise class representative that was subtracted.
    pub representative: String,
    /// The point minus its representative.
    pub shifted: String,
    /// Image of the shifted point in the residue plane (`F_p` values, or
    /// the classes `0, 1, U, V` for the half lattice).
    pub residue: Vec<String>,
}

/// Colors a point of the plane over the oracle's field.
pub fn color_oracle<S: Reducible>(id: OracleId, x: &Point<S>) -> Result<OracleTrace> {
    let spec = id.spec();
    spec.expect_field(x.field())?;
    if x.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: x.dim(),
        });
    }
    let rho = x
        .coords()
        .iter()
        .map(|c| c.representative(&spec))
        .collect::<Result<Vec<_>>>()?;
    let rho = Point::new(rho)?;
    let y = x.sub(&rho)?;
    let (color, residue) = match id {
        OracleId::Sqrt2_2Color => {
            let c = y
                .coords()
                .iter()
                .map(|c| c.half_lattice_class(&spec))
                .collect::<Result<Vec<_>>>()?;
            // classes (a mod 2, 2b mod 2) of a + b√2; color is a1 + a2 + u2
            let color = ((c[0].0 + c[1].0 + c[1].1) % 2) as usize;
            let names = c
                .iter()
                .map(|&cl| half_class_name(cl).to_string())
                .collect();
            (color, names)
        }
        _ => {
            let r = y
                .coords()
                .iter()
                .map(|c| c.residue(&spec))
                .collect::<Result<Vec<_>>>()?;
            let color = match id {
                OracleId::Biquad5Color => F11_TABLE[r[0] as usize][r[1] as usize] as usize,
                _ => ((r[0] + r[1]) % spec.p) as usize,
            };
            (color, r.iter().map(u64::to_string).collect())
        }
    };
    Ok(OracleTrace {
        oracle: id,
        color,
        representative: rho.to_string(),
        shifted: y.to_string(),
        residue,
    })
}

fn half_class_name(c: (u64, u64)) -> &'static str {
    match c {
        (0, 0) => "0",
        (1, 0) => "1",
        (0, 1) => "U",
        _ => "V",
    }
}

/// Parses `x1; x2` in the oracle's field and colors it.
pub fn color_oracle_text(id: OracleId, point: &str) -> Result<OracleTrace> {
    let field = id.field();
    match field {
        FieldDesc::Rational => color_oracle(id, &Point::<Rat>::parse(point, field)?),
        FieldDesc::Quad(_) => color_oracle(id, &Point::<QuadElem>::parse(point, field)?),
        FieldDesc::BiQuad(..) => color_oracle(id, &Point::<BiQuadElem>::parse(point, field)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn colors(id: OracleId, pts: &[&str]) -> Vec<usize> {
        pts.iter()
            .map(|p| color_oracle_text(id, p).unwrap().color)
            .collect()
    }

    #[test]
    fn names() {
        assert_eq!("sqrt3".parse::<OracleId>().unwrap(), OracleId::Sqrt3_3Color);
        assert_eq!(
            "BIQUAD_5COLOR".parse::<OracleId>().unwrap(),
            OracleId::Biquad5Color
        );
        assert_eq!(
            "SqrtNeg5".parse::<OracleId>().unwrap(),
            OracleId::SqrtNeg5_3Color
        );
        assert!("sqrt5".parse::<OracleId>().is_err());
        let ks: Vec<usize> = OracleId::ALL.iter().map(|id| id.k()).collect();
        assert_eq!(ks, [2, 2, 3, 3, 3, 5]);
    }

    #[test]
    fn triangle_gets_three_colors() {
        let c = colors(
            OracleId::Sqrt3_3Color,
            &["0; 0", "1; 0", "1/2; 1/2*sqrt(3)"],
        );
        assert_eq!(c, [0, 1, 2]);
        let t = color_oracle_text(OracleId::Sqrt3_3Color, "1/2; 1/2*sqrt(3)").unwrap();
        assert_eq!(t.residue, ["2", "0"]);
    }

    #[test]
    fn sqrt2_diagonal() {
        let o = color_oracle_text(OracleId::Sqrt2_2Color, "0; 0").unwrap();
        let d = color_oracle_text(OracleId::Sqrt2_2Color, "1/2*sqrt(2); 1/2*sqrt(2)").unwrap();
        assert_eq!(d.residue, ["U", "U"]);
        assert_ne!(o.color, d.color);
    }

    #[test]
    fn rational_plane() {
        assert_eq!(colors(OracleId::Q2Color, &["0; 0", "3/5; 4/5"]), [0, 1]);
        let far = Point::new(vec![rat(7, 4), rat(1, 3)]).unwrap();
        let t = color_oracle(OracleId::Q2Color, &far).unwrap();
        assert_eq!(t.representative, "3/4; 0");
    }

    #[test]
    fn wrong_field_and_domain() {
        let p = Point::new(vec![int(0), int(1)]).unwrap();
        assert!(matches!(
            color_oracle(OracleId::Sqrt3_3Color, &p),
            Err(Error::FieldMismatch(..))
        ));
        assert!(matches!(
            color_oracle_text(OracleId::Biquad5Color, "1/11; 0"),
            Err(Error::OutsideDomain(_))
        ));
        assert_eq!(colors(OracleId::Biquad5Color, &["0; 0"]), [3]);
    }
}
