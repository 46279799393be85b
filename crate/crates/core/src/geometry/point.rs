use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{FieldDesc, Scalar};

/// A point of `E^d` whose coordinates all live in the same field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        let Some(first) = coords.first() else {
            return Err(Error::Dimension {
                expected: 1,
                got: 0,
            });
        };
        let field = first.field();
        if let Some(other) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::MixedScalars(
                field.to_string(),
                other.field().to_string(),
            ));
        }
        Ok(Point { coords })
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> FieldDesc {
        self.coords[0].field()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        if self.field() != other.field() {
            return Err(Error::MixedScalars(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Point { coords })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Point { coords })
    }

    /// Parses `x1; x2; ...` with each coordinate in the literal grammar.
    pub fn parse(line: &str, field: FieldDesc) -> Result<Self> {
        let coords = line
            .split(';')
            .map(|c| S::parse_in(c, field))
            .collect::<Result<Vec<_>>>()?;
        Point::new(coords)
    }
}

impl<S: Scalar> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, QuadElem, Rat};

    #[test]
    fn parse_display_round_trip() {
        let p: Point<QuadElem> = Point::parse("1/2; 1/2*sqrt(3)", FieldDesc::Quad(3)).unwrap();
        assert_eq!(p.to_string(), "1/2; 0+1/2*sqrt(3)");
        assert_eq!(
            Point::<QuadElem>::parse(&p.to_string(), FieldDesc::Quad(3)).unwrap(),
            p
        );
        assert!(Point::<QuadElem>::parse("1; sqrt(7)", FieldDesc::Quad(3)).is_err());
    }

    #[test]
    fn arithmetic_checks_fields() {
        let a = Point::new(vec![rat(1, 2), int(3)]).unwrap();
        let b = Point::new(vec![int(1), int(1)]).unwrap();
        assert_eq!(a.sub(&b).unwrap().coords(), &[rat(-1, 2), int(2)]);
        let c = Point::new(vec![int(1)]).unwrap();
        assert!(a.add(&c).is_err());
        let mixed = vec![QuadElem::sqrt_m(3).unwrap(), QuadElem::sqrt_m(7).unwrap()];
        assert!(matches!(Point::new(mixed), Err(Error::MixedScalars(..))));
        assert!(Point::<Rat>::new(vec![]).is_err());
    }
}
