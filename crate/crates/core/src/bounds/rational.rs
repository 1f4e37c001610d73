use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Exact closed-form bound in lowest terms, with its floor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalBound {
    numerator: i64,
    denominator: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RationalBound {
    /// Panics on a zero denominator.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert_ne!(denominator, 0, "zero denominator");
        let sign = denominator.signum();
        let g = gcd(numerator, denominator).max(1);
        RationalBound {
            numerator: sign * numerator / g,
            denominator: sign * denominator / g,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn floor(&self) -> i64 {
        self.numerator.div_euclid(self.denominator)
    }

    /// `self - k`, exactly.
    pub fn minus(&self, k: i64) -> RationalBound {
        RationalBound::new(self.numerator - k * self.denominator, self.denominator)
    }

    /// Compares against an integer without rounding.
    pub fn cmp_int(&self, k: i64) -> Ordering {
        self.numerator.cmp(&(k * self.denominator))
    }
}

impl fmt::Display for RationalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} (floor {})",
            self.numerator,
            self.denominator,
            self.floor()
        )
    }
}

impl Serialize for RationalBound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RationalBound", 3)?;
        st.serialize_field("num", &self.numerator)?;
        st.serialize_field("den", &self.denominator)?;
        st.serialize_field("floor", &self.floor())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_floors() {
        let r = RationalBound::new(12, 4);
        assert_eq!((r.numerator(), r.denominator(), r.floor()), (3, 1, 3));
        let r = RationalBound::new(28, 3);
        assert_eq!(r.floor(), 9);
        assert_eq!(r.minus(8), RationalBound::new(4, 3));
        assert_eq!(RationalBound::new(-5, 2).floor(), -3);
        assert_eq!(RationalBound::new(5, -2), RationalBound::new(-5, 2));
        assert_eq!(RationalBound::new(10, 4).to_string(), "5/2 (floor 2)");
        assert_eq!(RationalBound::new(10, 4).cmp_int(2), Ordering::Greater);
        assert_eq!(
            serde_json::to_string(&RationalBound::new(20, 5)).unwrap(),
            r#"{"num":4,"den":1,"floor":4}"#
        );
    }
}
