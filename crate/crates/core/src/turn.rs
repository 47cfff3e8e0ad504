//! Exact angles measured in full turns.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

/// Exact rational number used for angle spans that may exceed one turn.
pub type Frac = Ratio<i64>;

/// A direction or angle stored as an exact fraction of a full turn,
/// canonicalized to `[0, 1)`. `1/3` is 120 degrees.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TurnAngle(Frac);

impl TurnAngle {
    pub const ZERO: TurnAngle = TurnAngle(Ratio::new_raw(0, 1));
    pub const HALF: TurnAngle = TurnAngle(Ratio::new_raw(1, 2));

    /// `numer/denom` of a full turn, reduced mod 1. Panics on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Self {
        Self::from_frac(Ratio::new(numer, denom))
    }

    pub fn from_frac(value: Frac) -> Self {
        let denom = *value.denom();
        let numer = value.numer().mod_floor(&denom);
        TurnAngle(Ratio::new(numer, denom))
    }

    pub fn frac(self) -> Frac {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        *self.0.numer() == 0
    }

    /// Counterclockwise angle needed to rotate `self` onto `to`, in `[0, 1)`.
    pub fn ccw_gap(self, to: TurnAngle) -> Frac {
        (to - self).0
    }

    /// The opposite direction.
    pub fn reversed(self) -> Self {
        self + TurnAngle::HALF
    }

    pub fn to_radians(self) -> f64 {
        self.as_f64() * std::f64::consts::TAU
    }

    pub fn to_degrees(self) -> f64 {
        self.as_f64() * 360.0
    }

    pub fn as_f64(self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }

    /// Formats the angle as a rational multiple of pi, e.g. `7π/12`.
    pub fn pi_string(self) -> String {
        format_pi_multiple(self.0 * 2)
    }
}

/// Formats `value * pi` with the conventional glyph (`π/2`, `2π/3`, `π`, `0`).
pub fn format_pi_multiple(value: Frac) -> String {
    let (n, d) = (*value.numer(), *value.denom());
    let head = match n {
        0 => return "0".to_string(),
        1 => "π".to_string(),
        -1 => "-π".to_string(),
        _ => format!("{n}π"),
    };
    if d == 1 {
        head
    } else {
        format!("{head}/{d}")
    }
}

impl Add for TurnAngle {
    type Output = TurnAngle;
    fn add(self, rhs: TurnAngle) -> TurnAngle {
        TurnAngle::from_frac(self.0 + rhs.0)
    }
}

impl Add<Frac> for TurnAngle {
    type Output = TurnAngle;
    fn add(self, rhs: Frac) -> TurnAngle {
        TurnAngle::from_frac(self.0 + rhs)
    }
}

impl Sub for TurnAngle {
    type Output = TurnAngle;
    fn sub(self, rhs: TurnAngle) -> TurnAngle {
        TurnAngle::from_frac(self.0 - rhs.0)
    }
}

impl Neg for TurnAngle {
    type Output = TurnAngle;
    fn neg(self) -> TurnAngle {
        TurnAngle::from_frac(-self.0)
    }
}

impl From<Frac> for TurnAngle {
    fn from(value: Frac) -> Self {
        TurnAngle::from_frac(value)
    }
}

impl fmt::Display for TurnAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for TurnAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TurnAngle({})", self.0)
    }
}

impl FromStr for TurnAngle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: i64 = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: i64 = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if d == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(TurnAngle::new(n, d))
    }
}

impl serde::Serialize for TurnAngle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
