//! Triangular fuzzy numbers and the small arithmetic kernel the rest of the
//! crate is built on: extended subtraction, nonnegative weighted sums, the
//! signed membership area used to classify criteria pairs, and the crisp
//! ranking score.

use crate::Error;

/// Triangular fuzzy number `(lower, mode, upper)`.
///
/// The membership function rises linearly from 0 at `lower` to 1 at `mode`
/// and falls back to 0 at `upper`. Operations assume `lower <= mode <=
/// upper`; [`Tfn::is_valid`] checks that ordering (data read from files is
/// validated before it reaches any arithmetic).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tfn {
    pub lower: f64,
    pub mode: f64,
    pub upper: f64,
}

impl Tfn {
    pub const fn new(lower: f64, mode: f64, upper: f64) -> Self {
        Tfn { lower, mode, upper }
    }

    /// A crisp value embedded as a zero-width fuzzy number.
    pub const fn crisp(value: f64) -> Self {
        Tfn::new(value, value, value)
    }

    /// Finite components in nondecreasing order.
    pub fn is_valid(&self) -> bool {
        self.lower.is_finite()
            && self.mode.is_finite()
            && self.upper.is_finite()
            && self.lower <= self.mode
            && self.mode <= self.upper
    }

    /// Extended subtraction: `(a ⊖ b) = (a.lower − b.upper, a.mode − b.mode,
    /// a.upper − b.lower)`. The result ordering holds automatically for
    /// valid operands.
    pub fn ext_sub(self, other: Tfn) -> Tfn {
        Tfn::new(
            self.lower - other.upper,
            self.mode - other.mode,
            self.upper - other.lower,
        )
    }

    /// Componentwise scaling by a nonnegative factor.
    pub fn scale(self, factor: f64) -> Tfn {
        debug_assert!(factor >= 0.0, "scale factor must be nonnegative");
        Tfn::new(self.lower * factor, self.mode * factor, self.upper * factor)
    }

    /// Membership degree at `x`.
    pub fn membership(self, x: f64) -> f64 {
        if x < self.lower || x > self.upper {
            0.0
        } else if x < self.mode {
            (x - self.lower) / (self.mode - self.lower)
        } else if x > self.mode {
            (self.upper - x) / (self.upper - self.mode)
        } else {
            // x == mode; degenerate zero-width numbers land here too.
            1.0
        }
    }

    /// The α-level interval `[lower + α(mode − lower), upper − α(upper − mode)]`.
    pub fn alpha_cut(self, alpha: f64) -> (f64, f64) {
        (
            self.lower + alpha * (self.mode - self.lower),
            self.upper - alpha * (self.upper - self.mode),
        )
    }

    /// Area of the membership function over `x > 0` minus the area over
    /// `x < 0`, in closed form. The total area is `(upper − lower) / 2`;
    /// a degenerate number with `lower == upper` yields 0.
    pub fn signed_area(self) -> f64 {
        let total = (self.upper - self.lower) / 2.0;
        if self.lower >= 0.0 {
            total
        } else if self.upper <= 0.0 {
            -total
        } else {
            total - 2.0 * self.area_left_of(0.0)
        }
    }

    /// Area of the membership function over `x < t`.
    fn area_left_of(self, t: f64) -> f64 {
        let total = (self.upper - self.lower) / 2.0;
        if t <= self.lower {
            0.0
        } else if t >= self.upper {
            total
        } else if t <= self.mode {
            // t > lower, so mode > lower and the rising edge has width.
            let d = t - self.lower;
            d * d / (2.0 * (self.mode - self.lower))
        } else {
            // t < upper, so upper > mode.
            let d = self.upper - t;
            total - d * d / (2.0 * (self.upper - self.mode))
        }
    }

    /// Crisp ranking score `(lower + 2·mode + upper) / 4`.
    pub fn rank_score(self) -> f64 {
        (self.lower + 2.0 * self.mode + self.upper) / 4.0
    }
}

impl core::ops::Add for Tfn {
    type Output = Tfn;

    fn add(self, rhs: Tfn) -> Tfn {
        Tfn::new(
            self.lower + rhs.lower,
            self.mode + rhs.mode,
            self.upper + rhs.upper,
        )
    }
}

/// Componentwise sum of nonnegatively scaled fuzzy numbers.
///
/// Errors on an empty term list; coefficients must be nonnegative.
pub fn weighted_sum<I>(terms: I) -> Result<Tfn, Error>
where
    I: IntoIterator<Item = (f64, Tfn)>,
{
    let mut acc: Option<Tfn> = None;
    for (coefficient, term) in terms {
        debug_assert!(coefficient >= 0.0, "coefficients must be nonnegative");
        let scaled = term.scale(coefficient);
        acc = Some(match acc {
            Some(sum) => sum + scaled,
            None => scaled,
        });
    }
    acc.ok_or(Error::EmptyCombination)
}

#[cfg(feature = "serde")]
impl serde::Serialize for Tfn {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.lower, self.mode, self.upper).serialize(serializer)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Tfn {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (lower, mode, upper) = <(f64, f64, f64)>::deserialize(deserializer)?;
        Ok(Tfn::new(lower, mode, upper))
    }
}
