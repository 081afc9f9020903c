use core::fmt;
use core::ops::Add;

/// A path length: a finite 64-bit integer or [`Dist::INF`].
///
/// Arithmetic saturates at `INF`, and `INF` compares above every finite
/// value, so `min` over candidate lengths works without special cases.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dist(i64);

impl Dist {
    /// The unreachable distance.
    pub const INF: Dist = Dist(i64::MAX);
    /// Zero.
    pub const ZERO: Dist = Dist(0);

    /// A finite distance.
    #[inline]
    pub const fn finite(v: i64) -> Dist {
        debug_assert!(v != i64::MAX);
        Dist(v)
    }

    /// `true` for [`Dist::INF`].
    #[inline]
    pub const fn is_inf(self) -> bool {
        self.0 == i64::MAX
    }

    /// `true` for finite values.
    #[inline]
    pub const fn is_finite(self) -> bool {
        !self.is_inf()
    }

    /// The finite value, if any.
    #[inline]
    pub const fn value(self) -> Option<i64> {
        if self.is_inf() {
            None
        } else {
            Some(self.0)
        }
    }

    /// Adds a finite offset; `INF` stays `INF`.
    #[inline]
    pub fn offset(self, delta: i64) -> Dist {
        if self.is_inf() {
            self
        } else {
            Dist(self.0 + delta)
        }
    }

    /// Maps values whose magnitude exceeds `bound` to `INF`.
    #[inline]
    pub fn clamp_abs(self, bound: i64) -> Dist {
        match self.value() {
            Some(v) if v.abs() <= bound => self,
            _ => Dist::INF,
        }
    }
}

impl Add for Dist {
    type Output = Dist;

    #[inline]
    fn add(self, rhs: Dist) -> Dist {
        if self.is_inf() || rhs.is_inf() {
            Dist::INF
        } else {
            Dist(self.0 + rhs.0)
        }
    }
}

impl Add<i64> for Dist {
    type Output = Dist;

    #[inline]
    fn add(self, rhs: i64) -> Dist {
        self.offset(rhs)
    }
}

impl From<i64> for Dist {
    fn from(v: i64) -> Self {
        Dist::finite(v)
    }
}

impl From<Option<i64>> for Dist {
    fn from(v: Option<i64>) -> Self {
        v.map_or(Dist::INF, Dist::finite)
    }
}

impl fmt::Debug for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("INF"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturates_and_orders() {
        assert_eq!(Dist::INF + Dist::finite(-5), Dist::INF);
        assert_eq!(Dist::finite(3) + Dist::finite(-5), Dist::finite(-2));
        assert!(Dist::finite(i64::MAX - 1) < Dist::INF);
        assert_eq!(Dist::INF.offset(-7), Dist::INF);
        assert_eq!(Dist::finite(9).clamp_abs(8), Dist::INF);
        assert_eq!(Dist::finite(-8).clamp_abs(8), Dist::finite(-8));
    }
}
