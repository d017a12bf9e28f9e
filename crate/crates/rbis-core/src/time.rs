//! Integer nanosecond time arithmetic.
//!
//! Every time quantity in this crate is a signed 64-bit nanosecond count.
//! Arithmetic that would overflow is a hard error (panic), never a silent
//! wrap; `checked_*` variants exist for callers that want to recover.

use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

/// Nanoseconds in one 802.11 Time Unit. 1 TU = 1024 µs.
pub const NANOS_PER_TU: i64 = 1_024_000;

/// An instant on the simulation's true-time axis, in nanoseconds since the
/// simulation epoch.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SimTime {
    nanos: i64,
}

/// A signed span of time, in nanoseconds.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Duration {
    nanos: i64,
}

impl SimTime {
    pub const EPOCH: SimTime = SimTime { nanos: 0 };
    pub const MAX: SimTime = SimTime { nanos: i64::MAX };

    #[inline]
    pub const fn from_nanos(nanos: i64) -> Self {
        SimTime { nanos }
    }

    #[inline]
    pub const fn nanos(self) -> i64 {
        self.nanos
    }

    #[inline]
    pub fn checked_add(self, d: Duration) -> Option<SimTime> {
        self.nanos.checked_add(d.nanos).map(SimTime::from_nanos)
    }

    #[inline]
    pub fn checked_sub(self, d: Duration) -> Option<SimTime> {
        self.nanos.checked_sub(d.nanos).map(SimTime::from_nanos)
    }

    /// Elapsed time since `earlier`. Panics on overflow.
    #[inline]
    pub fn since(self, earlier: SimTime) -> Duration {
        Duration::from_nanos(
            self.nanos
                .checked_sub(earlier.nanos)
                .expect("SimTime subtraction overflow"),
        )
    }
}

impl Duration {
    pub const ZERO: Duration = Duration { nanos: 0 };
    pub const MAX: Duration = Duration { nanos: i64::MAX };

    #[inline]
    pub const fn from_nanos(nanos: i64) -> Self {
        Duration { nanos }
    }

    #[inline]
    pub const fn from_micros(micros: i64) -> Self {
        Duration {
            nanos: micros * 1_000,
        }
    }

    #[inline]
    pub const fn from_millis(millis: i64) -> Self {
        Duration {
            nanos: millis * 1_000_000,
        }
    }

    #[inline]
    pub const fn from_secs(secs: i64) -> Self {
        Duration {
            nanos: secs * 1_000_000_000,
        }
    }

    /// Whole 802.11 Time Units, exact multiple of 1024 µs.
    #[inline]
    pub const fn from_tu(tu: i64) -> Self {
        Duration {
            nanos: tu * NANOS_PER_TU,
        }
    }

    #[inline]
    pub const fn nanos(self) -> i64 {
        self.nanos
    }

    /// Whole microseconds, truncated toward negative infinity.
    #[inline]
    pub const fn as_micros_floor(self) -> i64 {
        self.nanos.div_euclid(1_000)
    }

    #[inline]
    pub const fn is_negative(self) -> bool {
        self.nanos < 0
    }

    #[inline]
    pub fn abs(self) -> Duration {
        Duration::from_nanos(self.nanos.checked_abs().expect("Duration abs overflow"))
    }

    #[inline]
    pub fn checked_add(self, other: Duration) -> Option<Duration> {
        self.nanos.checked_add(other.nanos).map(Duration::from_nanos)
    }

    #[inline]
    pub fn checked_sub(self, other: Duration) -> Option<Duration> {
        self.nanos.checked_sub(other.nanos).map(Duration::from_nanos)
    }

    #[inline]
    pub fn checked_mul(self, k: i64) -> Option<Duration> {
        self.nanos.checked_mul(k).map(Duration::from_nanos)
    }
}

impl Add<Duration> for SimTime {
    type Output = SimTime;
    #[inline]
    fn add(self, d: Duration) -> SimTime {
        self.checked_add(d).expect("SimTime addition overflow")
    }
}

impl AddAssign<Duration> for SimTime {
    #[inline]
    fn add_assign(&mut self, d: Duration) {
        *self = *self + d;
    }
}

impl Sub<Duration> for SimTime {
    type Output = SimTime;
    #[inline]
    fn sub(self, d: Duration) -> SimTime {
        self.checked_sub(d).expect("SimTime subtraction overflow")
    }
}

impl Sub<SimTime> for SimTime {
    type Output = Duration;
    #[inline]
    fn sub(self, other: SimTime) -> Duration {
        self.since(other)
    }
}

impl Add for Duration {
    type Output = Duration;
    #[inline]
    fn add(self, other: Duration) -> Duration {
        self.checked_add(other).expect("Duration addition overflow")
    }
}

impl AddAssign for Duration {
    #[inline]
    fn add_assign(&mut self, other: Duration) {
        *self = *self + other;
    }
}

impl Sub for Duration {
    type Output = Duration;
    #[inline]
    fn sub(self, other: Duration) -> Duration {
        self.checked_sub(other)
            .expect("Duration subtraction overflow")
    }
}

impl SubAssign for Duration {
    #[inline]
    fn sub_assign(&mut self, other: Duration) {
        *self = *self - other;
    }
}

impl Neg for Duration {
    type Output = Duration;
    #[inline]
    fn neg(self) -> Duration {
        Duration::from_nanos(self.nanos.checked_neg().expect("Duration negation overflow"))
    }
}

impl Mul<i64> for Duration {
    type Output = Duration;
    #[inline]
    fn mul(self, k: i64) -> Duration {
        self.checked_mul(k).expect("Duration multiplication overflow")
    }
}

impl Div<i64> for Duration {
    type Output = Duration;
    /// Division truncates toward negative infinity so that algebraic
    /// identities over integers hold regardless of sign.
    #[inline]
    fn div(self, k: i64) -> Duration {
        Duration::from_nanos(self.nanos.div_euclid(k))
    }
}

impl Sum for Duration {
    fn sum<I: Iterator<Item = Duration>>(iter: I) -> Duration {
        iter.fold(Duration::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for SimTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}ns", self.nanos)
    }
}

impl fmt::Display for SimTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.nanos)
    }
}

impl fmt::Debug for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}ns", self.nanos)
    }
}

impl fmt::Display for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}ns", self.nanos)
    }
}

/// Error from parsing a human-readable duration string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseDurationError {
    Empty,
    MissingUnit,
    UnknownUnit,
    BadNumber,
    /// The value is not a whole number of nanoseconds.
    SubNanosecond,
    Overflow,
}

impl fmt::Display for ParseDurationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseDurationError::Empty => write!(f, "empty duration"),
            ParseDurationError::MissingUnit => {
                write!(f, "missing unit (expected ns, us, ms, s, m, or h)")
            }
            ParseDurationError::UnknownUnit => {
                write!(f, "unknown unit (expected ns, us, ms, s, m, or h)")
            }
            ParseDurationError::BadNumber => write!(f, "malformed number"),
            ParseDurationError::SubNanosecond => {
                write!(f, "value is finer than 1 ns")
            }
            ParseDurationError::Overflow => write!(f, "duration overflows 64-bit nanoseconds"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseDurationError {}

/// Parses durations like `"350ns"`, `"31.25ms"`, `"10m"`, `"-5us"`.
///
/// Decimal fractions are converted exactly; anything finer than 1 ns is
/// rejected rather than rounded. A bare `"0"` is accepted without a unit.
impl FromStr for Duration {
    type Err = ParseDurationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseDurationError::Empty);
        }
        if s == "0" {
            return Ok(Duration::ZERO);
        }
        let unit_start = s
            .find(|c: char| c.is_ascii_alphabetic() || c == 'µ')
            .ok_or(ParseDurationError::MissingUnit)?;
        let (num, unit) = s.split_at(unit_start);
        let per_unit: i64 = match unit {
            "ns" => 1,
            "us" | "µs" => 1_000,
            "ms" => 1_000_000,
            "s" => 1_000_000_000,
            "m" => 60_000_000_000,
            "h" => 3_600_000_000_000,
            _ => return Err(ParseDurationError::UnknownUnit),
        };

        let num = num.trim();
        let (sign, digits) = match num.strip_prefix('-') {
            Some(rest) => (-1i128, rest),
            None => (1i128, num.strip_prefix('+').unwrap_or(num)),
        };
        if digits.is_empty() {
            return Err(ParseDurationError::BadNumber);
        }
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(ParseDurationError::BadNumber);
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(ParseDurationError::BadNumber);
        }

        let int_val: i128 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| ParseDurationError::BadNumber)?
        };
        let mut total: i128 = int_val
            .checked_mul(per_unit as i128)
            .ok_or(ParseDurationError::Overflow)?;

        if !frac_part.is_empty() {
            let frac_val: i128 = frac_part.parse().map_err(|_| ParseDurationError::BadNumber)?;
            let scale = 10i128.pow(frac_part.len() as u32);
            let frac_nanos_num = frac_val
                .checked_mul(per_unit as i128)
                .ok_or(ParseDurationError::Overflow)?;
            if frac_nanos_num % scale != 0 {
                return Err(ParseDurationError::SubNanosecond);
            }
            total = total
                .checked_add(frac_nanos_num / scale)
                .ok_or(ParseDurationError::Overflow)?;
        }

        let nanos =
            i64::try_from(sign * total).map_err(|_| ParseDurationError::Overflow)?;
        Ok(Duration::from_nanos(nanos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let t = SimTime::from_nanos(1_000);
        let d = Duration::from_micros(2);
        assert_eq!((t + d).nanos(), 3_000);
        assert_eq!((t + d) - t, Duration::from_nanos(2_000));
        assert_eq!(Duration::from_tu(100).nanos(), 102_400_000);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn addition_overflow_is_hard_error() {
        let _ = SimTime::from_nanos(i64::MAX) + Duration::from_nanos(1);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn subtraction_overflow_is_hard_error() {
        let _ = SimTime::from_nanos(i64::MIN) - Duration::from_nanos(1);
    }

    #[test]
    fn checked_ops_return_none_on_overflow() {
        assert_eq!(SimTime::from_nanos(i64::MAX).checked_add(Duration::from_nanos(1)), None);
        assert_eq!(Duration::MAX.checked_mul(2), None);
    }

    #[test]
    fn parse_plain_units() {
        assert_eq!("350ns".parse::<Duration>().unwrap().nanos(), 350);
        assert_eq!("5us".parse::<Duration>().unwrap().nanos(), 5_000);
        assert_eq!("5µs".parse::<Duration>().unwrap().nanos(), 5_000);
        assert_eq!("1ms".parse::<Duration>().unwrap().nanos(), 1_000_000);
        assert_eq!("2s".parse::<Duration>().unwrap().nanos(), 2_000_000_000);
        assert_eq!("10m".parse::<Duration>().unwrap().nanos(), 600_000_000_000);
        assert_eq!("1h".parse::<Duration>().unwrap().nanos(), 3_600_000_000_000);
        assert_eq!("0".parse::<Duration>().unwrap(), Duration::ZERO);
    }

    #[test]
    fn parse_decimal_exactly() {
        assert_eq!("31.25ms".parse::<Duration>().unwrap().nanos(), 31_250_000);
        assert_eq!("102.4ms".parse::<Duration>().unwrap().nanos(), 102_400_000);
        assert_eq!("0.5us".parse::<Duration>().unwrap().nanos(), 500);
        assert_eq!("-1.5us".parse::<Duration>().unwrap().nanos(), -1_500);
    }

    #[test]
    fn parse_rejects_sub_nanosecond() {
        assert_eq!(
            "0.5ns".parse::<Duration>(),
            Err(ParseDurationError::SubNanosecond)
        );
        assert_eq!(
            "1.0000005us".parse::<Duration>(),
            Err(ParseDurationError::SubNanosecond)
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Duration>().is_err());
        assert!("12".parse::<Duration>().is_err());
        assert!("12xs".parse::<Duration>().is_err());
        assert!("ms".parse::<Duration>().is_err());
        assert!("1.2.3ms".parse::<Duration>().is_err());
    }
}
