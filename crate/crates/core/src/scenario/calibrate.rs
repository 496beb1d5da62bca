use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::Scalar;

/// Julian-year day count used to turn calendar spans into years.
pub const DAYS_PER_YEAR: f64 = 365.25;

/// Whole days from `start` to `end`; negative when reversed.
pub fn days_between(start: NaiveDate, end: NaiveDate) -> i64 {
    end.signed_duration_since(start).num_days()
}

/// Legislation lag in years between two calendar events, `days / 365.25`.
pub fn calibrate_lag<T: Scalar>(event_start: NaiveDate, event_end: NaiveDate) -> Result<T> {
    let days = days_between(event_start, event_end);
    if days <= 0 {
        return Err(Error::domain(
            "event_end",
            event_end,
            "must be strictly after event_start",
        ));
    }
    let days = T::from_i64(days).expect("day count representable");
    Ok(days / T::lit(DAYS_PER_YEAR))
}
