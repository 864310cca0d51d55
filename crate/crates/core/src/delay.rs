//! Delay measurement: per-emission work-counter deltas and wall time.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::clones::Algorithm;
use crate::enumerate::Enumeration;
use crate::error::Result;
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DelaySample {
    /// Work done since the previous emission (or since the start).
    pub work: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DelayReport {
    pub samples: Vec<DelaySample>,
    /// Work between the last emission and termination.
    pub tail_work: u64,
    pub total_work: u64,
    pub total_time: Duration,
    /// Whether the run stopped at the emission limit.
    pub truncated: bool,
}

impl DelayReport {
    /// Drives `stream` to completion, or to `limit` emissions, recording one
    /// sample per emission. `emit` sees every vector.
    pub fn measure(
        stream: &mut dyn Enumeration,
        limit: Option<usize>,
        emit: impl FnMut(&Vector),
    ) -> Result<DelayReport> {
        let start = Instant::now();
        Self::measure_with_clock(stream, limit, move || start.elapsed(), emit)
    }

    /// As [`DelayReport::measure`], reading the time from `clock` (for
    /// targets without `Instant`).
    pub fn measure_with_clock(
        stream: &mut dyn Enumeration,
        limit: Option<usize>,
        mut clock: impl FnMut() -> Duration,
        mut emit: impl FnMut(&Vector),
    ) -> Result<DelayReport> {
        let start = clock();
        let mut last_time = start;
        let mut last_work = stream.work();
        let mut report = DelayReport::default();
        loop {
            if limit.is_some_and(|l| report.samples.len() >= l) {
                report.truncated = true;
                break;
            }
            let Some(item) = stream.next() else { break };
            let v = item?;
            let now = clock();
            let work = stream.work();
            report.samples.push(DelaySample {
                work: work - last_work,
                elapsed: now.saturating_sub(last_time),
            });
            last_work = work;
            last_time = now;
            emit(&v);
        }
        if !report.truncated {
            report.tail_work = stream.work() - last_work;
        }
        report.total_work = stream.work();
        report.total_time = clock().saturating_sub(start);
        Ok(report)
    }

    pub fn emissions(&self) -> usize {
        self.samples.len()
    }

    /// Largest delay in work units, the tail included.
    pub fn max_work(&self) -> u64 {
        self.samples.iter().map(|s| s.work).max().unwrap_or(0).max(self.tail_work)
    }

    pub fn mean_work(&self) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        self.samples.iter().map(|s| s.work).sum::<u64>() as f64 / self.samples.len() as f64
    }

    pub fn max_time(&self) -> Duration {
        self.samples.iter().map(|s| s.elapsed).max().unwrap_or_default()
    }

    pub fn mean_time(&self) -> Duration {
        if self.samples.is_empty() {
            return Duration::ZERO;
        }
        self.samples.iter().map(|s| s.elapsed).sum::<Duration>() / self.samples.len() as u32
    }

    /// Counts of per-emission work in power-of-two buckets, keyed by the
    /// bucket's lower end (0, 1, 2, 4, 8, ...).
    pub fn histogram(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for s in &self.samples {
            let bucket = if s.work == 0 { 0 } else { 1 << (63 - s.work.leading_zeros()) };
            *out.entry(bucket).or_insert(0) += 1;
        }
        out
    }
}

/// Claimed per-emission work bound for a fast enumerator on `n` coordinates
/// and `m` input vectors, with its shape as text.
pub fn claimed_bound(algorithm: Algorithm, n: usize, m: usize) -> Option<(&'static str, u64)> {
    let (n, m) = (n as u64, m as u64);
    let words = n.div_ceil(64);
    Some(match algorithm {
        Algorithm::E2 => ("2mn + 8n", 2 * m * n + 8 * n),
        Algorithm::L0 | Algorithm::L2 => ("2*ceil(n/64) + 8", 2 * words + 8),
        Algorithm::M2 => ("8n", 8 * n),
        Algorithm::D2 => ("n(n+1)/2 + 8n", n * (n + 1) / 2 + 8 * n),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Uncounted;

    #[test]
    fn samples_match_emissions() {
        let items: Vec<Result<Vector>> = ["01", "10", "11"].iter().map(|s| Vector::parse(s, 2)).collect();
        let mut stream = Uncounted::new(items.into_iter());
        let mut seen = 0;
        let r = DelayReport::measure(&mut stream, None, |_| seen += 1).unwrap();
        assert_eq!(seen, 3);
        assert_eq!(r.emissions(), 3);
        assert_eq!(r.max_work(), 1);
        assert_eq!(r.mean_work(), 1.0);
        assert_eq!(r.histogram().get(&1), Some(&3));
        assert!(!r.truncated);

        let items: Vec<Result<Vector>> = ["01", "10", "11"].iter().map(|s| Vector::parse(s, 2)).collect();
        let mut stream = Uncounted::new(items.into_iter());
        let r = DelayReport::measure(&mut stream, Some(2), |_| {}).unwrap();
        assert_eq!(r.emissions(), 2);
        assert!(r.truncated);
    }

    #[test]
    fn bounds() {
        assert_eq!(claimed_bound(Algorithm::E2, 64, 32), Some(("2mn + 8n", 4608)));
        assert_eq!(claimed_bound(Algorithm::L0, 128, 64).unwrap().1, 12);
        assert_eq!(claimed_bound(Algorithm::Saturation, 3, 3), None);
    }
}
