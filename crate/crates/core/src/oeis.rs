//! OEIS b-file client with an on-disk cache and offline fixtures, plus
//! shift-tolerant alignment of series against sequence terms.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::time::Duration;

use num_bigint::BigInt;
use thiserror::Error;

use crate::catalog::Params;
use crate::series::TruncatedSeries;

pub const CACHE_ENV: &str = "AIRPOCKETS_OEIS_CACHE";
pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OeisError {
    #[error("malformed OEIS id {0:?} (expected A followed by six digits)")]
    BadId(String),
    #[error("network unavailable and no cached or bundled copy of {id}: {detail}")]
    NetworkUnavailable { id: String, detail: String },
    #[error("b-file parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("no such sequence {0}")]
    UnknownSequence(String),
    #[error("no alignment of the series with {id}: {detail}")]
    NoAlignment { id: String, detail: String },
    #[error("cache i/o: {0}")]
    Io(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Network,
    Cache,
    Fixture,
}

/// Terms `a(offset), a(offset + 1), ...` of one sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: String,
    pub offset: i64,
    pub terms: Vec<BigInt>,
    pub source: Source,
}

impl SequenceRecord {
    /// `a(n)`, if listed.
    pub fn term(&self, n: i64) -> Option<&BigInt> {
        let i = n.checked_sub(self.offset)?;
        usize::try_from(i).ok().and_then(|i| self.terms.get(i))
    }

    /// Renders the record in b-file format.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            out.push_str(&format!("{} {}\n", self.offset + i as i64, t));
        }
        out
    }
}

pub fn validate_id(id: &str) -> Result<(), OeisError> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(OeisError::BadId(id.to_string()))
    }
}

/// Parses `index value` lines. Blank lines and anything after `#` are
/// ignored; indices must be consecutive.
pub fn parse_bfile(id: &str, text: &str, source: Source) -> Result<SequenceRecord, OeisError> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| OeisError::ParseError {
            line: lineno + 1,
            msg,
        };
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, got {line:?}")));
        };
        let idx: i64 = idx.parse().map_err(|_| err(format!("bad index {idx:?}")))?;
        let val: BigInt = val.parse().map_err(|_| err(format!("bad value {val:?}")))?;
        let start = *offset.get_or_insert(idx);
        if idx != start + terms.len() as i64 {
            return Err(err(format!("index {idx} out of sequence")));
        }
        terms.push(val);
    }
    let Some(offset) = offset else {
        return Err(OeisError::ParseError {
            line: 0,
            msg: "no terms".into(),
        });
    };
    Ok(SequenceRecord {
        id: id.to_string(),
        offset,
        terms,
        source,
    })
}

const FIXTURES: &[(&str, &str)] = &[
    ("A000035", include_str!("../fixtures/oeis/A000035.txt")),
    ("A004148", include_str!("../fixtures/oeis/A004148.txt")),
    ("A051286", include_str!("../fixtures/oeis/A051286.txt")),
    ("A051291", include_str!("../fixtures/oeis/A051291.txt")),
    ("A062200", include_str!("../fixtures/oeis/A062200.txt")),
    ("A093128", include_str!("../fixtures/oeis/A093128.txt")),
    ("A110236", include_str!("../fixtures/oeis/A110236.txt")),
    ("A110320", include_str!("../fixtures/oeis/A110320.txt")),
    ("A122514", include_str!("../fixtures/oeis/A122514.txt")),
    ("A203611", include_str!("../fixtures/oeis/A203611.txt")),
    ("A329699", include_str!("../fixtures/oeis/A329699.txt")),
];

/// The bundled copy of a sequence, if there is one.
pub fn fixture(id: &str) -> Option<SequenceRecord> {
    FIXTURES
        .iter()
        .find(|(fid, _)| *fid == id)
        .map(|(_, text)| parse_bfile(id, text, Source::Fixture).expect("bundled fixtures parse"))
}

pub fn fixture_ids() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(id, _)| *id)
}

#[derive(Debug)]
pub struct OeisClient {
    cache_dir: Option<PathBuf>,
    base_url: String,
    offline: bool,
    refresh: bool,
    timeout: Duration,
    locks: Mutex<HashMap<String, Arc<Mutex<()>>>>,
}

impl Default for OeisClient {
    fn default() -> Self {
        Self::new()
    }
}

impl OeisClient {
    /// Cache directory from `AIRPOCKETS_OEIS_CACHE` (no cache if unset).
    pub fn new() -> Self {
        OeisClient {
            cache_dir: std::env::var_os(CACHE_ENV).map(PathBuf::from),
            base_url: DEFAULT_BASE_URL.to_string(),
            offline: false,
            refresh: false,
            timeout: Duration::from_secs(15),
            locks: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn without_cache(mut self) -> Self {
        self.cache_dir = None;
        self
    }

    pub fn with_base_url(mut self, url: impl Into<String>) -> Self {
        self.base_url = url.into().trim_end_matches('/').to_string();
        self
    }

    pub fn offline(mut self, offline: bool) -> Self {
        self.offline = offline;
        self
    }

    /// Ignore cached copies and re-download.
    pub fn refresh(mut self, refresh: bool) -> Self {
        self.refresh = refresh;
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    fn cache_path(&self, id: &str) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(format!("{id}.txt")))
    }

    fn lock_for(&self, id: &str) -> Arc<Mutex<()>> {
        let mut locks = self.locks.lock().unwrap();
        locks.entry(id.to_string()).or_default().clone()
    }

    /// Cache, then network, then the bundled fixture. Concurrent fetches of
    /// the same id are serialized, so the second one is served from cache.
    pub fn fetch(&self, id: &str) -> Result<SequenceRecord, OeisError> {
        validate_id(id)?;
        let lock = self.lock_for(id);
        let _guard = lock.lock().unwrap();

        if !self.refresh {
            if let Some(path) = self.cache_path(id) {
                if let Ok(text) = fs::read_to_string(&path) {
                    return parse_bfile(id, &text, Source::Cache);
                }
            }
        }

        let failure = if self.offline {
            "offline mode".to_string()
        } else {
            match self.download(id) {
                Ok(rec) => {
                    self.store(&rec)?;
                    return Ok(rec);
                }
                Err(OeisError::NetworkUnavailable { detail, .. }) => detail,
                Err(e) => return Err(e),
            }
        };
        fixture(id).ok_or(OeisError::NetworkUnavailable {
            id: id.to_string(),
            detail: failure,
        })
    }

    fn download(&self, id: &str) -> Result<SequenceRecord, OeisError> {
        let url = format!("{}/{}/b{}.txt", self.base_url, id, &id[1..]);
        let agent = ureq::AgentBuilder::new().timeout(self.timeout).build();
        match agent.get(&url).call() {
            Ok(resp) => {
                let text = resp
                    .into_string()
                    .map_err(|e| OeisError::NetworkUnavailable {
                        id: id.to_string(),
                        detail: e.to_string(),
                    })?;
                parse_bfile(id, &text, Source::Network)
            }
            Err(ureq::Error::Status(404, _)) => Err(OeisError::UnknownSequence(id.to_string())),
            Err(e) => Err(OeisError::NetworkUnavailable {
                id: id.to_string(),
                detail: e.to_string(),
            }),
        }
    }

    /// Writes to a temporary file in the cache directory, then renames.
    fn store(&self, rec: &SequenceRecord) -> Result<(), OeisError> {
        let (Some(dir), Some(path)) = (self.cache_dir.as_ref(), self.cache_path(&rec.id)) else {
            return Ok(());
        };
        let io = |e: std::io::Error| OeisError::Io(e.to_string());
        fs::create_dir_all(dir).map_err(io)?;
        static NEXT: AtomicU64 = AtomicU64::new(0);
        let n = NEXT.fetch_add(1, Ordering::Relaxed);
        let tmp = dir.join(format!(".{}.{}.{n}.tmp", rec.id, std::process::id()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(rec.to_bfile().as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alignment {
    /// `coefficient(n) = a(n + shift)`.
    pub shift: i64,
    /// Number of `n` compared (all of them agreed).
    pub matched: usize,
    pub first_n: usize,
    pub last_n: usize,
}

pub const MAX_SHIFT: i64 = 5;

/// Finds a shift `s` in `[-5, 5]` with `coefficient(n) = a(n + s)` for every
/// `n` from the series' valuation up to its order where `a(n + s)` is
/// listed, and at least `min_match` such `n`. The shift with the most
/// agreements wins; ties go to the smaller `|s|`.
pub fn align_and_compare(
    series: &TruncatedSeries,
    record: &SequenceRecord,
    min_match: usize,
) -> Result<Alignment, OeisError> {
    let fail = |detail: String| OeisError::NoAlignment {
        id: record.id.clone(),
        detail,
    };
    let Some(v) = series.valuation() else {
        return Err(fail("the series is zero".into()));
    };
    let coeffs = series
        .to_integers()
        .ok_or_else(|| fail("the series has non-integer coefficients".into()))?;
    let mut best: Option<Alignment> = None;
    let mut shifts: Vec<i64> = (-MAX_SHIFT..=MAX_SHIFT).collect();
    shifts.sort_by_key(|s| (s.abs(), *s));
    for s in shifts {
        let mut matched = 0;
        let mut range = None;
        let mut ok = true;
        for (n, c) in coeffs.iter().enumerate().skip(v) {
            let Some(t) = record.term(n as i64 + s) else {
                continue;
            };
            if t != c {
                ok = false;
                break;
            }
            matched += 1;
            let r = range.get_or_insert((n, n));
            r.1 = n;
        }
        if ok && matched >= min_match && best.as_ref().is_none_or(|b| matched > b.matched) {
            let (first_n, last_n) = range.unwrap();
            best = Some(Alignment {
                shift: s,
                matched,
                first_n,
                last_n,
            });
        }
    }
    best.ok_or_else(|| {
        fail(format!(
            "no shift in [-{MAX_SHIFT}, {MAX_SHIFT}] gives {min_match} agreements without a mismatch"
        ))
    })
}

/// A catalog series paired with the sequence it is reported to match.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CitedPair {
    pub id: &'static str,
    pub name: &'static str,
    pub params: Params,
}

const fn pair(id: &'static str, name: &'static str, params: Params) -> CitedPair {
    CitedPair { id, name, params }
}

const NONE: Params = Params {
    k: None,
    t: None,
    m: None,
};

pub const CITED: &[CitedPair] = &[
    pair("A004148", "A", NONE),
    pair(
        "A004148",
        "minorized",
        Params {
            m: Some(-1),
            ..NONE
        },
    ),
    pair("A051286", "Gp1", NONE),
    pair("A051286", "Gm2", NONE),
    pair("A110320", "Gp2", NONE),
    pair("A110320", "Gm1", NONE),
    pair(
        "A110320",
        "prefix",
        Params {
            k: Some(-2),
            ..NONE
        },
    ),
    pair("A110236", "Gp", NONE),
    pair("A110236", "f0", NONE),
    pair(
        "A110236",
        "prefix",
        Params {
            k: Some(-1),
            ..NONE
        },
    ),
    pair("A203611", "Gm", NONE),
    pair("A203611", "g0", NONE),
    pair("A051291", "G", NONE),
    pair("A062200", "g0t", Params { t: Some(2), ..NONE }),
    pair("A000035", "g0t", Params { t: Some(1), ..NONE }),
    pair(
        "A093128",
        "minorized",
        Params {
            m: Some(-2),
            ..NONE
        },
    ),
    pair("A122514", "sym", Params { t: Some(1), ..NONE }),
    pair("A329699", "H", NONE),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::evaluate;

    #[test]
    fn ids() {
        assert!(validate_id("A004148").is_ok());
        for bad in ["A04148", "B004148", "A00414x", "a004148", ""] {
            assert!(
                matches!(validate_id(bad), Err(OeisError::BadId(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn parser() {
        let r = parse_bfile(
            "A000001",
            "# hi\n3 10\n4 -2 # note\n\n5 99999999999999999999999\n",
            Source::Cache,
        )
        .unwrap();
        assert_eq!(r.offset, 3);
        assert_eq!(r.term(4), Some(&BigInt::from(-2)));
        assert_eq!(r.term(2), None);
        assert_eq!(r.terms.len(), 3);
        assert!(matches!(
            parse_bfile("A000001", "1 2\nxx\n", Source::Cache),
            Err(OeisError::ParseError { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("A000001", "1 2\n3 4\n", Source::Cache),
            Err(OeisError::ParseError { .. })
        ));
        assert!(matches!(
            parse_bfile("A000001", "# only\n", Source::Cache),
            Err(OeisError::ParseError { .. })
        ));
    }

    #[test]
    fn fixtures_are_long_enough() {
        for id in fixture_ids() {
            let f = fixture(id).unwrap();
            assert!(f.terms.len() >= 15, "{id}");
            assert_eq!(parse_bfile(id, &f.to_bfile(), Source::Fixture).unwrap(), f);
        }
    }

    #[test]
    fn every_cited_pair_aligns() {
        for p in CITED {
            let s = evaluate(p.name, p.params, 30).unwrap().series;
            let a = align_and_compare(&s, &fixture(p.id).unwrap(), 9)
                .unwrap_or_else(|e| panic!("{} vs {}: {e}", p.name, p.id));
            assert!(a.matched >= 9);
        }
    }

    #[test]
    fn zero_series_never_aligns() {
        let z = TruncatedSeries::zero(20);
        assert!(matches!(
            align_and_compare(&z, &fixture("A000035").unwrap(), 9),
            Err(OeisError::NoAlignment { .. })
        ));
    }

    #[test]
    fn offline_without_fixture() {
        let c = OeisClient::new().without_cache().offline(true);
        assert_eq!(c.fetch("A051291").unwrap().source, Source::Fixture);
        assert!(matches!(
            c.fetch("A000045"),
            Err(OeisError::NetworkUnavailable { .. })
        ));
    }
}
