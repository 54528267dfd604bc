//! Immutable byte texts and 1-based inclusive intervals.
//!
//! Every position and interval in this crate is 1-based and inclusive:
//! `[i, j]` names the substring starting at the `i`th symbol and ending at
//! the `j`th. Internal structures may index however they like, but nothing
//! 0-based leaks through the public API.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TextError {
    /// Texts must contain at least one symbol.
    #[error("empty input: a text must contain at least one symbol")]
    EmptyText,
    /// Interval endpoints must fit within the text.
    #[error("interval [{begin}, {end}] out of bounds for text of length {n}")]
    OutOfBounds { begin: usize, end: usize, n: usize },
}

/// An immutable, non-empty byte string.
///
/// Cloning is cheap; the underlying bytes are shared and never mutated, so
/// values can be read from any number of threads without synchronization.
#[derive(Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Arc<[u8]>,
}

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self, TextError> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(TextError::EmptyText);
        }
        Ok(Text {
            bytes: bytes.into(),
        })
    }

    /// Builds a text from raw file contents, stripping a single trailing
    /// newline if present. All other bytes are kept verbatim.
    pub fn from_file_contents(mut bytes: Vec<u8>) -> Result<Self, TextError> {
        if bytes.last() == Some(&b'\n') {
            bytes.pop();
        }
        Text::new(bytes)
    }

    /// Length of the text, `n >= 1`.
    #[allow(clippy::len_without_is_empty)] // texts are never empty
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        assert!(i >= 1 && i <= self.len(), "position {i} out of range");
        self.bytes[i - 1]
    }

    /// The interval `[1, n]` spanning the whole text.
    pub fn full_interval(&self) -> Interval {
        Interval::new(1, self.len())
    }

    pub fn check_interval(&self, iv: Interval) -> Result<(), TextError> {
        if iv.end() > self.len() {
            return Err(TextError::OutOfBounds {
                begin: iv.begin(),
                end: iv.end(),
                n: self.len(),
            });
        }
        Ok(())
    }

    /// Bytes at positions `begin..=end` of the interval.
    pub fn substring(&self, iv: Interval) -> Result<&[u8], TextError> {
        self.check_interval(iv)?;
        Ok(&self.bytes[iv.begin() - 1..iv.end()])
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.bytes))
    }
}

impl std::str::FromStr for Text {
    type Err = TextError;

    fn from_str(s: &str) -> Result<Self, TextError> {
        Text::new(s.as_bytes().to_vec())
    }
}

/// A 1-based inclusive interval `[begin, end]` with `1 <= begin <= end`.
///
/// Whether an interval fits a particular text is checked at the operations
/// that pair the two; the interval itself only guarantees its endpoints are
/// ordered.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    begin: usize,
    end: usize,
}

impl Interval {
    pub fn new(begin: usize, end: usize) -> Self {
        assert!(
            begin >= 1 && begin <= end,
            "invalid interval [{begin}, {end}]"
        );
        Interval { begin, end }
    }

    /// The unit interval `[p, p]`.
    pub fn point(p: usize) -> Self {
        Interval::new(p, p)
    }

    pub fn begin(self) -> usize {
        self.begin
    }

    pub fn end(self) -> usize {
        self.end
    }

    #[allow(clippy::len_without_is_empty)] // length is always >= 1
    pub fn len(self) -> usize {
        self.end - self.begin + 1
    }

    pub fn is_point(self) -> bool {
        self.begin == self.end
    }

    /// Containment, not necessarily proper: `self` contains `inner` iff
    /// `self.begin <= inner.begin` and `inner.end <= self.end`.
    pub fn contains(self, inner: Interval) -> bool {
        self.begin <= inner.begin && inner.end <= self.end
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.begin, self.end)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.begin, self.end)
    }
}
