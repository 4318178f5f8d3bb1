//! Extended-integer distance labels and the certificate that carries them.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Largest magnitude a finite certificate label may take.
///
/// With arc weights bounded by 2^31, `label + weight` always fits in an `i64`.
pub const MAX_LABEL: i64 = 1 << 62;

/// A distance: a finite 64-bit value or +infinity.
///
/// The derived ordering puts every `Finite` below `Infinity` and compares
/// finite values numerically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(i64),
    Infinity,
}

impl Dist {
    pub const ZERO: Dist = Dist::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Dist::Finite(v) => Some(v),
            Dist::Infinity => None,
        }
    }

    /// Adds an arc weight; infinity absorbs.
    #[inline]
    pub fn add_weight(self, w: i64) -> Dist {
        match self {
            Dist::Finite(a) => Dist::Finite(a + w),
            Dist::Infinity => Dist::Infinity,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(v) => write!(f, "{v}"),
            Dist::Infinity => f.write_str("inf"),
        }
    }
}

impl From<i64> for Dist {
    fn from(v: i64) -> Self {
        Dist::Finite(v)
    }
}

/// Claimed distance labels, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate(Vec<Dist>);

impl Certificate {
    /// Wraps labels after checking every finite value against [`MAX_LABEL`].
    pub fn new(labels: Vec<Dist>) -> Result<Self> {
        for (vertex, d) in labels.iter().enumerate() {
            if let Dist::Finite(value) = *d {
                if value.unsigned_abs() > MAX_LABEL as u64 {
                    return Err(Error::CertOutOfRange { vertex, value });
                }
            }
        }
        Ok(Certificate(labels))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Dist] {
        &self.0
    }

    pub fn get(&self, v: VertexId) -> Option<Dist> {
        self.0.get(v).copied()
    }

    pub fn into_labels(self) -> Vec<Dist> {
        self.0
    }

    /// Returns a copy with one label replaced, re-checking the bound.
    pub fn with_label(&self, v: VertexId, d: Dist) -> Result<Self> {
        let mut labels = self.0.clone();
        labels[v] = d;
        Certificate::new(labels)
    }
}

impl Index<VertexId> for Certificate {
    type Output = Dist;

    fn index(&self, v: VertexId) -> &Dist {
        &self.0[v]
    }
}

impl TryFrom<Vec<Dist>> for Certificate {
    type Error = Error;

    fn try_from(labels: Vec<Dist>) -> Result<Self> {
        Certificate::new(labels)
    }
}
