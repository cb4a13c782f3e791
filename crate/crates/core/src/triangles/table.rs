use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleKind {
    StirlingFirstSigned,
    StirlingFirstUnsigned,
    StirlingSecond,
    Lah,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 4] = [
        TriangleKind::StirlingFirstSigned,
        TriangleKind::StirlingFirstUnsigned,
        TriangleKind::StirlingSecond,
        TriangleKind::Lah,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::StirlingFirstSigned => "stirling_first_signed",
            TriangleKind::StirlingFirstUnsigned => "stirling_first_unsigned",
            TriangleKind::StirlingSecond => "stirling_second",
            TriangleKind::Lah => "lah",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Row `n + 1` from row `n`.
    pub fn next_row(self, prev: &[Rational]) -> Vec<Rational> {
        let n = prev.len() - 1;
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(Rational::zero);
        let nq = rational::from_usize(n);
        (0..=n + 1)
            .map(|k| {
                let left = if k == 0 { Rational::zero() } else { at(k - 1) };
                let stay = at(k);
                match self {
                    // s(n+1,k) = s(n,k-1) - n s(n,k)
                    TriangleKind::StirlingFirstSigned => left - &nq * stay,
                    TriangleKind::StirlingFirstUnsigned => left + &nq * stay,
                    // S(n+1,k) = S(n,k-1) + k S(n,k)
                    TriangleKind::StirlingSecond => left + rational::from_usize(k) * stay,
                    // L(n+1,k) = L(n,k-1) + (n+k) L(n,k)
                    TriangleKind::Lah => left + rational::from_usize(n + k) * stay,
                }
            })
            .collect()
    }
}

/// Rows `0..=n_max` of one triangle; row `n` holds entries `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable {
    kind: TriangleKind,
    rows: Vec<Vec<Rational>>,
}

impl TriangleTable {
    pub fn new(kind: TriangleKind) -> Self {
        Self { kind, rows: vec![vec![Rational::one()]] }
    }

    /// Wraps rows without checking them. Callers validate first.
    pub(crate) fn from_rows_unchecked(kind: TriangleKind, rows: Vec<Vec<Rational>>) -> Self {
        Self { kind, rows }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn extend_to(&mut self, n: usize) {
        while self.n_max() < n {
            let next = self.kind.next_row(self.rows.last().expect("row 0 always present"));
            self.rows.push(next);
        }
    }

    /// Entry `(n, k)`; zero for `k > n` or rows not yet computed.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, n: usize) -> Option<&[Rational]> {
        self.rows.get(n).map(Vec::as_slice)
    }
}

/// Grow-only, internally synchronized triangle.
#[derive(Debug)]
pub struct TriangleCache {
    table: RwLock<TriangleTable>,
}

impl TriangleCache {
    pub fn new(kind: TriangleKind) -> Self {
        Self { table: RwLock::new(TriangleTable::new(kind)) }
    }

    /// Process-wide cache for `kind`.
    pub fn global(kind: TriangleKind) -> &'static TriangleCache {
        static CACHES: OnceLock<[TriangleCache; 4]> = OnceLock::new();
        let caches = CACHES.get_or_init(|| TriangleKind::ALL.map(TriangleCache::new));
        &caches[kind as usize]
    }

    fn ensure(&self, n: usize) {
        if self.table.read().expect("triangle lock poisoned").n_max() >= n {
            return;
        }
        self.table.write().expect("triangle lock poisoned").extend_to(n);
    }

    pub fn get(&self, n: usize, k: usize) -> Rational {
        if k > n {
            return Rational::zero();
        }
        self.ensure(n);
        self.table.read().expect("triangle lock poisoned").get(n, k)
    }

    pub fn row(&self, n: usize) -> Vec<Rational> {
        self.ensure(n);
        self.table.read().expect("triangle lock poisoned").rows[n].clone()
    }

    /// Rows `0..=n`.
    pub fn rows_through(&self, n: usize) -> Vec<Vec<Rational>> {
        self.ensure(n);
        self.table.read().expect("triangle lock poisoned").rows[..=n].to_vec()
    }

    pub fn snapshot(&self) -> TriangleTable {
        self.table.read().expect("triangle lock poisoned").clone()
    }

    /// Adopts a (validated) table if it reaches further than what is cached.
    /// Returns whether the table was adopted.
    pub fn seed(&self, table: TriangleTable) -> bool {
        let mut guard = self.table.write().expect("triangle lock poisoned");
        if table.kind != guard.kind || table.n_max() <= guard.n_max() {
            return false;
        }
        *guard = table;
        true
    }
}

/// Signed Stirling numbers of the first kind: coefficients of `(x)_n`.
pub fn stirling_first(n: usize, k: usize) -> Rational {
    TriangleCache::global(TriangleKind::StirlingFirstSigned).get(n, k)
}

/// Unsigned ("singles") Stirling numbers: coefficients of the rising factorial.
pub fn stirling_first_unsigned(n: usize, k: usize) -> Rational {
    TriangleCache::global(TriangleKind::StirlingFirstUnsigned).get(n, k)
}

pub fn stirling_second(n: usize, k: usize) -> Rational {
    TriangleCache::global(TriangleKind::StirlingSecond).get(n, k)
}

/// Unsigned Lah numbers: `<y>_n = sum_k L(n,k) (y)_k`.
pub fn lah(n: usize, k: usize) -> Rational {
    TriangleCache::global(TriangleKind::Lah).get(n, k)
}

pub fn stirling_first_row(n: usize) -> Vec<Rational> {
    TriangleCache::global(TriangleKind::StirlingFirstSigned).row(n)
}

pub fn stirling_second_row(n: usize) -> Vec<Rational> {
    TriangleCache::global(TriangleKind::StirlingSecond).row(n)
}

pub fn lah_row(n: usize) -> Vec<Rational> {
    TriangleCache::global(TriangleKind::Lah).row(n)
}
