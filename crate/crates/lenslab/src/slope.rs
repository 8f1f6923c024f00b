//! Slope triples on the one-vertex torus and the graph of boundary
//! triangulations of the solid torus.
//!
//! A slope on a one-vertex torus triangulation is recorded by its three
//! intersection numbers with the edges, one entry being the sum of the
//! other two. Layering a tetrahedron over an edge rewrites exactly that
//! entry (sum and difference trade places), which is the `push_through`
//! operation everything else is built on.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Ordered intersection triple of a slope with the three boundary edges.
///
/// Entries are aligned to edge slots 0, 1, 2 of the current boundary level.
/// The slot whose entry equals the sum of the other two is stored
/// explicitly; for triples like `{0,1,1}` or `{1,1,0}` two slots qualify
/// and the stored choice is whichever the constructor picked.
#[derive(Debug, Clone)]
pub struct SlopeTriple {
    entries: [BigUint; 3],
    sum_index: usize,
}

impl PartialEq for SlopeTriple {
    fn eq(&self, other: &Self) -> bool {
        // sum_index is bookkeeping; when it is ambiguous both choices name
        // the same slope, so identity lives in the entries alone.
        self.entries == other.entries
    }
}
impl Eq for SlopeTriple {}

impl std::hash::Hash for SlopeTriple {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl SlopeTriple {
    /// Build from entries, inferring the sum slot (lowest valid slot when
    /// more than one qualifies).
    pub fn new(entries: [BigUint; 3]) -> Result<Self> {
        for k in 0..3 {
            let (i, j) = others(k);
            if entries[k] == &entries[i] + &entries[j] {
                return Ok(SlopeTriple { entries, sum_index: k });
            }
        }
        let [a, b, c] = entries;
        Err(Error::InvalidTriple(a.to_string(), b.to_string(), c.to_string()))
    }

    /// Build with an explicit sum slot.
    pub fn with_sum_index(entries: [BigUint; 3], sum_index: usize) -> Result<Self> {
        let (i, j) = others(sum_index);
        if entries[sum_index] != &entries[i] + &entries[j] {
            let [a, b, c] = entries;
            return Err(Error::InvalidTriple(a.to_string(), b.to_string(), c.to_string()));
        }
        Ok(SlopeTriple { entries, sum_index })
    }

    /// Build a triple that represents a slope: the two non-sum entries must
    /// be coprime.
    pub fn slope(entries: [BigUint; 3]) -> Result<Self> {
        let t = Self::new(entries)?;
        let (i, j) = others(t.sum_index);
        let g = t.entries[i].gcd(&t.entries[j]);
        if !g.is_one() && !(t.entries[i].is_zero() && t.entries[j].is_one())
            && !(t.entries[i].is_one() && t.entries[j].is_zero())
        {
            return Err(Error::NotCoprime(t.entries[i].to_string(), t.entries[j].to_string()));
        }
        Ok(t)
    }

    pub fn from_u64(entries: [u64; 3]) -> Result<Self> {
        Self::new([big(entries[0]), big(entries[1]), big(entries[2])])
    }

    pub fn entries(&self) -> &[BigUint; 3] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &BigUint {
        &self.entries[i]
    }

    pub fn sum_index(&self) -> usize {
        self.sum_index
    }

    /// Position of an entry equal to `v`, preferring `prefer` when given.
    pub fn position_of(&self, v: &BigUint, prefer_not: Option<usize>) -> Option<usize> {
        let mut hit = None;
        for k in 0..3 {
            if &self.entries[k] == v {
                if Some(k) != prefer_not {
                    return Some(k);
                }
                hit = Some(k);
            }
        }
        hit
    }

    /// Entry-set comparison ignoring slot alignment.
    pub fn same_unordered(&self, other: &SlopeTriple) -> bool {
        let mut a = self.entries.clone();
        let mut b = other.entries.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// The layering rewrite at slot `i`: the sum entry becomes the absolute
    /// difference of the other two, any other entry becomes their sum. This
    /// is an involution on the entries.
    pub fn push_through(&self, i: usize) -> SlopeTriple {
        assert!(i < 3);
        let (a, b) = others(i);
        let mut entries = self.entries.clone();
        let sum_index;
        if i == self.sum_index {
            let (hi, lo) = if self.entries[a] >= self.entries[b] { (a, b) } else { (b, a) };
            entries[i] = &self.entries[hi] - &self.entries[lo];
            sum_index = hi;
        } else {
            entries[i] = &self.entries[a] + &self.entries[b];
            sum_index = i;
        }
        SlopeTriple { entries, sum_index }
    }

    /// The reduced fraction `p/q` formed by the two non-sum entries.
    pub fn fraction(&self) -> LVertex {
        canonical_fraction(self)
    }
}

impl fmt::Display for SlopeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.entries[0], self.entries[1], self.entries[2])
    }
}

impl FromStr for SlopeTriple {
    type Err = Error;

    /// Parses the positional text form `{a,b,c}`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Invalid(format!("expected {{a,b,c}}, got {s:?}")))?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Invalid(format!("expected three entries in {s:?}")));
        }
        let mut entries = [BigUint::zero(), BigUint::zero(), BigUint::zero()];
        for (k, p) in parts.iter().enumerate() {
            entries[k] = p
                .parse::<BigUint>()
                .map_err(|_| Error::Invalid(format!("bad integer {p:?} in triple")))?;
        }
        SlopeTriple::new(entries)
    }
}

fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        2 => (0, 1),
        _ => unreachable!(),
    }
}

/// A vertex of the layering graph: a reduced fraction p/q with
/// 0 <= p <= q, including 0/1 and 1/1. Each names an equivalence class of
/// one-vertex triangulations on the boundary of the solid torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LVertex {
    p: BigUint,
    q: BigUint,
}

impl LVertex {
    pub fn new(p: BigUint, q: BigUint) -> Result<Self> {
        if q.is_zero() || p > q || (!p.gcd(&q).is_one() && !p.is_zero()) || (p.is_zero() && !q.is_one()) {
            return Err(Error::InvalidFraction(p.to_string(), q.to_string()));
        }
        if p == q && !p.is_one() {
            return Err(Error::InvalidFraction(p.to_string(), q.to_string()));
        }
        Ok(LVertex { p, q })
    }

    pub fn from_u64(p: u64, q: u64) -> Result<Self> {
        Self::new(big(p), big(q))
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn is_base(&self) -> bool {
        self.p.is_one() && self.q.is_one()
    }

    pub fn is_zero_over_one(&self) -> bool {
        self.p.is_zero()
    }

    /// The canonical meridian triple (p, q, p+q) of this boundary class.
    pub fn triple(&self) -> SlopeTriple {
        SlopeTriple {
            entries: [self.p.clone(), self.q.clone(), &self.p + &self.q],
            sum_index: 2,
        }
    }
}

impl fmt::Display for LVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for LVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| Error::Invalid(format!("expected p/q, got {s:?}")))?;
        let p = p
            .trim()
            .parse::<BigUint>()
            .map_err(|_| Error::Invalid(format!("bad numerator in {s:?}")))?;
        let q = q
            .trim()
            .parse::<BigUint>()
            .map_err(|_| Error::Invalid(format!("bad denominator in {s:?}")))?;
        LVertex::new(p, q)
    }
}

/// Reduced fraction of the two non-sum entries, smaller over larger.
pub fn canonical_fraction(t: &SlopeTriple) -> LVertex {
    let (i, j) = others(t.sum_index());
    let (mut p, mut q) = (t.entries[i].clone(), t.entries[j].clone());
    if p > q {
        std::mem::swap(&mut p, &mut q);
    }
    let g = p.gcd(&q);
    if !g.is_zero() && !g.is_one() {
        p /= &g;
        q /= &g;
    }
    if p.is_zero() {
        q = BigUint::one();
    }
    LVertex { p, q }
}

/// Neighbor multiset of a vertex: push the canonical triple (p, q, p+q)
/// through each of the three slots and read fractions back off.
pub fn lgraph_neighbors(v: &LVertex) -> Vec<LVertex> {
    let t = v.triple();
    (0..3).map(|i| canonical_fraction(&t.push_through(i))).collect()
}

/// The unique shortest path from `v` to 1/1, by repeated subtraction.
pub fn lgraph_minimal_path(v: &LVertex) -> Vec<LVertex> {
    let mut path = vec![v.clone()];
    let mut cur = v.clone();
    if cur.is_zero_over_one() {
        path.push(LVertex { p: BigUint::one(), q: BigUint::one() });
        return path;
    }
    while !cur.is_base() {
        let (p, q) = (cur.p.clone(), cur.q.clone());
        let d = &q - &p;
        let (np, nq) = if p <= d { (p, d) } else { (d, p) };
        cur = LVertex { p: np, q: nq };
        path.push(cur.clone());
    }
    path
}
