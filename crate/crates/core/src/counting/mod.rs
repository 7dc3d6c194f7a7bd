//! Exact counts of labeled DAGs, BN(n), and of Markov blanket structures
//! around one fixed target, MB(n).
//!
//! BN(n) uses the alternating recurrence
//!
//! ```text
//! BN(n) = sum_{k=1..n} (-1)^(k+1) C(n,k) 2^(k(n-k)) BN(n-k),   BN(0) = 1
//! ```
//!
//! and MB(n) sums, over every split of the n-1 non-target nodes into
//! `n_p` parents, `n_c` children and `n_so` spouse-or-other nodes,
//!
//! ```text
//! (n-1)! / (n_p! n_c! n_so!) * 2^(n_c n_p) * 2^(n_c n_so) * BN(n_c)
//! ```
//!
//! Everything is exact big-integer arithmetic. [`MemoTable`] caches BN values
//! bottom-up together with a shared factorial table.

mod exact;
mod render;

pub use exact::{ExactCount, ExactRatio};
pub use render::{group_thousands, render_decimal, render_ratio_scientific, render_scientific};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("cannot choose {k} items from {n}")]
    ChooseOutOfRange { n: usize, k: usize },
    #[error("partition n_p={n_p}, n_so={n_so} exceeds the {available} non-target nodes of n={n}")]
    PartitionOutOfRange {
        n: usize,
        n_p: usize,
        n_so: usize,
        available: usize,
    },
    #[error("MB(n) is defined only for n >= 1")]
    EmptyDomain,
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("significant digits must be at least 1")]
    ZeroPrecision,
    #[error("zero has no scientific rendering")]
    ZeroValue,
    #[error("not a nonnegative decimal integer: {0:?}")]
    Parse(String),
}

/// Instrumentation for one top-level computation.
///
/// `terms_evaluated` counts summands of the requested recurrence only (n for
/// BN(n), n(n+1)/2 for MB(n)). Summands spent filling lower memo entries are
/// tallied separately in `memo_fill_terms`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub big_multiplications: u64,
    pub big_additions: u64,
    pub terms_evaluated: u64,
    pub memo_fill_terms: u64,
}

/// A split of the `n - 1` non-target nodes into parents, children and
/// spouse-or-other nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTriple {
    pub n_p: usize,
    pub n_c: usize,
    pub n_so: usize,
}

impl PartitionTriple {
    /// Derives `n_c = n - 1 - n_p - n_so` for a domain of `n` nodes.
    pub fn for_domain(n: usize, n_p: usize, n_so: usize) -> Result<Self, CountError> {
        let available = n.checked_sub(1).ok_or(CountError::EmptyDomain)?;
        let n_c = available
            .checked_sub(n_p)
            .and_then(|rest| rest.checked_sub(n_so))
            .ok_or(CountError::PartitionOutOfRange {
                n,
                n_p,
                n_so,
                available,
            })?;
        Ok(PartitionTriple { n_p, n_c, n_so })
    }

    /// Nodes in the domain, target included.
    pub fn domain_size(&self) -> usize {
        self.n_p + self.n_c + self.n_so + 1
    }
}

/// Factorials `0!..=k!`, grown on demand.
#[derive(Clone, Debug)]
pub struct Factorials {
    table: Vec<BigUint>,
}

impl Default for Factorials {
    fn default() -> Self {
        Factorials {
            table: vec![BigUint::one()],
        }
    }
}

impl Factorials {
    pub fn up_to(n: usize) -> Self {
        let mut f = Factorials::default();
        f.ensure(n);
        f
    }

    pub fn ensure(&mut self, n: usize) {
        while self.table.len() <= n {
            let next = self.table.len();
            let v = &self.table[next - 1] * BigUint::from(next);
            self.table.push(v);
        }
    }

    /// `n!`; panics if `n` has not been precomputed.
    pub fn get(&self, n: usize) -> &BigUint {
        &self.table[n]
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// Bottom-up BN cache plus the shared factorial table.
///
/// Entries are write-once: `entries[0] = 1` from construction, and later
/// entries are appended in order and never modified. The table is not
/// `Sync`-shared; give each thread its own.
#[derive(Clone, Debug)]
pub struct MemoTable {
    bn: Vec<BigUint>,
    factorials: Factorials,
    ops: OpCounter,
}

impl Default for MemoTable {
    fn default() -> Self {
        Self::new()
    }
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable {
            bn: vec![BigUint::one()],
            factorials: Factorials::default(),
            ops: OpCounter::default(),
        }
    }

    /// Number of cached BN entries.
    pub fn len(&self) -> usize {
        self.bn.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bn.is_empty()
    }

    /// Cached BN(n), if computed.
    pub fn cached(&self, n: usize) -> Option<ExactCount> {
        self.bn.get(n).cloned().map(ExactCount::from)
    }

    /// Counters of the most recent `bn_count`/`mb_count` call.
    pub fn ops(&self) -> OpCounter {
        self.ops
    }

    pub fn binomial(&mut self, n: usize, k: usize) -> Result<ExactCount, CountError> {
        self.factorials.ensure(n);
        binomial_from(&self.factorials, n, k).map(ExactCount::from)
    }

    pub fn multinomial3(
        &mut self,
        n_p: usize,
        n_c: usize,
        n_so: usize,
    ) -> Result<ExactCount, CountError> {
        let total = n_p + n_c + n_so;
        self.factorials.ensure(total);
        Ok(multinomial_from(&self.factorials, n_p, n_c, n_so).into())
    }

    /// Number of labeled DAGs on `n` nodes.
    pub fn bn_count(&mut self, n: usize) -> ExactCount {
        self.ops = OpCounter::default();
        self.factorials.ensure(n);
        while self.bn.len() <= n {
            let m = self.bn.len();
            let (value, terms) = self.robinson_step(m);
            if m == n {
                self.ops.terms_evaluated += terms;
            } else {
                self.ops.memo_fill_terms += terms;
            }
            self.bn.push(value);
        }
        ExactCount::from(self.bn[n].clone())
    }

    /// One summation of the DAG recurrence for `m >= 1`, reading BN(0..m) from the cache.
    fn robinson_step(&mut self, m: usize) -> (BigUint, u64) {
        let mut sum = BigInt::zero();
        let mut terms = 0u64;
        for k in 1..=m {
            let choose = self.counted_binomial(m, k);
            // C(m,k) * 2^(k(m-k)) * BN(m-k)
            let magnitude = (choose << (k * (m - k))) * &self.bn[m - k];
            self.ops.big_multiplications += 2;
            let term = BigInt::from_biguint(Sign::Plus, magnitude);
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
            self.ops.big_additions += 1;
            terms += 1;
        }
        let value = sum
            .to_biguint()
            .expect("DAG recurrence produced a negative count");
        (value, terms)
    }

    fn counted_binomial(&mut self, n: usize, k: usize) -> BigUint {
        // k!(n-k)! then one exact division
        self.ops.big_multiplications += 2;
        binomial_from(&self.factorials, n, k).expect("k <= n inside the recurrence")
    }

    /// One summand of the MB sum for the split (`n_p`, `n_so`) of a domain of `n` nodes.
    pub fn mb_partition_term(
        &mut self,
        n: usize,
        n_p: usize,
        n_so: usize,
    ) -> Result<ExactCount, CountError> {
        let triple = PartitionTriple::for_domain(n, n_p, n_so)?;
        self.ensure_bn(triple.n_c);
        self.factorials.ensure(n - 1);
        Ok(self.partition_term(triple).into())
    }

    fn ensure_bn(&mut self, n: usize) {
        if self.bn.len() <= n {
            let saved = self.ops;
            self.bn_count(n);
            let fill = self.ops;
            self.ops = saved;
            self.ops.memo_fill_terms += fill.memo_fill_terms + fill.terms_evaluated;
            self.ops.big_multiplications += fill.big_multiplications;
            self.ops.big_additions += fill.big_additions;
        }
    }

    fn partition_term(&mut self, t: PartitionTriple) -> BigUint {
        let multiplicity = multinomial_from(&self.factorials, t.n_p, t.n_c, t.n_so);
        // 2^(n_c n_p) * 2^(n_c n_so) as a single shift
        let arcs = t.n_c * (t.n_p + t.n_so);
        self.ops.big_multiplications += 4;
        (multiplicity << arcs) * &self.bn[t.n_c]
    }

    /// Number of canonical Markov blanket structures for one target among `n` nodes.
    pub fn mb_count(&mut self, n: usize) -> Result<ExactCount, CountError> {
        if n == 0 {
            return Err(CountError::EmptyDomain);
        }
        self.ops = OpCounter::default();
        self.ensure_bn(n - 1);
        self.factorials.ensure(n - 1);
        let mut sum = BigUint::zero();
        for n_p in 0..n {
            for n_so in 0..(n - n_p) {
                let triple = PartitionTriple {
                    n_p,
                    n_c: n - 1 - n_p - n_so,
                    n_so,
                };
                sum += self.partition_term(triple);
                self.ops.big_additions += 1;
                self.ops.terms_evaluated += 1;
            }
        }
        Ok(sum.into())
    }

    /// BN(n) / MB(n), unreduced.
    pub fn ratio(&mut self, n: usize) -> Result<ExactRatio, CountError> {
        let mb = self.mb_count(n)?;
        let bn = self.bn_count(n);
        ExactRatio::new(bn, mb)
    }
}

fn binomial_from(f: &Factorials, n: usize, k: usize) -> Result<BigUint, CountError> {
    if k > n {
        return Err(CountError::ChooseOutOfRange { n, k });
    }
    Ok(f.get(n) / (f.get(k) * f.get(n - k)))
}

fn multinomial_from(f: &Factorials, a: usize, b: usize, c: usize) -> BigUint {
    f.get(a + b + c) / (f.get(a) * f.get(b) * f.get(c))
}

/// `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> Result<ExactCount, CountError> {
    binomial_from(&Factorials::up_to(n), n, k).map(ExactCount::from)
}

/// `(a+b+c)! / (a! b! c!)`.
pub fn multinomial3(n_p: usize, n_c: usize, n_so: usize) -> ExactCount {
    multinomial_from(&Factorials::up_to(n_p + n_c + n_so), n_p, n_c, n_so).into()
}

/// BN(n) on a fresh table.
pub fn bn_count(n: usize) -> ExactCount {
    MemoTable::new().bn_count(n)
}

/// MB(n) on a fresh table.
pub fn mb_count(n: usize) -> Result<ExactCount, CountError> {
    MemoTable::new().mb_count(n)
}

/// BN(n)/MB(n) on a fresh table.
pub fn ratio(n: usize) -> Result<ExactRatio, CountError> {
    MemoTable::new().ratio(n)
}
