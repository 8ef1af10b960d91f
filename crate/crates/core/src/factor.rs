//! Prime factorization of 64-bit integers and the ordered / unordered
//! factorization counts built on it.
//!
//! An ordered factorization of `m` into `k` factors is the same thing as
//! distributing the exponent multiset of `m` into `k` labeled cells, so the
//! counts below reuse [`crate::mixed::product_formula_labeled_cells`] and
//! [`crate::mixed::surjective_formula_labeled_cells`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::mixed::{product_formula_labeled_cells, surjective_formula_labeled_cells};
use crate::problem::BallSpec;
use crate::Count;

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime to exponent map; empty for `m = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactorizationMap {
    factors: BTreeMap<u64, u32>,
}

impl FactorizationMap {
    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    /// Exponents in increasing prime order.
    pub fn exponents(&self) -> Vec<usize> {
        self.factors.values().map(|&a| a as usize).collect()
    }

    /// Number of prime factors counted with multiplicity.
    pub fn big_omega(&self) -> usize {
        self.factors.values().map(|&a| a as usize).sum()
    }

    /// The product of `p^a`, or `None` on overflow.
    pub fn value(&self) -> Option<u64> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, (&p, &a)| acc.checked_mul(p.checked_pow(a)?))
    }

    /// Exponent vector as a ball multiset.
    pub fn as_balls(&self) -> BallSpec {
        BallSpec::new(self.exponents()).expect("exponents are positive")
    }

    fn add(&mut self, p: u64) {
        *self.factors.entry(p).or_insert(0) += 1;
    }
}

impl fmt::Display for FactorizationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, a)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *a == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{a}")?;
            }
        }
        Ok(())
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
        primes
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// splitmix64 step; seeds the rho constants reproducibly from `n`.
fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A nontrivial divisor of the odd composite `n` (Brent's cycle variant).
fn pollard_rho(n: u64) -> u64 {
    let mut seed = n;
    loop {
        let c = splitmix(&mut seed) % (n - 1) + 1;
        let mut y = splitmix(&mut seed) % n;
        let step = |x: u64| ((u128::from(mul_mod(x, x, n)) + u128::from(c)) % u128::from(n)) as u64;
        let batch = 128u64;
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..batch.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = step(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn split_into(n: u64, out: &mut FactorizationMap) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.add(n);
        return;
    }
    let d = pollard_rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Complete prime factorization of `m >= 1`.
pub fn factorize(m: u64) -> Result<FactorizationMap> {
    if m == 0 {
        return invalid("cannot factorize 0");
    }
    let mut out = FactorizationMap::default();
    let mut rest = m;
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        while rest.is_multiple_of(p) {
            out.add(p);
            rest /= p;
        }
    }
    if rest > 1 {
        // every prime factor <= TRIAL_LIMIT is gone, so a cofactor below
        // TRIAL_LIMIT^2 is prime
        split_into(rest, &mut out);
    }
    Ok(out)
}

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        return invalid("number of factors k must be positive");
    }
    Ok(())
}

/// Ordered `k`-tuples of positive integers with product `m`.
pub fn ordered_factorizations_with_units(m: u64, k: usize) -> Result<Count> {
    require_k(k)?;
    let f = factorize(m)?;
    Ok(product_formula_labeled_cells(&f.as_balls(), k))
}

/// Ordered `k`-tuples of integers `>= 2` with product `m`.
pub fn ordered_factorizations_no_units(m: u64, k: usize) -> Result<Count> {
    require_k(k)?;
    if m < 2 {
        return invalid(format!("factorizations without units need m >= 2, got {m}"));
    }
    let f = factorize(m)?;
    if k > f.big_omega() {
        return Ok(Count::zero());
    }
    Ok(surjective_formula_labeled_cells(&f.as_balls(), k))
}

/// Ordered factorizations of `m` into any number of factors `>= 2`.
pub fn total_ordered_factorizations(m: u64) -> Result<Count> {
    if m < 2 {
        return invalid(format!("total ordered factorizations need m >= 2, got {m}"));
    }
    let omega = factorize(m)?.big_omega();
    (1..=omega).map(|k| ordered_factorizations_no_units(m, k)).sum()
}

/// Multisets of integers `>= 2` with product `m`.
pub fn unordered_multiplicative_partitions(m: u64) -> Result<Count> {
    if m < 2 {
        return invalid(format!("multiplicative partitions need m >= 2, got {m}"));
    }
    let divisors = divisors(&factorize(m)?);
    let mut memo = HashMap::new();
    Ok(unordered_rec(m, m, &divisors, &mut memo))
}

// factors taken in nonincreasing order, each at most `cap`
fn unordered_rec(m: u64, cap: u64, divisors: &[u64], memo: &mut HashMap<(u64, u64), Count>) -> Count {
    if m == 1 {
        return Count::one();
    }
    if let Some(v) = memo.get(&(m, cap)) {
        return v.clone();
    }
    let mut total = Count::zero();
    for &d in divisors.iter().filter(|&&d| d >= 2 && d <= cap.min(m)) {
        if m.is_multiple_of(d) {
            total += unordered_rec(m / d, d, divisors, memo);
        }
    }
    memo.insert((m, cap), total.clone());
    total
}

/// All divisors of the factorized number, ascending.
pub fn divisors(f: &FactorizationMap) -> Vec<u64> {
    let mut out = vec![1u64];
    for (&p, &a) in f.factors() {
        let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
        for &d in &out {
            let mut pk = d;
            next.push(pk);
            for _ in 0..a {
                pk *= p;
                next.push(pk);
            }
        }
        out = next;
    }
    out.sort_unstable();
    out
}

/// Counts ordered `k`-tuples with product `m` by walking divisor chains;
/// with `units = false` every entry must be at least 2.
///
/// Independent of the binomial formulas above; used as their oracle.
pub fn count_divisor_tuples(m: u64, k: usize, units: bool) -> u64 {
    if k == 0 {
        return u64::from(m == 1);
    }
    if k == 1 {
        return u64::from(units || m >= 2);
    }
    let lo = if units { 1 } else { 2 };
    (lo..=m)
        .filter(|d| m.is_multiple_of(*d))
        .map(|d| count_divisor_tuples(m / d, k - 1, units))
        .sum()
}
