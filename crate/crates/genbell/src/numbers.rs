//! Exact big-integer computation of the number families: clique-colouring
//! counts S_{m,m}(n,k) by two recurrences, generalized Stirling rows by
//! falling-factorial extraction, Lah numbers in closed form, and the
//! associated row-sum Bell numbers.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Arbitrary-precision non-negative integer; the value type for all counts.
pub type Natural = BigUint;
/// Arbitrary-precision signed integer; used for intermediate polynomial
/// coefficients during basis conversion.
pub type SignedInteger = BigInt;

/// Falling factorial x(x-1)...(x-n+1); the empty product (n = 0) is 1.
pub fn falling_factorial(x: &SignedInteger, n: u32) -> SignedInteger {
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= x - BigInt::from(i);
    }
    acc
}

/// Falling factorial on non-negative ground; zero whenever n > x.
fn ff_nat(x: u32, n: u32) -> Natural {
    if n > x {
        return Natural::zero();
    }
    let mut acc = Natural::one();
    for i in 0..n {
        acc *= BigUint::from(x - i);
    }
    acc
}

/// Binomial coefficient C(n,k); zero when k > n.
pub fn binomial(n: u32, k: u32) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    acc
}

pub fn factorial(n: u32) -> Natural {
    let mut acc = Natural::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

// Row caches for the two recurrence routes, keyed by the clique size m
// (resp. the rank r). rows[i] holds the values for n = i+1, indexed by k - m.
// Locked access keeps concurrent callers consistent; values are cloned out.
type RowCache = OnceLock<Mutex<HashMap<u32, Vec<Vec<Natural>>>>>;

static CLIQUE_ROWS: RowCache = OnceLock::new();
static BLASIAK_ROWS: RowCache = OnceLock::new();

fn with_rows<T>(
    cache: &'static RowCache,
    m: u32,
    n: u32,
    extend: impl Fn(u32, &mut Vec<Vec<Natural>>),
    read: impl FnOnce(&[Vec<Natural>]) -> T,
) -> T {
    let mut tables = cache.get_or_init(Default::default).lock().unwrap();
    let rows = tables.entry(m).or_default();
    while (rows.len() as u32) < n {
        extend(m, rows);
    }
    read(rows)
}

fn extend_clique_row(m: u32, rows: &mut Vec<Vec<Natural>>) {
    let n = rows.len() as u32 + 1;
    if n == 1 {
        rows.push(vec![Natural::one()]); // the unique m-colouring of one K_m
        return;
    }
    let prev = &rows[(n - 2) as usize];
    let mut row = Vec::with_capacity(((n - 1) * m + 1) as usize);
    for k in m..=n * m {
        let mut acc = Natural::zero();
        for i in 0..=m.min(k) {
            let rest = k - i;
            if rest < m || rest > (n - 1) * m {
                continue;
            }
            acc += binomial(m, i) * ff_nat(k - i, m - i) * &prev[(rest - m) as usize];
        }
        row.push(acc);
    }
    rows.push(row);
}

fn extend_blasiak_row(r: u32, rows: &mut Vec<Vec<Natural>>) {
    let n = rows.len() as u32 + 1;
    if n == 1 {
        rows.push(vec![Natural::one()]);
        return;
    }
    let prev = &rows[(n - 2) as usize];
    let mut row = Vec::with_capacity(((n - 1) * r + 1) as usize);
    for k in r..=n * r {
        let mut acc = Natural::zero();
        for p in 0..=r {
            let src = k + p - r; // k >= r, so this cannot underflow
            if src < r || src > (n - 1) * r {
                continue;
            }
            acc += binomial(src, p) * ff_nat(r, p) * &prev[(src - r) as usize];
        }
        row.push(acc);
    }
    rows.push(row);
}

/// S_{m,m}(n,k) = C_m(n,k), the number of k-colourings of n disjoint copies
/// of K_m, by the clique-absorption recurrence. Out-of-range k gives 0.
pub fn stirling_mm(m: u32, n: u32, k: u32) -> Natural {
    assert!(m >= 1 && n >= 1, "m and n must be positive");
    if k < m || k > n * m {
        return Natural::zero();
    }
    with_rows(&CLIQUE_ROWS, m, n, extend_clique_row, |rows| {
        rows[(n - 1) as usize][(k - m) as usize].clone()
    })
}

/// S_{m,m}(n,k) by the independent recurrence
/// S(n+1,k) = sum_p C(k+p-m, p) (m)_p S(n, k+p-m); same output contract as
/// [`stirling_mm`].
pub fn stirling_mm_blasiak(m: u32, n: u32, k: u32) -> Natural {
    assert!(m >= 1 && n >= 1, "m and n must be positive");
    if k < m || k > n * m {
        return Natural::zero();
    }
    with_rows(&BLASIAK_ROWS, m, n, extend_blasiak_row, |rows| {
        rows[(n - 1) as usize][(k - m) as usize].clone()
    })
}

/// B_m(n) = sum_k S_{m,m}(n,k): the number of all colourings of n K_m.
pub fn bell_mm(m: u32, n: u32) -> Natural {
    assert!(m >= 1 && n >= 1, "m and n must be positive");
    with_rows(&CLIQUE_ROWS, m, n, extend_clique_row, |rows| {
        rows[(n - 1) as usize].iter().sum()
    })
}

/// Unsigned Lah number L(n,k) = (n!/k!) C(n-1,k-1); zero when k > n or k = 0.
pub fn lah(n: u32, k: u32) -> Natural {
    assert!(n >= 1, "n must be positive");
    if k == 0 || k > n {
        return Natural::zero();
    }
    let mut quot = Natural::one(); // n!/k!
    for j in k + 1..=n {
        quot *= BigUint::from(j);
    }
    quot * binomial(n - 1, k - 1)
}

/// Number of k-colourings of a disjoint union of cliques with the given
/// sizes. Cliques are absorbed one at a time: a clique of size m contributes
/// the kernel sum_i C(m,i) (k-i)_{m-i} applied to the counts for the
/// remaining cliques at k-i colours.
pub fn count_colourings_mixed(sizes: &[u32], k: u32) -> Natural {
    assert!(
        !sizes.is_empty() && sizes.iter().all(|&s| s >= 1),
        "clique sizes must be a non-empty list of positive integers"
    );
    let total: u32 = sizes.iter().sum();
    if k > total {
        return Natural::zero();
    }
    let mut dp = vec![Natural::zero(); (total + 1) as usize];
    dp[0] = Natural::one();
    for &m in sizes {
        let mut next = vec![Natural::zero(); (total + 1) as usize];
        for kk in 1..=total {
            let mut acc = Natural::zero();
            for i in 0..=m.min(kk) {
                let rest = &dp[(kk - i) as usize];
                if rest.is_zero() {
                    continue;
                }
                acc += binomial(m, i) * ff_nat(kk - i, m - i) * rest;
            }
            next[kk as usize] = acc;
        }
        next[0] = Natural::zero();
        dp = next;
    }
    dp[k as usize].clone()
}

/// Row n of the generalized Stirling triangle S_{r,s}: builds the product
/// polynomial P(x) = prod_{j=1..n} (x + (j-1)(r-s))_s exactly and re-expands
/// it in the falling-factorial basis; the coefficient of (x)_q is
/// S_{r,s}(n,q). Returns the map q -> S_{r,s}(n,q) for q = s..n*s.
pub fn gen_stirling_row(r: u32, s: u32, n: u32) -> Result<BTreeMap<u32, Natural>> {
    if s < 1 || r < s {
        return Err(Error::RankOrder { r, s });
    }
    assert!(n >= 1, "n must be positive");
    let d = i64::from(r - s);
    let mut p = IntPolynomial::one();
    for j in 0..i64::from(n) {
        for l in 0..i64::from(s) {
            p = p.mul_linear(&BigInt::from(j * d - l));
        }
    }
    debug_assert_eq!(p.degree(), (n * s) as usize);
    let coeffs = p.falling_factorial_coeffs();
    let mut row = BTreeMap::new();
    for (q, aq) in coeffs.iter().enumerate() {
        let q = q as u32;
        if q < s {
            assert!(
                aq.is_zero(),
                "basis conversion produced a nonzero coefficient a_{q} below s"
            );
            continue;
        }
        let value = aq.to_biguint().unwrap_or_else(|| {
            panic!("basis conversion produced a negative coefficient a_{q} = {aq}")
        });
        row.insert(q, value);
    }
    debug_assert_eq!(row.len() as u32, n * s - s + 1);
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        BigUint::from(v)
    }

    #[test]
    fn falling_factorial_cases() {
        assert_eq!(falling_factorial(&BigInt::from(5), 2), BigInt::from(20));
        for x in [-4i64, 0, 3, 11] {
            assert_eq!(falling_factorial(&BigInt::from(x), 0), BigInt::one());
        }
        assert_eq!(falling_factorial(&BigInt::from(3), 5), BigInt::zero());
        assert_eq!(falling_factorial(&BigInt::from(-2), 3), BigInt::from(-24));
    }

    #[test]
    fn binomial_cases() {
        assert_eq!(binomial(4, 2), nat(6));
        assert_eq!(binomial(7, 0), nat(1));
        assert_eq!(binomial(3, 5), nat(0));
        assert_eq!(binomial(30, 15), nat(155117520));
    }

    #[test]
    fn stirling_table_values() {
        assert_eq!(stirling_mm(3, 2, 4), nat(18));
        assert_eq!(stirling_mm(3, 3, 5), nat(1242));
        assert_eq!(stirling_mm(3, 1, 4), nat(0));
        assert_eq!(stirling_mm(3, 4, 2), nat(0)); // k < m
        for m in 1..=6 {
            for n in 1..=6 {
                assert_eq!(stirling_mm(m, n, n * m), nat(1), "diagonal m={m} n={n}");
            }
        }
    }

    #[test]
    fn stirling_classical_row() {
        // m = 1 degenerates to the classical Stirling numbers of the second
        // kind; S(4,k) = 1, 7, 6, 1 (frozen from the set-partition oracle).
        let row: Vec<Natural> = (1..=4).map(|k| stirling_mm(1, 4, k)).collect();
        assert_eq!(row, vec![nat(1), nat(7), nat(6), nat(1)]);
    }

    #[test]
    fn blasiak_route_values() {
        assert_eq!(stirling_mm_blasiak(3, 3, 7), nat(243));
        assert_eq!(stirling_mm_blasiak(2, 2, 3), stirling_mm(2, 2, 3));
        assert_eq!(stirling_mm_blasiak(1, 4, 2), nat(7));
    }

    #[test]
    fn routes_agree() {
        for m in 1..=3 {
            for n in 1..=5 {
                for k in 0..=n * m + 1 {
                    assert_eq!(
                        stirling_mm(m, n, k),
                        stirling_mm_blasiak(m, n, k),
                        "m={m} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn bell_values() {
        assert_eq!(bell_mm(3, 2), nat(34));
        assert_eq!(bell_mm(3, 4), nat(513559));
        assert_eq!(bell_mm(1, 3), nat(5));
        let bells: Vec<Natural> = (1..=5).map(|n| bell_mm(1, n)).collect();
        assert_eq!(bells, vec![nat(1), nat(2), nat(5), nat(15), nat(52)]);
    }

    #[test]
    fn lah_values() {
        assert_eq!(lah(4, 2), nat(36));
        assert_eq!(lah(7, 3), nat(12600));
        assert_eq!(lah(8, 3), nat(141120));
        for n in 1..=9 {
            assert_eq!(lah(n, n), nat(1));
        }
        assert_eq!(lah(3, 5), nat(0));
        assert_eq!(lah(3, 0), nat(0));
    }

    #[test]
    fn mixed_count_values() {
        assert_eq!(count_colourings_mixed(&[3, 3], 4), nat(18));
        for m in 1..=5 {
            assert_eq!(count_colourings_mixed(&[m], m), nat(1));
        }
        // K_2 + K_1 has two 2-colourings and one 3-colouring (frozen from the
        // brute-force stable-partition oracle).
        assert_eq!(count_colourings_mixed(&[2, 1], 2), nat(2));
        assert_eq!(count_colourings_mixed(&[2, 1], 3), nat(1));
        assert_eq!(count_colourings_mixed(&[2, 1], 1), nat(0));
        assert_eq!(count_colourings_mixed(&[2, 1], 4), nat(0));
    }

    #[test]
    fn mixed_reduces_to_uniform() {
        for m in 1..=3u32 {
            for n in 1..=4u32 {
                let sizes = vec![m; n as usize];
                for k in 0..=n * m + 1 {
                    assert_eq!(
                        count_colourings_mixed(&sizes, k),
                        stirling_mm(m, n, k),
                        "m={m} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn gen_row_table1() {
        let row = gen_stirling_row(3, 3, 2).unwrap();
        let expect: BTreeMap<u32, Natural> =
            [(3, 6u64), (4, 18), (5, 9), (6, 1)].map(|(k, v)| (k, nat(v))).into();
        assert_eq!(row, expect);
    }

    #[test]
    fn gen_row_lah() {
        let row = gen_stirling_row(2, 1, 4).unwrap();
        let expect: BTreeMap<u32, Natural> =
            [(1, 24u64), (2, 36), (3, 12), (4, 1)].map(|(k, v)| (k, nat(v))).into();
        assert_eq!(row, expect);
    }

    #[test]
    fn gen_row_classical() {
        let row = gen_stirling_row(1, 1, 3).unwrap();
        let expect: BTreeMap<u32, Natural> =
            [(1, 1u64), (2, 3), (3, 1)].map(|(k, v)| (k, nat(v))).into();
        assert_eq!(row, expect);
    }

    #[test]
    fn gen_row_rejects_rank_order() {
        assert!(matches!(
            gen_stirling_row(1, 2, 3),
            Err(Error::RankOrder { r: 1, s: 2 })
        ));
        assert!(gen_stirling_row(2, 0, 3).is_err());
    }

    #[test]
    fn triple_route_agreement() {
        for m in 1..=3 {
            for n in 1..=5 {
                let row = gen_stirling_row(m, m, n).unwrap();
                for k in m..=n * m {
                    assert_eq!(row[&k], stirling_mm(m, n, k), "m={m} n={n} k={k}");
                    assert_eq!(row[&k], stirling_mm_blasiak(m, n, k));
                }
            }
        }
    }

    #[test]
    fn binomial_identity_prop2() {
        // (m)_i C(k+i-m, i) = (k+i-m)_i C(m, i) for 0 <= i <= m <= k <= 30.
        for k in 0..=30u32 {
            for m in 0..=k {
                for i in 0..=m {
                    let lhs = falling_factorial(&BigInt::from(m), i)
                        * BigInt::from(binomial(k + i - m, i));
                    let rhs = falling_factorial(&BigInt::from(k + i - m), i)
                        * BigInt::from(binomial(m, i));
                    assert_eq!(lhs, rhs, "i={i} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn lah_agreement() {
        for n in 1..=9 {
            let row = gen_stirling_row(2, 1, n).unwrap();
            for k in 1..=n {
                assert_eq!(row[&k], lah(n, k), "n={n} k={k}");
            }
        }
    }
}
