//! Tables (n, k) -> value for the supported number families, used for
//! emission and cross-family comparison.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::numbers::{
    count_colourings_mixed, gen_stirling_row, lah, stirling_mm, stirling_mm_blasiak, Natural,
};

/// The number family a [`Triangle`] tabulates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// S_{r,s}(n, k) via falling-factorial extraction.
    GenStirling { r: u32, s: u32 },
    /// k-colouring counts of the first n cliques of a mixed family.
    CliqueCounts { sizes: Vec<u32> },
    /// Unsigned Lah numbers L(n, k).
    Lah,
}

/// A finite table of exact values, rows n = 1..=n_max; absent cells are
/// zero by convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    family: Family,
    n_max: u32,
    entries: BTreeMap<(u32, u32), Natural>,
}

impl Triangle {
    /// Tabulates S_{r,s}(n,k) for n = 1..=n_max. When r = s the extraction
    /// route is checked cell-by-cell against both recurrence routes, so a
    /// disagreement between implementations surfaces as an error instead of
    /// a wrong table.
    pub fn gen_stirling(r: u32, s: u32, n_max: u32) -> Result<Triangle> {
        assert!(n_max >= 1, "n_max must be positive");
        let mut entries = BTreeMap::new();
        for n in 1..=n_max {
            for (k, value) in gen_stirling_row(r, s, n)? {
                if r == s {
                    for (route, name) in [
                        (stirling_mm(r, n, k), "clique recurrence"),
                        (stirling_mm_blasiak(r, n, k), "second recurrence"),
                    ] {
                        if route != value {
                            return Err(Error::RouteDisagreement {
                                n,
                                k,
                                lhs: format!("{value} (extraction)"),
                                rhs: format!("{route} ({name})"),
                            });
                        }
                    }
                }
                entries.insert((n, k), value);
            }
        }
        Ok(Triangle {
            family: Family::GenStirling { r, s },
            n_max,
            entries,
        })
    }

    /// Tabulates L(n,k) for n = 1..=n_max, k = 1..=n.
    pub fn lah_rows(n_max: u32) -> Triangle {
        assert!(n_max >= 1, "n_max must be positive");
        let mut entries = BTreeMap::new();
        for n in 1..=n_max {
            for k in 1..=n {
                entries.insert((n, k), lah(n, k));
            }
        }
        Triangle {
            family: Family::Lah,
            n_max,
            entries,
        }
    }

    /// Tabulates colouring counts where row n covers the sub-family made of
    /// the first n cliques; reduces to the S_{m,m} table for uniform sizes.
    pub fn clique_counts(sizes: &[u32]) -> Result<Triangle> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::BadFamily);
        }
        let mut entries = BTreeMap::new();
        for n in 1..=sizes.len() {
            let prefix = &sizes[..n];
            let total: u32 = prefix.iter().sum();
            let low = *prefix.iter().max().expect("non-empty prefix");
            for k in low..=total {
                let v = count_colourings_mixed(prefix, k);
                entries.insert((n as u32, k), v);
            }
        }
        Ok(Triangle {
            family: Family::CliqueCounts {
                sizes: sizes.to_vec(),
            },
            n_max: sizes.len() as u32,
            entries,
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    /// The tabulated value, or None for an out-of-range (zero) cell.
    pub fn value(&self, n: u32, k: u32) -> Option<&Natural> {
        self.entries.get(&(n, k))
    }

    /// Smallest and largest k present in any row, or None for an empty table.
    pub fn k_span(&self) -> Option<(u32, u32)> {
        let mut ks = self.entries.keys().map(|&(_, k)| k);
        let first = ks.next()?;
        Some(ks.fold((first, first), |(lo, hi), k| (lo.min(k), hi.max(k))))
    }

    /// Cells of row n in ascending k order.
    pub fn row(&self, n: u32) -> impl Iterator<Item = (u32, &Natural)> {
        self.entries
            .range((n, 0)..(n + 1, 0))
            .map(|(&(_, k), v)| (k, v))
    }

    /// Sum over row n; the generalized Bell number for that row.
    pub fn row_sum(&self, n: u32) -> Natural {
        self.row(n).map(|(_, v)| v).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn nat(v: u64) -> Natural {
        BigUint::from(v)
    }

    #[test]
    fn gen_stirling_table() {
        let t = Triangle::gen_stirling(3, 3, 5).unwrap();
        assert_eq!(t.value(2, 4), Some(&nat(18)));
        assert_eq!(t.value(5, 10), Some(&nat(4691412)));
        assert_eq!(t.value(1, 4), None);
        assert_eq!(t.value(2, 2), None);
        assert_eq!(t.k_span(), Some((3, 15)));
        assert_eq!(t.row_sum(2), nat(34));
        assert_eq!(t.row(2).map(|(k, _)| k).collect::<Vec<_>>(), vec![3, 4, 5, 6]);
    }

    #[test]
    fn lah_table() {
        let t = Triangle::lah_rows(9);
        assert_eq!(t.value(4, 2), Some(&nat(36)));
        assert_eq!(t.value(8, 3), Some(&nat(141120)));
        assert_eq!(t.value(3, 4), None);
        assert_eq!(t.row_sum(3), nat(13));
    }

    #[test]
    fn clique_count_table() {
        let t = Triangle::clique_counts(&[3, 3]).unwrap();
        assert_eq!(t.value(1, 3), Some(&nat(1)));
        assert_eq!(t.value(2, 4), Some(&nat(18)));
        let mixed = Triangle::clique_counts(&[2, 1]).unwrap();
        assert_eq!(mixed.value(2, 2), Some(&nat(2)));
        assert_eq!(mixed.value(2, 3), Some(&nat(1)));
        assert!(Triangle::clique_counts(&[]).is_err());
    }

    #[test]
    fn rejects_bad_rank_order() {
        assert!(matches!(
            Triangle::gen_stirling(1, 2, 3),
            Err(Error::RankOrder { .. })
        ));
    }
}
