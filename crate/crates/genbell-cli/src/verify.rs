//! Verification suites behind `genbell verify`: published tables, fixture
//! sequences, and the bijection properties, reported check by check.

use std::path::Path;

use genbell::{
    bell_mm, check_sequence, colouring_to_digraph, count_colourings_mixed,
    digraph_to_colouring, enumerate_all_colourings, enumerate_digraphs, from_paths,
    gen_stirling_row, lah, load_fixtures, stirling_mm, stirling_mm_blasiak, to_paths, Natural,
};
use num_traits::ToPrimitive;

/// Outcome of one named verification.
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: String) -> Check {
        Check {
            name: name.to_string(),
            passed: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Check {
        Check {
            name: name.to_string(),
            passed: false,
            detail,
        }
    }
}

/// Runs a closure that either returns a success detail or the first
/// failure's description.
fn run(name: &str, body: impl FnOnce() -> Result<String, String>) -> Check {
    match body() {
        Ok(detail) => Check::pass(name, detail),
        Err(detail) => Check::fail(name, detail),
    }
}

// Published S_{3,3} values: (n, first k, consecutive row values).
const TABLE_S33: &[(u32, u32, &[u64])] = &[
    (1, 3, &[1]),
    (2, 3, &[6, 18, 9, 1]),
    (3, 3, &[36, 540, 1242, 882, 243, 27, 1]),
    (4, 3, &[216, 13608, 94284, 186876, 149580, 56808, 11025, 1107]),
    (
        5,
        3,
        &[
            1296, 330480, 6148872, 28245672, 49658508, 41392620, 18428400, 4691412,
        ],
    ),
];

// Published S_{2,1} (Lah) rows, n = 1..=9.
const TABLE_LAH: &[&[u64]] = &[
    &[1],
    &[2, 1],
    &[6, 6, 1],
    &[24, 36, 12, 1],
    &[120, 240, 120, 20, 1],
    &[720, 1800, 1200, 300, 30, 1],
    &[5040, 15120, 12600, 4200, 630, 42, 1],
    &[40320, 141120, 141120, 58800, 11760, 1176, 56, 1],
    &[362880, 1451520, 1693440, 846720, 211680, 28224, 2016, 72, 1],
];

pub fn tables_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(run("s33-table", || {
        let mut cells = 0;
        for &(n, k0, values) in TABLE_S33 {
            for (off, &want) in values.iter().enumerate() {
                let k = k0 + off as u32;
                let got = stirling_mm(3, n, k);
                if got != Natural::from(want) {
                    return Err(format!("S_{{3,3}}({n},{k}) = {got}, published {want}"));
                }
                cells += 1;
            }
        }
        Ok(format!("{cells} published cells match"))
    }));

    checks.push(run("bell-row-sums", || {
        let want = [1u64, 34, 2971, 513559];
        for (i, &w) in want.iter().enumerate() {
            let n = i as u32 + 1;
            let got = bell_mm(3, n);
            if got != Natural::from(w) {
                return Err(format!("B_{{3,3}}({n}) = {got}, published {w}"));
            }
        }
        Ok("B_{3,3}(1..4) = 1, 34, 2971, 513559".to_string())
    }));

    checks.push(run("lah-table", || {
        let mut cells = 0;
        for (row, values) in TABLE_LAH.iter().enumerate() {
            let n = row as u32 + 1;
            for (off, &want) in values.iter().enumerate() {
                let k = off as u32 + 1;
                let got = lah(n, k);
                if got != Natural::from(want) {
                    return Err(format!("L({n},{k}) = {got}, published {want}"));
                }
                cells += 1;
            }
        }
        Ok(format!("{cells} published cells match"))
    }));

    checks.push(run("triple-route", || {
        for m in 1..=3 {
            for n in 1..=5 {
                let row = gen_stirling_row(m, m, n).map_err(|e| e.to_string())?;
                for k in 1..=n * m {
                    let a = stirling_mm(m, n, k);
                    let b = stirling_mm_blasiak(m, n, k);
                    let c = row.get(&k).cloned().unwrap_or_default();
                    if a != b || b != c {
                        return Err(format!(
                            "routes disagree at m={m} n={n} k={k}: {a} / {b} / {c}"
                        ));
                    }
                }
            }
        }
        Ok("three routes agree for m <= 3, n <= 5".to_string())
    }));

    checks.push(run("lah-identity", || {
        for n in 1..=9 {
            let row = gen_stirling_row(2, 1, n).map_err(|e| e.to_string())?;
            for k in 1..=n {
                if row[&k] != lah(n, k) {
                    return Err(format!("S_{{2,1}}({n},{k}) = {} != L = {}", row[&k], lah(n, k)));
                }
            }
        }
        Ok("S_{2,1} rows equal the Lah closed form for n <= 9".to_string())
    }));

    checks.push(run("mixed-reduction", || {
        for m in 1..=3u32 {
            for n in 1..=4u32 {
                let sizes = vec![m; n as usize];
                for k in 0..=n * m + 1 {
                    let mixed = count_colourings_mixed(&sizes, k);
                    let uniform = stirling_mm(m, n, k);
                    if mixed != uniform {
                        return Err(format!(
                            "mixed count at m={m} n={n} k={k}: {mixed} != {uniform}"
                        ));
                    }
                }
            }
        }
        Ok("mixed counting reduces to the uniform recurrence".to_string())
    }));

    checks
}

pub fn oeis_suite(fixtures_dir: &Path, n_max: u32) -> Result<Vec<Check>, genbell::Error> {
    let fixtures = load_fixtures(fixtures_dir)?;
    let mut checks = Vec::new();

    let sequence_check =
        |name: &str, id: &str, computed: Vec<Natural>| -> Result<Check, genbell::Error> {
            let fixture = fixtures.get(id)?;
            let report = check_sequence(fixture, &computed);
            Ok(match report.mismatch {
                None => Check::pass(name, format!("{} terms match {id}", report.compared)),
                Some(m) => Check::fail(
                    name,
                    format!(
                        "{id} term {}: fixture {} vs computed {}",
                        m.index, m.fixture, m.computed
                    ),
                ),
            })
        };

    // A000110 opens with Bell(0); the colouring model starts at n = 1.
    let classic = fixtures.get("A000110")?;
    let mut bells = vec![classic.values[0].clone()];
    bells.extend((1..classic.values.len() as u32).map(|n| bell_mm(1, n)));
    checks.push(sequence_check("bell-classic", "A000110", bells)?);

    let len = fixtures.get("A069223")?.values.len() as u32;
    checks.push(sequence_check(
        "bell-triangles",
        "A069223",
        (1..=len).map(|n| bell_mm(3, n)).collect(),
    )?);

    let mut lahs = Vec::new();
    for n in 1..=9 {
        for k in 1..=n {
            lahs.push(lah(n, k));
        }
    }
    checks.push(sequence_check("lah-rows", "A105278", lahs)?);

    for report in genbell::verify_conjectures(n_max, &fixtures)? {
        let name = format!("conjecture-s{}1", report.r);
        checks.push(if report.holds() {
            Check::pass(
                &name,
                format!(
                    "S_{{{},1}}(n,1) matches {} for n <= {} (hypothesis check)",
                    report.r,
                    report.fixture_id,
                    report.terms.len()
                ),
            )
        } else {
            let bad = report.terms.iter().find(|t| !t.agrees).expect("failed term");
            Check::fail(
                &name,
                format!(
                    "{} diverges at n={}: computed {}, fixture {}",
                    report.fixture_id, bad.n, bad.computed, bad.expected
                ),
            )
        });
    }

    Ok(checks)
}

/// All ordered size lists with total at most max_sum.
fn compositions_up_to(max_sum: u32) -> Vec<Vec<u32>> {
    fn grow(remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for s in 1..=remaining {
            cur.push(s);
            grow(remaining - s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(max_sum, &mut Vec::new(), &mut out);
    out
}

pub fn bijection_suite(max_sum: u32) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(run("roundtrips", || {
        let mut colourings = 0usize;
        for sizes in compositions_up_to(max_sum) {
            let family = genbell::CliqueFamily::new(sizes.clone()).map_err(|e| e.to_string())?;
            for c in enumerate_all_colourings(&family) {
                let d = colouring_to_digraph(&family, &c).map_err(|e| e.to_string())?;
                if d.vertex_count != c.block_count() {
                    return Err(format!("vertex/block mismatch for {c} in {sizes:?}"));
                }
                let back = digraph_to_colouring(&family, &d).map_err(|e| e.to_string())?;
                if back != c {
                    return Err(format!("forward roundtrip broke {c} in {sizes:?}"));
                }
                let again = colouring_to_digraph(&family, &back).map_err(|e| e.to_string())?;
                if again.canonicalize() != d {
                    return Err(format!("reverse roundtrip broke {c} in {sizes:?}"));
                }
                let paths = to_paths(&d).map_err(|e| e.to_string())?;
                let reclosed = from_paths(&paths, &sizes).map_err(|e| e.to_string())?;
                if reclosed != d {
                    return Err(format!("path re-closure broke {c} in {sizes:?}"));
                }
                colourings += 1;
            }
        }
        Ok(format!(
            "both bijection directions and path re-closure are identities over {colourings} colourings (sum <= {max_sum})"
        ))
    }));

    checks.push(run("digraph-counts", || {
        let scope: Vec<(u32, u32)> = (1..=4)
            .map(|n| (1, n))
            .chain((1..=3).map(|n| (2, n)))
            .chain((1..=3).map(|n| (3, n)))
            .collect();
        for (m, n) in scope {
            let ds = enumerate_digraphs(&vec![m; n as usize]).map_err(|e| e.to_string())?;
            let want = bell_mm(m, n).to_usize().expect("desk scale");
            if ds.len() != want {
                return Err(format!("|digraphs| = {} for m={m} n={n}, want {want}", ds.len()));
            }
            for k in m..=n * m {
                let tally = ds.iter().filter(|d| d.vertex_count == k).count();
                let want = stirling_mm(m, n, k).to_usize().expect("desk scale");
                if tally != want {
                    return Err(format!(
                        "{tally} digraphs on k={k} vertices for m={m} n={n}, want {want}"
                    ));
                }
            }
        }
        Ok("digraph totals and per-k tallies match the exact counts".to_string())
    }));

    checks
}
