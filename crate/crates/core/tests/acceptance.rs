//! Acceptance gate. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion does.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use warping_core::knot::{parse_gauss_code, EdgeIndex, Sign, Strand, Visit};
use warping_core::puzzle::{enumerate_matrices, fixtures, solve, PuzzleGrid};
use warping_core::random::{random_diagram, WordShape};
use warping_core::rules::binomial;
use warping_core::{
    build_diagram_matrix, build_projection_matrix, canonical_form, difference_transform,
    equivalent, reconstruct_diagram, reconstruct_projection, restore_missing_row, verify_rules,
    MatrixKind, OrientedKnotDiagram, RuleSet, WarpingMatrix, TREFOIL_CODE,
};

const TREFOIL_M: [[u32; 6]; 8] = [
    [0, 1, 2, 3, 2, 1],
    [1, 0, 1, 2, 3, 2],
    [1, 2, 1, 2, 1, 2],
    [1, 2, 3, 2, 1, 0],
    [2, 1, 0, 1, 2, 3],
    [2, 1, 2, 1, 2, 1],
    [2, 3, 2, 1, 0, 1],
    [3, 2, 1, 0, 1, 2],
];

const SECOND_M: [[u32; 6]; 8] = [
    [0, 1, 2, 3, 2, 1],
    [1, 0, 1, 2, 1, 0],
    [1, 2, 1, 2, 1, 2],
    [1, 2, 3, 2, 3, 2],
    [2, 1, 0, 1, 0, 1],
    [2, 3, 2, 1, 2, 3],
    [2, 1, 2, 1, 2, 1],
    [3, 2, 1, 0, 1, 2],
];

const THIRD_M: [[u32; 6]; 8] = [
    [0, 1, 2, 1, 2, 1],
    [1, 0, 1, 0, 1, 0],
    [1, 2, 1, 2, 3, 2],
    [1, 2, 3, 2, 1, 2],
    [2, 1, 0, 1, 2, 1],
    [2, 3, 2, 3, 2, 3],
    [2, 1, 2, 1, 0, 1],
    [3, 2, 1, 2, 1, 2],
];

const THIRD_U: [[i8; 6]; 8] = [
    [1, 1, -1, 1, -1, -1],
    [-1, 1, -1, 1, -1, 1],
    [1, -1, 1, 1, -1, -1],
    [1, 1, -1, -1, 1, -1],
    [-1, -1, 1, 1, -1, 1],
    [1, -1, 1, -1, 1, -1],
    [-1, 1, -1, -1, 1, 1],
    [-1, -1, 1, -1, 1, 1],
];

fn matrix<const W: usize>(rows: &[[u32; W]]) -> WarpingMatrix {
    let rows: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
    WarpingMatrix::from_values(&rows).unwrap()
}

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed < budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })
}

fn trefoil_matrix() -> Check {
    let start = Instant::now();
    let d = parse_gauss_code(TREFOIL_CODE).map_err(|e| e.to_string())?;
    let m = build_projection_matrix(&d).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(equivalent(&m, &matrix(&TREFOIL_M), false), || {
        format!("built matrix not equivalent:\n{}", m.to_text())
    })?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{elapsed:?}"))
}

fn small_matrices() -> Check {
    let curl = build_projection_matrix(&parse_gauss_code("O1+U1+").unwrap()).unwrap();
    ensure(curl.values() == vec![vec![0, 1], vec![1, 0]], || {
        format!("c=1 gave\n{}", curl.to_text())
    })?;
    let printed = matrix(&[[0, 1, 2, 1], [1, 0, 1, 0], [1, 2, 1, 2], [2, 1, 0, 1]]);
    let twist = build_projection_matrix(&parse_gauss_code("O1+U2+O2+U1+").unwrap()).unwrap();
    ensure(equivalent(&twist, &printed, false), || {
        format!("c=2 gave\n{}", twist.to_text())
    })?;
    Ok("c=1 exact, c=2 equivalent".into())
}

fn difference_example() -> Check {
    let m = matrix(&THIRD_M);
    let u = difference_transform(&m).map_err(|e| e.to_string())?;
    let expect: Vec<Vec<i8>> = THIRD_U.iter().map(|r| r.to_vec()).collect();
    ensure(u.entries() == expect.as_slice(), || {
        format!("U = {:?}", u.entries())
    })?;
    let rec = reconstruct_projection(&m).map_err(|e| e.to_string())?;
    let one_based: BTreeSet<(usize, usize)> =
        rec.pairs.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    let want = BTreeSet::from([(1, 6), (2, 3), (4, 5)]);
    ensure(one_based == want, || format!("pairs {one_based:?}"))?;
    Ok("U matches, pairs (1,6) (2,3) (4,5)".into())
}

/// Independent count of complement pairs and alternating rows.
fn proposition_oracle(m: &WarpingMatrix) -> Result<(), String> {
    let c = m.c();
    let rows = m.values();
    for j in 0..m.column_count() {
        for n in 0..=c {
            let count = rows.iter().filter(|r| r[j] == n).count() as u64;
            ensure(count == binomial(c, n), || {
                format!("column {j} holds {n} {count} times")
            })?;
        }
    }
    let mut used = vec![false; rows.len()];
    let mut pairs = 0;
    for i in 0..rows.len() {
        if used[i] {
            continue;
        }
        let hits: Vec<usize> = (0..rows.len())
            .filter(|&k| {
                k != i && !used[k] && rows[i].iter().zip(&rows[k]).all(|(a, b)| a + b == c)
            })
            .collect();
        ensure(hits.len() == 1, || {
            format!("row {i} has {} complements", hits.len())
        })?;
        used[i] = true;
        used[hits[0]] = true;
        pairs += 1;
    }
    ensure(pairs == 1 << (c - 1), || {
        format!("{pairs} complement pairs")
    })?;
    let n = m.column_count();
    let alternating: Vec<&Vec<u32>> = rows
        .iter()
        .filter(|r| (0..n).all(|j| r[j] == r[(j + 2) % n]))
        .collect();
    ensure(alternating.len() == 2, || {
        format!("{} alternating rows", alternating.len())
    })?;
    let up: Vec<u32> = alternating
        .iter()
        .filter(|r| r[1] > r[0])
        .map(|r| r[0])
        .collect();
    let down: Vec<u32> = alternating
        .iter()
        .filter(|r| r[1] < r[0])
        .map(|r| r[0])
        .collect();
    ensure(
        up.len() == 1 && down.len() == 1 && up[0] + down[0] == c,
        || format!("alternating rows {:?} {:?}", alternating[0], alternating[1]),
    )?;
    Ok(())
}

fn proposition_suite() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        let c = rng.gen_range(1..=8);
        let d = random_diagram(&mut rng, c, WordShape::EvenlyIntersticed);
        let m = build_projection_matrix(&d).map_err(|e| e.to_string())?;
        let report = verify_rules(&m);
        ensure(report.all_pass(), || {
            format!("diagram {i} ({}) rules:\n{report}", d.to_gauss_code())
        })?;
        proposition_oracle(&m).map_err(|e| format!("diagram {i} ({}): {e}", d.to_gauss_code()))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("200 diagrams, {elapsed:?}"))
}

fn curl_diagrams() -> Vec<OrientedKnotDiagram> {
    let mut out = Vec::new();
    for over_first in [true, false] {
        for sign in [Sign::Positive, Sign::Negative] {
            let (a, b) = if over_first {
                (Strand::Over, Strand::Under)
            } else {
                (Strand::Under, Strand::Over)
            };
            let visits = vec![
                Visit {
                    crossing: 1,
                    strand: a,
                },
                Visit {
                    crossing: 1,
                    strand: b,
                },
            ];
            out.push(OrientedKnotDiagram::new(visits, vec![sign]).unwrap());
        }
    }
    out
}

fn theorem_round_trip() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..1000 {
        let c = rng.gen_range(2..=8);
        let d = random_diagram(&mut rng, c, WordShape::Any);
        let m = build_diagram_matrix(&d).map_err(|e| e.to_string())?;
        let back = reconstruct_diagram(&m)
            .map_err(|e| format!("diagram {i} ({}): {e}", d.to_gauss_code()))?;
        ensure(back.diagram.same_diagram(&d), || {
            format!(
                "diagram {i}: {} came back as {}",
                d.to_gauss_code(),
                back.diagram.to_gauss_code()
            )
        })?;
    }
    let elapsed = start.elapsed();
    let mut ambiguous = 0;
    for d in curl_diagrams() {
        let m = build_diagram_matrix(&d).map_err(|e| e.to_string())?;
        let restored = restore_missing_row(&m).map_err(|e| e.to_string())?;
        let back = reconstruct_diagram(&m).map_err(|e| e.to_string())?;
        if !restored.undetermined_bars.is_empty() {
            ensure(back.signs_from_pairing == vec![1], || {
                format!("{} ambiguity not reported", d.to_gauss_code())
            })?;
            ambiguous += 1;
        }
        ensure(back.diagram.same_diagram(&d), || {
            format!(
                "{} came back as {}",
                d.to_gauss_code(),
                back.diagram.to_gauss_code()
            )
        })?;
    }
    ensure(ambiguous > 0, || "no c=1 ambiguity reported".into())?;
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!(
        "1000 diagrams, {elapsed:?}; c=1: {ambiguous}/4 ambiguous by count, all matched"
    ))
}

fn complementarity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..500 {
        let c = rng.gen_range(1..=8);
        let d = random_diagram(&mut rng, c, WordShape::Any);
        let star = d.mirror_all();
        for b in 0..2 * c as usize {
            let sum = d.warping_degree(EdgeIndex(b)).unwrap()
                + star.warping_degree(EdgeIndex(b)).unwrap();
            ensure(sum == c, || {
                format!("diagram {i} ({}) edge {b}: sum {sum}", d.to_gauss_code())
            })?;
        }
    }
    Ok("500 diagrams".into())
}

fn enumeration_counts() -> Check {
    let start = Instant::now();
    let rules = RuleSet::all();
    let printed: [Vec<WarpingMatrix>; 3] = [
        vec![matrix(&[[0, 1], [1, 0]])],
        vec![matrix(&[
            [0, 1, 2, 1],
            [1, 0, 1, 0],
            [1, 2, 1, 2],
            [2, 1, 0, 1],
        ])],
        vec![matrix(&TREFOIL_M), matrix(&SECOND_M), matrix(&THIRD_M)],
    ];
    let mut counts = Vec::new();
    for (c, printed) in (1..=3).zip(printed) {
        let found = enumerate_matrices(c, &rules, true).map_err(|e| e.to_string())?;
        counts.push(found.len());
        let found: BTreeSet<Vec<Vec<u32>>> = found.iter().map(|m| m.values()).collect();
        let want: BTreeSet<Vec<Vec<u32>>> = printed
            .iter()
            .map(|m| canonical_form(m, true).values())
            .collect();
        ensure(found == want, || {
            format!(
                "c={c}: found {} classes, printed {}",
                found.len(),
                want.len()
            )
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(600))?;
    Ok(format!("classes {counts:?}, {elapsed:?}"))
}

fn solve_fixture(
    name: &str,
    grid: &PuzzleGrid,
    budget: Duration,
) -> Result<(usize, PuzzleGrid), String> {
    let start = Instant::now();
    let solutions = solve(grid, &RuleSet::basic(), usize::MAX);
    let elapsed = start.elapsed();
    within(elapsed, budget).map_err(|e| format!("{name}: {e}"))?;
    ensure(!solutions.is_empty(), || format!("{name}: no completion"))?;
    for s in &solutions {
        ensure(grid.agrees_with(s), || {
            format!("{name}: completion ignores clues")
        })?;
        let report = verify_rules(&s.to_matrix().map_err(|e| e.to_string())?);
        ensure(report.all_pass(), || {
            format!("{name}: completion fails\n{report}")
        })?;
    }
    Ok((solutions.len(), solutions[0].clone()))
}

fn appendix_fixtures() -> Check {
    let (trefoil_count, trefoil) =
        solve_fixture("trefoil", &fixtures::trefoil(), Duration::from_secs(60))?;
    let reference = build_projection_matrix(&parse_gauss_code(TREFOIL_CODE).unwrap()).unwrap();
    ensure(
        equivalent(&trefoil.to_matrix().unwrap(), &reference, false),
        || format!("trefoil completion not equivalent:\n{}", trefoil.to_text()),
    )?;
    let (eight_count, _) = solve_fixture(
        "figure8",
        &fixtures::figure_eight(),
        Duration::from_secs(600),
    )?;
    Ok(format!(
        "8x6 grid: {trefoil_count} solution(s); 16x8 grid: {eight_count} solution(s)"
    ))
}

fn format_round_trips() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let c = rng.gen_range(1..=6);
        let d = random_diagram(&mut rng, c, WordShape::Any);
        let code = d.to_gauss_code();
        let again = parse_gauss_code(&code).map_err(|e| e.to_string())?;
        ensure(again == d && again.to_gauss_code() == code, || {
            format!("gauss {code}")
        })?;
        let json = d.to_json().to_string();
        let back = OrientedKnotDiagram::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        ensure(back == d, || format!("gauss json {json}"))?;

        for m in [
            build_projection_matrix(&d).unwrap(),
            build_diagram_matrix(&d).unwrap(),
        ] {
            let text = m.to_text();
            let parsed =
                WarpingMatrix::parse_text(&text, Some(m.kind())).map_err(|e| e.to_string())?;
            ensure(parsed == m && parsed.to_text() == text, || {
                format!("matrix text\n{text}")
            })?;
            let json = m.to_json().to_string();
            let parsed = WarpingMatrix::parse_any(&json, None).map_err(|e| e.to_string())?;
            ensure(
                parsed == m && json == parsed.to_json().to_string().as_str(),
                || format!("matrix json {json}"),
            )?;
        }
    }
    let signed =
        warping_core::build_signed_matrix(&parse_gauss_code("U1-U2+O3+O1-O2+U3+").unwrap())
            .unwrap();
    let text = signed.to_text();
    let parsed = WarpingMatrix::parse_text(&text, None).map_err(|e| e.to_string())?;
    ensure(
        parsed.kind() == MatrixKind::SignedProjection && parsed.to_text() == text,
        || format!("signed text\n{text}"),
    )?;
    for (grid, file) in [
        (fixtures::trefoil(), fixtures::TREFOIL_TEXT),
        (fixtures::figure_eight(), fixtures::FIGURE_EIGHT_TEXT),
    ] {
        let text = grid.to_text();
        let parsed = PuzzleGrid::parse_text(&text).map_err(|e| e.to_string())?;
        ensure(parsed == grid && parsed.to_text() == text, || {
            format!("grid\n{text}")
        })?;
        ensure(text == file, || "fixture text differs".into())?;
        let json = grid.to_json().to_string();
        let parsed = PuzzleGrid::parse_any(&json).map_err(|e| e.to_string())?;
        ensure(
            grid == parsed && json == parsed.to_json().to_string().as_str(),
            || format!("grid json {json}"),
        )?;
    }
    Ok("gauss, matrix and grid files".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("trefoil matrix exactness", trefoil_matrix),
        ("small matrices c=1, c=2", small_matrices),
        ("U = MA worked example", difference_example),
        ("matrix laws on random diagrams", proposition_suite),
        ("diagram round trip", theorem_round_trip),
        ("complementarity", complementarity),
        ("enumeration counts", enumeration_counts),
        ("puzzle fixtures", appendix_fixtures),
        ("format round trips", format_round_trips),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
