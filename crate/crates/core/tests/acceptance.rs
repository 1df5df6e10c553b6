//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if the set of failing criteria differs from `KNOWN_FAILURES`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qshell::gf::{Field, FieldElement, FieldVector};
use qshell::homology::{mayer_vietoris_stage_check, qcomplex_homology};
use qshell::ordercx::{
    betti_formula, chain_order_shells, count_homology_facets_characterized,
    count_homology_facets_oracle, non_matroid_witness,
};
use qshell::qcomplex::QComplex;
use qshell::qmatroid::{rank_from_code, restricted_kernel, QMatroid};
use qshell::qorder::{
    avoids_min_vectors, cmp_l, cmp_q, complete_flags, greedy_min_refinement_with_minima,
    is_locally_min, is_locally_min_by_enumeration, replace_at, Chain,
};
use qshell::reproduce::{example_code, example_facets};
use qshell::vecspace::{
    enumerate_all_subspaces, enumerate_between, enumerate_grassmannian, Subspace,
};

/// Criteria that fail on the bundled example, with the reason.
const KNOWN_FAILURES: [(u8, &str); 2] = [
    (
        1,
        "in the given coordinates the chain order does not shell the order complex of the example, \
         and the formula and restriction count give 64 while the homology rank is 56",
    ),
    (4, "the chain order is not a shelling of the punctured order complex of the example"),
];

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

struct Checks {
    pass: bool,
    notes: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.pass = false;
            self.notes.push(format!("failed: {what}"));
        }
    }

    fn info(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let t = start.elapsed();
        self.check(t < limit, format!("took {t:?}, limit {limit:?}"));
    }

    fn done(self) -> Outcome {
        Outcome {
            pass: self.pass,
            notes: self.notes,
        }
    }
}

fn f2() -> Field {
    Field::prime(2).unwrap()
}

fn span(f: &Field, rows: &[&[u32]]) -> Subspace {
    let vs: Vec<FieldVector> = rows.iter().map(|r| FieldVector::from_reps(r)).collect();
    Subspace::span(f, &vs, rows[0].len()).unwrap()
}

/// `[n, k]_q` from the product formula.
fn gauss(n: u32, k: u32, q: u128) -> u128 {
    if k > n {
        return 0;
    }
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

fn example() -> QComplex {
    QMatroid::from_code(&example_code())
        .unwrap()
        .matroid_complex()
        .unwrap()
        .lex_sorted()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::new();
    let code = example_code();
    let ext = code.ext_field().clone();
    let base = code.base_field().clone();

    let planes = enumerate_grassmannian(&base, 4, 3).unwrap();
    let full: Vec<&Subspace> = planes
        .iter()
        .filter(|u| rank_from_code(&code, u).unwrap() == 3)
        .collect();
    let short: Vec<&Subspace> = planes
        .iter()
        .filter(|u| rank_from_code(&code, u).unwrap() != 3)
        .collect();
    c.check(
        planes.len() == 15 && full.len() == 14,
        format!("(a) {} of {} planes have rank 3", full.len(), planes.len()),
    );

    let missing = span(&base, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    c.check(
        short == vec![&missing],
        "(b) the rank-deficient plane is <e1,e3,e4>",
    );
    c.check(
        rank_from_code(&code, &missing).unwrap() == 2,
        "(b) rank 2 at <e1,e3,e4>",
    );
    let a = |s: &str| ext.parse_elem(s, 'a').unwrap();
    let v = [FieldElement::ONE, a("a^3+a^2+a+1"), a("a^2+a")];
    let m = code.restrict(&missing).unwrap();
    let annihilated = (0..m.rows()).all(|r| {
        (0..3).fold(FieldElement::ZERO, |acc, j| {
            ext.add(acc, ext.mul(m.get(r, j), v[j]).unwrap()).unwrap()
        }) == FieldElement::ZERO
    });
    let kernel = restricted_kernel(&code, &missing).unwrap();
    c.check(
        annihilated && kernel.len() == 1,
        "(b) kernel is spanned by (1, a^3+a^2+a+1, a^2+a)",
    );

    let cx = example();
    c.check(
        cx.facets() == example_facets().facets.as_slice(),
        "(c) cmp_q order matches the listed facets",
    );

    let h = qcomplex_homology(&cx).unwrap();
    let snf_ok =
        h.rank_at(2) == 56 && h.degrees.iter().all(|g| g.p == 2 || g.is_zero()) && h.torsion_free();
    c.check(
        snf_ok,
        format!(
            "(d) SNF: rank {} in degree 2, elsewhere zero, torsion-free",
            h.rank_at(2)
        ),
    );
    c.check(7 * 2u64.pow(3) == 56, "(d) 7 q^3 = 56 at q = 2");
    let shells = chain_order_shells(&cx).unwrap();
    c.check(shells, "(d) chain order shells the punctured order complex");
    let formula = betti_formula(&cx).unwrap();
    let oracle = count_homology_facets_oracle(&cx).unwrap();
    let characterized = count_homology_facets_characterized(&cx).unwrap();
    c.check(
        formula.betti_rank == 56,
        format!("(d) Betti formula gives {}", formula.betti_rank),
    );
    c.check(
        oracle == 56,
        format!("(d) restriction count gives {oracle}"),
    );
    c.check(
        characterized == 56,
        format!("(d) characterized count gives {characterized}"),
    );

    // swapping e2 and e4 puts the missing plane at <e1,e2,e3>
    let swapped = cx.permute_coordinates(&[0, 3, 2, 1]).unwrap().lex_sorted();
    let sb = betti_formula(&swapped).unwrap();
    let sum: u64 = sb.per_facet.iter().map(|p| p.r_j).sum();
    c.info(format!(
        "after e2<->e4: chain shelling {}, s = {}, sum r_j = {}, formula {}, restriction count {}, characterized {}",
        chain_order_shells(&swapped).unwrap(),
        sb.s,
        sum,
        sb.betti_rank,
        count_homology_facets_oracle(&swapped).unwrap(),
        count_homology_facets_characterized(&swapped).unwrap(),
    ));
    c.within(start, Duration::from_secs(30));
    c.done()
}

const UNIFORM: [(u32, usize, usize); 7] = [
    (2, 1, 2),
    (2, 1, 3),
    (2, 2, 3),
    (2, 2, 4),
    (2, 3, 4),
    (3, 1, 2),
    (3, 2, 3),
];

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::new();
    for (q, k, n) in UNIFORM {
        let f = Field::prime(q).unwrap();
        let cx = QComplex::uniform(&f, n, k).unwrap();
        let expected =
            (q as u128).pow((k * (k + 1) / 2) as u32) * gauss(n as u32 - 1, k as u32, q as u128);
        let formula = betti_formula(&cx).unwrap().betti_rank as u128;
        let oracle = count_homology_facets_oracle(&cx).unwrap() as u128;
        let h = qcomplex_homology(&cx).unwrap();
        let top = k as i64 - 1;
        let snf = h.rank_at(top) as u128;
        let concentrated = h.degrees.iter().all(|g| g.p == top || g.is_zero()) && h.torsion_free();
        c.check(
            formula == expected && oracle == expected && snf == expected && concentrated,
            format!("(q,k,n) = ({q},{k},{n}): expected {expected}, formula {formula}, oracle {oracle}, SNF {snf}"),
        );
    }
    c.within(start, Duration::from_secs(120));
    c.done()
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::new();
    for (q, r) in [(2u32, 1usize), (2, 2), (3, 1)] {
        let f = Field::prime(q).unwrap();
        let h = qcomplex_homology(&QComplex::standard_sphere(&f, r).unwrap()).unwrap();
        let top = r as i64 - 1;
        let expected = (q as u64).pow((r * (r + 1) / 2) as u32);
        let ok = h.rank_at(top) == expected
            && h.degrees.iter().all(|g| g.p == top || g.is_zero())
            && h.torsion_free();
        c.check(
            ok,
            format!(
                "(q,r) = ({q},{r}): rank {} in degree {top}, expected {expected}",
                h.rank_at(top)
            ),
        );
    }
    c.within(start, Duration::from_secs(60));
    c.done()
}

fn criterion_4() -> Outcome {
    let mut c = Checks::new();
    let mut matroids: Vec<(String, QComplex)> = vec![("example".into(), example())];
    for (q, n) in [(2u32, 2usize), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let f = Field::prime(q).unwrap();
        for k in 1..=n {
            let m = QMatroid::uniform(&f, n, k).unwrap();
            matroids.push((
                format!("uniform q={q} n={n} k={k}"),
                m.matroid_complex().unwrap(),
            ));
        }
    }
    for (name, cx) in &matroids {
        c.check(
            cx.is_lex_shellable().unwrap().is_shelling(),
            format!("{name}: lexicographic shelling"),
        );
    }
    for (q, r) in [(2u32, 1usize), (2, 2), (3, 1)] {
        let f = Field::prime(q).unwrap();
        let s = QComplex::standard_sphere(&f, r).unwrap();
        c.check(
            chain_order_shells(&s).unwrap(),
            format!("sphere q={q} r={r}: chain order shells"),
        );
    }
    for (name, cx) in &matroids {
        let cx = cx.lex_sorted();
        if cx.is_lex_shellable().unwrap().is_shelling() {
            c.check(
                chain_order_shells(&cx).unwrap(),
                format!("{name}: chain order shells"),
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let codim1 = [
        ("S_2^2", QComplex::standard_sphere(&f2(), 2).unwrap()),
        (
            "S_3^1",
            QComplex::standard_sphere(&Field::prime(3).unwrap(), 1).unwrap(),
        ),
        ("S_2^3", QComplex::standard_sphere(&f2(), 3).unwrap()),
    ];
    for (name, cx) in codim1 {
        let mut order: Vec<usize> = (0..cx.facets().len()).collect();
        for trial in 0..20 {
            order.shuffle(&mut rng);
            c.check(
                cx.is_shelling(&order).unwrap().is_shelling(),
                format!("{name}: random order {trial} shells"),
            );
        }
    }
    c.done()
}

/// Sorts by `cmp` and checks that every pair of positions compares
/// consistently with the sorted order, which makes `cmp` a strict total
/// order on `items`.
fn is_total_order<T>(items: &mut [T], cmp: impl Fn(&T, &T) -> Ordering) -> bool {
    items.sort_by(&cmp);
    (0..items.len()).all(|i| {
        cmp(&items[i], &items[i]) == Ordering::Equal
            && (i + 1..items.len()).all(|j| {
                cmp(&items[i], &items[j]) == Ordering::Less
                    && cmp(&items[j], &items[i]) == Ordering::Greater
            })
    })
}

fn criterion_5() -> Outcome {
    let mut c = Checks::new();
    let f3 = Field::prime(3).unwrap();
    for (f, n, k, count) in [(f2(), 4usize, 3usize, 15usize), (f3.clone(), 3, 2, 13)] {
        let mut g = enumerate_grassmannian(&f, n, k).unwrap();
        c.check(
            g.len() == count,
            format!("G_{k}({}^{n}) has {count} elements", f),
        );
        c.check(
            is_total_order(&mut g, |a, b| cmp_q(&f, a, b).unwrap()),
            format!("cmp_q is a total order on G_{k}({}^{n})", f),
        );
    }
    let f = f2();
    let uniform = QComplex::uniform(&f, 4, 3).unwrap();
    let mut chains: Vec<Chain> = uniform
        .facets()
        .iter()
        .flat_map(|t| complete_flags(&f, t).unwrap())
        .collect();
    c.check(
        chains.len() == 15 * 21,
        format!("{} complete chains", chains.len()),
    );
    c.check(
        is_total_order(&mut chains, |a, b| cmp_l(&f, a, b).unwrap()),
        "cmp_l is a total order on the chains",
    );
    c.done()
}

fn criterion_6() -> Outcome {
    let mut c = Checks::new();
    let f = f2();
    let top = Subspace::full(3);
    let flags = complete_flags(&f, &top).unwrap();
    let mut replacements = 0;
    for chain in &flags {
        for i in 1..chain.len() - 1 {
            let s = chain.spaces();
            for a in enumerate_between(&f, &s[i - 1], &s[i + 1], s[i].dim()).unwrap() {
                if a == s[i] {
                    continue;
                }
                replacements += 1;
                let r = replace_at(&f, chain, &a, i).unwrap();
                c.check(
                    r.overlap(chain) == chain.len() - 1,
                    "replacement overlap is len - 1",
                );
                if cmp_q(&f, &a, &s[i]).unwrap() == Ordering::Less {
                    c.check(
                        cmp_l(&f, &r, chain).unwrap() == Ordering::Less,
                        "smaller replacement gives a smaller chain",
                    );
                }
            }
        }
    }
    c.info(format!(
        "{} flags of F_2^3, {replacements} replacements",
        flags.len()
    ));

    let all = enumerate_all_subspaces(&f, 4).unwrap();
    let mut pairs = 0;
    for v in &all {
        for w in &all {
            if w.dim() < v.dim() + 2 || !w.contains(&f, v).unwrap() {
                continue;
            }
            pairs += 1;
            let (chain, minima) = greedy_min_refinement_with_minima(&f, v, w).unwrap();
            let increasing = minima
                .windows(2)
                .all(|p| f.vec_cmp(&p[0], &p[1]).unwrap() == Ordering::Less);
            c.check(
                increasing,
                format!("greedy minima increase from {v} to {w}"),
            );
            for i in 1..chain.len() - 1 {
                c.check(
                    is_locally_min_by_enumeration(&f, &chain, i).unwrap(),
                    format!("greedy refinement of {v} in {w} is locally minimal at {i}"),
                );
            }
        }
    }
    c.info(format!("{pairs} nested pairs of F_2^4"));

    for (q, n) in [(2u32, 3usize), (3, 2)] {
        let f = Field::prime(q).unwrap();
        for chain in complete_flags(&f, &Subspace::full(n)).unwrap() {
            let mut none_min = true;
            for i in 1..chain.len() - 1 {
                let by_enum = is_locally_min_by_enumeration(&f, &chain, i).unwrap();
                c.check(
                    by_enum == is_locally_min(&f, &chain, i).unwrap(),
                    "local minimality agrees",
                );
                none_min &= !by_enum;
            }
            c.check(
                none_min == avoids_min_vectors(&chain),
                "no locally minimal position iff the chain avoids minimum vectors",
            );
        }
    }
    c.done()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::new();
    let f = f2();
    let cases = [
        (
            "uniform q=2 k=2 n=3",
            QComplex::uniform(&f, 3, 2).unwrap(),
            8u64,
        ),
        (
            "uniform q=2 k=3 n=4",
            QComplex::uniform(&f, 4, 3).unwrap(),
            64,
        ),
        ("example", example(), 56),
    ];
    for (name, cx, expected) in cases {
        let r = mayer_vietoris_stage_check(&cx, &cx.lex_order()).unwrap();
        let stages_ok = r
            .stages
            .iter()
            .all(|s| s.identity_holds && s.intersection_concentrated && s.torsion_free);
        let top = r.final_ranks.last().copied().unwrap_or(0);
        c.check(
            r.ok && stages_ok
                && r.stages.len() + 1 == cx.facets().len()
                && top == expected
                && r.accumulated == expected,
            format!(
                "{name}: {} stages, final rank {top}, accumulated {}",
                r.stages.len(),
                r.accumulated
            ),
        );
    }
    c.within(start, Duration::from_secs(180));
    c.done()
}

fn criterion_8() -> Outcome {
    let mut c = Checks::new();
    match non_matroid_witness(&example()) {
        Some(w) => {
            let mut lengths = w.chain_lengths();
            lengths.sort_unstable();
            c.check(
                w.vertices.len() == 4,
                format!("{} vertices", w.vertices.len()),
            );
            c.check(
                lengths == vec![2, 3],
                format!("maximal chain lengths {lengths:?}"),
            );
        }
        None => c.check(false, "no witness found"),
    }
    c.done()
}

fn main() {
    let criteria: [(u8, &str, fn() -> Outcome); 8] = [
        (1, "worked example end to end", criterion_1),
        (2, "uniform counts", criterion_2),
        (3, "q-sphere homology", criterion_3),
        (4, "shellability checks", criterion_4),
        (5, "total orders", criterion_5),
        (
            6,
            "replacement, greedy refinement and local minimality",
            criterion_6,
        ),
        (7, "Mayer-Vietoris stages", criterion_7),
        (8, "non-matroid witness", criterion_8),
    ];
    let mut failing = BTreeSet::new();
    for (id, title, run) in criteria {
        let start = Instant::now();
        let out = run();
        let t = start.elapsed();
        println!(
            "{} {id}: {title} ({:.2?})",
            if out.pass { "PASS" } else { "FAIL" },
            t
        );
        for n in &out.notes {
            println!("    {n}");
        }
        if !out.pass {
            if let Some((_, why)) = KNOWN_FAILURES.iter().find(|(k, _)| *k == id) {
                println!("    known failure: {why}");
            }
            failing.insert(id);
        }
    }
    let known: BTreeSet<u8> = KNOWN_FAILURES.iter().map(|(k, _)| *k).collect();
    println!("failing: {failing:?}, known: {known:?}");
    if failing != known {
        println!("acceptance result differs from the known failures");
        std::process::exit(1);
    }
}
