//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach the output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rphp::atlas::{atlas_build, Atlas, AtlasConfig};
use rphp::bridges::{
    builtin_family, digit_family, family_to_mols, family_to_rbibd, mols_to_family, rbibd_to_family,
    BuiltinFamilyId,
};
use rphp::designs::{
    gf_of_order, kirkman_system, mols_from_field, one_factorization, verify_design, verify_mols,
    ResolvableDesign,
};
use rphp::jumps::{
    acc_impossibility_scan, auc_impossibility_scan, check_acc_witness, check_ck_tree, stored_c3_tree,
};
use rphp::php::{
    choose2, is_disjoint_family, max_k_upper_bound, min_solution_count, php_problem,
    verify_reduction_witness, ColorFunction, PhpShape,
};
use rphp::search::{
    decide_reduction, exhaustive_max_disjoint_family, family_upper_bound, max_disjoint_family,
    Decision, SearchBudget, SearchStatus,
};

type Check = Result<String, String>;

fn shape(m: usize, n: usize) -> Result<PhpShape, String> {
    PhpShape::new(m, n).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit_secs: u64) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent <= Duration::from_secs(limit_secs), || {
        format!("took {spent:.1?}, limit {limit_secs}s")
    })
}

fn settled(atlas: &Atlas, m: usize, n: usize) -> Result<usize, String> {
    let e = atlas.entry(m, n).ok_or_else(|| format!("no atlas entry ({m},{n})"))?;
    ensure(e.is_settled(), || format!("({m},{n}) is {}", e.status.as_str()))?;
    Ok(e.max_k)
}

fn summary_chain() -> Check {
    let start = Instant::now();
    let atlas = atlas_build(&AtlasConfig::default()).map_err(|e| e.to_string())?;
    let mut seen = Vec::new();
    for n in 3..=5 {
        let top = choose2(n + 1);
        let row = [
            settled(&atlas, n + 1, n)?,
            settled(&atlas, n + 2, n)?,
            settled(&atlas, 2 * n, n)?,
            settled(&atlas, 2 * n + 1, n)?,
            settled(&atlas, n * n, n)?,
            settled(&atlas, n * n + 1, n)?,
        ];
        ensure(row[0] == top, || format!("maxK({},{n}) = {} != {top}", n + 1, row[0]))?;
        ensure(row[1] < top, || format!("maxK({},{n}) = {} not below {top}", n + 2, row[1]))?;
        ensure(row[2] == 2 * n - 1, || format!("maxK({},{n}) = {}", 2 * n, row[2]))?;
        ensure(row[3] < 2 * n - 1, || format!("maxK({},{n}) = {}", 2 * n + 1, row[3]))?;
        ensure(row[4] == n + 1, || format!("maxK({},{n}) = {}", n * n, row[4]))?;
        ensure(row[5] == 1, || format!("maxK({},{n}) = {}", n * n + 1, row[5]))?;
        seen.push(format!("n={n}: {row:?}"));
    }
    within(start, 600)?;
    Ok(format!("{} in {:.2?}", seen.join("; "), start.elapsed()))
}

fn explicit_families() -> Check {
    let mut notes = Vec::new();
    for (id, k) in [
        (BuiltinFamilyId::WarmupFourTwoThree, 3),
        (BuiltinFamilyId::NineFourSix, 6),
        (BuiltinFamilyId::SevenFiveTen, 10),
    ] {
        let start = Instant::now();
        let fam = builtin_family(id).map_err(|e| e.to_string())?;
        is_disjoint_family(&fam).map_err(|e| format!("{id}: {e}"))?;
        ensure(fam.len() == k, || format!("{id} has {} members", fam.len()))?;
        let out = exhaustive_max_disjoint_family(fam.shape(), &SearchBudget::secs(300.0))
            .map_err(|e| e.to_string())?;
        ensure(out.status == SearchStatus::Exact && out.value == k, || {
            format!("{id}: search gave {} ({})", out.value, out.status.as_str())
        })?;
        within(start, 300)?;
        notes.push(format!("{id} k={k} maximal ({:.1?})", start.elapsed()));
    }
    Ok(notes.join("; "))
}

fn mols_pipeline() -> Check {
    let start = Instant::now();
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let squares = mols_from_field(&gf_of_order(q).map_err(|e| e.to_string())?);
        ensure(squares.len() == q - 1, || format!("order {q}: {} squares", squares.len()))?;
        verify_mols(&squares)
            .map_err(|e| e.to_string())?
            .map_err(|v| format!("order {q}: {v}"))?;
        let fam = mols_to_family(q, &squares).map_err(|e| e.to_string())?;
        ensure(fam.is_disjoint() && fam.len() == q + 1, || format!("order {q}: family of {}", fam.len()))?;
        let bound = max_k_upper_bound(shape(q * q, q)?);
        ensure(bound == q + 1, || format!("order {q}: counting bound {bound}"))?;
    }
    within(start, 60)?;
    Ok(format!("q in {{2,3,4,5,7,8,9}}: q-1 MOLS, q+1 = bound ({:.1?})", start.elapsed()))
}

fn rbibd_pipeline() -> Check {
    let start = Instant::now();
    for n in 2..=8 {
        let d = ResolvableDesign::from_one_factorization(&one_factorization(2 * n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        verify_design(&d).map_err(|v| format!("K_{}: {v}", 2 * n))?;
        let fam = rbibd_to_family(&d).map_err(|e| e.to_string())?;
        let bound = max_k_upper_bound(shape(2 * n, n)?);
        ensure(fam.is_disjoint() && fam.len() == 2 * n - 1 && bound == 2 * n - 1, || {
            format!("K_{}: family {} bound {bound}", 2 * n, fam.len())
        })?;
    }
    for v in [9, 15] {
        let n = v / 3;
        let d = kirkman_system(v).map_err(|e| e.to_string())?;
        verify_design(&d).map_err(|e| format!("KTS({v}): {e}"))?;
        let fam = rbibd_to_family(&d).map_err(|e| e.to_string())?;
        let bound = max_k_upper_bound(shape(v, n)?);
        ensure(fam.is_disjoint() && fam.len() == (3 * n - 1) / 2 && bound == fam.len(), || {
            format!("KTS({v}): family {} bound {bound}", fam.len())
        })?;
    }
    within(start, 60)?;
    Ok(format!("K_4..K_16 and KTS(9), KTS(15) meet the bound ({:.1?})", start.elapsed()))
}

fn machine_separation() -> Check {
    let start = Instant::now();
    let p52 = php_problem(shape(5, 2)?).map_err(|e| e.to_string())?;
    let p62 = php_problem(shape(6, 2)?).map_err(|e| e.to_string())?;
    let down = decide_reduction(&p52, &p62, &SearchBudget::secs(1800.0)).map_err(|e| e.to_string())?;
    let Decision::No(digest) = down else {
        return Err(format!("(5,2) <= (6,2) answered {}", down.label()));
    };
    let forward_time = start.elapsed();
    let t = Instant::now();
    let up = decide_reduction(&p62, &p52, &SearchBudget::secs(1800.0)).map_err(|e| e.to_string())?;
    let reverse_time = t.elapsed();
    let Decision::Yes(w) = up else {
        return Err(format!("(6,2) <= (5,2) answered {}", up.label()));
    };
    verify_reduction_witness(&p62, &p52, &w).map_err(|e| e.to_string())?;
    ensure(reverse_time < Duration::from_secs(1), || format!("reverse took {reverse_time:?}"))?;
    Ok(format!(
        "(5,2) -> (6,2): no after {} nodes in {forward_time:.1?}; (6,2) -> (5,2): restriction witness in {reverse_time:.1?}",
        digest.nodes
    ))
}

fn jump_witnesses() -> Check {
    let start = Instant::now();
    check_ck_tree(&stored_c3_tree(), false).map_err(|v| format!("C_3 tree: {v}"))?;
    let mut checked = 0;
    for n in 2usize..=8 {
        for k in 2usize.. {
            let m = n.pow(k as u32 + 1);
            if m > 512 {
                break;
            }
            let fam = digit_family(n, k + 1).map_err(|e| e.to_string())?;
            check_acc_witness(fam.functions())
                .map_err(|e| e.to_string())?
                .map_err(|p| format!("digits n={n} k={k} share {p}"))?;
            checked += 1;
        }
    }
    let acc = acc_impossibility_scan(2, 2).map_err(|e| e.to_string())?;
    ensure(acc.is_no(), || format!("ACC_2 scan on (9,2): {}", acc.label()))?;
    let auc = auc_impossibility_scan(2, 4).map_err(|e| e.to_string())?;
    ensure(auc.is_no(), || format!("AUC_4 scan on (5,2): {}", auc.label()))?;
    within(start, 600)?;
    Ok(format!(
        "C_3 tree accepted; {checked} digit families; no ACC_2 on (9,2), no AUC_4 on (5,2) ({:.1?})",
        start.elapsed()
    ))
}

fn property_suites() -> Check {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut functions = 0u64;
    for n in 2..=4usize {
        for m in n + 1..=8usize {
            let s = shape(m, n)?;
            let bound = min_solution_count(s);
            let (lo, hi) = (m / n, m.div_ceil(n));
            for code in 0..(n as u128).pow(m as u32) {
                let f = ColorFunction::from_code(s, code).map_err(|e| e.to_string())?;
                let sols = f.solutions().len();
                let balanced = f.fiber_sizes().iter().all(|&c| c == lo || c == hi);
                if sols < bound || (sols == bound) != balanced {
                    violations.push(format!("Turán at {f} on {s}"));
                }
                functions += 1;
            }
        }
    }
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let squares = mols_from_field(&gf_of_order(q).map_err(|e| e.to_string())?);
        let fam = mols_to_family(q, &squares).map_err(|e| e.to_string())?;
        if family_to_mols(&fam).map_err(|e| e.to_string())? != squares {
            violations.push(format!("MOLS round trip at {q}"));
        }
    }
    let mut designs = Vec::new();
    for n in 2..=8 {
        let d = ResolvableDesign::from_one_factorization(&one_factorization(2 * n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        designs.push((d, 2));
    }
    designs.push((kirkman_system(9).map_err(|e| e.to_string())?, 3));
    designs.push((kirkman_system(15).map_err(|e| e.to_string())?, 3));
    for (d, q) in designs {
        let fam = rbibd_to_family(&d).map_err(|e| e.to_string())?;
        let back = family_to_rbibd(&fam, q).map_err(|e| e.to_string())?;
        if back.normalized() != d.clone().normalized() {
            violations.push(format!("RBIBD round trip at v={}", d.v));
        }
    }
    let budget = SearchBudget::secs(120.0);
    for n in 2..=4usize {
        let mut prev = usize::MAX;
        for m in n + 1..=n * n + 1 {
            let s = shape(m, n)?;
            let out = max_disjoint_family(s, &budget).map_err(|e| e.to_string())?;
            if out.value > out.upper || out.upper > family_upper_bound(s) || !out.witness.is_disjoint() {
                violations.push(format!("bracketing at {s}"));
            }
            if out.value > prev {
                violations.push(format!("monotonicity at {s}"));
            }
            prev = out.value;
        }
    }
    if !violations.is_empty() {
        return Err(format!("{} violations, first: {}", violations.len(), violations[0]));
    }
    Ok(format!("0 violations; {functions} functions checked ({:.1?})", start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("summary chain via atlas", summary_chain),
        ("explicit families certified", explicit_families),
        ("MOLS / affine pipeline", mols_pipeline),
        ("RBIBD pipeline", rbibd_pipeline),
        ("machine separation (5,2) vs (6,2)", machine_separation),
        ("jump witness suite", jump_witnesses),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
