// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::f64::consts::PI;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toeplitz_schur::polyring::MultiPoly;
use toeplitz_schur::recurrence::recurrence_residual;
use toeplitz_schur::recurrence::verify_recurrence;
use toeplitz_schur::schur::schur_jacobi_trudi;
use toeplitz_schur::shapes::{MinorSpec, Partition, SkewShape};
use toeplitz_schur::spectra::{finite_section_spectrum, limit_set_scan, poly_roots, GridSpec};
use toeplitz_schur::tableaux::schur_by_tableaux;
use toeplitz_schur::toeplitz::{
    build_minor_numeric, det_numeric, verify_minor_schur, BandedSymbol,
};
use toeplitz_schur::widom::{widom_modified, widom_original, RootData};

/// Largest row/column index used when sweeping minor specs.
const SWEEP_MAX_ENTRY: usize = 5;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn x(i: usize) -> MultiPoly {
    MultiPoly::variable(3, i).unwrap()
}

// x1³+x2³+x3³ + 2·(x_i² x_j, i ≠ j) + 3 x1x2x3, assembled term by term
fn skew_example_poly() -> MultiPoly {
    let mut p = MultiPoly::zero(3);
    for i in 0..3 {
        p = &p + &x(i).pow(3);
        for j in (0..3).filter(|&j| j != i) {
            p = &p + &(&x(i).pow(2) * &x(j)).scale(&2.into());
        }
    }
    &p + &(&(&x(0) * &x(1)) * &x(2)).scale(&3.into())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let shape = SkewShape::new(
        Partition::parse("4,2,1").unwrap(),
        Partition::parse("2,2").unwrap(),
    )
    .unwrap();
    let tab = schur_by_tableaux(&shape, 3);
    let jt = schur_jacobi_trudi(&shape, 3);
    let elapsed = start.elapsed();
    let want = skew_example_poly();
    outcome(
        tab == want && jt == want && elapsed < Duration::from_secs(1),
        format!(
            "tableaux ok: {}, jacobi-trudi ok: {}, {:.3} s",
            tab == want,
            jt == want,
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let shapes = SkewShape::all_in_box(4, 4);
    let mut mismatches = Vec::new();
    for shape in &shapes {
        for n in 2..=4 {
            if schur_by_tableaux(shape, n) != schur_jacobi_trudi(shape, n) {
                mismatches.push(format!("{shape} n={n}"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches.is_empty() && elapsed < Duration::from_secs(300),
        format!(
            "{} shapes × 3 variable counts, {} mismatches {:?}, {:.2} s",
            shapes.len(),
            mismatches.len(),
            mismatches.iter().take(3).collect::<Vec<_>>(),
            elapsed.as_secs_f64()
        ),
    )
}

fn sweep_specs() -> Vec<MinorSpec> {
    (1..=4)
        .flat_map(|n| MinorSpec::all_valid(n, 2, 3, SWEEP_MAX_ENTRY))
        .collect()
}

fn criterion_3() -> Outcome {
    let specs = sweep_specs();
    let mut checked = 0;
    let mut failures = Vec::new();
    for spec in &specs {
        for k in spec.min_k()..=spec.min_k() + 4 {
            let check = verify_minor_schur(spec, k).unwrap();
            // third, independent evaluation of the same polynomial
            let tab = schur_by_tableaux(&spec.shape(k).unwrap(), spec.n());
            if !check.holds || !check.residual.is_zero() || tab != check.det {
                failures.push(format!("{spec} k={k}"));
            }
            checked += 1;
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} specs (entries ≤ {SWEEP_MAX_ENTRY}), {checked} minors, {} failures {:?}",
            specs.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn criterion_4() -> Outcome {
    let specs = sweep_specs();
    let mut failures = Vec::new();
    for spec in &specs {
        let report = verify_recurrence(spec, spec.min_k() + 4);
        if !report.all_zero {
            failures.push(format!("{spec} j={:?}", report.first_failure));
        }
    }
    let boundary = MinorSpec::new(vec![], vec![2], 2).unwrap();
    let r0 = recurrence_residual(&boundary, 0);
    let r1 = recurrence_residual(&boundary, 1);
    let x1x2 = MultiPoly::from_terms(2, [(vec![1, 1], 1)]).unwrap();
    let boundary_ok = !r0.is_zero() && r0 == x1x2 && r1.is_zero();
    outcome(
        failures.is_empty() && boundary_ok,
        format!(
            "{} specs, j = min_k..min_k+4, {} failures {:?}; boundary j=0 residual {r0}, j=1 residual {r1}",
            specs.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn separated_roots(rng: &mut ChaCha8Rng, n: usize, sep: f64) -> Vec<Complex64> {
    loop {
        let xs: Vec<Complex64> = (0..n)
            .map(|_| Complex64::from_polar(rng.gen_range(0.5..1.5), rng.gen_range(0.0..2.0 * PI)))
            .collect();
        if (0..n).all(|i| (i + 1..n).all(|j| (xs[i] - xs[j]).norm() >= sep)) {
            return xs;
        }
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut worst_det, mut worst_pair) = (0.0f64, 0.0f64);
    let mut cases = 0;
    for n in 2..=5 {
        for _ in 0..20 {
            let chi = RootData::chi(separated_roots(&mut rng, n, 0.1)).unwrap();
            let psi = chi.converted();
            let sym = chi.symbol();
            for c in 1..n {
                let spec = MinorSpec::leading(c, n).unwrap();
                for k in 1..=30u32 {
                    let det = det_numeric(&build_minor_numeric(&sym, &spec, k as usize).unwrap());
                    let m = widom_modified(&chi, c, k).unwrap();
                    let o = widom_original(&psi, chi.s_n(), c, k).unwrap();
                    worst_det = worst_det
                        .max((m - det).norm() / det.norm())
                        .max((o - det).norm() / det.norm());
                    worst_pair = worst_pair.max((o - m).norm() / m.norm());
                    cases += 1;
                }
            }
        }
    }
    outcome(
        worst_det <= 1e-8 && worst_pair <= 1e-9,
        format!("{cases} cases, max |widom - det|/|det| = {worst_det:.2e}, max original vs modified = {worst_pair:.2e}"),
    )
}

fn criterion_6() -> Outcome {
    let mut worst = 0.0f64;
    let mut engines_agree = true;
    for j in 0..=20u32 {
        let shape = SkewShape::straight(Partition::new(vec![j]).unwrap());
        let s = schur_by_tableaux(&shape, 2);
        engines_agree &= s == schur_jacobi_trudi(&shape, 2);
        for i in 0..19 {
            let xv = -0.9 + 0.1 * i as f64;
            let root = Complex64::new(xv * xv - 1.0, 0.0).sqrt();
            let value = s.evaluate(&[xv - root, xv + root]).unwrap();
            let (mut prev, mut cur) = (1.0, 2.0 * xv);
            let u = if j == 0 {
                1.0
            } else {
                for _ in 1..j {
                    (prev, cur) = (cur, 2.0 * xv * cur - prev);
                }
                cur
            };
            worst = worst.max((value - u).norm());
        }
    }
    outcome(
        worst <= 1e-9 && engines_agree,
        format!(
            "j ≤ 20 at 19 points, max |S_(j) - U_j| = {worst:.2e}, engines agree: {engines_agree}"
        ),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let sym = BandedSymbol::from_real(&[1.0, 0.0, 1.0]).unwrap();
    let grid = GridSpec::parse("-3,3,-1,1,241,81").unwrap();
    let report = limit_set_scan(&sym, 1, &grid, 0.02).unwrap();
    let seg_dist = |h: &toeplitz_schur::spectra::Hit| {
        let re = h.re.clamp(-2.0, 2.0);
        Complex64::new(h.re - re, h.im).norm()
    };
    let worst_hit = report.hits.iter().map(seg_dist).fold(0.0, f64::max);
    let spectrum = finite_section_spectrum(&sym, &MinorSpec::leading(1, 2).unwrap(), 50).unwrap();
    let pitch = grid.pitch();
    let mut worst_eig = 0.0f64;
    let mut worst_closed = 0.0f64;
    for (idx, z) in spectrum.eigenvalues.iter().enumerate() {
        let d = report
            .hits
            .iter()
            .map(|h| (h.v() - z).norm())
            .fold(f64::INFINITY, f64::min);
        worst_eig = worst_eig.max(d);
        // ascending order: 2cos(mπ/51) for m = 50 down to 1
        let exact = 2.0 * ((50 - idx) as f64 * PI / 51.0).cos();
        worst_closed = worst_closed.max((z - exact).norm());
    }
    let elapsed = start.elapsed();
    outcome(
        !report.hits.is_empty()
            && report.failures.is_empty()
            && worst_hit <= 2e-2
            && worst_eig <= pitch
            && worst_closed < 1e-8
            && elapsed < Duration::from_secs(30),
        format!(
            "{} hits, max distance to [-2,2] {worst_hit:.2e}, max eigenvalue-to-hit {worst_eig:.2e} (pitch {pitch}), \
             eigenvalues vs 2cos(mπ/51) {worst_closed:.1e}, {:.2} s",
            report.hits.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for m in 1..=10 {
        p.insert(0, Complex64::new(0.0, 0.0));
        for i in 0..p.len() - 1 {
            let next = p[i + 1];
            p[i] -= m as f64 * next;
        }
    }
    let norm: f64 = p.iter().map(|a| a.norm()).sum();
    let roots = poly_roots(&p).unwrap();
    let mut want: Vec<f64> = (1..=10).map(f64::from).collect();
    let mut worst_rel = 0.0f64;
    for z in &roots {
        let (j, _) = want
            .iter()
            .enumerate()
            .min_by(|a, b| (z - a.1).norm().total_cmp(&(z - b.1).norm()))
            .unwrap();
        worst_rel = worst_rel.max((z - want[j]).norm() / want[j]);
        want.remove(j);
    }
    let worst_res = roots
        .iter()
        .map(|z| {
            p.iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
                .norm()
        })
        .fold(0.0, f64::max);
    outcome(
        roots.len() == 10 && want.is_empty() && worst_rel <= 1e-8 && worst_res <= 1e-10 * norm,
        format!(
            "max relative error {worst_rel:.2e}, max |p(z)| {worst_res:.2e} vs 1e-10·‖p‖₁ = {:.2e}",
            1e-10 * norm
        ),
    )
}

fn run_bin(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_tschur"))
        .args(args)
        .output()
        .expect("spawn tschur");
    (out.status.code(), out.stdout)
}

fn criterion_9() -> Outcome {
    let invocations: [&[&str]; 5] = [
        &[
            "schur", "--outer", "4,2,1", "--inner", "2,2", "--nvars", "3", "--method", "both",
        ],
        &[
            "recurrence",
            "--nvars",
            "2",
            "--alpha",
            "",
            "--beta",
            "2",
            "--jmax",
            "3",
        ],
        &[
            "limitset",
            "--symbol",
            "1,0,1",
            "--c",
            "1",
            "--grid",
            "-3,3,-1,1,241,81",
            "--tol",
            "0.02",
            "--format",
            "csv",
        ],
        &[
            "limitset",
            "--symbol",
            "1,0,1",
            "--c",
            "1",
            "--grid",
            "-3,3,-1,1,241,81",
            "--tol",
            "0.02",
            "--format",
            "json",
        ],
        &[
            "limitset",
            "--symbol",
            "1,0,1",
            "--c",
            "1",
            "--grid",
            "-3,3,-1,1,241,81",
            "--tol",
            "0.02",
            "--format",
            "csv",
            "--threads",
            "3",
        ],
    ];
    let mut outputs = Vec::new();
    let mut ok = true;
    for args in invocations {
        let first = run_bin(args);
        let second = run_bin(args);
        ok &= first.0 == Some(0) && first == second && !first.1.is_empty();
        outputs.push(first.1);
    }
    // thread count must not change the bytes either
    ok &= outputs[2] == outputs[4];
    outcome(
        ok,
        format!(
            "{} invocations run twice each, byte-identical: {ok}",
            invocations.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("skew example from both engines", criterion_1),
        ("tableaux ≡ Jacobi–Trudi in the 4×4 box", criterion_2),
        ("minor determinants are skew Schur polynomials", criterion_3),
        ("linear recurrence and boundary example", criterion_4),
        ("Widom's formula against LU determinants", criterion_5),
        ("Chebyshev polynomials of the second kind", criterion_6),
        ("tridiagonal limit set and k=50 spectrum", criterion_7),
        ("root finder on the degree-10 product", criterion_8),
        ("deterministic CLI output", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!(
            "{tag} criterion {}: {name} ({}; {:.2} s)",
            i + 1,
            result.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!result.pass);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
