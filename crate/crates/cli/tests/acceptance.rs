//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Run with `cargo test -p orbit-rank --test acceptance`.

#[path = "../../core/tests/common/mod.rs"]
mod oracles;

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use orbit_rank::analyze::{analyze, catalog_algebra, AnalyzeOptions};
use orbit_rank::filtration_format::parse_filtration_text;
use orbit_rank_core::coadjoint::{
    estimate_open_orbit_components, has_open_orbits, orbit_data_at, p_polynomial, CoadjointPoint,
};
use orbit_rank_core::inference::{derive_group_filtration, infer, Interval};
use orbit_rank_core::invariants::{
    projection_verdict, real_rank, rr_upper_bound_nonsimply_connected, stable_rank,
    EstimatorParams, GroupFlags, ProjectionStatus, Refusal,
};
use orbit_rank_core::lie::{exponentiality_check, ExponentialityStatus};
use orbit_rank_core::linalg::{int, rat, sturm_root_count, sym_pfaffian, MPoly, PolyMatrix};
use orbit_rank_core::{LieAlgebra, Mat, Rat, UPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn algebra(spec: &str) -> LieAlgebra {
    catalog_algebra(spec).expect("catalog spec")
}

fn screened_flags(l: &LieAlgebra) -> GroupFlags {
    GroupFlags::new(exponentiality_check(l, 0, 50))
}

/// `(catalog spec, real rank, stable rank)`.
const GOLDEN: [(&str, usize, usize); 8] = [
    ("abelian:1", 1, 1),
    ("axb", 1, 2),
    ("heisenberg:1", 2, 2),
    ("heisenberg:2", 4, 3),
    ("filiform:4", 2, 2),
    ("grelaud:1", 1, 2),
    ("abelian:3", 3, 2),
    ("axb+axb", 2, 2),
];

fn golden_table() -> Check {
    let start = Instant::now();
    for (spec, rr, tsr) in GOLDEN {
        let l = algebra(spec);
        let flags = screened_flags(&l);
        let got = (
            real_rank(&l, &flags).map_err(|e| format!("{spec}: {e}"))?,
            stable_rank(&l, &flags).map_err(|e| format!("{spec}: {e}"))?,
        );
        ensure(got == (rr, tsr), || format!("{spec}: got {got:?}, expected ({rr}, {tsr})"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{} entries exact in {elapsed:.2?}", GOLDEN.len()))
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=6))
}

fn pfaffian_property() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [2usize, 4, 6, 8] {
        for trial in 0..1000 {
            let mut m = vec![vec![Rat::zero(); n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let v = random_rat(&mut rng);
                    m[j][i] = -v.clone();
                    m[i][j] = v;
                }
            }
            let poly = PolyMatrix::from_rows(
                0,
                m.iter()
                    .map(|row| row.iter().map(|x| MPoly::constant(0, x.clone())).collect())
                    .collect(),
            )
            .expect("square");
            let pf = sym_pfaffian(&poly).expect("skew").eval(&[]).expect("constant");
            let det = Mat::from_rows(n, &m).expect("square").det().expect("square");
            ensure(&pf * &pf == det, || format!("n = {n}, trial {trial}: Pf^2 = {} but det = {det}", &pf * &pf))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("4000 matrices in {elapsed:.2?}"))
}

/// Odd-dimensional valid algebras: `ℝ ⋉ ℝ^{2k}` and two-step nilpotent ones,
/// each in a random basis.
fn random_odd_algebra(rng: &mut ChaCha8Rng) -> LieAlgebra {
    let base = if rng.gen_bool(0.5) {
        let k = 2 * rng.gen_range(1..=2);
        let d: Vec<Vec<i64>> = (0..k).map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        oracles::semidirect(&d)
    } else {
        let (p, q) = *[(2, 1), (3, 2), (4, 1), (2, 3)]
            .get(rng.gen_range(0..4))
            .expect("in range");
        let coeffs: Vec<i64> = (0..12).map(|_| rng.gen_range(-2..=2)).collect();
        oracles::two_step(p, q, &coeffs)
    };
    let entries: Vec<i64> = (0..base.dim() * base.dim()).map(|_| rng.gen_range(-2..=2)).collect();
    base.change_basis(&oracles::random_invertible(base.dim(), &entries))
        .expect("invertible")
}

fn odd_dimension_vanishing() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    let catalog = oracles::catalog_algebras();
    let random = (0..100).map(|i| (format!("random #{i}"), random_odd_algebra(&mut rng)));
    for (label, l) in catalog.into_iter().chain(random.collect::<Vec<_>>()) {
        if l.dim() % 2 == 0 {
            continue;
        }
        ensure(oracles::jacobi_oracle(&oracles::structure_tensor(&l)).is_none(), || format!("{label} is not a Lie algebra"))?;
        ensure(p_polynomial(&l).is_zero(), || format!("{label}: P is not identically zero"))?;
        checked += 1;
    }
    ensure(checked >= 100, || format!("only {checked} odd-dimensional algebras"))?;
    Ok(format!("P = 0 on {checked} odd-dimensional algebras"))
}

fn axb_suite() -> Check {
    let axb = algebra("axb");
    let p = p_polynomial(&axb).render(&["xi_X".to_string(), "xi_Y".to_string()]);
    ensure(p == "xi_Y^2", || format!("P rendered as {p}"))?;
    ensure(has_open_orbits(&axb), || "no open orbits".into())?;
    let point = CoadjointPoint::new(&axb, vec![int(0), int(1)]).expect("length 2");
    let data = orbit_data_at(&axb, &point).expect("length 2");
    ensure(data.open && data.isotropy.dim() == 0, || format!("orbit data at (0,1): {data:?}"))?;
    let single = estimate_open_orbit_components(&axb, 200, 0).component_count;
    ensure(single == 2, || format!("axb estimate {single}"))?;
    let sum = algebra("axb+axb");
    let double = estimate_open_orbit_components(&sum, 400, 0).component_count;
    ensure(double == 4, || format!("axb+axb estimate {double}"))?;
    Ok(format!("P = {p}; estimates {single} and {double}"))
}

fn projection_verdicts() -> Check {
    let params = EstimatorParams::default();
    let verdict = |spec: &str| {
        let l = algebra(spec);
        projection_verdict(&l, &screened_flags(&l), params).map_err(|e| format!("{spec}: {e}"))
    };
    for m in 1..=3 {
        let spec = format!("heisenberg:{m}");
        let v = verdict(&spec)?;
        ensure(v.verdict == ProjectionStatus::NoneNilpotent, || format!("{spec}: {v:?}"))?;
    }
    let v = verdict("axb")?;
    ensure(v.verdict == ProjectionStatus::ExistsOpenOrbits, || format!("axb: {v:?}"))?;
    let v = verdict("grelaud:1")?;
    ensure(v.verdict == ProjectionStatus::Unknown && v.gr_equals_j0, || format!("grelaud:1: {v:?}"))?;
    Ok("heisenberg 1..3 none_nilpotent; axb exists_open_orbits; grelaud:1 unknown with Gr = Gr(J0)".into())
}

const EXPONENTIAL_ENTRIES: [&str; 12] = [
    "abelian:1",
    "abelian:2",
    "abelian:3",
    "axb",
    "heisenberg:1",
    "heisenberg:2",
    "filiform:3",
    "filiform:4",
    "filiform:5",
    "grelaud:1",
    "grelaud:-1/2",
    "axb+axb",
];

fn exponentiality_screen() -> Check {
    for spec in ["oscillator", "e2"] {
        let v = exponentiality_check(&algebra(spec), 0, 50);
        ensure(v.status == ExponentialityStatus::CertifiedNo, || format!("{spec}: {:?}", v.status))?;
        let witness = v.witness.ok_or_else(|| format!("{spec}: no witness"))?;
        ensure(witness.iter().any(|c| !c.is_zero()), || format!("{spec}: zero witness"))?;
    }
    for spec in EXPONENTIAL_ENTRIES {
        let v = exponentiality_check(&algebra(spec), 0, 50);
        ensure(v.status == ExponentialityStatus::HeuristicYes, || format!("{spec}: {:?}", v.status))?;
    }
    let sl2 = algebra("sl2");
    let refusal = real_rank(&sl2, &screened_flags(&sl2));
    ensure(refusal == Err(Refusal::NotSolvable), || format!("sl2: {refusal:?}"))?;
    Ok(format!("2 refuted with witnesses, {} heuristic_yes, sl2 NotSolvable", EXPONENTIAL_ENTRIES.len()))
}

fn inference_cross_check() -> Check {
    let mut slowest = Duration::ZERO;
    for spec in EXPONENTIAL_ENTRIES {
        let start = Instant::now();
        let l = algebra(spec);
        let flags = screened_flags(&l);
        let rr = real_rank(&l, &flags).map_err(|e| format!("{spec}: {e}"))? as u32;
        let tsr = stable_rank(&l, &flags).map_err(|e| format!("{spec}: {e}"))? as u32;
        let doc = derive_group_filtration(&l, &flags).map_err(|e| format!("{spec}: {e}"))?;
        let table = infer(&doc).map_err(|e| format!("{spec}: {e}"))?;
        let total = table.total();
        ensure(
            total.rr == Interval::exactly(rr) && total.tsr == Interval::exactly(tsr),
            || format!("{spec}: rr {}, tsr {}, closed forms ({rr}, {tsr})", total.rr, total.tsr),
        )?;
        let replayed = table.replay(&doc).map_err(|e| format!("{spec}: replay diverges at {}", e.step))?;
        ensure(replayed.same_facts(&table), || format!("{spec}: replay differs"))?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(1), || format!("{spec}: took {elapsed:?}"))?;
        slowest = slowest.max(elapsed);
    }
    for spec in ["oscillator", "e2", "sl2"] {
        let l = algebra(spec);
        ensure(derive_group_filtration(&l, &screened_flags(&l)).is_err(), || format!("{spec} was accepted"))?;
    }
    Ok(format!(
        "{} accepted entries agree and replay, slowest {slowest:.2?}; 3 refused",
        EXPONENTIAL_ENTRIES.len()
    ))
}

fn fixture_inference() -> Check {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let load = |name: &str| {
        let text = std::fs::read_to_string(dir.join(name)).map_err(|e| format!("{name}: {e}"))?;
        parse_filtration_text(&text).map_err(|e| format!("{name}: {e}"))
    };
    let toeplitz = infer(&load("toeplitz.filt")?).map_err(|e| e.to_string())?;
    ensure(toeplitz.total().rr == Interval::exactly(1), || format!("toeplitz rr {}", toeplitz.total().rr))?;
    let doc = load("special_series.filt")?;
    let top = doc.nodes().last().expect("nonempty").annotation.spectrum_dim.ok_or("no top dimension")?;
    let series = infer(&doc).map_err(|e| e.to_string())?;
    ensure(series.total().rr == Interval::exactly(top), || format!("special series rr {}", series.total().rr))?;
    Ok(format!("toeplitz rr [1, 1]; special series rr [{top}, {top}]"))
}

fn random_poly(rng: &mut ChaCha8Rng) -> UPoly {
    loop {
        let p = if rng.gen_bool(0.5) {
            let degree = rng.gen_range(0..=6);
            UPoly::new((0..=degree).map(|_| random_rat(rng)).collect())
        } else {
            // Rational roots, possibly repeated or on the interval ends.
            let roots = rng.gen_range(1..=6);
            (0..roots).fold(UPoly::constant(int(rng.gen_range(1..=3))), |acc, _| {
                let root = rat(rng.gen_range(-40..=40), rng.gen_range(1..=4)).clamp(int(-10), int(10));
                &acc * &UPoly::linear_factor(&root)
            })
        };
        if !p.is_zero() {
            return p;
        }
    }
}

fn sturm_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (lo, hi) = (int(-10), int(10));
    let mut roots = 0;
    for trial in 0..500 {
        let p = random_poly(&mut rng);
        let sturm = sturm_root_count(&p, &lo, &hi).map_err(|e| e.to_string())?;
        let oracle = oracles::bisection_root_count(p.coeffs(), &lo, &hi);
        ensure(sturm == oracle, || format!("trial {trial}: {p} has {oracle} roots, Sturm says {sturm}"))?;
        roots += sturm;
    }
    Ok(format!("500 polynomials, {roots} roots in total, all counts equal"))
}

fn corollary_bound() -> Check {
    let line = algebra("abelian:1");
    let verdict = exponentiality_check(&line, 0, 50);
    let bound = rr_upper_bound_nonsimply_connected(&line, &verdict).map_err(|e| e.to_string())?;
    ensure(bound.value == 1 && bound.possibly_strict, || format!("{bound:?}"))?;
    let options = AnalyzeOptions {
        simply_connected: false,
        ..AnalyzeOptions::default()
    };
    let report = analyze(&line, &options);
    let inv = report.invariants.ok_or("report has no invariants section")?;
    ensure(
        inv.real_rank_upper_bound == Some(1) && inv.possibly_strict == Some(true),
        || format!("report invariants {inv:?}"),
    )?;
    Ok("bound 1, marked possibly strict (the circle group has real rank 0)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden invariant table", golden_table),
        ("Pfaffian squares to determinant", pfaffian_property),
        ("odd-dimension vanishing of P", odd_dimension_vanishing),
        ("ax+b coadjoint suite", axb_suite),
        ("projection verdicts", projection_verdicts),
        ("exponentiality screen", exponentiality_screen),
        ("inference cross-check", inference_cross_check),
        ("external-fixture inference", fixture_inference),
        ("Sturm sequence against bisection", sturm_oracle),
        ("non-simply-connected bound", corollary_bound),
    ];
    let mut failures = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {title}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
