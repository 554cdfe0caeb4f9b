//! The acceptance suite: ten criteria, each timed and reported pass/fail.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use toric_cobordism::coeff::LawKind;
use toric_cobordism::equivariant::{graded_rank_pp, psi_slice_rank, standard_monomials, EquivariantModel};
use toric_cobordism::fan::Fan;
use toric_cobordism::fgl::FormalGroupLaw;
use toric_cobordism::lattice::Character;
use toric_cobordism::monomial::Monomial;
use toric_cobordism::ordinary::{
    build_presentation, forgetful_check, reduction_system, specialize, GradedRankTable, Specialization,
};
use toric_cobordism::series::GradedSeries;

use crate::fanfile::{bundled, bundled_fans};
use crate::oracle;

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub law: LawKind,
    pub coeff_bound: u32,
    pub seed: u64,
    pub time_limit: Duration,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { law: LawKind::UniversalRational, coeff_bound: 3, seed: 20_240_817, time_limit: Duration::from_secs(10) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

pub const TITLES: [&str; 10] = [
    "projective spaces: ranks, t^(n+1) = 0, unit multiples",
    "affine spaces: rank 1 in degree 0",
    "Chow specialization against brute-force oracle",
    "K-theory total rank equals number of maximal cones",
    "formal group law axioms",
    "Psi: standard monomials, piecewise ranks, independence",
    "products of u classes over minimal non-faces vanish",
    "first Chern class in both models",
    "forgetful consistency in every degree",
    "non-basis character relations reduce to zero",
];

type Check = fn(&SuiteConfig, &mut ChaCha8Rng) -> Result<String, String>;

const CHECKS: [Check; 10] = [
    projective_spaces,
    affine_spaces,
    chow_against_oracle,
    ktheory_totals,
    fgl_axioms,
    psi_isomorphism,
    nonface_products,
    first_chern,
    forgetful,
    character_redundancy,
];

pub fn run_one(id: usize, cfg: &SuiteConfig) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(id as u64));
    let start = Instant::now();
    let outcome = CHECKS[id - 1](cfg, &mut rng);
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    if elapsed > cfg.time_limit {
        passed = false;
        detail = format!("took {:.2} s, limit {} s; {detail}", elapsed.as_secs_f64(), cfg.time_limit.as_secs());
    }
    CheckResult { id, title: TITLES[id - 1], passed, detail, seconds: elapsed.as_secs_f64() }
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<CheckResult> {
    (1..=CHECKS.len()).map(|id| run_one(id, cfg)).collect()
}

pub fn format_line(r: &CheckResult) -> String {
    format!(
        "criterion {:>2}: {} {} ({:.2} s) {}",
        r.id,
        if r.passed { "PASS" } else { "FAIL" },
        r.title,
        r.seconds,
        r.detail
    )
}

pub fn summary(results: &[CheckResult], cfg: &SuiteConfig) -> String {
    let mut s = format!("acceptance suite ({} law, D = {})\n", cfg.law.name(), cfg.coeff_bound);
    for r in results {
        let _ = writeln!(s, "{}", format_line(r));
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(s, "{passed}/{} criteria passed", results.len());
    s
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fan(stem: &str) -> Fan {
    bundled(stem).expect("bundled fan").to_fan().expect("bundled fan is valid")
}

fn all_fans() -> Vec<(String, Fan)> {
    bundled_fans().into_iter().map(|(s, f)| (s, f.to_fan().expect("bundled fan is valid"))).collect()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn projective_spaces(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<String, String> {
    for n in 1..=4usize {
        let p = build_presentation(&fan(&format!("p{n}")), cfg.law, cfg.coeff_bound).map_err(err)?;
        let sys = reduction_system(&p, None).map_err(err)?;
        let ranks: Vec<usize> = (0..=n as u32 + 2).map(|k| sys.graded_rank(k)).collect();
        let mut expected = vec![1; n + 1];
        expected.extend([0, 0]);
        ensure(ranks == expected, || format!("P^{n}: ranks {ranks:?}"))?;
        let last = p.var(n);
        ensure(sys.normal_form(&last.pow(n as u32 + 1)).map_err(err)?.is_zero(), || format!("P^{n}: t^(n+1) != 0"))?;
        for i in 0..n {
            let x = sys.normal_form(&p.var(i)).map_err(err)?.into_series();
            let linear = x.degree_part(1);
            let unit = linear.coeff(&Monomial::var(n));
            ensure(linear.num_terms() == 1 && unit.is_scalar() && unit.is_unit(cfg.law.is_integral()), || {
                format!("P^{n}: t{} reduces to {}", i + 1, x.display())
            })?;
            ensure(x.terms().all(|(m, _)| m.exponent(n) > 0), || format!("P^{n}: t{} not a multiple of t{}", i + 1, n + 1))?;
        }
    }
    Ok("P^1..P^4".into())
}

fn affine_spaces(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<String, String> {
    for kind in [LawKind::Additive, LawKind::Multiplicative, LawKind::UniversalRational] {
        for s in 1..=3 {
            let p = build_presentation(&fan(&format!("a{s}")), kind, cfg.coeff_bound).map_err(err)?;
            let table = GradedRankTable::compute(&p, None).map_err(err)?;
            let mut expected = vec![0; s + 1];
            expected[0] = 1;
            ensure(table.ranks == expected, || format!("A^{s} {}: ranks {:?}", kind.name(), table.ranks))?;
        }
    }
    Ok("A^1..A^3, all laws".into())
}

fn chow_against_oracle(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<String, String> {
    let cases: [(&str, [usize; 3]); 5] =
        [("p2", [1, 1, 1]), ("f0", [1, 2, 1]), ("f1", [1, 2, 1]), ("f2", [1, 2, 1]), ("blowup-p2", [1, 2, 1])];
    for (stem, expected) in cases {
        let f = fan(stem);
        let pres = specialize(&build_presentation(&f, cfg.law, cfg.coeff_bound).map_err(err)?, Specialization::Chow)
            .map_err(err)?;
        let table = GradedRankTable::compute(&pres, None).map_err(err)?;
        let integral: Vec<usize> = table.integral.as_ref().ok_or("no integer ranks")?.iter().map(|r| r.rank).collect();
        ensure(integral == expected, || format!("{stem}: Z-ranks {integral:?}"))?;
        ensure(!table.has_torsion(), || format!("{stem}: unexpected torsion"))?;
        let brute = oracle::chow_ranks(&bundled(stem).unwrap(), 3);
        ensure(brute[..3] == expected && brute[3] == 0, || format!("{stem}: oracle ranks {brute:?}"))?;
        if stem == "p2" {
            let sys = reduction_system(&pres, None).map_err(err)?;
            ensure(sys.normal_form(&pres.var(2).pow(3)).map_err(err)?.is_zero(), || "P^2: t^3 != 0".into())?;
        }
    }
    Ok("P^2, F_0, F_1, F_2, Bl P^2 agree with oracle".into())
}

fn ktheory_totals(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<String, String> {
    let mut parts = Vec::new();
    for stem in ["p1", "p2", "f0", "f1", "f2", "f3"] {
        let f = fan(stem);
        let pres = specialize(&build_presentation(&f, cfg.law, cfg.coeff_bound).map_err(err)?, Specialization::KTheory)
            .map_err(err)?;
        let total = GradedRankTable::compute(&pres, None).map_err(err)?.total();
        ensure(total == f.max_cones().len(), || format!("{stem}: total rank {total}"))?;
        parts.push(format!("{stem}={total}"));
    }
    Ok(parts.join(" "))
}

fn fgl_axioms(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<String, String> {
    for kind in [LawKind::Additive, LawKind::Multiplicative, LawKind::UniversalRational] {
        for d in 0..=4 {
            for p in 1..=6 {
                let law = FormalGroupLaw::new(kind, d, p);
                let report = law.verify_axioms();
                ensure(report.all(), || format!("{} D={d} P={p}: {report:?}", kind.name()))?;
            }
        }
        let law = FormalGroupLaw::new(kind, 4, 6);
        let u = GradedSeries::var(law.ring(), 1, 6, 0);
        for m in -3i64..=3 {
            for n in -3i64..=3 {
                let lhs = law.n_series(m, &law.n_series(n, &u).map_err(err)?).map_err(err)?;
                let rhs = law.n_series(m * n, &u).map_err(err)?;
                ensure(lhs == rhs, || format!("{}: [{m}][{n}] != [{}]", kind.name(), m * n))?;
            }
        }
    }
    let universal = FormalGroupLaw::new(LawKind::UniversalRational, 4, 6).series().scalar_slice();
    let additive = FormalGroupLaw::new(LawKind::Additive, 4, 6);
    let same = universal.num_terms() == additive.series().num_terms()
        && additive.series().terms().all(|(m, c)| universal.coeff(m).scalar_part() == c.scalar_part());
    ensure(same, || format!("universal with b = 0 is {}", universal.display()))?;
    Ok("three laws, D <= 4, P <= 6".into())
}

fn psi_isomorphism(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<String, String> {
    let law = FormalGroupLaw::new(cfg.law, cfg.coeff_bound, 3);
    for (stem, f) in all_fans() {
        let model = EquivariantModel::new(&f, &law);
        for k in 0..=3 {
            let count = standard_monomials(&f, k).len();
            let pp = graded_rank_pp(&f, k);
            let (rank, _, compatible) = psi_slice_rank(&model, k).map_err(err)?;
            ensure(count == pp && rank == count && compatible, || {
                format!("{stem} k={k}: {count} standard monomials, rank_pp {pp}, image rank {rank}, compatible {compatible}")
            })?;
        }
    }
    Ok("all bundled fans, k <= 3".into())
}

fn nonface_products(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<String, String> {
    let mut count = 0;
    for (stem, f) in all_fans() {
        let law = FormalGroupLaw::new(cfg.law, cfg.coeff_bound, f.rank() as u32 + 1);
        let model = EquivariantModel::new(&f, &law);
        for s in f.minimal_nonfaces() {
            let prod = model.product_of_classes(s.rays()).map_err(err)?;
            ensure(prod.is_zero(), || format!("{stem}: product over {s} is nonzero"))?;
            count += 1;
        }
    }
    Ok(format!("{count} minimal non-faces"))
}

fn random_character(rng: &mut ChaCha8Rng, rank: usize) -> Character {
    Character::new((0..rank).map(|_| rng.gen_range(-5..=5)).collect())
}

fn first_chern(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<String, String> {
    for (stem, f) in all_fans() {
        let p = (f.rank() as u32 + 1).min(4);
        let law = FormalGroupLaw::new(cfg.law, cfg.coeff_bound, p);
        let additive = FormalGroupLaw::new(LawKind::Additive, 0, p);
        let model = EquivariantModel::new(&f, &law);
        let add_model = EquivariantModel::new(&f, &additive);
        for _ in 0..20 {
            let chi = random_character(rng, f.rank());
            let direct = model.first_chern(&chi).map_err(err)?;
            let via_sr = model.psi(&model.sr_first_chern(&chi).map_err(err)?).map_err(err)?;
            ensure(direct.eq_truncated(&via_sr), || format!("{stem}: models differ for {:?}", chi.coords))?;
            let a = add_model.first_chern(&chi).map_err(err)?;
            let lin = add_model.linear_character(&chi).map_err(err)?;
            ensure(a == lin, || format!("{stem}: additive class is not linear for {:?}", chi.coords))?;
        }
    }
    Ok("20 characters per bundled fan".into())
}

fn forgetful(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<String, String> {
    for (stem, f) in all_fans() {
        let p = build_presentation(&f, cfg.law, cfg.coeff_bound).map_err(err)?;
        for k in 0..=f.rank() as u32 + 1 {
            ensure(forgetful_check(&p, k).map_err(err)?, || format!("{stem}: degree {k} disagrees"))?;
        }
    }
    Ok("all bundled fans, degrees 0..n+1".into())
}

fn character_redundancy(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<String, String> {
    for stem in ["p2", "f1"] {
        let p = build_presentation(&fan(stem), cfg.law, cfg.coeff_bound).map_err(err)?;
        let sys = reduction_system(&p, None).map_err(err)?;
        let mut tested = 0;
        while tested < 10 {
            let chi = random_character(rng, 2);
            let nonzero = chi.coords.iter().filter(|&&c| c != 0).count();
            if nonzero == 0 || (nonzero == 1 && chi.coords.iter().any(|c| c.abs() == 1)) {
                continue;
            }
            let r = p.character_relation(&chi).map_err(err)?;
            let nf = sys.normal_form(&r).map_err(err)?;
            ensure(nf.is_zero(), || format!("{stem}: r_{:?} reduces to {nf}", chi.coords))?;
            tested += 1;
        }
    }
    Ok("10 characters each on P^2 and F_1".into())
}
