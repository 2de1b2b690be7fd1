//! The `demo-theorem` report.

use std::fmt::Write;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use thompson_core::groupf::{h1_matrix_analytic, h1_matrix_probed, twisted_conjugate};
use thompson_core::sample::{random_aut_word, random_fmap, SampleConfig};
use thompson_core::zlinalg::{coker_invariants, one_minus};
use thompson_core::{
    ab, h1_matrix, project_class, reidemeister_of_matrix, twisted_equiv_abelian, AutFactor, AutWord, FMap,
};

use crate::CliError;

pub const SEED_ENV: &str = "THOMPSON_TWIST_SEED";
pub const DEFAULT_SEED: u64 = 20;

pub(crate) fn seed_from_env() -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| CliError {
            code: "InvalidInput".into(),
            detail: format!("{SEED_ENV} must be an unsigned integer, got {s:?}"),
        }),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// `x1^a` where `x1` is the slope-two generator with `ab = (0, 1)`.
fn generator_power(a: i64) -> FMap {
    let g = FMap::slope_two_generator();
    let base = if a < 0 { g.inverse() } else { g };
    (0..a.unsigned_abs()).fold(FMap::identity(), |acc, _| acc.compose(&base))
}

fn word_shape(w: &AutWord) -> String {
    if w.is_empty() {
        return "id".into();
    }
    let parts: Vec<&str> = w
        .factors
        .iter()
        .map(|f| match f {
            AutFactor::Rev => "Rev",
            AutFactor::ConjBy(_) => "Conj",
        })
        .collect();
    parts.join(" . ")
}

fn vec_text(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Full text of the report. Deterministic for fixed `n`, `samples` and `seed`.
pub fn demo_theorem(n: i64, samples: usize, seed: u64) -> Result<String, CliError> {
    if n < 0 {
        return Err(CliError {
            code: "InvalidInput".into(),
            detail: format!("--n must be non-negative, got {n}"),
        });
    }
    let mut s = String::new();
    let rev = AutWord::rev();
    let m = h1_matrix(&rev)?;
    let analytic = h1_matrix_analytic(&rev);
    let probed = h1_matrix_probed(&rev)?;

    writeln!(s, "Automorphism: Rev, f(x) -> -f(-x)").unwrap();
    writeln!(s, "H1(F) = Z x Z via f -> (f_l, f_r)").unwrap();
    writeln!(s, "M = H1(Rev) = {m}").unwrap();
    writeln!(
        s,
        "  analytic {analytic}, probed {probed}, agree: {}",
        analytic == probed
    )
    .unwrap();
    let i_minus_m = one_minus(&m)?;
    writeln!(s, "I - M = {i_minus_m}").unwrap();
    writeln!(s, "det(I - M) = {}", i_minus_m.det()?).unwrap();
    let coker = coker_invariants(&i_minus_m)?;
    writeln!(
        s,
        "Coker(I - M): invariant factors {}, free rank {}",
        vec_text(&coker.invariant_factors),
        coker.free_rank
    )
    .unwrap();
    writeln!(s, "R(H1(Rev)) = #Coker(I - M) = {}", reidemeister_of_matrix(&m)?).unwrap();
    for k in 0..=3u32 {
        let mk = m.pow(k);
        writeln!(s, "  M^{k} = {mk}, R = {}", reidemeister_of_matrix(&mk)?).unwrap();
    }
    writeln!(
        s,
        "Hence R(Rev) = INFINITE, and R(phi) = INFINITE for every automorphism phi of F."
    )
    .unwrap();
    writeln!(s).unwrap();

    writeln!(s, "Gamma = {{(0, a) : |a| <= {n}}}, realized by x1^a").unwrap();
    writeln!(s, "{:>6}  {:<10}  {:<14}  equivalent to", "a", "ab(x1^a)", "class_rep").unwrap();
    let members: Vec<Vec<BigInt>> = (-n..=n).map(|a| vec![BigInt::from(0), BigInt::from(a)]).collect();
    let mut equivalent_pairs = 0usize;
    for (i, a) in (-n..=n).enumerate() {
        let f = generator_power(a);
        let rep = project_class(&f, &rev)?;
        let mut matches = Vec::new();
        for (j, b) in (-n..=n).enumerate() {
            if i != j && twisted_equiv_abelian(&members[i], &members[j], &m)? {
                matches.push(b.to_string());
            }
        }
        equivalent_pairs += matches.len();
        let matches = if matches.is_empty() {
            "none".to_string()
        } else {
            matches.join(",")
        };
        writeln!(
            s,
            "{:>6}  {:<10}  {:<14}  {}",
            a,
            ab(&f).to_string(),
            vec_text(&rep),
            matches
        )
        .unwrap();
    }
    let total = members.len() * members.len().saturating_sub(1) / 2;
    writeln!(
        s,
        "equivalent pairs among {} distinct pairs: {}",
        total,
        equivalent_pairs / 2
    )
    .unwrap();
    writeln!(
        s,
        "Gamma is pairwise non-equivalent: {}",
        if equivalent_pairs == 0 { "CERTIFIED" } else { "FAILED" }
    )
    .unwrap();
    writeln!(s).unwrap();

    writeln!(s, "Sampled automorphisms (seed {seed}):").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = SampleConfig::default();
    for idx in 1..=samples {
        let phi = random_aut_word(&mut rng, 4, &cfg);
        let h1 = h1_matrix(&phi)?;
        let r = reidemeister_of_matrix(&h1)?;
        let f = random_fmap(&mut rng, &cfg);
        let rep = project_class(&f, &phi)?;
        let mut invariant = true;
        for _ in 0..4 {
            let h = random_fmap(&mut rng, &cfg);
            let moved = twisted_conjugate(&h, &f, &phi)?;
            invariant &= project_class(&moved, &phi)? == rep;
        }
        writeln!(
            s,
            "  #{idx}: {}; H1 = {h1}; R = {r}; class of f with ab {} -> {}, stable under 4 twisted conjugations: {}",
            word_shape(&phi),
            ab(&f),
            vec_text(&rep),
            if invariant { "yes" } else { "no" }
        )
        .unwrap();
    }
    Ok(s)
}
