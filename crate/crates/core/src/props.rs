//! Seeded randomized law checks, shared by the test suite and the CLI.
//!
//! Each suite draws its cases from a ChaCha8 stream seeded by `seed` and the
//! suite name, so suites are reproducible independently of each other.

use num_bigint::BigInt;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::alexander::{burau_alexander, burau_matrix};
use crate::braid::{BraidLetter, BraidWord};
use crate::freeword::{Alphabet, GroupWord, Homomorphism, Letter};
use crate::laurent::{LaurentMatrix, LaurentPoly};

pub const DEFAULT_SEED: u64 = 0x0b1d_6e5e_ed00_0001;
pub const DEFAULT_CASES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropReport {
    pub name: String,
    pub seed: u64,
    pub cases: usize,
    /// Up to five failing cases, described.
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl PropReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

type Case = fn(&mut ChaCha8Rng) -> Result<(), String>;

pub const SUITES: [(&str, Case); 6] = [
    ("free_group_laws", free_group_laws),
    ("substitution_homomorphism", substitution_homomorphism),
    ("braid_relations_under_h", braid_relations_under_h),
    ("full_twist_trivial", full_twist_trivial),
    ("burau_homomorphism", burau_homomorphism),
    ("alexander_symmetry", alexander_symmetry),
];

fn run(name: &str, case: Case, seed: u64, cases: usize) -> PropReport {
    // FNV-1a keeps per-suite streams stable across toolchains
    let tag = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ tag);
    let mut failures = Vec::new();
    let mut failure_count = 0;
    for i in 0..cases {
        if let Err(e) = case(&mut rng) {
            failure_count += 1;
            if failures.len() < 5 {
                failures.push(format!("case {i}: {e}"));
            }
        }
    }
    PropReport {
        name: name.to_string(),
        seed,
        cases,
        failures,
        failure_count,
    }
}

pub fn run_suite(name: &str, seed: u64, cases: usize) -> Option<PropReport> {
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, c)| run(n, *c, seed, cases))
}

pub fn run_all(seed: u64, cases: usize) -> Vec<PropReport> {
    SUITES
        .iter()
        .map(|(n, c)| run(n, *c, seed, cases))
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &Alphabet, max_len: usize) -> GroupWord {
    let len = rng.random_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Letter {
            generator: rng.random_range(0..alphabet.len()),
            inverse: rng.random_bool(0.5),
        })
        .collect();
    GroupWord::from_letters(alphabet, letters).expect("generators in range")
}

fn random_braid(
    rng: &mut ChaCha8Rng,
    strands: usize,
    max_len: usize,
    positive_only: bool,
) -> BraidWord {
    let len = rng.random_range(0..=max_len);
    let letters = (0..len)
        .map(|_| BraidLetter {
            index: rng.random_range(1..strands),
            positive: positive_only || rng.random_bool(0.5),
        })
        .collect();
    BraidWord::new(strands, letters).expect("indices in range")
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Reduction is idempotent, products associate, `u·u⁻¹ = 1`, `(uv)⁻¹ = v⁻¹u⁻¹`.
fn free_group_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ab = Alphabet::alpha_beta();
    let (u, v, w) = (
        random_word(rng, &ab, 12),
        random_word(rng, &ab, 12),
        random_word(rng, &ab, 12),
    );
    let r = u.reduce();
    ensure(r.reduce() == r && r.is_reduced(), || {
        format!("reduce({u}) not idempotent")
    })?;
    let left = u
        .concat(&v)
        .and_then(|uv| uv.concat(&w))
        .map_err(|e| e.to_string())?;
    let right = v
        .concat(&w)
        .and_then(|vw| u.concat(&vw))
        .map_err(|e| e.to_string())?;
    ensure(left == right, || {
        format!("({u})({v})({w}) does not associate")
    })?;
    ensure(
        u.concat(&u.invert()).map_err(|e| e.to_string())?.is_empty(),
        || format!("{u} · inverse ≠ 1"),
    )?;
    let inv = u.concat(&v).map_err(|e| e.to_string())?.invert();
    let swapped = v.invert().concat(&u.invert()).map_err(|e| e.to_string())?;
    ensure(inv == swapped, || {
        format!("inverse of ({u})({v}) is not reversed")
    })?;
    let c = u.cyclic_reduce();
    ensure(
        c.is_cyclically_reduced() && c.cyclically_equivalent(&u).unwrap_or(false),
        || format!("cyclic_reduce({u})"),
    )
}

/// `φ(uv) = φ(u)φ(v)` and `φ(u⁻¹) = φ(u)⁻¹` for random `φ: F(a,b) → F(a,b,c,d)`.
fn substitution_homomorphism(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let ab = Alphabet::alpha_beta();
    let abcd = Alphabet::alpha_beta_gamma_delta();
    let phi = Homomorphism::new(&ab, &abcd)
        .map("a", random_word(rng, &abcd, 5))
        .and_then(|h| h.map("b", random_word(rng, &abcd, 5)))
        .map_err(|e| e.to_string())?;
    let (u, v) = (random_word(rng, &ab, 10), random_word(rng, &ab, 10));
    let image = |w: &GroupWord| w.substitute(&phi).map_err(|e| e.to_string());
    let uv = u.then(&v).map_err(|e| e.to_string())?;
    let product = image(&u)?.concat(&image(&v)?).map_err(|e| e.to_string())?;
    ensure(image(&uv)? == product, || {
        format!("φ({u} · {v}) ≠ φ({u})φ({v})")
    })?;
    ensure(image(&u.invert())? == image(&u)?.invert(), || {
        format!("φ({u}⁻¹) ≠ φ({u})⁻¹")
    })
}

/// `h` is a homomorphism that respects both braid relations.
fn braid_relations_under_h(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.random_range(3..=9);
    let i = rng.random_range(1..n - 1) as i64;
    let perm = |s: &[i64]| {
        BraidWord::from_signed(n, s)
            .map(|w| w.induced_permutation())
            .map_err(|e| e.to_string())
    };
    ensure(perm(&[i, i + 1, i])? == perm(&[i + 1, i, i + 1])?, || {
        format!("σ{i}σ{}σ{i} on {n} strands", i + 1)
    })?;
    let j = rng.random_range(1..n) as i64;
    if (i - j).abs() >= 2 {
        ensure(perm(&[i, j])? == perm(&[j, i])?, || {
            format!("σ{i}σ{j} on {n} strands")
        })?;
    }
    let (u, v) = (
        random_braid(rng, n, 10, false),
        random_braid(rng, n, 10, false),
    );
    let uv = BraidWord::compose(&u, &v).map_err(|e| e.to_string())?;
    let composed = u.induced_permutation().compose(&v.induced_permutation());
    ensure(uv.induced_permutation() == composed, || {
        format!("h is not multiplicative on {n} strands")
    })
}

/// `(σ₁⋯σ_{n−1})^n` permutes nothing and acts as the scalar `tⁿ` under reduced Burau.
fn full_twist_trivial(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.random_range(3..=7);
    let pass: Vec<i64> = (1..n as i64).collect();
    let twist: Vec<i64> = pass.iter().copied().cycle().take(pass.len() * n).collect();
    let w = BraidWord::from_signed(n, &twist).map_err(|e| e.to_string())?;
    ensure(w.induced_permutation().is_identity(), || {
        format!("full twist on {n} strands permutes")
    })?;
    let mut scalar = LaurentMatrix::zero(n - 1);
    for d in 0..n - 1 {
        scalar.set(d, d, LaurentPoly::monomial(1, n as i64));
    }
    ensure(burau_matrix(&w) == scalar, || {
        format!("Burau image of the full twist on {n} strands is not tⁿ·I")
    })?;
    // central: commutes with a random braid
    let u = random_braid(rng, n, 6, false);
    let left = BraidWord::compose(&w, &u).map_err(|e| e.to_string())?;
    let right = BraidWord::compose(&u, &w).map_err(|e| e.to_string())?;
    ensure(burau_matrix(&left) == burau_matrix(&right), || {
        format!("full twist does not commute with {u:?}")
    })
}

/// `ρ(uv) = ρ(u)ρ(v)` and `ρ(σσ⁻¹) = I`.
fn burau_homomorphism(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.random_range(3..=6);
    let (u, v) = (
        random_braid(rng, n, 8, false),
        random_braid(rng, n, 8, false),
    );
    let uv = BraidWord::compose(&u, &v).map_err(|e| e.to_string())?;
    ensure(
        burau_matrix(&uv) == &burau_matrix(&u) * &burau_matrix(&v),
        || format!("ρ not multiplicative on {n} strands"),
    )?;
    let i = rng.random_range(1..n) as i64;
    let cancel = BraidWord::from_signed(n, &[i, -i]).map_err(|e| e.to_string())?;
    ensure(
        burau_matrix(&cancel) == LaurentMatrix::identity(n - 1),
        || format!("ρ(σ{i}σ{i}⁻¹) ≠ I"),
    )
}

/// For braids closing to knots, `Δ(1) = ±1` and `Δ` is palindromic up to units.
fn alexander_symmetry(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.random_range(3..=6);
    let w = loop {
        let w = random_braid(rng, n, 12, false);
        if w.is_knot() {
            break w;
        }
    };
    let delta = burau_alexander(&w).map_err(|e| e.to_string())?;
    let at_one = delta.eval_at_one();
    ensure(
        at_one == BigInt::from(1) || at_one == BigInt::from(-1),
        || format!("Δ(1) = {at_one} for {w:?}"),
    )?;
    ensure(delta.is_palindromic_up_to_units(), || {
        format!("Δ = {delta} is not symmetric")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_the_default_seed() {
        for report in run_all(DEFAULT_SEED, 200) {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
        }
    }

    #[test]
    fn suites_are_reproducible() {
        let a = run_suite("free_group_laws", 5, 20).unwrap();
        assert_eq!(a, run_suite("free_group_laws", 5, 20).unwrap());
        assert!(run_suite("nonexistent", 5, 1).is_none());
    }

    #[test]
    fn failures_are_reported() {
        let report = run("always_fails", |_| Err("boom".into()), 1, 8);
        assert_eq!(report.failure_count, 8);
        assert_eq!(report.failures.len(), 5);
        assert!(!report.passed());
    }
}
