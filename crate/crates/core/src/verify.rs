//! The acceptance suite: nine exact checks, each reported as one line.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::endo::{
    is_inner, kernel_witness_to_splitting, make_idempotent_from_preimage, ConjIdemSystem,
    ConjIdemWitness, FreeEndo, InnerVerdict, ShiftOnF,
};
use crate::pi1::{
    basepoint_independence_check, basepoint_iso_check, enumerate_classes, group_axioms_check,
    GraphComplex,
};
use crate::sampling::{
    random_conjugator, random_fword_pair, random_kernel_instance, random_witness, rng,
};
use crate::thompson::{commuting_family_report, verify_presentation, word_problem_verdicts, FWord};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Small,
    Standard,
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Profile, String> {
        match s {
            "small" => Ok(Profile::Small),
            "standard" => Ok(Profile::Standard),
            _ => Err(format!("unknown profile `{s}` (expected small or standard)")),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Small => "small",
            Profile::Standard => "standard",
        })
    }
}

struct Scale {
    word_pairs: usize,
    witnesses: usize,
    kernels: usize,
    inner: usize,
}

impl Profile {
    fn scale(self) -> Scale {
        match self {
            Profile::Small => Scale {
                word_pairs: 10_000,
                witnesses: 100,
                kernels: 20,
                inner: 100,
            },
            Profile::Standard => Scale {
                word_pairs: 50_000,
                witnesses: 500,
                kernels: 200,
                inner: 500,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}: {}", self.id, self.name, self.detail)
    }
}

fn outcome(id: u8, name: &'static str, passed: bool, detail: String) -> Outcome {
    Outcome { id, name, passed, detail }
}

fn presentation() -> Outcome {
    let ok = verify_presentation(10);
    outcome(
        1,
        "presentation",
        ok,
        "a_i^-1 a_j a_i = a_{j+1} in the PL model for 0 <= i < j <= 10".into(),
    )
}

fn dual_oracle(scale: &Scale, seed: u64) -> Outcome {
    let mut r = rng(seed);
    let pairs: Vec<(FWord, FWord)> =
        (0..scale.word_pairs).map(|_| random_fword_pair(&mut r, 16, 8)).collect();
    let verdicts: Vec<(bool, bool)> =
        pairs.par_iter().map(|(u, v)| word_problem_verdicts(u, v)).collect();
    let disagree = verdicts.iter().filter(|(a, b)| a != b).count();
    let equal = verdicts.iter().filter(|(a, _)| *a).count();
    outcome(
        2,
        "dual-oracle word problem",
        disagree == 0,
        format!(
            "{} pairs ({equal} equal in F), {disagree} disagreements between normal form and PL",
            pairs.len()
        ),
    )
}

fn commuting_family() -> Outcome {
    let r = commuting_family_report(2, 2);
    let ok = r.holds() && r.products_checked == 124;
    let mut detail = format!(
        "c_i = a_3i^-1 a_3i+1, i <= 2: {} pairs commute-checked, {} nontrivial products checked",
        r.pairs_checked, r.products_checked
    );
    if !ok {
        detail.push_str(&format!(
            "; non-commuting pairs {:?}, trivial products {:?} (standard PL model, stride-3 family as stated)",
            r.non_commuting, r.trivial_products
        ));
    }
    outcome(3, "commuting family", ok, detail)
}

fn conjugation_identities(witness: &impl ConjIdemSystem) -> bool {
    (1..=5u32).all(|m| {
        (0..m).all(|i| (1..=3).all(|k| witness.conjugation_identity(m, i, k) == Ok(true)))
    })
}

fn conjugation_identity(scale: &Scale, seed: u64) -> Outcome {
    let shift_ok = conjugation_identities(&ShiftOnF { window: 8 });
    let mut r = rng(seed.wrapping_add(4));
    let samples: Vec<ConjIdemWitness> =
        (0..scale.witnesses).map(|_| random_witness(&mut r, 3).witness).collect();
    let failed = samples.par_iter().filter(|w| !conjugation_identities(*w)).count();
    outcome(
        4,
        "conjugation identity",
        shift_ok && failed == 0,
        format!(
            "x_i^-k f^m(x) x_i^k = f^(m+k)(x) for i < m <= 5, k <= 3: shift on F {}, {} random witnesses, {failed} failures",
            if shift_ok { "holds" } else { "FAILS" },
            samples.len()
        ),
    )
}

fn preimage(scale: &Scale, seed: u64) -> Outcome {
    let mut r = rng(seed.wrapping_add(5));
    let samples: Vec<_> = (0..scale.witnesses).map(|_| random_witness(&mut r, 3)).collect();
    let failed = samples
        .par_iter()
        .filter(|s| {
            !make_idempotent_from_preimage(&s.witness, &s.preimage)
                .is_ok_and(|g| g.is_idempotent())
        })
        .count();
    outcome(
        5,
        "idempotent from preimage",
        failed == 0,
        format!("{} witnesses with f(y) = x0, {failed} without g∘g = g", samples.len()),
    )
}

/// `x ↦ c^-1 x c` on rank 2 with `c = x0 x1^-1 x0`, kernel element `a0 a1^-1`.
fn worked_kernel_instance() -> Result<bool, String> {
    let c = Word::reduce([(0, 1), (1, -1), (0, 1)]).expect("valid");
    let f = FreeEndo::inner(2, &c).map_err(|e| e.to_string())?;
    let wit = ConjIdemWitness::new(f, c).map_err(|e| e.to_string())?;
    let k = FWord::gen(0).multiply(&FWord::gen(1).inverse());
    let r = kernel_witness_to_splitting(&wit, &k).map_err(|e| e.to_string())?;
    Ok(r.power == 1 && r.idempotent == FreeEndo::identity(2) && r.certify(wit.endo()))
}

fn kernel_pipeline(scale: &Scale, seed: u64) -> Outcome {
    let worked = worked_kernel_instance();
    let mut r = rng(seed.wrapping_add(6));
    let samples: Vec<_> = (0..scale.kernels).map(|_| random_kernel_instance(&mut r, 3)).collect();
    let failures: Vec<String> = samples
        .par_iter()
        .filter_map(|s| match kernel_witness_to_splitting(&s.witness, &s.kernel) {
            Ok(res) if res.idempotent.is_idempotent() && res.certify(s.witness.endo()) => None,
            Ok(_) => Some(format!("{}: result not certified", s.kernel)),
            Err(e) => Some(format!("{}: {e}", s.kernel)),
        })
        .collect();
    let worked_ok = worked == Ok(true);
    let mut detail = format!(
        "worked inner instance (a0 a1^-1 gives n = 1, g = id) {}; {} random kernel witnesses, {} failures",
        match &worked {
            Ok(true) => "ok".to_string(),
            Ok(false) => "wrong result".to_string(),
            Err(e) => format!("error: {e}"),
        },
        samples.len(),
        failures.len()
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!(" (first: {first})"));
    }
    outcome(6, "kernel to splitting", worked_ok && failures.is_empty(), detail)
}

fn inner_detection(scale: &Scale, seed: u64) -> Outcome {
    let mut r = rng(seed.wrapping_add(7));
    let conjugators: Vec<Word> =
        (0..scale.inner).map(|_| random_conjugator(&mut r, 3, 6)).collect();
    let missed = conjugators
        .par_iter()
        .filter(|a| {
            let f = FreeEndo::inner(3, a).expect("rank 3");
            match is_inner(&f, 8) {
                InnerVerdict::Inner(found) => FreeEndo::inner(3, &found).ok() != Some(f),
                _ => true,
            }
        })
        .count();
    let trivial = FreeEndo::new(3, vec![Word::identity(); 3]).expect("valid");
    let swap = FreeEndo::new(
        2,
        vec![Word::power_of(1, 1), Word::power_of(0, 1)],
    )
    .expect("valid");
    let trivial_ok = matches!(is_inner(&trivial, 8), InnerVerdict::NotConjugate { .. });
    let swap_ok = !matches!(is_inner(&swap, 8), InnerVerdict::Inner(_));
    outcome(
        7,
        "inner detection",
        missed == 0 && trivial_ok && swap_ok,
        format!(
            "{} inner endomorphisms of rank 3, {missed} without a certified conjugator; all-trivial {}; swap {}",
            conjugators.len(),
            if trivial_ok { "rejected" } else { "ACCEPTED" },
            if swap_ok { "rejected" } else { "ACCEPTED" },
        ),
    )
}

fn relative_pi1() -> Outcome {
    let graphs = [("theta", GraphComplex::theta()), ("wedge", GraphComplex::wedge(2))];
    let results: Vec<(String, bool)> = graphs
        .par_iter()
        .map(|(name, g)| {
            let iso = g.base_vertices().iter().all(|&x| basepoint_iso_check(g, x, 6));
            let axioms = group_axioms_check(g, 6, 3);
            let independent = basepoint_independence_check(g, 6);
            (
                format!("{name}: iso {iso}, axioms {axioms}, basepoints agree {independent}"),
                iso && axioms && independent,
            )
        })
        .collect();
    let ok = results.iter().all(|(_, b)| *b);
    let detail = results.into_iter().map(|(s, _)| s).collect::<Vec<_>>().join("; ");
    outcome(8, "relative fundamental group", ok, format!("max_len 6; {detail}"))
}

fn ball_counts() -> Outcome {
    let g = GraphComplex::wedge(2);
    let counts: Vec<usize> = (1..=3).map(|l| enumerate_classes(&g, l).len()).collect();
    outcome(
        9,
        "ball counts",
        counts == [5, 17, 53],
        format!("2-loop wedge at max_len 1, 2, 3: {counts:?} (expected [5, 17, 53])"),
    )
}

pub const CRITERIA: u8 = 9;

/// Runs one criterion by number.
pub fn run_criterion(id: u8, profile: Profile, seed: u64) -> Option<Outcome> {
    let scale = profile.scale();
    Some(match id {
        1 => presentation(),
        2 => dual_oracle(&scale, seed),
        3 => commuting_family(),
        4 => conjugation_identity(&scale, seed),
        5 => preimage(&scale, seed),
        6 => kernel_pipeline(&scale, seed),
        7 => inner_detection(&scale, seed),
        8 => relative_pi1(),
        9 => ball_counts(),
        _ => return None,
    })
}

/// All criteria, run concurrently and returned in order.
pub fn run_all(profile: Profile, seed: u64) -> Vec<Outcome> {
    (1..=CRITERIA)
        .into_par_iter()
        .map(|id| run_criterion(id, profile, seed).expect("known criterion"))
        .collect()
}
