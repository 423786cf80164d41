//! Acceptance run: one PASS/FAIL line per criterion, with the measured
//! value and the pinned bound. Exits nonzero if anything fails.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{apply, clusters, seed_dict, seed_forms, Typo, LOWER, SEED};
use glspell_core::correct::{Checker, CheckerOptions, ConfusionSets};
use glspell_core::dict::{build, BuildOptions, CompressedTrie, Dictionary, UserDictionary};
use glspell_core::gwdl::load;
use glspell_core::morph::{expand_all, expand_entry};
use glspell_core::session::check_document;
use glspell_core::text::{apply_stress, nfc, normalize, syllable_count, Letter};

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        name: "paradigm golden (noun)",
        limit: Some(Duration::from_secs(1)),
        run: noun_paradigm,
    },
    Criterion {
        name: "paradigm golden (verb, past)",
        limit: Some(Duration::from_secs(1)),
        run: verb_paradigm,
    },
    Criterion {
        name: "round-trip acceptance",
        limit: Some(Duration::from_secs(10)),
        run: round_trip,
    },
    Criterion {
        name: "stress-error repair",
        limit: Some(Duration::from_secs(60)),
        run: stress_repair,
    },
    Criterion {
        name: "single-error reversal",
        limit: Some(Duration::from_secs(60)),
        run: single_error_reversal,
    },
    Criterion {
        name: "trigram pruning",
        limit: None,
        run: trigram_pruning,
    },
    Criterion {
        name: "orthographic oracle equivalence",
        limit: None,
        run: orthographic_oracle,
    },
    Criterion {
        name: "trie scaling",
        limit: None,
        run: trie_scaling,
    },
    Criterion {
        name: "serialization",
        limit: None,
        run: serialization,
    },
    Criterion {
        name: "throughput",
        limit: None,
        run: throughput,
    },
];

fn main() -> ExitCode {
    // the shared fixture is built once, outside every timing
    let fixture = Instant::now();
    seed_dict();
    seed_forms();
    println!("fixture: seed dictionary built in {:.2?}", fixture.elapsed());

    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(detail), Some(limit)) if elapsed >= limit => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit:.0?}"))
            }
            (Ok(detail), Some(limit)) => Ok(format!("{detail}; {elapsed:.2?} < {limit:.0?}")),
            (other, _) => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {}: {detail}", c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}: {detail}", c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn examples(sample: &[String]) -> String {
    sample.iter().take(5).cloned().collect::<Vec<_>>().join(", ")
}

/// Forms of one form rule of the seed entry with this stem.
fn paradigm(stem: &str, form_index: usize) -> BTreeSet<String> {
    let loaded = load([("seed.gwdl", SEED)]);
    let stem = normalize(stem).unwrap().spelling;
    let entry = loaded
        .rules
        .entries
        .iter()
        .find(|e| e.stem == stem)
        .expect("entry in the seed lexicon");
    expand_entry(entry)
        .unwrap()
        .into_iter()
        .filter(|f| f.form_index == form_index)
        .map(|f| nfc(&f.display))
        .collect()
}

fn golden(got: BTreeSet<String>, expected: &[&str]) -> Outcome {
    let expected: BTreeSet<String> = expected.iter().map(|w| nfc(w)).collect();
    check(
        got == expected,
        format!("{} forms {:?}", got.len(), got.iter().collect::<Vec<_>>()),
    )
}

fn noun_paradigm() -> Outcome {
    golden(
        paradigm("προοδ", 0),
        &["πρόοδος", "προόδου", "πρόοδο", "πρόοδοι", "προόδων", "προόδους"],
    )
}

fn verb_paradigm() -> Outcome {
    golden(
        paradigm("αγαπ", 1),
        &[
            "αγαπούσα",
            "αγαπούσες",
            "αγαπούσε",
            "αγαπούσαν",
            "αγαπούσαμε",
            "αγαπούσατε",
            "αγαπούσανε",
        ],
    )
}

fn empty_user() -> &'static UserDictionary {
    static USER: std::sync::OnceLock<UserDictionary> = std::sync::OnceLock::new();
    USER.get_or_init(UserDictionary::new)
}

fn checker() -> Checker<'static> {
    Checker::new(seed_dict(), empty_user())
}

fn round_trip() -> Outcome {
    let loaded = load([("seed.gwdl", SEED)]);
    let entries = loaded.rules.entries.len();
    let c = checker();
    let mut total = 0;
    let mut rejected = Vec::new();
    for form in expand_all(&loaded.rules) {
        total += 1;
        if !c.check(&form.display).is_ok_and(|r| r.is_accepted()) {
            rejected.push(form.display);
        }
    }
    check(
        entries >= 200 && rejected.is_empty(),
        format!(
            "{} of {total} forms accepted over {entries} entries (100% required, >= 200 entries){}",
            total - rejected.len(),
            if rejected.is_empty() { String::new() } else { format!("; rejected {}", examples(&rejected)) }
        ),
    )
}

fn stress_repair() -> Outcome {
    let c = checker();
    let mut variants = 0;
    let mut missed = Vec::new();
    for w in seed_forms() {
        let word = normalize(w).unwrap();
        let syllables = syllable_count(&word.spelling);
        if syllables < 2 {
            continue;
        }
        for p in 1..=syllables.min(3) as u8 {
            if Some(p) == word.stress {
                continue;
            }
            let variant = apply_stress(&word.spelling, p).unwrap();
            variants += 1;
            let flagged = !c.check(&variant).unwrap().is_accepted();
            let repaired = flagged && c.suggest(&variant).unwrap().iter().any(|s| s.display == *w);
            if !repaired {
                missed.push(format!("{variant}->{w}"));
            }
        }
    }
    check(
        missed.is_empty(),
        format!(
            "{} of {variants} wrong-stress variants flagged and repaired (100% required){}",
            variants - missed.len(),
            if missed.is_empty() { String::new() } else { format!("; missed {}", examples(&missed)) }
        ),
    )
}

fn single_error_reversal() -> Outcome {
    let c = checker();
    let forms = seed_forms();
    let letters: Vec<char> = LOWER.chars().collect();
    let mut rng = StdRng::seed_from_u64(1995);
    let (mut pairs, mut accepted, mut found) = (0, 0, 0);
    let mut per_kind = [0usize; 4];
    let mut missed = Vec::new();
    while pairs < 1000 {
        let w = &forms[rng.random_range(0..forms.len())];
        let len = clusters(w).len();
        let kind = rng.random_range(0..4);
        let letter = letters[rng.random_range(0..letters.len())];
        let typo = match kind {
            0 => Typo::Delete(rng.random_range(0..len)),
            1 => Typo::Insert(rng.random_range(0..=len), letter),
            2 => Typo::Substitute(rng.random_range(0..len), letter),
            _ => Typo::Transpose(rng.random_range(0..len)),
        };
        let Some(bad) = apply(w, typo) else { continue };
        pairs += 1;
        per_kind[kind] += 1;
        if c.check(&bad).unwrap().is_accepted() {
            accepted += 1;
            continue;
        }
        if c.suggest(&bad).unwrap().iter().any(|s| s.display == *w) {
            found += 1;
        } else {
            missed.push(format!("{w}->{bad}"));
        }
    }
    let scored = pairs - accepted;
    check(
        missed.is_empty(),
        format!(
            "original among the top {} suggestions in {found} of {scored} pairs (100% required; \
             {accepted} of {pairs} corruptions were themselves words; del/ins/sub/trans = {per_kind:?}){}",
            CheckerOptions::default().max_suggestions,
            if missed.is_empty() { String::new() } else { format!("; missed {}", examples(&missed)) }
        ),
    )
}

fn trigram_pruning() -> Outcome {
    let word = normalize("πρόγαμμα").unwrap().spelling;
    let unpruned = checker()
        .with_options(CheckerOptions {
            prune: false,
            ..Default::default()
        })
        .reversal_candidates(&word);
    let pruned = checker().reversal_candidates(&word);
    let same: bool = pruned.candidates == unpruned.candidates;
    check(
        unpruned.probes.insert == 216 && pruned.probes.insert < unpruned.probes.insert && same,
        format!(
            "insertion probes {} unpruned (216 required), {} pruned; suggestion sets {}",
            unpruned.probes.insert,
            pruned.probes.insert,
            if same { "equal" } else { "differ" }
        ),
    )
}

fn orthographic_oracle() -> Outcome {
    let c = checker();
    let sets = ConfusionSets::default();
    let (mut compared, mut skipped) = (0, 0);
    let mut differ = Vec::new();
    for w in seed_forms() {
        let s = normalize(w).unwrap().spelling;
        if sets.substitutable_sites(&s) > 6 {
            skipped += 1;
            continue;
        }
        compared += 1;
        if c.orthographic_candidates(&s) != c.orthographic_oracle(&s) {
            differ.push(w.clone());
        }
    }
    check(
        differ.is_empty(),
        format!(
            "{} of {compared} words agree exactly ({skipped} with > 6 sites excluded){}",
            compared - differ.len(),
            if differ.is_empty() { String::new() } else { format!("; differ on {}", examples(&differ)) }
        ),
    )
}

fn random_keys(n: usize, seed: u64) -> Vec<Vec<Letter>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut set = BTreeSet::new();
    while set.len() < n {
        let len = rng.random_range(3..=12);
        set.insert(
            (0..len)
                .map(|_| Letter::from_index(rng.random_range(0..24)).unwrap())
                .collect::<Vec<_>>(),
        );
    }
    set.into_iter().collect()
}

fn trie_scaling() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for n in [1_000, 10_000] {
        let keys = random_keys(n, n as u64);
        let trie = CompressedTrie::build(&keys);
        let mut worst_excess = i64::MIN;
        let mut visits = 0;
        // the keys themselves and a longer miss for each
        for key in &keys {
            let mut longer = key.clone();
            longer.push(Letter::from_index(0).unwrap());
            for probe in [key, &longer] {
                let lookup = trie.stem_candidates(probe);
                visits += lookup.visits;
                worst_excess = worst_excess.max(lookup.visits as i64 - probe.len() as i64 - 1);
            }
        }
        ok &= worst_excess <= 0;
        details.push(format!(
            "{n} keys: max(visits - len - 1) = {worst_excess}, mean visits {:.2}",
            visits as f64 / (2 * n) as f64
        ));
    }
    check(ok, format!("{} (must be <= 0)", details.join("; ")))
}

fn serialization() -> Outcome {
    let d = seed_dict();
    let bytes = d.to_bytes();
    let back = match Dictionary::from_bytes(&bytes) {
        Ok(back) => back,
        Err(e) => return Err(format!("deserialize failed: {e}")),
    };
    let mut differ = Vec::new();
    for w in seed_forms() {
        let word = normalize(w).unwrap();
        if d.accepts(&word) != back.accepts(&word) {
            differ.push(w.clone());
        }
    }
    let rebuilt = build(&load([("seed.gwdl", SEED)]).rules, &[], BuildOptions::default()).to_bytes();
    let identical = rebuilt == bytes && back.to_bytes() == bytes;
    check(
        differ.is_empty() && identical,
        format!(
            "{} of {} verdicts identical after a round trip; rebuild {} ({} bytes)",
            seed_forms().len() - differ.len(),
            seed_forms().len(),
            if identical { "byte-identical" } else { "differs" },
            bytes.len()
        ),
    )
}

/// A document of `n` words: mostly seed forms, every 50th one with a typo,
/// with punctuation and line breaks between.
fn document(n: usize) -> String {
    let forms = seed_forms();
    let mut rng = StdRng::seed_from_u64(42);
    let mut doc = String::new();
    for i in 0..n {
        let w = &forms[rng.random_range(0..forms.len())];
        let word = if i % 50 == 49 {
            apply(w, Typo::Transpose(0)).unwrap_or_else(|| w.clone())
        } else {
            w.clone()
        };
        doc.push_str(&word);
        doc.push_str(match i % 17 {
            16 => ".\n",
            7 => ", ",
            _ => " ",
        });
    }
    doc
}

const THROUGHPUT_FLOOR: f64 = 10_000.0;

fn throughput() -> Outcome {
    let words = 100_000;
    let doc = document(words);
    let c = checker();
    let start = Instant::now();
    let flags = check_document(&doc, &c);
    let secs = start.elapsed().as_secs_f64();
    let rate = words as f64 / secs;
    let flagged: HashSet<&str> = flags.iter().map(|f| f.word.as_str()).collect();
    check(
        rate >= THROUGHPUT_FLOOR,
        format!(
            "{words} words in {secs:.2} s = {rate:.0} words/s (floor {THROUGHPUT_FLOOR:.0}); \
             {} flags, {} distinct, suggestions included",
            flags.len(),
            flagged.len()
        ),
    )
}
