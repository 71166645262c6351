//! Anshel–Anshel–Goldfeld commutator key exchange with `BV` as platform.
//!
//! Alice publishes `a_1..a_N1` and keeps `A`, a product of `L1` of them and
//! their inverses; Bob does the same with `b_1..b_N2` and `B`. Alice sends
//! `A b_k A^-1` for every `k`, Bob sends `B a_k B^-1`. Substituting the
//! received conjugates into her own recipe gives Alice `B A B^-1`, and Bob
//! likewise obtains `A B A^-1`, so both can form `A B A^-1 B^-1`.
//!
//! This is a simulator. Keys are stored on the session for checking only,
//! and nothing here is a recommendation of secure parameters.

use std::fmt::Write as _;

use crate::bv::{evaluate_word, BVElement, GenLetter, RawTriple};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Alphabet for sampling public elements, in draw order.
pub const SAMPLE_ALPHABET: [GenLetter; 8] = [
    GenLetter {
        family: crate::bv::Family::F,
        index: 0,
        inverse: false,
    },
    GenLetter {
        family: crate::bv::Family::F,
        index: 0,
        inverse: true,
    },
    GenLetter {
        family: crate::bv::Family::F,
        index: 1,
        inverse: false,
    },
    GenLetter {
        family: crate::bv::Family::F,
        index: 1,
        inverse: true,
    },
    GenLetter {
        family: crate::bv::Family::B,
        index: 0,
        inverse: false,
    },
    GenLetter {
        family: crate::bv::Family::B,
        index: 0,
        inverse: true,
    },
    GenLetter {
        family: crate::bv::Family::B,
        index: 1,
        inverse: false,
    },
    GenLetter {
        family: crate::bv::Family::B,
        index: 1,
        inverse: true,
    },
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KexParams {
    pub alice_set_size: usize,
    pub alice_key_length: usize,
    pub bob_set_size: usize,
    pub bob_key_length: usize,
    pub public_gen_word_length: usize,
    pub seed: u64,
}

impl KexParams {
    pub fn validate(&self) -> Result<()> {
        if self.alice_key_length > 0 && self.alice_set_size == 0 {
            return Err(Error::InvalidParams(
                "alice needs a public element to build a key".into(),
            ));
        }
        if self.bob_key_length > 0 && self.bob_set_size == 0 {
            return Err(Error::InvalidParams(
                "bob needs a public element to build a key".into(),
            ));
        }
        Ok(())
    }
}

/// One factor of a private key: `set[index]` or its inverse (0-based index).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecipeStep {
    pub index: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KexSession {
    pub params: KexParams,
    pub alice_public: Vec<BVElement>,
    pub bob_public: Vec<BVElement>,
    /// Simulation only: a real party never reveals its key or recipe.
    pub alice_key: BVElement,
    pub alice_recipe: Vec<RecipeStep>,
    pub bob_key: BVElement,
    pub bob_recipe: Vec<RecipeStep>,
    /// `A b_k A^-1` for each of Bob's public elements.
    pub alice_msg: Vec<BVElement>,
    /// `B a_k B^-1` for each of Alice's public elements.
    pub bob_msg: Vec<BVElement>,
    pub shared_secret_alice: BVElement,
    pub shared_secret_bob: BVElement,
}

impl KexSession {
    pub fn secrets_match(&self) -> bool {
        self.shared_secret_alice.equals(&self.shared_secret_bob)
    }

    /// Plain-text transcript: parameters, public sets, messages, both secrets.
    pub fn transcript(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "params: seed={} alice_set={} alice_len={} bob_set={} bob_len={} gen_len={}",
            p.seed,
            p.alice_set_size,
            p.alice_key_length,
            p.bob_set_size,
            p.bob_key_length,
            p.public_gen_word_length
        );
        let mut block = |title: &str, items: &[BVElement]| {
            for (k, e) in items.iter().enumerate() {
                let _ = writeln!(s, "{title}[{}]:\n{e}", k + 1);
            }
        };
        block("alice_public", &self.alice_public);
        block("bob_public", &self.bob_public);
        block("alice_msg", &self.alice_msg);
        block("bob_msg", &self.bob_msg);
        let _ = writeln!(s, "shared_secret_alice:\n{}", self.shared_secret_alice);
        let _ = writeln!(s, "shared_secret_bob:\n{}", self.shared_secret_bob);
        let _ = writeln!(
            s,
            "{}",
            if self.secrets_match() {
                "secrets match"
            } else {
                "secrets DIFFER"
            }
        );
        s
    }
}

/// A uniformly random word over [`SAMPLE_ALPHABET`].
pub fn sample_word(rng: &mut SplitMix64, word_length: usize) -> Vec<GenLetter> {
    (0..word_length)
        .map(|_| SAMPLE_ALPHABET[rng.below(SAMPLE_ALPHABET.len())])
        .collect()
}

/// Evaluates a random word of the given length.
pub fn sample_element(rng: &mut SplitMix64, word_length: usize) -> BVElement {
    evaluate_word(&sample_word(rng, word_length))
}

/// Product of the recipe's factors; normalized once at the end.
pub fn replay_recipe(set: &[BVElement], recipe: &[RecipeStep]) -> BVElement {
    let mut raw = RawTriple::identity();
    for step in recipe {
        let e = &set[step.index];
        let factor = if step.inverse {
            e.to_raw().invert()
        } else {
            e.to_raw()
        };
        raw = raw.multiply(&factor);
    }
    raw.reduce()
}

/// A random private key built from `public_set`, with the recipe used.
pub fn sample_key(
    rng: &mut SplitMix64,
    public_set: &[BVElement],
    key_length: usize,
) -> Result<(BVElement, Vec<RecipeStep>)> {
    if key_length > 0 && public_set.is_empty() {
        return Err(Error::EmptyPublicSet);
    }
    let recipe: Vec<RecipeStep> = (0..key_length)
        .map(|_| {
            let index = rng.below(public_set.len());
            let inverse = rng.coin();
            RecipeStep { index, inverse }
        })
        .collect();
    Ok((replay_recipe(public_set, &recipe), recipe))
}

/// `key * t * key^-1` for every `t`.
pub fn conjugate_tuple(key: &BVElement, tuple: &[BVElement]) -> Vec<BVElement> {
    let k = key.to_raw();
    let k_inv = k.invert();
    tuple
        .iter()
        .map(|t| k.multiply(&t.to_raw()).multiply(&k_inv).reduce())
        .collect()
}

pub fn run_session(params: &KexParams) -> Result<KexSession> {
    params.validate()?;
    let mut rng = SplitMix64::new(params.seed);
    let g = params.public_gen_word_length;
    let alice_public: Vec<BVElement> = (0..params.alice_set_size)
        .map(|_| sample_element(&mut rng, g))
        .collect();
    let bob_public: Vec<BVElement> = (0..params.bob_set_size)
        .map(|_| sample_element(&mut rng, g))
        .collect();
    let (alice_key, alice_recipe) = sample_key(&mut rng, &alice_public, params.alice_key_length)?;
    let (bob_key, bob_recipe) = sample_key(&mut rng, &bob_public, params.bob_key_length)?;

    let alice_msg = conjugate_tuple(&alice_key, &bob_public);
    let bob_msg = conjugate_tuple(&bob_key, &alice_public);

    // Alice: B A B^-1 from Bob's message, then A (B A B^-1)^-1.
    let bab = replay_recipe(&bob_msg, &alice_recipe);
    let shared_secret_alice = alice_key.to_raw().multiply(&bab.to_raw().invert()).reduce();
    // Bob: A B A^-1 from Alice's message, then (A B A^-1) B^-1.
    let aba = replay_recipe(&alice_msg, &bob_recipe);
    let shared_secret_bob = aba.to_raw().multiply(&bob_key.to_raw().invert()).reduce();

    Ok(KexSession {
        params: params.clone(),
        alice_public,
        bob_public,
        alice_key,
        alice_recipe,
        bob_key,
        bob_recipe,
        alice_msg,
        bob_msg,
        shared_secret_alice,
        shared_secret_bob,
    })
}
