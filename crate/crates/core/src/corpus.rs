//! Seeded random corpora of homogeneous ideals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groebner::IdealHandle;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingContext};

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// Shape of the random ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusShape {
    pub characteristic: u64,
    pub max_vars: usize,
    pub max_generators: usize,
    pub max_degree: u32,
    /// upper bound on the number of terms of each generator
    pub max_terms: usize,
}

impl Default for CorpusShape {
    fn default() -> Self {
        CorpusShape {
            characteristic: 101,
            max_vars: 4,
            max_generators: 4,
            max_degree: 3,
            max_terms: 3,
        }
    }
}

pub fn corpus_ring(p: u64, nvars: usize) -> Ring {
    RingContext::with_vars(p, &NAMES[..nvars], MonomialOrder::GrevLex).expect("valid ring")
}

fn random_form(rng: &mut ChaCha8Rng, ring: &Ring, degree: u32, max_terms: usize) -> Polynomial {
    let p = ring.characteristic() as u64;
    let mut monomials = ring.monomials_of_degree(degree);
    monomials.shuffle(rng);
    let k = rng.gen_range(1..=max_terms.min(monomials.len()));
    let terms = monomials[..k]
        .iter()
        .map(|m| (ring.field().from_u64(rng.gen_range(1..p)), *m))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// One random homogeneous ideal with nonzero generators.
pub fn random_homogeneous_ideal(rng: &mut ChaCha8Rng, shape: &CorpusShape) -> IdealHandle {
    let n = rng.gen_range(2..=shape.max_vars.clamp(2, NAMES.len()));
    let ring = corpus_ring(shape.characteristic, n);
    let r = rng.gen_range(1..=shape.max_generators);
    let gens = (0..r)
        .map(|_| {
            let d = rng.gen_range(1..=shape.max_degree);
            random_form(rng, &ring, d, shape.max_terms)
        })
        .collect();
    IdealHandle::new(&ring, gens).expect("same ring")
}

/// `count` random homogeneous ideals derived from `seed`.
pub fn random_corpus(seed: u64, count: usize, shape: &CorpusShape) -> Vec<IdealHandle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_homogeneous_ideal(&mut rng, shape)).collect()
}

/// `J` is generated in one degree and `beta_0(J) = beta_0(in(J))`.
pub fn passes_betti0_filter(ideal: &IdealHandle) -> bool {
    let Ok(gens) = ideal.minimal_generator_counts() else {
        return false;
    };
    gens.len() == 1 && gens.values().sum::<usize>() == ideal.initial_ideal().len()
}

/// `count` equigenerated ideals satisfying [`passes_betti0_filter`].
///
/// Candidates cycle through principal ideals, ideals of linear forms and
/// random forms of one degree; random ones rarely pass the filter in degree
/// two or more, so the mix keeps every kind represented.
pub fn equigenerated_corpus(seed: u64, count: usize, shape: &CorpusShape) -> Vec<IdealHandle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut kind = 0usize;
    while out.len() < count {
        let n = rng.gen_range(2..=shape.max_vars.clamp(2, NAMES.len()));
        let ring = corpus_ring(shape.characteristic, n);
        let (degree, r) = match kind % 3 {
            0 => (rng.gen_range(1..=shape.max_degree), 1),
            1 => (1, rng.gen_range(1..=shape.max_generators.min(n))),
            _ => (
                rng.gen_range(1..=shape.max_degree),
                rng.gen_range(1..=shape.max_generators),
            ),
        };
        kind += 1;
        let gens = (0..r)
            .map(|_| random_form(&mut rng, &ring, degree, shape.max_terms))
            .collect();
        let ideal = IdealHandle::new(&ring, gens).expect("same ring");
        if passes_betti0_filter(&ideal) {
            out.push(ideal);
        }
    }
    out
}
