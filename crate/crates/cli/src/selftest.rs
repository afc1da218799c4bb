//! Seeded random checks of the algebra laws: antisymmetry, Jacobi, the
//! associative embedding, and that faces and cofaces preserve brackets.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use brunnian_core::free_lie::{lyndon_words_of_degree, Alphabet, LieElement, LyndonWord};
use brunnian_core::kohno::{layer_alphabet, LayeredElement};

fn element(rng: &mut ChaCha8Rng, alphabet: &Arc<Alphabet>, degree: usize) -> LieElement {
    let words = lyndon_words_of_degree(alphabet.len(), degree);
    let mut x = LieElement::zero(alphabet);
    if words.is_empty() {
        return x;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let w = LyndonWord::new(words[rng.gen_range(0..words.len())].clone()).expect("enumerated words are Lyndon");
        let c = rng.gen_range(-3i64..=3);
        x = &x + &LieElement::basis(alphabet, &w, c).expect("same alphabet");
    }
    x
}

fn layered(rng: &mut ChaCha8Rng, n: usize, degree: usize) -> LayeredElement {
    let mut x = LayeredElement::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let k = rng.gen_range(2..=n);
        let part = LayeredElement::from_layer(n, k, element(rng, &layer_alphabet(k), degree)).expect("layer in range");
        x = x.checked_add(&part).expect("same strand count");
    }
    x
}

fn degrees(rng: &mut ChaCha8Rng, total: usize) -> [usize; 3] {
    let a = rng.gen_range(1..=total - 2);
    let b = rng.gen_range(1..=total - a - 1);
    let c = rng.gen_range(1..=total - a - b);
    [a, b, c]
}

fn free_trial(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let letters = rng.gen_range(2..=4u8);
    let alphabet = Alphabet::shared((0..letters).map(|i| ((b'a' + i) as char).to_string())).expect("distinct letters");
    let [a, b, c] = degrees(rng, 6);
    let (x, y, z) = (
        element(rng, &alphabet, a),
        element(rng, &alphabet, b),
        element(rng, &alphabet, c),
    );
    let br = |u: &LieElement, v: &LieElement| u.bracket(v).expect("same alphabet");
    if br(&x, &y) != -&br(&y, &x) {
        return Err(format!("antisymmetry fails for {x} and {y}"));
    }
    if !(&(&br(&x, &br(&y, &z)) + &br(&y, &br(&z, &x))) + &br(&z, &br(&x, &y))).is_zero() {
        return Err(format!("Jacobi fails for {x}, {y}, {z}"));
    }
    let (ax, ay) = (x.to_associative(), y.to_associative());
    if br(&x, &y).to_associative() != &(&ax * &ay) - &(&ay * &ax) {
        return Err(format!("associative embedding fails for {x} and {y}"));
    }
    Ok(())
}

fn layered_trial(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(2..=4);
    let [a, b, c] = degrees(rng, 5);
    let (x, y, z) = (layered(rng, n, a), layered(rng, n, b), layered(rng, n, c));
    let br = |u: &LayeredElement, v: &LayeredElement| u.lp_bracket(v).expect("same strand count");
    if br(&x, &y) != br(&y, &x).neg() {
        return Err(format!("antisymmetry fails for {x} and {y}"));
    }
    let sum = br(&x, &br(&y, &z))
        .checked_add(&br(&y, &br(&z, &x)))
        .and_then(|s| s.checked_add(&br(&z, &br(&x, &y))))
        .map_err(|e| e.to_string())?;
    if !sum.is_zero() {
        return Err(format!("Jacobi fails for {x}, {y}, {z}"));
    }
    let k = rng.gen_range(1..=n);
    let face = |u: &LayeredElement| u.face(k).expect("face index in range");
    if face(&br(&x, &y)) != br(&face(&x), &face(&y)) {
        return Err(format!("d_{k} does not preserve the bracket of {x} and {y}"));
    }
    let i = rng.gen_range(1..=n + 1);
    let coface = |u: &LayeredElement| u.coface(i).expect("coface index in range");
    if coface(&br(&x, &y)) != br(&coface(&x), &coface(&y)) {
        return Err(format!("d^{i} does not preserve the bracket of {x} and {y}"));
    }
    Ok(())
}

/// Runs `cases` free Lie trials and `max(cases / 5, 1)` trials in `L(P_n)`.
pub fn run(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..cases {
        free_trial(&mut rng).map_err(|e| format!("seed {seed}, free Lie trial {t}: {e}"))?;
    }
    let layered_cases = (cases / 5).max(1);
    for t in 0..layered_cases {
        layered_trial(&mut rng).map_err(|e| format!("seed {seed}, L(P_n) trial {t}: {e}"))?;
    }
    Ok(format!(
        "selftest seed={seed}: {cases} free Lie trials, {layered_cases} L(P_n) trials: PASS"
    ))
}
