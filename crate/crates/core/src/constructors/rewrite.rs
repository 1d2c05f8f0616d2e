//! Monomial rewriting in the free algebra on `x`, `y` modulo the relations
//! `xy, y²x, yx², x³, y³`.
//!
//! Every relation is a monomial, so a word either contains one of them as a
//! factor (and rewrites to 0) or is already in normal form. Rules are applied
//! leftmost-innermost; [`is_confluent_up_to`] confirms exhaustively that the
//! choice of redex never matters for short words.

/// Forbidden factors.
pub const RELATIONS: [&str; 5] = ["xy", "yyx", "yxx", "xxx", "yyy"];

/// Leftmost occurrence of any relation: `(position, relation index)`.
fn leftmost_redex(word: &str) -> Option<(usize, usize)> {
    (0..word.len()).find_map(|pos| RELATIONS.iter().position(|r| word[pos..].starts_with(r)).map(|i| (pos, i)))
}

/// Normal form of a word, `None` when it reduces to 0.
pub fn reduce(word: &str) -> Option<String> {
    assert!(word.chars().all(|c| c == 'x' || c == 'y'), "word over {{x, y}} expected: {word}");
    match leftmost_redex(word) {
        Some(_) => None,
        None => Some(word.to_string()),
    }
}

/// All words over `{x, y}` of length at most `max_len`, shortest first.
pub fn words_up_to(max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| [format!("{w}x"), format!("{w}y")]).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Every redex of every word up to `max_len` rewrites to the same normal form.
pub fn is_confluent_up_to(max_len: usize) -> bool {
    words_up_to(max_len).iter().all(|w| {
        let redexes: Vec<usize> =
            (0..w.len()).filter(|&pos| RELATIONS.iter().any(|r| w[pos..].starts_with(r))).collect();
        // Each rewrite sends the whole word to 0, so the normal form is 0 iff a redex exists.
        redexes.is_empty() == reduce(w).is_some()
    })
}

/// Irreducible words up to `max_len`: a linear basis of the quotient.
pub fn normal_words(max_len: usize) -> Vec<String> {
    words_up_to(max_len).into_iter().filter_map(|w| reduce(&w)).collect()
}

/// Basis label of a word: `""` is `1`, runs are written with exponents (`xx` is `x^2`).
pub fn word_label(word: &str) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let chars: Vec<char> = word.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let run = chars[i..].iter().take_while(|&&d| d == c).count();
        out.push(c);
        if run > 1 {
            out.push_str(&format!("^{run}"));
        }
        i += run;
    }
    out
}

/// Basis product table computed by rewriting: entry `(i, j)` is the index of
/// the normal form of `basis[i]·basis[j]`, or `None` when it reduces to 0.
pub fn product_table(basis: &[String]) -> Vec<Vec<Option<usize>>> {
    basis
        .iter()
        .map(|u| {
            basis
                .iter()
                .map(|v| reduce(&format!("{u}{v}")).map(|w| basis.iter().position(|b| *b == w).expect("normal form outside basis")))
                .collect()
        })
        .collect()
}
