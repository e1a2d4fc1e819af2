use iwforms_dsl::{load, parse};
use proptest::prelude::*;

const PIECES: &[&str] = &[
    "ambient", "3", "0", "17", "x0", "x1", "x9", "z", "w", "W", "d", "space", "lie", "seq",
    "points", "rank", "is_integrable", "veronese_web", "true", "false", "+", "-", "*", "/",
    "^", "/\\", "(", ")", "[", "]", ",", ";", "=", "==", "->", "#c\n", "\n", " ", "\t", "1.5",
    "$", "\u{e9}",
];

fn position_inside(src: &str, line: usize, col: usize) -> bool {
    let lines: Vec<&str> = src.split('\n').collect();
    line >= 1
        && line <= lines.len()
        && col >= 1
        && col <= lines[line - 1].chars().count() + 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn random_tokens_give_diagnostics_not_panics(
        idx in prop::collection::vec(0..PIECES.len(), 0..40),
        seps in prop::collection::vec(prop::bool::ANY, 40),
    ) {
        let src: String = idx
            .iter()
            .zip(&seps)
            .map(|(&i, &s)| if s { format!("{} ", PIECES[i]) } else { PIECES[i].to_string() })
            .collect();
        if let Err(d) = parse(&src) {
            prop_assert!(position_inside(&src, d.span.line, d.span.col), "{:?} -> {}", src, d);
        }
        if let Err(d) = load(&src) {
            prop_assert!(position_inside(&src, d.span.line, d.span.col), "{:?} -> {}", src, d);
        }
    }

    #[test]
    fn arbitrary_text_never_panics(src in "\\PC{0,80}") {
        if let Err(d) = load(&src) {
            prop_assert!(position_inside(&src, d.span.line, d.span.col), "{:?} -> {}", src, d);
        }
    }
}
