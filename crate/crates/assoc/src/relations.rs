//! Mutation-word identities on the reference seed, read against the flip
//! dynamics of colored triangulations.

use okamoto_algebra::Check;
use okamoto_cluster::reference::{reference_x_seed, seed_ring, triangle_quiver};
use okamoto_cluster::suite::{chart_mismatch, chords, clockwise_seed, exprs, ZCHANGE, ZCHANGE_CLOCKWISE};
use okamoto_cluster::word::{coxeter_word, sigma, sigma_by_mutations, tetragon_word, w2_word};

use crate::triangulation::{Color, ColoredTriangulation, COLORS};

/// Flip a triangulation along a word of mutations given in application order.
pub fn flip_along(t: &ColoredTriangulation, colors: &[Color]) -> ColoredTriangulation {
    colors.iter().fold(*t, |acc, c| acc.flip(*c))
}

/// Application order of the nine-step word for `alpha`.
pub fn w2_colors(alpha: Color, second_form: bool) -> Vec<Color> {
    let b = COLORS[(alpha.index() + 1) % 3];
    let g = COLORS[(alpha.index() + 2) % 3];
    let (x, y) = if second_form { (g, b) } else { (b, g) };
    vec![alpha, b, g, alpha, x, y, x, y, x]
}

/// Swap of the two colors other than `alpha`.
pub fn swap_others(alpha: Color) -> [Color; 3] {
    let mut p = COLORS;
    p.swap((alpha.index() + 1) % 3, (alpha.index() + 2) % 3);
    p
}

pub fn run_checks() -> Vec<Check> {
    let ring = seed_ring("Z");
    let s0 = reference_x_seed(&ring);
    let q = s0.quiver.clone();
    let zchange = exprs(&ring, &ZCHANGE);
    let reference = ColoredTriangulation::reference();
    let rotated = reference.rotate(3);
    let mut out = Vec::new();

    for alpha in COLORS {
        let a = alpha.name();
        let cox = coxeter_word(&q, a).expect("label");
        let (b, g) = okamoto_cluster::word::others(a).expect("label");
        out.push(Check::new(
            format!("coxeter-{a}"),
            format!("(mu_{g} mu_{b})^5 is the identity on seeds and on triangulations"),
            cox.apply(&s0) == s0
                && flip_along(&reference, &[Color::parse(b).expect("c"), Color::parse(g).expect("c")].repeat(5))
                    == reference,
        ));
        let s1 = sigma_by_mutations(&q, a, false).expect("label").apply(&s0);
        let s2 = sigma_by_mutations(&q, a, true).expect("label").apply(&s0);
        let swap = sigma(&q, a).expect("label").apply(&s0);
        out.push(Check::new(
            format!("sigma-forms-{a}"),
            "both half-decagon words equal the color swap",
            s1 == s2 && s1 == swap,
        ));
    }

    for alpha in COLORS {
        let a = alpha.name();
        let one = w2_word(&q, a, false).expect("label").apply(&s0);
        let two = w2_word(&q, a, true).expect("label").apply(&s0);
        out.push(Check::new(
            format!("w2-forms-{a}"),
            "both nine-step forms agree",
            one == two,
        ));
        out.push(Check::from_witness(
            format!("w2-zchange-{a}"),
            "the nine-step word gives the changed chart and keeps the quiver",
            chart_mismatch(&ring, &chords(&one), &zchange)
                .or_else(|| (one.quiver != triangle_quiver()).then(|| "quiver moved".to_string())),
        ));
        let tri1 = flip_along(&reference, &w2_colors(alpha, false));
        let tri2 = flip_along(&reference, &w2_colors(alpha, true));
        out.push(Check::new(
            format!("w2-rotation-{a}"),
            "on triangulations the nine flips are the half-turn",
            tri1 == rotated && tri2 == rotated,
        ));
        // red 4-path through a tetragon, closed by a swap
        let four = sigma(&q, a).expect("label").then_after(&tetragon_word(&q, a, false).expect("label"));
        let cols = [alpha, COLORS[(alpha.index() + 1) % 3], COLORS[(alpha.index() + 2) % 3], alpha];
        let tri4 = flip_along(&reference, &cols).recolor(swap_others(alpha));
        out.push(Check::new(
            format!("red-path-{a}"),
            "four flips through a tetragon, then the swap, reach the same seed and triangulation",
            four.apply(&s0) == one && tri4 == rotated,
        ));
    }

    let w = w2_word(&q, "O", false).expect("label");
    let once = w.apply(&s0);
    out.push(Check::new("w2-involution", "the nine-step word is an involution", w.apply(&once) == s0));

    let cw = clockwise_seed(&ring);
    let cw_img = w.apply(&cw);
    out.push(Check::from_witness(
        "w2-clockwise",
        "the nine-step word on the clockwise quiver",
        chart_mismatch(&ring, &chords(&cw_img), &exprs(&ring, &ZCHANGE_CLOCKWISE)),
    ));
    for alpha in COLORS {
        let a = alpha.name();
        let swap = sigma(&q, a).expect("label");
        let lhs = swap.apply(&once);
        let rhs = w.apply(&swap.apply(&s0));
        out.push(Check::new(
            format!("w2-commutes-{a}"),
            format!("the nine-step word commutes with sigma_{a}"),
            lhs == rhs,
        ));
    }
    out
}
