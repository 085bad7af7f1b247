use opbialg::graded::GradedBasis;
use opbialg::homology::total_homology;
use opbialg::idempotents::{dynkin, versal, ConvolutionContext};
use opbialg::presets::preset_by_name;
use opbialg::series::{check_koszul_dual, check_triple_identity, gen_series};
use opbialg::structure::{check_h2, primitive_part, verify_structure_iso, Verdict};

fn catalan(n: usize) -> usize {
    let mut c = vec![1usize];
    for m in 1..=n {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c[n]
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut sign, mut p) = (n, 1i64, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// Witt's formula for the dimension of the degree `n` part of the free Lie
/// algebra on `k` letters.
fn witt(k: usize, n: usize) -> usize {
    let s: i64 = (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| mobius(d) * (k as i64).pow((n / d) as u32)).sum();
    (s / n as i64) as usize
}

fn versal_ranks(preset: &str, max: usize) -> Vec<usize> {
    let p = preset_by_name(preset).unwrap();
    let m = p.build();
    let basis = GradedBasis::of_model(m.as_ref(), max);
    let e = versal(m.as_ref(), p.scheme().unwrap(), &basis).unwrap();
    assert!(e.is_idempotent(), "{preset}");
    (1..=max).map(|n| e.rank(n)).collect()
}

fn prim_dims(preset: &str, max: usize) -> Vec<usize> {
    let p = preset_by_name(preset).unwrap();
    let m = p.build();
    (1..=max).map(|n| primitive_part(m.as_ref(), p.generating, n).unwrap().len()).collect()
}

#[test]
fn duplicial_primitives_are_counted_by_catalan_numbers() {
    let want: Vec<usize> = (0..6).map(catalan).collect();
    assert_eq!(versal_ranks("dup", 6), want);
    assert_eq!(prim_dims("dup", 6), want);
}

#[test]
fn tensor_coalgebra_primitives_are_the_letters() {
    assert_eq!(versal_ranks("as", 5), vec![2, 0, 0, 0, 0]);
    assert_eq!(versal_ranks("mag", 5), vec![1, 0, 0, 0, 0]);
}

#[test]
fn classical_primitives_follow_witt() {
    let want: Vec<usize> = (1..=5).map(|n| witt(2, n)).collect();
    assert_eq!(versal_ranks("classical", 5), want);
    assert_eq!(prim_dims("classical", 5), want);
}

#[test]
fn versal_idempotent_agrees_with_first_eulerian_and_shares_its_image_with_dynkin() {
    let p = preset_by_name("classical").unwrap();
    let m = p.build();
    let basis = GradedBasis::of_model(m.as_ref(), 4);
    let e = versal(m.as_ref(), p.scheme().unwrap(), &basis).unwrap();
    let ctx = ConvolutionContext::new(m.as_ref(), "concat", "shuffle", 4).unwrap();
    let e1 = ctx.eulerian(1).unwrap();
    let d = dynkin(&basis).unwrap();
    for n in 1..=4 {
        assert_eq!(e.matrix(n), e1.matrix(n), "degree {n}");
        assert_eq!(d.rank(n), witt(2, n));
    }
    // Dynkin is a projector only after dividing by the degree; its image
    // coincides with that of the Eulerian idempotent.
    assert!(e1.compose(&d).unwrap().sub(&d).unwrap().degrees().all(|(_, m)| m.is_zero()));
}

#[test]
fn convolution_context_rejects_non_associative_inputs() {
    let m = preset_by_name("mag").unwrap().build();
    assert!(ConvolutionContext::new(m.as_ref(), "mul", "dual", 3).is_err());
}

#[test]
fn h2_verdicts() {
    for (name, want) in
        [("as", Verdict::Iso), ("mag", Verdict::Iso), ("dup-bi", Verdict::Iso), ("dup", Verdict::EpiWithSplitting)]
    {
        assert_eq!(check_h2(&preset_by_name(name).unwrap(), 5).unwrap().verdict, want, "{name}");
    }
    assert_eq!(check_h2(&preset_by_name("classical").unwrap(), 3).unwrap().verdict, Verdict::Unsupported);
}

#[test]
fn structure_counts_match_dimensions() {
    for name in ["as", "mag", "dup", "dup-bi"] {
        let r = verify_structure_iso(&preset_by_name(name).unwrap(), 5).unwrap();
        assert!(r.holds, "{name}");
    }
}

#[test]
fn series_identities() {
    for (c, a, p) in [("Com", "As", "Lie"), ("As", "Dup", "Mag")] {
        assert!(check_triple_identity(c, a, p, 12).unwrap().holds, "{c} {a} {p}");
    }
    for (p, d) in [("As", "As"), ("Dup", "Dup!"), ("Mag", "Nil")] {
        assert!(check_koszul_dual(p, d, 12).unwrap().holds, "{p} {d}");
    }
    let bad = check_triple_identity("Com", "As", "Com", 12).unwrap();
    assert!(!bad.holds);
    let s = gen_series("Dup", 9).unwrap();
    let got: Vec<String> = s.coeff_strings()[1..].to_vec();
    let want: Vec<String> = (1..=9).map(|n| catalan(n).to_string()).collect();
    assert_eq!(got, want);
}

#[test]
fn bicomplex_is_acyclic_above_degree_one() {
    assert_eq!(total_homology(1, false).unwrap().homology_dims, Some(vec![1]));
    for n in 2..=5 {
        let r = total_homology(n, false).unwrap();
        let tot = &r.tot_dims;
        assert_eq!(tot[0], catalan(n), "degree {n}");
        // Euler characteristic of an acyclic complex.
        let chi: i64 = tot.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
        assert_eq!(chi, 0);
        assert!(r.homology_dims.unwrap().iter().all(|&h| h == 0));
    }
}
