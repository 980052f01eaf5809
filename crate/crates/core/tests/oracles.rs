//! Worked examples and library results checked against independent oracles.

mod oracle;

use std::collections::BTreeMap;

use degen_core::betti::{
    has_linear_resolution, hh_identity_check, hilbert_betti_consistency, is_componentwise_linear,
    HhVerdict,
};
use degen_core::corpus::{random_corpus, CorpusShape};
use degen_core::groebner::{graded_piece_by_normal_forms, ideal_equality, s_polynomial, GradedPieceBasis};
use degen_core::{
    betti_table, buchberger, koszul_betti, normal_form, parse_input, regularity, HilbertSubject,
    IdealHandle, ModuleSpec, MonomialIdeal, Polynomial, Subject,
};
use oracle::{handle, Ideal, Oracle, SYMMETRIC_MINORS};

fn poly(ring_text: &str, f: &str) -> Polynomial {
    let file = parse_input(&format!("{ring_text}\nI = {f}")).unwrap();
    file.ideal("I").unwrap()[0].clone()
}

fn table_of(ideal: &IdealHandle, subject: Subject) -> BTreeMap<(usize, u32), u64> {
    let spec = ModuleSpec { subject, ideal: ideal.clone() };
    betti_table(&spec).unwrap().entries().clone()
}

fn quotient_oracle(ideal: &IdealHandle, max_row: u32) -> BTreeMap<(usize, u32), u64> {
    Oracle::new(Ideal::from_handle(ideal)).quotient_table(max_row)
}

#[test]
fn parse_examples() {
    let f = parse_input("ring 101 [x,y] grevlex\nI = x^2 - y").unwrap();
    assert_eq!(f.ideal("I").unwrap()[0].to_string(), "x^2 - y");
    let p = parse_input(SYMMETRIC_MINORS).unwrap();
    assert_eq!(p.ideal("I").unwrap().len(), 6);
    assert!(parse_input("ring 4 [x] lex\nI = x").is_err());
}

#[test]
fn reduction_examples() {
    let r = "ring 101 [x,y,z] grevlex";
    let g = handle(&format!("{r}\nI = x^2 - y"));
    let gb = g.gb();
    assert_eq!(normal_form(&poly(r, "x^2*y"), gb).unwrap().to_string(), "y^2");
    assert!(normal_form(&poly(r, "x^2 - y"), gb).unwrap().is_zero());
    assert_eq!(normal_form(&poly(r, "z"), gb).unwrap().to_string(), "z");

    let s = s_polynomial(&poly(r, "x^2 - y"), &poly(r, "x*y - z")).unwrap();
    assert_eq!(s, poly(r, "x*z - y^2"));
    assert!(s_polynomial(&poly(r, "x^2"), &poly(r, "y^2")).unwrap().is_zero());
    let f = poly(r, "x^2 - y*z");
    assert!(s_polynomial(&f, &f).unwrap().is_zero());
}

#[test]
fn groebner_examples() {
    let lex = parse_input("ring 101 [x,y,z] lex\nI = x - y, y - z").unwrap();
    let gb = buchberger(lex.ideal("I").unwrap(), &lex.ring).unwrap();
    let shown: Vec<String> = gb.elements().iter().map(|p| p.to_string()).collect();
    assert_eq!(shown, ["x - z", "y - z"]);
    assert_eq!(gb.initial_ideal().to_string(), "(x, y)");

    let p = handle(SYMMETRIC_MINORS);
    assert_eq!(p.gb().elements().len(), 6);
    assert_eq!(p.initial_ideal().to_string(), "(b^2, b*c, c^2, c*d, c*e, e^2)");
    let from_gb = IdealHandle::new(p.ring(), p.gb().elements().to_vec()).unwrap();
    assert!(ideal_equality(&p, &from_gb).unwrap());

    let a = handle("ring 101 [x,y] grevlex\nI = x, y");
    let b = handle("ring 101 [x,y] grevlex\nI = x + y, y");
    assert!(ideal_equality(&a, &b).unwrap());
    let c = handle("ring 101 [x,y] grevlex\nI = x^2");
    let d = handle("ring 101 [x,y] grevlex\nI = x");
    assert!(!ideal_equality(&c, &d).unwrap());
}

#[test]
fn graded_piece_examples() {
    let i = handle("ring 101 [x,y] grevlex\nI = x, y^2");
    assert_eq!(i.graded_piece(2).unwrap().dimension(), 3);
    let j = handle("ring 101 [x,y] grevlex\nI = x^2");
    assert_eq!(j.graded_piece(1).unwrap().dimension(), 0);
    let p = handle(SYMMETRIC_MINORS);
    assert_eq!(p.graded_piece(2).unwrap().dimension(), 6);
}

#[test]
fn graded_pieces_match_dense_span() {
    let mut ideals = random_corpus(11, 40, &CorpusShape::default());
    ideals.push(handle(SYMMETRIC_MINORS));
    for ideal in ideals {
        let mut o = Oracle::new(Ideal::from_handle(&ideal));
        for d in 0..=5 {
            let by_rows = GradedPieceBasis::from_groebner_basis(ideal.gb(), d).dimension();
            assert_eq!(by_rows, o.ideal_dim(d), "{:?} d={d}", ideal.generators());
            assert_eq!(graded_piece_by_normal_forms(ideal.gb(), d).len(), by_rows);
        }
    }
}

#[test]
fn monomial_ideal_examples() {
    let file = parse_input("ring 101 [x,y,z] grevlex\nI = x").unwrap();
    let ring = file.ring.clone();
    let m = |s: &str| handle(&format!("ring 101 [x,y,z] grevlex\nI = {s}")).initial_ideal();
    assert_eq!(m("x^2, x^2*y, x*y"), m("x^2, x*y"));
    assert!(MonomialIdeal::minimalize(&ring, []).is_zero());
    assert!(m("x*y, y*z").is_square_free());
    assert!(MonomialIdeal::zero(&ring).is_square_free());
    assert!(!handle(SYMMETRIC_MINORS).initial_ideal().is_square_free());

    let xy = handle("ring 101 [x,y] grevlex\nI = x^2, x*y").initial_ideal();
    let names: Vec<String> = xy.standard_monomials(2).iter().map(|g| xy.ring().fmt_monomial(g)).collect();
    assert_eq!(names, ["y^2"]);
    assert_eq!(MonomialIdeal::zero(&ring).standard_monomials(2).len(), 6);
    assert!(m("x, y, z").standard_monomials(1).is_empty());
    assert_eq!(xy.hilbert_numerator().coefficients(), &[1, 0, -2, 1]);
    assert_eq!(MonomialIdeal::zero(&ring).hilbert_numerator().coefficients(), &[1]);
    assert_eq!(xy.hilbert_function(HilbertSubject::Quotient, 2), 1);
    assert_eq!(xy.hilbert_function(HilbertSubject::Ideal, 2), 2);
    assert_eq!(MonomialIdeal::zero(&ring).hilbert_function(HilbertSubject::Quotient, 2), 6);

    let two = handle("ring 101 [x,y] grevlex\nI = x, y^2").initial_ideal();
    assert_eq!(two.trunc_geq(2).to_string(), "(x^2, x*y, y^2)");
    assert!(two.trunc_geq(0).is_zero() && xy.trunc_geq(1).is_zero());
    let sq = handle("ring 101 [x,y] grevlex\nI = x^2").initial_ideal();
    assert_eq!(sq.trunc_geq(2), sq);
    let p = handle(SYMMETRIC_MINORS).initial_ideal();
    assert!(p.trunc_leq(1).is_zero());
    assert_eq!(p.trunc_leq(2), p);
    let xy3 = handle("ring 101 [x,y] grevlex\nI = x, y^3").initial_ideal();
    assert_eq!(xy3.trunc_leq(2).to_string(), "(x)");

    let x = handle("ring 101 [x,y] grevlex\nI = x").initial_ideal();
    assert_eq!(x.scale_by_max_ideal_power(0), x);
    assert_eq!(x.scale_by_max_ideal_power(1).to_string(), "(x^2, x*y)");
    let mm = handle("ring 101 [x,y] grevlex\nI = x, y").initial_ideal();
    assert_eq!(mm.scale_by_max_ideal_power(1).to_string(), "(x^2, x*y, y^2)");

    let cand: Vec<_> = xy.betti_candidate_degrees().unwrap().into_iter().collect();
    assert_eq!(cand, [(0, 2), (1, 3)]);
    assert_eq!(x.betti_candidate_degrees().unwrap().into_iter().collect::<Vec<_>>(), [(0, 1)]);
    let vars: Vec<_> = m("x, y, z").betti_candidate_degrees().unwrap().into_iter().collect();
    assert_eq!(vars, [(0, 1), (1, 2), (2, 3)]);
}

#[test]
fn hilbert_numerators_match_inclusion_exclusion() {
    for ideal in random_corpus(5, 60, &CorpusShape::default()) {
        let init = ideal.initial_ideal();
        let gens = oracle::monomial_exps(&init);
        if gens.len() > 12 {
            continue;
        }
        let n = init.ring().nvars();
        let expected = oracle::inclusion_exclusion_numerator(&gens, n);
        assert_eq!(init.hilbert_numerator().coefficients(), expected.as_slice(), "{init}");
        for d in 0..=8 {
            assert_eq!(
                init.hilbert_function(HilbertSubject::Quotient, d) as usize,
                oracle::count_standard(&gens, n, d)
            );
        }
    }
}

#[test]
fn koszul_examples() {
    let xy = handle("ring 101 [x,y] grevlex\nI = x^2, x*y");
    let spec = ModuleSpec::ideal(&xy);
    assert_eq!(koszul_betti(&spec, 0, 2).unwrap(), 2);
    assert_eq!(koszul_betti(&spec, 1, 3).unwrap(), 1);
    let xyz = handle("ring 101 [x,y,z] grevlex\nI = x, y, z");
    let spec = ModuleSpec::ideal(&xyz);
    assert_eq!(koszul_betti(&spec, 0, 1).unwrap(), 3);
    assert_eq!(koszul_betti(&spec, 1, 2).unwrap(), 3);
    assert_eq!(koszul_betti(&spec, 2, 3).unwrap(), 1);
    assert!(koszul_betti(&spec, 4, 4).is_err());
    let p = handle(SYMMETRIC_MINORS);
    assert_eq!(koszul_betti(&ModuleSpec::quotient(&p), 1, 2).unwrap(), 6);
    let x = handle("ring 101 [x,y] grevlex\nI = x");
    assert_eq!(table_of(&x, Subject::Ideal), BTreeMap::from([((0, 1), 1)]));
}

#[test]
fn symmetric_minor_tables() {
    let p = handle(SYMMETRIC_MINORS);
    let expected_q = BTreeMap::from([((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((3, 4), 3)]);
    assert_eq!(table_of(&p, Subject::Quotient), expected_q);
    assert_eq!(quotient_oracle(&p, 3), expected_q);

    let init = IdealHandle::from_monomial_ideal(&p.initial_ideal());
    let expected_in = BTreeMap::from([
        ((0, 0), 1),
        ((1, 2), 6),
        ((2, 3), 8),
        ((3, 4), 4),
        ((4, 5), 1),
        ((2, 4), 1),
        ((3, 5), 1),
    ]);
    assert_eq!(table_of(&init, Subject::Quotient), expected_in);
    assert_eq!(quotient_oracle(&init, 3), expected_in);

    assert_eq!(regularity(&ModuleSpec::ideal(&p)).unwrap(), 2);
    assert_eq!(regularity(&ModuleSpec::ideal(&init)).unwrap(), 3);
    assert!(has_linear_resolution(&p, 2).unwrap());
    assert!(!has_linear_resolution(&init, 2).unwrap());
    assert!(is_componentwise_linear(&p).unwrap().componentwise_linear);
    let cwl = is_componentwise_linear(&init).unwrap();
    assert!(!cwl.componentwise_linear);
    assert_eq!(cwl.failing_degrees(), [2]);
    assert_eq!(hh_identity_check(&p).unwrap(), HhVerdict::Holds);
    assert_eq!(hh_identity_check(&init).unwrap(), HhVerdict::PreconditionViolated);
    assert!(hilbert_betti_consistency(&p).unwrap());
    assert!(hilbert_betti_consistency(&init).unwrap());
}

#[test]
fn small_linearity_examples() {
    let i = handle("ring 101 [x,y] grevlex\nI = x, y^2");
    assert!(is_componentwise_linear(&i).unwrap().componentwise_linear);
    assert_eq!(hh_identity_check(&i).unwrap(), HhVerdict::Holds);
    let zero = IdealHandle::zero(i.ring());
    assert!(has_linear_resolution(&zero, 3).unwrap());
    let xyz = handle("ring 101 [x,y,z] grevlex\nI = x, y, z");
    assert_eq!(regularity(&ModuleSpec::ideal(&xyz)).unwrap(), 1);
}

#[test]
fn generic_minors_match_oracle() {
    let g = handle(
        "ring 101 [x1,x2,x3,y1,y2,y3] grevlex\n\
         I = x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2",
    );
    let expected = BTreeMap::from([((0, 2), 3), ((1, 3), 2)]);
    assert_eq!(table_of(&g, Subject::Ideal), expected);
    let init = IdealHandle::from_monomial_ideal(&g.initial_ideal());
    assert_eq!(table_of(&init, Subject::Ideal), expected);
    // the diagonal leading terms give the same shape
    let diag = handle("ring 101 [x1,x2,x3,y1,y2,y3] grevlex\nI = x1*y2, x1*y3, x2*y3");
    for ideal in [&g, &init, &diag] {
        let q = quotient_oracle(ideal, 3);
        let shifted: BTreeMap<_, _> =
            q.into_iter().filter(|k| k.0 .0 > 0).map(|((i, j), v)| ((i - 1, j), v)).collect();
        assert_eq!(shifted, expected);
    }
}

#[test]
fn random_tables_match_oracle() {
    let shape = CorpusShape { max_degree: 2, ..CorpusShape::default() };
    for ideal in random_corpus(3, 30, &shape) {
        let lib = table_of(&ideal, Subject::Quotient);
        let top = lib.keys().map(|&(i, j)| j - i as u32).max().unwrap_or(0);
        assert_eq!(quotient_oracle(&ideal, top + 1), lib, "{:?}", ideal.generators());
        // the ideal table is read straight off the ideal's own graded pieces
        let spec = ModuleSpec::ideal(&ideal);
        for (&(i, j), &v) in &lib {
            if i > 0 {
                assert_eq!(koszul_betti(&spec, i - 1, j).unwrap(), v);
            }
        }
    }
}
