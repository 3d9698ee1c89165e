use std::collections::BTreeSet;
use std::sync::Arc;

use cherednik2::arith::int;
use cherednik2::hom::brute::{degree_basis, hom_dim_by_weight, singular_space_with_basis};
use cherednik2::hom::diagram::{morphism_diagram, span_rank};
use cherednik2::hom::dimension::{dimension_two_criterion, dimension_two_labels};
use cherednik2::hom::maps::proportional;
use cherednik2::hom::{build_hom, compose, hom_conditions, hom_dim_bruteforce, necessary_condition};
use cherednik2::labels::{enumerate_labels, Label, Params};
use cherednik2::module::ModElem;
use cherednik2::oracle::y_act_oracle;
use cherednik2::repro::example36_golden;

fn table_params() -> Arc<Params> {
    Params::from_ints(3, int(1), &[5, 0, -5]).unwrap().shared()
}

fn label(s: &str) -> Label {
    s.parse().unwrap()
}

fn singular_both_ways(e: &ModElem) -> bool {
    e.is_singular() && [1u8, 2].iter().all(|&a| y_act_oracle(e, a).unwrap().is_zero())
}

#[test]
fn necessary_condition_examples() {
    let p = table_params();
    assert!(necessary_condition(&Label::Row(2), &Label::Row(0), &p));
    assert!(!necessary_condition(&Label::Row(0), &Label::Row(2), &p));
    for l in enumerate_labels(3) {
        assert!(necessary_condition(&l, &l, &p));
    }
}

#[test]
fn row_to_row_image() {
    let p = table_params();
    let (from, to) = (Label::Row(2), Label::Row(0));
    let report = hom_conditions(&from, &to, &p);
    assert!(report.exists);
    let firing = report.fired().find(|f| f.rule == 1).expect("rule 1 fires");
    let h = build_hom(&from, &to, &p, firing).unwrap();
    let want = ModElem::parse(to, p.clone(), "x1^10*x2^10@T").unwrap();
    assert!(proportional(&want, &h.gen_image).is_some());
    assert!(singular_both_ways(&h.gen_image));
}

#[test]
fn reversed_pair_has_no_rule() {
    let p = table_params();
    assert!(!hom_conditions(&Label::Row(0), &Label::Row(2), &p).exists);
    assert_eq!(hom_dim_bruteforce(&Label::Row(0), &Label::Row(2), &p, 20).unwrap(), 0);
}

#[test]
fn pair_to_pair_is_two_dimensional() {
    let p = table_params();
    let (from, to) = (label("pair:1,2"), label("pair:0,1"));
    assert_eq!(hom_dim_bruteforce(&from, &to, &p, 25).unwrap(), 2);
    assert_eq!(hom_dim_by_weight(&from, &to, &p, 25), Some(2));
}

#[test]
fn dimension_two_instance_from_search() {
    let p = Params::from_ints(3, int(1), &[-8, 2, 6]).unwrap();
    assert!(dimension_two_criterion(&p, 1, 2, 0));
    let (from, to) = dimension_two_labels(1, 2, 0);
    assert_eq!(hom_dim_bruteforce(&from, &to, &p.shared(), 25).unwrap(), 2);
}

#[test]
fn singular_space_does_not_depend_on_basis_order() {
    let p = table_params();
    let mu = label("pair:0,1");
    let mut basis = degree_basis(&mu, 10);
    let a = singular_space_with_basis(&mu, &p, &basis);
    basis.reverse();
    let b = singular_space_with_basis(&mu, &p, &basis);
    assert_eq!(a.len(), b.len());
    let mut both = a.clone();
    both.extend(b);
    assert_eq!(span_rank(&both), a.len());
    assert!(a.iter().all(singular_both_ways));
}

#[test]
fn weight_route_matches_projection_route() {
    let cases = [(2u32, int(1), vec![3i64, -3]), (3, cherednik2::arith::frac(-1, 2), vec![2, 1, -3]), (3, int(-2), vec![4, 2, -6])];
    for (r, c0, d) in cases {
        let p = Params::from_ints(r, c0, &d).unwrap().shared();
        for from in enumerate_labels(r) {
            for to in enumerate_labels(r) {
                let brute = hom_dim_bruteforce(&from, &to, &p, 10).unwrap();
                assert_eq!(hom_dim_by_weight(&from, &to, &p, 10), Some(brute), "{from} -> {to} at {d:?}");
            }
        }
    }
}

#[test]
fn diagram_reduction_keeps_ten_edges() {
    let p = table_params();
    let d = morphism_diagram(&p).unwrap();
    assert_eq!(d.edges.len(), 21);
    let kept: BTreeSet<(String, String, u32)> =
        d.kept_edges().map(|e| (e.from.to_string(), e.to.to_string(), e.degree)).collect();
    let want: BTreeSet<(String, String, u32)> = [
        ("row:1", "pair:0,1", 2),
        ("row:2", "pair:1,2", 2),
        ("col:1", "pair:0,1", 8),
        ("col:2", "pair:1,2", 8),
        ("pair:0,1", "row:0", 8),
        ("pair:0,1", "col:0", 2),
        ("pair:0,2", "pair:0,1", 5),
        ("pair:1,2", "row:1", 8),
        ("pair:1,2", "col:1", 2),
        ("pair:1,2", "pair:0,2", 5),
    ]
    .iter()
    .map(|(a, b, g)| (a.to_string(), b.to_string(), *g))
    .collect();
    assert_eq!(kept, want);
    let dot = d.to_dot(true);
    assert!(dot.starts_with("digraph morphisms {\n"));
    assert!(dot.trim_end().ends_with('}'));
    assert!(dot.contains("\"row:1\" -> \"pair:0,1\" [label=\"rule=3, deg=2\"];"));
    assert_eq!(d.to_dot(false).matches(" -> ").count(), 21);
}

#[test]
fn composite_through_pair_equals_direct_map() {
    let p = table_params();
    let d = morphism_diagram(&p).unwrap();
    let find = |a: &str, b: &str| d.edges.iter().find(|e| e.from == label(a) && e.to == label(b)).unwrap().hom.clone();
    let via = compose(&find("row:1", "pair:0,1"), &find("pair:0,1", "row:0")).unwrap();
    let direct = find("row:1", "row:0");
    assert!(proportional(&direct.gen_image, &via.gen_image).is_some_and(|s| s != int(0)));
}

#[test]
fn pair_maps_span_rank_two() {
    let p = table_params();
    let d = morphism_diagram(&p).unwrap();
    let groups = d.morphisms_between(&label("pair:1,2"), &label("pair:0,1"), false).unwrap();
    let (deg, maps, rank) = &groups[0];
    assert_eq!(*deg, 10);
    assert!(maps.len() >= 3);
    assert_eq!(*rank, 2);
}

fn golden_row(n: u32) -> (Label, String, String) {
    let g = example36_golden().unwrap();
    let row = g.rows.into_iter().find(|r| r.row == n).unwrap();
    (row.to, row.paper, row.expected)
}

#[test]
fn printed_middle_coefficient_fails_and_derived_value_holds() {
    let p = table_params();
    let (to, paper, expected) = golden_row(13);
    assert!(!ModElem::parse(to, p.clone(), &paper).unwrap().is_singular());
    assert!(singular_both_ways(&ModElem::parse(to, p, &expected).unwrap()));
}

#[test]
fn printed_sign_fails_and_symmetric_sign_holds() {
    let p = table_params();
    let (to, paper, _) = golden_row(14);
    assert!(!ModElem::parse(to, p.clone(), &paper).unwrap().is_singular());
    let derived = "x1^7@T1 + 2/3*x1^4*x2^3@T1 + 1/3*x1*x2^6@T1 + x2^7@T2 + 2/3*x1^3*x2^4@T2 + 1/3*x1^6*x2@T2";
    assert!(singular_both_ways(&ModElem::parse(to, p, derived).unwrap()));
}

#[test]
fn printed_fractions_fail_and_derived_fractions_hold() {
    let p = table_params();
    let (to, paper, _) = golden_row(20);
    let printed = ModElem::parse(to, p.clone(), &paper).unwrap();
    assert!(!printed.is_singular());
    assert!(y_act_oracle(&printed, 1).unwrap() != ModElem::zero(to, p.clone()));
    let derived = ModElem::parse(to, p.clone(), "x1^7@T + 2/3*x1^4*x2^3@T + 1/3*x1*x2^6@T").unwrap();
    assert!(singular_both_ways(&derived));
    // The brute-force singular space of this weight is spanned by it.
    let sing = singular_space_with_basis(&to, &p, &degree_basis(&to, 7));
    let mut all = sing.clone();
    all.push(derived);
    assert_eq!(span_rank(&all), sing.len());
}

#[test]
fn printed_pair_vector_lies_in_the_constructed_space() {
    let p = table_params();
    let (to, paper, _) = golden_row(3);
    let printed = ModElem::parse(to, p.clone(), &paper).unwrap();
    assert!(singular_both_ways(&printed));
    let d = morphism_diagram(&p).unwrap();
    let groups = d.morphisms_between(&label("pair:1,2"), &to, false).unwrap();
    let mut imgs: Vec<ModElem> = Vec::new();
    for h in &groups[0].1 {
        imgs.push(h.image_of_generator(0));
        imgs.push(h.image_of_generator(1));
    }
    let rank = span_rank(&imgs);
    imgs.push(printed);
    assert_eq!(span_rank(&imgs), rank);
}
