//! Worked examples through the public API, grouped by area.

use orbitnorm::degeneration::fundamental_degeneration;
use orbitnorm::spectra::{
    char_formula_spectrum, induced_multiplicity, normality_by_spectrum, orbit_shape, pairs_shape, r_closure_spectrum,
    r_orbit_spectrum, sum_distinguished_spectrum, CharFormulaSpec, KtypeRequest,
};
use orbitnorm::weights::{
    branch_to_levi, constant_term, diminutive_ktypes, dimension, weight_multiplicity, LeviShape, RootSystem, RootType,
    Weight,
};
use orbitnorm::{
    attach_parameters, b_module_factors, distinguished_parameter, theta_transfer, AttachedParameter, Block, Error,
    InducedForm, Orbit,
};

fn c(cols: &[u32]) -> Orbit {
    Orbit::symplectic(cols).unwrap()
}

fn cols(o: &Orbit) -> Vec<u32> {
    o.columns().to_vec()
}

fn chain_lists(o: &Orbit) -> Vec<Vec<u32>> {
    o.chain_decompose().chains().iter().map(|ch| ch.entries().to_vec()).collect()
}

#[test]
fn validation() {
    assert_eq!(c(&[8, 6, 6, 4, 4, 2, 2, 0]).size(), 32);
    let padded = c(&[2]);
    assert_eq!(cols(&padded), [2, 0]);
    assert_eq!(padded.size(), 2);
    assert!(matches!(Orbit::symplectic(&[3, 2]), Err(Error::ParityViolation { .. })));
}

#[test]
fn chains() {
    assert_eq!(chain_lists(&c(&[10, 8, 8, 4, 4, 4, 3, 3, 2, 0])), [vec![10, 8, 8, 4, 4, 4], vec![3, 3], vec![2, 0]]);
    assert_eq!(chain_lists(&c(&[8, 8, 6, 6, 6, 4, 4, 2])), [vec![8, 8], vec![6, 6, 6, 4, 4, 2]]);
    assert_eq!(chain_lists(&c(&[2, 0])), [vec![2, 0]]);
}

#[test]
fn genericity_and_specialness() {
    assert!(c(&[12, 10, 10, 8, 7, 5, 5, 3, 3, 1]).is_generic());
    assert!(!c(&[8, 8, 6, 6, 6, 4, 4, 2]).is_generic());
    assert!(c(&[9, 9, 8, 6, 5, 5, 4, 2, 2, 0]).is_generic());
    assert!(c(&[6, 6, 3, 3]).is_special().unwrap());
    assert!(c(&[2, 2]).is_special().unwrap());
    // odd c_2 = 3 paired with c_3 = 1
    assert!(!c(&[3, 3, 3, 1]).is_special().unwrap());
}

#[test]
fn component_groups() {
    let o = c(&[10, 8, 8, 4, 4, 4, 3, 3, 2, 0]);
    assert_eq!(o.component_group_rank().unwrap(), 3);
    assert_eq!(o.lusztig_quotient_rank().unwrap(), 1);
    assert_eq!(c(&[2, 0]).component_group_rank().unwrap(), 1);
    assert_eq!(c(&[8, 6, 6, 4, 4, 2, 2, 0]).component_group_rank().unwrap(), 1);
    assert_eq!(c(&[8, 8, 5, 5, 3, 3]).lusztig_quotient_rank().unwrap(), 1);
    let small = c(&[6, 6, 3, 3]);
    assert_eq!(small.lusztig_quotient_rank().unwrap(), 1);
    // against the parameter count inside Norm((6,4,4,2,2,0))
    let set = c(&[6, 4, 4, 2, 2, 0]).norm_set().unwrap();
    assert_eq!(set.attached_parameters(set.find(&small).unwrap()).len(), 2);
}

#[test]
fn normality() {
    assert!(!c(&[4, 2, 2, 0]).kp_normality().unwrap().is_normal());
    assert!(!c(&[8, 8, 6, 6, 6, 4, 4, 2]).kp_normality().unwrap().is_normal());
    assert!(c(&[6, 4, 2, 0]).kp_normality().unwrap().is_normal());
    assert!(!normality_by_spectrum(&c(&[4, 2, 2, 0])).unwrap());
    assert!(normality_by_spectrum(&c(&[6, 4, 2, 0])).unwrap());
}

#[test]
fn infinitesimal_characters() {
    let show = |o: &Orbit| o.infinitesimal_character().unwrap().iter().map(ToString::to_string).collect::<Vec<_>>();
    assert_eq!(show(&c(&[6, 4, 4, 2, 2, 0])), ["3", "2", "2", "1", "1", "1", "1", "0", "0"]);
    assert_eq!(show(&c(&[6, 4, 4, 2])), ["3", "2", "2", "1", "1", "1", "0", "0"]);
    assert_eq!(show(&c(&[2, 0])), ["1"]);
}

#[test]
fn sharp_orbits_and_closure_order() {
    assert_eq!(cols(&c(&[6, 4, 4, 2]).sharp_orbit().unwrap()), [5, 5, 3, 3]);
    assert_eq!(cols(&c(&[8, 6, 6, 4, 4, 2, 2, 0]).sharp_orbit().unwrap()), [7, 7, 5, 5, 3, 3, 1, 1]);
    assert_eq!(cols(&c(&[2, 2]).sharp_orbit().unwrap()), [2, 2]);
    assert!(c(&[6, 6, 3, 3]).closure_leq(&c(&[6, 4, 4, 2, 2, 0])).unwrap());
    let o = c(&[6, 4, 4, 2]);
    assert!(o.closure_leq(&o).unwrap());
    // rows (2,2,2,2) sit below rows (4,4)
    assert!(c(&[4, 4]).closure_leq(&c(&[2, 2, 2, 2])).unwrap());
    assert!(!c(&[2, 2, 2, 2]).closure_leq(&c(&[4, 4])).unwrap());
}

#[test]
fn extraction() {
    let (g, r) = c(&[9, 9, 9, 9, 8, 6, 6, 6, 5, 5, 4, 2, 2, 2, 2, 0]).extract_generic().unwrap();
    assert_eq!(cols(&g), [9, 9, 8, 6, 5, 5, 4, 2, 2, 0]);
    assert_eq!(r, [9, 6, 2]);
    let (g, r) = c(&[6, 4, 4, 4, 4, 4, 4, 4, 4, 2, 2, 2]).extract_generic().unwrap();
    assert_eq!(cols(&g), [6, 4, 4, 2]);
    assert_eq!(r, [4, 4, 4, 2]);
    let o = c(&[6, 4, 4, 2]);
    assert_eq!(o.extract_generic().unwrap(), (o.clone(), vec![]));
}

#[test]
fn orthogonal_image() {
    assert_eq!(cols(&Orbit::orthogonal(&[4, 4, 2]).unwrap().to_symplectic().unwrap()), [6, 4, 4, 2]);
    assert_eq!(cols(&Orbit::orthogonal(&[2, 2]).unwrap().to_symplectic().unwrap()), [4, 2, 2, 0]);
    assert_eq!(cols(&Orbit::orthogonal(&[0]).unwrap().to_symplectic().unwrap()), [2, 0]);
}

#[test]
fn degenerations() {
    assert_eq!(fundamental_degeneration([4, 2, 2, 0]).unwrap().1, [4, 4]);
    assert_eq!(fundamental_degeneration([6, 6, 6, 4]).unwrap().1, [7, 7, 4, 4]);
    assert_eq!(fundamental_degeneration([7, 5, 5, 5]).unwrap().1, [7, 7, 4, 4]);
}

#[test]
fn norm_sets() {
    let set = c(&[8, 6, 6, 4, 4, 2, 2, 0]).norm_set().unwrap();
    assert_eq!(set.len(), 8);
    assert_eq!(cols(set.minimum()), [8, 8, 5, 5, 3, 3]);

    let set = c(&[6, 4, 4, 2, 2, 0]).norm_set().unwrap();
    let mut got: Vec<Vec<u32>> = set.orbits().map(cols).collect();
    got.sort();
    assert_eq!(got, [vec![6, 4, 4, 2, 2, 0], vec![6, 4, 4, 4], vec![6, 6, 2, 2, 2, 0], vec![6, 6, 3, 3]]);
    assert_eq!(cols(&c(&[6, 4, 4, 2, 2, 0]).norm_minimum().unwrap()), [6, 6, 3, 3]);

    assert_eq!(c(&[4, 4]).norm_set().unwrap().len(), 1);
    assert_eq!(cols(&c(&[2, 2]).norm_minimum().unwrap()), [2, 2]);
}

#[test]
fn parameters() {
    let origin = c(&[8, 6, 6, 4, 4, 2, 2, 0]);
    let top = attach_parameters(&origin, &origin).unwrap();
    assert_eq!(top.len(), 1);
    assert_eq!(top[0].to_string(), "[8(66)(44)(22)0]_0^+");

    let m = c(&[8, 6, 6, 6, 2, 2, 2, 0]);
    assert_eq!(distinguished_parameter(&origin, &m).unwrap().to_string(), "[8(66)6]_0^-[2(22)0]_0^+");
    let bottom = c(&[8, 8, 5, 5, 3, 3]);
    assert_eq!(distinguished_parameter(&origin, &bottom).unwrap().to_string(), "[88]_0^+[55]_0^+[33]_0^+");

    let o = c(&[12, 10, 10, 8, 7, 5, 5, 3, 3, 1]);
    assert_eq!(distinguished_parameter(&o, &o).unwrap().to_string(), "[12(10,10)8]_0^-[7(55)(33)1]_1^+");
}

#[test]
fn induced_forms() {
    let p = AttachedParameter::parse("[4(22)0]_0^+").unwrap();
    assert_eq!(
        p.to_induced_form(),
        InducedForm { blocks: vec![Block { size: 2, ktype: vec![1, 1] }, Block { size: 2, ktype: vec![0, 0] }] }
    );
    let p = AttachedParameter::parse("[33]_0^+").unwrap();
    assert_eq!(p.to_induced_form().blocks, [Block { size: 3, ktype: vec![0; 3] }]);
    let p = AttachedParameter::parse("[88]_0^-").unwrap();
    assert_eq!(p.to_induced_form().blocks, [Block { size: 8, ktype: vec![1; 8] }]);
}

#[test]
fn module_factors() {
    assert_eq!(b_module_factors(&c(&[8, 6, 6, 4, 4, 2, 2, 0])).unwrap().len(), 8);
    let fs: Vec<String> = b_module_factors(&c(&[4, 2, 2, 0])).unwrap().iter().map(|f| f.parameter.expanded_notation()).collect();
    assert_eq!(fs, ["{2,2}^- {4,0}^+", "{4,4}^+"]);
    let fs = b_module_factors(&c(&[2, 2])).unwrap();
    assert_eq!(fs.len(), 1);
    assert_eq!(fs[0].parameter.expanded_notation(), "{2,2}^+");
}

#[test]
fn theta() {
    let q = Orbit::orthogonal(&[4, 4, 2]).unwrap();
    let t = theta_transfer(&q, &AttachedParameter::parse("[6(44)2]_0^-").unwrap()).unwrap();
    assert_eq!(t.interior, [4]);
    assert_eq!(t.tail, 2);
    assert_eq!(t.to_string(), "{4,4}^- [2]^-");

    let q = Orbit::orthogonal(&[2, 2, 0]).unwrap();
    let t = theta_transfer(&q, &AttachedParameter::parse("[4(22)0]_0^+").unwrap()).unwrap();
    assert_eq!(t.to_string(), "{2,2}^- [0]^+");

    let wrong = AttachedParameter::parse("[44]_0^+").unwrap();
    assert!(matches!(
        theta_transfer(&Orbit::orthogonal(&[4, 4, 2]).unwrap(), &wrong),
        Err(Error::LeadingColumnMissing { expected: 6, found: 4 })
    ));
}

#[test]
fn weights() {
    let c2 = RootSystem::new(RootType::C, 2);
    assert_eq!(weight_multiplicity(&c2, &Weight::from_ints(&[1, 1]), &Weight::zero(2)).unwrap(), 1);
    let c1 = RootSystem::new(RootType::C, 1);
    for t in [1, -1] {
        assert_eq!(weight_multiplicity(&c1, &Weight::from_ints(&[1]), &Weight::from_ints(&[t])).unwrap(), 1);
    }
    for n in 1..=5 {
        let sys = RootSystem::new(RootType::C, n);
        let mut e1 = vec![0; n];
        e1[0] = 1;
        assert_eq!(dimension(&sys, &Weight::from_ints(&e1)).unwrap(), 2 * n as u64);
        assert_eq!(dimension(&sys, &Weight::zero(n)).unwrap(), 1);
    }
    assert_eq!(dimension(&c2, &Weight::from_ints(&[1, 1])).unwrap(), 5);
    assert_eq!(diminutive_ktypes(2), [vec![0, 0], vec![1, 0], vec![1, 1]]);
    assert_eq!(diminutive_ktypes(1), [vec![0], vec![1]]);
}

#[test]
fn branching() {
    let c1 = RootSystem::new(RootType::C, 1);
    let c2 = RootSystem::new(RootType::C, 2);
    let c3 = RootSystem::new(RootType::C, 3);
    assert_eq!(branch_to_levi(&c3, &[0, 0, 0], &LeviShape::trivial(&[1, 2])).unwrap(), 1);
    for t in [1, -1] {
        let shape = LeviShape::new(vec![1], vec![vec![t]]).unwrap();
        assert_eq!(branch_to_levi(&c1, &[1], &shape).unwrap(), 1);
        assert_eq!(constant_term(&c1, &[1], &shape).unwrap(), 1);
    }
    // V_(1,1) = det + sl(2) + det^-1 under U(2): no invariant
    let u2 = LeviShape::trivial(&[2]);
    assert_eq!(branch_to_levi(&c2, &[1, 1], &u2).unwrap(), 0);
    assert_eq!(constant_term(&c2, &[1, 1], &u2).unwrap(), 0);
    for target in [[1, -1], [1, 1], [-1, -1]] {
        let shape = LeviShape::new(vec![2], vec![target.to_vec()]).unwrap();
        assert_eq!(branch_to_levi(&c2, &[1, 1], &shape).unwrap(), 1, "{target:?}");
    }
    assert_eq!(constant_term(&c3, &[0, 0, 0], &LeviShape::trivial(&[3])).unwrap(), 1);
    assert_eq!(constant_term(&c2, &[1, 0], &u2).unwrap(), 0);
}

#[test]
fn induced_spectra() {
    let trivial = |sizes: &[usize]| InducedForm::trivial(sizes);
    assert_eq!(induced_multiplicity(&trivial(&[1, 2]), &[0, 0, 0]).unwrap(), 1);
    // torus invariants of V_(1,1) are its zero weight space
    assert_eq!(induced_multiplicity(&trivial(&[1, 1]), &[1, 1]).unwrap(), 1);
    assert_eq!(induced_multiplicity(&trivial(&[2]), &[1, 0]).unwrap(), 0);
}

#[test]
fn spectrum_shapes() {
    assert_eq!(orbit_shape(&c(&[2, 2])).unwrap(), [2]);
    assert_eq!(orbit_shape(&c(&[4, 2, 2, 0])).unwrap(), [2, 2]);
    assert_eq!(orbit_shape(&c(&[6, 4, 4, 2])).unwrap(), [4, 4]);
    assert_eq!(pairs_shape(&c(&[6, 4, 4, 2])).unwrap(), [5, 3]);
    assert_eq!(pairs_shape(&c(&[4, 2, 2, 0])).unwrap(), [3, 1]);

    let d = KtypeRequest::Diminutive;
    let normal = c(&[6, 4, 2, 0]);
    assert_eq!(r_orbit_spectrum(&normal, &d).unwrap(), r_closure_spectrum(&normal, &d).unwrap());
    let two = c(&[2, 2]);
    assert_eq!(r_orbit_spectrum(&two, &d).unwrap(), r_closure_spectrum(&two, &d).unwrap());
    assert_eq!(sum_distinguished_spectrum(&two, &d).unwrap(), r_closure_spectrum(&two, &d).unwrap());
}

#[test]
fn smallest_sum_identity() {
    let d = KtypeRequest::Diminutive;
    let o = c(&[4, 2, 2, 0]);
    let sum = sum_distinguished_spectrum(&o, &d).unwrap();
    assert_eq!(sum.entries().len(), 5);
    assert_eq!(sum, r_closure_spectrum(&o, &d).unwrap());
}

#[test]
fn single_long_chain_sum_identity() {
    let d = KtypeRequest::Diminutive;
    let o = c(&[8, 6, 6, 4, 4, 2, 2, 0]);
    assert_eq!(pairs_shape(&o).unwrap(), [7, 5, 3, 1]);
    let sum = sum_distinguished_spectrum(&o, &d).unwrap();
    assert_eq!(sum.entries().len(), 17);
    assert_eq!(sum, r_closure_spectrum(&o, &d).unwrap());
}

#[test]
fn char_formula_trivial_ktype() {
    let spec = CharFormulaSpec::new(&c(&[6, 4, 4, 2])).unwrap();
    assert_eq!(char_formula_spectrum(&spec, &[0; 8]).unwrap(), 1);
    let labels: Vec<String> = spec.families().iter().map(|f| f.weyl_label()).collect();
    assert_eq!(labels, ["C3 x D2 x C2 x D1", "C3 x D2 x D3", "C1 x D4 x C2 x D1", "C1 x D4 x D3"]);
}
