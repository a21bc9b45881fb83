use crwb_core::exactnum::{GaussianRational as Gq, Matrix, Subspace, Vector};
use crwb_core::hypersurface::{catalogue, field_bracket, HoloField};
use crwb_core::su2family::{build_family, irrep_action};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Gq> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| Gq::complex(a, b, c, d))
}

/// Mostly small integers with many zeros so that rank deficiency is common.
fn sparse_scalar() -> impl Strategy<Value = Gq> {
    prop_oneof![
        3 => Just(Gq::zero()),
        2 => (-2i64..=2).prop_map(Gq::from_int),
        1 => scalar(),
    ]
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(sparse_scalar(), n).prop_map(Vector::new)
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(sparse_scalar(), r * c).prop_map(move |d| Matrix::new(r, c, d).unwrap())
    })
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(vector(n), 0..=n).prop_map(move |vs| Subspace::span(n, &vs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn scalar_text_and_json_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Gq>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Gq>(&json).unwrap(), a);
    }

    #[test]
    fn rank_plus_nullity(m in matrix(5)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        for v in m.kernel().basis() {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5)) {
        let r = m.rref();
        let rr = r.matrix.rref();
        prop_assert_eq!(&rr.matrix, &r.matrix);
        prop_assert_eq!(rr.pivots, r.pivots);
    }

    #[test]
    fn solve_agrees_with_product(m in matrix(4), seed in vector(4)) {
        let x = Vector::new(seed.entries()[..m.cols()].to_vec());
        let b = m.mul_vec(&x).unwrap();
        let sol = m.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
    }

    #[test]
    fn subspace_lattice_laws(a in subspace(4), b in subspace(4)) {
        let s = a.sum(&b).unwrap();
        let i = a.intersection(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(s.contains_subspace(&a).unwrap());
        prop_assert!(a.contains_subspace(&i).unwrap() && b.contains_subspace(&i).unwrap());
        prop_assert_eq!(&a.sum(&a).unwrap(), &a);
        prop_assert_eq!(&a.intersection(&a).unwrap(), &a);
        prop_assert_eq!(a.intersection(&b).unwrap(), b.intersection(&a).unwrap());
    }

    #[test]
    fn canonical_form_ignores_spanning_set(vs in prop::collection::vec(vector(4), 1..4), c in scalar()) {
        let a = Subspace::span(4, &vs).unwrap();
        let mut more = vs.clone();
        more.push(Vector::combination(4, &[c.clone(), Gq::one()], &vs));
        prop_assert_eq!(Subspace::span(4, &more).unwrap(), a);
    }

    #[test]
    fn quotient_complement_coordinates(small in subspace(4), v in vector(4)) {
        let full = Subspace::full(4);
        let comp = small.complement_in(&full).unwrap();
        prop_assert_eq!(comp.len() + small.dim(), 4);
        let c = small.coords_modulo(&v, &comp).unwrap().expect("complement spans the quotient");
        let back = &Vector::combination(4, c.entries(), &comp) - &v;
        prop_assert!(small.contains(&back).unwrap());
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(
        k in 1i64..=3,
        a in vector(10), b in vector(10), c in vector(10), s in scalar()
    ) {
        let fam = build_family(k).unwrap();
        let n = fam.dim();
        let cut = |v: &Vector| Vector::new(v.entries()[..n].to_vec());
        let (a, b, c) = (cut(&a), cut(&b), cut(&c));
        let g = &fam.g;
        let lhs = g.bracket(&(&a.scale(&s) + &b), &c).unwrap();
        let rhs = &g.bracket(&a, &c).unwrap().scale(&s) + &g.bracket(&b, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(g.bracket(&a, &b).unwrap(), g.bracket(&b, &a).unwrap().scale(&Gq::from_int(-1)));
    }

    #[test]
    fn tau_is_an_antilinear_involutive_automorphism(k in 1i64..=4, a in vector(12), b in vector(12), s in scalar()) {
        let fam = build_family(k).unwrap();
        let n = fam.dim();
        let a = Vector::new(a.entries()[..n].to_vec());
        let b = Vector::new(b.entries()[..n].to_vec());
        let t = &fam.tau;
        prop_assert_eq!(t.apply(&t.apply(&a).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(t.apply(&a.scale(&s)).unwrap(), t.apply(&a).unwrap().scale(&s.conj()));
        let lhs = t.apply(&fam.g.bracket(&a, &b).unwrap()).unwrap();
        let rhs = fam.g.bracket(&t.apply(&a).unwrap(), &t.apply(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn representation_property() {
    for k in 1..=6 {
        let rho = irrep_action(k).unwrap();
        assert_eq!(rho.up.commutator(&rho.down).unwrap(), rho.h);
        assert_eq!(rho.h.commutator(&rho.up).unwrap(), rho.up.scale(&Gq::from_int(2)));
        assert_eq!(rho.h.commutator(&rho.down).unwrap(), rho.down.scale(&Gq::from_int(-2)));
        // weights 2h, each once
        let n = (2 * k + 1) as usize;
        let weights: Vec<Gq> = (0..n).map(|i| rho.h.get(i, i).clone()).collect();
        let expected: Vec<Gq> = (-k..=k).map(|h| Gq::from_int(2 * h)).collect();
        assert_eq!(weights, expected);
        for i in 0..n {
            for j in 0..n {
                assert!(i == j || rho.h.get(i, j).is_zero());
            }
        }
    }
}

fn jacobiator(a: &HoloField, b: &HoloField, c: &HoloField) -> HoloField {
    let br = |x: &HoloField, y: &HoloField| field_bracket(x, y).unwrap();
    br(a, &br(b, c)).add(&br(b, &br(c, a))).unwrap().add(&br(c, &br(a, b))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_bracket_jacobi_on_catalogue(k in 1i64..=3, i in 0usize..100, j in 0usize..100, l in 0usize..100) {
        let cat = catalogue(k).unwrap();
        let fields: Vec<&HoloField> = cat.iter().map(|(_, f)| f).collect();
        let n = fields.len();
        let (a, b, c) = (fields[i % n], fields[j % n], fields[l % n]);
        prop_assert!(jacobiator(a, b, c).is_zero());
        prop_assert!(field_bracket(a, a).unwrap().is_zero());
    }

    #[test]
    fn field_bracket_bilinear(k in 1i64..=2, i in 0usize..50, j in 0usize..50, l in 0usize..50, s in scalar()) {
        let cat = catalogue(k).unwrap();
        let fields: Vec<&HoloField> = cat.iter().map(|(_, f)| f).collect();
        let n = fields.len();
        let (a, b, c) = (fields[i % n], fields[j % n], fields[l % n]);
        let lhs = field_bracket(&a.scale(&s).add(b).unwrap(), c).unwrap();
        let rhs = field_bracket(a, c).unwrap().scale(&s).add(&field_bracket(b, c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
