use std::sync::Arc;

use proptest::prelude::*;

use cotensor_core::comodule::pullback;
use cotensor_core::complex::{associator, tensor_with_identity_right};
use cotensor_core::cotensor::cotensor;
use cotensor_core::io::{parse, to_canonical, BuiltinResolver, Document, LoadOptions, Object};
use cotensor_core::{fixtures, gen, DGCoalgebra, Field, Matrix};

fn field_of(k: u8) -> Field {
    match k % 3 {
        0 => Field::gf(2),
        1 => Field::gf(3),
        _ => Field::rationals(),
    }
}

fn coalgebra(k: u8, field: Field, maxdeg: usize) -> Arc<DGCoalgebra> {
    Arc::new(if k % 2 == 0 { fixtures::f2(field, maxdeg) } else { fixtures::f4(field, maxdeg) })
}

/// Size of the column span by enumerating every combination of columns.
fn span_size(m: &Matrix, p: u32) -> usize {
    let f = m.field();
    let mut seen: Vec<Matrix> = Vec::new();
    let combos = (p as usize).pow(m.cols() as u32);
    for code in 0..combos {
        let mut c = code;
        let coeffs: Vec<i64> = (0..m.cols())
            .map(|_| {
                let d = c % p as usize;
                c /= p as usize;
                d as i64
            })
            .collect();
        let v = m.mul(&Matrix::from_i64(f, m.cols(), 1, &coeffs));
        if !seen.contains(&v) {
            seen.push(v);
        }
    }
    seen.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_matches_brute_force(seed in any::<u64>(), rows in 1usize..5, cols in 1usize..5, p in prop::sample::select(vec![2u32, 3])) {
        let m = Matrix::random(Field::gf(p), rows, cols, &mut gen::rng(seed));
        prop_assert_eq!(span_size(&m, p), (p as usize).pow(m.rank() as u32));
        let k = m.kernel_basis();
        prop_assert_eq!(k.cols(), cols - m.rank());
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn splitting_round_trips(seed in any::<u64>(), k in any::<u8>(), maxdeg in 1usize..7) {
        let x = gen::random_complex(field_of(k), maxdeg, 5, &mut gen::rng(seed));
        let s = x.split();
        prop_assert!(s.check(&x).passed(), "{}", s.check(&x));
    }

    #[test]
    fn kunneth(seed in any::<u64>(), k in any::<u8>(), maxdeg in 2usize..6) {
        let mut rng = gen::rng(seed);
        let x = gen::random_complex(field_of(k), maxdeg, 3, &mut rng);
        let y = gen::random_complex(field_of(k), maxdeg, 3, &mut rng);
        let (hx, hy) = (x.homology_dims(), y.homology_dims());
        let hxy = x.tensor(&y).unwrap().homology_dims();
        for n in 0..maxdeg {
            let expected: usize = (0..=n).map(|i| hx[i] * hy[n - i]).sum();
            prop_assert_eq!(hxy[n], expected, "degree {}", n);
        }
    }

    #[test]
    fn associator_is_a_chain_isomorphism(seed in any::<u64>(), k in any::<u8>(), maxdeg in 1usize..5) {
        let mut rng = gen::rng(seed);
        let f = field_of(k);
        let (x, y, z) = (
            gen::random_complex(f, maxdeg, 2, &mut rng),
            gen::random_complex(f, maxdeg, 2, &mut rng),
            gen::random_complex(f, maxdeg, 2, &mut rng),
        );
        let left = x.tensor(&y).unwrap().tensor(&z).unwrap();
        let right = x.tensor(&y.tensor(&z).unwrap()).unwrap();
        let a = associator(x.dims(), y.dims(), z.dims(), f, maxdeg);
        prop_assert!(a.is_chain_map(&left, &right));
        for n in 0..=maxdeg {
            prop_assert!(a.at(n).inverse().is_some());
        }
    }

    #[test]
    fn cotensor_is_left_exact(seed in any::<u64>(), k in any::<u8>()) {
        let maxdeg = 5;
        let mut rng = gen::rng(seed);
        let c = coalgebra(k, field_of(k), maxdeg);
        let x = gen::random_comodule(&c, 2, &mut rng).unwrap();
        let z = gen::random_comodule(&c, 2, &mut rng).unwrap();
        let y = gen::random_comodule(&c, 2, &mut rng).unwrap();
        let f = gen::random_comodule_map(&x, &z, &mut rng).unwrap();
        let (kernel, _) = f.kernel().unwrap();
        let xy = cotensor(&x, &y).unwrap();
        let f_id = tensor_with_identity_right(f.map(), x.dims(), z.dims(), y.dims(), c.field(), maxdeg);
        let ky = cotensor(&kernel, &y).unwrap();
        for n in 0..=maxdeg {
            let rank = f_id.at(n).mul(&xy.embedding[n]).rank();
            prop_assert_eq!(ky.dims()[n], xy.dims()[n] - rank, "degree {}", n);
        }
    }

    #[test]
    fn pullback_mediates_uniquely(seed in any::<u64>(), k in any::<u8>()) {
        let maxdeg = 4;
        let mut rng = gen::rng(seed);
        let c = coalgebra(k, Field::gf(2 + (k as u32 % 2)), maxdeg);
        let a = gen::random_comodule(&c, 2, &mut rng).unwrap();
        let b = gen::random_comodule(&c, 2, &mut rng).unwrap();
        let z = gen::random_comodule(&c, 2, &mut rng).unwrap();
        let f = gen::random_comodule_map(&a, &z, &mut rng).unwrap();
        let g = gen::random_comodule_map(&b, &z, &mut rng).unwrap();
        let p = pullback(&f, &g).unwrap();
        prop_assert!(p.object.is_valid());
        prop_assert!(f.compose(&p.to_left).map() == g.compose(&p.to_right).map());
        // a map into P is recovered from its two legs
        let w = gen::random_comodule(&c, 2, &mut rng).unwrap();
        let h = gen::random_comodule_map(&w, &p.object, &mut rng).unwrap();
        let m = p.mediate(&p.to_left.compose(&h), &p.to_right.compose(&h)).unwrap();
        prop_assert!(m.map() == h.map());
    }

    #[test]
    fn canonical_text_round_trips(seed in any::<u64>(), k in any::<u8>()) {
        let maxdeg = 5;
        let mut rng = gen::rng(seed);
        let field = field_of(k);
        let opts = LoadOptions { field: None, maxdeg };
        let x = gen::random_complex(field, maxdeg, 3, &mut rng);
        let text = to_canonical(&Document::new(Object::Complex(x.clone())));
        let back = parse(&text, &opts, &mut BuiltinResolver).unwrap();
        prop_assert_eq!(to_canonical(&back), text.clone());
        let Object::Complex(y) = back.object else { unreachable!() };
        prop_assert_eq!(y.with_maxdeg(maxdeg), x);

        let name = if k % 2 == 0 { "f2" } else { "f4" };
        let c = coalgebra(k, field, maxdeg);
        let m = gen::random_comodule(&c, 2, &mut rng).unwrap();
        let doc = Document::new(Object::Comodule { coalgebra: name.into(), comodule: m.clone() });
        let text = to_canonical(&doc);
        let back = parse(&text, &LoadOptions { field: Some(field), maxdeg }, &mut BuiltinResolver).unwrap();
        prop_assert_eq!(to_canonical(&back), text);
        let Object::Comodule { comodule, .. } = back.object else { unreachable!() };
        prop_assert_eq!(comodule, m);
    }
}
