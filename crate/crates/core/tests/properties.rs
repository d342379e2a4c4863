use calogero::coeff::rat;
use calogero::harmonics::HarmonicBuilder;
use calogero::intertwine::{dunkl_pairing, intertwining_residual, IntertwinerContext};
use calogero::poly::symmetric_monomial_basis;
use calogero::random::{random_diagram, random_homogeneous, random_poly, rng, small_rational};
use calogero::spectra::{degeneracy, enumerate_levels, partitions_count};
use calogero::spin::{full_content, level_content, spin_content};
use calogero::{
    DunklContext, DunklFamily, ExactRational, GaussianRational, ModelVariant, MultiIndex, MultiPoly, VirtualCharacter,
};
use proptest::prelude::*;
use rand::Rng;

fn coupling() -> impl Strategy<Value = ExactRational> {
    (0i64..7, 1i64..4).prop_map(|(a, b)| rat(a, b))
}

fn random_symmetric(seed: u64, n: usize, max_degree: u16) -> MultiPoly {
    let mut r = rng(seed);
    let mut f = MultiPoly::zero(n);
    for d in 0..=max_degree {
        for b in symmetric_monomial_basis(n, d) {
            if r.gen_bool(0.5) {
                f.add_assign_ref(&b.scale(&small_rational(&mut r)));
            }
        }
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dunkl_operators_commute(n in 2usize..5, g in coupling(), seed: u64) {
        let ctx = DunklContext::new(n, g).unwrap();
        let f = random_poly(&mut rng(seed), n, 4, 5);
        for i in 0..n {
            for j in i + 1..n {
                let ij = ctx.apply_poly(i, &ctx.apply_poly(j, &f).unwrap()).unwrap();
                let ji = ctx.apply_poly(j, &ctx.apply_poly(i, &f).unwrap()).unwrap();
                prop_assert_eq!(ij, ji);
            }
        }
    }

    #[test]
    fn dunkl_sum_is_total_derivative(n in 2usize..5, g in coupling(), seed: u64) {
        let ctx = DunklContext::new(n, g).unwrap();
        let f = random_poly(&mut rng(seed), n, 5, 6);
        let mut lhs = MultiPoly::zero(n);
        let mut rhs = MultiPoly::zero(n);
        for i in 0..n {
            lhs.add_assign_ref(&ctx.apply_poly(i, &f).unwrap());
            rhs.add_assign_ref(&f.derivative(i));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_is_symmetric_and_adjoint(n in 2usize..4, g in coupling(), d in 1u16..4, seed: u64) {
        let ctx = DunklContext::new(n, g).unwrap();
        let mut r = rng(seed);
        let p = random_homogeneous(&mut r, n, d, 3);
        let q = random_homogeneous(&mut r, n, d, 3);
        prop_assert_eq!(dunkl_pairing(&ctx, &p, &q).unwrap(), dunkl_pairing(&ctx, &q, &p).unwrap());
        let lower = random_homogeneous(&mut r, n, d - 1, 3);
        let i = r.gen_range(0..n);
        let xi = &MultiPoly::var(n, i) * &lower;
        prop_assert_eq!(
            dunkl_pairing(&ctx, &xi, &q).unwrap(),
            dunkl_pairing(&ctx, &lower, &ctx.apply_poly(i, &q).unwrap()).unwrap()
        );
    }

    #[test]
    fn gauged_operator_is_newton_two_on_symmetric_input(n in 2usize..5, g in coupling(), seed: u64) {
        let ctx = DunklContext::new(n, g).unwrap();
        let f = random_symmetric(seed, n, 5);
        prop_assert_eq!(ctx.calogero_l_apply(&f).unwrap(), ctx.newton_dunkl_poly(2, &f).unwrap());
    }

    #[test]
    fn intertwiner_on_mixed_symmetric_input(n in 2usize..4, g in coupling(), seed: u64) {
        let ictx = IntertwinerContext::new(DunklContext::new(n, g).unwrap());
        let f = random_symmetric(seed, n, 4);
        prop_assert!(intertwining_residual(&ictx, &f).unwrap().is_zero());
    }

    #[test]
    fn harmonics_at_generic_coupling(n in 2usize..5, g in coupling(), m in 0u64..5) {
        let ctx = DunklContext::new(n, g).unwrap();
        let mut b = HarmonicBuilder::new(&ctx);
        for k in enumerate_levels(ModelVariant::Angular, n, m) {
            let h = b.build(&k).unwrap();
            prop_assert!(h.poly.is_symmetric());
            prop_assert!(ctx.calogero_l_apply(&h.poly).unwrap().is_zero());
        }
    }

    #[test]
    fn polynomial_text_round_trip(n in 1usize..5, seed: u64) {
        let f = random_poly(&mut rng(seed), n, 4, 6);
        prop_assert_eq!(MultiPoly::parse(&f.to_string(), n).unwrap(), f);
    }

    #[test]
    fn spin_content_depends_only_on_positions(n in 2usize..6, s in 1u32..5, seed: u64) {
        let mut r = rng(seed);
        let support: Vec<bool> = (0..n).map(|_| r.gen_bool(0.4)).collect();
        let a = MultiIndex(support.iter().map(|&on| if on { r.gen_range(1..4) } else { 0 }).collect());
        let b = MultiIndex(support.iter().map(|&on| if on { r.gen_range(1..4) } else { 0 }).collect());
        prop_assert_eq!(level_content(s, &a), level_content(s, &b));
    }

    #[test]
    fn angular_contents_rebuild_the_full_content(n in 2usize..6, s in 1u32..4, m in 0u64..7) {
        let mut sum = VirtualCharacter::zero(s);
        for j in (m % 2..=m).step_by(2) {
            sum.add_assign(&spin_content(ModelVariant::Angular, s, n, j).unwrap(), 1);
        }
        prop_assert_eq!(sum, full_content(s, n, m as i64));
    }

    #[test]
    fn virtual_character_text_round_trip(s in 1u32..5, seed: u64) {
        let mut r = rng(seed);
        let mut c = VirtualCharacter::zero(s);
        for _ in 0..r.gen_range(0..4) {
            let d = random_diagram(&mut r, s as usize, 4);
            c.add(&d, r.gen_range(-3..4));
        }
        prop_assert_eq!(VirtualCharacter::parse(s, &c.to_string()).unwrap(), c);
    }

    #[test]
    fn angular_degeneracies_sum_to_partitions(n in 1usize..7, m in 0u64..15) {
        let total: u128 = (m % 2..=m).step_by(2).map(|j| degeneracy(ModelVariant::Angular, n, j)).sum();
        prop_assert_eq!(total, partitions_count(n, m as i64));
        prop_assert_eq!(degeneracy(ModelVariant::Full, n, m), partitions_count(n, m as i64));
    }
}

#[test]
fn pairing_separates_levels() {
    let ctx = DunklContext::new(3, rat(1, 2)).unwrap();
    let h2 = HarmonicBuilder::new(&ctx).build(&MultiIndex::unit(3, 1, 2)).unwrap().poly;
    let r2 = MultiPoly::r_squared(3);
    // Harmonics are orthogonal to everything divisible by r².
    assert_eq!(dunkl_pairing(&ctx, &r2, &h2).unwrap(), GaussianRational::from(0));
    assert_ne!(dunkl_pairing(&ctx, &h2, &h2).unwrap(), GaussianRational::from(0));
}
