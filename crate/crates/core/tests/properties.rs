use proptest::prelude::*;

use qeuler::bijections::{gamma, gamma_inverse, gr_eta, gr_phi, Banner, Ornament};
use qeuler::combinatorics::{compatible_sequences, des, exc, maj, partitions, Permutation};
use qeuler::poly::MPoly;
use qeuler::shelling::{aid, phi_map, psi_map};
use qeuler::symfunc::{SymBasis, SymElem};

fn perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// A permutation with a compatible sequence over 1..=n, as its ornament. The alphabet
/// 1..=n always admits one: the strict descents number at most n − 1.
fn ornament(max: usize) -> impl Strategy<Value = Ornament> {
    (perm(max), any::<prop::sample::Index>()).prop_map(|(p, i)| {
        let seqs = compatible_sequences(&p, p.len().max(1) as u32);
        gr_phi(&p, &seqs[i.index(seqs.len())]).unwrap()
    })
}

fn sym_elem(basis: SymBasis) -> impl Strategy<Value = SymElem> {
    (1..=6usize)
        .prop_flat_map(|n| {
            let ps = partitions(n);
            let k = ps.len();
            (Just(ps), prop::collection::vec(-5i64..=5, k))
        })
        .prop_map(move |(ps, cs)| {
            let mut e = SymElem::zero(basis);
            for (l, c) in ps.into_iter().zip(cs) {
                e.add_term(l, &MPoly::from_int(c));
            }
            e
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_is_an_involution(p in perm(9)) {
        let q = p.inverse();
        prop_assert_eq!(q.inverse(), p.clone());
        for i in 1..=p.len() as u32 {
            prop_assert_eq!(q.at(p.at(i as usize) as usize), i);
        }
    }

    #[test]
    fn permutation_text_round_trips(p in perm(9)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p.clone());
        prop_assert_eq!(p.cycle_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn psi_then_phi_is_identity(p in perm(9)) {
        let w = psi_map(p.one_line()).unwrap();
        prop_assert_eq!(phi_map(&w).unwrap(), p.one_line().to_vec());
        // bars of ψ(σ) count the descents of σ
        prop_assert_eq!(w.bars() as u32, des(&p));
    }

    #[test]
    fn aid_never_exceeds_its_range(p in perm(9)) {
        let n = p.len() as u32;
        prop_assert!(aid(&p) <= n * n.saturating_sub(1) / 2);
        prop_assert!(exc(&p) <= maj(&p));
    }

    #[test]
    fn gr_eta_inverts_gr_phi(r in ornament(6)) {
        let (p, s) = gr_eta(&r);
        prop_assert_eq!(gr_phi(&p, &s).unwrap(), r.clone());
        prop_assert_eq!(p.cycle_type(), r.cycle_type());
    }

    #[test]
    fn ornament_text_round_trips(r in ornament(6)) {
        prop_assert_eq!(r.to_string().parse::<Ornament>().unwrap(), r);
    }

    #[test]
    fn banner_round_trips(r in ornament(6)) {
        let b = Banner::from_ornament(&r);
        prop_assert_eq!(b.to_ornament(), r);
        prop_assert_eq!(b.to_string().parse::<Banner>().unwrap(), b.clone());
        // γ needs a Lyndon type without parts equal to 1
        if !b.is_empty() && b.increasing_factorization().is_some() {
            let (short, ms) = gamma(&b).unwrap();
            prop_assert_eq!(gamma_inverse(&short, &ms).unwrap(), b);
        }
    }

    #[test]
    fn h_to_s_and_back(e in sym_elem(SymBasis::H)) {
        let s = e.to_basis(SymBasis::S).unwrap();
        prop_assert_eq!(s.to_basis(SymBasis::H).unwrap(), e.clone());
        let p = e.to_basis(SymBasis::P).unwrap();
        prop_assert_eq!(p.to_basis(SymBasis::H).unwrap(), e);
    }

    #[test]
    fn m_to_e_and_back(e in sym_elem(SymBasis::M)) {
        let x = e.to_basis(SymBasis::E).unwrap();
        prop_assert_eq!(x.to_basis(SymBasis::M).unwrap(), e);
    }
}
