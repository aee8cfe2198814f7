use std::collections::BTreeMap;

use qschur::cellular::CellDatum;
use qschur::comp::shadowed_of_size;
use qschur::fock::{self, BarInvolution, FockConfig, FockVector};
use qschur::partition::multipartitions;
use qschur::tableau::all_semistandard;
use qschur::{DegreeConvention, DimVector, LaurentInt, Multipartition, ShadowedComposition};

const CHARGES: [&[i64]; 4] = [&[0], &[1], &[0, 1], &[0, 2]];

/// `(h_mu, u_xi)` from tableaux: `sum q^-Deg(S)` grouped by type and shape.
fn tableau_pairings(cd: &CellDatum, n: u32) -> BTreeMap<ShadowedComposition, FockVector> {
    let mut out: BTreeMap<ShadowedComposition, FockVector> = BTreeMap::new();
    for t in all_semistandard(n, &cd.charge, cd.rule) {
        let d = cd.deg(&t);
        out.entry(t.mu_grave(&cd.charge)).or_default().add_term(t.shape().clone(), &LaurentInt::q_pow(-d as i32));
    }
    out
}

#[test]
fn h_vectors_count_tableaux() {
    for z in CHARGES {
        let cfg = FockConfig::new(3, z.to_vec()).unwrap();
        let cd = CellDatum::new(cfg.charge.clone());
        for n in 0..=4 {
            let table = tableau_pairings(&cd, n);
            for mu in shadowed_of_size(3, n, z) {
                let h = fock::h_vector(&cfg, &mu).unwrap();
                assert_eq!(h, table.get(&mu).cloned().unwrap_or_default(), "{mu} at {z:?}");
            }
        }
    }
}

#[test]
fn corner_dims_are_inner_products() {
    for z in CHARGES {
        let cfg = FockConfig::new(3, z.to_vec()).unwrap();
        let cd = CellDatum::new(cfg.charge.clone());
        let n = 3;
        let all = shadowed_of_size(3, n, z);
        let hs: Vec<FockVector> = all.iter().map(|mu| fock::h_vector(&cfg, mu).unwrap()).collect();
        for (i, mu) in all.iter().enumerate() {
            for (j, la) in all.iter().enumerate().skip(i) {
                let tab = cd.corner_dim(mu, la);
                assert_eq!(tab, cd.corner_dim(la, mu));
                assert_eq!(tab.bar(), fock::inner(&hs[i], &hs[j]), "{mu} / {la}");
            }
        }
    }
}

#[test]
fn weight_zero_corner() {
    // One box of label j at charge j is the ground field; elsewhere zero.
    for j in 1..=3 {
        for i in 1..=3 {
            let cd = CellDatum::new(qschur::Charge::new(3, vec![i]));
            let mu = ShadowedComposition::new(vec![i], vec![qschur::VectorComposition::from_labels(3, &[j as usize])])
                .unwrap();
            let expected = if i == j { LaurentInt::one() } else { LaurentInt::zero() };
            assert_eq!(cd.corner_dim(&mu, &mu), expected);
        }
    }
}

#[test]
fn bar_involution_properties() {
    for z in CHARGES {
        let cfg = FockConfig::new(3, z.to_vec()).unwrap();
        let psi = BarInvolution::new(&cfg, 4).unwrap();
        for n in 0..=4 {
            for xi in multipartitions(n, cfg.ell()) {
                let u = FockVector::basis(xi.clone());
                let img = psi.apply(&u).unwrap();
                assert_eq!(img.coeff(&xi), LaurentInt::one());
                assert!(img.support().all(|eta| *eta >= xi));
                assert_eq!(psi.apply(&img).unwrap(), u, "{xi}");
            }
            for mu in shadowed_of_size(3, n, z) {
                let h = fock::h_vector(&cfg, &mu).unwrap();
                assert_eq!(psi.apply(&h).unwrap(), h, "{mu}");
            }
        }
        // Antilinearity.
        let xi = multipartitions(3, cfg.ell()).remove(0);
        let c = &LaurentInt::q_pow(2) + &LaurentInt::monomial(3, -1);
        let v = FockVector::basis(xi);
        assert_eq!(psi.apply(&v.scale(&c)).unwrap(), psi.apply(&v).unwrap().scale(&c.bar()));
    }
}

#[test]
fn canonical_basis_properties() {
    for z in CHARGES {
        let cfg = FockConfig::new(3, z.to_vec()).unwrap();
        let psi = BarInvolution::new(&cfg, 4).unwrap();
        for n in 1..=4 {
            let p = fock::canonical_basis(&cfg, n).unwrap();
            for (xi, v) in &p {
                assert_eq!(&psi.apply(v).unwrap(), v);
                assert_eq!(v.coeff(xi), LaurentInt::one());
                for (eta, c) in v.terms() {
                    if eta != xi {
                        assert!(eta > xi);
                        assert!(c.in_negative_part() && c.has_nonnegative_coeffs(), "{xi}: {c} at {eta}");
                    }
                }
            }
        }
    }
}

#[test]
fn adjointness_and_commutation() {
    for (e, z) in [(3usize, vec![0i64, 1]), (4, vec![0, 2]), (5, vec![1])] {
        adjointness_for(e, z);
    }
}

/// Cartan matrix entry of the cyclic quiver, `e >= 3`.
fn cartan(e: usize, i: usize, j: usize) -> i32 {
    if i == j {
        2
    } else if (i % e + 1 == j) || (j % e + 1 == i) {
        -1
    } else {
        0
    }
}

fn adjointness_for(e: usize, z: Vec<i64>) {
    let cfg = FockConfig::new(e, z).unwrap();
    let mut span = Vec::new();
    for n in 0..=3 {
        span.extend(multipartitions(n, cfg.ell()));
    }
    for xi in &span {
        let u = FockVector::basis(xi.clone());
        for i in 1..=e {
            let fu = fock::f_action(&cfg, &DimVector::unit(e, i), &u).unwrap();
            for eta in &span {
                let w = FockVector::basis(eta.clone());
                let eu = fock::e_action(&cfg, i, &w).unwrap();
                assert_eq!(fock::inner(&eu, &u), fock::inner(&w, &fu));
            }
            // The adjoint of f_i commutes with f_j up to q^{a_ij}.
            for j in (1..=e).filter(|&j| j != i) {
                let fj = DimVector::unit(e, j);
                let ef = fock::e_action(&cfg, i, &fock::f_action(&cfg, &fj, &u).unwrap()).unwrap();
                let fe = fock::f_action(&cfg, &fj, &fock::e_action(&cfg, i, &u).unwrap()).unwrap();
                assert_eq!(ef, fe.scale(&LaurentInt::q_pow(cartan(e, i, j))), "e_{i} f_{j} on {xi}");
            }
        }
    }
}

#[test]
fn join_of_h_vectors() {
    let cfg = FockConfig::new(3, vec![0]).unwrap();
    for mu in shadowed_of_size(3, 3, &[0]) {
        let h = fock::h_vector(&cfg, &mu).unwrap();
        for c in qschur::comp::subvectors(&DimVector::new(vec![1, 1, 1])) {
            let parts: Vec<DimVector> = mu.groups()[0].parts().iter().cloned().chain([c.clone()]).collect();
            let joined =
                ShadowedComposition::new(vec![0], vec![qschur::VectorComposition::new(3, parts).unwrap()]).unwrap();
            assert_eq!(fock::f_action(&cfg, &c, &h).unwrap(), fock::h_vector(&cfg, &joined).unwrap());
        }
    }
}

#[test]
fn literal_reading_breaks_monicity() {
    let cfg = FockConfig::new(3, vec![0]).unwrap().with_convention(DegreeConvention::Literal);
    let xi = Multipartition::new(vec![vec![3]]).unwrap();
    let h = fock::ground_h(&cfg, &xi).unwrap();
    assert!(!h.coeff(&xi).is_one());
    assert!(matches!(fock::canonical_basis(&cfg, 3), Err(qschur::Error::Convention(_))));
}
