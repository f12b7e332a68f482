use clap::Parser;
use mvlab::doc::{Coeff, DiagramDoc, MatroidDoc, PolynomialDoc, PolytopeDoc};
use mvlab::{run, to_json_text, Cli};
use mvlab_core::base::gale_leq;
use mvlab_core::matroid::{lattice_path_matroid, matroid_polytope};
use mvlab_core::polynomial::{key, Polynomial};
use mvlab_core::schubitope::{schubitope, Diagram};
use mvlab_core::{GenPermutahedron, Subset};
use num_bigint::BigInt;
use proptest::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

/// `text -> doc -> text` is the identity for documents we wrote, and so is
/// `doc -> text -> doc`.
fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(doc: &T) {
    let text = to_json_text(doc).unwrap();
    let back: T = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, doc);
    assert_eq!(to_json_text(&back).unwrap(), text);
}

fn subset_from_mask(n: usize, mask: u32) -> Subset {
    let elements: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
    Subset::new(n, &elements).unwrap()
}

fn diagram() -> impl Strategy<Value = Diagram> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(0u32..1 << n, 0..4).prop_map(move |cols| {
            let cols: Vec<Subset> = cols.into_iter().map(|m| subset_from_mask(n, m)).collect();
            Diagram::new(n, &cols).unwrap()
        })
    })
}

/// Two `k`-subsets of `[n]`, not necessarily Gale comparable.
fn gale_pair() -> impl Strategy<Value = (usize, Subset, Subset)> {
    (2usize..=7).prop_flat_map(|n| {
        (1..n).prop_flat_map(move |k| {
            let pick = || prop::sample::subsequence((1..=n).collect::<Vec<_>>(), k);
            (pick(), pick()).prop_map(move |(a, b)| (n, Subset::new(n, &a).unwrap(), Subset::new(n, &b).unwrap()))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schubitope_documents(d in diagram(), label in proptest::option::of("[a-z {},]{0,12}")) {
        let p = schubitope(&d);
        let doc = PolytopeDoc::new(&p, label);
        round_trip(&doc);
        prop_assert_eq!(doc.to_polytope().unwrap(), p);
        let ddoc = DiagramDoc::new(&d);
        round_trip(&ddoc);
        prop_assert_eq!(ddoc.to_diagram().unwrap(), d);
    }

    #[test]
    fn matroid_documents((n, x, y) in gale_pair()) {
        let (lo, hi) = if gale_leq(&x, &y).unwrap() { (x, y) } else { (y, x) };
        prop_assume!(gale_leq(&lo, &hi).unwrap());
        let m = lattice_path_matroid(&lo, &hi).unwrap();
        let doc = MatroidDoc::new(&m);
        round_trip(&doc);
        prop_assert_eq!(doc.n, n);
        prop_assert_eq!(doc.to_matroid().unwrap(), m.clone());
        round_trip(&PolytopeDoc::new(&matroid_polytope(&m), None));
    }

    #[test]
    fn polynomial_documents(alpha in prop::collection::vec(0u32..=3, 1..=4), big in any::<i64>()) {
        let f = key(&alpha).unwrap();
        let doc = PolynomialDoc::new(&f);
        round_trip(&doc);
        prop_assert_eq!(doc.to_polynomial().unwrap(), f.clone());

        let huge = BigInt::from(big) * BigInt::from(i64::MAX) * BigInt::from(3);
        let g = f.mul(&Polynomial::monomial(vec![0; alpha.len()], huge.clone()));
        let doc = PolynomialDoc::new(&g);
        round_trip(&doc);
        prop_assert_eq!(doc.to_polynomial().unwrap(), g);
        if big != 0 {
            prop_assert!(doc.terms.iter().all(|(_, c)| matches!(c, Coeff::Big(_))));
        }
    }
}

#[test]
fn wire_convention() {
    let seg: PolytopeDoc = serde_json::from_str(r#"{"n": 2, "submodular": [0, 1, 1, 1]}"#).unwrap();
    let p = seg.to_polytope().unwrap();
    let vertices: Vec<Vec<i64>> = p.vertices().unwrap().iter().map(|v| v.coords().to_vec()).collect();
    assert_eq!(vertices, [vec![0, 1], vec![1, 0]]);
    let ray: PolytopeDoc = serde_json::from_str(r#"{"n": 2, "submodular": [0, 1, 0, 1]}"#).unwrap();
    let q = ray.to_polytope().unwrap();
    assert_eq!(
        q,
        GenPermutahedron::point(&mvlab_core::LatticePoint::new(vec![1, 0])).unwrap()
    );

    let f: PolynomialDoc =
        serde_json::from_str(r#"{"n": 2, "terms": [[[1, 0], "-123456789012345678901234567890"]]}"#).unwrap();
    assert_eq!(
        f.to_polynomial().unwrap().coeff(&[1, 0]),
        "-123456789012345678901234567890".parse::<BigInt>().unwrap()
    );
    assert!(
        serde_json::from_str::<PolynomialDoc>(r#"{"n": 2, "terms": [[[1, 0], "x"]]}"#)
            .unwrap()
            .to_polynomial()
            .is_err()
    );
    assert!(
        serde_json::from_str::<MatroidDoc>(r#"{"n": 3, "k": 2, "bases": [[1]]}"#)
            .unwrap()
            .to_matroid()
            .is_err()
    );
}

#[test]
fn commands_are_thin_wrappers() {
    let cli = |args: &[&str]| run(Cli::try_parse_from([&["mvlab"], args].concat()).unwrap()).unwrap();

    let out = cli(&["catalog", "lattice-path", "--n", "4", "--lower", "13", "--upper", "24"]);
    let m = lattice_path_matroid(&Subset::new(4, &[1, 3]).unwrap(), &Subset::new(4, &[2, 4]).unwrap()).unwrap();
    let doc = PolytopeDoc::new(&matroid_polytope(&m), Some("M[{1,3},{2,4}]".into()));
    assert_eq!(out.output, to_json_text(&doc).unwrap());
    assert!(!out.negative);

    let d = Diagram::new(3, &[Subset::new(3, &[1, 3]).unwrap(), Subset::new(3, &[2]).unwrap()]).unwrap();
    let out = cli(&["schubitope", "--columns", "13", "2", "--strict"]);
    assert_eq!(
        out.output,
        to_json_text(&mvlab::commands::schubitope_report(&d, false)).unwrap()
    );
    assert!(out.negative);

    let out = cli(&["sweep", "keys", "--n", "2", "--max-part", "2"]);
    assert_eq!(
        out.output,
        to_json_text(&mvlab::sweep::key_polynomials(2, 2).unwrap()).unwrap()
    );
}
