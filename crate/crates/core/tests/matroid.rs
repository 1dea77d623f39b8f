use num_bigint::BigInt;
use proptest::prelude::*;

use rootarr_core::ideals::{enumerate_ideals, f4_bad_ideal};
use rootarr_core::linalg::{solve_in_basis, Echelon};
use rootarr_core::{Arrangement, Coord, Ideal, IntPolynomial, Rational, RootSet, RootSystem};

fn sys(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap())
}

fn set(rs: &RootSystem, roots: &[&str]) -> RootSet {
    roots.iter().map(|r| rs.parse_root(r).unwrap()).collect()
}

/// Rank by Gaussian elimination over the rationals.
fn rational_rank(rows: &[&[Coord]]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != Rational::from(0)) else { continue };
        m.swap(p, rank);
        for r in 0..m.len() {
            if r != rank {
                let f = m[r][c] / m[rank][c];
                for k in 0..cols {
                    let v = m[rank][k];
                    m[r][k] -= f * v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `χ(t) = Σ_{S ⊆ A} (−1)^{|S|} t^{r − rank S}`.
fn whitney(rs: &RootSystem, ground: RootSet) -> IntPolynomial {
    let elems = ground.to_vec();
    let rows: Vec<&[Coord]> = elems.iter().map(|&i| rs.root(i)).collect();
    let r = rational_rank(&rows);
    let mut coeffs = vec![0 as Coord; r + 1];
    for mask in 0u32..1 << elems.len() {
        let sub: Vec<&[Coord]> = (0..elems.len()).filter(|&k| mask >> k & 1 == 1).map(|k| rows[k]).collect();
        let sign = if sub.len().is_multiple_of(2) { 1 } else { -1 };
        coeffs[r - rational_rank(&sub)] += sign;
    }
    IntPolynomial::new(coeffs)
}

#[test]
fn characteristic_polynomial_matches_whitney() {
    for t in ["A2", "B2", "G2", "A3", "B3", "C3", "D4"] {
        let rs = sys(t);
        for ideal in enumerate_ideals(&rs) {
            let arr = Arrangement::from_ideal(&ideal);
            assert_eq!(arr.characteristic_polynomial(), whitney(&rs, ideal.members()), "{t} {:?}", ideal);
        }
    }
    let f4 = sys("F4");
    let hat = f4_bad_ideal(&f4).unwrap();
    assert_eq!(Arrangement::new(&f4, hat).characteristic_polynomial(), whitney(&f4, hat));
}

#[test]
fn characteristic_polynomial_examples() {
    let a2 = sys("A2");
    let chi = Arrangement::new(&a2, a2.all()).characteristic_polynomial();
    assert_eq!(chi, IntPolynomial::new(vec![2, -3, 1]));
    assert_eq!(chi.to_string(), "t^2 - 3t + 2");
    let a1 = sys("A1");
    assert_eq!(Arrangement::new(&a1, a1.all()).characteristic_polynomial(), IntPolynomial::from_roots([1]));
    let b2 = sys("B2");
    assert_eq!(Arrangement::new(&b2, b2.all()).characteristic_polynomial(), IntPolynomial::from_roots([1, 3]));
    let g2 = sys("G2");
    assert_eq!(Arrangement::new(&g2, g2.all()).characteristic_polynomial(), IntPolynomial::from_roots([1, 5]));
}

#[test]
fn closure_examples() {
    let a2 = sys("A2");
    let arr = Arrangement::new(&a2, a2.all());
    let c = arr.closure(set(&a2, &["10", "11"]));
    assert_eq!((c.members, c.rank), (a2.all(), 2));
    assert_eq!(arr.closure(RootSet::EMPTY).rank, 0);
    assert_eq!(arr.rank(RootSet::EMPTY), 0);
    assert_eq!(arr.total_rank(), 2);

    let d4 = sys("D4");
    let star = Ideal::up_to_height(&d4, 3);
    let arr = Arrangement::from_ideal(&star);
    let c = arr.closure(set(&d4, &["0100", "0111"]));
    // 0111 − 0100 = 0011 is not a root; the plane holds no other root.
    assert_eq!(c.members, set(&d4, &["0100", "0111"]));

    let f4 = sys("F4");
    let hat = Arrangement::new(&f4, f4_bad_ideal(&f4).unwrap());
    assert_eq!(hat.total_rank(), 4);
}

#[test]
fn two_flats() {
    let a2 = sys("A2");
    let flats = Arrangement::new(&a2, a2.all()).two_flats();
    assert_eq!(flats.len(), 1);
    assert_eq!(flats[0].members, a2.all());

    let f4 = sys("F4");
    let hat = Arrangement::new(&f4, f4_bad_ideal(&f4).unwrap());
    let two = hat.two_flats();
    assert!(two.iter().all(|f| f.rank == 2));
    let pair = set(&f4, &["0210", "0111"]);
    let f = two.iter().find(|f| pair.is_subset(f.members)).unwrap();
    assert_eq!(f.members, hat.closure(pair).members);
}

#[test]
fn independent_sets() {
    let a2 = sys("A2");
    assert_eq!(Arrangement::new(&a2, a2.all()).independent_sets(2).len(), 6);
    let d4 = sys("D4");
    let arr = Arrangement::new(&d4, d4.all());
    assert_eq!(arr.independent_sets(2).len(), 78);
    let triple = set(&d4, &["1110", "1101", "0111"]);
    assert!(arr.independent_sets(3).contains(&triple));
}

#[test]
fn two_closure_examples() {
    let a2 = sys("A2");
    let arr = Arrangement::new(&a2, a2.all());
    assert_eq!(arr.two_closure(set(&a2, &["10", "01"])), a2.all());
    assert_eq!(arr.two_closure(RootSet::singleton(2)), RootSet::singleton(2));
    assert!(arr.is_line_closed().line_closed);
}

#[test]
fn d4_star_witness() {
    let d4 = sys("D4");
    let star = Ideal::up_to_height(&d4, 3);
    let arr = Arrangement::from_ideal(&star);
    let s = set(&d4, &["0100", "0111", "1101", "1110"]);
    assert!(arr.is_two_closed(s));
    assert!(!arr.is_flat(s));
    let alpha1 = d4.parse_root("1000").unwrap();
    assert!(arr.closure(s).members.contains(alpha1));
    // α₁ = ½(γ₃ + γ₄ − γ₁ − α₂)
    let basis: Vec<Vec<Coord>> = ["1101", "1110", "0111", "0100"].iter().map(|r| d4.root(d4.parse_root(r).unwrap()).to_vec()).collect();
    let c = solve_in_basis(&basis, d4.root(alpha1)).unwrap();
    let h = Rational::new(1, 2);
    assert_eq!(c, [h, h, -h, -h]);
    let lc = arr.is_line_closed();
    assert!(!lc.line_closed);
    let w = lc.witness.unwrap();
    assert!(arr.is_two_closed(w) && !arr.is_flat(w));
}

#[test]
fn f4_witness_in_every_ideal_containing_hat() {
    let f4 = sys("F4");
    let hat = f4_bad_ideal(&f4).unwrap();
    let core = set(&f4, &["1210", "1111", "0211", "0010"]);
    let extra = set(&f4, &["0221", "2321"]);
    let alpha2 = f4.parse_root("0100").unwrap();
    let basis: Vec<Vec<Coord>> = ["1210", "1111", "0211", "0010"].iter().map(|r| f4.root(f4.parse_root(r).unwrap()).to_vec()).collect();
    let t = Rational::new(1, 3);
    assert_eq!(solve_in_basis(&basis, f4.root(alpha2)).unwrap(), [t, -t, t, -t]);
    let mut seen = 0;
    for ideal in enumerate_ideals(&f4) {
        if !hat.is_subset(ideal.members()) {
            continue;
        }
        seen += 1;
        let arr = Arrangement::from_ideal(&ideal);
        let s = core | (extra & ideal.members());
        assert!(arr.is_two_closed(s), "{:?}", f4.format_set(s));
        let cl = arr.closure(s).members;
        assert!(cl.contains(alpha2) && !s.contains(alpha2));
        assert!(!arr.is_line_closed().line_closed);
    }
    assert_eq!(seen, 22);
}

#[test]
fn line_closedness_agrees_with_the_independent_set_oracle() {
    for t in ["A3", "B3", "C3", "D4", "G2", "F4"] {
        let rs = sys(t);
        for ideal in enumerate_ideals(&rs) {
            let arr = Arrangement::from_ideal(&ideal);
            let fast = arr.is_line_closed();
            let slow = arr.is_line_closed_by_independent_sets();
            assert_eq!(fast.line_closed, slow.line_closed, "{t} {:?}", ideal);
        }
    }
}

#[test]
fn echelon_is_generic_over_big_integers() {
    let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x) * BigInt::from(10).pow(30)).collect::<Vec<_>>();
    let rows = [big(&[1, 2, 1, 0]), big(&[0, 1, 1, 1]), big(&[1, 3, 2, 1])];
    let e = Echelon::from_rows(4, rows.iter().map(Vec::as_slice));
    assert_eq!(e.rank(), 2);
    assert!(e.contains(&big(&[2, 5, 3, 1])));
    assert!(!e.contains(&big(&[0, 0, 0, 1])));
}

const TYPES: [&str; 8] = ["A3", "B3", "C3", "D4", "G2", "F4", "B4", "A4"];

fn arrangement_and_subsets() -> impl Strategy<Value = (usize, u128, u128, u128)> {
    (0..TYPES.len(), any::<u128>(), any::<u128>(), any::<u128>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_a_closure_operator((t, g, a, b) in arrangement_and_subsets()) {
        let rs = sys(TYPES[t]);
        let ground = RootSet(g) & rs.all();
        let arr = Arrangement::new(&rs, ground);
        let s = RootSet(a) & ground;
        let bigger = s | (RootSet(b) & ground);
        let cs = arr.closure(s).members;
        prop_assert!(s.is_subset(cs));
        prop_assert!(cs.is_subset(arr.closure(bigger).members));
        prop_assert_eq!(arr.closure(cs).members, cs);
        prop_assert!(arr.two_closure(s).is_subset(cs));
        prop_assert_eq!(arr.closure(s).rank, arr.rank(s));
    }

    #[test]
    fn deletion_and_restriction((t, g, a, x) in arrangement_and_subsets()) {
        let rs = sys(TYPES[t]);
        let parent = Arrangement::new(&rs, rs.all());
        let ground = RootSet(g) & rs.all();
        let sub = Arrangement::new(&rs, ground);
        let s = RootSet(a) & ground;
        prop_assert_eq!(sub.closure(s).members, parent.closure(s).members & ground);
        if let Some(y) = s.iter().nth((x % 7) as usize) {
            prop_assert!(sub.rank(s.without(y)) <= sub.rank(s));
        }
        let rows: Vec<&[Coord]> = s.iter().map(|i| rs.root(i)).collect();
        prop_assert_eq!(sub.rank(s), rational_rank(&rows));
    }
}
