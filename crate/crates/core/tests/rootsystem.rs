use std::collections::{BTreeSet, HashSet};

use rootarr_core::{Coord, Family, Rational, RootSet, RootSystem, TypeLabel};

fn sys(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap())
}

fn all_labels(max_rank: usize) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for n in 1..=max_rank {
            if let Ok(l) = TypeLabel::new(f, n) {
                out.push(l);
            }
        }
    }
    out
}

/// Closes the simple roots under simple reflections and keeps the positive
/// vectors.
fn orbit_positive_roots(cartan: &[Vec<Coord>]) -> BTreeSet<Vec<Coord>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<Coord>> = HashSet::new();
    let mut stack: Vec<Vec<Coord>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while let Some(v) = stack.pop() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for i in 0..n {
            let pairing: Coord = (0..n).map(|j| v[j] * cartan[i][j]).sum();
            let mut w = v.clone();
            w[i] -= pairing;
            stack.push(w);
        }
    }
    seen.into_iter().filter(|v| v.iter().all(|&c| c >= 0)).collect()
}

#[test]
fn reflection_orbit_reproduces_positive_roots() {
    for label in all_labels(8) {
        let rs = RootSystem::build(label);
        let expected = orbit_positive_roots(rs.cartan());
        let got: BTreeSet<Vec<Coord>> = rs.roots().iter().cloned().collect();
        assert_eq!(got, expected, "{label}");
    }
}

#[test]
fn cartan_matrices_of_multiply_laced_types() {
    assert_eq!(sys("B2").cartan(), [vec![2, -1], vec![-2, 2]]);
    assert_eq!(sys("G2").cartan(), [vec![2, -3], vec![-1, 2]]);
    assert_eq!(sys("B3").cartan(), [vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
    assert_eq!(sys("C3").cartan(), [vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
    assert_eq!(
        sys("F4").cartan(),
        [vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]]
    );
}

#[test]
fn positive_root_counts() {
    for label in all_labels(8) {
        let n = label.rank();
        let expected = match label.family() {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        };
        assert_eq!(RootSystem::build(label).len(), expected, "{label}");
    }
}

#[test]
fn highest_roots() {
    let cases = [
        ("B2", "12"),
        ("G2", "32"),
        ("B3", "122"),
        ("C3", "221"),
        ("D4", "1211"),
        ("F4", "2432"),
        ("D5", "12211"),
        ("B4", "1222"),
        ("C4", "2221"),
        ("A5", "11111"),
        ("E6", "122321"),
    ];
    for (t, top) in cases {
        let rs = sys(t);
        assert_eq!(rs.format_root(rs.len() - 1), top, "{t}");
    }
}

#[test]
fn inadmissible_labels_are_rejected() {
    for bad in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X4"] {
        assert!(bad.parse::<TypeLabel>().is_err(), "{bad}");
    }
    assert!(TypeLabel::new(Family::D, 3).is_ok());
}

#[test]
fn build_examples() {
    let a2 = sys("A2");
    assert_eq!(a2.format_set(a2.all()), ["10", "01", "11"]);
    let d4 = sys("D4");
    assert_eq!(d4.len(), 12);
    assert!(d4.parse_root("1211").is_ok());
    let f4 = sys("F4");
    let h4: BTreeSet<String> = (0..f4.len()).filter(|&i| f4.height(i) == 4).map(|i| f4.format_root(i)).collect();
    assert_eq!(h4, ["0211", "1111", "1210"].map(String::from).into());
}

#[test]
fn order_is_height_then_coordinates() {
    for label in all_labels(6) {
        let rs = RootSystem::build(label);
        for i in 1..rs.len() {
            assert!(rs.height(i - 1) <= rs.height(i));
        }
        for k in 0..rs.rank() {
            assert!(rs.is_simple(k));
            assert_eq!(rs.height(k), 1);
        }
    }
}

#[test]
fn form_is_symmetric_and_positive_definite() {
    for label in all_labels(8) {
        let rs = RootSystem::build(label);
        let g = rs.gram();
        let n = rs.rank();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(g[i][j], g[j][i]);
            }
        }
        // Sylvester: leading principal minors are positive.
        for k in 1..=n {
            let m: Vec<Vec<Rational>> = (0..k).map(|i| (0..k).map(|j| Rational::from(g[i][j])).collect()).collect();
            assert!(det(m) > Rational::from(0), "{label} minor {k}");
        }
    }
}

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::from(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != Rational::from(0)) else { return Rational::from(0) };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                let v = m[c][k];
                m[r][k] -= f * v;
            }
        }
    }
    d
}

#[test]
fn inner_product_examples() {
    let a2 = sys("A2");
    assert_eq!(a2.inner_product(0, 1).unwrap(), Rational::from(-1));
    assert_eq!(a2.inner_product(0, 0).unwrap(), Rational::from(2));
    for label in all_labels(6) {
        let rs = RootSystem::build(label);
        for i in 0..rs.len() {
            assert!(rs.inner_product(i, i).unwrap() > Rational::from(0));
        }
    }
    let d4 = sys("D4");
    let (x, y) = (d4.parse_root("1110").unwrap(), d4.parse_root("0111").unwrap());
    assert_eq!(d4.inner_product(x, y).unwrap(), Rational::from(0));
    assert!(d4.inner_product(0, 99).is_err());
}

#[test]
fn reflections() {
    let a2 = sys("A2");
    let r = a2.reflect(0, 1).unwrap();
    assert!(r.positive);
    assert_eq!(a2.format_root(r.index), "11");
    for label in all_labels(6) {
        let rs = RootSystem::build(label);
        for k in 0..rs.rank() {
            let own = rs.reflect(k, k).unwrap();
            assert_eq!((own.index, own.positive), (k, false));
            let image: RootSet = (0..rs.len())
                .filter(|&g| g != k)
                .map(|g| {
                    let r = rs.reflect(k, g).unwrap();
                    assert!(r.positive, "{label}: s_{k} sends a positive root other than α_{k} to a negative one");
                    r.index
                })
                .collect();
            assert_eq!(image, rs.all().without(k));
        }
    }
    let f4 = sys("F4");
    let r = f4.reflect(1, f4.parse_root("0010").unwrap()).unwrap();
    assert_eq!(f4.format_root(r.index), "0210");
    assert!(f4.reflect(f4.parse_root("1100").unwrap(), 0).is_err());
}

#[test]
fn rank2_subsystems() {
    let a2 = sys("A2");
    assert_eq!(a2.rank2_subsystem(0, 1).unwrap(), a2.all());
    let d4 = sys("D4");
    let (x, y) = (d4.parse_root("1110").unwrap(), d4.parse_root("0111").unwrap());
    assert_eq!(d4.format_set(d4.rank2_subsystem(x, y).unwrap()), ["1110", "0111"]);
    let f4 = sys("F4");
    let eta1 = f4.parse_root("1210").unwrap();
    let eta2 = f4.parse_root("1111").unwrap();
    assert!(f4.rank2_subsystem(eta1, eta2).unwrap().contains(f4.parse_root("2321").unwrap()));
    assert!(d4.rank2_subsystem(x, x).is_err());
}

/// Brute force: a root lies in span{u, v} iff every 3×3 minor of the three
/// coordinate vectors vanishes.
fn in_span2(u: &[Coord], v: &[Coord], w: &[Coord]) -> bool {
    let n = u.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let m = |r: &[Coord]| [r[a], r[b], r[c]];
                let (p, q, r) = (m(u), m(v), m(w));
                let d = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0])
                    + p[2] * (q[0] * r[1] - q[1] * r[0]);
                if d != 0 {
                    return false;
                }
            }
        }
    }
    // Rank ≤ 2 of {u, v, w} when n < 3 is automatic.
    true
}

#[test]
fn pair_spans_match_minor_oracle() {
    for t in ["A3", "B3", "C3", "D4", "F4", "B4"] {
        let rs = sys(t);
        for i in 0..rs.len() {
            for j in i + 1..rs.len() {
                let expected: RootSet =
                    (0..rs.len()).filter(|&k| in_span2(rs.root(i), rs.root(j), rs.root(k))).collect();
                assert_eq!(rs.pair_span(i, j), expected, "{t} {i} {j}");
            }
        }
    }
}

#[test]
fn covers_raise_height_by_a_simple_root() {
    for label in all_labels(6) {
        let rs = RootSystem::build(label);
        let poset = rs.poset();
        for &(lo, hi) in poset.covers() {
            assert_eq!(rs.height(hi), rs.height(lo) + 1);
            let d: Vec<Coord> = rs.root(hi).iter().zip(rs.root(lo)).map(|(a, b)| a - b).collect();
            let k = rs.index_of(&d).expect("difference is a root");
            assert!(rs.is_simple(k));
        }
        for i in 0..rs.len() {
            for j in 0..rs.len() {
                let comp = rs.root(i).iter().zip(rs.root(j)).all(|(a, b)| a <= b);
                assert_eq!(poset.leq(i, j), comp);
            }
        }
    }
}

#[test]
fn poset_examples() {
    let a2 = sys("A2");
    let mut covers: Vec<_> =
        a2.poset().covers().iter().map(|&(a, b)| (a2.format_root(a), a2.format_root(b))).collect();
    covers.sort();
    assert_eq!(covers, [("01".into(), "11".into()), ("10".into(), "11".into())]);
    let d4 = sys("D4");
    let up: Vec<_> = d4.poset().upper_covers(d4.parse_root("1111").unwrap()).map(|i| d4.format_root(i)).collect();
    assert_eq!(up, ["1211"]);
    let f4 = sys("F4");
    for r in ["1110", "0210", "0111"] {
        assert_eq!(f4.poset().upper_covers(f4.parse_root(r).unwrap()).count(), 2, "{r}");
    }
}

fn connected(rs: &RootSystem, nodes: RootSet) -> bool {
    let Some(start) = nodes.first() else { return false };
    let mut seen = RootSet::singleton(start);
    let mut stack = vec![start];
    while let Some(k) = stack.pop() {
        for &m in rs.dynkin_neighbours(k) {
            if nodes.contains(m) && !seen.contains(m) {
                seen.insert(m);
                stack.push(m);
            }
        }
    }
    seen == nodes
}

#[test]
fn supports_are_connected_and_connected_sums_are_roots() {
    for label in all_labels(8) {
        let rs = RootSystem::build(label);
        for i in 0..rs.len() {
            assert!(connected(&rs, rs.support(i)), "{label} {}", rs.format_root(i));
        }
        if rs.rank() <= 8 {
            for mask in 1u32..(1 << rs.rank()) {
                let nodes: RootSet = (0..rs.rank()).filter(|&k| mask >> k & 1 == 1).collect();
                if connected(&rs, nodes) {
                    let v: Vec<Coord> = (0..rs.rank()).map(|k| Coord::from(nodes.contains(k))).collect();
                    assert!(rs.index_of(&v).is_some(), "{label}: {v:?}");
                }
            }
        }
    }
}

#[test]
fn dynkin_numbering() {
    let d4 = sys("D4");
    assert_eq!(d4.dynkin_degree(1), 3);
    let e6 = sys("E6");
    assert_eq!(e6.dynkin_degree(3), 3);
    let f4 = sys("F4");
    assert_eq!(f4.bond(1, 2), 2);
    assert_eq!(f4.symmetrizer(), [1, 1, 2, 2]);
    assert_eq!(sys("G2").lacing(), 3);
    assert!(sys("E8").is_simply_laced());
}

#[test]
fn coordinate_text() {
    let f4 = sys("F4");
    assert_eq!(f4.parse_root("2,4,3,2").unwrap(), f4.len() - 1);
    assert!(f4.parse_root("1234").is_err());
    assert!(f4.parse_root("12").is_err());
    assert_eq!(f4.parse_roots("1210,1111,0211").unwrap().len(), 3);
}
