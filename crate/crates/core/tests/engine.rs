use std::collections::{BTreeSet, HashSet, VecDeque};

use classprod_core::{
    an_class_of, class_size, classes_of, enumerate_class, enumerate_stab_n_orbit, eta, eta_oracle,
    eta_prime, eta_with, ClassLabel, CycleType, EtaOptions, GroupKind, Permutation, Scheduler,
    Side, Spin,
};

/// Runs tasks last-to-first on one thread and reports many workers, so the
/// engine splits streams into chunks.
struct Backwards(usize);

impl Scheduler for Backwards {
    fn run<T, F>(&self, count: usize, task: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        let mut out: Vec<T> = (0..count).rev().map(task).collect();
        out.reverse();
        out
    }

    fn parallelism(&self) -> usize {
        self.0
    }
}

fn all_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (1..=n).collect();
    fn rec(k: usize, images: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if k == images.len() {
            out.push(Permutation::from_images(images).unwrap());
            return;
        }
        for i in k..images.len() {
            images.swap(k, i);
            rec(k + 1, images, out);
            images.swap(k, i);
        }
    }
    rec(0, &mut images, &mut out);
    out
}

fn groups(range: std::ops::RangeInclusive<usize>) -> Vec<GroupKind> {
    range.flat_map(|n| [GroupKind::symmetric(n), GroupKind::alternating(n)]).collect()
}

#[test]
fn engine_matches_oracle_small() {
    for g in groups(3..=5) {
        let cs = classes_of(g);
        for a in &cs {
            for b in &cs {
                let fast = eta(a, b, &EtaOptions::default()).unwrap();
                let slow = eta_oracle(a, b).unwrap();
                assert_eq!(fast.classes, slow.classes, "{g} {a} x {b}");
                assert!(fast.is_exact());
            }
        }
    }
}

#[test]
fn either_side_gives_the_same_classes() {
    for g in groups(3..=6) {
        let cs = classes_of(g);
        for a in &cs {
            for b in &cs {
                let first = eta(a, b, &EtaOptions { side: Side::First, ..Default::default() });
                let second = eta(a, b, &EtaOptions { side: Side::Second, ..Default::default() });
                assert_eq!(first.unwrap().classes, second.unwrap().classes, "{g} {a} x {b}");
            }
        }
    }
}

#[test]
fn witnesses_multiply_into_their_class() {
    let g = GroupKind::alternating(7);
    let cs = classes_of(g);
    let opts = EtaOptions { witnesses: true, ..Default::default() };
    for a in cs.iter().step_by(3) {
        for b in &cs {
            let r = eta(a, b, &opts).unwrap();
            let w = r.witnesses.unwrap();
            assert_eq!(w.len(), r.count);
            for (label, pair) in &w {
                assert!(a.contains(&pair.left), "{a} {}", pair.left);
                assert!(b.contains(&pair.right), "{b} {}", pair.right);
                assert!(label.contains(&pair.left.compose(&pair.right).unwrap()));
            }
        }
    }
}

#[test]
fn split_halves_are_alternating_orbits() {
    for n in 3..=7 {
        let even: Vec<Permutation> = all_perms(n).into_iter().filter(|p| p.parity().is_even()).collect();
        for label in classes_of(GroupKind::alternating(n)).into_iter().filter(|l| l.is_split()) {
            let rep = label.representative();
            let orbit: HashSet<Vec<usize>> =
                even.iter().map(|g| rep.conjugate(g).unwrap().images()).collect();
            let stream: HashSet<Vec<usize>> =
                enumerate_class(&label).iter().map(|p| p.images()).collect();
            assert_eq!(orbit, stream, "{label}");
            assert_eq!(an_class_of(&rep).unwrap(), label);
        }
    }
}

#[test]
fn class_sizes_sum_to_group_order() {
    for g in groups(1..=12) {
        let total: u128 = classes_of(g).iter().map(class_size).sum();
        assert_eq!(total, g.order(), "{g}");
    }
}

#[test]
fn streams_list_each_member_once() {
    for g in groups(2..=7) {
        for label in classes_of(g) {
            let stream = enumerate_class(&label);
            let mut seen = HashSet::new();
            for p in stream.iter() {
                assert!(label.contains(&p), "{label} {p}");
                assert!(seen.insert(p.images()), "{label} repeats {p}");
            }
            assert_eq!(seen.len() as u128, class_size(&label));
            assert_eq!(stream.size() as u128, class_size(&label));
        }
    }
}

#[test]
fn stabilizer_orbit_matches_breadth_first_search() {
    for n in 2..=6 {
        let generators: Vec<Permutation> = (1..n - 1)
            .map(|i| Permutation::from_cycles(n, &[[i, i + 1]]).unwrap())
            .collect();
        for t in CycleType::all(n) {
            let start = t.standard_rep().inverse();
            let mut seen: HashSet<Vec<usize>> = HashSet::from([start.images()]);
            let mut queue = VecDeque::from([start.clone()]);
            while let Some(p) = queue.pop_front() {
                for g in &generators {
                    let q = p.conjugate(g).unwrap();
                    if seen.insert(q.images()) {
                        queue.push_back(q);
                    }
                }
            }
            let stream = enumerate_stab_n_orbit(&start);
            let listed: HashSet<Vec<usize>> = stream.iter().map(|p| p.images()).collect();
            assert_eq!(listed, seen, "{t}");
            assert_eq!(stream.size() as usize, seen.len());
        }
    }
}

#[test]
fn spin_symmetry() {
    for n in 3..=7 {
        let split: Vec<ClassLabel> =
            classes_of(GroupKind::alternating(n)).into_iter().filter(|l| l.spin() == Spin::Plus).collect();
        let value = |a: &ClassLabel, b: &ClassLabel| eta(a, b, &EtaOptions::default()).unwrap().classes;
        for x in &split {
            for y in &split {
                let flip = |s: BTreeSet<ClassLabel>| s.iter().map(|l| l.flipped()).collect::<BTreeSet<_>>();
                assert_eq!(value(x, y), flip(value(&x.flipped(), &y.flipped())), "{x} {y}");
                assert_eq!(value(x, &y.flipped()), flip(value(&x.flipped(), y)), "{x} {y}");
            }
        }
    }
}

#[test]
fn modified_eta_is_a_lower_bound() {
    for n in 2..=7 {
        let types = CycleType::all(n);
        for a in types.iter().filter(|t| !t.is_identity()) {
            for b in types.iter().filter(|t| !t.is_identity()) {
                let full = eta(&ClassLabel::symmetric(a.clone()), &ClassLabel::symmetric(b.clone()), &EtaOptions::default())
                    .unwrap();
                let modified = eta_prime(a, b).unwrap();
                assert!(modified.count <= full.count, "{a} x {b}");
                let types: BTreeSet<CycleType> = full.classes.iter().map(|l| l.ctype().clone()).collect();
                assert!(modified.types.is_subset(&types));
            }
        }
    }
}

#[test]
fn chunked_runs_are_identical() {
    let sched = Backwards(7);
    for (g, a, b) in [("S9", "9", "1,1,1,1,1,2,2"), ("A9", "9+", "1,1,1,3,3"), ("A9", "9-", "1,3,5+")] {
        let g: GroupKind = g.parse().unwrap();
        let a = ClassLabel::parse(g, a).unwrap();
        let b = ClassLabel::parse(g, b).unwrap();
        for cap in [None, Some(1), Some(3)] {
            for budget in [None, Some(20_000)] {
                let opts = EtaOptions { cap, budget, witnesses: true, side: Side::First };
                let seq = eta(&a, &b, &opts).unwrap();
                let par = eta_with(&a, &b, &opts, &sched).unwrap();
                assert_eq!(seq, par, "{a} x {b} {cap:?} {budget:?}");
            }
        }
    }
}

#[test]
fn stream_chunks_concatenate_to_the_stream() {
    let label = ClassLabel::parse("A8".parse().unwrap(), "1,2,2,3").unwrap();
    let stream = enumerate_class(&label);
    let whole: Vec<(u64, Permutation)> = stream.iter_range(0..stream.raw_len()).collect();
    let pieces: Vec<(u64, Permutation)> =
        stream.chunks(13).into_iter().flat_map(|r| stream.iter_range(r).collect::<Vec<_>>()).collect();
    assert_eq!(whole, pieces);
}
