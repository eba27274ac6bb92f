//! Temporary: comprehensive lantern relator search, bidirectional version.
//!
//! Enumerate four-holed-sphere configurations whose boundary contains three
//! disjoint generator curves, with oriented classes summing to zero (the
//! inner classes are then forced). Realize each needed class as a conjugated
//! generator twist by meet-in-the-middle search over the symplectic curve
//! orbit, assemble candidate relators, filter by exact symplectic identity,
//! and pin survivors with the cohomology anchors h1(triv) = 0, h1(H) = 1.

use mapclass::cohomology::cocycle_space;
use mapclass::io::curve_system_hash;
use mapclass::linalg::{Mat, Rat};
use mapclass::presentation::{evaluate_word, GroupWord, Relator, RelatorCatalog, RelatorTag};
use mapclass::reps::{symplectic_rep, Representation};
use mapclass::surface::Surface;
use std::collections::{HashMap, VecDeque};

type Class = [i64; 6];

const BOUND: i64 = 7;

fn pack(v: &Class) -> u64 {
    let mut k = 0u64;
    for &x in v {
        k = (k << 5) | ((x + BOUND + 1) as u64);
    }
    k
}

fn neg(v: &Class) -> Class {
    let mut out = [0; 6];
    for i in 0..6 {
        out[i] = -v[i];
    }
    out
}

fn is_primitive(v: &Class) -> bool {
    v.iter().fold(0i64, |acc, &x| num::integer::gcd(acc, x.abs())) == 1
}

fn apply(m: &Mat, v: &Class) -> Option<Class> {
    let mut out = [0i64; 6];
    for r in 0..6 {
        let mut acc = 0i64;
        for c in 0..6 {
            if v[c] != 0 {
                let e: i64 = m[(r, c)].to_string().parse().unwrap();
                acc += e * v[c];
            }
        }
        if acc.abs() > BOUND {
            return None;
        }
        out[r] = acc;
    }
    Some(out)
}

struct Letters {
    items: Vec<(String, i64, Mat, Mat)>, // name, exp, matrix, inverse matrix
}

impl Letters {
    fn new(rep: &Representation) -> Self {
        let mut items = Vec::new();
        for name in rep.names() {
            let m = rep.image(name).unwrap().clone();
            let mi = m.inverse().unwrap();
            items.push((name.clone(), 1, m.clone(), mi.clone()));
            items.push((name.clone(), -1, mi, m));
        }
        Letters { items }
    }
}

/// Forward orbit: class -> up to `keep` (word, base) with Psi(word)(base class) = class.
fn forward_orbit(
    letters: &Letters,
    starts: &[(String, Class)],
    depth: usize,
    keep: usize,
) -> HashMap<u64, Vec<(Vec<(String, i64)>, String, Class)>> {
    let mut found: HashMap<u64, Vec<(Vec<(String, i64)>, String, Class)>> = HashMap::new();
    let mut queue: VecDeque<(Class, String, Vec<(String, i64)>)> = VecDeque::new();
    for (name, class) in starts {
        found
            .entry(pack(class))
            .or_default()
            .push((Vec::new(), name.clone(), *class));
        queue.push_back((*class, name.clone(), Vec::new()));
    }
    while let Some((class, base, path)) = queue.pop_front() {
        if path.len() >= depth {
            continue;
        }
        for (name, e, m, _) in &letters.items {
            if let Some(next) = apply(m, &class) {
                let entry = found.entry(pack(&next)).or_default();
                if entry.len() >= keep {
                    continue;
                }
                let mut npath = vec![(name.clone(), *e)];
                npath.extend(path.iter().cloned());
                entry.push((npath.clone(), base.clone(), next));
                queue.push_back((next, base.clone(), npath));
            }
        }
    }
    found
}

/// Words conjugating a generator twist to a twist along a curve in class
/// `target` (either sign), via backward search meeting the forward orbit.
fn twist_words(
    letters: &Letters,
    forward: &HashMap<u64, Vec<(Vec<(String, i64)>, String, Class)>>,
    target: &Class,
    depth: usize,
    limit: usize,
) -> Vec<GroupWord> {
    let mut out: Vec<GroupWord> = Vec::new();
    let mut seen_words: Vec<String> = Vec::new();
    for t in [*target, neg(target)] {
        if t.iter().any(|x| x.abs() > BOUND) {
            continue;
        }
        // Backward BFS: state s, word q with Psi(q)(s) = t.
        let mut visited: HashMap<u64, ()> = HashMap::new();
        let mut queue: VecDeque<(Class, Vec<(String, i64)>)> = VecDeque::new();
        visited.insert(pack(&t), ());
        queue.push_back((t, Vec::new()));
        while let Some((s, q)) = queue.pop_front() {
            if let Some(hits) = forward.get(&pack(&s)) {
                for (w, base, class) in hits {
                    if *class == s {
                        // full word: q . w applied to base
                        let mut full = q.clone();
                        full.extend(w.iter().cloned());
                        let conj = GroupWord::from_letters(&full);
                        let b = GroupWord::generator(base, 1).conjugated_by(&conj);
                        let key = format!("{:?}", b.letters());
                        if !seen_words.contains(&key) {
                            seen_words.push(key);
                            out.push(b);
                            if out.len() >= limit {
                                return out;
                            }
                        }
                    }
                }
            }
            if q.len() >= depth {
                continue;
            }
            for (name, e, _, mi) in &letters.items {
                // predecessor: s' = Psi(letter)^{-1}(s), word extends on the right
                if let Some(prev) = apply(mi, &s) {
                    let k = pack(&prev);
                    if visited.contains_key(&k) {
                        continue;
                    }
                    visited.insert(k, ());
                    let mut nq = q.clone();
                    nq.push((name.clone(), *e));
                    queue.push_back((prev, nq));
                }
            }
        }
    }
    out
}

fn permutations3() -> Vec<[usize; 3]> {
    vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

fn main() {
    let s3 = Surface::new(3).unwrap();
    let rep3 = symplectic_rep(&s3);
    let sys = s3.generator_curve_system();
    let hash = curve_system_hash(&sys);
    let names = sys.names();
    let letters = Letters::new(&rep3);

    let starts: Vec<(String, Class)> = sys
        .curves
        .iter()
        .map(|c| {
            let mut a = [0i64; 6];
            for (i, &x) in c.homology.iter().enumerate() {
                a[i] = x;
            }
            (c.name.clone(), a)
        })
        .collect();

    eprintln!("forward orbit ...");
    let forward = forward_orbit(&letters, &starts, 5, 2);
    eprintln!("forward classes: {}", forward.len());

    // Probe: y1+y2 should be realizable.
    let probe = twist_words(&letters, &forward, &[0, 0, 0, 1, 1, 0], 5, 2);
    eprintln!("probe y1+y2 words: {}", probe.len());
    for b in &probe {
        eprintln!("  {:?}", b.letters());
    }

    // Chain relator (side +), needed for the anchor catalogs.
    let a0w = GroupWord::generator("a0", 1);
    let w_chain = GroupWord::from_letters(&[
        ("a4", 1),
        ("a3", 1),
        ("a2", 1),
        ("a1", 2),
        ("a2", 1),
        ("a3", 1),
        ("a4", 1),
    ]);
    let chain_word = GroupWord::of_gens(&["a1", "a2", "a3"])
        .pow(4)
        .concat(&a0w.concat(&a0w.conjugated_by(&w_chain)).inverse());
    assert!(evaluate_word(&rep3, &chain_word).unwrap().is_identity());

    let trivial = Representation::new(
        s3,
        names.clone(),
        vec![Mat::identity(1); names.len()],
        hash.clone(),
    )
    .unwrap();
    let pairwise: Vec<Relator> = {
        let n = sys.curves.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let a = sys.curves[i].name.as_str();
                let b = sys.curves[j].name.as_str();
                let (tag, word) = if sys.geometric(i, j) == 0 {
                    (
                        RelatorTag::Commutation,
                        GroupWord::from_letters(&[(a, 1), (b, 1), (a, -1), (b, -1)]),
                    )
                } else {
                    (
                        RelatorTag::Braid,
                        GroupWord::from_letters(&[(a, 1), (b, 1), (a, 1), (b, -1), (a, -1), (b, -1)]),
                    )
                };
                out.push(Relator { tag, word });
            }
        }
        out
    };

    let disjoint_triples: Vec<[usize; 3]> = {
        let n = sys.curves.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if sys.geometric(i, j) == 0
                        && sys.geometric(i, k) == 0
                        && sys.geometric(j, k) == 0
                    {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    };

    let mut symplectic_hits = 0usize;
    let mut anchor_passes: Vec<(String, GroupWord)> = Vec::new();
    for triple in &disjoint_triples {
        let v: Vec<Class> = triple
            .iter()
            .map(|&i| {
                let mut a = [0i64; 6];
                for (r, &x) in sys.curves[i].homology.iter().enumerate() {
                    a[r] = x;
                }
                a
            })
            .collect();
        for signs in [[1i64, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]] {
            let sv: Vec<Class> = v
                .iter()
                .zip(&signs)
                .map(|(c, &s)| {
                    let mut a = [0i64; 6];
                    for r in 0..6 {
                        a[r] = s * c[r];
                    }
                    a
                })
                .collect();
            let mut fourth = [0i64; 6];
            for r in 0..6 {
                fourth[r] = -(sv[0][r] + sv[1][r] + sv[2][r]);
            }
            if fourth.iter().all(|&x| x == 0) || !is_primitive(&fourth) {
                continue;
            }
            let mut inner: Vec<Class> = Vec::new();
            {
                let mut i0 = [0i64; 6];
                let mut i1 = [0i64; 6];
                let mut i2 = [0i64; 6];
                for r in 0..6 {
                    i0[r] = sv[0][r] + sv[1][r];
                    i1[r] = sv[0][r] + sv[2][r];
                    i2[r] = -(sv[1][r] + sv[2][r]);
                }
                inner.push(i0);
                inner.push(i1);
                inner.push(i2);
            }
            if inner
                .iter()
                .any(|c| c.iter().all(|&x| x == 0) || !is_primitive(c))
            {
                continue;
            }
            let fourth_words = twist_words(&letters, &forward, &fourth, 5, 2);
            let inner_words: Vec<Vec<GroupWord>> = inner
                .iter()
                .map(|c| twist_words(&letters, &forward, c, 5, 2))
                .collect();
            if fourth_words.is_empty() || inner_words.iter().any(Vec::is_empty) {
                eprintln!(
                    "missing: triple={triple:?} signs={signs:?} fourth={fourth:?} counts=({}, {:?})",
                    fourth_words.len(),
                    inner_words.iter().map(Vec::len).collect::<Vec<_>>()
                );
                continue;
            }
            eprintln!(
                "config triple={triple:?} signs={signs:?} fourth={fourth:?}: words found"
            );
            let boundary_gens: Vec<GroupWord> = triple
                .iter()
                .map(|&i| GroupWord::generator(&sys.curves[i].name, 1))
                .collect();
            for fw in &fourth_words {
                for i0 in &inner_words[0] {
                    for i1 in &inner_words[1] {
                        for i2 in &inner_words[2] {
                            let inner3 = [i0, i1, i2];
                            for perm in permutations3() {
                                let mut lhs = GroupWord::identity();
                                for &p in &perm {
                                    lhs = lhs.concat(inner3[p]);
                                }
                                let mut rhs = GroupWord::identity();
                                for b in &boundary_gens {
                                    rhs = rhs.concat(b);
                                }
                                let rhs = rhs.concat(fw);
                                let relator = lhs.concat(&rhs.inverse());
                                if !evaluate_word(&rep3, &relator).unwrap().is_identity() {
                                    continue;
                                }
                                symplectic_hits += 1;
                                let mut relators = pairwise.clone();
                                relators.push(Relator {
                                    tag: RelatorTag::Chain,
                                    word: chain_word.clone(),
                                });
                                relators.push(Relator {
                                    tag: RelatorTag::Lantern,
                                    word: relator.clone(),
                                });
                                let cat = RelatorCatalog {
                                    surface: s3,
                                    generators: names.clone(),
                                    relators,
                                    curve_system_hash: hash.clone(),
                                };
                                let t = cocycle_space(&trivial, &cat).unwrap().h1_dim;
                                let h = cocycle_space(&rep3, &cat).unwrap().h1_dim;
                                let desc = format!(
                                    "triple={triple:?} signs={signs:?} perm={perm:?} len={} h1(triv)={t} h1(H)={h}",
                                    relator.len()
                                );
                                println!("{desc}");
                                if t == 0 && h == 1 {
                                    println!("  PASS letters: {:?}", relator.letters());
                                    anchor_passes.push((desc, relator.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    eprintln!(
        "symplectic hits: {symplectic_hits}; anchor passes: {}",
        anchor_passes.len()
    );
    if let Some((d, w)) = anchor_passes.first() {
        println!("\nCHOSEN: {d}\n{:?}", w.letters());
    }
}
