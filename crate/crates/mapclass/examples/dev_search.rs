//! Temporary development harness for pinning the chain and lantern relator
//! words. Strategy: enumerate conjugator words whose symplectic action sends
//! the base curve class to the homologically required class, assemble
//! candidate lantern relators, filter by exact symplectic verification, then
//! pin survivors with the cohomology anchors h1(triv)=0, h1(H)=1.

use mapclass::cohomology::cocycle_space;
use mapclass::io::curve_system_hash;
use mapclass::linalg::Mat;
use mapclass::presentation::{evaluate_word, GroupWord, Relator, RelatorCatalog, RelatorTag};
use mapclass::reps::{symplectic_rep, Representation};
use mapclass::surface::Surface;
use std::collections::BTreeMap;

fn pairwise(surface: &Surface) -> Vec<Relator> {
    let sys = surface.generator_curve_system();
    let n = sys.curves.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let a = sys.curves[i].name.as_str();
            let b = sys.curves[j].name.as_str();
            match sys.geometric(i, j) {
                0 => out.push(Relator {
                    tag: RelatorTag::Commutation,
                    word: GroupWord::from_letters(&[(a, 1), (b, 1), (a, -1), (b, -1)]),
                }),
                _ => out.push(Relator {
                    tag: RelatorTag::Braid,
                    word: GroupWord::from_letters(&[
                        (a, 1),
                        (b, 1),
                        (a, 1),
                        (b, -1),
                        (a, -1),
                        (b, -1),
                    ]),
                }),
            }
        }
    }
    out
}

/// Apply the symplectic image of a word to an integer class.
fn image_class(rep: &Representation, w: &GroupWord, v: &[i64]) -> Vec<i64> {
    let m = evaluate_word(rep, w).unwrap();
    let col = Mat::from_fn(v.len(), 1, |r, _| mapclass::linalg::Rat::from(v[r]));
    let out = &m * &col;
    (0..v.len())
        .map(|r| {
            let s = out[(r, 0)].to_string();
            s.parse::<i64>().expect("integer class")
        })
        .collect()
}

fn class_matches(got: &[i64], want: &[i64]) -> bool {
    got == want || got.iter().zip(want).all(|(a, b)| *a == -b)
}

/// Positive words of length `len` over `alphabet`, as index sequences.
fn positive_words(alphabet: &[&str], len: usize) -> Vec<GroupWord> {
    let mut out = vec![GroupWord::identity()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for a in alphabet {
                next.push(w.concat(&GroupWord::generator(a, 1)));
            }
        }
        out = next;
    }
    out
}

/// Conjugator candidates `u` with `Psi(u^{±1})(base) ~ ±target`, deduplicated
/// by the symplectic image of the resulting conjugate twist.
fn conjugator_candidates(
    rep: &Representation,
    alphabet: &[&str],
    max_len: usize,
    base_class: &[i64],
    target: &[i64],
    base_word: &GroupWord,
) -> Vec<(String, GroupWord)> {
    let mut seen: BTreeMap<String, (String, GroupWord)> = BTreeMap::new();
    for len in 1..=max_len {
        for u in positive_words(alphabet, len) {
            for (tag, conj) in [("+", u.clone()), ("-", u.inverse())] {
                let got = image_class(rep, &conj, base_class);
                if class_matches(&got, target) {
                    let b = base_word.conjugated_by(&conj);
                    let key = format!("{:?}", evaluate_word(rep, &b).unwrap());
                    let desc = format!(
                        "{}^{tag}",
                        u.letters()
                            .iter()
                            .map(|(n, e)| format!("{n}^{e}"))
                            .collect::<Vec<_>>()
                            .join(".")
                    );
                    seen.entry(key).or_insert((desc, b));
                }
            }
        }
    }
    seen.into_values().collect()
}

fn main() {
    let s3 = Surface::new(3).unwrap();
    let rep3 = symplectic_rep(&s3);

    let a0 = GroupWord::generator("a0", 1);
    let chain_lhs = GroupWord::of_gens(&["a1", "a2", "a3"]).pow(4);
    let w_chain = GroupWord::from_letters(&[
        ("a4", 1),
        ("a3", 1),
        ("a2", 1),
        ("a1", 2),
        ("a2", 1),
        ("a3", 1),
        ("a4", 1),
    ]);

    let mut chain_words = Vec::new();
    for side in [true, false] {
        let b0 = if side {
            a0.conjugated_by(&w_chain)
        } else {
            a0.conjugated_by(&w_chain.inverse())
        };
        let relator = chain_lhs.concat(&a0.concat(&b0).inverse());
        let ok = evaluate_word(&rep3, &relator).unwrap().is_identity();
        println!("chain side={side}: symplectic identity = {ok}");
        if ok {
            chain_words.push(relator);
        }
    }

    // Homology classes in the g=3 basis (x1,x2,x3,y1,y2,y3).
    let x2 = [0i64, 1, 0, 0, 0, 0];
    let inner_b1 = [1i64, 1, 1, 0, 0, 0]; // x1+x2+x3
    let inner_b2 = [1i64, 0, -1, 0, 0, 0]; // x1-x3
    let boundary_b3 = [0i64, 0, 1, 0, 0, 0]; // x3

    // b1: conjugates of a0 with class x1+x2+x3.
    let b1s = conjugator_candidates(&rep3, &["a3", "a4", "a5"], 4, &x2, &inner_b1, &a0);
    println!("b1 candidates: {}", b1s.len());
    for (d, _) in b1s.iter().take(8) {
        println!("  u1 = {d}");
    }

    // b3: conjugates of a0 with class x3.
    let mut b3s = conjugator_candidates(&rep3, &["a4", "a5", "a6"], 5, &x2, &boundary_b3, &a0);
    if b3s.is_empty() {
        b3s = conjugator_candidates(
            &rep3,
            &["a2", "a3", "a4", "a5", "a6"],
            5,
            &x2,
            &boundary_b3,
            &a0,
        );
    }
    println!("b3 candidates: {}", b3s.len());
    for (d, _) in b3s.iter().take(8) {
        println!("  u3 = {d}");
    }

    // Assemble lanterns: b2 conjugate of each b1 with class x1-x3.
    let sys = s3.generator_curve_system();
    let hash = curve_system_hash(&sys);
    let trivial = Representation::new(
        s3,
        sys.names(),
        vec![Mat::identity(1); sys.names().len()],
        hash.clone(),
    )
    .unwrap();

    let mut survivors = Vec::new();
    for (d1, b1) in &b1s {
        let b1_class = (0..6)
            .map(|r| inner_b1[r])
            .collect::<Vec<i64>>();
        let b2s = conjugator_candidates(&rep3, &["a1", "a2", "a3"], 4, &b1_class, &inner_b2, b1);
        for (d2, b2) in &b2s {
            for (d3, b3) in &b3s {
                let rhs = GroupWord::of_gens(&["a1", "a3", "a5"]).concat(b3);
                let perms: Vec<(&str, Vec<&GroupWord>)> = vec![
                    ("a0.b2.b1", vec![&a0, b2, b1]),
                    ("a0.b1.b2", vec![&a0, b1, b2]),
                    ("b2.b1.a0", vec![b2, b1, &a0]),
                    ("b1.b2.a0", vec![b1, b2, &a0]),
                    ("b1.a0.b2", vec![b1, &a0, b2]),
                    ("b2.a0.b1", vec![b2, &a0, b1]),
                ];
                for (pname, parts) in &perms {
                    let mut lhs = GroupWord::identity();
                    for p in parts {
                        lhs = lhs.concat(p);
                    }
                    let relator = lhs.concat(&rhs.inverse());
                    if evaluate_word(&rep3, &relator).unwrap().is_identity() {
                        survivors.push((format!("b1[{d1}] b2[{d2}] b3[{d3}] order={pname}"), relator));
                    }
                }
            }
        }
    }
    println!("\nsymplectic lantern survivors: {}", survivors.len());

    // Anchor check for up to the first 40 survivors.
    for (desc, lantern) in survivors.iter().take(40) {
        let mut relators = pairwise(&s3);
        relators.push(Relator {
            tag: RelatorTag::Chain,
            word: chain_words[0].clone(),
        });
        relators.push(Relator {
            tag: RelatorTag::Lantern,
            word: lantern.clone(),
        });
        let cat = RelatorCatalog {
            surface: s3,
            generators: sys.names(),
            relators,
            curve_system_hash: hash.clone(),
        };
        let triv_space = cocycle_space(&trivial, &cat).unwrap();
        let h_space = cocycle_space(&rep3, &cat).unwrap();
        let ok = triv_space.h1_dim == 0 && h_space.h1_dim == 1;
        println!(
            "{} h1(triv)={} h1(H)={}  {desc}",
            if ok { "PASS" } else { "fail" },
            triv_space.h1_dim,
            h_space.h1_dim
        );
    }
}
