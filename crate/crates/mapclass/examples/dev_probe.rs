//! Temporary: multi-target deep meet-in-the-middle search for conjugator
//! words realizing twists in the classes every candidate lantern
//! configuration still needs.

use mapclass::linalg::Mat;
use mapclass::presentation::{evaluate_word, GroupWord};
use mapclass::reps::{symplectic_rep, Representation};
use mapclass::surface::Surface;
use std::collections::{HashMap, VecDeque};

type Class = [i64; 6];
const BOUND: i64 = 9;

fn pack(v: &Class) -> u64 {
    let mut k = 0u64;
    for &x in v {
        k = (k << 5) | ((x + BOUND + 1) as u64);
    }
    k
}

fn neg(v: &Class) -> Class {
    let mut o = [0; 6];
    for i in 0..6 {
        o[i] = -v[i];
    }
    o
}

fn apply(m: &[[i64; 6]; 6], v: &Class) -> Option<Class> {
    let mut out = [0i64; 6];
    for r in 0..6 {
        let mut acc = 0i64;
        for c in 0..6 {
            if v[c] != 0 {
                acc += m[r][c] * v[c];
            }
        }
        if acc.abs() > BOUND {
            return None;
        }
        out[r] = acc;
    }
    Some(out)
}

fn to_arr(m: &Mat) -> [[i64; 6]; 6] {
    let mut out = [[0i64; 6]; 6];
    for r in 0..6 {
        for c in 0..6 {
            out[r][c] = m[(r, c)].to_string().parse().unwrap();
        }
    }
    out
}

fn main() {
    let s3 = Surface::new(3).unwrap();
    let rep = symplectic_rep(&s3);
    let sys = s3.generator_curve_system();

    let mut letters: Vec<(String, i64, [[i64; 6]; 6], [[i64; 6]; 6])> = Vec::new();
    for name in rep.names() {
        let m = rep.image(name).unwrap().clone();
        let mi = m.inverse().unwrap();
        letters.push((name.clone(), 1, to_arr(&m), to_arr(&mi)));
        letters.push((name.clone(), -1, to_arr(&mi), to_arr(&m)));
    }

    // Forward BFS from generator classes.
    eprintln!("forward ...");
    let mut fwd: HashMap<u64, (Vec<(String, i64)>, String, Class)> = HashMap::new();
    let mut queue: VecDeque<(Class, String, Vec<(String, i64)>, usize)> = VecDeque::new();
    for c in &sys.curves {
        let mut a = [0i64; 6];
        for (i, &x) in c.homology.iter().enumerate() {
            a[i] = x;
        }
        fwd.insert(pack(&a), (Vec::new(), c.name.clone(), a));
        queue.push_back((a, c.name.clone(), Vec::new(), 0));
    }
    let fdepth = 7usize;
    while let Some((class, base, path, d)) = queue.pop_front() {
        if d >= fdepth || fwd.len() > 12_000_000 {
            continue;
        }
        for (name, e, m, _) in &letters {
            if let Some(next) = apply(m, &class) {
                let k = pack(&next);
                if fwd.contains_key(&k) {
                    continue;
                }
                let mut npath = vec![(name.clone(), *e)];
                npath.extend(path.iter().cloned());
                fwd.insert(k, (npath.clone(), base.clone(), next));
                queue.push_back((next, base.clone(), npath, d + 1));
            }
        }
    }
    eprintln!("forward classes: {}", fwd.len());

    // Targets: the distinct missing classes over all configurations.
    let targets: Vec<(&str, Class)> = vec![
        ("x3", [0, 0, 1, 0, 0, 0]),
        ("2x1-x3", [2, 0, -1, 0, 0, 0]),
        ("2x1+2x2+x3", [2, 2, 1, 0, 0, 0]),
        ("2x2+x3", [0, 2, 1, 0, 0, 0]),
        ("y2+y3", [0, 0, 0, 0, 1, 1]),
        ("y2-y3", [0, 0, 0, 0, 1, -1]),
        ("y1+y2+y3", [0, 0, 0, 1, 1, 1]),
        ("y1+y2-y3", [0, 0, 0, 1, 1, -1]),
        ("x2+y3", [0, 1, 0, 0, 0, 1]),
        ("x2-y3", [0, 1, 0, 0, 0, -1]),
        ("x1+y3", [1, 0, 0, 0, 0, 1]),
        ("x1-y3", [1, 0, 0, 0, 0, -1]),
        ("x1+x2+y3", [1, 1, 0, 0, 0, 1]),
        ("x1+x2-y3", [1, 1, 0, 0, 0, -1]),
    ];

    for (tname, t) in &targets {
        let mut found = false;
        for tt in [*t, neg(t)] {
            // Backward BFS.
            let mut visited: HashMap<u64, ()> = HashMap::new();
            let mut bq: VecDeque<(Class, Vec<(String, i64)>)> = VecDeque::new();
            visited.insert(pack(&tt), ());
            bq.push_back((tt, Vec::new()));
            while let Some((s, q)) = bq.pop_front() {
                if let Some((w, base, class)) = fwd.get(&pack(&s)) {
                    if *class == s {
                        let mut full = q.clone();
                        full.extend(w.iter().cloned());
                        let conj = GroupWord::from_letters(&full);
                        let b = GroupWord::generator(base, 1).conjugated_by(&conj);
                        let tb = evaluate_word(&rep, &b).unwrap();
                        let n = &tb - &Mat::identity(6);
                        println!(
                            "{tname}: FOUND len {} rank1={} word={:?}",
                            b.len(),
                            n.rank() == 1,
                            b.letters()
                        );
                        found = true;
                        break;
                    }
                }
                if q.len() >= 7 || visited.len() > 25_000_000 {
                    continue;
                }
                for (name, e, _, mi) in &letters {
                    if let Some(prev) = apply(mi, &s) {
                        let k = pack(&prev);
                        if visited.contains_key(&k) {
                            continue;
                        }
                        visited.insert(k, ());
                        let mut nq = q.clone();
                        nq.push((name.clone(), *e));
                        bq.push_back((prev, nq));
                    }
                }
            }
            if found {
                break;
            }
        }
        if !found {
            println!("{tname}: not found");
        }
    }
}
