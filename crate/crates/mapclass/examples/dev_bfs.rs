//! Temporary: BFS over the symplectic curve orbit to find short conjugator
//! words sending a generator curve class to the lantern's fourth boundary
//! class x3 (and to the inner classes), for lantern relator assembly.

use mapclass::linalg::{Mat, Rat};
use mapclass::presentation::{evaluate_word, GroupWord};
use mapclass::reps::symplectic_rep;
use mapclass::surface::Surface;
use std::collections::{BTreeMap, VecDeque};

fn to_vec(m: &Mat) -> Vec<i64> {
    (0..m.rows())
        .map(|r| m[(r, 0)].to_string().parse::<i64>().unwrap())
        .collect()
}

fn main() {
    let s3 = Surface::new(3).unwrap();
    let rep = symplectic_rep(&s3);
    let names: Vec<String> = rep.names().to_vec();
    let n = 6usize;

    // Letters: (name, exponent) with their matrices.
    let mut letters = Vec::new();
    for name in &names {
        let m = rep.image(name).unwrap().clone();
        letters.push((name.clone(), 1i64, m.clone()));
        letters.push((name.clone(), -1i64, m.inverse().unwrap()));
    }

    let targets: Vec<(&str, Vec<i64>)> = vec![
        ("x3", vec![0, 0, 1, 0, 0, 0]),
        ("x1+x2+x3", vec![1, 1, 1, 0, 0, 0]),
        ("x1-x3", vec![1, 0, -1, 0, 0, 0]),
        ("y1+y2", vec![0, 0, 0, 1, 1, 0]),
        ("y2+y3", vec![0, 0, 0, 0, 1, 1]),
        ("y1+y3", vec![0, 0, 0, 1, 0, 1]),
        ("y1+y2+y3", vec![0, 0, 0, 1, 1, 1]),
    ];

    // BFS from each generator class, extending on the left: state v, word w
    // with v = Psi(w) [base]. Word letters stored leftmost-last-applied.
    for (base_idx, base_name) in names.iter().enumerate() {
        let sys = s3.generator_curve_system();
        let base_class = sys.curves[base_idx].homology.clone();
        let start = Mat::from_fn(n, 1, |r, _| Rat::from(base_class[r]));
        let mut queue = VecDeque::new();
        let mut visited: BTreeMap<Vec<i64>, Vec<(String, i64)>> = BTreeMap::new();
        visited.insert(to_vec(&start), Vec::new());
        queue.push_back(start);
        let mut depth_count = 0usize;
        while let Some(v) = queue.pop_front() {
            let key = to_vec(&v);
            let path = visited[&key].clone();
            if path.len() >= 8 {
                continue;
            }
            depth_count += 1;
            if depth_count > 4_000_000 {
                break;
            }
            for (name, e, m) in &letters {
                let next = m * &v;
                let nkey = to_vec(&next);
                if nkey.iter().any(|x| x.abs() > 6) {
                    continue;
                }
                if !visited.contains_key(&nkey) {
                    let mut npath = vec![(name.clone(), *e)];
                    npath.extend(path.iter().cloned());
                    visited.insert(nkey, npath);
                    queue.push_back(next);
                }
            }
        }
        for (tname, t) in &targets {
            let tneg: Vec<i64> = t.iter().map(|v| -v).collect();
            for (sign, tt) in [("+", t.clone()), ("-", tneg)] {
                if let Some(path) = visited.get(&tt) {
                    let w = GroupWord::from_letters(path);
                    // Confirm: Psi(w)(base) = ±target.
                    let m = evaluate_word(&rep, &w).unwrap();
                    let img = to_vec(&(&m * &Mat::from_fn(n, 1, |r, _| Rat::from(base_class[r]))));
                    println!(
                        "base {base_name} -> {sign}{tname}: w = {:?} (check {:?})",
                        path, img
                    );
                }
            }
        }
    }
}
