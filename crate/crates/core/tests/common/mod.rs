//! Test-only oracles, independent of the library's search and canonical
//! form code.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// All permutations of `0..n` in one-line form, by simple recursion.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn self_distributive(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| rows[x][rows[y][z]] == rows[rows[x][y]][rows[x][z]]))
    })
}

/// Every table whose rows are point-fixing bijections and which satisfies
/// S3, found by trying every tuple of rows.
pub fn naive_labeled(n: usize) -> Vec<Vec<Vec<usize>>> {
    let perms = all_perms(n);
    let per_row: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|x| perms.iter().filter(|p| p[x] == x).cloned().collect())
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let rows: Vec<Vec<usize>> = (0..n).map(|x| per_row[x][idx[x]].clone()).collect();
        if self_distributive(&rows) {
            out.push(rows);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            idx[k] += 1;
            if idx[k] < per_row[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn relabeled(rows: &[Vec<usize>], phi: &[usize]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[phi[x]][phi[y]] = phi[rows[x][y]];
        }
    }
    out
}

/// Isomorphism classes of `tables`, each given by its least relabeling.
pub fn naive_classes(tables: &[Vec<Vec<usize>>]) -> BTreeSet<Vec<Vec<usize>>> {
    let Some(first) = tables.first() else {
        return BTreeSet::new();
    };
    let perms = all_perms(first.len());
    tables
        .iter()
        .map(|t| perms.iter().map(|phi| relabeled(t, phi)).min().unwrap())
        .collect()
}

/// Orbit of `start` under the group generated by `gens`, as point set.
pub fn naive_orbit(gens: &[Vec<usize>], start: usize) -> BTreeSet<usize> {
    let mut orbit = BTreeSet::from([start]);
    let mut frontier = vec![start];
    while let Some(x) = frontier.pop() {
        for g in gens {
            if orbit.insert(g[x]) {
                frontier.push(g[x]);
            }
        }
    }
    orbit
}
