// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Brute-force oracles over labelled signed graphs, shared by the
//! integration tests.

#![allow(dead_code)]

use signed_spectra::SignedGraph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Row-major adjacency entries of the `index`-th labelled signed graph, in
/// base three over the upper triangle.
pub fn labelled(n: usize, mut index: usize) -> Vec<i8> {
    let mut adj = vec![0i8; n * n];
    for (i, j) in pairs(n) {
        let v = [0i8, 1, -1][index % 3];
        index /= 3;
        adj[i * n + j] = v;
        adj[j * n + i] = v;
    }
    adj
}

pub fn index_of(n: usize, adj: &[i8]) -> usize {
    let mut index = 0;
    for &(i, j) in pairs(n).iter().rev() {
        let d = match adj[i * n + j] {
            0 => 0,
            1 => 1,
            _ => 2,
        };
        index = index * 3 + d;
    }
    index
}

pub fn count(n: usize) -> usize {
    3usize.pow((n * n.saturating_sub(1) / 2) as u32)
}

pub fn graph(n: usize, adj: &[i8]) -> SignedGraph {
    SignedGraph::from_entries(n, adj.to_vec()).unwrap()
}

/// Characteristic polynomial coefficients, ascending, by Faddeev-LeVerrier.
pub fn faddeev(n: usize, adj: &[i8]) -> Vec<i128> {
    let a: Vec<i128> = adj.iter().map(|&x| i128::from(x)).collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![0i128; n * n];
    for k in 1..=n {
        // m <- a m + c[n-k+1] I
        let mut next = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                next[i * n + j] = (0..n).map(|l| a[i * n + l] * m[l * n + j]).sum();
            }
            next[i * n + i] += c[n - k + 1];
        }
        m = next;
        let trace: i128 = (0..n)
            .map(|i| (0..n).map(|l| a[i * n + l] * m[l * n + i]).sum::<i128>())
            .sum();
        assert_eq!(trace % k as i128, 0);
        c[n - k] = -trace / k as i128;
    }
    c
}

/// Multiplicity of an integer root by repeated synthetic division.
pub fn root_multiplicity(p: &mut Vec<i128>, root: i128) -> usize {
    let mut mult = 0;
    while p.len() > 1 {
        let deg = p.len() - 1;
        let mut q = vec![0i128; deg];
        let mut carry = 0i128;
        for k in (0..=deg).rev() {
            let v = p[k] + carry * root;
            if k == 0 {
                if v != 0 {
                    return mult;
                }
            } else {
                q[k - 1] = v;
                carry = v;
            }
        }
        *p = q;
        mult += 1;
    }
    mult
}

/// Nullity of `A - t I` by fraction-free elimination.
pub fn nullity(n: usize, adj: &[i8], t: i128) -> usize {
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i128::from(adj[i * n + j]) - if i == j { t } else { 0 })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..n {
            if r != rank && m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                for k in 0..n {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    n - rank
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn relabelled(n: usize, adj: &[i8], perm: &[usize]) -> Vec<i8> {
    let mut out = vec![0i8; n * n];
    for i in 0..n {
        for j in 0..n {
            out[perm[i] * n + perm[j]] = adj[i * n + j];
        }
    }
    out
}

pub fn switched_at(n: usize, adj: &[i8], v: usize) -> Vec<i8> {
    let mut out = adj.to_vec();
    for u in 0..n {
        out[u * n + v] = -out[u * n + v];
        out[v * n + u] = -out[v * n + u];
    }
    out
}

pub fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Orbit label of each labelled graph under relabelling and switching, by
/// union-find over generators.
pub fn orbits(n: usize) -> Vec<usize> {
    let total = count(n);
    let mut parent: Vec<usize> = (0..total).collect();
    let mut generators: Vec<Vec<usize>> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            p
        })
        .collect();
    if n > 2 {
        generators.push((0..n).map(|i| (i + 1) % n).collect());
    }
    for idx in 0..total {
        let adj = labelled(n, idx);
        let mut images: Vec<Vec<i8>> = generators.iter().map(|p| relabelled(n, &adj, p)).collect();
        if n > 0 {
            images.push(switched_at(n, &adj, 0));
        }
        for img in images {
            let (a, b) = (find(&mut parent, idx), find(&mut parent, index_of(n, &img)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..total).map(|i| find(&mut parent, i)).collect()
}
