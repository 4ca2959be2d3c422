//! Reference implementations used as oracles by the integration tests.
//! They read library types for input and output only and never call the
//! library's own algorithms.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use clawtop::{Graph, HomologyProfile};

/// Primes for the field Betti oracle; the last stands in for the rationals.
pub const PRIMES: [u64; 4] = [2, 3, 5, 1_000_000_007];

/// Neighborhood bitmasks.
pub fn adjacency(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    let mut adj = vec![0u64; g.n()];
    for (a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

pub fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Every nonempty independent set, by size then lexicographically.
pub fn independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    assert!(g.n() <= 22, "oracle enumeration is exponential");
    let adj = adjacency(g);
    let mut out: Vec<Vec<usize>> = Vec::new();
    fn grow(adj: &[u64], start: usize, mask: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for v in start..adj.len() {
            if adj[v] & mask == 0 {
                cur.push(v);
                out.push(cur.clone());
                grow(adj, v + 1, mask | 1 << v, cur, out);
                cur.pop();
            }
        }
    }
    grow(&adj, 0, 0, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Independent sets of `g` with the vertices in `removed` deleted, kept in
/// the labels of `g`.
pub fn independent_sets_avoiding(g: &Graph, removed: u64) -> Vec<Vec<usize>> {
    independent_sets(g)
        .into_iter()
        .filter(|f| f.iter().all(|&v| removed >> v & 1 == 0))
        .collect()
}

/// Induced claw by looking at every 4-subset.
pub fn has_claw(g: &Graph) -> bool {
    let n = g.n();
    let adj = adjacency(g);
    let e = |a: usize, b: usize| adj[a] >> b & 1 == 1;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    for i in 0..4 {
                        let others: Vec<usize> = (0..4).filter(|&j| j != i).map(|j| q[j]).collect();
                        let center = q[i];
                        if others.iter().all(|&x| e(center, x))
                            && !e(others[0], others[1])
                            && !e(others[0], others[2])
                            && !e(others[1], others[2])
                        {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

/// Rank over GF(p) of a matrix given by sparse columns, by column reduction
/// on the lowest nonzero row.
pub fn rank_mod_p(columns: &[BTreeMap<usize, u64>], p: u64) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, u64>> = HashMap::new();
    for col in columns {
        let mut col = col.clone();
        col.retain(|_, v| *v % p != 0);
        while let Some((&low, &val)) = col.iter().next_back() {
            match pivots.get(&low) {
                Some(piv) => {
                    for (&r, &x) in piv {
                        let sub = (val as u128 * x as u128 % p as u128) as u64;
                        let e = col.entry(r).or_insert(0);
                        *e = (*e + p - sub) % p;
                        if *e == 0 {
                            col.remove(&r);
                        }
                    }
                }
                None => {
                    let inv = inv_mod(val, p);
                    for v in col.values_mut() {
                        *v = (*v as u128 * inv as u128 % p as u128) as u64;
                    }
                    pivots.insert(low, col);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Reduced Betti numbers over GF(p) of the complex whose faces are listed
/// (closed under taking nonempty subsets), with the empty face in degree -1.
/// Only nonzero entries are kept.
pub fn field_betti(faces: &[Vec<usize>], p: u64) -> BTreeMap<i32, usize> {
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    // by_size[s] holds faces with s vertices; s = 0 is the empty face
    let mut by_size: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top + 1];
    let empty = Vec::new();
    by_size[0].push(&empty);
    for f in faces {
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<&Vec<usize>, usize>> = by_size
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // rank[s]: rank of the boundary from size s to size s - 1
    let mut rank = vec![0usize; top + 2];
    for s in 1..=top {
        let columns: Vec<BTreeMap<usize, u64>> = by_size[s]
            .iter()
            .map(|f| {
                let mut col = BTreeMap::new();
                for i in 0..f.len() {
                    let mut sub = (*f).clone();
                    sub.remove(i);
                    let row = index[s - 1][&sub];
                    let sign = if i % 2 == 0 { 1 } else { p - 1 };
                    col.insert(row, sign % p);
                }
                col
            })
            .collect();
        rank[s] = rank_mod_p(&columns, p);
    }
    let mut out = BTreeMap::new();
    for s in 0..=top {
        let b = by_size[s].len() - rank[s] - rank[s + 1];
        if b > 0 {
            out.insert(s as i32 - 1, b);
        }
    }
    out
}

/// Field Betti numbers implied by an integral profile through universal
/// coefficients.
pub fn predicted_field_betti(profile: &HomologyProfile, p: u64) -> BTreeMap<i32, usize> {
    let mut out: BTreeMap<i32, usize> = BTreeMap::new();
    for (d, group) in profile.groups() {
        *out.entry(d).or_default() += group.betti;
        let t = group.torsion.iter().filter(|&&q| q % p == 0).count();
        *out.entry(d).or_default() += t;
        *out.entry(d + 1).or_default() += t;
    }
    out.retain(|_, v| *v > 0);
    out
}

/// Betti numbers over every oracle prime.
pub fn field_profile(faces: &[Vec<usize>]) -> Vec<BTreeMap<i32, usize>> {
    PRIMES.iter().map(|&p| field_betti(faces, p)).collect()
}

/// Whether an integral profile matches the oracle field Betti numbers.
pub fn consistent(profile: &HomologyProfile, fields: &[BTreeMap<i32, usize>]) -> bool {
    PRIMES
        .iter()
        .zip(fields)
        .all(|(&p, f)| &predicted_field_betti(profile, p) == f)
}

/// One less than the lowest degree with nonzero field homology over any
/// oracle prime; `None` when acyclic over all of them.
pub fn field_connectivity(fields: &[BTreeMap<i32, usize>]) -> Option<i64> {
    fields
        .iter()
        .filter_map(|f| f.keys().next().copied())
        .min()
        .map(|d| i64::from(d) - 1)
}

pub fn oracle_connectivity(faces: &[Vec<usize>]) -> Option<i64> {
    field_connectivity(&field_profile(faces))
}

/// `None` stands for unbounded connectivity.
pub fn reaches(conn: Option<i64>, n: i64) -> bool {
    conn.is_none_or(|c| c >= n)
}

/// Invariant factors computed modulo `m = |M|` for a nonzero maximal minor
/// `M`: since `d_1 ... d_r` divides `m`, Bezout elimination over `Z/m`
/// recovers every factor while keeping entries below `m`.
pub fn invariant_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (rank, minor) = rank_and_minor(&a);
    if rank == 0 {
        return Vec::new();
    }
    let m = minor.abs();
    let mut a: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|x| x.mod_floor(&m)).collect()).collect();
    let (nr, nc) = (a.len(), a[0].len());
    let limit = nr.min(nc);
    let mut diag = Vec::with_capacity(limit);
    for t in 0..limit {
        let pick = (t..nr)
            .flat_map(|i| (t..nc).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].gcd(&m));
        let Some((pi, pj)) = pick else {
            diag.push(m.clone());
            continue;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            for i in t + 1..nr {
                if !a[i][t].is_zero() {
                    combine(&mut a, t, i, &m, true);
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() {
                    combine(&mut a, t, j, &m, false);
                }
            }
            if (t + 1..nr).all(|i| a[i][t].is_zero()) && (t + 1..nc).all(|j| a[t][j].is_zero()) {
                break;
            }
        }
        diag.push(a[t][t].gcd(&m));
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag.truncate(rank);
    diag
}

/// Clears entry `k` of the pivot column (`rows`) or pivot row against the
/// pivot at `(t, t)`, working modulo `m`.
fn combine(a: &mut [Vec<BigInt>], t: usize, k: usize, m: &BigInt, rows: bool) {
    let get = |a: &[Vec<BigInt>], x: usize, y: usize| if rows { a[x][y].clone() } else { a[y][x].clone() };
    let len = if rows { a[0].len() } else { a.len() };
    let (p, b) = (get(a, t, t), get(a, k, t));
    let (x, y, s, u) = if (&b % &p).is_zero() {
        // plain subtraction leaves the pivot line untouched
        (BigInt::one(), BigInt::zero(), -(&b / &p), BigInt::one())
    } else {
        let e = p.extended_gcd(&b);
        (e.x, e.y, -(&b / &e.gcd), &p / &e.gcd)
    };
    for idx in 0..len {
        let (vt, vk) = (get(a, t, idx), get(a, k, idx));
        let nt = (&x * &vt + &y * &vk).mod_floor(m);
        let nk = (&s * &vt + &u * &vk).mod_floor(m);
        if rows {
            a[t][idx] = nt;
            a[k][idx] = nk;
        } else {
            a[idx][t] = nt;
            a[idx][k] = nk;
        }
    }
}

/// Rank and a nonzero maximal minor, by Bareiss elimination with full
/// pivoting.
fn rank_and_minor(m: &[Vec<BigInt>]) -> (usize, BigInt) {
    let mut a = m.to_vec();
    let (nr, nc) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev = BigInt::one();
    let mut rank = 0;
    for k in 0..nr.min(nc) {
        let Some((pi, pj)) = (k..nr)
            .flat_map(|i| (k..nc).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        for i in k + 1..nr {
            for j in k + 1..nc {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    (rank, prev)
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// `Ṅ(v)` as a bitmask.
pub fn closed(adj: &[u64], v: usize) -> u64 {
    adj[v] | 1 << v
}

/// Pairs of distinct non-adjacent vertices inside `set`.
pub fn non_edges_in(adj: &[u64], set: u64) -> Vec<(usize, usize)> {
    let vs = bits(set);
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if adj[a] >> b & 1 == 0 {
                out.push((a, b));
            }
        }
    }
    out
}

/// Closed-form floors of the connectivity bounds.
pub fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}
