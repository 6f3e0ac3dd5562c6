//! Brute-force oracles shared by the integration tests. None of them uses
//! the library beyond reading generators.

#![allow(dead_code)]

/// `ord(n)` by trying every representation `n = sum c_i a_i`; `-1` if none.
pub fn ord_by_representations(gens: &[i64], n: i64) -> i64 {
    fn go(gens: &[i64], n: i64) -> i64 {
        match gens {
            [] => {
                if n == 0 {
                    0
                } else {
                    -1
                }
            }
            [a, rest @ ..] => (0..=n / a)
                .filter_map(|c| {
                    let sub = go(rest, n - c * a);
                    (sub >= 0).then_some(sub + c)
                })
                .max()
                .unwrap_or(-1),
        }
    }
    go(gens, n)
}

fn closure_upto(gens: &[i64], top: usize) -> Vec<bool> {
    let mut member = vec![false; top + 1];
    member[0] = true;
    for n in 1..=top {
        member[n] = gens.iter().any(|&a| a as usize <= n && member[n - a as usize]);
    }
    member
}

/// The reduction number of `m` with respect to `x^{a1}`, from the monomial
/// supports of the powers `m^k`, computed as iterated sumsets.
pub fn reduction_number_by_powers(gens: &[i64]) -> i64 {
    let a1 = *gens.iter().min().unwrap();
    let a_nu = *gens.iter().max().unwrap();
    // Crude Frobenius bound: every residue class mod a1 is hit below a1 * a_nu.
    let f_bound = a1 * a_nu;
    for k in 0..=4 * a1 {
        // Both m^{k+1} and x^{a1} m^k contain every n past this window.
        let window = (f_bound + 1 + (k + 1) * a_nu + a1) as usize;
        let member = closure_upto(gens, window);
        let m1: Vec<usize> = (1..=window).filter(|&n| member[n]).collect();
        let mut power: Vec<bool> = (0..=window).map(|n| member[n]).collect();
        let mut prev = power.clone();
        for _ in 0..=k {
            prev = power.clone();
            let mut next = vec![false; window + 1];
            for x in (0..=window).filter(|&x| power[x]) {
                for &y in &m1 {
                    if x + y > window {
                        break;
                    }
                    next[x + y] = true;
                }
            }
            power = next;
        }
        // power = m^{k+1}, prev = m^k.
        let shifted: Vec<bool> = (0..=window)
            .map(|n| n >= a1 as usize && prev[n - a1 as usize])
            .collect();
        if power == shifted {
            return k;
        }
    }
    panic!("no reduction number below 4 a1 for {gens:?}");
}

/// Minimal generators of every numerical semigroup with genus at most
/// `genus_max`, found by testing every candidate gap set for closure.
pub fn semigroups_by_gap_sets(genus_max: usize) -> Vec<Vec<i64>> {
    // Every gap of a semigroup of genus g is below 2g.
    let span = (2 * genus_max).max(1) as u32 - 1;
    let mut out = Vec::new();
    for mask in 0u64..(1 << span) {
        if mask.count_ones() as usize > genus_max {
            continue;
        }
        let gap = |n: u32| n >= 1 && n <= span && mask >> (n - 1) & 1 == 1;
        let top = span + 1;
        let closed = (1..=top).all(|x| gap(x) || (1..=top - x).all(|y| gap(y) || !gap(x + y)));
        if !closed {
            continue;
        }
        let member = |n: u32| !gap(n);
        let mut gens = Vec::new();
        for n in 1..=2 * top + 1 {
            if member(n) && !(1..n).any(|x| member(x) && member(n - x)) {
                gens.push(n as i64);
            }
        }
        out.push(gens);
    }
    out
}
