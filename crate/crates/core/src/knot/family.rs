//! The pair of knot families sharing genus and volume but not invariant.

use super::spec::KnotSpec;

/// The `n`-th prime, counting from `nth_prime(0) = 2`.
pub fn nth_prime(n: usize) -> u64 {
    let mut count = 0;
    let mut k = 1u64;
    loop {
        k += 1;
        if is_prime(k) {
            if count == n {
                return k;
            }
            count += 1;
        }
    }
}

pub fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `J_n = 4_1 # (3_1)^{#(p−1)}` and `K_n = C_{p,1}(4_1)` for `p` the `n`-th prime.
pub fn build_family(n: usize) -> (KnotSpec, KnotSpec) {
    let p = nth_prime(n);
    let mut j = KnotSpec::catalog("4_1");
    for _ in 0..p - 1 {
        j = KnotSpec::sum(j, KnotSpec::catalog("3_1"));
    }
    let k = KnotSpec::cable(p as i64, 1, KnotSpec::catalog("4_1"));
    (j, k)
}
