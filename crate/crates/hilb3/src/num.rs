//! Exact integer helpers. All arithmetic is overflow-checked; desk-scale
//! inputs never come close to the i64 range.

/// Binomial coefficient with the convention that `binom(n, k) = 0` whenever
/// `n < k` (including negative `n`).
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 1..=k {
        r = r
            .checked_mul(n - k + i)
            .expect("binomial coefficient overflow")
            / i;
    }
    r
}

pub fn checked_mul(a: i64, b: i64, what: &'static str) -> i64 {
    a.checked_mul(b)
        .unwrap_or_else(|| panic!("integer overflow in {what}"))
}

pub fn checked_add(a: i64, b: i64, what: &'static str) -> i64 {
    a.checked_add(b)
        .unwrap_or_else(|| panic!("integer overflow in {what}"))
}

pub fn checked_sub(a: i64, b: i64, what: &'static str) -> i64 {
    a.checked_sub(b)
        .unwrap_or_else(|| panic!("integer overflow in {what}"))
}
