//! Integer floor/ceiling division with a positive divisor.

#[inline]
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

#[inline]
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -(-a).div_euclid(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_of_negative_numerators() {
        assert_eq!(floor_div(-1, 4), -1);
        assert_eq!(ceil_div(-1, 4), 0);
        assert_eq!(ceil_div(19, 12), 2);
        assert_eq!(floor_div(10, 5), 2);
        assert_eq!(ceil_div(0, 3), 0);
    }
}
