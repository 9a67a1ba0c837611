//! Exterior algebra on bitmasks over an ordered list of up to 32 generators.
//! A mask with bits `g₁ < … < g_r` stands for `ϑ^{g₁} ∧ … ∧ ϑ^{g_r}`.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// A form with constant coefficients, keyed by generator mask.
pub type MaskForm = BTreeMap<u32, Scalar>;

fn inversions(x: u32, y: u32) -> u32 {
    let mut n = 0;
    let mut rest = y;
    while rest != 0 {
        let b = rest.trailing_zeros();
        n += (x >> b >> 1).count_ones();
        rest &= rest - 1;
    }
    n
}

/// `a ∧ b` as `(negated, mask)`, or `None` if they share a generator.
pub fn wedge_masks(a: u32, b: u32) -> Option<(bool, u32)> {
    if a & b != 0 {
        return None;
    }
    Some((inversions(a, b) % 2 == 1, a | b))
}

pub fn add_into(acc: &mut MaskForm, mask: u32, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(mask).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&mask);
    }
}

pub fn wedge(a: &MaskForm, b: &MaskForm) -> MaskForm {
    let mut out = MaskForm::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            if let Some((neg, m)) = wedge_masks(*ma, *mb) {
                let c = ca * cb;
                add_into(&mut out, m, &if neg { -c } else { c });
            }
        }
    }
    out
}

/// Applies the odd derivation that sends generator `g` to `images[g]`.
pub fn derive(mask: u32, images: &[MaskForm]) -> MaskForm {
    let mut out = MaskForm::new();
    let mut t = 0;
    let mut rest = mask;
    while rest != 0 {
        let g = rest.trailing_zeros();
        rest &= rest - 1;
        let prefix = mask & ((1u32 << g) - 1);
        let suffix = mask & !((1u32 << g) | ((1u32 << g) - 1));
        for (m, c) in &images[g as usize] {
            let Some((n1, pm)) = wedge_masks(prefix, *m) else { continue };
            let Some((n2, full)) = wedge_masks(pm, suffix) else { continue };
            let neg = (t % 2 == 1) ^ n1 ^ n2;
            add_into(&mut out, full, &if neg { -c } else { c.clone() });
        }
        t += 1;
    }
    out
}

/// Extends `derive` linearly.
pub fn derive_form(f: &MaskForm, images: &[MaskForm]) -> MaskForm {
    let mut out = MaskForm::new();
    for (m, c) in f {
        for (k, v) in derive(*m, images) {
            add_into(&mut out, k, &(c * &v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_masks(0b01, 0b10), Some((false, 0b11)));
        assert_eq!(wedge_masks(0b10, 0b01), Some((true, 0b11)));
        assert_eq!(wedge_masks(0b101, 0b010), Some((true, 0b111)));
        assert_eq!(wedge_masks(0b1, 0b1), None);
    }

    #[test]
    fn derivation_squares_to_zero_on_heisenberg() {
        // de3 = -e1∧e2 on the 3-dim Heisenberg algebra
        let mut images = vec![MaskForm::new(); 3];
        images[2].insert(0b011, Scalar::from_i64(-1));
        for mask in 0u32..8 {
            let once = derive(mask, &images);
            assert!(derive_form(&once, &images).is_empty());
        }
        // d(e1∧e3) = -e1∧de3 = e1∧e1∧e2 = 0, d(e3) ≠ 0
        assert!(derive(0b101, &images).is_empty());
        assert_eq!(derive(0b100, &images).len(), 1);
    }
}
