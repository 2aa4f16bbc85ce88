use crate::exact::LinComb;
use crate::treebases::Word;

/// Concatenation product of the free associative algebra.
pub fn assoc_concat(x: &LinComb<Word>, y: &LinComb<Word>) -> LinComb<Word> {
    x.bilinear(y, |a, b| Ok(LinComb::basis(a.concat(b))))
        .expect("concatenation is total")
}

/// `x·y = xy + yx`
pub fn assoc_sym(x: &LinComb<Word>, y: &LinComb<Word>) -> LinComb<Word> {
    assoc_concat(x, y) + assoc_concat(y, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LinComb<Word> {
        LinComb::basis(s.parse().unwrap())
    }

    #[test]
    fn symmetrized_product() {
        assert_eq!(assoc_sym(&w("a"), &w("b")), w("ab") + w("ba"));
        assert_eq!(assoc_concat(&w("ab"), &w("ba")), w("abba"));
    }

    #[test]
    fn jordan_relation_holds() {
        let (a, b) = (w("a"), w("b"));
        let a2 = assoc_sym(&a, &a);
        let lhs = assoc_sym(&a2, &assoc_sym(&b, &a));
        let rhs = assoc_sym(&assoc_sym(&a2, &b), &a);
        assert!((lhs - rhs).is_zero());
    }
}
