use facta::{CoeffRing, PuiseuxMonoid};

/// Ring-theoretic properties of `F[M]`. All six agree: each holds exactly
/// when `M ≅ (ℕ₀, +)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub field: CoeffRing,
    pub euclidean: bool,
    pub pid: bool,
    pub ufd: bool,
    pub hfd: bool,
    pub iso_n0: bool,
    pub dedekind: bool,
    pub note: Option<String>,
}

impl AlgebraReport {
    pub fn flags(&self) -> [(&'static str, bool); 6] {
        [
            ("euclidean", self.euclidean),
            ("pid", self.pid),
            ("ufd", self.ufd),
            ("hfd", self.hfd),
            ("iso_N0", self.iso_n0),
            ("dedekind", self.dedekind),
        ]
    }
}

/// Classifies `F[M]`. The field is a label only and never changes the answer.
pub fn classify_algebra(m: &PuiseuxMonoid, field: CoeffRing) -> AlgebraReport {
    let iso = m.is_iso_to_n0();
    let note = (!m.is_atomic()).then(|| "non-atomic exponent monoid".to_string());
    AlgebraReport {
        field,
        euclidean: iso,
        pid: iso,
        ufd: iso,
        hfd: iso,
        iso_n0: iso,
        dedekind: iso,
        note,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(m: &str) -> Vec<bool> {
        let r = classify_algebra(&m.parse().unwrap(), CoeffRing::Rational);
        r.flags().iter().map(|(_, b)| *b).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(all("gen:1"), vec![true; 6]);
        assert_eq!(all("gen:2,3"), vec![false; 6]);
        assert_eq!(all("gen:2,4"), vec![true; 6]);
        assert_eq!(all("ppow:2"), vec![false; 6]);
        let r = classify_algebra(&"ppow:3".parse().unwrap(), CoeffRing::Rational);
        assert_eq!(r.note.as_deref(), Some("non-atomic exponent monoid"));
        let a = classify_algebra(&"grid:4".parse().unwrap(), CoeffRing::prime_field(5).unwrap());
        assert!(a.flags().iter().all(|(_, b)| *b));
    }
}
