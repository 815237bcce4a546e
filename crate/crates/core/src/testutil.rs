use crate::typea::{Rank, Weight};

pub(crate) fn w(c: &[i64]) -> Weight {
    Weight::from_coords(c.to_vec()).unwrap()
}

pub(crate) fn dominant_weights(n: usize, max: i64) -> Vec<Weight> {
    crate::typea::dominant_weights(Rank::new(n).unwrap(), max)
}
