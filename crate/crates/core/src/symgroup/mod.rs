//! Partitions, permutations, the coset word model and `S_n` characters.

mod characters;
mod fixed_points;
mod partition;
mod permutation;

pub use characters::{
    class_size, conjugacy_classes, decompose_class_function, mn_character, ConjClass,
};
pub use fixed_points::{coset_action, fixed_point_set, FixedPointSet};
pub use partition::{
    partitions_of, partitions_of_with_limit, Partition, DEFAULT_MAX_PARTITION_N,
};
pub use permutation::{all_permutations, Permutation};
