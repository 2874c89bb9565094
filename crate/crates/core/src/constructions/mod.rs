//! Named graphs, trees and seeded generators.

pub mod enumerate;
pub mod families;
pub mod named;
pub mod random;
pub mod trees;

pub use named::named;
pub use trees::{
    caterpillar, class_c_member, is_caterpillar, random_tree, subdivide, CaterpillarSpec,
};

pub use random::random_dh;
