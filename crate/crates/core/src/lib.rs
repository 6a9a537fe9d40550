pub mod exactnum;
pub mod catalog;
pub mod deltader;
pub mod linalg;
pub mod roots;
pub mod superalgebra;
