pub mod cralg;
pub mod exactnum;
pub mod hypersurface;
pub mod liecore;
pub mod su2family;

mod error;

pub use error::{Error, Result};
