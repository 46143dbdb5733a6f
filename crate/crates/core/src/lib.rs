pub mod exactla;
pub mod incidence;
pub mod pgtheory;
pub mod ccalgebra;
