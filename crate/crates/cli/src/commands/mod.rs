pub mod appendixc;
pub mod eval;
pub mod verify;
pub mod zeros;
