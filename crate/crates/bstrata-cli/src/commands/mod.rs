pub mod diagram;
pub mod enumerate;
pub mod gf;
pub mod ratio;
pub mod verify;
