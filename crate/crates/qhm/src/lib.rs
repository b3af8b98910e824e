pub mod cli;
pub mod file_format;
pub mod verify;
