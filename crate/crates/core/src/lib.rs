pub mod correct;
pub mod dict;
pub mod error;
pub mod gwdl;
pub mod mkdict;
pub mod morph;
pub mod session;
pub mod text;
