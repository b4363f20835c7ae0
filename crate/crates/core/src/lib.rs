pub mod error;
pub mod exactalg;
pub mod grasscalc;
pub mod odeuniv;
pub mod partitions;
pub mod schur;
pub mod wmap;
pub mod wronsk;
