//! Link-level 5G NR uplink simulation toolkit.
//!
//! The crate covers the full loop needed to compare receiver algorithms on
//! statistical and measured channels:
//!
//! * [`gridphy`] — resource grids, OFDM, pilot sequences, QAM and soft demapping
//! * [`fec`] — CRC, quasi-cyclic LDPC coding, rate matching, MCS table
//! * [`chansim`] — TDL fading processes, AWGN, replay of sounded channels
//! * [`sounder`] — passive LTE downlink channel sounding (offline, file based)
//! * [`rxchain`] — receiver calling contract and the conventional MMSE receiver
//! * [`neuralrx`] — dense-tensor autodiff, the neural receiver, pre-train/fine-tune
//! * [`sweep`] — Monte Carlo BLER sweeps, passing-SNR interpolation, comparisons

pub mod chansim;
pub mod fec;
pub mod gridphy;
pub mod neuralrx;
pub mod rxchain;
pub mod seeds;
pub mod sounder;
pub mod sweep;

pub use gridphy::{Cpx, ReKind, ResourceGrid, SlotConfig};
pub use rxchain::{Receiver, ReceiverInput, ReceiverOutput};
