//! Universal error-and-erasure decoding for binary linear codes.
//!
//! The GRAND family guesses noise patterns in likelihood order and tests
//! each against the codebook. The EDGE variants first pull out bits the
//! receiver has flagged as jammed, guess only over the remaining positions,
//! and solve for the erased bits with a per-frame Gaussian elimination of
//! the erased parity-check columns. With nothing erased they behave exactly
//! like their plain counterparts.
//!
//! Modules, bottom-up:
//!
//! * [`gf2`]: packed GF(2) vectors and matrices, RREF with a stored
//!   elimination matrix.
//! * [`code`]: systematic random linear codes.
//! * [`channel`]: BPSK over AWGN with a Bernoulli jammer, erasure flagging.
//! * [`patterns`]: Hamming-weight and logistic-weight pattern schedules.
//! * [`decoders`]: GRAND, ORBGRAND, their EDGE variants, OSD, ML reference.
//! * [`sim`]: seeded Monte-Carlo sweeps with CSV output.

pub mod channel;
pub mod code;
pub mod decoders;
pub mod error;
pub mod gf2;
pub mod patterns;
pub mod sim;

pub use channel::{ChannelParams, ReceivedFrame};
pub use code::{generate_rlc, Codeword, LinearCode, Message};
pub use decoders::{DecodeResult, DecodeStatus, Decoder, DecoderParams, EdgeContext};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec, RrefResult};
pub use patterns::{ErrorPattern, HardSchedule, OrbSchedule};
pub use sim::{SweepConfig, SweepRecord};
