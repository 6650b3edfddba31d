//! GRAND-family decoders with and without erasure recovery, an OSD
//! baseline, and an exhaustive maximum-likelihood reference.

mod edge;
mod grand;
mod ml;
mod osd;

use std::fmt;
use std::str::FromStr;

use crate::channel::ReceivedFrame;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::patterns::{DEFAULT_LW_MAX, DEFAULT_MAX_WEIGHT};

pub use edge::{edge_check, edge_init, EdgeContext};
pub use grand::{grand_decode, grand_edge_decode, orbgrand_decode, orbgrand_edge_decode};
pub use ml::{ml_decode, MlMetric, ML_MAX_K};
pub use osd::{osd_candidate_count, osd_decode, DEFAULT_OSD_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    Success,
    /// The pattern budget ran out.
    Abandoned,
    /// More erasures than parity equations.
    ErasureOverflow,
    /// Erased parity-check columns are linearly dependent.
    RankDeficient,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    pub codeword: Option<BitVec>,
    pub message: Option<BitVec>,
    /// Codebook membership checks performed.
    pub queries: u64,
}

impl DecodeResult {
    pub(crate) fn success(code: &LinearCode, codeword: BitVec, queries: u64) -> Self {
        debug_assert!(code.is_codeword(&codeword).unwrap());
        let message = code.recover_message(&codeword);
        Self {
            status: DecodeStatus::Success,
            codeword: Some(codeword),
            message: Some(message),
            queries,
        }
    }

    pub(crate) fn failure(status: DecodeStatus, queries: u64) -> Self {
        Self {
            status,
            codeword: None,
            message: None,
            queries,
        }
    }

    pub fn is_success(&self) -> bool {
        self.status == DecodeStatus::Success
    }
}

/// Thresholds shared by the decoder family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecoderParams {
    pub max_weight: usize,
    pub lw_max: usize,
    pub osd_order: usize,
}

impl Default for DecoderParams {
    fn default() -> Self {
        Self {
            max_weight: DEFAULT_MAX_WEIGHT,
            lw_max: DEFAULT_LW_MAX,
            osd_order: DEFAULT_OSD_ORDER,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoder {
    Grand,
    OrbGrand,
    GrandEdge,
    OrbGrandEdge,
    Osd,
}

impl Decoder {
    pub const ALL: [Decoder; 5] = [
        Decoder::Grand,
        Decoder::OrbGrand,
        Decoder::GrandEdge,
        Decoder::OrbGrandEdge,
        Decoder::Osd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Decoder::Grand => "grand",
            Decoder::OrbGrand => "orbgrand",
            Decoder::GrandEdge => "grand-edge",
            Decoder::OrbGrandEdge => "orbgrand-edge",
            Decoder::Osd => "osd",
        }
    }

    pub fn uses_erasures(self) -> bool {
        matches!(self, Decoder::GrandEdge | Decoder::OrbGrandEdge)
    }

    pub fn decode(self, frame: &ReceivedFrame, code: &LinearCode, params: &DecoderParams) -> Result<DecodeResult> {
        match self {
            Decoder::Grand => grand_decode(&frame.hard, code, params.max_weight),
            Decoder::OrbGrand => orbgrand_decode(frame, code, params.lw_max),
            Decoder::GrandEdge => grand_edge_decode(frame, code, params.max_weight),
            Decoder::OrbGrandEdge => orbgrand_edge_decode(frame, code, params.lw_max),
            Decoder::Osd => osd_decode(frame, code, params.osd_order),
        }
    }
}

impl fmt::Display for Decoder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Decoder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Decoder::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or(Error::UnknownDecoder(s))
    }
}
