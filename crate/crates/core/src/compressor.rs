use crate::error::Result;
use crate::stats;

/// A whole-buffer lossless transformation.
pub trait Compressor: Send + Sync {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>>;
    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>>;
}

/// Stages run left to right when compressing; each stage consumes the
/// complete output of the previous one.
pub struct Pipeline {
    stages: Vec<Box<dyn Compressor>>,
}

impl Pipeline {
    pub fn new(stages: Vec<Box<dyn Compressor>>) -> Self {
        Self { stages }
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }
}

impl Compressor for Pipeline {
    fn compress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut data = input.to_vec();
        for (i, s) in self.stages.iter().enumerate() {
            data = stats::phase(&format!("stage {i}"), || s.compress(&data))?;
        }
        Ok(data)
    }

    fn decompress(&self, input: &[u8]) -> Result<Vec<u8>> {
        let mut data = input.to_vec();
        for (i, s) in self.stages.iter().enumerate().rev() {
            data = stats::phase(&format!("stage {i}"), || s.decompress(&data))?;
        }
        Ok(data)
    }
}
