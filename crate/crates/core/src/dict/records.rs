use std::borrow::Cow;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use memmap2::Mmap;

use crate::error::FormatError;
use crate::text::Spelling;

use super::codec::{Reader, Writer};

/// Record flag: the stem came only from stress-only entries.
pub const NON_INFLECTED: u8 = 1;

/// Stored data of one stem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordRecord {
    pub stem: Spelling,
    /// Letter offsets of the syllable hyphens written in the lexicon.
    pub hyphens: Vec<u16>,
    pub flags: u8,
    /// Indices into [`super::SymbolTable::forms`].
    pub forms: Vec<u32>,
}

impl WordRecord {
    pub fn is_inflected(&self) -> bool {
        self.flags & NON_INFLECTED == 0
    }

    fn encode(&self, w: &mut Writer) {
        w.spelling(&self.stem);
        w.len16(self.hyphens.len());
        self.hyphens.iter().for_each(|&h| w.u16(h));
        w.u8(self.flags);
        w.len16(self.forms.len());
        self.forms.iter().for_each(|&f| w.u32(f));
    }

    fn decode(r: &mut Reader) -> Result<WordRecord, FormatError> {
        let stem = r.spelling()?;
        let hyphens = (0..r.u16()?).map(|_| r.u16()).collect::<Result<_, _>>()?;
        let flags = r.u8()?;
        let forms = (0..r.u16()?).map(|_| r.u32()).collect::<Result<_, _>>()?;
        Ok(WordRecord {
            stem,
            hyphens,
            flags,
            forms,
        })
    }
}

/// All records sharing one trie key (same letters; they may differ in
/// hiatus marks).
pub type RecordBlock = Vec<WordRecord>;

pub(crate) fn encode_blocks(blocks: &[RecordBlock], w: &mut Writer) {
    let mut blob = Writer::default();
    let mut offsets = Vec::with_capacity(blocks.len() + 1);
    for block in blocks {
        offsets.push(blob.buf.len());
        blob.len16(block.len());
        block.iter().for_each(|r| r.encode(&mut blob));
    }
    offsets.push(blob.buf.len());
    w.len32(blocks.len());
    offsets.into_iter().for_each(|o| w.len32(o));
    w.buf.extend_from_slice(&blob.buf);
}

fn decode_block(data: &[u8]) -> Result<RecordBlock, FormatError> {
    let mut r = Reader::new(data, "RECS");
    let n = r.u16()?;
    let block = (0..n).map(|_| WordRecord::decode(&mut r)).collect::<Result<Vec<_>, _>>()?;
    if !r.is_done() {
        return Err(r.malformed("trailing bytes in record block"));
    }
    Ok(block)
}

/// Offsets table of a RECS section: `count`, then `count + 1` blob
/// offsets, then the blob.
struct Layout {
    offsets: Vec<u32>,
    blob_start: usize,
}

fn layout(section: &[u8]) -> Result<Layout, FormatError> {
    let mut r = Reader::new(section, "RECS");
    let count = r.u32()? as usize;
    let offsets = (0..=count).map(|_| r.u32()).collect::<Result<Vec<_>, _>>()?;
    let blob_len = section.len() - (4 + 4 * (count + 1));
    let sorted = offsets.windows(2).all(|w| w[0] <= w[1]);
    if offsets[0] != 0 || !sorted || offsets[count] as usize != blob_len {
        return Err(r.malformed("record offsets do not match the blob"));
    }
    Ok(Layout {
        offsets,
        blob_start: 4 + 4 * (count + 1),
    })
}

enum Backing {
    Owned(Vec<RecordBlock>),
    /// Blocks decoded on demand from a mapped file.
    Mapped {
        map: Arc<Mmap>,
        /// File offset of the RECS blob.
        base: usize,
        offsets: Vec<u32>,
    },
}

/// Record blocks, either resident or read lazily, with a fetch counter.
pub struct RecordStore {
    backing: Backing,
    fetches: AtomicU64,
}

impl RecordStore {
    pub fn owned(blocks: Vec<RecordBlock>) -> RecordStore {
        RecordStore {
            backing: Backing::Owned(blocks),
            fetches: AtomicU64::new(0),
        }
    }

    pub(crate) fn decode_owned(section: &[u8]) -> Result<RecordStore, FormatError> {
        let l = layout(section)?;
        let blocks = l
            .offsets
            .windows(2)
            .map(|w| decode_block(&section[l.blob_start + w[0] as usize..l.blob_start + w[1] as usize]))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RecordStore::owned(blocks))
    }

    /// `range` is the RECS section's position in `map`.
    pub(crate) fn mapped(map: Arc<Mmap>, range: std::ops::Range<usize>) -> Result<RecordStore, FormatError> {
        let l = layout(&map[range.clone()])?;
        Ok(RecordStore {
            backing: Backing::Mapped {
                base: range.start + l.blob_start,
                offsets: l.offsets,
                map,
            },
            fetches: AtomicU64::new(0),
        })
    }

    pub fn len(&self) -> usize {
        match &self.backing {
            Backing::Owned(b) => b.len(),
            Backing::Mapped { offsets, .. } => offsets.len() - 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_mapped(&self) -> bool {
        matches!(self.backing, Backing::Mapped { .. })
    }

    /// Reads one block; counted as one record fetch.
    pub fn fetch(&self, block: u32) -> Result<Cow<'_, [WordRecord]>, FormatError> {
        self.fetches.fetch_add(1, Ordering::Relaxed);
        self.peek(block)
    }

    /// Reads one block without touching the fetch counter.
    pub fn peek(&self, block: u32) -> Result<Cow<'_, [WordRecord]>, FormatError> {
        let i = block as usize;
        match &self.backing {
            Backing::Owned(blocks) => Ok(Cow::Borrowed(&blocks[i])),
            Backing::Mapped { map, base, offsets } => {
                let (s, e) = (offsets[i] as usize, offsets[i + 1] as usize);
                decode_block(&map[base + s..base + e]).map(Cow::Owned)
            }
        }
    }

    pub fn fetches(&self) -> u64 {
        self.fetches.load(Ordering::Relaxed)
    }

    pub fn reset_fetches(&self) {
        self.fetches.store(0, Ordering::Relaxed);
    }

    pub(crate) fn encode(&self, w: &mut Writer) -> Result<(), FormatError> {
        let blocks = (0..self.len() as u32)
            .map(|i| self.peek(i).map(Cow::into_owned))
            .collect::<Result<Vec<_>, _>>()?;
        encode_blocks(&blocks, w);
        Ok(())
    }
}

impl std::fmt::Debug for RecordStore {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RecordStore")
            .field("blocks", &self.len())
            .field("mapped", &self.is_mapped())
            .finish()
    }
}
