//! The `.gwd` container. See `docs/format.md` for the byte layout.

use std::fs::File;
use std::ops::Range;
use std::path::Path;
use std::sync::Arc;

use memmap2::Mmap;

use crate::error::FormatError;

use super::codec::{Reader, Writer};
use super::memory::MemoryDictionary;
use super::records::RecordStore;
use super::symbols::SymbolTable;
use super::trie::CompressedTrie;
use super::trigram::TrigramTable;
use super::Dictionary;

pub const MAGIC: [u8; 4] = *b"GWD1";
pub const VERSION: u16 = 1;
/// Section tags in file order.
pub const TAGS: [[u8; 4]; 5] = [*b"SYMS", *b"TRIE", *b"RECS", *b"TRIG", *b"FREQ"];

const HEADER_LEN: usize = 8;
const DIR_ENTRY_LEN: usize = 20;
const CHECKSUM_LEN: usize = 4;

/// How to bring a dictionary file into memory.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LoadPolicy {
    /// Read and decode everything up front.
    #[default]
    Eager,
    /// Map the file; decode record blocks only when a lookup needs them.
    Mapped,
}

/// Byte ranges of the five sections within a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sections {
    pub ranges: [Range<usize>; 5],
}

impl Sections {
    pub fn sizes(&self) -> [(&'static str, usize); 5] {
        let name = |i: usize| std::str::from_utf8(&TAGS[i]).expect("ASCII tag");
        std::array::from_fn(|i| (name(i), self.ranges[i].len()))
    }
}

/// Validates magic, version, directory and checksum.
pub fn parse_container(bytes: &[u8]) -> Result<Sections, FormatError> {
    let magic_len = bytes.len().min(4);
    if bytes[..magic_len] != MAGIC[..magic_len] {
        return Err(FormatError::BadMagic);
    }
    if bytes.len() < HEADER_LEN {
        return Err(FormatError::Truncated);
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != VERSION {
        return Err(FormatError::UnsupportedVersion(version));
    }
    let count = u16::from_le_bytes([bytes[6], bytes[7]]) as usize;
    let payload_end = HEADER_LEN + count * DIR_ENTRY_LEN;
    if bytes.len() < payload_end + CHECKSUM_LEN {
        return Err(FormatError::Truncated);
    }
    let body_end = bytes.len() - CHECKSUM_LEN;

    let mut found: [Option<Range<usize>>; 5] = Default::default();
    let mut dir = Reader::new(&bytes[HEADER_LEN..payload_end], "directory");
    for _ in 0..count {
        let tag = dir.bytes(4)?;
        let offset = u64::from_le_bytes(dir.bytes(8)?.try_into().expect("8 bytes"));
        let length = u64::from_le_bytes(dir.bytes(8)?.try_into().expect("8 bytes"));
        let end = offset.checked_add(length).ok_or(FormatError::Truncated)?;
        if offset < payload_end as u64 || end > body_end as u64 {
            return Err(FormatError::Truncated);
        }
        if let Some(slot) = TAGS.iter().position(|t| t == tag) {
            if found[slot].is_some() {
                return Err(dir.malformed("repeated section tag"));
            }
            found[slot] = Some(offset as usize..end as usize);
        }
    }

    let stored = u32::from_le_bytes(bytes[body_end..].try_into().expect("4 bytes"));
    let computed = crc32fast::hash(&bytes[..body_end]);
    if stored != computed {
        return Err(FormatError::ChecksumMismatch { stored, computed });
    }

    let mut ranges: [Range<usize>; 5] = Default::default();
    for (i, slot) in found.into_iter().enumerate() {
        ranges[i] = slot.ok_or_else(|| FormatError::Malformed {
            section: "directory",
            detail: format!("missing {} section", String::from_utf8_lossy(&TAGS[i])),
        })?;
    }
    Ok(Sections { ranges })
}

fn section<'a, T>(
    bytes: &'a [u8],
    range: &Range<usize>,
    name: &'static str,
    decode: impl FnOnce(&mut Reader<'a>) -> Result<T, FormatError>,
) -> Result<T, FormatError> {
    let mut r = Reader::new(&bytes[range.clone()], name);
    let value = decode(&mut r)?;
    if !r.is_done() {
        return Err(r.malformed("trailing bytes"));
    }
    Ok(value)
}

struct Parts {
    symbols: SymbolTable,
    trie: CompressedTrie,
    trigrams: TrigramTable,
    memory: MemoryDictionary,
}

fn decode_parts(bytes: &[u8], s: &Sections) -> Result<Parts, FormatError> {
    let [syms, trie, _, trig, freq] = &s.ranges;
    Ok(Parts {
        symbols: section(bytes, syms, "SYMS", SymbolTable::decode)?,
        trie: section(bytes, trie, "TRIE", CompressedTrie::decode)?,
        trigrams: section(bytes, trig, "TRIG", TrigramTable::decode)?,
        memory: section(bytes, freq, "FREQ", MemoryDictionary::decode)?,
    })
}

fn check_references(parts: &Parts, records: &RecordStore) -> Result<(), FormatError> {
    let blocks = records.len();
    let terminal_ok = parts
        .trie
        .nodes()
        .iter()
        .filter_map(|n| n.terminal)
        .all(|t| (t as usize) < blocks);
    if !terminal_ok {
        return Err(FormatError::Malformed {
            section: "TRIE",
            detail: "terminal points past the record blocks".into(),
        });
    }
    Ok(())
}

impl Dictionary {
    /// Serializes to the `.gwd` layout.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut sections: Vec<Vec<u8>> = Vec::with_capacity(5);
        let mut w = Writer::default();
        self.symbols().encode(&mut w);
        sections.push(std::mem::take(&mut w.buf));
        self.trie().encode(&mut w);
        sections.push(std::mem::take(&mut w.buf));
        self.records()
            .encode(&mut w)
            .expect("record blocks were readable at load");
        sections.push(std::mem::take(&mut w.buf));
        self.trigrams().encode(&mut w);
        sections.push(std::mem::take(&mut w.buf));
        self.memory().encode(&mut w);
        sections.push(std::mem::take(&mut w.buf));

        let mut out = Writer::default();
        out.buf.extend_from_slice(&MAGIC);
        out.u16(VERSION);
        out.u16(TAGS.len() as u16);
        let mut offset = (HEADER_LEN + TAGS.len() * DIR_ENTRY_LEN) as u64;
        for (tag, body) in TAGS.iter().zip(&sections) {
            out.buf.extend_from_slice(tag);
            out.u64(offset);
            out.u64(body.len() as u64);
            offset += body.len() as u64;
        }
        for body in &sections {
            out.buf.extend_from_slice(body);
        }
        let crc = crc32fast::hash(&out.buf);
        out.u32(crc);
        out.buf
    }

    /// Decodes a complete in-memory image eagerly.
    pub fn from_bytes(bytes: &[u8]) -> Result<Dictionary, FormatError> {
        let s = parse_container(bytes)?;
        let parts = decode_parts(bytes, &s)?;
        let records = RecordStore::decode_owned(&bytes[s.ranges[2].clone()])?;
        check_references(&parts, &records)?;
        Ok(Dictionary::from_parts(parts.symbols, parts.trie, records, parts.trigrams, parts.memory))
    }

    pub fn open(path: &Path, policy: LoadPolicy) -> Result<Dictionary, FormatError> {
        match policy {
            LoadPolicy::Eager => Dictionary::from_bytes(&std::fs::read(path)?),
            LoadPolicy::Mapped => {
                let file = File::open(path)?;
                // SAFETY: the map is read-only; the file is not expected to
                // change while the dictionary is in use.
                let map = Arc::new(unsafe { Mmap::map(&file)? });
                let s = parse_container(&map)?;
                let parts = decode_parts(&map, &s)?;
                let records = RecordStore::mapped(Arc::clone(&map), s.ranges[2].clone())?;
                check_references(&parts, &records)?;
                Ok(Dictionary::from_parts(parts.symbols, parts.trie, records, parts.trigrams, parts.memory))
            }
        }
    }
}
