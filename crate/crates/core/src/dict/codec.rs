//! Little-endian primitives shared by the section encoders.

use crate::error::FormatError;
use crate::text::{Letter, Spelling};

#[derive(Default)]
pub(crate) struct Writer {
    pub buf: Vec<u8>,
}

impl Writer {
    pub fn u8(&mut self, v: u8) {
        self.buf.push(v);
    }

    pub fn u16(&mut self, v: u16) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    pub fn u32(&mut self, v: u32) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    pub fn u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    pub fn len16(&mut self, n: usize) {
        self.u16(u16::try_from(n).expect("length fits in u16"));
    }

    pub fn len32(&mut self, n: usize) {
        self.u32(u32::try_from(n).expect("length fits in u32"));
    }

    pub fn letters(&mut self, letters: &[Letter]) {
        self.len16(letters.len());
        self.buf.extend(letters.iter().map(|l| l.index() as u8));
    }

    /// Letters, then the hiatus positions.
    pub fn spelling(&mut self, s: &Spelling) {
        self.letters(s.letters());
        self.len16(s.hiatus().len());
        for &h in s.hiatus() {
            self.u16(h);
        }
    }

    pub fn str(&mut self, s: &str) {
        self.len16(s.len());
        self.buf.extend_from_slice(s.as_bytes());
    }
}

pub(crate) struct Reader<'a> {
    data: &'a [u8],
    at: usize,
    section: &'static str,
}

impl<'a> Reader<'a> {
    pub fn new(data: &'a [u8], section: &'static str) -> Reader<'a> {
        Reader {
            data,
            at: 0,
            section,
        }
    }

    pub fn malformed(&self, detail: impl Into<String>) -> FormatError {
        FormatError::Malformed {
            section: self.section,
            detail: detail.into(),
        }
    }

    pub fn is_done(&self) -> bool {
        self.at == self.data.len()
    }

    pub fn bytes(&mut self, n: usize) -> Result<&'a [u8], FormatError> {
        let end = self.at.checked_add(n).filter(|&e| e <= self.data.len());
        match end {
            Some(end) => {
                let out = &self.data[self.at..end];
                self.at = end;
                Ok(out)
            }
            None => Err(self.malformed(format!("unexpected end at byte {}", self.at))),
        }
    }

    fn array<const N: usize>(&mut self) -> Result<[u8; N], FormatError> {
        Ok(self.bytes(N)?.try_into().expect("slice of length N"))
    }

    pub fn u8(&mut self) -> Result<u8, FormatError> {
        Ok(self.array::<1>()?[0])
    }

    pub fn u16(&mut self) -> Result<u16, FormatError> {
        Ok(u16::from_le_bytes(self.array()?))
    }

    pub fn u32(&mut self) -> Result<u32, FormatError> {
        Ok(u32::from_le_bytes(self.array()?))
    }

    pub fn letters(&mut self) -> Result<Vec<Letter>, FormatError> {
        let n = self.u16()? as usize;
        self.bytes(n)?
            .iter()
            .map(|&b| {
                Letter::from_index(b as usize).ok_or_else(|| self.malformed(format!("bad letter code {b}")))
            })
            .collect()
    }

    pub fn spelling(&mut self) -> Result<Spelling, FormatError> {
        let letters = self.letters()?;
        let n = self.u16()? as usize;
        let mut hiatus = Vec::with_capacity(n);
        for _ in 0..n {
            hiatus.push(self.u16()? as usize);
        }
        let len = letters.len();
        let spelling = Spelling::with_hiatus(letters, hiatus.iter().copied());
        if spelling.hiatus().len() != n || hiatus.iter().any(|&h| h >= len) {
            return Err(self.malformed("hiatus mark outside a digraph"));
        }
        Ok(spelling)
    }

    pub fn str(&mut self) -> Result<&'a str, FormatError> {
        let n = self.u16()? as usize;
        let bytes = self.bytes(n)?;
        std::str::from_utf8(bytes).map_err(|_| self.malformed("invalid UTF-8"))
    }
}
