use std::collections::HashMap;
use std::hash::Hash;

use crate::error::FormatError;
use crate::gwdl::ResolvedForm;
use crate::text::Spelling;

use super::codec::{Reader, Writer};

const NO_INFIX: u32 = u32::MAX;

/// One stored form: pool indices of its infix, suffix list and stress
/// tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormRef {
    pub infix: Option<u32>,
    pub inflection: u32,
    pub stress: u32,
}

/// Deduplicated pools shared by every word record.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolTable {
    pub infixes: Vec<Spelling>,
    pub inflections: Vec<Vec<Spelling>>,
    pub stress_tuples: Vec<Vec<u8>>,
    pub forms: Vec<FormRef>,
}

impl SymbolTable {
    pub fn infix(&self, form: &FormRef) -> Option<&Spelling> {
        form.infix.map(|i| &self.infixes[i as usize])
    }

    pub fn suffixes(&self, form: &FormRef) -> &[Spelling] {
        &self.inflections[form.inflection as usize]
    }

    pub fn stress(&self, form: &FormRef) -> &[u8] {
        &self.stress_tuples[form.stress as usize]
    }

    pub(crate) fn encode(&self, w: &mut Writer) {
        w.len32(self.infixes.len());
        for s in &self.infixes {
            w.spelling(s);
        }
        w.len32(self.inflections.len());
        for list in &self.inflections {
            w.len16(list.len());
            for s in list {
                w.spelling(s);
            }
        }
        w.len32(self.stress_tuples.len());
        for t in &self.stress_tuples {
            w.len16(t.len());
            t.iter().for_each(|&p| w.u8(p));
        }
        w.len32(self.forms.len());
        for f in &self.forms {
            w.u32(f.infix.unwrap_or(NO_INFIX));
            w.u32(f.inflection);
            w.u32(f.stress);
        }
    }

    pub(crate) fn decode(r: &mut Reader) -> Result<SymbolTable, FormatError> {
        let mut t = SymbolTable::default();
        for _ in 0..r.u32()? {
            t.infixes.push(r.spelling()?);
        }
        for _ in 0..r.u32()? {
            let n = r.u16()?;
            t.inflections.push((0..n).map(|_| r.spelling()).collect::<Result<_, _>>()?);
        }
        for _ in 0..r.u32()? {
            let n = r.u16()? as usize;
            let tuple = r.bytes(n)?.to_vec();
            if tuple.is_empty() {
                return Err(r.malformed("empty stress tuple"));
            }
            t.stress_tuples.push(tuple);
        }
        for _ in 0..r.u32()? {
            let infix = match r.u32()? {
                NO_INFIX => None,
                i => Some(i),
            };
            let form = FormRef {
                infix,
                inflection: r.u32()?,
                stress: r.u32()?,
            };
            let in_range = infix.is_none_or(|i| (i as usize) < t.infixes.len())
                && (form.inflection as usize) < t.inflections.len()
                && (form.stress as usize) < t.stress_tuples.len();
            if !in_range {
                return Err(r.malformed("form references a missing pool entry"));
            }
            t.forms.push(form);
        }
        Ok(t)
    }
}

/// Interns pool entries in first-seen order, so identical inputs give
/// identical tables.
#[derive(Default)]
pub struct SymbolTableBuilder {
    table: SymbolTable,
    infixes: HashMap<Spelling, u32>,
    inflections: HashMap<Vec<Spelling>, u32>,
    stress: HashMap<Vec<u8>, u32>,
    forms: HashMap<FormRef, u32>,
}

fn intern<T: Hash + Eq + Clone>(index: &mut HashMap<T, u32>, pool: &mut Vec<T>, value: &T) -> u32 {
    if let Some(&id) = index.get(value) {
        return id;
    }
    let id = pool.len() as u32;
    pool.push(value.clone());
    index.insert(value.clone(), id);
    id
}

impl SymbolTableBuilder {
    pub fn intern_form(&mut self, form: &ResolvedForm) -> u32 {
        let t = &mut self.table;
        let infix = (!form.infix.is_empty()).then(|| intern(&mut self.infixes, &mut t.infixes, &form.infix));
        let form = FormRef {
            infix,
            inflection: intern(&mut self.inflections, &mut t.inflections, &form.suffixes),
            stress: intern(&mut self.stress, &mut t.stress_tuples, &form.stress),
        };
        intern(&mut self.forms, &mut t.forms, &form)
    }

    pub fn finish(self) -> SymbolTable {
        self.table
    }
}
