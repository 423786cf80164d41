//! Canonical GWDL pretty-printer. `parse(print(ast)) == ast` for every
//! valid tree.

use std::fmt::Write;

use crate::text::Spelling;

use super::ast::*;

pub fn print(file: &LexiconFile) -> String {
    let mut out = String::new();
    if let Some(h) = &file.header {
        let _ = writeln!(out, "%VERSION {}", h.version);
    }
    for def in &file.definitions {
        print_definition(&mut out, def);
        out.push('\n');
    }
    if !file.definitions.is_empty() && !file.words.is_empty() {
        out.push('\n');
    }
    for word in &file.words {
        print_entry(&mut out, word);
        out.push('\n');
    }
    out
}

pub fn print_definition(out: &mut String, def: &Definition) {
    match def {
        Definition::Stress(r) => {
            let _ = write!(out, "!{} = ", r.name);
            print_tuple(out, &r.positions);
        }
        Definition::Inflection(r) => {
            let _ = write!(out, "#{} = ", r.name);
            print_suffixes(out, &r.suffixes);
        }
        Definition::Form(r) => {
            let _ = write!(out, "${} = ", r.name);
            print_items(out, &r.alternatives);
        }
    }
    out.push('.');
}

pub fn print_entry(out: &mut String, entry: &LexiconEntry) {
    let _ = write!(out, "{}", entry.stem);
    match &entry.body {
        EntryBody::Forms(items) => {
            out.push('[');
            print_items(out, items);
            out.push(']');
        }
        EntryBody::Stress(s) => print_stress(out, s),
    }
    out.push('.');
}

fn print_items(out: &mut String, items: &[FormItem]) {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(" | ");
        }
        match item {
            FormItem::Ref(n) => {
                let _ = write!(out, "${n}");
            }
            FormItem::Form(form) => print_form(out, form),
        }
    }
}

fn print_form(out: &mut String, form: &Form) {
    if let Some(infix) = &form.infix {
        out.push_str(&infix.render_fragment());
        out.push(' ');
    }
    match &form.inflection {
        InflectionSource::Ref(n) => {
            let _ = write!(out, "#{n}");
        }
        InflectionSource::Inline(suffixes) => {
            out.push('[');
            print_suffixes(out, suffixes);
            out.push(']');
        }
    }
    out.push(' ');
    print_stress(out, &form.stress);
}

fn print_stress(out: &mut String, stress: &StressSource) {
    match stress {
        StressSource::Ref(n) => {
            let _ = write!(out, "!{n}");
        }
        StressSource::Inline(t) => print_tuple(out, t),
    }
}

fn print_tuple(out: &mut String, positions: &[u8]) {
    out.push('(');
    for (i, p) in positions.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{p}");
    }
    out.push(')');
}

fn print_suffixes(out: &mut String, suffixes: &[Spelling]) {
    for (i, s) in suffixes.iter().enumerate() {
        if i > 0 {
            out.push('|');
        }
        out.push_str(&s.render());
    }
}
