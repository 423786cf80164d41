mod common;

use proptest::prelude::*;

use common::seed_dict;
use glspell_core::correct::Checker;
use glspell_core::dict::UserDictionary;
use glspell_core::error::SessionError;
use glspell_core::session::{check_document, tokenize_document, Action, CorrectionSession, Next, Status, TokenKind};

fn flag_word(next: Next) -> String {
    match next {
        Next::Flag(f) => f.word,
        Next::Done => panic!("expected a flag"),
    }
}

#[test]
fn tokenizer_examples() {
    let doc = "Η πρόοδος.";
    let t = tokenize_document(doc);
    let kinds: Vec<(&str, TokenKind)> = t.iter().map(|t| (t.text(doc), t.kind)).collect();
    assert_eq!(
        kinds,
        [
            ("Η", TokenKind::Word),
            (" ", TokenKind::Other),
            ("πρόοδος", TokenKind::Word),
            (".", TokenKind::Other)
        ]
    );
    assert!(tokenize_document("").is_empty());
    let doc = "test λέξη";
    assert_eq!(tokenize_document(doc)[0].kind, TokenKind::Other);
    assert_eq!(tokenize_document(doc)[0].text(doc), "test ");
}

#[test]
fn stress_error_is_flagged_and_corrected() {
    let dict = seed_dict();
    let mut user = UserDictionary::new();
    let mut s = CorrectionSession::new("a", "κέφαλι");
    match s.next_flag(dict, &user).unwrap() {
        Next::Flag(f) => {
            assert_eq!(f.span, 0.."κέφαλι".len());
            assert_eq!(f.suggestions[0].display, "κεφάλι");
        }
        Next::Done => panic!("not flagged"),
    }
    s.apply_action(Action::Correct(1), dict, &mut user).unwrap();
    assert_eq!(s.next_flag(dict, &user).unwrap(), Next::Done);
    assert_eq!(s.status(), Status::Completed);
    assert_eq!(s.export().unwrap(), "κεφάλι");
}

#[test]
fn accepted_documents_have_no_flags() {
    let mut s = CorrectionSession::new("a", "Η πρόοδος του προγράμματος, 2024.");
    assert_eq!(s.next_flag(seed_dict(), &UserDictionary::new()).unwrap(), Next::Done);
    assert_eq!(s.export().unwrap(), "Η πρόοδος του προγράμματος, 2024.");
}

#[test]
fn store_feeds_back_into_later_tokens_and_sessions() {
    let dict = seed_dict();
    let mut user = UserDictionary::new();
    let doc = "Το Ιντραλέξ και το Ιντραλέξ.";
    let mut s = CorrectionSession::new("a", doc);
    assert_eq!(flag_word(s.next_flag(dict, &user).unwrap()), "Ιντραλέξ");
    s.apply_action(Action::Store, dict, &mut user).unwrap();
    assert_eq!(s.next_flag(dict, &user).unwrap(), Next::Done);
    assert!(user.contains("Ιντραλέξ"));

    let mut again = CorrectionSession::new("b", doc);
    assert_eq!(again.next_flag(dict, &user).unwrap(), Next::Done);
}

#[test]
fn skip_leaves_the_document_alone() {
    let dict = seed_dict();
    let mut user = UserDictionary::new();
    let doc = "κέφαλι και προώδου";
    let mut s = CorrectionSession::new("a", doc);
    assert_eq!(flag_word(s.next_flag(dict, &user).unwrap()), "κέφαλι");
    s.apply_action(Action::Skip, dict, &mut user).unwrap();
    assert_eq!(flag_word(s.next_flag(dict, &user).unwrap()), "προώδου");
    s.apply_action(Action::Skip, dict, &mut user).unwrap();
    assert_eq!(s.next_flag(dict, &user).unwrap(), Next::Done);
    assert_eq!(s.export().unwrap(), doc);
}

#[test]
fn edits_are_checked_again() {
    let dict = seed_dict();
    let mut user = UserDictionary::new();
    let mut s = CorrectionSession::new("a", "το κέφαλι του");
    s.next_flag(dict, &user).unwrap();
    s.apply_action(Action::Edit("κεφαλί".into()), dict, &mut user).unwrap();
    // still wrong: becomes the current flag
    assert_eq!(s.current().unwrap().word, "κεφαλί");
    assert_eq!(flag_word(s.next_flag(dict, &user).unwrap()), "κεφαλί");
    s.apply_action(Action::Edit("κεφάλι".into()), dict, &mut user).unwrap();
    assert!(s.current().is_none());
    assert_eq!(s.next_flag(dict, &user).unwrap(), Next::Done);
    assert_eq!(s.export().unwrap(), "το κεφάλι του");
    assert_eq!(s.decisions().len(), 2);
}

#[test]
fn errors() {
    let dict = seed_dict();
    let mut user = UserDictionary::new();
    let mut s = CorrectionSession::new("a", "κέφαλι");
    assert_eq!(s.apply_action(Action::Skip, dict, &mut user), Err(SessionError::NoCurrentFlag));
    s.next_flag(dict, &user).unwrap();
    let n = s.current().unwrap().suggestions.len();
    assert_eq!(
        s.apply_action(Action::Correct(0), dict, &mut user),
        Err(SessionError::BadSuggestionIndex { index: 0, available: n })
    );
    assert_eq!(
        s.apply_action(Action::Correct(n + 1), dict, &mut user),
        Err(SessionError::BadSuggestionIndex {
            index: n + 1,
            available: n
        })
    );
    assert_eq!(s.apply_action(Action::Edit(String::new()), dict, &mut user), Err(SessionError::EmptyReplacement));
    assert_eq!(s.export(), Err(SessionError::SessionActive));
    s.apply_action(Action::Exit, dict, &mut user).unwrap();
    assert_eq!(s.status(), Status::Exited);
    assert_eq!(s.export().unwrap(), "κέφαλι");
    assert_eq!(s.next_flag(dict, &user), Err(SessionError::SessionClosed));
    assert_eq!(s.apply_action(Action::Skip, dict, &mut user), Err(SessionError::SessionClosed));
}

#[test]
fn a_journal_replays_to_the_same_state() {
    let dict = seed_dict();
    let doc = "κέφαλι, Ιντραλέξ και προώδου.";
    let actions = [Action::Correct(1), Action::Store, Action::Edit("προόδου".into()), Action::Exit];
    let mut user = UserDictionary::new();
    let mut live = CorrectionSession::new("a", doc);
    let mut journal = Vec::new();
    for a in &actions {
        if *a != Action::Exit {
            live.next_flag(dict, &user).unwrap();
        }
        live.apply_action(a.clone(), dict, &mut user).unwrap();
        journal.push(a.to_journal_line());
    }
    let parsed = journal.iter().map(|l| Action::parse_journal_line(l).unwrap());
    let replayed = CorrectionSession::replay("b", doc, parsed, dict, &mut UserDictionary::new()).unwrap();
    assert_eq!(replayed.export().unwrap(), live.export().unwrap());
    assert_eq!(live.export().unwrap(), "κεφάλι, Ιντραλέξ και προόδου.");
    assert_eq!(replayed.decisions(), live.decisions());
}

#[test]
fn batch_check_matches_the_session() {
    let dict = seed_dict();
    let user = UserDictionary::new();
    let doc = "Η κέφαλι και το προώδου, ζζζ.";
    let flags = check_document(doc, &Checker::new(dict, &user));
    let words: Vec<&str> = flags.iter().map(|f| f.word.as_str()).collect();
    assert_eq!(words, ["κέφαλι", "προώδου", "ζζζ"]);
    assert!(flags[2].suggestions.is_empty());
}

const WORDS: [&str; 8] = ["κέφαλι", "πρόοδος", "προώδου", "ζζζ", "και", "Ιντραλέξ", "πρόγαμμα", "τα"];
const SEPS: [&str; 5] = [" ", ", ", ".\n", " 42 ", " abc "];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn export_differs_only_inside_decided_spans(
        parts in prop::collection::vec((0usize..8, 0usize..5), 1..8),
        choices in prop::collection::vec(0usize..4, 8),
    ) {
        let doc: String = parts.iter().map(|&(w, s)| format!("{}{}", WORDS[w], SEPS[s])).collect();
        let dict = seed_dict();
        let mut user = UserDictionary::new();
        let mut s = CorrectionSession::new("p", doc.clone());
        let mut steps = 0;
        while let Next::Flag(flag) = s.next_flag(dict, &user).unwrap() {
            let action = match choices[steps % choices.len()] {
                0 => Action::Skip,
                1 if !flag.suggestions.is_empty() => Action::Correct(1),
                2 => Action::Edit("λέξη".into()),
                _ => Action::Store,
            };
            s.apply_action(action, dict, &mut user).unwrap();
            steps += 1;
            prop_assert!(steps < 100);
        }
        let out = s.export().unwrap();
        // rebuild the expected text from the original and the decision spans
        let mut expected = String::new();
        let mut at = 0;
        let mut last: Vec<(std::ops::Range<usize>, String)> = Vec::new();
        for d in s.decisions() {
            if let Some(r) = &d.replacement {
                last.retain(|(span, _)| *span != d.span);
                last.push((d.span.clone(), r.clone()));
            }
        }
        last.sort_by_key(|(span, _)| span.start);
        for (span, r) in &last {
            expected.push_str(&doc[at..span.start]);
            expected.push_str(r);
            at = span.end;
        }
        expected.push_str(&doc[at..]);
        prop_assert_eq!(out, expected);
        if last.is_empty() {
            prop_assert_eq!(s.export().unwrap(), doc);
        }
    }
}
