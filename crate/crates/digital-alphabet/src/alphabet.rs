//! The five-bit communication-state codes and the 32-symbol alphabet they
//! map onto.
//!
//! A [`CommCode`] packs five presence/knowledge bits; [`Letter`] carries the
//! inventory data (glyph, romanized name, abjadi ordinal) for the 28
//! consonants and 4 diacritics. The mapping between the two is a bijection:
//! the letter with abjadi ordinal `n` carries the code with value `32 - n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A communication state encoded in five bits, most significant first:
/// source, subject, destination, form of the subject, attributes of the
/// subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CommCode(u8);

/// Error produced when parsing a binary code string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeParseError {
    #[error("code must be exactly 5 bits, got {0} characters")]
    WrongLength(usize),
    #[error("code may only contain '0' and '1', found {0:?}")]
    BadDigit(char),
}

impl CommCode {
    /// Builds a code from its raw value. Only defined on 0..=31.
    pub const fn from_value(value: u8) -> Option<Self> {
        if value < 32 {
            Some(CommCode(value))
        } else {
            None
        }
    }

    const fn new(value: u8) -> Self {
        assert!(value < 32);
        CommCode(value)
    }

    /// Builds a code from its five bits, source first.
    pub const fn from_bits(
        source: bool,
        subject: bool,
        destination: bool,
        form: bool,
        attribute: bool,
    ) -> Self {
        CommCode(
            (source as u8) << 4
                | (subject as u8) << 3
                | (destination as u8) << 2
                | (form as u8) << 1
                | attribute as u8,
        )
    }

    /// The raw value in 0..=31.
    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn source_present(self) -> bool {
        self.0 & 0b10000 != 0
    }

    pub const fn subject_present(self) -> bool {
        self.0 & 0b01000 != 0
    }

    pub const fn destination_present(self) -> bool {
        self.0 & 0b00100 != 0
    }

    pub const fn form_known(self) -> bool {
        self.0 & 0b00010 != 0
    }

    pub const fn attribute_known(self) -> bool {
        self.0 & 0b00001 != 0
    }

    /// The five bits, source first.
    pub const fn bits(self) -> [bool; 5] {
        [
            self.source_present(),
            self.subject_present(),
            self.destination_present(),
            self.form_known(),
            self.attribute_known(),
        ]
    }

    /// The bitwise complement within five bits.
    pub const fn complement(self) -> Self {
        CommCode(!self.0 & 0b11111)
    }

    /// All 32 codes in ordinal order (11111 first, 00000 last).
    pub fn all() -> impl Iterator<Item = CommCode> {
        (0..32u8).rev().map(CommCode)
    }
}

impl fmt::Display for CommCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:05b}", self.0)
    }
}

impl FromStr for CommCode {
    type Err = CodeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = s.chars().count();
        if n != 5 {
            return Err(CodeParseError::WrongLength(n));
        }
        let mut value = 0u8;
        for ch in s.chars() {
            value = value << 1
                | match ch {
                    '0' => 0,
                    '1' => 1,
                    other => return Err(CodeParseError::BadDigit(other)),
                };
        }
        Ok(CommCode(value))
    }
}

impl Serialize for CommCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CommCode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Position of the abjadi ordinal within the table: `ordinal = 32 - value`.
pub fn ordinal(code: CommCode) -> u8 {
    32 - code.value()
}

/// Letter kind: 28 consonants, 4 diacritics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LetterKind {
    Consonant,
    Diacritic,
}

/// Identifier for each of the 32 alphabet symbols, in abjadi order.
/// The discriminant is the zero-based table index (`ordinal - 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum LetterId {
    /// ا
    Alif = 0,
    /// ب
    Ba,
    /// ج
    Jim,
    /// د
    Dal,
    /// هـ
    Ha,
    /// و
    Waw,
    /// ز
    Zayn,
    /// ح
    Hha,
    /// ط
    Tta,
    /// ي
    Ya,
    /// ك
    Kaf,
    /// ل
    Lam,
    /// م
    Mim,
    /// ن
    Nun,
    /// س
    Sin,
    /// ع
    Ayn,
    /// ف
    Fa,
    /// ص
    Sad,
    /// ق
    Qaf,
    /// ر
    Ra,
    /// ش
    Shin,
    /// ت
    Ta,
    /// ث
    Tha,
    /// خ
    Kha,
    /// ذ
    Dhal,
    /// ض
    Dad,
    /// ظ
    Zza,
    /// غ
    Ghayn,
    /// ُ
    Dammah,
    /// َ
    Fathah,
    /// ِ
    Kasrah,
    /// ْ
    Sukun,
}

impl LetterId {
    /// The static table row for this letter.
    pub fn info(self) -> &'static Letter {
        &LETTERS[self as usize]
    }

    pub fn from_ordinal(ordinal: u8) -> Option<LetterId> {
        if (1..=32).contains(&ordinal) {
            Some(LETTERS[ordinal as usize - 1].id)
        } else {
            None
        }
    }
}

/// One row of the embedded alphabet table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub id: LetterId,
    /// Romanized name, e.g. "lām".
    pub name: &'static str,
    /// Canonical code point. Diacritics are combining marks. The hāʼ cell
    /// is written هـ in running text; the trailing tatweel is stripped during
    /// normalization, so ه is the canonical form here.
    pub glyph: char,
    /// Position 1..=32 in abjadi order (diacritics fill 29..=32).
    pub ordinal: u8,
    pub code: CommCode,
    pub kind: LetterKind,
}

/// The embedded 32-row table: 28 consonants in abjadi order followed by the
/// four diacritics ordered ḍammah, fathah, kasrah, sukūn.
pub const LETTERS: [Letter; 32] = [
    letter(LetterId::Alif, "ʼalif", 'ا', 1, 0b11111, LetterKind::Consonant),
    letter(LetterId::Ba, "bāʼ", 'ب', 2, 0b11110, LetterKind::Consonant),
    letter(LetterId::Jim, "jīm", 'ج', 3, 0b11101, LetterKind::Consonant),
    letter(LetterId::Dal, "dāl", 'د', 4, 0b11100, LetterKind::Consonant),
    letter(LetterId::Ha, "hāʼ", 'ه', 5, 0b11011, LetterKind::Consonant),
    letter(LetterId::Waw, "wāw", 'و', 6, 0b11010, LetterKind::Consonant),
    letter(LetterId::Zayn, "zayn", 'ز', 7, 0b11001, LetterKind::Consonant),
    letter(LetterId::Hha, "ḥāʼ", 'ح', 8, 0b11000, LetterKind::Consonant),
    letter(LetterId::Tta, "ṭāʼ", 'ط', 9, 0b10111, LetterKind::Consonant),
    letter(LetterId::Ya, "yāʼ", 'ي', 10, 0b10110, LetterKind::Consonant),
    letter(LetterId::Kaf, "kāf", 'ك', 11, 0b10101, LetterKind::Consonant),
    letter(LetterId::Lam, "lām", 'ل', 12, 0b10100, LetterKind::Consonant),
    letter(LetterId::Mim, "mīm", 'م', 13, 0b10011, LetterKind::Consonant),
    letter(LetterId::Nun, "nūn", 'ن', 14, 0b10010, LetterKind::Consonant),
    letter(LetterId::Sin, "sīn", 'س', 15, 0b10001, LetterKind::Consonant),
    letter(LetterId::Ayn, "ʻayn", 'ع', 16, 0b10000, LetterKind::Consonant),
    letter(LetterId::Fa, "fāʼ", 'ف', 17, 0b01111, LetterKind::Consonant),
    letter(LetterId::Sad, "ṣād", 'ص', 18, 0b01110, LetterKind::Consonant),
    letter(LetterId::Qaf, "qāf", 'ق', 19, 0b01101, LetterKind::Consonant),
    letter(LetterId::Ra, "rāʼ", 'ر', 20, 0b01100, LetterKind::Consonant),
    letter(LetterId::Shin, "shīn", 'ش', 21, 0b01011, LetterKind::Consonant),
    letter(LetterId::Ta, "tāʼ", 'ت', 22, 0b01010, LetterKind::Consonant),
    letter(LetterId::Tha, "thāʼ", 'ث', 23, 0b01001, LetterKind::Consonant),
    letter(LetterId::Kha, "khāʼ", 'خ', 24, 0b01000, LetterKind::Consonant),
    letter(LetterId::Dhal, "dhāl", 'ذ', 25, 0b00111, LetterKind::Consonant),
    letter(LetterId::Dad, "ḍād", 'ض', 26, 0b00110, LetterKind::Consonant),
    letter(LetterId::Zza, "ẓāʼ", 'ظ', 27, 0b00101, LetterKind::Consonant),
    letter(LetterId::Ghayn, "ghayn", 'غ', 28, 0b00100, LetterKind::Consonant),
    letter(LetterId::Dammah, "ḍammah", '\u{064F}', 29, 0b00011, LetterKind::Diacritic),
    letter(LetterId::Fathah, "fathah", '\u{064E}', 30, 0b00010, LetterKind::Diacritic),
    letter(LetterId::Kasrah, "kasrah", '\u{0650}', 31, 0b00001, LetterKind::Diacritic),
    letter(LetterId::Sukun, "sukūn", '\u{0652}', 32, 0b00000, LetterKind::Diacritic),
];

const fn letter(
    id: LetterId,
    name: &'static str,
    glyph: char,
    ordinal: u8,
    code: u8,
    kind: LetterKind,
) -> Letter {
    Letter {
        id,
        name,
        glyph,
        ordinal,
        code: CommCode::new(code),
        kind,
    }
}

// Inverse index built at compile time; fails the build if the embedded
// codes are not a bijection onto 0..=31.
const CODE_TO_INDEX: [u8; 32] = {
    let mut map = [255u8; 32];
    let mut i = 0;
    while i < 32 {
        let v = LETTERS[i].code.value() as usize;
        assert!(map[v] == 255, "duplicate code in alphabet table");
        map[v] = i as u8;
        i += 1;
    }
    let mut j = 0;
    while j < 32 {
        assert!(map[j] != 255, "missing code in alphabet table");
        j += 1;
    }
    map
};

/// The code assigned to a letter.
pub fn code_of(id: LetterId) -> CommCode {
    id.info().code
}

/// The letter assigned to a code. Total: every five-bit code names a letter.
pub fn letter_of(code: CommCode) -> &'static Letter {
    &LETTERS[CODE_TO_INDEX[code.value() as usize] as usize]
}

/// Looks a letter up by its canonical glyph.
pub fn by_glyph(glyph: char) -> Option<&'static Letter> {
    LETTERS.iter().find(|l| l.glyph == glyph)
}

/// Looks a letter up by its romanized name.
pub fn by_name(name: &str) -> Option<&'static Letter> {
    LETTERS.iter().find(|l| l.name == name)
}

/// Renders the embedded table as TSV with a header row.
pub fn to_tsv() -> String {
    let mut out = String::from("ordinal\tname\tglyph\tcode_binary\tcode_decimal\n");
    for l in &LETTERS {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            l.ordinal,
            l.name,
            l.glyph,
            l.code,
            l.code.value()
        ));
    }
    out
}

/// Whether a party is present in a communication state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Presence {
    Present,
    Absent,
}

impl From<bool> for Presence {
    fn from(present: bool) -> Self {
        if present {
            Presence::Present
        } else {
            Presence::Absent
        }
    }
}

/// Which parties hold the knowledge described by the last two bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnowledgeScope {
    /// Source and destination both present.
    Mutual,
    /// Only the source present.
    SpeakerOnly,
    /// Only the destination present.
    ListenerOnly,
    /// Neither present.
    Nobody,
}

/// What is known about the subject: a pure function of the last two bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnowledgeKind {
    FormOnly,
    AttributeOnly,
    Both,
    Neither,
}

/// Canonical epistemic reading of one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateDescription {
    pub presence: PartyPresence,
    pub scope: KnowledgeScope,
    pub kind: KnowledgeKind,
    /// Fixed-template English sentence for the (scope, kind) pair.
    pub text: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartyPresence {
    pub source: Presence,
    pub subject: Presence,
    pub destination: Presence,
}

/// Rendering templates, one per (scope, kind) pair, `{subject}` slot filled
/// with "available" or "absent". Kept as data so the wording can be swapped
/// without touching code.
const DESCRIPTION_TEMPLATES: [[&str; 4]; 4] = [
    // scope: mutual
    [
        "both parties know the form of an {subject} subject",
        "both parties know the attributes of an {subject} subject",
        "both parties know the form and attributes of an {subject} subject",
        "both parties know neither the form nor the attributes of an {subject} subject",
    ],
    // scope: speaker_only
    [
        "only the speaker knows the form of an {subject} subject",
        "only the speaker knows the attributes of an {subject} subject",
        "only the speaker knows the form and attributes of an {subject} subject",
        "only the speaker knows neither the form nor the attributes of an {subject} subject",
    ],
    // scope: listener_only
    [
        "only the listener knows the form of an {subject} subject",
        "only the listener knows the attributes of an {subject} subject",
        "only the listener knows the form and attributes of an {subject} subject",
        "only the listener knows neither the form nor the attributes of an {subject} subject",
    ],
    // scope: nobody
    [
        "nobody knows the form of an {subject} subject",
        "nobody knows the attributes of an {subject} subject",
        "nobody knows the form and attributes of an {subject} subject",
        "nobody knows neither the form nor the attributes of an {subject} subject",
    ],
];

/// Classifies the knowledge bits of a code.
pub fn classify_knowledge(code: CommCode) -> KnowledgeKind {
    match (code.form_known(), code.attribute_known()) {
        (true, false) => KnowledgeKind::FormOnly,
        (false, true) => KnowledgeKind::AttributeOnly,
        (true, true) => KnowledgeKind::Both,
        (false, false) => KnowledgeKind::Neither,
    }
}

fn scope_of(code: CommCode) -> KnowledgeScope {
    match (code.source_present(), code.destination_present()) {
        (true, true) => KnowledgeScope::Mutual,
        (true, false) => KnowledgeScope::SpeakerOnly,
        (false, true) => KnowledgeScope::ListenerOnly,
        (false, false) => KnowledgeScope::Nobody,
    }
}

/// Produces the canonical description of a code. Total and deterministic.
pub fn describe(code: CommCode) -> StateDescription {
    let scope = scope_of(code);
    let kind = classify_knowledge(code);
    let template = DESCRIPTION_TEMPLATES[scope as usize][kind as usize];
    let subject = if code.subject_present() {
        "available"
    } else {
        "absent"
    };
    StateDescription {
        presence: PartyPresence {
            source: code.source_present().into(),
            subject: code.subject_present().into(),
            destination: code.destination_present().into(),
        },
        scope,
        kind,
        text: template.replace("{subject}", subject),
    }
}
