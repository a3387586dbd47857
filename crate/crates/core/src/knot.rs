//! Oriented knot diagrams and projections as Gauss data.
//!
//! A diagram with `c` crossings is a cyclic sequence of `2c` visits. Edge `j`
//! (0-based) is the arc entering visit `j`, so edge 0 sits between the last
//! visit and the first one. Column `j` of every labeled sequence is the label
//! of edge `j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::{Cell, LabeledSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn flipped(self) -> Strand {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Strand::Over => 'O',
            Strand::Under => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match i8::deserialize(d)? {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(serde::de::Error::custom(format!(
                "sign must be 1 or -1, got {other}"
            ))),
        }
    }
}

/// One pass through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Visit {
    pub crossing: u32,
    pub strand: Strand,
}

impl Visit {
    pub fn over(crossing: u32) -> Self {
        Visit {
            crossing,
            strand: Strand::Over,
        }
    }

    pub fn under(crossing: u32) -> Self {
        Visit {
            crossing,
            strand: Strand::Under,
        }
    }
}

/// Base point position: edge `index` enters visit `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeIndex(pub usize);

/// Gauss data of an oriented knot diagram.
///
/// Crossing ids are `1..=c`; every id is visited once over and once under and
/// carries one sign. Non-realizable (virtual) data is accepted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedKnotDiagram {
    visits: Vec<Visit>,
    signs: Vec<Sign>,
}

impl OrientedKnotDiagram {
    /// Builds a diagram, checking the Gauss data invariants. `signs[i]` is
    /// the sign of crossing `i + 1`.
    pub fn new(visits: Vec<Visit>, signs: Vec<Sign>) -> Result<Self> {
        if !visits.len().is_multiple_of(2) {
            return Err(Error::InvalidDiagram(format!(
                "odd number of visits ({})",
                visits.len()
            )));
        }
        let c = visits.len() / 2;
        if signs.len() != c {
            return Err(Error::InvalidDiagram(format!(
                "{} signs given for {c} crossings",
                signs.len()
            )));
        }
        let mut over = vec![0u32; c];
        let mut under = vec![0u32; c];
        for v in &visits {
            if v.crossing == 0 || v.crossing as usize > c {
                return Err(Error::InvalidDiagram(format!(
                    "crossing id {} outside 1..={c}",
                    v.crossing
                )));
            }
            let slot = (v.crossing - 1) as usize;
            match v.strand {
                Strand::Over => over[slot] += 1,
                Strand::Under => under[slot] += 1,
            }
        }
        for id in 0..c {
            if over[id] + under[id] != 2 {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {} appears {} times",
                    id + 1,
                    over[id] + under[id]
                )));
            }
            if over[id] != 1 {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {} is visited on the same strand twice",
                    id + 1
                )));
            }
        }
        Ok(OrientedKnotDiagram { visits, signs })
    }

    /// The crossingless diagram.
    pub fn unknot() -> Self {
        OrientedKnotDiagram {
            visits: Vec::new(),
            signs: Vec::new(),
        }
    }

    pub fn crossing_count(&self) -> u32 {
        self.signs.len() as u32
    }

    pub fn visits(&self) -> &[Visit] {
        &self.visits
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, id: u32) -> Result<Sign> {
        self.check_id(id)?;
        Ok(self.signs[(id - 1) as usize])
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|s| **s == Sign::Negative).count()
    }

    fn check_id(&self, id: u32) -> Result<()> {
        if id == 0 || id > self.crossing_count() {
            Err(Error::UnknownCrossing(id))
        } else {
            Ok(())
        }
    }

    /// Number of crossings met as an undercrossing first when walking once
    /// around the diagram from `base`.
    pub fn warping_degree(&self, base: EdgeIndex) -> Result<u32> {
        let n = self.visits.len();
        if base.0 >= n.max(1) {
            return Err(Error::Shape(format!("edge {} outside 0..{n}", base.0)));
        }
        let mut seen = vec![false; self.signs.len()];
        let mut degree = 0;
        for step in 0..n {
            let v = self.visits[(base.0 + step) % n];
            let slot = (v.crossing - 1) as usize;
            if !seen[slot] {
                seen[slot] = true;
                if v.strand == Strand::Under {
                    degree += 1;
                }
            }
        }
        Ok(degree)
    }

    /// Warping degree labeling read from edge 0, without bars.
    ///
    /// Passing an overcrossing raises the label by one and passing an
    /// undercrossing lowers it by one.
    pub fn warping_labels(&self) -> LabeledSequence {
        let n = self.visits.len();
        if n == 0 {
            return LabeledSequence(Vec::new());
        }
        // Edge 0 label: crossings whose under visit comes before the over visit.
        let c = self.signs.len();
        let mut over_at = vec![usize::MAX; c];
        let mut under_at = vec![usize::MAX; c];
        for (pos, v) in self.visits.iter().enumerate() {
            let slot = (v.crossing - 1) as usize;
            match v.strand {
                Strand::Over => over_at[slot] = pos,
                Strand::Under => under_at[slot] = pos,
            }
        }
        let mut label = (0..c).filter(|&i| under_at[i] < over_at[i]).count() as i64;
        let mut cells = Vec::with_capacity(n);
        for v in &self.visits {
            cells.push(Cell::plain(label as u32));
            label += match v.strand {
                Strand::Over => 1,
                Strand::Under => -1,
            };
        }
        LabeledSequence(cells)
    }

    /// Warping labels with a bar on the edge right after each over visit of
    /// a negative crossing. The edge after the last visit is edge 0.
    pub fn signed_labels(&self) -> LabeledSequence {
        let mut seq = self.warping_labels();
        let n = self.visits.len();
        for (pos, v) in self.visits.iter().enumerate() {
            if v.strand == Strand::Over && self.signs[(v.crossing - 1) as usize] == Sign::Negative {
                seq.0[(pos + 1) % n].bar = true;
            }
        }
        seq
    }

    /// Swaps over and under at crossing `id` and flips its sign.
    pub fn crossing_change(&self, id: u32) -> Result<Self> {
        self.check_id(id)?;
        let mut out = self.clone();
        out.flip_in_place((id - 1) as usize);
        Ok(out)
    }

    fn flip_in_place(&mut self, slot: usize) {
        let id = slot as u32 + 1;
        for v in self.visits.iter_mut().filter(|v| v.crossing == id) {
            v.strand = v.strand.flipped();
        }
        self.signs[slot] = self.signs[slot].flipped();
    }

    /// The diagram with every crossing changed.
    pub fn mirror_all(&self) -> Self {
        let mask = if self.signs.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.signs.len())
        };
        self.with_flips(mask)
    }

    /// Changes every crossing `i + 1` whose bit `i` is set in `mask`.
    pub fn with_flips(&self, mask: u64) -> Self {
        let mut out = self.clone();
        for slot in 0..self.signs.len().min(64) {
            if mask >> slot & 1 == 1 {
                out.signs[slot] = out.signs[slot].flipped();
            }
        }
        for v in &mut out.visits {
            let slot = (v.crossing - 1) as usize;
            if slot < 64 && mask >> slot & 1 == 1 {
                v.strand = v.strand.flipped();
            }
        }
        out
    }

    pub fn underlying_projection(&self) -> KnotProjection {
        KnotProjection {
            word: self.visits.iter().map(|v| v.crossing).collect(),
        }
    }

    /// Relabels crossings in order of first appearance from visit 0.
    pub fn normalized(&self) -> Self {
        let c = self.signs.len();
        let mut new_id = vec![0u32; c];
        let mut next = 1;
        for v in &self.visits {
            let slot = (v.crossing - 1) as usize;
            if new_id[slot] == 0 {
                new_id[slot] = next;
                next += 1;
            }
        }
        let visits = self
            .visits
            .iter()
            .map(|v| Visit {
                crossing: new_id[(v.crossing - 1) as usize],
                strand: v.strand,
            })
            .collect();
        let mut signs = vec![Sign::Positive; c];
        for (slot, &s) in self.signs.iter().enumerate() {
            signs[(new_id[slot] - 1) as usize] = s;
        }
        OrientedKnotDiagram { visits, signs }
    }

    /// Moves the start to visit `shift` (labels are kept).
    pub fn rotated(&self, shift: usize) -> Self {
        let mut visits = self.visits.clone();
        if !visits.is_empty() {
            let k = shift % visits.len();
            visits.rotate_left(k);
        }
        OrientedKnotDiagram {
            visits,
            signs: self.signs.clone(),
        }
    }

    /// Equal Gauss data up to crossing relabeling and choice of start visit.
    pub fn same_diagram(&self, other: &Self) -> bool {
        if self.visits.len() != other.visits.len() {
            return false;
        }
        if self.visits.is_empty() {
            return true;
        }
        let target = other.normalized();
        (0..self.visits.len()).any(|k| self.rotated(k).normalized() == target)
    }

    /// Normalized Gauss code, e.g. `O1+U2+O3+U1+O2+U3+`.
    pub fn to_gauss_code(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DiagramJson::from(self)).expect("diagram json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let dto: DiagramJson = serde_json::from_value(value.clone())?;
        dto.try_into()
    }
}

impl fmt::Display for OrientedKnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.visits {
            let sign = self.signs[(v.crossing - 1) as usize];
            write!(f, "{}{}{}", v.strand.letter(), v.crossing, sign.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for OrientedKnotDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gauss_code(s)
    }
}

/// Parses tokens of the form `(O|U)<id>(+|-)`; U+2212 is accepted as minus.
pub fn parse_gauss_code(text: &str) -> Result<OrientedKnotDiagram> {
    let text = text.trim();
    let mut visits = Vec::new();
    let mut token_signs: Vec<(u32, Sign)> = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((offset, ch)) = chars.next() {
        let strand = match ch {
            'O' | 'o' => Strand::Over,
            'U' | 'u' => Strand::Under,
            other => {
                return Err(Error::MalformedToken {
                    offset,
                    reason: format!("expected O or U, found {other:?}"),
                })
            }
        };
        let mut id: u64 = 0;
        let mut digits = 0;
        while let Some(&(_, d)) = chars.peek() {
            let Some(v) = d.to_digit(10) else { break };
            id = id * 10 + u64::from(v);
            if id > u64::from(u32::MAX) {
                return Err(Error::MalformedToken {
                    offset,
                    reason: "crossing id too large".into(),
                });
            }
            digits += 1;
            chars.next();
        }
        if digits == 0 {
            return Err(Error::MalformedToken {
                offset,
                reason: "missing crossing id".into(),
            });
        }
        let sign = match chars.next() {
            Some((_, '+')) => Sign::Positive,
            Some((_, '-')) | Some((_, '\u{2212}')) => Sign::Negative,
            Some((o, other)) => {
                return Err(Error::MalformedToken {
                    offset: o,
                    reason: format!("expected + or -, found {other:?}"),
                })
            }
            None => {
                return Err(Error::MalformedToken {
                    offset: text.len(),
                    reason: "missing sign".into(),
                })
            }
        };
        let id = id as u32;
        visits.push(Visit {
            crossing: id,
            strand,
        });
        token_signs.push((id, sign));
    }
    let c = visits.len() / 2;
    let mut signs: Vec<Option<Sign>> = vec![None; c];
    for (id, sign) in token_signs {
        if id == 0 || id as usize > c {
            // Reported with the full id check in `new`.
            continue;
        }
        let slot = &mut signs[(id - 1) as usize];
        match slot {
            Some(prev) if *prev != sign => {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {id} carries inconsistent signs"
                )))
            }
            _ => *slot = Some(sign),
        }
    }
    let signs = signs
        .into_iter()
        .map(|s| s.unwrap_or(Sign::Positive))
        .collect();
    OrientedKnotDiagram::new(visits, signs)
}

/// Gauss word of an oriented knot projection: each crossing id appears twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnotProjection {
    word: Vec<u32>,
}

impl KnotProjection {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        if !word.len().is_multiple_of(2) {
            return Err(Error::InvalidDiagram("odd-length gauss word".into()));
        }
        let c = word.len() / 2;
        let mut count = vec![0u8; c];
        for &id in &word {
            if id == 0 || id as usize > c {
                return Err(Error::InvalidDiagram(format!(
                    "crossing id {id} outside 1..={c}"
                )));
            }
            count[(id - 1) as usize] += 1;
        }
        if let Some(bad) = count.iter().position(|&k| k != 2) {
            return Err(Error::InvalidDiagram(format!(
                "crossing {} appears {} times",
                bad + 1,
                count[bad]
            )));
        }
        Ok(KnotProjection { word })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn crossing_count(&self) -> u32 {
        (self.word.len() / 2) as u32
    }

    /// Relabels crossings in order of first appearance.
    pub fn normalized(&self) -> Self {
        let mut new_id = vec![0u32; self.word.len() / 2];
        let mut next = 1;
        let word = self
            .word
            .iter()
            .map(|&id| {
                let slot = (id - 1) as usize;
                if new_id[slot] == 0 {
                    new_id[slot] = next;
                    next += 1;
                }
                new_id[slot]
            })
            .collect();
        KnotProjection { word }
    }

    /// Column pairs `(i, j)`, 0-based with `i < j`, for every crossing, sorted.
    pub fn chord_pairs(&self) -> Vec<(usize, usize)> {
        let mut first = vec![usize::MAX; self.word.len() / 2];
        let mut pairs = Vec::with_capacity(first.len());
        for (pos, &id) in self.word.iter().enumerate() {
            let slot = (id - 1) as usize;
            if first[slot] == usize::MAX {
                first[slot] = pos;
            } else {
                pairs.push((first[slot], pos));
            }
        }
        pairs.sort_unstable();
        pairs
    }

    /// True when the two visits of every crossing are an odd distance apart,
    /// which every planar curve satisfies.
    pub fn is_evenly_intersticed(&self) -> bool {
        self.chord_pairs().iter().all(|(a, b)| (b - a) % 2 == 1)
    }

    /// The diagram obtained from `reference` by changing the crossings
    /// selected in `mask` (bit `i` is crossing `i + 1`).
    pub fn apply_assignment(
        &self,
        reference: &OrientedKnotDiagram,
        mask: u64,
    ) -> Result<OrientedKnotDiagram> {
        if reference.underlying_projection() != *self {
            return Err(Error::ProjectionMismatch);
        }
        let c = self.crossing_count();
        if c < 64 && mask >> c != 0 {
            return Err(Error::Shape(format!(
                "mask {mask:#b} has bits beyond {c} crossings"
            )));
        }
        Ok(reference.with_flips(mask))
    }
}

impl fmt::Display for KnotProjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, id) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{id}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    visits: Vec<VisitJson>,
}

#[derive(Serialize, Deserialize)]
struct VisitJson {
    id: u32,
    strand: Strand,
    sign: Sign,
}

impl From<&OrientedKnotDiagram> for DiagramJson {
    fn from(d: &OrientedKnotDiagram) -> Self {
        DiagramJson {
            visits: d
                .visits
                .iter()
                .map(|v| VisitJson {
                    id: v.crossing,
                    strand: v.strand,
                    sign: d.signs[(v.crossing - 1) as usize],
                })
                .collect(),
        }
    }
}

impl TryFrom<DiagramJson> for OrientedKnotDiagram {
    type Error = Error;

    fn try_from(dto: DiagramJson) -> Result<Self> {
        let code: String = dto
            .visits
            .iter()
            .map(|v| {
                let s = if v.sign == Sign::Positive { '+' } else { '-' };
                format!("{}{}{}", v.strand.letter(), v.id, s)
            })
            .collect();
        parse_gauss_code(&code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(code: &str) -> OrientedKnotDiagram {
        parse_gauss_code(code).unwrap()
    }

    #[test]
    fn parses_curl_and_trefoil() {
        let curl = d("O1+U1+");
        assert_eq!(curl.crossing_count(), 1);
        assert_eq!(curl.visits(), &[Visit::over(1), Visit::under(1)]);

        let trefoil = d("O1+U2+O3+U1+O2+U3+");
        assert_eq!(trefoil.crossing_count(), 3);
        assert_eq!(trefoil.underlying_projection().word(), &[1, 2, 3, 1, 2, 3]);
        assert_eq!(trefoil.to_gauss_code(), "O1+U2+O3+U1+O2+U3+");
    }

    #[test]
    fn accepts_unicode_minus() {
        let a = d("O1+U2\u{2212}O2\u{2212}U1+");
        assert_eq!(a.sign(2).unwrap(), Sign::Negative);
        assert_eq!(a.to_gauss_code(), "O1+U2-O2-U1+");
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(matches!(
            parse_gauss_code("O1+U2+O2+U1\u{2212}"),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            parse_gauss_code("O1+O1+"),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            parse_gauss_code("O1+U1+U1+"),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            parse_gauss_code("X1+U1+"),
            Err(Error::MalformedToken { .. })
        ));
        assert!(matches!(
            parse_gauss_code("O+U1+"),
            Err(Error::MalformedToken { .. })
        ));
        assert!(matches!(
            parse_gauss_code("O1U1"),
            Err(Error::MalformedToken { .. })
        ));
        assert!(matches!(
            parse_gauss_code("O3+U3+"),
            Err(Error::InvalidDiagram(_))
        ));
    }

    #[test]
    fn empty_code_is_the_unknot() {
        let u = d("");
        assert_eq!(u.crossing_count(), 0);
        assert!(u.warping_labels().is_empty());
    }

    #[test]
    fn warping_degree_examples() {
        let alt = d("O1+U2+O3+U1+O2+U3+");
        assert_eq!(alt.warping_degree(EdgeIndex(0)).unwrap(), 1);
        let descending = d("O1+O2+O3+U1+U2+U3+");
        assert_eq!(descending.warping_degree(EdgeIndex(0)).unwrap(), 0);
        assert!(alt.warping_degree(EdgeIndex(6)).is_err());
    }

    #[test]
    fn labels_match_printed_rows() {
        assert_eq!(
            d("O1+U2+O3+U1+O2+U3+").warping_labels().values(),
            vec![1, 2, 1, 2, 1, 2]
        );
        assert_eq!(
            d("O1+O2+O3+U1+U2+U3+").warping_labels().values(),
            vec![0, 1, 2, 3, 2, 1]
        );
    }

    #[test]
    fn signed_labels_bar_after_negative_over() {
        // One negative crossing, over at the fourth visit: 2 1 0 1 2- 3.
        let fig = d("U1-U2+O3+O1-O2+U3+");
        assert_eq!(fig.signed_labels().to_string(), "2 1 0 1 2- 3");
        assert_eq!(d("O1+U2+O3+U1+O2+U3+").signed_labels().bar_count(), 0);
    }

    #[test]
    fn bar_after_last_visit_wraps_to_first_column() {
        let neg = d("U1-O1-");
        assert_eq!(neg.signed_labels().to_string(), "1- 0");
    }

    #[test]
    fn crossing_change_on_curl() {
        let curl = d("O1+U1+");
        let changed = curl.crossing_change(1).unwrap();
        assert_eq!(changed.to_gauss_code(), "U1-O1-");
        assert_eq!(changed.crossing_change(1).unwrap(), curl);
        assert_eq!(curl.crossing_change(2), Err(Error::UnknownCrossing(2)));
    }

    #[test]
    fn assignment_masks() {
        let t = d("O1+U2+O3+U1+O2+U3+");
        let p = t.underlying_projection();
        assert_eq!(p.apply_assignment(&t, 0).unwrap(), t);
        assert_eq!(p.apply_assignment(&t, 0b111).unwrap(), t.mirror_all());
        let all: std::collections::HashSet<_> =
            (0..8).map(|m| p.apply_assignment(&t, m).unwrap()).collect();
        assert_eq!(all.len(), 8);
        let other = d("O1+U1+O2+U2+O3+U3+").underlying_projection();
        assert_eq!(
            other.apply_assignment(&t, 0),
            Err(Error::ProjectionMismatch)
        );
        assert!(p.apply_assignment(&t, 8).is_err());
    }

    #[test]
    fn same_diagram_ignores_labels_and_start() {
        let a = d("O1+U2-O3+U1+O2-U3+");
        let b = a.rotated(2).normalized();
        assert_ne!(a, b);
        assert!(a.same_diagram(&b));
        assert!(!a.same_diagram(&a.crossing_change(1).unwrap()));
    }

    #[test]
    fn json_shape() {
        let curl = d("O1-U1-");
        let json = curl.to_json();
        assert_eq!(
            json,
            serde_json::json!({"visits": [
                {"id": 1, "strand": "over", "sign": -1},
                {"id": 1, "strand": "under", "sign": -1}
            ]})
        );
        assert_eq!(OrientedKnotDiagram::from_json(&json).unwrap(), curl);
    }

    #[test]
    fn chord_pairs_and_parity() {
        let p = d("O1+U2+O3+U1+O2+U3+").underlying_projection();
        assert_eq!(p.chord_pairs(), vec![(0, 3), (1, 4), (2, 5)]);
        assert!(p.is_evenly_intersticed());
        assert!(!KnotProjection::new(vec![1, 2, 1, 2])
            .unwrap()
            .is_evenly_intersticed());
    }
}
