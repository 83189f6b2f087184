//! JSON documents: `{"kind", "version", "payload"}` with kind-specific
//! payloads. Keys are written in a fixed order and arrays in canonical order,
//! so the same value always serialises to the same bytes.

use std::str::FromStr;
use std::sync::Arc;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::exactlin::{FieldSpec, Matrix};
use crate::interleave::Interleaving;
use crate::proset::{shoelace, HeightFunction, Proset, ShoelaceProset, Translation};
use crate::rep::{NatTrans, Representation};
use crate::zed::{Barcode, DecomposedShoelaceRep, Interval, Matching, Summand, Window, WindowModule};

pub const VERSION: &str = "1";

/// Why a document could not be loaded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    /// Malformed JSON, unknown kind or version, or a payload not matching
    /// its schema.
    #[error("format error: {0}")]
    Format(String),
    /// Well-formed payload rejected by its validator.
    #[error("validation failed: {0}")]
    Invalid(String),
}

fn format_err(e: impl std::fmt::Display) -> DocError {
    DocError::Format(e.to_string())
}

fn invalid(e: impl std::fmt::Display) -> DocError {
    DocError::Invalid(e.to_string())
}

/// A loaded, validated document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Proset(Arc<Proset>),
    /// Written with kind `proset` and a `shoelace_of` record.
    Shoelace(ShoelaceProset),
    Translation(Translation),
    Height(Arc<Proset>, HeightFunction),
    Representation(Arc<Representation>),
    NatTrans(NatTrans),
    Interleaving(Interleaving),
    Barcode(Barcode),
    Matching(Matching),
    DecomposedRep(DecomposedShoelaceRep),
    WindowModule(WindowModule),
}

pub const KINDS: [&str; 10] = [
    "proset",
    "translation",
    "height",
    "representation",
    "nattrans",
    "interleaving",
    "barcode",
    "matching",
    "decomposed_rep",
    "window_module",
];

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    kind: &'a str,
    version: &'a str,
    payload: T,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEnvelope {
    kind: String,
    version: String,
    payload: Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProsetPayload {
    size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    relations: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shoelace_of: Option<ShoelaceOf>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ShoelaceOf {
    base: Box<ProsetPayload>,
    lambda: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unclamped_shift: Option<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TranslationPayload {
    proset: ProsetPayload,
    map: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HeightPayload {
    proset: ProsetPayload,
    values: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixPayload {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapPayload {
    from: usize,
    to: usize,
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepPayload {
    prime: u64,
    proset: ProsetPayload,
    dims: Vec<usize>,
    maps: Vec<MapPayload>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NatTransPayload {
    prime: u64,
    source: RepPayload,
    target: RepPayload,
    components: Vec<MatrixPayload>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InterleavingPayload {
    prime: u64,
    lambda: Vec<usize>,
    m: RepPayload,
    n: RepPayload,
    phi: Vec<MatrixPayload>,
    psi: Vec<MatrixPayload>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BarPayload {
    interval: Interval,
    multiplicity: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BarcodePayload {
    bars: Vec<BarPayload>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchingPayload {
    epsilon: u64,
    source: BarcodePayload,
    target: BarcodePayload,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecomposedPayload {
    prime: u64,
    window: Window,
    epsilon: u64,
    summands: Vec<Summand>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WindowModulePayload {
    prime: u64,
    window: Window,
    dims: Vec<usize>,
    maps: Vec<MapPayload>,
}

fn save_proset(p: &Proset) -> ProsetPayload {
    ProsetPayload {
        size: p.len(),
        labels: p.labels().map(|l| l.to_vec()),
        relations: p.related_pairs().collect(),
        shoelace_of: None,
    }
}

fn load_proset(p: &ProsetPayload) -> Result<Arc<Proset>, DocError> {
    if let Some(&(i, j)) = p.relations.iter().find(|&&(i, j)| i >= p.size || j >= p.size) {
        return Err(DocError::Format(format!("relation ({i}, {j}) is out of range for size {}", p.size)));
    }
    let mut q = Proset::from_pairs(p.size, p.relations.iter().copied());
    if let Some(labels) = &p.labels {
        if labels.len() != p.size {
            return Err(DocError::Invalid(format!("{} labels for {} elements", labels.len(), p.size)));
        }
        q = q.with_labels(labels.clone());
    }
    q.validate().map_err(invalid)?;
    Ok(Arc::new(q))
}

fn save_shoelace(sh: &ShoelaceProset) -> ProsetPayload {
    let mut out = save_proset(sh.carrier());
    out.shoelace_of = Some(ShoelaceOf {
        base: Box::new(save_proset(sh.base())),
        lambda: sh.lambda().map().to_vec(),
        unclamped_shift: match sh.rule() {
            crate::proset::CrossRule::Translation => None,
            crate::proset::CrossRule::UnclampedShift(e) => Some(e),
        },
    });
    out
}

fn load_shoelace(p: &ProsetPayload, of: &ShoelaceOf) -> Result<ShoelaceProset, DocError> {
    let base = load_proset(&of.base)?;
    let lam = load_translation(&base, &of.lambda)?;
    let sh = match of.unclamped_shift {
        None => shoelace(&base, &lam).map_err(invalid)?,
        Some(eps) => {
            let n = base.len();
            if (0..n).any(|i| (0..n).any(|j| base.leq(i, j) != (i <= j))) {
                return Err(DocError::Invalid("unclamped shoelace needs a chain base".into()));
            }
            let clamped: Vec<usize> = (0..n).map(|i| (i + eps).min(n.saturating_sub(1))).collect();
            if lam.map() != clamped.as_slice() {
                return Err(DocError::Invalid("unclamped shoelace needs the clamped shift".into()));
            }
            ShoelaceProset::unclamped_chain(&base, &lam, eps)
        }
    };
    let carrier = load_proset(&ProsetPayload { shoelace_of: None, ..p.clone() })?;
    if carrier != *sh.carrier() {
        return Err(DocError::Invalid("relations do not match the shoelace construction".into()));
    }
    Ok(sh)
}

fn load_translation(base: &Arc<Proset>, map: &[usize]) -> Result<Translation, DocError> {
    if map.len() != base.len() || map.iter().any(|&y| y >= base.len()) {
        return Err(DocError::Invalid(format!("map {map:?} is not a self-map of {} elements", base.len())));
    }
    Translation::new(base.clone(), map.to_vec()).map_err(invalid)
}

fn field_of(prime: u64) -> Result<FieldSpec, DocError> {
    FieldSpec::new(prime).map_err(invalid)
}

fn save_matrix(m: &Matrix) -> MatrixPayload {
    MatrixPayload { rows: m.rows(), cols: m.cols(), entries: m.entries().iter().map(|&e| e as i64).collect() }
}

fn load_matrix(field: FieldSpec, m: &MatrixPayload) -> Result<Matrix, DocError> {
    Matrix::from_entries(field, m.rows, m.cols, &m.entries).map_err(format_err)
}

fn save_maps(r: &Representation) -> Vec<MapPayload> {
    r.maps()
        .iter()
        .map(|(&(from, to), m)| MapPayload {
            from,
            to,
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|&e| e as i64).collect(),
        })
        .collect()
}

fn load_rep_parts(
    field: FieldSpec,
    proset: Arc<Proset>,
    dims: &[usize],
    maps: &[MapPayload],
) -> Result<Representation, DocError> {
    let mut out = std::collections::BTreeMap::new();
    for mp in maps {
        let m = Matrix::from_entries(field, mp.rows, mp.cols, &mp.entries).map_err(format_err)?;
        if out.insert((mp.from, mp.to), m).is_some() {
            return Err(DocError::Format(format!("map ({}, {}) given twice", mp.from, mp.to)));
        }
    }
    Representation::new(proset, field, dims.to_vec(), out).map_err(invalid)
}

fn save_rep(r: &Representation) -> RepPayload {
    RepPayload { prime: r.field().prime() as u64, proset: save_proset(r.proset()), dims: r.dims().to_vec(), maps: save_maps(r) }
}

fn load_rep(r: &RepPayload) -> Result<Arc<Representation>, DocError> {
    let field = field_of(r.prime)?;
    let proset = load_proset(&r.proset)?;
    Ok(Arc::new(load_rep_parts(field, proset, &r.dims, &r.maps)?))
}

fn load_rep_in(field: FieldSpec, r: &RepPayload) -> Result<Arc<Representation>, DocError> {
    if r.prime != field.prime() as u64 {
        return Err(DocError::Invalid(format!("mixed primes {} and {}", field.prime(), r.prime)));
    }
    load_rep(r)
}

fn save_barcode(b: &Barcode) -> BarcodePayload {
    BarcodePayload { bars: b.bars().map(|(interval, multiplicity)| BarPayload { interval, multiplicity }).collect() }
}

fn load_barcode(b: &BarcodePayload) -> Result<Barcode, DocError> {
    let mut out = Barcode::new();
    for bar in &b.bars {
        if bar.multiplicity == 0 {
            return Err(DocError::Invalid(format!("bar {} has multiplicity 0", bar.interval)));
        }
        out.add(bar.interval, bar.multiplicity);
    }
    Ok(out)
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, DocError> {
    serde_json::from_value(v).map_err(format_err)
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Proset(_) | Document::Shoelace(_) => "proset",
            Document::Translation(_) => "translation",
            Document::Height(..) => "height",
            Document::Representation(_) => "representation",
            Document::NatTrans(_) => "nattrans",
            Document::Interleaving(_) => "interleaving",
            Document::Barcode(_) => "barcode",
            Document::Matching(_) => "matching",
            Document::DecomposedRep(_) => "decomposed_rep",
            Document::WindowModule(_) => "window_module",
        }
    }

    fn payload(&self) -> Value {
        let v = match self {
            Document::Proset(p) => serde_json::to_value(save_proset(p)),
            Document::Shoelace(sh) => serde_json::to_value(save_shoelace(sh)),
            Document::Translation(t) => {
                serde_json::to_value(TranslationPayload { proset: save_proset(t.base()), map: t.map().to_vec() })
            }
            Document::Height(p, h) => serde_json::to_value(HeightPayload {
                proset: save_proset(p),
                values: h.values().iter().map(|v| v.to_string()).collect(),
            }),
            Document::Representation(r) => serde_json::to_value(save_rep(r)),
            Document::NatTrans(t) => serde_json::to_value(NatTransPayload {
                prime: t.source().field().prime() as u64,
                source: save_rep(t.source()),
                target: save_rep(t.target()),
                components: t.components().iter().map(save_matrix).collect(),
            }),
            Document::Interleaving(x) => serde_json::to_value(InterleavingPayload {
                prime: x.m().field().prime() as u64,
                lambda: x.lam().map().to_vec(),
                m: save_rep(x.m()),
                n: save_rep(x.n()),
                phi: x.phi().components().iter().map(save_matrix).collect(),
                psi: x.psi().components().iter().map(save_matrix).collect(),
            }),
            Document::Barcode(b) => serde_json::to_value(save_barcode(b)),
            Document::Matching(m) => serde_json::to_value(MatchingPayload {
                epsilon: m.epsilon(),
                source: save_barcode(m.source()),
                target: save_barcode(m.target()),
                pairs: m.pairs().to_vec(),
            }),
            Document::DecomposedRep(l) => serde_json::to_value(DecomposedPayload {
                prime: l.field().prime() as u64,
                window: l.window(),
                epsilon: l.epsilon(),
                summands: l.summands().to_vec(),
            }),
            Document::WindowModule(wm) => serde_json::to_value(WindowModulePayload {
                prime: wm.rep().field().prime() as u64,
                window: wm.window(),
                dims: wm.rep().dims().to_vec(),
                maps: save_maps(wm.rep()),
            }),
        };
        v.expect("payloads serialise")
    }

    /// The document as a JSON value with keys in output order.
    pub fn to_value(&self) -> Value {
        serde_json::to_value(Envelope { kind: self.kind(), version: VERSION, payload: self.payload() })
            .expect("envelopes serialise")
    }

    /// Pretty-printed JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let env = Envelope { kind: self.kind(), version: VERSION, payload: self.payload() };
        let mut s = serde_json::to_string_pretty(&env).expect("envelopes serialise");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Document, DocError> {
        let raw: RawEnvelope = serde_json::from_str(text).map_err(format_err)?;
        if raw.version != VERSION {
            return Err(DocError::Format(format!("unsupported version {:?}", raw.version)));
        }
        Document::from_payload(&raw.kind, raw.payload)
    }

    pub fn from_payload(kind: &str, payload: Value) -> Result<Document, DocError> {
        Ok(match kind {
            "proset" => {
                let p: ProsetPayload = from_value(payload)?;
                match &p.shoelace_of {
                    Some(of) => Document::Shoelace(load_shoelace(&p, of)?),
                    None => Document::Proset(load_proset(&p)?),
                }
            }
            "translation" => {
                let t: TranslationPayload = from_value(payload)?;
                let base = load_proset(&t.proset)?;
                Document::Translation(load_translation(&base, &t.map)?)
            }
            "height" => {
                let h: HeightPayload = from_value(payload)?;
                let p = load_proset(&h.proset)?;
                let values = h
                    .values
                    .iter()
                    .map(|v| Rational64::from_str(v).map_err(|_| DocError::Format(format!("bad rational {v:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                let hf = HeightFunction::new(&p, values).map_err(invalid)?;
                Document::Height(p, hf)
            }
            "representation" => Document::Representation(load_rep(&from_value(payload)?)?),
            "nattrans" => {
                let t: NatTransPayload = from_value(payload)?;
                let field = field_of(t.prime)?;
                let source = load_rep_in(field, &t.source)?;
                let target = load_rep_in(field, &t.target)?;
                let components = t.components.iter().map(|m| load_matrix(field, m)).collect::<Result<_, _>>()?;
                Document::NatTrans(NatTrans::new(source, target, components).map_err(invalid)?)
            }
            "interleaving" => {
                let x: InterleavingPayload = from_value(payload)?;
                let field = field_of(x.prime)?;
                let m = load_rep_in(field, &x.m)?;
                let n = load_rep_in(field, &x.n)?;
                let lam = load_translation(m.proset(), &x.lambda)?;
                let phi = x.phi.iter().map(|c| load_matrix(field, c)).collect::<Result<_, _>>()?;
                let psi = x.psi.iter().map(|c| load_matrix(field, c)).collect::<Result<_, _>>()?;
                Document::Interleaving(Interleaving::from_components(m, n, lam, phi, psi).map_err(invalid)?)
            }
            "barcode" => Document::Barcode(load_barcode(&from_value(payload)?)?),
            "matching" => {
                let m: MatchingPayload = from_value(payload)?;
                let source = load_barcode(&m.source)?;
                let target = load_barcode(&m.target)?;
                Document::Matching(Matching::new(source, target, m.epsilon, m.pairs).map_err(invalid)?)
            }
            "decomposed_rep" => {
                let l: DecomposedPayload = from_value(payload)?;
                let field = field_of(l.prime)?;
                Document::DecomposedRep(
                    DecomposedShoelaceRep::new(l.window, l.epsilon, field, l.summands).map_err(invalid)?,
                )
            }
            "window_module" => {
                let wm: WindowModulePayload = from_value(payload)?;
                let field = field_of(wm.prime)?;
                let (chain, _) = crate::zed::window_chain(&wm.window);
                let rep = load_rep_parts(field, chain, &wm.dims, &wm.maps)?;
                Document::WindowModule(WindowModule::new(wm.window, Arc::new(rep)).map_err(invalid)?)
            }
            other => return Err(DocError::Format(format!("unknown kind {other:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zed::{ExtendedInt, Interval};

    fn round_trip(d: Document) {
        let text = d.to_json();
        let back = Document::from_json(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn prosets_and_shoelaces() {
        let p = Arc::new(Proset::chain(3).with_labels(vec!["1".into(), "2".into(), "3".into()]));
        round_trip(Document::Proset(p.clone()));
        let lam = Translation::new(p.clone(), vec![1, 2, 2]).unwrap();
        round_trip(Document::Translation(lam.clone()));
        round_trip(Document::Shoelace(shoelace(&p, &lam).unwrap()));
        let w = Window::new(0, 4).unwrap();
        round_trip(Document::Shoelace(crate::zed::shoelace_window(&w, 1)));
        let (chain, h) = crate::zed::window_chain(&w);
        round_trip(Document::Height(chain, h));
    }

    #[test]
    fn barcodes_with_infinite_ends() {
        let b = Barcode::from_intervals([
            Interval::new(ExtendedInt::NegInf, 3.into()).unwrap(),
            Interval::closed(0, 2),
            Interval::closed(0, 2),
        ]);
        let text = Document::Barcode(b.clone()).to_json();
        assert!(text.contains("\"-inf\""));
        round_trip(Document::Barcode(b));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Document::from_json("{"), Err(DocError::Format(_))));
        let unknown = r#"{"kind":"widget","version":"1","payload":{}}"#;
        assert!(matches!(Document::from_json(unknown), Err(DocError::Format(_))));
        let version = r#"{"kind":"barcode","version":"2","payload":{"bars":[]}}"#;
        assert!(matches!(Document::from_json(version), Err(DocError::Format(_))));
        let not_transitive = r#"{"kind":"proset","version":"1","payload":{"size":3,
            "relations":[[0,0],[1,1],[2,2],[0,1],[1,2]]}}"#;
        assert!(matches!(Document::from_json(not_transitive), Err(DocError::Invalid(_))));
        let bad_interval = r#"{"kind":"barcode","version":"1","payload":{"bars":[{"interval":["+inf",3],"multiplicity":1}]}}"#;
        assert!(matches!(Document::from_json(bad_interval), Err(DocError::Format(_))));
    }
}
