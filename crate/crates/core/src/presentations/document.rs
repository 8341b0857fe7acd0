//! JSON interchange form of a presentation.

use serde::{Deserialize, Serialize};

use super::{Family, Presentation, Relator, SurfaceParams};
use crate::error::{Error, Result};
use crate::words::{parse_word, parse_word_in, Alphabet, GenSym};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub n: u32,
    pub g: u32,
    pub p: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorDoc {
    pub label: String,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub family: String,
    pub params: ParamsDoc,
    pub generators: Vec<String>,
    pub relators: Vec<RelatorDoc>,
}

impl Presentation {
    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            family: self.family.name().to_string(),
            params: ParamsDoc { n: self.params.n, g: self.params.g, p: self.params.p },
            generators: self.alphabet.symbols().iter().map(|g| g.to_string()).collect(),
            relators: self
                .relators
                .iter()
                .map(|r| RelatorDoc { label: r.label.clone(), word: r.word.to_string() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("presentation serializes")
    }

    /// Rebuild from a document. Relators are taken as written, not rebuilt
    /// from the family, so a hand-edited document keeps its edits.
    pub fn from_doc(doc: &PresentationDoc) -> Result<Presentation> {
        let family: Family = doc.family.parse()?;
        let ParamsDoc { n, g, p } = doc.params;
        let params = SurfaceParams {
            n,
            g,
            p,
            orientable: family.is_orientable(),
            closed: if family == Family::Custom { p == 0 } else { family.is_closed() },
        };
        if family != Family::Custom {
            family.validate(&params)?;
        }
        let symbols = doc
            .generators
            .iter()
            .map(|text| {
                let w = parse_word(text)?;
                match w.letters() {
                    [l] if !l.inv => Ok(l.gen),
                    _ => Err(Error::Document(format!("{text:?} is not a generator"))),
                }
            })
            .collect::<Result<Vec<GenSym>>>()?;
        let alphabet = Alphabet::new(symbols);
        let relators = doc
            .relators
            .iter()
            .map(|r| Ok(Relator { label: r.label.clone(), word: parse_word_in(&r.word, &alphabet)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation { family, params, alphabet, relators, notes: Vec::new() })
    }

    pub fn from_json(text: &str) -> Result<Presentation> {
        let doc: PresentationDoc =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        Presentation::from_doc(&doc)
    }
}
