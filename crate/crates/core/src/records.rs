//! Line-oriented record format.
//!
//! One object per line, six space-separated fields:
//!
//! ```text
//! p r k code boundary classes
//! ```
//!
//! `p r k` are the Raney parameters of the count the object belongs to,
//! `code` is the comma-joined canonical code, `boundary` is the word over
//! `+`/`-` and `classes` has one character per vertex in preorder (`o` for a
//! source, `i` for a sink). Coral diagrams carry no orientation and write `.`
//! in the last two fields.

use std::fmt;
use std::str::FromStr;

use crate::coral::CoralDiagram;
use crate::error::{Error, Result};
use crate::trees::CanonicalCode;
use crate::webs::{BoundaryWord, OrientedTreeWeb, VertexClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub p: u32,
    pub r: u32,
    pub k: u32,
    pub code: CanonicalCode,
    pub boundary: Option<BoundaryWord>,
    pub classes: Option<Vec<VertexClass>>,
}

impl Record {
    pub fn coral(d: &CoralDiagram) -> Self {
        Self {
            p: d.p(),
            r: d.r(),
            k: d.k(),
            code: d.code().clone(),
            boundary: None,
            classes: None,
        }
    }

    /// A web counted by `R(p, r, k)`.
    pub fn web(p: u32, r: u32, k: u32, web: &OrientedTreeWeb) -> Self {
        Self {
            p,
            r,
            k,
            code: web.code().clone(),
            boundary: Some(web.boundary().clone()),
            classes: Some(web.classes().to_vec()),
        }
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.p, self.r, self.k, self.code)?;
        match &self.boundary {
            Some(b) => write!(f, " {b}")?,
            None => write!(f, " .")?,
        }
        match &self.classes {
            Some(cs) => {
                f.write_str(" ")?;
                cs.iter().try_for_each(|c| write!(f, "{}", c.as_char()))
            }
            None => write!(f, " ."),
        }
    }
}

impl FromStr for Record {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split(' ').collect();
        let [p, r, k, code, boundary, classes] = fields[..] else {
            return Err(Error::Parse(format!(
                "expected 6 fields, got {}",
                fields.len()
            )));
        };
        let int = |s: &str| {
            s.parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
        };
        let code: CanonicalCode = code.parse()?;
        let boundary = match boundary {
            "." => None,
            b => Some(b.parse::<BoundaryWord>()?),
        };
        let classes = match classes {
            "." => None,
            cs => Some(
                cs.chars()
                    .map(|c| {
                        VertexClass::from_char(c)
                            .ok_or_else(|| Error::Parse(format!("bad vertex class {c:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        if let Some(cs) = &classes {
            if cs.len() != code.vertex_count() {
                return Err(Error::Parse("one class per vertex expected".into()));
            }
        }
        Ok(Self {
            p: int(p)?,
            r: int(r)?,
            k: int(k)?,
            code,
            boundary,
            classes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coral::enumerate_coral_tuple;
    use crate::webs::enumerate_a2_tree_webs_constant;
    use proptest::prelude::*;

    #[test]
    fn coral_record_line() {
        let d = &enumerate_coral_tuple(2, 2, 1)[0];
        assert_eq!(Record::coral(d).to_string(), "2 2 1 3,0,0,2,0,0 . .");
    }

    #[test]
    fn web_record_line() {
        let web = &enumerate_a2_tree_webs_constant(0)[0];
        assert_eq!(
            Record::web(4, 2, 0, web).to_string(),
            "4 2 0 3,0,0,0 +++ oiii"
        );
    }

    #[test]
    fn rejects_bad_lines() {
        assert!("2 2 1 3,0,0,2,0,0 .".parse::<Record>().is_err());
        assert!("2 2 1 3,0,0 . .".parse::<Record>().is_err());
        assert!("2 2 x 2,0,0 . .".parse::<Record>().is_err());
        assert!("2 2 1 2,0,0 ++ ox".parse::<Record>().is_err());
        assert!("2 2 1 2,0,0 ++ oi".parse::<Record>().is_err());
    }

    proptest! {
        #[test]
        fn lines_round_trip(k in 0u32..4, pick in 0usize..64) {
            let webs = enumerate_a2_tree_webs_constant(k);
            let line = Record::web(4, 2, k, &webs[pick % webs.len()]).to_string();
            prop_assert_eq!(line.parse::<Record>().unwrap().to_string(), line);

            let corals = enumerate_coral_tuple(3, 2, k);
            let line = Record::coral(&corals[pick % corals.len()]).to_string();
            prop_assert_eq!(line.parse::<Record>().unwrap().to_string(), line);
        }
    }
}
