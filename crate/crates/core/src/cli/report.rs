use serde_json::{json, Map, Value};

use crate::algebra::{format_rational, Rational, RationalMatrix};
use crate::lefschetz::{CoincidenceVerdict, CoincidenceWitness, OracleOutcome};
use crate::simplicial::{Chain, HomologyClass, Simplex, SimplicialComplex};

/// Overall outcome of a command, which fixes the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// A value was computed; nothing is being certified.
    Computed,
    Certified,
    NotCertified,
    /// A nonzero certificate whose oracle found nothing.
    SoundnessViolation,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Computed | Outcome::Certified => 0,
            Outcome::NotCertified => 1,
            Outcome::SoundnessViolation => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Computed => "computed",
            Outcome::Certified => "certified",
            Outcome::NotCertified => "not-certified",
            Outcome::SoundnessViolation => "soundness-violation",
        }
    }

    pub fn from_flag(flag: bool) -> Self {
        if flag {
            Outcome::Certified
        } else {
            Outcome::NotCertified
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub result: Map<String, Value>,
    pub outcome: Outcome,
    pub summary: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            result: Map::new(),
            outcome: Outcome::Computed,
            summary: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.result.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.summary.push(text.into());
        self
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "result": Value::Object(self.result.clone()),
            "outcome": self.outcome.as_str(),
            "exit_code": self.outcome.exit_code(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.outcome.as_str());
        for line in &self.summary {
            out.push_str("  ");
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

pub fn rational(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn matrix(m: &RationalMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| rationals(m.row(r))).collect())
}

pub fn class(c: &HomologyClass) -> Value {
    json!({ "degree": c.degree, "coords": rationals(&c.coords) })
}

pub fn class_text(c: &HomologyClass) -> String {
    let coords: Vec<String> = c.coords.iter().map(format_rational).collect();
    format!("H_{}[{}]", c.degree, coords.join(", "))
}

pub fn simplex(c: &SimplicialComplex, s: &Simplex) -> Value {
    Value::Array(
        s.vertices()
            .iter()
            .map(|&v| Value::String(c.label(v).to_string()))
            .collect(),
    )
}

pub fn chain(c: &SimplicialComplex, ch: &Chain) -> Value {
    Value::Array(
        ch.terms()
            .map(|(s, q)| json!({ "simplex": simplex(c, s), "coefficient": rational(q) }))
            .collect(),
    )
}

pub fn witness(source: &SimplicialComplex, target: &SimplicialComplex, w: &CoincidenceWitness) -> Value {
    let image: Map<String, Value> = w
        .image
        .iter()
        .map(|(&v, q)| (target.label(v).to_string(), rational(q)))
        .collect();
    json!({
        "simplex": simplex(source, &w.simplex),
        "weights": rationals(&w.weights),
        "image": Value::Object(image),
    })
}

pub fn oracle(outcome: &OracleOutcome, source: &SimplicialComplex, target: &SimplicialComplex) -> Value {
    match outcome {
        OracleOutcome::Skipped => json!({ "status": "skipped" }),
        OracleOutcome::Confirmed(None) => json!({ "status": "confirmed" }),
        OracleOutcome::Confirmed(Some(w)) => json!({ "status": "confirmed", "witness": witness(source, target, w) }),
        OracleOutcome::Refuted => json!({ "status": "refuted" }),
    }
}

/// Certificate sweep, oracle and outcome, shared by every certificate command.
pub fn verdict(report: &mut Report, v: &CoincidenceVerdict, source: &SimplicialComplex, target: &SimplicialComplex) {
    let entries: Vec<Value> = v
        .entries
        .iter()
        .map(|e| {
            json!({
                "input": class(&e.input),
                "value": e.value.as_ref().map_or(Value::Null, class),
                "nonzero": e.is_nonzero(),
            })
        })
        .collect();
    report.set("criterion", v.criterion);
    report.set("entries", entries);
    report.set("nonzero", v.nonzero);
    report.set(
        "witness_input",
        v.witness_entry().map_or(Value::Null, |e| class(&e.input)),
    );
    report.set("oracle", oracle(&v.oracle, source, target));
    report.outcome = if !v.is_sound() {
        Outcome::SoundnessViolation
    } else {
        Outcome::from_flag(v.nonzero)
    };
    match v.witness_entry() {
        Some(e) => report.line(format!(
            "nonzero at input {} with value {}",
            class_text(&e.input),
            e.value.as_ref().map_or_else(|| "-".to_string(), class_text)
        )),
        None => report.line(format!("all {} evaluated classes vanish", v.entries.len())),
    };
    report.line(match &v.oracle {
        OracleOutcome::Skipped => "oracle: skipped".to_string(),
        OracleOutcome::Confirmed(Some(w)) => format!(
            "oracle: coincidence at {:?} with weights [{}]",
            w.simplex
                .vertices()
                .iter()
                .map(|&i| source.label(i))
                .collect::<Vec<_>>(),
            w.weights.iter().map(format_rational).collect::<Vec<_>>().join(", ")
        ),
        OracleOutcome::Confirmed(None) => "oracle: confirmed".to_string(),
        OracleOutcome::Refuted => "oracle: refuted".to_string(),
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rational as q};

    #[test]
    fn outcomes_and_codes() {
        let codes: Vec<i32> = [
            Outcome::Computed,
            Outcome::Certified,
            Outcome::NotCertified,
            Outcome::SoundnessViolation,
        ]
        .iter()
        .map(|o| o.exit_code())
        .collect();
        assert_eq!(codes, vec![0, 0, 1, 3]);
        assert_eq!(Outcome::from_flag(false).as_str(), "not-certified");
    }

    #[test]
    fn rationals_are_canonical_strings() {
        assert_eq!(rational(&q(4, -6)), Value::String("-2/3".into()));
        assert_eq!(rationals(&[int(0), int(3)]), json!(["0/1", "3/1"]));
        let m = RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        assert_eq!(matrix(&m), json!([["1/1", "0/1"], ["0/1", "-1/1"]]));
    }

    #[test]
    fn keys_keep_insertion_order() {
        let mut r = Report::new("betti");
        r.input("target", "t").set("z", 1).set("a", 2);
        let text = r.to_json();
        assert!(text.find("\"z\"").unwrap() < text.find("\"a\"").unwrap());
        assert_eq!(r.to_value()["exit_code"], 0);
    }
}
