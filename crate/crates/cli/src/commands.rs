use std::path::PathBuf;

use bcover::{
    act, canonical_target, canonicalize, classify_all, curve_monodromy, default_cap,
    default_max_cosets, disk_liftable_generators, hurwitz_orbit, interval_type, is_liftable,
    is_regular_curve, restrict, restricted_total_monodromy, schreier_generators, stabilizer_index,
    systems_liftable_equivalent, todd_coxeter, verify_disk_generators, BraidWord,
    ComponentSignature, CurveRef, CycleType, IntervalRef, MonodromySequence, Permutation,
    RestrictionSpec, Transposition,
};
use serde_json::{json, Map, Value};

use crate::doc::{self, CoveringDocument, TransportDocument};
use crate::report::{CommandReport, Status};
use crate::{Args, InputError};

pub const COMMANDS: [&str; 17] = [
    "invariants",
    "canon",
    "target",
    "equivalent",
    "act",
    "lift",
    "interval-type",
    "tcgens",
    "curve",
    "regular",
    "systems",
    "restrict",
    "orbit",
    "schreier",
    "classify",
    "todd-coxeter",
    "verify-theorem-c",
];

type Fields = Map<String, Value>;
type Outcome = Result<Fields, InputError>;

/// Runs `command` and packages the outcome; never panics on bad input.
pub fn dispatch(command: &str, args: &Args) -> CommandReport {
    let mut ctx = Context {
        args,
        inputs: Map::new(),
    };
    let outcome = ctx.run(command);
    let mut report = CommandReport {
        command: command.to_string(),
        status: Status::Ok,
        inputs: ctx.inputs,
        result: None,
        cap: None,
        error: None,
    };
    match outcome {
        Ok(result) => report.result = Some(result),
        Err(e) => match e.cap() {
            Some(cap) => {
                report.status = Status::Inconclusive;
                report.cap = Some(cap);
            }
            None => {
                report.status = Status::InvalidInput;
                report.error = Some(e.to_string());
            }
        },
    }
    report
}

fn read_document(source: &str) -> Result<String, InputError> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(source.to_string());
    }
    std::fs::read_to_string(source).map_err(|e| InputError::Io {
        path: PathBuf::from(source),
        source: e,
    })
}

fn pair(t: Transposition) -> Value {
    json!([t.a(), t.b()])
}

fn covering_value(seq: &MonodromySequence) -> Value {
    serde_json::to_value(CoveringDocument::from_sequence(seq)).expect("plain data")
}

fn pairs(seq: &MonodromySequence) -> Value {
    Value::Array(seq.entries().iter().map(|&t| pair(t)).collect())
}

fn images(p: &Permutation) -> Value {
    json!(p.images())
}

fn omega(c: &CycleType) -> Value {
    json!(c.parts())
}

fn word(w: &BraidWord) -> Value {
    json!(w.letters())
}

fn signature(sig: &ComponentSignature) -> Value {
    Value::Array(
        sig.blocks()
            .iter()
            .map(|b| json!({"sheets": b.sheets, "branch_points": b.branch_points}))
            .collect(),
    )
}

fn fields(pairs: Vec<(&str, Value)>) -> Fields {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

struct Context<'a> {
    args: &'a Args,
    inputs: Fields,
}

impl Context<'_> {
    fn echo(&mut self, key: &str, value: Value) {
        self.inputs.insert(key.to_string(), value);
    }

    fn missing(flag: &str) -> InputError {
        InputError::new(format!("missing --{flag}"))
    }

    fn covering_from(
        &mut self,
        flag: &str,
        source: Option<&String>,
    ) -> Result<MonodromySequence, InputError> {
        let source = source.ok_or_else(|| Self::missing(flag))?;
        let seq = doc::parse_covering(&read_document(source)?)?;
        self.echo(flag, covering_value(&seq));
        Ok(seq)
    }

    fn covering(&mut self) -> Result<MonodromySequence, InputError> {
        let args = self.args;
        self.covering_from("covering", args.covering.as_ref())
    }

    fn braids(&mut self, strands: usize) -> Result<Vec<BraidWord>, InputError> {
        let words = self
            .args
            .braid
            .iter()
            .map(|b| doc::parse_braid(strands, b))
            .collect::<Result<Vec<_>, _>>()?;
        self.echo("braid", Value::Array(words.iter().map(word).collect()));
        Ok(words)
    }

    fn braid(&mut self, strands: usize) -> Result<BraidWord, InputError> {
        let text = match self.args.braid.as_slice() {
            [one] => one,
            [] => return Err(Self::missing("braid")),
            _ => return Err(InputError::new("expected a single --braid")),
        };
        let w = doc::parse_braid(strands, text)?;
        self.echo("braid", word(&w));
        Ok(w)
    }

    fn n(&mut self) -> Result<usize, InputError> {
        let n = self.args.n.ok_or_else(|| Self::missing("n"))?;
        self.echo("n", json!(n));
        Ok(n)
    }

    fn degree(&mut self) -> Result<u32, InputError> {
        let d = self.args.degree.ok_or_else(|| Self::missing("degree"))?;
        self.echo("degree", json!(d));
        Ok(d)
    }

    fn cap_or(&mut self, default: usize) -> usize {
        let cap = self.args.cap.unwrap_or(default);
        self.echo("cap", json!(cap));
        cap
    }

    fn transport(
        &mut self,
        flag: &str,
        source: Option<&String>,
    ) -> Result<TransportDocument, InputError> {
        let source = source.ok_or_else(|| Self::missing(flag))?;
        let t = doc::parse_transport(&read_document(source)?)?;
        self.echo(flag, serde_json::to_value(&t).expect("plain data"));
        Ok(t)
    }

    fn curve(&mut self, n: usize) -> Result<CurveRef, InputError> {
        let args = self.args;
        let t = self.transport("curve", args.curve.as_ref())?;
        Ok(CurveRef::new(n, t.base, t.braid(n)?)?)
    }

    fn system(
        &mut self,
        flag: &str,
        source: Option<&String>,
        n: usize,
    ) -> Result<Vec<CurveRef>, InputError> {
        let source = source.ok_or_else(|| Self::missing(flag))?;
        let docs = doc::parse_system(&read_document(source)?)?;
        self.echo(flag, serde_json::to_value(&docs).expect("plain data"));
        docs.iter()
            .map(|t| Ok(CurveRef::new(n, t.base, t.braid(n)?)?))
            .collect()
    }

    fn restriction(&mut self) -> Result<RestrictionSpec, InputError> {
        let spec = if let Some(source) = &self.args.restriction {
            doc::parse_restriction(&read_document(source)?)?
        } else {
            let indices = self
                .args
                .indices
                .as_ref()
                .ok_or_else(|| Self::missing("indices"))?;
            let base = doc::parse_base(self.args.base.as_deref().unwrap_or("start"))?;
            let indices = doc::parse_csv(indices)?
                .into_iter()
                .map(|i| i as usize)
                .collect();
            RestrictionSpec::new(indices, base)?
        };
        self.echo(
            "restriction",
            json!({"indices": spec.indices(), "base": doc::base_name(spec.base())}),
        );
        Ok(spec)
    }

    fn run(&mut self, command: &str) -> Outcome {
        match command {
            "invariants" => self.invariants(),
            "canon" => self.canon(),
            "target" => self.target(),
            "equivalent" => self.equivalent(),
            "act" => self.act(),
            "lift" => self.lift(),
            "interval-type" => self.interval_type(),
            "tcgens" => self.tcgens(),
            "curve" => self.curve_cmd(),
            "regular" => self.regular(),
            "systems" => self.systems(),
            "restrict" => self.restrict(),
            "orbit" => self.orbit(),
            "schreier" => self.schreier(),
            "classify" => self.classify(),
            "todd-coxeter" => self.todd_coxeter(),
            "verify-theorem-c" => self.verify_disk_generators(),
            other => Err(InputError::new(format!("unknown command {other:?}"))),
        }
    }

    fn invariants(&mut self) -> Outcome {
        let s = self.covering()?;
        let inv = s.surface_invariants();
        let surfaces: Vec<Value> = inv
            .components
            .iter()
            .map(|c| json!({"sheets": c.sheets, "chi": c.euler, "boundary": c.boundary, "genus": c.genus}))
            .collect();
        Ok(fields(vec![
            ("chi", json!(inv.euler)),
            ("boundary", json!(inv.boundary)),
            ("omega", omega(&s.omega_class())),
            ("components", json!(inv.components.len())),
            ("disk", json!(s.is_connected() && s.is_disk()?)),
            ("surfaces", Value::Array(surfaces)),
        ]))
    }

    fn canon(&mut self) -> Outcome {
        let s = self.covering()?;
        let r = canonicalize(&s)?;
        Ok(fields(vec![
            ("relabel", images(&r.relabel)),
            ("moves", word(&r.moves.to_braid(s.len())?)),
            ("canonical", pairs(&r.canonical)),
        ]))
    }

    fn target(&mut self) -> Outcome {
        let d = self.degree()?;
        let n = self.n()?;
        let parts = doc::parse_csv(self.args.omega.as_deref().unwrap_or(""))?;
        let omega_type = CycleType::new(d, parts)?;
        self.echo("omega", omega(&omega_type));
        let t = canonical_target(d, n, &omega_type)?;
        Ok(fields(vec![("monodromy", pairs(&t))]))
    }

    fn equivalent(&mut self) -> Outcome {
        let a = self.covering()?;
        let args = self.args;
        let b = self.covering_from("other", args.other.as_ref())?;
        Ok(fields(vec![("equivalent", json!(a.is_equivalent(&b)?))]))
    }

    fn act(&mut self) -> Outcome {
        let s = self.covering()?;
        let w = self.braid(s.len())?;
        Ok(fields(vec![("monodromy", pairs(&act(&s, &w)?))]))
    }

    fn lift(&mut self) -> Outcome {
        let s = self.covering()?;
        let w = self.braid(s.len())?;
        Ok(fields(vec![("liftable", json!(is_liftable(&s, &w)?))]))
    }

    fn interval_type(&mut self) -> Outcome {
        let s = self.covering()?;
        let n = s.len();
        let args = self.args;
        let t = self.transport("interval", args.interval.as_ref())?;
        let x = IntervalRef::new(n, t.base, t.braid(n)?)?;
        let k = interval_type(&s, &x)?;
        Ok(fields(vec![
            ("type", json!(k)),
            ("half_twist", word(&x.braid())),
            ("liftable_power", word(&x.braid_power(k as u32))),
        ]))
    }

    fn tcgens(&mut self) -> Outcome {
        let n = self.n()?;
        if n == 0 {
            return Err(InputError::new("n must be at least 1"));
        }
        let gens = disk_liftable_generators(n);
        Ok(fields(vec![(
            "generators",
            Value::Array(gens.iter().map(word).collect()),
        )]))
    }

    fn curve_cmd(&mut self) -> Outcome {
        let s = self.covering()?;
        let c = self.curve(s.len())?;
        Ok(fields(vec![("monodromy", pair(curve_monodromy(&s, &c)?))]))
    }

    fn regular(&mut self) -> Outcome {
        let s = self.covering()?;
        let c = self.curve(s.len())?;
        Ok(fields(vec![("regular", json!(is_regular_curve(&s, &c)?))]))
    }

    fn systems(&mut self) -> Outcome {
        let s = self.covering()?;
        let n = s.len();
        let args = self.args;
        let a = self.system("system-a", args.system_a.as_ref(), n)?;
        let b = self.system("system-b", args.system_b.as_ref(), n)?;
        Ok(fields(vec![(
            "equivalent",
            json!(systems_liftable_equivalent(&s, &a, &b)?),
        )]))
    }

    fn restrict(&mut self) -> Outcome {
        let s = self.covering()?;
        let spec = self.restriction()?;
        let r = restrict(&s, &spec)?;
        Ok(fields(vec![
            ("monodromy", pairs(&r)),
            (
                "total_monodromy",
                images(&restricted_total_monodromy(&s, &spec)?),
            ),
            ("components", signature(&r.components())),
        ]))
    }

    fn orbit(&mut self) -> Outcome {
        let s = self.covering()?;
        let cap = self.cap_or(default_cap(s.degree(), s.len()).max(1));
        let orbit = hurwitz_orbit(&s, cap)?;
        Ok(fields(vec![
            ("size", json!(orbit.len())),
            (
                "elements",
                Value::Array(orbit.elements().iter().map(pairs).collect()),
            ),
        ]))
    }

    fn schreier(&mut self) -> Outcome {
        let s = self.covering()?;
        let cap = self.cap_or(default_cap(s.degree(), s.len()).max(1));
        let gens = schreier_generators(&s, cap)?;
        Ok(fields(vec![
            ("index", json!(stabilizer_index(&s, cap)?)),
            ("generators", Value::Array(gens.iter().map(word).collect())),
        ]))
    }

    fn classify(&mut self) -> Outcome {
        let d = self.degree()?;
        let n = self.n()?;
        let cap = self.cap_or(default_cap(d, n).max(1));
        let classes = classify_all(d, n, cap)?;
        let rows: Vec<Value> = classes
            .iter()
            .map(|c| {
                json!({
                    "representative": pairs(&c.representative),
                    "count": c.count,
                    "omega": omega(&c.omega),
                    "connected": c.connected,
                })
            })
            .collect();
        Ok(fields(vec![("classes", Value::Array(rows))]))
    }

    fn todd_coxeter(&mut self) -> Outcome {
        let n = self.n()?;
        let words = self.braids(n)?;
        let cap = self.cap_or(default_max_cosets(n));
        let (index, _) = todd_coxeter(n, &words, cap)?;
        Ok(fields(vec![("index", json!(index))]))
    }

    fn verify_disk_generators(&mut self) -> Outcome {
        let n = self.n()?;
        let cap = self.cap_or(default_max_cosets(n));
        let r = verify_disk_generators(n, cap)?;
        Ok(fields(vec![
            (
                "generators",
                Value::Array(r.generators.iter().map(word).collect()),
            ),
            (
                "non_liftable",
                r.non_liftable.as_ref().map_or(Value::Null, word),
            ),
            ("orbit_index", json!(r.orbit_index)),
            ("tc_index", json!(r.tc_index)),
            ("pass", json!(r.pass)),
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: &str = r#"{"degree":4,"monodromy":[[1,2],[2,3],[3,4]]}"#;

    fn args(command: &str) -> Args {
        Args {
            command: command.into(),
            ..Args::default()
        }
    }

    fn run(a: &Args) -> CommandReport {
        dispatch(&a.command, a)
    }

    #[test]
    fn lift_example() {
        let mut a = args("lift");
        a.covering = Some(P3.into());
        a.braid = vec!["2 1 1 -2".into()];
        let r = run(&a);
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.result.unwrap()["liftable"], json!(true));
    }

    #[test]
    fn invariants_example() {
        let mut a = args("invariants");
        a.covering = Some(P3.into());
        let res = run(&a).result.unwrap();
        assert_eq!(res["chi"], json!(1));
        assert_eq!(res["boundary"], json!(1));
        assert_eq!(res["omega"], json!([4]));
        assert_eq!(res["components"], json!(1));
        assert_eq!(res["disk"], json!(true));
    }

    #[test]
    fn verify_example() {
        let mut a = args("verify-theorem-c");
        a.n = Some(3);
        let res = run(&a).result.unwrap();
        assert_eq!(res["orbit_index"], json!(16));
        assert_eq!(res["tc_index"], json!(16));
        assert_eq!(res["pass"], json!(true));
    }

    #[test]
    fn equivalent_to_hurwitz_image() {
        let mut a = args("equivalent");
        a.covering = Some(P3.into());
        let image = act(
            &MonodromySequence::disk(3),
            &BraidWord::new(3, vec![1]).unwrap(),
        )
        .unwrap();
        a.other = Some(doc::emit_covering(&image));
        assert_eq!(run(&a).result.unwrap()["equivalent"], json!(true));
    }

    #[test]
    fn inconclusive_and_invalid() {
        let mut a = args("todd-coxeter");
        a.n = Some(3);
        a.cap = Some(50);
        let r = run(&a);
        assert_eq!(r.status, Status::Inconclusive);
        assert_eq!(r.cap, Some(50));
        assert!(r.result.is_none());

        let mut a = args("lift");
        a.covering = Some(r#"{"degree":3,"monodromy":[[3,3]]}"#.into());
        a.braid = vec!["1".into()];
        let r = run(&a);
        assert_eq!(r.status, Status::InvalidInput);
        assert!(r.error.is_some() && r.result.is_none());

        assert_eq!(run(&args("nonsense")).status, Status::InvalidInput);
    }

    #[test]
    fn every_command_is_dispatched() {
        for c in COMMANDS {
            let r = run(&args(c));
            assert_ne!(
                r.error.as_deref(),
                Some(format!("unknown command {c:?}").as_str())
            );
        }
    }
}
