use crate::algebra::BaseField;

/// One named check inside a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Assertion {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Assertion {
        Assertion { name: name.into(), pass, detail: detail.into() }
    }
}

/// Outcome of checking one of the torsion statements on an explicit curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub proposition: &'static str,
    pub genus: u32,
    pub field: BaseField,
    pub assertions: Vec<Assertion>,
    /// Computed quantities worth printing, as `(label, value)`.
    pub data: Vec<(String, String)>,
}

impl Verdict {
    pub fn verdict(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn datum(&self, label: &str) -> Option<&str> {
        self.data.iter().find(|(l, _)| l == label).map(|(_, v)| v.as_str())
    }
}
