use super::StepRecord;
use crate::error::{Error, Result};

/// `<i>: <from> --<rule>@<level>[,ll][,int][,surf]--> <to>`
pub fn format_step(i: usize, s: &StepRecord) -> String {
    let mut tag = format!("{}@{}", s.redex.rule, s.redex.level);
    if s.class.least_level {
        tag.push_str(",ll");
    }
    if s.class.internal {
        tag.push_str(",int");
    }
    if s.class.surface {
        tag.push_str(",surf");
    }
    format!("{i}: {} --{tag}--> {}", s.from, s.to)
}

/// One line per step, each terminated by a newline.
pub fn format_trace(trace: &[StepRecord]) -> Result<String> {
    let mut out = String::new();
    for (i, s) in trace.iter().enumerate() {
        if i > 0 && trace[i - 1].to != s.from {
            return Err(Error::InconsistentTrace(i));
        }
        out.push_str(&format_step(i, s));
        out.push('\n');
    }
    Ok(out)
}
