//! Parameter lists: comma-separated values and inclusive `start:stop:step`
//! ranges, freely mixed (`0,0.1:0.3:0.1`).

const RANGE_SLACK: f64 = 1e-9;

// Steps accumulate binary rounding error; snapping to 12 decimals keeps
// 0.1 * 3 printing as 0.3 in file names and CSV keys.
fn snap(x: f64) -> f64 {
    let s = (x * 1e12).round() / 1e12;
    if s == 0.0 {
        0.0
    } else {
        s
    }
}

fn number(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s:?} is not finite"))
    }
}

pub fn parse_values(spec: &str) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim) {
        if part.is_empty() {
            return Err(format!("empty entry in {spec:?}"));
        }
        let fields: Vec<&str> = part.split(':').collect();
        match fields.as_slice() {
            [v] => out.push(number(v)?),
            [start, stop, step] => {
                let (start, stop, step) = (number(start)?, number(stop)?, number(step)?);
                if step <= 0.0 {
                    return Err(format!("step of {part:?} must be positive"));
                }
                if stop < start {
                    return Err(format!("range {part:?} runs backwards"));
                }
                let mut i = 0u32;
                loop {
                    let v = start + f64::from(i) * step;
                    if v > stop + RANGE_SLACK {
                        break;
                    }
                    out.push(snap(v));
                    i += 1;
                }
            }
            _ => return Err(format!("{part:?} is neither a value nor start:stop:step")),
        }
    }
    Ok(out)
}
