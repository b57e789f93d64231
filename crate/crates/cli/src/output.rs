use serde::Serialize;

/// `x` with 12 significant digits: fixed notation for moderate magnitudes,
/// scientific otherwise.
pub fn sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    // round first so 9.99999999999995 is treated as 10
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    let exp = rounded.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        format!("{:.*}", (11 - exp) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}

/// Pretty JSON; numbers keep full precision.
pub fn print_json<T: Serialize>(value: &T) {
    match serde_json::to_string_pretty(value) {
        Ok(s) => println!("{s}"),
        Err(e) => eprintln!("error: cannot serialize report: {e}"),
    }
}
