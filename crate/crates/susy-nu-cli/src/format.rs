//! Deterministic `%.17g`-style rendering for numeric output columns.

/// Formats with 17 significant digits, fixed notation for moderate
/// exponents and scientific otherwise, trailing zeros trimmed.
pub fn g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".to_string() } else { "-inf".to_string() };
    }
    let sci = format!("{:.16e}", x);
    let epos = sci.find('e').expect("exponent marker");
    let exp: i32 = sci[epos + 1..].parse().expect("exponent digits");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        let mut out = format!("{:.*}", decimals, x);
        if out.contains('.') {
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.pop();
            }
        }
        out
    } else {
        let mut mantissa = sci[..epos].to_string();
        if mantissa.contains('.') {
            while mantissa.ends_with('0') {
                mantissa.pop();
            }
            if mantissa.ends_with('.') {
                mantissa.pop();
            }
        }
        format!("{}e{}{:02}", mantissa, if exp >= 0 { "+" } else { "-" }, exp.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::g17;

    #[test]
    fn renders_round_and_fractional_values() {
        assert_eq!(g17(0.0), "0");
        assert_eq!(g17(5.0), "5");
        assert_eq!(g17(-12.0), "-12");
        assert_eq!(g17(0.25), "0.25");
        // 1e-7 is not exactly representable; 17 significant digits expose
        // the stored double, exactly as printf's %.17g does.
        assert_eq!(g17(1e-7), "9.9999999999999995e-08");
        assert_eq!(g17(2.5e20), "2.5e+20");
    }

    #[test]
    fn keeps_seventeen_significant_digits() {
        let x = std::f64::consts::PI;
        let s = g17(x);
        assert_eq!(s.parse::<f64>().unwrap(), x);
        let y = 1.0 + 1e-15;
        assert_eq!(g17(y).parse::<f64>().unwrap(), y);
    }
}
