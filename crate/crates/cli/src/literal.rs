//! Complex literals on the command line: `RE`, `RE+IMi`, or `RE-IMi` with
//! decimal floats (scientific notation allowed), no spaces.

use legendre_munu::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    let bad = || format!("'{s}' is not a complex literal (expected RE, RE+IMi, or RE-IMi)");
    if let Some(body) = t.strip_suffix('i') {
        let bytes = body.as_bytes();
        // The split sign is the last '+'/'-' that is neither leading nor an
        // exponent sign.
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let c = bytes[i];
            if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
                split = Some(i);
                break;
            }
        }
        let i = split.ok_or_else(bad)?;
        let re: f64 = body[..i].parse().map_err(|_| bad())?;
        let im_mag: f64 = body[i + 1..].parse().map_err(|_| bad())?;
        if body[i + 1..].starts_with(['+', '-']) {
            return Err(bad());
        }
        let im = if bytes[i] == b'-' { -im_mag } else { im_mag };
        if !(re.is_finite() && im.is_finite()) {
            return Err(bad());
        }
        Ok(Complex64::new(re, im))
    } else {
        let re: f64 = t.parse().map_err(|_| bad())?;
        if !re.is_finite() {
            return Err(bad());
        }
        Ok(Complex64::new(re, 0.0))
    }
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a real literal"))?;
    if !v.is_finite() {
        return Err(format!("'{s}' is not finite"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use legendre_munu::verifier::format_complex;

    #[test]
    fn parses_the_three_forms() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("-1.5e-3").unwrap(), Complex64::new(-1.5e-3, 0.0));
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(parse_complex("1.25-0.5i").unwrap(), Complex64::new(1.25, -0.5));
        assert_eq!(
            parse_complex("-1e-3-2.5e-4i").unwrap(),
            Complex64::new(-1e-3, -2.5e-4)
        );
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "i", "2i", "1+i", "1++2i", "1+2j", "abc", "1 + 2i", "nan"] {
            assert!(parse_complex(bad).is_err(), "accepted '{bad}'");
        }
    }

    #[test]
    fn round_trips_formatted_output() {
        for c in [
            Complex64::new(0.5493061443340548, 0.0),
            Complex64::new(-1.25, 3.5e-7),
            Complex64::new(2.0, -0.0784),
            Complex64::new(0.0, -1.0),
        ] {
            let s = format_complex(c);
            let back = parse_complex(&s).unwrap();
            assert_eq!(back, c, "'{s}' round-tripped to {back}");
            assert_eq!(format_complex(back), s);
        }
    }
}
