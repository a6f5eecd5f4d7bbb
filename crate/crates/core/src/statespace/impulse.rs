use std::fmt::Write as _;

use super::StateSpace;
use crate::error::{Error, Result};

/// Sampled response of every output to a unit impulse on one input.
#[derive(Clone, Debug, PartialEq)]
pub struct ImpulseRecord {
    /// 0-based input index.
    pub channel: usize,
    pub times: Vec<f64>,
    /// `outputs[i][k]` is output `i` at `times[k]`.
    pub outputs: Vec<Vec<f64>>,
}

impl ImpulseRecord {
    /// CSV with header `t,y1,...,ym`, 17 significant digits per value.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t");
        for i in 1..=self.outputs.len() {
            write!(out, ",y{i}").unwrap();
        }
        out.push('\n');
        for (k, t) in self.times.iter().enumerate() {
            write!(out, "{t:.16e}").unwrap();
            for y in &self.outputs {
                write!(out, ",{:.16e}", y[k]).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn mat_vec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

fn axpy(x: &[f64], h: f64, k: &[f64]) -> Vec<f64> {
    x.iter().zip(k).map(|(a, b)| a + h * b).collect()
}

/// Impulse on input `channel` (0-based), modeled as the initial state
/// `x(0⁺) = B e_channel`, integrated with fixed-step classical RK4 on
/// `[0, t_end]`. Samples are taken at `k·dt` for every `k·dt ≤ t_end`.
pub fn impulse_response(ss: &StateSpace, channel: usize, t_end: f64, dt: f64) -> Result<ImpulseRecord> {
    if !(dt > 0.0 && dt < t_end && t_end.is_finite()) {
        return Err(Error::InvalidInput(format!("need 0 < dt < t_end, got dt = {dt}, t_end = {t_end}")));
    }
    if channel >= ss.inputs() {
        return Err(Error::InvalidInput(format!("channel {channel} out of range for {} inputs", ss.inputs())));
    }
    let a = ss.a().to_f64();
    let c = ss.c().to_f64();
    let mut x: Vec<f64> = ss.b().to_f64().iter().map(|row| row[channel]).collect();
    let steps = ((t_end / dt) * (1.0 + 1e-12)).floor() as usize;
    let mut times = Vec::with_capacity(steps + 1);
    let mut outputs = vec![Vec::with_capacity(steps + 1); ss.outputs()];
    for k in 0..=steps {
        times.push(k as f64 * dt);
        for (out, y) in outputs.iter_mut().zip(mat_vec(&c, &x)) {
            out.push(y);
        }
        if k == steps {
            break;
        }
        let k1 = mat_vec(&a, &x);
        let k2 = mat_vec(&a, &axpy(&x, dt / 2.0, &k1));
        let k3 = mat_vec(&a, &axpy(&x, dt / 2.0, &k2));
        let k4 = mat_vec(&a, &axpy(&x, dt, &k3));
        for i in 0..x.len() {
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    Ok(ImpulseRecord { channel, times, outputs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::rational::{int, ratio};
    use crate::statespace::tests::worked_example;

    fn max_err(rec: &ImpulseRecord, f: impl Fn(f64) -> f64, relative: bool) -> f64 {
        rec.times
            .iter()
            .zip(&rec.outputs[0])
            .map(|(&t, &y)| {
                let e = (y - f(t)).abs();
                if relative {
                    e / f(t).abs()
                } else {
                    e
                }
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn worked_example_channels() {
        let ss = worked_example();
        let one = impulse_response(&ss, 0, 2.0, 1e-3).unwrap();
        assert_eq!(one.times.len(), 2001);
        assert!((one.times[2000] - 2.0).abs() < 1e-12);
        assert!(max_err(&one, |t| (-t).exp(), false) < 1e-8);
        let two = impulse_response(&ss, 1, 2.0, 1e-3).unwrap();
        assert!(max_err(&two, f64::cosh, true) < 1e-8);
    }

    #[test]
    fn scalar_systems_match_exponential() {
        for (a, b, c) in [(ratio(-3, 2), int(2), int(1)), (int(2), int(1), ratio(1, 3)), (int(0), int(1), int(-1))] {
            let ss = StateSpace::new(
                Matrix::from_rows(vec![vec![a.clone()]]).unwrap(),
                Matrix::from_rows(vec![vec![b.clone()]]).unwrap(),
                Matrix::from_rows(vec![vec![c.clone()]]).unwrap(),
            )
            .unwrap();
            let (af, gain) = (crate::rational::to_f64(&a), crate::rational::to_f64(&(c * b)));
            let rec = impulse_response(&ss, 0, 2.0, 1e-3).unwrap();
            assert!(max_err(&rec, |t| gain * (af * t).exp(), false) < 1e-8);
        }
    }

    #[test]
    fn zero_input_map_gives_zero_output() {
        let ss = StateSpace::new(Matrix::identity(2), Matrix::zeros(2, 1), Matrix::identity(2)).unwrap();
        let rec = impulse_response(&ss, 0, 1.0, 0.1).unwrap();
        assert!(rec.outputs.iter().flatten().all(|&y| y == 0.0));
    }

    #[test]
    fn rejects_bad_parameters() {
        let ss = worked_example();
        assert!(impulse_response(&ss, 2, 1.0, 0.1).is_err());
        assert!(impulse_response(&ss, 0, 1.0, 0.0).is_err());
        assert!(impulse_response(&ss, 0, 1.0, 2.0).is_err());
        assert!(impulse_response(&ss, 0, f64::NAN, 0.1).is_err());
    }

    #[test]
    fn csv_layout() {
        let rec = ImpulseRecord { channel: 0, times: vec![0.0, 0.5], outputs: vec![vec![1.0, 0.25], vec![0.0, -1.0]] };
        let csv = rec.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,y1,y2");
        assert_eq!(lines[1], "0.0000000000000000e0,1.0000000000000000e0,0.0000000000000000e0");
        assert_eq!(lines[2], "5.0000000000000000e-1,2.5000000000000000e-1,-1.0000000000000000e0");
        let parsed: f64 = lines[2].split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(parsed, 0.25);
    }
}
