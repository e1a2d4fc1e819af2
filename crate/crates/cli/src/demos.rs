//! Worked examples compiled into the binary. Each one is also shipped as an
//! editable `.iw` file under `fixtures/`.

use std::fmt::Write;

pub struct Demo {
    pub name: &'static str,
    pub summary: &'static str,
    /// Whether `--n` selects a member of a family.
    pub takes_n: bool,
}

pub const DEMOS: &[Demo] = &[
    Demo {
        name: "paper-4.1",
        summary: "sl(2): the integrable left-invariant forms are the conic 2xz - y^2 = 0",
        takes_n: false,
    },
    Demo {
        name: "paper-4.2",
        summary: "finite Godbillon-Vey sequences and the wedge obstruction for i0 > 2",
        takes_n: false,
    },
    Demo {
        name: "paper-4.3",
        summary: "explicit family: n + 3 integrable forms on a rational normal curve inside I_W",
        takes_n: true,
    },
    Demo {
        name: "steiner-conic",
        summary: "Steiner's construction through five points of y^2 = xz",
        takes_n: false,
    },
    Demo {
        name: "heisenberg",
        summary: "Heisenberg algebra: the integrable forms are a double plane",
        takes_n: false,
    },
];

pub const SL2: &str = include_str!("../../../fixtures/sl2.iw");
pub const GV: &str = include_str!("../../../fixtures/gv.iw");
pub const STEINER_CONIC: &str = include_str!("../../../fixtures/steiner_conic.iw");
pub const HEISENBERG: &str = include_str!("../../../fixtures/heisenberg.iw");

/// Largest `n` accepted for the explicit family.
pub const MAX_FAMILY_N: usize = 8;

/// Scenario source for a demo; `n` defaults to 2 for the family.
pub fn source(name: &str, n: Option<usize>) -> Result<String, String> {
    let demo = DEMOS
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| format!("unknown demo `{name}`; try `demo --list`"))?;
    if n.is_some() && !demo.takes_n {
        return Err(format!("demo `{name}` does not take --n"));
    }
    Ok(match name {
        "paper-4.1" => SL2.to_string(),
        "paper-4.2" => GV.to_string(),
        "paper-4.3" => {
            let n = n.unwrap_or(2);
            if !(1..=MAX_FAMILY_N).contains(&n) {
                return Err(format!("--n must be between 1 and {MAX_FAMILY_N}, got {n}"));
            }
            family_scenario(n)
        }
        "steiner-conic" => STEINER_CONIC.to_string(),
        _ => HEISENBERG.to_string(),
    })
}

/// The family `w_i = f_i dx_i`, `f_i = (i+1) + i(x0 + .. + xn)`, together
/// with `w_{n+1} = w_0 + .. + w_n` and `w_{n+2} = w_0/2 + .. + w_n/(n+2)`.
pub fn family_scenario(n: usize) -> String {
    let sum = (0..=n).map(|k| format!("x{k}")).collect::<Vec<_>>().join(" + ");
    let forms = |range: std::ops::RangeInclusive<usize>| {
        range.map(|k| format!("w{k}")).collect::<Vec<_>>().join(", ")
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "# Explicit family with n = {n}: the forms w0 .. w{} are integrable and their",
        n + 2
    );
    let _ = writeln!(
        s,
        "# classes span a rational normal curve of integrable forms in P(W)."
    );
    let _ = writeln!(s, "ambient {};", n + 1);
    for i in 1..=n {
        if i == 1 {
            let _ = writeln!(s, "f1 = 2 + {sum};");
        } else {
            let _ = writeln!(s, "f{i} = {} + {i}*({sum});", i + 1);
        }
    }
    let _ = writeln!(s, "w0 = d(x0);");
    for i in 1..=n {
        let _ = writeln!(s, "w{i} = f{i}*d(x{i});");
    }
    let plain = (0..=n).map(|k| format!("w{k}")).collect::<Vec<_>>().join(" + ");
    let weighted = (0..=n)
        .map(|k| format!("w{k}/{}", k + 2))
        .collect::<Vec<_>>()
        .join(" + ");
    let _ = writeln!(s, "w{} = {plain};", n + 1);
    let _ = writeln!(s, "w{} = {weighted};", n + 2);
    let _ = writeln!(s, "W = space({});", forms(0..=n));
    let _ = writeln!(s, "veronese_web(W, {});", forms(0..=n + 2));
    s
}
