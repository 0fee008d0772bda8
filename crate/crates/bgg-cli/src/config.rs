//! Resource-bound resolution: flags win over the config file, the config
//! file wins over environment variables, which win over the defaults.

use std::path::Path;

use bgg_core::{Bounds, Error};

const ENV_WEYL: &str = "BGG_MAX_WEYL";
const ENV_DIM: &str = "BGG_MAX_DIM";
const ENV_CE: &str = "BGG_MAX_CE";

pub fn resolve_bounds(
    config: Option<&Path>,
    flag_weyl: Option<usize>,
    flag_dim: Option<usize>,
    flag_ce: Option<usize>,
) -> Result<Bounds, Error> {
    let mut bounds = Bounds::default();
    if let Some(v) = env_usize(ENV_WEYL)? {
        bounds.weyl_max = v;
    }
    if let Some(v) = env_usize(ENV_DIM)? {
        bounds.dim_max = v;
    }
    if let Some(v) = env_usize(ENV_CE)? {
        bounds.ce_max = v;
    }
    if let Some(path) = config {
        apply_config_file(path, &mut bounds)?;
    }
    if let Some(v) = flag_weyl {
        bounds.weyl_max = v;
    }
    if let Some(v) = flag_dim {
        bounds.dim_max = v;
    }
    if let Some(v) = flag_ce {
        bounds.ce_max = v;
    }
    Ok(bounds)
}

fn env_usize(name: &str) -> Result<Option<usize>, Error> {
    match std::env::var(name) {
        Err(_) => Ok(None),
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidInput(format!("{name} is not a number: `{s}`"))),
    }
}

fn apply_config_file(path: &Path, bounds: &mut Bounds) -> Result<(), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read config {}: {e}", path.display())))?;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::InvalidInput(format!(
                "config line {} is not key=value: `{line}`",
                lineno + 1
            )));
        };
        let value: usize = value.trim().parse().map_err(|_| {
            Error::InvalidInput(format!("config value on line {} is not a number", lineno + 1))
        })?;
        match key.trim() {
            "max_weyl" => bounds.weyl_max = value,
            "max_dim" => bounds.dim_max = value,
            "max_ce" => bounds.ce_max = value,
            other => {
                return Err(Error::InvalidInput(format!("unknown config key `{other}`")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_flags_over_file() {
        let dir = std::env::temp_dir().join("bggcli-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bounds.conf");
        std::fs::write(&path, "max_dim = 50\nmax_weyl=123\n").unwrap();
        let b = resolve_bounds(Some(&path), None, Some(77), None).unwrap();
        assert_eq!(b.weyl_max, 123); // from file
        assert_eq!(b.dim_max, 77); // flag beats file
        let b2 = resolve_bounds(Some(&path), None, None, None).unwrap();
        assert_eq!(b2.dim_max, 50);
    }

    #[test]
    fn bad_config_rejected() {
        let dir = std::env::temp_dir().join("bggcli-config-test2");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.conf");
        std::fs::write(&path, "nonsense\n").unwrap();
        assert!(resolve_bounds(Some(&path), None, None, None).is_err());
    }
}
