use std::path::Path;

use serde::{Deserialize, Serialize};

/// Run settings, read from a TOML file and overridden by flags.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub window: usize,
    /// Largest `dimⁿ` evaluated deterministically.
    pub cap: u64,
    pub seed: u64,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
    /// Monte Carlo samples per `n!`.
    pub samples_factor: usize,
    pub arity7: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            window: 6,
            cap: uas_core::pi::DEFAULT_CAP,
            seed: 11,
            threads: 0,
            samples_factor: 3,
            arity7: false,
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let cfg: Config = toml::from_str(text).map_err(|e| e.to_string())?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        let max = if self.arity7 { 7 } else { 6 };
        if self.window > max {
            return Err(format!("window {} exceeds {max}", self.window));
        }
        if self.arity7 && !cfg!(feature = "arity7") {
            return Err("built without the arity7 feature".into());
        }
        if self.samples_factor == 0 {
            return Err("samples_factor must be positive".into());
        }
        Ok(())
    }

    /// Installs the thread pool; later calls keep the first pool.
    pub fn install_threads(&self) {
        if self.threads > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(self.threads)
                .build_global();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_files_keep_defaults() {
        let c = Config::parse("seed = 5\nwindow = 5\n").unwrap();
        assert_eq!(c.seed, 5);
        assert_eq!(c.window, 5);
        assert_eq!(c.cap, Config::default().cap);
        assert!(Config::parse("window = 9").is_err());
        assert!(Config::parse("colour = 1").is_err());
        assert!(Config::parse("samples_factor = 0").is_err());
    }
}
