"""
Configuration management for the simplex toolkit.
"""

import os
import json
import logging
import logging.handlers
from typing import Dict, Any, Optional
from dataclasses import dataclass, asdict, field
from dotenv import load_dotenv

logger = logging.getLogger(__name__)


@dataclass
class ComputeConfig:
    """Enumeration limits and parallelism."""
    # Largest n for 2^n cube-vertex and sign-vector sweeps
    dimension_cap: int = 24

    # Resource limits
    max_workers: int = 4
    block_bits: int = 12  # low-bit block size of cube sweeps
    batch_size: int = 20000  # candidates per batch in combination searches

    # Witness lists are truncated past this size (counts stay exact)
    max_witnesses: int = 4096

    # n = 6 searches
    allow_long: bool = False
    progress_interval: int = 1_000_000


@dataclass
class ToleranceConfig:
    """Floating-point tolerances for ball-side computations."""
    cross_check: float = 1e-9
    construction: float = 1e-12
    table: float = 5e-4
    legendre_inverse: float = 1e-12


@dataclass
class SamplingConfig:
    """Random sampling defaults (probes and Monte-Carlo oracles)."""
    rng_seed: int = 20210101
    monte_carlo_samples: int = 1_000_000
    rigidity_trials: int = 1000


@dataclass
class OutputConfig:
    """Report output settings."""
    format: str = "json"  # json, csv
    float_digits: int = 17
    output_directory: str = "results"


@dataclass
class LoggingConfig:
    """Logging configuration."""
    level: str = "INFO"
    log_directory: str = "logs"
    max_log_size_mb: int = 100
    backup_count: int = 5

    # Log to console (stderr)
    console_logging: bool = True
    file_logging: bool = False

    # Log format
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@dataclass
class SystemConfig:
    """Complete toolkit configuration."""
    compute: ComputeConfig = field(default_factory=ComputeConfig)
    tolerance: ToleranceConfig = field(default_factory=ToleranceConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    # Environment settings
    environment: str = "development"  # development, production
    debug: bool = False


def _as_bool(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


# environment variable -> (section, key, parser)
_ENV_VARIABLES = {
    'SIMPLEX_WORKERS': ('compute', 'max_workers', int),
    'SIMPLEX_DIMENSION_CAP': ('compute', 'dimension_cap', int),
    'SIMPLEX_BLOCK_BITS': ('compute', 'block_bits', int),
    'SIMPLEX_BATCH_SIZE': ('compute', 'batch_size', int),
    'SIMPLEX_ALLOW_LONG': ('compute', 'allow_long', _as_bool),
    'SIMPLEX_SEED': ('sampling', 'rng_seed', int),
    'SIMPLEX_MC_SAMPLES': ('sampling', 'monte_carlo_samples', int),
    'SIMPLEX_OUTPUT_FORMAT': ('output', 'format', str.lower),
    'SIMPLEX_FLOAT_DIGITS': ('output', 'float_digits', int),
    'LOG_LEVEL': ('logging', 'level', str.upper),
    'LOG_DIRECTORY': ('logging', 'log_directory', str),
}


class ConfigManager:
    """Manages toolkit configuration from defaults, a JSON file and the environment."""

    def __init__(self, config_file: Optional[str] = None, env_file: str = ".env"):
        """
        Initialize configuration manager.

        Args:
            config_file: Path to JSON configuration file
            env_file: Path to environment variables file
        """
        self.config_file = config_file
        self.env_file = env_file
        self._config = None

        if env_file and os.path.exists(env_file):
            load_dotenv(env_file)
            logger.debug(f"Loaded environment variables from {env_file}")

        self._load_config()

    def _load_config(self):
        """Load configuration from all sources."""
        config_dict = self._get_default_config()

        if self.config_file and os.path.exists(self.config_file):
            file_config = self._load_from_file(self.config_file)
            config_dict = self._merge_configs(config_dict, file_config)
            logger.debug(f"Loaded configuration from {self.config_file}")

        env_config = self._load_from_environment()
        config_dict = self._merge_configs(config_dict, env_config)

        self._config = SystemConfig(
            compute=ComputeConfig(**config_dict.get('compute', {})),
            tolerance=ToleranceConfig(**config_dict.get('tolerance', {})),
            sampling=SamplingConfig(**config_dict.get('sampling', {})),
            output=OutputConfig(**config_dict.get('output', {})),
            logging=LoggingConfig(**config_dict.get('logging', {})),
            environment=config_dict.get('environment', 'development'),
            debug=config_dict.get('debug', False),
        )

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration values."""
        return asdict(SystemConfig())

    def _load_from_file(self, file_path: str) -> Dict[str, Any]:
        """Load configuration from JSON file."""
        try:
            with open(file_path, 'r') as f:
                return json.load(f)
        except Exception as e:
            logger.error(f"Failed to load config file {file_path}: {e}")
            return {}

    def _load_from_environment(self) -> Dict[str, Any]:
        """Load configuration from environment variables."""
        env_config: Dict[str, Any] = {}

        for variable, (section, key, parse) in _ENV_VARIABLES.items():
            if variable not in os.environ:
                continue
            try:
                env_config.setdefault(section, {})[key] = parse(os.environ[variable])
            except ValueError:
                logger.warning(f"Ignoring malformed {variable}={os.environ[variable]!r}")

        if 'ENVIRONMENT' in os.environ:
            env_config['environment'] = os.environ['ENVIRONMENT']
        if 'DEBUG' in os.environ:
            env_config['debug'] = _as_bool(os.environ['DEBUG'])

        return env_config

    def _merge_configs(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        """Merge two configuration dictionaries."""
        result = base.copy()

        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._merge_configs(result[key], value)
            else:
                result[key] = value

        return result

    @property
    def config(self) -> SystemConfig:
        """Get the current configuration."""
        return self._config

    def save_config(self, file_path: str):
        """Save current configuration to a file."""
        try:
            with open(file_path, 'w') as f:
                json.dump(asdict(self._config), f, indent=2)

            logger.info(f"Configuration saved to {file_path}")

        except Exception as e:
            logger.error(f"Failed to save config to {file_path}: {e}")
            raise

    def validate_config(self) -> bool:
        """Validate the current configuration."""
        compute = self._config.compute
        if compute.max_workers < 1:
            logger.error("Max workers must be at least 1")
            return False
        if compute.dimension_cap < 1:
            logger.error("Dimension cap must be at least 1")
            return False
        if not 0 <= compute.block_bits <= 20:
            logger.error("Block bits must be between 0 and 20")
            return False
        if compute.batch_size < 1:
            logger.error("Batch size must be at least 1")
            return False
        if self._config.output.format not in ("json", "csv"):
            logger.error(f"Unknown output format {self._config.output.format!r}")
            return False
        if self._config.sampling.monte_carlo_samples < 1:
            logger.error("Monte-Carlo sample count must be positive")
            return False
        if getattr(logging, self._config.logging.level, None) is None:
            logger.error(f"Unknown log level {self._config.logging.level!r}")
            return False

        logger.debug("Configuration validation passed")
        return True


def configure_logging(settings: Optional[LoggingConfig] = None) -> None:
    """Configure root logging from a LoggingConfig (stderr, optional rotating file)."""
    settings = settings or get_config().logging
    handlers = []
    if settings.console_logging:
        handlers.append(logging.StreamHandler())
    if settings.file_logging:
        os.makedirs(settings.log_directory, exist_ok=True)
        handlers.append(logging.handlers.RotatingFileHandler(
            os.path.join(settings.log_directory, "simplex_toolkit.log"),
            maxBytes=settings.max_log_size_mb * 1024 * 1024,
            backupCount=settings.backup_count,
        ))
    logging.basicConfig(
        level=getattr(logging, settings.level, logging.INFO),
        format=settings.format,
        handlers=handlers or [logging.NullHandler()],
        force=True,
    )


# Global configuration manager instance
config_manager = ConfigManager()


def get_config() -> SystemConfig:
    """Get the current system configuration."""
    return config_manager.config


def load_config(config_file: Optional[str] = None, env_file: str = ".env") -> SystemConfig:
    """Load configuration from specified sources."""
    global config_manager
    config_manager = ConfigManager(config_file, env_file)
    return config_manager.config


def validate_config() -> bool:
    """Validate the current configuration."""
    return config_manager.validate_config()
