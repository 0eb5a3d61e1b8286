"""
Configuration package initialization.
"""

from .settings import (
    ConfigManager,
    ComputeConfig,
    ToleranceConfig,
    SamplingConfig,
    OutputConfig,
    LoggingConfig,
    SystemConfig,
    config_manager,
    configure_logging,
    get_config,
    load_config,
    validate_config
)

__all__ = [
    'ConfigManager',
    'ComputeConfig',
    'ToleranceConfig',
    'SamplingConfig',
    'OutputConfig',
    'LoggingConfig',
    'SystemConfig',
    'config_manager',
    'configure_logging',
    'get_config',
    'load_config',
    'validate_config'
]
