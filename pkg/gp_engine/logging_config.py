# Path and File Name : gp_engine/logging_config.py
# Author: gp_engine maintainers
# Details of functionality of this file: Logging configuration for gp_engine

"""
Logging configuration for gp_engine.
"""

import logging
import sys

from .config import Config


def setup_logging(config: Config) -> logging.Logger:
    """Configure the gp_engine logger; stdout stays reserved for results."""

    logger = logging.getLogger("gp_engine")
    logger.setLevel(getattr(logging, config.log_level, logging.INFO))

    # Remove existing handlers
    logger.handlers.clear()
    logger.propagate = False

    # Console handler
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, config.log_level, logging.INFO))
    console_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    console_handler.setFormatter(console_formatter)
    logger.addHandler(console_handler)

    # File handler
    if config.log_dir is not None:
        file_handler = logging.FileHandler(config.log_dir / "gp_engine.log")
        file_handler.setLevel(logging.DEBUG)
        file_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s'
        )
        file_handler.setFormatter(file_formatter)
        logger.addHandler(file_handler)
        logger.setLevel(logging.DEBUG)

    return logger
