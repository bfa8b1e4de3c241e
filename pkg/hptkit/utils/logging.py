"""Logging utilities."""

import logging
import random


class SeededSampleFilter(logging.Filter):
    """Filter that passes a reproducible random sample of log records."""

    def __init__(self, probability: float, seed: int = 0):
        self.probability = probability
        self.generator = random.Random(seed)
        super().__init__()

    def filter(self, _: logging.LogRecord) -> bool:
        return self.generator.random() < self.probability


def sampled_logger(name: str, probability: float, seed: int = 0) -> logging.Logger:
    """A logger that emits only a seeded sample of its records."""
    logger = logging.getLogger(f"{name}.sampled")
    logger.filters = [SeededSampleFilter(probability=probability, seed=seed)]
    return logger
