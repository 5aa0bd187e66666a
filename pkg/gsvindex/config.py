#!/usr/bin/env python3
# File name   : config.py
# Description : Truncation and search defaults for the engine
# Author      : gsvindex developers
# Date        : 2026/10/16
from dataclasses import dataclass, replace as _replace

from .errors import ConfigError

# Engine defaults:
TRUNC_START        = 4      # lowest truncation order tried (raised to max degree + 2)
TRUNC_CAP          = 24     # highest truncation order before giving up
LIFT_SLACK         = None   # extra degrees when lifting kernels (None: equal to the order)
INFINITE_WINDOW    = 4      # strict increases needed before declaring infinite colength
COVER_RETRY_STEP   = 4      # multiplier degree added per exact-cover retry
COVER_RETRIES      = 3      # exact-cover retries before falling back to a local cover
NORMALIZE_RETRIES  = 20     # random coordinate changes tried before giving up
NORMALIZE_ENTRY    = 3      # coordinate-change entries are drawn from [-3, 3]
ORACLE_MAX_N       = 3      # the oracle refuses more variables than this
ORACLE_CAP         = 16     # highest oracle truncation order
ORACLE_STEP        = 2      # the oracle compares orders N and N + ORACLE_STEP
THREADED_ROUTES    = True   # run index routes in worker threads
SPAN_CACHE_SIZE    = 4096   # truncated ideal spans kept, least recently used dropped first
COVER_CACHE_SIZE   = 256    # residue covers kept


@dataclass(frozen=True)
class EngineConfig:
    trunc_start: int = TRUNC_START
    trunc_cap: int = TRUNC_CAP
    lift_slack: object = LIFT_SLACK
    infinite_window: int = INFINITE_WINDOW
    cover_retry_step: int = COVER_RETRY_STEP
    cover_retries: int = COVER_RETRIES
    normalize_retries: int = NORMALIZE_RETRIES
    normalize_entry: int = NORMALIZE_ENTRY
    oracle_max_n: int = ORACLE_MAX_N
    oracle_cap: int = ORACLE_CAP
    oracle_step: int = ORACLE_STEP
    threaded_routes: bool = THREADED_ROUTES

    def __post_init__(self):
        if self.trunc_start < 1:
            raise ConfigError('trunc_start must be positive')
        if self.trunc_cap < 1:
            raise ConfigError('trunc_cap must be positive')
        if self.lift_slack is not None and self.lift_slack < 0:
            raise ConfigError('lift_slack must be nonnegative')
        if self.oracle_step < 1:
            raise ConfigError('oracle_step must be positive')

    def replace(self, **changes):
        return _replace(self, **changes)

    def slack(self, order):
        if self.lift_slack is None:
            return order
        return self.lift_slack

    def start_order(self, max_degree):
        return max(self.trunc_start, max_degree + 2)


DEFAULT_CONFIG = EngineConfig()


def resolve(config):
    return DEFAULT_CONFIG if config is None else config
