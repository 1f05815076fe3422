"""Morphing edge drawing toolkit."""

from ._core import (
    Config,
    ConfigError,
    Layout,
    LookupError,
    MedError,
    ParseError,
    RangeError,
    Schedule,
    UsageError,
    ValidationError,
    animation_svg,
    avoidable_crossings,
    compute_schedule,
    ease,
    ease_inverse,
    frame_svg,
    frame_times,
    load_layout,
    make_trial,
    parse_layout,
    parse_schedule,
    preset,
    relative_slowdown,
    run_cli,
    score_answer,
    validate_schedule,
)

__all__ = [
    "Config",
    "ConfigError",
    "Layout",
    "LookupError",
    "MedError",
    "ParseError",
    "RangeError",
    "Schedule",
    "UsageError",
    "ValidationError",
    "animation_svg",
    "avoidable_crossings",
    "compute_schedule",
    "ease",
    "ease_inverse",
    "frame_svg",
    "frame_times",
    "load_layout",
    "make_trial",
    "parse_layout",
    "parse_schedule",
    "preset",
    "relative_slowdown",
    "run_cli",
    "score_answer",
    "validate_schedule",
]
