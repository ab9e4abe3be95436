"""Run configuration, output envelopes, and deterministic serialization.

Every command emits one :class:`OutputEnvelope`.  JSON output keeps full
``repr`` precision so payloads round-trip bit-exactly; text and CSV output
format every float with exactly ``precision`` significant digits, with a
``.`` decimal separator regardless of locale.  Nothing time- or
environment-dependent is ever written, so identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import DomainError, ParseError
from .paradox import Unbounded

__all__ = [
    "UnitSystem",
    "OutputFormat",
    "RunConfig",
    "OutputEnvelope",
    "CONFIG_ENV_VAR",
    "TOOL_VERSION",
    "VOLUMETRIC_DENSITY_DEFINITION",
    "format_significant",
    "load_config_file",
    "resolve_config",
    "render_envelope",
]

TOOL_VERSION = "0.1.0"

CONFIG_ENV_VAR = "CASIMIR_KIT_CONFIG"

# The geometry's only volume is plate area times gap; this definition is
# stamped into every output's metadata so the convention is never implicit.
VOLUMETRIC_DENSITY_DEFINITION = "volumetric_energy_density = |energy_per_area| / gap"


class UnitSystem(str, Enum):
    SI = "si"
    NATURAL = "natural"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


@dataclass(frozen=True)
class RunConfig:
    unit_system: UnitSystem = UnitSystem.SI
    precision: int = 10
    output_format: OutputFormat = OutputFormat.JSON
    default_N: int = 1000

    def __post_init__(self) -> None:
        if not 4 <= self.precision <= 17:
            raise DomainError(
                f"precision must lie in [4, 17], got {self.precision!r}")
        if self.default_N < 1:
            raise DomainError(f"default_N must be at least 1, got {self.default_N!r}")


_CONFIG_KEYS = ("units", "precision", "format", "default_n")


def load_config_file(path: str | Path) -> dict[str, str]:
    """Read ``key = value`` lines; ``#`` starts a comment, later keys win."""
    values: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{path}:{lineno}: expected 'key = value', got '{raw.strip()}'")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower()
        if key not in _CONFIG_KEYS:
            raise ParseError(f"{path}:{lineno}: unknown config key '{key}'")
        values[key] = value
    return values


def resolve_config(
        file_values: dict[str, str] | None = None,
        units: str | None = None,
        precision: int | None = None,
        output_format: str | None = None,
        default_N: int | None = None,
) -> RunConfig:
    """Merge defaults, config-file values, and explicit flags (flags win)."""
    file_values = file_values or {}

    def _pick(flag, key, cast):
        if flag is not None:
            return cast(flag)
        if key in file_values:
            try:
                return cast(file_values[key])
            except (ValueError, KeyError) as exc:
                raise ParseError(
                    f"bad config value for '{key}': {file_values[key]!r}") from exc
        return None

    kwargs = {}
    value = _pick(units, "units", UnitSystem)
    if value is not None:
        kwargs["unit_system"] = value
    value = _pick(precision, "precision", int)
    if value is not None:
        kwargs["precision"] = value
    value = _pick(output_format, "format", OutputFormat)
    if value is not None:
        kwargs["output_format"] = value
    value = _pick(default_N, "default_n", int)
    if value is not None:
        kwargs["default_N"] = value
    return RunConfig(**kwargs)


def default_config_file() -> dict[str, str]:
    """Config values from the file named by CASIMIR_KIT_CONFIG, if set."""
    path = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    return load_config_file(path)


def format_significant(value: float, digits: int) -> str:
    """Exactly ``digits`` significant digits in scientific notation."""
    return f"{value:.{digits - 1}e}"


def _jsonable(obj):
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Unbounded):
        return "infinity"
    if isinstance(obj, dict):
        return {key: _jsonable(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(item) for item in obj]
    return obj


@dataclass(frozen=True)
class OutputEnvelope:
    """One command's inputs, results, and provenance metadata."""

    command: str
    inputs: dict
    results: dict
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "results": _jsonable(self.results),
            "metadata": _jsonable(self.metadata),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def make_metadata(constants_source: str, sign_convention: str) -> dict:
    """Metadata block carried by every envelope.

    Always records the sign convention and the volumetric-density
    definition: the two conventions this tool fixes explicitly.
    """
    return {
        "constants_source": constants_source,
        "sign_convention": sign_convention,
        "volumetric_density_definition": VOLUMETRIC_DENSITY_DEFINITION,
        "tool_version": TOOL_VERSION,
    }


def _format_cell(value, precision: int) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format_significant(value, precision)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Unbounded):
        return "infinity"
    return str(value)


def _result_table(envelope: OutputEnvelope) -> list[dict]:
    rows = envelope.results.get("rows")
    if rows is not None:
        return list(rows)
    scalar = {key: val for key, val in envelope.results.items() if key != "rows"}
    return [scalar]


def render_csv(envelope: OutputEnvelope, precision: int) -> str:
    """Header row plus data rows; headers match the JSON field names."""
    table = _result_table(envelope)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = list(table[0].keys())
    writer.writerow(header)
    for row in table:
        writer.writerow([_format_cell(row[key], precision) for key in header])
    return buffer.getvalue()


def render_text(envelope: OutputEnvelope, precision: int) -> str:
    lines = [f"command: {envelope.command}"]

    def _section(title: str, mapping: dict) -> None:
        lines.append(f"{title}:")
        for key, value in mapping.items():
            if key == "rows":
                continue
            lines.append(f"  {key} = {_format_cell(value, precision)}")

    _section("inputs", envelope.inputs)
    _section("results", envelope.results)
    rows = envelope.results.get("rows")
    if rows:
        header = list(rows[0].keys())
        lines.append("rows:")
        lines.append("  " + ",".join(header))
        for row in rows:
            lines.append("  " + ",".join(_format_cell(row[key], precision)
                                         for key in header))
    _section("metadata", envelope.metadata)
    return "\n".join(lines) + "\n"


def render_envelope(envelope: OutputEnvelope, config: RunConfig) -> str:
    if config.output_format is OutputFormat.JSON:
        return envelope.to_json()
    if config.output_format is OutputFormat.CSV:
        return render_csv(envelope, config.precision)
    return render_text(envelope, config.precision)
