"""Machine-readable reports with a byte-deterministic serialization.

The JSON report is the source of truth for acceptance checks; the printed
human tables carry the same numbers.  Serialization is canonical: sorted
keys, integers and strings only, a trailing newline, and no floats.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field


def _reject_floats(obj):
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(obj, dict):
        return {str(k): _reject_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_reject_floats(v) for v in obj]
    return obj


@dataclass
class Report:
    command: str
    spec_sha256: str = ""
    seed: int = 0
    window: tuple[int, int] | None = None
    max_width: int | None = None
    verdicts: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def add(self, check_report):
        self.verdicts.append(check_report.as_dict())

    def extend(self, check_reports):
        for r in check_reports:
            self.add(r)

    @property
    def failures(self) -> list:
        return [v for v in self.verdicts if not v["pass"]]

    def as_dict(self) -> dict:
        from . import __version__

        out = {
            "tool": "ncsym",
            "version": __version__,
            "command": self.command,
            "spec_sha256": self.spec_sha256,
            "seed": self.seed,
            "verdicts": self.verdicts,
            "tables": self.tables,
            "summary": {
                "checks": len(self.verdicts),
                "failures": len(self.failures),
            },
        }
        if self.window is not None:
            out["window"] = list(self.window)
        if self.max_width is not None:
            out["max_width"] = self.max_width
        out.update(self.meta)
        return out

    def to_json_bytes(self) -> bytes:
        payload = _reject_floats(self.as_dict())
        return (json.dumps(payload, sort_keys=True, indent=1) + "\n").encode()


def sha256_of_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()
