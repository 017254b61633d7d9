import pathlib
import re
import typing as t

import numpy as np
from loguru import logger

from ..core.config import settings
from ..core.exceptions import ParseError
from ..models import BaseValue

PathLike = str | pathlib.Path

Item = t.TypeVar("Item", bound=BaseValue)

_HEADER = re.compile(r"^(?P<magic>QHA-[A-Z]+) v(?P<version>\d+)(?P<tokens>( \S+)*)$")


class BaseRepository(t.Generic[Item]):
    """Text persistence of one value type.

    File layout: a header ``<MAGIC> v1 key=value ...`` followed by one
    comma-separated row per entry, ``index..., re, im``, in row-major order.
    Floats are written with 17 significant digits so reading back is exact.
    """

    magic: str = ""
    version: int = 1
    index_arity: int = 1

    # subclasses describe their shape and payload
    def header_tokens(self, item: Item) -> dict[str, t.Any]:
        raise NotImplementedError

    def values_of(self, item: Item) -> np.ndarray:
        raise NotImplementedError

    def build(self, tokens: dict[str, str], values: np.ndarray, path: str) -> Item:
        raise NotImplementedError

    def shape_from(self, tokens: dict[str, str], path: str) -> tuple[int, ...]:
        raise NotImplementedError

    def dumps(self, item: Item) -> str:
        tokens = " ".join(f"{k}={v}" for k, v in self.header_tokens(item).items())
        lines = [f"{self.magic} v{self.version} {tokens}"]
        values = self.values_of(item)
        fmt = settings.FLOAT_FORMAT
        for index in np.ndindex(values.shape):
            v = complex(values[index])
            lines.append(
                ",".join([*map(str, index), fmt % v.real, fmt % v.imag])
            )
        return "\n".join(lines) + "\n"

    def save(self, item: Item, path: PathLike) -> pathlib.Path:
        path = pathlib.Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps(item), encoding="utf-8")
        logger.debug(f"wrote {self.magic} to {path}")
        return path

    def loads(self, text: str, path: str = "<string>") -> Item:
        lines = text.splitlines()
        while lines and not lines[-1].strip():
            lines.pop()
        if not lines:
            raise ParseError("empty file, expected a header", path=path, line=1)
        tokens = self.parse_header(lines[0], path)
        shape = self.shape_from(tokens, path)
        rows = lines[1:]
        expected = int(np.prod(shape))
        if len(rows) != expected:
            line = len(lines) + 1 if len(rows) < expected else expected + 2
            raise ParseError(
                f"expected {expected} data rows, found {len(rows)}", path=path, line=line
            )
        values = np.empty(shape, dtype=complex)
        for offset, (index, row) in enumerate(zip(np.ndindex(shape), rows)):
            values[index] = self.parse_row(row, index, path, offset + 2)
        return self.build(tokens, values, path)

    def load(self, path: PathLike) -> Item:
        path = pathlib.Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise ParseError(f"cannot read file: {e}", path=str(path))
        item = self.loads(text, str(path))
        logger.debug(f"read {self.magic} from {path}")
        return item

    def parse_header(self, line: str, path: str) -> dict[str, str]:
        match = _HEADER.match(line.strip())
        if not match or match["magic"] != self.magic:
            raise ParseError(
                f"expected header '{self.magic} v{self.version} ...', got {line.strip()!r}",
                path=path,
                line=1,
            )
        if int(match["version"]) != self.version:
            raise ParseError(
                f"unsupported {self.magic} version {match['version']}", path=path, line=1
            )
        tokens: dict[str, str] = {}
        for token in match["tokens"].split():
            key, sep, value = token.partition("=")
            if not sep:
                raise ParseError(f"malformed header token {token!r}", path=path, line=1)
            if key in tokens:
                raise ParseError(f"repeated header key {key!r}", path=path, line=1)
            tokens[key] = value
        return tokens

    def parse_row(
        self, row: str, index: tuple[int, ...], path: str, line: int
    ) -> complex:
        fields = [f.strip() for f in row.split(",")]
        if len(fields) != self.index_arity + 2:
            raise ParseError(
                f"expected {self.index_arity + 2} comma-separated fields, got {len(fields)}",
                path=path,
                line=line,
            )
        try:
            got = tuple(int(f) for f in fields[: self.index_arity])
            re_, im_ = float(fields[-2]), float(fields[-1])
        except ValueError as e:
            raise ParseError(f"bad number: {e}", path=path, line=line)
        if got != index:
            raise ParseError(
                f"expected index {','.join(map(str, index))}, got {','.join(map(str, got))}",
                path=path,
                line=line,
            )
        if not (np.isfinite(re_) and np.isfinite(im_)):
            raise ParseError("non-finite value", path=path, line=line)
        return complex(re_, im_)

    @staticmethod
    def int_token(tokens: dict[str, str], key: str, path: str) -> int:
        try:
            return int(tokens[key])
        except (KeyError, ValueError):
            raise ParseError(f"header needs an integer {key}=", path=path, line=1)

    @staticmethod
    def float_token(tokens: dict[str, str], key: str, path: str) -> float:
        try:
            return float(tokens[key])
        except (KeyError, ValueError):
            raise ParseError(f"header needs a number {key}=", path=path, line=1)
