"""
Persistent memo cache for character values.
Keeps one in-process table of chi(mu, lambda) values and optionally warm-loads
and saves it as a newline-delimited cache file.
"""

import threading
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from logger import get_logger

from utils.report_io import format_cache_line, parse_cache_line
from .errors import CacheFormatError

logger = get_logger(__name__)

CACHE_FORMAT_VERSION = 1
CACHE_HEADER = f"# evchar character cache v{CACHE_FORMAT_VERSION}"

CacheKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


class CharacterCache:
    """Thread-safe memo of character values keyed by (mu, lambda)."""

    def __init__(self):
        self._values: Dict[CacheKey, int] = {}
        self._lock = threading.Lock()

    def get(self, key: CacheKey) -> Optional[int]:
        return self._values.get(key)

    def put(self, key: CacheKey, value: int) -> None:
        # Concurrent writers only ever store the same value for a key.
        with self._lock:
            self._values.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: CacheKey) -> bool:
        return key in self._values

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
        logger.debug("Cleared character cache")

    def load(self, path: Union[str, Path]) -> int:
        """
        Warm-load values from a cache file.

        A missing file is a cold start and a header with another format
        version is ignored with a warning. Corrupt records abort.

        Args:
            path: Cache file location

        Returns:
            Number of records loaded

        Raises:
            CacheFormatError: if a record cannot be decoded
        """
        path = Path(path)
        if not path.exists():
            logger.info(f"No character cache at {path}, starting cold")
            return 0

        with open(path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()

        if not lines or lines[0].strip() != CACHE_HEADER:
            found = lines[0].strip() if lines else "<empty file>"
            logger.warning(f"Ignoring character cache {path}: header {found!r} is not {CACHE_HEADER!r}")
            return 0

        loaded: Dict[CacheKey, int] = {}
        for number, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            try:
                mu, lam, value = parse_cache_line(line)
            except ValueError as e:
                raise CacheFormatError(number, line, str(e)) from None
            loaded[(tuple(mu), tuple(lam))] = value

        with self._lock:
            for key, value in loaded.items():
                self._values.setdefault(key, value)
        logger.info(f"Loaded {len(loaded)} character values from {path}")
        return len(loaded)

    def save(self, path: Union[str, Path]) -> int:
        """
        Write every cached value to a cache file, sorted for reproducible bytes.

        Returns:
            Number of records written
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        if path.exists():
            with open(path, "r", encoding="utf-8") as f:
                found = f.readline().strip()
            if found and found != CACHE_HEADER:
                logger.warning(f"Replacing character cache {path}: header {found!r} is not {CACHE_HEADER!r}")
        with self._lock:
            items = sorted(self._values.items())
        with open(path, "w", encoding="utf-8") as f:
            f.write(CACHE_HEADER + "\n")
            for (mu, lam), value in items:
                f.write(format_cache_line(mu, lam, value) + "\n")
        logger.info(f"Saved {len(items)} character values to {path}")
        return len(items)
