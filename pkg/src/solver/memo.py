#!/usr/bin/env python3
"""
Influence - Memo Table

Transposition table keyed by the alive bit set of a position. Values are the
two Left scores; the Right scores follow from constant sum. Concurrent writers
may evaluate the same position twice, so a write of an existing key is allowed
only when it carries the same value.

Author: Influence Contributors
License: MIT
"""

import threading
from typing import Any, Dict, Hashable, List, Optional, Tuple

from graph_core.errors import AuditError

Entry = Tuple[int, int]


class MemoTable:
    """
    Thread-safe map from position key to (s_l1, s_l2), with hit/miss counters.
    """

    def __init__(self) -> None:
        self._entries: Dict[Hashable, Entry] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._entries

    def get(self, key: Hashable) -> Optional[Entry]:
        """Lookup that updates the counters."""
        with self._lock:
            entry = self._entries.get(key)
            if entry is None:
                self.misses += 1
            else:
                self.hits += 1
        return entry

    def peek(self, key: Hashable) -> Optional[Entry]:
        """Lookup without touching the counters."""
        return self._entries.get(key)

    def put(self, key: Hashable, value: Entry) -> Entry:
        """
        Store a value; an existing entry must be identical.

        Raises:
            AuditError: if the key already holds a different value
        """
        with self._lock:
            current = self._entries.setdefault(key, value)
        if current != value:
            raise AuditError(f"memo entry {key!r} changed from {current} to {value}")
        return current

    def items(self) -> List[Tuple[Hashable, Entry]]:
        """Snapshot of every entry."""
        with self._lock:
            return list(self._entries.items())

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.hits = self.misses = 0

    def get_stats(self) -> Dict[str, Any]:
        lookups = self.hits + self.misses
        return {
            'entries': len(self._entries),
            'hits': self.hits,
            'misses': self.misses,
            'hit_rate': self.hits / lookups if lookups else 0.0,
        }
