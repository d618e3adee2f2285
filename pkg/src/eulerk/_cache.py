"""Thread-safe memo with single-initialization semantics."""

import threading


class KeyedCache:
    """Memo keyed by canonical group keys; one computation per key."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()
        self._pending = {}

    def get(self, key, compute):
        with self._lock:
            if key in self._data:
                return self._data[key]
            ev = self._pending.get(key)
            owner = ev is None
            if owner:
                ev = self._pending[key] = threading.Event()
        if not owner:
            ev.wait()
            with self._lock:
                if key in self._data:
                    return self._data[key]
            return self.get(key, compute)
        try:
            value = compute()
            with self._lock:
                self._data[key] = value
            return value
        finally:
            with self._lock:
                del self._pending[key]
            ev.set()

    def clear(self):
        with self._lock:
            self._data.clear()
