import functools
import logging

logger = logging.getLogger(__name__)


class SimpleCache:
    """Simple in-memory cache for results of pure functions"""

    def __init__(self, max_entries=4096):
        self.cache = {}
        self.max_entries = max_entries

    def get(self, key):
        return self.cache.get(key)

    def set(self, key, value):
        if len(self.cache) >= self.max_entries:
            # Drop the oldest entry (dicts keep insertion order)
            self.cache.pop(next(iter(self.cache)))
        self.cache[key] = value

    def clear(self):
        self.cache.clear()

    def __len__(self):
        return len(self.cache)


# Global cache instance
cache = SimpleCache()


def cached(func):
    """Decorator for caching results of pure functions with hashable arguments"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            cache_key = (func.__module__, func.__qualname__, args, tuple(sorted(kwargs.items())))
            hash(cache_key)
        except TypeError as e:
            # Fallback if caching fails (unhashable args)
            logger.warning(f"Caching failed for {func.__name__}: {e}")
            return func(*args, **kwargs)

        result = cache.get(cache_key)
        if result is not None:
            return result

        result = func(*args, **kwargs)
        cache.set(cache_key, result)
        return result

    return wrapper
