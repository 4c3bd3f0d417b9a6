import functools


def memoized_on(owner):
    """Cache ``func(*args)`` in a table stored on the object ``owner(*args)``.

    Modules and maps compare by identity, so repeated constructions must hand
    back the same object. The table lives in the owner's ``__dict__`` and is
    released together with it.
    """
    def decorator(func):
        attribute = f'_memo_{func.__name__}'

        @functools.wraps(func)
        def wrapper(*args):
            table = owner(*args).__dict__.setdefault(attribute, {})
            if args not in table:
                table[args] = func(*args)
            return table[args]
        return wrapper
    return decorator
