"""
Functions for splitting index ranges between worker processes
"""


__all__ = ['mp_split_range', 'chunk_range']



def mp_split_range(total, n):
    """
    Split ``range(total)`` into at most `n` contiguous ``(start, stop)``
    pairs of nearly equal length. Boundaries are Python ints so totals
    beyond the machine word are fine.

    :param total: Length of the range.
    :type total: int

    :param n: Number of splits.
    :type n: int

    :returns: List of ``(start, stop)`` tuples covering the range in order.

    **Examples**
    >>> mp_split_range(10, 3)
    [(0, 4), (4, 7), (7, 10)]
    """
    total, n = int(total), max(1, int(n))
    if total <= 0:
        return []
    n = min(n, total)
    q, r = divmod(total, n)
    out, start = [], 0
    for i in range(n):
        stop = start + q + (1 if i < r else 0)
        out.append((start, stop))
        start = stop
    return out


def chunk_range(start, stop, size):
    """
    Yields ``(a, b)`` pieces of ``[start, stop)`` of length at most `size`.
    """
    size = max(1, int(size))
    a = start
    while a < stop:
        b = min(stop, a + size)
        yield a, b
        a = b
