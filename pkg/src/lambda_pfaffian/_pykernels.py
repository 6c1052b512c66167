"""Pure-Python matching enumeration kernel.

Mirrors ``_kernels.pyx`` exactly; used when the compiled module is absent.
"""


def matching_table(k):
    """All perfect matchings of positions ``0..2k-1`` with their statistics.

    Returns a tuple of ``(flat, cross, nest)`` where ``flat`` lists the pairs
    ``(a0, b0, a1, b1, ...)`` in canonical order.  The smallest free position
    is paired with each larger free position in increasing order.
    """
    n = 2 * k
    used = [False] * n
    lows = []
    highs = []
    out = []

    def rec(cross, nest):
        a = 0
        while a < n and used[a]:
            a += 1
        if a == n:
            flat = []
            for lo, hi in zip(lows, highs):
                flat.append(lo)
                flat.append(hi)
            out.append((tuple(flat), cross, nest))
            return
        used[a] = True
        lows.append(a)
        for b in range(a + 1, n):
            if used[b]:
                continue
            # Every placed pair starts before a.
            dc = dn = 0
            for d in highs:
                if d > a:
                    if d < b:
                        dc += 1
                    else:
                        dn += 1
            used[b] = True
            highs.append(b)
            rec(cross + dc, nest + dn)
            highs.pop()
            used[b] = False
        lows.pop()
        used[a] = False

    rec(0, 0)
    return tuple(out)


def lambda_sign_histogram(k):
    """Map ``cross + nest`` to the signed count ``sum (-1)^cross`` over matchings of 2k points."""
    hist = {}
    for _, c, nst in matching_table(k):
        key = c + nst
        hist[key] = hist.get(key, 0) + (-1 if c & 1 else 1)
    return {k: v for k, v in hist.items() if v}
