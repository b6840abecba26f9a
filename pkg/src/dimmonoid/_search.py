"""Bounded decomposition search over a finite generator list.

Targets may contain ints, INF, or ``None`` (coordinate unconstrained).
"""
from .extnat import INF


def decompose(target, gens, cap):
    """Return ``{generator: multiplicity}`` summing to ``target`` or None.

    Every multiplicity is at most ``cap``.  A finite target coordinate must
    be hit exactly; an INF coordinate must receive INF from some generator
    used with positive multiplicity; None coordinates are ignored.
    """
    k = len(target)
    fin = [i for i in range(k) if target[i] is not None and target[i] is not INF]
    infc = [i for i in range(k) if target[i] is INF]
    full_mask = (1 << len(infc)) - 1

    usable = []
    for g in dict.fromkeys(tuple(g) for g in gens):
        if any(g[i] is INF for i in fin):
            continue
        if any(g[i] > target[i] for i in fin):
            continue
        cover = 0
        for bit, i in enumerate(infc):
            if g[i] is INF:
                cover |= 1 << bit
        fpart = tuple(g[i] for i in fin)
        if not any(fpart) and cover == 0:
            continue  # contributes nothing that is checked
        usable.append((g, fpart, cover))
    # generators touching finite coordinates first: they prune hardest
    usable.sort(key=lambda u: not any(u[1]))

    remaining0 = tuple(target[i] for i in fin)
    memo = {}

    def search(idx, remaining, covered):
        if not any(remaining) and covered == full_mask:
            return {}
        if idx == len(usable):
            return None
        key = (idx, remaining, covered)
        if key in memo:
            return memo[key]
        g, fpart, cover = usable[idx]
        result = None
        if any(fpart):
            limit = min(cap, min(r // c for r, c in zip(remaining, fpart) if c))
        else:
            limit = 1 if cover & ~covered else 0
        for mult in range(limit, -1, -1):
            rem = remaining if mult == 0 else tuple(r - mult * c for r, c in zip(remaining, fpart))
            cov = covered | cover if mult else covered
            sub = search(idx + 1, rem, cov)
            if sub is not None:
                result = dict(sub)
                if mult:
                    result[g] = mult
                break
        memo[key] = result
        return result

    return search(0, remaining0, 0)
