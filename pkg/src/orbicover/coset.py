"""Todd-Coxeter coset enumeration over the trivial subgroup.

HLT strategy: every live coset, in order, is scanned against every relator
(defining new cosets to complete each scan), then its row is filled.
Coincidences are merged immediately with a union-find queue and the dead
rows are recycled, so memory follows the live coset count.

Words are tuples of nonzero ints, ``g + 1`` for generator ``g`` and
``-(g + 1)`` for its inverse.  Column ``2g`` holds the action of generator
``g`` and column ``2g + 1`` the action of its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_MAX_COSETS = 2_000_000


class CosetLimitExceeded(Exception):
    pass


def letter_column(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


@dataclass
class Enumeration:
    """Outcome of one enumeration.

    ``closed`` is True when the table closed; then ``order`` is the number of
    live cosets (the group order) and ``perms[g]`` is the permutation of
    ``range(order)`` induced by generator ``g``.  When the coset limit was hit
    ``closed`` is False and nothing is concluded about the group.
    """

    closed: bool
    order: int | None
    defined: int
    max_live: int
    perms: list[np.ndarray] = field(default_factory=list, repr=False)

    @property
    def status(self) -> str:
        return f"CLOSED({self.order})" if self.closed else "EXCEEDED"


def _enumerate(ngens: int, scans, max_cosets: int):
    """HLT loop.  Returns (live cosets in order, rows, defined, max_live), or
    None for the defined/max_live pair when the limit is hit.

    Live cosets form a doubly linked list in definition order, the order the
    cursor visits them.  Rows freed by a coincidence are recycled by later
    definitions; a merge keeps the coset with the older definition stamp so
    scanned cosets are not needlessly replaced by unscanned ones.
    """
    ncols = 2 * ngens
    blank = [-1] * ncols
    rows: list[list[int]] = [blank[:]]
    parent = [0]
    birth = [0]
    nxt = [-1]
    prv = [-1]
    free: list[int] = []
    state = {"tail": 0, "live": 1, "defined": 1, "max_live": 1}

    def define(c: int, x: int) -> int:
        live = state["live"]
        if live >= max_cosets:
            raise CosetLimitExceeded
        stamp = state["defined"]
        if free:
            d = free.pop()
            rows[d] = blank[:]
            parent[d] = d
            birth[d] = stamp
        else:
            d = len(rows)
            rows.append(blank[:])
            parent.append(d)
            birth.append(stamp)
            nxt.append(-1)
            prv.append(-1)
        tail = state["tail"]
        nxt[tail] = d
        prv[d] = tail
        nxt[d] = -1
        state["tail"] = d
        state["live"] = live + 1
        state["defined"] = stamp + 1
        if live + 1 > state["max_live"]:
            state["max_live"] = live + 1
        rows[c][x] = d
        rows[d][x ^ 1] = c
        return d

    def rep(c: int) -> int:
        r = c
        while parent[r] != r:
            r = parent[r]
        while parent[c] != r:
            parent[c], c = r, parent[c]
        return r

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []

        def merge(k: int, l: int) -> None:
            k = rep(k)
            l = rep(l)
            if k == l:
                return
            if birth[k] > birth[l]:
                k, l = l, k
            parent[l] = k
            p = prv[l]
            n = nxt[l]
            nxt[p] = n
            if n >= 0:
                prv[n] = p
            else:
                state["tail"] = p
            state["live"] -= 1
            queue.append(l)

        merge(a, b)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row_g = rows[g]
            for x in range(ncols):
                d = row_g[x]
                if d < 0:
                    continue
                xi = x ^ 1
                rows[d][xi] = -1
                mu = rep(g)
                nu = rep(d)
                t = rows[mu][x]
                if t >= 0:
                    merge(nu, t)
                    continue
                t = rows[nu][xi]
                if t >= 0:
                    merge(mu, t)
                    continue
                rows[mu][x] = nu
                rows[nu][xi] = mu
        free.extend(queue)

    c = 0
    try:
        while c >= 0:
            for word, inv_word in scans:
                # scan_and_fill(c, word)
                f = c
                b = c
                i = 0
                j = len(word) - 1
                while True:
                    while i <= j:
                        t = rows[f][word[i]]
                        if t < 0:
                            break
                        f = t
                        i += 1
                    if i > j:
                        if f != b:
                            coincidence(f, b)
                        break
                    while j >= i:
                        t = rows[b][inv_word[j]]
                        if t < 0:
                            break
                        b = t
                        j -= 1
                    if j < i:
                        coincidence(f, b)
                        break
                    if i == j:
                        rows[f][word[i]] = b
                        rows[b][inv_word[i]] = f
                        break
                    define(f, word[i])
                if parent[c] != c:
                    break
            else:
                row = rows[c]
                for x in range(ncols):
                    if row[x] < 0:
                        define(c, x)
            # coset 0 never dies: merges keep the older coset
            c = nxt[c]
            while c >= 0 and parent[c] != c:
                c = nxt[c]
    except CosetLimitExceeded:
        return None, None, state["defined"], state["max_live"]

    alive = []
    c = 0
    while c >= 0:
        alive.append(c)
        c = nxt[c]
    return alive, rows, state["defined"], state["max_live"]


def todd_coxeter(ngens: int, relators, max_cosets: int = DEFAULT_MAX_COSETS) -> Enumeration:
    """Enumerate cosets of the trivial subgroup of ``<ngens | relators>``."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    rels = sorted({tuple(r) for r in relators if len(r) > 0}, key=lambda r: (len(r), r))
    words = [[letter_column(x) for x in r] for r in rels]
    scans = [(w, [x ^ 1 for x in w]) for w in words]
    alive, rows, defined, max_live = _enumerate(ngens, scans, max_cosets)
    if alive is None:
        return Enumeration(False, None, defined, max_live)
    index = {c: k for k, c in enumerate(alive)}
    perms = []
    for g in range(ngens):
        perms.append(np.array([index[rows[c][2 * g]] for c in alive], dtype=np.int64))
    return Enumeration(True, len(alive), defined, max_live, perms)


def word_permutation(perms: list[np.ndarray], word) -> np.ndarray:
    """Permutation of the cosets induced by ``word`` (left to right action)."""
    n = len(perms[0]) if perms else 0
    result = np.arange(n)
    inverses: dict[int, np.ndarray] = {}
    for letter in word:
        g = abs(letter) - 1
        if letter > 0:
            p = perms[g]
        else:
            if g not in inverses:
                inv = np.empty_like(perms[g])
                inv[perms[g]] = np.arange(n)
                inverses[g] = inv
            p = inverses[g]
        result = p[result]
    return result


def verify_table(enum: Enumeration, relators) -> bool:
    """Post hoc soundness: each generator acts as a permutation and every
    relator acts trivially on every coset."""
    if not enum.closed:
        raise ValueError("only a closed enumeration can be verified")
    n = enum.order
    ident = np.arange(n)
    for p in enum.perms:
        if len(p) != n or p.min() < 0 or not np.array_equal(np.sort(p), ident):
            return False
    return all(np.array_equal(word_permutation(enum.perms, r), ident) for r in relators)
