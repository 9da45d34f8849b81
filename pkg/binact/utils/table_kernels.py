"""JIT kernels behind every exhaustive check in the package.

All kernels take dense int64 tables and scan their index space in
lexicographic order, so the witness they return is the lexicographically
first one. A witness made of -1 entries means the check passed.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def associativity_witness(cayley: np.ndarray) -> tuple[int, int, int]:
    m = cayley.shape[0]
    for a in range(m):
        for b in range(m):
            ab = cayley[a, b]
            for c in range(m):
                if cayley[ab, c] != cayley[a, cayley[b, c]]:
                    return a, b, c
    return -1, -1, -1


@njit(cache=True)
def identity_axiom_witness(act: np.ndarray, identity: int) -> tuple[int, int]:
    n = act.shape[1]
    for x1 in range(n):
        for x2 in range(n):
            if act[identity, x1, x2] != x2:
                return x1, x2
    return -1, -1


@njit(cache=True)
def invertibility_witness(act: np.ndarray) -> tuple[int, int]:
    m, n = act.shape[0], act.shape[1]
    seen = np.zeros(n, np.bool_)
    for g in range(m):
        for x1 in range(n):
            seen[:] = False
            for x2 in range(n):
                y = act[g, x1, x2]
                if seen[y]:
                    return g, x1
                seen[y] = True
    return -1, -1


@njit(cache=True)
def composition_axiom_witness(
    act: np.ndarray, cayley: np.ndarray
) -> tuple[int, int, int, int]:
    m, n = act.shape[0], act.shape[1]
    for g in range(m):
        for h in range(m):
            gh = cayley[g, h]
            for x1 in range(n):
                for x2 in range(n):
                    if act[gh, x1, x2] != act[g, x1, act[h, x1, x2]]:
                        return g, h, x1, x2
    return -1, -1, -1, -1


@njit(cache=True)
def ordinary_action_witness(
    rho: np.ndarray, cayley: np.ndarray, identity: int
) -> tuple[int, int, int]:
    """Returns (g, h, x) with rho(gh, x) != rho(g, rho(h, x)), or (e, e, x)
    when rho(e, x) != x."""
    m, n = rho.shape[0], rho.shape[1]
    for x in range(n):
        if rho[identity, x] != x:
            return identity, identity, x
    for g in range(m):
        for h in range(m):
            gh = cayley[g, h]
            for x in range(n):
                if rho[gh, x] != rho[g, rho[h, x]]:
                    return g, h, x
    return -1, -1, -1


@njit(cache=True)
def distributivity_witness(act: np.ndarray) -> tuple[int, int, int, int, int]:
    m, n = act.shape[0], act.shape[1]
    for g in range(m):
        for h in range(m):
            for x in range(n):
                for x1 in range(n):
                    u = act[h, x, x1]
                    for x2 in range(n):
                        lhs = act[g, u, act[h, x, x2]]
                        rhs = act[h, x, act[g, x1, x2]]
                        if lhs != rhs:
                            return g, h, x, x1, x2
    return -1, -1, -1, -1, -1


@njit(cache=True)
def biequivariance_witness(
    source: np.ndarray, target: np.ndarray, values: np.ndarray, domain: np.ndarray
) -> tuple[int, int, int]:
    # A point leaving the domain counts as a failure.
    m, n = source.shape[0], source.shape[1]
    for g in range(m):
        for x1 in range(n):
            if not domain[x1]:
                continue
            y1 = values[x1]
            for x2 in range(n):
                if not domain[x2]:
                    continue
                x = source[g, x1, x2]
                if not domain[x] or values[x] != target[g, y1, values[x2]]:
                    return g, x1, x2
    return -1, -1, -1


@njit(cache=True)
def sm1_witness(
    source: np.ndarray, target: np.ndarray, values: np.ndarray, domain: np.ndarray
) -> tuple[int, int, int]:
    m, n = source.shape[0], source.shape[1]
    for g in range(m):
        for a1 in range(n):
            if not domain[a1]:
                continue
            for a2 in range(n):
                if not domain[a2]:
                    continue
                x = source[g, a1, a2]
                if domain[x] and values[x] != target[g, values[a1], values[a2]]:
                    return g, a1, a2
    return -1, -1, -1


@njit(cache=True)
def isotropy_inclusion_witness(
    source: np.ndarray, target: np.ndarray, members: np.ndarray, values: np.ndarray
) -> tuple[int, int, int]:
    m, k = source.shape[0], members.shape[0]
    for i in range(k):
        a = members[i]
        for j in range(k):
            ap = members[j]
            for g in range(m):
                if source[g, a, ap] == ap and target[g, values[a], values[ap]] != values[ap]:
                    return a, ap, g
    return -1, -1, -1


@njit(cache=True)
def star_condition_witness(
    source: np.ndarray, target: np.ndarray, members: np.ndarray, values: np.ndarray
) -> tuple[int, int, int, int, int, int, int]:
    """Scans (g, h, k, s, a, a', a'') for g(a,a) = h(k(a',a'), s(a'',a''))
    holding in the source while the relabeled equation fails in the target."""
    m, t = source.shape[0], members.shape[0]
    for g in range(m):
        for h in range(m):
            for k in range(m):
                for s in range(m):
                    for i in range(t):
                        a = members[i]
                        ya = values[a]
                        left = source[g, a, a]
                        y_left = target[g, ya, ya]
                        for j in range(t):
                            ap = members[j]
                            yap = values[ap]
                            u = source[k, ap, ap]
                            y_u = target[k, yap, yap]
                            for l in range(t):
                                app = members[l]
                                yapp = values[app]
                                if source[h, u, source[s, app, app]] != left:
                                    continue
                                if target[h, y_u, target[s, yapp, yapp]] != y_left:
                                    return g, h, k, s, a, ap, app
    return -1, -1, -1, -1, -1, -1, -1


def found(witness: tuple[int, ...]) -> bool:
    """Whether a kernel witness reports a failure."""
    return witness[0] != -1


def as_witness(witness: tuple[int, ...]) -> tuple[int, ...] | None:
    return tuple(int(w) for w in witness) if found(witness) else None
