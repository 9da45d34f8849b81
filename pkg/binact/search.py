"""Random generation of binary actions and witness search.

A binary action is a family of ordinary actions indexed by the first
argument, and an ordinary action is a homomorphism G -> Sym(X). Samples are
built member by member: images of a generating set are drawn as random
permutations whose cycle lengths divide the generator orders, extended over
the Cayley graph, and rejected when the extension is inconsistent. Every
sample is a valid action by construction.

Randomness comes from numpy's PCG64 generator seeded with the words
(seed, trial, ...), so every trial is reproducible on its own and trials can
run in any order or in parallel.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from pathlib import Path

import numpy as np

from .actions import BinaryAction, from_family, is_distributive, verify_distributivity_witness
from .exceptions import TrialsExhausted
from .group import FiniteGroup
from .named_groups import group_factory
from .orbits import orbit

log = logging.getLogger(__name__)

REJECTION_LIMIT = 1000

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of a reproducible search.

    Attributes
    ----------
    seed: int
        Any integer; reduced modulo 2**64.

    group_spec: str
        A named group such as "symmetric:3", or a group file.

    carrier_size: int

    max_trials: int

    workers: int
        Processes used for trials. 1 runs them in this process.
    """

    seed: int
    group_spec: str
    carrier_size: int
    max_trials: int = 100
    workers: int = 1

    def __post_init__(self) -> None:
        if self.carrier_size < 1:
            raise ValueError(f"The carrier size must be at least 1 but got {self.carrier_size}.")
        if self.max_trials < 1:
            raise ValueError(f"max_trials must be at least 1 but got {self.max_trials}.")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1 but got {self.workers}.")

    def resolve_group(self) -> FiniteGroup:
        spec = self.group_spec
        if spec.endswith(".json") or Path(spec).is_file():
            from .serialization import load_group

            return load_group(spec)
        return group_factory(spec)

    def rng(self, *words: int) -> np.random.Generator:
        entropy = [self.seed & _SEED_MASK, *words]
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def _random_permutation(rng: np.random.Generator, n: int, order: int) -> np.ndarray:
    """A random permutation of n points whose order divides `order`."""
    divisors = [d for d in range(1, order + 1) if order % d == 0]
    points = rng.permutation(n)
    perm = np.arange(n)

    i = 0
    while i < n:
        lengths = [d for d in divisors if d <= n - i]
        d = int(rng.choice(lengths))
        cycle = points[i : i + d]
        perm[cycle] = np.roll(cycle, -1)
        i += d

    return perm


def _extend_homomorphism(
    G: FiniteGroup, gens: tuple[int, ...], images: list[np.ndarray], n: int
) -> np.ndarray | None:
    """Extends generator images to rho: G -> Sym(n), or returns None if some
    Cayley graph edge contradicts rho(us) = rho(u) rho(s)."""
    rho = np.full((G.order, n), -1, dtype=np.int64)
    rho[G.identity] = np.arange(n)
    queue = deque([G.identity])

    while queue:
        u = queue.popleft()
        for s, image in zip(gens, images):
            w = G.multiply(u, s)
            candidate = rho[u][image]
            if rho[w, 0] == -1:
                rho[w] = candidate
                queue.append(w)
            elif not np.array_equal(rho[w], candidate):
                return None

    return rho


def random_homomorphism(rng: np.random.Generator, G: FiniteGroup, n: int) -> np.ndarray:
    """Draws an ordinary action of G on n points as an (m, n) table.

    Raises
    ----------
    TrialsExhausted: When REJECTION_LIMIT draws were all inconsistent.
    """
    gens = G.generators()
    orders = [G.element_order(s) for s in gens]

    for _ in range(REJECTION_LIMIT):
        images = [_random_permutation(rng, n, k) for k in orders]
        if (rho := _extend_homomorphism(G, gens, images, n)) is not None:
            return rho

    msg = f"No homomorphism found in {REJECTION_LIMIT} draws."
    raise TrialsExhausted(msg, witness=(REJECTION_LIMIT,))


def _sample_action(cfg: SearchConfig, G: FiniteGroup, *words: int) -> BinaryAction:
    rng = cfg.rng(*words)
    n = cfg.carrier_size
    return from_family(G, n, [random_homomorphism(rng, G, n) for _ in range(n)])


def random_binary_action(cfg: SearchConfig, trial: int = 0) -> BinaryAction:
    """Draws a binary action; the same (cfg.seed, trial) always gives the same action.

    Raises
    ----------
    TrialsExhausted: When a family member could not be drawn.
    """
    return _sample_action(cfg, cfg.resolve_group(), trial)


def random_distributive_action(cfg: SearchConfig, trial: int = 0) -> BinaryAction:
    """Draws binary actions until one is distributive, at most cfg.max_trials times.

    Raises
    ----------
    TrialsExhausted
    """
    G = cfg.resolve_group()

    for attempt in range(cfg.max_trials):
        a = _sample_action(cfg, G, trial, attempt)
        if is_distributive(a):
            return a

    msg = f"No distributive action in {cfg.max_trials} draws."
    raise TrialsExhausted(msg, witness=(cfg.max_trials,))


def overlapping_orbits(a: BinaryAction) -> tuple[int, int] | None:
    """The first pair x < y whose orbits meet without coinciding, or None."""
    orbits = [set(orbit(a, x)) for x in range(a.carrier_size)]

    for x in range(a.carrier_size):
        for y in range(x + 1, a.carrier_size):
            if orbits[x] != orbits[y] and orbits[x] & orbits[y]:
                return x, y

    return None


def _nondistributive_trial(cfg: SearchConfig, trial: int) -> tuple[int, ...] | None:
    return is_distributive(random_binary_action(cfg, trial)).witness


def _overlapping_trial(cfg: SearchConfig, trial: int) -> tuple[int, ...] | None:
    return overlapping_orbits(random_binary_action(cfg, trial))


def _first_success(
    cfg: SearchConfig, trial_fn: Callable[[SearchConfig, int], tuple | None], what: str
) -> tuple[int, tuple]:
    """Runs trials 0, 1, ... and returns the lowest trial index with a result."""
    if cfg.workers == 1:
        results = map(trial_fn, repeat(cfg), range(cfg.max_trials))
        for trial, result in enumerate(results):
            log.debug("%s trial %d: %s", what, trial, result)
            if result is not None:
                return trial, result
    else:
        pool = ProcessPoolExecutor(max_workers=cfg.workers)
        try:
            # map yields in submission order, whatever the completion order.
            results = pool.map(trial_fn, repeat(cfg), range(cfg.max_trials))
            for trial, result in enumerate(results):
                log.debug("%s trial %d: %s", what, trial, result)
                if result is not None:
                    return trial, result
        finally:
            pool.shutdown(wait=True, cancel_futures=True)

    msg = f"No {what} witness in {cfg.max_trials} trials."
    raise TrialsExhausted(msg, witness=(cfg.max_trials,))


def find_nondistributive_witness(cfg: SearchConfig) -> tuple[BinaryAction, tuple[int, ...]]:
    """Returns the first sampled action failing the distributive law and the
    failing (g, h, x, x1, x2).

    Raises
    ----------
    TrialsExhausted
    """
    trial, witness = _first_success(cfg, _nondistributive_trial, "nondistributive")
    a = random_binary_action(cfg, trial)

    if not verify_distributivity_witness(a, witness):
        raise RuntimeError(f"Trial {trial} reported {witness}, which does not verify.")

    return a, witness


def find_overlapping_orbits_witness(cfg: SearchConfig) -> tuple[BinaryAction, int, int]:
    """Returns the first sampled action with two points whose orbits meet
    without coinciding, and the two points.

    Raises
    ----------
    TrialsExhausted
    """
    trial, (x, y) = _first_success(cfg, _overlapping_trial, "overlapping-orbits")
    a = random_binary_action(cfg, trial)

    ox, oy = orbit(a, x), orbit(a, y)
    if ox == oy or not ox.intersection(oy).members:
        raise RuntimeError(f"Trial {trial} reported points {x} and {y}, which do not verify.")

    return a, x, y
