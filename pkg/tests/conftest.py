"""Shared fixtures: published connection pairs and random spec generators."""

import random

import pytest

from drgforge.cayley import build_psd, build_sd, is_connected

# verified diameter-4 pairs used throughout the suite
SD8_PAIR = ((5, 7, 9, 11), (4, 8, 10, 14))
PSD8_PAIR = ((5, 7, 9, 11), (3, 5, 9, 15))
SD32_PAIR = (
    (9, 11, 15, 19, 25, 27, 29, 31, 33, 35, 37, 39, 45, 49, 53, 55),
    (0, 8, 12, 14, 22, 24, 30, 34, 36, 38, 42, 48, 50, 52, 58, 60),
)


def random_sd_spec(rng: random.Random, n: int = 8):
    """A uniformly-flavoured valid sd (R, T): R = -R without 0, T = (n+1)T."""
    m = 2 * n
    while True:
        r = set()
        for i in range(1, n):
            if rng.random() < 0.4:
                r.update((i, m - i))
        if rng.random() < 0.4:
            r.add(n)
        t = set()
        for e in range(0, m, 2):
            if rng.random() < 0.25:
                t.add(e)
        # odd residues pair up as {t, t+n} under multiplication by n+1
        for o in range(1, n, 2):
            if rng.random() < 0.25:
                t.update((o, (o + n) % m))
        if r or t:
            return tuple(sorted(r)), tuple(sorted(t))


def random_psd_spec(rng: random.Random, n: int = 8):
    """Valid psd (R, T): R = -R without 0, T = (n-1)T.

    Multiplication by n-1 fixes nothing odd: even t maps to -t, odd t to
    n-t, so T is a union of those orbits.
    """
    m = 2 * n
    while True:
        r = set()
        for i in range(1, n):
            if rng.random() < 0.4:
                r.update((i, m - i))
        if rng.random() < 0.4:
            r.add(n)
        t = set()
        for e in range(0, m, 2):
            if rng.random() < 0.25:
                t.update((e, (-e) % m))
        for o in range(1, m, 2):
            if rng.random() < 0.25:
                t.update((o, (n - o) % m))
        if r or t:
            return tuple(sorted(r)), tuple(sorted(t))


def random_spec(rng: random.Random, family: str, n: int = 8):
    if family == "sd":
        return random_sd_spec(rng, n)
    return random_psd_spec(rng, n)


def random_connected_specs(seed: int, count: int, n: int = 8):
    """(family, R, T) triples whose graphs are connected, evenly split."""
    rng = random.Random(seed)
    out = []
    builders = {"sd": build_sd, "psd": build_psd}
    while len(out) < count:
        family = "sd" if len(out) % 2 == 0 else "psd"
        r, t = random_spec(rng, family, n)
        if is_connected(builders[family](n, r, t)):
            out.append((family, r, t))
    return out


@pytest.fixture(scope="session")
def rng():
    return random.Random(20260823)
