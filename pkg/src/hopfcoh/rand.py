"""Deterministic pseudo-random test objects.

Random comodules are built constructively (direct sums of generated
subcomodules of the regular comodule, conjugated by a random invertible
change of basis), so they are valid by construction and cover both split and
non-split indecomposables of the shipped fixtures.
"""

from __future__ import annotations

import random

from hopfcoh.comodule import (
    Comodule,
    direct_sum_comodule,
    dual_comodule,
    generated_subcomodule,
    regular_comodule,
    trivial_comodule,
)
from hopfcoh.hopf import HopfAlgebra
from hopfcoh.linalg import Matrix, invert, kronecker


def random_invertible(field, n: int, rng: random.Random) -> Matrix:
    """Random unimodular change of basis: shears and swaps of the identity.

    Determinant +-1 keeps the inverse integral, so conjugated structures stay
    integer-valued and the exact arithmetic stays fast.
    """
    if n == 0:
        return Matrix.zeros(field, 0, 0)
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(2 * n + 2):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        if rng.randrange(3) == 0:
            rows[i], rows[j] = rows[j], rows[i]
    return Matrix.from_rows(field, rows)


def conjugate_comodule(m: Comodule, p: Matrix) -> Comodule:
    """Transport the coaction along the iso with matrix p (new-to-old coords)."""
    pinv = invert(p)
    assert pinv is not None
    idh = Matrix.identity(m.field, m.hopf.dim)
    return Comodule(m.hopf, m.dim, kronecker(pinv, idh) @ m.coaction @ p)


_pool_cache: dict[int, list] = {}


def comodule_pool(h: HopfAlgebra):
    """Building blocks: trivial k, generated pieces of the regular comodule, duals."""
    cached = _pool_cache.get(id(h))
    if cached is not None:
        return cached
    reg = regular_comodule(h)
    pool = [trivial_comodule(h, 1), reg]
    seen = {(1, trivial_comodule(h, 1).coaction), (reg.dim, reg.coaction)}
    for j in range(h.dim):
        vec = [h.field.one if i == j else h.field.zero for i in range(h.dim)]
        _, piece = generated_subcomodule(reg, [vec])
        key = (piece.dim, piece.coaction)
        if piece.dim and key not in seen:
            seen.add(key)
            pool.append(piece)
    for piece in list(pool):
        d = dual_comodule(piece)
        key = (d.dim, d.coaction)
        if key not in seen:
            seen.add(key)
            pool.append(d)
    _pool_cache[id(h)] = pool
    return pool


def random_comodule(h: HopfAlgebra, dim: int, rng: random.Random) -> Comodule:
    """A valid comodule of the exact requested dimension."""
    if dim == 0:
        return Comodule(h, 0, Matrix.zeros(h.field, 0, 0))
    pool = comodule_pool(h)
    parts = []
    remaining = dim
    while remaining > 0:
        options = [p for p in pool if 0 < p.dim <= remaining]
        part = rng.choice(options)
        parts.append(part)
        remaining -= part.dim
    total = direct_sum_comodule(parts)
    return conjugate_comodule(total, random_invertible(h.field, dim, rng))


def conjugate_module(m, p: Matrix):
    from hopfcoh.relative import AlgebraModule

    pinv = invert(p)
    assert pinv is not None
    ida = Matrix.identity(m.field, m.algebra.dim)
    return AlgebraModule(m.algebra, m.dim, pinv @ m.action @ kronecker(ida, p))


def random_algebra_module(r, rng: random.Random, max_copies: int = 2):
    """A valid module over r: a twisted sub or quotient of a small free module."""
    from hopfcoh.relative import free_module, generated_submodule, quotient_module, sub_module

    free = free_module(r, rng.randrange(1, max_copies + 1))
    vec = [r.field.coerce(rng.randrange(-1, 2)) for _ in range(free.dim)]
    mode = rng.randrange(3)
    mod = free
    if any(vec) and mode:
        span = generated_submodule(free, [vec])
        if 0 < span.dim:
            if mode == 1 or span.dim == free.dim:
                mod = sub_module(free, span)
            else:
                mod, _ = quotient_module(free, span)
    if mod.dim == 0:
        mod = free
    return conjugate_module(mod, random_invertible(r.field, mod.dim, rng))


def conjugate_rel_module(m, p: Matrix):
    from hopfcoh.relative import RelHopfModule

    pinv = invert(p)
    assert pinv is not None
    ida = Matrix.identity(m.field, m.comodule_algebra.dim)
    return RelHopfModule(
        m.comodule_algebra,
        conjugate_comodule(m.comodule, p),
        pinv @ m.action @ kronecker(ida, p),
    )


def random_rel_hopf_module(a, rng: random.Random, max_vdim: int = 2):
    """A valid relative (A, H)-Hopf module: a twisted sub or quotient of A (x) V."""
    from hopfcoh.relative import generated_rel_submodule, quotient_rel_module, rel_free_on_comodule

    v = random_comodule(a.hopf, rng.randrange(1, max_vdim + 1), rng)
    mod = rel_free_on_comodule(a, v)
    vec = [a.field.coerce(rng.randrange(-1, 2)) for _ in range(mod.dim)]
    mode = rng.randrange(3)
    if any(vec) and mode:
        span, piece = generated_rel_submodule(mod, [vec])
        if 0 < span.dim:
            if mode == 1 or span.dim == mod.dim:
                mod = piece
            else:
                mod, _ = quotient_rel_module(mod, span)
    if mod.dim == 0:
        mod = rel_free_on_comodule(a, v)
    return conjugate_rel_module(mod, random_invertible(a.field, mod.dim, rng))
