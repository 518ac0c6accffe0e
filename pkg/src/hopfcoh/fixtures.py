"""Shipped desk-scale fixtures: small Hopf algebras and comodule algebras."""

from __future__ import annotations

from hopfcoh.hopf import Algebra, HopfAlgebra, dual_hopf, make_hopf
from hopfcoh.linalg import GF, QQ, Field

HOPF_FIXTURE_NAMES = ("kc2_q", "kc2_gf2", "dual_kc2_q", "dual_kc2_gf2", "sweedler4_q")
FIXTURE_NAMES = HOPF_FIXTURE_NAMES + ("dualnumbers_A", "regular_A")


def group_algebra_c2(field: Field) -> HopfAlgebra:
    """k[C2]: basis (1, g), g^2 = 1, g group-like."""
    mult = [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
    ]
    comult = [
        [[1, 0], [0, 0]],
        [[0, 0], [0, 1]],
    ]
    return make_hopf(field, 2, mult, [1, 0], comult, [1, 1], antipode=[[1, 0], [0, 1]])


def sweedler4(field: Field = QQ) -> HopfAlgebra:
    """The 4-dimensional Taft algebra: basis (1, g, x, gx).

    g^2 = 1, x^2 = 0, x g = -g x; g group-like,
    delta(x) = x (x) 1 + g (x) x; S(x) = -gx.
    """
    z4 = [0, 0, 0, 0]

    def e(i, c=1):
        v = list(z4)
        v[i] = c
        return v

    mult = [
        [e(0), e(1), e(2), e(3)],
        [e(1), e(0), e(3), e(2)],
        [e(2), e(3, -1), z4, z4],
        [e(3), e(2, -1), z4, z4],
    ]
    comult = [
        [[1, 0, 0, 0], z4, z4, z4],
        [z4, [0, 1, 0, 0], z4, z4],
        [z4, [0, 0, 1, 0], [1, 0, 0, 0], z4],
        [[0, 0, 0, 1], z4, z4, [0, 1, 0, 0]],
    ]
    counit = [1, 1, 0, 0]
    antipode = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ]
    return make_hopf(field, 4, mult, [1, 0, 0, 0], comult, counit, antipode=antipode)


def dual_numbers_algebra(field: Field) -> Algebra:
    """k[t]/(t^2), basis (1, t)."""
    mult = [
        [[1, 0], [0, 1]],
        [[0, 1], [0, 0]],
    ]
    return Algebra(field, 2, mult, [1, 0])


def hopf_fixture(name: str) -> HopfAlgebra:
    if name == "kc2_q":
        return group_algebra_c2(QQ)
    if name == "kc2_gf2":
        return group_algebra_c2(GF(2))
    if name == "dual_kc2_q":
        return dual_hopf(group_algebra_c2(QQ))
    if name == "dual_kc2_gf2":
        return dual_hopf(group_algebra_c2(GF(2)))
    if name == "sweedler4_q":
        return sweedler4(QQ)
    raise KeyError("unknown hopf fixture %r" % name)


def fixture_workspace(name: str):
    """The shipped workspace for a fixture name, as core objects."""
    from hopfcoh.comodule import grouplike_comodule, regular_comodule, trivial_comodule
    from hopfcoh.linalg import Matrix
    from hopfcoh.relative import (
        AlgebraModule,
        RelHopfModule,
        coinvariant_subalgebra,
        regular_comodule_algebra,
        regular_rel_module,
        trivial_comodule_algebra,
    )
    from hopfcoh.workspace import Workspace

    if name in HOPF_FIXTURE_NAMES:
        h = hopf_fixture(name)
        ws = Workspace(h.field)
        ws.hopf["H"] = h
        comods = {"k": trivial_comodule(h, 1), "H_regular": regular_comodule(h)}
        if name in ("kc2_q", "kc2_gf2"):
            comods["k_g"] = grouplike_comodule(h, [0, 1])
        elif name == "dual_kc2_q":
            comods["k_sign"] = grouplike_comodule(h, [1, -1])
        elif name == "sweedler4_q":
            comods["k_g"] = grouplike_comodule(h, [0, 1, 0, 0])
        for cname, c in comods.items():
            ws.comodules[cname] = c
            ws.comodule_hopf[cname] = "H"
        return ws

    if name == "regular_A":
        h = group_algebra_c2(QQ)
        ws = Workspace(h.field)
        ws.hopf["H"] = h
        a = regular_comodule_algebra(h)
        ws.comodule_algebras["A"] = a
        ws.algebra_hopf["A"] = "H"
        ws.coinvariant_algebras["A"] = coinvariant_subalgebra(a)
        ws.rel_hopf_modules["M_regular"] = regular_rel_module(a)
        ws.rel_algebra["M_regular"] = "A"
        b = ws.coinvariant_algebras["A"]
        ws.b_modules["N_k"] = AlgebraModule(b.algebra, 1, Matrix.from_rows(h.field, [[1]]))
        ws.b_algebra["N_k"] = "A"
        ws.comodules["k"] = trivial_comodule(h, 1)
        ws.comodule_hopf["k"] = "H"
        return ws

    if name == "dualnumbers_A":
        h = group_algebra_c2(QQ)
        ws = Workspace(h.field)
        ws.hopf["H"] = h
        a = trivial_comodule_algebra(dual_numbers_algebra(h.field), h)
        ws.comodule_algebras["A"] = a
        ws.algebra_hopf["A"] = "H"
        ws.coinvariant_algebras["A"] = coinvariant_subalgebra(a)
        ws.rel_hopf_modules["M_regular"] = regular_rel_module(a)
        ws.rel_algebra["M_regular"] = "A"
        k_rel = RelHopfModule(
            a, trivial_comodule(h, 1), Matrix.from_rows(h.field, [[1, 0]])
        )
        ws.rel_hopf_modules["M_k"] = k_rel
        ws.rel_algebra["M_k"] = "A"
        b = ws.coinvariant_algebras["A"]
        ws.b_modules["N_k"] = AlgebraModule(b.algebra, 1, Matrix.from_rows(h.field, [[1, 0]]))
        ws.b_algebra["N_k"] = "A"
        ws.b_modules["N_B"] = AlgebraModule(b.algebra, 2, b.algebra.mult_matrix())
        ws.b_algebra["N_B"] = "A"
        ws.comodules["k"] = trivial_comodule(h, 1)
        ws.comodule_hopf["k"] = "H"
        return ws

    raise KeyError("unknown fixture %r" % name)


def fixture_json(name: str) -> str:
    from hopfcoh.workspace import workspace_json

    return workspace_json(fixture_workspace(name))
