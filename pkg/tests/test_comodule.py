import random

import pytest

from hopfcoh.comodule import (
    ComoduleMap,
    CurryData,
    coinvariants,
    colinear_maps,
    curry,
    direct_sum_comodule,
    dual_comodule,
    free_comodule,
    generated_subcomodule,
    grouplike_comodule,
    hom_comodule,
    integral_projector,
    is_injective_comodule,
    is_simple_comodule,
    isotypic_component,
    quotient_comodule,
    rationality_witness,
    regular_comodule,
    sub_comodule,
    tensor_comodule,
    trivial_comodule,
    validate_comodule,
    vec_to_map,
)
from hopfcoh.errors import HypothesisError
from hopfcoh.fixtures import HOPF_FIXTURE_NAMES, hopf_fixture, sweedler4
from hopfcoh.linalg import GF, QQ, Matrix, Subspace
from hopfcoh.rand import random_comodule

KC2 = hopf_fixture("kc2_q")
H4 = sweedler4()


def k_g(h=KC2):
    return grouplike_comodule(h, [0, 1])


def test_validate_examples():
    assert validate_comodule(trivial_comodule(KC2, 1)).ok
    assert validate_comodule(k_g()).ok
    # m -> m (x) x over the 4-dim fixture: counit fails since eps(x) = 0
    bad = grouplike_comodule(H4, [0, 0, 1, 0])
    report = validate_comodule(bad)
    assert "counit" in report.failed_axioms()


def test_tensor_unit_object():
    m = regular_comodule(KC2)
    assert tensor_comodule(trivial_comodule(KC2, 1), m).coaction == m.coaction
    assert tensor_comodule(m, trivial_comodule(KC2, 1)).coaction == m.coaction


def test_tensor_grouplikes_cancel():
    t = tensor_comodule(k_g(), k_g())
    assert t.coaction == trivial_comodule(KC2, 1).coaction


def test_tensor_regular_validates():
    t = tensor_comodule(regular_comodule(KC2), regular_comodule(KC2))
    assert t.dim == 4
    assert validate_comodule(t).ok


def test_free_comodule_examples():
    assert free_comodule(0, KC2).dim == 0
    assert free_comodule(1, KC2).coaction == regular_comodule(KC2).coaction
    f = free_comodule(2, H4)
    assert f.dim == 8
    assert validate_comodule(f).ok
    assert coinvariants(f).dim == 2


def test_coinvariants_examples():
    assert coinvariants(regular_comodule(KC2)).dim == 1
    assert coinvariants(regular_comodule(KC2)).contains([1, 0])
    assert coinvariants(k_g()).dim == 0
    assert coinvariants(trivial_comodule(KC2, 3)).dim == 3


def test_hom_comodule_examples():
    hom = hom_comodule(k_g(), k_g())
    assert hom.carrier.dim == 1
    assert hom.carrier.coaction == trivial_comodule(KC2, 1).coaction

    n = regular_comodule(H4)
    hom_kn = hom_comodule(trivial_comodule(H4, 1), n)
    assert hom_kn.carrier.coaction == n.coaction

    rng = random.Random(2)
    for _ in range(10):
        m = random_comodule(H4, rng.randrange(1, 4), rng)
        n = random_comodule(H4, rng.randrange(1, 4), rng)
        assert validate_comodule(hom_comodule(m, n).carrier).ok


def test_colinear_maps_examples():
    assert colinear_maps(trivial_comodule(KC2, 1), k_g()).dim == 0
    m = regular_comodule(H4)
    ident_vec = Matrix.identity(QQ, m.dim).to_flat()
    space = colinear_maps(m, m)
    assert space.contains(ident_vec)
    assert colinear_maps(regular_comodule(KC2), regular_comodule(KC2)).dim == 2


@pytest.mark.parametrize("name", HOPF_FIXTURE_NAMES)
def test_lemma_hom_coinvariants_are_colinear_maps(name):
    h = hopf_fixture(name)
    rng = random.Random(sum(map(ord, name)))
    for _ in range(8):
        m = random_comodule(h, rng.randrange(1, 4), rng)
        n = random_comodule(h, rng.randrange(1, 4), rng)
        hom = hom_comodule(m, n)
        assert coinvariants(hom.carrier) == colinear_maps(m, n)


def test_curry_trivial_m_reduces_to_coinvariants():
    n = regular_comodule(KC2)
    p = k_g()
    data = curry(trivial_comodule(KC2, 1), n, p)
    hom = hom_comodule(n, p)
    assert data.left.dim == colinear_maps(n, p).dim
    assert data.right.dim == coinvariants(hom.carrier).dim


@pytest.mark.parametrize("name", ["kc2_q", "sweedler4_q"])
def test_curry_random_triples(name):
    h = hopf_fixture(name)
    rng = random.Random(17)
    for _ in range(10):
        m = random_comodule(h, rng.randrange(1, 3), rng)
        n = random_comodule(h, rng.randrange(1, 3), rng)
        p = random_comodule(h, rng.randrange(1, 3), rng)
        data = curry(m, n, p)
        assert data.left.dim == data.right.dim
        if data.left.dim:
            ident = Matrix.identity(h.field, data.left.dim)
            assert data.backward @ data.forward == ident
            assert data.forward @ data.backward == ident


def test_generated_subcomodule_examples():
    m = regular_comodule(KC2)
    span, piece = generated_subcomodule(m, [[1, 0]])
    assert span.dim == 1 and validate_comodule(piece).ok

    h4reg = regular_comodule(H4)
    span, piece = generated_subcomodule(h4reg, [[0, 0, 1, 0]])
    assert span.dim == 2
    assert span.contains([0, 1, 0, 0])  # closure pulls in g
    assert validate_comodule(piece).ok

    coinv_vec = [1, 0]
    span, piece = generated_subcomodule(m, [coinv_vec])
    assert span.dim == 1
    assert piece.coaction == trivial_comodule(KC2, 1).coaction


def test_injectivity_examples():
    rng = random.Random(5)
    for _ in range(5):
        m = random_comodule(KC2, rng.randrange(1, 4), rng)
        assert is_injective_comodule(m)
    assert is_injective_comodule(free_comodule(1, H4))
    assert not is_injective_comodule(trivial_comodule(H4, 1))


def test_injective_tensor_absorbs():
    rng = random.Random(23)
    free = free_comodule(1, H4)
    for _ in range(4):
        m = random_comodule(H4, rng.randrange(1, 3), rng)
        assert is_injective_comodule(tensor_comodule(m, free))


def test_integral_projector_examples():
    m = direct_sum_comodule([trivial_comodule(KC2, 1), k_g()])
    dec = integral_projector(m)
    assert dec.invariant_part.dim == 1
    assert dec.ergodic_part.dim == 1
    assert dec.projector.apply([1, 0]) == [QQ.one, QQ.zero]
    assert dec.projector.apply([0, 1]) == [QQ.zero, QQ.zero]

    triv = trivial_comodule(KC2, 2)
    dec = integral_projector(triv)
    assert dec.projector == Matrix.identity(QQ, 2)
    assert dec.ergodic_part.dim == 0

    dec = integral_projector(k_g())
    assert dec.projector.is_zero()
    assert dec.ergodic_part.dim == 1

    with pytest.raises(HypothesisError):
        integral_projector(trivial_comodule(H4, 1))


def test_ergodic_decomposition_random():
    rng = random.Random(9)
    for name in ("kc2_q", "kc2_gf2", "dual_kc2_q"):
        h = hopf_fixture(name)
        for _ in range(5):
            m = random_comodule(h, rng.randrange(1, 4), rng)
            dec = integral_projector(m)
            assert dec.invariant_part.sum_with(dec.ergodic_part).dim == m.dim
            assert sub_comodule(m, dec.ergodic_part) is not None
            assert coinvariants(sub_comodule(m, dec.ergodic_part)).dim == 0


def test_isotypic_examples():
    n = direct_sum_comodule([trivial_comodule(KC2, 1), k_g(), k_g()])
    data = isotypic_component(n, k_g())
    assert data.component.dim == 2

    data = isotypic_component(n, trivial_comodule(KC2, 1))
    assert data.component == coinvariants(n)

    only_trivial = trivial_comodule(KC2, 2)
    data = isotypic_component(only_trivial, k_g())
    assert data.component.dim == 0


def test_isotypic_rejects_non_simple():
    with pytest.raises(HypothesisError):
        isotypic_component(regular_comodule(KC2), regular_comodule(KC2))


def test_isotypic_completeness_cosemisimple():
    for name in ("kc2_q", "kc2_gf2"):
        h = hopf_fixture(name)
        simples = [trivial_comodule(h, 1), grouplike_comodule(h, [0, 1])]
        rng = random.Random(13)
        for _ in range(5):
            n = random_comodule(h, rng.randrange(1, 4), rng)
            assert sum(isotypic_component(n, v).component.dim for v in simples) == n.dim


def test_simplicity_detection():
    assert is_simple_comodule(k_g())
    assert is_simple_comodule(trivial_comodule(KC2, 1))
    assert not is_simple_comodule(regular_comodule(KC2))
    span, w = generated_subcomodule(regular_comodule(H4), [[0, 0, 1, 0]])
    assert not is_simple_comodule(w)


def test_rationality_witness_colinear_f():
    m = regular_comodule(KC2)
    # left multiplication by g is colinear for the regular coaction
    lg = KC2.algebra.left_mult_matrix([0, 1])
    data = rationality_witness(m, m, lg)
    assert data.comodule.dim == 1
    assert data.evaluation.is_colinear()


def test_rationality_witness_arbitrary_map():
    h = H4
    k1 = trivial_comodule(h, 1)
    f = Matrix.from_rows(QQ, [[1]])
    data = rationality_witness(k1, k1, f)
    assert data.evaluation.is_colinear()

    zero = Matrix.zeros(QQ, 1, 1)
    data = rationality_witness(k1, k1, zero)
    assert data.comodule.dim <= 1
    assert data.evaluation.matrix.is_zero()


def test_rationality_witness_random_noncolinear():
    rng = random.Random(31)
    m = random_comodule(H4, 2, rng)
    n = random_comodule(H4, 2, rng)
    f = Matrix.from_rows(QQ, [[1, 2], [0, 1]])
    data = rationality_witness(m, n, f)
    assert data.evaluation.is_colinear()


def test_witness_composition_stays_certified():
    rng = random.Random(37)
    m = random_comodule(H4, 2, rng)
    n = random_comodule(H4, 2, rng)
    p = random_comodule(H4, 2, rng)
    g = Matrix.from_rows(QQ, [[1, 1], [0, 2]])
    f = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    wg = rationality_witness(m, n, g)
    wf = rationality_witness(n, p, f)
    # K(m (x) s (x) t) = F(G(m (x) s) (x) t) on M (x) (V (x) W)
    idw = Matrix.identity(QQ, wf.comodule.dim)
    k_matrix = wf.evaluation.matrix @ kronecker_map(wg.evaluation.matrix, idw)
    vw = tensor_comodule(wg.comodule, wf.comodule)
    kmap = ComoduleMap(tensor_comodule(m, vw), p, k_matrix)
    assert kmap.is_colinear()
    # K(m (x) v (x) w) = (f o g)(m)
    vvec = wg.element
    wvec = wf.element
    composite = f @ g
    for c in range(m.dim):
        out = [QQ.zero] * p.dim
        for j, vj in enumerate(vvec):
            if not vj:
                continue
            for t, wt in enumerate(wvec):
                if not wt:
                    continue
                col = k_matrix.col((c * len(vvec) + j) * len(wvec) + t)
                for i in range(p.dim):
                    out[i] += vj * wt * col[i]
        assert out == composite.col(c)


def kronecker_map(a, b):
    from hopfcoh.linalg import kronecker

    return kronecker(a, b)


def test_hom_into_injective_exactness():
    rng = random.Random(41)
    h = H4
    injective = free_comodule(1, h)
    for _ in range(5):
        n = random_comodule(h, rng.randrange(2, 4), rng)
        vec = [h.field.coerce(rng.randrange(-1, 2)) for _ in range(n.dim)]
        if not any(vec):
            vec[0] = h.field.one
        msub, mcom = generated_subcomodule(n, [vec])
        if msub.dim == n.dim:
            continue
        pcom, proj = quotient_comodule(n, msub)
        dim_n = colinear_maps(n, injective).dim
        dim_m = colinear_maps(mcom, injective).dim
        dim_p = colinear_maps(pcom, injective).dim
        assert dim_n == dim_m + dim_p


def test_quotient_comodule_validates():
    n = regular_comodule(H4)
    span, _ = generated_subcomodule(n, [[0, 0, 1, 0]])
    q, proj = quotient_comodule(n, span)
    assert q.dim == 2
    assert validate_comodule(q).ok


def test_zero_dimensional_comodules_work():
    z = free_comodule(0, KC2)
    assert coinvariants(z).dim == 0
    assert colinear_maps(z, regular_comodule(KC2)).dim == 0
    assert is_injective_comodule(z)
    assert validate_comodule(z).ok


def test_dual_comodule_of_grouplike():
    d = dual_comodule(k_g())
    # dual of the g-graded line is graded by S^{-1}(g) = g
    assert d.coaction == k_g().coaction
    assert validate_comodule(d).ok


@pytest.mark.parametrize("name", HOPF_FIXTURE_NAMES)
def test_random_comodules_validate(name):
    h = hopf_fixture(name)
    rng = random.Random(len(name))
    for _ in range(6):
        m = random_comodule(h, rng.randrange(0, 4), rng)
        assert validate_comodule(m).ok


def test_flip_colinearity_and_symmetric_curry():
    from hopfcoh.comodule import curry_symmetric, flip_is_colinear

    rng = random.Random(43)
    m = random_comodule(KC2, 2, rng)
    n = random_comodule(KC2, 2, rng)
    assert flip_is_colinear(m, n)  # kC2 is cocommutative
    p = random_comodule(KC2, 2, rng)
    data = curry_symmetric(m, n, p)
    assert data.left.dim == data.right.dim

    reg = regular_comodule(H4)
    span, w = generated_subcomodule(reg, [[0, 0, 1, 0]])
    assert not flip_is_colinear(reg, w)
    with pytest.raises(HypothesisError):
        curry_symmetric(w, reg, trivial_comodule(H4, 1))


def test_hom_from_simple_matches_coinvariants_of_dual_tensor():
    # (N (x) V*)^coH and Hom^H(V, N) have equal dimension when the flip
    # witnesses symmetry (cocommutative fixture)
    from hopfcoh.comodule import dual_comodule, flip_is_colinear

    rng = random.Random(47)
    for _ in range(5):
        n = random_comodule(KC2, rng.randrange(1, 4), rng)
        v = k_g()
        assert flip_is_colinear(n, v)
        lhs = coinvariants(tensor_comodule(n, dual_comodule(v))).dim
        rhs = colinear_maps(v, n).dim
        assert lhs == rhs


def test_curry_is_the_reshape_formula():
    # phi(f)(m)(n) = f(n (x) m) as a literal index identity
    rng = random.Random(59)
    n_dim, m_dim, p_dim = 2, 3, 2
    f = Matrix.from_rows(QQ, [[rng.randrange(-3, 4) for _ in range(n_dim * m_dim)] for _ in range(p_dim)])
    vec = f.to_flat()
    for c in range(m_dim):
        for b in range(n_dim):
            phi_f_at = [vec[(a * n_dim + b) * m_dim + c] for a in range(p_dim)]
            direct = f.col(b * m_dim + c)
            assert phi_f_at == direct
