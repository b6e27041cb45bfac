"""Multiplicative-data reconstruction and reduced models."""

from fractions import Fraction

import pytest

from charlab.errors import BadWeight, ZeroU
from charlab.fields import Q, t_element
from charlab.reconstruct import (
    MultMapData,
    ReducedModelSpec,
    build_kappa,
    builtin_example,
    derive_w,
    patchwise_exceptions,
    reduced_model,
    table_map,
    verify_uv_relations,
)
from charlab.sampling import rational_elements, ratfunc_elements, sample_pairs

QQ = Q()


def q_samples(count, seed, height=100):
    return rational_elements(QQ, height, count, seed=seed, avoid=(0, -1))


def test_identity_example():
    data = builtin_example("identity", QQ)
    samples = q_samples(100, 31)
    assert not data.check_defining_relation(samples)
    w, values = derive_w(data, samples)
    assert values == frozenset({QQ.one()})
    kappa, report = build_kappa(data.rho, w, samples, sample_pairs(samples, 50, 32))
    assert all(kappa(x) == x for x in samples)
    assert not any(len(v) for v in report.values())
    uv = verify_uv_relations(data, samples)
    assert not any(uv.values())


def test_parity_example_pipeline():
    data = builtin_example("q-parity-w", QQ)
    samples = q_samples(200, 33, height=150)
    assert not data.check_defining_relation(samples)
    w, values = derive_w(data, samples)
    assert {v.payload for v in values} == {Fraction(1), Fraction(-1)}
    assert all(w(x) == data.w_reference(x) for x in samples)
    pairs = sample_pairs(samples, 80, 34)
    patch = patchwise_exceptions(w, "multiplicative", samples[:80], pairs[:30])
    assert patch.clean
    kappa, report = build_kappa(data.rho, w, samples, pairs)
    assert all(kappa(x) == x for x in samples)
    assert not report["additive_violations"] and not report["multiplicative_violations"]
    assert not report["injectivity_collisions"]


def test_negated_u_flips_w():
    base = builtin_example("q-parity-w", QQ)
    data = MultMapData(
        QQ, QQ,
        rho=base.rho,
        u=base.u,
        v=lambda x: -base.u(x) * base.w_reference(x),
    )
    samples = q_samples(60, 35)
    w, values = derive_w(data, samples)
    assert all(w(x) == -base.w_reference(x) for x in samples)
    assert len(values) == 2  # still finite-valued


def test_zero_u_raises():
    data = MultMapData(QQ, QQ, rho=lambda x: x, u=lambda x: QQ.zero(), v=lambda x: QQ.one())
    with pytest.raises(ZeroU):
        derive_w(data, [QQ.one()])


def test_patchwise_flags_corrupted_point():
    five = QQ.from_int(5)
    eta = table_corrupted_identity(five)
    samples = q_samples(40, 36) + [five]
    report = patchwise_exceptions(eta, "multiplicative", samples, sample_pairs(samples, 15, 37))
    assert report.inverse_exceptions == [five]
    # every exception pair touches 5: as an argument or as the product
    for x, count in report.product_exception_counts.items():
        bad_ys = [y for y in samples if eta(x * y) != eta(x) * eta(y)]
        assert len(bad_ys) == count
        assert all(x == five or y == five or x * y == five for y in bad_ys)
    assert report.product_exception_counts[five] >= len(samples) - 2


def table_corrupted_identity(bad):
    def eta(x):
        return QQ.one() if x == bad else x
    return eta


def test_patchwise_genuine_homomorphism_clean():
    samples = q_samples(50, 38)
    report = patchwise_exceptions(lambda x: x * x, "multiplicative", samples, sample_pairs(samples, 20, 39))
    assert report.clean


def test_build_kappa_flags_perturbation():
    # corrupt rho at a point where the parity twist is -1, so kappa moves
    base = builtin_example("q-parity-w", QQ)
    two = QQ.from_int(2)
    assert base.rho(two) == QQ.from_int(-2)

    def rho_bad(x):
        return two if x == two else base.rho(x)

    samples = q_samples(50, 40) + [two]
    pairs = [(two, x) for x in samples[:10]] + sample_pairs(samples[:-1], 30, 41)
    w, _ = derive_w(base, samples)
    kappa, report = build_kappa(rho_bad, w, samples, pairs)
    touched = report["additive_violations"] + report["multiplicative_violations"]
    assert touched
    assert all(two in (x, y, x + y, x * y) for x, y in touched)


def test_uv_relations_stability():
    data = builtin_example("q-parity-w", QQ)
    small = q_samples(150, 42)
    large = q_samples(300, 42)
    uv_small = {k: len(v) for k, v in verify_uv_relations(data, small).items()}
    uv_large = {k: len(v) for k, v in verify_uv_relations(data, large).items()}
    assert not any(uv_small.values())
    assert uv_small == uv_large


def test_uv_relations_flag_corruption():
    base = builtin_example("q-parity-w", QQ)
    three = QQ.from_int(3)
    data = MultMapData(
        QQ, QQ,
        rho=base.rho,
        u=lambda x: -base.u(x) if x == three else base.u(x),
        v=base.v,
    )
    samples = q_samples(60, 43) + [three]
    uv = verify_uv_relations(data, samples)
    assert three in uv["shift_u"]  # the corrupted point is reported
    assert all(x == three for x in uv["shift_u"])


def test_map_table_lookup():
    table = {QQ.from_int(k): QQ.from_int(k * k) for k in range(1, 5)}
    f = table_map(table)
    assert f(QQ.from_int(3)) == QQ.from_int(9)
    with pytest.raises(KeyError):
        f(QQ.from_int(99))


# ---------------------------------------------------------------------------
# reduced models

def model_vectors(model, count, seed):
    desc = model.desc
    dims = sum(c["dim"] for c in model.components)
    elems = ratfunc_elements(desc, count * dims, seed=seed, max_deg=2, nonzero=False)
    it = iter(elems)
    return [
        tuple(tuple(next(it) for _ in range(c["dim"])) for c in model.components)
        for _ in range(count)
    ]


def test_weight_decomposition():
    spec = ReducedModelSpec(3, (3, -6, 2))
    comps = spec.components()
    assert [(c["l"], c["n"]) for c in comps] == [(1, 1), (1, -2), (0, 2)]
    spec2 = ReducedModelSpec(2, (2, 3))
    assert [(c["l"], c["n"]) for c in spec2.components()] == [(1, 1), (0, 3)]
    with pytest.raises(BadWeight):
        ReducedModelSpec(3, (3, 3))
    with pytest.raises(BadWeight):
        ReducedModelSpec(3, (0,))


def test_single_weight_frobenius():
    # weight 3 over GF(3)(t): the map is x -> x^3 on a 3-dimensional block
    model = reduced_model(ReducedModelSpec(3, (3,)))
    vecs = model_vectors(model, 30, 44)
    scalars = ratfunc_elements(model.desc, 30, seed=45, max_deg=2)
    report = model.verify(vecs, scalars)
    assert report["additivity_violations"] == 0
    assert report["equivariance_violations"] == 0
    assert report["bijectivity_violations"] == 0
    assert report["nonlinearity_witness"] is not None


def test_negative_weight_equivariance():
    model = reduced_model(ReducedModelSpec(3, (-6,)))
    comp = model.components[0]
    assert (comp["l"], comp["n"]) == (1, -2)
    t = t_element(model.desc)
    vec = ((model.desc.one(), t, t * t),)
    a = t + model.desc.one()
    lhs = model.phi(model.act_model(a, vec))
    rhs = model.act_original(a, model.phi(vec))
    assert lhs == rhs


def test_mixed_weights_char2():
    model = reduced_model(ReducedModelSpec(2, (2, 3)))
    vecs = model_vectors(model, 25, 46)
    scalars = ratfunc_elements(model.desc, 25, seed=47, max_deg=2)
    report = model.verify(vecs, scalars)
    assert not report["additivity_violations"]
    assert not report["equivariance_violations"]
    assert not report["bijectivity_violations"]
    assert report["nonlinearity_witness"]["component"] == 0  # the l=1 block


def test_inverse_round_trip_including_fractions():
    model = reduced_model(ReducedModelSpec(3, (3, -6, 2)))
    for vec in model_vectors(model, 40, 48):
        assert model.phi_inv(model.phi(vec)) == vec


def test_linear_component_is_linear():
    model = reduced_model(ReducedModelSpec(3, (2,)))
    assert model.nonlinearity_witness() is None
    t = t_element(model.desc)
    vec = ((t,),)
    a = t * t + model.desc.one()
    assert model.phi(model.act_model(a, vec)) == tuple(a ** 2 * y for y in model.phi(vec))


def test_kappa_collision_detection():
    # squaring is 2-to-1 on Q^*: the injectivity report must fire
    samples = [QQ.from_int(k) for k in (-3, -2, 2, 3, 5)]
    kappa, report = build_kappa(lambda x: x * x, lambda x: QQ.one(), samples, [])
    assert report["injectivity_collisions"]


def test_load_map_csv(tmp_path):
    from charlab.reconstruct import load_map_csv

    path = tmp_path / "map.csv"
    path.write_text("# x, rho(x)\n2, 4\n-1/3, 1/9\n")
    table = load_map_csv(QQ, QQ, path)
    assert table[QQ.from_int(2)] == QQ.from_int(4)
    assert table[QQ.element("-1/3")] == QQ.element("1/9")
