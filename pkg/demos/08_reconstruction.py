"""Recovering a field isomorphism from multiplicative data, and reduced
models that absorb Frobenius factors from representation weights.

Run:  python demos/08_reconstruction.py
"""

from charlab.fields import Q
from charlab.reconstruct import ReducedModelSpec, build_kappa, builtin_example, derive_w, reduced_model, verify_uv_relations
from charlab.sampling import rational_elements, ratfunc_elements, sample_pairs

QQ = Q()
data = builtin_example("q-parity-w", QQ)
samples = rational_elements(QQ, 100, 300, seed=5, avoid=(0, -1))
print("multiplicative data over Q: rho(x) = (+-x) twisted by the 2-adic parity")
print("  defining relation rho(1+x) = u(x) + v(x) rho(x) violations:",
      len(data.check_defining_relation(samples)))

w, values = derive_w(data, samples)
print("  derived w = v/u has finite image:", sorted(str(v.payload) for v in values))

kappa, report = build_kappa(data.rho, w, samples, sample_pairs(samples, 100, 6))
print("  kappa(x) = w(x) rho(x) recovers the identity:", all(kappa(x) == x for x in samples))
print("  additive/multiplicative violations:",
      len(report["additive_violations"]), len(report["multiplicative_violations"]))
uv = verify_uv_relations(data, samples)
print("  correction-map relation exceptions:", {k: len(v) for k, v in uv.items()})

print("\nreduced model over GF(3)(t) for weights (3, -6, 2):")
model = reduced_model(ReducedModelSpec(3, (3, -6, 2)))
for c in model.components:
    print(f"  weight {c['m']:+d} = 3^{c['l']} * {c['n']:+d}  ->  block of dimension {c['dim']}")
desc = model.desc
elems = ratfunc_elements(desc, 7 * 30, seed=7, max_deg=2, nonzero=False)
it = iter(elems)
vectors = [tuple(tuple(next(it) for _ in range(c["dim"])) for c in model.components) for _ in range(30)]
scalars = ratfunc_elements(desc, 30, seed=8, max_deg=2)
rep = model.verify(vectors, scalars)
print("  additive:", rep["additivity_violations"] == 0,
      " equivariant:", rep["equivariance_violations"] == 0,
      " bijective:", rep["bijectivity_violations"] == 0)
witness = rep["nonlinearity_witness"]
print(f"  yet not linear: component {witness['component']} moves under scaling by t")
