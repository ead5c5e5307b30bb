"""Certified pairs of generating triples, one per residue class mod 14.

For each class the construction assembles two maps of the same degree
whose generator fixed-point counts differ in every coordinate, then
certifies (a) that each triple generates the full alternating group --
via a useful cycle of prime length, coprime to every other cycle length
of w -- and (b) that no power of a generator on one side is conjugate to
a power on the other.  Certificates embed the raw permutations and
re-verify offline.
"""

import json

from beauville.certify import certificate_to_json, certify_dhb, verify_certificate
from beauville.construct import minimal_plan

print(" r  variant       degree  prime  v1            v2            reverified")
for r in range(14):
    plan = minimal_plan(r)
    cert = certify_dhb(plan)
    text = certificate_to_json(cert)
    ok = verify_certificate(text)
    v1 = cert.pair.w1.fixed_point_vector().as_tuple()
    v2 = cert.pair.w2.fixed_point_vector().as_tuple()
    print(
        f"{r:2d}  {plan.variant:12s} {cert.n:6d} {cert.pair.prime:6d}  "
        f"{str(v1):13s} {str(v2):13s} {ok}"
    )

print()
cert = certify_dhb(minimal_plan(0))
doc = json.loads(certificate_to_json(cert))
print("a certificate is a plain JSON document; its top-level keys:")
print(" ", sorted(doc))
print("the smallest degree this toolkit certifies is 246 (class 8, stockless):")
from beauville.construct import ConstructionPlan

small = certify_dhb(ConstructionPlan(8, 3, "small_n"))
print("  n =", small.n, "| prime =", small.pair.prime, "| Beauville:", small.beauville.passed)
