"""Joining maps along handles.

A (k)-handle is a pair of fixed points a, b of the involution with
b = a(xy)^k; joining two maps pairs their handles into new 2-cycles of x
and leaves everything else alone.  On the tracking permutation w = xyt
the effect is a clean merge of cycles, which is what the whole
generation argument rides on.
"""

from beauville.atlas import basic_map
from beauville.compose import eval_expr, k_compose, merge_law_check, pick_handle, self_join

print("== two copies of the 42-point map with three handles")
g = basic_map("G")
print("one copy: w-cycles", list(g.w_cycles.lengths()))
gg = eval_expr("G(1)G")
print("joined:   w-cycles", list(gg.w_cycles.lengths()))
print("          (the two fixed points pair up, two 13-cycles concatenate)")

print()
print("== the degree-210 marker L(2)M")
lm = eval_expr("L(2)M")
print("w-cycles:", list(lm.w_cycles.lengths()))
print("fixed point vector:", lm.fixed_point_vector().as_tuple())
print("primes dividing cycle lengths:", sorted(lm.prime_set()))

print()
print("== the merge law, machine-checked")
left, right = basic_map("L"), basic_map("M")
h1, h2 = pick_handle(left, 2), pick_handle(right, 2)
res = k_compose(left, h1, right, h2)
verdict = merge_law_check(left, h1, right, h2, res)
print("case:", verdict.case, "| verified:", verdict.ok)

print()
print("== genus from self-joins")
m = eval_expr("G(1)G")
for step in (1, 2):
    m = self_join(m, *m.find_handles(1)[:2])
    print(f"after internal join {step}: degree {m.n}, genus {m.genus()}")
