"""Analytic compute accounting across the three pipeline variants.

Exact parameter counts and per-iteration matmul FLOPs (batch 1,
multiply-accumulate counted as 2) at the reported scale and at the
desk scale this repository actually trains.

Run:  python3 demos/06_cost_model.py
"""
from stamp.analysis import ARCH_PRESETS, cost_table, count_cost

print("reported scale:")
print(cost_table(["mae-paper", "siammae-paper", "stamp-paper"]))
print("\ndesk scale:")
print(cost_table(["mae-desk", "siammae-desk", "stamp-desk"]))

print("\nstamp-paper parameter breakdown:")
cost = count_cost(ARCH_PRESETS["stamp-paper"])
for part, n in cost["params"].items():
    if part != "total":
        print(f"  {part:<16} {n / 1e6:>8.2f}M")
print(f"  {'total':<16} {cost['params']['total'] / 1e6:>8.2f}M")

print("\nstamp-paper FLOP breakdown (one iteration, batch 1):")
for part, n in cost["flops"].items():
    if part != "total":
        print(f"  {part:<16} {n / 1e9:>8.2f}G")
print(f"  {'total':<16} {cost['flops']['total'] / 1e9:>8.2f}G")

siam = count_cost(ARCH_PRESETS["siammae-paper"])
stamp = cost
gap = (stamp["flops"]["total"] - siam["flops"]["total"]) / siam["flops"]["total"]
print(f"\nstochastic components add {gap * 100:.3f}% FLOPs over the plain "
      f"two-branch pipeline")
