#!/usr/bin/env python3
"""Survey the surface catalog: invariants, form classes, homeomorphism classes."""

from collections import defaultdict

from surftop.classification import describe
from surftop.surfaces import catalog, compute_invariants, intersection_form_class


def main() -> int:
    entries = catalog()
    print(f"{'name':10s} {'c1^2':>5} {'c2':>4} {'spin':>5} {'b2':>4} {'sigma':>6} "
          f"{'parity':>7} {'b+':>3} {'chi':>4}  form class")
    for s in entries:
        inv = compute_invariants(s)
        cls = describe(intersection_form_class(s))
        print(
            f"{s.name:10s} {s.c1_sq:>5} {s.c2:>4} {str(s.spin):>5} {inv.b2:>4} "
            f"{inv.sigma:>6} {inv.parity.value:>7} {inv.b_plus:>3} {inv.chi_holo:>4}  {cls}"
        )

    groups = defaultdict(list)
    for s in entries:
        inv = compute_invariants(s)
        groups[(inv.b2, inv.sigma, inv.parity.value)].append(s.name)

    print("\nhomeomorphism classes (b2, sigma, parity):")
    for key in sorted(groups):
        members = ", ".join(groups[key])
        print(f"  {key}: {members}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
