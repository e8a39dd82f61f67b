#!/usr/bin/env python3
"""Run the full acceptance suite end to end and print one line per check.

Covers the primary curve over F_13, a second curve over F_17 found by scan,
and exact-rational spot lifts; exits nonzero on any failure.
"""

import sys
import time

from jaccube.curve import curve_from_coeffs
from jaccube.field import QQ, PrimeField
from jaccube.verify import find_curve_by_scan, full_acceptance, q_spot_lift_report


def main() -> int:
    t0 = time.time()
    ok = True

    f13 = curve_from_coeffs(PrimeField(13), (0, -1, 0, 0, 0), (0, 1, 12))
    print(f"# primary curve: {f13}")
    rep = full_acceptance(f13)
    for line in rep.lines():
        print(line)
    ok = ok and rep.ok

    f17 = find_curve_by_scan(PrimeField(17))
    print(f"# robustness curve (found by scan): {f17}")
    rep17 = full_acceptance(f17, include_identities=False)
    for line in rep17.lines():
        print(line)
    ok = ok and rep17.ok

    q = curve_from_coeffs(QQ, (0, -1, 0, 0, 0), (0, 1, -1))
    print(f"# exact-rational spot lifts: {q}")
    repq = q_spot_lift_report(q)
    for line in repq.lines():
        print(line)
    ok = ok and repq.ok

    print(f"# total time: {time.time() - t0:.1f}s")
    print("# RESULT:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
