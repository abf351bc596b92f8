"""
Recompute all nine reference examples
=====================================
"""
import time

from picardcm.reference import load_examples, verify_example

t0 = time.perf_counter()
for rec in load_examples().values():
    r = verify_example(rec)
    print(rec.example_id, "PASS" if r.passed else "FAIL", r.certificate.N_mu)
print(f"{time.perf_counter() - t0:.1f}s")
