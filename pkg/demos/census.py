"""
Checking every small algebra
============================

The census enumerates each algebra once up to rotation and runs every
registered check against the brute-force module calculus.
"""

from nakayama.census import CHECKS, CensusConfig, verify_all

report = verify_all(CensusConfig(n_max=5, c_max=7))
print("algebras:", report["algebras_checked"], report["algebras_per_n"])
print("failures:", report["failures"], "skips:", report["skips"])
for name in CHECKS:
    c = report["checks"][name]
    print(f"  {name:32s} pass {c['passes']:4d}  n/a {c['inapplicable']:4d}")
