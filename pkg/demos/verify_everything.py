"""Run the full identity registry and print the per-check report.

Equivalent to `bianchiq verify --all --seed 7 --format text`.
"""

from bianchiq.identities import VerifyConfig, run_all

report = run_all(VerifyConfig(series_order=30, samples=20, seed=7))
print(report.to_text())
print(f"elapsed {report.elapsed_ms:.0f} ms")
raise SystemExit(0 if report.all_passed() else 1)
