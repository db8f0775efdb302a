"""
Running every verification pipeline
===================================

Same as ``braidforge paper verify-all --format text``.
"""

from braidforge.report import verify_all

report = verify_all(k_max=5)
print(report.to_text().splitlines()[-1])
failed = [c for c in report.checks if not c.passed]
for c in failed:
    print("FAIL", c.name, c.params, c.expected, c.computed)
