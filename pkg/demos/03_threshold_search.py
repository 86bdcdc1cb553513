"""Locate the boundaries where a correlation measure vanishes.

Bisection on the zero set: the swept quantities have kinks where the
max{0, .} clamp activates, so a bracketing search is the robust tool.
"""

from gravcat import ThresholdQuery, find_threshold

queries = [
    ("steering death in T (gamma = omega = 0.5)",
     ThresholdQuery(quantity="s_ab", axis="T", lo=0.05, hi=1.0,
                    fixed={"gamma": 0.5, "omega": 0.5}, tolerance=1e-5)),
    ("steering death in T (gamma = 2, omega = 1)",
     ThresholdQuery(quantity="s_ab", axis="T", lo=0.05, hi=1.0,
                    fixed={"gamma": 2.0, "omega": 1.0}, tolerance=1e-5)),
    ("concurrence death in T (gamma = 2, omega = 1)",
     ThresholdQuery(quantity="concurrence", axis="T", lo=0.5, hi=3.0,
                    fixed={"gamma": 2.0, "omega": 1.0}, tolerance=1e-5)),
    ("steering boundary in gamma (T = 0.1, omega = 1)",
     ThresholdQuery(quantity="s_ab", axis="gamma", lo=1.0, hi=10.0,
                    fixed={"T": 0.1, "omega": 1.0}, tolerance=1e-5,
                    direction="vanishing")),
    ("steering onset in omega (T = 0.1, gamma = 1)",
     ThresholdQuery(quantity="s_ab", axis="omega", lo=0.1, hi=1.0,
                    fixed={"T": 0.1, "gamma": 1.0}, tolerance=1e-5,
                    direction="onset")),
]

for name, query in queries:
    print(f"{name}: {find_threshold(query):.5f}")
