"""From a physical double-well layout to the coupling energy and back.

The coupling gamma = G m^2/2 (1/d1 - 1/d2) grows with mass and shrinks
with separation; everything downstream only sees the resulting energy.
"""

from gravcat import ModelParams, PhysicalGeometry, evaluate, gamma_from_geometry

# dimensionless toy units: G = 1
for m in (1.0, 2.0, 4.0):
    geo = PhysicalGeometry(G=1.0, m=m, d1=1.0, d=1.0)
    gamma = gamma_from_geometry(geo)
    r = evaluate(ModelParams(omega=1.0, gamma=gamma), 0.05)
    print(f"m = {m:3.1f}: d2 = {geo.d2:.4f}, gamma = {gamma:.5f}, "
          f"steering = {r.s_ab:.5f}, concurrence = {r.concurrence:.5f}")

# pushing the second well to infinity saturates the coupling at G m^2 / (2 d1)
far = PhysicalGeometry(G=1.0, m=1.0, d1=1.0, d=1e9)
print("\nd -> infinity limit:", gamma_from_geometry(far), "(max 0.5)")
