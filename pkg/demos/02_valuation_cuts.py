# Convex valuation rings of k((G)) cut out by a single element, and the
# witnesses that certify elements outside the ring.
# Run: python3 demos/02_valuation_cuts.py

# %%
from ordval import parse_group_expr
from ordval.defval import CaseTag, make_cut, member_Os, os_violation_witness, verify_violation
from ordval.dsl import parse_series_expr
from ordval.series import DeclaredRealClosed, PlainRationals

Q = PlainRationals()
Z = parse_group_expr("Z")

# %% discrete value group: the cut sits halfway between 0 and t
cut = make_cut(Q, Z, CaseTag.DISCRETE)
print("cut:", cut)
for text in ["3 + t", "t^(-1)", "5*t^(-2) + 1", "0"]:
    x = parse_series_expr(text, Q, Z)
    line = f"  {text:14} in O: {member_Os(x, cut)}"
    if not member_Os(x, cut):
        w = os_violation_witness(x, cut)
        line += f"   multiplier {w.multiplier}, verified {verify_violation(x, cut, w)}"
    print(line)

# %% residue field cut at sqrt(2) over the rationals
rcut = make_cut(Q, Z, CaseTag.RESIDUE_LIMIT_POINT)
x = parse_series_expr("1/2", Q, Z)
w = os_violation_witness(x, rcut)
print("\nresidue cut", rcut, "| 1/2 ->", "shift", w.shift, "verified", verify_violation(x, rcut, w))

# %% group limit point: A + A with real closed coefficients
AA = parse_group_expr("lex(loc{2}, loc{2})")
RC = DeclaredRealClosed(Q)
gcut = make_cut(RC, AA, CaseTag.GROUP_LIMIT_POINT)
x = parse_series_expr("t^({2: -1})", RC, AA)
w = os_violation_witness(x, gcut)
print("\nlimit point cut", gcut, "| multiplier", w.multiplier, "verified", verify_violation(x, gcut, w))
