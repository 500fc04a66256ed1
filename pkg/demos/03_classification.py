# Classification reports for the catalog, plus the square-root formula.
# Run: python3 demos/03_classification.py

# %%
from ordval.catalog import CATALOG
from ordval.classify import classify_report
from ordval.defval import phi_holds, phi_witness
from ordval.dsl import parse_field, parse_group_expr, parse_series_expr

# %% one full report
print(classify_report(parse_field("RC(Q)"), parse_group_expr("omega(prefixprimes)")).render())

# %% a compact table over the catalog
print(f"{'name':12} {'v0 value group':32} lr_def  nip")
for name, G in CATALOG.items():
    r = classify_report(None, G)
    ok, p = r.v0_lr_definable
    print(f"{name:12} {str(r.v0.value_group):32} {('p=%d' % p) if ok else '-':7} {r.strongly_nip_witnessed}")

# %% squares: over Q(sqrt 2) the leading coefficient decides
k, G = parse_field("Q(sqrt(2))"), parse_group_expr("Q")
x = parse_series_expr("2*t^(1/3) + t", k, G)
r = phi_witness(x, 3)
print("\nx =", x, "| phi:", phi_holds(x))
print("y =", r.terms, "| x - y^2 =", x - r.terms * r.terms)
print("over Q, 2 is positive but phi(2) =", phi_holds(parse_series_expr("2", parse_field("Q"), G)))
