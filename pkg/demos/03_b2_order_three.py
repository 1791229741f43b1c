"""An order-three symmetry on a model with a B2-type configuration.

Three elementary transformations and a relabel by an SL2 matrix that
shifts labels by two.  The induced K-theory map has order exactly three.
"""
from lcymirror import recombination
from lcymirror.bundled import load_model, load_script

model = load_model("b2_k6")
print("rays:", [list(v) for v in model.rays], " m:", list(model.m))

_, rho = load_script("b2_rho")
R = recombination(model, rho, certify=True)
R2 = R @ R
R3 = R2 @ R
print("rho   is identity:", R.is_identity())
print("rho^2 is identity:", R2.is_identity())
print("rho^3 is identity:", R3.is_identity())

_, rho3 = load_script("b2_rho3")
print("scripted rho^3 agrees:", (recombination(model, rho3).matrix == R3.matrix).all())
