"""Walk around the pentagon: five elementary transformations and relabels.

The pentagon model has five rays, two interior blow-ups and trivial
Q-bar.  Repeating "shear, then rotate the labels" five times returns to the
starting fan, and the induced map on K-theory is the identity.
"""
from lcymirror import lattice as la
from lcymirror import diagram_from_model, picard, qbar, recombination, run_script, total_monodromy
from lcymirror.bundled import load_model, load_script
from lcymirror.moves import compose

model = load_model("pentagon")
print("rays      :", [list(v) for v in model.rays])
print("n         :", list(model.n))
print("m         :", list(model.m))
print("Picard    :", picard(model).rank, " Q-bar:", qbar(model))

_, moves = load_script("pentagon")
models, transitions = run_script(model, moves)
for step, (mv, m2) in enumerate(zip(moves, models[1:])):
    dg = diagram_from_model(m2)
    print(f"step {step}: {type(mv).__name__:<10} trace of monodromy = {total_monodromy(dg).trace()}"
          f"  nodes = {[nd.direction for nd in dg.nodes]}")

T = compose(transitions)
print("closed loop:", models[-1] == model)
print("Picard transition is the identity:", la.is_identity(T.matrix))
A = recombination(model, moves, certify=True)
print("K-theory map is the identity:", A.is_identity())
