"""The k = 8 model: a loop of moves with an infinite-order K-theory shadow.

Three elementary transformations followed by a rotation of labels give a
closed loop.  Its eighth power is compactly supported: it only moves classes
supported away from the boundary.  On K(U) it acts unipotently.
"""
from lcymirror import compact_support_check, qbar, recombination, restrict_to_U
from lcymirror import lattice as la
from lcymirror.bundled import load_model, load_script

model = load_model("k8")
print("Q-bar of k8:", qbar(model))

_, gen = load_script("k8_generator")
A = recombination(model, gen, certify=True)
print("generator compactly supported:", compact_support_check(A))

_, gen8 = load_script("k8_generator_8")
A8 = recombination(model, gen8, certify=True)
print("8th power compactly supported:", compact_support_check(A8))
print("8th power is the identity    :", A8.is_identity())

N = A8.matrix - la.identity(A8.matrix.shape[0])
print("(A^8 - I)^2 == 0:", not N.dot(N).any(), "  (A^8 - I)^3 == 0:", not N.dot(N).dot(N).any())
print("restriction to K(U):")
for row in la.as_int_list(restrict_to_U(A8)):
    print("   ", row)
