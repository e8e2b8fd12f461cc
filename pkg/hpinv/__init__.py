# Bi-Lipschitz polar invariant package
