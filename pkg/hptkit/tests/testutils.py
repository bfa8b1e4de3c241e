"""Small hand-made complexes and structures shared by the tests."""

from fractions import Fraction

from hptkit.contra.structures import Contraction, Pseudocontraction
from hptkit.excore import ChainComplex, GradedMap, GradedModule
from hptkit.perturb.kit import Perturbation


def module(**degrees) -> GradedModule:
    """``module(d0=["a"], d1=["b"])`` builds a module with labels per degree."""
    return GradedModule({int(key[1:]): labels for key, labels in degrees.items()})


def graded_map(source, target, degree, *entries) -> GradedMap:
    return GradedMap.from_entries(source, target, degree, entries)


def standard_contraction() -> Contraction:
    """``N = <b> ⊕ <a, c>`` with ``d b = c``, contracted onto ``M = <a>`` by ``h c = b``."""
    n = module(d0=["a", "c"], d1=["b"])
    m = module(d0=["a"])
    big = ChainComplex(n, graded_map(n, n, -1, ("b", "c", 1)))
    small = ChainComplex(m)
    return Contraction(
        M=small,
        N=big,
        pi=graded_map(n, m, 0, ("a", "a", 1)),
        nabla=graded_map(m, n, 0, ("a", "a", 1)),
        h=graded_map(n, n, 1, ("c", "b", 1)),
    )


def standard_perturbation(c: Contraction = None) -> Perturbation:
    """``∂ b = 2a`` on the big complex of ``standard_contraction``."""
    c = c or standard_contraction()
    n = c.N.module
    return Perturbation(c.N, graded_map(n, n, -1, ("b", "a", 2)))


def cone(scale=1) -> tuple[Contraction, Perturbation]:
    """The acyclic complex ``e1 -> e0`` contracted to zero, perturbed by ``∂ e1 = scale·e0``."""
    n = module(d0=["e0"], d1=["e1"])
    zero = GradedModule.zero()
    big = ChainComplex(n, graded_map(n, n, -1, ("e1", "e0", 1)))
    contraction = Contraction(
        M=ChainComplex(zero),
        N=big,
        pi=GradedMap.zero(n, zero, 0),
        nabla=GradedMap.zero(zero, n, 0),
        h=graded_map(n, n, 1, ("e0", "e1", 1)),
    )
    return contraction, Perturbation(big, graded_map(n, n, -1, ("e1", "e0", Fraction(scale))))


def doubled_pseudocontraction() -> Pseudocontraction:
    """``d e1 = 2 e0`` with ``h e0 = e1``, so that ``dh + hd = 2``."""
    n = module(d0=["e0"], d1=["e1"])
    big = ChainComplex(n, graded_map(n, n, -1, ("e1", "e0", 2)))
    return Pseudocontraction(N=big, tau=GradedMap.scalar(n, 2), h=graded_map(n, n, 1, ("e0", "e1", 1)))
