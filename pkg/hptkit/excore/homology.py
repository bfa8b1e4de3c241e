"""Explicit contraction of a complex onto its homology."""

import logging

from hptkit.excore.complexes import ChainComplex
from hptkit.excore.linalg import EchelonBasis, Frame, reduce_columns
from hptkit.excore.maps import GradedMap
from hptkit.excore.modules import GradedModule

logger = logging.getLogger(__name__)


def homology_contraction(c: ChainComplex):
    """A contraction ``(H, 0) ⇄ (N, d)`` with explicit ``π``, ``∇`` and ``h``.

    In each degree ``N_j = B_j ⊕ H_j ⊕ C_j`` where ``C_j`` is spanned by the pivot
    columns of ``d_j``, ``B_j`` by their boundaries and ``H_j`` by kernel vectors
    (one per free column, taken in label order) completing ``B_j`` to the cycles.
    ``h`` sends the boundary of a pivot column back to that column and kills
    ``H_j ⊕ C_j``. Homology basis elements keep the label of their free column.
    """
    from hptkit.contra.structures import Contraction

    module, d = c.module, c.d
    reductions = {
        j: reduce_columns(d.columns(j), module.labels(j), module.labels(j - 1))
        for j in module.degrees()
    }

    homology_degrees, nabla, pi, h = {}, {}, {}, {}
    for j in module.degrees():
        labels = module.labels(j)
        above = reductions.get(j + 1)
        boundaries = [(("b", p), d.column(j + 1, p)) for p in (above.pivots if above else [])]
        span = EchelonBasis(labels)
        for _, vector in boundaries:
            span.add(vector)
        cycles = []
        for free, vector in reductions[j].kernel:
            if span.add(vector):
                cycles.append((("z", free), vector))
        complement = [(("c", p), {p: 1}) for p in reductions[j].pivots]
        frame = Frame(boundaries + cycles + complement, labels, degree=j)

        homology_degrees[j] = [free for (_, free), _ in cycles]
        nabla[j] = {free: dict(vector) for (_, free), vector in cycles}
        pi[j], h[j] = {}, {}
        for label in labels:
            coordinates = frame.unit_coordinates(label)
            pi[j][label] = {tag[1]: v for tag, v in coordinates.items() if tag[0] == "z"}
            h[j][label] = {tag[1]: v for tag, v in coordinates.items() if tag[0] == "b"}
        logger.debug(
            "degree %d: %d boundaries, %d homology classes, %d complement",
            j,
            len(boundaries),
            len(cycles),
            len(complement),
        )

    homology = GradedModule(homology_degrees)
    small = ChainComplex(homology)
    return Contraction(
        M=small,
        N=c,
        pi=GradedMap(module, homology, 0, pi),
        nabla=GradedMap(homology, module, 0, nabla),
        h=GradedMap(module, module, 1, h),
    )
