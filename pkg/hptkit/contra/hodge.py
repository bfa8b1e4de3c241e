"""The Hodge decomposition ``N = ∇M ⊕ (boundaries) ⊕ (h-images)`` of a contraction."""

from hptkit.contra.structures import Contraction
from hptkit.excore.linalg import EchelonBasis, rank, reduce_columns
from hptkit.reports import Report, boolean_check, identity_check


def _harmonic_basis(c: Contraction, j: int) -> list[dict]:
    """A basis of ``ker h_j ∩ ker d_j``, the kernel of ``N_j -> N_{j+1} ⊕ N_{j-1}``."""
    module, d, h = c.N.module, c.N.d, c.h
    rows = [("h", label) for label in module.labels(j + 1)]
    rows += [("d", label) for label in module.labels(j - 1)]
    columns = {}
    for label in module.labels(j):
        stacked = {("h", row): value for row, value in h.column(j, label).items()}
        stacked.update({("d", row): value for row, value in d.column(j, label).items()})
        columns[label] = stacked
    return [vector for _, vector in reduce_columns(columns, module.labels(j), rows).kernel]


def hodge_decomposition_check(c: Contraction) -> Report:
    """Check per degree that boundaries, harmonic elements and ``h``-images split ``N``."""
    report = Report(subject="hodge-decomposition")
    module, d, h = c.N.module, c.N.d, c.h
    report.add(identity_check("small-differential", "d_M = 0", c.M.d, windowed=False))
    for j in module.degrees():
        labels = module.labels(j)
        boundaries = list(d.columns(j + 1).values())
        h_boundaries = [h.apply(j - 1, vector) for vector in d.columns(j).values()]
        harmonic = _harmonic_basis(c, j)
        spanned = EchelonBasis(labels)
        for vector in boundaries + harmonic + h_boundaries:
            spanned.add(vector)
        dims = {
            "boundaries": rank(boundaries, labels),
            "harmonic": len(harmonic),
            "h_boundaries": rank(h_boundaries, labels),
            "dimension": len(labels),
            "sum_rank": spanned.rank,
        }
        total = dims["boundaries"] + dims["harmonic"] + dims["h_boundaries"]
        report.add(
            boolean_check(
                f"hodge-split[{j}]",
                f"N_{j} = d N_{j + 1} ⊕ (ker h ∩ ker d) ⊕ h d N_{j}",
                total == len(labels) and spanned.rank == len(labels),
                degree=j,
                **dims,
            )
        )
    return report
