"""Images of idempotent-like chain endomorphisms as subcomplexes."""

from typing import NamedTuple

from hptkit.errors import ContractViolation, StructureError
from hptkit.excore.complexes import ChainComplex
from hptkit.excore.linalg import EchelonBasis
from hptkit.excore.maps import GradedMap, add_scaled
from hptkit.excore.modules import GradedModule
from hptkit.reports import Report, identity_check


class ImageData(NamedTuple):
    """The image ``tN`` with its inclusion and restricted differential.

    Basis vectors of the image are the reduced column echelon basis of ``t`` in each
    degree; each is labelled by the basis element of ``N`` at its pivot.
    """

    module: GradedModule
    inclusion: GradedMap
    differential: GradedMap

    @property
    def complex(self) -> ChainComplex:
        return ChainComplex(self.module, self.differential)

    def coordinates(self, j: int, vector: dict) -> dict:
        """Coordinates of a vector of ``N`` lying in the image; raises if it does not."""
        coordinates = {}
        residual = dict(vector)
        for label in self.module.labels(j):
            value = residual.get(label)
            if value:
                coordinates[label] = value
                add_scaled(residual, -value, self.inclusion.column(j, label))
        if residual:
            raise ContractViolation(f"vector in degree {j} does not lie in the image")
        return coordinates

    def corestrict(self, f: GradedMap) -> GradedMap:
        """``f`` with its target cut down to the image, which must contain its range."""
        if f.target != self.inclusion.target:
            raise StructureError("can only corestrict maps into the ambient module")
        blocks = {}
        for j in f.source.degrees():
            target_degree = j + f.degree
            blocks[j] = {
                label: self.coordinates(target_degree, vector)
                for label, vector in f.columns(j).items()
            }
        return GradedMap(f.source, self.module, f.degree, blocks)


def image_subcomplex(c: ChainComplex, t: GradedMap) -> ImageData:
    """The subcomplex ``tN`` of ``c`` for a degree 0 chain endomorphism ``t``."""
    if t.degree != 0 or t.source != c.module or t.target != c.module:
        raise StructureError("image_subcomplex expects a degree 0 endomorphism of the complex")
    report = Report(subject="image")
    report.add(identity_check("chain-t", "d∘t = t∘d", c.d @ t - t @ c.d))
    if not report.passed:
        raise ContractViolation("t is not a chain map", report=report)

    degrees, inclusion = {}, {}
    for j in c.module.degrees():
        basis = EchelonBasis(c.module.labels(j))
        for vector in t.columns(j).values():
            basis.add(vector)
        pivots = basis.basis()
        if pivots:
            degrees[j] = [pivot for pivot, _ in pivots]
            inclusion[j] = dict(pivots)
    module = GradedModule(degrees)
    inclusion_map = GradedMap(module, c.module, 0, inclusion)
    data = ImageData(module, inclusion_map, GradedMap.zero(module, module, -1))
    restricted = {
        j: {
            label: data.coordinates(j - 1, c.d.apply(j, vector))
            for label, vector in inclusion[j].items()
        }
        for j in inclusion
    }
    return data._replace(differential=GradedMap(module, module, -1, restricted))
