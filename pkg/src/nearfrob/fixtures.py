"""Worked-example fixtures shipped with the package.

Presentations live in ``data/`` as DSL files.  A ``FixtureSet`` can be
pointed at another directory holding files of the same names, which is how
the CLI suite is run against deliberately broken inputs.
"""

from importlib import resources
from pathlib import Path

from . import exactmath as em
from .frobenius import frobenius_space
from .presentations import build_algebra, parse_presentation
from .schur import parse_morphism

PRESENTATIONS = [
    "two_cycle_square_zero",
    "two_cycle_one_relation",
    "triangle",
    "nongorenstein_xy",
    "nongorenstein_xyz",
    "loop_arrow",
    "dual_numbers",
    "linear_a3_square_zero",
]

# counit on k[a]/a^2 as written for the loop-and-arrow projection: eps(1)=1,
# eps(a)=0.  Its Gram matrix is singular; the nondegenerate counit whose
# dual-basis coproduct is 1(x)a + a(x)1 is eps(1)=0, eps(a)=1.
LOOP_ARROW_STATED_COUNIT = [1, 0]
LOOP_ARROW_COUNIT = [0, 1]

# counit on k[x]/x^2 with eps(x)=1; eps(1) is taken to be 0
DUAL_NUMBERS_COUNIT = [0, 1]


class FixtureSet:
    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else None
        self._algebras = {}

    def text(self, filename):
        if self.directory is not None:
            return (self.directory / filename).read_text(encoding="utf-8")
        return resources.files("nearfrob").joinpath("data", filename).read_text(encoding="utf-8")

    def presentation(self, name):
        return parse_presentation(self.text(f"{name}.quiver"), source=f"{name}.quiver")

    def algebra(self, name):
        """(presentation, algebra, basis paths), cached per set."""
        if name not in self._algebras:
            pres = self.presentation(name)
            A, paths = build_algebra(pres)
            self._algebras[name] = (pres, A, paths)
        return self._algebras[name]

    def morphism(self, filename, source, target):
        pres, A, paths = self.algebra(source)
        _, B, _ = self.algebra(target)
        return parse_morphism(self.text(filename), A, B, pres=pres, paths=paths, source=filename)

    def loop_arrow_projection(self):
        """The projection of the loop-and-arrow algebra onto k[a]/a^2, its
        coproduct family, both counits and the linear inclusion of the target."""
        _, A, _ = self.algebra("loop_arrow")
        _, B, _ = self.algebra("dual_numbers")
        phi = self.morphism("loop_arrow_to_dual.mor", "loop_arrow", "dual_numbers")
        incl = em.zeros(A.dim, B.dim)
        incl[A.index("e1")][B.index("1")] = 1
        incl[A.index("α")][B.index("α")] = 1
        return {
            "phi": phi,
            "space": frobenius_space(A),
            "stated_counit": LOOP_ARROW_STATED_COUNIT,
            "counit": LOOP_ARROW_COUNIT,
            "inclusion": incl,
        }


DEFAULT = FixtureSet()


def algebra(name):
    return DEFAULT.algebra(name)


def loop_arrow_projection():
    return DEFAULT.loop_arrow_projection()
