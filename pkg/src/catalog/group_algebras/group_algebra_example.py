"""Group algebras kG with Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^-1, pivot 1 and lambda(g) = [g = 1]."""

from src.algebra import Algebra
from src.catalog.abstract_example import Example
from src.exactla import Matrix
from src.rep import AModule, submodule
from src.tensor import HopfData


class GroupAlgebraExample(Example):
    """kG for a finite group given by its elements, identity first."""

    def __init__(self, name, characteristic, elements, labels, multiply, idempotents):
        super(GroupAlgebraExample, self).__init__(name, characteristic)
        self.elements = list(elements)
        self.labels = list(labels)
        self.multiply = multiply
        self.idempotent_coefficients = idempotents
        self.index = {g: i for i, g in enumerate(self.elements)}

    def invert(self, g):
        identity = self.elements[0]
        return next(h for h in self.elements if self.multiply(g, h) == identity)

    def build_algebra(self):
        n = len(self.elements)
        entries = [(i, j, self.index[self.multiply(g, h)], 1)
                   for i, g in enumerate(self.elements) for j, h in enumerate(self.elements)]
        unit = Matrix.column(self.field, [1] + [0] * (n - 1))
        idempotents = [Matrix.column(self.field, e) for e in self.idempotent_coefficients]
        return Algebra.from_table(self.field, n, entries, unit, labels=self.labels, idempotents=idempotents,
                                  complete=True, name=self.name)

    def build_hopf(self, algebra):
        n = algebra.dim
        antipode = [[0] * n for _ in range(n)]
        for i, g in enumerate(self.elements):
            antipode[self.index[self.invert(g)]][i] = 1
        return HopfData.from_table(algebra, [(i, i, i, 1) for i in range(n)], [1] * n, antipode)

    def pivot(self, algebra):
        return algebra.unit

    def frobenius_form(self, algebra):
        return Matrix.row(self.field, [1] + [0] * (algebra.dim - 1))

    def representation(self, algebra, rho, name):
        """The module with b_g acting by the matrix rows ``rho(g)``."""
        return AModule(algebra, [Matrix.from_rows(self.field, rho(g)) for g in self.elements], name=name)


# ===== cyclic groups =====
def _cyclic(n):
    return dict(elements=range(n), labels=['1', 'g'] + [f'g^{a}' for a in range(2, n)],
                multiply=lambda a, b: (a + b) % n)


class GrpF2C2Example(GroupAlgebraExample):
    def __init__(self):
        super(GrpF2C2Example, self).__init__('GrpF2C2', 2, idempotents=[[1, 0]], **_cyclic(2))


class GrpF3C3Example(GroupAlgebraExample):
    """F_3 C_3 with the 2-dimensional Jordan block module J2."""

    def __init__(self):
        super(GrpF3C3Example, self).__init__('GrpF3C3', 3, idempotents=[[1, 0, 0]], **_cyclic(3))

    def build_modules(self, algebra):
        return [self.representation(algebra, lambda a: [[1, a], [0, 1]], 'J2')]


class GrpQC2Example(GroupAlgebraExample):
    def __init__(self):
        super(GrpQC2Example, self).__init__('GrpQC2', 0, idempotents=[['1/2', '1/2'], ['1/2', '-1/2']],
                                            **_cyclic(2))

    def build_modules(self, algebra):
        return [self.representation(algebra, lambda a: [[(-1) ** a]], 'sign')]


# ===== symmetric group on three letters =====
def _compose(g, h):
    """(gh)(i) = g(h(i)) for permutations stored as image tuples."""
    return tuple(g[h[i]] for i in range(len(h)))


def _sign(g):
    inversions = sum(1 for i in range(len(g)) for j in range(i + 1, len(g)) if g[i] > g[j])
    return -1 if inversions % 2 else 1


S3_ELEMENTS = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
S3_LABELS = ['1', '(01)', '(02)', '(12)', '(012)', '(021)']


class GrpF3S3Example(GroupAlgebraExample):
    """F_3 S_3; e+ = 2 + 2s and e- = 2 + s for s = (01) split it into two projectives of dimension 3."""

    def __init__(self):
        super(GrpF3S3Example, self).__init__('GrpF3S3', 3, S3_ELEMENTS, S3_LABELS, _compose,
                                             idempotents=[[2, 2, 0, 0, 0, 0], [2, 1, 0, 0, 0, 0]])

    def build_modules(self, algebra):
        sign = self.representation(algebra, lambda g: [[_sign(g)]], 'sign')

        def permutation_matrix(g):
            rows = [[0] * 3 for _ in range(3)]
            for i in range(3):
                rows[g[i]][i] = 1
            return rows

        perm = self.representation(algebra, permutation_matrix, 'perm')
        std = submodule(perm, Matrix.from_rows(self.field, [[1, 0], [-1, 1], [0, -1]]), name='std')
        return [sign, perm, std]
