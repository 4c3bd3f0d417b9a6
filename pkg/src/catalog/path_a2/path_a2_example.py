from src.algebra import Algebra
from src.catalog.abstract_example import Example
from src.exactla import Matrix
from src.rep import AModule

# E_ij E_jk = E_ik on the basis E11, E12, E22
PATH_A2_PRODUCTS = [(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)]


class PathA2Example(Example):
    """Upper triangular 2 x 2 matrices over Q; not Frobenius and without Hopf data."""

    def __init__(self):
        super(PathA2Example, self).__init__('PathA2', 0)

    def build_algebra(self):
        entries = [(i, j, k, 1) for i, j, k in PATH_A2_PRODUCTS]
        idempotents = [Matrix.column(self.field, [1, 0, 0]), Matrix.column(self.field, [0, 0, 1])]
        return Algebra.from_table(self.field, 3, entries, Matrix.column(self.field, [1, 0, 1]),
                                  labels=['E11', 'E12', 'E22'], idempotents=idempotents, complete=True,
                                  name=self.name)

    def build_modules(self, algebra):
        def simple(position):
            return AModule(algebra, [Matrix.from_rows(self.field, [[1 if i == position else 0]]) for i in range(3)],
                           name=f'S{1 if position == 0 else 2}')

        return [simple(0), simple(2)]
