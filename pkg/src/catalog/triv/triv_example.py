from src.algebra import Algebra
from src.catalog.abstract_example import Example
from src.exactla import Matrix
from src.tensor import HopfData


class TrivExample(Example):
    """The ground field Q as a one-dimensional Hopf algebra."""

    def __init__(self):
        super(TrivExample, self).__init__('Triv', 0)

    def build_algebra(self):
        unit = Matrix.column(self.field, [1])
        return Algebra.from_table(self.field, 1, [(0, 0, 0, 1)], unit, labels=['1'], idempotents=[unit],
                                  complete=True, name=self.name)

    def build_hopf(self, algebra):
        return HopfData.from_table(algebra, [(0, 0, 0, 1)], [1], [[1]])

    def pivot(self, algebra):
        return algebra.unit

    def frobenius_form(self, algebra):
        return Matrix.row(self.field, [1])
