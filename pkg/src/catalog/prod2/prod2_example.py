"""F_2 C_2 (x) F_2^{C_2}: basis g^a p_x indexed a + 2x, with p_x the point idempotents.

g^a p_x g^b p_y = [x = y] g^(a+b) p_x, Delta(g^a p_x) = sum_{y+z=x} g^a p_y (x) g^a p_z,
epsilon(g^a p_x) = [x = 0] and S = id. As an algebra it is two copies of F_2 C_2.
"""
from src.algebra import Algebra
from src.catalog.abstract_example import Example
from src.exactla import Matrix
from src.tensor import HopfData


def _index(a, x):
    return a + 2 * x


class Prod2Example(Example):
    def __init__(self):
        super(Prod2Example, self).__init__('Prod2', 2)

    def build_algebra(self):
        entries = [(_index(a, x), _index(b, x), _index((a + b) % 2, x), 1)
                   for a in range(2) for b in range(2) for x in range(2)]
        idempotents = [Matrix.column(self.field, [1, 0, 0, 0]), Matrix.column(self.field, [0, 0, 1, 0])]
        return Algebra.from_table(self.field, 4, entries, Matrix.column(self.field, [1, 0, 1, 0]),
                                  labels=['p0', 'gp0', 'p1', 'gp1'], idempotents=idempotents, complete=True,
                                  name=self.name)

    def build_hopf(self, algebra):
        coproduct = [(_index(a, (y + z) % 2), _index(a, y), _index(a, z), 1)
                     for a in range(2) for y in range(2) for z in range(2)]
        antipode = Matrix.identity(self.field, 4).values.tolist()
        return HopfData.from_table(algebra, coproduct, [1, 1, 0, 0], antipode)

    def pivot(self, algebra):
        return algebra.unit

    def frobenius_form(self, algebra):
        # lambda(g^a p_x) = [a = 0]
        return Matrix.row(self.field, [1, 0, 1, 0])
