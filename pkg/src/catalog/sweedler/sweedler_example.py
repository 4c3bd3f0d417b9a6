"""Sweedler's four-dimensional Hopf algebra over Q.

Basis g^a x^b indexed a + 2b (1, g, x, gx) with g^2 = 1, x^2 = 0 and xg = -gx.
Delta(x) = x (x) 1 + g (x) x and S(x) = -gx. The pivot g implements S^2. The
left integral x + gx has modular character alpha(g) = -1, alpha(x) = 0, so the
algebra is not unimodular and carries no symmetric Frobenius structure.
"""
from src.algebra import Algebra
from src.catalog.abstract_example import Example
from src.exactla import Matrix
from src.rep import AModule
from src.tensor import HopfData

BASIS = [(0, 0), (1, 0), (0, 1), (1, 1)]


def _index(a, b):
    return a + 2 * b


def _product(left, right):
    """g^a x^b g^c x^d = (-1)^(bc) g^(a+c) x^(b+d), or None when x^2 appears."""
    (a, b), (c, d) = left, right
    if b + d > 1:
        return None
    return (-1) ** (b * c), _index((a + c) % 2, b + d)


class SweedlerExample(Example):
    def __init__(self):
        super(SweedlerExample, self).__init__('Sweedler', 0)

    def build_algebra(self):
        entries = []
        for i, left in enumerate(BASIS):
            for j, right in enumerate(BASIS):
                product = _product(left, right)
                if product is not None:
                    entries.append((i, j, product[1], product[0]))
        idempotents = [Matrix.column(self.field, ['1/2', '1/2', 0, 0]), Matrix.column(self.field, ['1/2', '-1/2', 0, 0])]
        return Algebra.from_table(self.field, 4, entries, Matrix.column(self.field, [1, 0, 0, 0]),
                                  labels=['1', 'g', 'x', 'gx'], idempotents=idempotents, complete=True,
                                  name=self.name)

    def build_hopf(self, algebra):
        coproduct = [(0, 0, 0, 1), (1, 1, 1, 1),
                     (2, 2, 0, 1), (2, 1, 2, 1),  # x -> x (x) 1 + g (x) x
                     (3, 3, 1, 1), (3, 0, 3, 1)]  # gx -> gx (x) g + 1 (x) gx
        antipode = [[1, 0, 0, 0],
                    [0, 1, 0, 0],
                    [0, 0, 0, 1],
                    [0, 0, -1, 0]]
        return HopfData.from_table(algebra, coproduct, [1, 1, 0, 0], antipode)

    def pivot(self, algebra):
        return Matrix.column(self.field, [0, 1, 0, 0])

    def frobenius_form(self, algebra):
        return Matrix.row(self.field, [0, 0, 0, 1])

    def build_modules(self, algebra):
        # the character alpha: g -> -1, x -> 0
        action = [Matrix.from_rows(self.field, [[value]]) for value in (1, -1, 0, 0)]
        return [AModule(algebra, action, name='k_alpha')]
