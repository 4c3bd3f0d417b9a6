"""Workspaces: an algebra with optional Hopf data and named modules, and their JSON file format.

All scalars are written as strings ("3/4", "2") so that files carry exact values.
"""
import json
import logging
from dataclasses import dataclass, field
from functools import cached_property

from src.algebra import Algebra
from src.exactla import Field, Matrix
from src.exceptions import DimensionMismatch, WorkspaceError
from src.rep import AModule, projective, regular_module
from src.tensor import HopfData, symmetric_frobenius, trivial_module

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class Workspace:
    name: str
    algebra: Algebra
    hopf: HopfData = None
    pivot: Matrix = None
    frobenius_form: Matrix = None
    modules: list = field(default_factory=list)

    @property
    def field(self):
        return self.algebra.field

    @cached_property
    def projectives(self):
        """The projectives Ae_i of the listed idempotents, named P1, P2, ..."""
        A = self.algebra
        return [regular_module(A) if e == A.unit else projective(A, e, name=f'P{i + 1}')
                for i, e in enumerate(A.idempotents)]

    @property
    def all_projectives(self):
        """Indecomposable projectives followed by the regular module."""
        regular = regular_module(self.algebra)
        return self.projectives + ([] if regular in self.projectives else [regular])

    @property
    def objects(self):
        """Every named object: the unit (if Hopf), the listed modules and all projectives."""
        unit = [trivial_module(self.hopf)] if self.hopf is not None else []
        return unit + list(self.modules) + self.all_projectives

    def module(self, name):
        for module in self.objects:
            if module.name == name:
                return module
        raise KeyError(f'No module named {name} in workspace {self.name}')

    @property
    def has_frobenius_data(self):
        return self.hopf is not None and self.pivot is not None and self.frobenius_form is not None

    @cached_property
    def frob_structure(self):
        """The symmetric Frobenius structure, None without Hopf data; raises if the data is not one."""
        if not self.has_frobenius_data:
            return None
        return symmetric_frobenius(self.hopf, self.pivot, self.frobenius_form)

    def same_structure(self, other):
        A, B = self.algebra, other.algebra
        same = (A.field == B.field and A.dim == B.dim and A.labels == B.labels
                and Matrix(A.field, A.structure.reshape(A.dim, -1)) == Matrix(B.field, B.structure.reshape(B.dim, -1))
                and A.unit == B.unit and A.complete == B.complete and list(A.idempotents) == list(B.idempotents))
        if (self.hopf is None) != (other.hopf is None):
            return False
        if self.hopf is not None:
            same = same and self.hopf.coproduct == other.hopf.coproduct and \
                self.hopf.counit == other.hopf.counit and self.hopf.antipode == other.hopf.antipode
        same = same and self.pivot == other.pivot and self.frobenius_form == other.frobenius_form
        return same and len(self.modules) == len(other.modules) and all(
            M.name == N.name and [m.values.tolist() for m in M.action] == [n.values.tolist() for n in N.action]
            for M, N in zip(self.modules, other.modules))


# ===== parsing =====
def _require(block, key, location):
    if not isinstance(block, dict) or key not in block:
        raise WorkspaceError(location, f'missing field "{key}"')
    return block[key]


def _list(value, location, length=None):
    if not isinstance(value, list):
        raise WorkspaceError(location, 'expected a list')
    if length is not None and len(value) != length:
        raise WorkspaceError(location, f'expected {length} entries, got {len(value)}')
    return value


def _index(value, dim, location):
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < dim:
        raise WorkspaceError(location, f'expected a basis index in [0, {dim})')
    return value


def _scalar(fld, value, location):
    if not isinstance(value, str):
        raise WorkspaceError(location, f'scalars are written as strings, got {value!r}')
    try:
        return fld.element(value)
    except (ValueError, ZeroDivisionError) as error:
        raise WorkspaceError(location, str(error)) from error


def _vector(fld, value, dim, location):
    entries = _list(value, location, dim)
    return Matrix.column(fld, [_scalar(fld, v, f'{location}[{i}]') for i, v in enumerate(entries)])


def _row(fld, value, dim, location):
    return _vector(fld, value, dim, location).T


def _square(fld, value, dim, location):
    rows = _list(value, location, dim)
    return Matrix.from_rows(fld, [[_scalar(fld, v, f'{location}[{r}][{c}]') for c, v in
                                   enumerate(_list(row, f'{location}[{r}]', dim))] for r, row in enumerate(rows)],
                            cols=dim)


def _triples(value, dim, location):
    entries = []
    for t, entry in enumerate(_list(value, location)):
        where = f'{location}[{t}]'
        entry = _list(entry, where, 4)
        entries.append((_index(entry[0], dim, f'{where}[0]'), _index(entry[1], dim, f'{where}[1]'),
                        _index(entry[2], dim, f'{where}[2]'), entry[3]))
    return entries


def parse_workspace(data, name='workspace'):
    """Build a Workspace from the decoded JSON document.

    Raises
    ------
    WorkspaceError
        with the JSON path of the first malformed field
    """
    characteristic = _require(_require(data, 'field', '$'), 'characteristic', '$.field')
    try:
        fld = Field(characteristic)
    except (TypeError, ValueError) as error:
        raise WorkspaceError('$.field.characteristic', str(error)) from error

    block = _require(data, 'algebra', '$')
    dim = _require(block, 'dim', '$.algebra')
    if not isinstance(dim, int) or dim <= 0:
        raise WorkspaceError('$.algebra.dim', 'expected a positive integer')
    labels = _list(block.get('labels', [f'b{i}' for i in range(dim)]), '$.algebra.labels', dim)
    structure = _triples(_require(block, 'structure', '$.algebra'), dim, '$.algebra.structure')
    for t, entry in enumerate(structure):
        _scalar(fld, entry[3], f'$.algebra.structure[{t}][3]')
    unit = _vector(fld, _require(block, 'unit', '$.algebra'), dim, '$.algebra.unit')
    idempotents = [_vector(fld, e, dim, f'$.algebra.idempotents[{r}]')
                   for r, e in enumerate(_list(block.get('idempotents', []), '$.algebra.idempotents'))]
    algebra = Algebra.from_table(fld, dim, structure, unit, labels=labels, idempotents=idempotents,
                                 complete=bool(block.get('complete', False)), name=data.get('name', name))

    hopf = pivot = form = None
    if data.get('hopf') is not None:
        block = data['hopf']
        coproduct = _triples(_require(block, 'coproduct', '$.hopf'), dim, '$.hopf.coproduct')
        for t, entry in enumerate(coproduct):
            _scalar(fld, entry[3], f'$.hopf.coproduct[{t}][3]')
        counit = _row(fld, _require(block, 'counit', '$.hopf'), dim, '$.hopf.counit')
        antipode = _square(fld, _require(block, 'antipode', '$.hopf'), dim, '$.hopf.antipode')
        hopf = HopfData.from_table(algebra, coproduct, counit.values[0].tolist(), antipode.values.tolist())
        if block.get('pivot') is not None:
            pivot = _vector(fld, block['pivot'], dim, '$.hopf.pivot')
        if block.get('frobenius') is not None:
            form = _row(fld, block['frobenius'], dim, '$.hopf.frobenius')

    modules = []
    for m, entry in enumerate(_list(data.get('modules', []), '$.modules')):
        where = f'$.modules[{m}]'
        module_name = _require(entry, 'name', where)
        module_dim = _require(entry, 'dim', where)
        if not isinstance(module_dim, int) or module_dim < 0:
            raise WorkspaceError(f'{where}.dim', 'expected a non-negative integer')
        action = [_square(fld, matrix, module_dim, f'{where}.action[{i}]')
                  for i, matrix in enumerate(_list(_require(entry, 'action', where), f'{where}.action', dim))]
        try:
            modules.append(AModule(algebra, action, name=module_name))
        except DimensionMismatch as error:
            raise WorkspaceError(where, str(error)) from error

    return Workspace(algebra.name, algebra, hopf, pivot, form, modules)


def read_workspace(path):
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as error:
        raise WorkspaceError(path, f'cannot read file: {error.strerror}') from error
    except json.JSONDecodeError as error:
        raise WorkspaceError(f'{path}:{error.lineno}:{error.colno}', error.msg) from error
    return parse_workspace(data, name=path)


# ===== serialisation =====
def _strings(fld, matrix):
    return [fld.format(v) for v in matrix.values.reshape(-1).tolist()]


def _sparse(fld, values):
    """(i, j, k, "s") for the nonzero entries of an array indexed [i, j, k]."""
    return [[i, j, k, fld.format(values[i, j, k])]
            for i in range(values.shape[0]) for j in range(values.shape[1]) for k in range(values.shape[2])
            if values[i, j, k] != 0]


def workspace_to_dict(ws):
    A = ws.algebra
    fld = A.field
    data = {
        'name': ws.name,
        'field': {'characteristic': fld.characteristic},
        'algebra': {
            'dim': A.dim,
            'labels': list(A.labels),
            'structure': _sparse(fld, A.structure),
            'unit': _strings(fld, A.unit),
            'idempotents': [_strings(fld, e) for e in A.idempotents],
            'complete': A.complete,
        },
    }
    if ws.hopf is not None:
        n = A.dim
        # coproduct[j * n + k, i] -> entry (i, j, k)
        coproduct = ws.hopf.coproduct.values.reshape(n, n, n).transpose(2, 0, 1)
        data['hopf'] = {
            'coproduct': _sparse(fld, coproduct),
            'counit': _strings(fld, ws.hopf.counit),
            'antipode': ws.hopf.antipode.to_strings(),
            'pivot': None if ws.pivot is None else _strings(fld, ws.pivot),
            'frobenius': None if ws.frobenius_form is None else _strings(fld, ws.frobenius_form),
        }
    data['modules'] = [{'name': M.name, 'dim': M.dim, 'action': [matrix.to_strings() for matrix in M.action]}
                       for M in ws.modules]
    return data


def write_workspace(ws, path):
    with open(path, 'w') as f:
        json.dump(workspace_to_dict(ws), f, indent=4)
