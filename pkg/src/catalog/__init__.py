from .group_algebras.group_algebra_example import GrpF2C2Example, GrpF3C3Example, GrpF3S3Example, GrpQC2Example
from .path_a2.path_a2_example import PathA2Example
from .prod2.prod2_example import Prod2Example
from .sweedler.sweedler_example import SweedlerExample
from .triv.triv_example import TrivExample

CATALOG_NAMES = ['Triv', 'GrpF2C2', 'GrpF3C3', 'GrpF3S3', 'GrpQC2', 'PathA2', 'Sweedler', 'Prod2']


def get_example_from_name(name):
    if name == 'Triv':
        return TrivExample()
    if name == 'GrpF2C2':
        return GrpF2C2Example()
    if name == 'GrpF3C3':
        return GrpF3C3Example()
    if name == 'GrpF3S3':
        return GrpF3S3Example()
    if name == 'GrpQC2':
        return GrpQC2Example()
    if name == 'PathA2':
        return PathA2Example()
    if name == 'Sweedler':
        return SweedlerExample()
    if name == 'Prod2':
        return Prod2Example()
    raise ValueError(f'Unknown catalog example {name}, choose one of {", ".join(CATALOG_NAMES)}')
