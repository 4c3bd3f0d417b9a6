import logging

from src.exactla import Field
from src.workspace import Workspace

logger = logging.getLogger(__name__)


class Example:
    """A named catalog workspace.

    Subclasses implement ``build_algebra``; the other hooks default to an
    algebra without Hopf data or extra modules.
    """

    def __init__(self, name, characteristic):
        self.name = name
        self.field = Field(characteristic)
        self.workspace = None

    def build_algebra(self):
        raise NotImplementedError

    def build_hopf(self, algebra):
        return None

    def pivot(self, algebra):
        return None

    def frobenius_form(self, algebra):
        return None

    def build_modules(self, algebra):
        return []

    def get_workspace(self):
        """Return the workspace, building it on first access"""
        if self.workspace is None:
            logger.info(f'Building catalog workspace {self.name} over {self.field}')
            algebra = self.build_algebra()
            hopf = self.build_hopf(algebra)
            self.workspace = Workspace(self.name, algebra, hopf, self.pivot(algebra), self.frobenius_form(algebra),
                                       self.build_modules(algebra))
        return self.workspace
