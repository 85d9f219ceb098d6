from fillingrec.models.enums import EntryKind, FillingFamily, PolynomialFamily
from fillingrec.models.shapes import BasementShape, Diagram, parse_composition, shape_data
from fillingrec.models.fillings import AugmentedFilling

__all__ = [
    'EntryKind',
    'FillingFamily',
    'PolynomialFamily',
    'BasementShape',
    'Diagram',
    'parse_composition',
    'shape_data',
    'AugmentedFilling',
]
