"""Co-slicings, co-t-structures and co-stability conditions on D^b of the Kronecker algebra."""

from .core_category import (
    DObject,
    Preinjective,
    Preprojective,
    Regular,
    ShiftedIndec,
    ar_translate,
    dim_vector,
    euler_form,
    hom_dim,
    hom_dim_obj,
    k0_class,
    n_object,
    standard_triangle,
)
from .window import WindowConfig

__version__ = "0.1.0"

__all__ = [
    "DObject",
    "Preinjective",
    "Preprojective",
    "Regular",
    "ShiftedIndec",
    "WindowConfig",
    "ar_translate",
    "dim_vector",
    "euler_form",
    "hom_dim",
    "hom_dim_obj",
    "k0_class",
    "n_object",
    "standard_triangle",
]
