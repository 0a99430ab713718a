"""Exact translation-length spectra of finitely generated Fuchsian groups.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface.
"""

from spectra._core import (
    Certificate,
    Element,
    GroupFileError,
    LengthEntry,
    MoebiusMatrix,
    NumberField,
    PrecisionCapReached,
    __version__,
    bezout_pair,
    build_report,
    certify_pair,
    classify,
    denominator_bound,
    density_report,
    enumerate_words,
    find_independent_pair,
    load_group,
    membership,
    norm_filter,
    radical_degree,
    root_bound,
    trace_field,
    translation_length,
    verify_report,
    weil_height,
)

__all__ = [
    "Certificate",
    "Element",
    "GroupFileError",
    "LengthEntry",
    "MoebiusMatrix",
    "NumberField",
    "PrecisionCapReached",
    "__version__",
    "bezout_pair",
    "build_report",
    "certify_pair",
    "classify",
    "denominator_bound",
    "density_report",
    "enumerate_words",
    "find_independent_pair",
    "load_group",
    "membership",
    "norm_filter",
    "radical_degree",
    "root_bound",
    "trace_field",
    "translation_length",
    "verify_report",
    "weil_height",
]
