"""Mesa sets of Stirling permutations: statistics, witnesses, counting,
the rational Dyck path bijection, and SVG rendering."""

from .counting import (
    CountReport,
    count_brute_force,
    count_closed_form,
    count_recurrence,
    count_subsets,
    enumerate_ams,
    enumerate_maximal,
    full_report,
)
from .dyck import (
    LatticePath,
    RationalDyckPath,
    area,
    delta,
    delta_inverse,
    inversions,
    is_rational_dyck,
    parse_path,
    rational_catalan,
)
from .errors import (
    EngineDisagreementError,
    ExtensionBlockedError,
    InvalidPathError,
    LengthError,
    MultisetError,
    NotAdmissibleError,
    NotCoprimeError,
    NotMaximalError,
    ResourceGuardError,
    StirlingMesasError,
    StirlingViolation,
    WrongContextError,
)
from .mesas import (
    MesaSet,
    canonical_witness,
    extend,
    is_admissible,
    make_mesa_set,
    max_mesa_count,
    minimal_mesa_floor,
    restrict,
    sharp_witness,
    truncate,
)
from .render import Styling, render_dyck, render_permutation
from .stirling import (
    StirlingPermutation,
    double_factorial,
    format_word,
    generate_all,
    has_pinnacle,
    local_minima,
    mesa_set,
    parse_word,
    validate_stirling,
)

__version__ = "0.1.0"

__all__ = [
    "CountReport",
    "EngineDisagreementError",
    "ExtensionBlockedError",
    "InvalidPathError",
    "LatticePath",
    "LengthError",
    "MesaSet",
    "MultisetError",
    "NotAdmissibleError",
    "NotCoprimeError",
    "NotMaximalError",
    "RationalDyckPath",
    "ResourceGuardError",
    "StirlingMesasError",
    "StirlingPermutation",
    "StirlingViolation",
    "Styling",
    "WrongContextError",
    "area",
    "canonical_witness",
    "count_brute_force",
    "count_closed_form",
    "count_recurrence",
    "count_subsets",
    "delta",
    "delta_inverse",
    "double_factorial",
    "enumerate_ams",
    "enumerate_maximal",
    "extend",
    "format_word",
    "full_report",
    "generate_all",
    "has_pinnacle",
    "inversions",
    "is_admissible",
    "is_rational_dyck",
    "local_minima",
    "make_mesa_set",
    "max_mesa_count",
    "mesa_set",
    "minimal_mesa_floor",
    "parse_path",
    "parse_word",
    "rational_catalan",
    "render_dyck",
    "render_permutation",
    "restrict",
    "sharp_witness",
    "truncate",
    "validate_stirling",
]
