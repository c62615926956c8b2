"""Dyck-word factorization and the distribution of divisors."""

__version__ = "0.1.0"

from .classes import ClassWordBundle, hooley_class, is_regular, lambda_class, right_limit_class
from .divisors import (
    DivisorProfile,
    class_word_of_int,
    delta,
    delta_bruteforce,
    delta_grid_oracle,
    divisor_list,
    divisors,
    is_densely_divisible,
    is_densely_divisible_sweep,
    is_densely_divisible_via_word,
)
from .numerics import (
    PositiveSet,
    Tag,
    format_rational,
    make_rational,
    next_singular_above,
    parse_rational,
    scale_set,
    singular_values,
    tagged_merge,
)
from .render import RenderSpec, path_points, render_ascii, render_svg
from .topology import ComponentReport, StepFunctionReport, components, components_graph_oracle, step_function
from .words import (
    NotInLanguageError,
    alpha,
    gamma,
    height,
    hooley_irreducible_factors,
    irreducible_factors,
    is_dyck,
    is_hooley_dyck,
    omega,
    reduce_hooley,
    theta,
)
