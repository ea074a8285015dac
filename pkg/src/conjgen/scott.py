"""Fixed-space dimensions from class functions, and the generation
exclusion test.

For x of order o acting on a module with character values phi, the fixed
space has dimension (1/o) * sum_{j<o} phi(class of x^j); classes of powers
are resolved through the table's power maps.  A tuple x_1 ... x_n with
product 1 generating the group forces sum_i dim C_V(x_i) <= (n-2) dim V on
every irreducible nonprincipal module V, so a violated inequality excludes
generation outright.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chartab import TableError
from .structconst import NonIntegerResult


def _check_characteristic(classfn, k):
    p = classfn.characteristic
    if p and classfn.table.classes[k].element_order % p == 0:
        raise TableError(
            f"class {classfn.table.classes[k].label} has order divisible by "
            f"the characteristic {p}; the class function is not defined there")


def fixed_space_dim(classfn, k):
    """Dimension of the fixed space of (cyclic group generated by) an
    element of class k on the module with this character."""
    _check_characteristic(classfn, k)
    table = classfn.table
    o = table.classes[k].element_order
    total = Fraction(0)
    for j in range(o):
        v = classfn.value(table.power_class(k, j))
        total += v.to_rational()
    dim = total / o
    if dim.denominator != 1 or dim < 0 or dim > classfn.dim:
        raise NonIntegerResult(
            f"fixed-space dimension on class {table.classes[k].label} "
            f"came out as {dim}; class-function data is inconsistent")
    return int(dim)


def nu(classfn, k):
    """Codimension of the fixed space: dim V - dim C_V(x)."""
    return classfn.dim - fixed_space_dim(classfn, k)


@dataclass
class FixedSpaceReport:
    per_element: list      # of {class_index, element_order, fixed_dim, nu}
    module_dim: int
    lhs: int
    rhs: int
    generation_excluded: bool


def scott_excludes(classfn, class_indices, m_style=False):
    """Generation-exclusion test for tuples with product 1.

    class_indices lists the classes of x_1, ..., x_n with x_1 ... x_n = 1.
    With m_style=True the last entry is instead the class of the product
    x_1 ... x_{n-1} and is replaced by its inverse class, restoring the
    product-equals-1 reading.

    generation_excluded=True means no such tuple generates a group acting
    irreducibly and nontrivially on the module (caller asserts those module
    hypotheses; only the arithmetic is checked here).
    """
    if len(class_indices) < 3:
        raise TableError("the exclusion test needs at least three classes")
    table = classfn.table
    indices = list(class_indices)
    if m_style:
        indices[-1] = table.inverse_class(indices[-1])
    per = []
    lhs = 0
    for k in indices:
        fd = fixed_space_dim(classfn, k)
        per.append({
            "class_index": k,
            "label": table.classes[k].label,
            "element_order": table.classes[k].element_order,
            "fixed_dim": fd,
            "nu": classfn.dim - fd,
        })
        lhs += fd
    rhs = (len(indices) - 2) * classfn.dim
    return FixedSpaceReport(
        per_element=per,
        module_dim=classfn.dim,
        lhs=lhs,
        rhs=rhs,
        generation_excluded=lhs > rhs,
    )
