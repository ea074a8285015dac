"""Ruling out generation with a fixed-space dimension count.

If elements x_1, ..., x_k generate a group G, and V is a faithful
G-module over a field whose characteristic does not divide any |x_i|,
then the codimensions of the fixed spaces must satisfy

    sum_i codim V^{x_i}  >=  dim V.

Equivalently: if the sum of codimensions falls short of dim V, no choice
of elements from those classes can generate.  Conversely, if the sum
strictly exceeds dim V for every candidate tuple, a hypothetical
generating tuple of that shape is impossible whenever the count is tight.

Here we work with a 15-dimensional module for a unitary group fixture.
Only four classes of the table are populated (a "frame"); the class
function carries the Brauer character values on exactly those classes.
The check 2*codim(3f) + codim(7a) = 21 > 15 excludes a generating
configuration that a structure-constant computation alone cannot.
"""

from conjgen.chartab import load_table, load_class_function
from conjgen.scott import fixed_space_dim, nu, scott_excludes
from conjgen.suite import data_path


def main():
    t = load_table(data_path("su62_frame.ctab"))
    phi = load_class_function(data_path("su62_phi15.cfn"), t)

    print(f"table {t.name}: {t.n_classes} populated classes, "
          f"module of dimension {phi.dim}, characteristic {phi.characteristic}")
    for lbl in ("3f", "7a", "9g"):
        k = t.index_of(lbl)
        d = fixed_space_dim(phi, k)
        print(f"  dim V^x for x in {lbl}: {d}   (codimension {nu(phi, k)})")

    print()
    i3, i7 = t.index_of("3f"), t.index_of("7a")
    report = scott_excludes(phi, [i3, i3, i7], m_style=True)
    print("candidate shape: x1, x2 in 3f and x1*x2 in 7a")
    print(f"  sum of codimensions = {report.lhs}, dim V = {report.rhs}")
    print(f"  generation excluded: {report.generation_excluded}")

    # characteristic-p elements are refused: the fixed-space formula needs
    # the element order to be invertible in the field
    from conjgen.chartab import TableError
    try:
        fixed_space_dim(phi, 0)  # identity is fine
        print("\nidentity class: dim V^1 =", fixed_space_dim(phi, 0))
    except TableError as exc:
        print("unexpected:", exc)


if __name__ == "__main__":
    main()
