"""Named small spaces used by the examples, tests, and CLI."""

from .core import discrete, indiscrete, named, product, space_from_rows, validate_topology

# ({a,b,c}, {0, {a,b}, X})
E = named(validate_topology(3, [0b011], labels="abc"), "E")
SIERPINSKI = named(space_from_rows([0b01, 0b11], ["0", "1"]), "S")
I2 = named(indiscrete(2, ["x", "y"]), "I2")
D2 = named(discrete(2, ["0", "1"]), "D2")
# the indiscrete topology on {a,b,c}
I3_ABC = named(indiscrete(3, "abc"), "sigma")


def example_product():
    """E x E with its projections."""
    return product([E, E])


def example_mixed_product():
    """(X, indiscrete) x (X, tau) with its projections."""
    return product([I3_ABC, E])


FIXTURES = {"E": E, "S": SIERPINSKI, "I2": I2, "D2": D2, "I3": I3_ABC}
